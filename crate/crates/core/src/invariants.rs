//! Chord-diagram invariants: cross chord number, trivializing number, the
//! H-invariant, first-move reduction and the trefoil summand count.

use serde::{Deserialize, Serialize};

use crate::cover::min_vertex_cover;
use crate::decompose::prime_decompose;
use crate::error::{Error, Result};
use crate::word::{CrossingLabel, DoubleOccurrenceWord};

/// Graph on chords, with an edge for each pair of crossing chords.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterlacementGraph {
    pub vertices: Vec<CrossingLabel>,
    adj: Vec<Vec<bool>>,
}

impl InterlacementGraph {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i][j]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].iter().filter(|&&b| b).count()
    }

    /// Edges as label pairs `(a, b)` with `a < b`.
    pub fn edges(&self) -> Vec<(CrossingLabel, CrossingLabel)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.adj[i][j] {
                    out.push((self.vertices[i], self.vertices[j]));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        let n = self.len();
        (0..n)
            .map(|i| (i + 1..n).filter(|&j| self.adj[i][j]).count())
            .sum()
    }

    pub(crate) fn rows(&self) -> Vec<u128> {
        self.adj
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, &b)| b)
                    .fold(0u128, |acc, (j, _)| acc | 1 << j)
            })
            .collect()
    }

    /// Connected components as sorted vertex index lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for root in 0..n {
            if comp[root] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![root];
            comp[root] = id;
            let mut k = 0;
            while k < members.len() {
                let u = members[k];
                for (v, c) in comp.iter_mut().enumerate() {
                    if self.adj[u][v] && *c == usize::MAX {
                        *c = id;
                        members.push(v);
                    }
                }
                k += 1;
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// True when every connected component is a complete graph.
    pub fn is_clique_union(&self) -> bool {
        self.components().iter().all(|c| {
            c.iter()
                .all(|&u| c.iter().all(|&v| u == v || self.adj[u][v]))
        })
    }
}

pub fn interlacement(word: &DoubleOccurrenceWord) -> InterlacementGraph {
    let chords = word.chords();
    let n = chords.len();
    let adj = (0..n)
        .map(|i| (0..n).map(|j| i != j && chords.crosses(i, j)).collect())
        .collect();
    InterlacementGraph {
        vertices: chords.labels,
        adj,
    }
}

/// Number of crossing chord pairs `X`.
pub fn cross_chord_number(word: &DoubleOccurrenceWord) -> usize {
    interlacement(word).edge_count()
}

/// Minimum number of chords whose deletion leaves no crossing pair, together
/// with one optimal deletion set.
pub fn trivializing_set(word: &DoubleOccurrenceWord) -> Result<Vec<CrossingLabel>> {
    let g = interlacement(word);
    if g.len() > 128 {
        return Err(Error::CapExceeded {
            n: g.len(),
            cap: 128,
        });
    }
    let cover = min_vertex_cover(&g.rows());
    let set: Vec<CrossingLabel> = (0..g.len())
        .filter(|&i| cover >> i & 1 == 1)
        .map(|i| g.vertices[i])
        .collect();
    if set.len() % 2 == 1 {
        return Err(Error::OddTrivializingNumber(set.len()));
    }
    Ok(set)
}

/// The trivializing number `tr`.
pub fn trivializing_number(word: &DoubleOccurrenceWord) -> Result<usize> {
    trivializing_set(word).map(|s| s.len())
}

/// Search the chord endpoints directly for three chords `a, b, c` where `a`
/// crosses both others and `b`, `c` are disjoint.
pub fn find_h_chord(word: &DoubleOccurrenceWord) -> Option<[CrossingLabel; 3]> {
    let chords = word.chords();
    let n = chords.len();
    for a in 0..n {
        let (p, q) = chords.ends[a];
        // A crossing chord has exactly one endpoint strictly inside (p, q).
        let crossing: Vec<usize> = (p + 1..q)
            .filter(|&pos| {
                let other = chords.partner(pos);
                other < p || other > q
            })
            .map(|pos| chords.chord_at[pos])
            .collect();
        for (i, &b) in crossing.iter().enumerate() {
            for &c in &crossing[i + 1..] {
                if !chords.crosses(b, c) {
                    return Some([chords.labels[a], chords.labels[b], chords.labels[c]]);
                }
            }
        }
    }
    None
}

/// `H = 1` iff the chord diagram contains an H chord.
pub fn h_invariant(word: &DoubleOccurrenceWord) -> u8 {
    let by_search = find_h_chord(word).is_some();
    let by_cliques = !interlacement(word).is_clique_union();
    assert_eq!(
        by_search, by_cliques,
        "H-chord search and clique-union test disagree on {word}"
    );
    u8::from(by_search)
}

/// Labels whose two occurrences are cyclically adjacent (1-gons).
pub fn isolated_chords(word: &DoubleOccurrenceWord) -> Vec<CrossingLabel> {
    let len = word.len();
    let chords = word.chords();
    chords
        .ends
        .iter()
        .zip(&chords.labels)
        .filter(|(&(p, q), _)| q == p + 1 || (p == 0 && q == len - 1))
        .map(|(_, &l)| l)
        .collect()
}

/// Delete 1-gons until none is left; canonical result.
pub fn reduce_r1(word: &DoubleOccurrenceWord) -> DoubleOccurrenceWord {
    let mut letters: Vec<CrossingLabel> = word.letters().to_vec();
    loop {
        let len = letters.len();
        let hit = (0..len).find(|&i| len >= 2 && letters[i] == letters[(i + 1) % len]);
        match hit {
            Some(i) => {
                let l = letters[i];
                letters.retain(|&x| x != l);
            }
            None => break,
        }
    }
    DoubleOccurrenceWord::from_raw(letters).canonicalize()
}

pub fn trefoil() -> DoubleOccurrenceWord {
    DoubleOccurrenceWord::from_raw([0, 1, 2, 0, 1, 2].map(CrossingLabel).to_vec())
}

/// Number of trefoil factors in the prime decomposition of the reduced word.
pub fn trefoil_summand_count(word: &DoubleOccurrenceWord) -> usize {
    let t = trefoil();
    prime_decompose(&reduce_r1(word))
        .iter()
        .filter(|f| **f == t)
        .count()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub n: usize,
    #[serde(rename = "X")]
    pub x: usize,
    #[serde(rename = "X_mod3")]
    pub x_mod3: u8,
    pub tr: usize,
    #[serde(rename = "H")]
    pub h: u8,
    pub reduced_word: DoubleOccurrenceWord,
    /// Stands in for `(J⁺ + 2St)/2`, and only on the strong class of the
    /// trivial projection.
    pub trefoil_summands: usize,
}

impl InvariantReport {
    pub fn compute(word: &DoubleOccurrenceWord) -> Result<Self> {
        let x = cross_chord_number(word);
        Ok(Self {
            n: word.crossing_count(),
            x,
            x_mod3: (x % 3) as u8,
            tr: trivializing_number(word)?,
            h: h_invariant(word),
            reduced_word: reduce_r1(word),
            trefoil_summands: trefoil_summand_count(word),
        })
    }
}
