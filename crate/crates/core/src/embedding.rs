//! Sphere realizations of Gauss codes as combinatorial maps.
//!
//! The curve is a 4-regular graph whose vertices are crossings and whose
//! edges are the `2n` arcs between consecutive letters. Arc `i` runs from
//! position `i` to position `i + 1`. It carries two darts: `2i` leaves the
//! vertex at position `i` going forward, `2i + 1` leaves the vertex at
//! position `i + 1` going backward.
//!
//! Transversality forces the two strands through a crossing to alternate in
//! the cyclic order, so each crossing has exactly two admissible rotations.
//! A choice of one bit per crossing gives a map on a closed orientable
//! surface; it lies on the sphere exactly when it has `n + 2` faces.

use serde::{Deserialize, Serialize};

use crate::decompose::is_prime;
use crate::error::{Error, Result};
use crate::word::{ChordDiagram, DoubleOccurrenceWord};

/// One rotation bit per crossing, indexed by chord index (increasing label).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RotationChoice {
    pub bits: u64,
    pub len: usize,
}

impl RotationChoice {
    pub fn bit(&self, chord: usize) -> bool {
        (self.bits >> chord) & 1 == 1
    }

    /// All `2^n` choices in increasing order of `bits`.
    pub fn all(len: usize) -> impl Iterator<Item = RotationChoice> {
        assert!(len < 64, "rotation enumeration limited to 63 crossings");
        (0..1u64 << len).map(move |bits| RotationChoice { bits, len })
    }
}

/// A half-edge traversal on a face boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dart {
    pub arc: usize,
    /// True when the traversal follows the curve's orientation.
    pub forward: bool,
}

impl Dart {
    fn from_index(d: usize) -> Self {
        Dart {
            arc: d / 2,
            forward: d.is_multiple_of(2),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub length: usize,
    pub boundary: Vec<Dart>,
    /// Every boundary arc is traversed in the same sense relative to the
    /// curve's orientation.
    pub coherent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceInventory {
    pub faces: Vec<Face>,
    /// Set for composite words, whose sphere embedding is not unique: the
    /// faces (and coherence flags) are those of the chosen embedding.
    pub embedding_dependent: bool,
}

impl FaceInventory {
    /// Sorted face lengths, largest first.
    pub fn lengths(&self) -> Vec<usize> {
        let mut ls: Vec<usize> = self.faces.iter().map(|f| f.length).collect();
        ls.sort_unstable_by(|a, b| b.cmp(a));
        ls
    }

    pub fn count(&self, length: usize, coherent: bool) -> usize {
        self.faces
            .iter()
            .filter(|f| f.length == length && (!coherent || f.coherent))
            .count()
    }
}

/// The rotation system of a word under a given choice.
#[derive(Clone, Debug)]
pub(crate) struct CombinatorialMap {
    /// Counterclockwise successor of each dart around its vertex.
    pub sigma: Vec<usize>,
    /// Per chord, its four darts in counterclockwise order starting at the
    /// incoming dart of the first occurrence.
    pub corners: Vec<[usize; 4]>,
}

impl CombinatorialMap {
    pub fn new(chords: &ChordDiagram, choice: RotationChoice) -> Self {
        let len = chords.chord_at.len();
        let out = |p: usize| 2 * p;
        let inc = |p: usize| 2 * ((p + len - 1) % len) + 1;
        let mut sigma = vec![0; 2 * len];
        let mut corners = Vec::with_capacity(chords.len());
        for (c, &(p, q)) in chords.ends.iter().enumerate() {
            let order = if choice.bit(c) {
                [inc(p), out(q), out(p), inc(q)]
            } else {
                [inc(p), inc(q), out(p), out(q)]
            };
            for k in 0..4 {
                sigma[order[k]] = order[(k + 1) % 4];
            }
            corners.push(order);
        }
        Self { sigma, corners }
    }

    /// Orbits of the face permutation `d -> sigma(alpha(d))`.
    pub fn face_orbits(&self) -> Vec<Vec<usize>> {
        let darts = self.sigma.len();
        let mut seen = vec![false; darts];
        let mut orbits = Vec::new();
        for start in 0..darts {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                orbit.push(d);
                d = self.sigma[d ^ 1];
            }
            orbits.push(orbit);
        }
        orbits
    }

    pub fn face_count(&self) -> usize {
        let darts = self.sigma.len();
        let mut seen = vec![false; darts];
        let mut count = 0;
        for start in 0..darts {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                d = self.sigma[d ^ 1];
            }
        }
        count
    }
}

/// Number of faces of the map given by `choice`. The empty word has two.
pub fn face_count(word: &DoubleOccurrenceWord, choice: RotationChoice) -> usize {
    if word.is_empty() {
        return 2;
    }
    CombinatorialMap::new(&word.chords(), choice).face_count()
}

/// First rotation choice (in increasing bit order) that embeds the word in
/// the sphere, if any.
pub fn realize(word: &DoubleOccurrenceWord) -> Option<RotationChoice> {
    let n = word.crossing_count();
    if n == 0 {
        return Some(RotationChoice { bits: 0, len: 0 });
    }
    let chords = word.chords();
    RotationChoice::all(n)
        .find(|&choice| CombinatorialMap::new(&chords, choice).face_count() == n + 2)
}

/// Face inventory of a sphere-realizing choice.
pub fn faces(word: &DoubleOccurrenceWord, choice: RotationChoice) -> Result<FaceInventory> {
    let n = word.crossing_count();
    if choice.len != n {
        return Err(Error::NotSpherical);
    }
    if n == 0 {
        let disk = Face {
            length: 0,
            boundary: Vec::new(),
            coherent: true,
        };
        return Ok(FaceInventory {
            faces: vec![disk.clone(), disk],
            embedding_dependent: false,
        });
    }
    let map = CombinatorialMap::new(&word.chords(), choice);
    let orbits = map.face_orbits();
    if orbits.len() != n + 2 {
        return Err(Error::NotSpherical);
    }
    let faces = orbits
        .into_iter()
        .map(|orbit| {
            let boundary: Vec<Dart> = orbit.iter().map(|&d| Dart::from_index(d)).collect();
            let coherent = boundary.iter().all(|d| d.forward == boundary[0].forward);
            Face {
                length: boundary.len(),
                boundary,
                coherent,
            }
        })
        .collect();
    Ok(FaceInventory {
        faces,
        embedding_dependent: !is_prime(word),
    })
}

/// Polynomial realizability test on the interlacement graph: every vertex
/// has even degree, every non-adjacent pair has an even number of common
/// neighbours, and the adjacent pairs with an even number of common
/// neighbours form an edge cut.
pub fn is_realizable(word: &DoubleOccurrenceWord) -> bool {
    let chords = word.chords();
    let n = chords.len();
    let adj: Vec<Vec<bool>> = (0..n)
        .map(|i| (0..n).map(|j| i != j && chords.crosses(i, j)).collect())
        .collect();
    let common = |u: usize, v: usize| (0..n).filter(|&k| adj[u][k] && adj[v][k]).count();

    if adj
        .iter()
        .any(|row| row.iter().filter(|&&b| b).count() % 2 == 1)
    {
        return false;
    }
    let mut marked = vec![vec![false; n]; n];
    for u in 0..n {
        for v in u + 1..n {
            let even = common(u, v) % 2 == 0;
            if adj[u][v] {
                marked[u][v] = even;
                marked[v][u] = even;
            } else if !even {
                return false;
            }
        }
    }
    // Marked edges must be exactly the bichromatic edges of some 2-colouring.
    let mut colour: Vec<Option<bool>> = vec![None; n];
    for root in 0..n {
        if colour[root].is_some() {
            continue;
        }
        colour[root] = Some(false);
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            let cu = colour[u].unwrap();
            for v in 0..n {
                if !adj[u][v] {
                    continue;
                }
                let want = cu ^ marked[u][v];
                match colour[v] {
                    None => {
                        colour[v] = Some(want);
                        stack.push(v);
                    }
                    Some(cv) if cv != want => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}
