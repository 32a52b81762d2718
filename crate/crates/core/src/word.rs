//! Double occurrence words (Gauss codes) and their chord diagrams.
//!
//! A word is a cyclic sequence in which every crossing label occurs exactly
//! twice. The empty word is the trivial projection.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Opaque crossing label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CrossingLabel(pub u32);

impl CrossingLabel {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for CrossingLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&label_name(*self, self.0 >= 26))
    }
}

/// A cyclic Gauss code. Construction always validates the double occurrence
/// property, so every value of this type is well formed.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DoubleOccurrenceWord {
    letters: Vec<CrossingLabel>,
}

impl DoubleOccurrenceWord {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Parse whitespace separated tokens. Everything after `#` is ignored.
    ///
    /// Tokens that are all single lowercase letters keep their alphabet
    /// index as label, all-numeric tokens keep their value, and anything else
    /// is numbered by first occurrence.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = text.split_whitespace().collect();

        let mut counts: Vec<(&str, usize)> = Vec::new();
        for t in &tokens {
            match counts.iter_mut().find(|(s, _)| s == t) {
                Some((_, c)) => *c += 1,
                None => counts.push((t, 1)),
            }
        }
        if let Some((label, count)) = counts.iter().find(|(_, c)| *c != 2) {
            return Err(Error::Multiplicity {
                label: label.to_string(),
                count: *count,
            });
        }

        let letters: Vec<u32> = if tokens
            .iter()
            .all(|t| t.len() == 1 && t.as_bytes()[0].is_ascii_lowercase())
        {
            tokens
                .iter()
                .map(|t| (t.as_bytes()[0] - b'a') as u32)
                .collect()
        } else if let Ok(nums) = tokens.iter().map(|t| t.parse::<u32>()).collect() {
            nums
        } else {
            let mut ids: HashMap<&str, u32> = HashMap::new();
            tokens
                .iter()
                .map(|t| {
                    let next = ids.len() as u32;
                    *ids.entry(t).or_insert(next)
                })
                .collect()
        };
        Ok(Self::from_raw(
            letters.into_iter().map(CrossingLabel).collect(),
        ))
    }

    /// Build a word from raw labels, checking that each occurs twice.
    pub fn from_labels<I: IntoIterator<Item = u32>>(labels: I) -> Result<Self> {
        let letters: Vec<CrossingLabel> = labels.into_iter().map(CrossingLabel).collect();
        let mut counts: HashMap<CrossingLabel, usize> = HashMap::new();
        for &l in &letters {
            *counts.entry(l).or_default() += 1;
        }
        if let Some(&l) = letters.iter().find(|l| counts[l] != 2) {
            return Err(Error::Multiplicity {
                label: label_name(l, l.0 >= 26),
                count: counts[&l],
            });
        }
        Ok(Self { letters })
    }

    pub(crate) fn from_raw(letters: Vec<CrossingLabel>) -> Self {
        debug_assert!(Self::from_labels(letters.iter().map(|l| l.0)).is_ok());
        Self { letters }
    }

    pub fn letters(&self) -> &[CrossingLabel] {
        &self.letters
    }

    /// Length of the cyclic word, `2n`.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of crossings `n`.
    pub fn crossing_count(&self) -> usize {
        self.letters.len() / 2
    }

    /// Distinct labels in increasing order.
    pub fn labels(&self) -> Vec<CrossingLabel> {
        let mut ls = self.letters.clone();
        ls.sort_unstable();
        ls.dedup();
        ls
    }

    /// Smallest label not used by this word.
    pub fn fresh_label(&self) -> CrossingLabel {
        let used = self.labels();
        let mut next = 0;
        for l in used {
            if l.0 == next {
                next += 1;
            } else if l.0 > next {
                break;
            }
        }
        CrossingLabel(next)
    }

    pub fn chords(&self) -> ChordDiagram {
        ChordDiagram::new(self)
    }

    /// Lexicographically least representative over all rotations, both
    /// orientations and first-occurrence relabelings. Labels of the result
    /// are `0..n` in order of first occurrence.
    pub fn canonicalize(&self) -> Self {
        let len = self.len();
        if len == 0 {
            return Self::empty();
        }
        let chords = self.chords();
        let dense: Vec<usize> = chords.chord_at.clone();
        let n = chords.len();

        let mut best: Vec<u32> = Vec::new();
        let mut cand: Vec<u32> = vec![0; len];
        let mut relabel: Vec<u32> = vec![u32::MAX; n];
        for start in 0..len {
            for reversed in [false, true] {
                relabel.iter_mut().for_each(|r| *r = u32::MAX);
                let mut next = 0;
                let mut worse = false;
                let mut better = best.is_empty();
                for (k, slot) in cand.iter_mut().enumerate() {
                    let pos = if reversed {
                        (start + len - k) % len
                    } else {
                        (start + k) % len
                    };
                    let c = dense[pos];
                    if relabel[c] == u32::MAX {
                        relabel[c] = next;
                        next += 1;
                    }
                    *slot = relabel[c];
                    if !better {
                        match (*slot).cmp(&best[k]) {
                            std::cmp::Ordering::Less => better = true,
                            std::cmp::Ordering::Greater => {
                                worse = true;
                                break;
                            }
                            std::cmp::Ordering::Equal => {}
                        }
                    }
                }
                if better && !worse {
                    best.clone_from(&cand);
                }
            }
        }
        Self::from_raw(best.into_iter().map(CrossingLabel).collect())
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonicalize()
    }

    /// The word read backwards.
    pub fn reversed(&self) -> Self {
        let mut letters = self.letters.clone();
        letters.reverse();
        Self { letters }
    }

    /// The word rotated to start at position `k`.
    pub fn rotated(&self, k: usize) -> Self {
        if self.is_empty() {
            return Self::empty();
        }
        let mut letters = self.letters.clone();
        letters.rotate_left(k % self.len());
        Self { letters }
    }

    /// Apply an injective relabeling.
    pub fn relabeled<F: FnMut(CrossingLabel) -> CrossingLabel>(&self, f: F) -> Self {
        Self::from_raw(self.letters.iter().copied().map(f).collect())
    }

    /// Remove both occurrences of the given labels.
    pub fn without(&self, labels: &[CrossingLabel]) -> Self {
        Self::from_raw(
            self.letters
                .iter()
                .copied()
                .filter(|l| !labels.contains(l))
                .collect(),
        )
    }

    fn uses_numbers(&self) -> bool {
        self.letters.iter().any(|l| l.0 >= 26)
    }
}

fn label_name(l: CrossingLabel, numeric: bool) -> String {
    if numeric {
        l.0.to_string()
    } else {
        char::from(b'a' + l.0 as u8).to_string()
    }
}

impl fmt::Display for DoubleOccurrenceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let numeric = self.uses_numbers();
        for (i, &l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(&label_name(l, numeric))?;
        }
        Ok(())
    }
}

impl FromStr for DoubleOccurrenceWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl Serialize for DoubleOccurrenceWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for DoubleOccurrenceWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Self::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Chords of a word: for each label (in increasing order) the two positions
/// it occupies on the circle of `2n` points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordDiagram {
    pub labels: Vec<CrossingLabel>,
    /// `ends[i] = (p, q)` with `p < q`.
    pub ends: Vec<(usize, usize)>,
    /// Chord index occupying each position.
    pub chord_at: Vec<usize>,
}

impl ChordDiagram {
    pub fn new(word: &DoubleOccurrenceWord) -> Self {
        let labels = word.labels();
        let index: HashMap<CrossingLabel, usize> =
            labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let mut ends = vec![(usize::MAX, usize::MAX); labels.len()];
        let mut chord_at = Vec::with_capacity(word.len());
        for (pos, l) in word.letters().iter().enumerate() {
            let c = index[l];
            chord_at.push(c);
            if ends[c].0 == usize::MAX {
                ends[c].0 = pos;
            } else {
                ends[c].1 = pos;
            }
        }
        Self {
            labels,
            ends,
            chord_at,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// The other endpoint of the chord at `pos`.
    pub fn partner(&self, pos: usize) -> usize {
        let (p, q) = self.ends[self.chord_at[pos]];
        if p == pos {
            q
        } else {
            p
        }
    }

    /// Whether chords `i` and `j` cross: exactly one endpoint of `j` lies
    /// strictly between the endpoints of `i`.
    pub fn crosses(&self, i: usize, j: usize) -> bool {
        let (p, q) = self.ends[i];
        let (r, s) = self.ends[j];
        let inside = |x: usize| p < x && x < q;
        inside(r) != inside(s)
    }
}
