//! First and third flat Reidemeister moves as rewrites on Gauss codes.
//!
//! A first move adds or deletes a chord whose endpoints are adjacent. A
//! third move acts on three chords `a, b, c` whose six endpoints split into
//! three cyclically adjacent pairs `{a,b}`, `{b,c}`, `{c,a}` (the sides of a
//! triangle); it swaps the two letters of every side. The number of crossing
//! pairs among `a, b, c` goes from `k` to `3 - k`, so `k ∈ {0, 3}` marks the
//! strong move and `k ∈ {1, 2}` the weak one.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::embedding::is_realizable;
use crate::error::{Error, Result};
use crate::invariants::cross_chord_number;
use crate::word::{CrossingLabel, DoubleOccurrenceWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum MoveKind {
    /// (1a): add a 1-gon.
    R1Add,
    /// (1b): delete a 1-gon.
    R1Del,
    /// Strong third move on a pairwise crossing triple, `ΔX = -3`. This is (3b).
    R3StrongContract,
    /// Strong third move on a pairwise disjoint triple, `ΔX = +3`. This is (3a).
    R3StrongExpand,
    /// Weak third move, `ΔX = ±1`.
    R3Weak,
}

impl MoveKind {
    pub const ALL: [MoveKind; 5] = [
        MoveKind::R1Add,
        MoveKind::R1Del,
        MoveKind::R3StrongContract,
        MoveKind::R3StrongExpand,
        MoveKind::R3Weak,
    ];

    pub fn inverse(self) -> Self {
        match self {
            MoveKind::R1Add => MoveKind::R1Del,
            MoveKind::R1Del => MoveKind::R1Add,
            MoveKind::R3StrongContract => MoveKind::R3StrongExpand,
            MoveKind::R3StrongExpand => MoveKind::R3StrongContract,
            MoveKind::R3Weak => MoveKind::R3Weak,
        }
    }

    pub fn is_first(self) -> bool {
        matches!(self, MoveKind::R1Add | MoveKind::R1Del)
    }

    pub fn is_strong(self) -> bool {
        matches!(self, MoveKind::R3StrongContract | MoveKind::R3StrongExpand)
    }

    /// First moves plus both strong third moves.
    pub fn strong_set() -> BTreeSet<MoveKind> {
        [
            MoveKind::R1Add,
            MoveKind::R1Del,
            MoveKind::R3StrongContract,
            MoveKind::R3StrongExpand,
        ]
        .into()
    }

    pub fn weak_set() -> BTreeSet<MoveKind> {
        [MoveKind::R1Add, MoveKind::R1Del, MoveKind::R3Weak].into()
    }

    pub fn first_set() -> BTreeSet<MoveKind> {
        [MoveKind::R1Add, MoveKind::R1Del].into()
    }

    pub fn all_set() -> BTreeSet<MoveKind> {
        MoveKind::ALL.into()
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MoveKind::R1Add => "R1+ (1a)",
            MoveKind::R1Del => "R1- (1b)",
            MoveKind::R3StrongContract => "R3s- (3b)",
            MoveKind::R3StrongExpand => "R3s+ (3a)",
            MoveKind::R3Weak => "R3w",
        };
        f.write_str(s)
    }
}

/// A located move on a specific word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MoveSite {
    pub kind: MoveKind,
    /// The one (first move) or three (third move) labels involved. Empty for
    /// an insertion.
    pub letters: Vec<CrossingLabel>,
    /// Start positions of the three sides; side `s` covers `s` and `s + 1`.
    pub side_factors: Vec<usize>,
    /// Insertion slot for `R1Add`: the new curl goes before letter `slot`.
    pub slot: Option<usize>,
    /// Crossing pairs among the three chords of a triangle.
    pub internal_crossings: Option<u8>,
}

impl MoveSite {
    /// The change of `X` this site must produce.
    pub fn expected_delta_x(&self) -> i64 {
        match self.kind {
            MoveKind::R1Add | MoveKind::R1Del => 0,
            _ => 3 - 2 * i64::from(self.internal_crossings.unwrap_or(0)),
        }
    }
}

impl fmt::Display for MoveSite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        if let Some(slot) = self.slot {
            write!(f, " slot {slot}")?;
        }
        if !self.letters.is_empty() {
            let names: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
            write!(f, " on {{{}}}", names.join(","))?;
        }
        if !self.side_factors.is_empty() {
            write!(f, " sides {:?}", self.side_factors)?;
        }
        if let Some(k) = self.internal_crossings {
            write!(f, " internal {k}")?;
        }
        Ok(())
    }
}

/// First-move sites: a deletion per 1-gon and an insertion per slot (one
/// slot for the empty word).
pub fn find_r1_sites(word: &DoubleOccurrenceWord) -> Vec<MoveSite> {
    let mut sites: Vec<MoveSite> = crate::invariants::isolated_chords(word)
        .into_iter()
        .map(|l| MoveSite {
            kind: MoveKind::R1Del,
            letters: vec![l],
            side_factors: Vec::new(),
            slot: None,
            internal_crossings: None,
        })
        .collect();
    let slots = word.len().max(1);
    sites.extend((0..slots).map(|s| MoveSite {
        kind: MoveKind::R1Add,
        letters: Vec::new(),
        side_factors: Vec::new(),
        slot: Some(s),
        internal_crossings: None,
    }));
    sites
}

/// Every triangle of the word: three chords whose six endpoints form three
/// disjoint cyclically adjacent pairs, one per pair of the chords.
pub fn find_triangles(word: &DoubleOccurrenceWord) -> Vec<MoveSite> {
    let len = word.len();
    if len < 6 {
        return Vec::new();
    }
    let chords = word.chords();
    let at = |p: usize| chords.chord_at[p % len];
    let mut found: BTreeSet<[usize; 3]> = BTreeSet::new();
    for s in 0..len {
        let (x, y) = (at(s), at(s + 1));
        if x == y {
            continue;
        }
        let py = chords.partner((s + 1) % len);
        let px = chords.partner(s);
        // second side holds the other `y` and a third chord `z`
        for (zpos, second) in [
            ((py + 1) % len, py),
            ((py + len - 1) % len, (py + len - 1) % len),
        ] {
            let z = at(zpos);
            if z == x || z == y {
                continue;
            }
            let pz = chords.partner(zpos);
            let third = if (pz + 1) % len == px {
                pz
            } else if (px + 1) % len == pz {
                px
            } else {
                continue;
            };
            let mut sides = [s, second, third];
            sides.sort_unstable();
            found.insert(sides);
        }
    }
    found
        .into_iter()
        .map(|sides| {
            let mut cs: Vec<usize> = sides.iter().flat_map(|&s| [at(s), at(s + 1)]).collect();
            cs.sort_unstable();
            cs.dedup();
            debug_assert_eq!(cs.len(), 3);
            let k = [(0, 1), (0, 2), (1, 2)]
                .iter()
                .filter(|&&(i, j)| chords.crosses(cs[i], cs[j]))
                .count() as u8;
            let kind = match k {
                3 => MoveKind::R3StrongContract,
                0 => MoveKind::R3StrongExpand,
                _ => MoveKind::R3Weak,
            };
            MoveSite {
                kind,
                letters: cs.iter().map(|&c| chords.labels[c]).collect(),
                side_factors: sides.to_vec(),
                slot: None,
                internal_crossings: Some(k),
            }
        })
        .collect()
}

/// All sites: deletions, insertions, then triangles.
pub fn all_sites(word: &DoubleOccurrenceWord) -> Vec<MoveSite> {
    let mut sites = find_r1_sites(word);
    sites.extend(find_triangles(word));
    sites
}

fn invalid(msg: String) -> Error {
    Error::MoveValidation(msg)
}

/// Rewrite without the realizability and `ΔX` checks.
pub(crate) fn apply_unchecked(
    word: &DoubleOccurrenceWord,
    site: &MoveSite,
) -> Result<DoubleOccurrenceWord> {
    let len = word.len();
    match site.kind {
        MoveKind::R1Del => {
            let l = *site
                .letters
                .first()
                .ok_or_else(|| invalid("deletion without a letter".into()))?;
            if !crate::invariants::isolated_chords(word).contains(&l) {
                return Err(invalid(format!("label {} does not bound a 1-gon", l.0)));
            }
            Ok(word.without(&[l]))
        }
        MoveKind::R1Add => {
            let slot = site
                .slot
                .ok_or_else(|| invalid("insertion without a slot".into()))?;
            if slot >= len.max(1) {
                return Err(invalid(format!("slot {slot} out of range")));
            }
            let fresh = word.fresh_label();
            let mut letters = word.letters().to_vec();
            letters.splice(slot..slot, [fresh, fresh]);
            Ok(DoubleOccurrenceWord::from_raw(letters))
        }
        _ => {
            if site.side_factors.len() != 3 || len < 6 {
                return Err(invalid("triangle needs three sides".into()));
            }
            let mut covered: Vec<CrossingLabel> = site
                .side_factors
                .iter()
                .flat_map(|&s| [word.letters()[s % len], word.letters()[(s + 1) % len]])
                .collect();
            covered.sort_unstable();
            let mut expected: Vec<CrossingLabel> =
                site.letters.iter().flat_map(|&l| [l, l]).collect();
            expected.sort_unstable();
            if covered != expected {
                return Err(invalid("sides do not match the triangle letters".into()));
            }
            let mut letters = word.letters().to_vec();
            for &s in &site.side_factors {
                letters.swap(s % len, (s + 1) % len);
            }
            Ok(DoubleOccurrenceWord::from_raw(letters))
        }
    }
}

/// Apply a site and re-validate: the result must be realizable and `X`
/// must change by exactly the amount the site's class dictates.
pub fn apply(word: &DoubleOccurrenceWord, site: &MoveSite) -> Result<DoubleOccurrenceWord> {
    let out = apply_unchecked(word, site)?;
    let dx = cross_chord_number(&out) as i64 - cross_chord_number(word) as i64;
    if dx != site.expected_delta_x() {
        return Err(invalid(format!(
            "{site} changed X by {dx}, expected {}",
            site.expected_delta_x()
        )));
    }
    if !is_realizable(&out) {
        return Err(invalid(format!("{site} produced non-realizable {out}")));
    }
    Ok(out)
}

/// Canonical results of every allowed site, deduplicated and sorted.
pub fn neighbors(
    word: &DoubleOccurrenceWord,
    allowed: &BTreeSet<MoveKind>,
) -> Result<Vec<(DoubleOccurrenceWord, MoveKind)>> {
    let mut out = BTreeSet::new();
    let mut sites = Vec::new();
    if allowed.contains(&MoveKind::R1Add) || allowed.contains(&MoveKind::R1Del) {
        sites.extend(find_r1_sites(word));
    }
    if allowed.iter().any(|k| !k.is_first()) {
        sites.extend(find_triangles(word));
    }
    for site in sites.iter().filter(|s| allowed.contains(&s.kind)) {
        out.insert((apply(word, site)?.canonicalize(), site.kind));
    }
    Ok(out.into_iter().collect())
}

/// A site of the given kind on `from` whose result is canonically `to`.
pub fn find_step(
    from: &DoubleOccurrenceWord,
    to: &DoubleOccurrenceWord,
    kind: MoveKind,
) -> Option<MoveSite> {
    let target = to.canonicalize();
    let sites = if kind.is_first() {
        find_r1_sites(from)
    } else {
        find_triangles(from)
    };
    sites
        .into_iter()
        .filter(|s| s.kind == kind)
        .find(|s| apply_unchecked(from, s).is_ok_and(|w| w.canonicalize() == target))
}

/// Label pairs `{a, b}` admitting disjoint sides `ab` and `ba`: the word
/// pattern of a coherent 2-gon. The two chords never cross.
pub fn coherent_bigon_candidates(
    word: &DoubleOccurrenceWord,
) -> Vec<(CrossingLabel, CrossingLabel)> {
    let len = word.len();
    let ls = word.letters();
    let mut out = BTreeSet::new();
    for i in 0..len {
        let (a, b) = (ls[i], ls[(i + 1) % len]);
        if a == b {
            continue;
        }
        for j in 0..len {
            let disjoint = j != i && (j + 1) % len != i && j != (i + 1) % len;
            if disjoint && ls[j] == b && ls[(j + 1) % len] == a {
                out.insert((a.min(b), a.max(b)));
            }
        }
    }
    out.into_iter().collect()
}
