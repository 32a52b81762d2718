//! Bounded search over the move graph, equivalence queries and the
//! classification tests for strong (1,3) homotopy.
//!
//! Search can only ever certify equivalence. Inequivalence comes from
//! invariants: `X mod 3` and `H` for strong moves, `tr` for weak moves and
//! the first-move normal form for first moves alone.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::decompose::{is_prime, prime_decompose};
use crate::embedding::{realize, CombinatorialMap, RotationChoice};
use crate::error::{Error, Result};
use crate::invariants::{cross_chord_number, h_invariant, reduce_r1, trefoil, trivializing_number};
use crate::moves::{apply, find_step, find_triangles, neighbors, MoveKind, MoveSite};
use crate::word::{CrossingLabel, DoubleOccurrenceWord};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub max_crossings: usize,
    pub allowed: BTreeSet<MoveKind>,
    pub max_states: usize,
    pub max_depth: Option<usize>,
}

impl SearchConfig {
    pub fn new(max_crossings: usize, allowed: BTreeSet<MoveKind>) -> Self {
        Self {
            max_crossings,
            allowed,
            max_states: 1_000_000,
            max_depth: None,
        }
    }

    pub fn with_max_states(mut self, max_states: usize) -> Self {
        self.max_states = max_states;
        self
    }

    pub fn with_max_depth(mut self, depth: usize) -> Self {
        self.max_depth = Some(depth);
        self
    }
}

/// Words reached by a search, sorted. `complete` is false when a state or
/// depth cap cut the search short.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassResult {
    pub words: Vec<DoubleOccurrenceWord>,
    pub complete: bool,
}

/// All words of `n` crossings with labels `0..n` in order of first
/// occurrence.
pub fn normalized_words(n: usize) -> Vec<DoubleOccurrenceWord> {
    fn grow(
        letters: &mut Vec<u32>,
        open: &mut Vec<u32>,
        next: u32,
        n: u32,
        out: &mut Vec<DoubleOccurrenceWord>,
    ) {
        if letters.len() == 2 * n as usize {
            out.push(DoubleOccurrenceWord::from_raw(
                letters.iter().copied().map(CrossingLabel).collect(),
            ));
            return;
        }
        if next < n {
            letters.push(next);
            open.push(next);
            grow(letters, open, next + 1, n, out);
            open.pop();
            letters.pop();
        }
        for i in 0..open.len() {
            let l = open.remove(i);
            letters.push(l);
            grow(letters, open, next, n, out);
            letters.pop();
            open.insert(i, l);
        }
    }
    let mut out = Vec::new();
    grow(&mut Vec::new(), &mut Vec::new(), 0, n as u32, &mut out);
    out
}

/// Every canonical sphere-realizable word with at most `n_max` crossings,
/// sorted by crossing count and then by word.
pub fn enumerate_realizable(n_max: usize) -> Vec<DoubleOccurrenceWord> {
    let mut out = Vec::new();
    for n in 0..=n_max {
        let mut level: Vec<DoubleOccurrenceWord> = normalized_words(n)
            .into_par_iter()
            .filter(|w| w.is_canonical() && realize(w).is_some())
            .collect();
        level.sort();
        out.extend(level);
    }
    out
}

fn expand(
    frontier: &[DoubleOccurrenceWord],
    allowed: &BTreeSet<MoveKind>,
    cap: usize,
) -> Result<Vec<Vec<(DoubleOccurrenceWord, MoveKind)>>> {
    frontier
        .par_iter()
        .map(|w| {
            neighbors(w, allowed).map(|ns| {
                ns.into_iter()
                    .filter(|(v, _)| v.crossing_count() <= cap)
                    .collect()
            })
        })
        .collect()
}

/// The canonical words reachable from `start` under the allowed moves
/// without passing the crossing cap.
pub fn bfs_class(start: &DoubleOccurrenceWord, cfg: &SearchConfig) -> Result<ClassResult> {
    let graph = explore_graph(start, cfg, false)?;
    let mut words = graph.words;
    words.sort();
    Ok(ClassResult {
        words,
        complete: graph.complete,
    })
}

/// A searched region of the move graph. `words[0]` is the start; edges are
/// `(from, to, kind)` index triples and are only kept when requested.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveGraph {
    pub words: Vec<DoubleOccurrenceWord>,
    pub edges: Vec<(usize, usize, MoveKind)>,
    pub complete: bool,
}

/// Breadth-first search keeping every edge between discovered words.
pub fn move_graph(start: &DoubleOccurrenceWord, cfg: &SearchConfig) -> Result<MoveGraph> {
    explore_graph(start, cfg, true)
}

/// First-move normal forms reachable from `word` by adding at most `curls`
/// 1-gons, one third move and any first moves, with the third-move kinds
/// that reach each.
pub fn one_triangle_neighbors(
    word: &DoubleOccurrenceWord,
    curls: usize,
) -> Result<BTreeMap<DoubleOccurrenceWord, BTreeSet<MoveKind>>> {
    let start = word.canonicalize();
    let cfg = SearchConfig::new(start.crossing_count() + curls, [MoveKind::R1Add].into());
    let padded = bfs_class(&start, &cfg)?.words;
    let found: Vec<Vec<(DoubleOccurrenceWord, MoveKind)>> = padded
        .par_iter()
        .map(|w| {
            find_triangles(w)
                .into_iter()
                .map(|site| Ok((reduce_r1(&apply(w, &site)?), site.kind)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let mut out: BTreeMap<DoubleOccurrenceWord, BTreeSet<MoveKind>> = BTreeMap::new();
    for (v, kind) in found.into_iter().flatten() {
        out.entry(v).or_default().insert(kind);
    }
    Ok(out)
}

fn explore_graph(
    start: &DoubleOccurrenceWord,
    cfg: &SearchConfig,
    keep_edges: bool,
) -> Result<MoveGraph> {
    let start = start.canonicalize();
    if start.crossing_count() > cfg.max_crossings {
        return Err(Error::CapExceeded {
            n: start.crossing_count(),
            cap: cfg.max_crossings,
        });
    }
    let mut index: HashMap<DoubleOccurrenceWord, usize> = HashMap::new();
    index.insert(start.clone(), 0);
    let mut words = vec![start];
    let mut edges = Vec::new();
    let mut frontier: Vec<usize> = vec![0];
    let mut depth = 0;
    let mut complete = true;
    while !frontier.is_empty() {
        if cfg.max_depth.is_some_and(|d| depth >= d) {
            complete = false;
            break;
        }
        let batch: Vec<DoubleOccurrenceWord> = frontier.iter().map(|&i| words[i].clone()).collect();
        let expanded = expand(&batch, &cfg.allowed, cfg.max_crossings)?;
        let mut next = Vec::new();
        'outer: for (&from, ns) in frontier.iter().zip(expanded) {
            for (v, kind) in ns {
                let to = match index.get(&v) {
                    Some(&i) => i,
                    None => {
                        if words.len() >= cfg.max_states {
                            complete = false;
                            break 'outer;
                        }
                        let i = words.len();
                        index.insert(v.clone(), i);
                        words.push(v);
                        next.push(i);
                        i
                    }
                };
                if keep_edges {
                    edges.push((from, to, kind));
                }
            }
        }
        if !complete {
            break;
        }
        frontier = next;
        depth += 1;
    }
    Ok(MoveGraph {
        words,
        edges,
        complete,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrongTrivialCertificate {
    pub trivial: bool,
    pub factors: Vec<DoubleOccurrenceWord>,
}

fn curl() -> DoubleOccurrenceWord {
    DoubleOccurrenceWord::from_raw(vec![CrossingLabel(0), CrossingLabel(0)])
}

/// Prime factors that are strongly trivial on their own: the curl and the
/// trefoil.
fn is_trivial_factor(f: &DoubleOccurrenceWord) -> bool {
    *f == curl() || *f == trefoil()
}

/// Whether the word is strongly (1,3) homotopic to the trivial projection:
/// every prime factor must be a curl or a trefoil.
///
/// First-move reduction alone is not enough here, since a curl between two
/// summands is not a 1-gon.
pub fn strong_trivial_test(word: &DoubleOccurrenceWord) -> StrongTrivialCertificate {
    let factors = prime_decompose(word);
    StrongTrivialCertificate {
        trivial: factors.iter().all(is_trivial_factor),
        factors,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedBaseCertificate {
    pub equivalent: bool,
    pub base: DoubleOccurrenceWord,
    pub factors: Vec<DoubleOccurrenceWord>,
    /// Trefoil factors besides the base.
    pub trefoils: usize,
    /// Curl factors besides the base.
    pub curls: usize,
}

/// Faces violating the base precondition (1-gons, coherent 2- and 3-gons)
/// in the embedding given by `choice`, as `(length, coherent)` pairs.
fn small_faces(word: &DoubleOccurrenceWord, choice: RotationChoice) -> Vec<(usize, bool)> {
    let map = CombinatorialMap::new(&word.chords(), choice);
    map.face_orbits()
        .iter()
        .filter_map(|orbit| {
            let coherent = orbit.iter().all(|&d| d % 2 == orbit[0] % 2);
            match orbit.len() {
                1 => Some((1, coherent)),
                2 | 3 if coherent => Some((orbit.len(), true)),
                _ => None,
            }
        })
        .collect()
}

/// Check that `base` has no 1-gon, coherent 2-gon or coherent 3-gon in any
/// of its sphere embeddings.
pub fn check_reduced_base(base: &DoubleOccurrenceWord) -> Result<()> {
    let n = base.crossing_count();
    if realize(base).is_none() {
        return Err(Error::NotRealizable);
    }
    if n == 0 {
        return Ok(());
    }
    if n >= 24 {
        return Err(Error::CapExceeded { n, cap: 23 });
    }
    let chords = base.chords();
    for choice in RotationChoice::all(n) {
        let map = CombinatorialMap::new(&chords, choice);
        if map.face_count() != n + 2 {
            continue;
        }
        if let Some(&(len, _)) = small_faces(base, choice).first() {
            let what = if len == 1 {
                "a 1-gon".to_string()
            } else {
                format!("a coherent {len}-gon")
            };
            return Err(Error::Precondition(format!("{base} has {what}")));
        }
    }
    Ok(())
}

/// Whether `word` is strongly (1,3) homotopic to the prime `base`, where
/// `base` has no 1-gons, coherent 2-gons or coherent 3-gons: the word must
/// split into `base` plus curls and trefoils.
pub fn reduced_base_test(
    word: &DoubleOccurrenceWord,
    base: &DoubleOccurrenceWord,
) -> Result<ReducedBaseCertificate> {
    if !is_prime(base) {
        return Err(Error::Precondition(format!("{base} is not prime")));
    }
    check_reduced_base(base)?;
    let base = base.canonicalize();
    let factors = prime_decompose(word);
    let mut rest = factors.clone();
    let found = match rest.iter().position(|g| *g == base) {
        Some(i) => {
            rest.remove(i);
            true
        }
        None => false,
    };
    Ok(ReducedBaseCertificate {
        equivalent: found && rest.iter().all(is_trivial_factor),
        trefoils: rest.iter().filter(|g| **g == trefoil()).count(),
        curls: rest.iter().filter(|g| **g == curl()).count(),
        base,
        factors,
    })
}

/// Twist projection with `n` twist crossings and a two-crossing clasp.
///
/// Reading along the curve: twists `t1..tn`, clasp `c1 c2`, twists back
/// `tn..t1`, then the clasp again, `c1 c2` for odd `n` and `c2 c1` for even.
pub fn twist_family(n: usize) -> Result<DoubleOccurrenceWord> {
    if n == 0 {
        return Err(Error::Precondition("twist count must be positive".into()));
    }
    let (c1, c2) = (n as u32, n as u32 + 1);
    let mut letters: Vec<u32> = (0..n as u32).collect();
    letters.extend([c1, c2]);
    letters.extend((0..n as u32).rev());
    letters.extend(if n % 2 == 1 { [c1, c2] } else { [c2, c1] });
    let word = DoubleOccurrenceWord::from_labels(letters)?;
    if realize(&word).is_none() || !is_prime(&word) || trivializing_number(&word)? != 2 {
        return Err(Error::Precondition(format!(
            "twist projection {n} failed validation: {word}"
        )));
    }
    Ok(word)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Equivalent,
    Inequivalent,
    Unknown,
}

/// One move of a witness path, located on the canonical form of the word
/// before the move.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathStep {
    pub kind: MoveKind,
    pub site: MoveSite,
    pub from: DoubleOccurrenceWord,
    pub to: DoubleOccurrenceWord,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Separation {
    pub invariant: String,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCertificate {
    pub verdict: Verdict,
    pub path: Vec<PathStep>,
    pub separation: Option<Separation>,
    pub max_crossings: usize,
    pub states: usize,
}

impl ClassCertificate {
    /// Replay the path from `source`, checking every step and the endpoint.
    pub fn replay(
        &self,
        source: &DoubleOccurrenceWord,
        target: &DoubleOccurrenceWord,
    ) -> Result<()> {
        let mut w = source.canonicalize();
        for step in &self.path {
            if step.from != w {
                return Err(Error::MoveValidation(format!(
                    "path step starts at {} but the walk is at {w}",
                    step.from
                )));
            }
            w = apply(&w, &step.site)?.canonicalize();
            if w != step.to {
                return Err(Error::MoveValidation(format!(
                    "step produced {w}, certificate says {}",
                    step.to
                )));
            }
        }
        if w != target.canonicalize() {
            return Err(Error::MoveValidation(format!("path ends at {w}")));
        }
        Ok(())
    }
}

fn separate(
    p: &DoubleOccurrenceWord,
    q: &DoubleOccurrenceWord,
    kinds: &BTreeSet<MoveKind>,
) -> Result<Option<Separation>> {
    let mut checks: Vec<(&str, String, String)> = Vec::new();
    let sep = |name: &'static str, a: String, b: String| (name, a, b);
    if kinds.is_subset(&MoveKind::first_set()) {
        checks.push(sep(
            "reduced_word",
            reduce_r1(p).to_string(),
            reduce_r1(q).to_string(),
        ));
    }
    if kinds.is_subset(&MoveKind::strong_set()) {
        checks.push(sep(
            "X_mod3",
            (cross_chord_number(p) % 3).to_string(),
            (cross_chord_number(q) % 3).to_string(),
        ));
        checks.push(sep(
            "H",
            h_invariant(p).to_string(),
            h_invariant(q).to_string(),
        ));
    }
    if kinds.is_subset(&MoveKind::weak_set()) {
        checks.push(sep(
            "tr",
            trivializing_number(p)?.to_string(),
            trivializing_number(q)?.to_string(),
        ));
    }
    Ok(checks
        .into_iter()
        .find(|(_, a, b)| a != b)
        .map(|(name, source, target)| Separation {
            invariant: name.to_string(),
            source,
            target,
        }))
}

/// One side of a bidirectional search: parent links back to its root.
struct Side {
    parent: HashMap<DoubleOccurrenceWord, Option<(DoubleOccurrenceWord, MoveKind)>>,
    frontier: Vec<DoubleOccurrenceWord>,
    allowed: BTreeSet<MoveKind>,
}

impl Side {
    fn new(root: DoubleOccurrenceWord, allowed: BTreeSet<MoveKind>) -> Self {
        let mut parent = HashMap::new();
        parent.insert(root.clone(), None);
        Self {
            parent,
            frontier: vec![root],
            allowed,
        }
    }

    /// Path from the root to `w` as `(from, to, kind)` triples.
    fn trail(
        &self,
        w: &DoubleOccurrenceWord,
    ) -> Vec<(DoubleOccurrenceWord, DoubleOccurrenceWord, MoveKind)> {
        let mut out = Vec::new();
        let mut cur = w.clone();
        while let Some(Some((prev, kind))) = self.parent.get(&cur) {
            out.push((prev.clone(), cur.clone(), *kind));
            cur = prev.clone();
        }
        out.reverse();
        out
    }
}

/// Decide `p ~ q` under the given moves as far as invariants and a bounded
/// bidirectional search allow.
pub fn equivalence_query(
    p: &DoubleOccurrenceWord,
    q: &DoubleOccurrenceWord,
    kinds: &BTreeSet<MoveKind>,
    cfg: &SearchConfig,
) -> Result<ClassCertificate> {
    if realize(p).is_none() || realize(q).is_none() {
        return Err(Error::NotRealizable);
    }
    let (pc, qc) = (p.canonicalize(), q.canonicalize());
    let mut cert = ClassCertificate {
        verdict: Verdict::Unknown,
        path: Vec::new(),
        separation: None,
        max_crossings: cfg.max_crossings,
        states: 0,
    };
    if pc == qc {
        cert.verdict = Verdict::Equivalent;
        return Ok(cert);
    }
    if let Some(s) = separate(&pc, &qc, kinds)? {
        cert.verdict = Verdict::Inequivalent;
        cert.separation = Some(s);
        return Ok(cert);
    }
    let cap = cfg.max_crossings;
    if pc.crossing_count() > cap || qc.crossing_count() > cap {
        return Ok(cert);
    }

    let inverse: BTreeSet<MoveKind> = kinds.iter().map(|k| k.inverse()).collect();
    let mut fwd = Side::new(pc.clone(), kinds.clone());
    let mut bwd = Side::new(qc.clone(), inverse);
    let mut depth = 0;
    let meet = loop {
        if fwd.frontier.is_empty() || bwd.frontier.is_empty() {
            break None;
        }
        if cfg.max_depth.is_some_and(|d| depth >= d)
            || fwd.parent.len() + bwd.parent.len() >= cfg.max_states
        {
            break None;
        }
        let forward = fwd.frontier.len() <= bwd.frontier.len();
        let (side, other) = if forward {
            (&mut fwd, &bwd)
        } else {
            (&mut bwd, &fwd)
        };
        let expanded = expand(&side.frontier, &side.allowed, cap)?;
        let mut next = Vec::new();
        let mut found = None;
        for (from, ns) in side.frontier.iter().zip(expanded) {
            for (v, kind) in ns {
                if side.parent.contains_key(&v) {
                    continue;
                }
                side.parent.insert(v.clone(), Some((from.clone(), kind)));
                if found.is_none() && other.parent.contains_key(&v) {
                    found = Some(v.clone());
                }
                next.push(v);
            }
        }
        side.frontier = next;
        depth += 1;
        if found.is_some() {
            break found;
        }
    };
    cert.states = fwd.parent.len() + bwd.parent.len();
    let Some(m) = meet else {
        return Ok(cert);
    };

    let mut steps = fwd.trail(&m);
    // the backward trail runs q -> m under inverse moves; flip it
    for (from, to, kind) in bwd.trail(&m).into_iter().rev() {
        steps.push((to, from, kind.inverse()));
    }
    for (from, to, kind) in steps {
        let site = find_step(&from, &to, kind)
            .ok_or_else(|| Error::MoveValidation(format!("no {kind} step from {from} to {to}")))?;
        cert.path.push(PathStep {
            kind,
            site,
            from,
            to,
        });
    }
    cert.verdict = Verdict::Equivalent;
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::connected_sum;

    fn w(s: &str) -> DoubleOccurrenceWord {
        s.parse().unwrap()
    }

    #[test]
    fn trefoil_contracts_to_the_trivial_projection() {
        let ns = one_triangle_neighbors(&w("a b c a b c"), 0).unwrap();
        assert_eq!(ns.get(&w("")), Some(&[MoveKind::R3StrongContract].into()));
        let back = one_triangle_neighbors(&w(""), 3).unwrap();
        assert!(back[&w("a b c a b c")].contains(&MoveKind::R3StrongExpand));
    }

    #[test]
    fn word_generation_counts() {
        // (2n - 1)!! words up to relabeling
        let counts: Vec<usize> = (0..6).map(|n| normalized_words(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 15, 105, 945]);
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_realizable(0), vec![w("")]);
        assert_eq!(enumerate_realizable(1), vec![w(""), w("a a")]);
        let three = enumerate_realizable(3);
        assert!(three.contains(&w("a b c a b c")));
        assert!(!three.contains(&w("a b a b")));
    }

    #[test]
    fn first_move_class() {
        let cfg = SearchConfig::new(2, MoveKind::first_set());
        let r = bfs_class(&w(""), &cfg).unwrap();
        assert!(r.complete);
        // two curls in either arrangement read as the same cyclic word
        assert_eq!(r.words, vec![w(""), w("a a"), w("a a b b")]);
    }

    #[test]
    fn trefoil_in_trivial_strong_class() {
        let cfg = SearchConfig::new(3, MoveKind::strong_set());
        let r = bfs_class(&w(""), &cfg).unwrap();
        assert!(r.words.contains(&w("a b c a b c")));
    }

    #[test]
    fn no_site_means_singleton() {
        let cfg = SearchConfig::new(4, [MoveKind::R1Del].into());
        let r = bfs_class(&w("a b a b"), &cfg).unwrap();
        assert_eq!(r.words, vec![w("a b a b")]);
    }

    #[test]
    fn strong_trivial_examples() {
        assert!(strong_trivial_test(&w("")).trivial);
        let t = w("a b c a b c");
        let tt = connected_sum(&connected_sum(&t, &t, 1, 0), &w("a a"), 4, 0);
        let cert = strong_trivial_test(&tt);
        assert!(cert.trivial);
        assert_eq!(cert.factors, vec![w("a a"), t.clone(), t]);
        // a crossing between two trefoils is a curl but not a 1-gon
        assert!(strong_trivial_test(&w("a b c a b c d e f g e f g d")).trivial);
        assert!(!strong_trivial_test(&w("a b a b")).trivial);
        assert!(!strong_trivial_test(&w("a b c d b a d c")).trivial);
    }

    #[test]
    fn twist_words() {
        assert_eq!(twist_family(1).unwrap().canonicalize(), w("a b c a b c"));
        assert_eq!(twist_family(2).unwrap(), w("a b c d b a d c"));
        for n in 1..=8 {
            let t = twist_family(n).unwrap();
            assert_eq!(t.crossing_count(), n + 2);
            assert_eq!(trivializing_number(&t), Ok(2));
        }
        assert!(twist_family(0).is_err());
    }

    #[test]
    fn identical_words_are_equivalent() {
        let t = w("a b c a b c");
        let cfg = SearchConfig::new(5, MoveKind::strong_set());
        let c = equivalence_query(&t, &w("b c a b c a"), &MoveKind::strong_set(), &cfg).unwrap();
        assert_eq!(c.verdict, Verdict::Equivalent);
        assert!(c.path.is_empty());
    }

    #[test]
    fn trefoil_reduces_to_trivial_strongly() {
        let cfg = SearchConfig::new(3, MoveKind::strong_set());
        let c =
            equivalence_query(&w("a b c a b c"), &w(""), &MoveKind::strong_set(), &cfg).unwrap();
        assert_eq!(c.verdict, Verdict::Equivalent);
        c.replay(&w("a b c a b c"), &w("")).unwrap();
        assert_eq!(c.path[0].kind, MoveKind::R3StrongContract);
    }

    #[test]
    fn twist_pair_queries() {
        let (t1, t2) = (twist_family(1).unwrap(), twist_family(2).unwrap());
        let strong = MoveKind::strong_set();
        let cfg = SearchConfig::new(6, strong.clone());
        let c = equivalence_query(&t1, &t2, &strong, &cfg).unwrap();
        assert_eq!(c.verdict, Verdict::Inequivalent);
        let s = c.separation.unwrap();
        assert_eq!(
            (s.invariant.as_str(), s.source.as_str(), s.target.as_str()),
            ("X_mod3", "0", "1")
        );

        let weak = MoveKind::weak_set();
        let cfg = SearchConfig::new(5, weak.clone());
        let c = equivalence_query(&t1, &t2, &weak, &cfg).unwrap();
        assert_eq!(c.verdict, Verdict::Equivalent);
        assert_eq!(c.path.len(), 2);
        c.replay(&t1, &t2).unwrap();
    }

    #[test]
    fn reduced_bases_in_corpus() {
        let ok: Vec<String> = crate::corpus::bundled()
            .into_iter()
            .filter(|e| check_reduced_base(&e.word).is_ok())
            .map(|e| e.name)
            .collect();
        assert_eq!(ok, vec!["5_1", "7_1"]);
    }

    #[test]
    fn reduced_base_examples() {
        let p0 = w("a b c d e a b c d e");
        let t = w("a b c a b c");
        assert!(reduced_base_test(&p0, &p0).unwrap().equivalent);
        let with_t = connected_sum(&p0, &t, 3, 0);
        let c = reduced_base_test(&with_t, &p0).unwrap();
        assert!(c.equivalent);
        assert_eq!(c.trefoils, 1);
        let with_eight = connected_sum(&p0, &w("a b c d b a d c"), 0, 0);
        assert!(!reduced_base_test(&with_eight, &p0).unwrap().equivalent);
        // trefoil hung off the far lobe of a curl
        let far = w("a b c d e a b c d e x f g h f g h x");
        assert!(reduced_base_test(&far, &p0).unwrap().equivalent);
        let composite = connected_sum(&p0, &p0, 0, 0);
        assert!(matches!(
            reduced_base_test(&p0, &composite),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn reduced_base_precondition() {
        assert!(matches!(
            check_reduced_base(&w("a b c a b c")),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            check_reduced_base(&w("a a")),
            Err(Error::Precondition(_))
        ));
        assert_eq!(check_reduced_base(&w("a b a b")), Err(Error::NotRealizable));
    }
}
