mod common;

use std::collections::{BTreeSet, HashSet};

use common::*;
use knotproj::explore::{bfs_class, enumerate_realizable, reduced_base_test, SearchConfig};
use knotproj::invariants::InvariantReport;
use knotproj::moves::{all_sites, apply, find_triangles, neighbors, MoveKind};
use knotproj::{
    connected_sum, cross_chord_number, h_invariant, is_realizable, prime_decompose,
    trivializing_number, DoubleOccurrenceWord,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn realizable_word(max_n: usize) -> impl Strategy<Value = DoubleOccurrenceWord> {
    (any::<u64>(), 0..30usize).prop_map(move |(seed, steps)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_walk(&DoubleOccurrenceWord::empty(), steps, max_n, &mut rng)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonical_form_is_orbit_invariant(word in realizable_word(8), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let image = scramble(&word, &mut rng);
        prop_assert_eq!(image.canonicalize(), word.canonicalize());
        prop_assert!(word.canonicalize().is_canonical());
    }

    #[test]
    fn invariants_ignore_symmetries(word in realizable_word(8), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let image = scramble(&word, &mut rng);
        prop_assert_eq!(cross_chord_number(&image), cross_chord_number(&word));
        prop_assert_eq!(trivializing_number(&image), trivializing_number(&word));
        prop_assert_eq!(h_invariant(&image), h_invariant(&word));
        prop_assert!(is_realizable(&image));
    }

    #[test]
    fn decomposition_inverts_sum(
        u in realizable_word(5),
        v in realizable_word(5),
        su in 0..20usize,
        sv in 0..20usize,
    ) {
        let sum = connected_sum(&u, &v, su, sv);
        prop_assert!(is_realizable(&sum));
        let mut expected = prime_decompose(&u);
        expected.extend(prime_decompose(&v));
        expected.sort();
        prop_assert_eq!(prime_decompose(&sum), expected);
    }

    #[test]
    fn triangle_moves_undo(word in realizable_word(8)) {
        for site in find_triangles(&word) {
            let out = apply(&word, &site).unwrap();
            let back = find_triangles(&out)
                .into_iter()
                .filter(|s| s.letters == site.letters && s.kind == site.kind.inverse())
                .any(|s| apply(&out, &s).unwrap().canonicalize() == word.canonicalize());
            prop_assert!(back, "{} via {}", word, site);
        }
    }

    #[test]
    fn move_deltas_hold(word in realizable_word(9)) {
        let x0 = cross_chord_number(&word) as i64;
        let tr0 = trivializing_number(&word).unwrap() as i64;
        let h0 = h_invariant(&word);
        for site in all_sites(&word) {
            let out = apply(&word, &site).unwrap();
            let dx = cross_chord_number(&out) as i64 - x0;
            let dtr = trivializing_number(&out).unwrap() as i64 - tr0;
            let dh = h_invariant(&out) as i64 - h0 as i64;
            match site.kind {
                MoveKind::R1Add | MoveKind::R1Del => prop_assert_eq!((dx, dtr, dh), (0, 0, 0)),
                MoveKind::R3Weak => {
                    prop_assert_eq!(dx.abs(), 1);
                    prop_assert_eq!(dtr, 0);
                }
                _ => {
                    prop_assert_eq!(dx.abs(), 3);
                    prop_assert!([-2, 0, 2].contains(&dtr));
                    prop_assert_eq!(dh, 0);
                }
            }
        }
    }

    #[test]
    fn report_round_trips(word in realizable_word(8)) {
        let r = InvariantReport::compute(&word).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        let back: InvariantReport = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, r);
    }
}

/// Sequential breadth-first search that expands the frontier in a random
/// order.
fn shuffled_class(
    start: &DoubleOccurrenceWord,
    cfg: &SearchConfig,
    seed: u64,
) -> BTreeSet<DoubleOccurrenceWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen: HashSet<DoubleOccurrenceWord> = HashSet::new();
    seen.insert(start.canonicalize());
    let mut frontier = vec![start.canonicalize()];
    while !frontier.is_empty() {
        frontier.shuffle(&mut rng);
        let mut next = Vec::new();
        for w in &frontier {
            let mut ns = neighbors(w, &cfg.allowed).unwrap();
            ns.shuffle(&mut rng);
            for (v, _) in ns {
                if v.crossing_count() <= cfg.max_crossings && seen.insert(v.clone()) {
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    seen.into_iter().collect()
}

#[test]
fn class_search_ignores_expansion_order() {
    let cases = [
        ("", MoveKind::strong_set(), 5),
        ("a b c a b c", MoveKind::weak_set(), 5),
        ("a b c d b a d c", MoveKind::strong_set(), 6),
    ];
    for (start, kinds, cap) in cases {
        let cfg = SearchConfig::new(cap, kinds);
        let class = bfs_class(&w(start), &cfg).unwrap();
        assert!(class.complete);
        for seed in 0..3 {
            let other = shuffled_class(&w(start), &cfg, seed);
            assert_eq!(
                class.words,
                other.into_iter().collect::<Vec<_>>(),
                "{start}"
            );
        }
    }
}

#[test]
fn parity_over_exhaustive_corpus() {
    for word in enumerate_realizable(6) {
        assert_eq!(trivializing_number(&word).unwrap() % 2, 0, "{word}");
    }
}

#[test]
fn reduced_base_class_is_sound() {
    let base = w("a b c d e a b c d e");
    let cfg = SearchConfig::new(8, MoveKind::strong_set());
    let class = bfs_class(&base, &cfg).unwrap();
    assert!(class.complete);
    for word in &class.words {
        assert!(reduced_base_test(word, &base).unwrap().equivalent, "{word}");
    }
    let t = w("a b c a b c");
    for s in 0..base.len() {
        let sum = connected_sum(&base, &t, s, 0).canonicalize();
        assert!(class.words.binary_search(&sum).is_ok(), "{sum}");
    }
}
