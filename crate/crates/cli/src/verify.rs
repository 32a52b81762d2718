//! Verification suites behind `knotproj verify`.

use std::fmt::Write as _;

use clap::ValueEnum;
use knotproj::explore::{
    bfs_class, enumerate_realizable, equivalence_query, strong_trivial_test, twist_family,
    SearchConfig, Verdict,
};
use knotproj::knots::{determinant, jones_normalized, positive_resolution};
use knotproj::moves::{all_sites, apply, MoveKind};
use knotproj::{
    cross_chord_number, h_invariant, trivializing_number, BracketPoly, DoubleOccurrenceWord,
    KnotProjection,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::Output;

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Suite {
    /// Invariant changes of every move on random words.
    Deltas,
    /// Evenness of the trivializing number over all words.
    Parity,
    /// Twist projections: tr = 2 and the X step law.
    Twist,
    /// The strong class of the trivial projection.
    StrongTrivial,
    /// Bracket and determinant sanity values.
    Bracket,
}

#[derive(Serialize)]
struct Report {
    suite: String,
    pass: bool,
    detail: String,
    counterexample: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    rows: Vec<TwistRow>,
}

#[derive(Serialize)]
struct TwistRow {
    n: usize,
    tr: usize,
    #[serde(rename = "X")]
    x: usize,
}

type Checked = Result<String, (String, String)>;

fn word(text: &str) -> DoubleOccurrenceWord {
    text.parse().expect("fixed word")
}

fn fail(detail: impl Into<String>, w: &DoubleOccurrenceWord) -> (String, String) {
    (detail.into(), w.to_string())
}

pub fn run(suite: Suite, max_n: Option<usize>, seed: u64) -> Output {
    let name = suite
        .to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default();
    let mut rows = Vec::new();
    let checked = match suite {
        Suite::Deltas => deltas(max_n.unwrap_or(9), seed),
        Suite::Parity => parity(max_n.unwrap_or(6)),
        Suite::Twist => twist(max_n.unwrap_or(8), &mut rows),
        Suite::StrongTrivial => strong_trivial(max_n.unwrap_or(7)),
        Suite::Bracket => bracket(),
    };
    let report = match checked {
        Ok(detail) => Report {
            suite: name,
            pass: true,
            detail,
            counterexample: None,
            rows,
        },
        Err((detail, w)) => Report {
            suite: name,
            pass: false,
            detail,
            counterexample: Some(w),
            rows,
        },
    };
    let mut text = format!(
        "{}: {}\n{}\n",
        report.suite,
        if report.pass { "pass" } else { "fail" },
        report.detail
    );
    if let Some(w) = &report.counterexample {
        let _ = writeln!(text, "counterexample: [{w}]");
    }
    if !report.rows.is_empty() {
        text.push_str(" n  tr    X\n");
        for r in &report.rows {
            let _ = writeln!(text, "{:>2} {:>3} {:>4}", r.n, r.tr, r.x);
        }
    }
    let mut out = Output::new(text, &report);
    out.pass = report.pass;
    out
}

const WALKS: usize = 200;

/// Random first- and third-move walks from the trivial projection; every
/// site along the way is applied and its invariant changes checked.
fn deltas(cap: usize, seed: u64) -> Checked {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut applied = 0;
    for _ in 0..WALKS {
        let mut cur = DoubleOccurrenceWord::empty();
        for _ in 0..rng.gen_range(0..30) {
            let sites = all_sites(&cur);
            for site in &sites {
                let out = apply(&cur, site).map_err(|e| fail(e.to_string(), &cur))?;
                let dx = cross_chord_number(&out) as i64 - cross_chord_number(&cur) as i64;
                let tr = |w: &DoubleOccurrenceWord| {
                    trivializing_number(w)
                        .map(|t| t as i64)
                        .map_err(|e| fail(e.to_string(), w))
                };
                let dtr = tr(&out)? - tr(&cur)?;
                let dh = i64::from(h_invariant(&out)) - i64::from(h_invariant(&cur));
                let ok = dx == site.expected_delta_x()
                    && match site.kind {
                        MoveKind::R1Add | MoveKind::R1Del => dtr == 0 && dh == 0,
                        MoveKind::R3Weak => dtr == 0,
                        _ => dtr.abs() <= 2 && dh == 0,
                    };
                if !ok {
                    return Err(fail(
                        format!("{site}: dX {dx:+}, dtr {dtr:+}, dH {dh:+}"),
                        &cur,
                    ));
                }
                applied += 1;
            }
            let growing = cur.crossing_count() < cap;
            let next: Vec<_> = sites
                .into_iter()
                .filter(|s| growing || s.slot.is_none())
                .collect();
            if let Some(site) = next.choose(&mut rng) {
                cur = apply(&cur, site).map_err(|e| fail(e.to_string(), &cur))?;
            }
        }
    }
    Ok(format!(
        "{applied} move applications on {WALKS} walks (seed {seed}, cap {cap}), zero violations"
    ))
}

fn parity(cap: usize) -> Checked {
    let words = enumerate_realizable(cap);
    for w in &words {
        match trivializing_number(w) {
            Ok(t) if t % 2 == 0 => {}
            Ok(t) => return Err(fail(format!("tr = {t}"), w)),
            Err(e) => return Err(fail(e.to_string(), w)),
        }
    }
    Ok(format!(
        "{} words with n <= {cap}, every tr even",
        words.len()
    ))
}

fn twist(last: usize, rows: &mut Vec<TwistRow>) -> Checked {
    let words: Vec<DoubleOccurrenceWord> = (1..=last + 1)
        .map(|n| twist_family(n).expect("twist projection"))
        .collect();
    for (i, w) in words.iter().enumerate() {
        let tr = trivializing_number(w).map_err(|e| fail(e.to_string(), w))?;
        rows.push(TwistRow {
            n: i + 1,
            tr,
            x: cross_chord_number(w),
        });
    }
    rows.truncate(last);
    if let Some(r) = rows.iter().find(|r| r.tr != 2) {
        return Err(fail(format!("tr(T{}) = {}", r.n, r.tr), &words[r.n - 1]));
    }
    let weak = MoveKind::weak_set();
    for n in 1..=last {
        let (a, b) = (&words[n - 1], &words[n]);
        let step = cross_chord_number(b) as i64 - cross_chord_number(a) as i64;
        let expected = if n % 2 == 1 { 1 } else { 3 };
        if step != expected {
            return Err(fail(format!("X(T{}) - X(T{n}) = {step}", n + 1), a));
        }
        if n % 2 == 1 {
            let cfg = SearchConfig::new(b.crossing_count() + 1, weak.clone()).with_max_depth(2);
            let cert = equivalence_query(a, b, &weak, &cfg).map_err(|e| fail(e.to_string(), a))?;
            if cert.verdict != Verdict::Equivalent || cert.path.len() > 2 {
                return Err(fail(
                    format!("no weak path of length <= 2 to T{}", n + 1),
                    a,
                ));
            }
        }
    }
    Ok(format!(
        "tr = 2 for T1..T{last}; X steps +1 from odd n (X mod 3 differs), +3 from even n; \
         weak paths of length <= 2 from every odd n"
    ))
}

fn strong_trivial(cap: usize) -> Checked {
    let cfg = SearchConfig::new(cap, MoveKind::strong_set());
    let class = bfs_class(&DoubleOccurrenceWord::empty(), &cfg)
        .map_err(|e| fail(e.to_string(), &DoubleOccurrenceWord::empty()))?;
    if let Some(w) = class.words.iter().find(|w| !strong_trivial_test(w).trivial) {
        return Err(fail("reached but fails the factor test", w));
    }
    let passing: Vec<DoubleOccurrenceWord> = enumerate_realizable(cap)
        .into_iter()
        .filter(|w| strong_trivial_test(w).trivial)
        .collect();
    if let Some(w) = passing
        .iter()
        .find(|w| class.words.binary_search(w).is_err())
    {
        return Err(fail("passes the factor test but is not reached", w));
    }
    Ok(format!(
        "{} words reached with n <= {cap}, exactly the words whose prime factors are curls and trefoils",
        class.words.len()
    ))
}

fn bracket() -> Checked {
    let resolve = |text: &str| {
        let w = word(text);
        KnotProjection::new(w.clone())
            .map(|p| positive_resolution(&p))
            .map_err(|e| fail(e.to_string(), &w))
    };
    for text in ["", "a a", "a b b a"] {
        let d = resolve(text)?;
        let v = jones_normalized(&d).map_err(|e| fail(e.to_string(), &d.word))?;
        if v != BracketPoly::one() {
            return Err(fail(format!("normalized bracket {v}, expected 1"), &d.word));
        }
    }
    let mut dets = Vec::new();
    for (text, expected) in [
        ("a b c a b c", 3),
        (&twist_family(1).expect("twist").to_string(), 3),
        (&twist_family(3).expect("twist").to_string(), 7),
        (&twist_family(5).expect("twist").to_string(), 11),
    ] {
        let d = resolve(text)?;
        let det = determinant(&d).map_err(|e| fail(e.to_string(), &d.word))?;
        if det != expected {
            return Err(fail(
                format!("determinant {det}, expected {expected}"),
                &d.word,
            ));
        }
        dets.push(det);
    }
    Ok(format!(
        "unknot diagrams normalize to 1; determinants {dets:?} for the trefoil and T1, T3, T5"
    ))
}
