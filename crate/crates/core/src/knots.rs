//! Knot diagrams over projections: the positive resolution, the Kauffman
//! bracket state sum and the determinant.
//!
//! Sign convention: a crossing is positive when the over strand, turned a
//! quarter counterclockwise, points along the under strand. With the corner
//! order of [`crate::embedding`] this means `over_first == (bit == 0)`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::embedding::{CombinatorialMap, RotationChoice};
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;
use crate::projection::KnotProjection;
use crate::word::DoubleOccurrenceWord;
use crate::BracketPoly;

/// Default crossing cap for the `2^n` state sum.
pub const BRACKET_CAP: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedDiagram {
    pub word: DoubleOccurrenceWord,
    pub embedding: RotationChoice,
    /// Per chord (increasing label): the first passage is the over one.
    pub over_first: Vec<bool>,
    /// Per chord: `+1` or `-1`.
    pub sign: Vec<i8>,
}

impl SignedDiagram {
    pub fn new(
        word: DoubleOccurrenceWord,
        embedding: RotationChoice,
        over_first: Vec<bool>,
    ) -> Result<Self> {
        let n = word.crossing_count();
        if over_first.len() != n || embedding.len != n {
            return Err(Error::Precondition(format!(
                "need {n} crossing choices, got {} over/under and {} rotation bits",
                over_first.len(),
                embedding.len
            )));
        }
        let sign = over_first
            .iter()
            .enumerate()
            .map(|(c, &o)| if o == !embedding.bit(c) { 1 } else { -1 })
            .collect();
        Ok(Self {
            word,
            embedding,
            over_first,
            sign,
        })
    }

    pub fn crossing_count(&self) -> usize {
        self.word.crossing_count()
    }

    pub fn writhe(&self) -> i32 {
        self.sign.iter().map(|&s| i32::from(s)).sum()
    }

    /// Mirror image: every crossing switched.
    pub fn mirror(&self) -> Self {
        let flipped = self.over_first.iter().map(|o| !o).collect();
        Self::new(self.word.clone(), self.embedding, flipped).expect("same shape")
    }

    /// Per chord, the four darts counterclockwise starting with an over
    /// dart, so positions 0 and 2 are the over strand.
    pub(crate) fn over_corners(&self) -> Vec<[usize; 4]> {
        let map = CombinatorialMap::new(&self.word.chords(), self.embedding);
        map.corners
            .iter()
            .zip(&self.over_first)
            .map(|(&c, &first)| if first { c } else { [c[1], c[2], c[3], c[0]] })
            .collect()
    }
}

/// Resolve every crossing positively.
pub fn positive_resolution(p: &KnotProjection) -> SignedDiagram {
    let n = p.crossing_count();
    let over_first = (0..n).map(|c| !p.embedding.bit(c)).collect();
    SignedDiagram::new(p.word.clone(), p.embedding, over_first).expect("sizes match")
}

/// Over and under alternate along the curve, starting over.
pub fn alternating(p: &KnotProjection) -> SignedDiagram {
    let over_first = p
        .word
        .chords()
        .ends
        .iter()
        .map(|&(a, _)| a % 2 == 0)
        .collect();
    SignedDiagram::new(p.word.clone(), p.embedding, over_first).expect("sizes match")
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Number of loops of the state where crossing `c` is A-smoothed iff bit
/// `c` of `state` is set.
fn loops(corners: &[[usize; 4]], darts: usize, state: u64) -> usize {
    let mut parent: Vec<usize> = (0..darts).collect();
    let mut components = darts;
    let mut join = |parent: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra != rb {
            parent[ra] = rb;
            components -= 1;
        }
    };
    for arc in 0..darts / 2 {
        join(&mut parent, 2 * arc, 2 * arc + 1);
    }
    for (c, h) in corners.iter().enumerate() {
        if state >> c & 1 == 1 {
            join(&mut parent, h[1], h[2]);
            join(&mut parent, h[3], h[0]);
        } else {
            join(&mut parent, h[0], h[1]);
            join(&mut parent, h[2], h[3]);
        }
    }
    components
}

/// Loop counts of the all-A and all-B states.
pub fn extreme_state_loops(d: &SignedDiagram) -> (usize, usize) {
    let n = d.crossing_count();
    if n == 0 {
        return (1, 1);
    }
    let corners = d.over_corners();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    (loops(&corners, 4 * n, all), loops(&corners, 4 * n, 0))
}

pub fn kauffman_bracket(d: &SignedDiagram) -> Result<BracketPoly> {
    kauffman_bracket_with_cap(d, BRACKET_CAP)
}

/// `Σ A^{#A − #B} δ^{loops − 1}` over all states, `δ = −A² − A⁻²`.
pub fn kauffman_bracket_with_cap(d: &SignedDiagram, cap: usize) -> Result<BracketPoly> {
    let n = d.crossing_count();
    if n > cap || n >= 64 {
        return Err(Error::CapExceeded { n, cap });
    }
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let corners = d.over_corners();
    let darts = 4 * n;
    // histogram[a][l]: states with `a` A-smoothings and `l` loops
    let width = n + 2;
    let histogram = (0..1u64 << n)
        .into_par_iter()
        .fold(
            || vec![0i64; (n + 1) * width],
            |mut h, state| {
                let a = state.count_ones() as usize;
                let l = loops(&corners, darts, state);
                h[a * width + l] += 1;
                h
            },
        )
        .reduce(
            || vec![0i64; (n + 1) * width],
            |mut x, y| {
                x.iter_mut().zip(&y).for_each(|(p, q)| *p += q);
                x
            },
        );
    let delta = &LaurentPoly::monomial(2, -1) + &LaurentPoly::monomial(-2, -1);
    let delta_pows: Vec<BracketPoly> = (0..width as u32).map(|k| delta.pow(k)).collect();
    let mut out = LaurentPoly::zero();
    for a in 0..=n {
        for l in 1..width {
            let count = histogram[a * width + l];
            if count != 0 {
                let exp = 2 * a as i32 - n as i32;
                let term = &LaurentPoly::monomial(exp, count) * &delta_pows[l - 1];
                out = &out + &term;
            }
        }
    }
    Ok(out)
}

/// Bracket times `(−A³)^{−w}`; an invariant of the oriented knot.
pub fn jones_normalized(d: &SignedDiagram) -> Result<BracketPoly> {
    let bracket = kauffman_bracket(d)?;
    let w = d.writhe();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    Ok(&bracket * &LaurentPoly::monomial(-3 * w, sign))
}

/// `|V(−1)|`, from the normalized bracket at a primitive 8th root of unity.
pub fn determinant(d: &SignedDiagram) -> Result<u64> {
    let [a, b, c, e] = jones_normalized(d)?.eval_zeta8();
    // |a + bζ + cζ² + eζ³|² = a² + b² + c² + e² + √2 (ab − ae + bc + ce)
    let irrational = a * b - a * e + b * c + c * e;
    let square = a * a + b * b + c * c + e * e;
    let root = (square as f64).sqrt().round() as i64;
    if irrational != 0 || root * root != square {
        return Err(Error::Precondition(format!(
            "bracket value at t = -1 is not an integer: [{a}, {b}, {c}, {e}]"
        )));
    }
    Ok(root as u64)
}
