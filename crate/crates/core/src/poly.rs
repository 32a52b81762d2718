//! Laurent polynomials in one variable `A` with exact coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Sparse Laurent polynomial. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound(serialize = "R: Serialize", deserialize = "R: Deserialize<'de>"))]
pub struct LaurentPoly<R> {
    terms: BTreeMap<i32, R>,
}

impl<R: Clone + Zero> LaurentPoly<R> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(exp: i32, coeff: R) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    pub fn add_term(&mut self, exp: i32, coeff: R) {
        let sum = match self.terms.remove(&exp) {
            Some(c) => c + coeff,
            None => coeff,
        };
        if !sum.is_zero() {
            self.terms.insert(exp, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> R {
        self.terms.get(&exp).cloned().unwrap_or_else(R::zero)
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &R)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }
}

impl<R: Clone + Zero + One> LaurentPoly<R> {
    pub fn one() -> Self {
        Self::monomial(0, R::one())
    }
}

impl<R: Clone + Zero + One + Mul<Output = R>> LaurentPoly<R> {
    /// Multiply by `A^shift`.
    pub fn shifted(&self, shift: i32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + shift, c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl<R: Clone + Signed> LaurentPoly<R> {
    /// Value at `A = ζ`, a primitive 8th root of unity, as coordinates
    /// `[a, b, c, d]` of `a + bζ + cζ² + dζ³` (using `ζ⁴ = -1`).
    pub fn eval_zeta8(&self) -> [R; 4] {
        let mut out = [R::zero(), R::zero(), R::zero(), R::zero()];
        for (&e, c) in &self.terms {
            let k = e.rem_euclid(8) as usize;
            let c = if k >= 4 { -c.clone() } else { c.clone() };
            let slot = &mut out[k % 4];
            *slot = slot.clone() + c;
        }
        out
    }
}

impl<R: Clone + Zero> Add for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;

    fn add(self, rhs: Self) -> LaurentPoly<R> {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<R: Clone + Zero + Neg<Output = R>> Neg for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;

    fn neg(self) -> LaurentPoly<R> {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl<R: Clone + Zero + Neg<Output = R>> Sub for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;

    fn sub(self, rhs: Self) -> LaurentPoly<R> {
        self + &(-rhs)
    }
}

impl<R: Clone + Zero + Mul<Output = R>> Mul for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;

    fn mul(self, rhs: Self) -> LaurentPoly<R> {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident, $($bound:tt)*) => {
        impl<R: Clone + Zero + $($bound)*> $tr for LaurentPoly<R> {
            type Output = LaurentPoly<R>;

            fn $m(self, rhs: Self) -> LaurentPoly<R> {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add, Zero);
forward_owned!(Sub, sub, Neg<Output = R>);
forward_owned!(Mul, mul, Mul<Output = R>);

/// Printed as `exp:coeff` pairs by increasing exponent; `0` when empty.
impl<R: fmt::Display> fmt::Display for LaurentPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}:{c}")?;
        }
        Ok(())
    }
}
