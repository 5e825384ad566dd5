//! Sparse bivariate polynomials in (s, t) over arbitrary-precision
//! integers.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{binomial_int, Poly1};

/// A polynomial in s and t; only nonzero coefficients are stored,
/// keyed by (s-exponent, t-exponent).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly2 {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2 {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        let mut p = Poly2::zero();
        p.add_term((0, 0), BigInt::one());
        p
    }

    /// c · s^i t^j.
    pub fn monomial(c: BigInt, i: u32, j: u32) -> Self {
        let mut p = Poly2::zero();
        p.add_term((i, j), c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), BigInt)>) -> Self {
        let mut p = Poly2::zero();
        for (key, c) in terms {
            p.add_term(key, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic (i, j) order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, key: (u32, u32), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (&key, c) in other.terms.iter() {
            out.add_term(key, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (&key, c) in other.terms.iter() {
            out.add_term(key, -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Poly2) -> Poly2 {
        let mut out = Poly2::zero();
        for (&(i1, j1), c1) in self.terms.iter() {
            for (&(i2, j2), c2) in other.terms.iter() {
                out.add_term((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Poly2 {
        if c.is_zero() {
            return Poly2::zero();
        }
        Poly2 {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly2 {
        let mut out = Poly2::one();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Exact evaluation at integer (s, t).
    pub fn eval(&self, s: &BigInt, t: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for (&(i, j), c) in self.terms.iter() {
            acc += c * s.pow(i) * t.pow(j);
        }
        acc
    }

    /// Substitute an integer for s, leaving a polynomial in t.
    pub fn eval_s(&self, s: &BigInt) -> Poly1 {
        let mut out = Poly1::zero();
        for (&(i, j), c) in self.terms.iter() {
            out.add_term(c * s.pow(i), j as usize);
        }
        out
    }

    /// P(s + a, t + b), by binomial expansion of every term.
    pub fn shift(&self, a: &BigInt, b: &BigInt) -> Poly2 {
        let mut out = Poly2::zero();
        for (&(i, j), c) in self.terms.iter() {
            for p in 0..=i {
                let sa = binomial_int(i as u64, p as u64) * a.pow(i - p);
                for q in 0..=j {
                    let tb = binomial_int(j as u64, q as u64) * b.pow(j - q);
                    out.add_term((p, q), c * &sa * tb);
                }
            }
        }
        out
    }

    /// Swap the roles of s and t.
    pub fn swap_vars(&self) -> Poly2 {
        Poly2 {
            terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect(),
        }
    }

    /// View a univariate polynomial in t as a bivariate one.
    pub fn from_poly1_in_t(p: &Poly1) -> Poly2 {
        let mut out = Poly2::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            out.add_term((0, k as u32), c.clone());
        }
        out
    }

    /// Coefficient matrix with rows indexed by the s-exponent and
    /// columns by the t-exponent, both 0..=bound.
    pub fn coeff_matrix(&self, bound: u32) -> Vec<Vec<BigInt>> {
        (0..=bound)
            .map(|i| (0..=bound).map(|j| self.coeff(i, j)).collect())
            .collect()
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&(i, j), c) in self.terms.iter() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if !c.is_one() || (i, j) == (0, 0) {
                write!(f, "{c}")?;
                if (i, j) != (0, 0) {
                    f.write_str("*")?;
                }
            }
            match i {
                0 => {}
                1 => f.write_str("s")?,
                _ => write!(f, "s^{i}")?,
            }
            if i > 0 && j > 0 {
                f.write_str("*")?;
            }
            match j {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{j}")?,
            }
        }
        Ok(())
    }
}
