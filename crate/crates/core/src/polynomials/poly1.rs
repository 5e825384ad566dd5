//! Dense univariate polynomials over arbitrary-precision integers.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// A polynomial in t with exact integer coefficients, stored densely
/// with trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly1 {
    coeffs: Vec<BigInt>,
}

impl Poly1 {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly1 { coeffs }
    }

    pub fn zero() -> Self {
        Poly1 { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly1 {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn constant(c: BigInt) -> Self {
        Poly1::new(vec![c])
    }

    /// c · t^k.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Poly1::new(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly1::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Poly1) -> Poly1 {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for k in 0..len {
            coeffs.push(self.coeff(k) + other.coeff(k));
        }
        Poly1::new(coeffs)
    }

    pub fn sub(&self, other: &Poly1) -> Poly1 {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for k in 0..len {
            coeffs.push(self.coeff(k) - other.coeff(k));
        }
        Poly1::new(coeffs)
    }

    pub fn mul(&self, other: &Poly1) -> Poly1 {
        if self.is_zero() || other.is_zero() {
            return Poly1::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly1::new(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> Poly1 {
        Poly1::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Add c · t^k in place.
    pub fn add_term(&mut self, c: BigInt, k: usize) {
        if c.is_zero() {
            return;
        }
        if self.coeffs.len() <= k {
            self.coeffs.resize(k + 1, BigInt::zero());
        }
        self.coeffs[k] += c;
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// P(t + c), by Horner with polynomial steps.
    pub fn shift(&self, c: &BigInt) -> Poly1 {
        let linear = Poly1::new(vec![c.clone(), BigInt::one()]);
        let mut acc = Poly1::zero();
        for coeff in self.coeffs.iter().rev() {
            acc = acc.mul(&linear);
            acc.add_term(coeff.clone(), 0);
        }
        acc
    }

    /// t^{n-1} P(1/t): reverse the coefficients inside degree n−1.
    pub fn reverse(&self, n: usize) -> Result<Poly1> {
        if n == 0 {
            return if self.is_zero() {
                Ok(Poly1::zero())
            } else {
                Err(Error::DegreeOverflow)
            };
        }
        if self.degree().is_some_and(|d| d > n - 1) {
            return Err(Error::DegreeOverflow);
        }
        let mut coeffs = vec![BigInt::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[n - 1 - k] = c.clone();
        }
        Ok(Poly1::new(coeffs))
    }

    /// (1 + t)^k.
    pub fn one_plus_t_pow(k: usize) -> Poly1 {
        let mut p = Poly1::one();
        let linear = Poly1::from_i64(&[1, 1]);
        for _ in 0..k {
            p = p.mul(&linear);
        }
        p
    }
}

impl fmt::Display for Poly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => f.write_str("t")?,
                1 => write!(f, "{c}*t")?,
                _ if c.is_one() => write!(f, "t^{k}")?,
                _ => write!(f, "{c}*t^{k}")?,
            }
        }
        Ok(())
    }
}
