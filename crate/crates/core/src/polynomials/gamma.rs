//! Gamma expansions: the univariate basis t^j (1+t)^{n-1-2j} and the
//! bivariate basis (st)^i (s+t)^j (1+st)^{n-1-j-2i}.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Poly1, Poly2};
use crate::{Error, Result};

/// Coefficients γ_j of a univariate gamma expansion of window n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaVector {
    n: usize,
    gammas: Vec<BigInt>,
}

impl GammaVector {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gammas(&self) -> &[BigInt] {
        &self.gammas
    }

    /// Rebuild Σ_j γ_j t^j (1+t)^{n-1-2j}.
    pub fn expand(&self) -> Poly1 {
        let mut out = Poly1::zero();
        for (j, g) in self.gammas.iter().enumerate() {
            let term = Poly1::monomial(g.clone(), j)
                .mul(&Poly1::one_plus_t_pow(self.n - 1 - 2 * j));
            out = out.add(&term);
        }
        out
    }
}

/// Expand P in the basis {t^j (1+t)^{n-1-2j}} by peeling off the
/// lowest-degree coefficient at each step.
pub fn gamma_vector(p: &Poly1, n: usize) -> Result<GammaVector> {
    if n == 0 {
        return if p.is_zero() {
            Ok(GammaVector {
                n,
                gammas: Vec::new(),
            })
        } else {
            Err(Error::DegreeOverflow)
        };
    }
    if p.degree().is_some_and(|d| d > n - 1) {
        return Err(Error::DegreeOverflow);
    }
    let mut residual = p.clone();
    let mut gammas = Vec::new();
    let mut j = 0;
    while !residual.is_zero() {
        if 2 * j > n - 1 {
            return Err(Error::NotGammaExpressible);
        }
        // everything below t^j must already be gone
        if (0..j).any(|k| !residual.coeff(k).is_zero()) {
            return Err(Error::NotGammaExpressible);
        }
        let g = residual.coeff(j);
        let term = Poly1::monomial(g.clone(), j).mul(&Poly1::one_plus_t_pow(n - 1 - 2 * j));
        residual = residual.sub(&term);
        gammas.push(g);
        j += 1;
    }
    while gammas.last().is_some_and(Zero::is_zero) {
        gammas.pop();
    }
    Ok(GammaVector { n, gammas })
}

/// Coefficients γ_{i,j} of a bivariate gamma expansion of window n,
/// stored as exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaTable {
    n: usize,
    entries: BTreeMap<(u32, u32), BigRational>,
}

impl GammaTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Nonzero entries in lexicographic (i, j) order.
    pub fn entries(&self) -> impl Iterator<Item = (&(u32, u32), &BigRational)> {
        self.entries.iter()
    }

    pub fn entry(&self, i: u32, j: u32) -> BigRational {
        self.entries
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// True when every entry is a nonnegative integer.
    pub fn is_nonnegative_integral(&self) -> bool {
        self.entries
            .values()
            .all(|g| g.is_integer() && !g.numer().is_negative())
    }

    /// Rebuild Σ γ_{i,j} (st)^i (s+t)^j (1+st)^{n-1-j-2i}; errors when
    /// an entry is not an integer.
    pub fn expand(&self) -> Result<Poly2> {
        let mut out = Poly2::zero();
        for (&(i, j), g) in self.entries.iter() {
            if !g.is_integer() {
                return Err(Error::NotGammaExpressible);
            }
            let basis = basis_element(self.n, i, j);
            out = out.add(&basis.scale(&g.to_integer()));
        }
        Ok(out)
    }
}

use num_traits::Signed;

fn basis_element(n: usize, i: u32, j: u32) -> Poly2 {
    let st = Poly2::monomial(BigInt::one(), 1, 1);
    let s_plus_t = Poly2::monomial(BigInt::one(), 1, 0)
        .add(&Poly2::monomial(BigInt::one(), 0, 1));
    let one_plus_st = Poly2::one().add(&st);
    let e = (n - 1) as u32 - j - 2 * i;
    st.pow(i).mul(&s_plus_t.pow(j)).mul(&one_plus_st.pow(e))
}

/// Expand P in the basis {(st)^i (s+t)^j (1+st)^{n-1-j-2i}} over
/// exact rationals: unknowns in lexicographic (i, j) order, one
/// equation per monomial in degree-lexicographic order, plain Gaussian
/// elimination. Inconsistent or underdetermined systems are reported,
/// never resolved silently.
pub fn gamma_two_sided(p: &Poly2, n: usize) -> Result<GammaTable> {
    if n == 0 {
        return if p.is_zero() {
            Ok(GammaTable {
                n,
                entries: BTreeMap::new(),
            })
        } else {
            Err(Error::DegreeOverflow)
        };
    }
    // unknowns: (i, j) with j + 2i <= n - 1
    let mut unknowns = Vec::new();
    for i in 0..=((n - 1) / 2) as u32 {
        for j in 0..=((n - 1) as u32 - 2 * i) {
            unknowns.push((i, j));
        }
    }
    let basis: Vec<Poly2> = unknowns
        .iter()
        .map(|&(i, j)| basis_element(n, i, j))
        .collect();

    // equations: one per monomial occurring in the basis or in P
    let mut monomials: Vec<(u32, u32)> = Vec::new();
    for b in &basis {
        monomials.extend(b.terms().map(|(&k, _)| k));
    }
    monomials.extend(p.terms().map(|(&k, _)| k));
    monomials.sort_by_key(|&(i, j)| (i + j, i, j));
    monomials.dedup();

    let cols = unknowns.len();
    let mut rows: Vec<Vec<BigRational>> = monomials
        .iter()
        .map(|&(mi, mj)| {
            let mut row: Vec<BigRational> = basis
                .iter()
                .map(|b| BigRational::from_integer(b.coeff(mi, mj)))
                .collect();
            row.push(BigRational::from_integer(p.coeff(mi, mj)));
            row
        })
        .collect();

    // Gaussian elimination to row echelon form
    let mut pivot_row = 0;
    let mut pivots = vec![None; cols];
    for col in 0..cols {
        let Some(r) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, r);
        let inv = rows[pivot_row][col].recip();
        for x in rows[pivot_row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..rows.len() {
            if r != pivot_row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..=cols {
                    let delta = &factor * &rows[pivot_row][c];
                    rows[r][c] -= delta;
                }
            }
        }
        pivots[col] = Some(pivot_row);
        pivot_row += 1;
    }
    // rows with zero coefficients but nonzero right-hand side
    for row in rows.iter() {
        if row[..cols].iter().all(Zero::is_zero) && !row[cols].is_zero() {
            return Err(Error::InconsistentSystem);
        }
    }
    if pivots.iter().any(Option::is_none) {
        return Err(Error::NonUniqueSolution);
    }
    let mut entries = BTreeMap::new();
    for (col, &(i, j)) in unknowns.iter().enumerate() {
        let value = rows[pivots[col].unwrap()][cols].clone();
        if !value.is_zero() {
            entries.insert((i, j), value);
        }
    }
    let table = GammaTable { n, entries };
    // exactness certificate: the residual must vanish identically
    if table.entries.values().all(|g| g.is_integer()) {
        if table.expand()?.sub(p).is_zero() {
            Ok(table)
        } else {
            Err(Error::InconsistentSystem)
        }
    } else {
        // a rational solution can still be certified by clearing denominators
        Ok(table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn univariate_examples() {
        // 1 + 4t + t^2 = (1+t)^2 + 2t
        let a3 = Poly1::from_i64(&[1, 4, 1]);
        let g = gamma_vector(&a3, 3).unwrap();
        assert_eq!(g.gammas(), &[BigInt::one(), BigInt::from(2)]);
        assert_eq!(g.expand(), a3);

        let a1 = Poly1::one();
        assert_eq!(gamma_vector(&a1, 1).unwrap().gammas(), &[BigInt::one()]);

        // 1 + 11t + 11t^2 + t^3 = (1+t)^3 + 8t(1+t)
        let a4 = Poly1::from_i64(&[1, 11, 11, 1]);
        let g4 = gamma_vector(&a4, 4).unwrap();
        assert_eq!(g4.gammas(), &[BigInt::one(), BigInt::from(8)]);
        assert_eq!(g4.expand(), a4);
    }

    #[test]
    fn non_palindromic_rejected() {
        let p = Poly1::from_i64(&[1, 2]);
        assert_eq!(gamma_vector(&p, 3), Err(Error::NotGammaExpressible));
    }

    #[test]
    fn degree_overflow() {
        let p = Poly1::from_i64(&[0, 0, 0, 1]);
        assert_eq!(gamma_vector(&p, 3), Err(Error::DegreeOverflow));
    }

    #[test]
    fn bivariate_trivial() {
        let p = Poly2::one();
        let t = gamma_two_sided(&p, 1).unwrap();
        assert_eq!(t.entry(0, 0), BigRational::one());
        assert_eq!(t.expand().unwrap(), p);
    }

    #[test]
    fn bivariate_known_expansion() {
        // (1+st)^4 + 16(st)(1+st)^2 + 16(st)^2 + 6(st)(s+t)(1+st)
        let st = Poly2::monomial(BigInt::one(), 1, 1);
        let spt = Poly2::monomial(BigInt::one(), 1, 0)
            .add(&Poly2::monomial(BigInt::one(), 0, 1));
        let opst = Poly2::one().add(&st);
        let p = opst
            .pow(4)
            .add(&st.scale(&BigInt::from(16)).mul(&opst.pow(2)))
            .add(&st.pow(2).scale(&BigInt::from(16)))
            .add(&st.scale(&BigInt::from(6)).mul(&spt).mul(&opst));
        let table = gamma_two_sided(&p, 5).unwrap();
        let expected: Vec<((u32, u32), i64)> =
            vec![((0, 0), 1), ((1, 0), 16), ((1, 1), 6), ((2, 0), 16)];
        let got: Vec<((u32, u32), BigRational)> = table
            .entries()
            .map(|(&k, v)| (k, v.clone()))
            .collect();
        assert_eq!(
            got,
            expected
                .into_iter()
                .map(|(k, v)| (k, BigRational::from_integer(BigInt::from(v))))
                .collect::<Vec<_>>()
        );
        assert!(table.is_nonnegative_integral());
        assert_eq!(table.expand().unwrap(), p);
    }

    #[test]
    fn bivariate_inconsistent() {
        // s alone is not in the span for n = 2 (basis: 1+st and s+t)
        let p = Poly2::monomial(BigInt::one(), 1, 0);
        assert_eq!(gamma_two_sided(&p, 2), Err(Error::InconsistentSystem));
    }
}
