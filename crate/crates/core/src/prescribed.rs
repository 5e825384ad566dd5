//! Cayley permutations with prescribed ascent sets: the multinomial
//! and determinant counts, row-sum-constrained Burge matrices, and the
//! exact rational polynomial fitter used by the conjecture lab.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::burge::{enumerate_mat, BurgeClass, BurgeMatrix, Variant};
use crate::cayley::{
    asc_set, des_set, enumerate_cayley, enumerate_permutations, sasc_set, IndexSet,
};
use crate::polynomials::Poly1;
use crate::{Error, Result};

/// A prescribed ascent set S ⊆ [n−1] together with its ambient length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AscentSpec {
    s: IndexSet,
}

impl AscentSpec {
    pub fn new(members: Vec<usize>, n: usize) -> Result<Self> {
        let s = IndexSet::new(members, n)?;
        Ok(AscentSpec { s })
    }

    pub fn set(&self) -> &IndexSet {
        &self.s
    }

    pub fn n(&self) -> usize {
        self.s.n()
    }

    /// The composition Δ(S) = (s_1, s_2−s_1, …, n−s_r).
    pub fn delta(&self) -> Vec<usize> {
        let mut parts = Vec::with_capacity(self.s.len() + 1);
        let mut prev = 0;
        for &s in self.s.members() {
            parts.push(s - prev);
            prev = s;
        }
        parts.push(self.n() - prev);
        parts
    }
}

fn factorial(n: usize) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=n {
        acc *= BigUint::from(i);
    }
    acc
}

/// α_n(S) = |{v ∈ Sym[n] : Asc(v) ⊆ S}|, the multinomial
/// binom(n; s_1, s_2−s_1, …, n−s_r).
pub fn alpha(spec: &AscentSpec) -> BigUint {
    let mut acc = factorial(spec.n());
    for part in spec.delta() {
        acc /= factorial(part);
    }
    acc
}

/// The refinement Σ t^{des(v^{-1})} over the permutations whose
/// ascent (strict variant) or descent (weak variant) set lies in S.
/// At t = 1 this is α; at t = 2 it is κ (weak) or κ° (strict).
pub fn alpha_poly(spec: &AscentSpec, variant: Variant) -> Poly1 {
    let mut p = Poly1::zero();
    for v in enumerate_permutations(spec.n()) {
        let condition = match variant {
            Variant::Weak => des_set(v.letters()).is_subset_of(&spec.s),
            Variant::Strict => asc_set(v.letters()).is_subset_of(&spec.s),
        };
        if condition {
            let inv = v.inverse().expect("permutations invert");
            p.add_term(BigInt::one(), crate::cayley::des(inv.letters()));
        }
    }
    p
}

/// κ_n(S) (weak: Asc(v) ⊆ S) or κ°_n(S) (strict: Asc°(v) ⊆ S) over
/// Cay[n], by direct enumeration. Members of S beyond n−1 are allowed
/// and vacuous, which the polynomiality experiments rely on.
pub fn kappa_general(n: usize, s_members: &[usize], variant: Variant) -> BigUint {
    let mut allowed: Vec<usize> = s_members.iter().copied().filter(|&s| s < n).collect();
    allowed.sort_unstable();
    let mut count = BigUint::zero();
    for v in enumerate_cayley(n) {
        let ascents = match variant {
            Variant::Weak => asc_set(v.letters()),
            Variant::Strict => sasc_set(v.letters()),
        };
        if ascents.members().iter().all(|&i| allowed.binary_search(&i).is_ok()) {
            count += BigUint::one();
        }
    }
    count
}

/// κ for a validated spec.
pub fn kappa(spec: &AscentSpec, variant: Variant) -> BigUint {
    kappa_general(spec.n(), spec.set().members(), variant)
}

/// The permutation route to κ: evaluate [`alpha_poly`] at t = 2.
pub fn kappa_via_perm(spec: &AscentSpec, variant: Variant) -> BigUint {
    alpha_poly(spec, variant)
        .eval(&BigInt::from(2))
        .try_into()
        .expect("sum of positive terms")
}

/// All Burge matrices of size n whose row-sum vector is Δ(S),
/// restricted to the given class.
pub fn enumerate_mat_s(spec: &AscentSpec, class: BurgeClass) -> Result<Vec<BurgeMatrix>> {
    let delta: Vec<u64> = spec.delta().iter().map(|&p| p as u64).collect();
    Ok(enumerate_mat(spec.n(), class)?
        .into_iter()
        .filter(|a| a.row_sums() == delta)
        .collect())
}

/// β_n(S) = |{v ∈ Sym[n] : Asc(v) = S}| by the exact determinant
/// n!·det[1/(s_j − s_{i−1})!] with s_0 = 0 and s_{k+1} = n; a
/// reciprocal factorial of a negative argument is 0.
pub fn beta_exact(spec: &AscentSpec) -> BigInt {
    let n = spec.n();
    let mut points = vec![0usize];
    points.extend(spec.set().members());
    points.push(n);
    let k = spec.set().len();
    // entry (i, j), 1-based: 1/(s_j − s_{i−1})!
    let mut m: Vec<Vec<BigRational>> = (1..=k + 1)
        .map(|i| {
            (1..=k + 1)
                .map(|j| {
                    let upper = points[j] as i64;
                    let lower = points[i - 1] as i64;
                    if upper < lower {
                        BigRational::zero()
                    } else {
                        BigRational::new(
                            BigInt::one(),
                            BigInt::from(factorial((upper - lower) as usize)),
                        )
                    }
                })
                .collect()
        })
        .collect();
    let det = determinant(&mut m);
    let scaled = det * BigRational::from_integer(BigInt::from(factorial(n)));
    assert!(scaled.is_integer(), "determinant count must be integral");
    scaled.to_integer()
}

fn determinant(m: &mut [Vec<BigRational>]) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= m[col][col].clone();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &m[col][col];
            for c in col..n {
                let delta = &factor * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    det
}

/// Brute-force |{v ∈ Sym[n] : Asc(v) = S}| as an independent oracle.
pub fn beta_brute_force(spec: &AscentSpec) -> BigUint {
    let mut count = BigUint::zero();
    for v in enumerate_permutations(spec.n()) {
        if asc_set(v.letters()).members() == spec.set().members() {
            count += BigUint::one();
        }
    }
    count
}

/// A polynomial in n with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPoly {
    coeffs: Vec<BigRational>,
}

impl RationalPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        RationalPoly::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }
}

/// Evidence produced by [`fit_polynomial`]: the finite-difference
/// table, the interpolant when the degree matches, and the verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FitReport {
    /// Difference rows: row 0 is the input values, row d the d-th
    /// forward differences.
    pub differences: Vec<Vec<BigRational>>,
    /// The unique degree-k interpolant, present only when the
    /// differences certify that degree.
    pub polynomial: Option<RationalPoly>,
    /// True when the (k+1)-th differences vanish and the k-th are a
    /// nonzero constant (or k = 0 and the values are constant).
    pub degree_ok: bool,
}

/// Fit a degree-k polynomial in n through exact sample points taken at
/// consecutive integers. Needs at least k+2 points; never asserts
/// polynomiality beyond the sampled window.
pub fn fit_polynomial(points: &[(i64, BigRational)], k: usize) -> Result<FitReport> {
    if points.len() < k + 2 {
        return Err(Error::InsufficientPoints);
    }
    for pair in points.windows(2) {
        if pair[1].0 != pair[0].0 + 1 {
            return Err(Error::InsufficientPoints);
        }
    }
    let mut differences: Vec<Vec<BigRational>> =
        vec![points.iter().map(|(_, v)| v.clone()).collect()];
    while differences.last().map_or(0, Vec::len) > 1 {
        let last = differences.last().expect("nonempty");
        let next: Vec<BigRational> = last.windows(2).map(|p| &p[1] - &p[0]).collect();
        differences.push(next);
    }
    let kth_constant_nonzero = differences
        .get(k)
        .is_some_and(|row| !row.is_empty() && row.iter().all(|v| v == &row[0]) && (k == 0 || !row[0].is_zero()));
    let higher_vanish = differences
        .get(k + 1)
        .is_some_and(|row| row.iter().all(Zero::is_zero));
    let degree_ok = kth_constant_nonzero && higher_vanish;
    let polynomial = if degree_ok {
        Some(newton_interpolant(points[0].0, &differences, k))
    } else {
        None
    };
    Ok(FitReport {
        differences,
        polynomial,
        degree_ok,
    })
}

/// Expand the Newton forward-difference form
/// Σ_d Δ^d f(n_0) · binom(x − n_0, d) into monomial coefficients.
fn newton_interpolant(n0: i64, differences: &[Vec<BigRational>], k: usize) -> RationalPoly {
    let x_minus_n0 = vec![
        BigRational::from_integer(BigInt::from(-n0)),
        BigRational::one(),
    ];
    let mut acc = vec![BigRational::zero(); k + 1];
    let mut basis = vec![BigRational::one()]; // falling-factorial product
    for (d, row) in differences.iter().enumerate().take(k + 1) {
        let d_factorial = BigRational::from_integer(BigInt::from(factorial(d)));
        let lead = &row[0] / d_factorial;
        for (e, b) in basis.iter().enumerate() {
            acc[e] += &lead * b;
        }
        // multiply basis by (x − n0 − d)
        let shift = vec![
            &x_minus_n0[0] - BigRational::from_integer(BigInt::from(d as i64)),
            BigRational::one(),
        ];
        let mut next = vec![BigRational::zero(); basis.len() + 1];
        for (e, b) in basis.iter().enumerate() {
            next[e] += b * &shift[0];
            next[e + 1] += b * &shift[1];
        }
        basis = next;
    }
    RationalPoly::new(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::burge::Biword;
    use crate::cayley::eta;
    use alloc::collections::BTreeSet;

    fn spec(members: &[usize], n: usize) -> AscentSpec {
        AscentSpec::new(members.to_vec(), n).unwrap()
    }

    fn subsets(n: usize) -> Vec<Vec<usize>> {
        let full: Vec<usize> = (1..n.max(1)).collect();
        let mut out = Vec::new();
        for mask in 0..(1u32 << full.len()) {
            out.push(
                full.iter()
                    .enumerate()
                    .filter(|&(b, _)| mask >> b & 1 == 1)
                    .map(|(_, &s)| s)
                    .collect(),
            );
        }
        out
    }

    #[test]
    fn delta_and_alpha() {
        let sp = spec(&[1], 3);
        assert_eq!(sp.delta(), [1, 2]);
        assert_eq!(alpha(&sp), BigUint::from(3u32));
        assert_eq!(alpha(&spec(&[1, 2, 3], 4)), BigUint::from(24u32));
        assert_eq!(alpha(&spec(&[], 5)), BigUint::one());
    }

    #[test]
    fn alpha_matches_brute_force() {
        for n in 1..=5 {
            for members in subsets(n) {
                let sp = spec(&members, n);
                let brute = enumerate_permutations(n)
                    .filter(|v| asc_set(v.letters()).is_subset_of(sp.set()))
                    .count();
                assert_eq!(alpha(&sp), BigUint::from(brute), "n={n} S={members:?}");
                assert_eq!(
                    alpha_poly(&sp, Variant::Strict).eval(&BigInt::one()),
                    BigInt::from(brute)
                );
            }
        }
    }

    #[test]
    fn kappa_examples() {
        // κ°_n(∅) = 2^{n−1}
        for n in 1..=7usize {
            assert_eq!(
                kappa_general(n, &[], Variant::Strict),
                BigUint::from(1u32) << (n - 1)
            );
        }
        assert_eq!(kappa_general(2, &[1], Variant::Weak), BigUint::from(3u32));
        assert_eq!(
            kappa_general(3, &[1, 2], Variant::Weak),
            BigUint::from(13u32)
        );
    }

    #[test]
    fn kappa_routes_agree() {
        for n in 1..=5 {
            for members in subsets(n) {
                let sp = spec(&members, n);
                for variant in [Variant::Weak, Variant::Strict] {
                    assert_eq!(
                        kappa(&sp, variant),
                        kappa_via_perm(&sp, variant),
                        "n={n} S={members:?} {variant:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn eta_membership_lemma() {
        // SAsc(v) ⊆ S ⟺ (η(S), v) ∈ Bur; Asc(v) ⊆ S ⟺ (η(S), v) ∈ BBur
        for n in 1..=5 {
            for members in subsets(n) {
                let s = IndexSet::new(members.clone(), n).unwrap();
                let eta_s = eta(&s);
                for v in enumerate_cayley(n) {
                    let b = Biword::tight(eta_s.letters().to_vec(), v.letters().to_vec());
                    let (in_bur, in_bbur) = match b {
                        Ok(b) => {
                            let f = b.classify();
                            (f.in_bur, f.in_bbur)
                        }
                        Err(_) => (false, false),
                    };
                    assert_eq!(
                        sasc_set(v.letters()).members().iter().all(|&i| s.contains(i)),
                        in_bur,
                        "n={n} S={members:?} v={v}"
                    );
                    assert_eq!(
                        asc_set(v.letters()).members().iter().all(|&i| s.contains(i)),
                        in_bbur,
                        "n={n} S={members:?} v={v}"
                    );
                }
            }
        }
    }

    #[test]
    fn matrix_counts_match_kappa() {
        for n in 1..=5 {
            for members in subsets(n) {
                let sp = spec(&members, n);
                assert_eq!(
                    BigUint::from(enumerate_mat_s(&sp, BurgeClass::All).unwrap().len()),
                    kappa(&sp, Variant::Strict),
                    "all n={n} S={members:?}"
                );
                assert_eq!(
                    BigUint::from(enumerate_mat_s(&sp, BurgeClass::Binary).unwrap().len()),
                    kappa(&sp, Variant::Weak),
                    "binary n={n} S={members:?}"
                );
                assert_eq!(
                    BigUint::from(enumerate_mat_s(&sp, BurgeClass::Perm).unwrap().len()),
                    alpha(&sp),
                    "perm n={n} S={members:?}"
                );
            }
        }
    }

    #[test]
    fn mat_s_example_n2() {
        let sp = spec(&[1], 2);
        let mats: BTreeSet<_> = enumerate_mat_s(&sp, BurgeClass::All)
            .unwrap()
            .into_iter()
            .map(|a| a.rows().to_vec())
            .collect();
        let expected: BTreeSet<Vec<Vec<u64>>> = [
            vec![vec![1], vec![1]],
            vec![vec![1, 0], vec![0, 1]],
            vec![vec![0, 1], vec![1, 0]],
        ]
        .into_iter()
        .collect();
        assert_eq!(mats, expected);
    }

    #[test]
    fn beta_examples() {
        assert_eq!(beta_exact(&spec(&[1], 3)), BigInt::from(2));
        assert_eq!(beta_exact(&spec(&[1, 2, 3], 4)), BigInt::one());
        assert_eq!(beta_exact(&spec(&[2], 4)), BigInt::from(5));
        assert_eq!(beta_exact(&spec(&[], 4)), BigInt::one());
    }

    #[test]
    fn beta_matches_brute_force() {
        for n in 1..=6 {
            for members in subsets(n) {
                let sp = spec(&members, n);
                assert_eq!(
                    beta_exact(&sp),
                    BigInt::from(beta_brute_force(&sp)),
                    "n={n} S={members:?}"
                );
            }
        }
    }

    fn sample_kappa(s: &[usize], k: usize, window: usize) -> Vec<(i64, BigRational)> {
        (0..window)
            .map(|i| {
                let value = kappa_general(i + k, s, Variant::Weak);
                (
                    i as i64,
                    BigRational::from_integer(BigInt::from(value)),
                )
            })
            .collect()
    }

    #[test]
    fn conjectured_polynomials() {
        let cases: [(&[usize], usize, &[i64]); 7] = [
            (&[], 0, &[1]),
            (&[1], 1, &[1, 2]),
            (&[2], 2, &[1, 2, 2]),
            (&[1, 2], 2, &[3, 6, 4]),
            (&[1, 3], 3, &[5, 12, 10, 4]),
            (&[2, 3], 3, &[5, 12, 10, 4]),
            (&[1, 2, 3], 3, &[13, 30, 24, 8]),
        ];
        for (s, k, coeffs) in cases {
            let points = sample_kappa(s, k, 8 - k);
            let report = fit_polynomial(&points, k).unwrap();
            assert!(report.degree_ok, "S={s:?}");
            assert_eq!(
                report.polynomial.unwrap(),
                RationalPoly::from_i64(coeffs),
                "S={s:?}"
            );
        }
    }

    #[test]
    fn kappa_3_fractional_coefficients() {
        // κ_{n+3}({3}) = 1 + 8n/3 + 2n² + 4n³/3
        let points = sample_kappa(&[3], 3, 5);
        let report = fit_polynomial(&points, 3).unwrap();
        assert!(report.degree_ok);
        let third = BigRational::new(BigInt::from(1), BigInt::from(3));
        let expected = RationalPoly::new(vec![
            BigRational::one(),
            &third * BigRational::from_integer(BigInt::from(8)),
            BigRational::from_integer(BigInt::from(2)),
            &third * BigRational::from_integer(BigInt::from(4)),
        ]);
        assert_eq!(report.polynomial.unwrap(), expected);
    }

    #[test]
    fn fit_rejects_wrong_degree() {
        // quadratic data declared as degree 1
        let points: Vec<(i64, BigRational)> = (0..5)
            .map(|n| {
                (
                    n,
                    BigRational::from_integer(BigInt::from(n * n)),
                )
            })
            .collect();
        let report = fit_polynomial(&points, 1).unwrap();
        assert!(!report.degree_ok);
        assert!(report.polynomial.is_none());
    }

    #[test]
    fn fit_constant_and_errors() {
        let points: Vec<(i64, BigRational)> = (3..7)
            .map(|n| (n, BigRational::from_integer(BigInt::from(9))))
            .collect();
        let report = fit_polynomial(&points, 0).unwrap();
        assert!(report.degree_ok);
        assert_eq!(report.polynomial.unwrap(), RationalPoly::from_i64(&[9]));
        assert_eq!(
            fit_polynomial(&points[..1], 0),
            Err(Error::InsufficientPoints)
        );
    }

    #[test]
    fn summation_identities() {
        // κ°_n(S) = Σ_{Asc(v)⊆S} 2^{des(v^{-1})}, κ_n(S) = Σ_{Des(v)⊆S} 2^{des(v^{-1})}
        for n in 1..=5 {
            for members in subsets(n) {
                let sp = spec(&members, n);
                let strict_sum: BigInt = enumerate_permutations(n)
                    .filter(|v| asc_set(v.letters()).is_subset_of(sp.set()))
                    .map(|v| {
                        BigInt::one()
                            << crate::cayley::des(v.inverse().unwrap().letters())
                    })
                    .sum();
                assert_eq!(BigInt::from(kappa(&sp, Variant::Strict)), strict_sum);
                let weak_sum: BigInt = enumerate_permutations(n)
                    .filter(|v| des_set(v.letters()).is_subset_of(sp.set()))
                    .map(|v| {
                        BigInt::one()
                            << crate::cayley::des(v.inverse().unwrap().letters())
                    })
                    .sum();
                assert_eq!(BigInt::from(kappa(&sp, Variant::Weak)), weak_sum);
            }
        }
    }
}
