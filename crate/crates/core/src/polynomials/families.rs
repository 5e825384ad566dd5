//! The polynomial families: Eulerian A_n, Caylerian C_n and C°_n,
//! two-sided versions over permutations and Burge words, series
//! identities, and the Euler-number oracle.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::{binomial_int, Poly1, Poly2};
use crate::burge::{enumerate_burge, enumerate_mat, BurgeClass, Variant};
use crate::cayley::{
    asc, des, enumerate_cayley, enumerate_permutations, sdes, CayleyWord,
};
use crate::Result;

/// How to build the Eulerian polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EulerianMethod {
    /// Brute force over Sym[n].
    Enumeration,
    /// A_n(t) = Σ_{k<n} binom(n,k) A_k(t) (t-1)^{n-1-k}, cached.
    Recursion,
}

/// A_n(t) = Σ_{v ∈ Sym[n]} t^{des(v)}.
pub fn eulerian(n: usize, method: EulerianMethod) -> Poly1 {
    match method {
        EulerianMethod::Enumeration => {
            let mut p = Poly1::zero();
            for v in enumerate_permutations(n) {
                p.add_term(BigInt::one(), des(v.letters()));
            }
            p
        }
        EulerianMethod::Recursion => {
            let mut cache: Vec<Poly1> = vec![Poly1::one()];
            let minus_one = Poly1::from_i64(&[-1, 1]);
            for m in 1..=n {
                let mut p = Poly1::zero();
                for k in 0..m {
                    let mut term = cache[k].scale(&binomial_int(m as u64, k as u64));
                    for _ in 0..(m - 1 - k) {
                        term = term.mul(&minus_one);
                    }
                    p = p.add(&term);
                }
                cache.push(p);
            }
            cache.pop().expect("cache holds A_0..A_n")
        }
    }
}

/// C_n(t) = Σ_{v ∈ Cay[n]} t^{des(v)} (weak) or Σ t^{des°(v)} (strict).
pub fn caylerian(n: usize, variant: Variant) -> Poly1 {
    let mut p = Poly1::zero();
    for v in enumerate_cayley(n) {
        let stat = match variant {
            Variant::Weak => des(v.letters()),
            Variant::Strict => sdes(v.letters()),
        };
        p.add_term(BigInt::one(), stat);
    }
    p
}

/// The permutation route: C_n(t) = Σ_{v ∈ Sym[n]} 2^{des(v)} t^{des(v^{-1})},
/// and C°_n(t) = Σ 2^{des(v)} t^{asc(v^{-1})}.
pub fn caylerian_via_two_pow(n: usize, variant: Variant) -> Poly1 {
    let mut p = Poly1::zero();
    for v in enumerate_permutations(n) {
        let inv = v.inverse().expect("permutations invert");
        let stat = match variant {
            Variant::Weak => des(inv.letters()),
            Variant::Strict => asc(inv.letters()),
        };
        p.add_term(BigInt::one() << des(v.letters()), stat);
    }
    p
}

/// A_n(s,t) = Σ_{v ∈ Sym[n]} s^{des(v)} t^{des(v^{-1})}; the strict
/// variant A°_n uses asc(v^{-1}) in the t exponent.
pub fn two_sided_eulerian(n: usize, variant: Variant) -> Poly2 {
    let mut p = Poly2::zero();
    for v in enumerate_permutations(n) {
        let inv = v.inverse().expect("permutations invert");
        let t_stat = match variant {
            Variant::Weak => des(inv.letters()),
            Variant::Strict => asc(inv.letters()),
        };
        p.add_term((des(v.letters()) as u32, t_stat as u32), BigInt::one());
    }
    p
}

fn word_max(w: &[u32]) -> u32 {
    w.iter().copied().max().unwrap_or(0)
}

fn biword_class(variant: Variant) -> BurgeClass {
    match variant {
        Variant::Weak => BurgeClass::All,
        Variant::Strict => BurgeClass::Binary,
    }
}

/// B_n(s,t) = Σ_{(u,v) ∈ Bur[n]} s^{n-max(u)} t^{n-max(v)}; strict
/// version over the binary Burge words.
pub fn two_sided_caylerian(n: usize, variant: Variant) -> Poly2 {
    let mut p = Poly2::zero();
    for b in enumerate_burge(n, biword_class(variant)) {
        let i = (n as u32) - word_max(b.top());
        let j = (n as u32) - word_max(b.bottom());
        p.add_term((i, j), BigInt::one());
    }
    p
}

/// Same polynomial from the matrix side: max(u) is the number of rows
/// and max(v) the number of columns.
pub fn two_sided_caylerian_via_matrices(n: usize, variant: Variant) -> Result<Poly2> {
    let mut p = Poly2::zero();
    for a in enumerate_mat(n, biword_class(variant))? {
        let i = (n as u32) - a.row_count() as u32;
        let j = (n as u32) - a.col_count() as u32;
        p.add_term((i, j), BigInt::one());
    }
    Ok(p)
}

/// B̂_n(s,t) = Σ_{(u,v) ∈ Bur[n]} s^{max(u)} t^{max(v)}; strict over
/// the binary Burge words.
pub fn bhat(n: usize, variant: Variant) -> Poly2 {
    let mut p = Poly2::zero();
    for b in enumerate_burge(n, biword_class(variant)) {
        p.add_term((word_max(b.top()), word_max(b.bottom())), BigInt::one());
    }
    p
}

/// Σ_{v ∈ Cay[n]} t^{n-max(v)}; equals A_n(1+t).
pub fn max_statistic_poly(n: usize) -> Poly1 {
    let mut p = Poly1::zero();
    for v in enumerate_cayley(n) {
        p.add_term(BigInt::one(), n - CayleyWord::max(&v) as usize);
    }
    p
}

/// First M coefficients (t^1 .. t^M) of t·A_n(t)/(1-t)^{n+1}, by
/// truncated convolution with Σ_k binom(n+k, n) t^k.
pub fn carlitz_coeffs(n: usize, m_terms: usize) -> Vec<BigInt> {
    series_coeffs(&eulerian(n, EulerianMethod::Recursion), n, m_terms)
}

/// Which numerator drives the Caylerian series.
///
/// Note the class pairing: the weak numerator tC_n counts the *binary*
/// generalized Burge words and the strict numerator tC°_n counts the
/// full class. (The identity is sometimes quoted with the two classes
/// exchanged, but already at n = 2, m = 1 the coefficient of tC_n is 1
/// while the full class has the two biwords 11/11 and 11/21; the
/// compatible-map count multichoose(m − asc°(v), n) that drives the
/// proof pins the full class to C°_n.)
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesVariant {
    /// tC_n(t)/(1-t)^{n+1}, counting the binary Genbur words.
    Weak,
    /// tC°_n(t)/(1-t)^{n+1}, counting Genbur_m[n].
    Strict,
    /// tA_n(t)/(1-t)^{n+1}, counting the permutation Genbur words.
    Perm,
}

/// First M coefficients of t·P_n(t)/(1-t)^{n+1} for the selected
/// numerator family.
pub fn caylerian_series_coeffs(n: usize, m_terms: usize, variant: SeriesVariant) -> Vec<BigInt> {
    let numerator = match variant {
        SeriesVariant::Weak => caylerian(n, Variant::Weak),
        SeriesVariant::Strict => caylerian(n, Variant::Strict),
        SeriesVariant::Perm => eulerian(n, EulerianMethod::Recursion),
    };
    series_coeffs(&numerator, n, m_terms)
}

/// Coefficients of t^1..t^M in t·P(t)·Σ_k binom(n+k, n) t^k.
fn series_coeffs(p: &Poly1, n: usize, m_terms: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(m_terms);
    for m in 1..=m_terms {
        // coefficient of t^m: Σ_k P_k · binom(n + m - 1 - k, n)
        let mut acc = BigInt::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            if k + 1 > m {
                break;
            }
            acc += c * binomial_int((n + m - 1 - k) as u64, n as u64);
        }
        out.push(acc);
    }
    out
}

/// Σ_i A(n,i) · binom(m+i, n); equals m^n. The identity as sometimes
/// printed with binom(m+i, i) fails already at n = 2, m = 1.
pub fn worpitzky_check(n: usize, m: usize) -> BigInt {
    let a_n = eulerian(n, EulerianMethod::Recursion);
    let mut acc = BigInt::zero();
    for (i, c) in a_n.coeffs().iter().enumerate() {
        acc += c * binomial_int((m + i) as u64, n as u64);
    }
    acc
}

/// E_n by the Seidel (boustrophedon) triangle — an oracle independent
/// of any polynomial evaluation.
pub fn euler_number(n: usize) -> BigUint {
    let mut row: Vec<BigUint> = vec![BigUint::one()];
    for k in 1..=n {
        let mut next: Vec<BigUint> = vec![BigUint::zero()];
        for j in 1..=k {
            let prev = row.get(k - j).cloned().unwrap_or_else(BigUint::zero);
            let val = next[j - 1].clone() + prev;
            next.push(val);
        }
        row = next;
    }
    row.last().cloned().unwrap_or_else(BigUint::one)
}

/// The closed form for A_n(-1): 0 for even n ≥ 2, (−1)^{(n−1)/2} E_n
/// for odd n, and 1 for n = 0.
pub fn eulerian_at_minus_one(n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    if n % 2 == 0 {
        return BigInt::zero();
    }
    let e = BigInt::from(euler_number(n));
    if ((n - 1) / 2) % 2 == 0 {
        e
    } else {
        -e
    }
}

/// C_n(−1) (weak) or C°_n(−1) (strict), by direct evaluation.
pub fn caylerian_at_minus_one(n: usize, variant: Variant) -> BigInt {
    caylerian(n, variant).eval(&BigInt::from(-1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::fubini;

    #[test]
    fn eulerian_table_and_methods_agree() {
        assert_eq!(eulerian(0, EulerianMethod::Recursion), Poly1::one());
        assert_eq!(
            eulerian(3, EulerianMethod::Enumeration),
            Poly1::from_i64(&[1, 4, 1])
        );
        assert_eq!(
            eulerian(4, EulerianMethod::Recursion),
            Poly1::from_i64(&[1, 11, 11, 1])
        );
        for n in 0..=7 {
            assert_eq!(
                eulerian(n, EulerianMethod::Enumeration),
                eulerian(n, EulerianMethod::Recursion),
                "n={n}"
            );
        }
    }

    #[test]
    fn caylerian_table() {
        let expected = [
            vec![1],
            vec![1],
            vec![1, 2],
            vec![1, 8, 4],
            vec![1, 24, 42, 8],
            vec![1, 64, 276, 184, 16],
        ];
        for (n, coeffs) in expected.iter().enumerate() {
            assert_eq!(
                caylerian(n, Variant::Weak),
                Poly1::from_i64(&coeffs.iter().map(|&c| c as i64).collect::<Vec<_>>()),
                "n={n}"
            );
        }
    }

    #[test]
    fn caylerian_strict_is_reverse() {
        assert_eq!(caylerian(2, Variant::Strict), Poly1::from_i64(&[2, 1]));
        for n in 1..=6 {
            assert_eq!(
                caylerian(n, Variant::Strict),
                caylerian(n, Variant::Weak).reverse(n).unwrap(),
                "n={n}"
            );
        }
    }

    #[test]
    fn caylerian_two_pow_route_agrees() {
        for n in 0..=6 {
            for variant in [Variant::Weak, Variant::Strict] {
                assert_eq!(
                    caylerian(n, variant),
                    caylerian_via_two_pow(n, variant),
                    "n={n} {variant:?}"
                );
            }
        }
    }

    #[test]
    fn caylerian_at_one_is_fubini() {
        for n in 0..=7 {
            assert_eq!(
                caylerian(n, Variant::Weak).eval(&BigInt::one()),
                BigInt::from(fubini(n))
            );
        }
    }

    #[test]
    fn two_sided_eulerian_small() {
        let a2 = two_sided_eulerian(2, Variant::Weak);
        assert_eq!(a2, Poly2::from_terms([((0, 0), BigInt::one()), ((1, 1), BigInt::one())]));
        assert_eq!(
            two_sided_eulerian(5, Variant::Weak).eval(&BigInt::one(), &BigInt::one()),
            BigInt::from(120)
        );
    }

    #[test]
    fn two_sided_at_s_two_is_caylerian() {
        for n in 0..=6 {
            assert_eq!(
                two_sided_eulerian(n, Variant::Weak).eval_s(&BigInt::from(2)),
                caylerian(n, Variant::Weak),
                "n={n}"
            );
            assert_eq!(
                two_sided_eulerian(n, Variant::Strict).eval_s(&BigInt::from(2)),
                caylerian(n, Variant::Strict),
                "n={n}"
            );
        }
    }

    #[test]
    fn two_sided_caylerian_routes_agree() {
        for n in 0..=5 {
            for variant in [Variant::Weak, Variant::Strict] {
                assert_eq!(
                    two_sided_caylerian(n, variant),
                    two_sided_caylerian_via_matrices(n, variant).unwrap(),
                    "n={n} {variant:?}"
                );
            }
        }
    }

    #[test]
    fn bhat_two() {
        let b = bhat(2, Variant::Weak);
        assert_eq!(
            b,
            Poly2::from_terms([
                ((1, 1), BigInt::one()),
                ((1, 2), BigInt::one()),
                ((2, 1), BigInt::one()),
                ((2, 2), BigInt::from(2)),
            ])
        );
        let bs = bhat(2, Variant::Strict);
        assert_eq!(
            bs,
            Poly2::from_terms([
                ((1, 2), BigInt::one()),
                ((2, 1), BigInt::one()),
                ((2, 2), BigInt::from(2)),
            ])
        );
    }

    #[test]
    fn bhat_five_corner() {
        assert_eq!(bhat(5, Variant::Weak).coeff(5, 5), BigInt::from(120));
    }

    #[test]
    fn max_statistic_matches_shift() {
        assert_eq!(max_statistic_poly(3), Poly1::from_i64(&[6, 6, 1]));
        assert_eq!(max_statistic_poly(1), Poly1::one());
        for n in 0..=6 {
            assert_eq!(
                max_statistic_poly(n),
                eulerian(n, EulerianMethod::Recursion).shift(&BigInt::one()),
                "n={n}"
            );
        }
    }

    #[test]
    fn carlitz_is_powers() {
        assert_eq!(
            carlitz_coeffs(2, 4),
            [1, 4, 9, 16].map(BigInt::from).to_vec()
        );
        assert_eq!(carlitz_coeffs(0, 3), [1, 1, 1].map(BigInt::from).to_vec());
        assert_eq!(
            carlitz_coeffs(5, 6),
            [1, 32, 243, 1024, 3125, 7776].map(BigInt::from).to_vec()
        );
    }

    #[test]
    fn caylerian_series_counts_genbur() {
        use crate::genburge::enumerate_genbur;
        for n in 0..=4 {
            for (variant, class) in [
                (SeriesVariant::Weak, BurgeClass::Binary),
                (SeriesVariant::Strict, BurgeClass::All),
                (SeriesVariant::Perm, BurgeClass::Perm),
            ] {
                let coeffs = caylerian_series_coeffs(n, 5, variant);
                for m in 1..=5usize {
                    let count = enumerate_genbur(n, m as u32, class).unwrap().len();
                    assert_eq!(
                        coeffs[m - 1],
                        BigInt::from(count),
                        "n={n} m={m} {variant:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn series_perm_equals_carlitz() {
        assert_eq!(
            caylerian_series_coeffs(2, 6, SeriesVariant::Perm),
            carlitz_coeffs(2, 6)
        );
    }

    #[test]
    fn worpitzky() {
        assert_eq!(worpitzky_check(2, 3), BigInt::from(9));
        assert_eq!(worpitzky_check(1, 7), BigInt::from(7));
        assert_eq!(worpitzky_check(4, 2), BigInt::from(16));
        for n in 1..=6usize {
            for m in 1..=8usize {
                assert_eq!(
                    worpitzky_check(n, m),
                    BigInt::from(m).pow(n as u32),
                    "n={n} m={m}"
                );
            }
        }
    }

    #[test]
    fn worpitzky_as_printed_fails() {
        // the binom(m+i, i) variant would give 1·binom(1,0) + 1·binom(2,1) = 3 ≠ 1
        let a2 = eulerian(2, EulerianMethod::Recursion);
        let printed: BigInt = a2
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| c * binomial_int((1 + i) as u64, i as u64))
            .sum();
        assert_eq!(printed, BigInt::from(3));
        assert_ne!(printed, BigInt::one());
    }

    #[test]
    fn euler_numbers() {
        let expected = [1u64, 1, 1, 2, 5, 16, 61, 272, 1385, 7936];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(euler_number(n), BigUint::from(e), "n={n}");
        }
    }

    #[test]
    fn eulerian_minus_one_matches_oracle() {
        for n in 0..=9 {
            assert_eq!(
                eulerian(n, EulerianMethod::Recursion).eval(&BigInt::from(-1)),
                eulerian_at_minus_one(n),
                "n={n}"
            );
        }
        assert_eq!(eulerian_at_minus_one(3), BigInt::from(-2));
        assert_eq!(eulerian_at_minus_one(5), BigInt::from(16));
    }

    #[test]
    fn caylerian_minus_one_sequence() {
        let expected = [1i64, 1, -1, -3, 11, 45, -301, -1475];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(
                caylerian_at_minus_one(n, Variant::Weak),
                BigInt::from(c),
                "n={n}"
            );
        }
        // strict satisfies C°_n(−1) = (−1)^{n−1} C_n(−1)
        assert_eq!(caylerian_at_minus_one(6, Variant::Strict), BigInt::from(301));
        for n in 1..=7 {
            let sign = if (n - 1) % 2 == 0 { 1 } else { -1 };
            assert_eq!(
                caylerian_at_minus_one(n, Variant::Strict),
                caylerian_at_minus_one(n, Variant::Weak) * BigInt::from(sign),
                "n={n}"
            );
        }
    }
}
