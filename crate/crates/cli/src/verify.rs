//! One-command identity suite.
//!
//! Every invariant bullet of the core modules corresponds to exactly
//! one check id here (see [`MODULE_BULLETS`]); additional checks cover
//! the series identities, the minus-one evaluations, and the embedded
//! reference tables. Checks run in a work pool and are re-sorted into
//! registry order before emission, so the report is deterministic for
//! fixed inputs.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use caylerian_core::burge::{
    burge_transpose, count_burge, enumerate_burge, enumerate_mat, fishburn_basis,
    matrix_to_biword, biword_to_matrix, wi_of, Biword, BurgeClass, Variant,
};
use caylerian_core::cayley::{
    asc_set, complement, conjugate, des, des_set, enumerate_cayley, enumerate_permutations,
    enumerate_wi, eta, format_word, fubini, reverse, sasc_set, sdes_set, sort_word, CayleyWord,
    IndexSet, WeaklyIncreasingWord,
};
use caylerian_core::genburge::{
    biword_to_matrix_m, compatible_count_formula, compatible_maps, enumerate_genbur,
    enumerate_genmat, is_compatible, matrix_to_biword_m, wigen,
};
use caylerian_core::polynomials::{
    bhat, carlitz_coeffs, caylerian, caylerian_at_minus_one, caylerian_series_coeffs,
    caylerian_via_two_pow, eulerian, eulerian_at_minus_one, euler_number, gamma_two_sided,
    gamma_vector, max_statistic_poly, two_sided_caylerian, two_sided_caylerian_via_matrices,
    two_sided_eulerian, worpitzky_check, EulerianMethod, Poly1, Poly2, SeriesVariant,
};
use caylerian_core::prescribed::{
    alpha, beta_brute_force, beta_exact, enumerate_mat_s, fit_polynomial, kappa_general,
    AscentSpec,
};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::figures;

/// All suite ids, in canonical order.
pub const SUITES: &[&str] = &[
    "symmetries",
    "transpose",
    "phi",
    "basis",
    "polynomials",
    "two_sided",
    "gamma",
    "series",
    "compatible",
    "prescribed",
    "minus_one",
];

/// Outcome of one check.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub id: &'static str,
    pub params: String,
    pub status: bool,
    pub witness: Option<String>,
    pub ms: u128,
}

/// A registered check: the run function receives the requested max_n
/// and returns (parameter description, pass or witness).
pub struct CheckDef {
    pub id: &'static str,
    pub suite: &'static str,
    pub run: fn(usize) -> (String, Result<(), String>),
}

/// Module invariant bullet → check id, used by the exhaustiveness test.
pub const MODULE_BULLETS: &[(&str, &str)] = &[
    ("cayley_core: eight reverse/complement relations", "symmetries.reverse_complement"),
    ("cayley_core: conjugation involution and pointwise formula", "symmetries.conjugation"),
    ("cayley_core: Fubini and 2^{n-1} counts", "symmetries.counts"),
    ("cayley_core: lexicographic enumeration", "symmetries.lex_order"),
    ("burge: transpose characterization", "transpose.characterization"),
    ("burge: phi round-trip and class restrictions", "phi.burge_roundtrip"),
    ("burge: PBur transpose is {(id,x)}", "transpose.pbur_cayley"),
    ("burge: basis characterization via transpose", "basis.characterization"),
    ("burge: basis descent generating sum", "basis.descent_sum"),
    ("genburge: compatible maps partition [m]^n", "compatible.partition"),
    ("genburge: basis(v) = Cay ∩ comp(v)", "compatible.fishburn_basis"),
    ("genburge: Genbur disjoint-union counts", "compatible.genbur_union"),
    ("genburge: phi_m round-trip", "phi.genmat_roundtrip"),
    ("genburge: compatibility definitions agree", "compatible.definition_equivalence"),
    ("polynomials: Caylerian at t=2 counts matrices", "polynomials.caylerian_at_two"),
    ("polynomials: two-sided Eulerian/Caylerian identity", "two_sided.identity"),
    ("polynomials: B-hat substitution identities", "two_sided.twohat"),
    ("polynomials: weak/strict symmetry of B at s=1", "two_sided.remark_symmetry"),
    ("polynomials: (1+t)^des expansion over WI(v)", "polynomials.oneplust_des"),
    ("polynomials: basis and WI(v) share the max statistic", "polynomials.basis_or_wi"),
    ("polynomials: two-sided (1+s)(1+t) expansion", "two_sided.oneplus_square"),
    ("polynomials: gamma reconstruction and nonnegativity", "gamma.reconstruction"),
    ("prescribed: eta membership lemma", "prescribed.eta_lemma"),
    ("prescribed: kappa/alpha count matrices with row sums", "prescribed.theorem_mats"),
    ("prescribed: summation identities over permutations", "prescribed.summation"),
    ("prescribed: conjectured closed forms", "prescribed.conjectured_values"),
    ("prescribed: beta determinant equals brute force", "prescribed.beta_determinant"),
];

fn eff(cap: usize, max_n: usize) -> usize {
    cap.min(max_n)
}

fn big(u: &BigUint) -> BigInt {
    BigInt::from(u.clone())
}

fn pow2(k: usize) -> BigUint {
    BigUint::one() << k
}

fn set_eq(a: &IndexSet, b: &IndexSet) -> bool {
    a.members() == b.members()
}

// ---------------------------------------------------------------- checks

fn chk_reverse_complement(max_n: usize) -> (String, Result<(), String>) {
    let top = eff(7, max_n);
    let params = format!("n<={top}");
    for n in 1..=top {
        for v in enumerate_cayley(n) {
            let w = v.letters();
            let c = complement(&v);
            let r = reverse(w);
            let ok = set_eq(&des_set(c.letters()), &asc_set(w))
                && set_eq(&sdes_set(c.letters()), &sasc_set(w))
                && set_eq(&asc_set(c.letters()), &des_set(w))
                && set_eq(&sasc_set(c.letters()), &sdes_set(w))
                && set_eq(&des_set(&r), &asc_set(w).reflect())
                && set_eq(&asc_set(&r), &des_set(w).reflect())
                && set_eq(&sasc_set(&r), &sdes_set(w).reflect())
                && set_eq(&sdes_set(&r), &sasc_set(w).reflect());
            if !ok {
                return (params, Err(format!("v={}", format_word(w))));
            }
        }
    }
    (params, Ok(()))
}

fn chk_conjugation(max_n: usize) -> (String, Result<(), String>) {
    let top = eff(10, max_n);
    let params = format!("n<={top}");
    for n in 1..=top {
        for u in enumerate_wi(n) {
            let ubar = match conjugate(&u) {
                Ok(x) => x,
                Err(e) => return (params, Err(format!("u={}: {e:?}", format_word(u.letters())))),
            };
            let pointwise_ok = ubar
                .letters()
                .iter()
                .zip(u.letters())
                .enumerate()
                .all(|(i, (&b, &a))| b == (i as u32 + 2) - a);
            let back = conjugate(&ubar).map(|x| x.letters().to_vec());
            let ok = pointwise_ok
                && back.as_deref() == Ok(u.letters())
                && set_eq(&des_set(ubar.letters()), &sasc_set(u.letters()));
            if !ok {
                return (params, Err(format!("u={}", format_word(u.letters()))));
            }
        }
    }
    (params, Ok(()))
}

fn chk_counts(max_n: usize) -> (String, Result<(), String>) {
    let top = eff(8, max_n);
    let params = format!("n<={top}");
    for n in 0..=top {
        let cay = enumerate_cayley(n).count();
        if BigUint::from(cay) != fubini(n) {
            return (params, Err(format!("|Cay[{n}]|={cay} != Fubini")));
        }
        let wi = enumerate_wi(n).count();
        let expected = if n == 0 { BigUint::one() } else { pow2(n - 1) };
        if BigUint::from(wi) != expected {
            return (params, Err(format!("|WI[{n}]|={wi} != 2^(n-1)")));
        }
    }
    (params, Ok(()))
}

fn chk_lex_order(max_n: usize) -> (String, Result<(), String>) {
    let top = eff(7, max_n);
    let params = format!("n<={top}");
    for n in 1..=top {
        let cay: Vec<Vec<u32>> = enumerate_cayley(n).map(|v| v.letters().to_vec()).collect();
        if !cay.windows(2).all(|p| p[0] < p[1]) {
            return (params, Err(format!("Cay[{n}] not strictly lex increasing")));
        }
        let wi: Vec<Vec<u32>> = enumerate_wi(n).map(|u| u.letters().to_vec()).collect();
        if !wi.windows(2).all(|p| p[0] < p[1]) {
            return (params, Err(format!("WI[{n}] not strictly lex increasing")));
        }
    }
    (params, Ok(()))
}

fn chk_transpose_characterization(max_n: usize) -> (String, Result<(), String>) {
    let top = eff(6, max_n);
    let params = format!("n<={top}");
    for n in 1..=top {
        let wis: Vec<WeaklyIncreasingWord> = enumerate_wi(n).collect();
        for v in enumerate_cayley(n) {
            for u in &wis {
                let b = match Biword::tight(u.letters().to_vec(), v.letters().to_vec()) {
                    Ok(b) => b,
                    Err(e) => return (params, Err(format!("biword build failed: {e:?}"))),
                };
                let in_bur = des_set(u.letters()).is_subset_of(&des_set(v.letters()));
                let round = burge_transpose(&b).and_then(|t| burge_transpose(&t));
                let fixed = match round {
                    Ok(bb) => bb.top() == b.top() && bb.bottom() == b.bottom(),
                    Err(_) => false,
                };
                if in_bur != fixed {
                    return (params, Err(format!("(u,v)={b}")));
                }
            }
        }
    }
    (params, Ok(()))
}

fn chk_phi_burge_roundtrip(max_n: usize) -> (String, Result<(), String>) {
    let top = eff(7, max_n);
    let params = format!("n<={top}");
    for n in 0..=top {
        for class in [BurgeClass::All, BurgeClass::Binary, BurgeClass::Perm] {
            let mats = match enumerate_mat(n, class) {
                Ok(m) => m,
                Err(e) => return (params, Err(format!("enumerate_mat: {e:?}"))),
            };
            if BigUint::from(mats.len()) != count_burge(n, class) {
                return (
                    params,
                    Err(format!("|Mat[{n}]| class {class:?}: {} != count", mats.len())),
                );
            }
            for a in &mats {
                let b = matrix_to_biword(a);
                let flags = b.classify();
                let in_class = match class {
                    BurgeClass::All => flags.in_bur,
                    BurgeClass::Binary => flags.in_bbur,
                    BurgeClass::Perm => flags.in_pbur,
                    BurgeClass::Omega => false,
                };
                let back = biword_to_matrix(&b);
                if !in_class || back.as_ref() != Ok(a) {
                    return (params, Err(format!("matrix {:?}", a.rows())));
                }
            }
        }
    }
    (params, Ok(()))
}

fn chk_pbur_cayley(max_n: usize) -> (String, Result<(), String>) {
    let top = eff(7, max_n);
    let params = format!("n<={top}");
    for n in 1..=top {
        let pbur = enumerate_burge(n, BurgeClass::Perm);
        if BigUint::from(pbur.len()) != fubini(n) {
            return (params, Err(format!("|PBur[{n}]|={} != Fubini", pbur.len())));
        }
        let id: Vec<u32> = (1..=n as u32).collect();
        let mut bottoms = BTreeSet::new();
        for b in &pbur {
            let t = match burge_transpose(b) {
                Ok(t) => t,
                Err(e) => return (params, Err(format!("{b}: {e:?}"))),
            };
            if t.top() != id.as_slice() {
                return (params, Err(format!("{b}^T has top != id")));
            }
            bottoms.insert(t.bottom().to_vec());
        }
        let cay: BTreeSet<Vec<u32>> = enumerate_cayley(n).map(|v| v.letters().to_vec()).collect();
        if bottoms != cay {
            return (params, Err(format!("PBur[{n}]^T bottoms != Cay[{n}]")));
        }
    }
    (params, Ok(()))
}

fn chk_basis_characterization(max_n: usize) -> (String, Result<(), String>) {
    let top = eff(6, max_n);
    let params = format!("n<={top}");
    for n in 1..=top {
        let id: Vec<u32> = (1..=n as u32).collect();
        // Group every x in Cay[n] by the bottom of (id, x)^T.
        let mut grouped: BTreeMap<Vec<u32>, BTreeSet<Vec<u32>>> = BTreeMap::new();
        for x in enumerate_cayley(n) {
            let b = Biword::tight(id.clone(), x.letters().to_vec()).expect("id top is valid");
            let t = match burge_transpose(&b) {
                Ok(t) => t,
                Err(e) => return (params, Err(format!("x={}: {e:?}", format_word(x.letters())))),
            };
            if t.top() != sort_word(x.letters()).as_slice() {
                return (
                    params,
                    Err(format!("(id,{})^T top != sort(x)", format_word(x.letters()))),
                );
            }
            grouped
                .entry(t.bottom().to_vec())
                .or_default()
                .insert(x.letters().to_vec());
        }
        for v in enumerate_permutations(n) {
            let basis = match fishburn_basis(&v) {
                Ok(b) => b,
                Err(e) => return (params, Err(format!("basis({}): {e:?}", format_word(v.letters())))),
            };
            let from_gamma: BTreeSet<Vec<u32>> =
                basis.iter().map(|x| x.letters().to_vec()).collect();
            let from_transpose = grouped.remove(v.letters()).unwrap_or_default();
            if from_gamma != from_transpose {
                return (params, Err(format!("v={}", format_word(v.letters()))));
            }
        }
    }
    (params, Ok(()))
}

fn chk_basis_descent_sum(max_n: usize) -> (String, Result<(), String>) {
    let top = eff(6, max_n);
    let params = format!("n<={top}");
    for n in 1..=top {
        for v in enumerate_permutations(n) {
            let basis = match fishburn_basis(&v) {
                Ok(b) => b,
                Err(e) => return (params, Err(format!("{e:?}"))),
            };
            let mut lhs = Poly1::zero();
            for x in &basis {
                lhs.add_term(BigInt::one(), des(x.letters()));
            }
            let inv = v.inverse().expect("permutation");
            let rhs = Poly1::monomial(BigInt::one() << des(v.letters()), des(inv.letters()));
            if lhs != rhs {
                return (params, Err(format!("v={}", format_word(v.letters()))));
            }
        }
    }
    (params, Ok(()))
}

fn chk_compatible_partition(max_n: usize) -> (String, Result<(), String>) {
    let top = eff(5, max_n);
    let params = format!("n<={top},m<=6");
    for n in 1..=top {
        for m in 1..=6u32 {
            let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
            let mut total = 0u64;
            for v in enumerate_permutations(n) {
                for x in compatible_maps(&v, m, Variant::Weak) {
                    total += 1;
                    if !seen.insert(x.clone()) {
                        return (
                            params,
                            Err(format!("map {} in two comp sets", format_word(&x))),
                        );
                    }
                }
            }
            if total != (m as u64).pow(n as u32) {
                return (params, Err(format!("n={n},m={m}: total {total} != m^n")));
            }
        }
    }
    (params, Ok(()))
}

fn chk_fishburn_compatible(max_n: usize) -> (String, Result<(), String>) {
    let top = eff(5, max_n);
    let params = format!("n<={top},m=n");
    for n in 1..=top {
        for v in enumerate_permutations(n) {
            let basis: BTreeSet<Vec<u32>> = match fishburn_basis(&v) {
                Ok(b) => b.iter().map(|x| x.letters().to_vec()).collect(),
                Err(e) => return (params, Err(format!("{e:?}"))),
            };
            let comp_cay: BTreeSet<Vec<u32>> = compatible_maps(&v, n as u32, Variant::Weak)
                .into_iter()
                .filter(|x| caylerian_core::cayley::is_cayley(x))
                .collect();
            if basis != comp_cay {
                return (params, Err(format!("v={}", format_word(v.letters()))));
            }
        }
    }
    (params, Ok(()))
}

fn chk_genbur_union(max_n: usize) -> (String, Result<(), String>) {
    let top = eff(5, max_n);
    let params = format!("n<={top},m<=6");
    for n in 1..=top {
        for m in 1..=6u32 {
            for (class, variant) in [
                (BurgeClass::All, Variant::Weak),
                (BurgeClass::Binary, Variant::Strict),
            ] {
                let whole = match enumerate_genbur(n, m, class) {
                    Ok(w) => w.len(),
                    Err(e) => return (params, Err(format!("{e:?}"))),
                };
                let mut by_v = 0usize;
                for v in enumerate_cayley(n) {
                    by_v += wigen(&v, m, variant).len();
                }
                if whole != by_v {
                    return (
                        params,
                        Err(format!("n={n},m={m},{class:?}: {whole} != {by_v}")),
                    );
                }
            }
        }
    }
    (params, Ok(()))
}

fn chk_genmat_roundtrip(max_n: usize) -> (String, Result<(), String>) {
    let top = eff(5, max_n);
    let params = format!("n<={top},m<=5");
    for n in 0..=top {
        for m in 1..=5usize {
            let mats = match enumerate_genmat(n, m, BurgeClass::All) {
                Ok(v) => v,
                Err(e) => return (params, Err(format!("{e:?}"))),
            };
            for a in &mats {
                let b = matrix_to_biword_m(a);
                let back = biword_to_matrix_m(&b, m);
                if back.as_ref() != Ok(a) {
                    return (params, Err(format!("matrix {:?}", a.rows())));
                }
            }
            let words = match enumerate_genbur(n, m as u32, BurgeClass::All) {
                Ok(w) => w.len(),
                Err(e) => return (params, Err(format!("{e:?}"))),
            };
            if mats.len() != words {
                return (
                    params,
                    Err(format!("n={n},m={m}: {} matrices != {words} biwords", mats.len())),
                );
            }
        }
    }
    (params, Ok(()))
}

fn chk_definition_equivalence(max_n: usize) -> (String, Result<(), String>) {
    let top = eff(5, max_n);
    let params = format!("n<={top},m<=6");
    for n in 1..=top {
        for m in 1..=6u32 {
            for v in enumerate_permutations(n) {
                let via_gamma: BTreeSet<Vec<u32>> =
                    compatible_maps(&v, m, Variant::Weak).into_iter().collect();
                let total = (m as u64).pow(n as u32);
                for idx in 0..total {
                    let mut x = Vec::with_capacity(n);
                    let mut rest = idx;
                    for _ in 0..n {
                        x.push((rest % m as u64) as u32 + 1);
                        rest /= m as u64;
                    }
                    let direct = match is_compatible(&x, &v) {
                        Ok(b) => b,
                        Err(e) => return (params, Err(format!("{e:?}"))),
                    };
                    if direct != via_gamma.contains(&x) {
                        return (
                            params,
                            Err(format!(
                                "v={},x={}",
                                format_word(v.letters()),
                                format_word(&x)
                            )),
                        );
                    }
                }
            }
        }
    }
    (params, Ok(()))
}

fn chk_caylerian_at_two(max_n: usize) -> (String, Result<(), String>) {
    let top = eff(7, max_n);
    let params = format!("n<={top}");
    let two = BigInt::from(2);
    for n in 0..=top {
        let pairs = [
            (Variant::Weak, BurgeClass::All, "Mat"),
            (Variant::Strict, BurgeClass::Binary, "BMat"),
        ];
        for (variant, class, name) in pairs {
            let value = caylerian(n, variant).eval(&two);
            let mats = match enumerate_mat(n, class) {
                Ok(m) => m.len(),
                Err(e) => return (params, Err(format!("{e:?}"))),
            };
            if value != BigInt::from(mats) {
                return (params, Err(format!("n={n}: C({name})(2)={value} != {mats}")));
            }
        }
        let a2 = eulerian(n, EulerianMethod::Recursion).eval(&two);
        let pmat = match enumerate_mat(n, BurgeClass::Perm) {
            Ok(m) => m.len(),
            Err(e) => return (params, Err(format!("{e:?}"))),
        };
        if a2 != BigInt::from(pmat) || BigUint::from(pmat) != fubini(n) {
            return (params, Err(format!("n={n}: A(2)={a2}, |PMat|={pmat}")));
        }
        // Cross-route: C_n via the 2^des formula agrees.
        for variant in [Variant::Weak, Variant::Strict] {
            if caylerian(n, variant) != caylerian_via_two_pow(n, variant) {
                return (params, Err(format!("n={n}: two-pow route disagrees")));
            }
        }
    }
    (params, Ok(()))
}

fn chk_two_sided_identity(max_n: usize) -> (String, Result<(), String>) {
    let top = eff(6, max_n);
    let params = format!("n<={top}");
    let one = BigInt::one();
    for n in 0..=top {
        for variant in [Variant::Weak, Variant::Strict] {
            let lhs = two_sided_eulerian(n, variant).shift(&one, &one);
            let rhs = two_sided_caylerian(n, variant);
            if lhs != rhs {
                return (params, Err(format!("n={n} {variant:?}")));
            }
            let via_mats = match two_sided_caylerian_via_matrices(n, variant) {
                Ok(p) => p,
                Err(e) => return (params, Err(format!("{e:?}"))),
            };
            if via_mats != rhs {
                return (params, Err(format!("n={n} {variant:?}: matrix route")));
            }
        }
    }
    (params, Ok(()))
}

/// s^a (1+s)^b t^c (1+t)^d as a Poly2.
fn st_basis(a: u32, b: usize, c: u32, d: usize) -> Poly2 {
    let sp = Poly1::one_plus_t_pow(b);
    let tp = Poly1::one_plus_t_pow(d);
    let mut out = Poly2::zero();
    for (k, ck) in sp.coeffs().iter().enumerate() {
        for (l, cl) in tp.coeffs().iter().enumerate() {
            out.add_term((a + k as u32, c + l as u32), ck * cl);
        }
    }
    out
}

fn pow_poly(base: &Poly1, k: usize) -> Poly1 {
    let mut p = Poly1::one();
    for _ in 0..k {
        p = p.mul(base);
    }
    p
}

fn chk_twohat(max_n: usize) -> (String, Result<(), String>) {
    let top = eff(6, max_n);
    let params = format!("n<={top}");
    let t_minus_one = Poly1::from_i64(&[-1, 1]);
    for n in 1..=top {
        for variant in [Variant::Weak, Variant::Strict] {
            let a = two_sided_eulerian(n, variant);
            let bh = bhat(n, variant);
            // (st)^n A_n((s+1)/s, (t+1)/t) = B-hat, cleared.
            let mut lhs = Poly2::zero();
            for (&(i, j), c) in a.terms() {
                let term = st_basis(
                    n as u32 - i,
                    i as usize,
                    n as u32 - j,
                    j as usize,
                )
                .scale(c);
                lhs = lhs.add(&term);
            }
            if lhs != bh {
                return (params, Err(format!("n={n} {variant:?}: substitution")));
            }
            // C_n(t) = sum_j b_j (t-1)^{n-j}, b_j from B-hat at s=1.
            let marginal = bh.eval_s(&BigInt::one());
            let mut recovered = Poly1::zero();
            for (j, b_j) in marginal.coeffs().iter().enumerate() {
                recovered = recovered.add(&pow_poly(&t_minus_one, n - j).scale(b_j));
            }
            if recovered != caylerian(n, variant) {
                return (params, Err(format!("n={n} {variant:?}: marginal")));
            }
        }
    }
    (params, Ok(()))
}

fn chk_remark_symmetry(max_n: usize) -> (String, Result<(), String>) {
    let top = eff(6, max_n);
    let params = format!("n<={top}");
    let minus_one = BigInt::from(-1);
    let one_minus_t = Poly1::from_i64(&[1, -1]);
    for n in 1..=top {
        let b_strict = two_sided_caylerian(n, Variant::Strict).eval_s(&BigInt::one());
        let lhs = Poly1::monomial(BigInt::one(), 1).mul(&b_strict.shift(&minus_one));
        let b_weak = two_sided_caylerian(n, Variant::Weak).eval_s(&BigInt::one());
        let mut rhs = Poly1::zero();
        for (j, c_j) in b_weak.coeffs().iter().enumerate() {
            let term = pow_poly(&one_minus_t, j)
                .mul(&Poly1::monomial(BigInt::one(), n - j))
                .scale(c_j);
            rhs = rhs.add(&term);
        }
        if lhs != rhs {
            return (params, Err(format!("n={n}")));
        }
    }
    (params, Ok(()))
}

fn chk_figure_one(max_n: usize) -> (String, Result<(), String>) {
    let top = eff(5, max_n);
    let params = format!("n<={top}");
    for n in 1..=top {
        for (variant, table) in [
            (Variant::Weak, &figures::BHAT_WEAK),
            (Variant::Strict, &figures::BHAT_STRICT),
        ] {
            let bh = bhat(n, variant);
            let expected = table[n - 1];
            for i in 0..=n as u32 {
                for j in 0..=n as u32 {
                    let want = if i >= 1 && j >= 1 {
                        BigInt::from(expected[(i - 1) as usize][(j - 1) as usize])
                    } else {
                        BigInt::zero()
                    };
                    if bh.coeff(i, j) != want {
                        return (
                            params,
                            Err(format!("n={n} {variant:?} entry ({i},{j})")),
                        );
                    }
                }
            }
        }
    }
    (params, Ok(()))
}

fn chk_oneplust_des(max_n: usize) -> (String, Result<(), String>) {
    let top = eff(6, max_n);
    let params = format!("n<={top}");
    for n in 1..=top {
        for v in enumerate_cayley(n) {
            for (variant, stat) in [
                (Variant::Weak, des(v.letters())),
                (Variant::Strict, caylerian_core::cayley::sdes(v.letters())),
            ] {
                let lhs = Poly1::one_plus_t_pow(stat);
                let mut rhs = Poly1::zero();
                for u in wi_of(&v, variant) {
                    rhs.add_term(BigInt::one(), n - WeaklyIncreasingWord::max(&u) as usize);
                }
                if lhs != rhs {
                    return (
                        params,
                        Err(format!("v={} {variant:?}", format_word(v.letters()))),
                    );
                }
            }
        }
    }
    (params, Ok(()))
}

fn chk_basis_or_wi(max_n: usize) -> (String, Result<(), String>) {
    let top = eff(6, max_n);
    let params = format!("n<={top}");
    for n in 1..=top {
        for v in enumerate_permutations(n) {
            let basis = match fishburn_basis(&v) {
                Ok(b) => b,
                Err(e) => return (params, Err(format!("{e:?}"))),
            };
            let mut lhs = Poly1::zero();
            for x in &basis {
                lhs.add_term(BigInt::one(), n - CayleyWord::max(x) as usize);
            }
            let mut rhs = Poly1::zero();
            for u in wi_of(&v, Variant::Weak) {
                rhs.add_term(BigInt::one(), n - WeaklyIncreasingWord::max(&u) as usize);
            }
            if lhs != rhs {
                return (params, Err(format!("v={}", format_word(v.letters()))));
            }
        }
    }
    (params, Ok(()))
}

fn chk_oneplus_square(max_n: usize) -> (String, Result<(), String>) {
    let top = eff(5, max_n);
    let params = format!("n<={top}");
    for n in 1..=top {
        for p in enumerate_permutations(n) {
            let inv = p.inverse().expect("permutation");
            let lhs = st_basis(0, des(p.letters()), 0, des(inv.letters()));
            let mut rhs = Poly2::zero();
            let basis = match fishburn_basis(&inv) {
                Ok(b) => b,
                Err(e) => return (params, Err(format!("{e:?}"))),
            };
            for x in &basis {
                let tx = (n - CayleyWord::max(x) as usize) as u32;
                for u in wi_of(x, Variant::Weak) {
                    rhs.add_term(((n - WeaklyIncreasingWord::max(&u) as usize) as u32, tx), BigInt::one());
                }
            }
            if lhs != rhs {
                return (params, Err(format!("p={}", format_word(p.letters()))));
            }
        }
    }
    (params, Ok(()))
}

fn chk_gamma_reconstruction(max_n: usize) -> (String, Result<(), String>) {
    let top = eff(7, max_n);
    let params = format!("n<={top}");
    for n in 1..=top {
        let a_uni = eulerian(n, EulerianMethod::Recursion);
        let gv = match gamma_vector(&a_uni, n) {
            Ok(g) => g,
            Err(e) => return (params, Err(format!("n={n} univariate: {e:?}"))),
        };
        if gv.expand() != a_uni {
            return (params, Err(format!("n={n}: univariate reconstruction")));
        }
        let a_two = two_sided_eulerian(n, Variant::Weak);
        let table = match gamma_two_sided(&a_two, n) {
            Ok(t) => t,
            Err(e) => return (params, Err(format!("n={n} two-sided: {e:?}"))),
        };
        if !table.is_nonnegative_integral() {
            return (params, Err(format!("n={n}: negative or fractional gamma")));
        }
        match table.expand() {
            Ok(p) if p == a_two => {}
            _ => return (params, Err(format!("n={n}: two-sided reconstruction"))),
        }
    }
    (params, Ok(()))
}

fn chk_gamma_prime_relation(max_n: usize) -> (String, Result<(), String>) {
    let top = eff(6, max_n);
    let params = format!("n<={top}");
    for n in 1..=top {
        let weak = match gamma_two_sided(&two_sided_eulerian(n, Variant::Weak), n) {
            Ok(t) => t,
            Err(e) => return (params, Err(format!("{e:?}"))),
        };
        let strict = match gamma_two_sided(&two_sided_eulerian(n, Variant::Strict), n) {
            Ok(t) => t,
            Err(e) => return (params, Err(format!("{e:?}"))),
        };
        for i in 0..n as u32 {
            for j in 0..n as u32 {
                if (j + 2 * i) as usize > n - 1 {
                    continue;
                }
                let mirror = (n - 1) as u32 - j - 2 * i;
                if strict.entry(i, j) != weak.entry(i, mirror) {
                    return (params, Err(format!("n={n} entry ({i},{j})")));
                }
            }
        }
    }
    (params, Ok(()))
}

fn chk_gamma_a5_table(max_n: usize) -> (String, Result<(), String>) {
    let params = if max_n >= 5 { "n=5" } else { "skipped (needs n>=5)" }.to_string();
    if max_n < 5 {
        return (params, Ok(()));
    }
    let table = match gamma_two_sided(&two_sided_eulerian(5, Variant::Weak), 5) {
        Ok(t) => t,
        Err(e) => return (params, Err(format!("{e:?}"))),
    };
    let expected: BTreeMap<(u32, u32), BigRational> = figures::A5_GAMMA_TABLE
        .iter()
        .map(|&(i, j, c)| ((i, j), BigRational::from_integer(BigInt::from(c))))
        .collect();
    for i in 0..5u32 {
        for j in 0..5u32 {
            if (j + 2 * i) > 4 {
                continue;
            }
            let want = expected.get(&(i, j)).cloned().unwrap_or_else(BigRational::zero);
            if table.entry(i, j) != want {
                return (params, Err(format!("entry ({i},{j})")));
            }
        }
    }
    (params, Ok(()))
}

fn chk_series_carlitz(max_n: usize) -> (String, Result<(), String>) {
    let top = eff(6, max_n);
    let params = format!("n<={top},m<=8");
    for n in 0..=top {
        let coeffs = carlitz_coeffs(n, 8);
        for m in 1..=8usize {
            let expected = BigInt::from(m).pow(n as u32);
            if coeffs[m - 1] != expected {
                return (params, Err(format!("n={n},m={m}: {}", coeffs[m - 1])));
            }
            if worpitzky_check(n, m) != expected {
                return (params, Err(format!("n={n},m={m}: worpitzky")));
            }
        }
    }
    (params, Ok(()))
}

fn chk_series_caylerian(max_n: usize) -> (String, Result<(), String>) {
    let top = eff(5, max_n);
    let params = format!("n<={top},m<=6");
    let cases = [
        (SeriesVariant::Weak, BurgeClass::Binary),
        (SeriesVariant::Strict, BurgeClass::All),
        (SeriesVariant::Perm, BurgeClass::Perm),
    ];
    for n in 0..=top {
        for (variant, class) in cases {
            let coeffs = caylerian_series_coeffs(n, 6, variant);
            for m in 1..=6u32 {
                let count = match enumerate_genbur(n, m, class) {
                    Ok(w) => w.len(),
                    Err(e) => return (params, Err(format!("{e:?}"))),
                };
                if coeffs[(m - 1) as usize] != BigInt::from(count) {
                    return (
                        params,
                        Err(format!(
                            "n={n},m={m},{variant:?}: series {} != |Genbur| {count}",
                            coeffs[(m - 1) as usize]
                        )),
                    );
                }
            }
        }
    }
    (params, Ok(()))
}

fn chk_minus_one_caylerian(max_n: usize) -> (String, Result<(), String>) {
    let top = eff(7, max_n);
    let params = format!("n<={top}");
    let minus_one = BigInt::from(-1);
    for n in 0..=top {
        let weak = caylerian_at_minus_one(n, Variant::Weak);
        if weak != BigInt::from(figures::CAYLERIAN_AT_MINUS_ONE[n]) {
            return (params, Err(format!("n={n}: C(-1)={weak}")));
        }
        if weak != caylerian(n, Variant::Weak).eval(&minus_one) {
            return (params, Err(format!("n={n}: evaluation route")));
        }
        let strict = caylerian_at_minus_one(n, Variant::Strict);
        let expected = if n == 0 {
            BigInt::one()
        } else if n % 2 == 1 {
            weak.clone()
        } else {
            -weak.clone()
        };
        if strict != expected {
            return (params, Err(format!("n={n}: C°(-1)={strict}")));
        }
    }
    (params, Ok(()))
}

fn chk_minus_one_eulerian(max_n: usize) -> (String, Result<(), String>) {
    let top = eff(9, max_n);
    let params = format!("n<={top}");
    for n in 0..=top {
        let value = eulerian_at_minus_one(n);
        let expected = if n == 0 {
            BigInt::one()
        } else if n % 2 == 0 {
            BigInt::zero()
        } else {
            let e = big(&euler_number(n));
            if ((n - 1) / 2) % 2 == 0 {
                e
            } else {
                -e
            }
        };
        if value != expected {
            return (params, Err(format!("n={n}: A(-1)={value} != {expected}")));
        }
        if value != eulerian(n, EulerianMethod::Recursion).eval(&BigInt::from(-1)) {
            return (params, Err(format!("n={n}: evaluation route")));
        }
        if BigInt::from(figures::EULER_NUMBERS[n]) != big(&euler_number(n)) {
            return (params, Err(format!("n={n}: Seidel table")));
        }
    }
    (params, Ok(()))
}

fn subsets(n: usize) -> Vec<Vec<usize>> {
    // All subsets of [n-1] = {1..n-1}.
    let k = n.saturating_sub(1);
    let mut out = Vec::with_capacity(1 << k);
    for mask in 0u32..(1 << k) {
        let mut s = Vec::new();
        for i in 1..=k {
            if mask & (1 << (i - 1)) != 0 {
                s.push(i);
            }
        }
        out.push(s);
    }
    out
}

fn chk_eta_lemma(max_n: usize) -> (String, Result<(), String>) {
    let top = eff(6, max_n);
    let params = format!("n<={top}");
    for n in 1..=top {
        let words: Vec<CayleyWord> = enumerate_cayley(n).collect();
        for s in subsets(n) {
            let spec = IndexSet::new(s.clone(), n).expect("subset of [n-1]");
            let eta_s = eta(&spec);
            for v in &words {
                let b = Biword::tight(eta_s.letters().to_vec(), v.letters().to_vec())
                    .expect("eta top is valid");
                let flags = b.classify();
                let sasc_in = sasc_set(v.letters()).is_subset_of(&spec);
                let asc_in = asc_set(v.letters()).is_subset_of(&spec);
                if sasc_in != flags.in_bur || asc_in != flags.in_bbur {
                    return (
                        params,
                        Err(format!("S={s:?}, v={}", format_word(v.letters()))),
                    );
                }
            }
        }
    }
    (params, Ok(()))
}

fn chk_theorem_mats(max_n: usize) -> (String, Result<(), String>) {
    let top = eff(6, max_n);
    let params = format!("n<={top}");
    for n in 1..=top {
        for s in subsets(n) {
            let spec = match AscentSpec::new(s.clone(), n) {
                Ok(sp) => sp,
                Err(e) => return (params, Err(format!("{e:?}"))),
            };
            let cases = [
                (BurgeClass::All, kappa_general(n, &s, Variant::Strict)),
                (BurgeClass::Binary, kappa_general(n, &s, Variant::Weak)),
                (BurgeClass::Perm, alpha(&spec)),
            ];
            for (class, count) in cases {
                let mats = match enumerate_mat_s(&spec, class) {
                    Ok(m) => m.len(),
                    Err(e) => return (params, Err(format!("{e:?}"))),
                };
                if count != BigUint::from(mats) {
                    return (
                        params,
                        Err(format!("n={n},S={s:?},{class:?}: {count} != {mats}")),
                    );
                }
            }
        }
    }
    (params, Ok(()))
}

fn chk_summation(max_n: usize) -> (String, Result<(), String>) {
    let top = eff(6, max_n);
    let params = format!("n<={top}");
    for n in 1..=top {
        // Precompute (Asc(v), Des(v), des(v^{-1})) over Sym[n].
        let perms: Vec<(IndexSet, IndexSet, usize)> = enumerate_permutations(n)
            .map(|v| {
                let inv = v.inverse().expect("permutation");
                (
                    asc_set(v.letters()),
                    des_set(v.letters()),
                    des(inv.letters()),
                )
            })
            .collect();
        for s in subsets(n) {
            let spec = IndexSet::new(s.clone(), n).expect("subset");
            let mut strict_sum = BigUint::zero();
            let mut weak_sum = BigUint::zero();
            for (asc_v, des_v, d_inv) in &perms {
                if asc_v.is_subset_of(&spec) {
                    strict_sum += pow2(*d_inv);
                }
                if des_v.is_subset_of(&spec) {
                    weak_sum += pow2(*d_inv);
                }
            }
            if kappa_general(n, &s, Variant::Strict) != strict_sum
                || kappa_general(n, &s, Variant::Weak) != weak_sum
            {
                return (params, Err(format!("n={n},S={s:?}")));
            }
        }
    }
    (params, Ok(()))
}

fn chk_conjectured_values(max_n: usize) -> (String, Result<(), String>) {
    let bound = eff(8, max_n.saturating_add(3));
    let params = format!("n+max(S)<={bound}");
    for (members, k, coeffs) in figures::KAPPA_CONJECTURES {
        let expected: Vec<BigRational> = coeffs
            .iter()
            .map(|&(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
            .collect();
        let degree = expected.len() - 1;
        let mut points: Vec<(i64, BigRational)> = Vec::new();
        let mut i = 0usize;
        while k + i <= bound {
            let value = kappa_general(k + i, members, Variant::Weak);
            points.push((i as i64, BigRational::from_integer(big(&value))));
            i += 1;
        }
        if points.len() < degree + 2 {
            continue; // window too small for this S at the requested max_n
        }
        let report = match fit_polynomial(&points, degree) {
            Ok(r) => r,
            Err(e) => return (params, Err(format!("S={members:?}: {e:?}"))),
        };
        if !report.degree_ok {
            return (params, Err(format!("S={members:?}: degree mismatch")));
        }
        let got = report.polynomial.expect("degree_ok implies interpolant");
        if got.coeffs() != expected.as_slice() {
            return (params, Err(format!("S={members:?}: coefficients differ")));
        }
    }
    // kappa°_n(empty) = 2^{n-1}.
    for n in 1..=bound {
        if kappa_general(n, &[], Variant::Strict) != pow2(n - 1) {
            return (params, Err(format!("kappa°_{n}(∅) != 2^(n-1)")));
        }
    }
    (params, Ok(()))
}

fn chk_beta_determinant(max_n: usize) -> (String, Result<(), String>) {
    let top = eff(7, max_n);
    let params = format!("n<={top}");
    for n in 1..=top {
        for s in subsets(n) {
            let spec = match AscentSpec::new(s.clone(), n) {
                Ok(sp) => sp,
                Err(e) => return (params, Err(format!("{e:?}"))),
            };
            let exact = beta_exact(&spec);
            let brute = big(&beta_brute_force(&spec));
            if exact != brute {
                return (params, Err(format!("n={n},S={s:?}: {exact} != {brute}")));
            }
        }
    }
    (params, Ok(()))
}

/// Sanity for the max-statistic polynomial: equals A_n(1+t).
fn chk_max_stat(max_n: usize) -> (String, Result<(), String>) {
    let top = eff(7, max_n);
    let params = format!("n<={top}");
    for n in 0..=top {
        let lhs = max_statistic_poly(n);
        let rhs = eulerian(n, EulerianMethod::Recursion).shift(&BigInt::one());
        if lhs != rhs {
            return (params, Err(format!("n={n}")));
        }
        // Evaluated at t = 1 this is |Cay[n]|.
        if lhs.eval(&BigInt::one()) != big(&fubini(n)) {
            return (params, Err(format!("n={n}: |Cay[n]|")));
        }
    }
    (params, Ok(()))
}

/// The complete registry, in canonical emission order.
pub fn registry() -> Vec<CheckDef> {
    let defs = vec![
        CheckDef { id: "symmetries.reverse_complement", suite: "symmetries", run: chk_reverse_complement },
        CheckDef { id: "symmetries.conjugation", suite: "symmetries", run: chk_conjugation },
        CheckDef { id: "symmetries.counts", suite: "symmetries", run: chk_counts },
        CheckDef { id: "symmetries.lex_order", suite: "symmetries", run: chk_lex_order },
        CheckDef { id: "transpose.characterization", suite: "transpose", run: chk_transpose_characterization },
        CheckDef { id: "transpose.pbur_cayley", suite: "transpose", run: chk_pbur_cayley },
        CheckDef { id: "phi.burge_roundtrip", suite: "phi", run: chk_phi_burge_roundtrip },
        CheckDef { id: "phi.genmat_roundtrip", suite: "phi", run: chk_genmat_roundtrip },
        CheckDef { id: "basis.characterization", suite: "basis", run: chk_basis_characterization },
        CheckDef { id: "basis.descent_sum", suite: "basis", run: chk_basis_descent_sum },
        CheckDef { id: "polynomials.caylerian_at_two", suite: "polynomials", run: chk_caylerian_at_two },
        CheckDef { id: "polynomials.oneplust_des", suite: "polynomials", run: chk_oneplust_des },
        CheckDef { id: "polynomials.basis_or_wi", suite: "polynomials", run: chk_basis_or_wi },
        CheckDef { id: "polynomials.max_stat", suite: "polynomials", run: chk_max_stat },
        CheckDef { id: "two_sided.identity", suite: "two_sided", run: chk_two_sided_identity },
        CheckDef { id: "two_sided.twohat", suite: "two_sided", run: chk_twohat },
        CheckDef { id: "two_sided.remark_symmetry", suite: "two_sided", run: chk_remark_symmetry },
        CheckDef { id: "two_sided.oneplus_square", suite: "two_sided", run: chk_oneplus_square },
        CheckDef { id: "two_sided.figure_one", suite: "two_sided", run: chk_figure_one },
        CheckDef { id: "gamma.reconstruction", suite: "gamma", run: chk_gamma_reconstruction },
        CheckDef { id: "gamma.prime_relation", suite: "gamma", run: chk_gamma_prime_relation },
        CheckDef { id: "gamma.a5_table", suite: "gamma", run: chk_gamma_a5_table },
        CheckDef { id: "series.carlitz", suite: "series", run: chk_series_carlitz },
        CheckDef { id: "series.caylerian_genbur", suite: "series", run: chk_series_caylerian },
        CheckDef { id: "compatible.partition", suite: "compatible", run: chk_compatible_partition },
        CheckDef { id: "compatible.fishburn_basis", suite: "compatible", run: chk_fishburn_compatible },
        CheckDef { id: "compatible.genbur_union", suite: "compatible", run: chk_genbur_union },
        CheckDef { id: "compatible.definition_equivalence", suite: "compatible", run: chk_definition_equivalence },
        CheckDef { id: "compatible.count_formula", suite: "compatible", run: chk_count_formula },
        CheckDef { id: "prescribed.eta_lemma", suite: "prescribed", run: chk_eta_lemma },
        CheckDef { id: "prescribed.theorem_mats", suite: "prescribed", run: chk_theorem_mats },
        CheckDef { id: "prescribed.summation", suite: "prescribed", run: chk_summation },
        CheckDef { id: "prescribed.conjectured_values", suite: "prescribed", run: chk_conjectured_values },
        CheckDef { id: "prescribed.beta_determinant", suite: "prescribed", run: chk_beta_determinant },
        CheckDef { id: "minus_one.caylerian", suite: "minus_one", run: chk_minus_one_caylerian },
        CheckDef { id: "minus_one.eulerian", suite: "minus_one", run: chk_minus_one_eulerian },
    ];
    // Startup assertions: unique ids, known suites, bullet map consistent.
    let mut ids = BTreeSet::new();
    let suites: BTreeSet<&str> = SUITES.iter().copied().collect();
    for d in &defs {
        assert!(ids.insert(d.id), "duplicate check id {}", d.id);
        assert!(suites.contains(d.suite), "unknown suite {}", d.suite);
    }
    for (bullet, id) in MODULE_BULLETS {
        assert!(ids.contains(id), "bullet '{bullet}' maps to unknown check {id}");
    }
    defs
}

fn chk_count_formula(max_n: usize) -> (String, Result<(), String>) {
    let top = eff(5, max_n);
    let params = format!("n<={top},m<=7");
    for n in 1..=top {
        for v in enumerate_cayley(n) {
            for m in 1..=7u32 {
                for variant in [Variant::Weak, Variant::Strict] {
                    let listed = compatible_maps(&v, m, variant).len();
                    let formula = compatible_count_formula(&v, m, variant);
                    if BigUint::from(listed) != formula {
                        return (
                            params,
                            Err(format!(
                                "v={},m={m},{variant:?}: {listed} != {formula}",
                                format_word(v.letters())
                            )),
                        );
                    }
                }
            }
        }
    }
    (params, Ok(()))
}

/// Run the selected suites up to max_n. `suites` may contain "all".
pub fn run_suite(max_n: usize, suites: &[String]) -> Result<Vec<CheckResult>, String> {
    let known: BTreeSet<&str> = SUITES.iter().copied().collect();
    for s in suites {
        if s != "all" && !known.contains(s.as_str()) {
            return Err(format!("unknown suite id: {s}"));
        }
    }
    let take_all = suites.is_empty() || suites.iter().any(|s| s == "all");
    let selected: Vec<CheckDef> = registry()
        .into_iter()
        .filter(|d| take_all || suites.iter().any(|s| s == d.suite))
        .collect();
    let mut indexed: Vec<(usize, CheckResult)> = selected
        .par_iter()
        .enumerate()
        .map(|(idx, d)| {
            let start = Instant::now();
            let (params, outcome) = (d.run)(max_n);
            let ms = start.elapsed().as_millis();
            let result = CheckResult {
                id: d.id,
                params,
                status: outcome.is_ok(),
                witness: outcome.err(),
                ms,
            };
            (idx, result)
        })
        .collect();
    indexed.sort_by_key(|(idx, _)| *idx);
    Ok(indexed.into_iter().map(|(_, r)| r).collect())
}

/// The JSON report for a run.
pub fn report_json(results: &[CheckResult]) -> Value {
    let checks: Vec<Value> = results
        .iter()
        .map(|r| {
            json!({
                "id": r.id,
                "params": r.params,
                "status": if r.status { "pass" } else { "fail" },
                "witness": r.witness,
                "ms": r.ms as u64,
            })
        })
        .collect();
    let pass = results.iter().filter(|r| r.status).count();
    let fail = results.len() - pass;
    json!({"checks": checks, "summary": {"pass": pass, "fail": fail}})
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_exhaustive_over_module_bullets() {
        let defs = registry();
        let ids: BTreeSet<&str> = defs.iter().map(|d| d.id).collect();
        let mut bullet_ids = BTreeSet::new();
        for (_, id) in MODULE_BULLETS {
            assert!(ids.contains(id), "missing check for bullet id {id}");
            assert!(bullet_ids.insert(*id), "bullet id {id} mapped twice");
        }
        for d in &defs {
            assert!(SUITES.contains(&d.suite));
        }
    }

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(run_suite(1, &["nonsense".to_string()]).is_err());
    }

    #[test]
    fn max_n_zero_passes_vacuously() {
        let results = run_suite(0, &["all".to_string()]).expect("runs");
        assert!(results.iter().all(|r| r.status), "max_n=0 must pass");
    }

    #[test]
    fn small_run_passes() {
        let results = run_suite(3, &[]).expect("runs");
        for r in &results {
            assert!(r.status, "{} failed: {:?}", r.id, r.witness);
        }
        assert_eq!(results.len(), registry().len());
    }
}
