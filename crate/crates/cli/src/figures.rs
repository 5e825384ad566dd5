//! Embedded reference tables used as independent oracles by the verify
//! suite and the acceptance tests: the printed coefficient matrices of
//! B-hat (weak and strict) for n = 1..5, the Caylerian coefficient
//! table, and a handful of fixed integer sequences.

/// Coefficient matrices of B̂_n(s,t) for n = 1..5. Entry `[n-1][i-1][j-1]`
/// is the coefficient of s^i t^j (both exponents start at 1; there is no
/// constant term for n ≥ 1).
pub const BHAT_WEAK: [&[&[i64]]; 5] = [
    &[&[1]],
    &[&[1, 1], &[1, 2]],
    &[&[1, 2, 1], &[2, 8, 6], &[1, 6, 6]],
    &[
        &[1, 3, 3, 1],
        &[3, 19, 30, 14],
        &[3, 30, 63, 36],
        &[1, 14, 36, 24],
    ],
    &[
        &[1, 4, 6, 4, 1],
        &[4, 36, 90, 88, 30],
        &[6, 90, 306, 372, 150],
        &[4, 88, 372, 528, 240],
        &[1, 30, 150, 240, 120],
    ],
];

/// Coefficient matrices of B̂°_n(s,t) for n = 1..5, indexed like
/// [`BHAT_WEAK`].
pub const BHAT_STRICT: [&[&[i64]]; 5] = [
    &[&[1]],
    &[&[0, 1], &[1, 2]],
    &[&[0, 0, 1], &[0, 4, 6], &[1, 6, 6]],
    &[
        &[0, 0, 0, 1],
        &[0, 1, 12, 14],
        &[0, 12, 45, 36],
        &[1, 14, 36, 24],
    ],
    &[
        &[0, 0, 0, 0, 1],
        &[0, 0, 6, 32, 30],
        &[0, 6, 90, 228, 150],
        &[0, 32, 228, 432, 240],
        &[1, 30, 150, 240, 120],
    ],
];

/// Coefficients of the weak Caylerian polynomials C_0..C_5.
pub const CAYLERIAN_TABLE: [&[i64]; 6] = [
    &[1],
    &[1],
    &[1, 2],
    &[1, 8, 4],
    &[1, 24, 42, 8],
    &[1, 64, 276, 184, 16],
];

/// C_n(-1) for n = 0..7.
pub const CAYLERIAN_AT_MINUS_ONE: [i64; 8] = [1, 1, -1, -3, 11, 45, -301, -1475];

/// |Cay[n]| (Fubini numbers) for n = 0..8.
pub const FUBINI: [u64; 9] = [1, 1, 3, 13, 75, 541, 4683, 47293, 545835];

/// |Bur[n]| for n = 0..7.
pub const BURGE_COUNTS: [u64; 8] = [1, 1, 5, 33, 281, 2961, 37277, 546193];

/// Euler numbers E_0..E_9 (secant-tangent numbers).
pub const EULER_NUMBERS: [u64; 10] = [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936];

/// The two-sided γ-table of A_5(s,t): entries (i, j, γ_{5,i,j}); all
/// other entries vanish.
pub const A5_GAMMA_TABLE: [(u32, u32, i64); 4] = [(0, 0, 1), (1, 0, 16), (1, 1, 6), (2, 0, 16)];

/// Conjectured closed forms for κ_{n+k}(S): (S, k, coefficients of the
/// polynomial in n as (numerator, denominator) pairs, constant term
/// first).
pub const KAPPA_CONJECTURES: [(&[usize], usize, &[(i64, i64)]); 8] = [
    (&[], 0, &[(1, 1)]),
    (&[1], 1, &[(1, 1), (2, 1)]),
    (&[2], 2, &[(1, 1), (2, 1), (2, 1)]),
    (&[3], 3, &[(1, 1), (8, 3), (2, 1), (4, 3)]),
    (&[1, 2], 2, &[(3, 1), (6, 1), (4, 1)]),
    (&[1, 3], 3, &[(5, 1), (12, 1), (10, 1), (4, 1)]),
    (&[2, 3], 3, &[(5, 1), (12, 1), (10, 1), (4, 1)]),
    (&[1, 2, 3], 3, &[(13, 1), (30, 1), (24, 1), (8, 1)]),
];
