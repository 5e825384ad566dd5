//! Exact polynomial arithmetic (one and two variables) and the
//! descent polynomial families: Eulerian, Caylerian, two-sided, their
//! gamma expansions, and the series identities they satisfy.

mod families;
mod gamma;
mod poly1;
mod poly2;

pub use families::{
    bhat, carlitz_coeffs, caylerian, caylerian_at_minus_one, caylerian_series_coeffs,
    caylerian_via_two_pow, euler_number, eulerian, eulerian_at_minus_one, max_statistic_poly,
    two_sided_caylerian, two_sided_caylerian_via_matrices, two_sided_eulerian, worpitzky_check,
    EulerianMethod, SeriesVariant,
};
pub use gamma::{gamma_two_sided, gamma_vector, GammaTable, GammaVector};
pub use poly1::Poly1;
pub use poly2::Poly2;

use num_bigint::BigInt;

/// Exact binomial coefficient as a signed big integer (zero when k > n).
pub fn binomial_int(n: u64, k: u64) -> BigInt {
    BigInt::from(crate::genburge::binomial(n, k))
}
