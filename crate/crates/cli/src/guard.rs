//! Resource guard for enumeration commands.
//!
//! Defaults: word length n ≤ 8 for enumerations, and m·n ≤ 40 for the
//! generalized (m-bounded) families. The n bound can be changed with
//! the `CAYLERIAN_MAX_N` environment variable; `--force` bypasses the
//! guard entirely. A refusal maps to exit code 3.

use std::env;

pub const DEFAULT_MAX_N: usize = 8;
pub const MAX_MN_PRODUCT: usize = 40;
pub const ENV_MAX_N: &str = "CAYLERIAN_MAX_N";

/// The effective n bound: `CAYLERIAN_MAX_N` when set and parseable,
/// otherwise [`DEFAULT_MAX_N`].
pub fn max_n_limit() -> usize {
    env::var(ENV_MAX_N)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_N)
}

/// Check an enumeration request of word length `n`, with an optional
/// m·n product for the m-bounded families. Returns a refusal message
/// for the caller to print before exiting with code 3.
pub fn check(n: usize, mn_product: Option<usize>, force: bool) -> Result<(), String> {
    if force {
        return Ok(());
    }
    let limit = max_n_limit();
    if n > limit {
        return Err(format!(
            "refusing n = {n} (guard: n <= {limit}; raise with {ENV_MAX_N} or pass --force)"
        ));
    }
    if let Some(mn) = mn_product {
        if mn > MAX_MN_PRODUCT {
            return Err(format!(
                "refusing m*n = {mn} (guard: m*n <= {MAX_MN_PRODUCT}; pass --force to override)"
            ));
        }
    }
    Ok(())
}
