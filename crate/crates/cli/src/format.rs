//! Stable serializations for polynomials, matrices, and fit reports.
//!
//! All JSON is emitted through `serde_json::Value` with map keys in
//! sorted order, so output for fixed inputs is byte-identical across
//! runs. Coefficients render as JSON numbers when they fit in i64 and
//! as decimal strings otherwise, keeping the output exact in all cases.

use caylerian_core::polynomials::{Poly1, Poly2};
use caylerian_core::prescribed::FitReport;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Value};

/// A BigInt as a JSON number when it fits in i64, else a decimal string.
pub fn bigint_value(x: &BigInt) -> Value {
    match i64::try_from(x.clone()) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

/// A rational as "p" for integers and "p/q" otherwise.
pub fn rational_string(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// {"coeffs": [...], "var": "t"}.
pub fn poly1_json(p: &Poly1) -> Value {
    json!({
        "var": "t",
        "coeffs": p.coeffs().iter().map(bigint_value).collect::<Vec<_>>(),
    })
}

/// Bare coefficient list, e.g. `[1,64,276,184,16]`.
pub fn poly1_line(p: &Poly1) -> String {
    let parts: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(","))
}

/// {"terms": [[i, j, c], ...], "vars": ["s", "t"]} with terms in
/// lexicographic (i, j) order.
pub fn poly2_json(p: &Poly2) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(&(i, j), c)| json!([i, j, bigint_value(c)]))
        .collect();
    json!({"vars": ["s", "t"], "terms": terms})
}

/// CSV table of coefficients: row i holds the coefficients of s^i t^j
/// for j = 0..=bound.
pub fn poly2_csv(p: &Poly2, bound: u32) -> String {
    let mut out = String::new();
    for row in p.coeff_matrix(bound) {
        let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// An integer matrix as a JSON array of row arrays.
pub fn matrix_json(rows: &[Vec<u64>]) -> Value {
    json!(rows)
}

/// One-line rendering of an integer matrix, e.g. `[[1,0],[0,2]]`.
pub fn matrix_line(rows: &[Vec<u64>]) -> String {
    let parts: Vec<String> = rows
        .iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(u64::to_string).collect();
            format!("[{}]", cells.join(","))
        })
        .collect();
    format!("[{}]", parts.join(","))
}

/// The fit report for κ_{n+k}(S) sampling, with exact rational entries.
pub fn fit_report_json(
    s_members: &[usize],
    k: usize,
    samples: &[(i64, BigInt)],
    report: &FitReport,
) -> Value {
    let differences: Vec<Vec<String>> = report
        .differences
        .iter()
        .map(|row| row.iter().map(rational_string).collect())
        .collect();
    let polynomial = report.polynomial.as_ref().map(|p| {
        json!({
            "coeffs": p.coeffs().iter().map(rational_string).collect::<Vec<_>>(),
        })
    });
    json!({
        "S": s_members,
        "k": k,
        "samples": samples
            .iter()
            .map(|(n, v)| json!([n, bigint_value(v)]))
            .collect::<Vec<_>>(),
        "differences": differences,
        "polynomial": polynomial.unwrap_or(Value::Null),
        "degree_ok": report.degree_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn bigint_value_large_becomes_string() {
        let big: BigInt = BigInt::from(i64::MAX) * 2;
        assert_eq!(bigint_value(&big), json!(big.to_string()));
        assert_eq!(bigint_value(&BigInt::from(-7)), json!(-7));
    }

    #[test]
    fn poly1_line_matches_expected_shape() {
        let p = Poly1::from_i64(&[1, 64, 276, 184, 16]);
        assert_eq!(poly1_line(&p), "[1,64,276,184,16]");
        assert_eq!(poly1_line(&Poly1::zero()), "[]");
    }

    #[test]
    fn rational_strings() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(rational_string(&half), "1/2");
        assert_eq!(rational_string(&BigRational::zero()), "0");
    }
}
