//! Burge structures with empty rows allowed: matrices with a fixed
//! number m of rows, the corresponding biwords with a declared top
//! bound, compatible maps, and the stars-and-bars bijection behind
//! their count.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::burge::{transpose_rows, Biword, BurgeClass};
use crate::cayley::{asc, asc_set, des_set, is_cayley, sasc, sasc_set, CayleyWord,
    WeaklyIncreasingWord};
use crate::cayley::{enumerate_cayley, enumerate_permutations};
use crate::{Error, Result};

/// A matrix with a fixed number of rows, every column nonzero, rows
/// possibly all-zero.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RowCountMatrix {
    rows: Vec<Vec<u64>>,
}

impl RowCountMatrix {
    pub fn new(rows: Vec<Vec<u64>>) -> Result<Self> {
        let c = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != c) {
            return Err(Error::InvalidMatrix);
        }
        for j in 0..c {
            if rows.iter().all(|r| r[j] == 0) {
                return Err(Error::InvalidMatrix);
            }
        }
        Ok(RowCountMatrix { rows })
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    pub fn size(&self) -> u64 {
        self.rows.iter().flatten().sum()
    }

    pub fn is_binary(&self) -> bool {
        self.rows.iter().flatten().all(|&x| x <= 1)
    }

    pub fn is_column_sums_one(&self) -> bool {
        (0..self.col_count()).all(|j| self.rows.iter().map(|r| r[j]).sum::<u64>() == 1)
    }
}

/// Column listing of a matrix with m rows; the top row may skip values.
pub fn matrix_to_biword_m(a: &RowCountMatrix) -> Biword {
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    for (i, row) in a.rows().iter().enumerate() {
        for (j, &count) in row.iter().enumerate().rev() {
            for _ in 0..count {
                top.push((i + 1) as u32);
                bottom.push((j + 1) as u32);
            }
        }
    }
    Biword::new(top, bottom, a.row_count() as u32).expect("columns sorted canonically")
}

/// Inverse of [`matrix_to_biword_m`] for a fixed row count m.
pub fn biword_to_matrix_m(b: &Biword, m: usize) -> Result<RowCountMatrix> {
    let max_top = b.top().iter().copied().max().unwrap_or(0) as usize;
    if m < max_top {
        return Err(Error::BoundTooSmall {
            bound: m as u32,
            max: max_top as u32,
        });
    }
    if !is_cayley(b.bottom()) {
        return Err(Error::NotCayley);
    }
    if !des_set(b.top()).is_subset_of(&des_set(b.bottom())) {
        return Err(Error::DescentCondition);
    }
    let c = b.bottom().iter().copied().max().unwrap_or(0) as usize;
    let mut rows = vec![vec![0u64; c]; m];
    for (&i, &j) in b.top().iter().zip(b.bottom()) {
        rows[(i - 1) as usize][(j - 1) as usize] += 1;
    }
    RowCountMatrix::new(rows)
}

/// All weakly increasing maps [n] -> [m] whose descent set is inside
/// Des(v) (weak) or the strict descents of v (strict), lexicographic.
pub fn wigen(v: &CayleyWord, m: u32, variant: crate::burge::Variant) -> Vec<WeaklyIncreasingWord> {
    let n = v.len();
    let rises = match variant {
        crate::burge::Variant::Weak => sasc_set(v.letters()),
        crate::burge::Variant::Strict => asc_set(v.letters()),
    };
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    fn go(
        i: usize,
        n: usize,
        m: u32,
        rises: &crate::cayley::IndexSet,
        current: &mut Vec<u32>,
        out: &mut Vec<WeaklyIncreasingWord>,
    ) {
        if i == n {
            out.push(
                WeaklyIncreasingWord::new(current.clone(), m).expect("bounded increasing word"),
            );
            return;
        }
        let lo = if i == 0 {
            1
        } else {
            current[i - 1] + u32::from(rises.contains(i))
        };
        for letter in lo..=m {
            current.push(letter);
            go(i + 1, n, m, rises, current, out);
            current.pop();
        }
    }
    if n == 0 {
        out.push(WeaklyIncreasingWord::new(vec![], m).expect("empty word"));
    } else {
        go(0, n, m, &rises, &mut current, &mut out);
    }
    out
}

/// Enumerate Genbur_m[n] (or its binary/permutation restriction),
/// sorted lexicographically by (top, bottom).
pub fn enumerate_genbur(n: usize, m: u32, class: BurgeClass) -> Result<Vec<Biword>> {
    let variant = match class {
        BurgeClass::All | BurgeClass::Perm => crate::burge::Variant::Weak,
        BurgeClass::Binary => crate::burge::Variant::Strict,
        BurgeClass::Omega => return Err(Error::NoMatrixForm),
    };
    let mut out = Vec::new();
    let bottoms: Vec<CayleyWord> = if class == BurgeClass::Perm {
        enumerate_permutations(n).collect()
    } else {
        enumerate_cayley(n).collect()
    };
    for v in bottoms {
        for u in wigen(&v, m, variant) {
            out.push(Biword::new(u.letters().to_vec(), v.letters().to_vec(), m)?);
        }
    }
    out.sort();
    Ok(out)
}

/// Enumerate Genmat_m[n] (or its binary/column-sums-one restriction)
/// directly, cell by cell.
pub fn enumerate_genmat(n: usize, m: usize, class: BurgeClass) -> Result<Vec<RowCountMatrix>> {
    if class == BurgeClass::Omega {
        return Err(Error::NoMatrixForm);
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(RowCountMatrix {
            rows: vec![Vec::new(); m],
        });
        return Ok(out);
    }
    for c in 1..=n {
        let mut rows = vec![vec![0u64; c]; m];
        let mut col_sums = vec![0u64; c];
        fill(n as u64, m, c, 0, class, &mut rows, &mut col_sums, &mut out);
    }
    out.sort();
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn fill(
    remaining: u64,
    m: usize,
    c: usize,
    cell: usize,
    class: BurgeClass,
    rows: &mut Vec<Vec<u64>>,
    col_sums: &mut Vec<u64>,
    out: &mut Vec<RowCountMatrix>,
) {
    if cell == m * c {
        if remaining == 0 && col_sums.iter().all(|&s| s > 0) {
            out.push(RowCountMatrix { rows: rows.clone() });
        }
        return;
    }
    let (i, j) = (cell / c, cell % c);
    let mut cap = remaining;
    if matches!(class, BurgeClass::Binary | BurgeClass::Perm) {
        cap = cap.min(1);
    }
    if class == BurgeClass::Perm {
        cap = cap.min(1 - col_sums[j].min(1));
    }
    for e in 0..=cap {
        if i == m - 1 && col_sums[j] + e == 0 {
            continue;
        }
        rows[i][j] = e;
        col_sums[j] += e;
        fill(remaining - e, m, c, cell + 1, class, rows, col_sums, out);
        col_sums[j] -= e;
        rows[i][j] = 0;
    }
}

/// v-compatible maps [n] -> [m]: the images of the biwords (u, v) with
/// u ranging over [`wigen`] under the bottom row of the Burge transpose.
pub fn compatible_maps(v: &CayleyWord, m: u32, variant: crate::burge::Variant) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = wigen(v, m, variant)
        .iter()
        .map(|u| {
            transpose_rows(u.letters(), v.letters())
                .expect("wigen output satisfies the descent condition")
                .1
        })
        .collect();
    out.sort();
    out
}

/// Direct membership test from the order-theoretic definition; only
/// meaningful for permutations.
pub fn is_compatible(x: &[u32], v: &CayleyWord) -> Result<bool> {
    if !v.is_permutation() {
        return Err(Error::NotPermutation);
    }
    if x.len() != v.len() {
        return Err(Error::LengthMismatch);
    }
    let ascents = asc_set(v.letters());
    for i in 1..v.len() {
        let a = x[(v.letters()[i - 1] - 1) as usize];
        let b = x[(v.letters()[i] - 1) as usize];
        if a > b {
            return Ok(false);
        }
        if a == b && ascents.contains(i) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// multichoose(a, b) = binom(a+b-1, b); zero when a <= 0 and b > 0.
pub fn multichoose(a: i64, b: u64) -> BigUint {
    if b == 0 {
        return BigUint::one();
    }
    if a <= 0 {
        return BigUint::zero();
    }
    binomial((a as u64) + b - 1, b)
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Size of the compatible-map set from the multichoose formula, without
/// enumeration.
pub fn compatible_count_formula(v: &CayleyWord, m: u32, variant: crate::burge::Variant) -> BigUint {
    let a = match variant {
        crate::burge::Variant::Weak => sasc(v.letters()),
        crate::burge::Variant::Strict => asc(v.letters()),
    };
    multichoose(m as i64 - a as i64, v.len() as u64)
}

/// A string over stars and bars, encoding a bounded weakly increasing
/// map relative to a bottom word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarsBars {
    /// true = star, false = bar.
    symbols: Vec<bool>,
}

impl StarsBars {
    pub fn new(symbols: Vec<bool>) -> Self {
        StarsBars { symbols }
    }

    pub fn symbols(&self) -> &[bool] {
        &self.symbols
    }

    pub fn stars(&self) -> usize {
        self.symbols.iter().filter(|&&s| s).count()
    }

    pub fn bars(&self) -> usize {
        self.symbols.len() - self.stars()
    }

    pub fn parse(s: &str) -> Result<Self> {
        let mut symbols = Vec::with_capacity(s.len());
        for ch in s.chars() {
            match ch {
                '*' => symbols.push(true),
                '|' => symbols.push(false),
                _ => return Err(Error::StarsBarsMismatch),
            }
        }
        Ok(StarsBars { symbols })
    }
}

impl fmt::Display for StarsBars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.symbols {
            f.write_str(if s { "*" } else { "|" })?;
        }
        Ok(())
    }
}

/// Number of strict ascents of v strictly before each position (the
/// a_i of the stars-and-bars bijection).
fn ascent_prefix(v: &CayleyWord) -> Vec<u32> {
    let sa = sasc_set(v.letters());
    let mut a = Vec::with_capacity(v.len());
    let mut acc = 0u32;
    for i in 0..v.len() {
        a.push(acc);
        if sa.contains(i + 1) {
            acc += 1;
        }
    }
    a
}

/// Decode a star/bar string into the weakly increasing map u with
/// u(i) = a_i + b_i + 1, where b_i counts bars before the i-th star.
pub fn stars_bars_decode(y: &StarsBars, v: &CayleyWord, m: u32) -> Result<WeaklyIncreasingWord> {
    let n = v.len();
    let a = sasc(v.letters()) as i64;
    let expected_bars = m as i64 - a - 1;
    if y.stars() != n || expected_bars < 0 || y.bars() as i64 != expected_bars {
        return Err(Error::StarsBarsMismatch);
    }
    let prefix = ascent_prefix(v);
    let mut letters = Vec::with_capacity(n);
    let mut bars = 0u32;
    let mut star = 0usize;
    for &s in y.symbols() {
        if s {
            letters.push(prefix[star] + bars + 1);
            star += 1;
        } else {
            bars += 1;
        }
    }
    WeaklyIncreasingWord::new(letters, m)
}

/// Inverse of [`stars_bars_decode`]; the bound of u supplies m.
pub fn stars_bars_encode(u: &WeaklyIncreasingWord, v: &CayleyWord) -> Result<StarsBars> {
    let n = v.len();
    if u.len() != n {
        return Err(Error::LengthMismatch);
    }
    let m = u.bound() as i64;
    let a = sasc(v.letters()) as i64;
    let total_bars = m - a - 1;
    if total_bars < 0 {
        return Err(Error::StarsBarsMismatch);
    }
    let prefix = ascent_prefix(v);
    let mut symbols = Vec::new();
    let mut prev_b = 0i64;
    for i in 0..n {
        let b = u.letters()[i] as i64 - prefix[i] as i64 - 1;
        if b < prev_b || b > total_bars {
            return Err(Error::StarsBarsMismatch);
        }
        for _ in prev_b..b {
            symbols.push(false);
        }
        symbols.push(true);
        prev_b = b;
    }
    for _ in prev_b..total_bars {
        symbols.push(false);
    }
    Ok(StarsBars { symbols })
}
