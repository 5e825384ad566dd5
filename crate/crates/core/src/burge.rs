//! Burge matrices, Burge words, the column-listing map between them,
//! the Burge transpose, Fishburn bases, and the classes BMat/PMat,
//! BBur/PBur and Omega.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cayley::{
    complement, des_set, is_cayley, reverse, sdes_set, wi_from_descent_set,
    CayleyWord, IndexSet, WeaklyIncreasingWord,
};
use crate::cayley::{conjugate, enumerate_cayley, enumerate_permutations, format_word};
use crate::{Error, Result};

/// Which subset of Burge structures an operation ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BurgeClass {
    /// All Burge words/matrices.
    All,
    /// Binary matrices; biwords with Des(u) contained in strict descents of v.
    Binary,
    /// Column sums all 1; biwords whose bottom row is a permutation.
    Perm,
    /// Biwords with the reversed inclusion Des(u) containing Des(v). No matrix form.
    Omega,
}

/// Weak vs strict descent condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Weak,
    Strict,
}

/// A matrix of nonnegative integers whose every row and column has a
/// nonzero entry. The empty matrix is the unique element of size 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BurgeMatrix {
    rows: Vec<Vec<u64>>,
}

impl BurgeMatrix {
    pub fn new(rows: Vec<Vec<u64>>) -> Result<Self> {
        if rows.is_empty() {
            return Ok(BurgeMatrix { rows });
        }
        let c = rows[0].len();
        if c == 0 || rows.iter().any(|r| r.len() != c) {
            return Err(Error::InvalidMatrix);
        }
        if rows.iter().any(|r| r.iter().all(|&x| x == 0)) {
            return Err(Error::InvalidMatrix);
        }
        for j in 0..c {
            if rows.iter().all(|r| r[j] == 0) {
                return Err(Error::InvalidMatrix);
            }
        }
        Ok(BurgeMatrix { rows })
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

    /// Sum of all entries.
    pub fn size(&self) -> u64 {
        self.rows.iter().flatten().sum()
    }

    pub fn is_binary(&self) -> bool {
        self.rows.iter().flatten().all(|&x| x <= 1)
    }

    /// Every column sums to exactly 1.
    pub fn is_column_sums_one(&self) -> bool {
        (0..self.col_count()).all(|j| self.rows.iter().map(|r| r[j]).sum::<u64>() == 1)
    }

    pub fn in_class(&self, class: BurgeClass) -> bool {
        match class {
            BurgeClass::All => true,
            BurgeClass::Binary => self.is_binary(),
            BurgeClass::Perm => self.is_column_sums_one(),
            BurgeClass::Omega => false,
        }
    }

    /// Row sum vector.
    pub fn row_sums(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.iter().sum()).collect()
    }
}

/// An equal-length pair of words: a weakly increasing top row with a
/// declared codomain bound, and an arbitrary bottom row over positive
/// integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Biword {
    top: Vec<u32>,
    bottom: Vec<u32>,
    bound: u32,
}

impl Biword {
    pub fn new(top: Vec<u32>, bottom: Vec<u32>, bound: u32) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::LengthMismatch);
        }
        if !top.windows(2).all(|w| w[0] <= w[1]) || top.first().is_some_and(|&x| x == 0) {
            return Err(Error::NotWeaklyIncreasing);
        }
        if bottom.iter().any(|&x| x == 0) {
            return Err(Error::NotCayley);
        }
        let max = top.iter().copied().max().unwrap_or(0);
        if bound < max {
            return Err(Error::BoundTooSmall { bound, max });
        }
        Ok(Biword { top, bottom, bound })
    }

    /// Bound defaults to the maximum letter of the top row.
    pub fn tight(top: Vec<u32>, bottom: Vec<u32>) -> Result<Self> {
        let bound = top.iter().copied().max().unwrap_or(0);
        Biword::new(top, bottom, bound)
    }

    pub fn top(&self) -> &[u32] {
        &self.top
    }

    pub fn bottom(&self) -> &[u32] {
        &self.bottom
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.top.len()
    }

    pub fn is_empty(&self) -> bool {
        self.top.is_empty()
    }

    pub fn classify(&self) -> BiwordFlags {
        let top_wi = is_cayley(&self.top) && self.bound == self.top.iter().copied().max().unwrap_or(0);
        let bottom_cay = is_cayley(&self.bottom);
        let base = top_wi && bottom_cay;
        let des_u = des_set(&self.top);
        let des_v = des_set(&self.bottom);
        let sdes_v = sdes_set(&self.bottom);
        let in_bur = base && des_u.is_subset_of(&des_v);
        let in_bbur = base && des_u.is_subset_of(&sdes_v);
        let bottom_perm = bottom_cay
            && self.bottom.iter().copied().max().unwrap_or(0) as usize == self.bottom.len();
        BiwordFlags {
            in_bur,
            in_bbur,
            in_pbur: in_bur && bottom_perm,
            in_omega: base && des_v.is_subset_of(&des_u),
        }
    }
}

impl fmt::Display for Biword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", format_word(&self.top), format_word(&self.bottom))
    }
}

/// Membership flags for the four biword classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BiwordFlags {
    pub in_bur: bool,
    pub in_bbur: bool,
    pub in_pbur: bool,
    pub in_omega: bool,
}

/// List the columns of a matrix: column (i j) appears a_ij times, sorted
/// ascending by top entry with ties descending by bottom entry.
pub fn matrix_to_biword(a: &BurgeMatrix) -> Biword {
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
    let bound = a.row_count() as u32;
    Biword { top, bottom, bound }
}

/// Inverse of [`matrix_to_biword`] for Burge words with a tight bound.
pub fn biword_to_matrix(b: &Biword) -> Result<BurgeMatrix> {
    let flags = b.classify();
    if !flags.in_bur {
        return Err(Error::DescentCondition);
    }
    let r = b.top.iter().copied().max().unwrap_or(0) as usize;
    if b.bound as usize != r {
        return Err(Error::BoundTooSmall { bound: b.bound, max: r as u32 });
    }
    let c = b.bottom.iter().copied().max().unwrap_or(0) as usize;
    if r == 0 {
        return Ok(BurgeMatrix { rows: vec![] });
    }
    let mut rows = vec![vec![0u64; c]; r];
    for (&i, &j) in b.top.iter().zip(&b.bottom) {
        rows[(i - 1) as usize][(j - 1) as usize] += 1;
    }
    BurgeMatrix::new(rows)
}

/// Flip every column of a biword and re-sort by the canonical rule
/// (top ascending, ties broken descending by bottom). No validity
/// checks; the involution property holds exactly on Burge-type input.
pub fn flip_sort(top: &[u32], bottom: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let mut cols: Vec<(u32, u32)> = bottom.iter().copied().zip(top.iter().copied()).collect();
    cols.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    (
        cols.iter().map(|c| c.0).collect(),
        cols.iter().map(|c| c.1).collect(),
    )
}

/// Burge transpose on raw rows. Requires a weakly increasing top with
/// Des(top) contained in Des(bottom).
pub fn transpose_rows(top: &[u32], bottom: &[u32]) -> Result<(Vec<u32>, Vec<u32>)> {
    if top.len() != bottom.len() {
        return Err(Error::LengthMismatch);
    }
    if !top.windows(2).all(|w| w[0] <= w[1]) {
        return Err(Error::NotWeaklyIncreasing);
    }
    if !des_set(top).is_subset_of(&des_set(bottom)) {
        return Err(Error::DescentCondition);
    }
    Ok(flip_sort(top, bottom))
}

/// (u,v)^T = (sort(v), Gamma(u,v)).
pub fn burge_transpose(b: &Biword) -> Result<Biword> {
    let (top, bottom) = transpose_rows(&b.top, &b.bottom)?;
    Biword::tight(top, bottom)
}

/// Bottom row of the Burge transpose.
pub fn gamma_map(b: &Biword) -> Result<Vec<u32>> {
    Ok(burge_transpose(b)?.bottom)
}

/// All u in WI[n] with Des(u) inside Des(v) (weak) or strict descents
/// of v (strict), in lexicographic order.
pub fn wi_of(v: &CayleyWord, variant: Variant) -> Vec<WeaklyIncreasingWord> {
    let n = v.len();
    if n == 0 {
        return vec![WeaklyIncreasingWord::wi(vec![]).expect("empty word")];
    }
    let allowed = match variant {
        Variant::Weak => des_set(v.letters()),
        Variant::Strict => sdes_set(v.letters()),
    };
    let d = allowed.members();
    let mut out = Vec::with_capacity(1 << d.len());
    for mask in 0u32..(1 << d.len()) {
        let members: Vec<usize> = d
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &i)| i)
            .collect();
        let s = IndexSet::new(members, n).expect("subset of a valid index set");
        out.push(wi_from_descent_set(&s));
    }
    out.sort();
    out
}

/// basis(v) = Gamma(WI(v) x {v}): the 2^{des(v)} Cayley permutations x
/// with (id, x)^T = (sort(x), v).
pub fn fishburn_basis(v: &CayleyWord) -> Result<Vec<CayleyWord>> {
    if !v.is_permutation() {
        return Err(Error::NotPermutation);
    }
    let mut out = Vec::new();
    for u in wi_of(v, Variant::Weak) {
        let (_, bottom) = transpose_rows(u.letters(), v.letters())?;
        out.push(CayleyWord::new(bottom)?);
    }
    out.sort();
    Ok(out)
}

/// theta(u,v) = ((u^{rc})*, v^r), a bijection from binary Burge words
/// onto Omega.
pub fn theta(b: &Biword) -> Result<Biword> {
    if !b.classify().in_bbur {
        return Err(Error::NotBinaryBurge);
    }
    let u = CayleyWord::new(reverse(&b.top))?;
    let urc = complement(&u);
    let conj = conjugate(&WeaklyIncreasingWord::wi(urc.letters().to_vec())?)?;
    Biword::tight(conj.letters().to_vec(), reverse(&b.bottom))
}

/// Enumerate Bur[n], BBur[n], PBur[n] or Omega[n] as biwords, sorted
/// lexicographically by (top, bottom).
pub fn enumerate_burge(n: usize, class: BurgeClass) -> Vec<Biword> {
    let mut out = Vec::new();
    match class {
        BurgeClass::All | BurgeClass::Binary => {
            let variant = if class == BurgeClass::All {
                Variant::Weak
            } else {
                Variant::Strict
            };
            for v in enumerate_cayley(n) {
                for u in wi_of(&v, variant) {
                    out.push(
                        Biword::tight(u.letters().to_vec(), v.letters().to_vec())
                            .expect("valid biword"),
                    );
                }
            }
        }
        BurgeClass::Perm => {
            for v in enumerate_permutations(n) {
                for u in wi_of(&v, Variant::Weak) {
                    out.push(
                        Biword::tight(u.letters().to_vec(), v.letters().to_vec())
                            .expect("valid biword"),
                    );
                }
            }
        }
        BurgeClass::Omega => {
            for v in enumerate_cayley(n) {
                // Des(u) must contain Des(v): add any subset of the strict ascents
                let dv = des_set(v.letters());
                let sa = crate::cayley::sasc_set(v.letters());
                let extra = sa.members();
                for mask in 0u32..(1 << extra.len()) {
                    let mut members: Vec<usize> = dv.members().to_vec();
                    members.extend(
                        extra
                            .iter()
                            .enumerate()
                            .filter(|(k, _)| mask >> k & 1 == 1)
                            .map(|(_, &i)| i),
                    );
                    members.sort_unstable();
                    let s = IndexSet::new(members, n.max(v.len())).expect("valid index set");
                    let u = wi_from_descent_set(&s);
                    out.push(
                        Biword::tight(u.letters().to_vec(), v.letters().to_vec())
                            .expect("valid biword"),
                    );
                }
            }
        }
    }
    out.sort();
    out
}

/// Enumerate Mat[n], BMat[n] or PMat[n] directly, cell by cell. This is
/// independent of the biword enumeration; the two routes are checked
/// against each other elsewhere.
pub fn enumerate_mat(n: usize, class: BurgeClass) -> Result<Vec<BurgeMatrix>> {
    if class == BurgeClass::Omega {
        return Err(Error::NoMatrixForm);
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(BurgeMatrix { rows: vec![] });
        return Ok(out);
    }
    for r in 1..=n {
        for c in 1..=n {
            let mut rows = vec![vec![0u64; c]; r];
            let mut col_sums = vec![0u64; c];
            fill_cells(n as u64, r, c, 0, class, &mut rows, &mut col_sums, &mut out);
        }
    }
    out.sort();
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn fill_cells(
    remaining: u64,
    r: usize,
    c: usize,
    cell: usize,
    class: BurgeClass,
    rows: &mut Vec<Vec<u64>>,
    col_sums: &mut Vec<u64>,
    out: &mut Vec<BurgeMatrix>,
) {
    if cell == r * c {
        if remaining == 0 && col_sums.iter().all(|&s| s > 0) {
            out.push(BurgeMatrix { rows: rows.clone() });
        }
        return;
    }
    let (i, j) = (cell / c, cell % c);
    // each row still needing its first nonzero entry costs at least 1
    let row_sum: u64 = rows[i].iter().sum();
    let pending_rows = (r - i - 1) as u64 + u64::from(row_sum == 0 && j == 0);
    if remaining < pending_rows {
        return;
    }
    let mut cap = remaining;
    if matches!(class, BurgeClass::Binary | BurgeClass::Perm) {
        cap = cap.min(1);
    }
    if class == BurgeClass::Perm {
        cap = cap.min(1 - col_sums[j].min(1));
    }
    for e in 0..=cap {
        // last chance for a row or column to become nonzero
        if j == c - 1 && row_sum + e == 0 {
            continue;
        }
        if i == r - 1 && col_sums[j] + e == 0 {
            continue;
        }
        rows[i][j] = e;
        col_sums[j] += e;
        fill_cells(remaining - e, r, c, cell + 1, class, rows, col_sums, out);
        col_sums[j] -= e;
        rows[i][j] = 0;
    }
}

/// Sum of 2^{des(v)} over v in the class bottom set; counts |Bur[n]|
/// etc. without materializing biwords.
pub fn count_burge(n: usize, class: BurgeClass) -> num_bigint::BigUint {
    use num_bigint::BigUint;
    let one = BigUint::from(1u32);
    let mut total = BigUint::from(0u32);
    match class {
        BurgeClass::All => {
            for v in enumerate_cayley(n) {
                total += &one << crate::cayley::des(v.letters());
            }
        }
        BurgeClass::Binary => {
            for v in enumerate_cayley(n) {
                total += &one << crate::cayley::sdes(v.letters());
            }
        }
        BurgeClass::Perm => {
            for v in enumerate_permutations(n) {
                total += &one << crate::cayley::des(v.letters());
            }
        }
        BurgeClass::Omega => {
            for v in enumerate_cayley(n) {
                total += &one << crate::cayley::sasc(v.letters());
            }
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::{parse_word, sort_word};
    use alloc::collections::BTreeSet;
    use alloc::string::ToString;

    fn w(s: &str) -> Vec<u32> {
        parse_word(s).unwrap()
    }

    fn bw(top: &str, bottom: &str) -> Biword {
        Biword::tight(w(top), w(bottom)).unwrap()
    }

    #[test]
    fn matrix_biword_example() {
        let a = BurgeMatrix::new(vec![vec![1, 0, 2], vec![0, 2, 1], vec![1, 1, 0]]).unwrap();
        let b = matrix_to_biword(&a);
        assert_eq!(b.to_string(), "11122233/33132221");
        assert_eq!(biword_to_matrix(&b).unwrap(), a);
    }

    #[test]
    fn single_cell_matrix() {
        let a = BurgeMatrix::new(vec![vec![2]]).unwrap();
        assert_eq!(matrix_to_biword(&a).to_string(), "11/11");
    }

    #[test]
    fn mat2_biwords() {
        let got: BTreeSet<alloc::string::String> = enumerate_mat(2, BurgeClass::All)
            .unwrap()
            .iter()
            .map(|a| matrix_to_biword(a).to_string())
            .collect();
        let expected: BTreeSet<alloc::string::String> =
            ["11/11", "11/21", "12/11", "12/12", "12/21"]
                .iter()
                .map(|s| s.to_string())
                .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn antidiagonal_matrix() {
        let b = bw("12", "21");
        let a = biword_to_matrix(&b).unwrap();
        assert_eq!(a.rows(), &[vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn biword_matrix_round_trip_bur5() {
        for b in enumerate_burge(5, BurgeClass::All) {
            let a = biword_to_matrix(&b).unwrap();
            assert_eq!(matrix_to_biword(&a), b);
        }
    }

    #[test]
    fn matrix_biword_round_trip_mat5() {
        for a in enumerate_mat(5, BurgeClass::All).unwrap() {
            assert_eq!(biword_to_matrix(&matrix_to_biword(&a)).unwrap(), a);
        }
    }

    #[test]
    fn transpose_paper_example() {
        let b = bw("11244788", "33151561");
        let t = burge_transpose(&b).unwrap();
        assert_eq!(t.to_string(), "11133556/84211748");
        assert_eq!(burge_transpose(&t).unwrap().top(), b.top());
        assert_eq!(burge_transpose(&t).unwrap().bottom(), b.bottom());
    }

    #[test]
    fn transpose_inverts_permutations() {
        let b = bw("1234", "3142");
        let t = burge_transpose(&b).unwrap();
        assert_eq!(t.to_string(), "1234/2413");

        let b = bw("1234", "1212");
        assert_eq!(burge_transpose(&b).unwrap().to_string(), "1122/3142");
    }

    #[test]
    fn transpose_involution_characterizes_bur() {
        // Des(u) in Des(v) iff flip-sorting twice returns the input
        for n in 0..=5 {
            for v in enumerate_cayley(n) {
                for u in crate::cayley::enumerate_wi(n) {
                    let cols_ok = des_set(u.letters()).is_subset_of(&des_set(v.letters()));
                    let (t1, b1) = flip_sort(u.letters(), v.letters());
                    let (t2, b2) = flip_sort(&t1, &b1);
                    let same = t2 == u.letters() && b2 == v.letters();
                    assert_eq!(same, cols_ok, "u={u} v={v}");
                }
            }
        }
    }

    #[test]
    fn classify_examples() {
        let f = bw("11", "21").classify();
        assert!(f.in_bur && f.in_bbur && f.in_pbur && f.in_omega);

        let f = bw("12", "11").classify();
        assert!(f.in_bur && f.in_bbur && !f.in_pbur && !f.in_omega);

        let f = bw("11", "11").classify();
        assert!(f.in_bur && !f.in_bbur && !f.in_pbur && f.in_omega);
    }

    #[test]
    fn enumerate_small_classes() {
        assert_eq!(enumerate_burge(2, BurgeClass::All).len(), 5);

        let binary: BTreeSet<alloc::string::String> = enumerate_burge(2, BurgeClass::Binary)
            .iter()
            .map(|b| b.to_string())
            .collect();
        let expected: BTreeSet<alloc::string::String> = ["11/21", "12/12", "12/21", "12/11"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(binary, expected);

        let omega: BTreeSet<alloc::string::String> = enumerate_burge(2, BurgeClass::Omega)
            .iter()
            .map(|b| b.to_string())
            .collect();
        let expected: BTreeSet<alloc::string::String> = ["12/12", "11/21", "11/12", "11/11"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(omega, expected);
        assert_eq!(
            enumerate_burge(2, BurgeClass::Binary).len(),
            enumerate_burge(2, BurgeClass::Omega).len()
        );
    }

    #[test]
    fn class_restrictions_of_phi() {
        for n in 0..=5 {
            for class in [BurgeClass::All, BurgeClass::Binary, BurgeClass::Perm] {
                let mats = enumerate_mat(n, class).unwrap();
                let mut from_mats: Vec<Biword> =
                    mats.iter().map(matrix_to_biword).collect();
                from_mats.sort();
                assert_eq!(from_mats, enumerate_burge(n, class), "n={n} {class:?}");
            }
        }
    }

    #[test]
    fn pbur_transpose_counts_cayley() {
        for n in 0..=5 {
            let pbur = enumerate_burge(n, BurgeClass::Perm);
            let mut images = BTreeSet::new();
            for b in &pbur {
                let t = burge_transpose(b).unwrap();
                // transposed pair is (id, x) with x Cayley
                assert!(t.top().iter().enumerate().all(|(i, &x)| x as usize == i + 1));
                images.insert(t.bottom().to_vec());
            }
            assert_eq!(images.len(), pbur.len());
            assert_eq!(pbur.len(), enumerate_cayley(n).count());
        }
    }

    #[test]
    fn fishburn_basis_examples() {
        let v = CayleyWord::new(w("3142")).unwrap();
        let got: Vec<alloc::string::String> = fishburn_basis(&v)
            .unwrap()
            .iter()
            .map(|x| x.to_string())
            .collect();
        assert_eq!(got, ["1212", "1312", "2313", "2413"]);

        let id = CayleyWord::new(w("1234")).unwrap();
        assert_eq!(fishburn_basis(&id).unwrap(), vec![id.clone()]);
    }

    #[test]
    fn fishburn_bases_partition_cay4() {
        let mut seen: Vec<CayleyWord> = Vec::new();
        for p in enumerate_permutations(4) {
            seen.extend(fishburn_basis(&p).unwrap());
        }
        seen.sort();
        let all: Vec<CayleyWord> = enumerate_cayley(4).collect();
        assert_eq!(seen, all);
    }

    #[test]
    fn basis_characterization_and_inverse_membership() {
        for n in 1..=5 {
            for p in enumerate_permutations(n) {
                let basis = fishburn_basis(&p).unwrap();
                assert_eq!(basis.len(), 1 << crate::cayley::des(p.letters()));
                assert!(basis.contains(&p.inverse().unwrap()));
                for x in &basis {
                    let id: Vec<u32> = (1..=n as u32).collect();
                    let (t, b) = transpose_rows(&id, x.letters()).unwrap();
                    assert_eq!(t, sort_word(x.letters()));
                    assert_eq!(b, p.letters());
                    assert_eq!(des_set(x.letters()), des_set(p.inverse().unwrap().letters()));
                    assert_eq!(
                        crate::cayley::sasc_set(x.letters()),
                        crate::cayley::asc_set(p.inverse().unwrap().letters())
                    );
                }
            }
        }
    }

    #[test]
    fn wi_of_examples() {
        let q = CayleyWord::new(w("3142")).unwrap();
        let got: Vec<alloc::string::String> = wi_of(&q, Variant::Weak)
            .iter()
            .map(|u| u.to_string())
            .collect();
        assert_eq!(got, ["1122", "1123", "1233", "1234"]);

        let p = CayleyWord::new(w("2413")).unwrap();
        let got: Vec<alloc::string::String> = wi_of(&p, Variant::Weak)
            .iter()
            .map(|u| u.to_string())
            .collect();
        assert_eq!(got, ["1223", "1234"]);

        let id = CayleyWord::new(w("123")).unwrap();
        for variant in [Variant::Weak, Variant::Strict] {
            assert_eq!(wi_of(&id, variant).len(), 1);
        }
    }

    #[test]
    fn wi_of_sizes() {
        for v in enumerate_cayley(5) {
            assert_eq!(
                wi_of(&v, Variant::Weak).len(),
                1 << crate::cayley::des(v.letters())
            );
            assert_eq!(
                wi_of(&v, Variant::Strict).len(),
                1 << crate::cayley::sdes(v.letters())
            );
        }
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta(&bw("11", "21")).unwrap(), bw("12", "12"));
        assert_eq!(theta(&bw("12", "11")).unwrap(), bw("11", "11"));
        assert!(theta(&bw("11", "11")).is_err());
    }

    #[test]
    fn theta_bijects_bbur5_onto_omega5() {
        let bbur = enumerate_burge(5, BurgeClass::Binary);
        let omega = enumerate_burge(5, BurgeClass::Omega);
        let mut images: Vec<Biword> = bbur.iter().map(|b| theta(b).unwrap()).collect();
        images.sort();
        assert_eq!(images, omega);
    }

    #[test]
    fn count_without_materializing() {
        use num_bigint::BigUint;
        for n in 0..=6 {
            assert_eq!(
                count_burge(n, BurgeClass::All),
                BigUint::from(enumerate_burge(n, BurgeClass::All).len())
            );
            assert_eq!(
                count_burge(n, BurgeClass::Omega),
                BigUint::from(enumerate_burge(n, BurgeClass::Omega).len())
            );
        }
    }
}
