//! Cayley permutations, weakly increasing words, descent/ascent
//! statistics, the reverse/complement/conjugation symmetries and the
//! ballot correspondence.
//!
//! Words are stored 0-based; every public index (descent positions,
//! ballot elements) is 1-based.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::{Error, Result};

/// A word over positive integers whose image is exactly {1..max}.
///
/// The empty word is valid, with `max() == 0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CayleyWord {
    letters: Vec<u32>,
    max: u32,
}

impl CayleyWord {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if !is_cayley(&letters) {
            return Err(Error::NotCayley);
        }
        let max = letters.iter().copied().max().unwrap_or(0);
        Ok(CayleyWord { letters, max })
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn max(&self) -> u32 {
        self.max
    }

    /// True iff every letter occurs exactly once.
    pub fn is_permutation(&self) -> bool {
        self.max as usize == self.letters.len()
    }

    /// Inverse permutation; errors unless the word is a permutation.
    pub fn inverse(&self) -> Result<CayleyWord> {
        if !self.is_permutation() {
            return Err(Error::NotPermutation);
        }
        let mut inv = vec![0u32; self.letters.len()];
        for (i, &x) in self.letters.iter().enumerate() {
            inv[(x - 1) as usize] = (i + 1) as u32;
        }
        CayleyWord::new(inv)
    }
}

impl fmt::Display for CayleyWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(&self.letters))
    }
}

/// A weakly increasing word with a declared codomain bound `m >= max`.
///
/// With `bound == max` and a Cayley image this is a member of WI[n];
/// otherwise it is a bounded weakly increasing map [n] -> [m].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeaklyIncreasingWord {
    letters: Vec<u32>,
    bound: u32,
}

impl WeaklyIncreasingWord {
    pub fn new(letters: Vec<u32>, bound: u32) -> Result<Self> {
        if !letters.windows(2).all(|w| w[0] <= w[1]) {
            return Err(Error::NotWeaklyIncreasing);
        }
        if letters.first().is_some_and(|&x| x == 0) {
            return Err(Error::NotWeaklyIncreasing);
        }
        let max = letters.iter().copied().max().unwrap_or(0);
        if bound < max {
            return Err(Error::BoundTooSmall { bound, max });
        }
        Ok(WeaklyIncreasingWord { letters, bound })
    }

    /// A member of WI[n]: weakly increasing, image {1..max}, bound = max.
    pub fn wi(letters: Vec<u32>) -> Result<Self> {
        let w = CayleyWord::new(letters)?;
        let max = w.max;
        WeaklyIncreasingWord::new(w.letters, max)
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn max(&self) -> u32 {
        self.letters.iter().copied().max().unwrap_or(0)
    }

    /// True iff the word lies in WI[n] (image {1..max} and bound = max).
    pub fn is_wi(&self) -> bool {
        is_cayley(&self.letters) && self.bound == self.max()
    }
}

impl fmt::Display for WeaklyIncreasingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(&self.letters))
    }
}

/// A strictly increasing set of 1-based positions inside [n-1].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexSet {
    members: Vec<usize>,
    n: usize,
}

impl IndexSet {
    pub fn new(members: Vec<usize>, n: usize) -> Result<Self> {
        for w in members.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::IndexOutOfRange { index: w[1], n });
            }
        }
        if let Some(&last) = members.last() {
            if last >= n || members[0] == 0 {
                return Err(Error::IndexOutOfRange { index: last, n });
            }
        }
        Ok(IndexSet { members, n })
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn is_subset_of(&self, other: &IndexSet) -> bool {
        self.members.iter().all(|&i| other.contains(i))
    }

    /// [n-1] \ self.
    pub fn complement(&self) -> IndexSet {
        let members = (1..self.n).filter(|i| !self.contains(*i)).collect();
        IndexSet {
            members,
            n: self.n,
        }
    }

    /// { n - x : x in self }, the index map induced by reversal.
    pub fn reflect(&self) -> IndexSet {
        let mut members: Vec<usize> = self.members.iter().map(|&x| self.n - x).collect();
        members.reverse();
        IndexSet {
            members,
            n: self.n,
        }
    }
}

/// An ordered set partition of [n] into nonempty blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ballot {
    blocks: Vec<Vec<usize>>,
}

impl Ballot {
    /// Blocks must be nonempty, pairwise disjoint, and cover [n].
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = blocks.iter().map(|b| b.len()).sum();
        let mut seen = vec![false; n + 1];
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::InvalidMatrix);
            }
            for &x in block {
                if x == 0 || x > n || seen[x] {
                    return Err(Error::IndexOutOfRange { index: x, n });
                }
                seen[x] = true;
            }
        }
        let mut blocks = blocks;
        for block in &mut blocks {
            block.sort_unstable();
        }
        Ok(Ballot { blocks })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum()
    }
}

/// Descent and ascent sets of a word, in both weak and strict flavors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stats {
    pub des: IndexSet,
    pub sdes: IndexSet,
    pub asc: IndexSet,
    pub sasc: IndexSet,
}

/// True iff the image of `w` is {1..max(w)}; the empty word qualifies.
pub fn is_cayley(w: &[u32]) -> bool {
    let max = w.iter().copied().max().unwrap_or(0);
    if max as usize > w.len() {
        return false;
    }
    let mut seen = vec![false; max as usize + 1];
    for &x in w {
        if x == 0 {
            return false;
        }
        seen[x as usize] = true;
    }
    (1..=max as usize).all(|k| seen[k])
}

fn push_sets(w: &[u32]) -> (Vec<usize>, Vec<usize>, Vec<usize>, Vec<usize>) {
    let mut des = Vec::new();
    let mut sdes = Vec::new();
    let mut asc = Vec::new();
    let mut sasc = Vec::new();
    for i in 1..w.len() {
        let (a, b) = (w[i - 1], w[i]);
        if a >= b {
            des.push(i);
        }
        if a > b {
            sdes.push(i);
        }
        if a <= b {
            asc.push(i);
        }
        if a < b {
            sasc.push(i);
        }
    }
    (des, sdes, asc, sasc)
}

/// Weak/strict descent and ascent sets; errors on the empty word.
pub fn stats(w: &[u32]) -> Result<Stats> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let n = w.len();
    let (des, sdes, asc, sasc) = push_sets(w);
    Ok(Stats {
        des: IndexSet { members: des, n },
        sdes: IndexSet { members: sdes, n },
        asc: IndexSet { members: asc, n },
        sasc: IndexSet { members: sasc, n },
    })
}

/// Weak descent set Des(w) = { i : w(i) >= w(i+1) }.
pub fn des_set(w: &[u32]) -> IndexSet {
    let n = w.len();
    let (des, _, _, _) = push_sets(w);
    IndexSet { members: des, n }
}

/// Strict descent set.
pub fn sdes_set(w: &[u32]) -> IndexSet {
    let n = w.len();
    let (_, sdes, _, _) = push_sets(w);
    IndexSet { members: sdes, n }
}

/// Weak ascent set.
pub fn asc_set(w: &[u32]) -> IndexSet {
    let n = w.len();
    let (_, _, asc, _) = push_sets(w);
    IndexSet { members: asc, n }
}

/// Strict ascent set.
pub fn sasc_set(w: &[u32]) -> IndexSet {
    let n = w.len();
    let (_, _, _, sasc) = push_sets(w);
    IndexSet { members: sasc, n }
}

pub fn des(w: &[u32]) -> usize {
    (1..w.len()).filter(|&i| w[i - 1] >= w[i]).count()
}

pub fn sdes(w: &[u32]) -> usize {
    (1..w.len()).filter(|&i| w[i - 1] > w[i]).count()
}

pub fn asc(w: &[u32]) -> usize {
    (1..w.len()).filter(|&i| w[i - 1] <= w[i]).count()
}

pub fn sasc(w: &[u32]) -> usize {
    (1..w.len()).filter(|&i| w[i - 1] < w[i]).count()
}

/// w^r(i) = w(n+1-i).
pub fn reverse(w: &[u32]) -> Vec<u32> {
    w.iter().rev().copied().collect()
}

/// v^c(i) = max(v)+1-v(i); requires a Cayley word so that max is the image top.
pub fn complement(v: &CayleyWord) -> CayleyWord {
    let m = v.max();
    let letters = v.letters().iter().map(|&x| m + 1 - x).collect();
    // complementing a Cayley word preserves the image property
    CayleyWord::new(letters).expect("complement of a Cayley word is Cayley")
}

/// Multiset-sorted rearrangement of `v`, weakly increasing.
pub fn sort_word(v: &[u32]) -> Vec<u32> {
    let mut s = v.to_vec();
    s.sort_unstable();
    s
}

/// The conjugate of u in WI[n]: pointwise i+1-u(i), with complementary
/// descent set. An involution.
pub fn conjugate(u: &WeaklyIncreasingWord) -> Result<WeaklyIncreasingWord> {
    if !u.is_wi() {
        return Err(Error::NotWeaklyIncreasing);
    }
    if u.is_empty() {
        return Err(Error::EmptyWord);
    }
    let letters: Vec<u32> = u
        .letters()
        .iter()
        .enumerate()
        .map(|(i, &x)| (i as u32 + 2) - x)
        .collect();
    WeaklyIncreasingWord::wi(letters)
}

/// The unique word in WI[n] with the given descent set.
pub fn wi_from_descent_set(s: &IndexSet) -> WeaklyIncreasingWord {
    let n = s.n();
    let mut letters = Vec::with_capacity(n);
    if n > 0 {
        letters.push(1u32);
        for i in 1..n {
            let step = if s.contains(i) { 0 } else { 1 };
            let prev = letters[i - 1];
            letters.push(prev + step);
        }
    }
    WeaklyIncreasingWord::wi(letters).expect("constructed word is in WI[n]")
}

/// eta(S) = 1^{s_1} 2^{s_2-s_1} ... (r+1)^{n-s_r}: the unique WI[n]
/// word whose descent set is [n-1] \ S.
pub fn eta(s: &IndexSet) -> WeaklyIncreasingWord {
    wi_from_descent_set(&s.complement())
}

/// The ballot B_1...B_k with i in B_{v(i)}.
pub fn ballot_of(v: &CayleyWord) -> Ballot {
    let k = v.max() as usize;
    let mut blocks = vec![Vec::new(); k];
    for (i, &x) in v.letters().iter().enumerate() {
        blocks[(x - 1) as usize].push(i + 1);
    }
    Ballot { blocks }
}

/// Inverse of [`ballot_of`].
pub fn cayley_of(b: &Ballot) -> CayleyWord {
    let n = b.n();
    let mut letters = vec![0u32; n];
    for (j, block) in b.blocks().iter().enumerate() {
        for &i in block {
            letters[i - 1] = (j + 1) as u32;
        }
    }
    CayleyWord::new(letters).expect("ballot blocks encode a Cayley word")
}

/// Lexicographic streaming enumeration of Cay[n].
pub fn enumerate_cayley(n: usize) -> CayleyIter {
    CayleyIter {
        n,
        state: None,
        done: false,
    }
}

pub struct CayleyIter {
    n: usize,
    state: Option<Vec<u32>>,
    done: bool,
}

impl Iterator for CayleyIter {
    type Item = CayleyWord;

    fn next(&mut self) -> Option<CayleyWord> {
        if self.done {
            return None;
        }
        match &mut self.state {
            None => {
                let letters = vec![1u32; self.n];
                self.state = Some(letters.clone());
                if self.n == 0 {
                    self.done = true;
                }
                Some(CayleyWord::new(letters).expect("all-ones word is Cayley"))
            }
            Some(letters) => {
                // lexicographic successor: find the rightmost position that
                // can grow to a value still completable to a Cayley word,
                // then append the smallest completion (1-padding plus the
                // values the prefix is missing, in increasing order)
                let n = self.n;
                for i in (0..n).rev() {
                    let mut present = vec![false; n + 1];
                    let mut prefix_max = 0u32;
                    for &x in letters[..i].iter() {
                        present[x as usize] = true;
                        prefix_max = prefix_max.max(x);
                    }
                    let remaining = n - i - 1;
                    for v in letters[i] + 1..=n as u32 {
                        let new_max = prefix_max.max(v);
                        let missing: Vec<u32> = (1..=new_max)
                            .filter(|&x| x != v && !present[x as usize])
                            .collect();
                        if missing.len() > remaining {
                            continue;
                        }
                        let mut next = letters[..i].to_vec();
                        next.push(v);
                        next.extend(core::iter::repeat(1).take(remaining - missing.len()));
                        next.extend(missing);
                        *letters = next.clone();
                        return Some(CayleyWord::new(next).expect("successor is Cayley"));
                    }
                }
                self.done = true;
                None
            }
        }
    }
}

/// Lexicographic streaming enumeration of WI[n].
pub fn enumerate_wi(n: usize) -> WiIter {
    WiIter {
        n,
        state: None,
        done: false,
    }
}

pub struct WiIter {
    n: usize,
    state: Option<Vec<u32>>,
    done: bool,
}

impl Iterator for WiIter {
    type Item = WeaklyIncreasingWord;

    fn next(&mut self) -> Option<WeaklyIncreasingWord> {
        if self.done {
            return None;
        }
        match &mut self.state {
            None => {
                let letters = vec![1u32; self.n];
                self.state = Some(letters.clone());
                if self.n == 0 {
                    self.done = true;
                }
                Some(WeaklyIncreasingWord::wi(letters).expect("all-ones word is in WI"))
            }
            Some(letters) => {
                // a WI word either repeats or steps by one; the successor bumps
                // the rightmost repeat and levels the tail
                let n = self.n;
                let mut pos = None;
                for i in (1..n).rev() {
                    if letters[i] == letters[i - 1] {
                        pos = Some(i);
                        break;
                    }
                }
                match pos {
                    None => {
                        self.done = true;
                        None
                    }
                    Some(i) => {
                        letters[i] += 1;
                        let level = letters[i];
                        for j in i + 1..n {
                            letters[j] = level;
                        }
                        Some(
                            WeaklyIncreasingWord::wi(letters.clone())
                                .expect("successor is in WI"),
                        )
                    }
                }
            }
        }
    }
}

/// Lexicographic enumeration of Sym[n] as Cayley words.
pub fn enumerate_permutations(n: usize) -> impl Iterator<Item = CayleyWord> {
    PermIter {
        state: None,
        n,
        done: false,
    }
}

struct PermIter {
    state: Option<Vec<u32>>,
    n: usize,
    done: bool,
}

impl Iterator for PermIter {
    type Item = CayleyWord;

    fn next(&mut self) -> Option<CayleyWord> {
        if self.done {
            return None;
        }
        match &mut self.state {
            None => {
                let letters: Vec<u32> = (1..=self.n as u32).collect();
                self.state = Some(letters.clone());
                if self.n == 0 {
                    self.done = true;
                }
                Some(CayleyWord::new(letters).expect("identity is a permutation"))
            }
            Some(p) => {
                if next_permutation(p) {
                    Some(CayleyWord::new(p.clone()).expect("permutation"))
                } else {
                    self.done = true;
                    None
                }
            }
        }
    }
}

fn next_permutation(p: &mut [u32]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// n-th Fubini number |Cay[n]| by the binomial recurrence.
pub fn fubini(n: usize) -> BigUint {
    let mut f: Vec<BigUint> = vec![BigUint::from(1u32)];
    for k in 1..=n {
        let mut acc = BigUint::from(0u32);
        let mut binom = BigUint::from(1u32);
        for j in 1..=k {
            // binom(k, j) built incrementally
            binom = &binom * BigUint::from((k - j + 1) as u32) / BigUint::from(j as u32);
            acc += &binom * &f[k - j];
        }
        f.push(acc);
    }
    f[n].clone()
}

/// Words print as digit strings when all letters fit in one digit,
/// otherwise comma-separated.
pub fn format_word(w: &[u32]) -> String {
    use core::fmt::Write;
    let mut out = String::new();
    if w.iter().all(|&x| x <= 9) {
        for &x in w {
            let _ = write!(out, "{x}");
        }
    } else {
        for (i, &x) in w.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "{x}");
        }
    }
    out
}

/// Inverse of [`format_word`]; empty string is the empty word.
pub fn parse_word(s: &str) -> Result<Vec<u32>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    if s.contains(',') {
        s.split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| Error::NotCayley))
            .collect()
    } else {
        s.chars()
            .map(|c| c.to_digit(10).map(|d| d as u32).ok_or(Error::NotCayley))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn w(s: &str) -> Vec<u32> {
        parse_word(s).unwrap()
    }

    #[test]
    fn is_cayley_examples() {
        assert!(is_cayley(&w("3114123")));
        assert!(!is_cayley(&w("113")));
        assert!(is_cayley(&[]));
    }

    #[test]
    fn cay3_listing() {
        let expected = [
            "111", "112", "121", "122", "123", "132", "211", "212", "213", "221", "231", "312",
            "321",
        ];
        let got: Vec<String> = enumerate_cayley(3).map(|v| v.to_string()).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn cay_counts_match_fubini() {
        for n in 0..=6 {
            let count = enumerate_cayley(n).count();
            assert_eq!(BigUint::from(count), fubini(n), "n={n}");
        }
        assert_eq!(fubini(6), BigUint::from(4683u32));
    }

    #[test]
    fn wi_listing_and_counts() {
        let got: Vec<String> = enumerate_wi(3).map(|u| u.to_string()).collect();
        assert_eq!(got, ["111", "112", "122", "123"]);
        assert_eq!(enumerate_wi(1).count(), 1);
        assert_eq!(enumerate_wi(5).count(), 16);
    }

    #[test]
    fn enumeration_is_lexicographic() {
        for n in 0..=5 {
            let words: Vec<_> = enumerate_cayley(n).collect();
            assert!(words.windows(2).all(|p| p[0] < p[1]));
            let wis: Vec<_> = enumerate_wi(n).collect();
            assert!(wis.windows(2).all(|p| p[0] < p[1]));
        }
    }

    #[test]
    fn stats_examples() {
        let s = stats(&w("331412")).unwrap();
        assert_eq!(s.des.members(), &[1, 2, 4]);
        assert_eq!(s.sdes.members(), &[2, 4]);
        assert_eq!(s.sasc.members(), &[3, 5]);

        let s = stats(&w("221312")).unwrap();
        assert_eq!(s.sasc.members(), &[3, 5]);

        let id = stats(&[1, 2, 3, 4]).unwrap();
        assert!(id.des.members().is_empty());
        assert_eq!(id.sasc.members(), &[1, 2, 3]);

        assert_eq!(stats(&[]), Err(Error::EmptyWord));
    }

    #[test]
    fn descent_ascent_partitions() {
        for v in enumerate_cayley(5) {
            let s = stats(v.letters()).unwrap();
            let mut du: Vec<usize> = s
                .des
                .members()
                .iter()
                .chain(s.sasc.members())
                .copied()
                .collect();
            du.sort_unstable();
            assert_eq!(du, (1..5).collect::<Vec<_>>());
            let mut su: Vec<usize> = s
                .sdes
                .members()
                .iter()
                .chain(s.asc.members())
                .copied()
                .collect();
            su.sort_unstable();
            assert_eq!(su, (1..5).collect::<Vec<_>>());
        }
    }

    #[test]
    fn reverse_complement_relations() {
        assert_eq!(reverse(&w("123")), w("321"));
        let v = CayleyWord::new(w("11")).unwrap();
        assert_eq!(complement(&v).letters(), w("11"));

        // max(331412) = 4, so v^c(i) = 5 - v(i)
        let v = CayleyWord::new(w("331412")).unwrap();
        assert_eq!(complement(&v).letters(), w("224143"));

        for n in 1..=6 {
            for v in enumerate_cayley(n) {
                let s = stats(v.letters()).unwrap();
                let c = complement(&v);
                let sc = stats(c.letters()).unwrap();
                assert_eq!(sc.des, s.asc);
                assert_eq!(sc.sdes, s.sasc);
                assert_eq!(sc.asc, s.des);
                assert_eq!(sc.sasc, s.sdes);
                let r = reverse(v.letters());
                let sr = stats(&r).unwrap();
                assert_eq!(sr.des, s.asc.reflect());
                assert_eq!(sr.sdes, s.sasc.reflect());
                assert_eq!(sr.asc, s.des.reflect());
                assert_eq!(sr.sasc, s.sdes.reflect());
            }
        }
    }

    #[test]
    fn conjugate_examples() {
        let u = WeaklyIncreasingWord::wi(w("12223445555")).unwrap();
        assert_eq!(conjugate(&u).unwrap().letters(), w("11233344567"));

        let id = WeaklyIncreasingWord::wi(w("12345")).unwrap();
        assert_eq!(conjugate(&id).unwrap().letters(), w("11111"));
    }

    #[test]
    fn conjugate_involution_and_pointwise() {
        for n in 1..=10usize {
            for u in enumerate_wi(n) {
                let c = conjugate(&u).unwrap();
                for (i, (&a, &b)) in u.letters().iter().zip(c.letters()).enumerate() {
                    assert_eq!(b, (i as u32 + 2) - a);
                }
                assert_eq!(des_set(c.letters()), sasc_set(u.letters()));
                assert_eq!(sasc_set(c.letters()), des_set(u.letters()));
                assert_eq!(conjugate(&c).unwrap(), u);
            }
        }
    }

    #[test]
    fn sort_examples() {
        assert_eq!(sort_word(&w("33151561")), w("11133556"));
        assert_eq!(sort_word(&w("3142")), w("1234"));
        assert_eq!(sort_word(&w("1212")), w("1122"));
    }

    #[test]
    fn eta_examples() {
        let s = IndexSet::new(vec![1, 2, 4], 6).unwrap();
        let e = eta(&s);
        assert_eq!(e.letters(), w("123344"));
        assert_eq!(des_set(e.letters()).members(), &[3, 5]);

        let empty = IndexSet::new(vec![], 4).unwrap();
        assert_eq!(eta(&empty).letters(), w("1111"));

        let full = IndexSet::new(vec![1, 2, 3], 4).unwrap();
        assert_eq!(eta(&full).letters(), w("1234"));
    }

    #[test]
    fn ballot_examples() {
        let v = CayleyWord::new(w("3114123")).unwrap();
        let b = ballot_of(&v);
        assert_eq!(
            b.blocks(),
            &[vec![2, 3, 5], vec![6], vec![1, 7], vec![4]]
        );
        assert_eq!(cayley_of(&b), v);

        let ones = CayleyWord::new(w("111")).unwrap();
        assert_eq!(ballot_of(&ones).blocks(), &[vec![1, 2, 3]]);
    }

    #[test]
    fn ballot_round_trip_cay5() {
        for v in enumerate_cayley(5) {
            assert_eq!(cayley_of(&ballot_of(&v)), v);
        }
    }

    #[test]
    fn permutation_iter() {
        assert_eq!(enumerate_permutations(4).count(), 24);
        let first: Vec<_> = enumerate_permutations(3).map(|p| p.to_string()).collect();
        assert_eq!(first, ["123", "132", "213", "231", "312", "321"]);
    }

    #[test]
    fn inverse_permutation() {
        let p = CayleyWord::new(w("3142")).unwrap();
        assert_eq!(p.inverse().unwrap().letters(), w("2413"));
        assert!(CayleyWord::new(w("121")).unwrap().inverse().is_err());
    }

    #[test]
    fn word_formats() {
        assert_eq!(format_word(&[1, 2, 10]), "1,2,10");
        assert_eq!(format_word(&[1, 2, 9]), "129");
        assert_eq!(parse_word("1,2,10").unwrap(), vec![1, 2, 10]);
        assert_eq!(parse_word("").unwrap(), Vec::<u32>::new());
    }
}
