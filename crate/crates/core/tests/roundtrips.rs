//! Property-based round trips over randomly generated Cayley words:
//! ballots, complement, Burge transpose, conjugation, stars-and-bars.

use caylerian_core::burge::{burge_transpose, wi_of, Biword, Variant};
use caylerian_core::cayley::{
    asc_set, ballot_of, cayley_of, complement, conjugate, des_set, sasc,
    wi_from_descent_set, CayleyWord, IndexSet,
};
use caylerian_core::genburge::{stars_bars_decode, stars_bars_encode, wigen};
use proptest::prelude::*;

/// Rank-compress an arbitrary positive word into a Cayley word: the
/// image becomes exactly {1..k} while the relative order is preserved.
fn compress(raw: &[u32]) -> CayleyWord {
    let mut values: Vec<u32> = raw.to_vec();
    values.sort_unstable();
    values.dedup();
    let letters: Vec<u32> = raw
        .iter()
        .map(|x| values.binary_search(x).expect("present") as u32 + 1)
        .collect();
    CayleyWord::new(letters).expect("compressed word is Cayley")
}

fn cayley_strategy() -> impl Strategy<Value = CayleyWord> {
    prop::collection::vec(1u32..=6, 1..=8).prop_map(|raw| compress(&raw))
}

proptest! {
    #[test]
    fn ballot_round_trip(v in cayley_strategy()) {
        let ballot = ballot_of(&v);
        prop_assert_eq!(cayley_of(&ballot), v);
    }

    #[test]
    fn complement_involution_swaps_descents(v in cayley_strategy()) {
        let c = complement(&v);
        prop_assert_eq!(complement(&c), v.clone());
        let des_c = des_set(c.letters());
        let asc_v = asc_set(v.letters());
        prop_assert_eq!(des_c.members(), asc_v.members());
    }

    #[test]
    fn transpose_involution_on_burge_pairs(v in cayley_strategy()) {
        for u in wi_of(&v, Variant::Weak) {
            let b = Biword::tight(u.letters().to_vec(), v.letters().to_vec()).expect("pair");
            let t = burge_transpose(&b).expect("transpose");
            let back = burge_transpose(&t).expect("transpose twice");
            prop_assert_eq!(back.top(), b.top());
            prop_assert_eq!(back.bottom(), b.bottom());
        }
    }

    #[test]
    fn conjugation_involution(members in prop::collection::btree_set(1usize..8, 0..7)) {
        let n = 8;
        let set = IndexSet::new(members.into_iter().collect(), n).expect("subset of [n-1]");
        let u = wi_from_descent_set(&set);
        let bar = conjugate(&u).expect("conjugate");
        let back = conjugate(&bar).expect("conjugate twice");
        prop_assert_eq!(back.letters(), u.letters());
    }

    #[test]
    fn stars_bars_round_trip(v in cayley_strategy(), extra in 0u32..4) {
        let m = sasc(v.letters()) as u32 + v.len() as u32 + extra;
        for u in wigen(&v, m, Variant::Weak).into_iter().take(8) {
            let code = stars_bars_encode(&u, &v).expect("encode");
            let back = stars_bars_decode(&code, &v, m).expect("decode");
            prop_assert_eq!(back.letters(), u.letters());
        }
    }
}
