//! Benchmark fixtures shared by the criterion targets.

use dbs_core::{parse_braid, BraidWord, CartanData};

/// Cartan data and a braid word parsed together.
pub fn instance(kind: &str, word: &str) -> (CartanData, BraidWord) {
    let c = CartanData::from_name(kind).expect("known type");
    let w = parse_braid(word, &c).expect("valid word");
    (c, w)
}
