//! The explicit-basis pipeline at n = 3: arrangement freeness feeds the
//! symbol ideals, the symbol ideals realize the colon quotients, and the
//! product families descend to a basis.

use srb_core::arrangements::{
    verify_deletion_additivity, verify_injection, verify_mj_colon_basis, verify_st_colon,
};
use srb_core::linalg::RankPolicy;
use srb_core::subset::Subset;

#[test]
fn colon_families_n3() {
    for j in Subset::all(3) {
        assert!(verify_mj_colon_basis(&j, RankPolicy::Hybrid), "J={j}");
    }
}

#[test]
fn symbol_ideals_match_colon_ideals_n3() {
    for j in Subset::all(3) {
        assert!(verify_st_colon(&j, RankPolicy::Hybrid), "J={j}");
    }
}

#[test]
fn deletion_chains_additive_n3() {
    for j in Subset::all(3) {
        assert!(verify_deletion_additivity(&j), "J={j}");
    }
}

#[test]
fn injections_n4() {
    for j in Subset::all(4) {
        assert!(verify_injection(&j), "J={j}");
    }
}
