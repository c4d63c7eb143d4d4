mod common;

use common::*;
use proptest::prelude::*;

proptest! {
    #[test]
    fn ring_axioms(a in window_series(), b in window_series(), c in window_series()) {
        check_ring_axioms(&a, &b, &c)?;
    }

    #[test]
    fn inverse_is_two_sided(a in unit_series()) {
        check_inverse(&a)?;
    }

    #[test]
    fn one_minus_q_is_an_involution(p in power_poly()) {
        check_involution(&p)?;
    }

    #[test]
    fn evaluation_at_roots_of_unity_is_a_homomorphism(
        p in laurent(), r in laurent(), level in 1u64..25
    ) {
        check_cyc_hom(&p, &r, level)?;
    }

    #[test]
    fn dissection_round_trip(p in laurent(), s in 2u64..8) {
        check_dissection_round_trip(&p, s)?;
    }

    #[test]
    fn enumerator_matches_box_scan(t in 2u32..4, j_cap in 0i64..5, v_cap in 0i64..14) {
        check_enumerator(t, j_cap, v_cap)?;
        check_reported_v(t, j_cap, v_cap)?;
    }
}
