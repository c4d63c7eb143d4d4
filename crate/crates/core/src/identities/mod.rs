//! Exact checks of the finite-form identities, each reporting the window
//! compared and the first discrepancy found.

mod key;
mod products;
mod report;
mod roots;
mod two_variable;

pub use key::{adaptive_cutoff, b_sums, key_lhs, key_rhs, verify_key_identity, BSums};
pub use products::{
    generalized_slater_sides, slater_sides, verify_generalized_slater, verify_slater,
    verify_theta_product,
};
pub use report::{
    compare_bi, compare_cyc, compare_exact, compare_series, Discrepancy, IdentityReport,
    PartReport, Window,
};
pub use roots::{root_match_sides, verify_root_match};
pub use two_variable::{
    difference_equation_rhs, rewrite2_sides, verify_difference_equation,
    verify_multisum_representation, verify_rewrite2,
};
