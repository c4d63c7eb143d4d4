//! Generalized Fishburn numbers, dissections and the congruences they
//! satisfy.

mod congruence;
mod dissection;
mod xi;

pub use congruence::{
    binom_congruence, is_prime, scan_congruence, straub_order_bound, straub_residue,
    verify_congruence, CongruenceEntry, CongruenceReport,
};
pub use dissection::{
    dissection, divisibility_check, piece_verdicts, s_set, Dissection, DivisibilityReport,
    PieceVerdict,
};
pub use xi::{xi_by_substitution, xi_coefficients, xi_with_guard, DEFAULT_GUARD};
