//! The torus knots `T(3, 2^t)`: parameters, j-vector enumeration, the
//! Kontsevich-Zagier series, the colored Jones polynomial and the
//! two-variable generating functions built from them.

mod graded;
mod jvector;
mod kz;
mod params;
mod two_var;

pub use graded::{
    inner_sums, kz_at_root_of_unity, kz_one_minus_q, kz_polynomial, kz_sum, kz_truncated,
    pochhammers, CyclicRing, ExactRing, InnerWeights, QRing, TruncRing, UnitShiftRing,
};
pub use jvector::{admissible_jvectors, for_each_admissible, v_exponent, JVector};
pub use kz::{colored_jones, kz_partial_sum};
pub use params::{torus_params, TorusParams};
pub use two_var::{a_n_t, a_n_t_with, a_table, b_n_t, h_multisum, h_theta, m_series};
