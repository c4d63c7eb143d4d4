//! q-hypergeometric building blocks: Pochhammer symbols, Gaussian
//! binomials, periodic characters, partial theta functions and the
//! infinite products they are equated with.

mod character;
mod pochhammer;
mod products;
mod theta;

pub use character::{chi_t, theta_spec_t, PeriodicChar, ThetaSpec};
pub use pochhammer::{binomial, infinite_pochhammer, pochhammer, q_binomial, QBinomialTable};
pub use products::{quintiple_sides, torus_bilateral_sum, torus_product};
pub use theta::{mean_value, mean_value_zero, partial_theta};
