//! Exact arithmetic underlying every other module: truncated Laurent
//! series, bivariate series, cyclotomic integers and exact division.

mod biseries;
mod cyclotomic;
mod divide;
mod products;
mod series;

pub use biseries::BiSeries;
pub use cyclotomic::{cyc_eval, cyclotomic_poly, CycInt};
pub use divide::{poly_divides, Divisibility};
pub use products::{divisor_sum_series, euler_product};
pub use series::IntSeries;
