pub mod arith;
mod error;
pub mod fishburn;
pub mod identities;
pub mod qseries;
pub mod torus;

pub use error::{Error, Result};
