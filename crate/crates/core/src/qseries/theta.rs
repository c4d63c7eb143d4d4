//! Partial theta functions and their root-of-unity mean values.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::ThetaSpec;
use crate::arith::{CycInt, IntSeries};

/// `sum_{n>=0} n^nu chi(n) q^{(n^2-a)/b}` known below `order`.
///
/// Only the arithmetic progressions of the character's support are visited.
pub fn partial_theta(spec: &ThetaSpec, order: i64) -> IntSeries {
    let period = spec.chi().period() as i64;
    let mut terms: Vec<(i64, BigInt)> = Vec::new();
    for (r, v) in spec.chi().support() {
        let mut n = r;
        loop {
            let e = spec.exponent(n);
            if e >= order {
                break;
            }
            let weight = if spec.nu() == 1 {
                BigInt::from(n)
            } else {
                BigInt::from(1)
            };
            terms.push((e, weight * v));
            n += period;
        }
    }
    let low = terms
        .iter()
        .map(|(e, _)| *e)
        .min()
        .unwrap_or(order)
        .min(order);
    let mut coeffs = vec![BigInt::zero(); (order - low) as usize];
    for (e, c) in terms {
        coeffs[(e - low) as usize] += c;
    }
    IntSeries::truncated(low, coeffs, order)
}

/// `sum_{n=1}^{M * period} zeta_M^{(n^2-a)/b} chi(n)` in `Z[zeta_M]`.
pub fn mean_value(spec: &ThetaSpec, m: u64) -> CycInt {
    assert!(m >= 1, "root-of-unity order must be positive");
    let span = m as i64 * spec.chi().period() as i64;
    let mut sums = vec![BigInt::zero(); m as usize];
    for n in 1..=span {
        let v = spec.chi().value(n);
        if v != 0 {
            let r = spec.exponent(n).mod_floor(&(m as i64));
            sums[r as usize] += v;
        }
    }
    CycInt::from_residue_sums(m, sums)
}

/// Whether `n -> zeta_M^{(n^2-a)/b} chi(n)` has mean value zero, decided
/// exactly.
pub fn mean_value_zero(spec: &ThetaSpec, m: u64) -> bool {
    mean_value(spec, m).is_zero()
}
