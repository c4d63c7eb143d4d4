//! Classical series: the Euler product and the divisor-count series.

use num_bigint::BigInt;
use num_traits::Zero;

use super::IntSeries;

/// `(q;q)_inf` known below `order`, from the pentagonal number theorem
/// `sum_k (-1)^k q^{k(3k-1)/2}`.
pub fn euler_product(order: i64) -> IntSeries {
    assert!(order >= 1, "euler_product needs order >= 1");
    let mut coeffs = vec![BigInt::zero(); order as usize];
    coeffs[0] = BigInt::from(1);
    for k in 1i64.. {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let e1 = k * (3 * k - 1) / 2;
        let e2 = k * (3 * k + 1) / 2;
        if e1 >= order {
            break;
        }
        coeffs[e1 as usize] += sign;
        if e2 < order {
            coeffs[e2 as usize] += sign;
        }
    }
    IntSeries::truncated(0, coeffs, order)
}

/// `sum_{n>=1} d(n) q^n = sum_{i>=1} q^i / (1 - q^i)` known below `order`.
pub fn divisor_sum_series(order: i64) -> IntSeries {
    assert!(order >= 1, "divisor_sum_series needs order >= 1");
    let n = order as usize;
    let mut counts = vec![0i64; n];
    for d in 1..n {
        for multiple in (d..n).step_by(d) {
            counts[multiple] += 1;
        }
    }
    IntSeries::truncated(0, counts.into_iter().map(BigInt::from).collect(), order)
}
