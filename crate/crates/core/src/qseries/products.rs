//! The five-fold torus product and Watson's quintiple product.

use num_bigint::BigInt;
use num_traits::Zero;

use super::infinite_pochhammer;
use crate::arith::IntSeries;
use crate::error::{Error, Result};

/// `(q^{2^t-1}, q^{2^t+1}, q^{2^{t+1}}; q^{2^{t+1}})_inf
///  (q^2, q^{2^{t+2}-2}; q^{2^{t+2}})_inf` known below `order`.
pub fn torus_product(t: u32, order: i64) -> IntSeries {
    let p = 1i64 << t;
    let factors = [
        (p - 1, 2 * p),
        (p + 1, 2 * p),
        (2 * p, 2 * p),
        (2, 4 * p),
        (4 * p - 2, 4 * p),
    ];
    factors
        .iter()
        .fold(IntSeries::one().truncate(order), |acc, &(start, step)| {
            acc.mul_truncated(&infinite_pochhammer(start, step, order), order)
        })
}

fn accumulate(terms: impl IntoIterator<Item = (i64, i64)>, order: i64) -> IntSeries {
    let mut coeffs = vec![BigInt::zero(); order.max(0) as usize];
    for (e, c) in terms {
        if (0..order).contains(&e) {
            coeffs[e as usize] += c;
        }
    }
    IntSeries::truncated(0, coeffs, order)
}

/// Both sides of the quintiple product identity
/// `sum_k q^{k(3k-1)/2} x^{3k} (1 - x q^k) = (q, x, q/x; q)_inf (q x^2, q/x^2; q^2)_inf`
/// under `q -> q^P`, `x -> q^X`, each computed independently below `order`.
pub fn quintiple_sides(q_power: i64, x_power: i64, order: i64) -> Result<(IntSeries, IntSeries)> {
    if q_power < 1 || x_power < 1 || 2 * x_power >= q_power {
        return Err(Error::InvalidParameter(format!(
            "quintiple substitution q -> q^{q_power}, x -> q^{x_power} leaves exponents \
             unbounded below; need 1 <= X and 2X < P"
        )));
    }
    let (p, x) = (q_power, x_power);
    let mut terms = Vec::new();
    // e(k) >= (3p/2) k^2 - (p/2 + 3x + p) |k| - x; |k| <= bound covers the window
    let mut bound = 0i64;
    while 3 * p * bound * bound / 2 - (3 * p / 2 + 3 * x + 1) * bound - x < order {
        bound += 1;
    }
    for k in -bound..=bound {
        let e1 = p * k * (3 * k - 1) / 2 + 3 * k * x;
        terms.push((e1, 1));
        terms.push((e1 + x + p * k, -1));
    }
    let lhs = accumulate(terms, order);
    let rhs = [
        (p, p),
        (x, p),
        (p - x, p),
        (p + 2 * x, 2 * p),
        (p - 2 * x, 2 * p),
    ]
    .iter()
    .fold(IntSeries::one().truncate(order), |acc, &(start, step)| {
        acc.mul_truncated(&infinite_pochhammer(start, step, order), order)
    });
    Ok((lhs, rhs))
}

/// The bilateral form
/// `sum_{k in Z} (q^{3 2^t k^2 + (2^{t+1}-3)k} - q^{3 2^t k^2 + (2^{t+2}-3)k + 2^t - 1})`.
pub fn torus_bilateral_sum(t: u32, order: i64) -> IntSeries {
    let p = 1i64 << t;
    let mut terms = Vec::new();
    let mut k = 0i64;
    loop {
        let mut any = false;
        for kk in if k == 0 { vec![0] } else { vec![k, -k] } {
            let e1 = 3 * p * kk * kk + (2 * p - 3) * kk;
            let e2 = 3 * p * kk * kk + (4 * p - 3) * kk + p - 1;
            any |= e1 < order || e2 < order;
            terms.push((e1, 1));
            terms.push((e2, -1));
        }
        if !any && k > 0 {
            break;
        }
        k += 1;
    }
    accumulate(terms, order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_product_t2() {
        let expected = IntSeries::from_i64(0, &[1, 0, -1, -1, 0, 0, 0, 1, 0, 0, 0]).truncate(11);
        assert_eq!(torus_product(2, 11), expected);
        for t in 1..=4 {
            assert_eq!(torus_product(t, 5).coeff(0), Some(1.into()));
        }
    }

    #[test]
    fn quintiple_sides_agree() {
        let (l, r) = quintiple_sides(8, 3, 30).unwrap();
        assert_eq!(l, r);
        let (l, r) = quintiple_sides(16, 7, 50).unwrap();
        assert_eq!(l, r);
        // k = 0 gives 1 - q^X, k = -1 contributes -q^2
        let (l, _) = quintiple_sides(8, 3, 4).unwrap();
        assert_eq!(l, IntSeries::from_i64(0, &[1, 0, -1, -1]).truncate(4));
    }

    #[test]
    fn quintiple_rejects_bad_substitutions() {
        assert!(quintiple_sides(8, 4, 10).is_err());
        assert!(quintiple_sides(8, 0, 10).is_err());
    }
}
