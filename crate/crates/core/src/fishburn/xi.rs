//! Generalized Fishburn numbers.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::torus::{kz_one_minus_q, kz_polynomial, torus_params};

/// Extra terms summed beyond `count`; any guard `>= 0` gives the same values.
pub const DEFAULT_GUARD: usize = 4;

fn check_count(count: usize) -> Result<()> {
    if count == 0 {
        return Err(Error::InvalidParameter("count must be at least 1".into()));
    }
    Ok(())
}

/// `xi_t(0), ..., xi_t(count - 1)`, the coefficients of `F_t(1 - q)`.
pub fn xi_coefficients(t: u32, count: usize) -> Result<Vec<BigInt>> {
    xi_with_guard(t, count, DEFAULT_GUARD)
}

/// As [`xi_coefficients`], summing `count + guard` terms of the series.
pub fn xi_with_guard(t: u32, count: usize, guard: usize) -> Result<Vec<BigInt>> {
    check_count(count)?;
    let p = torus_params(t)?;
    let series = kz_one_minus_q(&p, (count + guard) as i64);
    Ok((0..count as i64)
        .map(|i| series.coeff(i).unwrap_or_default())
        .collect())
}

/// The same values via the exact partial sum `F_t(q; count + guard)` and
/// the substitution `q -> 1 - q` applied to that polynomial.
pub fn xi_by_substitution(t: u32, count: usize, guard: usize) -> Result<Vec<BigInt>> {
    check_count(count)?;
    let p = torus_params(t)?;
    let poly = kz_polynomial(&p, count + guard);
    let series = poly.substitute_one_minus_q(count as i64)?;
    Ok((0..count as i64)
        .map(|i| series.coeff(i).unwrap_or_default())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn printed_values() {
        assert_eq!(xi_coefficients(1, 6).unwrap(), ints(&[1, 1, 2, 5, 15, 53]));
        assert_eq!(
            xi_coefficients(2, 6).unwrap(),
            ints(&[1, 3, 11, 50, 280, 1890])
        );
        assert_eq!(
            xi_coefficients(3, 6).unwrap(),
            ints(&[1, 7, 49, 420, 4515, 59367])
        );
    }

    #[test]
    fn substitution_route_agrees() {
        for t in 1..=3 {
            assert_eq!(
                xi_by_substitution(t, 10, 2).unwrap(),
                xi_coefficients(t, 10).unwrap()
            );
        }
    }

    #[test]
    fn zero_count_rejected() {
        assert!(xi_coefficients(2, 0).is_err());
    }
}
