//! Periodic characters and partial theta specifications.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// A periodic function `Z -> {-1, 0, 1}` stored as a residue table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodicChar {
    period: u64,
    values: Vec<i8>,
}

impl PeriodicChar {
    /// Character with the listed `(residue, value)` pairs and zero elsewhere.
    pub fn from_residues(period: u64, entries: &[(i64, i8)]) -> Result<Self> {
        if period == 0 {
            return Err(Error::InvalidParameter(
                "character period must be positive".into(),
            ));
        }
        let mut values = vec![0i8; period as usize];
        for &(r, v) in entries {
            if !(-1..=1).contains(&v) {
                return Err(Error::InvalidParameter(format!(
                    "character value {v} not in -1..=1"
                )));
            }
            values[r.mod_floor(&(period as i64)) as usize] = v;
        }
        Ok(PeriodicChar { period, values })
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn value(&self, n: i64) -> i8 {
        self.values[n.mod_floor(&(self.period as i64)) as usize]
    }

    /// Residues in `0..period` with a nonzero value, ascending.
    pub fn support(&self) -> impl Iterator<Item = (i64, i8)> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| **v != 0)
            .map(|(r, v)| (r as i64, *v))
    }
}

/// The character of period `3 * 2^(t+1)`: `+1` on `2^(t+1) - 3` and
/// `3 + 2^(t+2)`, `-1` on `2^(t+1) + 3` and `2^(t+2) - 3`.
///
/// At `t = 1` this is the conductor-12 character `(12/n)`.
pub fn chi_t(t: u32) -> Result<PeriodicChar> {
    if !(1..=28).contains(&t) {
        return Err(Error::InvalidParameter(format!("t = {t} outside 1..=28")));
    }
    let p1 = 1i64 << (t + 1);
    let p2 = 1i64 << (t + 2);
    PeriodicChar::from_residues(
        3 * p1 as u64,
        &[(p1 - 3, 1), (3 + p2, 1), (p1 + 3, -1), (p2 - 3, -1)],
    )
}

/// Data of a partial theta function `sum_{n>=0} n^nu chi(n) q^{(n^2 - a)/b}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaSpec {
    a: i64,
    b: i64,
    nu: u8,
    chi: PeriodicChar,
}

impl ThetaSpec {
    /// Validates that `(n^2 - a)/b` is integral wherever `chi(n) != 0`. The
    /// exponent mod 1 is periodic in `n` with period `lcm(period, b)`, which is
    /// the range scanned.
    pub fn new(a: i64, b: i64, nu: u8, chi: PeriodicChar) -> Result<Self> {
        if a < 0 || b <= 0 || nu > 1 {
            return Err(Error::InvalidParameter(format!(
                "theta spec needs a >= 0, b > 0, nu in {{0, 1}}; got a = {a}, b = {b}, nu = {nu}"
            )));
        }
        let span = (chi.period() as i64).lcm(&b);
        for n in 0..span {
            if chi.value(n) != 0 && (n * n - a).mod_floor(&b) != 0 {
                return Err(Error::NonIntegralExponent { a, b, n });
            }
        }
        Ok(ThetaSpec { a, b, nu, chi })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn nu(&self) -> u8 {
        self.nu
    }

    pub fn chi(&self) -> &PeriodicChar {
        &self.chi
    }

    /// `(n^2 - a)/b`; only meaningful on the support.
    pub fn exponent(&self, n: i64) -> i64 {
        Integer::div_floor(&(n * n - self.a), &self.b)
    }
}

/// `a = (2^(t+1) - 3)^2`, `b = 3 * 2^(t+2)`, `chi = chi_t`.
pub fn theta_spec_t(t: u32, nu: u8) -> Result<ThetaSpec> {
    let n0 = (1i64 << (t + 1)) - 3;
    ThetaSpec::new(n0 * n0, 3 * (1i64 << (t + 2)), nu, chi_t(t)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chi_two() {
        let c = chi_t(2).unwrap();
        assert_eq!(c.period(), 24);
        assert_eq!(
            (c.value(5), c.value(19), c.value(11), c.value(13)),
            (1, 1, -1, -1)
        );
        assert_eq!(c.value(6), 0);
        assert_eq!(c.value(-5), 1);
    }

    #[test]
    fn chi_three_support() {
        let c = chi_t(3).unwrap();
        assert_eq!(c.period(), 48);
        let support: Vec<_> = c.support().collect();
        assert_eq!(support, vec![(13, 1), (19, -1), (29, -1), (35, 1)]);
    }

    #[test]
    fn chi_one_is_conductor_twelve() {
        let c = chi_t(1).unwrap();
        let support: Vec<_> = c.support().collect();
        assert_eq!(support, vec![(1, 1), (5, -1), (7, -1), (11, 1)]);
    }

    #[test]
    fn every_chi_has_two_plus_two_minus() {
        for t in 1..=8 {
            let c = chi_t(t).unwrap();
            let plus = c.support().filter(|(_, v)| *v == 1).count();
            let minus = c.support().filter(|(_, v)| *v == -1).count();
            assert_eq!((plus, minus), (2, 2), "t = {t}");
        }
    }

    #[test]
    fn theta_spec_values() {
        let s2 = theta_spec_t(2, 1).unwrap();
        assert_eq!((s2.a(), s2.b()), (25, 48));
        assert_eq!(s2.exponent(11), 2);
        let s3 = theta_spec_t(3, 0).unwrap();
        assert_eq!((s3.a(), s3.b()), (169, 96));
    }

    #[test]
    fn integrality_condition_detects_bad_specs() {
        let c = chi_t(2).unwrap();
        assert!(matches!(
            ThetaSpec::new(24, 48, 0, c.clone()),
            Err(Error::NonIntegralExponent { .. })
        ));
        assert!(ThetaSpec::new(25, 48, 2, c).is_err());
    }
}
