//! Exact division of integer Laurent polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::IntSeries;
use crate::error::{Error, Result};

/// Outcome of [`poly_divides`].
///
/// When `divides` holds, `p = d * quotient * q^shift` with `quotient` an
/// integer polynomial whose constant term is nonzero. Otherwise `remainder`
/// holds the partial remainder at the step where integral division failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divisibility {
    pub divides: bool,
    pub quotient: IntSeries,
    pub shift: i64,
    pub remainder: IntSeries,
}

fn stripped(s: &IntSeries) -> (i64, Vec<BigInt>) {
    (s.min_exp(), s.coeffs().to_vec())
}

/// Decide whether `d` divides `p` in `Z[q, q^-1]`, i.e. up to a monomial
/// unit `q^k`.
pub fn poly_divides(d: &IntSeries, p: &IntSeries) -> Result<Divisibility> {
    for s in [d, p] {
        if let Some(order) = s.order() {
            return Err(Error::NotPolynomial { order });
        }
    }
    if d.is_zero() {
        return Err(Error::InvalidParameter("divisor is zero".into()));
    }
    if p.is_zero() {
        return Ok(Divisibility {
            divides: true,
            quotient: IntSeries::zero(),
            shift: 0,
            remainder: IntSeries::zero(),
        });
    }
    let (vd, dc) = stripped(d);
    let (vp, mut rem) = stripped(p);
    let shift = vp - vd;
    let fail = |rem: Vec<BigInt>| Divisibility {
        divides: false,
        quotient: IntSeries::zero(),
        shift,
        remainder: IntSeries::polynomial(vp, rem),
    };
    if rem.len() < dc.len() {
        return Ok(fail(rem));
    }
    let lead = dc.last().expect("nonzero divisor").clone();
    let mut quot = vec![BigInt::zero(); rem.len() - dc.len() + 1];
    for i in (0..quot.len()).rev() {
        let top = &rem[i + dc.len() - 1];
        if top.is_zero() {
            continue;
        }
        let (qc, r) = top.div_rem(&lead);
        if !r.is_zero() {
            return Ok(fail(rem));
        }
        for (j, c) in dc.iter().enumerate() {
            rem[i + j] -= &qc * c;
        }
        quot[i] = qc;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return Ok(fail(rem));
    }
    Ok(Divisibility {
        divides: true,
        quotient: IntSeries::polynomial(0, quot),
        shift,
        remainder: IntSeries::zero(),
    })
}

/// Exact quotient `p / d`, panicking if the division is not exact. Used
/// where divisibility is guaranteed by construction.
pub(crate) fn exact_quotient(p: &IntSeries, d: &IntSeries) -> IntSeries {
    let res = poly_divides(d, p).expect("polynomial inputs");
    assert!(res.divides, "inexact division of {p} by {d}");
    res.quotient.shift(res.shift)
}
