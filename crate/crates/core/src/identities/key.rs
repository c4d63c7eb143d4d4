//! The identity relating the weighted partial theta function to the
//! Kontsevich-Zagier series, checked in doubled form over the integers.

use super::{compare_series, IdentityReport, PartReport, Window};
use crate::arith::{divisor_sum_series, euler_product, IntSeries};
use crate::error::{Error, Result};
use crate::qseries::{partial_theta, pochhammer, theta_spec_t, torus_product};
use crate::torus::{
    a_n_t_with, a_table, inner_sums, torus_params, InnerWeights, TorusParams, TruncRing,
};

/// Partial sums `sum_{n <= K} b_{n,t}` and `sum_{n <= K} (n - h) b_{n,t}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BSums {
    pub cutoff: i64,
    pub plain: IntSeries,
    pub weighted: IntSeries,
}

/// Sums of `b_{n,t}` known below `work`, up to `n = cutoff`.
pub fn b_sums(p: &TorusParams, cutoff: i64, work: i64) -> BSums {
    let table = a_table(p, cutoff, work);
    let mut prev = IntSeries::zero_to(work);
    let mut plain = IntSeries::zero_to(work);
    let mut weighted = IntSeries::zero_to(work);
    for n in 0..=cutoff {
        let a = a_n_t_with(p, &table, n, work);
        let b = &a - &prev;
        plain = &plain + &b;
        weighted = &weighted + &b.scale(&(n - p.h()).into());
        prev = a;
    }
    BSums {
        cutoff,
        plain,
        weighted,
    }
}

/// First `K` such that the `2m` terms `b_{K-2m+1}, ..., b_K` vanish below
/// `work` and some earlier term does not, searched up to `limit`.
pub fn adaptive_cutoff(p: &TorusParams, work: i64, limit: i64) -> Option<i64> {
    let mut reach = (8 * p.m() * work.max(1)).min(limit);
    loop {
        if let Some(k) = cutoff_within(p, work, reach) {
            return Some(k);
        }
        if reach >= limit {
            return None;
        }
        reach = (2 * reach).min(limit);
    }
}

fn cutoff_within(p: &TorusParams, work: i64, limit: i64) -> Option<i64> {
    let table = a_table(p, limit, work);
    let mut prev = IntSeries::zero_to(work);
    let mut seen_nonzero = false;
    let mut run = 0i64;
    for n in 0..=limit {
        let a = a_n_t_with(p, &table, n, work);
        if (&a - &prev).is_zero() {
            run += 1;
        } else {
            seen_nonzero = true;
            run = 0;
        }
        if seen_nonzero && run >= 2 * p.m() {
            return Some(n);
        }
        prev = a;
    }
    None
}

/// `2 x (left side)`: `P^{(1)}(q) - (2^{t+1} - 3) * torus product`.
pub fn key_lhs(t: u32, q_order: i64) -> Result<IntSeries> {
    let theta = partial_theta(&theta_spec_t(t, 1)?, q_order);
    let n0 = 2 * (1i64 << t) - 3;
    Ok(&theta - &torus_product(t, q_order).scale(&n0.into()))
}

/// `2 x (right side)` using the given partial sums of `b_{n,t}`.
pub fn key_rhs(p: &TorusParams, q_order: i64, b: &BSums) -> IntSeries {
    let work = q_order + p.h_d();
    let ring = TruncRing { order: work };
    let n_max = (work - 1).max(0) as usize;
    let inner = inner_sums(&ring, p, n_max, &InnerWeights::standard(&ring, p));
    let euler = euler_product(work);
    let mut first = IntSeries::zero_to(work);
    for (n, i_n) in inner.iter().enumerate() {
        let diff = &pochhammer(1, n as u64, Some(work)) - &euler;
        first = &first + &diff.mul_truncated(i_n, work);
    }
    let divisor = divisor_sum_series(work);
    let second = euler
        .mul_truncated(&divisor, work)
        .mul_truncated(&b.plain, work);
    let third = euler.mul_truncated(&b.weighted, work);
    let s0 = p.sign();
    let total = &(&first + &second).scale(&(-s0).into()) + &third.scale(&s0.into());
    total.shift(-p.h_d()).scale(&2.into()).truncate(q_order)
}

/// Both doubled sides on `q_order`, together with the cutoff used and the
/// same right side at twice the cutoff.
pub fn verify_key_identity(t: u32, q_order: i64) -> Result<IdentityReport> {
    if t < 2 {
        return Err(Error::InvalidParameter(format!(
            "t = {t}: the key identity needs t >= 2"
        )));
    }
    let p = torus_params(t)?;
    let work = q_order + p.h_d();
    let limit = 64 * p.m() * work.max(1);
    let window = Window {
        x_bound: None,
        q_order: Some(q_order),
        n_max: None,
    };
    let Some(cutoff) = adaptive_cutoff(&p, work, limit) else {
        let part = PartReport::failed("cutoff", &format!("b_n did not settle below n = {limit}"));
        return Ok(IdentityReport::new("key", Some(t), window, vec![part]));
    };
    let lhs = key_lhs(t, q_order)?;
    let rhs = key_rhs(&p, q_order, &b_sums(&p, cutoff, work));
    let doubled = b_sums(&p, 2 * cutoff, work);
    let rhs_doubled = key_rhs(&p, q_order, &doubled);
    let parts = vec![
        compare_series("2 lhs = 2 rhs", &lhs, &rhs, q_order),
        compare_series("cutoff K = cutoff 2K", &rhs, &rhs_doubled, q_order),
    ];
    Ok(IdentityReport::new("key", Some(t), window, parts)
        .with_detail("cutoff", cutoff)
        .with_detail("sign_convention", "included"))
}
