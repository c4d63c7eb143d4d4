//! Partial theta functions against infinite products.

use super::{compare_series, IdentityReport, Window};
use crate::arith::{euler_product, IntSeries};
use crate::error::{Error, Result};
use crate::qseries::{
    infinite_pochhammer, partial_theta, pochhammer, quintiple_sides, theta_spec_t,
    torus_bilateral_sum, torus_product,
};
use crate::torus::{for_each_admissible, torus_params};

/// The unweighted partial theta function, its bilateral form, the torus
/// product and both sides of the quintiple product under the substitution
/// `q -> q^{2^{t+1}}`, `x -> q^{2^t - 1}`.
pub fn verify_theta_product(t: u32, q_order: i64) -> Result<IdentityReport> {
    if t < 2 {
        return Err(Error::InvalidParameter(format!("t = {t}: needs t >= 2")));
    }
    let theta = partial_theta(&theta_spec_t(t, 0)?, q_order);
    let product = torus_product(t, q_order);
    let bilateral = torus_bilateral_sum(t, q_order);
    let (wl, wr) = quintiple_sides(2 << t, (1 << t) - 1, q_order)?;
    let parts = vec![
        compare_series("theta = bilateral", &theta, &bilateral, q_order),
        compare_series("quintiple sum = quintiple product", &wl, &wr, q_order),
        compare_series("bilateral = quintiple sum", &bilateral, &wl, q_order),
        compare_series("theta = torus product", &theta, &product, q_order),
    ];
    let window = Window {
        x_bound: None,
        q_order: Some(q_order),
        n_max: None,
    };
    Ok(IdentityReport::new("theta-product", Some(t), window, parts))
}

/// `(q)_inf sum_n q^{2n(n+1)} / (q)_{2n+1}` and
/// `(q^3, q^5, q^8; q^8)_inf (q^2, q^14; q^16)_inf`.
pub fn slater_sides(q_order: i64) -> Result<(IntSeries, IntSeries)> {
    let mut sum = IntSeries::zero_to(q_order);
    let mut n = 0i64;
    while 2 * n * (n + 1) < q_order {
        let denom = pochhammer(1, 2 * n as u64 + 1, Some(q_order)).invert_unit()?;
        sum = &sum + &denom.shift(2 * n * (n + 1)).truncate(q_order);
        n += 1;
    }
    let lhs = euler_product(q_order).mul_truncated(&sum, q_order);
    let rhs = [(3, 8), (5, 8), (8, 8), (2, 16), (14, 16)]
        .iter()
        .fold(IntSeries::one().truncate(q_order), |acc, &(a, s)| {
            acc.mul_truncated(&infinite_pochhammer(a, s, q_order), q_order)
        });
    Ok((lhs, rhs))
}

/// `(q)_inf (-1)^{h''} q^{-h'} sum'_{jv} (-1)^{sum j} q^v / prod_l (q)_{j_l}`
/// and the torus product.
pub fn generalized_slater_sides(t: u32, q_order: i64) -> Result<(IntSeries, IntSeries)> {
    if t < 2 {
        return Err(Error::InvalidParameter(format!("t = {t}: needs t >= 2")));
    }
    let p = torus_params(t)?;
    let work = q_order + p.h_d();
    // v >= C(j, 2) bounds every entry
    let mut j_cap = 0i64;
    while j_cap * (j_cap - 1) / 2 < work {
        j_cap += 1;
    }
    let inverses = (0..=j_cap)
        .map(|j| pochhammer(1, j as u64, Some(work)).invert_unit())
        .collect::<Result<Vec<_>>>()?;
    let mut sum = IntSeries::zero_to(work);
    for_each_admissible(&p, j_cap, work, |j, v| {
        let mut term = IntSeries::monomial(
            v,
            if j.iter().sum::<i64>() % 2 == 0 {
                1
            } else {
                -1
            },
        )
        .truncate(work);
        for &jl in j {
            term = term.mul_truncated(&inverses[jl as usize], work);
        }
        sum = &sum + &term;
    });
    let lhs = euler_product(work)
        .mul_truncated(&sum, work)
        .shift(-p.h_d())
        .scale(&p.sign().into())
        .truncate(q_order);
    Ok((lhs, torus_product(t, q_order)))
}

pub fn verify_generalized_slater(t: u32, q_order: i64) -> Result<IdentityReport> {
    let (l, r) = generalized_slater_sides(t, q_order)?;
    let window = Window {
        x_bound: None,
        q_order: Some(q_order),
        n_max: None,
    };
    Ok(IdentityReport::new(
        "generalized-slater",
        Some(t),
        window,
        vec![compare_series("sum side = product side", &l, &r, q_order)],
    ))
}

/// Slater's identity together with its generalization at `t = 2` and `t = 3`.
pub fn verify_slater(q_order: i64) -> Result<IdentityReport> {
    if q_order < 1 {
        return Err(Error::InvalidParameter("q_order must be positive".into()));
    }
    let (l, r) = slater_sides(q_order)?;
    let mut parts = vec![compare_series("slater", &l, &r, q_order)];
    for t in [2, 3] {
        let (gl, gr) = generalized_slater_sides(t, q_order)?;
        parts.push(compare_series(
            &format!("generalized t = {t}"),
            &gl,
            &gr,
            q_order,
        ));
    }
    let (g2, _) = generalized_slater_sides(2, q_order)?;
    parts.push(compare_series(
        "generalized t = 2 sum = slater sum",
        &g2,
        &l,
        q_order,
    ));
    let window = Window {
        x_bound: None,
        q_order: Some(q_order),
        n_max: None,
    };
    Ok(IdentityReport::new("slater", None, window, parts))
}
