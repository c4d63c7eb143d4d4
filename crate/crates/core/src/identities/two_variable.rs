//! Identities between two-variable series.

use super::{compare_bi, IdentityReport, Window};
use crate::arith::{BiSeries, IntSeries};
use crate::error::{Error, Result};
use crate::torus::{a_n_t_with, a_table, h_multisum, h_theta, m_series, torus_params, TorusParams};

fn params_from(t: u32) -> Result<TorusParams> {
    if t < 2 {
        return Err(Error::InvalidParameter(format!(
            "t = {t}: two-variable identities need t >= 2"
        )));
    }
    torus_params(t)
}

/// `1 - q^2 x^3 - q^{2^t - 1} x^{2^t} + q^{3 + 2^t} x^{3 + 2^t}
///  + q^{5 2^t - 3} x^{3 2^t} f(q^2 x)` on the window of `f`.
pub fn difference_equation_rhs(p: &TorusParams, f: &BiSeries) -> BiSeries {
    let tt = p.two_t();
    let mut known = BiSeries::zero(f.x_bound(), f.q_order());
    known.add_term(0, 0, 1);
    known.add_term(3, 2, -1);
    known.add_term(tt as usize, tt - 1, -1);
    known.add_term((3 + tt) as usize, 3 + tt, 1);
    let recursion = f.scale_x(2).shift(3 * tt as usize, 5 * tt - 3);
    known.add(&recursion)
}

/// `H_t` from the partial theta side and from the multisum side both
/// satisfy the difference equation on `(x_bound, q_order)`.
///
/// Row `d` of `f(q^2 x)` is `q^{2d}` times row `d` of `f`, so it is known
/// at least to `q_order`; the window is not reduced.
pub fn verify_difference_equation(t: u32, x_bound: usize, q_order: i64) -> Result<IdentityReport> {
    let p = params_from(t)?;
    let theta = h_theta(&p, x_bound, q_order);
    let multi = h_multisum(&p, x_bound, q_order);
    let parts = vec![
        compare_bi("theta side", &theta, &difference_equation_rhs(&p, &theta)),
        compare_bi(
            "multisum side",
            &multi,
            &difference_equation_rhs(&p, &multi),
        ),
    ];
    let window = Window {
        x_bound: Some(x_bound),
        q_order: Some(q_order),
        n_max: None,
    };
    Ok(IdentityReport::new(
        "difference-equation",
        Some(t),
        window,
        parts,
    ))
}

/// `H_t` as a partial theta function equals its multisum form.
pub fn verify_multisum_representation(
    t: u32,
    x_bound: usize,
    q_order: i64,
) -> Result<IdentityReport> {
    let p = params_from(t)?;
    let parts = vec![compare_bi(
        "theta = multisum",
        &h_theta(&p, x_bound, q_order),
        &h_multisum(&p, x_bound, q_order),
    )];
    let window = Window {
        x_bound: Some(x_bound),
        q_order: Some(q_order),
        n_max: None,
    };
    Ok(IdentityReport::new("multisum", Some(t), window, parts))
}

/// `(1 - x) M_t(x, q)` and `sum_n b_{n,t}(q) x^n`.
pub fn rewrite2_sides(p: &TorusParams, x_bound: usize, q_order: i64) -> (BiSeries, BiSeries) {
    let m = m_series(p, x_bound, q_order);
    let lhs = BiSeries::from_rows(
        (0..x_bound)
            .map(|d| match d {
                0 => m.row(0).clone(),
                _ => m.row(d) - m.row(d - 1),
            })
            .collect(),
        q_order,
    );
    let table = a_table(p, x_bound as i64, q_order);
    let a: Vec<IntSeries> = (-1..x_bound as i64)
        .map(|n| a_n_t_with(p, &table, n, q_order))
        .collect();
    let rhs = BiSeries::from_rows(a.windows(2).map(|w| &w[1] - &w[0]).collect(), q_order);
    (lhs, rhs)
}

pub fn verify_rewrite2(t: u32, x_bound: usize, q_order: i64) -> Result<IdentityReport> {
    let p = params_from(t)?;
    let (lhs, rhs) = rewrite2_sides(&p, x_bound, q_order);
    let window = Window {
        x_bound: Some(x_bound),
        q_order: Some(q_order),
        n_max: None,
    };
    Ok(IdentityReport::new(
        "rewrite2",
        Some(t),
        window,
        vec![compare_bi("(1-x)M = sum b_n x^n", &lhs, &rhs)],
    ))
}
