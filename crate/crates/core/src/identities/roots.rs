use super::{compare_cyc, IdentityReport, Window};
use crate::arith::{cyc_eval, CycInt};
use crate::error::{Error, Result};
use crate::torus::{colored_jones, kz_at_root_of_unity, torus_params};

/// `zeta_N^{2^t - 1} F_t(zeta_N)` and `J_N(T(3, 2^t); zeta_N)` in `Z[zeta_N]`.
pub fn root_match_sides(t: u32, level: u64) -> Result<(CycInt, CycInt)> {
    if level == 0 {
        return Err(Error::InvalidParameter("N must be positive".into()));
    }
    let p = torus_params(t)?;
    let lhs = &CycInt::root_power(level, p.two_t() - 1) * &kz_at_root_of_unity(&p, level);
    let rhs = cyc_eval(&colored_jones(&p, level as i64), level)?;
    Ok((lhs, rhs))
}

pub fn verify_root_match(t: u32, n_max: u64) -> Result<IdentityReport> {
    if n_max == 0 {
        return Err(Error::InvalidParameter("N_max must be positive".into()));
    }
    let mut parts = Vec::new();
    for level in 1..=n_max {
        let (l, r) = root_match_sides(t, level)?;
        parts.push(compare_cyc(&format!("N = {level}"), &l, &r));
    }
    let window = Window {
        x_bound: None,
        q_order: None,
        n_max: Some(n_max),
    };
    Ok(IdentityReport::new("root-match", Some(t), window, parts))
}
