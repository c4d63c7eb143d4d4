//! Admissible j-vectors and their exponents.

use num_integer::Integer;

use super::TorusParams;
use crate::error::{Error, Result};

/// Entries `j_1, ..., j_{m-1}` of a summation index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JVector(pub Vec<i64>);

impl JVector {
    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// `sum_l j_l`.
    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `sum_l l j_l`.
    pub fn weighted_total(&self) -> i64 {
        weighted(&self.0)
    }

    /// `3 sum_l l j_l = 1 (mod m)`.
    pub fn is_admissible(&self, p: &TorusParams) -> bool {
        if p.t() == 1 {
            return self.0.is_empty();
        }
        self.0.len() as i64 == p.m() - 1 && (3 * self.weighted_total() - 1).mod_floor(&p.m()) == 0
    }
}

fn weighted(j: &[i64]) -> i64 {
    j.iter().enumerate().map(|(i, x)| (i as i64 + 1) * x).sum()
}

fn binom2(j: i64) -> i64 {
    j * (j - 1) / 2
}

/// `v = (sum_l l j_l - a)/m + sum_l C(j_l, 2)`.
pub fn v_exponent(jv: &JVector, p: &TorusParams) -> Result<i64> {
    if p.t() == 1 {
        return if jv.0.is_empty() {
            Ok(0)
        } else {
            Err(Error::Inadmissible(jv.0.clone()))
        };
    }
    if jv.0.len() as i64 != p.m() - 1 || jv.0.iter().any(|&j| j < 0) {
        return Err(Error::Inadmissible(jv.0.clone()));
    }
    let (quot, rem) = (jv.weighted_total() - p.a()).div_mod_floor(&p.m());
    if rem != 0 {
        return Err(Error::Inadmissible(jv.0.clone()));
    }
    Ok(quot + jv.0.iter().map(|&j| binom2(j)).sum::<i64>())
}

/// Call `f(j, v)` for every admissible vector with all `j_l <= j_cap` and
/// `v < v_cap`, in lexicographic order of `(j_1, ..., j_{m-1})`.
///
/// At `t = 1` the single empty vector with `v = 0` is produced.
pub fn for_each_admissible(
    p: &TorusParams,
    j_cap: i64,
    v_cap: i64,
    mut f: impl FnMut(&[i64], i64),
) {
    if v_cap <= 0 || j_cap < 0 {
        return;
    }
    if p.t() == 1 {
        f(&[], 0);
        return;
    }
    let len = (p.m() - 1) as usize;
    let mut j = vec![0i64; len];
    dfs(p, j_cap, v_cap, 0, 0, 0, &mut j, &mut f);
}

// lower bound of v over all completions given the weighted sum and the
// binomial sum of the fixed prefix
fn lower_bound(p: &TorusParams, weighted: i64, binoms: i64) -> i64 {
    binoms + Integer::div_ceil(&(weighted - p.a()), &p.m()).max(0)
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    p: &TorusParams,
    j_cap: i64,
    v_cap: i64,
    pos: usize,
    weighted: i64,
    binoms: i64,
    j: &mut Vec<i64>,
    f: &mut impl FnMut(&[i64], i64),
) {
    if pos == j.len() {
        let (quot, rem) = (weighted - p.a()).div_mod_floor(&p.m());
        if rem == 0 {
            let v = quot + binoms;
            if v < v_cap {
                f(j, v);
            }
        }
        return;
    }
    let ell = pos as i64 + 1;
    for x in 0..=j_cap {
        let w = weighted + ell * x;
        let b = binoms + binom2(x);
        if lower_bound(p, w, b) >= v_cap {
            break;
        }
        j[pos] = x;
        dfs(p, j_cap, v_cap, pos + 1, w, b, j, f);
    }
    j[pos] = 0;
}

/// Collected form of [`for_each_admissible`].
pub fn admissible_jvectors(p: &TorusParams, j_cap: i64, v_cap: i64) -> Vec<(JVector, i64)> {
    let mut out = Vec::new();
    for_each_admissible(p, j_cap, v_cap, |j, v| out.push((JVector(j.to_vec()), v)));
    out
}
