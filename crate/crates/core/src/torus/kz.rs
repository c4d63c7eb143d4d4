//! Direct j-vector summation of the Kontsevich-Zagier series and of the
//! colored Jones polynomial.

use rayon::prelude::*;

use super::{for_each_admissible, TorusParams};
use crate::arith::IntSeries;
use crate::qseries::{pochhammer, QBinomialTable};

fn sign_of(sum: i64) -> i64 {
    if sum % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `sum_k w^k prod_l [n + I(l <= k), j_l]`, each product formed through
/// the table and truncated by `cap`, where `w^k` is `q^{k * k_step}`.
fn k_sum(table: &QBinomialTable, n: i64, j: &[i64], k_step: i64, cap: Option<i64>) -> IntSeries {
    let m = j.len() + 1;
    let mut acc = match cap {
        Some(c) => IntSeries::zero_to(c),
        None => IntSeries::zero(),
    };
    'k: for k in 0..m {
        let mut prod = IntSeries::one();
        for (i, &jl) in j.iter().enumerate() {
            let top = n + i64::from(i < k);
            let Some(b) = table.get(top, jl) else {
                continue 'k;
            };
            prod = match cap {
                Some(c) => prod.mul_truncated(b, c),
                None => &prod * b,
            };
        }
        acc = &acc + &prod.shift(k as i64 * k_step);
    }
    acc
}

/// `F_t(q; N)` known below `order`, summed over explicitly enumerated
/// admissible j-vectors with `j_l <= n + 1` and `v < order + h'`.
pub fn kz_partial_sum(p: &TorusParams, n_max: i64, order: i64) -> IntSeries {
    if p.t() == 1 {
        let mut acc = IntSeries::zero_to(order);
        for n in 0..=n_max.max(-1) {
            acc = &acc + &pochhammer(1, n as u64, Some(order));
        }
        return acc;
    }
    let work = order + p.h_d();
    let table = QBinomialTable::new(n_max + 1, n_max + 1, Some(work));
    let terms: Vec<IntSeries> = (0..=n_max)
        .into_par_iter()
        .map(|n| {
            let mut inner = IntSeries::zero_to(work);
            for_each_admissible(p, n + 1, work, |j, v| {
                let ks = k_sum(&table, n, j, 0, Some(work - v));
                let signed = ks.shift(v).scale(&sign_of(j.iter().sum()).into());
                inner = &inner + &signed;
            });
            inner.mul_truncated(&pochhammer(1, n as u64, Some(work)), work)
        })
        .collect();
    let total = terms
        .iter()
        .fold(IntSeries::zero_to(work), |acc, s| &acc + s);
    total.shift(-p.h_d()).scale(&p.sign().into())
}

/// The colored Jones polynomial `J_N(T(3, 2^t); q)` as an exact Laurent
/// polynomial, normalized to `1` on the unknot.
pub fn colored_jones(p: &TorusParams, big_n: i64) -> IntSeries {
    assert!(big_n >= 1, "colour N must be positive");
    if p.t() == 1 {
        let mut acc = IntSeries::zero();
        for n in 0..big_n {
            let term = pochhammer(1 - big_n, n as u64, None).shift(-n * big_n);
            acc = &acc + &term;
        }
        return acc.shift(1 - big_n);
    }
    let table = QBinomialTable::new(big_n + 1, big_n + 1, None);
    let terms: Vec<IntSeries> = (0..big_n)
        .into_par_iter()
        .map(|n| {
            let mut inner = IntSeries::zero();
            for_each_admissible(p, n + 1, i64::MAX, |j, v| {
                let total: i64 = j.iter().sum();
                let ks = k_sum(&table, n, j, -big_n, None);
                inner = &inner + &ks.shift(v - big_n * total).scale(&sign_of(total).into());
            });
            let lead = pochhammer(1 - big_n, n as u64, None).shift(-big_n * n * p.m());
            &lead * &inner
        })
        .collect();
    let total = terms.iter().fold(IntSeries::zero(), |acc, s| &acc + s);
    total
        .shift(p.two_t() - 1 - p.h_d() - big_n)
        .scale(&p.sign().into())
}
