//! The two-variable series `H_t(x, q)`, `M_t(x, q)` and the coefficients
//! `a_{n,t}`, `b_{n,t}`.

use num_integer::Integer;

use super::{for_each_admissible, TorusParams};
use crate::arith::{BiSeries, IntSeries};
use crate::qseries::{chi_t, QBinomialTable};

fn sign_of(sum: i64) -> i64 {
    if sum % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `H_t = sum_{n >= 0} chi_t(n) q^{(n^2 - n_0^2)/(3 2^{t+2})} x^{(n - n_0)/2}`
/// with `n_0 = 2^{t+1} - 3`.
pub fn h_theta(p: &TorusParams, x_bound: usize, q_order: i64) -> BiSeries {
    let chi = chi_t(p.t()).expect("t already validated");
    let n0 = 2 * p.two_t() - 3;
    let b = 12 * p.two_t();
    let mut out = BiSeries::zero(x_bound, q_order);
    let mut n = n0;
    while ((n - n0) / 2) < x_bound as i64 {
        let c = chi.value(n);
        if c != 0 {
            out.add_term(((n - n0) / 2) as usize, (n * n - n0 * n0) / b, c);
        }
        n += 2;
    }
    out
}

/// `(x; q)_{n+1}` on a window.
fn x_pochhammer(len: usize, x_bound: usize, q_order: i64) -> BiSeries {
    let mut acc = BiSeries::zero(x_bound, q_order);
    acc.add_term(0, 0, 1);
    for i in 0..len as i64 {
        let mut factor = BiSeries::zero(x_bound, q_order);
        factor.add_term(0, 0, 1);
        factor.add_term(1, i, -1);
        acc = acc.mul(&factor);
    }
    acc
}

/// `sum_{jv} (-x)^{sum j} q^v sum_k x^k prod_l [n + I(l <= k), j_l]`, shifted
/// by `x^{n m}`, on the window.
fn inner_bi(
    p: &TorusParams,
    table: &QBinomialTable,
    n: i64,
    x_bound: usize,
    q_order: i64,
) -> BiSeries {
    let m = p.m();
    let mut out = BiSeries::zero(x_bound, q_order);
    for_each_admissible(p, n + 1, q_order, |j, v| {
        let total: i64 = j.iter().sum();
        'k: for k in 0..m {
            let xe = n * m + total + k;
            if xe >= x_bound as i64 {
                break;
            }
            let mut prod = IntSeries::one().truncate(q_order - v);
            for (i, &jl) in j.iter().enumerate() {
                let top = n + i64::from((i as i64) < k);
                let Some(b) = table.get(top, jl) else {
                    continue 'k;
                };
                prod = prod.mul_truncated(b, q_order - v);
            }
            let term = prod.shift(v).scale(&sign_of(total).into());
            out.add_row_term(xe as usize, &term);
        }
    });
    out
}

/// The multisum side
/// `(-1)^{h''} q^{-h'} x^{-h} sum_n (x)_{n+1} x^{n m} sum_{jv} (-x)^{sum j} q^v
///  sum_k x^k prod_l [n + I(l <= k), j_l]`.
///
/// Every term has x-degree at least `h`, so the result is a power series in `x`.
pub fn h_multisum(p: &TorusParams, x_bound: usize, q_order: i64) -> BiSeries {
    let h = p.h() as usize;
    let raw_x = x_bound + h;
    let raw_q = q_order + p.h_d();
    let max_n = (raw_x as i64 + p.m() - 1) / p.m();
    let table = QBinomialTable::new(max_n + 2, max_n + 2, Some(raw_q));
    let mut raw = BiSeries::zero(raw_x, raw_q);
    let mut n = 0i64;
    while n * p.m() < raw_x as i64 {
        let inner = inner_bi(p, &table, n, raw_x, raw_q);
        raw = raw.add(&x_pochhammer(n as usize + 1, raw_x, raw_q).mul(&inner));
        n += 1;
    }
    for d in 0..h {
        assert!(raw.row(d).is_zero(), "x-degree {d} below h survives");
    }
    let rows = raw.rows()[h..]
        .iter()
        .map(|r| r.shift(-p.h_d()).scale(&p.sign().into()))
        .collect();
    BiSeries::from_rows(rows, q_order)
}

/// `M_t = sum_n x^{n m} sum_{jv} (-x)^{sum j} q^v sum_k x^k
///  prod_l [n + I(l <= k), j_l]`.
pub fn m_series(p: &TorusParams, x_bound: usize, q_order: i64) -> BiSeries {
    let max_n = x_bound as i64 / p.m() + 1;
    let table = QBinomialTable::new(max_n + 2, max_n + 2, Some(q_order));
    let mut out = BiSeries::zero(x_bound, q_order);
    let mut n = 0i64;
    while n * p.m() < x_bound as i64 {
        out = out.add(&inner_bi(p, &table, n, x_bound, q_order));
        n += 1;
    }
    out
}

/// Table able to serve [`a_n_t_with`] for every index up to `n_max`.
pub fn a_table(p: &TorusParams, n_max: i64, q_order: i64) -> QBinomialTable {
    let top = n_max.max(0) / p.m() + 2;
    // entries with C(j, 2) >= q_order never survive the v-cap
    let mut width = 0i64;
    while width * (width - 1) / 2 < q_order {
        width += 1;
    }
    QBinomialTable::new(top, width.min(top), Some(q_order))
}

/// `a_{n,t}` using a prebuilt table (see [`a_table`]).
pub fn a_n_t_with(p: &TorusParams, table: &QBinomialTable, n: i64, q_order: i64) -> IntSeries {
    let mut acc = IntSeries::zero_to(q_order);
    if n < 0 {
        return acc;
    }
    let m = p.m();
    // every top is at most n/m + 1, and j_l <= top
    let j_cap = n / m + 1;
    for_each_admissible(p, j_cap, q_order, |j, v| {
        let total: i64 = j.iter().sum();
        let ov = (n - total).mod_floor(&m);
        let base = (n - total - ov) / m;
        let mut prod = IntSeries::one().truncate(q_order - v);
        for (i, &jl) in j.iter().enumerate() {
            let top = base + i64::from((i as i64) < ov);
            let Some(b) = table.get(top, jl) else {
                return;
            };
            prod = prod.mul_truncated(b, q_order - v);
        }
        acc = &acc + &prod.shift(v).scale(&sign_of(total).into());
    });
    acc
}

/// `a_{n,t}(q)`; zero for `n < 0`.
pub fn a_n_t(p: &TorusParams, n: i64, q_order: i64) -> IntSeries {
    a_n_t_with(p, &a_table(p, n, q_order), n, q_order)
}

/// `b_{n,t} = a_{n,t} - a_{n-1,t}`.
pub fn b_n_t(p: &TorusParams, n: i64, q_order: i64) -> IntSeries {
    let table = a_table(p, n, q_order);
    &a_n_t_with(p, &table, n, q_order) - &a_n_t_with(p, &table, n - 1, q_order)
}
