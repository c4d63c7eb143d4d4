//! q-Pochhammer symbols and Gaussian binomial coefficients.

use num_bigint::BigInt;

use crate::arith::IntSeries;

fn one_minus_monomial(e: i64) -> IntSeries {
    &IntSeries::one() - &IntSeries::monomial(e, 1)
}

/// `(q^base_exp; q)_n = prod_{k=1}^{n} (1 - q^{base_exp + k - 1})`.
///
/// With `order = None` the exact Laurent polynomial is returned. A factor
/// `1 - q^0` makes the product exactly zero.
pub fn pochhammer(base_exp: i64, n: u64, order: Option<i64>) -> IntSeries {
    let exps = (0..n as i64).map(|k| base_exp + k);
    if exps.clone().any(|e| e == 0) {
        return IntSeries::zero();
    }
    let mut acc = IntSeries::one();
    match order {
        // factors with negative exponents lower the valuation, so the
        // product is formed exactly and truncated once at the end
        Some(k) if base_exp >= 1 => {
            acc = acc.truncate(k);
            for e in exps.take_while(|&e| e < k) {
                acc = acc.mul_truncated(&one_minus_monomial(e), k);
            }
            acc
        }
        _ => {
            for e in exps {
                acc = &acc * &one_minus_monomial(e);
            }
            match order {
                Some(k) => acc.truncate(k),
                None => acc,
            }
        }
    }
}

/// `(q^start; q^step)_inf` known below `order`, for `start, step >= 1`.
pub fn infinite_pochhammer(start: i64, step: i64, order: i64) -> IntSeries {
    assert!(
        start >= 1 && step >= 1,
        "infinite product needs positive exponents"
    );
    let mut acc = IntSeries::one().truncate(order);
    let mut e = start;
    while e < order {
        acc = acc.mul_truncated(&one_minus_monomial(e), order);
        e += step;
    }
    acc
}

/// Gaussian binomial `[n, k]` as an exact polynomial; zero unless
/// `0 <= k <= n`.
pub fn q_binomial(n: i64, k: i64) -> IntSeries {
    if k < 0 || n < 0 || k > n {
        return IntSeries::zero();
    }
    let k = k.min(n - k);
    // row of [m, 0..=k] for m = 0..=n by the q-Pascal rule
    let mut row: Vec<IntSeries> = vec![IntSeries::one()];
    for m in 1..=n {
        let width = (m.min(k) + 1) as usize;
        let mut next = Vec::with_capacity(width);
        for j in 0..width {
            let j64 = j as i64;
            let left = if j == 0 {
                IntSeries::zero()
            } else {
                row[j - 1].clone()
            };
            let right = row
                .get(j)
                .map(|r| r.shift(j64))
                .unwrap_or_else(IntSeries::zero);
            next.push(&left + &right);
        }
        row = next;
    }
    row.pop().expect("row has k + 1 entries")
}

/// Table of `[n, k]` for `n <= max_n`, `k <= max_k`, optionally truncated.
#[derive(Clone, Debug)]
pub struct QBinomialTable {
    max_n: i64,
    rows: Vec<Vec<IntSeries>>,
}

impl QBinomialTable {
    pub fn new(max_n: i64, max_k: i64, order: Option<i64>) -> Self {
        let max_n = max_n.max(0);
        let max_k = max_k.max(0);
        let cut = |s: IntSeries| match order {
            Some(o) => s.truncate(o),
            None => s,
        };
        let mut rows: Vec<Vec<IntSeries>> = Vec::with_capacity(max_n as usize + 1);
        rows.push(vec![cut(IntSeries::one())]);
        for m in 1..=max_n {
            let prev = &rows[m as usize - 1];
            let width = m.min(max_k) as usize + 1;
            let mut next = Vec::with_capacity(width);
            for j in 0..width {
                let left = (j > 0).then(|| &prev[j - 1]);
                let right = prev.get(j).map(|r| cut(r.shift(j as i64)));
                let entry = match (left, right) {
                    (Some(l), Some(r)) => l + &r,
                    (Some(l), None) => l.clone(),
                    (None, Some(r)) => r,
                    (None, None) => unreachable!(),
                };
                next.push(cut(entry));
            }
            rows.push(next);
        }
        QBinomialTable { max_n, rows }
    }

    /// `[n, k]`, or `None` when the coefficient is zero (`k < 0`, `k > n`
    /// or `n < 0`).
    pub fn get(&self, n: i64, k: i64) -> Option<&IntSeries> {
        if n < 0 || k < 0 || k > n {
            return None;
        }
        assert!(
            n <= self.max_n,
            "q-binomial table built to n = {}, asked for {n}",
            self.max_n
        );
        let row = &self.rows[n as usize];
        Some(
            row.get(k as usize)
                .unwrap_or_else(|| panic!("q-binomial table too narrow for [{n}, {k}]")),
        )
    }
}

/// Coefficient sum of `[n, k]`, i.e. `C(n, k)`; handy for sanity checks.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
