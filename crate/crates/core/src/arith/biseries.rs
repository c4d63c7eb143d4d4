//! Series in two variables, truncated in `x` and in `q`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::IntSeries;

/// `sum_{d < x_bound} c_d(q) x^d` where every `c_d` is known below `q_order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSeries {
    q_order: i64,
    rows: Vec<IntSeries>,
}

impl BiSeries {
    pub fn zero(x_bound: usize, q_order: i64) -> Self {
        BiSeries {
            q_order,
            rows: vec![IntSeries::zero_to(q_order); x_bound],
        }
    }

    /// Build from per-degree coefficients; each row is truncated to `q_order`.
    pub fn from_rows(rows: Vec<IntSeries>, q_order: i64) -> Self {
        BiSeries {
            q_order,
            rows: rows.into_iter().map(|r| r.truncate(q_order)).collect(),
        }
    }

    pub fn x_bound(&self) -> usize {
        self.rows.len()
    }

    pub fn q_order(&self) -> i64 {
        self.q_order
    }

    /// Coefficient of `x^d` as a series in `q`.
    pub fn row(&self, d: usize) -> &IntSeries {
        &self.rows[d]
    }

    pub fn rows(&self) -> &[IntSeries] {
        &self.rows
    }

    /// Add `c x^d q^e`; terms outside the window are dropped.
    pub fn add_term(&mut self, d: usize, e: i64, c: impl Into<BigInt>) {
        if d >= self.rows.len() || e >= self.q_order {
            return;
        }
        let term = IntSeries::monomial(e, c.into());
        self.rows[d] = &self.rows[d] + &term;
    }

    /// Add `x^d * s(q)`.
    pub fn add_row_term(&mut self, d: usize, s: &IntSeries) {
        if d < self.rows.len() {
            self.rows[d] = (&self.rows[d] + s).truncate(self.q_order);
        }
    }

    /// Restrict to a smaller window.
    pub fn restrict(&self, x_bound: usize, q_order: i64) -> Self {
        let x_bound = x_bound.min(self.rows.len());
        let q_order = q_order.min(self.q_order);
        BiSeries::from_rows(self.rows[..x_bound].to_vec(), q_order)
    }

    /// Product on the window of `self`.
    pub fn mul(&self, other: &BiSeries) -> BiSeries {
        let x_bound = self.rows.len().min(other.rows.len());
        let q_order = self.q_order.min(other.q_order);
        let mut out = BiSeries::zero(x_bound, q_order);
        for (i, a) in self.rows.iter().enumerate().take(x_bound) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.rows.iter().enumerate().take(x_bound - i) {
                if b.is_zero() {
                    continue;
                }
                let prod = a.mul_truncated(b, q_order);
                out.rows[i + j] = &out.rows[i + j] + &prod;
            }
        }
        out
    }

    pub fn add(&self, other: &BiSeries) -> BiSeries {
        let x_bound = self.rows.len().min(other.rows.len());
        let q_order = self.q_order.min(other.q_order);
        let rows = (0..x_bound)
            .map(|d| &self.rows[d] + &other.rows[d])
            .collect();
        BiSeries::from_rows(rows, q_order)
    }

    /// Multiply by `x^k q^e`, keeping the window of `self`.
    pub fn shift(&self, k: usize, e: i64) -> BiSeries {
        let mut rows = vec![IntSeries::zero_to(self.q_order); self.rows.len()];
        for (d, r) in self.rows.iter().enumerate() {
            if d + k < rows.len() {
                rows[d + k] = r.shift(e);
            }
        }
        BiSeries::from_rows(rows, self.q_order)
    }

    /// Substitute `x -> q^k x`; the coefficient of `x^d` gains `q^{k d}`.
    pub fn scale_x(&self, k: i64) -> BiSeries {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(d, r)| r.shift(k * d as i64))
            .collect();
        BiSeries::from_rows(rows, self.q_order)
    }

    /// First `(x-degree, q-exponent, lhs, rhs)` where the two series differ
    /// on their common window.
    pub fn first_difference(&self, other: &BiSeries) -> Option<(usize, i64, BigInt, BigInt)> {
        let x_bound = self.rows.len().min(other.rows.len());
        let q_order = self.q_order.min(other.q_order);
        (0..x_bound).find_map(|d| {
            let a = self.rows[d].truncate(q_order);
            let b = other.rows[d].truncate(q_order);
            a.first_difference(&b).map(|(e, x, y)| (d, e, x, y))
        })
    }

    /// Number of nonzero coefficients.
    pub fn term_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.coeffs().iter().filter(|c| !c.is_zero()).count())
            .sum()
    }
}
