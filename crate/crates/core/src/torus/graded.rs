//! Evaluation of the torus-knot inner sums by a graded product over
//! `q^{1/m}`, generic over the coefficient ring.
//!
//! For each `l` the generating function
//! `G_l(top) = sum_j z^j q^{C(j,2)} [top, j] Q^{l j}` with `Q^m = q` is stored
//! as its `m` components by residue of the `Q`-exponent. The admissible
//! j-sum of `q^{(sum l j_l - a)/m} prod_l ...` is then the component `a`
//! of `prod_l G_l(top_l)`, so no j-vector is ever enumerated.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::TorusParams;
use crate::arith::{CycInt, IntSeries};

/// A commutative ring containing a distinguished element `q`.
pub trait QRing: Sync {
    type Elem: Clone + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `q^e` for any integer `e`.
    fn q_pow(&self, e: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.sub(&self.zero(), a)
    }
}

/// Exact Laurent polynomials.
#[derive(Clone, Copy, Debug, Default)]
pub struct ExactRing;

impl QRing for ExactRing {
    type Elem = IntSeries;
    fn zero(&self) -> IntSeries {
        IntSeries::zero()
    }
    fn one(&self) -> IntSeries {
        IntSeries::one()
    }
    fn add(&self, a: &IntSeries, b: &IntSeries) -> IntSeries {
        a + b
    }
    fn sub(&self, a: &IntSeries, b: &IntSeries) -> IntSeries {
        a - b
    }
    fn mul(&self, a: &IntSeries, b: &IntSeries) -> IntSeries {
        a * b
    }
    fn q_pow(&self, e: i64) -> IntSeries {
        IntSeries::monomial(e, 1)
    }
    fn is_zero(&self, a: &IntSeries) -> bool {
        a.is_zero()
    }
}

/// Series in `q` known below a fixed order.
#[derive(Clone, Copy, Debug)]
pub struct TruncRing {
    pub order: i64,
}

impl QRing for TruncRing {
    type Elem = IntSeries;
    fn zero(&self) -> IntSeries {
        IntSeries::zero_to(self.order)
    }
    fn one(&self) -> IntSeries {
        IntSeries::one().truncate(self.order)
    }
    fn add(&self, a: &IntSeries, b: &IntSeries) -> IntSeries {
        a + b
    }
    fn sub(&self, a: &IntSeries, b: &IntSeries) -> IntSeries {
        a - b
    }
    fn mul(&self, a: &IntSeries, b: &IntSeries) -> IntSeries {
        a.mul_truncated(b, self.order)
    }
    fn q_pow(&self, e: i64) -> IntSeries {
        IntSeries::monomial(e, 1).truncate(self.order)
    }
    fn is_zero(&self, a: &IntSeries) -> bool {
        a.is_zero()
    }
}

/// Power series in `u = 1 - q` known below `u^order`.
#[derive(Clone, Copy, Debug)]
pub struct UnitShiftRing {
    pub order: i64,
}

impl QRing for UnitShiftRing {
    type Elem = IntSeries;
    fn zero(&self) -> IntSeries {
        IntSeries::zero_to(self.order)
    }
    fn one(&self) -> IntSeries {
        IntSeries::one().truncate(self.order)
    }
    fn add(&self, a: &IntSeries, b: &IntSeries) -> IntSeries {
        a + b
    }
    fn sub(&self, a: &IntSeries, b: &IntSeries) -> IntSeries {
        a - b
    }
    fn mul(&self, a: &IntSeries, b: &IntSeries) -> IntSeries {
        a.mul_truncated(b, self.order)
    }
    /// `(1 - u)^e`, coefficientwise `(-1)^i C(e, i)` for any integer `e`.
    fn q_pow(&self, e: i64) -> IntSeries {
        let len = self.order.max(0) as usize;
        let mut coeffs = Vec::with_capacity(len);
        let mut c = BigInt::one();
        for i in 0..len as i64 {
            if c.is_zero() {
                break;
            }
            coeffs.push(c.clone());
            c = -(c * (e - i)) / (i + 1);
        }
        IntSeries::truncated(0, coeffs, self.order)
    }
    fn is_zero(&self, a: &IntSeries) -> bool {
        a.is_zero()
    }
}

/// `Z[q]/(q^level - 1)`, the group ring of the cyclic group of order
/// `level`; reduction by `Phi_level` happens only at the end.
#[derive(Clone, Copy, Debug)]
pub struct CyclicRing {
    pub level: u64,
}

impl QRing for CyclicRing {
    type Elem = Vec<BigInt>;
    fn zero(&self) -> Vec<BigInt> {
        vec![BigInt::zero(); self.level as usize]
    }
    fn one(&self) -> Vec<BigInt> {
        self.q_pow(0)
    }
    fn add(&self, a: &Vec<BigInt>, b: &Vec<BigInt>) -> Vec<BigInt> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }
    fn sub(&self, a: &Vec<BigInt>, b: &Vec<BigInt>) -> Vec<BigInt> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }
    fn mul(&self, a: &Vec<BigInt>, b: &Vec<BigInt>) -> Vec<BigInt> {
        let n = self.level as usize;
        let mut out = vec![BigInt::zero(); n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[(i + j) % n] += x * y;
                }
            }
        }
        out
    }
    fn q_pow(&self, e: i64) -> Vec<BigInt> {
        let mut v = self.zero();
        v[e.mod_floor(&(self.level as i64)) as usize] = BigInt::one();
        v
    }
    fn is_zero(&self, a: &Vec<BigInt>) -> bool {
        a.iter().all(|c| c.is_zero())
    }
}

/// Weights of the inner sum
/// `I_n = sum_{jv} z^{sum j_l} q^v sum_k w_k prod_l [n + I(l <= k), j_l]`.
pub struct InnerWeights<E> {
    /// Factor `z` applied once per unit of `sum_l j_l`.
    pub z: E,
    /// `w_0, ..., w_{m-1}`.
    pub k_weights: Vec<E>,
}

impl<E: Clone> InnerWeights<E> {
    /// `z = -1`, `w_k = 1`: the weights of the Kontsevich-Zagier series.
    pub fn standard<R: QRing<Elem = E>>(ring: &R, p: &TorusParams) -> Self {
        InnerWeights {
            z: ring.neg(&ring.one()),
            k_weights: vec![ring.one(); p.m().max(1) as usize],
        }
    }
}

/// Gaussian binomials `[top, j]` for `top <= max_top` by the q-Pascal rule.
fn pascal_rows<R: QRing>(ring: &R, max_top: usize) -> Vec<Vec<R::Elem>> {
    let powers: Vec<R::Elem> = (0..=max_top as i64).map(|e| ring.q_pow(e)).collect();
    let mut rows: Vec<Vec<R::Elem>> = vec![vec![ring.one()]];
    for top in 1..=max_top {
        let prev = &rows[top - 1];
        let mut next = Vec::with_capacity(top + 1);
        for (j, pw) in powers.iter().enumerate().take(top + 1) {
            let entry = match (j.checked_sub(1).map(|i| &prev[i]), prev.get(j)) {
                (Some(l), Some(r)) => ring.add(l, &ring.mul(pw, r)),
                (Some(l), None) => l.clone(),
                (None, Some(r)) => r.clone(),
                (None, None) => unreachable!(),
            };
            next.push(entry);
        }
        rows.push(next);
    }
    rows
}

struct Graded<'r, R: QRing> {
    ring: &'r R,
    m: usize,
    q: R::Elem,
}

impl<'r, R: QRing> Graded<'r, R> {
    fn unit(&self) -> Vec<R::Elem> {
        let mut v = vec![self.ring.zero(); self.m];
        v[0] = self.ring.one();
        v
    }

    // contribution of a[r] * b[s] lands in component (r + s) mod m, with a
    // carry of q when r + s >= m
    fn term(&self, a: &R::Elem, b: &R::Elem, r: usize, s: usize) -> R::Elem {
        let prod = self.ring.mul(a, b);
        if r + s >= self.m {
            self.ring.mul(&prod, &self.q)
        } else {
            prod
        }
    }

    fn mul(&self, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
        let mut out = vec![self.ring.zero(); self.m];
        for (r, x) in a.iter().enumerate() {
            if self.ring.is_zero(x) {
                continue;
            }
            for (s, y) in b.iter().enumerate() {
                if self.ring.is_zero(y) {
                    continue;
                }
                let idx = (r + s) % self.m;
                out[idx] = self.ring.add(&out[idx], &self.term(x, y, r, s));
            }
        }
        out
    }

    fn component_of_product(&self, a: &[R::Elem], b: &[R::Elem], c: usize) -> R::Elem {
        let mut acc = self.ring.zero();
        for (r, x) in a.iter().enumerate() {
            let s = (c + self.m - r) % self.m;
            if self.ring.is_zero(x) || self.ring.is_zero(&b[s]) {
                continue;
            }
            acc = self.ring.add(&acc, &self.term(x, &b[s], r, s));
        }
        acc
    }
}

/// `I_0, ..., I_{n_max}` for `t >= 2`. At `t = 1` every `I_n` is `1`.
pub fn inner_sums<R: QRing>(
    ring: &R,
    p: &TorusParams,
    n_max: usize,
    weights: &InnerWeights<R::Elem>,
) -> Vec<R::Elem> {
    if p.t() == 1 {
        return vec![ring.one(); n_max + 1];
    }
    let m = p.m() as usize;
    let max_top = n_max + 1;
    let rows = pascal_rows(ring, max_top);
    // coef[l][j] = z^j q^{C(j,2) + floor(l j / m)}
    let mut zpow = vec![ring.one()];
    for j in 1..=max_top {
        let next = ring.mul(&zpow[j - 1], &weights.z);
        zpow.push(next);
    }
    let coef: Vec<Vec<R::Elem>> = (1..m)
        .map(|l| {
            (0..=max_top)
                .map(|j| {
                    let j64 = j as i64;
                    let e = j64 * (j64 - 1) / 2 + (l as i64 * j64) / m as i64;
                    ring.mul(&zpow[j], &ring.q_pow(e))
                })
                .collect()
        })
        .collect();
    let graded = Graded {
        ring,
        m,
        q: ring.q_pow(1),
    };
    let g = |l: usize, top: usize| -> Vec<R::Elem> {
        let mut comp = vec![ring.zero(); m];
        for (j, b) in rows[top].iter().enumerate() {
            let c = &coef[l - 1][j];
            if ring.is_zero(c) {
                continue;
            }
            let idx = (l * j) % m;
            comp[idx] = ring.add(&comp[idx], &ring.mul(c, b));
        }
        comp
    };
    let a = p.a() as usize;
    (0..=n_max)
        .into_par_iter()
        .map(|n| {
            // prefix[k] = prod_{l <= k} G_l(n + 1), suffix[k] = prod_{l > k} G_l(n)
            let mut prefix = vec![graded.unit()];
            for l in 1..m {
                let next = graded.mul(&prefix[l - 1], &g(l, n + 1));
                prefix.push(next);
            }
            let mut suffix = vec![graded.unit(); m];
            for k in (0..m - 1).rev() {
                suffix[k] = graded.mul(&g(k + 1, n), &suffix[k + 1]);
            }
            let mut acc = ring.zero();
            for k in 0..m {
                let w = &weights.k_weights[k];
                if ring.is_zero(w) {
                    continue;
                }
                let c = graded.component_of_product(&prefix[k], &suffix[k], a);
                acc = ring.add(&acc, &ring.mul(w, &c));
            }
            acc
        })
        .collect()
}

/// `(q)_0, ..., (q)_{n_max}` in `ring`.
pub fn pochhammers<R: QRing>(ring: &R, n_max: usize) -> Vec<R::Elem> {
    let mut out = vec![ring.one()];
    for i in 1..=n_max {
        let factor = ring.sub(&ring.one(), &ring.q_pow(i as i64));
        let next = ring.mul(&out[i - 1], &factor);
        out.push(next);
    }
    out
}

/// `(-1)^{h''} q^{-h'} sum_{n <= n_max} (q)_n I_n` in `ring`; at `t = 1`
/// the plain sum `sum_{n <= n_max} (q)_n`.
pub fn kz_sum<R: QRing>(ring: &R, p: &TorusParams, n_max: usize) -> R::Elem {
    let inner = inner_sums(ring, p, n_max, &InnerWeights::standard(ring, p));
    let poch = pochhammers(ring, n_max);
    let total = poch
        .iter()
        .zip(&inner)
        .fold(ring.zero(), |acc, (a, b)| ring.add(&acc, &ring.mul(a, b)));
    if p.t() == 1 {
        return total;
    }
    let pre = ring.q_pow(-p.h_d());
    let pre = if p.sign() < 0 { ring.neg(&pre) } else { pre };
    ring.mul(&pre, &total)
}

/// `F_t(q; N)` as an exact Laurent polynomial.
pub fn kz_polynomial(p: &TorusParams, n: usize) -> IntSeries {
    kz_sum(&ExactRing, p, n)
}

/// `F_t(q; N)` known below `order`, via the graded evaluation.
pub fn kz_truncated(p: &TorusParams, n: usize, order: i64) -> IntSeries {
    let work = if p.t() == 1 { order } else { order + p.h_d() };
    kz_sum(&TruncRing { order: work }, p, n).truncate(order)
}

/// `F_t(1 - u)` known below `u^order`. Terms with `n >= order` are
/// `O(u^order)` because `(q)_n = O(u^n)`, so the result is exact on its window.
pub fn kz_one_minus_q(p: &TorusParams, order: i64) -> IntSeries {
    if order <= 0 {
        return IntSeries::zero_to(order.max(0));
    }
    kz_sum(&UnitShiftRing { order }, p, order as usize - 1)
}

/// `F_t(zeta_N)` in `Z[zeta_N]`; the sum stops at `n = N - 1` because
/// `(q)_n` vanishes at `zeta_N` beyond.
pub fn kz_at_root_of_unity(p: &TorusParams, level: u64) -> CycInt {
    assert!(level >= 1, "root-of-unity order must be positive");
    let ring = CyclicRing { level };
    let sums = kz_sum(&ring, p, level as usize - 1);
    CycInt::from_residue_sums(level, sums)
}
