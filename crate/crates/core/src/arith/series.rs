//! Truncated Laurent series with exact integer coefficients.
//!
//! An [`IntSeries`] stores a dense window of coefficients starting at
//! `min_exp`. Its precision is either a finite order `K` (every exponent
//! `>= K` is unknown) or unbounded, in which case the value is an exact
//! Laurent polynomial.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Truncated Laurent series over the integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntSeries {
    min_exp: i64,
    coeffs: Vec<BigInt>,
    order: Option<i64>,
}

fn min_order(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

fn add_order(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    Some(a? + b?)
}

impl IntSeries {
    fn build(mut min_exp: i64, mut coeffs: Vec<BigInt>, order: Option<i64>) -> Self {
        if let Some(k) = order {
            let keep = (k - min_exp).max(0) as usize;
            coeffs.truncate(keep);
        }
        match coeffs.iter().position(|c| !c.is_zero()) {
            None => {
                coeffs.clear();
                min_exp = order.unwrap_or(0);
            }
            Some(lead) => {
                coeffs.drain(..lead);
                min_exp += lead as i64;
            }
        }
        match order {
            None => {
                while coeffs.last().is_some_and(|c| c.is_zero()) {
                    coeffs.pop();
                }
            }
            Some(k) if !coeffs.is_empty() => {
                coeffs.resize((k - min_exp) as usize, BigInt::zero());
            }
            Some(_) => {}
        }
        IntSeries {
            min_exp,
            coeffs,
            order,
        }
    }

    /// Exact Laurent polynomial `sum coeffs[i] q^(min_exp + i)`.
    pub fn polynomial(min_exp: i64, coeffs: Vec<BigInt>) -> Self {
        Self::build(min_exp, coeffs, None)
    }

    /// Series known for exponents below `order`.
    pub fn truncated(min_exp: i64, coeffs: Vec<BigInt>, order: i64) -> Self {
        Self::build(min_exp, coeffs, Some(order))
    }

    /// Exact polynomial from machine integers.
    pub fn from_i64(min_exp: i64, coeffs: &[i64]) -> Self {
        Self::polynomial(min_exp, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The exact zero polynomial.
    pub fn zero() -> Self {
        Self::build(0, Vec::new(), None)
    }

    /// `O(q^order)`.
    pub fn zero_to(order: i64) -> Self {
        Self::build(order, Vec::new(), Some(order))
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c q^e` as an exact polynomial.
    pub fn monomial(e: i64, c: impl Into<BigInt>) -> Self {
        Self::polynomial(e, vec![c.into()])
    }

    /// Lowest stored exponent. For a zero series this is the order (or 0
    /// for the exact zero).
    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    /// Truncation order, `None` for an exact polynomial.
    pub fn order(&self) -> Option<i64> {
        self.order
    }

    pub fn is_polynomial(&self) -> bool {
        self.order.is_none()
    }

    /// True when every known coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Dense coefficients starting at [`min_exp`](Self::min_exp).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Exponent of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.min_exp)
    }

    /// Exponent of the highest nonzero coefficient.
    pub fn degree(&self) -> Option<i64> {
        let last = self.coeffs.iter().rposition(|c| !c.is_zero())?;
        Some(self.min_exp + last as i64)
    }

    /// Coefficient of `q^e`, or `None` when `e` lies beyond the order.
    pub fn coeff(&self, e: i64) -> Option<BigInt> {
        if self.order.is_some_and(|k| e >= k) {
            return None;
        }
        let idx = e - self.min_exp;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            return Some(BigInt::zero());
        }
        Some(self.coeffs[idx as usize].clone())
    }

    /// Nonzero terms `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.min_exp + i as i64, c))
    }

    /// Lower the order to `min(self.order, order)`.
    pub fn truncate(&self, order: i64) -> Self {
        let order = min_order(self.order, Some(order));
        Self::build(self.min_exp, self.coeffs.clone(), order)
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.coeffs.is_empty() {
            return Self::build(self.min_exp + k, Vec::new(), self.order.map(|o| o + k));
        }
        IntSeries {
            min_exp: self.min_exp + k,
            coeffs: self.coeffs.clone(),
            order: self.order.map(|o| o + k),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::build(
            self.min_exp,
            self.coeffs.iter().map(|x| x * c).collect(),
            self.order,
        )
    }

    /// Apply `f` to every coefficient (used for reductions modulo an integer).
    pub fn map_coeffs(&self, f: impl Fn(&BigInt) -> BigInt) -> Self {
        Self::build(
            self.min_exp,
            self.coeffs.iter().map(f).collect(),
            self.order,
        )
    }

    /// Substitute `q -> q^k` for `k >= 1`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k >= 1, "substitute_power needs k >= 1");
        if self.coeffs.is_empty() {
            return Self::build(self.min_exp * k, Vec::new(), self.order.map(|o| o * k));
        }
        let len = (self.coeffs.len() - 1) * k as usize + 1;
        let mut out = vec![BigInt::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * k as usize] = c.clone();
        }
        Self::build(self.min_exp * k, out, self.order.map(|o| o * k))
    }

    /// Product truncated at `order` without computing discarded terms.
    pub fn mul_truncated(&self, other: &IntSeries, order: i64) -> Self {
        self.mul_with_cap(other, Some(order))
    }

    fn mul_with_cap(&self, other: &IntSeries, cap: Option<i64>) -> Self {
        let val_a = if self.coeffs.is_empty() && self.order.is_none() {
            None
        } else {
            Some(self.min_exp)
        };
        let val_b = if other.coeffs.is_empty() && other.order.is_none() {
            None
        } else {
            Some(other.min_exp)
        };
        let order = min_order(
            min_order(add_order(self.order, val_b), add_order(other.order, val_a)),
            cap,
        );
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            let min_exp = order.unwrap_or(0);
            return Self::build(min_exp, Vec::new(), order);
        }
        let min_exp = self.min_exp + other.min_exp;
        let full = self.coeffs.len() + other.coeffs.len() - 1;
        let len = match order {
            Some(k) => ((k - min_exp).max(0) as usize).min(full),
            None => full,
        };
        Self::build(min_exp, convolve(&self.coeffs, &other.coeffs, len), order)
    }

    /// `self^n` for `n >= 0`.
    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Multiplicative inverse of a power series with constant term `+-1`,
    /// to the same order.
    pub fn invert_unit(&self) -> Result<Self> {
        if self.coeffs.is_empty() || self.min_exp != 0 {
            return Err(Error::NotInvertible(format!(
                "lowest term is not a constant: {self}"
            )));
        }
        let c0 = &self.coeffs[0];
        if !c0.abs().is_one() {
            return Err(Error::NotInvertible(format!(
                "constant term {c0} is not +-1"
            )));
        }
        let Some(order) = self.order else {
            if self.coeffs.len() == 1 {
                return Ok(self.clone());
            }
            return Err(Error::TruncationInsufficient(
                "the inverse of a non-constant polynomial needs a finite order".into(),
            ));
        };
        let len = order.max(0) as usize;
        let mut inv: Vec<BigInt> = Vec::with_capacity(len);
        for k in 0..len {
            if k == 0 {
                inv.push(c0.clone());
                continue;
            }
            let mut acc = BigInt::zero();
            for i in 1..=k.min(self.coeffs.len() - 1) {
                acc += &self.coeffs[i] * &inv[k - i];
            }
            // c0 = +-1 so dividing by c0 is multiplying by c0
            inv.push(-(acc * c0));
        }
        Ok(Self::truncated(0, inv, order))
    }

    /// Composition `self(1 - q)` as a power series in `q` known below
    /// `out_order`. Negative exponents are handled through the inverse of
    /// `(1 - q)^k`.
    ///
    /// Only a fully known Laurent polynomial can be substituted: every
    /// coefficient of a truncated tail would feed every output coefficient.
    /// When the input is a polynomial with nonnegative exponents and degree
    /// below `out_order` the result is returned as an exact polynomial.
    pub fn substitute_one_minus_q(&self, out_order: i64) -> Result<Self> {
        if let Some(order) = self.order {
            return Err(Error::TruncationInsufficient(format!(
                "q -> 1-q needs every coefficient, input is only known below q^{order}"
            )));
        }
        if out_order < 0 {
            return Err(Error::InvalidParameter(format!(
                "out_order {out_order} < 0"
            )));
        }
        let Some(deg) = self.degree() else {
            return Ok(Self::zero());
        };
        let low = self.min_exp.min(0);
        let len = out_order as usize;
        // Horner in the variable 1 - q over the shifted polynomial q^{-low} self
        let mut acc = vec![BigInt::zero(); len];
        for e in (low..=deg).rev() {
            for i in (1..len).rev() {
                let prev = acc[i - 1].clone();
                acc[i] -= prev;
            }
            if len > 0 {
                if let Some(c) = self.coeff(e) {
                    acc[0] += c;
                }
            }
        }
        let shifted = Self::truncated(0, acc, out_order);
        if low < 0 {
            let base = Self::from_i64(0, &[1, -1]).truncate(out_order);
            let inv = base.pow((-low) as u32).invert_unit()?;
            return Ok(&shifted * &inv);
        }
        if deg < out_order {
            return Ok(Self::polynomial(shifted.min_exp, shifted.coeffs.clone()));
        }
        Ok(shifted)
    }

    /// First exponent on the common window where the two series differ,
    /// with both coefficients.
    pub fn first_difference(&self, other: &IntSeries) -> Option<(i64, BigInt, BigInt)> {
        let order = min_order(self.order, other.order);
        let lo = self.min_exp.min(other.min_exp);
        let hi_a = self.min_exp + self.coeffs.len() as i64;
        let hi_b = other.min_exp + other.coeffs.len() as i64;
        let hi = match order {
            Some(k) => k.min(hi_a.max(hi_b)),
            None => hi_a.max(hi_b),
        };
        (lo..hi).find_map(|e| {
            let x = self.coeff(e).unwrap_or_default();
            let y = other.coeff(e).unwrap_or_default();
            (x != y).then_some((e, x, y))
        })
    }
}

/// Dense convolution of `a` and `b`, keeping the first `len` coefficients.
fn convolve(a: &[BigInt], b: &[BigInt], len: usize) -> Vec<BigInt> {
    if len == 0 {
        return Vec::new();
    }
    let bits = |v: &[BigInt]| v.iter().map(|c| c.bits()).max().unwrap_or(0);
    let terms = a.len().min(b.len()) as u64;
    let headroom = 64 - terms.leading_zeros() as u64;
    if bits(a) + bits(b) + headroom < 126 {
        let a: Vec<i128> = a.iter().map(|c| c.to_i128().unwrap()).collect();
        let b: Vec<i128> = b.iter().map(|c| c.to_i128().unwrap()).collect();
        let mut out = vec![0i128; len];
        for (i, x) in a.iter().enumerate().take(len) {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate().take(len - i) {
                out[i + j] += x * y;
            }
        }
        return out.into_iter().map(BigInt::from).collect();
    }
    let mut out = vec![BigInt::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn add_sub(a: &IntSeries, b: &IntSeries, negate: bool) -> IntSeries {
    let order = min_order(a.order, b.order);
    let ends = |s: &IntSeries| {
        if s.coeffs.is_empty() {
            None
        } else {
            Some((s.min_exp, s.min_exp + s.coeffs.len() as i64))
        }
    };
    let (lo, hi) = match (ends(a), ends(b)) {
        (None, None) => return IntSeries::build(order.unwrap_or(0), Vec::new(), order),
        (Some(x), None) | (None, Some(x)) => x,
        (Some(x), Some(y)) => (x.0.min(y.0), x.1.max(y.1)),
    };
    let hi = order.map_or(hi, |k| hi.min(k));
    if hi <= lo {
        return IntSeries::build(order.unwrap_or(lo), Vec::new(), order);
    }
    let mut out = vec![BigInt::zero(); (hi - lo) as usize];
    for (i, c) in a.coeffs.iter().enumerate() {
        let e = a.min_exp + i as i64;
        if e < hi {
            out[(e - lo) as usize] += c;
        }
    }
    for (i, c) in b.coeffs.iter().enumerate() {
        let e = b.min_exp + i as i64;
        if e < hi {
            if negate {
                out[(e - lo) as usize] -= c;
            } else {
                out[(e - lo) as usize] += c;
            }
        }
    }
    IntSeries::build(lo, out, order)
}

impl Add for &IntSeries {
    type Output = IntSeries;
    fn add(self, rhs: &IntSeries) -> IntSeries {
        add_sub(self, rhs, false)
    }
}

impl Sub for &IntSeries {
    type Output = IntSeries;
    fn sub(self, rhs: &IntSeries) -> IntSeries {
        add_sub(self, rhs, true)
    }
}

impl Mul for &IntSeries {
    type Output = IntSeries;
    fn mul(self, rhs: &IntSeries) -> IntSeries {
        self.mul_with_cap(rhs, None)
    }
}

impl Neg for &IntSeries {
    type Output = IntSeries;
    fn neg(self) -> IntSeries {
        IntSeries {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            order: self.order,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for IntSeries {
            type Output = IntSeries;
            fn $method(self, rhs: IntSeries) -> IntSeries {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&IntSeries> for IntSeries {
            type Output = IntSeries;
            fn $method(self, rhs: &IntSeries) -> IntSeries {
                (&self).$method(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntSeries {
    type Output = IntSeries;
    fn neg(self) -> IntSeries {
        -&self
    }
}

impl fmt::Display for IntSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one();
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        write!(f, "{mag}*")?;
                    }
                    if e == 1 {
                        f.write_str("q")?;
                    } else {
                        write!(f, "q^{e}")?;
                    }
                }
            }
        }
        match (first, self.order) {
            (true, None) => f.write_str("0"),
            (true, Some(k)) => write!(f, "O(q^{k})"),
            (false, Some(k)) => write!(f, " + O(q^{k})"),
            (false, None) => Ok(()),
        }
    }
}

impl fmt::Debug for IntSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntSeries({self})")
    }
}
