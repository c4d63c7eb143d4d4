use serde::Serialize;

use crate::error::{Error, Result};

/// Integer invariants of the torus knot `T(3, 2^t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TorusParams {
    t: u32,
    m: i64,
    h_dd: i64,
    h_d: i64,
    a: i64,
    h: i64,
}

impl TorusParams {
    /// Parameters for `1 <= t <= 28`. At `t = 1` the j-sum is empty and
    /// callers use the trefoil conventions instead of `a` and `h'`.
    pub fn new(t: u32) -> Result<Self> {
        if !(1..=28).contains(&t) {
            return Err(Error::InvalidParameter(format!("t = {t} outside 1..=28")));
        }
        let p = 1i64 << t;
        let (h_dd, h_d, a) = if t.is_multiple_of(2) {
            ((p - 1) / 3, (p - 4) / 3, (p / 2 + 1) / 3)
        } else {
            ((p - 2) / 3, (p - 5) / 3, (p + 1) / 3)
        };
        let params = TorusParams {
            t,
            m: p / 2,
            h_dd,
            h_d,
            a,
            h: p - 2,
        };
        debug_assert!(t == 1 || (3 * a - 1) % params.m == 0);
        Ok(params)
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    /// `m = 2^(t-1)`; j-vectors have `m - 1` entries.
    pub fn m(&self) -> i64 {
        self.m
    }

    /// `h''`, the exponent of the global sign.
    pub fn h_dd(&self) -> i64 {
        self.h_dd
    }

    /// `h'`, the global power of `q^-1`.
    pub fn h_d(&self) -> i64 {
        self.h_d
    }

    /// `a`, with `sum_l l j_l = a (mod m)` on admissible vectors.
    pub fn a(&self) -> i64 {
        self.a
    }

    /// `h = 2^t - 2`.
    pub fn h(&self) -> i64 {
        self.h
    }

    /// `(-1)^{h''}`.
    pub fn sign(&self) -> i64 {
        if self.h_dd % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// `2^t`.
    pub fn two_t(&self) -> i64 {
        1i64 << self.t
    }
}

pub fn torus_params(t: u32) -> Result<TorusParams> {
    TorusParams::new(t)
}
