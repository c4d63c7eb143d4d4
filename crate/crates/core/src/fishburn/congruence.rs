//! Prime-power congruences for generalized Fishburn numbers and the two
//! binomial lemmas behind them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::{s_set, xi_coefficients};
use crate::arith::IntSeries;
use crate::error::{Error, Result};
use crate::qseries::{binomial, theta_spec_t};

pub fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CongruenceEntry {
    pub m: u64,
    pub j: u64,
    /// `p^r m - j`.
    pub index: u64,
    /// `xi_t(index)` in decimal.
    pub value: String,
    pub residue: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CongruenceReport {
    pub t: u32,
    pub p: u64,
    pub r: u32,
    pub modulus: u64,
    pub m_range: (u64, u64),
    pub j_range: Vec<u64>,
    pub s_set: Vec<u64>,
    /// No `j` satisfies the hypothesis, so nothing is claimed.
    pub vacuous: bool,
    pub entries: Vec<CongruenceEntry>,
    pub pass: bool,
}

fn check_prime(p: u64, r: u32, m_max: u64) -> Result<()> {
    if p < 5 || !is_prime(p) {
        return Err(Error::InvalidParameter(format!(
            "p = {p}: p must be prime >= 5"
        )));
    }
    if r == 0 || m_max == 0 {
        return Err(Error::InvalidParameter(
            "r and m_max must be positive".into(),
        ));
    }
    Ok(())
}

/// `xi_t(p^r m - j) = 0 (mod p^r)` for `1 <= m <= m_max` and
/// `1 <= j <= p - 1 - max S_t(p)`.
pub fn verify_congruence(t: u32, p: u64, r: u32, m_max: u64) -> Result<CongruenceReport> {
    check_prime(p, r, m_max)?;
    let set = s_set(&theta_spec_t(t, 0)?, p);
    let top = p - 1 - set.last().copied().unwrap_or(0);
    scan_congruence(t, p, r, m_max, &(1..=top).collect::<Vec<_>>())
}

/// The same residues for an arbitrary list of `j`; used to look beyond the
/// hypothesis, where no outcome is claimed.
pub fn scan_congruence(t: u32, p: u64, r: u32, m_max: u64, js: &[u64]) -> Result<CongruenceReport> {
    check_prime(p, r, m_max)?;
    let set = s_set(&theta_spec_t(t, 0)?, p);
    let modulus = p
        .checked_pow(r)
        .filter(|q| q.checked_mul(m_max).is_some())
        .ok_or_else(|| Error::InvalidParameter(format!("{p}^{r} * {m_max} overflows")))?;
    if let Some(&j) = js.iter().find(|&&j| j == 0 || j > modulus) {
        return Err(Error::InvalidParameter(format!("j = {j} outside 1..=p^r")));
    }
    let entries = if js.is_empty() {
        Vec::new()
    } else {
        let xi = xi_coefficients(t, (modulus * m_max) as usize)?;
        let big_mod = BigInt::from(modulus);
        let mut out = Vec::new();
        for m in 1..=m_max {
            for &j in js {
                let index = modulus * m - j;
                let value = &xi[index as usize];
                let residue = value
                    .mod_floor(&big_mod)
                    .to_u64()
                    .expect("residue below modulus");
                out.push(CongruenceEntry {
                    m,
                    j,
                    index,
                    value: value.to_string(),
                    residue,
                });
            }
        }
        out
    };
    let pass = entries.iter().all(|e| e.residue == 0);
    Ok(CongruenceReport {
        t,
        p,
        r,
        modulus,
        m_range: (1, m_max),
        j_range: js.to_vec(),
        s_set: set,
        vacuous: js.is_empty(),
        entries,
        pass,
    })
}

/// `(1 - (1 - q)^p)^n` with coefficients reduced into `0..p^r`.
pub fn straub_residue(p: u64, r: u32, n: u32) -> IntSeries {
    let inner = &IntSeries::one() - &IntSeries::from_i64(0, &[1, -1]).pow(p as u32);
    let modulus = BigInt::from(p).pow(r);
    inner.pow(n).map_coeffs(|c| c.mod_floor(&modulus))
}

/// Whether `(1 - (1 - q)^p)^n = O(q^{p n - (p - 1)(r - 1)}) (mod p^r)`.
pub fn straub_order_bound(p: u64, r: u32, n: u32) -> bool {
    let bound = p as i64 * n as i64 - (p as i64 - 1) * (r as i64 - 1);
    straub_residue(p, r, n)
        .terms()
        .all(|(e, c)| e >= bound || c.is_zero())
}

/// Whether `C(i + l p, p^r m - j) = 0 (mod p^r)`.
pub fn binom_congruence(i: u64, l: u64, p: u64, r: u32, m: u64, j: u64) -> bool {
    let modulus = BigInt::from(p).pow(r);
    let top = (i + l * p) as i64;
    let bottom = (p.pow(r) * m) as i64 - j as i64;
    binomial(top, bottom).mod_floor(&modulus).is_zero()
}
