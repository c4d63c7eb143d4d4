//! Exact arithmetic in `Z[zeta_M] = Z[x]/(Phi_M(x))`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::divide::exact_quotient;
use super::IntSeries;
use crate::error::{Error, Result};

fn cyclotomic_memo(m: u64, memo: &mut HashMap<u64, IntSeries>) -> IntSeries {
    if let Some(p) = memo.get(&m) {
        return p.clone();
    }
    let mut coeffs = vec![BigInt::zero(); m as usize + 1];
    coeffs[0] = BigInt::from(-1);
    coeffs[m as usize] = BigInt::one();
    let mut poly = IntSeries::polynomial(0, coeffs);
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        let phi_d = cyclotomic_memo(d, memo);
        poly = exact_quotient(&poly, &phi_d);
    }
    memo.insert(m, poly.clone());
    poly
}

/// The `m`-th cyclotomic polynomial, from `x^m - 1` divided by every
/// `Phi_d` with `d | m`, `d < m`.
pub fn cyclotomic_poly(m: u64) -> IntSeries {
    assert!(m >= 1, "cyclotomic polynomials are indexed from 1");
    cyclotomic_memo(m, &mut HashMap::new())
}

/// Element of `Z[zeta_M]`, stored as the `phi(M)` coefficients of its
/// reduced representative modulo `Phi_M`.
#[derive(Clone)]
pub struct CycInt {
    level: u64,
    coeffs: Vec<BigInt>,
    modulus: Arc<Vec<BigInt>>,
}

impl CycInt {
    fn modulus_for(level: u64) -> Arc<Vec<BigInt>> {
        assert!(level >= 1, "root-of-unity level must be positive");
        Arc::new(cyclotomic_poly(level).coeffs().to_vec())
    }

    fn with_modulus(level: u64, raw: Vec<BigInt>, modulus: Arc<Vec<BigInt>>) -> Self {
        let coeffs = reduce(raw, &modulus);
        CycInt {
            level,
            coeffs,
            modulus,
        }
    }

    pub fn zero(level: u64) -> Self {
        let modulus = Self::modulus_for(level);
        Self::with_modulus(level, Vec::new(), modulus)
    }

    pub fn from_int(level: u64, c: impl Into<BigInt>) -> Self {
        let modulus = Self::modulus_for(level);
        Self::with_modulus(level, vec![c.into()], modulus)
    }

    pub fn one(level: u64) -> Self {
        Self::from_int(level, 1)
    }

    /// `zeta_M^e` for any integer `e`.
    pub fn root_power(level: u64, e: i64) -> Self {
        let r = e.mod_floor(&(level as i64)) as usize;
        let mut raw = vec![BigInt::zero(); r + 1];
        raw[r] = BigInt::one();
        let modulus = Self::modulus_for(level);
        Self::with_modulus(level, raw, modulus)
    }

    /// `sum_r sums[r] zeta_M^r` where `sums` is indexed by residue mod `M`.
    pub fn from_residue_sums(level: u64, sums: Vec<BigInt>) -> Self {
        assert!(sums.len() <= level as usize, "more residues than the level");
        let modulus = Self::modulus_for(level);
        Self::with_modulus(level, sums, modulus)
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    /// Reduced coefficients, length `phi(M)`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn check_level(&self, other: &CycInt) {
        assert_eq!(
            self.level, other.level,
            "mixing roots of unity of different order"
        );
    }

    /// First coefficient index where two values differ.
    pub fn first_difference(&self, other: &CycInt) -> Option<(usize, BigInt, BigInt)> {
        self.check_level(other);
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .enumerate()
            .find(|(_, (a, b))| a != b)
            .map(|(i, (a, b))| (i, a.clone(), b.clone()))
    }
}

fn reduce(mut raw: Vec<BigInt>, modulus: &[BigInt]) -> Vec<BigInt> {
    let deg = modulus.len() - 1;
    for i in (deg..raw.len()).rev() {
        if raw[i].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut raw[i]);
        // Phi is monic: subtract c x^{i-deg} Phi
        for (j, m) in modulus.iter().enumerate().take(deg) {
            raw[i - deg + j] -= &c * m;
        }
    }
    raw.resize(deg, BigInt::zero());
    raw
}

/// Image of a Laurent polynomial under `q -> zeta_M`.
pub fn cyc_eval(p: &IntSeries, level: u64) -> Result<CycInt> {
    if let Some(order) = p.order() {
        return Err(Error::NotPolynomial { order });
    }
    if level == 0 {
        return Err(Error::InvalidParameter(
            "root-of-unity level must be positive".into(),
        ));
    }
    let mut sums = vec![BigInt::zero(); level as usize];
    for (e, c) in p.terms() {
        sums[e.mod_floor(&(level as i64)) as usize] += c;
    }
    Ok(CycInt::from_residue_sums(level, sums))
}

impl PartialEq for CycInt {
    fn eq(&self, other: &Self) -> bool {
        self.level == other.level && self.coeffs == other.coeffs
    }
}

impl Eq for CycInt {}

impl Add for &CycInt {
    type Output = CycInt;
    fn add(self, rhs: &CycInt) -> CycInt {
        self.check_level(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CycInt {
            level: self.level,
            coeffs,
            modulus: self.modulus.clone(),
        }
    }
}

impl Sub for &CycInt {
    type Output = CycInt;
    fn sub(self, rhs: &CycInt) -> CycInt {
        self.check_level(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        CycInt {
            level: self.level,
            coeffs,
            modulus: self.modulus.clone(),
        }
    }
}

impl Mul for &CycInt {
    type Output = CycInt;
    fn mul(self, rhs: &CycInt) -> CycInt {
        self.check_level(rhs);
        let n = self.coeffs.len();
        let mut raw = vec![BigInt::zero(); (2 * n).saturating_sub(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                raw[i + j] += a * b;
            }
        }
        CycInt::with_modulus(self.level, raw, self.modulus.clone())
    }
}

impl Neg for &CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        CycInt {
            level: self.level,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            modulus: self.modulus.clone(),
        }
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sep = match (first, c.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            first = false;
            let mag = c.abs();
            match i {
                0 => write!(f, "{sep}{mag}")?,
                1 => write!(f, "{sep}{mag}*z")?,
                _ => write!(f, "{sep}{mag}*z^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " (z = zeta_{})", self.level)
    }
}

impl fmt::Debug for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycInt({self})")
    }
}
