//! s-dissections, S-sets and the divisibility of dissection pieces.

use num_integer::Integer;
use serde::Serialize;

use crate::arith::{poly_divides, IntSeries};
use crate::error::{Error, Result};
use crate::qseries::{pochhammer, theta_spec_t, ThetaSpec};
use crate::torus::{kz_polynomial, torus_params};

/// `series = sum_{i < s} q^i A_i(q^s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dissection {
    s: u64,
    pieces: Vec<IntSeries>,
}

impl Dissection {
    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn pieces(&self) -> &[IntSeries] {
        &self.pieces
    }

    pub fn piece(&self, i: usize) -> &IntSeries {
        &self.pieces[i]
    }

    /// `sum_i q^i A_i(q^s)`.
    pub fn reconstruct(&self) -> IntSeries {
        let s = self.s as i64;
        self.pieces
            .iter()
            .enumerate()
            .fold(IntSeries::zero(), |acc, (i, a)| {
                &acc + &a.substitute_power(s).shift(i as i64)
            })
    }
}

/// Split a Laurent polynomial by exponent residue: the exponent `e` feeds
/// piece `e mod s` at power `floor(e / s)`.
pub fn dissection(series: &IntSeries, s: u64) -> Result<Dissection> {
    if let Some(order) = series.order() {
        return Err(Error::NotPolynomial { order });
    }
    if s == 0 {
        return Err(Error::InvalidParameter(
            "dissection modulus must be positive".into(),
        ));
    }
    let si = s as i64;
    let mut buckets: Vec<Vec<(i64, num_bigint::BigInt)>> = vec![Vec::new(); s as usize];
    for (e, c) in series.terms() {
        let (k, i) = e.div_mod_floor(&si);
        buckets[i as usize].push((k, c.clone()));
    }
    let pieces = buckets
        .into_iter()
        .map(|terms| {
            terms.into_iter().fold(IntSeries::zero(), |acc, (k, c)| {
                &acc + &IntSeries::monomial(k, c)
            })
        })
        .collect();
    Ok(Dissection { s, pieces })
}

/// Residues `j` in `0..s` with `j = (n^2 - a)/b (mod s)` for some `n` in
/// the support of the character, ascending.
pub fn s_set(spec: &ThetaSpec, s: u64) -> Vec<u64> {
    assert!(s >= 1, "s must be positive");
    // n -> n + lcm(period, b) s shifts the exponent by a multiple of s
    let span = (spec.chi().period() as i64).lcm(&spec.b()) * s as i64;
    let mut hit = vec![false; s as usize];
    for n in 0..span {
        if spec.chi().value(n) != 0 {
            hit[spec.exponent(n).mod_floor(&(s as i64)) as usize] = true;
        }
    }
    (0..s).filter(|&j| hit[j as usize]).collect()
}

/// Verdict on one dissection piece.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PieceVerdict {
    pub i: u64,
    pub in_s_set: bool,
    /// `None` for residues in the S-set, which carry no claim.
    pub divides: Option<bool>,
    /// Shift `k` with `A_i = (q)_lambda h q^k`, when divisible.
    pub shift: Option<i64>,
    pub quotient_degree: Option<i64>,
    pub terms: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisibilityReport {
    pub t: u32,
    pub s: u64,
    pub n: u64,
    pub lambda: u64,
    pub s_set: Vec<u64>,
    pub pieces: Vec<PieceVerdict>,
    pub pass: bool,
}

/// Test `(q)_lambda | A_i` up to a monomial unit for every `i` outside
/// `excluded`.
pub fn piece_verdicts(d: &Dissection, lambda: u64, excluded: &[u64]) -> Vec<PieceVerdict> {
    let divisor = pochhammer(1, lambda, None);
    d.pieces()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let i = i as u64;
            let terms = a.terms().count();
            if excluded.contains(&i) {
                return PieceVerdict {
                    i,
                    in_s_set: true,
                    divides: None,
                    shift: None,
                    quotient_degree: None,
                    terms,
                };
            }
            let r = poly_divides(&divisor, a).expect("exact pieces and nonzero divisor");
            PieceVerdict {
                i,
                in_s_set: false,
                divides: Some(r.divides),
                shift: r.divides.then_some(r.shift),
                quotient_degree: if r.divides { r.quotient.degree() } else { None },
                terms,
            }
        })
        .collect()
}

/// Dissect the exact partial sum `F_t(q; N)` into `s` pieces and test
/// divisibility by `(q)_{floor((N + 1)/s)}` off the S-set.
pub fn divisibility_check(t: u32, s: u64, n: u64) -> Result<DivisibilityReport> {
    if s < 2 {
        return Err(Error::InvalidParameter(format!(
            "s = {s} must be at least 2"
        )));
    }
    let p = torus_params(t)?;
    let spec = theta_spec_t(t, 0)?;
    let set = s_set(&spec, s);
    let lambda = (n + 1) / s;
    let poly = kz_polynomial(&p, n as usize);
    let d = dissection(&poly, s)?;
    let pieces = piece_verdicts(&d, lambda, &set);
    let pass = pieces.iter().all(|v| v.divides != Some(false));
    Ok(DivisibilityReport {
        t,
        s,
        n,
        lambda,
        s_set: set,
        pieces,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_dissection() {
        let d = dissection(&IntSeries::from_i64(0, &[1, 2, 3, 4]), 2).unwrap();
        assert_eq!(d.piece(0), &IntSeries::from_i64(0, &[1, 3]));
        assert_eq!(d.piece(1), &IntSeries::from_i64(0, &[2, 4]));
    }

    #[test]
    fn negative_exponents_use_floor() {
        let s = IntSeries::from_i64(-1, &[5, 0, 7]);
        let d = dissection(&s, 3).unwrap();
        assert_eq!(d.piece(2), &IntSeries::monomial(-1, 5));
        assert_eq!(d.piece(1), &IntSeries::monomial(0, 7));
        assert_eq!(d.reconstruct(), s);
    }

    #[test]
    fn printed_s_sets() {
        let t2 = theta_spec_t(2, 0).unwrap();
        let t3 = theta_spec_t(3, 0).unwrap();
        assert_eq!(s_set(&t2, 5), vec![0, 2, 3]);
        assert_eq!(s_set(&t2, 17), vec![0, 2, 3, 4, 7, 8, 9, 11, 14]);
        assert_eq!(s_set(&t3, 7), vec![0, 2, 3, 4]);
        assert_eq!(s_set(&t3, 13), vec![0, 2, 5, 6, 7, 8, 11]);
        assert_eq!(s_set(&t2, 1), vec![0]);
    }

    #[test]
    fn trefoil_s_sets_give_classical_ranges() {
        let t1 = theta_spec_t(1, 0).unwrap();
        assert_eq!(s_set(&t1, 5), vec![0, 1, 2]);
        assert_eq!(s_set(&t1, 7), vec![0, 1, 2, 5]);
        assert_eq!(s_set(&t1, 11), vec![0, 1, 2, 4, 5, 7]);
    }

    #[test]
    fn divisibility_first_case() {
        let r = divisibility_check(2, 5, 9).unwrap();
        assert_eq!(r.lambda, 2);
        assert!(r.pass, "{r:?}");
        let tested: Vec<u64> = r
            .pieces
            .iter()
            .filter(|v| !v.in_s_set)
            .map(|v| v.i)
            .collect();
        assert_eq!(tested, vec![1, 4]);
    }

    #[test]
    fn lambda_zero_is_trivial() {
        let r = divisibility_check(2, 5, 2).unwrap();
        assert_eq!(r.lambda, 0);
        assert!(r.pass);
    }

    #[test]
    fn truncated_input_rejected() {
        assert!(dissection(&IntSeries::one().truncate(3), 2).is_err());
    }
}
