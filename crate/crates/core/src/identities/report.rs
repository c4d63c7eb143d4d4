use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::arith::{BiSeries, CycInt, IntSeries};

/// Window on which an identity was compared.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Window {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x_bound: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q_order: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_max: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub part: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x_degree: Option<usize>,
    /// q-exponent, or coefficient index for cyclotomic values.
    pub exponent: i64,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one comparison inside an identity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartReport {
    pub name: String,
    pub pass: bool,
    pub first_discrepancy: Option<Discrepancy>,
}

impl PartReport {
    fn from_difference(name: &str, diff: Option<(Option<usize>, i64, BigInt, BigInt)>) -> Self {
        let first_discrepancy = diff.map(|(x_degree, exponent, l, r)| Discrepancy {
            part: name.to_string(),
            x_degree,
            exponent,
            lhs: l.to_string(),
            rhs: r.to_string(),
        });
        PartReport {
            name: name.to_string(),
            pass: first_discrepancy.is_none(),
            first_discrepancy,
        }
    }

    /// Failing part carrying a message instead of a coefficient.
    pub fn failed(name: &str, message: &str) -> Self {
        PartReport {
            name: name.to_string(),
            pass: false,
            first_discrepancy: Some(Discrepancy {
                part: name.to_string(),
                x_degree: None,
                exponent: 0,
                lhs: message.to_string(),
                rhs: String::new(),
            }),
        }
    }
}

/// Result of an identity check: `pass` holds exactly when no part has a
/// discrepancy, and `first_discrepancy` is that of the first failing part.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<u32>,
    pub window: Window,
    pub pass: bool,
    pub first_discrepancy: Option<Discrepancy>,
    pub parts: Vec<PartReport>,
    pub details: BTreeMap<String, String>,
}

impl IdentityReport {
    pub fn new(name: &str, t: Option<u32>, window: Window, parts: Vec<PartReport>) -> Self {
        let first_discrepancy = parts.iter().find_map(|p| p.first_discrepancy.clone());
        IdentityReport {
            name: name.to_string(),
            t,
            window,
            pass: first_discrepancy.is_none(),
            first_discrepancy,
            parts,
            details: BTreeMap::new(),
        }
    }

    pub fn with_detail(mut self, key: &str, value: impl ToString) -> Self {
        self.details.insert(key.to_string(), value.to_string());
        self
    }
}

/// Compare two series below `order`.
pub fn compare_series(name: &str, lhs: &IntSeries, rhs: &IntSeries, order: i64) -> PartReport {
    let diff = lhs
        .truncate(order)
        .first_difference(&rhs.truncate(order))
        .map(|(e, l, r)| (None, e, l, r));
    PartReport::from_difference(name, diff)
}

/// Compare two exact polynomials, or truncated series on their common window.
pub fn compare_exact(name: &str, lhs: &IntSeries, rhs: &IntSeries) -> PartReport {
    let diff = lhs.first_difference(rhs).map(|(e, l, r)| (None, e, l, r));
    PartReport::from_difference(name, diff)
}

/// Compare two bivariate series on their common window.
pub fn compare_bi(name: &str, lhs: &BiSeries, rhs: &BiSeries) -> PartReport {
    let diff = lhs
        .first_difference(rhs)
        .map(|(d, e, l, r)| (Some(d), e, l, r));
    PartReport::from_difference(name, diff)
}

/// Compare two cyclotomic integers coefficientwise.
pub fn compare_cyc(name: &str, lhs: &CycInt, rhs: &CycInt) -> PartReport {
    let diff = lhs
        .first_difference(rhs)
        .map(|(i, l, r)| (None, i as i64, l, r));
    PartReport::from_difference(name, diff)
}
