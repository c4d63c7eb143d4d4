//! Property checks shared by the proptest suite and the acceptance gate.
#![allow(dead_code)]

use fishburn::arith::{cyc_eval, IntSeries};
use fishburn::fishburn::dissection;
use fishburn::torus::{
    admissible_jvectors, for_each_admissible, torus_params, v_exponent, JVector,
};
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

pub fn laurent() -> impl Strategy<Value = IntSeries> {
    (-3i64..4, prop::collection::vec(-20i64..21, 0..8))
        .prop_map(|(min_exp, c)| IntSeries::from_i64(min_exp, &c))
}

pub fn power_poly() -> impl Strategy<Value = IntSeries> {
    prop::collection::vec(-20i64..21, 0..10).prop_map(|c| IntSeries::from_i64(0, &c))
}

/// Laurent polynomial, optionally truncated a few exponents past its support.
pub fn window_series() -> impl Strategy<Value = IntSeries> {
    (laurent(), prop::option::of(0i64..6)).prop_map(|(p, extra)| match extra {
        Some(k) => {
            let top = p.degree().unwrap_or(0) + 1;
            p.truncate(top + k)
        }
        None => p,
    })
}

pub fn unit_series() -> impl Strategy<Value = IntSeries> {
    (
        prop::bool::ANY,
        prop::collection::vec(-9i64..10, 0..6),
        1i64..12,
    )
        .prop_map(|(neg, tail, order)| {
            let mut c = vec![if neg { -1 } else { 1 }];
            c.extend(tail);
            IntSeries::from_i64(0, &c).truncate(order)
        })
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(msg()))
    }
}

pub fn check_ring_axioms(a: &IntSeries, b: &IntSeries, c: &IntSeries) -> Result<(), TestCaseError> {
    ensure(a * b == b * a, || {
        format!("commutativity fails for {a}, {b}")
    })?;
    ensure(&(a * b) * c == a * &(b * c), || {
        format!("associativity fails for {a}, {b}, {c}")
    })?;
    ensure(&(a + b) + c == a + &(b + c), || {
        "additive associativity".into()
    })?;
    let left = a * &(b + c);
    let right = &(a * b) + &(a * c);
    ensure(left.first_difference(&right).is_none(), || {
        format!("distributivity fails for {a}, {b}, {c}")
    })?;
    let copy = a.clone();
    ensure((a - &copy).is_zero(), || format!("{a} - {a} is not zero"))?;
    let zero = IntSeries::zero();
    ensure(&(a + &zero) == a, || "additive identity".into())
}

pub fn check_inverse(a: &IntSeries) -> Result<(), TestCaseError> {
    let inv = a
        .invert_unit()
        .map_err(|e| TestCaseError::fail(e.to_string()))?;
    let order = a.order().unwrap();
    let one = IntSeries::one().truncate(order);
    ensure(a.mul_truncated(&inv, order) == one, || {
        format!("{a} * {inv} != 1")
    })?;
    ensure(inv.mul_truncated(a, order) == one, || {
        format!("{inv} * {a} != 1")
    })
}

pub fn check_involution(p: &IntSeries) -> Result<(), TestCaseError> {
    let order = p.degree().unwrap_or(0) + 1;
    let once = p.substitute_one_minus_q(order).unwrap();
    let twice = once.substitute_one_minus_q(order).unwrap();
    ensure(&twice == p, || {
        format!("q -> 1-q twice maps {p} to {twice}")
    })
}

pub fn check_cyc_hom(p: &IntSeries, r: &IntSeries, level: u64) -> Result<(), TestCaseError> {
    let ep = cyc_eval(p, level).unwrap();
    let er = cyc_eval(r, level).unwrap();
    ensure(cyc_eval(&(p * r), level).unwrap() == &ep * &er, || {
        format!("multiplicativity fails at level {level} for {p}, {r}")
    })?;
    ensure(cyc_eval(&(p + r), level).unwrap() == &ep + &er, || {
        format!("additivity fails at level {level}")
    })
}

pub fn check_dissection_round_trip(p: &IntSeries, s: u64) -> Result<(), TestCaseError> {
    let d = dissection(p, s).unwrap();
    ensure(&d.reconstruct() == p, || {
        format!("round trip of {p} with s = {s}")
    })
}

/// All admissible vectors of the box `{0..=j_cap}^{m-1}` with `v < v_cap`,
/// found by scanning the box and testing `3 sum l j_l = 1 (mod m)`.
pub fn brute_force_box(t: u32, j_cap: i64, v_cap: i64) -> Vec<(JVector, i64)> {
    let p = torus_params(t).unwrap();
    let len = (p.m() - 1) as usize;
    let mut out = Vec::new();
    let mut j = vec![0i64; len];
    loop {
        let weighted: i64 = j.iter().enumerate().map(|(i, x)| (i as i64 + 1) * x).sum();
        if (3 * weighted - 1).rem_euclid(p.m()) == 0 {
            let jv = JVector(j.clone());
            let v = v_exponent(&jv, &p).unwrap();
            if v < v_cap {
                out.push((jv, v));
            }
        }
        // odometer with the last entry fastest, matching lexicographic order
        let mut pos = len;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if j[pos] < j_cap {
                j[pos] += 1;
                break;
            }
            j[pos] = 0;
        }
    }
}

pub fn check_enumerator(t: u32, j_cap: i64, v_cap: i64) -> Result<(), TestCaseError> {
    let p = torus_params(t).unwrap();
    let dfs = admissible_jvectors(&p, j_cap, v_cap);
    let brute = brute_force_box(t, j_cap, v_cap);
    ensure(dfs == brute, || {
        format!(
            "t = {t}, j_cap = {j_cap}, v_cap = {v_cap}: {} vs {}",
            dfs.len(),
            brute.len()
        )
    })
}

/// Every vector the enumerator yields has the v it reports.
pub fn check_reported_v(t: u32, j_cap: i64, v_cap: i64) -> Result<(), TestCaseError> {
    let p = torus_params(t).unwrap();
    let mut bad = None;
    for_each_admissible(&p, j_cap, v_cap, |j, v| {
        if v_exponent(&JVector(j.to_vec()), &p) != Ok(v) && bad.is_none() {
            bad = Some(j.to_vec());
        }
    });
    ensure(bad.is_none(), || format!("wrong v for {bad:?}"))
}

pub fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn fmt_err<T: std::fmt::Debug>(e: proptest::test_runner::TestError<T>) -> String {
    format!("{e}")
}

/// Run each randomized property with the given number of cases.
pub fn run_property_suite(cases: u32) -> Vec<(&'static str, Result<(), String>)> {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    let mut results = Vec::new();
    let mut run = |name: &'static str, f: &dyn Fn(&mut TestRunner) -> Result<(), String>| {
        let mut runner = TestRunner::new_with_rng(
            config.clone(),
            proptest::test_runner::TestRng::deterministic_rng(config.rng_algorithm),
        );
        results.push((name, f(&mut runner)));
    };
    run("ring axioms", &|r| {
        r.run(
            &(window_series(), window_series(), window_series()),
            |(a, b, c)| check_ring_axioms(&a, &b, &c),
        )
        .map_err(fmt_err)
    });
    run("unit inverse", &|r| {
        r.run(&unit_series(), |a| check_inverse(&a))
            .map_err(fmt_err)
    });
    run("q -> 1-q involution", &|r| {
        r.run(&power_poly(), |p| check_involution(&p))
            .map_err(fmt_err)
    });
    run("cyc_eval homomorphism", &|r| {
        r.run(&(laurent(), laurent(), 1u64..25), |(p, q, m)| {
            check_cyc_hom(&p, &q, m)
        })
        .map_err(fmt_err)
    });
    run("dissection round trip", &|r| {
        r.run(&(laurent(), 2u64..8), |(p, s)| {
            check_dissection_round_trip(&p, s)
        })
        .map_err(fmt_err)
    });
    run("enumerator vs box", &|r| {
        r.run(&(2u32..4, 0i64..5, 0i64..14), |(t, j, v)| {
            check_enumerator(t, j, v)
        })
        .map_err(fmt_err)
    });
    results
}
