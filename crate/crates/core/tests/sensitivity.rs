//! Every checker must notice a single flipped coefficient and report where.

use fishburn::arith::{BiSeries, CycInt, IntSeries};
use fishburn::identities::*;
use fishburn::torus::{h_theta, torus_params};
use num_bigint::BigInt;

fn bump(s: &IntSeries, e: i64) -> IntSeries {
    s + &IntSeries::monomial(e, 1)
}

fn bump_bi(s: &BiSeries, d: usize, e: i64) -> BiSeries {
    let mut out = s.clone();
    out.add_term(d, e, 1);
    out
}

fn assert_flags(part: &PartReport, x_degree: Option<usize>, exponent: i64) {
    assert!(!part.pass, "{} accepted a perturbed input", part.name);
    let d = part.first_discrepancy.as_ref().unwrap();
    assert_eq!(
        (d.x_degree, d.exponent),
        (x_degree, exponent),
        "{}",
        part.name
    );
    let l: BigInt = d.lhs.parse().unwrap();
    let r: BigInt = d.rhs.parse().unwrap();
    assert_eq!((l - r).magnitude(), &1u32.into());
}

#[test]
fn difference_equation_checker() {
    let p = torus_params(2).unwrap();
    let h = h_theta(&p, 14, 40);
    let rhs = difference_equation_rhs(&p, &h);
    assert!(compare_bi("d", &h, &rhs).pass);
    assert_flags(&compare_bi("d", &bump_bi(&h, 5, 9), &rhs), Some(5), 9);
    // a flaw in f feeds the recursion term at x-degree d + 12
    let flipped = bump_bi(&h, 0, 0);
    let report = compare_bi("d", &flipped, &difference_equation_rhs(&p, &flipped));
    assert_flags(&report, Some(0), 0);
}

#[test]
fn rewrite2_checker() {
    let p = torus_params(3).unwrap();
    let (l, r) = rewrite2_sides(&p, 8, 20);
    assert!(compare_bi("r", &l, &r).pass);
    assert_flags(&compare_bi("r", &l, &bump_bi(&r, 7, 19)), Some(7), 19);
}

#[test]
fn key_identity_checker() {
    let p = torus_params(2).unwrap();
    let lhs = key_lhs(2, 30).unwrap();
    let cutoff = adaptive_cutoff(&p, 30, 10_000).unwrap();
    let rhs = key_rhs(&p, 30, &b_sums(&p, cutoff, 30));
    assert!(compare_series("k", &lhs, &rhs, 30).pass);
    assert_flags(&compare_series("k", &lhs, &bump(&rhs, 17), 30), None, 17);
    // a cutoff that is too small breaks the identity
    let short = key_rhs(&p, 30, &b_sums(&p, 4, 30));
    assert!(!compare_series("k", &lhs, &short, 30).pass);
}

#[test]
fn slater_checkers() {
    let (l, r) = slater_sides(40).unwrap();
    assert!(compare_series("s", &l, &r, 40).pass);
    assert_flags(&compare_series("s", &bump(&l, 0), &r, 40), None, 0);
    let (l, r) = generalized_slater_sides(3, 30).unwrap();
    assert_flags(&compare_series("g", &l, &bump(&r, 29), 30), None, 29);
}

#[test]
fn root_match_checker() {
    let (l, r) = root_match_sides(3, 7).unwrap();
    assert!(compare_cyc("z", &l, &r).pass);
    let shifted = &r + &CycInt::root_power(7, 2);
    assert_flags(&compare_cyc("z", &l, &shifted), None, 2);
}

#[test]
fn report_invariant() {
    for r in [
        verify_difference_equation(3, 10, 24).unwrap(),
        verify_theta_product(3, 60).unwrap(),
        verify_root_match(2, 4).unwrap(),
    ] {
        assert_eq!(r.pass, r.first_discrepancy.is_none());
        assert!(r.pass);
    }
}
