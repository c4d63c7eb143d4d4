//! Acceptance gate: one line per criterion, nonzero exit on any failure.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{big, check_enumerator, run_property_suite};
use fishburn::arith::{BiSeries, CycInt, IntSeries};
use fishburn::fishburn::{
    binom_congruence, divisibility_check, s_set, straub_order_bound, verify_congruence,
    xi_coefficients, xi_with_guard, DivisibilityReport,
};
use fishburn::identities::*;
use fishburn::qseries::{mean_value_zero, theta_spec_t};
use fishburn::torus::{colored_jones, torus_params};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn xi_prefix(t: u32, expected: &[i64]) -> Result<(), String> {
    let got = xi_coefficients(t, expected.len()).map_err(|e| e.to_string())?;
    require(got == big(expected), || format!("xi_{t} = {got:?}"))
}

fn ac1() -> Outcome {
    xi_prefix(1, &[1, 1, 2, 5, 15, 53])?;
    Ok("xi(0..5) = 1, 1, 2, 5, 15, 53".into())
}

fn ac2() -> Outcome {
    xi_prefix(2, &[1, 3, 11, 50, 280, 1890])?;
    xi_prefix(3, &[1, 7, 49, 420, 4515, 59367])?;
    Ok("xi_2 and xi_3 prefixes match; sign factor included".into())
}

fn ac3() -> Outcome {
    let cases: [(u32, u64, &[u64]); 4] = [
        (2, 5, &[0, 2, 3]),
        (2, 17, &[0, 2, 3, 4, 7, 8, 9, 11, 14]),
        (3, 7, &[0, 2, 3, 4]),
        (3, 13, &[0, 2, 5, 6, 7, 8, 11]),
    ];
    for (t, p, expected) in cases {
        let got = s_set(&theta_spec_t(t, 0).map_err(|e| e.to_string())?, p);
        require(got == expected, || format!("S_{t}({p}) = {got:?}"))?;
    }
    Ok("four S-sets".into())
}

fn congruence(t: u32, p: u64, r: u32, m_max: u64, js: &[u64]) -> Result<usize, String> {
    let rep = verify_congruence(t, p, r, m_max).map_err(|e| e.to_string())?;
    require(rep.j_range == js, || {
        format!("t = {t}, p = {p}: j-range {:?}", rep.j_range)
    })?;
    if let Some(e) = rep.entries.iter().find(|e| e.residue != 0) {
        return Err(format!(
            "xi_{t}({}) = {} is {} mod {}",
            e.index, e.value, e.residue, rep.modulus
        ));
    }
    Ok(rep.entries.len())
}

fn ac4() -> Outcome {
    let checked = congruence(2, 5, 1, 6, &[1])?
        + congruence(2, 5, 2, 2, &[1])?
        + congruence(2, 17, 1, 2, &[1, 2])?
        + congruence(3, 7, 1, 3, &[1, 2])?
        + congruence(3, 13, 1, 2, &[1])?;
    Ok(format!("{checked} residues vanish"))
}

fn ac5() -> Outcome {
    let mut checked = 0;
    for (p, js) in [(5, &[1u64, 2][..]), (7, &[1]), (11, &[1, 2, 3])] {
        checked += congruence(1, p, 1, 4, js)?;
    }
    Ok(format!("{checked} residues vanish"))
}

fn divisible_pieces(r: &DivisibilityReport) -> Vec<u64> {
    r.pieces
        .iter()
        .filter(|v| v.divides == Some(true))
        .map(|v| v.i)
        .collect()
}

fn ac6() -> Outcome {
    let mut notes = Vec::new();
    for n in [9, 14, 19, 24, 29] {
        let r = divisibility_check(2, 5, n).map_err(|e| e.to_string())?;
        require(r.pass && divisible_pieces(&r) == [1, 4], || {
            format!("t = 2, N = {n}: {r:?}")
        })?;
    }
    for n in [9, 14, 19, 24, 29] {
        let r = divisibility_check(1, 5, n).map_err(|e| e.to_string())?;
        require(r.pass && divisible_pieces(&r) == [3, 4], || {
            format!("t = 1, N = {n}: {r:?}")
        })?;
    }
    notes.push("t = 1 tested off S_1(5) = {0, 1, 2}".to_string());
    for n in [13, 20] {
        let r = divisibility_check(3, 7, n).map_err(|e| e.to_string())?;
        require(r.pass && divisible_pieces(&r) == [1, 5, 6], || {
            format!("t = 3, N = {n}: {r:?}")
        })?;
        let shifts: Vec<i64> = r.pieces.iter().filter_map(|v| v.shift).collect();
        notes.push(format!("t = 3, N = {n} shifts {shifts:?}"));
    }
    Ok(notes.join("; "))
}

fn all_pass(reports: &[IdentityReport]) -> Outcome {
    for r in reports {
        require(r.pass, || {
            format!("{} (t = {:?}): {:?}", r.name, r.t, r.first_discrepancy)
        })?;
    }
    Ok(format!("{} identity checks", reports.len()))
}

fn ac7() -> Outcome {
    let e = |r: fishburn::Result<IdentityReport>| r.map_err(|e| e.to_string());
    all_pass(&[
        e(verify_difference_equation(2, 14, 40))?,
        e(verify_difference_equation(3, 10, 24))?,
        e(verify_multisum_representation(2, 14, 40))?,
        e(verify_multisum_representation(3, 10, 24))?,
        e(verify_rewrite2(2, 12, 30))?,
        e(verify_rewrite2(3, 8, 20))?,
        e(verify_key_identity(2, 30))?,
        e(verify_key_identity(3, 20))?,
        e(verify_theta_product(2, 60))?,
        e(verify_theta_product(3, 60))?,
        e(verify_slater(40))?,
        e(verify_generalized_slater(2, 30))?,
        e(verify_generalized_slater(3, 30))?,
    ])
}

fn ac8() -> Outcome {
    let mut reports = Vec::new();
    for t in 1..=3 {
        reports.push(verify_root_match(t, 8).map_err(|e| e.to_string())?);
    }
    all_pass(&reports)?;
    let j2 = colored_jones(&torus_params(1).map_err(|e| e.to_string())?, 2);
    let expected = IntSeries::from_i64(-4, &[-1, 1, 0, 1]);
    require(j2 == expected, || format!("J_2 = {j2}"))?;
    Ok("t = 1, 2, 3 at N = 1..8; J_2 of the trefoil".into())
}

fn ac9() -> Outcome {
    for t in 2..=4 {
        let spec = theta_spec_t(t, 0).map_err(|e| e.to_string())?;
        for m in 1..=12 {
            require(mean_value_zero(&spec, m), || format!("t = {t}, M = {m}"))?;
        }
    }
    Ok("36 cyclotomic sums vanish".into())
}

fn ac10() -> Outcome {
    for p in [5, 7] {
        for r in 1..=2 {
            for n in 1..=4 {
                require(straub_order_bound(p, r, n), || {
                    format!("bound p = {p}, r = {r}, n = {n}")
                })?;
            }
        }
    }
    let mut cases = 0;
    for t in 1..=3 {
        let spec = theta_spec_t(t, 0).map_err(|e| e.to_string())?;
        for p in [5u64, 7] {
            let set = s_set(&spec, p);
            let top = p - 1 - set.last().copied().unwrap_or(0);
            for r in 1..=2 {
                for &i in &set {
                    for j in 1..=top {
                        for l in 1..=6 {
                            for m in 1..=2 {
                                cases += 1;
                                require(binom_congruence(i, l, p, r, m, j), || {
                                    format!("t = {t}: i = {i}, l = {l}, p = {p}, r = {r}, m = {m}, j = {j}")
                                })?;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(format!("16 bounds, {cases} binomial cases"))
}

fn flagged(part: &PartReport, x_degree: Option<usize>, exponent: i64) -> Result<(), String> {
    let d = part.first_discrepancy.as_ref();
    require(
        !part.pass && d.map(|d| (d.x_degree, d.exponent)) == Some((x_degree, exponent)),
        || {
            format!(
                "{} missed a perturbation at ({x_degree:?}, {exponent})",
                part.name
            )
        },
    )
}

fn sensitivity() -> Result<(), String> {
    let bump = |s: &IntSeries, e: i64| s + &IntSeries::monomial(e, 1);
    let bump_bi = |s: &BiSeries, d: usize, e: i64| {
        let mut out = s.clone();
        out.add_term(d, e, 1);
        out
    };
    let p2 = torus_params(2).map_err(|e| e.to_string())?;
    let (l, r) = rewrite2_sides(&p2, 12, 30);
    flagged(
        &compare_bi("rewrite2", &l, &bump_bi(&r, 11, 29)),
        Some(11),
        29,
    )?;
    let h = fishburn::torus::h_theta(&p2, 14, 40);
    let rhs = difference_equation_rhs(&p2, &h);
    flagged(
        &compare_bi("difference equation", &bump_bi(&h, 3, 2), &rhs),
        Some(3),
        2,
    )?;
    let (l, r) = slater_sides(40).map_err(|e| e.to_string())?;
    flagged(&compare_series("slater", &l, &bump(&r, 39), 40), None, 39)?;
    let (l, r) = generalized_slater_sides(2, 30).map_err(|e| e.to_string())?;
    flagged(
        &compare_series("generalized slater", &bump(&l, 5), &r, 30),
        None,
        5,
    )?;
    let (l, r) = root_match_sides(2, 8).map_err(|e| e.to_string())?;
    flagged(
        &compare_cyc("root match", &l, &(&r + &CycInt::root_power(8, 3))),
        None,
        3,
    )?;
    Ok(())
}

fn ac11() -> Outcome {
    for t in 2..=3 {
        let a = xi_with_guard(t, 40, 4).map_err(|e| e.to_string())?;
        let b = xi_with_guard(t, 40, 9).map_err(|e| e.to_string())?;
        require(a == b, || format!("t = {t}: guard 4 and 9 disagree"))?;
    }
    for t in 1..=4 {
        for j_cap in 0..=4 {
            for v_cap in [0, 2, 7, 16, i64::MAX] {
                check_enumerator(t, j_cap, v_cap).map_err(|e| e.to_string())?;
            }
        }
    }
    for (name, result) in run_property_suite(256) {
        result.map_err(|e| format!("{name}: {e}"))?;
    }
    sensitivity()?;
    Ok("stabilization, box filter, randomized suites, sensitivity".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("AC1", Duration::from_secs(1), ac1),
        ("AC2", Duration::from_secs(10), ac2),
        ("AC3", Duration::from_secs(1), ac3),
        ("AC4", Duration::from_secs(180), ac4),
        ("AC5", Duration::from_secs(10), ac5),
        ("AC6", Duration::from_secs(120), ac6),
        ("AC7", Duration::from_secs(180), ac7),
        ("AC8", Duration::from_secs(60), ac8),
        ("AC9", Duration::from_secs(30), ac9),
        ("AC10", Duration::from_secs(5), ac10),
        ("AC11", Duration::from_secs(60), ac11),
    ];
    let mut failures = 0;
    for (name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (status, detail) = match outcome {
            Ok(detail) if elapsed <= budget => ("PASS", detail),
            Ok(detail) => ("FAIL", format!("over budget; {detail}")),
            Err(reason) => ("FAIL", reason),
        };
        if status == "FAIL" {
            failures += 1;
        }
        println!(
            "{name} {status} ({} ms / budget {} s) {detail}",
            elapsed.as_millis(),
            budget.as_secs()
        );
    }
    if failures == 0 {
        println!("acceptance: all 11 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failures} of 11 criteria fail");
        ExitCode::FAILURE
    }
}
