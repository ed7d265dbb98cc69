//! Acceptance suite. Runs every criterion at its pinned tolerance, prints one
//! PASS/FAIL line each and exits non-zero if any criterion fails.
//!
//! `cargo test -p graphspec-core --test acceptance`

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use graphspec_core::moments::{build_walk_table, check_bounds, find_bound_constants, moment_limit};
use graphspec_core::oracle::{oracle_moment, walks_by_returns};
use graphspec_core::sim::{
    component_count, degree_statistics, estimate_moments, exact_finite_moment, expected_normalized_trace,
    max_degree, poisson_tv_distance, sample_graph, spectrum, within_limit_tolerance, MatrixKind,
    FINITE_SIZE_ALLOWANCE,
};
use graphspec_core::Intensity;
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

/// Regression value for the moment-bound constant: the smallest integer that
/// passes on the computed range.
const PINNED_C2: u32 = 2;
const MC_SAMPLES: usize = 1000;
const MC_SWEEP: [usize; 3] = [500, 1000, 2000];
const SMALL_N_SAMPLES: usize = 20_000;
/// Floating-point floor for comparisons whose sample variance is exactly zero.
const NUMERIC_FLOOR: f64 = 1e-9;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn rat_f64(r: &BigRational) -> f64 {
    r.to_f64().expect("finite")
}

fn criterion_1() -> Outcome {
    let table = build_walk_table(6, &Intensity::one()).unwrap();
    let mut mismatches = Vec::new();
    for u in 0..=6 {
        let from_table: BTreeMap<usize, u64> = (0..=u)
            .filter_map(|v| {
                let w = table.integer_entry(u, v).unwrap();
                (!w.is_zero()).then(|| (v, w.to_u64().unwrap()))
            })
            .collect();
        if from_table != walks_by_returns(u).unwrap() {
            mismatches.push(format!("column u={u}"));
        }
        let m = moment_limit(u, &table).unwrap();
        if m != BigRational::from_integer(oracle_moment(u).unwrap().into()) {
            mismatches.push(format!("m_{u}"));
        }
    }
    let m6 = moment_limit(6, &table).unwrap();
    outcome(
        mismatches.is_empty(),
        format!("W_u(v) columns and m_k agree with the walk enumeration for u, k <= 6 (m_6 = {m6}); mismatches: {mismatches:?}"),
    )
}

fn criterion_2() -> Outcome {
    let table = build_walk_table(6, &Intensity::one()).unwrap();
    let int = |v: u64| BigRational::from_integer(v.into());
    let checks = [
        ("W_1(1) = 1", table.entry(1, 1) == int(1)),
        ("W_2(1) = 1", table.entry(2, 1) == int(1)),
        ("W_2(2) = 2", table.entry(2, 2) == int(2)),
        ("m_1 = 1", moment_limit(1, &table).unwrap() == int(1)),
        ("m_2 = 3", moment_limit(2, &table).unwrap() == int(3)),
        ("W_j(0) = [j = 0]", (0..=6).all(|j| table.entry(j, 0) == int(u64::from(j == 0)))),
    ];
    let failed: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    outcome(failed.is_empty(), format!("{} anchors exact; failed: {failed:?}", checks.len()))
}

fn criterion_3() -> Outcome {
    let table = build_walk_table(3, &Intensity::one()).unwrap();
    let limit = |s: u32| rat_f64(&moment_limit(s as usize / 2, &table).unwrap());
    let mut notes = Vec::new();
    let mut pass = true;

    let mut gaps: BTreeMap<u32, Vec<(f64, f64)>> = BTreeMap::new();
    let mut at_2000 = None;
    for &n in &MC_SWEEP {
        let est = estimate_moments(n, 1.0, 6, MC_SAMPLES, 1_000_000 + n as u64).unwrap();
        for s in [2u32, 4, 6] {
            let r = est.moment(s).unwrap();
            gaps.entry(s).or_default().push((r.mean - limit(s), r.stderr));
        }
        if n == 2000 {
            at_2000 = Some(est);
        }
    }
    let est = at_2000.unwrap();
    let n = 2000usize;
    let m2 = est.moment(2).unwrap();
    let finite_m2 = (n as f64 - 1.0) / n as f64;
    let ok2 = (m2.mean - finite_m2).abs() <= 3.0 * m2.stderr;
    pass &= ok2;
    notes.push(format!("M_2 = {:.5} ± {:.5} vs (n-1)/n [{}]", m2.mean, m2.stderr, ok2));
    for s in [4u32, 6] {
        let r = est.moment(s).unwrap();
        let ok = within_limit_tolerance(r, limit(s), n);
        pass &= ok;
        notes.push(format!("M_{s} = {:.4} ± {:.4} vs m_{} = {} [{}]", r.mean, r.stderr, s / 2, limit(s), ok));
    }

    // Shrinking gap along the sweep, up to the combined noise of the two
    // estimates; and the exact finite-N bias strictly shrinking.
    for (s, series) in &gaps {
        for w in series.windows(2) {
            let noise = 3.0 * (w[0].1 * w[0].1 + w[1].1 * w[1].1).sqrt();
            if w[1].0.abs() > w[0].0.abs() + noise {
                pass = false;
                notes.push(format!("gap for s={s} grew beyond noise: {:?}", series));
            }
        }
        let biases: Vec<f64> = MC_SWEEP
            .iter()
            .map(|&n| {
                let e = expected_normalized_trace(n as u64, &Intensity::one(), *s as usize).unwrap();
                (rat_f64(&e) - limit(*s)).abs()
            })
            .collect();
        let strictly = biases.windows(2).all(|w| w[1] < w[0]);
        let covered = MC_SWEEP.iter().zip(&biases).all(|(&n, b)| b * n as f64 <= FINITE_SIZE_ALLOWANCE);
        pass &= strictly && covered;
        notes.push(format!(
            "s={s}: MC gaps {:?}, exact |bias| {:?}",
            series.iter().map(|g| format!("{:+.4}", g.0)).collect::<Vec<_>>(),
            biases.iter().map(|b| format!("{b:.2e}")).collect::<Vec<_>>()
        ));
    }
    outcome(pass, format!("{MC_SAMPLES} samples per n, c = {FINITE_SIZE_ALLOWANCE}; {}", notes.join("; ")))
}

fn criterion_4() -> Outcome {
    let mut worst = (0.0f64, String::new());
    let mut failures = Vec::new();
    let mut compared = 0;
    for p_text in ["1/2", "1", "2"] {
        let p: Intensity = p_text.parse().unwrap();
        for n in 1..=6usize {
            if p.to_f64() > n as f64 {
                continue;
            }
            let est = estimate_moments(n, p.to_f64(), 6, SMALL_N_SAMPLES, 7_000 + 10 * n as u64).unwrap();
            for s in 1..=6u32 {
                let exact = rat_f64(&exact_finite_moment(n, &p, s as usize).unwrap());
                let r = est.moment(s).unwrap();
                let diff = (r.mean - exact).abs();
                compared += 1;
                let z = if r.stderr > NUMERIC_FLOOR { diff / r.stderr } else { 0.0 };
                if z > worst.0 {
                    worst = (z, format!("n={n} p={p_text} s={s}"));
                }
                if diff > 3.0 * r.stderr + NUMERIC_FLOOR {
                    failures.push(format!("n={n} p={p_text} s={s}: {} vs {exact} (se {})", r.mean, r.stderr));
                }
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "{compared} (n, p, s) cells, {SMALL_N_SAMPLES} samples each; largest |z| = {:.2} at {}; failures: {failures:?}",
            worst.0, worst.1
        ),
    )
}

fn criterion_5() -> Outcome {
    let range = 24;
    let report = check_bounds(range, &BigRational::from_integer(2.into()), &BigRational::from_integer(2.into())).unwrap();
    let lower_ok = report.lower_bound_holds() && report.lower_bounds.len() == range / 2;
    let found = find_bound_constants(range, 8).unwrap();
    let c2_ok = found.c2 == Some(PINNED_C2);
    let c1_ok = found.c1.is_some();
    let c1_note = match found.c1 {
        Some(c) => format!("c1 = {c}"),
        None => {
            let r8 = check_bounds(range, &BigRational::from_integer(8.into()), &BigRational::from_integer(8.into())).unwrap();
            let bad = r8.first_walk_violation().unwrap();
            let worst = r8.walk_bounds.iter().filter(|r| !r.holds).count();
            format!(
                "no c1 <= 8: at c1 = 8 first violation W_{}({}) = {} > {}, {worst} violations; W_k(1) = m_(k-1) grows faster than (c1 k)^2",
                bad.k, bad.r, bad.value, bad.bound
            )
        }
    };
    outcome(
        lower_ok && c2_ok && c1_ok,
        format!(
            "W_k(k) >= (k/2)! for even k <= {range}: {lower_ok}; smallest c2 = {:?} (pinned {PINNED_C2}); {c1_note}",
            found.c2
        ),
    )
}

fn criterion_6() -> Outcome {
    let top = 32;
    let bound = 10.0;
    let table = build_walk_table(64, &Intensity::one()).unwrap();
    let m = |k: usize| -> BigUint { moment_limit(k, &table).unwrap().to_integer().to_biguint().unwrap() };
    let root = |k: usize| -> f64 { m(k).to_f64().unwrap().powf(1.0 / k as f64) };
    // m_{k+1}^{1/(k+1)} > m_k^{1/k}  ⇔  m_{k+1}^k > m_k^{k+1}, exactly.
    let increasing = (top / 2..top).all(|k| num_traits::pow(m(k + 1), k) > num_traits::pow(m(k), k + 1));
    let end = root(top);
    let crossing = (1..=64).find(|&k| root(k) > bound);
    outcome(
        increasing && end > bound,
        format!(
            "m_k^(1/k) strictly increasing for k in {}..={top}: {increasing}; m_{top}^(1/{top}) = {end:.4} vs B = {bound}; first k with m_k^(1/k) > B: {crossing:?}",
            top / 2
        ),
    )
}

fn criterion_7() -> Outcome {
    let mut failures = Vec::new();
    let mut min_eig = f64::INFINITY;
    for seed in 0..50u64 {
        let g = sample_graph(500, 1.0, 50_000 + seed).unwrap();
        let lap = spectrum(&g, MatrixKind::Laplacian).unwrap();
        let two_e = 2.0 * g.edge_count() as f64;
        let trace: f64 = lap.eigenvalues.iter().sum();
        min_eig = min_eig.min(lap.eigenvalues[0]);
        if lap.eigenvalues[0] < -1e-8 {
            failures.push(format!("seed {seed}: min {}", lap.eigenvalues[0]));
        }
        if lap.zero_multiplicity() != component_count(&g) {
            failures.push(format!("seed {seed}: zeros {} vs components {}", lap.zero_multiplicity(), component_count(&g)));
        }
        if (trace - two_e).abs() > 1e-10 * two_e {
            failures.push(format!("seed {seed}: trace {trace} vs {two_e}"));
        }
    }
    outcome(failures.is_empty(), format!("50 seeds, min eigenvalue {min_eig:.3e}; failures: {failures:?}"))
}

fn criterion_8() -> Outcome {
    let seeds = 30u64;
    let tv: f64 = (0..seeds)
        .map(|s| poisson_tv_distance(&degree_statistics(&sample_graph(2000, 1.0, 80_000 + s).unwrap()), 1.0))
        .sum::<f64>()
        / seeds as f64;
    let median_max = |n: usize| {
        let mut maxes: Vec<usize> = (0..21u64).map(|s| max_degree(&sample_graph(n, 1.0, 90_000 + s).unwrap())).collect();
        maxes.sort_unstable();
        maxes[maxes.len() / 2]
    };
    let (small, large) = (median_max(500), median_max(4000));
    outcome(
        tv < 0.05 && large > small,
        format!("mean TV to Poisson(1) over {seeds} seeds at n=2000: {tv:.4} (< 0.05); median max degree n=500: {small}, n=4000: {large}"),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 recurrence = enumeration oracle", criterion_1),
        ("2 hand-checked anchors", criterion_2),
        ("3 Monte Carlo convergence", criterion_3),
        ("4 small-N exact expectation", criterion_4),
        ("5 growth bounds", criterion_5),
        ("6 infinite-support evidence", criterion_6),
        ("7 Laplacian invariants", criterion_7),
        ("8 degree law", criterion_8),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let result = run();
        let tag = if result.pass { "PASS" } else { "FAIL" };
        println!("[{tag}] {name} ({:.1}s): {}", start.elapsed().as_secs_f64(), result.detail);
        failed += usize::from(!result.pass);
    }
    println!("acceptance: {} of 8 criteria passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
