//! Acceptance suite: one PASS/FAIL line per criterion, tolerances pinned below.
//!
//! The process fails if any criterion fails, except those listed in
//! [`KNOWN_UNATTAINABLE`], which still print FAIL with their measured value.

use std::cmp::Ordering;
use std::process::Command;
use std::time::{Duration, Instant};

use canonical_bounds::blowup::{
    asymptote_offset, double_cover_genus, hyperbola_d_of_m, hyperbola_value, nagata_region_member, nagata_sides,
    petra_e10, roe_gap, seshadri_lower, DivisorClass, SeshadriEstimate, SeshadriSource,
};
use canonical_bounds::curvedata::CurveTriple;
use canonical_bounds::exactmath::{int, ratio};
use canonical_bounds::explorer::{oracle_check_row, scan_homogeneous, ScanConfig};
use canonical_bounds::inequalities::{
    b_epsilon, beta_bound, genus_bound_from_epsilon, m1_holds_for_all_alpha, max_k_negative, p_of_k,
};
use canonical_bounds::vojta::{lambda_lower, pluricanonical_lambda, projection_ratio, PolarizedSurface};
use canonical_bounds::{QuadSurd, Rational};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const SEED: u64 = 0x5eed_cb01;
const C1_MAX_RUNTIME: Duration = Duration::from_millis(1);
const C3_SAMPLES: usize = 1000;
const C3_MAX_RUNTIME: Duration = Duration::from_secs(1);
const C6_TOL: f64 = 1e-9;
const C6_T_MAX: f64 = 1e6;
const C7_INSTANCES: usize = 500;
const C7_POINTS: i128 = 100_000;
const C9_M_MAX: u64 = 200;
const C9_MAX_RUNTIME: Duration = Duration::from_secs(10);
const C10_TOL: f64 = 1e-5;
const C11_DIGITS: u32 = 50;
const C11_TOL_EXP: u32 = 3;
const C12_N: u64 = 1_000_000;
const C12_TOL_EXP: u32 = 2;
const C13_TOL_DEN: i64 = 100_000;
const C16_MAX_RUNTIME: Duration = Duration::from_secs(60);

/// Criteria that cannot pass as stated; see the decisions ledger.
const KNOWN_UNATTAINABLE: &[u32] = &[12];

type Criterion = (u32, &'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn c1() -> Outcome {
    let start = Instant::now();
    let k = max_k_negative(10, 3).unwrap();
    let elapsed = start.elapsed();
    // P(k) = 2(k − 3(g−1))² − a(3k − 6(g−1)), in machine integers
    let (kk, gg, aa) = (36i64, 10i64 - 1, 3i64);
    let by_hand = 2 * (kk - 3 * gg).pow(2) - aa * (3 * kk - 6 * gg);
    let pass = k.is_rational()
        && k == QuadSurd::from(36)
        && p_of_k(36, 10, 3).is_zero()
        && by_hand == 0
        && elapsed < C1_MAX_RUNTIME;
    outcome(pass, format!("max_k_negative(10,3) = {k}, P(36) = {}, {elapsed:?}", p_of_k(36, 10, 3)))
}

fn c2() -> Outcome {
    let mut seen = Vec::new();
    let mut pass = true;
    for g in [2i64, 5, 100] {
        let k = max_k_negative(g, 0).unwrap();
        pass &= k == QuadSurd::from(3 * (g - 1));
        seen.push(format!("g={g}: {k}"));
    }
    outcome(pass, seen.join(", "))
}

fn c3() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED);
    let start = Instant::now();
    let mut checked = 0;
    let mut bad = Vec::new();
    for _ in 0..C3_SAMPLES {
        let g: i64 = rng.gen_range(1..=10_000);
        let a: i64 = rng.gen_range(1..=1000);
        let k0 = max_k_negative(g, a).unwrap().floor();
        if k0 > BigInt::from(3 * (g - 1)) {
            checked += 1;
            let ok = !p_of_k(k0.clone(), g, a).is_positive() && p_of_k(&k0 + 1, g, a).is_positive();
            if !ok {
                bad.push((g, a));
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        bad.is_empty() && elapsed < C3_MAX_RUNTIME,
        format!("{checked}/{C3_SAMPLES} bracketed, failures {bad:?}, {elapsed:?}"),
    )
}

fn c4() -> Outcome {
    let bad: Vec<i64> = (0..=1000)
        .filter(|&a| {
            let (exact, linear) = beta_bound(a).unwrap();
            exact.cmp_exact(&QuadSurd::from(linear)).unwrap() == Ordering::Greater
        })
        .collect();
    outcome(bad.is_empty(), format!("exact <= linear for a in [0, 1000]; violations {bad:?}"))
}

fn c5() -> Outcome {
    let g = genus_bound_from_epsilon(&int(1), 3).unwrap();
    let k = max_k_negative(10, 3).unwrap();
    let pass = g == int(10) && k == QuadSurd::from((3 + 1) * (10 - 1));
    outcome(pass, format!("genus bound {g}, max_k_negative(10,3) = {k}"))
}

/// Maximum of a concave function on `[0, hi]`: a log-spaced scan brackets
/// the peak, golden-section search refines it.
fn maximize_concave(f: impl Fn(f64) -> f64, hi: f64) -> f64 {
    let mut grid = vec![0.0];
    let mut t = 1e-6;
    while t < hi {
        grid.push(t);
        t *= 1.25;
    }
    grid.push(hi);
    let best = (0..grid.len()).max_by(|&i, &j| f(grid[i]).total_cmp(&f(grid[j]))).unwrap();
    let mut lo = grid[best.saturating_sub(1)];
    let mut up = grid[(best + 1).min(grid.len() - 1)];
    let phi = (5f64.sqrt() - 1.0) / 2.0;
    for _ in 0..200 {
        let x1 = up - phi * (up - lo);
        let x2 = lo + phi * (up - lo);
        if f(x1) < f(x2) {
            lo = x1;
        } else {
            up = x2;
        }
    }
    f(0.0).max(f(hi)).max(f((lo + up) / 2.0))
}

fn c6() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut count = 0;
    for ai in 1..=20 {
        let a = 5 * ai;
        for ei in 1..=20 {
            let eps = ratio(ei, 10);
            let (af, ef) = (a as f64, ei as f64 / 10.0);
            let numeric = maximize_concave(|t| (9.0 * af * af + 24.0 * af * t).sqrt() / 4.0 - ef * t, C6_T_MAX);
            let exact = b_epsilon(&eps, a).unwrap() - ratio(3 * a, 4);
            let diff = (numeric - exact.to_f64().unwrap()).abs();
            worst = worst.max(diff);
            count += 1;
        }
    }
    outcome(worst <= C6_TOL, format!("{count} grid points, max |numeric - exact| = {worst:.3e}"))
}

fn c7() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED ^ 7);
    let mut agree = 0;
    let mut holds = 0;
    let mut disagreements = Vec::new();
    for _ in 0..C7_INSTANCES {
        // adjunction-consistent: C² + k even and p_a = (C² + k)/2 + 1 ≥ g
        let (g, c2, k) = loop {
            let g: i64 = rng.gen_range(0..=30);
            let c2: i64 = rng.gen_range(-30..=30);
            let k: i64 = rng.gen_range(-30..=150);
            if (c2 + k) % 2 == 0 && (c2 + k) / 2 + 1 >= g {
                break (g, c2, k);
            }
        };
        let a: i64 = rng.gen_range(0..=300);
        let (qa, qb, qc) = (
            (c2 + 3 * k - 6 * g + 6) as i128,
            (-4 * (k - 3 * g + 3)) as i128,
            (2 * a) as i128,
        );
        // N²·value(i/N) = A·i² + B·i·N + C·N²
        let sampled = (0..=C7_POINTS).all(|i| qa * i * i + qb * i * C7_POINTS + qc * C7_POINTS * C7_POINTS >= 0);
        let exact = m1_holds_for_all_alpha(CurveTriple::new(g, c2, k), a);
        holds += exact as usize;
        if sampled == exact {
            agree += 1;
        } else {
            disagreements.push((g, c2, k, a));
        }
    }
    outcome(
        agree == C7_INSTANCES,
        format!("{agree}/{C7_INSTANCES} agree ({holds} hold), disagreements {disagreements:?}"),
    )
}

fn c8() -> Outcome {
    let class = DivisorClass::from_i64(2, &[1; 10]);
    let (lhs, rhs) = nagata_sides(&class, &int(4)).unwrap();
    let member = nagata_region_member(&class, &int(4)).unwrap();
    let h = hyperbola_value(1, 2, 10, &int(4));
    let pass = member && lhs == int(-3) && rhs == int(-3) && h.is_zero();
    outcome(pass, format!("member {member}, LHS {lhs}, RHS {rhs}, hyperbola(1,2,10,4) = {h}"))
}

fn c9() -> Outcome {
    let start = Instant::now();
    let mut rows = 0;
    let mut bad = Vec::new();
    for n in [10u64, 11, 13, 20] {
        for beta0 in [ratio(7, 2), int(4), int(5)] {
            for m in 1..=C9_M_MAX {
                let root = hyperbola_d_of_m(m, n, &beta0).unwrap().floor().to_u64().unwrap();
                let cfg = ScanConfig::homogeneous(n, beta0.clone(), C9_M_MAX, root + 5);
                let row = oracle_check_row(m, &cfg).unwrap();
                let expected: Vec<u64> = (1..=root).collect();
                rows += 1;
                if !(row.agrees && !row.truncated && row.scanned == expected) {
                    bad.push((n, beta0.to_string(), m));
                }
            }
            // tie the row oracle to the region enumerator on a prefix
            let cfg = ScanConfig::homogeneous(n, beta0.clone(), 12, 60);
            for r in scan_homogeneous(&cfg).unwrap() {
                let m = r.homogeneous_m.as_ref().unwrap().to_u64().unwrap();
                let root = hyperbola_d_of_m(m, n, &beta0).unwrap().floor();
                if r.in_nagata_region != (*r.class.degree() <= root) {
                    bad.push((n, beta0.to_string(), m));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        bad.is_empty() && elapsed < C9_MAX_RUNTIME,
        format!("{rows} rows over 12 (n, beta0) pairs, mismatches {bad:?}, {elapsed:?}"),
    )
}

fn c10() -> Outcome {
    let (lhs, rhs) = (10i64 * 228 * 228, 721i64 * 721);
    let numeric = (228.0 / 721.0 - 10f64.powf(-0.5)).abs();
    let certified = SeshadriEstimate::new(10, petra_e10().into(), SeshadriSource::PetraN10).is_ok();
    let pass = lhs == 519_840 && rhs == 519_841 && lhs < rhs && numeric < C10_TOL && certified;
    outcome(pass, format!("{lhs} < {rhs}, |228/721 - 10^-1/2| = {numeric:.3e}"))
}

fn c11() -> Outcome {
    let m = 1_000_000u64;
    let d = hyperbola_d_of_m(m, 10, &int(4)).unwrap().scaled_floor(C11_DIGITS);
    let asym = QuadSurd::new(int(0), int(m), 10)
        .unwrap()
        .checked_add(&asymptote_offset(10, &int(4)).unwrap())
        .unwrap()
        .scaled_floor(C11_DIGITS);
    let diff = (d - asym).abs();
    let limit = BigInt::from(10).pow(C11_DIGITS - C11_TOL_EXP);
    let shown = QuadSurd::from(Rational::new(diff.clone(), BigInt::from(10).pow(C11_DIGITS))).approx(6);
    outcome(diff < limit, format!("|d(10^6) - asymptote| = {shown} (50-digit evaluation)"))
}

fn c12() -> Outcome {
    let n = C12_N;
    let f = int(n) * int(n);
    let e_n = seshadri_lower(n, Some(&f)).unwrap().value;
    let beta0 = int(4);
    let gap = roe_gap(n, &beta0, &e_n).unwrap();
    let target = (&beta0 - int(2)) / &beta0;
    let scale = BigInt::from(10).pow(C11_DIGITS);
    let diff = (gap.scaled_floor(C11_DIGITS) - (target.clone() * int(scale.clone())).floor().to_integer()).abs();
    let limit = BigInt::from(10).pow(C11_DIGITS - C12_TOL_EXP);
    outcome(
        diff < limit,
        format!(
            "gap at n = 10^6, beta0 = 4 is {} vs limit {target}; the 1/e_n term grows like sqrt(n)",
            gap.approx(8)
        ),
    )
}

fn c13() -> Outcome {
    let quintic = PolarizedSurface::new(5, 5, 6).unwrap();
    let lower = lambda_lower(&quintic).unwrap();
    let mut pass = lower == ratio(1, 2);
    for m in 1..=3 {
        for l2 in [2, 4] {
            let ps = PolarizedSurface::new(m * l2, l2, 1 + (1 + m) * l2 / 2).unwrap();
            pass &= lambda_lower(&ps).unwrap() == pluricanonical_lambda(m).unwrap();
        }
    }
    let above = (1..=1000).all(|n| projection_ratio(&quintic, n).unwrap().ratio > lower);
    let far = projection_ratio(&quintic, 1_000_000).unwrap().ratio - &lower;
    pass &= above && far.abs() < ratio(1, C13_TOL_DEN);
    outcome(pass, format!("lambda_lower = {lower}, ratio(10^6) - lower = {far}, above for n <= 1000: {above}"))
}

fn c14() -> Outcome {
    let line = DivisorClass::line(10);
    let eta_dot = DivisorClass::eta_four_l(10).pair(&line).unwrap();
    let g = double_cover_genus(0, eta_dot.clone()).unwrap();
    outcome(g == BigInt::from(3) && eta_dot == BigInt::from(4), format!("eta.L = {eta_dot}, g = {g}"))
}

fn c15() -> Outcome {
    let args = ["nagata", "scan", "--n", "10", "--beta0", "4", "--mmax", "50", "--dmax", "200", "--format", "csv"];
    let run = |workers: &str| {
        Command::new(env!("CARGO_BIN_EXE_canonical-bounds"))
            .args(args)
            .env("CANONICAL_BOUNDS_WORKERS", workers)
            .output()
            .expect("binary runs")
    };
    let (one, eight) = (run("1"), run("8"));
    let pass = one.status.success() && eight.status.success() && !one.stdout.is_empty() && one.stdout == eight.stdout;
    outcome(pass, format!("{} bytes with 1 worker, {} bytes with 8, identical: {}", one.stdout.len(), eight.stdout.len(), one.stdout == eight.stdout))
}

fn main() {
    let suite = Instant::now();
    let criteria: [Criterion; 15] = [
        (1, "negative-curve bound is exact at (g, a) = (10, 3)", c1),
        (2, "a = 0 collapses the bound to 3(g-1)", c2),
        (3, "floored bound brackets the root of P", c3),
        (4, "beta bound: exact form below linear form", c4),
        (5, "genus bound and canonical-degree bound agree at (a, eps) = (3, 1)", c5),
        (6, "B(eps) matches numeric maximization", c6),
        (7, "first Miyaoka inequality matches alpha sampling", c7),
        (8, "(2; 1^10) sits on the region boundary", c8),
        (9, "scanned rows match the closed-form root", c9),
        (10, "228/721 certified below 1/sqrt(10)", c10),
        (11, "hyperbola approaches its asymptote", c11),
        (12, "Roe comparison gap tends to (beta0-2)/beta0", c12),
        (13, "Vojta lower bounds", c13),
        (14, "double-cover genus of a line", c14),
        (15, "scan CSV independent of worker count", c15),
    ];
    let mut unexpected = 0;
    for (id, name, check) in criteria {
        let start = Instant::now();
        let o = check();
        let tag = match (o.pass, KNOWN_UNATTAINABLE.contains(&id)) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known unattainable)",
            (false, false) => {
                unexpected += 1;
                "FAIL"
            }
        };
        println!("{tag} [{id:>2}] {name}: {} [{:?}]", o.detail, start.elapsed());
    }
    let total = suite.elapsed();
    let pass16 = total < C16_MAX_RUNTIME;
    if !pass16 {
        unexpected += 1;
    }
    println!(
        "{} [16] acceptance suite wall-clock under {C16_MAX_RUNTIME:?}: {total:?}",
        if pass16 { "PASS" } else { "FAIL" }
    );
    if unexpected > 0 {
        eprintln!("{unexpected} criteria failed");
        std::process::exit(1);
    }
}
