//! Acceptance suite: one test per exit criterion, each printing a
//! `[PASS]`/`[FAIL]` line. Run with `--nocapture` to see the lines.

use std::f64::consts::TAU;
use std::process::Command;
use std::time::{Duration, Instant};

use qpolar::{
    brute_force_oracle, build_annihilation, build_big_h, build_creation, build_fourier, build_g,
    build_g_inverse, build_h, fourier_conjugate, q_number, sqrt_brace_big_h, sweep, AlgebraConfig,
    CMatrix, CScalar, OperatorName, ORACLE_MAX_S,
};

const S_RANGE: std::ops::RangeInclusive<usize> = 2..=32;
const BASE_TOL: f64 = 1e-9;
const TIGHT: f64 = 1e-12;
const NILPOTENT_ZERO: f64 = 1e-12;
const SHARP_FLOOR: f64 = 1e-6;
const RUNTIME_LIMIT: Duration = Duration::from_secs(10);

fn report(id: u32, title: &str, failures: &[String]) {
    let tag = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("[{tag}] criterion {id}: {title}");
    for f in failures {
        println!("       {f}");
    }
    assert!(failures.is_empty(), "criterion {id} failed: {failures:#?}");
}

fn cfg(s: usize) -> AlgebraConfig {
    AlgebraConfig::new(s, 1, BASE_TOL).unwrap()
}

fn gap(a: &CMatrix, b: &CMatrix) -> f64 {
    a.max_abs_diff(b).unwrap()
}

#[test]
fn criterion_1_identity_suite() {
    let start = Instant::now();
    let reports = sweep(*S_RANGE.start(), *S_RANGE.end(), 1, BASE_TOL).unwrap();
    let elapsed = start.elapsed();
    let mut failures = Vec::new();
    assert_eq!(reports.len(), 31);
    for r in &reports {
        let bound = BASE_TOL * (r.config.s() + 1) as f64;
        if r.checks.len() != 14 {
            failures.push(format!("s={}: {} checks", r.config.s(), r.checks.len()));
        }
        for c in &r.checks {
            if !(c.pass && c.deviation <= bound) {
                failures.push(format!("s={} {}: {:e} > {:e}", r.config.s(), c.name, c.deviation, bound));
            }
        }
    }
    if elapsed >= RUNTIME_LIMIT {
        failures.push(format!("runtime {elapsed:?}"));
    }
    report(
        1,
        &format!("14-check catalog passes for s in 2..=32 at 1e-9*(s+1) ({elapsed:?})"),
        &failures,
    );
}

#[test]
fn criterion_2_nilpotency_sharpness() {
    let mut failures = Vec::new();
    for s in S_RANGE {
        let c = cfg(s);
        for (name, m) in [("a", build_annihilation(&c)), ("a^dag", build_creation(&c))] {
            let top = m.pow(s as u32 + 1).max_abs();
            let below = m.pow(s as u32).max_abs();
            if top > NILPOTENT_ZERO {
                failures.push(format!("s={s}: |{name}^(s+1)| = {top:e}"));
            }
            if below < SHARP_FLOOR {
                failures.push(format!("s={s}: |{name}^s| = {below:e} < {SHARP_FLOOR:e}"));
            }
        }
    }
    report(2, "a^(s+1) = 0 and |a^s| >= 1e-6 for s in 2..=32", &failures);
}

#[test]
fn criterion_3_fourier_polar_core() {
    let mut failures = Vec::new();
    for s in S_RANGE {
        let c = cfg(s);
        let f = build_fourier(&c);
        let h = build_big_h(&c);
        let via_f = fourier_conjugate(&build_g_inverse(&c), &c).unwrap();
        let d = gap(&h, &via_f);
        if d > TIGHT {
            failures.push(format!("s={s}: |H - F g^-1 F^dag| = {d:e}"));
        }
        if !f.is_unitary(TIGHT) {
            failures.push(format!("s={s}: F not unitary"));
        }
        if !h.is_unitary(TIGHT) {
            failures.push(format!("s={s}: H not unitary"));
        }
        if build_h(&c).is_unitary(TIGHT) {
            failures.push(format!("s={s}: h unitary"));
        }
    }
    report(3, "H = F g^-1 F^dag, F and H unitary, h not unitary", &failures);
}

#[test]
fn criterion_4_polar_decomposition() {
    let mut failures = Vec::new();
    for s in S_RANGE {
        let c = cfg(s);
        let bound = BASE_TOL * (s + 1) as f64;
        let a_t = fourier_conjugate(&build_annihilation(&c), &c).unwrap();
        let ad_t = fourier_conjugate(&build_creation(&c), &c).unwrap();
        let (g, g_inv) = (build_g(&c), build_g_inverse(&c));
        let (r, r1) = sqrt_brace_big_h(&c);
        let cases = [
            ("a~ = sqrt{H^dag+1} g^-1", gap(&a_t, &(&r1 * &g_inv))),
            ("a~ = g^-1 sqrt{H^dag}", gap(&a_t, &(&g_inv * &r))),
            ("a~^dag = sqrt{H^dag} g", gap(&ad_t, &(&r * &g))),
            ("a~^dag = g sqrt{H^dag+1}", gap(&ad_t, &(&g * &r1))),
        ];
        for (name, d) in cases {
            if d > bound {
                failures.push(format!("s={s} {name}: {d:e}"));
            }
        }
    }
    report(4, "four polar factorizations hold to 1e-9*(s+1)", &failures);
}

#[test]
fn criterion_5_oracle_equivalence() {
    let mut failures = Vec::new();
    for s in 2..=ORACLE_MAX_S {
        for r in brute_force_oracle(&cfg(s)).unwrap() {
            if !(r.pass && r.deviation <= TIGHT) {
                failures.push(format!("s={s} {}: {:e}", r.name, r.deviation));
            }
        }
    }
    report(5, "dyad-sum oracle matches closed forms to 1e-12 for s in 2..=8", &failures);
}

#[test]
fn criterion_6_scalar_layer() {
    let mut failures = Vec::new();
    for s in 2..=64usize {
        let order = s + 1;
        for k in 1..=order as u64 {
            let Ok(c) = AlgebraConfig::new(s, k, BASE_TOL) else {
                continue;
            };
            let q = CScalar::from_polar(1.0, TAU * k as f64 / order as f64);
            let qi = q.inv();
            for x in 0..=order as i32 {
                let quotient = (q.powi(x) - qi.powi(x)) / (q - qi);
                let d = (quotient - q_number(x as i64, &c)).norm();
                if d > TIGHT {
                    failures.push(format!("s={s} k={k} x={x}: {d:e}"));
                }
            }
            let top = q_number(order as i64, &c).abs();
            if top > TIGHT {
                failures.push(format!("s={s} k={k}: [s+1] = {top:e}"));
            }
        }
    }
    report(6, "sine-ratio q-numbers match complex quotient; [s+1] = 0", &failures);
}

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qpolar"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
    )
}

#[test]
fn criterion_7_cli_contract() {
    let mut failures = Vec::new();
    let expect = [
        (&["build", "--s", "2", "--op", "bigh"][..], 0),
        (&["build", "--s", "2", "--op", "n"][..], 0),
        (&["build", "--s", "1", "--op", "a"][..], 2),
        (&["build", "--s", "2", "--op", "nope"][..], 2),
        (&["build", "--s", "2", "--op", "a", "--out", "/nonexistent-dir/a.json"][..], 3),
        (&["verify", "--s", "5"][..], 0),
        (&["verify", "--s", "5", "--tol", "1e-30"][..], 1),
        (&["verify", "--s", "0"][..], 2),
        (&["sweep", "--s-min", "2", "--s-max", "32"][..], 0),
        (&["sweep", "--s-min", "10", "--s-max", "9"][..], 2),
        (&["spectrum", "--s", "2", "--op", "braceHdag"][..], 0),
        (&["spectrum", "--s", "2", "--op", "a"][..], 2),
        (&["phase-states", "--s", "2"][..], 0),
        (&["phase-states", "--s", "2", "--out", "/nonexistent-dir/p.json"][..], 3),
    ];
    for (args, want) in expect {
        let (got, _) = run(args);
        if got != want {
            failures.push(format!("{}: exit {got}, want {want}", args.join(" ")));
        }
    }

    let (_, text) = run(&["sweep", "--s-min", "2", "--s-max", "32"]);
    if !text.trim_end().ends_with("passed 31/31") {
        failures.push("sweep summary line missing".into());
    }

    for op in OperatorName::ALL {
        let (_, text) = run(&["build", "--s", "5", "--op", op.as_str()]);
        let m: CMatrix = serde_json::from_str(&text).unwrap();
        let again = serde_json::to_string(&m).unwrap();
        let back: CMatrix = serde_json::from_str(&again).unwrap();
        let exact = m
            .entries()
            .iter()
            .zip(back.entries())
            .all(|(x, y)| x.re.to_bits() == y.re.to_bits() && x.im.to_bits() == y.im.to_bits());
        if !exact || again != text.trim_end() {
            failures.push(format!("{op}: JSON round trip not bit-exact"));
        }
    }
    report(7, "CLI exit codes and bit-exact JSON round trip", &failures);
}
