//! End-to-end acceptance run: every criterion prints one PASS/FAIL line, and
//! the process exits nonzero if any criterion fails. Runs without the libtest
//! harness so the lines are never captured.
//!
//! `cargo test --release -p taulab --test acceptance`

use std::time::{Duration, Instant};

use serde_json::{json, Value};
use taulab::corpus::corpus_algebras;
use taulab::homfun::{
    ar_translate, describe, indecomposables, is_gorenstein_projective, is_selfinjective, is_tau_perfect,
    iwanaga_gorenstein_degree, join_labels, nakayama_nu, Settings,
};
use taulab::modrep::{is_isomorphic, is_projective, simple_module, syzygy};
use taulab::schema::BuildOptions;
use taulab::verify::{run_suite_on_all, Suite, VerifyResult};
use taulab::{Algebra, Fp, KupischSeries, Orientation};

const CORPUS_VERTICES: usize = 4;
const CORPUS_LENGTH: usize = 5;
const EXAMPLE_LIMIT: Duration = Duration::from_secs(1);
const MAIN_SUITE_LIMIT: Duration = Duration::from_secs(60);

struct Outcome {
    passed: bool,
    detail: String,
    data: Value,
}

fn nakayama(series: &[usize], o: Orientation) -> Algebra {
    KupischSeries::new(series.to_vec(), o).unwrap().algebra(Fp::default()).unwrap()
}

fn label(m: &taulab::modrep::Rep) -> String {
    join_labels(&describe(m, 0).unwrap())
}

fn example_tau_of_simple() -> Outcome {
    let start = Instant::now();
    let a = nakayama(&[2, 2, 2, 1], Orientation::Linear);
    let s0 = simple_module(&a, 0).unwrap();
    let s1 = simple_module(&a, 1).unwrap();
    let tau = ar_translate(&s0);
    let nu_omega = nakayama_nu(&syzygy(&s0, 2));
    let omega_nu = syzygy(&nakayama_nu(&s0), 2);
    let ok = is_isomorphic(&tau, &s1, 0).unwrap() && is_isomorphic(&nu_omega, &s1, 0).unwrap() && omega_nu.is_zero();
    let elapsed = start.elapsed();
    Outcome {
        passed: ok && elapsed < EXAMPLE_LIMIT,
        detail: format!(
            "τS0 = {}, νΩ²S0 = {}, Ω²νS0 = {}, {elapsed:.2?}",
            label(&tau),
            label(&nu_omega),
            label(&omega_nu)
        ),
        data: json!([label(&tau), label(&nu_omega), label(&omega_nu)]),
    }
}

fn example_gorenstein_projectives() -> Outcome {
    let start = Instant::now();
    let a = nakayama(&[3, 3, 4], Orientation::Cyclic);
    let degree = iwanaga_gorenstein_degree(&a, 32, 0).unwrap();
    let mut gp = Vec::new();
    let mut perfect = Vec::new();
    for x in indecomposables(&a, 0).unwrap() {
        if is_projective(&x.module) {
            continue;
        }
        if is_gorenstein_projective(&x.module, 32, 0).unwrap() {
            gp.push(x.label.clone());
        }
        if is_tau_perfect(&x.module, 0).unwrap() {
            perfect.push(x.label.clone());
        }
    }
    let elapsed = start.elapsed();
    let ok = degree == Some(2) && gp == ["PJ(0,1)", "PJ(1,2)"] && gp == perfect;
    Outcome {
        passed: ok && elapsed < EXAMPLE_LIMIT,
        detail: format!("IG degree {degree:?}, GP {gp:?}, τ-perfect {perfect:?}, {elapsed:.2?}"),
        data: json!({ "degree": degree, "gp": gp, "tau_perfect": perfect }),
    }
}

fn suite(algebras: &[Algebra], s: Suite) -> (Vec<VerifyResult>, Outcome) {
    let start = Instant::now();
    let results = run_suite_on_all(s, algebras, Settings::default()).expect("suite ran within bounds");
    let elapsed = start.elapsed();
    let checked: usize = results.iter().map(|r| r.checked).sum();
    let failures: usize = results.iter().map(|r| r.failures.len()).sum();
    let outcome = Outcome {
        passed: failures == 0 && checked > 0,
        detail: format!("{s}: {} algebras, {checked} checks, {failures} failures, {elapsed:.2?}", results.len()),
        data: json!(results),
    };
    (results, outcome)
}

fn timed_suite(algebras: &[Algebra], s: Suite, limit: Duration) -> Outcome {
    let start = Instant::now();
    let (_, mut o) = suite(algebras, s);
    if start.elapsed() >= limit {
        o.passed = false;
        o.detail.push_str(&format!(" (limit {limit:?})"));
    }
    o
}

fn merge(parts: Vec<Outcome>) -> Outcome {
    Outcome {
        passed: parts.iter().all(|o| o.passed),
        detail: parts.iter().map(|o| o.detail.as_str()).collect::<Vec<_>>().join("; "),
        data: Value::Array(parts.into_iter().map(|o| o.data).collect()),
    }
}

fn selfinjective_criterion(algebras: &[Algebra]) -> Outcome {
    let (_, mut o) = suite(algebras, Suite::SelfinjectiveCriterion);
    let mut mismatched = Vec::new();
    let mut found = Vec::new();
    for a in algebras {
        let Some(k) = a.kupisch() else { continue };
        let c = k.lengths();
        let constant_cyclic = k.is_cyclic() && c.iter().all(|&x| x == c[0]);
        let semisimple_point = !k.is_cyclic() && c == [1];
        if is_selfinjective(a) {
            found.push(a.label().to_string());
        }
        if is_selfinjective(a) != (constant_cyclic || semisimple_point) {
            mismatched.push(a.label().to_string());
        }
    }
    o.passed &= mismatched.is_empty();
    o.detail.push_str(&format!("; selfinjective Nakayama algebras {found:?}, mismatches {mismatched:?}"));
    o.data = json!({ "suite": o.data, "selfinjective": found });
    o
}

fn domdim_criterion(algebras: &[Algebra]) -> Outcome {
    let (results, mut o) = suite(algebras, Suite::DomdimReflexive);
    let witness = results.iter().find(|r| r.algebra == "L[2,2,2,1]").map_or(0, |r| r.checked);
    o.passed &= witness > 0;
    o.detail.push_str(&format!("; L[2,2,2,1] contributes {witness} checks"));
    o
}

fn run_all(algebras: &[Algebra]) -> Vec<(&'static str, Outcome)> {
    vec![
        ("1 tau of a simple module", example_tau_of_simple()),
        ("2 Gorenstein projectives of C[3,3,4]", example_gorenstein_projectives()),
        ("3 Ext vanishing, Tr reflexive, tau-perfect", timed_suite(algebras, Suite::MainTheorem, MAIN_SUITE_LIMIT)),
        ("4 dual statement over the opposite algebra", suite(algebras, Suite::DualTheorem).1),
        ("5 reflexivity methods agree", suite(algebras, Suite::ReflexiveEquivalences).1),
        (
            "6 TrTr, dual as syzygy of transpose, reflexive via Omega2 Tr",
            merge(vec![suite(algebras, Suite::Trtr).1, suite(algebras, Suite::LemmaDualSyzygy).1]),
        ),
        ("7 tau bijection", suite(algebras, Suite::PerTauBijection).1),
        ("8 selfinjectivity criterion", selfinjective_criterion(algebras)),
        ("9 dominant dimension and reflexivity", domdim_criterion(algebras)),
        ("10 Nakayama tau closed form", suite(algebras, Suite::NakayamaOracle).1),
    ]
}

fn main() {
    let algebras = corpus_algebras(CORPUS_VERTICES, CORPUS_LENGTH, BuildOptions::default()).unwrap();
    println!("corpus: {} algebras", algebras.len());
    let first = run_all(&algebras);
    let second = run_all(&algebras);
    let bytes = |run: &[(&str, Outcome)]| {
        serde_json::to_vec(
            &run.iter().map(|(name, o)| json!({ "criterion": name, "data": o.data })).collect::<Vec<_>>(),
        )
        .unwrap()
    };
    let (a, b) = (bytes(&first), bytes(&second));
    let mut all = true;
    for (name, o) in &first {
        all &= o.passed;
        println!("{} criterion {name}: {}", if o.passed { "PASS" } else { "FAIL" }, o.detail);
    }
    let same = a == b;
    all &= same;
    println!(
        "{} criterion 11 determinism: {} bytes of JSON, identical across runs: {same}",
        if same { "PASS" } else { "FAIL" },
        a.len()
    );
    if !all {
        eprintln!("at least one acceptance criterion failed");
        std::process::exit(1);
    }
}
