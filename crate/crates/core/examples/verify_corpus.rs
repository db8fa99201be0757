//! Runs every verification suite over the desk-scale corpus and prints one
//! line per suite.
//!
//! `cargo run --release --example verify_corpus -- 4 5`

use std::time::Instant;

use taulab::corpus::corpus_algebras;
use taulab::homfun::Settings;
use taulab::schema::BuildOptions;
use taulab::verify::{run_suite_on_all, Suite};

fn main() -> taulab::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let (n, c) = (args.first().copied().unwrap_or(3), args.get(1).copied().unwrap_or(4));
    let algebras = corpus_algebras(n, c, BuildOptions::default())?;
    println!("{} algebras (n <= {n}, c <= {c})", algebras.len());
    for suite in Suite::ALL {
        let start = Instant::now();
        let results = run_suite_on_all(suite, &algebras, Settings::default())?;
        let checked: usize = results.iter().map(|r| r.checked).sum();
        let failed: Vec<_> = results.iter().filter(|r| !r.passed()).collect();
        println!("{suite:<24} checked {checked:>6}  failing algebras {:>3}  {:.2?}", failed.len(), start.elapsed());
        for r in failed.iter().take(3) {
            println!("    {} {:?}", r.algebra, r.failures.first());
        }
    }
    Ok(())
}
