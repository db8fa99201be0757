//! Splits a direct sum back into indecomposables with random endomorphisms.

use taulab::homfun::{describe, join_labels};
use taulab::modrep::expr::parse_module;
use taulab::modrep::{decompose, is_indecomposable};
use taulab::schema::{AlgebraFile, BuildOptions};

const SQUARE: &str = include_str!("../data/commutative-square.json");

fn main() -> taulab::Result<()> {
    let a = AlgebraFile::parse(SQUARE)?.build(BuildOptions::default())?;
    let m = parse_module(&a, "P(0) + I(3) + S(1) + S(1)")?;
    println!("dims {:?}, indecomposable {}", m.dims(), is_indecomposable(&m, 0)?);
    for seed in [0, 1, 2] {
        let pieces: Vec<String> = decompose(&m, seed)?.iter().map(|p| format!("{:?}", p.dims())).collect();
        println!("seed {seed}: {}", pieces.join(" + "));
    }
    println!("as labels: {}", join_labels(&describe(&m, 0)?));
    Ok(())
}
