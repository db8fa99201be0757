//! Prints the classification table of a Kupisch series given on the command
//! line, e.g. `cargo run --example classify -- 3 3 4 cyclic`.

use taulab::cli::class_table;
use taulab::homfun::{classify, indecomposables, Settings};
use taulab::{Fp, KupischSeries, Orientation};

fn main() -> taulab::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let cyclic = args.iter().any(|a| a == "cyclic");
    let mut series: Vec<usize> = args.iter().filter_map(|a| a.parse().ok()).collect();
    if series.is_empty() {
        series = vec![2, 2, 2, 1];
    }
    let o = if cyclic { Orientation::Cyclic } else { Orientation::Linear };
    let a = KupischSeries::new(series, o)?.algebra(Fp::default())?;
    println!("{}", a.label());
    print!("{}", class_table(&classify(&indecomposables(&a, 0)?, Settings::default())?));
    Ok(())
}
