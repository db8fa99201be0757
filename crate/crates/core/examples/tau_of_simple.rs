//! The Auslander-Reiten translate of a simple module, and why `τ ≅ νΩ²` is
//! a property of the module rather than an identity of functors.

use taulab::homfun::{ar_translate, describe, is_tau_perfect, join_labels, nakayama_nu};
use taulab::modrep::{simple_module, syzygy, Rep};
use taulab::{Fp, KupischSeries, Orientation};

fn show(m: &Rep) -> String {
    join_labels(&describe(m, 0).expect("labels"))
}

fn main() -> taulab::Result<()> {
    let a = KupischSeries::new(vec![2, 2, 2, 1], Orientation::Linear)?.algebra(Fp::default())?;
    let s0 = simple_module(&a, 0)?;
    println!("τ S(0)   = {}", show(&ar_translate(&s0)));
    println!("ν Ω² S(0) = {}", show(&nakayama_nu(&syzygy(&s0, 2))));
    println!("Ω² ν S(0) = {}", show(&syzygy(&nakayama_nu(&s0), 2)));
    for i in 0..3 {
        let s = simple_module(&a, i)?;
        println!("S({i}) τ-perfect: {}", is_tau_perfect(&s, 0)?);
    }
    Ok(())
}
