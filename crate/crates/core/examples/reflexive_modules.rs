//! Reflexive and torsionless modules, decided three independent ways.

use taulab::homfun::{
    a_dual, describe, evaluation_map, indecomposables, is_reflexive, is_torsionless, join_labels, ReflexiveMethod,
};
use taulab::{Fp, KupischSeries, Orientation};

fn main() -> taulab::Result<()> {
    let a = KupischSeries::new(vec![3, 3, 4], Orientation::Cyclic)?.algebra(Fp::default())?;
    for x in indecomposables(&a, 0)? {
        let verdicts =
            ReflexiveMethod::ALL.iter().map(|&m| is_reflexive(&x.module, m, 0)).collect::<taulab::Result<Vec<_>>>()?;
        let ev = evaluation_map(&x.module);
        println!(
            "{:8} X* = {:18} ev rank {}  torsionless {:5}  reflexive {:?}",
            x.label,
            join_labels(&describe(&a_dual(&x.module), 0)?),
            ev.rank(),
            is_torsionless(&x.module),
            verdicts
        );
    }
    Ok(())
}
