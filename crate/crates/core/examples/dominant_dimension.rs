//! Dominant dimensions, the minimal faithful projective-injective module `fA`,
//! and the Hom-preserving restriction to `fAf`.

use taulab::homfun::{
    dominant_dimension, dominant_dimension_algebra, indecomposables, is_reflexive, minimal_faithful_proj_inj, Corner,
    ReflexiveMethod,
};
use taulab::modrep::hom_dim;
use taulab::{Fp, KupischSeries, Orientation};

fn main() -> taulab::Result<()> {
    let a = KupischSeries::new(vec![2, 2, 2, 1], Orientation::Linear)?.algebra(Fp::default())?;
    println!("domdim {} = {}", a.label(), dominant_dimension_algebra(&a, 32, 0)?);
    let f = minimal_faithful_proj_inj(&a)?;
    println!("f = {f:?}");
    let corner = Corner::new(&a, &f)?;
    let mut reflexive = Vec::new();
    for x in indecomposables(&a, 0)? {
        let r = is_reflexive(&x.module, ReflexiveMethod::Evaluation, 0)?;
        println!("{:8} domdim {:4} reflexive {r}", x.label, dominant_dimension(&x.module, 32, 0)?.to_string());
        if r {
            reflexive.push(x);
        }
    }
    for m in &reflexive {
        for n in &reflexive {
            let over_a = hom_dim(&m.module, &n.module)?;
            if over_a > 0 && m.label != n.label {
                let over_f = hom_dim(&corner.restrict(&m.module)?, &corner.restrict(&n.module)?)?;
                println!("Hom({}, {}) = {over_a} over A, {over_f} over fAf", m.label, n.label);
            }
        }
    }
    Ok(())
}
