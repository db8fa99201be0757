//! Over a 2-Iwanaga-Gorenstein algebra the Gorenstein projective modules are
//! exactly the τ-perfect ones.

use taulab::homfun::{indecomposables, is_gorenstein_projective, is_tau_perfect, self_injective_dimensions};
use taulab::modrep::is_projective;
use taulab::{Fp, KupischSeries, Orientation};

fn main() -> taulab::Result<()> {
    let a = KupischSeries::new(vec![3, 3, 4], Orientation::Cyclic)?.algebra(Fp::default())?;
    let d = self_injective_dimensions(&a, 32, 0)?;
    println!("{}: injdim right {:?}, left {:?}, degree {:?}", a.label(), d.right, d.left, d.gorenstein_degree());
    for x in indecomposables(&a, 0)? {
        if is_projective(&x.module) {
            continue;
        }
        let gp = is_gorenstein_projective(&x.module, 32, 0)?;
        let tp = is_tau_perfect(&x.module, 0)?;
        println!("{:8} gp {gp:5} tau-perfect {tp}", x.label);
    }
    Ok(())
}
