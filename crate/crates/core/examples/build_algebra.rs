//! Builds algebras three ways: from a Kupisch series, from a quiver with
//! relations, and from a JSON file, then prints their bases.

use taulab::algebra::{build_algebra, Quiver, QuiverArrow, Relation};
use taulab::schema::{AlgebraFile, BuildOptions};
use taulab::{AlgebraPresentation, Fp, KupischSeries, Orientation};

fn main() -> taulab::Result<()> {
    let field = Fp::new(1009)?;

    let nakayama = KupischSeries::new(vec![3, 3, 4], Orientation::Cyclic)?.algebra(field)?;
    println!("{}: dim {}, Loewy length {}", nakayama.label(), nakayama.dim(), nakayama.loewy_length());

    // The commutative square 0 -> 1 -> 3, 0 -> 2 -> 3 with ab = cd.
    let arrow = |name: &str, source, target| QuiverArrow { name: name.into(), source, target };
    let quiver = Quiver {
        vertex_count: 4,
        arrows: vec![arrow("a", 0, 1), arrow("b", 1, 3), arrow("c", 0, 2), arrow("d", 2, 3)],
    };
    let path = |p: &[&str]| p.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let relation = Relation { terms: vec![(1, path(&["a", "b"])), (-1, path(&["c", "d"]))] };
    let square = build_algebra(&AlgebraPresentation::new(field, "square", quiver, vec![relation]))?;
    println!("{}: dim {}", square.label(), square.dim());
    for i in 0..square.vertex_count() {
        println!("  e{i}A has dimension {}", square.projective_dim(i));
    }

    let file = AlgebraFile::parse(r#"{"field": 7, "kupisch": {"series": [2, 2, 2, 1]}}"#)?;
    let a = file.build(BuildOptions::default())?;
    println!("{} over F_{}: dim {}", a.label(), a.field().p(), a.dim());
    println!("{}", file.to_json());
    Ok(())
}
