use super::expr::{module_json, parse_module};
use super::*;
use crate::algebra::{KupischSeries, Orientation};
use crate::field::Fp;

fn nak(lengths: &[usize], o: Orientation) -> Algebra {
    KupischSeries::new(lengths.to_vec(), o).unwrap().algebra(Fp::default()).unwrap()
}

fn a2221() -> Algebra {
    nak(&[2, 2, 2, 1], Orientation::Linear)
}

fn iso(m: &Rep, n: &Rep) -> bool {
    is_isomorphic(m, n, 0).unwrap()
}

#[test]
fn projectives_and_injectives() {
    let a = a2221();
    for i in 0..4 {
        let p = projective_module(&a, i).unwrap();
        assert!(p.satisfies_relations());
        assert!(is_projective(&p));
        assert_eq!(top(&p).dims(), simple_module(&a, i).unwrap().dims());
    }
    assert_eq!(projective_module(&a, 1).unwrap().dims(), &[0, 1, 1, 0]);
    // I_3 ≅ P_2, I_0 = S_0
    assert!(iso(&injective_module(&a, 3).unwrap(), &projective_module(&a, 2).unwrap()));
    assert!(iso(&injective_module(&a, 0).unwrap(), &simple_module(&a, 0).unwrap()));
    assert!(!is_projective(&injective_module(&a, 0).unwrap()));
    assert!(is_injective(&projective_module(&a, 0).unwrap()));
    assert!(!is_injective(&projective_module(&a, 3).unwrap()));
    assert_eq!(simple_module(&a, 4).unwrap_err(), Error::InvalidVertex(4));
}

#[test]
fn radical_top_socle() {
    let a = a2221();
    let p0 = projective_module(&a, 0).unwrap();
    let s1 = simple_module(&a, 1).unwrap();
    assert!(iso(&radical(&p0).0, &s1));
    assert!(iso(&socle(&p0).0, &s1));
    assert!(iso(&top(&p0), &simple_module(&a, 0).unwrap()));
}

#[test]
fn syzygies_and_cosyzygies() {
    let a = a2221();
    let s = |i| simple_module(&a, i).unwrap();
    assert!(iso(&syzygy(&s(0), 1), &s(1)));
    assert!(iso(&syzygy(&s(0), 2), &s(2)));
    assert!(syzygy(&s(2), 2).is_zero());
    assert!(iso(&cosyzygy(&s(3), 1), &s(2)));
    let cover = projective_cover(&s(0).direct_sum(&s(1)).unwrap());
    assert_eq!(cover.tops, vec![0, 1]);
    assert!(cover.map.is_surjective());
    let (env, iota) = injective_envelope(&s(1));
    assert!(iota.is_injective() && iota.is_homomorphism());
    assert!(iso(&env, &injective_module(&a, 1).unwrap()));
}

#[test]
fn duality_round_trips() {
    let a = a2221();
    let m = parse_module(&a, "P(0)+S(2)").unwrap();
    assert_eq!(k_dual(&k_dual(&m)), m);
    let dual = k_dual(&projective_module(&a.opposite(), 1).unwrap());
    assert_eq!(dual.dims(), &[1, 1, 0, 0]);
}

#[test]
fn hom_dimensions() {
    let a = a2221();
    let all = nakayama_indecomposables(&a).unwrap();
    assert_eq!(all.len(), 7);
    for x in &all {
        for i in 0..4 {
            let p = projective_module(&a, i).unwrap();
            assert_eq!(hom_dim(&p, &x.module).unwrap(), x.module.dims()[i]);
        }
    }
    let p0 = projective_module(&a, 0).unwrap();
    let p1 = projective_module(&a, 1).unwrap();
    assert_eq!(hom_dim(&p1, &p0).unwrap(), 1);
    assert_eq!(hom_dim(&p0, &p1).unwrap(), 0);
}

#[test]
fn decomposition() {
    let a = a2221();
    let m = parse_module(&a, "P(0)+S(1)").unwrap();
    let parts = decompose(&m, 3).unwrap();
    assert_eq!(parts.len(), 2);
    assert_eq!(nakayama_label(&m, 1).unwrap(), vec!["PJ(0,2)", "PJ(1,1)"]);
    assert_eq!(nakayama_label(&regular_module(&a), 0).unwrap(), vec!["PJ(0,2)", "PJ(1,2)", "PJ(2,2)", "PJ(3,1)"]);
    assert!(strip_projectives(&m, 0).unwrap().dims() == simple_module(&a, 1).unwrap().dims());
    assert!(nakayama_label(&Rep::zero(&a), 0).unwrap().is_empty());

    // isotypic piece S_1 ⊕ S_1 ⊕ S_1 needs the eigenvalue shift
    let m = parse_module(&a, "S(1)+S(1)+S(1)").unwrap();
    assert_eq!(decompose(&m, 0).unwrap().len(), 3);

    let path = crate::algebra::build_algebra(&crate::algebra::AlgebraPresentation::new(
        Fp::default(),
        "A2",
        crate::algebra::Quiver {
            vertex_count: 2,
            arrows: vec![crate::algebra::QuiverArrow { name: "a".into(), source: 0, target: 1 }],
        },
        vec![],
    ))
    .unwrap();
    assert!(strip_projectives(&regular_module(&path), 0).unwrap().is_zero());
}

#[test]
fn expressions() {
    let a = a2221();
    assert_eq!(parse_module(&a, "A").unwrap().total_dim(), 7);
    assert_eq!(parse_module(&a, "D(A)").unwrap().total_dim(), 7);
    assert!(parse_module(&a, "0").unwrap().is_zero());
    assert!(iso(&parse_module(&a, "PJ(1,1)").unwrap(), &simple_module(&a, 1).unwrap()));
    assert_eq!(parse_module(&a, "S(0) ⊕ I(2)").unwrap().dims(), &[1, 1, 1, 0]);
    let explicit = parse_module(&a, r#"{"dims":[1,1,0,0],"arrows":{"a0":[[1]]}}"#).unwrap();
    assert!(iso(&explicit, &projective_module(&a, 0).unwrap()));
    assert!(parse_module(&a, "Q(1)").is_err());
    assert!(parse_module(&a, "PJ(3,2)").is_err());
    assert!(parse_module(&a, r#"{"dims":[1,1,1,0],"arrows":{"a0":[[1]],"a1":[[1]]}}"#).is_err());
    for text in ["P(1) + S(3)", "I(2)", "0"] {
        let m = parse_module(&a, text).unwrap();
        let back = parse_module(&a, &module_json(&m).to_string()).unwrap();
        assert_eq!(back.dims(), m.dims());
        assert_eq!(back.actions(), m.actions());
    }
}

#[test]
fn isomorphism_agrees_with_hom_fingerprint() {
    let a = nak(&[3, 3, 4], Orientation::Cyclic);
    let all = nakayama_indecomposables(&a).unwrap();
    let fingerprint = |m: &Rep| -> Vec<usize> { all.iter().map(|x| hom_dim(m, &x.module).unwrap()).collect() };
    for x in &all {
        for y in &all {
            assert_eq!(iso(&x.module, &y.module), fingerprint(&x.module) == fingerprint(&y.module));
        }
    }
}
