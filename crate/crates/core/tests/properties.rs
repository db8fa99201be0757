use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use taulab::homfun::{indecomposables, transpose};
use taulab::modrep::{decompose, hom_dim, is_isomorphic, strip_projectives, Rep};
use taulab::{Algebra, Fp, KupischSeries, Mat, Orientation};

fn field() -> Fp {
    Fp::new(1009).unwrap()
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
    prop::collection::vec(0u32..1009, rows * cols).prop_map(move |d| Mat::from_vec(field(), rows, cols, d))
}

fn any_matrix() -> impl Strategy<Value = Mat> {
    (1usize..7, 1usize..7).prop_flat_map(|(r, c)| matrix(r, c))
}

fn algebra() -> impl Strategy<Value = Algebra> {
    prop::sample::select(vec![
        (vec![2, 2, 2, 1], Orientation::Linear),
        (vec![3, 3, 4], Orientation::Cyclic),
        (vec![3, 2, 1], Orientation::Linear),
        (vec![2, 3], Orientation::Cyclic),
    ])
    .prop_map(|(c, o)| KupischSeries::new(c, o).unwrap().algebra(field()).unwrap())
}

/// An algebra, its indecomposables, and a multiset of them to sum.
fn sum_of_indecomposables() -> impl Strategy<Value = (Algebra, Vec<Rep>, Vec<usize>)> {
    algebra().prop_flat_map(|a| {
        let inds: Vec<Rep> = indecomposables(&a, 0).unwrap().into_iter().map(|x| x.module).collect();
        let n = inds.len();
        (Just(a), Just(inds), prop::collection::vec(0..n, 1..4))
    })
}

fn same_multiset(xs: &[Rep], ys: &[Rep]) -> bool {
    let mut used = vec![false; ys.len()];
    xs.len() == ys.len()
        && xs.iter().all(|x| {
            let hit = ys.iter().enumerate().position(|(j, y)| !used[j] && is_isomorphic(x, y, 0).unwrap());
            hit.map(|j| used[j] = true).is_some()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rref_is_idempotent(m in any_matrix()) {
        let once = m.rref().matrix;
        prop_assert_eq!(once.rref().matrix, once);
    }

    #[test]
    fn kernel_is_annihilated_and_has_complementary_rank(m in any_matrix()) {
        let k = m.kernel_basis();
        prop_assert!(m.mul(&k).is_zero());
        prop_assert_eq!(k.cols() + m.rank(), m.cols());
        prop_assert_eq!(k.rank(), k.cols());
    }

    #[test]
    fn solve_recovers_a_consistent_system(m in any_matrix(), seed in 0u64..1000) {
        let x = Mat::random(field(), m.cols(), 1, &mut ChaCha8Rng::seed_from_u64(seed));
        let b = m.mul(&x);
        let y = m.solve_right(&b).unwrap().expect("consistent");
        prop_assert_eq!(m.mul(&y), b);
    }

    #[test]
    fn decomposition_is_krull_schmidt((a, inds, picks) in sum_of_indecomposables(), seed in 0u64..1000) {
        let parts: Vec<Rep> = picks.iter().map(|&i| inds[i].clone()).collect();
        let m = Rep::direct_sum_all(&a, parts.iter()).unwrap();
        let pieces = decompose(&m, seed).unwrap();
        prop_assert!(same_multiset(&pieces, &parts));
        let other = decompose(&m, seed.wrapping_add(1)).unwrap();
        prop_assert!(same_multiset(&pieces, &other));
    }

    #[test]
    fn hom_is_additive((a, inds, picks) in sum_of_indecomposables()) {
        let parts: Vec<Rep> = picks.iter().map(|&i| inds[i].clone()).collect();
        let m = Rep::direct_sum_all(&a, parts.iter()).unwrap();
        for n in &inds {
            let total: usize = parts.iter().map(|p| hom_dim(p, n).unwrap()).sum();
            prop_assert_eq!(hom_dim(&m, n).unwrap(), total);
        }
    }

    #[test]
    fn transpose_is_an_involution_up_to_projectives((_a, inds, picks) in sum_of_indecomposables()) {
        let x = &inds[picks[0]];
        let stripped = strip_projectives(x, 0).unwrap();
        let back = strip_projectives(&transpose(&transpose(x)), 0).unwrap();
        prop_assert!(is_isomorphic(&back, &stripped, 0).unwrap());
    }
}
