//! Radicals, socles, projective covers, injective envelopes and (co)syzygies.

use super::standard::{k_dual, k_dual_map, map_from_projective_sum};
use super::{ModMap, Rep};
use crate::mat::Mat;

/// `rad M = MJ`, with its inclusion.
pub fn radical(m: &Rep) -> (Rep, ModMap) {
    m.submodule(&radical_basis(m))
}

fn radical_basis(m: &Rep) -> Vec<Mat> {
    let a = m.algebra();
    let f = m.field();
    (0..a.vertex_count())
        .map(|v| {
            let mut span = Mat::zeros(f, m.dims()[v], 0);
            for (ai, ar) in a.arrows().iter().enumerate() {
                if ar.target == v {
                    span = span.hstack(m.action(ai));
                }
            }
            span.column_space()
        })
        .collect()
}

pub fn top(m: &Rep) -> Rep {
    m.quotient(&radical_basis(m)).0
}

/// Largest semisimple submodule: vectors killed by every arrow.
pub fn socle(m: &Rep) -> (Rep, ModMap) {
    let a = m.algebra();
    let f = m.field();
    let basis: Vec<Mat> = (0..a.vertex_count())
        .map(|v| {
            let mut stacked = Mat::zeros(f, 0, m.dims()[v]);
            for (ai, ar) in a.arrows().iter().enumerate() {
                if ar.source == v {
                    stacked = stacked.vstack(m.action(ai));
                }
            }
            stacked.kernel_basis()
        })
        .collect();
    m.submodule(&basis)
}

/// A minimal projective cover `⊕_s P_{tops[s]} -> M`.
#[derive(Debug, Clone)]
pub struct ProjectiveCover {
    pub tops: Vec<usize>,
    /// Images of the summand generators, `generators[s] ∈ M e_{tops[s]}`.
    pub generators: Vec<Vec<u32>>,
    pub projective: Rep,
    pub map: ModMap,
}

pub fn projective_cover(m: &Rep) -> ProjectiveCover {
    let rad = radical_basis(m);
    let mut tops = Vec::new();
    let mut generators = Vec::new();
    for (v, r) in rad.iter().enumerate() {
        let comp = r.complement_basis();
        for j in 0..comp.cols() {
            tops.push(v);
            generators.push(comp.col(j));
        }
    }
    let map = map_from_projective_sum(&tops, &generators, m);
    ProjectiveCover { tops, generators, projective: map.source.clone(), map }
}

/// `Ω^n(M)`: kernel of the minimal projective cover, iterated. Projective
/// summands of the result are kept.
pub fn syzygy(m: &Rep, n: usize) -> Rep {
    let mut cur = m.clone();
    for _ in 0..n {
        if cur.is_zero() {
            break;
        }
        cur = projective_cover(&cur).map.kernel().0;
    }
    cur
}

/// Injective envelope `M -> I(M) = ⊕ I_i^{dim soc(M)_i}`, obtained as the
/// dual of the projective cover of `D(M)` over the opposite algebra.
pub fn injective_envelope(m: &Rep) -> (Rep, ModMap) {
    let cover = projective_cover(&k_dual(m));
    let iota = k_dual_map(&cover.map);
    debug_assert!(iota.source == *m);
    (iota.target.clone(), iota)
}

/// `Ω^{-n}(M)`: cokernel of the injective envelope, iterated.
pub fn cosyzygy(m: &Rep, n: usize) -> Rep {
    let mut cur = m.clone();
    for _ in 0..n {
        if cur.is_zero() {
            break;
        }
        cur = injective_envelope(&cur).1.cokernel().0;
    }
    cur
}

/// `M` is projective iff it has the dimension of its projective cover.
pub fn is_projective(m: &Rep) -> bool {
    let a = m.algebra();
    let t = top(m);
    let cover_dim: usize = (0..a.vertex_count()).map(|v| t.dims()[v] * a.projective_dim(v)).sum();
    cover_dim == m.total_dim()
}

/// `M` is injective iff it has the dimension of its injective envelope.
pub fn is_injective(m: &Rep) -> bool {
    is_projective(&k_dual(m))
}
