//! The transpose, the dualities `D` and `(-)*`, the Nakayama functors, the
//! Auslander-Reiten translates and the evaluation map `M -> M**`.

use crate::mat::Mat;
use crate::modrep::{
    hom_basis, k_dual, map_coordinates, map_from_projective_sum, projective_cover, projective_module, projective_sum,
    ModMap, Rep,
};

/// A minimal projective presentation `P_1 -> P_0 -> M -> 0`.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub tops0: Vec<usize>,
    pub tops1: Vec<usize>,
    /// `x[t][s]`: the `t`-th component of the image of the `s`-th generator
    /// of `P_1`, in coordinates of `e_{tops0[t]} A e_{tops1[s]}`.
    pub x: Vec<Vec<Vec<u32>>>,
}

pub fn minimal_presentation(m: &Rep) -> Presentation {
    let a = m.algebra();
    let cover0 = projective_cover(m);
    let (k, incl) = cover0.map.kernel();
    let cover1 = projective_cover(&k);
    let mut x = vec![Vec::with_capacity(cover1.tops.len()); cover0.tops.len()];
    for (s, &v) in cover1.tops.iter().enumerate() {
        let y = incl.blocks[v].mul_vec(&cover1.generators[s]);
        let mut off = 0;
        for (t, &u) in cover0.tops.iter().enumerate() {
            let len = a.between(u, v).len();
            x[t].push(y[off..off + len].to_vec());
            off += len;
        }
    }
    Presentation { tops0: cover0.tops, tops1: cover1.tops, x }
}

/// `Tr M = coker(P_0* -> P_1*)`, a module over the opposite algebra.
///
/// With `(e_i A)* = A e_i`, read as the projective `e_i A^op`, the map sends
/// the generator of summand `t` to `(x[t][s])_s`, the same coordinates
/// because `e_u A e_v` and `e_v A^op e_u` share their basis.
pub fn transpose(m: &Rep) -> Rep {
    let op = m.algebra().opposite();
    let pres = minimal_presentation(m);
    let target = projective_sum(&op, &pres.tops1).expect("vertices in range");
    let images: Vec<Vec<u32>> = pres.x.iter().map(|row| row.concat()).collect();
    let d1_star = map_from_projective_sum(&pres.tops0, &images, &target);
    d1_star.cokernel().0
}

/// `M* = Hom_A(M, A)` together with the bases it is expressed in.
#[derive(Debug, Clone)]
pub struct DualModule {
    pub module: Rep,
    /// `bases[v]`: basis of `Hom_A(M, e_v A)`, the vertex-`v` component of `M*`.
    pub bases: Vec<Vec<ModMap>>,
    pub projectives: Vec<Rep>,
}

/// Left multiplication by the basis element `b ∈ e_s A e_t`, as a map `P_t -> P_s`.
fn left_multiplication(p_s: &Rep, s: usize, t: usize, b: usize) -> ModMap {
    let a = p_s.algebra();
    let mut img = vec![0u32; a.between(s, t).len()];
    img[a.between(s, t).iter().position(|&x| x == b).expect("b lies in e_s A e_t")] = 1;
    map_from_projective_sum(&[t], &[img], p_s)
}

pub fn a_dual_with_basis(m: &Rep) -> DualModule {
    let a = m.algebra();
    let op = a.opposite();
    let f = a.field();
    let n = a.vertex_count();
    let projectives: Vec<Rep> = (0..n).map(|v| projective_module(a, v).expect("vertex in range")).collect();
    let bases: Vec<Vec<ModMap>> = projectives.iter().map(|p| hom_basis(m, p).expect("same algebra")).collect();
    let dims: Vec<usize> = bases.iter().map(Vec::len).collect();
    // arrow α : i -> j of A acts on M* as α^op : j -> i, φ ↦ α·φ
    let action = a
        .arrows()
        .iter()
        .map(|ar| {
            let (i, j) = (ar.source, ar.target);
            let mut mat = Mat::zeros(f, dims[i], dims[j]);
            if dims[i] == 0 || dims[j] == 0 {
                return mat;
            }
            let left = left_multiplication(&projectives[i], i, j, ar.basis);
            for (c, phi) in bases[j].iter().enumerate() {
                let composed = left.compose(phi);
                let coords = map_coordinates(&bases[i], &composed).expect("α·φ lies in Hom(M, e_i A)");
                for (r, x) in coords.into_iter().enumerate() {
                    mat.set(r, c, x);
                }
            }
            mat
        })
        .collect();
    DualModule { module: Rep::from_parts(&op, dims, action), bases, projectives }
}

/// `M* = Hom_A(M, A)` as a module over the opposite algebra.
pub fn a_dual(m: &Rep) -> Rep {
    a_dual_with_basis(m).module
}

/// `ν = D(-)*`.
pub fn nakayama_nu(m: &Rep) -> Rep {
    k_dual(&a_dual(m))
}

/// `ν⁻¹ = (-)* D`.
pub fn nakayama_nu_inv(m: &Rep) -> Rep {
    a_dual(&k_dual(m))
}

/// `τ = D Tr`.
pub fn ar_translate(m: &Rep) -> Rep {
    k_dual(&transpose(m))
}

/// `τ⁻¹ = Tr D`.
pub fn ar_translate_inv(m: &Rep) -> Rep {
    transpose(&k_dual(m))
}

/// The evaluation map `ev_M : M -> M**`, `m ↦ (φ ↦ φ(m))`.
pub fn evaluation_map(m: &Rep) -> ModMap {
    let a = m.algebra();
    let f = a.field();
    let first = a_dual_with_basis(m);
    let second = a_dual_with_basis(&first.module);
    let mstar = &first.module;
    let blocks = (0..a.vertex_count())
        .map(|v| {
            let mut out = Mat::zeros(f, second.module.dims()[v], m.dims()[v]);
            if out.rows() == 0 || out.cols() == 0 {
                return out;
            }
            let pv = &second.projectives[v];
            for c in 0..m.dims()[v] {
                // ψ_m : M* -> e_v A^op; its block at i lists φ(m) for φ in bases[i]
                let psi_blocks = (0..a.vertex_count())
                    .map(|i| {
                        let mut blk = Mat::zeros(f, pv.dims()[i], mstar.dims()[i]);
                        for (k, phi) in first.bases[i].iter().enumerate() {
                            for r in 0..blk.rows() {
                                blk.set(r, k, phi.blocks[v].get(r, c));
                            }
                        }
                        blk
                    })
                    .collect();
                let psi = ModMap { source: mstar.clone(), target: pv.clone(), blocks: psi_blocks };
                debug_assert!(psi.is_homomorphism());
                let coords = map_coordinates(&second.bases[v], &psi).expect("ψ_m is a homomorphism");
                for (r, x) in coords.into_iter().enumerate() {
                    out.set(r, c, x);
                }
            }
            out
        })
        .collect();
    ModMap { source: m.clone(), target: second.module, blocks }
}
