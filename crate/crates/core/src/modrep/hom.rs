use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ModMap, Rep};
use crate::error::{Error, Result};
use crate::mat::Mat;

/// Random trials used by [`is_isomorphic`] when exhaustive search is too large.
pub const ISO_TRIALS: usize = 64;
/// Exhaustive search is used while `p^dim Hom ≤ ISO_EXHAUSTIVE_LIMIT`.
pub const ISO_EXHAUSTIVE_LIMIT: u64 = 1 << 16;

/// Basis of `Hom_A(M, N)`: the null space of the commutation equations
/// `X_j A^M_α = A^N_α X_i` for every arrow `α : i -> j`.
pub fn hom_basis(m: &Rep, n: &Rep) -> Result<Vec<ModMap>> {
    if m.algebra() != n.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    let a = m.algebra();
    let f = m.field();
    let nv = a.vertex_count();
    let mut offs = vec![0usize; nv + 1];
    for i in 0..nv {
        offs[i + 1] = offs[i] + n.dims()[i] * m.dims()[i];
    }
    let unknowns = offs[nv];
    if unknowns == 0 {
        return Ok(Vec::new());
    }
    let var = |i: usize, r: usize, c: usize| offs[i] + r * m.dims()[i] + c;
    let eq_count: usize = a.arrows().iter().map(|ar| n.dims()[ar.target] * m.dims()[ar.source]).sum();
    let mut sys = Mat::zeros(f, eq_count, unknowns);
    let mut row = 0;
    for (ai, ar) in a.arrows().iter().enumerate() {
        let (i, j) = (ar.source, ar.target);
        let am = m.action(ai);
        let an = n.action(ai);
        for r in 0..n.dims()[j] {
            for c in 0..m.dims()[i] {
                // (X_j A^M)[r,c]
                for k in 0..m.dims()[j] {
                    let v = am.get(k, c);
                    if v != 0 {
                        let idx = var(j, r, k);
                        sys.set(row, idx, f.add(sys.get(row, idx), v));
                    }
                }
                // -(A^N X_i)[r,c]
                for k in 0..n.dims()[i] {
                    let v = an.get(r, k);
                    if v != 0 {
                        let idx = var(i, k, c);
                        sys.set(row, idx, f.sub(sys.get(row, idx), v));
                    }
                }
                row += 1;
            }
        }
    }
    let ker = sys.kernel_basis();
    Ok((0..ker.cols())
        .map(|col| {
            let blocks = (0..nv)
                .map(|i| {
                    let data = (offs[i]..offs[i + 1]).map(|x| ker.get(x, col)).collect();
                    Mat::from_vec(f, n.dims()[i], m.dims()[i], data)
                })
                .collect();
            ModMap { source: m.clone(), target: n.clone(), blocks }
        })
        .collect())
}

pub fn hom_dim(m: &Rep, n: &Rep) -> Result<usize> {
    Ok(hom_basis(m, n)?.len())
}

/// Coordinates of `map` in `basis` (all with the same source and target).
pub fn map_coordinates(basis: &[ModMap], map: &ModMap) -> Option<Vec<u32>> {
    let f = map.source.field();
    let target = map.flatten();
    let mut cols = Mat::zeros(f, target.len(), basis.len());
    for (j, b) in basis.iter().enumerate() {
        for (r, x) in b.flatten().into_iter().enumerate() {
            cols.set(r, j, x);
        }
    }
    let x = cols.solve_right(&Mat::column(f, &target)).ok()??;
    Some(x.col(0))
}

fn combine(basis: &[ModMap], coeffs: &[u32]) -> ModMap {
    let mut out = ModMap::zero(&basis[0].source, &basis[0].target);
    for (b, &c) in basis.iter().zip(coeffs) {
        if c == 0 {
            continue;
        }
        for (o, x) in out.blocks.iter_mut().zip(&b.blocks) {
            o.add_scaled(x, c);
        }
    }
    out
}

fn blocks_invertible(map: &ModMap) -> bool {
    map.blocks.iter().all(|b| b.rank() == b.rows())
}

/// An isomorphism `M -> N` if one is found, checked before it is returned.
///
/// Dimension vectors are compared first. When `p^dim Hom` is at most
/// [`ISO_EXHAUSTIVE_LIMIT`] every combination of the Hom basis is tried (up
/// to scalars), which makes the answer exact; otherwise [`ISO_TRIALS`] random
/// combinations are tried.
pub fn find_isomorphism(m: &Rep, n: &Rep, seed: u64) -> Result<Option<ModMap>> {
    if m.algebra() != n.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    if m.dims() != n.dims() {
        return Ok(None);
    }
    if m.is_zero() {
        return Ok(Some(ModMap::zero(m, n)));
    }
    let basis = hom_basis(m, n)?;
    if basis.is_empty() {
        return Ok(None);
    }
    let f = m.field();
    let p = f.p() as u64;
    let h = basis.len();
    let exhaustive = (h as f64) * (p as f64).log2() <= (ISO_EXHAUSTIVE_LIMIT as f64).log2() + 1e-9;
    if exhaustive {
        // normalised coefficient vectors: leading nonzero entry equal to 1
        for lead in 0..h {
            let free = h - lead - 1;
            let count = p.pow(free as u32);
            for code in 0..count {
                let mut coeffs = vec![0u32; h];
                coeffs[lead] = 1;
                let mut c = code;
                for slot in coeffs.iter_mut().skip(lead + 1) {
                    *slot = (c % p) as u32;
                    c /= p;
                }
                let cand = combine(&basis, &coeffs);
                if blocks_invertible(&cand) {
                    return Ok(Some(cand));
                }
            }
        }
        return Ok(None);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ISO_TRIALS {
        let coeffs: Vec<u32> = (0..h).map(|_| rng.gen_range(0..f.p())).collect();
        let cand = combine(&basis, &coeffs);
        if blocks_invertible(&cand) {
            debug_assert!(cand.is_homomorphism());
            return Ok(Some(cand));
        }
    }
    Ok(None)
}

pub fn is_isomorphic(m: &Rep, n: &Rep, seed: u64) -> Result<bool> {
    Ok(find_isomorphism(m, n, seed)?.is_some())
}
