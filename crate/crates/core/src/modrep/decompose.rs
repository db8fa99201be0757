//! Krull-Schmidt decomposition by the Fitting lemma.
//!
//! For an endomorphism `ψ` of `M` and `N = dim M`, `M = ker ψ^N ⊕ im ψ^N`.
//! Random endomorphisms `φ` are shifted by their eigenvalues `λ ∈ F_p`
//! (roots of a Krylov polynomial of `φ`) so that isotypic pieces split too.
//! A piece on which no trial splits is reported as indecomposable.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{hom_basis, is_injective, is_projective, socle, top, Rep};
use crate::error::Result;
use crate::field::Fp;
use crate::mat::Mat;

/// Splitting attempts per piece before it is declared indecomposable.
pub const DECOMPOSE_TRIALS: usize = 128;

pub fn decompose(m: &Rep, seed: u64) -> Result<Vec<Rep>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut stack = vec![m.clone()];
    while let Some(piece) = stack.pop() {
        if piece.is_zero() {
            continue;
        }
        match split(&piece, &mut rng)? {
            Some((x, y)) => {
                stack.push(y);
                stack.push(x);
            }
            None => out.push(piece),
        }
    }
    Ok(out)
}

pub fn is_indecomposable(m: &Rep, seed: u64) -> Result<bool> {
    Ok(!m.is_zero() && decompose(m, seed)?.len() == 1)
}

/// Direct sum of the non-projective indecomposable summands.
pub fn strip_projectives(m: &Rep, seed: u64) -> Result<Rep> {
    let pieces = decompose(m, seed)?;
    Rep::direct_sum_all(m.algebra(), pieces.iter().filter(|p| !is_projective(p)))
}

/// Direct sum of the non-injective indecomposable summands.
pub fn strip_injectives(m: &Rep, seed: u64) -> Result<Rep> {
    let pieces = decompose(m, seed)?;
    Rep::direct_sum_all(m.algebra(), pieces.iter().filter(|p| !is_injective(p)))
}

fn split(m: &Rep, rng: &mut ChaCha8Rng) -> Result<Option<(Rep, Rep)>> {
    // a module with simple top or simple socle is indecomposable
    if top(m).total_dim() == 1 || socle(m).0.total_dim() == 1 {
        return Ok(None);
    }
    let end = hom_basis(m, m)?;
    if end.len() <= 1 {
        return Ok(None);
    }
    let f = m.field();
    let n = m.total_dim();
    for _ in 0..DECOMPOSE_TRIALS {
        let coeffs: Vec<u32> = (0..end.len()).map(|_| rng.gen_range(0..f.p())).collect();
        let mut phi: Vec<Mat> = m.dims().iter().map(|&d| Mat::zeros(f, d, d)).collect();
        for (b, &c) in end.iter().zip(&coeffs) {
            for (o, x) in phi.iter_mut().zip(&b.blocks) {
                o.add_scaled(x, c);
            }
        }
        let mut shifts = vec![0u32];
        let krylov = krylov_polynomial(f, &phi, rng);
        for r in roots(f, &krylov, rng) {
            if r != 0 {
                shifts.push(r);
            }
        }
        for lambda in shifts {
            let psi: Vec<Mat> =
                phi.iter().map(|b| b.sub(&Mat::identity(f, b.rows()).scale(lambda)).pow(n as u64)).collect();
            let kernel: Vec<Mat> = psi.iter().map(Mat::kernel_basis).collect();
            let kdim: usize = kernel.iter().map(Mat::cols).sum();
            if kdim == 0 || kdim == n {
                continue;
            }
            let image: Vec<Mat> = psi.iter().map(Mat::column_space).collect();
            let (x, _) = m.submodule(&kernel);
            let (y, _) = m.submodule(&image);
            return Ok(Some((x, y)));
        }
    }
    Ok(None)
}

/// Monic polynomial `g` (coefficients low to high) with `g(φ) v = 0` for a
/// random vector `v`; its roots are eigenvalues of the block-diagonal `φ`.
fn krylov_polynomial(f: Fp, phi: &[Mat], rng: &mut ChaCha8Rng) -> Vec<u32> {
    let apply = |v: &[Vec<u32>]| -> Vec<Vec<u32>> { phi.iter().zip(v).map(|(b, x)| b.mul_vec(x)).collect() };
    let flat = |v: &[Vec<u32>]| -> Vec<u32> { v.concat() };
    let mut v: Vec<Vec<u32>> = phi.iter().map(|b| (0..b.rows()).map(|_| rng.gen_range(0..f.p())).collect()).collect();
    let n: usize = phi.iter().map(Mat::rows).sum();
    let mut cols: Vec<Vec<u32>> = Vec::new();
    loop {
        let fv = flat(&v);
        if !cols.is_empty() {
            let span = Mat::from_vec(f, cols.len(), n, cols.concat()).transpose();
            if let Ok(Some(x)) = span.solve_right(&Mat::column(f, &fv)) {
                // φ^k v = Σ x_j φ^j v  =>  g = t^k - Σ x_j t^j
                let mut g: Vec<u32> = x.col(0).into_iter().map(|c| f.neg(c)).collect();
                g.push(1);
                return g;
            }
        } else if fv.iter().all(|&c| c == 0) {
            return vec![1];
        }
        cols.push(fv);
        v = apply(&v);
    }
}

fn trim(mut p: Vec<u32>) -> Vec<u32> {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn poly_eval(f: Fp, p: &[u32], x: u32) -> u32 {
    p.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

fn poly_mulmod(f: Fp, a: &[u32], b: &[u32], m: &[u32]) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = f.add(prod[i + j], f.mul(x, y));
        }
    }
    poly_rem(f, prod, m)
}

fn poly_rem(f: Fp, mut a: Vec<u32>, m: &[u32]) -> Vec<u32> {
    let m = trim(m.to_vec());
    let lead_inv = f.inv(*m.last().unwrap());
    a = trim(a);
    while a.len() >= m.len() {
        let shift = a.len() - m.len();
        let c = f.mul(*a.last().unwrap(), lead_inv);
        for (i, &mi) in m.iter().enumerate() {
            a[shift + i] = f.sub(a[shift + i], f.mul(c, mi));
        }
        a = trim(a);
    }
    a
}

fn poly_gcd(f: Fp, a: Vec<u32>, b: Vec<u32>) -> Vec<u32> {
    let (mut a, mut b) = (trim(a), trim(b));
    while !b.is_empty() {
        let r = poly_rem(f, a, &b);
        a = b;
        b = r;
    }
    if let Some(&l) = a.last() {
        let inv = f.inv(l);
        a.iter_mut().for_each(|c| *c = f.mul(*c, inv));
    }
    a
}

fn poly_powmod(f: Fp, base: &[u32], mut e: u64, m: &[u32]) -> Vec<u32> {
    let mut acc = vec![1u32];
    let mut b = poly_rem(f, base.to_vec(), m);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(f, &acc, &b, m);
        }
        b = poly_mulmod(f, &b, &b, m);
        e >>= 1;
    }
    poly_rem(f, acc, m)
}

/// Distinct roots of `g` in `F_p`.
fn roots(f: Fp, g: &[u32], rng: &mut ChaCha8Rng) -> Vec<u32> {
    let g = trim(g.to_vec());
    if g.len() <= 1 {
        return Vec::new();
    }
    let p = f.p();
    if p <= 1 << 16 {
        return (0..p).filter(|&x| poly_eval(f, &g, x) == 0).collect();
    }
    // product of the distinct linear factors: gcd(g, t^p - t)
    let mut tp = poly_powmod(f, &[0, 1], p as u64, &g);
    tp.resize(tp.len().max(2), 0);
    tp[1] = f.sub(tp[1], 1);
    let lin = poly_gcd(f, g, tp);
    let mut out = Vec::new();
    split_linear(f, lin, rng, &mut out);
    out.sort_unstable();
    out
}

fn split_linear(f: Fp, h: Vec<u32>, rng: &mut ChaCha8Rng, out: &mut Vec<u32>) {
    let h = trim(h);
    match h.len() {
        0 | 1 => {}
        2 => out.push(f.mul(f.neg(h[0]), f.inv(h[1]))),
        _ => loop {
            let a = rng.gen_range(0..f.p());
            let mut s = poly_powmod(f, &[a, 1], (f.p() as u64 - 1) / 2, &h);
            if s.is_empty() {
                s.push(0);
            }
            s[0] = f.sub(s[0], 1);
            let d = poly_gcd(f, h.clone(), s);
            if d.len() > 1 && d.len() < h.len() {
                let rest = poly_div_exact(f, &h, &d);
                split_linear(f, d, rng, out);
                split_linear(f, rest, rng, out);
                return;
            }
        },
    }
}

fn poly_div_exact(f: Fp, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut rem = trim(a.to_vec());
    let b = trim(b.to_vec());
    let inv = f.inv(*b.last().unwrap());
    let mut q = vec![0u32; rem.len() + 1 - b.len()];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = f.mul(*rem.last().unwrap(), inv);
        q[shift] = c;
        for (i, &bi) in b.iter().enumerate() {
            rem[shift + i] = f.sub(rem[shift + i], f.mul(c, bi));
        }
        rem = trim(rem);
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_small_and_large_fields() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let f = Fp::new(1009).unwrap();
        // (t-2)(t-5) = t^2 - 7t + 10
        let g = vec![10, f.neg(7), 1];
        assert_eq!(roots(f, &g, &mut rng), vec![2, 5]);

        let big = Fp::new(1_000_003).unwrap();
        // (t-3)(t-11)(t^2+1); -1 is a non-residue mod 1000003 (≡ 3 mod 4)
        let lin = [33u32, big.neg(14), 1];
        let quad = [1u32, 0, 1];
        let mut g = vec![0u32; 5];
        for (i, &x) in lin.iter().enumerate() {
            for (j, &y) in quad.iter().enumerate() {
                g[i + j] = big.add(g[i + j], big.mul(x, y));
            }
        }
        assert_eq!(roots(big, &g, &mut rng), vec![3, 11]);
    }
}
