use crate::error::{Error, Result};
use crate::modrep::{hom_dim, projective_cover, regular_module, ModMap, ProjectiveCover, Rep};

/// Default bound on resolution length and on (co)syzygy walks.
pub const DEFAULT_BOUND: usize = 32;

/// A minimal projective resolution `⋯ -> P_1 -> P_0 -> M`, extended on demand.
#[derive(Debug, Clone)]
pub struct Resolution {
    bound: usize,
    /// `syzygies[k] = Ω^k M`.
    syzygies: Vec<Rep>,
    /// `covers[k] : P_k -> Ω^k M`.
    covers: Vec<ProjectiveCover>,
    /// `inclusions[k] : Ω^{k+1} M -> P_k`.
    inclusions: Vec<ModMap>,
}

impl Resolution {
    pub fn new(m: &Rep, bound: usize) -> Resolution {
        Resolution { bound, syzygies: vec![m.clone()], covers: Vec::new(), inclusions: Vec::new() }
    }

    /// Makes `P_0, …, P_{len-1}` and `Ω^len M` available.
    pub fn extend_to(&mut self, len: usize) -> Result<()> {
        if len > self.bound {
            return Err(Error::BoundExceeded(format!("projective resolution longer than {}", self.bound)));
        }
        while self.covers.len() < len {
            let cur = self.syzygies.last().expect("nonempty");
            let cover = projective_cover(cur);
            let (k, incl) = cover.map.kernel();
            self.syzygies.push(k);
            self.covers.push(cover);
            self.inclusions.push(incl);
        }
        Ok(())
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Number of terms computed so far.
    pub fn len(&self) -> usize {
        self.covers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.covers.is_empty()
    }

    pub fn syzygy(&self, k: usize) -> &Rep {
        &self.syzygies[k]
    }

    pub fn cover(&self, k: usize) -> &ProjectiveCover {
        &self.covers[k]
    }

    pub fn term(&self, k: usize) -> &Rep {
        &self.covers[k].projective
    }

    /// The differential `P_k -> P_{k-1}` for `k ≥ 1`.
    pub fn differential(&self, k: usize) -> ModMap {
        self.inclusions[k - 1].compose(&self.covers[k].map)
    }

    /// Length of the resolution if it stops within the bound.
    pub fn projective_dimension(&mut self) -> Result<usize> {
        let mut k = 0;
        loop {
            self.extend_to(k + 1)?;
            if self.syzygies[k + 1].is_zero() {
                return Ok(k);
            }
            k += 1;
        }
    }
}

/// `dim Ext^i(M, N)` for `i = 1..=up_to`.
///
/// Uses `0 -> Ω^i M -> P_{i-1} -> Ω^{i-1} M -> 0`, which gives
/// `dim Ext^i(M, N) = dim Hom(Ω^i M, N) - dim Hom(P_{i-1}, N) + dim Hom(Ω^{i-1} M, N)`.
pub fn ext_dims(m: &Rep, n: &Rep, up_to: usize, bound: usize) -> Result<Vec<usize>> {
    if m.algebra() != n.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    let mut res = Resolution::new(m, bound);
    res.extend_to(up_to)?;
    let mut homs = Vec::with_capacity(up_to + 1);
    for k in 0..=up_to {
        homs.push(hom_dim(res.syzygy(k), n)?);
    }
    Ok((1..=up_to)
        .map(|i| {
            let hp: usize = res.cover(i - 1).tops.iter().map(|&t| n.dims()[t]).sum();
            homs[i] + homs[i - 1] - hp
        })
        .collect())
}

/// `dim Ext^i(M, N)`; `i = 0` gives `dim Hom(M, N)`.
pub fn ext_dim(m: &Rep, n: &Rep, i: usize) -> Result<usize> {
    if i == 0 {
        return hom_dim(m, n);
    }
    Ok(ext_dims(m, n, i, DEFAULT_BOUND)?[i - 1])
}

/// `dim Ext^i(M, A)` for `i = 1..=up_to`, against the regular module.
pub fn ext_to_regular(m: &Rep, up_to: usize) -> Result<Vec<usize>> {
    ext_dims(m, &regular_module(m.algebra()), up_to, DEFAULT_BOUND)
}
