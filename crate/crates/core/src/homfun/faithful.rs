//! The minimal faithful projective-injective module and restriction to `fAf`.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::modrep::{injective_module, is_injective, is_projective, projective_module, Rep};

/// Vertices `i` whose right projective `e_i A` is also injective.
pub fn projective_injective_vertices(a: &Algebra) -> Vec<usize> {
    (0..a.vertex_count()).filter(|&i| is_injective(&projective_module(a, i).expect("vertex in range"))).collect()
}

/// The idempotent `f = Σ_{j ∈ J} e_j` with `Af` the minimal faithful
/// projective-injective left module: `J` holds the vertices whose left
/// projective `A e_j` is injective, equivalently whose `I_j = D(A e_j)` is
/// projective.
pub fn minimal_faithful_proj_inj(a: &Algebra) -> Result<Vec<usize>> {
    let f: Vec<usize> =
        (0..a.vertex_count()).filter(|&j| is_projective(&injective_module(a, j).expect("vertex in range"))).collect();
    if f.is_empty() {
        return Err(Error::NoFaithfulProjInj);
    }
    Ok(f)
}

/// The corner algebra `fAf` with the data needed to restrict modules to it.
#[derive(Debug, Clone)]
pub struct Corner {
    pub ambient: Algebra,
    pub vertices: Vec<usize>,
    pub algebra: Algebra,
    /// `basis[b]`: the basis element of the ambient algebra behind `b`.
    basis: Vec<usize>,
}

impl Corner {
    pub fn new(a: &Algebra, f: &[usize]) -> Result<Corner> {
        let algebra = a.idempotent_subalgebra(f)?;
        let mut vertices = f.to_vec();
        vertices.sort_unstable();
        vertices.dedup();
        Ok(Corner { ambient: a.clone(), basis: a.corner_basis(&vertices), vertices, algebra })
    }

    /// `M f` as a right `fAf`-module.
    pub fn restrict(&self, m: &Rep) -> Result<Rep> {
        if m.algebra() != &self.ambient {
            return Err(Error::AlgebraMismatch);
        }
        let dims = self.vertices.iter().map(|&v| m.dims()[v]).collect();
        let action = self.algebra.arrows().iter().map(|ar| m.basis_action(self.basis[ar.basis])).collect();
        Rep::new(&self.algebra, dims, action)
    }
}

/// `M f` over `fAf`.
pub fn f_restrict(m: &Rep, f: &[usize]) -> Result<Rep> {
    Corner::new(m.algebra(), f)?.restrict(m)
}
