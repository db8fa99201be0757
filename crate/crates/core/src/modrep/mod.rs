//! Right modules given by matrices, and the constructive module category.
//!
//! A [`Rep`] stores one vector space per vertex and, for every arrow
//! `α : i -> j`, a matrix of shape `dims[j] × dims[i]` acting on column
//! vectors. The action of a path `α_1 ⋯ α_k` is `A_{α_k} ⋯ A_{α_1}`.

mod cover;
mod decompose;
pub mod expr;
mod hom;
mod standard;

use std::fmt;

pub use cover::{
    cosyzygy, injective_envelope, is_injective, is_projective, projective_cover, radical, socle, syzygy, top,
    ProjectiveCover,
};
pub use decompose::{decompose, is_indecomposable, strip_injectives, strip_projectives};
pub use hom::{hom_basis, hom_dim, is_isomorphic, map_coordinates};
pub(crate) use standard::map_from_projective_sum;
pub use standard::{
    injective_module, k_dual, nakayama_indecomposables, nakayama_label, projective_module, projective_sum,
    regular_module, simple_module, uniserial_module, Labeled,
};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Fp;
use crate::mat::Mat;

#[derive(Clone)]
pub struct Rep {
    algebra: Algebra,
    dims: Vec<usize>,
    action: Vec<Mat>,
}

impl fmt::Debug for Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rep over {} dims {:?}", self.algebra.label(), self.dims)
    }
}

impl PartialEq for Rep {
    /// Literal equality of the matrices, not isomorphism.
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra && self.dims == other.dims && self.action == other.action
    }
}

impl Rep {
    /// Builds a module and checks shapes and the module axioms.
    pub fn new(algebra: &Algebra, dims: Vec<usize>, action: Vec<Mat>) -> Result<Rep> {
        if dims.len() != algebra.vertex_count() || action.len() != algebra.arrows().len() {
            return Err(Error::InvalidShape("dimension vector or arrow count mismatch".into()));
        }
        for (a, m) in algebra.arrows().iter().zip(&action) {
            if m.rows() != dims[a.target] || m.cols() != dims[a.source] {
                return Err(Error::InvalidShape(format!(
                    "arrow {} needs a {}x{} matrix, got {}x{}",
                    a.name,
                    dims[a.target],
                    dims[a.source],
                    m.rows(),
                    m.cols()
                )));
            }
            if m.field() != algebra.field() {
                return Err(Error::InvalidInput("matrix over a different field".into()));
            }
        }
        let rep = Rep { algebra: algebra.clone(), dims, action };
        if !rep.satisfies_relations() {
            return Err(Error::InvalidInput("arrow matrices violate the relations of the algebra".into()));
        }
        Ok(rep)
    }

    pub(crate) fn from_parts(algebra: &Algebra, dims: Vec<usize>, action: Vec<Mat>) -> Rep {
        let rep = Rep { algebra: algebra.clone(), dims, action };
        debug_assert!(rep.satisfies_relations(), "constructed module violates relations");
        rep
    }

    pub fn zero(algebra: &Algebra) -> Rep {
        let f = algebra.field();
        let action = algebra.arrows().iter().map(|_| Mat::zeros(f, 0, 0)).collect();
        Rep { algebra: algebra.clone(), dims: vec![0; algebra.vertex_count()], action }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }
    pub fn field(&self) -> Fp {
        self.algebra.field()
    }
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
    pub fn action(&self, arrow: usize) -> &Mat {
        &self.action[arrow]
    }
    pub fn actions(&self) -> &[Mat] {
        &self.action
    }
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }
    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Offset of each vertex component in the concatenated coordinate vector.
    pub fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.dims
            .iter()
            .map(|d| {
                let o = acc;
                acc += d;
                o
            })
            .collect()
    }

    /// Matrix of right multiplication by basis element `b`, from the
    /// `source(b)` component to the `target(b)` component.
    pub fn basis_action(&self, b: usize) -> Mat {
        let f = self.field();
        let e = &self.algebra.basis()[b];
        let mut out = Mat::zeros(f, self.dims[e.target], self.dims[e.source]);
        for (c, word) in &e.word {
            let mut m = Mat::identity(f, self.dims[e.source]);
            for &a in word {
                m = self.action[a].mul(&m);
            }
            out.add_scaled(&m, *c);
        }
        out
    }

    /// Checks `act(xy) = act(y) act(x)` on all composable basis pairs.
    pub fn satisfies_relations(&self) -> bool {
        let a = &self.algebra;
        let acts: Vec<Mat> = (0..a.dim()).map(|b| self.basis_action(b)).collect();
        let f = self.field();
        for x in 0..a.dim() {
            for y in 0..a.dim() {
                let (bx, by) = (&a.basis()[x], &a.basis()[y]);
                if bx.target != by.source {
                    continue;
                }
                let lhs = acts[y].mul(&acts[x]);
                let mut rhs = Mat::zeros(f, lhs.rows(), lhs.cols());
                for &(k, c) in a.mult(x, y) {
                    rhs.add_scaled(&acts[k], c);
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    pub fn direct_sum(&self, other: &Rep) -> Result<Rep> {
        if self.algebra != other.algebra {
            return Err(Error::AlgebraMismatch);
        }
        let dims = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let action = self.action.iter().zip(&other.action).map(|(a, b)| a.block_diag(b)).collect();
        Ok(Rep { algebra: self.algebra.clone(), dims, action })
    }

    pub fn direct_sum_all<'a>(algebra: &Algebra, parts: impl IntoIterator<Item = &'a Rep>) -> Result<Rep> {
        parts.into_iter().try_fold(Rep::zero(algebra), |acc, r| acc.direct_sum(r))
    }

    /// Smallest submodule containing the columns of `gens[i]` at each vertex,
    /// as per-vertex column bases.
    pub fn closure(&self, gens: &[Mat]) -> Vec<Mat> {
        let mut spaces: Vec<Mat> = gens.iter().map(|g| g.column_space()).collect();
        loop {
            let mut changed = false;
            for (ai, a) in self.algebra.arrows().iter().enumerate() {
                if spaces[a.source].cols() == 0 {
                    continue;
                }
                let img = self.action[ai].mul(&spaces[a.source]);
                let joined = spaces[a.target].hstack(&img).column_space();
                if joined.cols() > spaces[a.target].cols() {
                    spaces[a.target] = joined;
                    changed = true;
                }
            }
            if !changed {
                return spaces;
            }
        }
    }

    /// The submodule with per-vertex column bases `basis` (must be invariant,
    /// columns independent), with its inclusion.
    pub fn submodule(&self, basis: &[Mat]) -> (Rep, ModMap) {
        let f = self.field();
        let dims: Vec<usize> = basis.iter().map(|b| b.cols()).collect();
        let action = self
            .algebra
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let img = self.action[ai].mul(&basis[a.source]);
                if dims[a.source] == 0 || dims[a.target] == 0 {
                    return Mat::zeros(f, dims[a.target], dims[a.source]);
                }
                basis[a.target].solve_right(&img).expect("shapes agree").expect("subspace is not invariant")
            })
            .collect();
        let sub = Rep::from_parts(&self.algebra, dims, action);
        let incl = ModMap { source: sub.clone(), target: self.clone(), blocks: basis.to_vec() };
        (sub, incl)
    }

    /// Quotient by the invariant subspace with per-vertex column bases `basis`,
    /// with the projection.
    pub fn quotient(&self, basis: &[Mat]) -> (Rep, ModMap) {
        let f = self.field();
        let mut comps = Vec::new();
        let mut projs = Vec::new();
        for (i, u) in basis.iter().enumerate() {
            let c = u.complement_basis();
            let full = u.hstack(&c);
            let inv = full.inverse().expect("subspace basis is not independent");
            projs.push(inv.block(u.cols(), 0, c.cols(), self.dims[i]));
            comps.push(c);
        }
        let dims: Vec<usize> = comps.iter().map(|c| c.cols()).collect();
        let action = self
            .algebra
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                if dims[a.source] == 0 || dims[a.target] == 0 {
                    return Mat::zeros(f, dims[a.target], dims[a.source]);
                }
                projs[a.target].mul(&self.action[ai]).mul(&comps[a.source])
            })
            .collect();
        let q = Rep::from_parts(&self.algebra, dims, action);
        let proj = ModMap { source: self.clone(), target: q.clone(), blocks: projs };
        (q, proj)
    }
}

/// A module homomorphism, one block per vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct ModMap {
    pub source: Rep,
    pub target: Rep,
    pub blocks: Vec<Mat>,
}

impl ModMap {
    pub fn new(source: &Rep, target: &Rep, blocks: Vec<Mat>) -> Result<ModMap> {
        if source.algebra != target.algebra {
            return Err(Error::AlgebraMismatch);
        }
        let ok_shape = blocks.len() == source.dims.len()
            && blocks.iter().enumerate().all(|(i, b)| b.rows() == target.dims[i] && b.cols() == source.dims[i]);
        if !ok_shape {
            return Err(Error::InvalidShape("block shapes do not match the dimension vectors".into()));
        }
        let m = ModMap { source: source.clone(), target: target.clone(), blocks };
        if !m.is_homomorphism() {
            return Err(Error::InvalidInput("blocks do not commute with the arrows".into()));
        }
        Ok(m)
    }

    pub fn zero(source: &Rep, target: &Rep) -> ModMap {
        let f = source.field();
        let blocks = (0..source.dims.len()).map(|i| Mat::zeros(f, target.dims[i], source.dims[i])).collect();
        ModMap { source: source.clone(), target: target.clone(), blocks }
    }

    pub fn identity(m: &Rep) -> ModMap {
        let f = m.field();
        let blocks = m.dims.iter().map(|&d| Mat::identity(f, d)).collect();
        ModMap { source: m.clone(), target: m.clone(), blocks }
    }

    /// `target.action(α) ∘ blocks[source(α)] = blocks[target(α)] ∘ source.action(α)`.
    pub fn is_homomorphism(&self) -> bool {
        self.source.algebra.arrows().iter().enumerate().all(|(ai, a)| {
            self.target.action[ai].mul(&self.blocks[a.source]) == self.blocks[a.target].mul(&self.source.action[ai])
        })
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &ModMap) -> ModMap {
        let blocks = self.blocks.iter().zip(&first.blocks).map(|(a, b)| a.mul(b)).collect();
        ModMap { source: first.source.clone(), target: self.target.clone(), blocks }
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(Mat::rank).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.total_dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.total_dim()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.source.total_dim() == self.target.total_dim() && self.is_injective()
    }

    /// Kernel as a submodule of the source, with its inclusion.
    pub fn kernel(&self) -> (Rep, ModMap) {
        let basis: Vec<Mat> = self.blocks.iter().map(Mat::kernel_basis).collect();
        self.source.submodule(&basis)
    }

    /// Image as a submodule of the target, with its inclusion.
    pub fn image(&self) -> (Rep, ModMap) {
        let basis: Vec<Mat> = self.blocks.iter().map(Mat::column_space).collect();
        self.target.submodule(&basis)
    }

    /// Cokernel, with the projection from the target.
    pub fn cokernel(&self) -> (Rep, ModMap) {
        let basis: Vec<Mat> = self.blocks.iter().map(Mat::column_space).collect();
        self.target.quotient(&basis)
    }

    /// Entries of all blocks, concatenated vertex by vertex in row-major order.
    pub fn flatten(&self) -> Vec<u32> {
        self.blocks.iter().flat_map(|b| b.data().iter().copied()).collect()
    }
}

#[cfg(test)]
mod tests;
