//! Based finite-dimensional algebras.
//!
//! An [`Algebra`] is a cheap handle onto a pair of [`BasedAlgebra`] tables,
//! the algebra and its opposite, built together so that `a.opposite().opposite()`
//! is the very same algebra and modules over either side can be compared by identity.
//!
//! Conventions: a basis element `b` lies in `e_s A e_t` where `s = b.source` and
//! `t = b.target`; for paths `p : i -> j` and `q : j -> k` the product `pq` runs
//! `i -> k`. Modules are right modules.

mod kupisch;
mod presentation;

use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

pub use kupisch::{KupischSeries, Orientation};
pub use presentation::{build_algebra, AlgebraPresentation, Quiver, QuiverArrow, Relation, DEFAULT_MAX_PATH_LENGTH};

use crate::error::{Error, Result};
use crate::field::Fp;
use crate::mat::Mat;

/// A linear combination of words in the arrows (generators) of an algebra.
pub type WordExpr = Vec<(u32, Vec<usize>)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
    /// Index of the basis element this arrow is.
    pub basis: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisElem {
    pub source: usize,
    pub target: usize,
    /// Path length (radical layer for graded algebras); 0 exactly for the idempotents.
    pub length: usize,
    pub label: String,
    /// Expression of this element in the arrows, used to act on modules.
    pub word: WordExpr,
}

/// Structure constants and bookkeeping of one side of an [`Algebra`].
#[derive(Debug, Clone)]
pub struct BasedAlgebra {
    field: Fp,
    label: String,
    vertex_count: usize,
    arrows: Vec<Arrow>,
    basis: Vec<BasisElem>,
    /// `mult[x * dim + y]` is the sparse coefficient vector of `b_x b_y`.
    mult: Vec<Vec<(usize, u32)>>,
    /// `between[s][t]`: basis indices of `e_s A e_t`, increasing.
    between: Vec<Vec<Vec<usize>>>,
    kupisch: Option<KupischSeries>,
}

#[derive(Clone)]
pub struct Algebra {
    sides: Arc<[BasedAlgebra; 2]>,
    side: usize,
}

impl Deref for Algebra {
    type Target = BasedAlgebra;
    fn deref(&self) -> &BasedAlgebra {
        &self.sides[self.side]
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.sides, &other.sides) && self.side == other.side
    }
}
impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra({}, dim {})", self.label, self.dim())
    }
}

impl Algebra {
    /// Assembles an algebra from structure constants. Idempotents must be the
    /// first `vertex_count` basis elements, in vertex order.
    pub(crate) fn from_parts(
        field: Fp,
        label: String,
        vertex_count: usize,
        arrows: Vec<Arrow>,
        basis: Vec<BasisElem>,
        mult: Vec<Vec<(usize, u32)>>,
        kupisch: Option<KupischSeries>,
    ) -> Algebra {
        let front = BasedAlgebra::new(field, label.clone(), vertex_count, arrows, basis, mult, kupisch);
        let back = front.opposite_table(format!("{label}^op"));
        Algebra { sides: Arc::new([front, back]), side: 0 }
    }

    pub fn opposite(&self) -> Algebra {
        Algebra { sides: self.sides.clone(), side: 1 - self.side }
    }

    pub fn is_opposite_side(&self) -> bool {
        self.side == 1
    }

    /// True when `other` is this algebra or its opposite.
    pub fn same_pair(&self, other: &Algebra) -> bool {
        Arc::ptr_eq(&self.sides, &other.sides)
    }

    /// Basis indices of `fAf` in the order used by [`Algebra::idempotent_subalgebra`]:
    /// the idempotents of `f` (sorted, no repeats), then the remaining basis
    /// elements of `fAf` in increasing order.
    pub fn corner_basis(&self, f: &[usize]) -> Vec<usize> {
        let mut f = f.to_vec();
        f.sort_unstable();
        f.dedup();
        let mut keep: Vec<usize> = f.clone();
        keep.extend(
            (self.vertex_count..self.dim())
                .filter(|&b| f.contains(&self.basis[b].source) && f.contains(&self.basis[b].target)),
        );
        keep
    }

    /// The algebra `fAf` for a nonempty set of vertices `f`.
    ///
    /// Vertices of `fAf` are renumbered `0..f.len()` in increasing order of `f`.
    /// Its arrows are basis elements of `fJf` chosen to span `fJf / (fJf)^2`.
    pub fn idempotent_subalgebra(&self, f: &[usize]) -> Result<Algebra> {
        let mut f = f.to_vec();
        f.sort_unstable();
        f.dedup();
        if f.is_empty() {
            return Err(Error::InvalidIdempotent("empty vertex set".into()));
        }
        if let Some(&v) = f.iter().find(|&&v| v >= self.vertex_count) {
            return Err(Error::InvalidVertex(v));
        }
        let local = |v: usize| f.iter().position(|&x| x == v);
        let keep = self.corner_basis(&f);
        let new_index = |b: usize| keep.iter().position(|&x| x == b);
        let d = keep.len();
        let mut mult = vec![Vec::new(); d * d];
        for (x, &bx) in keep.iter().enumerate() {
            for (y, &by) in keep.iter().enumerate() {
                mult[x * d + y] = self
                    .mult(bx, by)
                    .iter()
                    .map(|&(b, c)| (new_index(b).expect("fAf is closed under products"), c))
                    .collect();
            }
        }
        let mut basis: Vec<BasisElem> = keep
            .iter()
            .map(|&b| {
                let e = &self.basis[b];
                BasisElem {
                    source: local(e.source).unwrap(),
                    target: local(e.target).unwrap(),
                    length: e.length,
                    label: e.label.clone(),
                    word: Vec::new(),
                }
            })
            .collect();

        // Generators: radical basis elements outside span of (fJf)^2, greedily.
        let field = self.field;
        let rad: Vec<usize> = (f.len()..d).collect();
        let mut span_rows: Vec<Vec<u32>> = Vec::new();
        for &x in &rad {
            for &y in &rad {
                let mut v = vec![0u32; d];
                for &(b, c) in &mult[x * d + y] {
                    v[b] = c;
                }
                if v.iter().any(|&c| c != 0) {
                    span_rows.push(v);
                }
            }
        }
        let mut rank = rows_rank(field, &span_rows, d);
        let mut arrows = Vec::new();
        for &b in &rad {
            let mut v = vec![0u32; d];
            v[b] = 1;
            span_rows.push(v);
            let r = rows_rank(field, &span_rows, d);
            if r > rank {
                rank = r;
                arrows.push(Arrow {
                    name: basis[b].label.clone(),
                    source: basis[b].source,
                    target: basis[b].target,
                    basis: b,
                });
            } else {
                span_rows.pop();
            }
        }
        let words = generator_words(field, f.len(), &basis, &mult, &arrows)?;
        for (b, w) in basis.iter_mut().zip(words) {
            b.word = w;
        }
        let label = format!("{}|f={:?}", self.label, f);
        Ok(Algebra::from_parts(field, label, f.len(), arrows, basis, mult, None))
    }
}

fn rows_rank(field: Fp, rows: &[Vec<u32>], d: usize) -> usize {
    if rows.is_empty() {
        return 0;
    }
    Mat::from_vec(field, rows.len(), d, rows.concat()).rank()
}

/// Expresses every basis element as a combination of words in `arrows`.
fn generator_words(
    field: Fp,
    vertex_count: usize,
    basis: &[BasisElem],
    mult: &[Vec<(usize, u32)>],
    arrows: &[Arrow],
) -> Result<Vec<WordExpr>> {
    let d = basis.len();
    let times = |v: &[u32], y: usize| -> Vec<u32> {
        let mut out = vec![0u32; d];
        for (x, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for &(b, k) in &mult[x * d + y] {
                out[b] = field.add(out[b], field.mul(c, k));
            }
        }
        out
    };
    let mut found: Vec<(Vec<usize>, Vec<u32>)> = Vec::new();
    let mut level: Vec<(Vec<usize>, Vec<u32>)> = arrows
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let mut v = vec![0u32; d];
            v[a.basis] = 1;
            (vec![i], v)
        })
        .collect();
    while !level.is_empty() {
        found.extend(level.iter().cloned());
        let mut next: Vec<(Vec<usize>, Vec<u32>)> = Vec::new();
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for (w, v) in &level {
            let end = arrows[*w.last().unwrap()].target;
            for (i, a) in arrows.iter().enumerate() {
                if a.source != end {
                    continue;
                }
                let nv = times(v, a.basis);
                if nv.iter().all(|&c| c == 0) {
                    continue;
                }
                rows.push(nv.clone());
                if rows_rank(field, &rows, d) == rows.len() {
                    let mut nw = w.clone();
                    nw.push(i);
                    next.push((nw, nv));
                } else {
                    rows.pop();
                }
            }
        }
        level = next;
    }
    let mut cols = Mat::zeros(field, d, found.len());
    for (j, (_, v)) in found.iter().enumerate() {
        for (r, &c) in v.iter().enumerate() {
            cols.set(r, j, c);
        }
    }
    let mut out = Vec::with_capacity(d);
    for b in 0..d {
        if b < vertex_count {
            out.push(vec![(1, Vec::new())]);
            continue;
        }
        let mut target = vec![0u32; d];
        target[b] = 1;
        let x = cols
            .solve_right(&Mat::column(field, &target))?
            .ok_or_else(|| Error::InvalidInput(format!("basis element {} not generated by arrows", basis[b].label)))?;
        out.push((0..found.len()).filter(|&j| x.get(j, 0) != 0).map(|j| (x.get(j, 0), found[j].0.clone())).collect());
    }
    Ok(out)
}

impl BasedAlgebra {
    fn new(
        field: Fp,
        label: String,
        vertex_count: usize,
        arrows: Vec<Arrow>,
        basis: Vec<BasisElem>,
        mult: Vec<Vec<(usize, u32)>>,
        kupisch: Option<KupischSeries>,
    ) -> Self {
        let mut between = vec![vec![Vec::new(); vertex_count]; vertex_count];
        for (i, b) in basis.iter().enumerate() {
            between[b.source][b.target].push(i);
        }
        BasedAlgebra { field, label, vertex_count, arrows, basis, mult, between, kupisch }
    }

    fn opposite_table(&self, label: String) -> BasedAlgebra {
        let d = self.dim();
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source, basis: a.basis })
            .collect();
        let basis = self
            .basis
            .iter()
            .map(|b| BasisElem {
                source: b.target,
                target: b.source,
                length: b.length,
                label: b.label.clone(),
                word: b.word.iter().map(|(c, w)| (*c, w.iter().rev().copied().collect())).collect(),
            })
            .collect();
        let mut mult = vec![Vec::new(); d * d];
        for x in 0..d {
            for y in 0..d {
                mult[x * d + y] = self.mult[y * d + x].clone();
            }
        }
        BasedAlgebra::new(self.field, label, self.vertex_count, arrows, basis, mult, None)
    }

    pub fn field(&self) -> Fp {
        self.field
    }
    pub fn label(&self) -> &str {
        &self.label
    }
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }
    pub fn basis(&self) -> &[BasisElem] {
        &self.basis
    }
    pub fn kupisch(&self) -> Option<&KupischSeries> {
        self.kupisch.as_ref()
    }

    /// Basis index of the idempotent `e_i`.
    pub fn idempotent(&self, i: usize) -> usize {
        i
    }

    /// Radical basis: every basis element of positive length.
    pub fn radical_basis(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&b| self.basis[b].length > 0).collect()
    }

    pub fn is_semisimple(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn mult(&self, x: usize, y: usize) -> &[(usize, u32)] {
        &self.mult[x * self.dim() + y]
    }

    /// Product of two elements given as dense coefficient vectors.
    pub fn mul_elems(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut out = vec![0u32; self.dim()];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let ab = f.mul(a, b);
                for &(k, c) in self.mult(i, j) {
                    out[k] = f.add(out[k], f.mul(ab, c));
                }
            }
        }
        out
    }

    /// Basis indices of `e_s A e_t`.
    pub fn between(&self, s: usize, t: usize) -> &[usize] {
        &self.between[s][t]
    }

    /// Basis indices of `e_s A`, i.e. the projective `P_s`.
    pub fn from_vertex(&self, s: usize) -> Vec<usize> {
        (0..self.vertex_count).flat_map(|t| self.between[s][t].iter().copied()).collect()
    }

    /// `dim e_i A`.
    pub fn projective_dim(&self, i: usize) -> usize {
        (0..self.vertex_count).map(|t| self.between[i][t].len()).sum()
    }

    /// Checks `(b_i b_j) b_k = b_i (b_j b_k)` on all basis triples.
    pub fn is_associative(&self) -> bool {
        let d = self.dim();
        let unit = |i: usize| {
            let mut v = vec![0u32; d];
            v[i] = 1;
            v
        };
        for i in 0..d {
            for j in 0..d {
                let ij = self.mul_elems(&unit(i), &unit(j));
                for k in 0..d {
                    let left = self.mul_elems(&ij, &unit(k));
                    let jk = self.mul_elems(&unit(j), &unit(k));
                    if left != self.mul_elems(&unit(i), &jk) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Checks `e_i e_j = δ_ij e_i` and that `Σ e_i` is a two-sided unit.
    pub fn idempotents_are_complete(&self) -> bool {
        let d = self.dim();
        let n = self.vertex_count;
        let mut one = vec![0u32; d];
        one[..n].fill(1);
        for i in 0..n {
            for j in 0..n {
                let want: Vec<(usize, u32)> = if i == j { vec![(i, 1)] } else { Vec::new() };
                if self.mult(i, j) != want.as_slice() {
                    return false;
                }
            }
        }
        (0..d).all(|b| {
            let mut v = vec![0u32; d];
            v[b] = 1;
            self.mul_elems(&one, &v) == v && self.mul_elems(&v, &one) == v
        })
    }

    /// Nilpotency index of the radical: least `m` with `J^m = 0`.
    pub fn loewy_length(&self) -> usize {
        self.basis.iter().map(|b| b.length).max().map_or(0, |m| m + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kup(series: &[usize], cyclic: bool) -> Algebra {
        KupischSeries::new(series.to_vec(), if cyclic { Orientation::Cyclic } else { Orientation::Linear })
            .unwrap()
            .algebra(Fp::default())
            .unwrap()
    }

    #[test]
    fn opposite_is_involution() {
        let a = kup(&[2, 2, 2, 1], false);
        let aa = a.opposite().opposite();
        assert_eq!(a, aa);
        assert_eq!(a.mult, aa.mult);
        assert_ne!(a, a.opposite());
        // dims of opposite projectives = number of paths ending at each vertex
        let op = a.opposite();
        let dims: Vec<usize> = (0..4).map(|i| op.projective_dim(i)).collect();
        assert_eq!(dims, vec![1, 2, 2, 2]);
    }

    #[test]
    fn semisimple_opposite() {
        let a = kup(&[1], false);
        let op = a.opposite();
        assert_eq!(a.mult, op.mult);
        assert_eq!(a.dim(), 1);
        assert!(a.is_semisimple());
    }

    #[test]
    fn structure_checks() {
        for (s, c) in [(&[2usize, 2, 2, 1][..], false), (&[3, 3, 4][..], true), (&[2, 3][..], true)] {
            let a = kup(s, c);
            assert!(a.is_associative());
            assert!(a.idempotents_are_complete());
            assert!(a.opposite().is_associative());
            assert_eq!(a.dim(), s.iter().sum::<usize>());
            for (i, &ci) in s.iter().enumerate() {
                assert_eq!(a.projective_dim(i), ci);
            }
        }
    }

    #[test]
    fn idempotent_subalgebras() {
        let a = kup(&[2, 2, 2, 1], false);
        let faf = a.idempotent_subalgebra(&[0, 1, 2]).unwrap();
        assert_eq!(faf.dim(), 5);
        assert!(faf.is_associative());
        assert!(faf.idempotents_are_complete());
        let labels: Vec<&str> = faf.basis().iter().map(|b| b.label.as_str()).collect();
        assert_eq!(labels, vec!["e0", "e1", "e2", "a0", "a1"]);

        let all = a.idempotent_subalgebra(&[0, 1, 2, 3]).unwrap();
        assert_eq!(all.dim(), a.dim());
        assert_eq!(all.mult, a.mult);

        let local = a.idempotent_subalgebra(&[1]).unwrap();
        assert_eq!(local.dim(), 1);
        assert!(matches!(a.idempotent_subalgebra(&[]), Err(Error::InvalidIdempotent(_))));
    }

    #[test]
    fn corner_with_composite_generator() {
        // e_0 A e_0 for the cyclic [3,3,4] algebra contains no loops of length < 3.
        let a = kup(&[4, 4], true);
        let c = a.idempotent_subalgebra(&[0]).unwrap();
        // paths 0 -> 0: e0, a0a1 ; a0a1 is a generator
        assert_eq!(c.dim(), 2);
        assert_eq!(c.arrows().len(), 1);
        assert_eq!(c.arrows()[0].name, "a0a1");
        assert!(c.is_associative());
    }
}
