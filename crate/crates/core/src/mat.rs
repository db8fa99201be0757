//! Dense matrices over `F_p` with exact Gaussian elimination.
//!
//! Storage is row-major. Elimination always picks the leftmost pivot column
//! and the topmost nonzero entry in it, so every routine is deterministic.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::Fp;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    field: Fp,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Result of [`Mat::rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Mat,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}[", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(|v| self.field.to_signed(*v).to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl Mat {
    pub fn zeros(field: Fp, rows: usize, cols: usize) -> Self {
        Mat { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: Fp, n: usize) -> Self {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % field.p();
        }
        m
    }

    /// Builds a matrix from integer rows, reducing entries mod p.
    pub fn from_rows(field: Fp, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidShape("ragged rows".into()));
        }
        let data = rows.iter().flatten().map(|v| field.from_i64(*v)).collect();
        Ok(Mat { field, rows: rows.len(), cols, data })
    }

    pub fn from_vec(field: Fp, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Mat { field, rows, cols, data }
    }

    /// A single column.
    pub fn column(field: Fp, v: &[u32]) -> Self {
        Mat::from_vec(field, v.len(), 1, v.to_vec())
    }

    pub fn random<R: Rng + ?Sized>(field: Fp, rows: usize, cols: usize, rng: &mut R) -> Self {
        let data = (0..rows * cols).map(|_| rng.gen_range(0..field.p())).collect();
        Mat { field, rows, cols, data }
    }

    #[inline]
    pub fn field(&self) -> Fp {
        self.field
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let f = self.field;
        let p = f.p() as u64;
        let mut out = Mat::zeros(f, self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        for r in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.data[r * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let orow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (slot, &b) in acc.iter_mut().zip(orow) {
                    *slot = (*slot + a * b as u64) % p;
                }
            }
            for (slot, &v) in out.data[r * other.cols..(r + 1) * other.cols].iter_mut().zip(&acc) {
                *slot = v as u32;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len());
        let p = self.field.p() as u64;
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).fold(0u64, |s, (&a, &b)| (s + a as u64 * b as u64) % p) as u32)
            .collect()
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Mat { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Mat { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: u32) -> Mat {
        let f = self.field;
        let data = self.data.iter().map(|&a| f.mul(a, s)).collect();
        Mat { field: f, rows: self.rows, cols: self.cols, data }
    }

    /// `self += s * other`.
    pub fn add_scaled(&mut self, other: &Mat, s: u32) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = f.add(*a, f.mul(b, s));
        }
    }

    /// Horizontal concatenation. Row counts must agree.
    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        let mut out = Mat::zeros(self.field, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            out.data[r * out.cols..r * out.cols + self.cols].copy_from_slice(self.row(r));
            out.data[r * out.cols + self.cols..(r + 1) * out.cols].copy_from_slice(other.row(r));
        }
        out
    }

    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat { field: self.field, rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Block-diagonal sum.
    pub fn block_diag(&self, other: &Mat) -> Mat {
        let mut out = Mat::zeros(self.field, self.rows + other.rows, self.cols + other.cols);
        out.set_block(0, 0, self);
        out.set_block(self.rows, self.cols, other);
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Mat) {
        for r in 0..b.rows {
            for c in 0..b.cols {
                self.set(r0 + r, c0 + c, b.get(r, c));
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Mat {
        let mut out = Mat::zeros(self.field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                out.set(r, c, self.get(r0 + r, c0 + c));
            }
        }
        out
    }

    pub fn select_cols(&self, cols: &[usize]) -> Mat {
        let mut out = Mat::zeros(self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.set(r, j, self.get(r, c));
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> Mat {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        Mat { field: self.field, rows: rows.len(), cols: self.cols, data }
    }

    /// Reduced row echelon form.
    pub fn rref(&self) -> Rref {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for c in 0..m.cols {
            if prow == m.rows {
                break;
            }
            let Some(r) = (prow..m.rows).find(|&r| m.get(r, c) != 0) else {
                continue;
            };
            if r != prow {
                for k in 0..m.cols {
                    m.data.swap(r * m.cols + k, prow * m.cols + k);
                }
            }
            let inv = f.inv(m.get(prow, c));
            for k in c..m.cols {
                let v = m.get(prow, k);
                m.set(prow, k, f.mul(v, inv));
            }
            for r2 in 0..m.rows {
                if r2 == prow {
                    continue;
                }
                let factor = m.get(r2, c);
                if factor == 0 {
                    continue;
                }
                for k in c..m.cols {
                    let v = f.sub(m.get(r2, k), f.mul(factor, m.get(prow, k)));
                    m.set(r2, k, v);
                }
            }
            pivots.push(c);
            prow += 1;
        }
        let rank = pivots.len();
        Rref { matrix: m, pivots, rank }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Columns form a basis of the right null space.
    pub fn kernel_basis(&self) -> Mat {
        let f = self.field;
        let Rref { matrix, pivots, .. } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Mat::zeros(f, self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            k.set(fc, j, 1);
            for (r, &pc) in pivots.iter().enumerate() {
                k.set(pc, j, f.neg(matrix.get(r, fc)));
            }
        }
        k
    }

    /// Columns of `self` at the pivot positions: a basis of the column space.
    pub fn column_space(&self) -> Mat {
        let pivots = self.rref().pivots;
        self.select_cols(&pivots)
    }

    /// Some `x` with `self * x = b`, or `None` when the system is inconsistent.
    pub fn solve_right(&self, b: &Mat) -> Result<Option<Mat>> {
        if self.rows != b.rows {
            return Err(Error::InvalidShape(format!(
                "solve_right: {}x{} against {}x{}",
                self.rows, self.cols, b.rows, b.cols
            )));
        }
        let aug = self.hstack(b);
        let Rref { matrix, pivots, .. } = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return Ok(None);
        }
        let mut x = Mat::zeros(self.field, self.cols, b.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, matrix.get(r, self.cols + j));
            }
        }
        Ok(Some(x))
    }

    pub fn is_invertible(&self) -> Result<bool> {
        if !self.is_square() {
            return Err(Error::InvalidShape(format!("{}x{} is not square", self.rows, self.cols)));
        }
        Ok(self.rank() == self.rows)
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let Rref { matrix, rank, .. } = self.hstack(&Mat::identity(self.field, n)).rref();
        if rank < n || (0..n).any(|i| matrix.get(i, i) != 1) {
            return None;
        }
        Some(matrix.block(0, n, n, n))
    }

    /// Unit vectors `e_k` for the coordinates `k` not in the pivot set of
    /// `rref(self^T)`; together with the columns of `self` they span everything.
    pub fn complement_basis(&self) -> Mat {
        let pivots = self.transpose().rref().pivots;
        let free: Vec<usize> = (0..self.rows).filter(|c| !pivots.contains(c)).collect();
        let mut out = Mat::zeros(self.field, self.rows, free.len());
        for (j, &k) in free.iter().enumerate() {
            out.set(k, j, 1);
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Mat {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Mat::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> Fp {
        Fp::new(1009).unwrap()
    }

    fn m(rows: &[Vec<i64>]) -> Mat {
        Mat::from_rows(f(), rows).unwrap()
    }

    #[test]
    fn rref_identity_zero_duplicate() {
        let id = Mat::identity(f(), 3);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.pivots, vec![0, 1, 2]);
        assert_eq!(r.rank, 3);

        let z = Mat::zeros(f(), 2, 2);
        let r = z.rref();
        assert_eq!(r.matrix, z);
        assert!(r.pivots.is_empty());
        assert_eq!(r.rank, 0);

        let r = m(&[vec![1, 1], vec![1, 1]]).rref();
        assert_eq!(r.matrix, m(&[vec![1, 1], vec![0, 0]]));
        assert_eq!(r.pivots, vec![0]);
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn kernel_examples() {
        let k = m(&[vec![1, 1]]).kernel_basis();
        assert_eq!(k.cols(), 1);
        let (a, b) = (k.get(0, 0), k.get(1, 0));
        assert_ne!(a, 0);
        assert_eq!(f().mul(b, f().inv(a)), 1008);

        assert_eq!(Mat::identity(f(), 3).kernel_basis().cols(), 0);
        let k = Mat::zeros(f(), 2, 2).kernel_basis();
        assert_eq!(k.cols(), 2);
        assert_eq!(k.rank(), 2);
    }

    #[test]
    fn solve_examples() {
        let b = m(&[vec![3, 4], vec![5, 6]]);
        assert_eq!(Mat::identity(f(), 2).solve_right(&b).unwrap(), Some(b.clone()));

        let x = m(&[vec![1, 1]]).solve_right(&m(&[vec![2]])).unwrap().unwrap();
        assert_eq!(f().add(x.get(0, 0), x.get(1, 0)), 2);

        assert_eq!(m(&[vec![0, 0]]).solve_right(&m(&[vec![1]])).unwrap(), None);
        assert!(matches!(Mat::identity(f(), 2).solve_right(&m(&[vec![1]])), Err(Error::InvalidShape(_))));
    }

    #[test]
    fn invertibility() {
        assert!(Mat::identity(f(), 4).is_invertible().unwrap());
        assert!(!Mat::zeros(f(), 2, 2).is_invertible().unwrap());
        assert!(!m(&[vec![1, 1], vec![1, 1]]).is_invertible().unwrap());
        assert!(matches!(Mat::zeros(f(), 2, 3).is_invertible(), Err(Error::InvalidShape(_))));
        let a = m(&[vec![2, 1], vec![7, 5]]);
        assert_eq!(a.mul(&a.inverse().unwrap()), Mat::identity(f(), 2));
    }

    #[test]
    fn empty_shapes() {
        let e = Mat::zeros(f(), 0, 3);
        assert_eq!(e.kernel_basis().cols(), 3);
        let e = Mat::zeros(f(), 3, 0);
        assert_eq!(e.kernel_basis().cols(), 0);
        assert_eq!(e.rank(), 0);
        assert!(Mat::zeros(f(), 0, 0).is_invertible().unwrap());
    }

    #[test]
    fn complement_spans() {
        let u = m(&[vec![1], vec![1], vec![0]]);
        let c = u.complement_basis();
        assert_eq!(c.cols(), 2);
        assert_eq!(u.hstack(&c).rank(), 3);
    }
}
