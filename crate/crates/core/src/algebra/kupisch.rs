use serde::{Deserialize, Serialize};

use super::{build_algebra, Algebra, AlgebraPresentation, Quiver, QuiverArrow, Relation};
use crate::error::{Error, Result};
use crate::field::Fp;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Linear,
    Cyclic,
}

/// Kupisch series `c_0, ..., c_{n-1}` of a Nakayama algebra with arrows
/// `a_i : i -> i+1` (indices mod `n` when cyclic); `c_i = dim e_i A`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KupischSeries {
    lengths: Vec<usize>,
    orientation: Orientation,
}

impl KupischSeries {
    pub fn new(lengths: Vec<usize>, orientation: Orientation) -> Result<Self> {
        let k = KupischSeries { lengths, orientation };
        k.validate()?;
        Ok(k)
    }

    fn validate(&self) -> Result<()> {
        let c = &self.lengths;
        let n = c.len();
        let bad = |msg: String| Err(Error::InvalidKupisch(msg));
        if n == 0 {
            return bad("empty series".into());
        }
        match self.orientation {
            Orientation::Cyclic => {
                if let Some(i) = (0..n).find(|&i| c[i] < 2) {
                    return bad(format!("cyclic series needs c_{i} >= 2"));
                }
                if let Some(i) = (0..n).find(|&i| c[(i + 1) % n] + 1 < c[i]) {
                    return bad(format!("c_{} < c_{} - 1", (i + 1) % n, i));
                }
            }
            Orientation::Linear => {
                if c[n - 1] != 1 {
                    return bad("linear series must end in 1".into());
                }
                if let Some(i) = (0..n - 1).find(|&i| c[i] < 2) {
                    return bad(format!("c_{i} = {} before the last vertex", c[i]));
                }
                if let Some(i) = (0..n - 1).find(|&i| c[i + 1] + 1 < c[i]) {
                    return bad(format!("c_{} < c_{} - 1", i + 1, i));
                }
            }
        }
        Ok(())
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn is_cyclic(&self) -> bool {
        self.orientation == Orientation::Cyclic
    }

    pub fn vertex_count(&self) -> usize {
        self.lengths.len()
    }

    /// Vertex reached from `i` along `k` arrows.
    pub fn shift(&self, i: usize, k: usize) -> usize {
        match self.orientation {
            Orientation::Cyclic => (i + k) % self.lengths.len(),
            Orientation::Linear => i + k,
        }
    }

    /// Short label such as `L[2,2,2,1]` or `C[3,3,4]`.
    pub fn label(&self) -> String {
        let tag = if self.is_cyclic() { 'C' } else { 'L' };
        let body: Vec<String> = self.lengths.iter().map(|c| c.to_string()).collect();
        format!("{tag}[{}]", body.join(","))
    }

    /// Quiver `a_i : i -> i+1` with all paths of length `c_i` from `i` as relations.
    pub fn presentation(&self, field: Fp) -> AlgebraPresentation {
        let n = self.lengths.len();
        let arrow_count = if self.is_cyclic() { n } else { n - 1 };
        let arrows: Vec<QuiverArrow> = (0..arrow_count)
            .map(|i| QuiverArrow { name: format!("a{i}"), source: i, target: self.shift(i, 1) })
            .collect();
        let relations = (0..n)
            .filter_map(|i| {
                let c = self.lengths[i];
                let fits = self.is_cyclic() || i + c < n;
                fits.then(|| Relation::monomial((0..c).map(|k| format!("a{}", self.shift(i, k)))))
            })
            .collect();
        let mut p = AlgebraPresentation::new(field, self.label(), Quiver { vertex_count: n, arrows }, relations);
        p.max_path_length = p.max_path_length.max(self.lengths.iter().copied().max().unwrap_or(0) + 1);
        p.kupisch = Some(self.clone());
        p
    }

    pub fn algebra(&self, field: Fp) -> Result<Algebra> {
        build_algebra(&self.presentation(field))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_presentations() {
        let k = KupischSeries::new(vec![2, 2, 2, 1], Orientation::Linear).unwrap();
        let p = k.presentation(Fp::default());
        assert_eq!(p.quiver.vertex_count, 4);
        assert_eq!(p.quiver.arrows.len(), 3);
        let rels: Vec<Vec<String>> = p.relations.iter().map(|r| r.terms[0].1.clone()).collect();
        assert_eq!(rels, vec![vec!["a0", "a1"], vec!["a1", "a2"]]);
        assert_eq!(k.algebra(Fp::default()).unwrap().dim(), 7);

        let k = KupischSeries::new(vec![3, 3, 4], Orientation::Cyclic).unwrap();
        let p = k.presentation(Fp::default());
        let rels: Vec<Vec<String>> = p.relations.iter().map(|r| r.terms[0].1.clone()).collect();
        assert_eq!(rels, vec![vec!["a0", "a1", "a2"], vec!["a1", "a2", "a0"], vec!["a2", "a0", "a1", "a2"]]);
        assert_eq!(k.algebra(Fp::default()).unwrap().dim(), 10);
    }

    #[test]
    fn invalid_series() {
        assert!(matches!(KupischSeries::new(vec![3, 1], Orientation::Linear), Err(Error::InvalidKupisch(_))));
        assert!(KupischSeries::new(vec![2, 2], Orientation::Linear).is_err());
        assert!(KupischSeries::new(vec![2, 1], Orientation::Cyclic).is_err());
        assert!(KupischSeries::new(vec![4, 2], Orientation::Cyclic).is_err());
        assert!(KupischSeries::new(vec![], Orientation::Cyclic).is_err());
        assert!(KupischSeries::new(vec![1], Orientation::Linear).is_ok());
        assert!(KupischSeries::new(vec![2], Orientation::Cyclic).is_ok());
    }
}
