//! Bound quiver presentations and the residue-path basis construction.

use std::collections::{HashMap, HashSet};

use super::{Algebra, Arrow, BasisElem, KupischSeries};
use crate::error::{Error, Result};
use crate::field::Fp;
use crate::mat::Mat;

pub const DEFAULT_MAX_PATH_LENGTH: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverArrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    pub vertex_count: usize,
    pub arrows: Vec<QuiverArrow>,
}

impl Quiver {
    pub fn validate(&self) -> Result<()> {
        let mut seen = HashSet::new();
        for a in &self.arrows {
            if !seen.insert(a.name.as_str()) {
                return Err(Error::InvalidInput(format!("duplicate arrow name {}", a.name)));
            }
            if a.source >= self.vertex_count || a.target >= self.vertex_count {
                return Err(Error::InvalidVertex(a.source.max(a.target)));
            }
        }
        Ok(())
    }
}

/// A linear combination of parallel paths, each given by arrow names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(i64, Vec<String>)>,
}

impl Relation {
    pub fn monomial<S: Into<String>>(path: impl IntoIterator<Item = S>) -> Self {
        Relation { terms: vec![(1, path.into_iter().map(Into::into).collect())] }
    }
}

#[derive(Debug, Clone)]
pub struct AlgebraPresentation {
    pub field: Fp,
    pub label: String,
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    pub max_path_length: usize,
    pub(crate) kupisch: Option<KupischSeries>,
}

impl AlgebraPresentation {
    pub fn new(field: Fp, label: impl Into<String>, quiver: Quiver, relations: Vec<Relation>) -> Self {
        AlgebraPresentation {
            field,
            label: label.into(),
            quiver,
            relations,
            max_path_length: DEFAULT_MAX_PATH_LENGTH,
            kupisch: None,
        }
    }
}

/// A relation resolved to arrow indices, with coefficients in `F_p`.
struct ResolvedRelation {
    source: usize,
    len: usize,
    terms: Vec<(u32, Vec<usize>)>,
}

fn resolve(p: &AlgebraPresentation) -> Result<Vec<ResolvedRelation>> {
    let by_name: HashMap<&str, usize> = p.quiver.arrows.iter().enumerate().map(|(i, a)| (a.name.as_str(), i)).collect();
    let mut out = Vec::new();
    for (ri, rel) in p.relations.iter().enumerate() {
        let mut terms = Vec::new();
        let mut ends: Option<(usize, usize, usize)> = None;
        for (coef, path) in &rel.terms {
            if path.len() < 2 {
                return Err(Error::NotAdmissible(format!("relation {ri} has a term of length {}", path.len())));
            }
            let arrows = path
                .iter()
                .map(|n| {
                    by_name.get(n.as_str()).copied().ok_or_else(|| Error::InvalidInput(format!("unknown arrow {n}")))
                })
                .collect::<Result<Vec<_>>>()?;
            for w in arrows.windows(2) {
                if p.quiver.arrows[w[0]].target != p.quiver.arrows[w[1]].source {
                    return Err(Error::InvalidInput(format!("relation {ri}: path {path:?} is not composable")));
                }
            }
            let s = p.quiver.arrows[arrows[0]].source;
            let t = p.quiver.arrows[*arrows.last().unwrap()].target;
            match ends {
                None => ends = Some((s, t, arrows.len())),
                Some((s0, t0, l0)) => {
                    if (s0, t0) != (s, t) {
                        return Err(Error::NotAdmissible(format!("relation {ri} mixes non-parallel paths")));
                    }
                    if l0 != arrows.len() {
                        return Err(Error::NotAdmissible(format!("relation {ri} is not homogeneous")));
                    }
                }
            }
            let c = p.field.from_i64(*coef);
            if c != 0 {
                terms.push((c, arrows));
            }
        }
        if let Some((source, _, len)) = ends {
            if !terms.is_empty() {
                out.push(ResolvedRelation { source, len, terms });
            }
        }
    }
    Ok(out)
}

/// Builds the residue-path basis and multiplication table of `kQ / I`.
///
/// Degree `L` of the quotient is `(A_{L-1} ⊗ kQ_1) / W_L`, where `W_L` is
/// spanned by `u·r` for relations `r` of length `l ≤ L` and basis paths `u` of
/// length `L - l`; everything of the form `u·r·v` with `v` nontrivial already
/// vanishes in `A_{L-1} ⊗ kQ_1`. Basis representatives are chosen as the
/// earliest candidate paths.
pub fn build_algebra(p: &AlgebraPresentation) -> Result<Algebra> {
    p.quiver.validate()?;
    let field = p.field;
    let rels = resolve(p)?;
    let n = p.quiver.vertex_count;
    let qa = &p.quiver.arrows;

    let mut basis: Vec<BasisElem> = (0..n)
        .map(|i| BasisElem { source: i, target: i, length: 0, label: format!("e{i}"), word: vec![(1, Vec::new())] })
        .collect();
    let mut paths: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut layers: Vec<Vec<usize>> = vec![(0..n).collect()];
    // normal form of (basis element) * (arrow), in basis indices of the next layer
    let mut rmul: HashMap<(usize, usize), Vec<(usize, u32)>> = HashMap::new();

    let times_arrow = |rmul: &HashMap<(usize, usize), Vec<(usize, u32)>>, v: &[(usize, u32)], a: usize| {
        let mut acc: HashMap<usize, u32> = HashMap::new();
        for &(b, c) in v {
            if let Some(img) = rmul.get(&(b, a)) {
                for &(k, d) in img {
                    let e = acc.entry(k).or_insert(0);
                    *e = field.add(*e, field.mul(c, d));
                }
            }
        }
        let mut out: Vec<(usize, u32)> = acc.into_iter().filter(|&(_, c)| c != 0).collect();
        out.sort_unstable();
        out
    };

    let mut length = 1;
    loop {
        let prev = layers[length - 1].clone();
        let mut cands: Vec<(usize, usize)> = Vec::new();
        for &b in &prev {
            for (ai, a) in qa.iter().enumerate() {
                if a.source == basis[b].target {
                    cands.push((b, ai));
                }
            }
        }
        if cands.is_empty() {
            break;
        }
        if length > p.max_path_length {
            return Err(Error::BoundExceeded(format!(
                "nonzero paths of length {} survive (max_path_length = {})",
                length, p.max_path_length
            )));
        }
        let col_of: HashMap<(usize, usize), usize> = cands.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let nc = cands.len();
        // columns reversed so that later candidates become pivots and earlier ones survive
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for r in rels.iter().filter(|r| r.len <= length) {
            for &u in &layers[length - r.len] {
                if basis[u].target != r.source {
                    continue;
                }
                let mut row = vec![0u32; nc];
                for (c, path) in &r.terms {
                    let mut v = vec![(u, 1u32)];
                    for &a in &path[..path.len() - 1] {
                        v = times_arrow(&rmul, &v, a);
                    }
                    let last = *path.last().unwrap();
                    for (b, d) in v {
                        let col = nc - 1 - col_of[&(b, last)];
                        row[col] = field.add(row[col], field.mul(*c, d));
                    }
                }
                if row.iter().any(|&x| x != 0) {
                    rows.push(row);
                }
            }
        }
        let (rref, pivots) = if rows.is_empty() {
            (Mat::zeros(field, 0, nc), Vec::new())
        } else {
            let r = Mat::from_vec(field, rows.len(), nc, rows.concat()).rref();
            (r.matrix, r.pivots)
        };
        let pivot_cands: HashSet<usize> = pivots.iter().map(|&c| nc - 1 - c).collect();
        let mut new_index = HashMap::new();
        let mut layer = Vec::new();
        for (ci, &(b, a)) in cands.iter().enumerate() {
            if pivot_cands.contains(&ci) {
                continue;
            }
            let idx = basis.len();
            let mut path = paths[b].clone();
            path.push(a);
            let label = path.iter().map(|&x| qa[x].name.as_str()).collect::<String>();
            basis.push(BasisElem {
                source: basis[b].source,
                target: qa[a].target,
                length,
                label,
                word: vec![(1, path.clone())],
            });
            paths.push(path);
            new_index.insert(ci, idx);
            layer.push(idx);
        }
        for (ci, &(b, a)) in cands.iter().enumerate() {
            if let Some(&idx) = new_index.get(&ci) {
                rmul.insert((b, a), vec![(idx, 1)]);
            }
        }
        for (r, &pc) in pivots.iter().enumerate() {
            let ci = nc - 1 - pc;
            let mut img = Vec::new();
            for col in pc + 1..nc {
                let c = rref.get(r, col);
                if c != 0 {
                    let cj = nc - 1 - col;
                    img.push((new_index[&cj], field.neg(c)));
                }
            }
            img.sort_unstable();
            rmul.insert(cands[ci], img);
        }
        if layer.is_empty() {
            break;
        }
        layers.push(layer);
        length += 1;
    }
    let d = basis.len();
    let mut mult = vec![Vec::new(); d * d];
    for x in 0..d {
        for y in 0..d {
            if basis[x].target != basis[y].source {
                continue;
            }
            let mut v = vec![(x, 1u32)];
            for &a in &paths[y] {
                v = times_arrow(&rmul, &v, a);
            }
            mult[x * d + y] = v;
        }
    }
    let arrows: Vec<Arrow> = qa
        .iter()
        .enumerate()
        .map(|(i, a)| Arrow {
            name: a.name.clone(),
            source: a.source,
            target: a.target,
            basis: paths.iter().position(|pth| pth.as_slice() == [i]).expect("arrows survive admissible relations"),
        })
        .collect();
    Ok(Algebra::from_parts(field, p.label.clone(), n, arrows, basis, mult, p.kupisch.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> Fp {
        Fp::default()
    }

    fn arrow(name: &str, s: usize, t: usize) -> QuiverArrow {
        QuiverArrow { name: name.into(), source: s, target: t }
    }

    #[test]
    fn a2_path_algebra() {
        let q = Quiver { vertex_count: 2, arrows: vec![arrow("a", 0, 1)] };
        let a = build_algebra(&AlgebraPresentation::new(f(), "A2", q, vec![])).unwrap();
        assert_eq!(a.dim(), 3);
        assert!(a.is_associative());
    }

    #[test]
    fn loop_without_relations_is_infinite() {
        let q = Quiver { vertex_count: 1, arrows: vec![arrow("x", 0, 0)] };
        let mut p = AlgebraPresentation::new(f(), "loop", q, vec![]);
        assert!(matches!(build_algebra(&p), Err(Error::BoundExceeded(_))));
        p.relations.push(Relation::monomial(["x", "x", "x"]));
        assert_eq!(build_algebra(&p).unwrap().dim(), 3);
    }

    #[test]
    fn commutative_square() {
        let q = Quiver {
            vertex_count: 4,
            arrows: vec![arrow("a", 0, 1), arrow("b", 0, 2), arrow("c", 1, 3), arrow("d", 2, 3)],
        };
        let rel = Relation { terms: vec![(1, vec!["a".into(), "c".into()]), (-1, vec!["b".into(), "d".into()])] };
        let a = build_algebra(&AlgebraPresentation::new(f(), "square", q, vec![rel])).unwrap();
        // e0..e3, a, b, c, d, one surviving length-2 path
        assert_eq!(a.dim(), 9);
        assert!(a.is_associative());
        assert!(a.idempotents_are_complete());
        // ac = bd in the quotient
        let ac = a.mul_elems(&unit(a.dim(), a.arrows()[0].basis), &unit(a.dim(), a.arrows()[2].basis));
        let bd = a.mul_elems(&unit(a.dim(), a.arrows()[1].basis), &unit(a.dim(), a.arrows()[3].basis));
        assert_eq!(ac, bd);
        assert!(ac.iter().any(|&c| c != 0));
    }

    fn unit(d: usize, i: usize) -> Vec<u32> {
        let mut v = vec![0; d];
        v[i] = 1;
        v
    }

    #[test]
    fn rejects_bad_relations() {
        let q = Quiver { vertex_count: 3, arrows: vec![arrow("a", 0, 1), arrow("b", 1, 2), arrow("c", 0, 2)] };
        let short = AlgebraPresentation::new(f(), "x", q.clone(), vec![Relation::monomial(["a"])]);
        assert!(matches!(build_algebra(&short), Err(Error::NotAdmissible(_))));
        let mixed = Relation { terms: vec![(1, vec!["a".into(), "b".into()]), (1, vec!["c".into()])] };
        let mixed = AlgebraPresentation::new(f(), "x", q.clone(), vec![mixed]);
        assert!(matches!(build_algebra(&mixed), Err(Error::NotAdmissible(_))));
        let broken = AlgebraPresentation::new(f(), "x", q, vec![Relation::monomial(["b", "a"])]);
        assert!(matches!(build_algebra(&broken), Err(Error::InvalidInput(_))));
    }
}
