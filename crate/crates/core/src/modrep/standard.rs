use super::{decompose, top, ModMap, Rep};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::mat::Mat;

/// A module together with a display label such as `PJ(0,1)`.
#[derive(Debug, Clone)]
pub struct Labeled {
    pub label: String,
    pub module: Rep,
}

fn check_vertex(a: &Algebra, i: usize) -> Result<()> {
    if i >= a.vertex_count() {
        return Err(Error::InvalidVertex(i));
    }
    Ok(())
}

pub fn simple_module(a: &Algebra, i: usize) -> Result<Rep> {
    check_vertex(a, i)?;
    let mut dims = vec![0; a.vertex_count()];
    dims[i] = 1;
    let f = a.field();
    let action = a.arrows().iter().map(|ar| Mat::zeros(f, dims[ar.target], dims[ar.source])).collect();
    Ok(Rep::from_parts(a, dims, action))
}

/// `⊕_s e_{tops[s]} A`. At vertex `v` the coordinates list, summand by
/// summand, the basis elements of `e_{tops[s]} A e_v` in increasing order.
pub fn projective_sum(a: &Algebra, tops: &[usize]) -> Result<Rep> {
    for &t in tops {
        check_vertex(a, t)?;
    }
    let f = a.field();
    let n = a.vertex_count();
    let dims: Vec<usize> = (0..n).map(|v| tops.iter().map(|&t| a.between(t, v).len()).sum()).collect();
    let action = a
        .arrows()
        .iter()
        .map(|ar| {
            let mut m = Mat::zeros(f, dims[ar.target], dims[ar.source]);
            let (mut row0, mut col0) = (0, 0);
            for &t in tops {
                let src = a.between(t, ar.source);
                let dst = a.between(t, ar.target);
                for (c, &b) in src.iter().enumerate() {
                    for &(k, coef) in a.mult(b, ar.basis) {
                        let r = dst.iter().position(|&x| x == k).expect("product stays in e_t A");
                        m.set(row0 + r, col0 + c, coef);
                    }
                }
                row0 += dst.len();
                col0 += src.len();
            }
            m
        })
        .collect();
    Ok(Rep::from_parts(a, dims, action))
}

pub fn projective_module(a: &Algebra, i: usize) -> Result<Rep> {
    projective_sum(a, &[i])
}

pub fn regular_module(a: &Algebra) -> Rep {
    let tops: Vec<usize> = (0..a.vertex_count()).collect();
    projective_sum(a, &tops).expect("vertices in range")
}

/// The map `⊕_s e_{tops[s]} A -> M` sending the generator `e_{tops[s]}` of
/// summand `s` to `images[s] ∈ M e_{tops[s]}`.
pub(crate) fn map_from_projective_sum(tops: &[usize], images: &[Vec<u32>], target: &Rep) -> ModMap {
    let a = target.algebra();
    let f = a.field();
    let source = projective_sum(a, tops).expect("vertices in range");
    let acts: Vec<Mat> = (0..a.dim()).map(|b| target.basis_action(b)).collect();
    let blocks = (0..a.vertex_count())
        .map(|v| {
            let mut m = Mat::zeros(f, target.dims()[v], source.dims()[v]);
            let mut col = 0;
            for (s, &t) in tops.iter().enumerate() {
                for &b in a.between(t, v) {
                    let img = acts[b].mul_vec(&images[s]);
                    for (r, x) in img.into_iter().enumerate() {
                        m.set(r, col, x);
                    }
                    col += 1;
                }
            }
            m
        })
        .collect();
    ModMap { source, target: target.clone(), blocks }
}

/// Vector-space dual `D = Hom_k(-, k)`, a module over the opposite algebra.
pub fn k_dual(m: &Rep) -> Rep {
    let action = m.actions().iter().map(Mat::transpose).collect();
    Rep::from_parts(&m.algebra().opposite(), m.dims().to_vec(), action)
}

/// `D(f) : D(target) -> D(source)`.
pub(crate) fn k_dual_map(f: &ModMap) -> ModMap {
    ModMap {
        source: k_dual(&f.target),
        target: k_dual(&f.source),
        blocks: f.blocks.iter().map(Mat::transpose).collect(),
    }
}

/// `I_i = D(A e_i)`.
pub fn injective_module(a: &Algebra, i: usize) -> Result<Rep> {
    Ok(k_dual(&projective_module(&a.opposite(), i)?))
}

fn pj_dims(a: &Algebra, i: usize, k: usize) -> Vec<usize> {
    let kup = a.kupisch().expect("Nakayama algebra");
    let mut dims = vec![0; a.vertex_count()];
    for j in 0..k {
        dims[kup.shift(i, j)] += 1;
    }
    dims
}

/// The uniserial module `e_i A / e_i J^k` of a Nakayama algebra.
pub fn uniserial_module(a: &Algebra, i: usize, k: usize) -> Result<Rep> {
    let kup = a.kupisch().ok_or(Error::NotNakayama)?;
    check_vertex(a, i)?;
    if k == 0 || k > kup.lengths()[i] {
        return Err(Error::InvalidInput(format!("PJ({i},{k}) needs 1 <= k <= {}", kup.lengths()[i])));
    }
    let p = projective_module(a, i)?;
    let f = a.field();
    let deep: Vec<Mat> = (0..a.vertex_count())
        .map(|v| {
            let elems = a.between(i, v);
            let rows: Vec<usize> = (0..elems.len()).filter(|&r| a.basis()[elems[r]].length >= k).collect();
            let mut m = Mat::zeros(f, elems.len(), rows.len());
            for (j, &r) in rows.iter().enumerate() {
                m.set(r, j, 1);
            }
            m
        })
        .collect();
    Ok(p.quotient(&deep).0)
}

/// All indecomposables `e_i A / e_i J^k` (`1 ≤ k ≤ c_i`) of a Nakayama
/// algebra, labelled `PJ(i,k)`.
pub fn nakayama_indecomposables(a: &Algebra) -> Result<Vec<Labeled>> {
    let kup = a.kupisch().ok_or(Error::NotNakayama)?;
    let mut out = Vec::new();
    for (i, &c) in kup.lengths().iter().enumerate() {
        for k in 1..=c {
            out.push(Labeled { label: format!("PJ({i},{k})"), module: uniserial_module(a, i, k)? });
        }
    }
    Ok(out)
}

/// Labels of the indecomposable summands of a module over a Nakayama
/// algebra, sorted; the zero module gets an empty list.
pub fn nakayama_label(m: &Rep, seed: u64) -> Result<Vec<String>> {
    let a = m.algebra();
    if a.kupisch().is_none() {
        return Err(Error::NotNakayama);
    }
    let mut labels = Vec::new();
    for piece in decompose(m, seed)? {
        let t = top(&piece);
        let tops: Vec<usize> = (0..a.vertex_count()).filter(|&v| t.dims()[v] > 0).collect();
        let k = piece.total_dim();
        let fits = t.total_dim() == 1 && k <= a.kupisch().unwrap().lengths()[tops[0]];
        if !fits || pj_dims(a, tops[0], k) != piece.dims() {
            return Err(Error::InvalidInput("summand is not uniserial".into()));
        }
        labels.push(format!("PJ({},{})", tops[0], k));
    }
    labels.sort();
    Ok(labels)
}
