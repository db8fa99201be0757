use rayon::prelude::*;
use serde::Serialize;

use super::dimension::{dominant_dimension, iwanaga_gorenstein_degree, DominantDimension};
use super::ext::{ext_to_regular, DEFAULT_BOUND};
use super::functors::{ar_translate, ar_translate_inv, evaluation_map, transpose};
use super::predicates::{gorenstein_projective_given_degree, tau_inv_perfect_unchecked, tau_perfect_unchecked};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::modrep::{
    decompose, injective_module, is_injective, is_isomorphic, is_projective, k_dual, nakayama_indecomposables,
    nakayama_label, projective_module, Labeled, Rep,
};

/// Every homological invariant of one indecomposable module.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub label: String,
    pub dims: Vec<usize>,
    pub projective: bool,
    pub injective: bool,
    #[serde(rename = "ext1_A")]
    pub ext1_a: usize,
    #[serde(rename = "ext2_A")]
    pub ext2_a: usize,
    pub tr_reflexive: bool,
    /// Absent for projective modules.
    pub tau_perfect: Option<bool>,
    /// Absent for injective modules.
    pub tau_inv_perfect: Option<bool>,
    pub reflexive: bool,
    pub torsionless: bool,
    /// Absent when the algebra is not Iwanaga-Gorenstein within the bound.
    pub gorenstein_projective: Option<bool>,
    pub dominant_dim: DominantDimension,
}

/// Seed and bound shared by the randomized and iterative procedures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Settings {
    pub seed: u64,
    pub bound: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { seed: 0, bound: DEFAULT_BOUND }
    }
}

/// Iwanaga-Gorenstein degree, treating an undecided walk as "not known to be IG".
pub fn gorenstein_degree_or_none(a: &Algebra, settings: Settings) -> Result<Option<usize>> {
    match iwanaga_gorenstein_degree(a, settings.bound, settings.seed) {
        Err(Error::BoundExceeded(_)) => Ok(None),
        other => other,
    }
}

/// One report per module; the modules should be indecomposable.
pub fn classify(modules: &[Labeled], settings: Settings) -> Result<Vec<ClassReport>> {
    let Some(first) = modules.first() else {
        return Ok(Vec::new());
    };
    let degree = gorenstein_degree_or_none(first.module.algebra(), settings)?;
    modules.par_iter().map(|x| classify_one(x, degree, settings)).collect()
}

fn classify_one(x: &Labeled, degree: Option<usize>, settings: Settings) -> Result<ClassReport> {
    let m = &x.module;
    let seed = settings.seed;
    let projective = is_projective(m);
    let injective = is_injective(m);
    let ext = ext_to_regular(m, 2)?;
    let ev = evaluation_map(m);
    Ok(ClassReport {
        label: x.label.clone(),
        dims: m.dims().to_vec(),
        projective,
        injective,
        ext1_a: ext[0],
        ext2_a: ext[1],
        tr_reflexive: evaluation_map(&transpose(m)).is_isomorphism(),
        tau_perfect: if projective { None } else { Some(tau_perfect_unchecked(m, seed)?) },
        tau_inv_perfect: if injective { None } else { Some(tau_inv_perfect_unchecked(m, seed)?) },
        reflexive: ev.is_isomorphism(),
        torsionless: ev.is_injective(),
        gorenstein_projective: match degree {
            Some(n) => Some(gorenstein_projective_given_degree(m, n)?),
            None => None,
        },
        dominant_dim: dominant_dimension(m, settings.bound, seed)?,
    })
}

/// Largest number of indecomposables collected by [`indecomposables`] for
/// algebras that are not Nakayama.
pub const ENUMERATION_LIMIT: usize = 512;

/// Representatives of the indecomposable modules.
///
/// Nakayama algebras use their uniserial modules `PJ(i,k)`; over an opposite
/// algebra the duals of the indecomposables of the original are returned.
/// Otherwise the τ-orbits of the indecomposable projectives and injectives are
/// followed, which finds every indecomposable of a representation-directed
/// algebra; more than [`ENUMERATION_LIMIT`] classes is reported as
/// `BoundExceeded`.
pub fn indecomposables(a: &Algebra, seed: u64) -> Result<Vec<Labeled>> {
    if a.is_opposite_side() {
        return Ok(indecomposables(&a.opposite(), seed)?
            .into_iter()
            .map(|x| Labeled { label: format!("D({})", x.label), module: k_dual(&x.module) })
            .collect());
    }
    if a.kupisch().is_some() {
        return nakayama_indecomposables(a);
    }
    let mut found: Vec<Labeled> = Vec::new();
    // (module, base label, τ-shift)
    let mut queue: Vec<(Rep, String, i64)> = Vec::new();
    for i in 0..a.vertex_count() {
        queue.push((projective_module(a, i)?, format!("P({i})"), 0));
    }
    for i in 0..a.vertex_count() {
        queue.push((injective_module(a, i)?, format!("I({i})"), 0));
    }
    let mut head = 0;
    while head < queue.len() {
        let (m, base, shift) = queue[head].clone();
        head += 1;
        let mut known = false;
        for y in &found {
            if is_isomorphic(&y.module, &m, seed)? {
                known = true;
                break;
            }
        }
        if known {
            continue;
        }
        if found.len() == ENUMERATION_LIMIT {
            return Err(Error::BoundExceeded(format!("more than {ENUMERATION_LIMIT} indecomposables")));
        }
        let label = match shift {
            0 => base.clone(),
            k => format!("τ^{k} {base}"),
        };
        found.push(Labeled { label, module: m.clone() });
        for piece in decompose(&ar_translate_inv(&m), seed)? {
            queue.push((piece, base.clone(), shift - 1));
        }
        for piece in decompose(&ar_translate(&m), seed)? {
            queue.push((piece, base.clone(), shift + 1));
        }
    }
    Ok(found)
}

/// Text label of a module: sorted `PJ(i,k)` summands over a Nakayama algebra,
/// `D(PJ(i,k))` summands over its opposite, otherwise the dimension vector.
pub fn describe(m: &Rep, seed: u64) -> Result<Vec<String>> {
    let a = m.algebra();
    if a.kupisch().is_some() {
        return nakayama_label(m, seed);
    }
    if a.is_opposite_side() && a.opposite().kupisch().is_some() {
        let mut labels = Vec::new();
        for piece in decompose(m, seed)? {
            for l in nakayama_label(&k_dual(&piece), seed)? {
                labels.push(format!("D({l})"));
            }
        }
        labels.sort();
        return Ok(labels);
    }
    if m.is_zero() {
        return Ok(Vec::new());
    }
    let mut labels: Vec<String> = decompose(m, seed)?.iter().map(|p| format!("{:?}", p.dims())).collect();
    labels.sort();
    Ok(labels)
}

/// Joins summand labels with `⊕`; the zero module is `0`.
pub fn join_labels(labels: &[String]) -> String {
    if labels.is_empty() {
        "0".to_string()
    } else {
        labels.join("⊕")
    }
}
