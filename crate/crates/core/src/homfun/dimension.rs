//! Injective and dominant dimensions, Iwanaga-Gorenstein detection.
//!
//! Both dimensions are read off the minimal injective coresolution. Since
//! `Ω⁻¹` and the injective envelope are additive, it is enough to follow the
//! set of isomorphism classes of indecomposable summands of `Ω⁻ᵏ M`. That set
//! determines the next one, so a repeated set proves the walk never stops.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::modrep::{
    cosyzygy, decompose, injective_envelope, is_injective, is_isomorphic, is_projective, regular_module, Rep,
};

enum Walk {
    /// The predicate held at this level.
    Stopped(usize),
    /// `Ω⁻ᵏ M = 0` at this level without the predicate holding before.
    Vanished(usize),
    /// The class sets repeat, so the predicate never holds.
    Periodic,
    /// `bound` levels were inspected without a decision.
    Exceeded,
}

/// Walks the levels `Ω⁻ᵏ M`, `k = 0..=bound`, calling `stop` on the
/// indecomposable summands (one per isomorphism class) of each level.
fn walk_cosyzygies(m: &Rep, bound: usize, seed: u64, mut stop: impl FnMut(&[Rep]) -> bool) -> Result<Walk> {
    let mut classes: Vec<Rep> = Vec::new();
    let class_of = |x: Rep, classes: &mut Vec<Rep>| -> Result<usize> {
        for (i, c) in classes.iter().enumerate() {
            if is_isomorphic(c, &x, seed)? {
                return Ok(i);
            }
        }
        classes.push(x);
        Ok(classes.len() - 1)
    };
    let mut seen: Vec<Vec<usize>> = Vec::new();
    let mut level: Vec<usize> = Vec::new();
    for piece in decompose(m, seed)? {
        level.push(class_of(piece, &mut classes)?);
    }
    level.sort_unstable();
    level.dedup();
    for k in 0..=bound {
        if level.is_empty() {
            return Ok(Walk::Vanished(k));
        }
        let reps: Vec<Rep> = level.iter().map(|&i| classes[i].clone()).collect();
        if stop(&reps) {
            return Ok(Walk::Stopped(k));
        }
        if seen.contains(&level) {
            return Ok(Walk::Periodic);
        }
        seen.push(level.clone());
        let mut next = Vec::new();
        for x in &reps {
            for piece in decompose(&cosyzygy(x, 1), seed)? {
                next.push(class_of(piece, &mut classes)?);
            }
        }
        next.sort_unstable();
        next.dedup();
        level = next;
    }
    Ok(Walk::Exceeded)
}

/// Injective dimension: `Some(n)` for the least `n` with `Ω⁻ⁿ M` injective,
/// `None` when the coresolution provably never stops. The zero module gets 0.
pub fn injective_dimension(m: &Rep, bound: usize, seed: u64) -> Result<Option<usize>> {
    match walk_cosyzygies(m, bound, seed, |xs| xs.iter().all(is_injective))? {
        Walk::Stopped(k) | Walk::Vanished(k) => Ok(Some(k)),
        Walk::Periodic => Ok(None),
        Walk::Exceeded => Err(Error::BoundExceeded(format!("injective coresolution longer than {bound}"))),
    }
}

pub fn is_selfinjective(a: &Algebra) -> bool {
    is_injective(&regular_module(a))
}

/// Injective dimensions of `A_A` and of the regular `A^op`-module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SelfInjectiveDimensions {
    pub right: Option<usize>,
    pub left: Option<usize>,
}

impl SelfInjectiveDimensions {
    /// The common finite value, if both are finite and equal.
    pub fn gorenstein_degree(&self) -> Option<usize> {
        match (self.right, self.left) {
            (Some(r), Some(l)) if r == l => Some(r),
            _ => None,
        }
    }
}

pub fn self_injective_dimensions(a: &Algebra, bound: usize, seed: u64) -> Result<SelfInjectiveDimensions> {
    Ok(SelfInjectiveDimensions {
        right: injective_dimension(&regular_module(a), bound, seed)?,
        left: injective_dimension(&regular_module(&a.opposite()), bound, seed)?,
    })
}

/// `Some(n)` when `A` is `n`-Iwanaga-Gorenstein.
pub fn iwanaga_gorenstein_degree(a: &Algebra, bound: usize, seed: u64) -> Result<Option<usize>> {
    Ok(self_injective_dimensions(a, bound, seed)?.gorenstein_degree())
}

/// Dominant dimension, possibly infinite or only bounded below.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DominantDimension {
    Finite(usize),
    /// Every term inspected up to the bound was projective.
    AtLeast(usize),
    Infinite,
}

impl DominantDimension {
    /// Whether the dimension is known to be at least `k`.
    pub fn at_least(self, k: usize) -> bool {
        match self {
            DominantDimension::Finite(d) | DominantDimension::AtLeast(d) => d >= k,
            DominantDimension::Infinite => true,
        }
    }
}

impl fmt::Display for DominantDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DominantDimension::Finite(d) => write!(f, "{d}"),
            DominantDimension::AtLeast(b) => write!(f, ">={b}"),
            DominantDimension::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for DominantDimension {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            DominantDimension::Finite(d) => s.serialize_u64(*d as u64),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

/// Number of initial projective terms in the minimal injective coresolution.
pub fn dominant_dimension(m: &Rep, bound: usize, seed: u64) -> Result<DominantDimension> {
    let walk = walk_cosyzygies(m, bound, seed, |xs| xs.iter().any(|x| !is_projective(&injective_envelope(x).0)))?;
    Ok(match walk {
        Walk::Stopped(k) => DominantDimension::Finite(k),
        Walk::Vanished(_) | Walk::Periodic => DominantDimension::Infinite,
        Walk::Exceeded => DominantDimension::AtLeast(bound),
    })
}

pub fn dominant_dimension_algebra(a: &Algebra, bound: usize, seed: u64) -> Result<DominantDimension> {
    dominant_dimension(&regular_module(a), bound, seed)
}
