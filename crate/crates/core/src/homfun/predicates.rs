use serde::{Deserialize, Serialize};

use super::dimension::iwanaga_gorenstein_degree;
use super::ext::{ext_dims, ext_to_regular, DEFAULT_BOUND};
use super::functors::{
    a_dual, ar_translate, ar_translate_inv, evaluation_map, nakayama_nu, nakayama_nu_inv, transpose,
};
use crate::error::{Error, Result};
use crate::modrep::{cosyzygy, decompose, is_injective, is_isomorphic, is_projective, regular_module, syzygy, Rep};

/// How reflexivity is decided; all three agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReflexiveMethod {
    /// `ev_M` is bijective.
    Evaluation,
    /// `M ≅ M**`.
    DoubleDualIso,
    /// `Ext¹(Tr M, A) = Ext²(Tr M, A) = 0`.
    ExtOfTranspose,
}

impl ReflexiveMethod {
    pub const ALL: [ReflexiveMethod; 3] =
        [ReflexiveMethod::Evaluation, ReflexiveMethod::DoubleDualIso, ReflexiveMethod::ExtOfTranspose];
}

pub fn is_torsionless(m: &Rep) -> bool {
    evaluation_map(m).is_injective()
}

pub fn is_reflexive(m: &Rep, method: ReflexiveMethod, seed: u64) -> Result<bool> {
    match method {
        ReflexiveMethod::Evaluation => Ok(evaluation_map(m).is_isomorphism()),
        ReflexiveMethod::DoubleDualIso => is_isomorphic(m, &a_dual(&a_dual(m)), seed),
        ReflexiveMethod::ExtOfTranspose => ext12_vanish(&transpose(m)),
    }
}

/// `Ext¹(X, A) = Ext²(X, A) = 0`.
pub fn ext12_vanish(x: &Rep) -> Result<bool> {
    Ok(ext_to_regular(x, 2)?.iter().all(|&d| d == 0))
}

fn require_indecomposable(m: &Rep, seed: u64) -> Result<()> {
    if decompose(m, seed)?.len() != 1 {
        return Err(Error::InvalidInput("module is zero or decomposable".into()));
    }
    Ok(())
}

/// `τ(X) ≅ νΩ²(X)` for an indecomposable non-projective `X`.
pub fn is_tau_perfect(m: &Rep, seed: u64) -> Result<bool> {
    if is_projective(m) {
        return Err(Error::InvalidInput("τ-perfectness is defined for non-projective modules".into()));
    }
    require_indecomposable(m, seed)?;
    tau_perfect_unchecked(m, seed)
}

pub(crate) fn tau_perfect_unchecked(m: &Rep, seed: u64) -> Result<bool> {
    is_isomorphic(&ar_translate(m), &nakayama_nu(&syzygy(m, 2)), seed)
}

/// `τ⁻¹(X) ≅ ν⁻¹Ω⁻²(X)` for an indecomposable non-injective `X`.
pub fn is_tau_inv_perfect(m: &Rep, seed: u64) -> Result<bool> {
    if is_injective(m) {
        return Err(Error::InvalidInput("τ⁻¹-perfectness is defined for non-injective modules".into()));
    }
    require_indecomposable(m, seed)?;
    tau_inv_perfect_unchecked(m, seed)
}

pub(crate) fn tau_inv_perfect_unchecked(m: &Rep, seed: u64) -> Result<bool> {
    is_isomorphic(&ar_translate_inv(m), &nakayama_nu_inv(&cosyzygy(m, 2)), seed)
}

/// Gorenstein projectivity over an Iwanaga-Gorenstein algebra of degree `n`:
/// `Ext^i(M, A) = 0` for `1 ≤ i ≤ n`.
pub fn is_gorenstein_projective(m: &Rep, bound: usize, seed: u64) -> Result<bool> {
    let n = iwanaga_gorenstein_degree(m.algebra(), bound, seed)?.ok_or(Error::NotGorenstein)?;
    gorenstein_projective_given_degree(m, n)
}

pub fn gorenstein_projective_given_degree(m: &Rep, n: usize) -> Result<bool> {
    if n == 0 {
        return Ok(true);
    }
    Ok(ext_dims(m, &regular_module(m.algebra()), n, n.max(DEFAULT_BOUND))?.iter().all(|&d| d == 0))
}
