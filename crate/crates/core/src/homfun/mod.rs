//! Homological functors and the predicates built from them.
//!
//! `Tr`, `(-)*`, `ν`, `ν⁻¹`, `τ` and `τ⁻¹` produce modules over the opposite
//! algebra or back; the predicates decide reflexivity, τ-perfectness,
//! Gorenstein projectivity and dominant dimension.

mod classify;
mod dimension;
mod ext;
mod faithful;
mod functors;
mod predicates;

pub use classify::{
    classify, describe, gorenstein_degree_or_none, indecomposables, join_labels, ClassReport, Settings,
    ENUMERATION_LIMIT,
};
pub use dimension::{
    dominant_dimension, dominant_dimension_algebra, injective_dimension, is_selfinjective, iwanaga_gorenstein_degree,
    self_injective_dimensions, DominantDimension, SelfInjectiveDimensions,
};
pub use ext::{ext_dim, ext_dims, ext_to_regular, Resolution, DEFAULT_BOUND};
pub use faithful::{f_restrict, minimal_faithful_proj_inj, projective_injective_vertices, Corner};
pub use functors::{
    a_dual, a_dual_with_basis, ar_translate, ar_translate_inv, evaluation_map, minimal_presentation, nakayama_nu,
    nakayama_nu_inv, transpose, DualModule, Presentation,
};
pub use predicates::{
    ext12_vanish, gorenstein_projective_given_degree, is_gorenstein_projective, is_reflexive, is_tau_inv_perfect,
    is_tau_perfect, is_torsionless, ReflexiveMethod,
};
pub(crate) use predicates::{tau_inv_perfect_unchecked, tau_perfect_unchecked};
