//! Homological algebra of finite-dimensional algebras over prime fields.
//!
//! The crate builds basic algebras from quivers with relations (or from a
//! Kupisch series), represents right modules by matrices, and computes the
//! classical functors of Auslander-Reiten theory: syzygies and cosyzygies, the
//! Auslander-Bridger transpose `Tr`, the dualities `D` and `(-)* = Hom(-, A)`,
//! the Nakayama functors, the translates `τ = D Tr` and `τ⁻¹ = Tr D`, and Ext
//! groups. On top of that it decides reflexivity, τ-perfectness
//! (`τ(X) ≅ νΩ²(X)`), Gorenstein projectivity and dominant dimension.

pub mod algebra;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod field;
pub mod homfun;
pub mod mat;
pub mod modrep;
pub mod oracle;
pub mod schema;
pub mod verify;

pub use algebra::{Algebra, AlgebraPresentation, KupischSeries, Orientation};
pub use error::{Error, Result};
pub use field::Fp;
pub use mat::Mat;
