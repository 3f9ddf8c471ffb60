//! Exact Poincaré series of finitely generated positive cancellative
//! commutative semigroups.
//!
//! The generating series `P = Σ_{m ∈ S} t^m` is computed through the
//! squarefree divisor complexes `T_m`, the Apéry-type key sets `Q` and
//! `D^J`, their Alexander duals and colored graphs, and compared term by
//! term against a brute-force enumeration of `S`. The same complexes give
//! graded Betti numbers, depth and Gorenstein / complete-intersection tests.

pub mod cli;
pub mod colored;
pub mod error;
pub mod group;
pub mod keysets;
pub mod linalg;
mod lp;
pub mod poincare;
pub mod resolution;
pub mod semigroup;
pub mod series;
pub mod simplicial;

pub use error::{Error, Result};
pub use group::{AmbientGroup, Grading, GroupElement};
pub use linalg::Characteristic;
pub use semigroup::{validate, ChoiceSet, SemigroupPresentation, ValidatedSemigroup};
pub use series::{Poly, RationalExpr, TruncatedSeries};
pub use simplicial::{build_tm, Complex, HomologyProfile};
