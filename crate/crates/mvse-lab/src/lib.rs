//! Exact-arithmetic toolkit for polyhedral normed spaces presented inside
//! ℓ∞^m: zonotope geometry, totally unimodular presentations, lattice
//! tilings, and minimal-volume sufficient enlargements (MVSE).
//!
//! Everything mathematical runs over arbitrary-precision rationals — there
//! is no floating point on any decision path. Results that answer a
//! question negatively (a refused membership, a failed tiling verdict, a
//! matrix that is not totally unimodular) are ordinary values carrying
//! their evidence; `Err` is reserved for malformed input and violated
//! preconditions.
//!
//! Module map:
//! - [`rat`], [`matrix`]: rational scalars and dense exact linear algebra.
//! - [`plucker`]: minor vectors, Laplace/Cauchy–Binet identities,
//!   complementary-minor checks for orthogonal matrices.
//! - [`zonotope`]: canonical generator form, support functions, volumes,
//!   vertex walks, H-representations, hexagon classification.
//! - [`tumat`]: total unimodularity, violation witnesses, certificate
//!   extraction, forest scaling, and membership in the class of zonotopes
//!   generated by scaled TU columns.
//! - [`mvse`]: polyhedral spaces, projections onto them, volume ratios,
//!   enlargement volumes, and the constructive extraction of regular
//!   hexagon subspaces from minimal-volume witnesses.
//! - [`tiling`]: lattice tilings — exact sampling verifier, determinant
//!   necessary condition, and a bounded lattice search.
//! - [`bmdist`]: Banach–Mazur-type upper bounds between zonotopes at a
//!   fixed position.
//! - [`json`]: the wire format (rationals as `"p/q"` strings).

pub mod bmdist;
pub mod error;
pub mod json;
pub mod matrix;
pub mod mvse;
pub mod plucker;
pub mod rat;
pub mod tiling;
pub mod tumat;
pub mod zonotope;

pub use error::{Error, Result};
pub use matrix::RationalMatrix;
pub use rat::Rat;
