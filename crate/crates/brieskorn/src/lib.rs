//! Exact-arithmetic engine for the formal Brieskorn lattice of an isolated
//! hypersurface singularity.
//!
//! Given a polynomial `f` with an isolated critical point at the origin, the
//! crate computes the matrix of multiplication by `f` (the action of `t`) on
//! the formal Brieskorn lattice, truncated at a chosen s-adic order.  The
//! computation runs over a partial standard basis of the formal family
//! `F = ∂(f) - s∂` with a normal-form reduction that converges s-adically,
//! and is cross-checked by an independent iterated-division oracle.
//!
//! All arithmetic is over exact big rationals; no rounding ever happens.
//!
//! The crate is organised along the pipeline:
//!
//! * [`algebra`] — monomials, local orderings, sparse polynomials and
//!   differential operators over ℚ,
//! * [`stdbasis`] — local standard bases with transformation matrices,
//!   monomial bases of Milnor algebras,
//! * [`lattice`] — the formal family, its V-filtration, the normal-form
//!   reduction and the lattice matrix,
//! * [`oracle`] — the brute-force iterated-division cross-check,
//! * [`cli`] — the command-line front end used by the `brieskorn` binary.

pub mod algebra;
pub mod cli;
pub mod lattice;
pub mod oracle;
pub mod stdbasis;

mod error;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
