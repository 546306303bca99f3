//! Exact algebra for characteristic classes of free Lie algebra bundles and
//! the degeneracy loci they control.
//!
//! The crate is split along mathematical lines:
//!
//! * [`ring`] — truncated graded-commutative polynomial series over ℚ or 𝔽₂;
//! * [`bundle`] — total classes, Chern characters and Newton-identity
//!   conversions for formal bundles, plus truncated symmetric series;
//! * [`free_lie`] — Möbius/Witt counts, Hall bases, depth statistics and the
//!   characteristic classes of the graded pieces 𝔏ᵏ of a free Lie algebra
//!   bundle;
//! * [`degeneracy`] — growth vectors, their reduction, Young-diagram data and
//!   Giambelli-type determinantal locus classes;
//! * [`strata`] — defect vectors, dimension lemmas, and enumeration of
//!   admissible and bounding defects with a brute-force oracle;
//! * [`render`] — deterministic text/LaTeX rendering.
//!
//! Everything is exact: coefficients are `BigRational`, counts are `BigInt`.
//! The crate is `no_std` (alloc required).

#![cfg_attr(not(test), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod bundle;
pub mod degeneracy;
pub mod free_lie;
pub mod render;
pub mod ring;
pub mod strata;

mod error;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Default cap on enumeration sizes (table cells, basis elements).
pub const DEFAULT_MAX_CELLS: u64 = 10_000_000;
