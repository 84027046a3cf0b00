//! Exact computer algebra for equivariant cohomology of cohomogeneity one
//! group diagrams.
//!
//! The crate builds the double mapping cylinder model
//! `D(A1 -> A <- A2)` from two classifying-space morphisms, computes its
//! cohomology ring in a truncated degree range, and decides the
//! Cohen–Macaulay property from rank data, the sum-of-images criterion, or
//! direct depth and dimension computations.
//!
//! Modules:
//! - [`algebra`]: free graded-commutative algebras over ℚ, morphisms, images and kernels.
//! - [`models`]: CDGAs, homogeneous-space models, the cylinder, truncated cohomology rings.
//! - [`invariants`]: Krull dimension, depth, regular sequences and zero divisors.
//! - [`diagrams`]: group diagrams, the catalog, and the decision procedures.

pub mod algebra;
pub mod diagrams;
pub mod error;
pub mod invariants;
pub mod linalg;
pub mod models;
pub mod report;

pub use error::{Error, Result};

/// Tag for the monomial order used in every basis and certificate.
pub const MONOMIAL_ORDER: &str = "grlex-desc/v1";

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
