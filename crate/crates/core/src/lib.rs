//! Exact arithmetic for numerical classes on abelian varieties: Euler
//! characteristics from intersection forms, cohomological index
//! certificates built on real root counting, Hermitian inertia, and
//! sign-pattern searches in totally real number fields.
//!
//! Everything is computed over the rationals (or Gaussian rationals); no
//! floating point enters any numeric path. Operations that make a claim
//! return certificates carrying enough data to re-derive the claim from
//! scratch.

pub mod chi;
pub mod elliptic_product;
pub mod error;
pub mod index;
pub mod inertia;
pub mod poly;
pub mod qstr;
pub mod roots;
pub mod scalar;
pub mod totally_real;

pub use error::{Error, Result};

/// Arbitrary precision integer used throughout.
pub type Int = num_bigint::BigInt;

/// Exact rational scalar used throughout.
pub type Rat = num_rational::BigRational;

/// Rational polynomial, the concrete instantiation most operations use.
pub type QPoly = poly::Polynomial<Rat>;
