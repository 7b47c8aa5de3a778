//! Convex and higher-order convex stochastic ordering between finite
//! signed measures on a compact interval, with certificates and
//! incomparability witnesses; includes a catalog of Hermite-Hadamard-type
//! inequality families and the classical quadrature operators.
//!
//! The core is generic over the scalar type. Two instantiations are
//! provided: exact arithmetic in the rationals extended by square roots
//! ([`ExactScalar`]), and `f64` with an explicit sign tolerance
//! ([`FloatScalar`]).

pub mod catalog;
pub mod io;
pub mod measure;
pub mod numeric;
pub mod oracle;
pub mod ordering;
pub mod report;

/// Exact scalar: rationals with adjoined square roots, every sign decided.
pub type ExactScalar = numeric::Rad;
/// Float scalar: `f64` under a sign tolerance `tau`.
pub type FloatScalar = f64;

pub type ExactMeasure = measure::SignedMeasure<ExactScalar>;
pub type FloatMeasure = measure::SignedMeasure<FloatScalar>;
