//! Exact verification toolkit for maximal curves over small finite fields.
//!
//! The crate counts places of degree one on a small catalog of maximal
//! curves, computes Weierstrass semigroups and order sequences at their
//! distinguished places, and deduces Frobenius dimensions and generic order
//! sequences from those data.

pub mod cli;
pub mod curves;
pub mod gf;
pub mod numsg;
pub mod verify;

/// Castelnuovo-type genus bound over machine integers.
pub type CastelnuovoBound = verify::GenusBound<i64>;

/// Exact rational used for genus bounds.
pub type Rational = num_rational::Ratio<i64>;
