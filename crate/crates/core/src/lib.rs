//! Rational isogeny classes of elliptic curves over Q.
//!
//! Given a Weierstrass model, the crate enumerates every Q-rational isogeny of
//! prime degree, closes the class under them, computes each curve's rational
//! torsion subgroup, and classifies the resulting isogeny-torsion graph into
//! one of 26 graph shapes and 52 torsion configurations.

pub mod cli;
pub mod clsgraph;
pub mod error;
pub mod isogeny;
pub mod qpoly;
pub mod torsion;
pub mod weier;

pub use error::{AtlasError, Result};
