//! Weierstrass models over Q: invariants, the group law, coordinate changes,
//! isomorphism testing and the rational CM j-invariants.

mod cm;
mod model;
mod transform;

pub use cm::{cm_lookup, cm_table, CmRecord};
pub use model::{AffinePoint, WeierstrassModel};
pub use transform::Transform;

#[cfg(test)]
mod tests;
