//! Exact computations with polytopes attached to trivalent graphs and their
//! spanning trees: parity lattices, triangle-inequality polytopes, reflexivity
//! and normality checks, and a classification driver.

pub mod analysis;
pub mod builtins;
pub mod graphs;
pub mod lattices;
pub mod linalg;
pub mod polyhedra;
pub mod polytopes;
pub mod rational;
