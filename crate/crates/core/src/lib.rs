//! Finite-stage constructions for amalgamation classes of graphs, posets, and
//! rational metric spaces.
//!
//! The crate builds finite stages of the limit objects these classes generate
//! (the random graph, the generic poset) by amalgamated free sums, implements
//! one-point homomorphism extension for all three classes, extends partial
//! homomorphisms through stage chains, and demonstrates the three-generator
//! encoding that bounds the Sierpinski rank of the endomorphism monoid.
//! Every constructive path is checked against brute-force oracles.

pub mod amalgamation;
mod bits;
// pub mod dot;
pub mod error;
// pub mod hom_extension;
// pub mod json;
// pub mod limit;
pub mod oracle;
pub mod phep;
pub mod rational;
// pub mod sierpinski;
pub mod structures;

pub use error::{Error, Result};
pub use rational::Rational;
pub use structures::{
    classify_morphism, induced_substructure, validate, Classification, ElementId, FiniteGraph,
    FinitePoset, FiniteStructure, Morphism, MorphismKind, RationalMetricSpace, StructureClass,
    ValidationReport, Violation,
};
