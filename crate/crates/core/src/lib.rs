//! Idempotent discrete uninorms on finite chains.
//!
//! An idempotent discrete uninorm on `L_n = {1, …, n}` is an associative,
//! symmetric, nondecreasing operation with a neutral element and
//! `F(x,x) = x`. This crate builds them (by contour growth, as `max_≼` of a
//! single-peaked ordering, or from an `(e, g)` specification), checks the
//! axioms on arbitrary Cayley tables, renders contour plots, and
//! cross-checks the characterizations against exhaustive enumeration.

pub mod chain;
pub mod checkers;
pub mod error;
pub mod format;
pub mod generators;
pub mod oracle;
pub mod order;
pub mod render;
pub mod single_peaked;

pub use chain::{
    contour_partition, BinaryOperation, ContourPartition, Element, FiniteChain, LevelSet, Point,
};
pub use error::{Error, Result};
pub use generators::GSpec;
pub use order::LinearOrder;

/// Integer type used for closed-form and enumerated counts.
pub type Count = u64;
