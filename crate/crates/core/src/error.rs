use thiserror::Error;

use crate::chain::{Element, Point};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("a chain must have at least one element")]
    EmptyChain,

    #[error("table has {found} entries along one axis, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("entry F({x},{y}) = {value} lies outside 1..={n}")]
    EntryOutOfRange {
        x: Element,
        y: Element,
        value: Element,
        n: usize,
    },

    #[error("subset must be nonempty")]
    EmptySubset,

    #[error("element {element} is not in 1..={n}")]
    ElementOutOfRange { element: Element, n: usize },

    #[error("subset is not closed: F{point:?} = {value} lies outside it")]
    ClosureViolation { point: Point, value: Element },

    #[error("operation is not conservative: F{0:?} is neither argument")]
    NotConservative(Point),

    #[error("operation is not idempotent: F({0},{0}) != {0}")]
    NotIdempotent(Element),

    #[error("sequence is not a permutation of 1..={n}")]
    NotAPermutation { n: usize },

    #[error("ordering is not single-peaked: {middle} is ranked after both {low} and {high}")]
    NotSinglePeaked {
        low: Element,
        middle: Element,
        high: Element,
    },

    #[error("operation is not an idempotent discrete uninorm: {0}")]
    NotAUninorm(String),

    #[error("invalid g/e specification: {0}")]
    InvalidGSpec(String),

    #[error("{what} is infeasible at n = {n} (supported: {bound})")]
    Infeasible {
        what: String,
        n: usize,
        bound: String,
    },

    #[error("count overflows the count type at n = {n}")]
    CountOverflow { n: usize },

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),

    #[error("unknown property `{0}`")]
    UnknownProperty(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
