//! Brute-force engines, figure fixtures, and theorem verification.

mod fixtures;
mod probe;
mod runner;
mod space;
mod verify;

use serde::{Deserialize, Serialize};

use crate::chain::{BinaryOperation, Element, Point};
use crate::checkers;

pub use fixtures::{fixture, fixture_caption, fixture_names, profile_fixture, PROFILE_FIXTURES};
pub use probe::{probe_open_questions, OpenQuestionReport, MAX_PROBE_N};
pub use runner::Counterexample;
pub use space::{
    enumerate_all_operations, enumerate_conservative, enumerate_idempotent_nondecreasing, Space,
    MAX_ALL_N, MAX_CONSERVATIVE_N, MAX_MONOTONE_N, MAX_SYMMETRIC_CONSERVATIVE_N, MAX_SYMMETRIC_N,
};
pub use verify::{
    theorem_names, verify_theorem, Report, VerifyOptions, DEFAULT_SAMPLES, DEFAULT_SEED,
};

/// Every checker's verdict on one table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyProfile {
    pub idempotent: bool,
    pub conservative: bool,
    pub symmetric: bool,
    pub nondecreasing: bool,
    pub associative: bool,
    pub bisymmetric: bool,
    pub neutral: Option<Element>,
    pub isolated: Vec<Point>,
}

impl PropertyProfile {
    /// Associative, symmetric, nondecreasing, with a neutral element.
    pub fn is_discrete_uninorm(&self) -> bool {
        self.associative && self.symmetric && self.nondecreasing && self.neutral.is_some()
    }

    pub fn is_idempotent_uninorm(&self) -> bool {
        self.idempotent && self.is_discrete_uninorm()
    }

    /// Looks up a flag by name. `has-neutral` (or `neutral`) tests for a
    /// neutral element; `uninorm` and `idempotent-uninorm` combine flags.
    pub fn property(&self, name: &str) -> Option<bool> {
        Some(match name {
            "idempotent" => self.idempotent,
            "conservative" => self.conservative,
            "symmetric" => self.symmetric,
            "nondecreasing" => self.nondecreasing,
            "associative" => self.associative,
            "bisymmetric" => self.bisymmetric,
            "has-neutral" | "neutral" => self.neutral.is_some(),
            "uninorm" => self.is_discrete_uninorm(),
            "idempotent-uninorm" => self.is_idempotent_uninorm(),
            _ => return None,
        })
    }
}

/// Names accepted by [`PropertyProfile::property`].
pub const PROPERTY_NAMES: &[&str] = &[
    "idempotent",
    "conservative",
    "symmetric",
    "nondecreasing",
    "associative",
    "bisymmetric",
    "has-neutral",
    "uninorm",
    "idempotent-uninorm",
];

pub fn profile(op: &BinaryOperation) -> PropertyProfile {
    PropertyProfile {
        idempotent: checkers::is_idempotent(op),
        conservative: checkers::is_conservative(op),
        symmetric: checkers::is_symmetric(op),
        nondecreasing: checkers::is_nondecreasing(op),
        associative: checkers::is_associative(op),
        bisymmetric: checkers::is_bisymmetric(op),
        neutral: checkers::find_neutral_element(op),
        isolated: checkers::isolated_points(op),
    }
}
