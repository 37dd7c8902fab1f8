//! Empirical probes: exact counts of conservative tables, and a search for
//! symmetric bisymmetric tables lacking associativity or a neutral element.
//!
//! Nothing here asserts an answer. Counts and examples are reported as
//! found.

use serde::{Deserialize, Serialize};

use super::runner::{scan, Counterexample};
use super::space::{Space, MAX_SYMMETRIC_N};
use super::verify::VerifyOptions;
use crate::checkers;
use crate::error::{Error, Result};

/// Largest `n` accepted by [`probe_open_questions`].
pub const MAX_PROBE_N: usize = 5;

/// Exact counts among the conservative tables on `L_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConservativeCounts {
    pub conservative: u64,
    pub conservative_associative: u64,
    pub conservative_symmetric: u64,
    pub conservative_symmetric_associative: u64,
    pub conservative_bisymmetric: u64,
}

/// Bisymmetric symmetric tables lacking associativity or a neutral element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BisymmetricSearch {
    pub candidates: String,
    pub checked: u64,
    pub bisymmetric_symmetric: u64,
    pub not_associative: u64,
    pub without_neutral: u64,
    /// The first few tables lacking either property.
    pub examples: Vec<Counterexample>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpenQuestionReport {
    pub n: usize,
    pub enumeration: ConservativeCounts,
    pub bisymmetric_symmetric: BisymmetricSearch,
}

pub fn probe_open_questions(n: usize, options: &VerifyOptions) -> Result<OpenQuestionReport> {
    if n > MAX_PROBE_N {
        return Err(Error::Infeasible {
            what: "open-question probe".into(),
            n,
            bound: format!("n <= {MAX_PROBE_N}"),
        });
    }

    let conservative = Space::conservative(n)?;
    let tally = scan(&conservative, options.jobs, |v| {
        let associative = checkers::is_associative(v.op);
        let symmetric = checkers::is_symmetric(v.op);
        if associative {
            v.count("associative");
        }
        if symmetric {
            v.count("symmetric");
        }
        if associative && symmetric {
            v.count("symmetric_associative");
        }
        if checkers::is_bisymmetric(v.op) {
            v.count("bisymmetric");
        }
    });
    let metric = |name: &str| tally.metrics.get(name).copied().unwrap_or(0);
    let enumeration = ConservativeCounts {
        conservative: tally.checked,
        conservative_associative: metric("associative"),
        conservative_symmetric: metric("symmetric"),
        conservative_symmetric_associative: metric("symmetric_associative"),
        conservative_bisymmetric: metric("bisymmetric"),
    };

    let symmetric = if n <= MAX_SYMMETRIC_N {
        Space::symmetric(n)?
    } else {
        Space::sampled(n, options.samples, options.seed, true)?
    };
    let tally = scan(&symmetric, options.jobs, |v| {
        if !(checkers::is_symmetric(v.op) && checkers::is_bisymmetric(v.op)) {
            return;
        }
        v.count("bisymmetric_symmetric");
        let associative = checkers::is_associative(v.op);
        let neutral = checkers::find_neutral_element(v.op).is_some();
        if !associative {
            v.count("not_associative");
        }
        if !neutral {
            v.count("without_neutral");
        }
        if !associative {
            v.fail("bisymmetric and symmetric, not associative");
        } else if !neutral {
            v.fail("bisymmetric and symmetric, no neutral element");
        }
    });
    let metric = |name: &str| tally.metrics.get(name).copied().unwrap_or(0);
    let search = BisymmetricSearch {
        candidates: symmetric.describe(),
        checked: tally.checked,
        bisymmetric_symmetric: metric("bisymmetric_symmetric"),
        not_associative: metric("not_associative"),
        without_neutral: metric("without_neutral"),
        examples: tally.examples,
    };

    Ok(OpenQuestionReport {
        n,
        enumeration,
        bisymmetric_symmetric: search,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let options = VerifyOptions::default();
        let two = probe_open_questions(2, &options).unwrap();
        assert_eq!(two.enumeration.conservative, 4);
        let three = probe_open_questions(3, &options).unwrap();
        assert_eq!(three.enumeration.conservative, 64);
        assert_eq!(three.enumeration.conservative_symmetric, 8);
        assert_eq!(three.enumeration.conservative_associative, 20);
        assert_eq!(three.enumeration.conservative_symmetric_associative, 6);
        assert_eq!(three.bisymmetric_symmetric.checked, 729);
    }

    #[test]
    fn constant_tables_show_up() {
        let report = probe_open_questions(2, &VerifyOptions::default()).unwrap();
        // a constant table is bisymmetric and symmetric but has no neutral element
        assert!(report.bisymmetric_symmetric.without_neutral >= 2);
    }

    #[test]
    fn bound() {
        assert!(matches!(
            probe_open_questions(6, &VerifyOptions::default()),
            Err(Error::Infeasible { .. })
        ));
    }
}
