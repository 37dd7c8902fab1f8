use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::space::Space;
use crate::chain::BinaryOperation;
use crate::format::TableRecord;

/// Counterexamples kept in full; the rest are only counted.
pub(crate) const KEPT_EXAMPLES: usize = 8;

// Fixed so that partial results never depend on the worker count.
const CHUNK: u64 = 4096;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    /// Index of the table in its candidate space, if it came from one.
    pub index: Option<u64>,
    pub table: Option<TableRecord>,
    pub reason: String,
}

#[derive(Clone, Debug, Default)]
pub(crate) struct Tally {
    pub checked: u64,
    pub failures: u64,
    pub examples: Vec<Counterexample>,
    pub metrics: BTreeMap<String, u64>,
}

impl Tally {
    pub fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.failures += other.failures;
        self.examples.extend(other.examples);
        self.examples.sort_by_key(|c| c.index);
        self.examples.truncate(KEPT_EXAMPLES);
        for (k, v) in other.metrics {
            *self.metrics.entry(k).or_default() += v;
        }
        self
    }

    /// Records a failure that is not tied to one candidate table.
    pub fn fail_global(&mut self, reason: impl Into<String>) {
        self.failures += 1;
        if self.examples.len() < KEPT_EXAMPLES {
            self.examples.push(Counterexample {
                index: None,
                table: None,
                reason: reason.into(),
            });
        }
    }

    pub fn set_metric(&mut self, name: &str, value: u64) {
        self.metrics.insert(name.to_string(), value);
    }
}

/// One candidate under inspection.
pub(crate) struct Visit<'a> {
    pub index: u64,
    pub op: &'a BinaryOperation,
    failed: bool,
    tally: &'a mut Tally,
}

impl Visit<'_> {
    pub fn count(&mut self, metric: &str) {
        *self.tally.metrics.entry(metric.to_string()).or_default() += 1;
    }

    /// Marks the candidate as a counterexample; later reasons for the same
    /// candidate are dropped.
    pub fn fail(&mut self, reason: impl Into<String>) {
        if self.failed {
            return;
        }
        self.failed = true;
        self.tally.failures += 1;
        if self.tally.examples.len() < KEPT_EXAMPLES {
            self.tally.examples.push(Counterexample {
                index: Some(self.index),
                table: Some(TableRecord::from(self.op)),
                reason: reason.into(),
            });
        }
    }
}

fn scan_range<F>(space: &Space, start: u64, end: u64, check: &F) -> Tally
where
    F: Fn(&mut Visit<'_>) + Sync,
{
    let mut tally = Tally::default();
    for index in start..end {
        let op = space.get(index);
        let mut visit = Visit {
            index,
            op: &op,
            failed: false,
            tally: &mut tally,
        };
        check(&mut visit);
        tally.checked += 1;
    }
    tally
}

/// Runs `check` on every candidate of `space`, fanning index ranges out to
/// `jobs` workers (`0` means all available cores). The merged tally is the
/// same for every worker count.
pub(crate) fn scan<F>(space: &Space, jobs: usize, check: F) -> Tally
where
    F: Fn(&mut Visit<'_>) + Sync,
{
    let len = space.len();
    let chunks: Vec<(u64, u64)> = (0..len.div_ceil(CHUNK))
        .map(|c| (c * CHUNK, ((c + 1) * CHUNK).min(len)))
        .collect();
    if jobs == 1 || chunks.len() <= 1 {
        return chunks
            .iter()
            .map(|&(s, e)| scan_range(space, s, e, &check))
            .fold(Tally::default(), Tally::merge);
    }
    let run = || {
        chunks
            .par_iter()
            .map(|&(s, e)| scan_range(space, s, e, &check))
            .reduce(Tally::default, Tally::merge)
    };
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(run),
        Err(_) => run(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checkers;

    #[test]
    fn results_do_not_depend_on_workers() {
        let space = Space::all(3).unwrap();
        let check = |v: &mut Visit<'_>| {
            if checkers::is_symmetric(v.op) {
                v.count("symmetric");
            }
            if !checkers::is_idempotent(v.op) {
                v.fail("not idempotent");
            }
        };
        let one = scan(&space, 1, check);
        let four = scan(&space, 4, check);
        assert_eq!(one.checked, 19683);
        assert_eq!(one.metrics["symmetric"], 729);
        assert_eq!(one.failures, 19683 - 729);
        assert_eq!(
            (one.checked, one.failures, &one.metrics),
            (four.checked, four.failures, &four.metrics)
        );
        assert_eq!(one.examples, four.examples);
        assert_eq!(one.examples[0].index, Some(0));
    }
}
