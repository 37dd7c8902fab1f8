//! Exhaustive (or fixed-seed sampled) verification of each characterization.
//!
//! Every theorem has a documented feasibility bound on `n` and a fixed
//! candidate class. A report counts the candidates checked and the
//! counterexamples found; a passing report has none.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::RangeInclusive;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use super::runner::{scan, Counterexample, Tally, Visit};
use super::space::{enumerate_idempotent_nondecreasing, Space};
use crate::chain::{BinaryOperation, Element, FiniteChain};
use crate::checkers;
use crate::error::{Error, Result};
use crate::generators;
use crate::order::LinearOrder;
use crate::single_peaked;

/// Seed for every sampled check unless overridden.
pub const DEFAULT_SEED: u64 = 20_180_607;
/// Sample size for sampled checks.
pub const DEFAULT_SAMPLES: u64 = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    pub samples: u64,
    /// Worker threads; `0` uses every available core.
    pub jobs: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            samples: DEFAULT_SAMPLES,
            jobs: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub theorem: String,
    pub n: usize,
    /// The candidate class that was scanned.
    pub candidates: String,
    pub checked: u64,
    pub counterexamples: u64,
    pub examples: Vec<Counterexample>,
    pub metrics: BTreeMap<String, u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Wall-clock time; kept out of the JSON so reports are reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.counterexamples == 0
    }
}

struct Outcome {
    candidates: String,
    seed: Option<u64>,
    tally: Tally,
}

impl Outcome {
    fn scanned(space: &Space, tally: Tally) -> Self {
        let seed = match space {
            Space::Sampled { seed, .. } => Some(*seed),
            _ => None,
        };
        Self {
            candidates: space.describe(),
            seed,
            tally,
        }
    }
}

type Runner = fn(usize, &VerifyOptions) -> Result<Outcome>;

struct Theorem {
    name: &'static str,
    bound: RangeInclusive<usize>,
    bound_note: &'static str,
    run: Runner,
}

const THEOREMS: &[Theorem] = &[
    Theorem {
        name: "main",
        bound: 1..=6,
        bound_note: "symmetric conservative tables, n <= 6",
        run: main_characterization,
    },
    Theorem {
        name: "main2n",
        bound: 1..=12,
        bound_note: "generator count n <= 12; brute force also at n <= 6",
        run: main_count,
    },
    Theorem {
        name: "gc",
        bound: 1..=12,
        bound_note: "generator output, n <= 12",
        run: contour_algorithm,
    },
    Theorem {
        name: "main3",
        bound: 1..=5,
        bound_note: "conservative tables, n <= 5",
        run: main3,
    },
    Theorem {
        name: "constructions",
        bound: 1..=8,
        bound_note: "three constructions compared, n <= 8",
        run: constructions,
    },
    Theorem {
        name: "qob",
        bound: 1..=10,
        bound_note: "single-peaked orders and generated uninorms, n <= 10",
        run: qob,
    },
    Theorem {
        name: "single-peaked",
        bound: 1..=8,
        bound_note: "all n! permutations, n <= 8",
        run: single_peaked_orders,
    },
    Theorem {
        name: "mainb",
        bound: 1..=5,
        bound_note: "all tables n <= 3; sampled n = 4, 5",
        run: mainb,
    },
    Theorem {
        name: "corollary-mainb",
        bound: 1..=5,
        bound_note: "all tables n <= 3; sampled n = 4, 5",
        run: corollary_mainb,
    },
    Theorem {
        name: "bis-a",
        bound: 1..=5,
        bound_note: "all tables n <= 3; sampled n = 4, 5",
        run: bis_a,
    },
    Theorem {
        name: "bis-b",
        bound: 1..=5,
        bound_note: "all tables n <= 3; sampled n = 4, 5",
        run: bis_b,
    },
    Theorem {
        name: "bis-c",
        bound: 1..=5,
        bound_note: "all tables n <= 3; conservative tables n = 4, 5",
        run: bis_c,
    },
    Theorem {
        name: "IdIs",
        bound: 1..=3,
        bound_note: "idempotent tables among all tables, n <= 3",
        run: idis,
    },
    Theorem {
        name: "ee",
        bound: 1..=4,
        bound_note: "conservative tables, n <= 4",
        run: ee,
    },
    Theorem {
        name: "Tcons",
        bound: 1..=3,
        bound_note: "all tables, n <= 3",
        run: tcons,
    },
    Theorem {
        name: "ConsJ",
        bound: 1..=3,
        bound_note: "all tables, n <= 3",
        run: consj,
    },
    Theorem {
        name: "testCA",
        bound: 1..=4,
        bound_note: "conservative tables, n <= 4",
        run: test_ca,
    },
    Theorem {
        name: "Te3",
        bound: 1..=3,
        bound_note: "all tables, n <= 3",
        run: te3,
    },
    Theorem {
        name: "prel34",
        bound: 1..=4,
        bound_note: "idempotent nondecreasing tables with a neutral element, n <= 4",
        run: prel34,
    },
    Theorem {
        name: "rec8n",
        bound: 1..=10,
        bound_note: "rectangle iterators, n <= 10",
        run: rec8n,
    },
];

pub fn theorem_names() -> Vec<&'static str> {
    THEOREMS.iter().map(|t| t.name).collect()
}

/// Runs one named check. Names match case-insensitively.
pub fn verify_theorem(name: &str, n: usize, options: &VerifyOptions) -> Result<Report> {
    let theorem = THEOREMS
        .iter()
        .find(|t| t.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::UnknownTheorem(name.to_string()))?;
    FiniteChain::new(n)?;
    if !theorem.bound.contains(&n) {
        return Err(Error::Infeasible {
            what: format!("verification of `{}`", theorem.name),
            n,
            bound: theorem.bound_note.to_string(),
        });
    }
    let started = Instant::now();
    let outcome = (theorem.run)(n, options)?;
    Ok(Report {
        theorem: theorem.name.to_string(),
        n,
        candidates: outcome.candidates,
        checked: outcome.tally.checked,
        counterexamples: outcome.tally.failures,
        examples: outcome.tally.examples,
        metrics: outcome.tally.metrics,
        seed: outcome.seed,
        elapsed: started.elapsed(),
    })
}

fn exhaustive_or_sampled(n: usize, options: &VerifyOptions) -> Result<Space> {
    if n <= super::space::MAX_ALL_N {
        Space::all(n)
    } else {
        Space::sampled(n, options.samples, options.seed, false)
    }
}

fn gc_set(n: usize) -> Result<BTreeSet<BinaryOperation>> {
    Ok(generators::generate_all_uninorms_gc(n)?.collect())
}

fn compare_sets(
    tally: &mut Tally,
    left_name: &str,
    left: &BTreeSet<BinaryOperation>,
    right_name: &str,
    right: &BTreeSet<BinaryOperation>,
) {
    let missing = left.difference(right).count();
    let extra = right.difference(left).count();
    if missing > 0 {
        tally.fail_global(format!(
            "{missing} tables from {left_name} are missing from {right_name}"
        ));
    }
    if extra > 0 {
        tally.fail_global(format!(
            "{extra} tables from {right_name} are missing from {left_name}"
        ));
    }
}

/// Conservative, symmetric, nondecreasing ⟺ idempotent discrete uninorm.
fn main_characterization(n: usize, options: &VerifyOptions) -> Result<Outcome> {
    let generated = gc_set(n)?;
    let space = Space::symmetric_conservative(n)?;
    let mut tally = scan(&space, options.jobs, |v| {
        let member = generated.contains(v.op);
        if checkers::is_nondecreasing(v.op) {
            v.count("nondecreasing");
            if !member {
                v.fail("nondecreasing symmetric conservative table is not generated");
            }
        } else if member {
            v.fail("generated table is not nondecreasing");
        }
    });
    let selected = tally.metrics.get("nondecreasing").copied().unwrap_or(0);
    tally.set_metric("generated", generated.len() as u64);
    if selected != generated.len() as u64 {
        tally.fail_global(format!(
            "filter selects {selected} tables, generator yields {}",
            generated.len()
        ));
    }
    for op in &generated {
        if !(checkers::is_conservative(op) && checkers::is_symmetric(op)) {
            tally.fail_global("generated table lies outside the symmetric conservative class");
        }
    }
    Ok(Outcome::scanned(&space, tally))
}

/// Exactly `2^(n-1)` idempotent discrete uninorms.
fn main_count(n: usize, options: &VerifyOptions) -> Result<Outcome> {
    let closed_form = generators::count_uninorms(n)?;
    let generated: Vec<BinaryOperation> = generators::generate_all_uninorms_gc(n)?.collect();
    let distinct: BTreeSet<&BinaryOperation> = generated.iter().collect();
    let (candidates, mut tally) = if n <= 6 {
        let space = Space::symmetric_conservative(n)?;
        let tally = scan(&space, options.jobs, |v| {
            if checkers::is_nondecreasing(v.op) {
                v.count("brute_force");
            }
        });
        (space.describe(), tally)
    } else {
        let tally = Tally {
            checked: generated.len() as u64,
            ..Tally::default()
        };
        (
            format!("generator output on {}", FiniteChain::new(n)?),
            tally,
        )
    };
    tally.set_metric("count", distinct.len() as u64);
    tally.set_metric("closed_form", closed_form);
    if distinct.len() != generated.len() {
        tally.fail_global("generator repeats a table");
    }
    if distinct.len() as u64 != closed_form {
        tally.fail_global(format!(
            "generator yields {}, expected {closed_form}",
            distinct.len()
        ));
    }
    if n <= 6 {
        let brute = tally.metrics.get("brute_force").copied().unwrap_or(0);
        if brute != closed_form {
            tally.fail_global(format!("brute force finds {brute}, expected {closed_form}"));
        }
    }
    Ok(Outcome {
        candidates,
        seed: None,
        tally,
    })
}

/// The contour algorithm yields uninorms, split by neutral element as
/// `C(n-1, e-1)`.
fn contour_algorithm(n: usize, options: &VerifyOptions) -> Result<Outcome> {
    let space = Space::Listed(generators::generate_all_uninorms_gc(n)?.collect());
    let mut tally = scan(&space, options.jobs, |v| {
        let op = v.op;
        if !(checkers::is_conservative(op)
            && checkers::is_symmetric(op)
            && checkers::is_nondecreasing(op))
        {
            v.fail("generated table is not conservative, symmetric and nondecreasing");
        }
        if !checkers::is_associative(op) {
            v.fail("generated table is not associative");
        }
        match checkers::find_neutral_element(op) {
            Some(e) => {
                if checkers::isolated_points(op) != vec![(e, e)] {
                    v.fail("neutral point is not the only isolated point");
                }
                v.count(&format!("neutral_{e:02}"));
            }
            None => v.fail("generated table has no neutral element"),
        }
    });
    let check = generators::count_uninorms_verified(n)?;
    if !check.agrees() {
        tally.fail_global(format!(
            "per-neutral counts {:?} differ from binomials {:?}",
            check.by_neutral, check.by_neutral_closed_form
        ));
    }
    if check.by_neutral_closed_form.iter().sum::<u64>() != check.closed_form {
        tally.fail_global("binomials do not sum to 2^(n-1)");
    }
    tally.set_metric("count", check.generated);
    Ok(Outcome::scanned(&space, tally))
}

/// Conservative, symmetric, nondecreasing ⟹ associative with a neutral
/// element.
fn main3(n: usize, options: &VerifyOptions) -> Result<Outcome> {
    let space = Space::conservative(n)?;
    let tally = scan(&space, options.jobs, |v| {
        if checkers::is_symmetric(v.op) && checkers::is_nondecreasing(v.op) {
            v.count("premise");
            if !checkers::is_associative(v.op) {
                v.fail("not associative");
            }
            if checkers::find_neutral_element(v.op).is_none() {
                v.fail("no neutral element");
            }
        }
    });
    Ok(Outcome::scanned(&space, tally))
}

/// Contour growth, `max_≼` over single-peaked orders, and the `(e, g)`
/// formula all produce the same set.
fn constructions(n: usize, _options: &VerifyOptions) -> Result<Outcome> {
    let generated = gc_set(n)?;
    let by_order: BTreeSet<BinaryOperation> = single_peaked::enumerate_single_peaked(n)?
        .map(|o| single_peaked::order_to_uninorm(&o))
        .collect::<Result<_>>()?;
    let (image, map) = generators::gspec_image(n)?;
    let by_gspec: BTreeSet<BinaryOperation> = map.keys().cloned().collect();
    let mut tally = Tally {
        checked: generated.len() as u64,
        ..Tally::default()
    };
    compare_sets(
        &mut tally,
        "contour growth",
        &generated,
        "max over single-peaked orders",
        &by_order,
    );
    compare_sets(
        &mut tally,
        "contour growth",
        &generated,
        "the (e, g) formula",
        &by_gspec,
    );
    for (op, specs) in &map {
        for spec in specs {
            if checkers::find_neutral_element(op) != Some(spec.e) {
                tally.fail_global(format!(
                    "spec {spec} does not yield neutral element {}",
                    spec.e
                ));
            }
        }
    }
    tally.set_metric("contour_growth", generated.len() as u64);
    tally.set_metric("single_peaked", by_order.len() as u64);
    tally.set_metric("gspec_specs", image.specs as u64);
    tally.set_metric("gspec_distinct", image.distinct_operations as u64);
    tally.set_metric("gspec_collisions", image.collisions as u64);
    Ok(Outcome {
        candidates: format!("idempotent discrete uninorms on {}", FiniteChain::new(n)?),
        seed: None,
        tally,
    })
}

/// `order ↦ max_≼` and `F ↦ ≼_F` are mutually inverse.
fn qob(n: usize, _options: &VerifyOptions) -> Result<Outcome> {
    let mut tally = Tally::default();
    let mut images = BTreeSet::new();
    for ord in single_peaked::enumerate_single_peaked(n)? {
        tally.checked += 1;
        let op = single_peaked::order_to_uninorm(&ord)?;
        if !(checkers::is_conservative(&op)
            && checkers::is_symmetric(&op)
            && checkers::is_nondecreasing(&op))
        {
            tally.fail_global(format!(
                "max over {ord} is not conservative, symmetric and nondecreasing"
            ));
        }
        match single_peaked::uninorm_to_order(&op) {
            Ok(back) if back == ord => {}
            _ => tally.fail_global(format!("order {ord} does not survive the round trip")),
        }
        images.insert(op);
    }
    let generated = gc_set(n)?;
    for op in &generated {
        tally.checked += 1;
        let round_trip =
            single_peaked::uninorm_to_order(op).and_then(|o| single_peaked::order_to_uninorm(&o));
        if round_trip.as_ref() != Ok(op) {
            tally.fail_global("generated uninorm does not survive the round trip");
        }
    }
    compare_sets(
        &mut tally,
        "max over single-peaked orders",
        &images,
        "contour growth",
        &generated,
    );
    tally.set_metric("orders", images.len() as u64);
    Ok(Outcome {
        candidates: format!(
            "single-peaked orders and uninorms on {}",
            FiniteChain::new(n)?
        ),
        seed: None,
        tally,
    })
}

/// Advances `seq` to the next permutation in lexicographic order.
fn next_permutation(seq: &mut [Element]) -> bool {
    let Some(i) = seq.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = seq
        .iter()
        .rposition(|&v| v > seq[i])
        .expect("a larger element exists");
    seq.swap(i, j);
    seq[i + 1..].reverse();
    true
}

/// The interval-growth enumerator matches filtering all `n!` orders.
fn single_peaked_orders(n: usize, _options: &VerifyOptions) -> Result<Outcome> {
    let mut tally = Tally::default();
    let mut filtered = BTreeSet::new();
    let mut seq: Vec<Element> = (1..=n).collect();
    loop {
        tally.checked += 1;
        let ord = LinearOrder::new(seq.clone())?;
        let by_definition = single_peaked::is_single_peaked(&ord);
        if by_definition != single_peaked::is_single_peaked_via_profile(&ord) {
            tally.fail_global(format!("definition and profile disagree on {ord}"));
        }
        if by_definition {
            if ord.last() != 1 && ord.last() != n {
                tally.fail_global(format!("{ord} ends with an inner element"));
            }
            filtered.insert(ord);
        }
        if !next_permutation(&mut seq) {
            break;
        }
    }
    let enumerated: Vec<LinearOrder> = single_peaked::enumerate_single_peaked(n)?.collect();
    let enumerated_set: BTreeSet<LinearOrder> = enumerated.iter().cloned().collect();
    if enumerated_set.len() != enumerated.len() {
        tally.fail_global("enumerator repeats an order");
    }
    if enumerated_set != filtered {
        tally.fail_global("enumerator and permutation filter disagree");
    }
    let expected = generators::count_uninorms(n)?;
    if enumerated.len() as u64 != expected {
        tally.fail_global(format!(
            "enumerator yields {}, expected {expected}",
            enumerated.len()
        ));
    }
    tally.set_metric("single_peaked", filtered.len() as u64);
    tally.set_metric("enumerated", enumerated.len() as u64);
    Ok(Outcome {
        candidates: format!("all linear orders of {}", FiniteChain::new(n)?),
        seed: None,
        tally,
    })
}

fn has_neutral(op: &BinaryOperation) -> bool {
    checkers::find_neutral_element(op).is_some()
}

/// Bisymmetric, nondecreasing, with neutral element ⟺ discrete uninorm.
fn mainb(n: usize, options: &VerifyOptions) -> Result<Outcome> {
    let space = exhaustive_or_sampled(n, options)?;
    let tally = scan(&space, options.jobs, |v| {
        let op = v.op;
        let base = checkers::is_nondecreasing(op) && has_neutral(op);
        let lhs = base && checkers::is_bisymmetric(op);
        let rhs = base && checkers::is_associative(op) && checkers::is_symmetric(op);
        if lhs {
            v.count("bisymmetric_nondecreasing_neutral");
        }
        if rhs {
            v.count("uninorm");
        }
        if lhs != rhs {
            v.fail(if lhs {
                "bisymmetric, nondecreasing, neutral, but not a uninorm"
            } else {
                "uninorm that is not bisymmetric"
            });
        }
    });
    Ok(Outcome::scanned(&space, tally))
}

/// Idempotent (or conservative), bisymmetric, nondecreasing, with neutral
/// element ⟺ idempotent discrete uninorm.
fn corollary_mainb(n: usize, options: &VerifyOptions) -> Result<Outcome> {
    let space = exhaustive_or_sampled(n, options)?;
    let generated = gc_set(n)?;
    let exhaustive = !space.is_sampled();
    let tally = scan(&space, options.jobs, |v: &mut Visit<'_>| {
        let op = v.op;
        let base = checkers::is_nondecreasing(op) && has_neutral(op);
        let idempotent = checkers::is_idempotent(op);
        let bis = base && checkers::is_bisymmetric(op);
        let lhs_idempotent = idempotent && bis;
        let lhs_conservative = checkers::is_conservative(op) && bis;
        let rhs = idempotent && base && checkers::is_associative(op) && checkers::is_symmetric(op);
        if rhs {
            v.count("idempotent_uninorm");
        }
        if lhs_idempotent != rhs {
            v.fail("idempotent variant disagrees");
        }
        if lhs_conservative != rhs {
            v.fail("conservative variant disagrees");
        }
        if exhaustive && rhs != generated.contains(op) {
            v.fail("membership in the generated family disagrees");
        }
    });
    Ok(Outcome::scanned(&space, tally))
}

fn bis_a(n: usize, options: &VerifyOptions) -> Result<Outcome> {
    let space = exhaustive_or_sampled(n, options)?;
    let tally = scan(&space, options.jobs, |v| {
        if checkers::is_bisymmetric(v.op) && has_neutral(v.op) {
            v.count("premise");
            if !(checkers::is_associative(v.op) && checkers::is_symmetric(v.op)) {
                v.fail("bisymmetric with neutral element but not associative and symmetric");
            }
        }
    });
    Ok(Outcome::scanned(&space, tally))
}

fn bis_b(n: usize, options: &VerifyOptions) -> Result<Outcome> {
    let space = exhaustive_or_sampled(n, options)?;
    let tally = scan(&space, options.jobs, |v| {
        if checkers::is_associative(v.op) && checkers::is_symmetric(v.op) {
            v.count("premise");
            if !checkers::is_bisymmetric(v.op) {
                v.fail("associative and symmetric but not bisymmetric");
            }
        }
    });
    Ok(Outcome::scanned(&space, tally))
}

fn bis_c(n: usize, options: &VerifyOptions) -> Result<Outcome> {
    let space = if n <= super::space::MAX_ALL_N {
        Space::all(n)?
    } else {
        Space::conservative(n)?
    };
    let tally = scan(&space, options.jobs, |v| {
        if checkers::is_conservative(v.op) && checkers::is_bisymmetric(v.op) {
            v.count("premise");
            if !checkers::is_associative(v.op) {
                v.fail("conservative and bisymmetric but not associative");
            }
        }
    });
    Ok(Outcome::scanned(&space, tally))
}

fn idis(n: usize, options: &VerifyOptions) -> Result<Outcome> {
    let space = Space::all(n)?;
    let tally = scan(&space, options.jobs, |v| {
        if checkers::is_idempotent(v.op) {
            v.count("idempotent");
            if checkers::isolated_implies_diagonal_check(v.op) != Ok(true) {
                v.fail("idempotent table with an isolated point off the diagonal");
            }
        }
    });
    Ok(Outcome::scanned(&space, tally))
}

fn ee(n: usize, options: &VerifyOptions) -> Result<Outcome> {
    let space = Space::conservative(n)?;
    let tally = scan(&space, options.jobs, |v| {
        let op = v.op;
        let isolated = checkers::isolated_points(op);
        let neutral = checkers::find_neutral_element(op);
        if isolated.len() > 1 || isolated.iter().any(|(x, y)| x != y) {
            v.fail("conservative table with a second or off-diagonal isolated point");
        }
        for e in op.chain().elements() {
            if (neutral == Some(e)) != isolated.contains(&(e, e)) {
                v.fail(format!(
                    "neutrality of {e} disagrees with isolation of ({e},{e})"
                ));
            }
        }
        if checkers::find_neutral_conservative(op) != Ok(neutral) {
            v.fail("isolated-point search disagrees with the definition");
        }
        if neutral.is_some() {
            v.count("with_neutral");
        }
    });
    Ok(Outcome::scanned(&space, tally))
}

fn tcons(n: usize, options: &VerifyOptions) -> Result<Outcome> {
    let space = Space::all(n)?;
    let tally = scan(&space, options.jobs, |v| {
        let conservative = checkers::is_conservative(v.op);
        if conservative {
            v.count("conservative");
            if !checkers::is_idempotent(v.op) {
                v.fail("conservative but not idempotent");
            }
        }
        if conservative != checkers::is_conservative_via_contour(v.op) {
            v.fail("definition and contour test disagree");
        }
    });
    Ok(Outcome::scanned(&space, tally))
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<Element>> {
    (1u32..1 << n).map(move |mask| (1..=n).filter(|&x| mask >> (x - 1) & 1 == 1).collect())
}

/// Conservative ⟺ every nonempty `S` is closed ⟺ `F(x,y) ∈ S` forces
/// `x ∈ S` or `y ∈ S`.
fn consj(n: usize, options: &VerifyOptions) -> Result<Outcome> {
    let space = Space::all(n)?;
    let all_subsets: Vec<Vec<Element>> = subsets(n).collect();
    let tally = scan(&space, options.jobs, |v| {
        let op = v.op;
        let conservative = checkers::is_conservative(op);
        let closed = all_subsets.iter().all(|s| op.restrict(s).is_ok());
        let reflects = all_subsets.iter().all(|s| {
            op.chain()
                .points()
                .all(|(x, y)| !s.contains(&op.get(x, y)) || s.contains(&x) || s.contains(&y))
        });
        if conservative {
            v.count("conservative");
        }
        if conservative != closed {
            v.fail("conservativeness and subset closure disagree");
        }
        if conservative != reflects {
            v.fail("conservativeness and the preimage condition disagree");
        }
    });
    Ok(Outcome::scanned(&space, tally))
}

fn test_ca(n: usize, options: &VerifyOptions) -> Result<Outcome> {
    let space = Space::conservative(n)?;
    let tally = scan(&space, options.jobs, |v| {
        let op = v.op;
        let naive = checkers::is_associative(op);
        match checkers::rectangle_test(op) {
            Ok(witness) => {
                if naive != witness.is_none() {
                    v.fail("naive associativity and rectangle test disagree");
                }
                if let Some(r) = witness {
                    if !r.is_witness(op) {
                        v.fail("reported rectangle is not a witness");
                    }
                }
            }
            Err(_) => v.fail("rectangle test rejected a conservative table"),
        }
        if checkers::is_symmetric(op) {
            let full = checkers::rectangles(op.n(), false).any(|r| r.is_witness(op));
            let reduced = checkers::rectangles(op.n(), true).any(|r| r.is_witness(op));
            if full != reduced {
                v.fail("reduced rectangle set disagrees with the full set");
            }
        }
        if naive {
            v.count("associative");
        }
    });
    Ok(Outcome::scanned(&space, tally))
}

fn te3(n: usize, options: &VerifyOptions) -> Result<Outcome> {
    let space = Space::all(n)?;
    let tally = scan(&space, options.jobs, |v| {
        let neutral = checkers::find_neutral_element(v.op);
        if neutral != checkers::find_neutral_via_sections(v.op) {
            v.fail("section test and definition disagree");
        }
        if neutral.is_some() {
            v.count("with_neutral");
        }
    });
    Ok(Outcome::scanned(&space, tally))
}

fn prel34(n: usize, options: &VerifyOptions) -> Result<Outcome> {
    let space = Space::Listed(
        enumerate_idempotent_nondecreasing(n)?
            .into_iter()
            .filter(has_neutral)
            .collect(),
    );
    let tally = scan(&space, options.jobs, |v| {
        let op = v.op;
        let e = checkers::find_neutral_element(op).expect("filtered on a neutral element");
        let lower = (1..=e).all(|x| (1..=e).all(|y| op.get(x, y) == x.min(y)));
        let upper = (e..=op.n()).all(|x| (e..=op.n()).all(|y| op.get(x, y) == x.max(y)));
        if !lower {
            v.fail("not min below the neutral element");
        }
        if !upper {
            v.fail("not max above the neutral element");
        }
    });
    Ok(Outcome {
        candidates: format!(
            "{} idempotent nondecreasing tables with a neutral element on {}",
            space.len(),
            FiniteChain::new(n)?
        ),
        seed: None,
        tally,
    })
}

/// `n(n-1)(n-2)` rectangles with one diagonal vertex, `C(n,3)` up to
/// symmetry.
fn rec8n(n: usize, _options: &VerifyOptions) -> Result<Outcome> {
    let mut tally = Tally::default();
    let all: Vec<checkers::Rectangle> = checkers::rectangles(n, false).collect();
    let reduced: Vec<checkers::Rectangle> = checkers::rectangles(n, true).collect();
    tally.checked = all.len() as u64;
    let distinct_vertex_sets: BTreeSet<[(Element, Element); 4]> = all
        .iter()
        .map(|r| {
            let mut v = r.vertices();
            v.sort_unstable();
            v
        })
        .collect();
    if distinct_vertex_sets.len() != all.len() {
        tally.fail_global("two triples produce the same rectangle");
    }
    for r in &all {
        let diagonal = r.vertices().iter().filter(|(x, y)| x == y).count();
        if diagonal != 1 {
            tally.fail_global(format!("rectangle {r:?} has {diagonal} diagonal vertices"));
        }
    }
    let triples: BTreeSet<[Element; 3]> = reduced
        .iter()
        .map(|r| {
            let mut t = [r.a, r.b, r.c];
            t.sort_unstable();
            t
        })
        .collect();
    if triples.len() != reduced.len() {
        tally.fail_global("reduced rectangle set repeats a three-element subset");
    }
    let expected = checkers::rectangle_count(n, false);
    let expected_reduced = checkers::rectangle_count(n, true);
    let formula = (n * n.saturating_sub(1) * n.saturating_sub(2)) as u64;
    if all.len() as u64 != expected || expected != formula {
        tally.fail_global(format!("{} rectangles, expected {formula}", all.len()));
    }
    if reduced.len() as u64 != expected_reduced || expected_reduced * 6 != formula {
        tally.fail_global(format!(
            "{} reduced rectangles, expected {}",
            reduced.len(),
            formula / 6
        ));
    }
    tally.set_metric("rectangles", all.len() as u64);
    tally.set_metric("symmetric_rectangles", reduced.len() as u64);
    Ok(Outcome {
        candidates: format!("rectangles in {}²", FiniteChain::new(n)?),
        seed: None,
        tally,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> VerifyOptions {
        VerifyOptions {
            samples: 2_000,
            jobs: 2,
            ..VerifyOptions::default()
        }
    }

    #[test]
    fn unknown_and_infeasible() {
        assert_eq!(
            verify_theorem("nope", 3, &quick()).unwrap_err(),
            Error::UnknownTheorem("nope".into())
        );
        assert!(matches!(
            verify_theorem("Tcons", 4, &quick()),
            Err(Error::Infeasible { .. })
        ));
        assert!(matches!(
            verify_theorem("main", 0, &quick()),
            Err(Error::EmptyChain)
        ));
    }

    #[test]
    fn names_are_case_insensitive() {
        let report = verify_theorem("testca", 3, &quick()).unwrap();
        assert_eq!(report.theorem, "testCA");
        assert_eq!(report.checked, 64);
        assert_eq!(report.metrics["associative"], 20);
        assert!(report.passed());
    }

    #[test]
    fn small_cases_pass() {
        for name in theorem_names() {
            for n in 1..=3 {
                let report = verify_theorem(name, n, &quick()).unwrap();
                assert!(report.passed(), "{name} at n = {n}: {:?}", report.examples);
            }
        }
    }

    #[test]
    fn permutations_in_order() {
        let mut seq = vec![1, 2, 3];
        let mut seen = vec![seq.clone()];
        while next_permutation(&mut seq) {
            seen.push(seq.clone());
        }
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[1], vec![1, 3, 2]);
        assert_eq!(seen[5], vec![3, 2, 1]);
    }
}
