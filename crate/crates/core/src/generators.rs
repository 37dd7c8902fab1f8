//! Constructions of idempotent discrete uninorms and their counts.
//!
//! Three independent routes produce the same family on `L_n`:
//!
//! * [`GcUninorms`] lays down the contour plot shell by shell, starting from
//!   an isolated neutral point and growing an interval of the chain one
//!   neighbour at a time;
//! * [`crate::single_peaked::order_to_uninorm`] takes `max_≼` of a
//!   single-peaked ordering;
//! * [`uninorm_from_gspec`] evaluates the min/max formula driven by a
//!   neutral element `e` and a nonincreasing map `g`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{CheckedMul, FromPrimitive, Num};
use serde::{Deserialize, Serialize};

use crate::chain::{BinaryOperation, Element, FiniteChain};
use crate::checkers;
use crate::error::{Error, Result};
use crate::Count;

struct Partial {
    lo: Element,
    hi: Element,
    // lexicographic point order, 0 = not yet laid down
    values: Vec<Element>,
}

/// Streams every idempotent discrete uninorm on `L_n` by growing its
/// contour plot.
///
/// The neutral element `a_1` starts as the isolated point `(a_1,a_1)`.
/// Each step adds an element `a_k` adjacent to the current interval `C`
/// and gives the value `a_k` to the whole L-shaped shell
/// `(C ∪ {a_k})² ∖ C²`. Emission order matches
/// [`crate::single_peaked::SinglePeakedOrders`]: neutral elements ascending,
/// then depth first with the downward extension tried first.
pub struct GcUninorms {
    chain: FiniteChain,
    stack: Vec<Partial>,
}

impl GcUninorms {
    pub fn new(n: usize) -> Result<Self> {
        let chain = FiniteChain::new(n)?;
        let stack = chain
            .elements()
            .rev()
            .map(|e| {
                let mut values = vec![0; n * n];
                values[(e - 1) * n + (e - 1)] = e;
                Partial {
                    lo: e,
                    hi: e,
                    values,
                }
            })
            .collect();
        Ok(Self { chain, stack })
    }

    fn extend(&self, partial: &Partial, a: Element) -> Partial {
        let n = self.chain.len();
        let (lo, hi) = (partial.lo.min(a), partial.hi.max(a));
        let mut values = partial.values.clone();
        for other in lo..=hi {
            values[(a - 1) * n + (other - 1)] = a;
            values[(other - 1) * n + (a - 1)] = a;
        }
        Partial { lo, hi, values }
    }
}

impl Iterator for GcUninorms {
    type Item = BinaryOperation;

    fn next(&mut self) -> Option<BinaryOperation> {
        loop {
            let partial = self.stack.pop()?;
            let n = self.chain.len();
            if partial.hi - partial.lo + 1 == n {
                return Some(BinaryOperation::from_lexicographic_unchecked(
                    self.chain,
                    partial.values,
                ));
            }
            if partial.hi < n {
                let up = self.extend(&partial, partial.hi + 1);
                self.stack.push(up);
            }
            if partial.lo > 1 {
                let down = self.extend(&partial, partial.lo - 1);
                self.stack.push(down);
            }
        }
    }
}

pub fn generate_all_uninorms_gc(n: usize) -> Result<GcUninorms> {
    GcUninorms::new(n)
}

/// `2^(n-1)` in any integer type with checked multiplication.
pub fn count_uninorms_as<T>(n: usize) -> Result<T>
where
    T: Num + CheckedMul + FromPrimitive + Clone,
{
    FiniteChain::new(n)?;
    let two = T::from_u8(2).ok_or(Error::CountOverflow { n })?;
    (1..n).try_fold(T::one(), |acc, _| {
        acc.checked_mul(&two).ok_or(Error::CountOverflow { n })
    })
}

/// Number of idempotent discrete uninorms on `L_n`.
pub fn count_uninorms(n: usize) -> Result<Count> {
    count_uninorms_as(n)
}

/// `C(m, k)` with every intermediate product checked. Each partial
/// quotient `C(m - k + i, i)` is an integer, so the divisions are exact.
pub fn binomial_as<T>(m: usize, k: usize) -> Result<T>
where
    T: Num + CheckedMul + FromPrimitive + Clone,
{
    if k > m {
        return Ok(T::zero());
    }
    let k = k.min(m - k);
    (1..=k).try_fold(T::one(), |acc, i| {
        let factor = T::from_usize(m - k + i).ok_or(Error::CountOverflow { n: m })?;
        let divisor = T::from_usize(i).ok_or(Error::CountOverflow { n: m })?;
        acc.checked_mul(&factor)
            .map(|p| p / divisor)
            .ok_or(Error::CountOverflow { n: m })
    })
}

/// Number of idempotent discrete uninorms on `L_n` with neutral element
/// `e`, namely `C(n-1, e-1)`.
pub fn count_uninorms_by_neutral(n: usize, e: Element) -> Result<Count> {
    let chain = FiniteChain::new(n)?;
    chain.check(e)?;
    binomial_as(n - 1, e - 1)
}

/// Generates every uninorm on `L_n` and tallies them by neutral element,
/// located through the isolated-point test. Index `e - 1` holds the tally
/// for `e`.
pub fn neutral_histogram(n: usize) -> Result<Vec<Count>> {
    let mut histogram = vec![0; n];
    for op in generate_all_uninorms_gc(n)? {
        let e = checkers::find_neutral_conservative(&op)?
            .ok_or_else(|| Error::NotAUninorm("generated table has no neutral element".into()))?;
        histogram[e - 1] += 1;
    }
    Ok(histogram)
}

/// Generator yield compared against the closed form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountCheck {
    pub n: usize,
    pub closed_form: Count,
    pub generated: Count,
    pub by_neutral: Vec<Count>,
    pub by_neutral_closed_form: Vec<Count>,
}

impl CountCheck {
    pub fn agrees(&self) -> bool {
        self.closed_form == self.generated && self.by_neutral == self.by_neutral_closed_form
    }
}

pub fn count_uninorms_verified(n: usize) -> Result<CountCheck> {
    let closed_form = count_uninorms(n)?;
    let by_neutral = neutral_histogram(n)?;
    let by_neutral_closed_form = (1..=n)
        .map(|e| count_uninorms_by_neutral(n, e))
        .collect::<Result<Vec<_>>>()?;
    Ok(CountCheck {
        n,
        closed_form,
        generated: by_neutral.iter().sum(),
        by_neutral,
        by_neutral_closed_form,
    })
}

/// A neutral element `e` and a nonincreasing map `g: {1..e} → {e..n}` with
/// `g(e) = e`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GSpec {
    pub n: usize,
    pub e: Element,
    /// `g[i] = g(i + 1)`.
    pub g: Vec<Element>,
}

impl GSpec {
    pub fn new(n: usize, e: Element, g: Vec<Element>) -> Result<Self> {
        let chain = FiniteChain::new(n)?;
        chain.check(e)?;
        if g.len() != e {
            return Err(Error::InvalidGSpec(format!(
                "g must be defined on 1..={e}, got {} values",
                g.len()
            )));
        }
        if let Some(v) = g.iter().find(|v| !(e..=n).contains(*v)) {
            return Err(Error::InvalidGSpec(format!(
                "g takes {v} outside {e}..={n}"
            )));
        }
        if g.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidGSpec("g must be nonincreasing".into()));
        }
        if g[e - 1] != e {
            return Err(Error::InvalidGSpec(format!("g({e}) must equal {e}")));
        }
        Ok(Self { n, e, g })
    }

    pub fn chain(&self) -> FiniteChain {
        FiniteChain::new(self.n).expect("validated at construction")
    }

    /// `g(x)` for `x` in `1..=e`.
    pub fn g(&self, x: Element) -> Element {
        self.g[x - 1]
    }
}

impl fmt::Debug for GSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GSpec(n={}, e={}, g={:?})", self.n, self.e, self.g)
    }
}

/// `e g(1) … g(e)`, space-separated.
impl fmt::Display for GSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.e)?;
        for v in &self.g {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

/// The extension `ḡ: L_n → L_n` of `g`; index `x - 1` holds `ḡ(x)`.
///
/// ```text
/// ḡ(x) = g(x)                           x ≤ e
///        max{z ∈ 1..=e : g(z) ≥ x}      e ≤ x ≤ g(1)
///        1                              x > g(1)
/// ```
pub fn make_gbar(spec: &GSpec) -> Vec<Element> {
    let g1 = spec.g(1);
    (1..=spec.n)
        .map(|x| {
            if x <= spec.e {
                spec.g(x)
            } else if x <= g1 {
                (1..=spec.e)
                    .rev()
                    .find(|&z| spec.g(z) >= x)
                    .expect("g(1) >= x, so the set is nonempty")
            } else {
                1
            }
        })
        .collect()
}

/// `F(x,y) = min{x,y}` when `y ≤ ḡ(x)` and `x ≤ ḡ(1)`, `max{x,y}` otherwise.
pub fn uninorm_from_gspec(spec: &GSpec) -> BinaryOperation {
    let gbar = make_gbar(spec);
    let chain = spec.chain();
    let values = chain
        .points()
        .map(|(x, y)| {
            if y <= gbar[x - 1] && x <= gbar[0] {
                x.min(y)
            } else {
                x.max(y)
            }
        })
        .collect();
    BinaryOperation::from_lexicographic_unchecked(chain, values)
}

/// Every valid `(e, g)` on `L_n`: `e` ascending, then `g(1), …, g(e-1)` in
/// lexicographic order.
pub struct GSpecs {
    n: usize,
    current: Option<GSpec>,
}

impl GSpecs {
    pub fn new(n: usize) -> Result<Self> {
        FiniteChain::new(n)?;
        Ok(Self {
            n,
            current: Some(GSpec {
                n,
                e: 1,
                g: vec![1],
            }),
        })
    }

    fn successor(&self, spec: &GSpec) -> Option<GSpec> {
        let (n, e) = (self.n, spec.e);
        let mut g = spec.g.clone();
        // g(e) = e is pinned; bump the rightmost free position that can grow
        for i in (0..e - 1).rev() {
            if g[i] < n && (i == 0 || g[i] < g[i - 1]) {
                g[i] += 1;
                g[i + 1..e - 1].fill(e);
                return Some(GSpec { n, e, g });
            }
        }
        (e < n).then(|| GSpec {
            n,
            e: e + 1,
            g: vec![e + 1; e + 1],
        })
    }
}

impl Iterator for GSpecs {
    type Item = GSpec;

    fn next(&mut self) -> Option<GSpec> {
        let spec = self.current.take()?;
        self.current = self.successor(&spec);
        Some(spec)
    }
}

pub fn enumerate_gspecs(n: usize) -> Result<GSpecs> {
    GSpecs::new(n)
}

/// How the `(e, g)` parameter space maps onto operations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GSpecImage {
    pub n: usize,
    pub specs: usize,
    pub distinct_operations: usize,
    /// Operations reached from more than one specification.
    pub collisions: usize,
}

pub fn gspec_image(n: usize) -> Result<(GSpecImage, BTreeMap<BinaryOperation, Vec<GSpec>>)> {
    let mut image: BTreeMap<BinaryOperation, Vec<GSpec>> = BTreeMap::new();
    let mut specs = 0;
    for spec in enumerate_gspecs(n)? {
        specs += 1;
        image
            .entry(uninorm_from_gspec(&spec))
            .or_default()
            .push(spec);
    }
    let summary = GSpecImage {
        n,
        specs,
        distinct_operations: image.len(),
        collisions: image.values().filter(|v| v.len() > 1).count(),
    };
    Ok((summary, image))
}
