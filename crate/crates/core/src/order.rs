//! Linear orderings of a finite chain.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::chain::{Element, FiniteChain};
use crate::error::{Error, Result};

/// A linear ordering `a_1 ≺ a_2 ≺ … ≺ a_n` of `L_n`.
///
/// Stored as the sequence `a_1, …, a_n` (the permutation σ with
/// `σ(k) = a_k`) together with its inverse, the rank of each element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Element>", into = "Vec<Element>")]
pub struct LinearOrder {
    seq: Vec<Element>,
    // rank[x] = k - 1 where a_k = x; rank[0] unused
    rank: Vec<usize>,
}

impl LinearOrder {
    pub fn new(seq: Vec<Element>) -> Result<Self> {
        let n = seq.len();
        if n == 0 {
            return Err(Error::EmptyChain);
        }
        let mut rank = vec![usize::MAX; n + 1];
        for (k, &x) in seq.iter().enumerate() {
            if !(1..=n).contains(&x) || rank[x] != usize::MAX {
                return Err(Error::NotAPermutation { n });
            }
            rank[x] = k;
        }
        Ok(Self { seq, rank })
    }

    /// The usual order `1 ≺ 2 ≺ … ≺ n`.
    pub fn natural(chain: FiniteChain) -> Self {
        Self::new(chain.elements().collect()).expect("identity permutation")
    }

    /// The reversed order `n ≺ … ≺ 1`.
    pub fn reversed(chain: FiniteChain) -> Self {
        Self::new(chain.elements().rev().collect()).expect("reversal is a permutation")
    }

    pub fn chain(&self) -> FiniteChain {
        FiniteChain::new(self.seq.len()).expect("orders are nonempty")
    }

    pub fn n(&self) -> usize {
        self.seq.len()
    }

    /// `a_1, …, a_n`.
    pub fn sequence(&self) -> &[Element] {
        &self.seq
    }

    /// 1-based position of `x`, so `rank(a_k) = k`.
    pub fn rank(&self, x: Element) -> usize {
        self.rank[x] + 1
    }

    /// `x ≺ y`.
    pub fn precedes(&self, x: Element, y: Element) -> bool {
        self.rank[x] < self.rank[y]
    }

    /// The ≼-larger of two elements.
    pub fn greater(&self, x: Element, y: Element) -> Element {
        if self.precedes(x, y) {
            y
        } else {
            x
        }
    }

    pub fn first(&self) -> Element {
        self.seq[0]
    }

    pub fn last(&self) -> Element {
        self.seq[self.seq.len() - 1]
    }
}

impl TryFrom<Vec<Element>> for LinearOrder {
    type Error = Error;

    fn try_from(seq: Vec<Element>) -> Result<Self> {
        Self::new(seq)
    }
}

impl From<LinearOrder> for Vec<Element> {
    fn from(order: LinearOrder) -> Self {
        order.seq
    }
}

impl fmt::Debug for LinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearOrder(")?;
        for (i, x) in self.seq.iter().enumerate() {
            if i > 0 {
                write!(f, "≺")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Space-separated `a_1 … a_n`, the order text format.
impl fmt::Display for LinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.seq.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}
