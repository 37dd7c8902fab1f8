//! Single-peaked orderings and their correspondence with idempotent
//! discrete uninorms.
//!
//! An ordering `≼` of `L_n` is single-peaked when, of any three elements
//! `a < b < c`, the middle one is never ranked last. Each such ordering
//! yields the uninorm `max_≼`, and every idempotent discrete uninorm arises
//! this way exactly once.
//!
//! Only the "middle never last" convention is provided; its dual (middle
//! never first, paired with `min_≼`) is not.

use crate::chain::{BinaryOperation, Element, FiniteChain};
use crate::checkers;
use crate::error::{Error, Result};
use crate::order::LinearOrder;

/// Largest chain the enumerator handles; steps are packed into a `u64`.
pub const MAX_ENUMERATION_N: usize = 64;

/// First `(a, b, c)` with `a < b < c` and `b` ranked after both `a` and `c`.
pub fn single_peak_violation(ord: &LinearOrder) -> Option<(Element, Element, Element)> {
    let n = ord.n();
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                if !(ord.precedes(b, a) || ord.precedes(b, c)) {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

pub fn is_single_peaked(ord: &LinearOrder) -> bool {
    single_peak_violation(ord).is_none()
}

/// Heights of the profile `f_≼`: the chain runs along the horizontal axis
/// and the reversed ordering up the vertical one, so `a_1` sits at height
/// `n` and `a_n` at height 1. Index `x - 1` holds `f_≼(x)`.
pub fn profile(ord: &LinearOrder) -> Vec<usize> {
    let n = ord.n();
    (1..=n).map(|x| n + 1 - ord.rank(x)).collect()
}

/// Positions `x` (1-based) where the profile is a local maximum. Endpoints
/// compare against their single neighbour.
pub fn local_maxima(heights: &[usize]) -> Vec<Element> {
    let len = heights.len();
    (0..len)
        .filter(|&i| {
            let left = i == 0 || heights[i - 1] < heights[i];
            let right = i + 1 == len || heights[i + 1] < heights[i];
            left && right
        })
        .map(|i| i + 1)
        .collect()
}

pub fn is_single_peaked_via_profile(ord: &LinearOrder) -> bool {
    local_maxima(&profile(ord)).len() == 1
}

/// Streams the `2^(n-1)` single-peaked orderings of `L_n`.
///
/// Each ordering is grown from its first element by repeatedly adding an
/// element adjacent to the interval chosen so far. Orderings come grouped
/// by `a_1 = 1, …, n`; within a group the step sequences are visited in
/// lexicographic order with "extend down" before "extend up".
#[derive(Clone, Debug)]
pub struct SinglePeakedOrders {
    n: usize,
    first: Element,
    // bit (n - 2 - k) set means step k extends upwards
    mask: u64,
    exhausted: bool,
}

impl SinglePeakedOrders {
    pub fn new(n: usize) -> Result<Self> {
        FiniteChain::new(n)?;
        if n > MAX_ENUMERATION_N {
            return Err(Error::Infeasible {
                what: "single-peaked enumeration".into(),
                n,
                bound: format!("n <= {MAX_ENUMERATION_N}"),
            });
        }
        Ok(Self {
            n,
            first: 1,
            mask: low_bits(n - 1),
            exhausted: false,
        })
    }

    fn build(&self) -> LinearOrder {
        let n = self.n;
        let (mut lo, mut hi) = (self.first, self.first);
        let mut seq = Vec::with_capacity(n);
        seq.push(self.first);
        for step in 0..n - 1 {
            if self.mask >> (n - 2 - step) & 1 == 1 {
                hi += 1;
                seq.push(hi);
            } else {
                lo -= 1;
                seq.push(lo);
            }
        }
        LinearOrder::new(seq).expect("interval growth yields a permutation")
    }
}

fn low_bits(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// Next integer with the same number of set bits (Gosper's hack).
fn next_same_popcount(m: u64) -> Option<u64> {
    if m == 0 {
        return None;
    }
    let c = m & m.wrapping_neg();
    let r = m.checked_add(c)?;
    Some((((r ^ m) >> 2) / c) | r)
}

impl Iterator for SinglePeakedOrders {
    type Item = LinearOrder;

    fn next(&mut self) -> Option<LinearOrder> {
        if self.exhausted {
            return None;
        }
        let out = self.build();
        let width = self.n - 1;
        let within = |m: u64| width >= 64 || m >> width == 0;
        match next_same_popcount(self.mask).filter(|&m| within(m)) {
            Some(m) => self.mask = m,
            None if self.first < self.n => {
                self.first += 1;
                // n - first upward steps
                self.mask = low_bits(self.n - self.first);
            }
            None => self.exhausted = true,
        }
        Some(out)
    }
}

pub fn enumerate_single_peaked(n: usize) -> Result<SinglePeakedOrders> {
    SinglePeakedOrders::new(n)
}

/// `max_≼` without checking single-peakedness.
pub fn max_with_respect_to(ord: &LinearOrder) -> BinaryOperation {
    let chain = ord.chain();
    let values = chain.points().map(|(x, y)| ord.greater(x, y)).collect();
    BinaryOperation::from_lexicographic_unchecked(chain, values)
}

/// The idempotent discrete uninorm `max_≼` of a single-peaked ordering.
pub fn order_to_uninorm(ord: &LinearOrder) -> Result<BinaryOperation> {
    if let Some((low, middle, high)) = single_peak_violation(ord) {
        return Err(Error::NotSinglePeaked { low, middle, high });
    }
    Ok(max_with_respect_to(ord))
}

/// Recovers the ordering with `x ≼ y ⟺ F(x,y) = y` from a conservative,
/// symmetric, nondecreasing operation.
pub fn uninorm_to_order(op: &BinaryOperation) -> Result<LinearOrder> {
    if let Some((x, y)) = checkers::conservativeness_violation(op) {
        return Err(Error::NotAUninorm(format!(
            "F({x},{y}) is neither argument"
        )));
    }
    if let Some((x, y)) = checkers::symmetry_violation(op) {
        return Err(Error::NotAUninorm(format!("F({x},{y}) != F({y},{x})")));
    }
    if let Some(v) = checkers::monotonicity_violation(op) {
        return Err(Error::NotAUninorm(format!(
            "F{:?} > F{:?}",
            v.lower, v.upper
        )));
    }
    let n = op.n();
    // x sits at position #{y : F(x,y) = x}, counting y = x itself
    let mut seq = vec![0; n];
    for x in 1..=n {
        let below = (1..=n).filter(|&y| op.get(x, y) == x).count();
        if seq[below - 1] != 0 {
            return Err(Error::NotAUninorm(format!(
                "induced relation ranks {} and {x} equally",
                seq[below - 1]
            )));
        }
        seq[below - 1] = x;
    }
    let ord = LinearOrder::new(seq)?;
    if max_with_respect_to(&ord) != *op {
        return Err(Error::NotAUninorm(
            "induced relation is not transitive".into(),
        ));
    }
    Ok(ord)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ord(seq: &[Element]) -> LinearOrder {
        LinearOrder::new(seq.to_vec()).unwrap()
    }

    #[test]
    fn profile_examples() {
        let peaked = ord(&[2, 3, 4, 1, 5]);
        assert_eq!(profile(&peaked), vec![2, 5, 4, 3, 1]);
        assert_eq!(local_maxima(&profile(&peaked)), vec![2]);
        assert!(is_single_peaked(&peaked));
        assert!(is_single_peaked_via_profile(&peaked));

        let twin = ord(&[5, 2, 1, 3, 4]);
        assert_eq!(profile(&twin), vec![3, 4, 2, 1, 5]);
        assert_eq!(local_maxima(&profile(&twin)), vec![2, 5]);
        assert!(!is_single_peaked(&twin));
        assert!(!is_single_peaked_via_profile(&twin));
        assert_eq!(single_peak_violation(&twin), Some((1, 3, 5)));
    }

    #[test]
    fn natural_and_trivial_orders() {
        for n in 1..=6 {
            let chain = FiniteChain::new(n).unwrap();
            assert!(is_single_peaked(&LinearOrder::natural(chain)));
            assert!(is_single_peaked(&LinearOrder::reversed(chain)));
            assert!(is_single_peaked_via_profile(&LinearOrder::natural(chain)));
        }
        assert_eq!(local_maxima(&[1]), vec![1]);
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(enumerate_single_peaked(1).unwrap().count(), 1);
        assert_eq!(enumerate_single_peaked(3).unwrap().count(), 4);
        assert_eq!(enumerate_single_peaked(10).unwrap().count(), 512);
        let orders: Vec<Vec<Element>> = enumerate_single_peaked(3)
            .unwrap()
            .map(|o| o.sequence().to_vec())
            .collect();
        assert_eq!(
            orders,
            vec![vec![1, 2, 3], vec![2, 1, 3], vec![2, 3, 1], vec![3, 2, 1]]
        );
        assert!(enumerate_single_peaked(0).is_err());
        assert!(enumerate_single_peaked(65).is_err());
    }

    #[test]
    fn max_orders() {
        let chain = FiniteChain::new(4).unwrap();
        assert_eq!(
            order_to_uninorm(&LinearOrder::natural(chain)).unwrap(),
            BinaryOperation::max(chain)
        );
        assert_eq!(
            order_to_uninorm(&LinearOrder::reversed(chain)).unwrap(),
            BinaryOperation::min(chain)
        );
        let f = order_to_uninorm(&ord(&[2, 3, 1])).unwrap();
        assert_eq!((f.get(2, 3), f.get(1, 3), f.get(1, 2)), (3, 1, 1));
        assert_eq!(checkers::find_neutral_element(&f), Some(2));
        assert!(matches!(
            order_to_uninorm(&ord(&[5, 2, 1, 3, 4])),
            Err(Error::NotSinglePeaked { .. })
        ));
    }

    #[test]
    fn inverse_map() {
        let chain = FiniteChain::new(4).unwrap();
        assert_eq!(
            uninorm_to_order(&BinaryOperation::max(chain)).unwrap(),
            LinearOrder::natural(chain)
        );
        assert_eq!(
            uninorm_to_order(&BinaryOperation::min(chain)).unwrap(),
            LinearOrder::reversed(chain)
        );
        assert!(uninorm_to_order(&BinaryOperation::projection(chain)).is_err());
        let constant = BinaryOperation::from_fn(chain, |_, _| 1).unwrap();
        assert!(matches!(
            uninorm_to_order(&constant),
            Err(Error::NotAUninorm(_))
        ));
    }
}
