//! Finite chains, operations stored as Cayley tables, and their level-set
//! partitions.
//!
//! Elements of the chain `L_n` are the integers `1..=n` under their usual
//! order. Points of `L_n²` are pairs `(x, y)`; throughout the crate points
//! are visited in lexicographic order, `x` first.

use std::fmt;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element of a finite chain, in `1..=n`.
pub type Element = usize;

/// A point `(x, y)` of `L_n²`.
pub type Point = (Element, Element);

/// The chain `L_n = {1, …, n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "usize", into = "usize")]
pub struct FiniteChain {
    n: usize,
}

impl FiniteChain {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyChain);
        }
        Ok(Self { n })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    /// Always false; present for API symmetry with `len`.
    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn contains(&self, x: Element) -> bool {
        (1..=self.n).contains(&x)
    }

    pub fn elements(&self) -> RangeInclusive<Element> {
        1..=self.n
    }

    /// All points of `L_n²` in lexicographic order.
    pub fn points(&self) -> impl Iterator<Item = Point> + Clone {
        let n = self.n;
        (1..=n).flat_map(move |x| (1..=n).map(move |y| (x, y)))
    }

    pub(crate) fn check(&self, x: Element) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                element: x,
                n: self.n,
            })
        }
    }
}

impl TryFrom<usize> for FiniteChain {
    type Error = Error;

    fn try_from(n: usize) -> Result<Self> {
        Self::new(n)
    }
}

impl From<FiniteChain> for usize {
    fn from(chain: FiniteChain) -> usize {
        chain.n
    }
}

impl fmt::Display for FiniteChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L_{}", self.n)
    }
}

/// A total binary operation `F: L_n² → L_n`, stored as a dense table.
///
/// Tables are immutable once built. Ordering and hashing follow the table
/// contents, so operations can be collected into sets for comparison.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryOperation {
    chain: FiniteChain,
    // index (x - 1) * n + (y - 1)
    table: Box<[Element]>,
}

impl BinaryOperation {
    /// Builds an operation from rows in the external table convention:
    /// `rows[y - 1][x - 1] = F(x, y)`.
    pub fn from_rows(chain: FiniteChain, rows: &[Vec<Element>]) -> Result<Self> {
        let n = chain.len();
        if rows.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: rows.len(),
            });
        }
        if let Some(row) = rows.iter().find(|row| row.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: row.len(),
            });
        }
        let mut table = vec![0; n * n];
        for (y, row) in rows.iter().enumerate() {
            for (x, &value) in row.iter().enumerate() {
                table[x * n + y] = value;
            }
        }
        Self::from_lexicographic(chain, table)
    }

    /// Builds an operation from its values listed in lexicographic point
    /// order, `(1,1), (1,2), …, (1,n), (2,1), …`.
    pub fn from_lexicographic(chain: FiniteChain, values: Vec<Element>) -> Result<Self> {
        let n = chain.len();
        if values.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: values.len(),
            });
        }
        if let Some(i) = values.iter().position(|v| !chain.contains(*v)) {
            return Err(Error::EntryOutOfRange {
                x: i / n + 1,
                y: i % n + 1,
                value: values[i],
                n,
            });
        }
        Ok(Self {
            chain,
            table: values.into_boxed_slice(),
        })
    }

    pub fn from_fn(
        chain: FiniteChain,
        mut f: impl FnMut(Element, Element) -> Element,
    ) -> Result<Self> {
        let values = chain.points().map(|(x, y)| f(x, y)).collect();
        Self::from_lexicographic(chain, values)
    }

    pub(crate) fn from_lexicographic_unchecked(chain: FiniteChain, values: Vec<Element>) -> Self {
        debug_assert_eq!(values.len(), chain.len() * chain.len());
        debug_assert!(values.iter().all(|v| chain.contains(*v)));
        Self {
            chain,
            table: values.into_boxed_slice(),
        }
    }

    pub fn min(chain: FiniteChain) -> Self {
        Self::from_fn(chain, std::cmp::min).expect("min is closed")
    }

    pub fn max(chain: FiniteChain) -> Self {
        Self::from_fn(chain, std::cmp::max).expect("max is closed")
    }

    /// The first projection `F(x, y) = x`.
    pub fn projection(chain: FiniteChain) -> Self {
        Self::from_fn(chain, |x, _| x).expect("projection is closed")
    }

    #[inline]
    pub fn chain(&self) -> FiniteChain {
        self.chain
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.chain.len()
    }

    /// `F(x, y)`. Panics when either argument lies outside the chain.
    #[inline]
    pub fn get(&self, x: Element, y: Element) -> Element {
        let n = self.chain.len();
        assert!(
            (1..=n).contains(&x) && (1..=n).contains(&y),
            "({x},{y}) is not a point of L_{n}"
        );
        self.table[(x - 1) * n + (y - 1)]
    }

    #[inline]
    pub fn at(&self, (x, y): Point) -> Element {
        self.get(x, y)
    }

    /// Values in lexicographic point order.
    pub fn values(&self) -> &[Element] {
        &self.table
    }

    /// Rows in the external convention, `rows[y - 1][x - 1] = F(x, y)`.
    pub fn rows(&self) -> Vec<Vec<Element>> {
        let n = self.n();
        (1..=n)
            .map(|y| (1..=n).map(|x| self.get(x, y)).collect())
            .collect()
    }

    /// The operation with its arguments swapped.
    pub fn transpose(&self) -> Self {
        let chain = self.chain;
        Self::from_fn(chain, |x, y| self.get(y, x)).expect("transpose stays in range")
    }

    /// Restricts the operation to `subset²` and relabels the subchain to
    /// `1..=|subset|`, preserving the order.
    pub fn restrict(&self, subset: &[Element]) -> Result<Restriction> {
        let mut labels: Vec<Element> = subset.to_vec();
        labels.sort_unstable();
        labels.dedup();
        if labels.is_empty() {
            return Err(Error::EmptySubset);
        }
        for &x in &labels {
            self.chain.check(x)?;
        }
        let mut relabel = vec![0; self.n() + 1];
        for (i, &x) in labels.iter().enumerate() {
            relabel[x] = i + 1;
        }
        let mut values = Vec::with_capacity(labels.len() * labels.len());
        for &x in &labels {
            for &y in &labels {
                let value = self.get(x, y);
                if relabel[value] == 0 {
                    return Err(Error::ClosureViolation {
                        point: (x, y),
                        value,
                    });
                }
                values.push(relabel[value]);
            }
        }
        let chain = FiniteChain::new(labels.len())?;
        Ok(Restriction {
            operation: Self::from_lexicographic_unchecked(chain, values),
            labels,
        })
    }
}

impl fmt::Debug for BinaryOperation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BinaryOperation")
            .field("n", &self.n())
            .field("rows", &self.rows())
            .finish()
    }
}

/// An operation restricted to a subchain, with the map back to the original
/// labels: `labels[i]` is the original element relabelled as `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Restriction {
    pub operation: BinaryOperation,
    pub labels: Vec<Element>,
}

impl Restriction {
    pub fn original(&self, relabelled: Element) -> Element {
        self.labels[relabelled - 1]
    }
}

/// One level set of an operation: every point where it takes `value`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelSet {
    pub value: Element,
    pub points: Vec<Point>,
}

impl LevelSet {
    pub fn is_isolated(&self) -> bool {
        self.points.len() == 1
    }
}

/// The partition of `L_n²` into classes of connected points.
///
/// Classes are sorted by value; points within a class are in lexicographic
/// order. Values the operation never takes have no class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContourPartition {
    pub chain: FiniteChain,
    pub classes: Vec<LevelSet>,
}

impl ContourPartition {
    pub fn of(op: &BinaryOperation) -> Self {
        let n = op.n();
        let mut buckets: Vec<Vec<Point>> = vec![Vec::new(); n + 1];
        for p in op.chain().points() {
            buckets[op.at(p)].push(p);
        }
        let classes = buckets
            .into_iter()
            .enumerate()
            .filter(|(_, points)| !points.is_empty())
            .map(|(value, points)| LevelSet { value, points })
            .collect();
        Self {
            chain: op.chain(),
            classes,
        }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of_value(&self, value: Element) -> Option<&LevelSet> {
        self.classes.iter().find(|c| c.value == value)
    }

    /// Points that are connected to no other point.
    pub fn isolated(&self) -> Vec<Point> {
        let mut points: Vec<Point> = self
            .classes
            .iter()
            .filter(|c| c.is_isolated())
            .map(|c| c.points[0])
            .collect();
        points.sort_unstable();
        points
    }
}

pub fn contour_partition(op: &BinaryOperation) -> ContourPartition {
    ContourPartition::of(op)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> FiniteChain {
        FiniteChain::new(n).unwrap()
    }

    #[test]
    fn empty_chain_is_rejected() {
        assert_eq!(FiniteChain::new(0), Err(Error::EmptyChain));
    }

    #[test]
    fn unique_operation_on_one_element() {
        let op = BinaryOperation::from_rows(chain(1), &[vec![1]]).unwrap();
        assert_eq!(op.get(1, 1), 1);
    }

    #[test]
    fn max_table_lookup() {
        let op = BinaryOperation::max(chain(3));
        assert_eq!(op.get(2, 3), 3);
        assert_eq!(op.get(3, 1), 3);
    }

    #[test]
    fn rows_follow_external_convention() {
        // line y holds F(1,y) … F(n,y); projection F(x,y) = x
        let op = BinaryOperation::from_rows(chain(2), &[vec![1, 2], vec![1, 2]]).unwrap();
        assert_eq!(op, BinaryOperation::projection(chain(2)));
        assert_eq!(op.get(1, 2), 1);
        assert_eq!(op.get(2, 1), 2);
        assert_eq!(op.rows(), vec![vec![1, 2], vec![1, 2]]);
    }

    #[test]
    fn dimension_and_range_errors() {
        let err = BinaryOperation::from_rows(chain(2), &[vec![1, 2]]).unwrap_err();
        assert_eq!(
            err,
            Error::DimensionMismatch {
                expected: 2,
                found: 1
            }
        );
        let err = BinaryOperation::from_rows(chain(2), &[vec![1, 2], vec![1]]).unwrap_err();
        assert_eq!(
            err,
            Error::DimensionMismatch {
                expected: 2,
                found: 1
            }
        );
        let err = BinaryOperation::from_rows(chain(2), &[vec![1, 3], vec![1, 2]]).unwrap_err();
        assert_eq!(
            err,
            Error::EntryOutOfRange {
                x: 2,
                y: 1,
                value: 3,
                n: 2
            }
        );
        let err = BinaryOperation::from_rows(chain(2), &[vec![0, 1], vec![1, 2]]).unwrap_err();
        assert!(matches!(err, Error::EntryOutOfRange { value: 0, .. }));
    }

    #[test]
    fn contour_of_min_on_three() {
        let part = ContourPartition::of(&BinaryOperation::min(chain(3)));
        assert_eq!(part.len(), 3);
        assert_eq!(part.classes[0].value, 1);
        assert_eq!(
            part.classes[0].points,
            vec![(1, 1), (1, 2), (1, 3), (2, 1), (3, 1)]
        );
        assert_eq!(part.classes[1].points, vec![(2, 2), (2, 3), (3, 2)]);
        assert_eq!(part.classes[2].points, vec![(3, 3)]);
        assert_eq!(part.isolated(), vec![(3, 3)]);
    }

    #[test]
    fn contour_of_single_point() {
        let part = ContourPartition::of(&BinaryOperation::max(chain(1)));
        assert_eq!(
            part.classes,
            vec![LevelSet {
                value: 1,
                points: vec![(1, 1)]
            }]
        );
    }

    #[test]
    fn restrict_max_gives_max() {
        let r = BinaryOperation::max(chain(3)).restrict(&[2, 3]).unwrap();
        assert_eq!(r.operation, BinaryOperation::max(chain(2)));
        assert_eq!(r.labels, vec![2, 3]);
        assert_eq!(r.original(1), 2);
    }

    #[test]
    fn restrict_errors() {
        let op = BinaryOperation::max(chain(3));
        assert_eq!(op.restrict(&[]).unwrap_err(), Error::EmptySubset);
        assert_eq!(
            op.restrict(&[4]).unwrap_err(),
            Error::ElementOutOfRange { element: 4, n: 3 }
        );
        let constant = BinaryOperation::from_fn(chain(3), |_, _| 2).unwrap();
        assert_eq!(
            constant.restrict(&[1, 3]).unwrap_err(),
            Error::ClosureViolation {
                point: (1, 1),
                value: 2
            }
        );
    }
}
