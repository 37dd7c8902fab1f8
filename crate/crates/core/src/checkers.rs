//! Decision procedures for the properties of binary operations on a chain.
//!
//! Each property has a definitional check that scans points (or triples,
//! quadruples) in lexicographic order and reports the first violation it
//! meets. Where a property also has a structural test phrased on the contour
//! plot, that test lives here as a separate routine so the two can be
//! compared.

use serde::{Deserialize, Serialize};

use crate::chain::{BinaryOperation, ContourPartition, Element, Point};
use crate::error::{Error, Result};

pub fn idempotency_violation(op: &BinaryOperation) -> Option<Element> {
    op.chain().elements().find(|&x| op.get(x, x) != x)
}

pub fn is_idempotent(op: &BinaryOperation) -> bool {
    idempotency_violation(op).is_none()
}

pub fn conservativeness_violation(op: &BinaryOperation) -> Option<Point> {
    op.chain().points().find(|&(x, y)| {
        let v = op.get(x, y);
        v != x && v != y
    })
}

pub fn is_conservative(op: &BinaryOperation) -> bool {
    conservativeness_violation(op).is_none()
}

/// Contour-plot form of conservativeness: every diagonal point `(x,x)`
/// carries `x`, and every point off the diagonal shares its class with
/// `(x,x)` or `(y,y)`. Returns the first offending point.
pub fn contour_conservativeness_violation(op: &BinaryOperation) -> Option<Point> {
    let n = op.n();
    let partition = ContourPartition::of(op);
    let mut class_of = vec![usize::MAX; n * n];
    for (id, class) in partition.classes.iter().enumerate() {
        for &(x, y) in &class.points {
            class_of[(x - 1) * n + (y - 1)] = id;
        }
    }
    let class = |(x, y): Point| class_of[(x - 1) * n + (y - 1)];
    if let Some(x) = idempotency_violation(op) {
        return Some((x, x));
    }
    op.chain()
        .points()
        .filter(|&(x, y)| x != y)
        .find(|&(x, y)| class((x, y)) != class((x, x)) && class((x, y)) != class((y, y)))
}

pub fn is_conservative_via_contour(op: &BinaryOperation) -> bool {
    contour_conservativeness_violation(op).is_none()
}

/// First `(x, y)` with `F(x,y) != F(y,x)`.
pub fn symmetry_violation(op: &BinaryOperation) -> Option<Point> {
    op.chain()
        .points()
        .find(|&(x, y)| x < y && op.get(x, y) != op.get(y, x))
}

pub fn is_symmetric(op: &BinaryOperation) -> bool {
    symmetry_violation(op).is_none()
}

/// Two neighbouring points `lower ≤ upper` with `F(lower) > F(upper)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonotonicityViolation {
    pub lower: Point,
    pub upper: Point,
}

/// Checks single steps in each coordinate; by transitivity this covers all
/// comparable pairs.
pub fn monotonicity_violation(op: &BinaryOperation) -> Option<MonotonicityViolation> {
    let n = op.n();
    for (x, y) in op.chain().points() {
        if x < n && op.get(x, y) > op.get(x + 1, y) {
            return Some(MonotonicityViolation {
                lower: (x, y),
                upper: (x + 1, y),
            });
        }
        if y < n && op.get(x, y) > op.get(x, y + 1) {
            return Some(MonotonicityViolation {
                lower: (x, y),
                upper: (x, y + 1),
            });
        }
    }
    None
}

pub fn is_nondecreasing(op: &BinaryOperation) -> bool {
    monotonicity_violation(op).is_none()
}

/// First triple `(x, y, z)` with `F(F(x,y),z) != F(x,F(y,z))`.
pub fn associativity_violation(op: &BinaryOperation) -> Option<[Element; 3]> {
    let chain = op.chain();
    for x in chain.elements() {
        for y in chain.elements() {
            let xy = op.get(x, y);
            for z in chain.elements() {
                if op.get(xy, z) != op.get(x, op.get(y, z)) {
                    return Some([x, y, z]);
                }
            }
        }
    }
    None
}

pub fn is_associative(op: &BinaryOperation) -> bool {
    associativity_violation(op).is_none()
}

/// The rectangle of `L_n²` with vertices `(a,c)`, `(b,c)`, `(b,b)`, `(a,b)`
/// for pairwise distinct `a`, `b`, `c`. Its only diagonal vertex is `(b,b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Rectangle {
    pub a: Element,
    pub b: Element,
    pub c: Element,
}

impl Rectangle {
    pub fn vertices(&self) -> [Point; 4] {
        let Rectangle { a, b, c } = *self;
        [(a, c), (b, c), (b, b), (a, b)]
    }

    pub fn off_diagonal(&self) -> [Point; 3] {
        let Rectangle { a, b, c } = *self;
        [(a, c), (b, c), (a, b)]
    }

    /// True when the three off-diagonal vertices are pairwise disconnected,
    /// i.e. `F(a,b)`, `F(a,c)`, `F(b,c)` are pairwise distinct.
    pub fn is_witness(&self, op: &BinaryOperation) -> bool {
        let [p, q, r] = self.off_diagonal().map(|pt| op.at(pt));
        p != q && q != r && p != r
    }
}

/// Rectangles with exactly one vertex on the diagonal, in lexicographic
/// `(a, b, c)` order. With `symmetric`, one representative `a < b < c` per
/// three-element subset.
pub fn rectangles(n: usize, symmetric: bool) -> impl Iterator<Item = Rectangle> {
    (1..=n).flat_map(move |a| {
        (1..=n).flat_map(move |b| {
            (1..=n)
                .filter(move |&c| {
                    if symmetric {
                        a < b && b < c
                    } else {
                        a != b && b != c && a != c
                    }
                })
                .map(move |c| Rectangle { a, b, c })
        })
    })
}

/// `n(n-1)(n-2)`, or `C(n,3)` when `symmetric`.
pub fn rectangle_count(n: usize, symmetric: bool) -> u64 {
    let n = n as u64;
    let ordered = n * n.saturating_sub(1) * n.saturating_sub(2);
    if symmetric {
        ordered / 6
    } else {
        ordered
    }
}

/// Rectangle test for conservative operations. Returns the first rectangle
/// whose three off-diagonal vertices are pairwise disconnected, or `None`
/// when the operation is associative. Symmetric inputs only need one
/// rectangle per three-element subset.
pub fn rectangle_test(op: &BinaryOperation) -> Result<Option<Rectangle>> {
    if let Some(p) = conservativeness_violation(op) {
        return Err(Error::NotConservative(p));
    }
    let symmetric = is_symmetric(op);
    Ok(rectangles(op.n(), symmetric).find(|r| r.is_witness(op)))
}

pub fn is_associative_conservative_rect(op: &BinaryOperation) -> Result<bool> {
    rectangle_test(op).map(|w| w.is_none())
}

/// First `[x, y, u, v]` with `F(F(x,y),F(u,v)) != F(F(x,u),F(y,v))`.
pub fn bisymmetry_violation(op: &BinaryOperation) -> Option<[Element; 4]> {
    let chain = op.chain();
    for x in chain.elements() {
        for y in chain.elements() {
            let xy = op.get(x, y);
            for u in chain.elements() {
                let xu = op.get(x, u);
                for v in chain.elements() {
                    if op.get(xy, op.get(u, v)) != op.get(xu, op.get(y, v)) {
                        return Some([x, y, u, v]);
                    }
                }
            }
        }
    }
    None
}

pub fn is_bisymmetric(op: &BinaryOperation) -> bool {
    bisymmetry_violation(op).is_none()
}

/// The element `e` with `F(x,e) = F(e,x) = x` for every `x`, if any.
pub fn find_neutral_element(op: &BinaryOperation) -> Option<Element> {
    let chain = op.chain();
    chain.elements().find(|&e| {
        chain
            .elements()
            .all(|x| op.get(x, e) == x && op.get(e, x) == x)
    })
}

/// A vertical and a horizontal section meeting at `(element, element)` on
/// which the operation acts as the identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeutralSections {
    pub element: Element,
    /// Points `(element, y)`.
    pub vertical: Vec<Point>,
    /// Points `(x, element)`.
    pub horizontal: Vec<Point>,
}

fn section_is_identity(
    op: &BinaryOperation,
    section: &[Point],
    coordinate: fn(Point) -> Element,
) -> bool {
    section.iter().all(|&p| op.at(p) == coordinate(p))
}

/// Section form of the neutral-element test: walks the diagonal and keeps
/// the first pair of sections through it on which `F` is the identity.
pub fn neutral_sections(op: &BinaryOperation) -> Option<NeutralSections> {
    let chain = op.chain();
    chain.elements().find_map(|d| {
        let vertical: Vec<Point> = chain.elements().map(|y| (d, y)).collect();
        let horizontal: Vec<Point> = chain.elements().map(|x| (x, d)).collect();
        (section_is_identity(op, &vertical, |(_, y)| y)
            && section_is_identity(op, &horizontal, |(x, _)| x))
        .then_some(NeutralSections {
            element: d,
            vertical,
            horizontal,
        })
    })
}

pub fn find_neutral_via_sections(op: &BinaryOperation) -> Option<Element> {
    neutral_sections(op).map(|s| s.element)
}

/// Points forming singleton level sets, in lexicographic order.
pub fn isolated_points(op: &BinaryOperation) -> Vec<Point> {
    ContourPartition::of(op).isolated()
}

/// For conservative operations, `e` is neutral exactly when `(e,e)` is
/// isolated, and at most one point is isolated.
pub fn find_neutral_conservative(op: &BinaryOperation) -> Result<Option<Element>> {
    if let Some(p) = conservativeness_violation(op) {
        return Err(Error::NotConservative(p));
    }
    let isolated = isolated_points(op);
    Ok(match isolated.as_slice() {
        [(x, y)] if x == y => Some(*x),
        _ => None,
    })
}

/// For idempotent operations, true iff every isolated point lies on the
/// diagonal. A `false` return means the checkers themselves are broken.
pub fn isolated_implies_diagonal_check(op: &BinaryOperation) -> Result<bool> {
    if let Some(x) = idempotency_violation(op) {
        return Err(Error::NotIdempotent(x));
    }
    Ok(isolated_points(op).iter().all(|(x, y)| x == y))
}
