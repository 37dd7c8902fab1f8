//! The library checked against independently written brute force.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigUint;

use uninorm::generators::{
    binomial_as, count_uninorms, count_uninorms_as, enumerate_gspecs, generate_all_uninorms_gc,
    uninorm_from_gspec,
};
use uninorm::oracle::{enumerate_conservative, enumerate_idempotent_nondecreasing};
use uninorm::single_peaked::{enumerate_single_peaked, order_to_uninorm};
use uninorm::{checkers, BinaryOperation, Error, FiniteChain, LinearOrder};

/// A table as a plain closure-free grid, `t[x-1][y-1] = F(x, y)`.
type Grid = Vec<Vec<usize>>;

fn grid(op: &BinaryOperation) -> Grid {
    (1..=op.n())
        .map(|x| (1..=op.n()).map(|y| op.get(x, y)).collect())
        .collect()
}

fn assoc(t: &Grid) -> bool {
    let n = t.len();
    (0..n)
        .cartesian_product(0..n)
        .cartesian_product(0..n)
        .all(|((a, b), c)| t[t[a][b] - 1][c] == t[a][t[b][c] - 1])
}

fn sym(t: &Grid) -> bool {
    let n = t.len();
    (0..n)
        .cartesian_product(0..n)
        .all(|(a, b)| t[a][b] == t[b][a])
}

fn nondecreasing(t: &Grid) -> bool {
    let n = t.len();
    (0..n).cartesian_product(0..n).all(|(a, b)| {
        (a + 1 == n || t[a][b] <= t[a + 1][b]) && (b + 1 == n || t[a][b] <= t[a][b + 1])
    })
}

fn neutral(t: &Grid) -> Option<usize> {
    let n = t.len();
    (0..n)
        .find(|&e| (0..n).all(|x| t[e][x] == x + 1 && t[x][e] == x + 1))
        .map(|e| e + 1)
}

/// All conservative grids, built cell by cell from `{x, y}` choices.
fn conservative_grids(n: usize) -> Vec<Grid> {
    let cells: Vec<(usize, usize)> = (1..=n).cartesian_product(1..=n).collect();
    cells
        .iter()
        .map(|&(x, y)| if x == y { vec![x] } else { vec![x, y] })
        .multi_cartesian_product()
        .map(|values| values.chunks(n).map(<[usize]>::to_vec).collect())
        .collect()
}

#[test]
fn conservative_counts_match_brute_force() {
    // n, conservative, ∧ associative, ∧ symmetric, ∧ symmetric ∧ associative
    let pinned = [(2, 4, 4, 2, 2), (3, 64, 20, 8, 6), (4, 4096, 138, 64, 24)];
    for (n, all, a, s, sa) in pinned {
        let grids = conservative_grids(n);
        assert_eq!(grids.len(), all);
        assert_eq!(grids.iter().filter(|t| assoc(t)).count(), a);
        assert_eq!(grids.iter().filter(|t| sym(t)).count(), s);
        assert_eq!(grids.iter().filter(|t| sym(t) && assoc(t)).count(), sa);

        let library: BTreeSet<Grid> = enumerate_conservative(n, false)
            .unwrap()
            .map(|op| grid(&op))
            .collect();
        assert_eq!(library, grids.iter().cloned().collect());
        let lib_assoc = enumerate_conservative(n, false)
            .unwrap()
            .filter(|op| checkers::is_associative_conservative_rect(op).unwrap())
            .count();
        assert_eq!(lib_assoc, a);
    }
}

#[test]
fn uninorms_match_filtered_grids() {
    for n in 1..=4 {
        let brute: BTreeSet<Grid> = conservative_grids(n)
            .into_iter()
            .filter(|t| sym(t) && nondecreasing(t))
            .collect();
        let generated: BTreeSet<Grid> = generate_all_uninorms_gc(n)
            .unwrap()
            .map(|op| grid(&op))
            .collect();
        assert_eq!(brute, generated, "n = {n}");
        assert!(brute.iter().all(|t| assoc(t) && neutral(t).is_some()));
        assert_eq!(brute.len() as u64, count_uninorms(n).unwrap());
    }
}

#[test]
fn single_peaked_by_permutation_filter() {
    let peaked = |p: &[usize]| {
        let pos = |v: usize| p.iter().position(|&x| x == v).unwrap();
        let n = p.len();
        (1..=n)
            .tuple_combinations()
            .all(|(a, b, c): (usize, usize, usize)| pos(b) < pos(a) || pos(b) < pos(c))
    };
    for n in 1..=8 {
        let filtered: BTreeSet<Vec<usize>> =
            (1..=n).permutations(n).filter(|p| peaked(p)).collect();
        let enumerated: Vec<Vec<usize>> = enumerate_single_peaked(n)
            .unwrap()
            .map(|o| o.sequence().to_vec())
            .collect();
        assert_eq!(enumerated.len(), 1 << (n - 1));
        assert_eq!(
            enumerated.iter().cloned().collect::<BTreeSet<_>>(),
            filtered,
            "n = {n}"
        );
        assert!(enumerated.iter().all(|p| p[n - 1] == 1 || p[n - 1] == n));
    }
}

#[test]
fn three_constructions_agree() {
    for n in 1..=8 {
        let gc: BTreeSet<BinaryOperation> = generate_all_uninorms_gc(n).unwrap().collect();
        let by_order: BTreeSet<BinaryOperation> = enumerate_single_peaked(n)
            .unwrap()
            .map(|o| order_to_uninorm(&o).unwrap())
            .collect();
        let by_spec: BTreeSet<BinaryOperation> = enumerate_gspecs(n)
            .unwrap()
            .map(|s| uninorm_from_gspec(&s))
            .collect();
        assert_eq!(gc, by_order, "n = {n}");
        assert_eq!(gc, by_spec, "n = {n}");
    }
}

#[test]
fn max_over_an_order_is_the_order_maximum() {
    let ord = LinearOrder::new(vec![3, 2, 4, 1, 5]).unwrap();
    let op = order_to_uninorm(&ord).unwrap();
    let pos = |v: usize| ord.sequence().iter().position(|&x| x == v).unwrap();
    for (x, y) in (1..=5).cartesian_product(1..=5) {
        let expected = if pos(x) >= pos(y) { x } else { y };
        assert_eq!(op.get(x, y), expected);
    }
}

#[test]
fn closed_form_against_bignum() {
    for n in 1..=64 {
        let exact = BigUint::from(2u32).pow(n as u32 - 1);
        assert_eq!(BigUint::from(count_uninorms(n).unwrap()), exact);
        assert_eq!(BigUint::from(count_uninorms_as::<u128>(n).unwrap()), exact);
    }
    assert_eq!(count_uninorms(65), Err(Error::CountOverflow { n: 65 }));
    assert_eq!(
        BigUint::from(count_uninorms_as::<u128>(100).unwrap()),
        BigUint::from(2u32).pow(99)
    );
    assert!(count_uninorms_as::<u8>(9).is_err());
}

#[test]
fn binomials_sum_to_power_of_two() {
    for n in 1..=40 {
        let sum: u64 = (0..n).map(|k| binomial_as::<u64>(n - 1, k).unwrap()).sum();
        assert_eq!(sum, count_uninorms(n).unwrap());
    }
}

#[test]
fn monotone_backtracking_matches_filter() {
    for n in 1..=3 {
        let chain = FiniteChain::new(n).unwrap();
        let all_cells = (0..n * n).map(|_| 1..=n).multi_cartesian_product();
        let brute: BTreeSet<BinaryOperation> = all_cells
            .map(|v| BinaryOperation::from_lexicographic(chain, v).unwrap())
            .filter(|op| checkers::is_idempotent(op) && checkers::is_nondecreasing(op))
            .collect();
        let listed: BTreeSet<BinaryOperation> = enumerate_idempotent_nondecreasing(n)
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(brute, listed, "n = {n}");
    }
}
