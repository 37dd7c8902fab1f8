//! Index-addressable candidate spaces for brute-force checks.
//!
//! Every space maps an index in `0..len()` to one table, so a scan can be
//! cut into index ranges and handed to independent workers.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chain::{BinaryOperation, Element, FiniteChain};
use crate::error::{Error, Result};

/// Largest `n` for which every table on `L_n` is enumerated (`3^9`).
pub const MAX_ALL_N: usize = 3;
/// Largest `n` for all conservative tables (`2^(n²-n)`, `2^20` at 5).
pub const MAX_CONSERVATIVE_N: usize = 5;
/// Largest `n` for symmetric conservative tables (`2^(n(n-1)/2)`, `2^28` at 8).
pub const MAX_SYMMETRIC_CONSERVATIVE_N: usize = 8;
/// Largest `n` for all symmetric tables (`n^(n(n+1)/2)`, `4^10` at 4).
pub const MAX_SYMMETRIC_N: usize = 4;
/// Largest `n` for idempotent nondecreasing tables built by backtracking.
pub const MAX_MONOTONE_N: usize = 4;

#[derive(Clone, Debug)]
pub enum Space {
    /// Every table, in lexicographic order of the value sequence.
    All(FiniteChain),
    /// Tables with `F(x,y) ∈ {x,y}`; bit set means the larger argument.
    Conservative(FiniteChain),
    /// Conservative and symmetric; one bit per pair `x < y`.
    SymmetricConservative(FiniteChain),
    /// Symmetric tables; one digit per cell `x ≤ y`.
    Symmetric(FiniteChain),
    /// Independent uniform draws, one ChaCha stream per index.
    Sampled {
        chain: FiniteChain,
        samples: u64,
        seed: u64,
        symmetric: bool,
    },
    /// An explicit list.
    Listed(Vec<BinaryOperation>),
}

fn infeasible(what: &str, n: usize, max: usize) -> Error {
    Error::Infeasible {
        what: what.into(),
        n,
        bound: format!("n <= {max}"),
    }
}

impl Space {
    pub fn all(n: usize) -> Result<Self> {
        let chain = FiniteChain::new(n)?;
        if n > MAX_ALL_N {
            return Err(infeasible(
                "exhaustive enumeration of all tables",
                n,
                MAX_ALL_N,
            ));
        }
        Ok(Self::All(chain))
    }

    pub fn conservative(n: usize) -> Result<Self> {
        let chain = FiniteChain::new(n)?;
        if n > MAX_CONSERVATIVE_N {
            return Err(infeasible(
                "exhaustive enumeration of conservative tables",
                n,
                MAX_CONSERVATIVE_N,
            ));
        }
        Ok(Self::Conservative(chain))
    }

    pub fn symmetric_conservative(n: usize) -> Result<Self> {
        let chain = FiniteChain::new(n)?;
        if n > MAX_SYMMETRIC_CONSERVATIVE_N {
            return Err(infeasible(
                "exhaustive enumeration of symmetric conservative tables",
                n,
                MAX_SYMMETRIC_CONSERVATIVE_N,
            ));
        }
        Ok(Self::SymmetricConservative(chain))
    }

    pub fn symmetric(n: usize) -> Result<Self> {
        let chain = FiniteChain::new(n)?;
        if n > MAX_SYMMETRIC_N {
            return Err(infeasible(
                "exhaustive enumeration of symmetric tables",
                n,
                MAX_SYMMETRIC_N,
            ));
        }
        Ok(Self::Symmetric(chain))
    }

    pub fn sampled(n: usize, samples: u64, seed: u64, symmetric: bool) -> Result<Self> {
        Ok(Self::Sampled {
            chain: FiniteChain::new(n)?,
            samples,
            seed,
            symmetric,
        })
    }

    pub fn describe(&self) -> String {
        match self {
            Space::All(c) => format!("all tables on {c}"),
            Space::Conservative(c) => format!("conservative tables on {c}"),
            Space::SymmetricConservative(c) => format!("symmetric conservative tables on {c}"),
            Space::Symmetric(c) => format!("symmetric tables on {c}"),
            Space::Sampled {
                chain,
                samples,
                seed,
                symmetric,
            } => format!(
                "{samples} uniformly sampled {}tables on {chain} (seed {seed})",
                if *symmetric { "symmetric " } else { "" }
            ),
            Space::Listed(ops) => format!("{} listed tables", ops.len()),
        }
    }

    pub fn is_sampled(&self) -> bool {
        matches!(self, Space::Sampled { .. })
    }

    pub fn len(&self) -> u64 {
        match self {
            Space::All(c) => (c.len() as u64).pow((c.len() * c.len()) as u32),
            Space::Conservative(c) => 1 << (c.len() * (c.len() - 1)),
            Space::SymmetricConservative(c) => 1 << (c.len() * (c.len() - 1) / 2),
            Space::Symmetric(c) => (c.len() as u64).pow((c.len() * (c.len() + 1) / 2) as u32),
            Space::Sampled { samples, .. } => *samples,
            Space::Listed(ops) => ops.len() as u64,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The table at `index`. Panics when `index >= len()`.
    pub fn get(&self, index: u64) -> BinaryOperation {
        assert!(index < self.len(), "index {index} outside the space");
        match self {
            Space::All(chain) => {
                let n = chain.len();
                let cells = n * n;
                let mut values = vec![0; cells];
                let mut rest = index;
                for slot in values.iter_mut().rev() {
                    *slot = (rest % n as u64) as Element + 1;
                    rest /= n as u64;
                }
                BinaryOperation::from_lexicographic_unchecked(*chain, values)
            }
            Space::Conservative(chain) => {
                let n = chain.len();
                let width = n * (n - 1);
                let mut bit = width;
                let values = chain
                    .points()
                    .map(|(x, y)| {
                        if x == y {
                            return x;
                        }
                        bit -= 1;
                        if index >> bit & 1 == 1 {
                            x.max(y)
                        } else {
                            x.min(y)
                        }
                    })
                    .collect();
                BinaryOperation::from_lexicographic_unchecked(*chain, values)
            }
            Space::SymmetricConservative(chain) => {
                let n = chain.len();
                let mut bit = n * (n - 1) / 2;
                let mut values = vec![0; n * n];
                for x in 1..=n {
                    values[(x - 1) * n + (x - 1)] = x;
                    for y in x + 1..=n {
                        bit -= 1;
                        let v = if index >> bit & 1 == 1 { y } else { x };
                        values[(x - 1) * n + (y - 1)] = v;
                        values[(y - 1) * n + (x - 1)] = v;
                    }
                }
                BinaryOperation::from_lexicographic_unchecked(*chain, values)
            }
            Space::Symmetric(chain) => {
                let n = chain.len();
                let base = n as u64;
                let cells = n * (n + 1) / 2;
                let mut digits = vec![0; cells];
                let mut rest = index;
                for d in digits.iter_mut().rev() {
                    *d = (rest % base) as Element + 1;
                    rest /= base;
                }
                let mut values = vec![0; n * n];
                let mut k = 0;
                for x in 1..=n {
                    for y in x..=n {
                        values[(x - 1) * n + (y - 1)] = digits[k];
                        values[(y - 1) * n + (x - 1)] = digits[k];
                        k += 1;
                    }
                }
                BinaryOperation::from_lexicographic_unchecked(*chain, values)
            }
            Space::Sampled {
                chain,
                seed,
                symmetric,
                ..
            } => {
                let n = chain.len();
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                rng.set_stream(index);
                let mut values = vec![0; n * n];
                for x in 1..=n {
                    for y in 1..=n {
                        if *symmetric && y < x {
                            values[(x - 1) * n + (y - 1)] = values[(y - 1) * n + (x - 1)];
                        } else {
                            values[(x - 1) * n + (y - 1)] = rng.gen_range(1..=n);
                        }
                    }
                }
                BinaryOperation::from_lexicographic_unchecked(*chain, values)
            }
            Space::Listed(ops) => ops[index as usize].clone(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = BinaryOperation> + '_ {
        (0..self.len()).map(move |i| self.get(i))
    }
}

/// Every table on `L_n`, lexicographic order. Requires `n ≤ 3`.
pub fn enumerate_all_operations(n: usize) -> Result<impl Iterator<Item = BinaryOperation>> {
    let space = Space::all(n)?;
    Ok((0..space.len()).map(move |i| space.get(i)))
}

/// Every conservative table on `L_n`, optionally only the symmetric ones.
/// Requires `n ≤ 5`, or `n ≤ 8` with `symmetric_only`.
pub fn enumerate_conservative(
    n: usize,
    symmetric_only: bool,
) -> Result<impl Iterator<Item = BinaryOperation>> {
    let space = if symmetric_only {
        Space::symmetric_conservative(n)?
    } else {
        Space::conservative(n)?
    };
    Ok((0..space.len()).map(move |i| space.get(i)))
}

/// Every idempotent nondecreasing table on `L_n`, in lexicographic order.
///
/// Cells are filled in lexicographic point order; each value is bounded
/// below by its already-filled left and lower neighbours and by
/// `F(min,min) = min`, and above by `F(max,max) = max`.
pub fn enumerate_idempotent_nondecreasing(n: usize) -> Result<Vec<BinaryOperation>> {
    let chain = FiniteChain::new(n)?;
    if n > MAX_MONOTONE_N {
        return Err(infeasible(
            "enumeration of idempotent nondecreasing tables",
            n,
            MAX_MONOTONE_N,
        ));
    }
    let cells: Vec<(Element, Element)> = chain.points().collect();
    let mut values = vec![0; n * n];
    let mut out = Vec::new();
    fill(n, &cells, 0, &mut values, &mut out, chain);
    Ok(out)
}

fn fill(
    n: usize,
    cells: &[(Element, Element)],
    k: usize,
    values: &mut Vec<Element>,
    out: &mut Vec<BinaryOperation>,
    chain: FiniteChain,
) {
    if k == cells.len() {
        out.push(BinaryOperation::from_lexicographic_unchecked(
            chain,
            values.clone(),
        ));
        return;
    }
    let (x, y) = cells[k];
    let mut lower = x.min(y);
    if x > 1 {
        lower = lower.max(values[(x - 2) * n + (y - 1)]);
    }
    if y > 1 {
        lower = lower.max(values[(x - 1) * n + (y - 2)]);
    }
    let upper = x.max(y);
    let range = if x == y { x..=x } else { lower..=upper };
    for v in range {
        if v < lower {
            continue;
        }
        values[k] = v;
        fill(n, cells, k + 1, values, out, chain);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checkers;

    #[test]
    fn sizes() {
        assert_eq!(enumerate_all_operations(1).unwrap().count(), 1);
        assert_eq!(enumerate_all_operations(2).unwrap().count(), 16);
        assert_eq!(Space::all(3).unwrap().len(), 19683);
        assert_eq!(enumerate_conservative(2, false).unwrap().count(), 4);
        assert_eq!(enumerate_conservative(3, false).unwrap().count(), 64);
        assert_eq!(enumerate_conservative(3, true).unwrap().count(), 8);
        assert_eq!(Space::symmetric(3).unwrap().len(), 729);
        assert!(enumerate_all_operations(4).is_err());
        assert!(enumerate_conservative(6, false).is_err());
        assert!(enumerate_conservative(9, true).is_err());
        assert!(Space::symmetric(5).is_err());
    }

    #[test]
    fn all_tables_are_distinct_and_sorted() {
        let ops: Vec<_> = enumerate_all_operations(2).unwrap().collect();
        assert!(ops.windows(2).all(|w| w[0].values() < w[1].values()));
        assert_eq!(ops[0].values(), &[1, 1, 1, 1]);
        assert_eq!(ops[15].values(), &[2, 2, 2, 2]);
    }

    #[test]
    fn conservative_spaces_match_their_filters() {
        let filtered: Vec<_> = enumerate_all_operations(3)
            .unwrap()
            .filter(checkers::is_conservative)
            .collect();
        let listed: Vec<_> = enumerate_conservative(3, false).unwrap().collect();
        assert_eq!(filtered, listed);
        let sym: Vec<_> = listed
            .iter()
            .filter(|f| checkers::is_symmetric(f))
            .cloned()
            .collect();
        assert_eq!(
            sym,
            enumerate_conservative(3, true).unwrap().collect::<Vec<_>>()
        );
        let all_sym: Vec<_> = enumerate_all_operations(3)
            .unwrap()
            .filter(checkers::is_symmetric)
            .collect();
        assert_eq!(
            all_sym,
            Space::symmetric(3).unwrap().iter().collect::<Vec<_>>()
        );
    }

    #[test]
    fn backtracking_matches_filter() {
        for n in 1..=3 {
            let filtered: Vec<_> = enumerate_all_operations(n)
                .unwrap()
                .filter(|f| checkers::is_idempotent(f) && checkers::is_nondecreasing(f))
                .collect();
            assert_eq!(
                enumerate_idempotent_nondecreasing(n).unwrap(),
                filtered,
                "n = {n}"
            );
        }
        assert!(enumerate_idempotent_nondecreasing(5).is_err());
    }

    #[test]
    fn sampling_is_reproducible_per_index() {
        let space = Space::sampled(4, 10, 7, false).unwrap();
        let again = Space::sampled(4, 10, 7, false).unwrap();
        assert_eq!(space.get(3), again.get(3));
        assert_ne!(space.get(3), space.get(4));
        let sym = Space::sampled(5, 10, 7, true).unwrap();
        assert!(sym.iter().all(|f| checkers::is_symmetric(&f)));
    }
}
