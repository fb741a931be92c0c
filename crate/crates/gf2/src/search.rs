use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::{BinaryMatrix, BinaryVector, Gf2Error};

/// How a coset minimum-weight value was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Certified minimum over the whole coset.
    Exact,
    /// Upper bound from randomized search; the true minimum may be lower.
    Randomized,
}

/// Limits for the coset searches.
#[derive(Debug, Clone, Copy)]
pub struct SearchBudget {
    /// Exact search refuses when the coset has more than this many members.
    pub exhaustion_limit: u64,
    /// Number of randomized restarts.
    pub restarts: u32,
    /// Seed for the randomized mode; restarts derive their own streams.
    pub seed: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            exhaustion_limit: 1 << 24,
            restarts: 200,
            seed: 0,
        }
    }
}

/// Requested search strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CosetSearch {
    Exact,
    Randomized,
}

/// Result of a coset search: the weight found, a witness attaining it, and
/// the mode that produced the value.
#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub weight: usize,
    pub witness: BinaryVector,
    pub mode: SearchMode,
}

/// Error cases for [`min_weight_in_coset`].
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SearchError {
    #[error(transparent)]
    Shape(#[from] Gf2Error),
    #[error("coset has 2^{dimension} members, over the exhaustion limit {limit}")]
    BudgetExceeded { dimension: usize, limit: u64 },
}

/// Minimum Hamming weight over the coset `v ⊕ rowspace(m)`.
///
/// Exact mode enumerates combinations of an independent row basis by
/// increasing generator count with weight pruning, and refuses (never
/// guesses) when the coset exceeds the exhaustion limit. Randomized mode
/// returns an upper bound from seeded random-combination restarts followed
/// by greedy single-generator descent.
///
/// Ties between witnesses break toward the lexicographically smallest
/// support, so results are reproducible across runs and thread counts.
pub fn min_weight_in_coset(
    v: &BinaryVector,
    m: &BinaryMatrix,
    search: CosetSearch,
    budget: &SearchBudget,
) -> Result<SearchOutcome, SearchError> {
    if v.len() != m.num_cols() {
        return Err(Gf2Error::LengthMismatch {
            expected: m.num_cols(),
            got: v.len(),
        }
        .into());
    }
    // Independent generators only; the coset is the same.
    let basis = independent_rows(m);
    match search {
        CosetSearch::Exact => {
            let dim = basis.len();
            if dim >= 63 || (1u64 << dim) > budget.exhaustion_limit {
                return Err(SearchError::BudgetExceeded {
                    dimension: dim,
                    limit: budget.exhaustion_limit,
                });
            }
            Ok(exact_search(v, &basis))
        }
        CosetSearch::Randomized => Ok(randomized_search(v, &basis, budget)),
    }
}

fn independent_rows(m: &BinaryMatrix) -> Vec<BinaryVector> {
    let mut basis: Vec<BinaryVector> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for row in m.rows() {
        let mut r = row.clone();
        for (b, &p) in basis.iter().zip(&pivots) {
            if r.get(p) {
                r.xor_assign(b);
            }
        }
        if let Some(p) = r.first_set() {
            let pos = pivots.partition_point(|&q| q < p);
            basis.insert(pos, r);
            pivots.insert(pos, p);
        }
    }
    basis
}

fn better(weight: usize, witness: &BinaryVector, best: &mut Option<(usize, BinaryVector)>) {
    match best {
        None => *best = Some((weight, witness.clone())),
        Some((bw, bv)) => {
            if weight < *bw || (weight == *bw && witness.support() < bv.support()) {
                *best = Some((weight, witness.clone()));
            }
        }
    }
}

/// Gray-code walk over all 2^dim combinations; one XOR per step.
fn exact_search(v: &BinaryVector, basis: &[BinaryVector]) -> SearchOutcome {
    let dim = basis.len();
    let mut current = v.clone();
    let mut best: Option<(usize, BinaryVector)> = None;
    better(current.weight(), &current, &mut best);
    let total: u64 = 1 << dim;
    for step in 1..total {
        let g = step.trailing_zeros() as usize;
        current.xor_assign(&basis[g]);
        better(current.weight(), &current, &mut best);
    }
    let (weight, witness) = best.expect("coset is nonempty");
    SearchOutcome {
        weight,
        witness,
        mode: SearchMode::Exact,
    }
}

fn randomized_search(
    v: &BinaryVector,
    basis: &[BinaryVector],
    budget: &SearchBudget,
) -> SearchOutcome {
    let mut best: Option<(usize, BinaryVector)> = None;
    better(v.weight(), v, &mut best);
    for restart in 0..budget.restarts {
        // Derived stream per restart keeps results independent of sharding.
        let mut rng = ChaCha12Rng::seed_from_u64(
            budget.seed ^ (0x9e37_79b9_7f4a_7c15u64.wrapping_mul(u64::from(restart) + 1)),
        );
        let mut x = v.clone();
        for b in basis {
            if rng.gen::<bool>() {
                x.xor_assign(b);
            }
        }
        // Greedy descent: keep applying the best single generator.
        loop {
            let mut improved = false;
            for b in basis {
                let cand = x.xor(b);
                if cand.weight() < x.weight() {
                    x = cand;
                    improved = true;
                }
            }
            if !improved {
                break;
            }
        }
        better(x.weight(), &x, &mut best);
    }
    let (weight, witness) = best.expect("coset is nonempty");
    SearchOutcome {
        weight,
        witness,
        mode: SearchMode::Randomized,
    }
}
