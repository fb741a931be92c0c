//! Distance bounds for built layer codes.

use layercode_css::logical_basis;
use layercode_gf2::{min_weight_in_coset, BinaryMatrix, BinaryVector, CosetSearch, SearchBudget};
use layercode_layer::LayerCode;
use layercode_logical::{quasiconcatenated_logical, PauliSide};

/// Certified lower and constructive upper bounds per species.
#[derive(Clone, Debug)]
pub struct DistanceBounds {
    /// No nontrivial X logical has weight below this (certified).
    pub lower_x: usize,
    /// Weight of an explicit X logical (upper bound on the distance).
    pub upper_x: usize,
    pub lower_z: usize,
    pub upper_z: usize,
    /// Whether each certified search ran to its cutoff without truncation.
    pub exact_x: bool,
    pub exact_z: bool,
    pub x_witness: BinaryVector,
    pub z_witness: BinaryVector,
}

impl DistanceBounds {
    pub fn lower(&self) -> usize {
        self.lower_x.min(self.lower_z)
    }

    pub fn upper(&self) -> usize {
        self.upper_x.min(self.upper_z)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum DistanceBoundsError {
    #[error("layer code has no logical qubits")]
    NoLogicals,
    #[error("quasiconcatenation failed: {0}")]
    Quasi(String),
}

/// Computes distance bounds: the upper bound is the best randomized coset
/// reduction over the quasiconcatenated basis logicals, the lower bound is
/// a certified enumeration of all supports up to `cutoff` (or up to where
/// the node budget ran out).
pub fn layer_distance_bounds(
    lc: &LayerCode,
    cutoff: usize,
    budget: &SearchBudget,
) -> Result<DistanceBounds, DistanceBoundsError> {
    let basis = logical_basis(&lc.input).map_err(|e| DistanceBoundsError::Quasi(e.to_string()))?;
    if basis.num_pairs() == 0 {
        return Err(DistanceBoundsError::NoLogicals);
    }

    let mut upper_x = usize::MAX;
    let mut x_witness = BinaryVector::zeros(lc.num_qubits());
    for v in &basis.x_logicals {
        let op = quasiconcatenated_logical(lc, v, PauliSide::X)
            .map_err(|e| DistanceBoundsError::Quasi(e.to_string()))?;
        let reduced = min_weight_in_coset(&op.support, &lc.hx, CosetSearch::Randomized, budget)
            .expect("shapes match");
        if reduced.weight < upper_x {
            upper_x = reduced.weight;
            x_witness = reduced.witness;
        }
    }
    let mut upper_z = usize::MAX;
    let mut z_witness = BinaryVector::zeros(lc.num_qubits());
    for v in &basis.z_logicals {
        let op = quasiconcatenated_logical(lc, v, PauliSide::Z)
            .map_err(|e| DistanceBoundsError::Quasi(e.to_string()))?;
        let reduced = min_weight_in_coset(&op.support, &lc.hz, CosetSearch::Randomized, budget)
            .expect("shapes match");
        if reduced.weight < upper_z {
            upper_z = reduced.weight;
            z_witness = reduced.witness;
        }
    }

    let cap_x = cutoff.min(upper_x);
    let cap_z = cutoff.min(upper_z);
    let (lower_x, exact_x) = certified_floor(&lc.hz, &lc.hx, cap_x, budget.exhaustion_limit);
    let (lower_z, exact_z) = certified_floor(&lc.hx, &lc.hz, cap_z, budget.exhaustion_limit);

    Ok(DistanceBounds {
        lower_x,
        upper_x,
        lower_z,
        upper_z,
        exact_x,
        exact_z,
        x_witness,
        z_witness,
    })
}

/// Certifies that no vector of weight <= cutoff lies in
/// `ker(penalty) \ rowspace(same)`; returns the first weight at which a
/// logical exists, or cutoff+1 when none do, plus whether the search was
/// complete (false means the node budget truncated it).
fn certified_floor(
    penalty: &BinaryMatrix,
    same: &BinaryMatrix,
    cutoff: usize,
    node_budget: u64,
) -> (usize, bool) {
    let n = penalty.num_cols();
    // adjacency lists keep the per-node cost at the qubit degree
    let adjacency: Vec<Vec<usize>> = {
        let mut adj = vec![Vec::new(); n];
        for (r, row) in penalty.rows().iter().enumerate() {
            for q in row.support() {
                adj[q].push(r);
            }
        }
        adj
    };
    let max_degree: usize = adjacency.iter().map(Vec::len).max().unwrap_or(1).max(1);
    let mut nodes = 0u64;
    for w in 1..=cutoff {
        let mut support = Vec::with_capacity(w);
        let mut syndrome = BinaryVector::zeros(penalty.num_rows());
        let ctx = FloorContext {
            same,
            n,
            adjacency: &adjacency,
            max_degree,
            node_budget,
        };
        match dfs(&ctx, w, 0, &mut support, &mut syndrome, &mut nodes) {
            DfsOutcome::Found => return (w, true),
            DfsOutcome::Exhausted => {}
            DfsOutcome::OutOfBudget => return (w, false),
        }
    }
    (cutoff + 1, true)
}

struct FloorContext<'a> {
    same: &'a BinaryMatrix,
    n: usize,
    adjacency: &'a [Vec<usize>],
    max_degree: usize,
    node_budget: u64,
}

enum DfsOutcome {
    Found,
    Exhausted,
    OutOfBudget,
}

fn dfs(
    ctx: &FloorContext<'_>,
    want: usize,
    start: usize,
    support: &mut Vec<usize>,
    syndrome: &mut BinaryVector,
    nodes: &mut u64,
) -> DfsOutcome {
    *nodes += 1;
    if *nodes > ctx.node_budget {
        return DfsOutcome::OutOfBudget;
    }
    let remaining = want - support.len();
    if syndrome.weight() > remaining * ctx.max_degree {
        return DfsOutcome::Exhausted;
    }
    if remaining == 0 {
        if syndrome.is_zero() {
            let v = BinaryVector::from_support(ctx.n, support).expect("in range");
            if !ctx.same.in_row_space(&v).unwrap() {
                return DfsOutcome::Found;
            }
        }
        return DfsOutcome::Exhausted;
    }
    for q in start..ctx.n {
        if ctx.n - q < remaining {
            break;
        }
        support.push(q);
        for &r in &ctx.adjacency[q] {
            syndrome.flip(r);
        }
        let out = dfs(ctx, want, q + 1, support, syndrome, nodes);
        support.pop();
        for &r in &ctx.adjacency[q] {
            syndrome.flip(r);
        }
        match out {
            DfsOutcome::Exhausted => {}
            other => return other,
        }
    }
    DfsOutcome::Exhausted
}
