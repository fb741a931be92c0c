//! Energy barriers: exact bottleneck search and the constructive sweep.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use layercode_css::CssCode;
use layercode_gf2::{BinaryMatrix, BinaryVector};
use layercode_layer::{LayerCode, Owner, QubitRole};
use layercode_logical::{PauliOperator, PauliSide};

/// How a barrier value was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BarrierMode {
    Exact,
    UpperBound,
}

/// A barrier value with a replayable witness: the ordered single-qubit
/// flips whose cumulative products attain the reported maximum penalty.
#[derive(Clone, Debug)]
pub struct BarrierResult {
    pub value: usize,
    pub mode: BarrierMode,
    pub witness: Vec<usize>,
}

#[derive(Debug, thiserror::Error)]
pub enum BarrierError {
    #[error("{n} qubits exceed the exact-search limit {limit}; use the sweep bound")]
    TooLarge { n: usize, limit: usize },
    #[error("code has no nontrivial logical of this type")]
    NoLogicals,
    #[error("input operator is not in the normalizer")]
    NotPhysical,
    #[error("sweep routing failed to annihilate an excitation; integrity failure")]
    RoutingFailed,
}

/// Max cumulative syndrome weight over the prefixes of a flip sequence.
pub fn replay_penalty(witness: &[usize], checks: &BinaryMatrix) -> usize {
    let mut state = BinaryVector::zeros(checks.num_cols());
    let mut worst = 0;
    for &q in witness {
        state.flip(q);
        worst = worst.max(checks.mul_vector(&state).weight());
    }
    worst
}

/// Exact energy barrier of an input code for one Pauli species.
///
/// Best-first bottleneck search over the flip graph of `{0,1}^n`: node cost
/// is the syndrome weight against the opposite check matrix, a path's cost
/// is its maximum node cost, and the answer is the cheapest path from the
/// identity to any nontrivial logical. States are visited in cost order
/// with memoization, so the first logical popped is optimal.
pub fn energy_barrier_exact(
    code: &CssCode,
    side: PauliSide,
) -> Result<BarrierResult, BarrierError> {
    const LIMIT: usize = 20;
    let n = code.num_qubits();
    if n > LIMIT {
        return Err(BarrierError::TooLarge { n, limit: LIMIT });
    }
    let (penalty_checks, same_side) = match side {
        PauliSide::X => (code.hz(), code.hx()),
        PauliSide::Z => (code.hx(), code.hz()),
    };
    let n_checks = penalty_checks.num_rows();
    assert!(n_checks <= 64, "syndrome fits one word at n <= 20");

    // Per-qubit syndrome masks make the node cost a couple of xors.
    let col_syndrome: Vec<u64> = (0..n)
        .map(|q| {
            let mut mask = 0u64;
            for (r, row) in penalty_checks.rows().iter().enumerate() {
                if row.get(q) {
                    mask |= 1 << r;
                }
            }
            mask
        })
        .collect();

    let is_logical = |state: u32| -> bool {
        if state == 0 {
            return false;
        }
        let mut v = BinaryVector::zeros(n);
        for q in 0..n {
            if (state >> q) & 1 == 1 {
                v.set(q, true);
            }
        }
        !same_side.in_row_space(&v).unwrap()
    };

    let mut best: HashMap<u32, usize> = HashMap::new();
    let mut parent: HashMap<u32, (u32, usize)> = HashMap::new();
    let mut heap: BinaryHeap<Reverse<(usize, u32)>> = BinaryHeap::new();
    best.insert(0, 0);
    heap.push(Reverse((0, 0)));
    let mut syndromes: HashMap<u32, u64> = HashMap::new();
    syndromes.insert(0, 0);

    while let Some(Reverse((cost, state))) = heap.pop() {
        if best.get(&state).copied().unwrap_or(usize::MAX) < cost {
            continue;
        }
        if is_logical(state) && syndromes[&state] == 0 {
            // reconstruct the flip order
            let mut witness = Vec::new();
            let mut cur = state;
            while cur != 0 {
                let (prev, q) = parent[&cur];
                witness.push(q);
                cur = prev;
            }
            witness.reverse();
            debug_assert_eq!(replay_penalty(&witness, penalty_checks), cost);
            return Ok(BarrierResult {
                value: cost,
                mode: BarrierMode::Exact,
                witness,
            });
        }
        let syndrome = syndromes[&state];
        for (q, &mask) in col_syndrome.iter().enumerate() {
            let next = state ^ (1u32 << q);
            let next_syndrome = syndrome ^ mask;
            let next_cost = cost.max(next_syndrome.count_ones() as usize);
            if best.get(&next).copied().unwrap_or(usize::MAX) > next_cost {
                best.insert(next, next_cost);
                syndromes.insert(next, next_syndrome);
                parent.insert(next, (state, q));
                heap.push(Reverse((next_cost, next)));
            }
        }
    }
    Err(BarrierError::NoLogicals)
}

/// Exact bottleneck path from the identity to a *specific* target operator.
fn exact_sequence_to(penalty_checks: &BinaryMatrix, target: &BinaryVector) -> Option<Vec<usize>> {
    let n = penalty_checks.num_cols();
    if n > 20 {
        // fall back to support order; still a valid sequence
        return Some(target.support());
    }
    let goal: u32 = target.support().iter().fold(0, |acc, &q| acc | (1u32 << q));
    let col_syndrome: Vec<u64> = (0..n)
        .map(|q| {
            let mut mask = 0u64;
            for (r, row) in penalty_checks.rows().iter().enumerate() {
                if row.get(q) {
                    mask |= 1 << r;
                }
            }
            mask
        })
        .collect();
    let mut best: HashMap<u32, usize> = HashMap::new();
    let mut parent: HashMap<u32, (u32, usize)> = HashMap::new();
    let mut syndromes: HashMap<u32, u64> = HashMap::new();
    let mut heap: BinaryHeap<Reverse<(usize, u32)>> = BinaryHeap::new();
    best.insert(0, 0);
    syndromes.insert(0, 0);
    heap.push(Reverse((0, 0)));
    while let Some(Reverse((cost, state))) = heap.pop() {
        if best.get(&state).copied().unwrap_or(usize::MAX) < cost {
            continue;
        }
        if state == goal {
            let mut witness = Vec::new();
            let mut cur = state;
            while cur != 0 {
                let (prev, q) = parent[&cur];
                witness.push(q);
                cur = prev;
            }
            witness.reverse();
            return Some(witness);
        }
        let syndrome = syndromes[&state];
        for (q, &mask) in col_syndrome.iter().enumerate() {
            let next = state ^ (1u32 << q);
            let next_syndrome = syndrome ^ mask;
            let next_cost = cost.max(next_syndrome.count_ones() as usize);
            if best.get(&next).copied().unwrap_or(usize::MAX) > next_cost {
                best.insert(next, next_cost);
                syndromes.insert(next, next_syndrome);
                parent.insert(next, (state, q));
                heap.push(Reverse((next_cost, next)));
            }
        }
    }
    None
}

/// Sorted station/row structure of one check layer at the sweep height.
struct RoutingChain {
    /// Mover qubit ids between consecutive stations (stations are the link
    /// plaquette sites in ascending y).
    movers: Vec<usize>,
    /// Crossing qubit (on the string) per supported plane, by station.
    station_of_plane: HashMap<usize, usize>,
    /// Current excitation position, as a station index.
    excitation: Option<usize>,
}

fn routing_chain(
    lc: &LayerCode,
    side: PauliSide,
    check_index: usize,
    support: &[usize],
) -> RoutingChain {
    // stations = link markers; movers = the layer's on-chain qubits between
    // them, all at the sweep height (z = 1 for X sweeps, x = 0 for Z).
    let mut markers: Vec<i64> = Vec::new();
    let mut rows: Vec<(i64, usize)> = Vec::new();
    for q in &lc.qubits {
        match (side, q.owner, q.role) {
            (PauliSide::X, Owner::ZCheckLayer(j), QubitRole::YEdge)
                if j == check_index && q.pos[2] == 2 =>
            {
                markers.push(q.pos[1]);
            }
            (PauliSide::X, Owner::ZCheckLayer(j), QubitRole::ZEdge)
                if j == check_index && q.pos[2] == 1 =>
            {
                rows.push((q.pos[1], q.id));
            }
            (PauliSide::Z, Owner::XCheckLayer(k), QubitRole::YEdge)
                if k == check_index && q.pos[0] == 1 =>
            {
                markers.push(q.pos[1]);
            }
            (PauliSide::Z, Owner::XCheckLayer(k), QubitRole::XEdge)
                if k == check_index && q.pos[0] == 0 =>
            {
                rows.push((q.pos[1], q.id));
            }
            _ => {}
        }
    }
    markers.sort_unstable();
    markers.dedup();
    rows.sort_unstable();
    let movers = rows.iter().map(|&(_, id)| id).collect();

    let frame = &lc.layout.frame;
    let first = *support.first().expect("nonempty");
    let last = *support.last().expect("nonempty");
    let mut station_of_plane = HashMap::new();
    for &i in support {
        let station = if i == first {
            0
        } else if i == last {
            markers.len() - 1
        } else {
            markers
                .iter()
                .position(|&m| m == frame.qubit_plane(i))
                .expect("middle junction keeps its plane as marker")
        };
        station_of_plane.insert(i, station);
    }
    RoutingChain {
        movers,
        station_of_plane,
        excitation: None,
    }
}

impl RoutingChain {
    /// Flips the movers between the current excitation and `target` in walk
    /// order, so the excitation hops station to station and the layer never
    /// holds more than one.
    fn route_to(&mut self, target: usize, witness: &mut Vec<usize>) {
        let from = self.excitation.expect("routing needs an excitation");
        if from <= target {
            for s in from..target {
                witness.push(self.movers[s]);
            }
        } else {
            for s in (target..from).rev() {
                witness.push(self.movers[s]);
            }
        }
        self.excitation = Some(target);
    }
}

/// Constructive upper bound on the layer code's barrier: build the
/// quasiconcatenated form of `input_logical` one flip at a time, routing
/// each check-layer excitation so the next crossing annihilates it.
///
/// The reported value is replay-verified, and stays within one unit of the
/// input code's exact barrier whenever that is computable.
pub fn energy_barrier_sweep(
    lc: &LayerCode,
    input_logical: &BinaryVector,
    side: PauliSide,
) -> Result<BarrierResult, BarrierError> {
    let commutes = match side {
        PauliSide::X => lc.input.hz().mul_vector(input_logical).is_zero(),
        PauliSide::Z => lc.input.hx().mul_vector(input_logical).is_zero(),
    };
    if !commutes {
        return Err(BarrierError::NotPhysical);
    }
    if input_logical.is_zero() {
        return Ok(BarrierResult {
            value: 0,
            mode: BarrierMode::UpperBound,
            witness: Vec::new(),
        });
    }
    let frame = &lc.layout.frame;

    // Input flip order attaining the input barrier for this logical.
    let input_penalty = match side {
        PauliSide::X => lc.input.hz(),
        PauliSide::Z => lc.input.hx(),
    };
    let input_order =
        exact_sequence_to(input_penalty, input_logical).ok_or(BarrierError::NoLogicals)?;

    // Chains for every check layer of the opposite species.
    let mut chains: HashMap<usize, RoutingChain> = HashMap::new();
    let check_layers: Vec<(usize, Vec<usize>)> = match side {
        PauliSide::X => (0..lc.input.num_z_checks())
            .map(|j| (j, lc.input.hz().row(j).support()))
            .collect(),
        PauliSide::Z => (0..lc.input.num_x_checks())
            .map(|k| (k, lc.input.hx().row(k).support()))
            .collect(),
    };
    for (idx, support) in &check_layers {
        chains.insert(*idx, routing_chain(lc, side, *idx, support));
    }

    // String qubits per layer in sweep order, with the crossing they hit.
    // X sweep: the layer's ẑ-edges at z = 1, ascending x; a crossing happens
    // at x = the yz-plane of each containing Z check. Z sweep mirrored.
    let mut witness: Vec<usize> = Vec::new();
    for i in input_order {
        let mut string: Vec<(i64, usize)> = lc
            .qubits
            .iter()
            .filter(|q| {
                q.owner == Owner::QubitLayer(i)
                    && q.role == QubitRole::ZEdge
                    && match side {
                        PauliSide::X => q.pos[2] == 1,
                        PauliSide::Z => q.pos[0] == 0,
                    }
            })
            .map(|q| {
                let along = match side {
                    PauliSide::X => q.pos[0],
                    PauliSide::Z => q.pos[2],
                };
                (along, q.id)
            })
            .collect();
        string.sort_unstable();

        for (along, qubit) in string {
            // Is this flip a junction crossing?
            let crossing: Option<usize> = match side {
                PauliSide::X => check_layers
                    .iter()
                    .find(|(j, support)| support.contains(&i) && frame.zcheck_plane(*j) == along)
                    .map(|(j, _)| *j),
                PauliSide::Z => check_layers
                    .iter()
                    .find(|(k, support)| support.contains(&i) && frame.xcheck_plane(*k) == along)
                    .map(|(k, _)| *k),
            };
            if let Some(layer) = crossing {
                let chain = chains.get_mut(&layer).expect("chain exists");
                let target = chain.station_of_plane[&i];
                if chain.excitation.is_some() {
                    chain.route_to(target, &mut witness);
                    chain.excitation = None;
                } else {
                    chain.excitation = Some(target);
                }
            }
            witness.push(qubit);
        }
    }
    for chain in chains.values() {
        if chain.excitation.is_some() {
            return Err(BarrierError::RoutingFailed);
        }
    }

    let penalty_checks = match side {
        PauliSide::X => &lc.hz,
        PauliSide::Z => &lc.hx,
    };
    let value = replay_penalty(&witness, penalty_checks);
    // the sequence must end on a zero-syndrome operator
    let mut total = BinaryVector::zeros(lc.num_qubits());
    for &q in &witness {
        total.flip(q);
    }
    let op = PauliOperator {
        side,
        support: total,
    };
    if !op.syndrome(lc).is_zero() {
        return Err(BarrierError::RoutingFailed);
    }
    Ok(BarrierResult {
        value,
        mode: BarrierMode::UpperBound,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use layercode_css::builtin;

    #[test]
    fn rep3_exact_barriers() {
        let code = builtin("rep3").unwrap();
        let x = energy_barrier_exact(&code, PauliSide::X).unwrap();
        assert_eq!(x.value, 1);
        assert_eq!(replay_penalty(&x.witness, code.hz()), 1);
        let z = energy_barrier_exact(&code, PauliSide::Z).unwrap();
        assert_eq!(z.value, 0);
    }

    #[test]
    fn single_free_qubit_barrier_zero() {
        let code = CssCode::from_supports("free", 2, &[], &[vec![0, 1]])
            .unwrap()
            .validated()
            .unwrap();
        // Z side: no X checks, any Z flip is penalty-free
        let z = energy_barrier_exact(&code, PauliSide::Z).unwrap();
        assert_eq!(z.value, 0);
    }

    use layercode_css::CssCode;

    #[test]
    fn witness_replay_matches() {
        for name in ["rep4", "c422", "steane"] {
            let code = builtin(name).unwrap();
            for side in [PauliSide::X, PauliSide::Z] {
                let result = energy_barrier_exact(&code, side).unwrap();
                let checks = match side {
                    PauliSide::X => code.hz(),
                    PauliSide::Z => code.hx(),
                };
                assert_eq!(
                    replay_penalty(&result.witness, checks),
                    result.value,
                    "{name}"
                );
            }
        }
    }
}
