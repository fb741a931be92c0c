//! The qubit-pairing rule on overlapping check supports.
//!
//! For each X check and Z check whose supports overlap, the shared qubits
//! (taken in the frozen qubit order) are grouped into consecutive pairs.
//! The open interval between the two members of a pair is where the
//! crossing line of the two check layers carries a nontrivial defect; the
//! intervals between pairs, and outside them, stay trivial crossings.

use layercode_css::CssCode;
use serde::Serialize;

#[derive(Debug, thiserror::Error)]
pub enum PairingError {
    #[error("X check {x_check} and Z check {z_check} share an odd number of qubits ({count}); input is not a valid CSS code")]
    OddOverlap {
        x_check: usize,
        z_check: usize,
        count: usize,
    },
}

/// One overlapping (X check, Z check) pair and its matched qubits.
#[derive(Clone, Debug, Serialize)]
pub struct OverlapEntry {
    pub x_check: usize,
    pub z_check: usize,
    /// Consecutive pairs of the shared support, in qubit order.
    pub pairs: Vec<(usize, usize)>,
}

/// Pairings for every overlapping check pair of the input code.
#[derive(Clone, Debug, Default, Serialize)]
pub struct OverlapPairing {
    pub entries: Vec<OverlapEntry>,
}

/// Classification of a position along the crossing line of an (X, Z) check
/// layer pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SegmentKind {
    Trivial,
    Nontrivial,
}

impl OverlapPairing {
    pub fn entry(&self, x_check: usize, z_check: usize) -> Option<&OverlapEntry> {
        self.entries
            .iter()
            .find(|e| e.x_check == x_check && e.z_check == z_check)
    }

    /// Whether input qubit position `q` lies strictly inside a nontrivial
    /// interval of the (x_check, z_check) line.
    pub fn segment_at(&self, x_check: usize, z_check: usize, q: usize) -> SegmentKind {
        match self.entry(x_check, z_check) {
            Some(entry) if entry.pairs.iter().any(|&(a, b)| q > a && q < b) => {
                SegmentKind::Nontrivial
            }
            _ => SegmentKind::Trivial,
        }
    }

    /// Like `segment_at` but for the open interval between qubit positions
    /// `q` and `q + 1` (used for structures strictly between planes).
    pub fn segment_between(&self, x_check: usize, z_check: usize, q: usize) -> SegmentKind {
        match self.entry(x_check, z_check) {
            Some(entry) if entry.pairs.iter().any(|&(a, b)| q >= a && q < b) => {
                SegmentKind::Nontrivial
            }
            _ => SegmentKind::Trivial,
        }
    }
}

/// Applies the consecutive-pair rule to every overlapping check pair.
pub fn compute_pairing(code: &CssCode) -> Result<OverlapPairing, PairingError> {
    let mut entries = Vec::new();
    for (k, xrow) in code.hx().rows().iter().enumerate() {
        for (j, zrow) in code.hz().rows().iter().enumerate() {
            let shared: Vec<usize> = xrow
                .support()
                .into_iter()
                .filter(|&q| zrow.get(q))
                .collect();
            if shared.is_empty() {
                continue;
            }
            if shared.len() % 2 == 1 {
                return Err(PairingError::OddOverlap {
                    x_check: k,
                    z_check: j,
                    count: shared.len(),
                });
            }
            let pairs = shared.chunks(2).map(|c| (c[0], c[1])).collect();
            entries.push(OverlapEntry {
                x_check: k,
                z_check: j,
                pairs,
            });
        }
    }
    Ok(OverlapPairing { entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use layercode_css::builtin;

    #[test]
    fn c422_pairs_consecutively() {
        let code = builtin("c422").unwrap();
        let pairing = compute_pairing(&code).unwrap();
        let entry = pairing.entry(0, 0).unwrap();
        assert_eq!(entry.pairs, vec![(0, 1), (2, 3)]);
        // nontrivial strictly between paired qubits, trivial between pairs
        assert_eq!(pairing.segment_between(0, 0, 0), SegmentKind::Nontrivial);
        assert_eq!(pairing.segment_between(0, 0, 1), SegmentKind::Trivial);
        assert_eq!(pairing.segment_between(0, 0, 2), SegmentKind::Nontrivial);
    }

    #[test]
    fn shor_two_qubit_overlap() {
        let code = builtin("shor").unwrap();
        let pairing = compute_pairing(&code).unwrap();
        let entry = pairing.entry(0, 0).unwrap();
        assert_eq!(entry.pairs, vec![(0, 1)]);
    }

    #[test]
    fn disjoint_checks_have_no_entry() {
        let code = builtin("shor").unwrap();
        let pairing = compute_pairing(&code).unwrap();
        // X check 0 covers qubits 0..5; Z check 4 covers {6,7}
        assert!(pairing.entry(0, 4).is_none());
    }

    #[test]
    fn steane_entries() {
        let code = builtin("steane").unwrap();
        let pairing = compute_pairing(&code).unwrap();
        // X0 = {0,2,4,6}, Z1 = {1,2,5,6}: shared {2,6} -> one pair (2,6)
        let entry = pairing.entry(0, 1).unwrap();
        assert_eq!(entry.pairs, vec![(2, 6)]);
        // interior planes 3,4,5 sit inside the nontrivial interval
        assert_eq!(pairing.segment_at(0, 1, 4), SegmentKind::Nontrivial);
        assert_eq!(pairing.segment_at(0, 1, 2), SegmentKind::Trivial);
    }
}
