//! Canonical symplectic logical bases.

use layercode_gf2::{min_weight_in_coset, BinaryMatrix, BinaryVector, CosetSearch, SearchBudget};

use crate::CssCode;

/// A symplectically paired basis: `x_logicals[i]` anticommutes with
/// `z_logicals[i]` and commutes with every other `z_logicals[j]`.
#[derive(Clone, Debug)]
pub struct LogicalBasis {
    pub x_logicals: Vec<BinaryVector>,
    pub z_logicals: Vec<BinaryVector>,
}

#[derive(Debug, thiserror::Error)]
pub enum LogicalError {
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

impl LogicalBasis {
    pub fn num_pairs(&self) -> usize {
        self.x_logicals.len()
    }

    /// Anticommutation overlaps as a k×k matrix; identity after
    /// canonicalization.
    pub fn pairing_matrix(&self) -> BinaryMatrix {
        let k = self.num_pairs();
        let mut m = BinaryMatrix::zeros(k, k);
        for (i, x) in self.x_logicals.iter().enumerate() {
            for (j, z) in self.z_logicals.iter().enumerate() {
                if x.dot(z) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }
}

/// Computes a canonical logical basis for a validated code.
///
/// The construction is deterministic given the qubit order: kernel bases
/// come from the canonical reduced echelon form, pairs are extracted by
/// symplectic Gram-Schmidt, and each representative is then replaced by the
/// minimum-weight member of its stabilizer coset (lexicographically smallest
/// support on ties) whenever the coset is small enough to enumerate.
pub fn logical_basis(code: &CssCode) -> Result<LogicalBasis, LogicalError> {
    let hx = code.hx();
    let hz = code.hz();
    let k = code
        .logical_qubit_count()
        .map_err(|e| LogicalError::Inconsistent(e.to_string()))?;
    if k == 0 {
        return Ok(LogicalBasis {
            x_logicals: Vec::new(),
            z_logicals: Vec::new(),
        });
    }

    // Candidates: kernel vectors that are not stabilizers, reduced to an
    // independent set modulo the stabilizer row space.
    let x_cands = quotient_basis(&hz.nullspace_basis(), hx, k)?;
    let z_cands = quotient_basis(&hx.nullspace_basis(), hz, k)?;

    // Symplectic Gram-Schmidt: pair each X with the first anticommuting Z,
    // then clean the remaining candidates of overlaps with the pair.
    let mut xs: Vec<BinaryVector> = x_cands;
    let mut zs: Vec<BinaryVector> = z_cands;
    let mut x_out = Vec::with_capacity(k);
    let mut z_out = Vec::with_capacity(k);
    while let Some(x) = xs.pop() {
        let Some(pos) = zs.iter().position(|z| x.dot(z)) else {
            return Err(LogicalError::Inconsistent(
                "logical X class with no anticommuting Z partner".into(),
            ));
        };
        let z = zs.remove(pos);
        for other in xs.iter_mut() {
            if other.dot(&z) {
                other.xor_assign(&x);
            }
        }
        for other in zs.iter_mut() {
            if other.dot(&x) {
                other.xor_assign(&z);
            }
        }
        x_out.push(x);
        z_out.push(z);
    }
    if !zs.is_empty() {
        return Err(LogicalError::Inconsistent(
            "unpaired logical Z classes left over".into(),
        ));
    }

    // Canonical representatives: min weight over the stabilizer coset.
    for x in x_out.iter_mut() {
        *x = canonical_representative(x, hx);
    }
    for z in z_out.iter_mut() {
        *z = canonical_representative(z, hz);
    }

    // Stable order: sort pairs by the X representative's support.
    let mut pairs: Vec<(BinaryVector, BinaryVector)> = x_out.into_iter().zip(z_out).collect();
    pairs.sort_by_key(|pair| pair.0.support());
    let (x_logicals, z_logicals) = pairs.into_iter().unzip();
    Ok(LogicalBasis {
        x_logicals,
        z_logicals,
    })
}

/// Greedily picks `k` rows of `space` that are independent modulo
/// `rowspace(stab)`.
fn quotient_basis(
    space: &BinaryMatrix,
    stab: &BinaryMatrix,
    k: usize,
) -> Result<Vec<BinaryVector>, LogicalError> {
    let mut accum = stab.clone();
    let mut out = Vec::with_capacity(k);
    for row in space.rows() {
        if out.len() == k {
            break;
        }
        if !accum
            .in_row_space(row)
            .map_err(|e| LogicalError::Inconsistent(e.to_string()))?
        {
            accum.push_row(row.clone());
            out.push(row.clone());
        }
    }
    if out.len() != k {
        return Err(LogicalError::Inconsistent(format!(
            "expected {k} logical classes, found {}",
            out.len()
        )));
    }
    Ok(out)
}

fn canonical_representative(v: &BinaryVector, stab: &BinaryMatrix) -> BinaryVector {
    // Adding stabilizers never changes commutation with the opposite side,
    // so the min-weight coset member is always a legal representative.
    let budget = SearchBudget {
        exhaustion_limit: 1 << 20,
        ..Default::default()
    };
    match min_weight_in_coset(v, stab, CosetSearch::Exact, &budget) {
        Ok(out) => out.witness,
        // Coset too large to enumerate: keep the Gram-Schmidt representative.
        Err(_) => v.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;

    #[test]
    fn rep3_basis() {
        let code = builtin("rep3").unwrap();
        let basis = logical_basis(&code).unwrap();
        assert_eq!(basis.num_pairs(), 1);
        assert_eq!(basis.x_logicals[0].support(), vec![0, 1, 2]);
        assert_eq!(basis.z_logicals[0].support(), vec![0]);
        assert_eq!(basis.pairing_matrix(), BinaryMatrix::identity(1));
    }

    #[test]
    fn steane_weight_three_pair() {
        let code = builtin("steane").unwrap();
        let basis = logical_basis(&code).unwrap();
        assert_eq!(basis.num_pairs(), 1);
        assert_eq!(basis.x_logicals[0].weight(), 3);
        assert_eq!(basis.z_logicals[0].weight(), 3);
        assert_eq!(basis.pairing_matrix(), BinaryMatrix::identity(1));
    }

    #[test]
    fn c422_two_pairs_identity_pairing() {
        let code = builtin("c422").unwrap();
        let basis = logical_basis(&code).unwrap();
        assert_eq!(basis.num_pairs(), 2);
        assert_eq!(basis.pairing_matrix(), BinaryMatrix::identity(2));
        for (x, z) in basis.x_logicals.iter().zip(&basis.z_logicals) {
            assert!(code.hz().mul_vector(x).is_zero());
            assert!(code.hx().mul_vector(z).is_zero());
            assert!(!code.hx().in_row_space(x).unwrap());
            assert!(!code.hz().in_row_space(z).unwrap());
        }
    }

    #[test]
    fn zero_logicals_empty_basis() {
        let code = CssCode::from_supports("k0", 2, &[vec![0, 1]], &[vec![0, 1]])
            .unwrap()
            .validated()
            .unwrap();
        let basis = logical_basis(&code).unwrap();
        assert_eq!(basis.num_pairs(), 0);
    }
}
