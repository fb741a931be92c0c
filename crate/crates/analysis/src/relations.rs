//! Stabilizer-relation inheritance.

use layercode_gf2::BinaryVector;
use layercode_layer::LayerCode;
use layercode_logical::{quasiconcatenated_stabilizer, PauliSide};

/// Witness that a relation among input checks lifts to the layer code:
/// the product of the corresponding quasiconcatenated stabilizers, and the
/// explicit combination of layer checks equal to it.
#[derive(Clone, Debug)]
pub struct RelationCertificate {
    pub side: PauliSide,
    pub relation: Vec<usize>,
    pub product: BinaryVector,
    /// Row indices of the layer check matrix whose sum is `product`.
    pub combination: Vec<usize>,
}

#[derive(Debug, thiserror::Error)]
pub enum RelationError {
    #[error("check index {0} out of range")]
    BadIndex(usize),
    #[error("the chosen checks do not multiply to the identity; not a relation")]
    NotARelation,
    #[error("inherited product is outside the layer stabilizer row space")]
    NotInherited,
}

/// Certifies that a relation among same-type input checks lifts: the GF(2)
/// sum of their quasiconcatenated stabilizers lies in the layer-code
/// stabilizer row space, with the combination as witness.
pub fn relation_inheritance(
    lc: &LayerCode,
    relation: &[usize],
    side: PauliSide,
) -> Result<RelationCertificate, RelationError> {
    let input_checks = match side {
        PauliSide::X => lc.input.hx(),
        PauliSide::Z => lc.input.hz(),
    };
    let mut input_sum = BinaryVector::zeros(lc.input.num_qubits());
    for &c in relation {
        if c >= input_checks.num_rows() {
            return Err(RelationError::BadIndex(c));
        }
        input_sum.xor_assign(input_checks.row(c));
    }
    if !input_sum.is_zero() {
        return Err(RelationError::NotARelation);
    }

    let mut product = BinaryVector::zeros(lc.num_qubits());
    for &c in relation {
        product.xor_assign(&quasiconcatenated_stabilizer(lc, c, side).support);
    }
    let layer_checks = match side {
        PauliSide::X => &lc.hx,
        PauliSide::Z => &lc.hz,
    };
    let combination = layer_checks
        .solve_combination(&product)
        .ok_or(RelationError::NotInherited)?;
    Ok(RelationCertificate {
        side,
        relation: relation.to_vec(),
        product,
        combination: combination.support(),
    })
}
