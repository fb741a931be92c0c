//! Seeded random valid CSS codes for stress corpora.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use layercode_gf2::{BinaryMatrix, BinaryVector};

use crate::CssCode;

/// Generates a valid CSS code with at most `max_n` qubits.
///
/// X checks are sampled directly; Z checks are sampled from the nullspace
/// of the X matrix so commutation holds by construction. Rows of weight
/// zero are discarded, so the output can have fewer checks than drawn, and
/// classical codes (no X checks) appear with fair probability.
pub fn random_css_code(seed: u64, max_n: usize) -> CssCode {
    assert!(max_n >= 2, "need at least two qubits");
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=max_n);

    // Between zero and n/2 X checks of small even-friendly weight.
    let n_x = rng.gen_range(0..=n / 2);
    let mut x_rows: Vec<BinaryVector> = Vec::new();
    for _ in 0..n_x {
        let mut row = BinaryVector::zeros(n);
        let weight = rng.gen_range(2..=n.min(4));
        while row.weight() < weight {
            row.set(rng.gen_range(0..n), true);
        }
        x_rows.push(row);
    }
    let hx = BinaryMatrix::from_rows(n, x_rows).expect("widths match");

    // Z checks live in the nullspace of hx; pick sparse-ish combinations.
    let null = hx.nullspace_basis();
    let n_z = if null.num_rows() == 0 {
        0
    } else {
        rng.gen_range(0..=null.num_rows().min(n / 2 + 1))
    };
    let mut z_rows: Vec<BinaryVector> = Vec::new();
    for _ in 0..n_z {
        let mut row = BinaryVector::zeros(n);
        for basis_row in null.rows() {
            if rng.gen_ratio(2, 5) {
                row.xor_assign(basis_row);
            }
        }
        if !row.is_zero() {
            z_rows.push(row);
        }
    }
    let hz = BinaryMatrix::from_rows(n, z_rows).expect("widths match");

    CssCode::from_matrices(format!("random-{seed}"), hx, hz)
        .expect("matched columns")
        .validated()
        .expect("nullspace sampling preserves commutation")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn always_valid_and_deterministic() {
        for seed in 0..50 {
            let a = random_css_code(seed, 8);
            let b = random_css_code(seed, 8);
            assert!(a.validate().passed(), "seed {seed}");
            assert_eq!(a.hx(), b.hx());
            assert_eq!(a.hz(), b.hz());
            assert!(a.num_qubits() <= 8);
        }
    }
}
