//! Incremental reduced row echelon form.
//!
//! Rank queries that share a large base matrix (restriction ranks over many
//! regions, say) build the base form once and absorb the few extra rows per
//! query into a clone.

use crate::{BinaryMatrix, BinaryVector};

/// A reduced row echelon basis with pivot bookkeeping.
#[derive(Clone, Debug)]
pub struct Echelon {
    basis: Vec<BinaryVector>,
    pivots: Vec<usize>,
    cols: usize,
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Self {
            basis: Vec::new(),
            pivots: Vec::new(),
            cols,
        }
    }

    pub fn from_matrix(m: &BinaryMatrix) -> Self {
        let mut e = Self::new(m.num_cols());
        for row in m.rows() {
            e.absorb(row);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Reduces `v` against the basis.
    pub fn reduce(&self, v: &BinaryVector) -> BinaryVector {
        let mut r = v.clone();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if r.get(p) {
                r.xor_assign(b);
            }
        }
        r
    }

    pub fn contains(&self, v: &BinaryVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds a row to the span; returns whether the rank grew.
    pub fn absorb(&mut self, row: &BinaryVector) -> bool {
        assert_eq!(row.len(), self.cols, "width mismatch");
        let r = self.reduce(row);
        let Some(p) = r.first_set() else {
            return false;
        };
        for b in self.basis.iter_mut() {
            if b.get(p) {
                b.xor_assign(&r);
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.basis.insert(pos, r);
        self.pivots.insert(pos, p);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn incremental_matches_batch() {
        let m =
            BinaryMatrix::from_supports(6, &[vec![0, 1, 2], vec![2, 3], vec![0, 1, 3], vec![4, 5]])
                .unwrap();
        let e = Echelon::from_matrix(&m);
        assert_eq!(e.rank(), m.rank());
        // membership agrees with the matrix path
        let v = BinaryVector::from_support(6, &[0, 1, 3]).unwrap();
        assert_eq!(e.contains(&v), m.in_row_space(&v).unwrap());
    }

    #[test]
    fn absorb_reports_growth() {
        let mut e = Echelon::new(3);
        assert!(e.absorb(&BinaryVector::from_bits(&[1, 1, 0])));
        assert!(e.absorb(&BinaryVector::from_bits(&[0, 1, 1])));
        assert!(!e.absorb(&BinaryVector::from_bits(&[1, 0, 1])));
        assert_eq!(e.rank(), 2);
    }
}
