use std::fmt;

use crate::{BinaryVector, Gf2Error};

/// A matrix over GF(2), stored as one packed [`BinaryVector`] per row.
///
/// Rank, row-space membership, nullspace and linear solves all run through
/// the same deterministic Gaussian elimination (lowest-index pivot first),
/// so identical inputs always produce identical bases.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryMatrix {
    rows: Vec<BinaryVector>,
    cols: usize,
}

impl BinaryMatrix {
    /// Matrix with no rows over `cols` columns.
    pub fn empty(cols: usize) -> Self {
        Self {
            rows: Vec::new(),
            cols,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows: vec![BinaryVector::zeros(cols); rows],
            cols,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i].set(i, true);
        }
        m
    }

    /// Builds a matrix from per-row vectors, all of width `cols`.
    pub fn from_rows(cols: usize, rows: Vec<BinaryVector>) -> Result<Self, Gf2Error> {
        for r in &rows {
            if r.len() != cols {
                return Err(Gf2Error::LengthMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
        }
        Ok(Self { rows, cols })
    }

    /// Builds a matrix from per-row support lists.
    pub fn from_supports(cols: usize, supports: &[Vec<usize>]) -> Result<Self, Gf2Error> {
        let rows = supports
            .iter()
            .map(|s| BinaryVector::from_support(cols, s))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { rows, cols })
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &BinaryVector {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[BinaryVector] {
        &self.rows
    }

    pub fn push_row(&mut self, row: BinaryVector) {
        assert_eq!(row.len(), self.cols, "row width mismatch");
        self.rows.push(row);
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        self.rows[r].set(c, v);
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows.len());
        for (r, row) in self.rows.iter().enumerate() {
            for c in row.support() {
                t.rows[c].set(r, true);
            }
        }
        t
    }

    /// Matrix-vector product `M·v`.
    pub fn mul_vector(&self, v: &BinaryVector) -> BinaryVector {
        assert_eq!(v.len(), self.cols, "mul_vector width mismatch");
        let mut out = BinaryVector::zeros(self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            if row.dot(v) {
                out.set(i, true);
            }
        }
        out
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows.len(), "mul shape mismatch");
        let ot = other.transpose();
        let mut out = Self::zeros(self.rows.len(), other.cols);
        for (i, row) in self.rows.iter().enumerate() {
            for (j, col) in ot.rows.iter().enumerate() {
                if row.dot(col) {
                    out.rows[i].set(j, true);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BinaryVector::is_zero)
    }

    /// Column-restricted copy: keeps the listed columns, in order.
    pub fn select_columns(&self, keep: &[usize]) -> Self {
        Self {
            rows: self.rows.iter().map(|r| r.select(keep)).collect(),
            cols: keep.len(),
        }
    }

    /// Stacks the rows of `other` below the rows of `self`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack width mismatch");
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Self {
            rows,
            cols: self.cols,
        }
    }

    /// Reduced row echelon form together with the pivot column of each row.
    ///
    /// Every basis row is zero at every other row's pivot, and rows are
    /// sorted by pivot column, so the output is canonical for the row space.
    fn echelon(&self) -> (Vec<BinaryVector>, Vec<usize>) {
        let mut basis: Vec<BinaryVector> = Vec::new();
        let mut pivots: Vec<usize> = Vec::new();
        for row in &self.rows {
            let mut r = row.clone();
            for (b, &p) in basis.iter().zip(&pivots) {
                if r.get(p) {
                    r.xor_assign(b);
                }
            }
            if let Some(p) = r.first_set() {
                for b in basis.iter_mut() {
                    if b.get(p) {
                        b.xor_assign(&r);
                    }
                }
                let pos = pivots.partition_point(|&q| q < p);
                basis.insert(pos, r);
                pivots.insert(pos, p);
            }
        }
        (basis, pivots)
    }

    /// Dimension of the row space.
    pub fn rank(&self) -> usize {
        self.echelon().0.len()
    }

    /// Whether `v` is a GF(2) combination of the rows.
    pub fn in_row_space(&self, v: &BinaryVector) -> Result<bool, Gf2Error> {
        if v.len() != self.cols {
            return Err(Gf2Error::LengthMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        let (basis, pivots) = self.echelon();
        let mut r = v.clone();
        for (b, &p) in basis.iter().zip(&pivots) {
            if r.get(p) {
                r.xor_assign(b);
            }
        }
        Ok(r.is_zero())
    }

    /// Expresses `v` as a combination of rows, returning the row-index
    /// combination when `v` lies in the row space.
    pub fn solve_combination(&self, v: &BinaryVector) -> Option<BinaryVector> {
        assert_eq!(v.len(), self.cols, "solve width mismatch");
        // Eliminate while tracking coefficients over the original rows.
        let mut basis: Vec<(BinaryVector, BinaryVector)> = Vec::new(); // (row, combo)
        let mut pivots: Vec<usize> = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            let mut r = row.clone();
            let mut c = BinaryVector::zeros(self.rows.len());
            c.set(i, true);
            for ((b, bc), &p) in basis.iter().zip(&pivots) {
                if r.get(p) {
                    r.xor_assign(b);
                    c.xor_assign(bc);
                }
            }
            if let Some(p) = r.first_set() {
                let pos = pivots.partition_point(|&q| q < p);
                basis.insert(pos, (r, c));
                pivots.insert(pos, p);
            }
        }
        let mut r = v.clone();
        let mut c = BinaryVector::zeros(self.rows.len());
        for ((b, bc), &p) in basis.iter().zip(&pivots) {
            if r.get(p) {
                r.xor_assign(b);
                c.xor_assign(bc);
            }
        }
        if r.is_zero() {
            Some(c)
        } else {
            None
        }
    }

    /// Basis of `{v : M·v = 0}` as rows of a matrix.
    ///
    /// Row count is always `cols − rank`.
    pub fn nullspace_basis(&self) -> Self {
        let (basis, pivots) = self.echelon();
        let is_pivot = {
            let mut flags = vec![false; self.cols];
            for &p in &pivots {
                flags[p] = true;
            }
            flags
        };
        let mut out = Vec::new();
        for (free, &pivot_col) in is_pivot.iter().enumerate() {
            if pivot_col {
                continue;
            }
            let mut v = BinaryVector::zeros(self.cols);
            v.set(free, true);
            // back-substitute pivots from highest to lowest
            for (b, &p) in basis.iter().zip(&pivots).rev() {
                // current value of row b applied to v
                if b.dot(&v) {
                    v.set(p, !v.get(p));
                }
            }
            out.push(v);
        }
        Self {
            rows: out,
            cols: self.cols,
        }
    }

    /// Solves `self · x = b` for one solution `x`, if any.
    pub fn solve(&self, b: &BinaryVector) -> Option<BinaryVector> {
        assert_eq!(b.len(), self.rows.len(), "solve rhs length mismatch");
        // Full reduction of the augmented system [rows | b].
        let mut rows: Vec<(BinaryVector, bool)> = self
            .rows
            .iter()
            .zip((0..b.len()).map(|i| b.get(i)))
            .map(|(r, bi)| (r.clone(), bi))
            .collect();
        let mut used = vec![false; rows.len()];
        for col in 0..self.cols {
            let Some(pi) = (0..rows.len()).find(|&i| !used[i] && rows[i].0.get(col)) else {
                continue;
            };
            used[pi] = true;
            let (prow, pb) = rows[pi].clone();
            for (i, (r, bi)) in rows.iter_mut().enumerate() {
                if i != pi && r.get(col) {
                    r.xor_assign(&prow);
                    *bi ^= pb;
                }
            }
        }
        for (r, bi) in &rows {
            if r.is_zero() && *bi {
                return None;
            }
        }
        // Reduced rows each have a distinct leading column; read x off them.
        let mut x = BinaryVector::zeros(self.cols);
        for (r, bi) in &rows {
            if let Some(p) = r.first_set() {
                if *bi {
                    x.set(p, true);
                }
            }
        }
        debug_assert_eq!(&self.mul_vector(&x), b);
        Some(x)
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryMatrix {}x{} [", self.rows.len(), self.cols)?;
        for r in &self.rows {
            writeln!(f, "  {r:?}")?;
        }
        write!(f, "]")
    }
}
