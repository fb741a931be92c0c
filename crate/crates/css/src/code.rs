use layercode_gf2::{BinaryMatrix, Gf2Error};

/// An input CSS code: `n` qubits, X checks in `hx`, Z checks in `hz`.
///
/// Qubit ordering is exactly the order the checks were written against and
/// is frozen at construction; the layer construction's pairing rule reads
/// qubit indices off this ordering.
#[derive(Clone, Debug)]
pub struct CssCode {
    name: String,
    n: usize,
    hx: BinaryMatrix,
    hz: BinaryMatrix,
}

#[derive(Debug, thiserror::Error)]
pub enum CssError {
    #[error("check matrix shape mismatch: {0}")]
    Shape(#[from] Gf2Error),
    #[error("hx has {hx_cols} columns and hz has {hz_cols}, expected {n}")]
    ColumnMismatch {
        n: usize,
        hx_cols: usize,
        hz_cols: usize,
    },
    #[error("checks do not commute; {} violating pairs, first (X {}, Z {})",
            .report.violations.len(), .report.violations[0].0, .report.violations[0].1)]
    NonCommuting { report: ValidationReport },
    #[error("n - rank(hx) - rank(hz) is negative; dependent checks were double counted")]
    NegativeLogicalCount,
}

/// Outcome of [`CssCode::validate`]: either a clean bill with the maximum
/// check weight, or the list of anticommuting (X row, Z row) pairs.
#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    /// Pairs of (X-check row, Z-check row) whose supports overlap oddly.
    pub violations: Vec<(usize, usize)>,
    /// Maximum weight over all rows of both matrices.
    pub max_check_weight: usize,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl CssCode {
    /// Builds a code from per-check support lists without validating
    /// commutation; call [`CssCode::validate`] next.
    pub fn from_supports(
        name: impl Into<String>,
        n: usize,
        x_checks: &[Vec<usize>],
        z_checks: &[Vec<usize>],
    ) -> Result<Self, CssError> {
        let hx = BinaryMatrix::from_supports(n, x_checks)?;
        let hz = BinaryMatrix::from_supports(n, z_checks)?;
        Ok(Self {
            name: name.into(),
            n,
            hx,
            hz,
        })
    }

    /// Wraps existing matrices, checking only the shared column count.
    pub fn from_matrices(
        name: impl Into<String>,
        hx: BinaryMatrix,
        hz: BinaryMatrix,
    ) -> Result<Self, CssError> {
        if hx.num_cols() != hz.num_cols() {
            return Err(CssError::ColumnMismatch {
                n: hx.num_cols(),
                hx_cols: hx.num_cols(),
                hz_cols: hz.num_cols(),
            });
        }
        Ok(Self {
            name: name.into(),
            n: hx.num_cols(),
            hx,
            hz,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn hx(&self) -> &BinaryMatrix {
        &self.hx
    }

    pub fn hz(&self) -> &BinaryMatrix {
        &self.hz
    }

    pub fn num_x_checks(&self) -> usize {
        self.hx.num_rows()
    }

    pub fn num_z_checks(&self) -> usize {
        self.hz.num_rows()
    }

    /// Maximum check weight `w` over both matrices.
    pub fn max_check_weight(&self) -> usize {
        self.hx
            .rows()
            .iter()
            .chain(self.hz.rows())
            .map(|r| r.weight())
            .max()
            .unwrap_or(0)
    }

    /// Maximum number of checks acting on any single qubit (`ŵ`).
    pub fn max_qubit_degree(&self) -> usize {
        (0..self.n)
            .map(|q| {
                self.hx
                    .rows()
                    .iter()
                    .chain(self.hz.rows())
                    .filter(|r| r.get(q))
                    .count()
            })
            .max()
            .unwrap_or(0)
    }

    /// Checks every X row against every Z row for even overlap.
    ///
    /// Commutation of an X-type with a Z-type Pauli is exactly evenness of
    /// their support overlap, so the report lists each odd pair.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for (i, xrow) in self.hx.rows().iter().enumerate() {
            for (j, zrow) in self.hz.rows().iter().enumerate() {
                if xrow.overlap(zrow) % 2 == 1 {
                    violations.push((i, j));
                }
            }
        }
        ValidationReport {
            violations,
            max_check_weight: self.max_check_weight(),
        }
    }

    /// Validates and converts failures into an error.
    pub fn validated(self) -> Result<Self, CssError> {
        let report = self.validate();
        if report.passed() {
            Ok(self)
        } else {
            Err(CssError::NonCommuting { report })
        }
    }

    /// Number of logical qubits: `n − rank(hx) − rank(hz)`.
    pub fn logical_qubit_count(&self) -> Result<usize, CssError> {
        let used = self.hx.rank() + self.hz.rank();
        if used > self.n {
            return Err(CssError::NegativeLogicalCount);
        }
        Ok(self.n - used)
    }
}
