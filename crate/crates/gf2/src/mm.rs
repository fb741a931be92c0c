//! Matrix Market coordinate-pattern import/export.
//!
//! The on-disk form is the 1-based `%%MatrixMarket matrix coordinate pattern
//! general` format, which keeps golden files independent of the in-memory
//! packing.

use std::io::{BufRead, Write};

use crate::BinaryMatrix;

#[derive(Debug, thiserror::Error)]
pub enum MatrixMarketError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("missing or unsupported header: {0}")]
    Header(String),
    #[error("malformed line {line}: {text}")]
    Malformed { line: usize, text: String },
    #[error("entry ({row}, {col}) outside declared {rows}x{cols} shape")]
    OutOfRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
}

const HEADER: &str = "%%MatrixMarket matrix coordinate pattern general";

pub fn write_matrix_market<W: Write>(m: &BinaryMatrix, mut w: W) -> Result<(), MatrixMarketError> {
    writeln!(w, "{HEADER}")?;
    let entries: usize = m.rows().iter().map(|r| r.weight()).sum();
    writeln!(w, "{} {} {}", m.num_rows(), m.num_cols(), entries)?;
    for (i, row) in m.rows().iter().enumerate() {
        for c in row.support() {
            writeln!(w, "{} {}", i + 1, c + 1)?;
        }
    }
    Ok(())
}

pub fn read_matrix_market<R: BufRead>(r: R) -> Result<BinaryMatrix, MatrixMarketError> {
    let mut lines = r.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| MatrixMarketError::Header("empty file".into()))?;
    let header = header?;
    if header.trim() != HEADER {
        return Err(MatrixMarketError::Header(header));
    }
    let mut shape: Option<(usize, usize, usize)> = None;
    let mut matrix: Option<BinaryMatrix> = None;
    let mut seen = 0usize;
    for (lineno, line) in lines {
        let line = line?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('%') {
            continue;
        }
        let fields: Vec<&str> = text.split_whitespace().collect();
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| MatrixMarketError::Malformed {
                    line: lineno + 1,
                    text: text.to_string(),
                })
        };
        if shape.is_none() {
            if fields.len() != 3 {
                return Err(MatrixMarketError::Malformed {
                    line: lineno + 1,
                    text: text.to_string(),
                });
            }
            let (rows, cols, nnz) = (parse(fields[0])?, parse(fields[1])?, parse(fields[2])?);
            shape = Some((rows, cols, nnz));
            matrix = Some(BinaryMatrix::zeros(rows, cols));
            continue;
        }
        if fields.len() != 2 {
            return Err(MatrixMarketError::Malformed {
                line: lineno + 1,
                text: text.to_string(),
            });
        }
        let (row, col) = (parse(fields[0])?, parse(fields[1])?);
        let (rows, cols, _) = shape.unwrap();
        if row == 0 || col == 0 || row > rows || col > cols {
            return Err(MatrixMarketError::OutOfRange {
                row,
                col,
                rows,
                cols,
            });
        }
        matrix.as_mut().unwrap().set(row - 1, col - 1, true);
        seen += 1;
    }
    match (shape, matrix) {
        (Some((_, _, nnz)), Some(m)) if seen == nnz => Ok(m),
        (Some((_, _, nnz)), Some(_)) => Err(MatrixMarketError::Header(format!(
            "expected {nnz} entries, found {seen}"
        ))),
        _ => Err(MatrixMarketError::Header("missing size line".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let m = BinaryMatrix::from_supports(5, &[vec![0, 4], vec![], vec![1, 2, 3]]).unwrap();
        let mut buf = Vec::new();
        write_matrix_market(&m, &mut buf).unwrap();
        let back = read_matrix_market(buf.as_slice()).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn rejects_bad_header() {
        let text = b"%%MatrixMarket matrix array real general\n1 1 0\n";
        assert!(matches!(
            read_matrix_market(&text[..]),
            Err(MatrixMarketError::Header(_))
        ));
    }

    #[test]
    fn rejects_out_of_range() {
        let text = b"%%MatrixMarket matrix coordinate pattern general\n2 2 1\n3 1\n";
        assert!(matches!(
            read_matrix_market(&text[..]),
            Err(MatrixMarketError::OutOfRange { .. })
        ));
    }
}
