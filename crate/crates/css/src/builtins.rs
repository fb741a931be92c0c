//! The example codes, transcribed check-for-check.

use crate::{CssCode, CssError};

#[derive(Debug, thiserror::Error)]
pub enum BuiltinError {
    #[error("unknown builtin `{0}`; known: rep(m), c422, shor, steane, surface(L)")]
    Unknown(String),
    #[error("builtin parameter out of range: {0}")]
    Parameter(String),
    #[error(transparent)]
    Css(#[from] CssError),
}

/// Names accepted by [`builtin`], for CLI help.
pub fn builtin_names() -> &'static [&'static str] {
    &["rep<m> (e.g. rep3)", "c422", "shor", "steane", "surface<L>"]
}

/// Returns a built-in code by name: `rep3`, `rep(3)`, `c422`, `shor`,
/// `steane`, `surface3`, `surface(3)`.
pub fn builtin(name: &str) -> Result<CssCode, BuiltinError> {
    let lower = name.trim().to_ascii_lowercase();
    if let Some(m) = parse_param(&lower, "rep") {
        return repetition(m?);
    }
    if let Some(l) = parse_param(&lower, "surface") {
        return surface(l?);
    }
    match lower.as_str() {
        "c422" | "[[4,2,2]]" => c422(),
        "shor" => shor(),
        "steane" => steane(),
        _ => Err(BuiltinError::Unknown(name.to_string())),
    }
}

fn parse_param(lower: &str, prefix: &str) -> Option<Result<usize, BuiltinError>> {
    let rest = lower.strip_prefix(prefix)?;
    let digits = rest.trim_matches(|c| c == '(' || c == ')');
    if digits.is_empty() {
        return Some(Err(BuiltinError::Parameter(format!(
            "{prefix} needs a size, e.g. {prefix}3"
        ))));
    }
    Some(
        digits
            .parse::<usize>()
            .map_err(|_| BuiltinError::Parameter(format!("bad {prefix} size `{digits}`"))),
    )
}

/// m-qubit repetition code: Z checks on each adjacent pair, no X checks.
fn repetition(m: usize) -> Result<CssCode, BuiltinError> {
    if m < 2 {
        return Err(BuiltinError::Parameter("rep needs m >= 2".into()));
    }
    let z: Vec<Vec<usize>> = (0..m - 1).map(|i| vec![i, i + 1]).collect();
    Ok(CssCode::from_supports(format!("rep{m}"), m, &[], &z)?.validated()?)
}

/// [[4,2,2]] error detecting code: XXXX and ZZZZ.
fn c422() -> Result<CssCode, BuiltinError> {
    Ok(CssCode::from_supports("c422", 4, &[vec![0, 1, 2, 3]], &[vec![0, 1, 2, 3]])?.validated()?)
}

/// Shor's nine-qubit code.
fn shor() -> Result<CssCode, BuiltinError> {
    let x = vec![vec![0, 1, 2, 3, 4, 5], vec![3, 4, 5, 6, 7, 8]];
    let z = vec![
        vec![0, 1],
        vec![1, 2],
        vec![3, 4],
        vec![4, 5],
        vec![6, 7],
        vec![7, 8],
    ];
    Ok(CssCode::from_supports("shor", 9, &x, &z)?.validated()?)
}

/// Steane's seven-qubit code.
fn steane() -> Result<CssCode, BuiltinError> {
    let rows = vec![vec![0, 2, 4, 6], vec![1, 2, 5, 6], vec![3, 4, 5, 6]];
    Ok(CssCode::from_supports("steane", 7, &rows, &rows)?.validated()?)
}

/// Planar surface code with 2L(L−1) qubits and distance L.
///
/// Start from the standard planar patch on an L×(L−1) vertex grid with
/// dangling edges on the two rough sides (2L(L−1)+1 qubits, distance L),
/// then drop one bulk horizontal edge and merge the two plaquettes it
/// separated. Distance is pinned by tests against the brute-force oracle.
fn surface(l: usize) -> Result<CssCode, BuiltinError> {
    if l < 2 {
        return Err(BuiltinError::Parameter("surface needs L >= 2".into()));
    }
    // Qubit ids, in a fixed order:
    //   h(i,j): horizontal edge (i,j)-(i+1,j), i in 0..L-1, j in 0..L-1
    //   v(i,j): vertical edge (i,j)-(i,j+1), i in 0..L, j in 0..L-2
    //   b(i): dangling below (i,0);  t(i): dangling above (i,L-2)
    let cols = l - 1; // horizontal edges per row
    let rows = l - 1; // vertex rows
    let h = |i: usize, j: usize| j * cols + i;
    let n_h = cols * rows;
    let v = |i: usize, j: usize| n_h + j * l + i;
    let n_v = l * rows.saturating_sub(1);
    let b = |i: usize| n_h + n_v + i;
    let t = |i: usize| n_h + n_v + l + i;
    let n = n_h + n_v + 2 * l;

    // The edge to remove: middle column of the bottom row of horizontals.
    let removed = h((l - 1) / 2, 0);

    let mut x_checks: Vec<Vec<usize>> = Vec::new();
    for j in 0..rows {
        for i in 0..l {
            let mut star = Vec::new();
            if i > 0 {
                star.push(h(i - 1, j));
            }
            if i < cols {
                star.push(h(i, j));
            }
            if j > 0 {
                star.push(v(i, j - 1));
            }
            if j < rows - 1 {
                star.push(v(i, j));
            }
            if j == 0 {
                star.push(b(i));
            }
            if j == rows - 1 {
                star.push(t(i));
            }
            x_checks.push(star);
        }
    }

    let mut z_checks: Vec<Vec<usize>> = Vec::new();
    // truncated bottom plaquettes
    for i in 0..cols {
        z_checks.push(vec![b(i), b(i + 1), h(i, 0)]);
    }
    // full squares
    for j in 0..rows.saturating_sub(1) {
        for i in 0..cols {
            z_checks.push(vec![h(i, j), h(i, j + 1), v(i, j), v(i + 1, j)]);
        }
    }
    // truncated top plaquettes
    for i in 0..cols {
        z_checks.push(vec![t(i), t(i + 1), h(i, rows - 1)]);
    }

    // Remove the chosen qubit: merge the (exactly two) plaquettes containing
    // it, drop it from stars, then renumber the remaining qubits.
    let touching: Vec<usize> = z_checks
        .iter()
        .enumerate()
        .filter(|(_, c)| c.contains(&removed))
        .map(|(i, _)| i)
        .collect();
    assert_eq!(touching.len(), 2, "a bulk edge sits in two plaquettes");
    let mut merged: Vec<usize> = z_checks[touching[0]]
        .iter()
        .chain(&z_checks[touching[1]])
        .copied()
        .filter(|&q| q != removed)
        .collect();
    merged.sort_unstable();
    merged.dedup_by(|a, b| {
        if a == b {
            unreachable!("plaquettes share only the removed edge")
        } else {
            false
        }
    });
    let mut new_z: Vec<Vec<usize>> = z_checks
        .iter()
        .enumerate()
        .filter(|(i, _)| !touching.contains(i))
        .map(|(_, c)| c.clone())
        .collect();
    new_z.push(merged);
    let new_x: Vec<Vec<usize>> = x_checks
        .iter()
        .map(|c| c.iter().copied().filter(|&q| q != removed).collect())
        .collect();

    let renumber = |q: usize| if q > removed { q - 1 } else { q };
    let x_final: Vec<Vec<usize>> = new_x
        .iter()
        .map(|c| c.iter().map(|&q| renumber(q)).collect())
        .collect();
    let z_final: Vec<Vec<usize>> = new_z
        .iter()
        .map(|c| c.iter().map(|&q| renumber(q)).collect())
        .collect();

    Ok(CssCode::from_supports(format!("surface{l}"), n - 1, &x_final, &z_final)?.validated()?)
}
