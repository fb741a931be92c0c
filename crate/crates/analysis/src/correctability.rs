//! Point-defect correctability via the rank identity.
//!
//! A qubit set A supports no logical operator exactly when
//!
//! ```text
//!   2|A| = rank(H) + rank(H|_A) − rank(H|_Ā)
//! ```
//!
//! with H the stacked CSS check matrix and the restrictions taken
//! column-wise. The identity is the sum of the two one-sided counting
//! arguments: the number of X logicals supported inside A is
//! `|A| − rank(Hz|_A) − rank(Hx) + rank(Hx|_Ā)` and dually for Z, and both
//! counts are nonnegative, so the sum vanishes exactly when each does.

use layercode_gf2::{BinaryVector, Echelon};
use layercode_layer::{LayerCode, PointDefect};

/// Verdict for one ball around a point defect.
#[derive(Clone, Debug)]
pub struct BallReport {
    pub site: [i64; 3],
    pub kind: String,
    pub ball_size: usize,
    /// 2|A|.
    pub lhs: usize,
    /// rank(H) + rank(H|_A) − rank(H|_Ā).
    pub rhs: i64,
    /// Number of X (resp. Z) logicals supported inside A.
    pub x_logicals_inside: usize,
    pub z_logicals_inside: usize,
    pub pass: bool,
}

#[derive(Clone, Debug)]
pub struct CorrectabilityReport {
    pub radius: i64,
    pub balls: Vec<BallReport>,
}

impl CorrectabilityReport {
    pub fn all_pass(&self) -> bool {
        self.balls.iter().all(|b| b.pass)
    }
}

/// Evaluates the rank identity on the ball around every registered point
/// defect, for both check species.
pub fn point_defect_correctability(lc: &LayerCode, radius: i64) -> CorrectabilityReport {
    let base_x = Echelon::from_matrix(&lc.hx);
    let base_z = Echelon::from_matrix(&lc.hz);
    let balls = lc
        .registry
        .points
        .iter()
        .map(|p| ball_report(lc, p, radius, &base_x, &base_z))
        .collect();
    CorrectabilityReport { radius, balls }
}

/// Dimension of the row-space vectors supported inside A, via the rank of
/// the base form extended with the indicator rows of A.
fn supported_inside(base: &Echelon, n: usize, region: &[usize]) -> usize {
    let mut extended = base.clone();
    let mut added = 0;
    for &q in region {
        let mut e = BinaryVector::zeros(n);
        e.set(q, true);
        if extended.absorb(&e) {
            added += 1;
        }
    }
    region.len() - added
}

fn ball_report(
    lc: &LayerCode,
    point: &PointDefect,
    radius: i64,
    base_x: &Echelon,
    base_z: &Echelon,
) -> BallReport {
    let n = lc.num_qubits();
    let rank_hx = base_x.rank();
    let rank_hz = base_z.rank();
    let inside = lc.ball(point.site, radius);
    // restriction to the small side is computed directly; the complement
    // rank comes from rank(H|_comp) = rank(H) - dim{rowspace inside A}
    let hx_a = lc.hx.select_columns(&inside).rank();
    let hz_a = lc.hz.select_columns(&inside).rank();
    let hx_comp = rank_hx - supported_inside(base_x, n, &inside);
    let hz_comp = rank_hz - supported_inside(base_z, n, &inside);

    let a = inside.len() as i64;
    let x_logicals_inside = a - hz_a as i64 - rank_hx as i64 + hx_comp as i64;
    let z_logicals_inside = a - hx_a as i64 - rank_hz as i64 + hz_comp as i64;
    debug_assert!(x_logicals_inside >= 0 && z_logicals_inside >= 0);
    let lhs = 2 * inside.len();
    let rhs = (rank_hx + rank_hz + hx_a + hz_a) as i64 - (hx_comp + hz_comp) as i64;
    BallReport {
        site: point.site,
        kind: format!("{:?}", point.kind),
        ball_size: inside.len(),
        lhs,
        rhs,
        x_logicals_inside: x_logicals_inside.max(0) as usize,
        z_logicals_inside: z_logicals_inside.max(0) as usize,
        pass: x_logicals_inside == 0 && z_logicals_inside == 0,
    }
}
