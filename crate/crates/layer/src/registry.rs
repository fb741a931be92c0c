//! Defect registry: every junction line and point defect, classified.
//!
//! Line defects come in eight kinds: first/middle/last for ẑ-oriented
//! junctions (a yz-layer meeting a qubit layer) and for x̂-oriented
//! junctions (an xy-layer meeting a qubit layer), plus trivial and
//! nontrivial ŷ crossings of check layers. Pass-throughs of a check layer
//! over an unsupported qubit plane carry no defect and are not registered,
//! matching the convention that trivial intersections decompose into the
//! layers' own checks.
//!
//! Point defects sit where lines meet: ten bulk kinds (eight at shared
//! qubits of an overlapping check pair, two where a single junction crosses
//! a nontrivial ŷ interval) and twelve boundary kinds where ẑ/x̂ junction
//! lines end on the cuboid faces.

use serde::{Deserialize, Serialize};

use crate::layout::LayerLayout;
use crate::pairing::{OverlapPairing, SegmentKind};

#[derive(Debug, thiserror::Error)]
pub enum RegistryError {
    #[error("unclassifiable adjacency at qubit {qubit}, X check {x_check}, Z check {z_check}; layout and pairing disagree")]
    Unclassifiable {
        qubit: usize,
        x_check: usize,
        z_check: usize,
    },
}

/// Position of a qubit plane within a check layer's support.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum JunctionKind {
    First,
    Middle,
    Last,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LineOrientation {
    X,
    Y,
    Z,
}

/// One line-defect record: a straight segment with a kind.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LineDefect {
    pub orientation: LineOrientation,
    /// `first`/`middle`/`last` for junction lines; trivial flag for ŷ.
    pub kind: String,
    pub from: [i64; 3],
    pub to: [i64; 3],
    /// Input indices of the layers meeting at the line.
    pub qubit_layer: Option<usize>,
    pub x_check: Option<usize>,
    pub z_check: Option<usize>,
}

/// The ten bulk point-defect kinds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BulkPointKind {
    /// First x̂ and first ẑ junction joined by a nontrivial ŷ end.
    BothFirst,
    /// Last x̂ and last ẑ junction.
    BothLast,
    /// Middle/middle with the nontrivial ŷ opening above.
    MiddleMiddleOpen,
    /// Middle/middle with the nontrivial ŷ closing from below.
    MiddleMiddleClose,
    /// Middle x̂, first ẑ.
    MiddleXFirstZ,
    /// Middle x̂, last ẑ.
    MiddleXLastZ,
    /// First x̂, middle ẑ.
    FirstXMiddleZ,
    /// Last x̂, middle ẑ.
    LastXMiddleZ,
    /// A ẑ junction crossed by a nontrivial ŷ interval (xy passes through).
    ZJunctionThroughY,
    /// An x̂ junction crossed by a nontrivial ŷ interval (yz passes through).
    XJunctionThroughY,
}

/// The twelve boundary point-defect kinds: a junction line ending on a
/// cuboid face.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundaryPointKind {
    FirstZFront,
    FirstZBack,
    LastZFront,
    LastZBack,
    MiddleZFront,
    MiddleZBack,
    FirstXLeft,
    FirstXRight,
    LastXLeft,
    LastXRight,
    MiddleXLeft,
    MiddleXRight,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub enum PointKind {
    Bulk(BulkPointKind),
    Boundary(BoundaryPointKind),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PointDefect {
    pub site: [i64; 3],
    pub kind: PointKind,
    pub qubit_layer: usize,
    pub x_check: Option<usize>,
    pub z_check: Option<usize>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct DefectRegistry {
    pub lines: Vec<LineDefect>,
    pub points: Vec<PointDefect>,
}

impl DefectRegistry {
    pub fn bulk_points(&self) -> impl Iterator<Item = &PointDefect> {
        self.points
            .iter()
            .filter(|p| matches!(p.kind, PointKind::Bulk(_)))
    }

    pub fn count_lines(&self, orientation: LineOrientation) -> usize {
        self.lines
            .iter()
            .filter(|l| l.orientation == orientation)
            .count()
    }
}

fn junction_kind(support: &[usize], qubit: usize) -> Option<JunctionKind> {
    let pos = support.iter().position(|&q| q == qubit)?;
    Some(if pos == 0 {
        JunctionKind::First
    } else if pos == support.len() - 1 {
        JunctionKind::Last
    } else {
        JunctionKind::Middle
    })
}

fn kind_name(kind: JunctionKind) -> &'static str {
    match kind {
        JunctionKind::First => "first",
        JunctionKind::Middle => "middle",
        JunctionKind::Last => "last",
    }
}

/// Builds the complete registry from a layout and its pairing.
pub fn classify_junctions(
    layout: &LayerLayout,
    pairing: &OverlapPairing,
) -> Result<DefectRegistry, RegistryError> {
    let frame = &layout.frame;
    let mut lines = Vec::new();
    let mut points = Vec::new();

    // ẑ-junction lines and their boundary endpoints.
    for zl in &layout.zcheck_layers {
        for &i in &zl.support {
            let kind = junction_kind(&zl.support, i).expect("supported qubit");
            let y = frame.qubit_plane(i);
            lines.push(LineDefect {
                orientation: LineOrientation::Z,
                kind: format!("{}-z", kind_name(kind)),
                from: [zl.plane, y, 0],
                to: [zl.plane, y, frame.lz],
                qubit_layer: Some(i),
                x_check: None,
                z_check: Some(zl.input_check),
            });
            for (z, front) in [(0, true), (frame.lz, false)] {
                let bkind = match (kind, front) {
                    (JunctionKind::First, true) => BoundaryPointKind::FirstZFront,
                    (JunctionKind::First, false) => BoundaryPointKind::FirstZBack,
                    (JunctionKind::Last, true) => BoundaryPointKind::LastZFront,
                    (JunctionKind::Last, false) => BoundaryPointKind::LastZBack,
                    (JunctionKind::Middle, true) => BoundaryPointKind::MiddleZFront,
                    (JunctionKind::Middle, false) => BoundaryPointKind::MiddleZBack,
                };
                points.push(PointDefect {
                    site: [zl.plane, y, z],
                    kind: PointKind::Boundary(bkind),
                    qubit_layer: i,
                    x_check: None,
                    z_check: Some(zl.input_check),
                });
            }
        }
    }

    // x̂-junction lines and their boundary endpoints.
    for xl in &layout.xcheck_layers {
        for &i in &xl.support {
            let kind = junction_kind(&xl.support, i).expect("supported qubit");
            let y = frame.qubit_plane(i);
            lines.push(LineDefect {
                orientation: LineOrientation::X,
                kind: format!("{}-x", kind_name(kind)),
                from: [0, y, xl.plane],
                to: [frame.lx, y, xl.plane],
                qubit_layer: Some(i),
                x_check: Some(xl.input_check),
                z_check: None,
            });
            for (x, left) in [(0, true), (frame.lx, false)] {
                let bkind = match (kind, left) {
                    (JunctionKind::First, true) => BoundaryPointKind::FirstXLeft,
                    (JunctionKind::First, false) => BoundaryPointKind::FirstXRight,
                    (JunctionKind::Last, true) => BoundaryPointKind::LastXLeft,
                    (JunctionKind::Last, false) => BoundaryPointKind::LastXRight,
                    (JunctionKind::Middle, true) => BoundaryPointKind::MiddleXLeft,
                    (JunctionKind::Middle, false) => BoundaryPointKind::MiddleXRight,
                };
                points.push(PointDefect {
                    site: [x, y, xl.plane],
                    kind: PointKind::Boundary(bkind),
                    qubit_layer: i,
                    x_check: Some(xl.input_check),
                    z_check: None,
                });
            }
        }
    }

    // ŷ crossing lines between check layers that share y-range, split into
    // trivial and nontrivial intervals, plus the bulk points along them.
    for zl in &layout.zcheck_layers {
        for xl in &layout.xcheck_layers {
            let lo = zl.y_span.0.max(xl.y_span.0);
            let hi = zl.y_span.1.min(xl.y_span.1);
            if lo > hi {
                continue;
            }
            let j = zl.input_check;
            let k = xl.input_check;
            let line_x = zl.plane;
            let line_z = xl.plane;
            match pairing.entry(k, j) {
                None => {
                    lines.push(LineDefect {
                        orientation: LineOrientation::Y,
                        kind: "trivial-y".into(),
                        from: [line_x, lo, line_z],
                        to: [line_x, hi, line_z],
                        qubit_layer: None,
                        x_check: Some(k),
                        z_check: Some(j),
                    });
                }
                Some(entry) => {
                    // Alternating intervals along the overlap region.
                    let mut cursor = lo;
                    for &(a, b) in &entry.pairs {
                        let ya = frame.qubit_plane(a);
                        let yb = frame.qubit_plane(b);
                        if ya > cursor {
                            lines.push(LineDefect {
                                orientation: LineOrientation::Y,
                                kind: "trivial-y".into(),
                                from: [line_x, cursor, line_z],
                                to: [line_x, ya, line_z],
                                qubit_layer: None,
                                x_check: Some(k),
                                z_check: Some(j),
                            });
                        }
                        lines.push(LineDefect {
                            orientation: LineOrientation::Y,
                            kind: "nontrivial-y".into(),
                            from: [line_x, ya, line_z],
                            to: [line_x, yb, line_z],
                            qubit_layer: None,
                            x_check: Some(k),
                            z_check: Some(j),
                        });
                        cursor = yb;
                    }
                    if cursor < hi {
                        lines.push(LineDefect {
                            orientation: LineOrientation::Y,
                            kind: "trivial-y".into(),
                            from: [line_x, cursor, line_z],
                            to: [line_x, hi, line_z],
                            qubit_layer: None,
                            x_check: Some(k),
                            z_check: Some(j),
                        });
                    }

                    // Bulk points: the shared qubits (pair endpoints) and
                    // the junctions crossed inside nontrivial intervals.
                    for i in 0..frame.n {
                        let y = frame.qubit_plane(i);
                        if y < lo || y > hi {
                            continue;
                        }
                        let zk = junction_kind(&zl.support, i);
                        let xk = junction_kind(&xl.support, i);
                        let site = [line_x, y, line_z];
                        let kind = match (xk, zk) {
                            (Some(xk), Some(zk)) => {
                                // Shared qubit: one of the eight endpoint kinds.
                                let opens = entry.pairs.iter().any(|&(a, _)| a == i);
                                let closes = entry.pairs.iter().any(|&(_, b)| b == i);
                                if !(opens ^ closes) {
                                    return Err(RegistryError::Unclassifiable {
                                        qubit: i,
                                        x_check: k,
                                        z_check: j,
                                    });
                                }
                                Some(match (xk, zk, opens) {
                                    (JunctionKind::First, JunctionKind::First, true) => {
                                        BulkPointKind::BothFirst
                                    }
                                    (JunctionKind::Last, JunctionKind::Last, false) => {
                                        BulkPointKind::BothLast
                                    }
                                    (JunctionKind::Middle, JunctionKind::Middle, true) => {
                                        BulkPointKind::MiddleMiddleOpen
                                    }
                                    (JunctionKind::Middle, JunctionKind::Middle, false) => {
                                        BulkPointKind::MiddleMiddleClose
                                    }
                                    (JunctionKind::Middle, JunctionKind::First, true) => {
                                        BulkPointKind::MiddleXFirstZ
                                    }
                                    (JunctionKind::Middle, JunctionKind::Last, false) => {
                                        BulkPointKind::MiddleXLastZ
                                    }
                                    (JunctionKind::First, JunctionKind::Middle, true) => {
                                        BulkPointKind::FirstXMiddleZ
                                    }
                                    (JunctionKind::Last, JunctionKind::Middle, false) => {
                                        BulkPointKind::LastXMiddleZ
                                    }
                                    _ => {
                                        return Err(RegistryError::Unclassifiable {
                                            qubit: i,
                                            x_check: k,
                                            z_check: j,
                                        })
                                    }
                                })
                            }
                            (None, Some(_))
                                if pairing.segment_at(k, j, i) == SegmentKind::Nontrivial =>
                            {
                                Some(BulkPointKind::ZJunctionThroughY)
                            }
                            (Some(_), None)
                                if pairing.segment_at(k, j, i) == SegmentKind::Nontrivial =>
                            {
                                Some(BulkPointKind::XJunctionThroughY)
                            }
                            _ => None,
                        };
                        if let Some(kind) = kind {
                            points.push(PointDefect {
                                site,
                                kind: PointKind::Bulk(kind),
                                qubit_layer: i,
                                x_check: Some(k),
                                z_check: Some(j),
                            });
                        }
                    }
                }
            }
        }
    }

    Ok(DefectRegistry { lines, points })
}
