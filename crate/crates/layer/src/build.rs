//! Check synthesis for the layer code.
//!
//! Every layer is a planar surface-code patch; junctions modify or extend
//! the patches' checks where layers meet. The couplings, per junction type:
//!
//!   - ẑ junction (yz-layer at a supported qubit plane): the crossing or
//!     terminal ŷ-edges of the yz-layer join the qubit layer's stars at
//!     that column, and the yz plaquettes spanning the plane absorb the
//!     qubit layer's ẑ-edge at their height. An X string crossing the
//!     plane then excites exactly one yz plaquette, while Z strings hop
//!     between the layers through the shared star columns.
//!   - x̂ junction (xy-layer at a supported plane): mirror image. The
//!     xy-layer's crossing ŷ-edges join the qubit layer's plaquettes, and
//!     the xy-layer's plaquette-site X checks at the plane absorb the
//!     qubit layer's ẑ-edge there.
//!   - nontrivial ŷ interval (between paired qubits of an overlapping
//!     check pair): along the crossing line of the two check layers, the
//!     xy-layer's X checks absorb the yz-layer's on-line ẑ-edges, and the
//!     yz-layer's plaquettes absorb the xy-layer's on-line x̂-edges, so
//!     strings that cross the line in either layer deposit one excitation
//!     in the other.
//!   - a ẑ junction crossed by a nontrivial ŷ interval would push one
//!     plaquette to weight seven; that plaquette is split into two checks
//!     tied together by one extra weld qubit, keeping every check at
//!     weight six or below and the logical count intact.

use std::collections::BTreeMap;

use layercode_css::CssCode;
use layercode_gf2::BinaryMatrix;

use crate::code::{CheckKind, CheckProvenance, LayerCode, Owner, QubitInfo, QubitRole};
use crate::geometry::Frame;
use crate::layout::{plan_layout, LayerLayout, LayoutError};
use crate::pairing::{compute_pairing, OverlapPairing, PairingError, SegmentKind};
use crate::registry::{classify_junctions, BulkPointKind, PointKind, RegistryError};

#[derive(Debug, thiserror::Error)]
pub enum BuildError {
    #[error(transparent)]
    Layout(#[from] LayoutError),
    #[error(transparent)]
    Pairing(#[from] PairingError),
    #[error(transparent)]
    Registry(#[from] RegistryError),
    #[error(
        "check {index} ({pauli}) has weight {weight} < 2; degenerate checks are not constructible"
    )]
    DegenerateCheck {
        index: usize,
        pauli: char,
        weight: usize,
    },
    #[error(
        "template validation failed: X check at {x_site:?} anticommutes with Z check at {z_site:?}"
    )]
    Anticommuting { x_site: [i64; 3], z_site: [i64; 3] },
    #[error("template validation failed: {pauli} check at {site:?} has weight {weight} > 6")]
    Overweight {
        pauli: char,
        site: [i64; 3],
        weight: usize,
    },
    #[error("template validation failed: {pauli} check at {site:?} spans a box of side {side} > {bound}")]
    NonLocal {
        pauli: char,
        site: [i64; 3],
        side: i64,
        bound: i64,
    },
    #[error("logical count changed: input encodes {expected}, output encodes {got}")]
    LogicalCountChanged { expected: usize, got: usize },
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct QubitKey {
    owner: Owner,
    role: QubitRole,
    pos: [i64; 3],
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum Pauli {
    X,
    Z,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct CheckKey {
    pauli: Pauli,
    owner: Owner,
    site: [i64; 3],
    kind: CheckKind,
}

/// A ŷ-direction link of a check layer: the stretch between two adjacent
/// structural rows (or between a row and the plane the layer terminates on).
#[derive(Clone, Copy, Debug)]
struct Link {
    lo: i64,
    hi: i64,
    /// Marker coordinate used for the link's qubits and plaquette sites.
    marker: i64,
    /// The input qubit plane this link touches or crosses, if any.
    plane: Option<usize>,
    /// Whether the plane above is touched as a terminal (the layer ends).
    terminal: bool,
}

struct LayerLinks {
    rows: Vec<i64>,
    links: Vec<Link>,
}

impl LayerLinks {
    fn link_below(&self, row: i64) -> &Link {
        let idx = self
            .rows
            .iter()
            .position(|&r| r == row)
            .expect("row exists");
        &self.links[idx]
    }

    fn link_above(&self, row: i64) -> &Link {
        let idx = self
            .rows
            .iter()
            .position(|&r| r == row)
            .expect("row exists");
        &self.links[idx + 1]
    }

    fn plane_link(&self, plane: usize) -> &Link {
        self.links
            .iter()
            .find(|l| l.plane == Some(plane))
            .expect("supported plane has a link")
    }
}

/// Rows and links of the yz-layer for Z check `j`: rows on every even
/// non-plane y inside the span, links between consecutive boundaries.
fn zlayer_links(frame: &Frame, span: (i64, i64)) -> LayerLinks {
    let rows: Vec<i64> = ((span.0 + 2)..span.1)
        .step_by(2)
        .filter(|y| frame.plane_to_qubit(*y).is_none())
        .collect();
    build_links(frame, span, &rows)
}

/// Rows and links of the xy-layer for X check `k`: rows on every odd y
/// inside the span.
fn xlayer_links(frame: &Frame, span: (i64, i64)) -> LayerLinks {
    let rows: Vec<i64> = ((span.0 + 1)..span.1).step_by(2).collect();
    build_links(frame, span, &rows)
}

fn build_links(frame: &Frame, span: (i64, i64), rows: &[i64]) -> LayerLinks {
    assert!(!rows.is_empty(), "spans cover at least one structural row");
    let mut boundaries = vec![span.0];
    boundaries.extend_from_slice(rows);
    boundaries.push(span.1);
    let mut links = Vec::with_capacity(boundaries.len() - 1);
    for w in boundaries.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        // Terminal links onto a supported plane keep their marker on the
        // odd midpoint when there is one (yz-layers, gap two) and on the
        // plane itself for the gap-one xy-layer terminals.
        let (marker, plane, terminal) = if lo == span.0 && frame.plane_to_qubit(lo).is_some() {
            let marker = if hi - lo == 1 { lo } else { lo + 1 };
            (marker, frame.plane_to_qubit(lo), true)
        } else if hi == span.1 && frame.plane_to_qubit(hi).is_some() {
            let marker = if hi - lo == 1 { hi } else { hi - 1 };
            (marker, frame.plane_to_qubit(hi), true)
        } else {
            let mid = (lo + hi) / 2;
            (mid, frame.plane_to_qubit(mid), false)
        };
        links.push(Link {
            lo,
            hi,
            marker,
            plane,
            terminal,
        });
    }
    LayerLinks {
        rows: rows.to_vec(),
        links,
    }
}

struct Builder {
    frame: Frame,
    ids: BTreeMap<QubitKey, usize>,
    checks: BTreeMap<CheckKey, Vec<usize>>,
}

impl Builder {
    fn qubit(&self, key: QubitKey) -> usize {
        *self
            .ids
            .get(&key)
            .unwrap_or_else(|| panic!("qubit {key:?} was not enumerated"))
    }

    fn add(&mut self, key: CheckKey, support: Vec<usize>) {
        let prev = self.checks.insert(key, support);
        assert!(prev.is_none(), "duplicate check {key:?}");
    }
}

fn xq(i: usize, x: i64, y: i64, z: i64) -> QubitKey {
    QubitKey {
        owner: Owner::QubitLayer(i),
        role: QubitRole::XEdge,
        pos: [x, y, z],
    }
}

fn zq(i: usize, x: i64, y: i64, z: i64) -> QubitKey {
    QubitKey {
        owner: Owner::QubitLayer(i),
        role: QubitRole::ZEdge,
        pos: [x, y, z],
    }
}

fn zq_y(j: usize, x: i64, y: i64, z: i64) -> QubitKey {
    QubitKey {
        owner: Owner::ZCheckLayer(j),
        role: QubitRole::ZEdge,
        pos: [x, y, z],
    }
}

fn ye_z(j: usize, x: i64, marker: i64, z: i64) -> QubitKey {
    QubitKey {
        owner: Owner::ZCheckLayer(j),
        role: QubitRole::YEdge,
        pos: [x, marker, z],
    }
}

fn xq_y(k: usize, x: i64, y: i64, z: i64) -> QubitKey {
    QubitKey {
        owner: Owner::XCheckLayer(k),
        role: QubitRole::XEdge,
        pos: [x, y, z],
    }
}

fn ye_x(k: usize, x: i64, marker: i64, z: i64) -> QubitKey {
    QubitKey {
        owner: Owner::XCheckLayer(k),
        role: QubitRole::YEdge,
        pos: [x, marker, z],
    }
}

fn weld(j: usize, i: usize, k: usize, pos: [i64; 3]) -> QubitKey {
    QubitKey {
        owner: Owner::Defect(j, i, k),
        role: QubitRole::Weld,
        pos,
    }
}

/// Runs the full pipeline: layout, pairing, defect classification, check
/// synthesis and the structural validation gates.
pub fn build_layer_code(code: &CssCode, c: usize) -> Result<LayerCode, BuildError> {
    for (index, row) in code.hx().rows().iter().enumerate() {
        if row.weight() < 2 {
            return Err(BuildError::DegenerateCheck {
                index,
                pauli: 'X',
                weight: row.weight(),
            });
        }
    }
    for (index, row) in code.hz().rows().iter().enumerate() {
        if row.weight() < 2 {
            return Err(BuildError::DegenerateCheck {
                index,
                pauli: 'Z',
                weight: row.weight(),
            });
        }
    }

    let layout = plan_layout(code, c)?;
    let pairing = compute_pairing(code)?;
    let registry = classify_junctions(&layout, &pairing)?;
    let frame = layout.frame;

    let zlinks: Vec<LayerLinks> = layout
        .zcheck_layers
        .iter()
        .map(|zl| zlayer_links(&frame, zl.y_span))
        .collect();
    let xlinks: Vec<LayerLinks> = layout
        .xcheck_layers
        .iter()
        .map(|xl| xlayer_links(&frame, xl.y_span))
        .collect();

    // Sites where a ẑ junction is crossed by a nontrivial ŷ interval; these
    // take the split-plaquette weld. Keyed (z-check, qubit, x-check).
    let weld_sites: Vec<(usize, usize, usize)> = registry
        .points
        .iter()
        .filter_map(|p| match p.kind {
            PointKind::Bulk(BulkPointKind::ZJunctionThroughY) => {
                Some((p.z_check.unwrap(), p.qubit_layer, p.x_check.unwrap()))
            }
            _ => None,
        })
        .collect();

    let mut builder = Builder {
        frame,
        ids: BTreeMap::new(),
        checks: BTreeMap::new(),
    };

    enumerate_qubits(&mut builder, &layout, &zlinks, &xlinks, &weld_sites);
    synthesize_qubit_layers(&mut builder, code, &layout, &zlinks, &xlinks);
    synthesize_z_layers(&mut builder, code, &layout, &zlinks, &pairing, &weld_sites);
    synthesize_x_layers(&mut builder, code, &layout, &xlinks, &pairing, &weld_sites);

    freeze_and_validate(builder, code, c, layout, registry)
}

fn enumerate_qubits(
    builder: &mut Builder,
    layout: &LayerLayout,
    zlinks: &[LayerLinks],
    xlinks: &[LayerLinks],
    weld_sites: &[(usize, usize, usize)],
) {
    let frame = builder.frame;
    let mut keys: Vec<QubitKey> = Vec::new();

    for ql in &layout.qubit_layers {
        let i = ql.input_qubit;
        for x in frame.x_edge_cols() {
            for z in frame.z_vertex_rows() {
                keys.push(xq(i, x, ql.y, z));
            }
        }
        for x in frame.x_vertex_cols() {
            for z in frame.z_edge_rows() {
                keys.push(zq(i, x, ql.y, z));
            }
        }
    }

    for (zl, links) in layout.zcheck_layers.iter().zip(zlinks) {
        let j = zl.input_check;
        for &row in &links.rows {
            for z in frame.z_edge_rows() {
                keys.push(zq_y(j, zl.plane, row, z));
            }
        }
        for link in &links.links {
            for z in frame.z_vertex_rows() {
                keys.push(ye_z(j, zl.plane, link.marker, z));
            }
        }
    }

    for (xl, links) in layout.xcheck_layers.iter().zip(xlinks) {
        let k = xl.input_check;
        for &row in &links.rows {
            for x in frame.x_vertex_cols() {
                keys.push(xq_y(k, x, row, xl.plane));
            }
        }
        for link in &links.links {
            for x in frame.x_edge_cols() {
                keys.push(ye_x(k, x, link.marker, xl.plane));
            }
        }
    }

    for &(j, i, k) in weld_sites {
        let pos = [
            frame.zcheck_plane(j),
            frame.qubit_plane(i),
            frame.xcheck_plane(k),
        ];
        keys.push(weld(j, i, k, pos));
    }

    keys.sort_unstable();
    for (id, key) in keys.into_iter().enumerate() {
        let prev = builder.ids.insert(key, id);
        assert!(prev.is_none(), "duplicate qubit key {key:?}");
    }
}

/// Stars and plaquettes of every qubit layer, including the junction
/// couplings that reach into the check layers.
fn synthesize_qubit_layers(
    builder: &mut Builder,
    code: &CssCode,
    layout: &LayerLayout,
    zlinks: &[LayerLinks],
    xlinks: &[LayerLinks],
) {
    let frame = builder.frame;
    for ql in &layout.qubit_layers {
        let i = ql.input_qubit;
        let y = ql.y;

        for x_v in frame.x_vertex_cols() {
            for z_v in frame.z_vertex_rows() {
                let mut support = Vec::new();
                for dx in [-1i64, 1] {
                    let x = x_v + dx;
                    if (1..frame.lx).contains(&x) {
                        support.push(builder.qubit(xq(i, x, y, z_v)));
                    }
                }
                support.push(builder.qubit(zq(i, x_v, y, z_v - 1)));
                support.push(builder.qubit(zq(i, x_v, y, z_v + 1)));
                // ẑ-junction coupling: the yz-layer's plane-touching ŷ-edge.
                for (zl, links) in layout.zcheck_layers.iter().zip(zlinks) {
                    if zl.plane == x_v && zl.support.contains(&i) {
                        let link = links.plane_link(i);
                        support.push(builder.qubit(ye_z(
                            zl.input_check,
                            zl.plane,
                            link.marker,
                            z_v,
                        )));
                    }
                }
                builder.add(
                    CheckKey {
                        pauli: Pauli::X,
                        owner: Owner::QubitLayer(i),
                        site: [x_v, y, z_v],
                        kind: CheckKind::Star,
                    },
                    support,
                );
            }
        }

        for x_p in frame.x_edge_cols() {
            for z_c in frame.z_edge_rows() {
                let mut support = Vec::new();
                for dz in [-1i64, 1] {
                    let z = z_c + dz;
                    if frame.in_z_vertex_range(z) {
                        support.push(builder.qubit(xq(i, x_p, y, z)));
                    }
                }
                support.push(builder.qubit(zq(i, x_p - 1, y, z_c)));
                support.push(builder.qubit(zq(i, x_p + 1, y, z_c)));
                // x̂-junction coupling: the xy-layer's plane-touching ŷ-edge.
                for (xl, links) in layout.xcheck_layers.iter().zip(xlinks) {
                    if xl.plane == z_c && xl.support.contains(&i) {
                        let link = links.plane_link(i);
                        support.push(builder.qubit(ye_x(
                            xl.input_check,
                            x_p,
                            link.marker,
                            xl.plane,
                        )));
                    }
                }
                builder.add(
                    CheckKey {
                        pauli: Pauli::Z,
                        owner: Owner::QubitLayer(i),
                        site: [x_p, y, z_c],
                        kind: CheckKind::Plaquette,
                    },
                    support,
                );
            }
        }
    }
    let _ = code;
}

/// Stars and plaquettes of the yz-layers, the junction plaquettes that
/// absorb qubit-layer ẑ-edges, the nontrivial-line frame, and the split
/// plaquettes at weld sites.
fn synthesize_z_layers(
    builder: &mut Builder,
    code: &CssCode,
    layout: &LayerLayout,
    zlinks: &[LayerLinks],
    pairing: &OverlapPairing,
    weld_sites: &[(usize, usize, usize)],
) {
    let frame = builder.frame;
    for (zl, links) in layout.zcheck_layers.iter().zip(zlinks) {
        let j = zl.input_check;
        let x = zl.plane;

        // Stars at every (row, vertex-column) site.
        for &row in &links.rows {
            for z_v in frame.z_vertex_rows() {
                let mut support = vec![
                    builder.qubit(zq_y(j, x, row, z_v - 1)),
                    builder.qubit(zq_y(j, x, row, z_v + 1)),
                    builder.qubit(ye_z(j, x, links.link_below(row).marker, z_v)),
                    builder.qubit(ye_z(j, x, links.link_above(row).marker, z_v)),
                ];
                // Weld joins: the split at a crossed junction below this row
                // ties its weld qubit into the stars one row above the plane.
                for &(wj, wi, wk) in weld_sites {
                    if wj == j
                        && frame.qubit_plane(wi) + 2 == row
                        && (frame.xcheck_plane(wk) - z_v).abs() == 1
                    {
                        let pos = [x, frame.qubit_plane(wi), frame.xcheck_plane(wk)];
                        support.push(builder.qubit(weld(wj, wi, wk, pos)));
                    }
                }
                builder.add(
                    CheckKey {
                        pauli: Pauli::X,
                        owner: Owner::ZCheckLayer(j),
                        site: [x, row, z_v],
                        kind: CheckKind::Star,
                    },
                    support,
                );
            }
        }

        // Plaquettes per link and height, with junction and frame couplings.
        for link in &links.links {
            let supported_plane = link
                .plane
                .filter(|i| link.terminal || code.hz().row(j).get(*i));
            for z_c in frame.z_edge_rows() {
                // Weld replacement takes over this (link, height) entirely.
                let weld_here = supported_plane.and_then(|i| {
                    weld_sites
                        .iter()
                        .find(|&&(wj, wi, wk)| wj == j && wi == i && frame.xcheck_plane(wk) == z_c)
                        .copied()
                });
                if let Some((wj, wi, wk)) = weld_here {
                    synthesize_weld_split(builder, layout, links, (wj, wi, wk), link, z_c);
                    continue;
                }

                let mut support = Vec::new();
                for dz in [-1i64, 1] {
                    let z = z_c + dz;
                    if frame.in_z_vertex_range(z) {
                        support.push(builder.qubit(ye_z(j, x, link.marker, z)));
                    }
                }
                if frame.plane_to_qubit(link.lo).is_none() {
                    support.push(builder.qubit(zq_y(j, x, link.lo, z_c)));
                }
                if frame.plane_to_qubit(link.hi).is_none() {
                    support.push(builder.qubit(zq_y(j, x, link.hi, z_c)));
                }
                let mut kind = CheckKind::Plaquette;
                if let Some(i) = supported_plane {
                    // junction coupling into the qubit layer
                    support.push(builder.qubit(zq(i, x, frame.qubit_plane(i), z_c)));
                    kind = CheckKind::JunctionPlaquette;
                }
                // Nontrivial-line frame: absorb the xy-layer's on-line
                // x̂-edges strictly inside this link's interval.
                for xl in &layout.xcheck_layers {
                    if xl.plane != z_c {
                        continue;
                    }
                    let k = xl.input_check;
                    let mut y1 = link.lo + 1;
                    while y1 < link.hi {
                        if y1 > xl.y_span.0
                            && y1 < xl.y_span.1
                            && in_nontrivial(frame, pairing, k, j, y1)
                        {
                            support.push(builder.qubit(xq_y(k, x, y1, z_c)));
                            kind = CheckKind::JunctionPlaquette;
                        }
                        y1 += 2;
                    }
                }
                builder.add(
                    CheckKey {
                        pauli: Pauli::Z,
                        owner: Owner::ZCheckLayer(j),
                        site: [x, link.marker, z_c],
                        kind,
                    },
                    support,
                );
            }
        }
    }
}

/// The split pair replacing the weight-seven plaquette where a ẑ junction
/// crosses a nontrivial ŷ interval.
fn synthesize_weld_split(
    builder: &mut Builder,
    layout: &LayerLayout,
    links: &LayerLinks,
    site: (usize, usize, usize),
    link: &Link,
    z_c: i64,
) {
    let (j, i, k) = site;
    let frame = builder.frame;
    let x = frame.zcheck_plane(j);
    let y_plane = frame.qubit_plane(i);
    let pos = [x, y_plane, frame.xcheck_plane(k)];
    let g = builder.qubit(weld(j, i, k, pos));
    debug_assert_eq!(z_c, frame.xcheck_plane(k));
    debug_assert_eq!(link.marker, y_plane);

    // Half A: the junction straddle (crossing ŷ-edges, the lower row's
    // ẑ-edge, the qubit layer's ẑ-edge, the lower on-line x̂-edge) plus g.
    let mut a = Vec::new();
    for dz in [-1i64, 1] {
        let z = z_c + dz;
        if frame.in_z_vertex_range(z) {
            a.push(builder.qubit(ye_z(j, x, link.marker, z)));
        }
    }
    a.push(builder.qubit(zq_y(j, x, link.lo, z_c)));
    a.push(builder.qubit(zq(i, x, y_plane, z_c)));
    a.push(builder.qubit(xq_y(k, x, y_plane - 1, z_c)));
    a.push(g);
    builder.add(
        CheckKey {
            pauli: Pauli::Z,
            owner: Owner::Defect(j, i, k),
            site: pos,
            kind: CheckKind::DefectSplitA,
        },
        a,
    );

    // Half B: the upper row's ẑ-edge, the upper on-line x̂-edge, and g.
    let b = vec![
        builder.qubit(zq_y(j, x, link.hi, z_c)),
        builder.qubit(xq_y(k, x, y_plane + 1, z_c)),
        g,
    ];
    builder.add(
        CheckKey {
            pauli: Pauli::Z,
            owner: Owner::Defect(j, i, k),
            site: pos,
            kind: CheckKind::DefectSplitB,
        },
        b,
    );
    let _ = (layout, links);
}

/// Vertex checks and plaquette-site X checks of the xy-layers, with the
/// junction straddles, the nontrivial-line absorptions and the weld joins.
fn synthesize_x_layers(
    builder: &mut Builder,
    code: &CssCode,
    layout: &LayerLayout,
    xlinks: &[LayerLinks],
    pairing: &OverlapPairing,
    weld_sites: &[(usize, usize, usize)],
) {
    let frame = builder.frame;
    for (xl, links) in layout.xcheck_layers.iter().zip(xlinks) {
        let k = xl.input_check;
        let z = xl.plane;

        // Vertex Z checks on the rows.
        for &row in &links.rows {
            for x_c in frame.x_edge_cols() {
                let support = vec![
                    builder.qubit(xq_y(k, x_c - 1, row, z)),
                    builder.qubit(xq_y(k, x_c + 1, row, z)),
                    builder.qubit(ye_x(k, x_c, links.link_below(row).marker, z)),
                    builder.qubit(ye_x(k, x_c, links.link_above(row).marker, z)),
                ];
                builder.add(
                    CheckKey {
                        pauli: Pauli::Z,
                        owner: Owner::XCheckLayer(k),
                        site: [x_c, row, z],
                        kind: CheckKind::Plaquette,
                    },
                    support,
                );
            }
        }

        // X checks per link and vertex column.
        for link in &links.links {
            let supported_plane = link
                .plane
                .filter(|i| link.terminal || code.hx().row(k).get(*i));
            for x_e in frame.x_vertex_cols() {
                let mut support = Vec::new();
                if link.marker > xl.y_span.0 {
                    support.push(builder.qubit(xq_y(k, x_e, link.marker - 1, z)));
                }
                if link.marker < xl.y_span.1 {
                    support.push(builder.qubit(xq_y(k, x_e, link.marker + 1, z)));
                }
                for dx in [-1i64, 1] {
                    let x = x_e + dx;
                    if (1..frame.lx).contains(&x) {
                        support.push(builder.qubit(ye_x(k, x, link.marker, z)));
                    }
                }
                let mut kind = CheckKind::Star;
                if let Some(i) = supported_plane {
                    // junction straddle: absorb the qubit layer's ẑ-edge
                    support.push(builder.qubit(zq(i, x_e, frame.qubit_plane(i), z)));
                    kind = CheckKind::JunctionStar;
                }
                // Nontrivial-line absorption of the yz-layer's on-line edge.
                for zl in &layout.zcheck_layers {
                    if zl.plane != x_e {
                        continue;
                    }
                    let j = zl.input_check;
                    let y_e = link.marker;
                    if frame.plane_to_qubit(y_e).is_none()
                        && y_e > zl.y_span.0
                        && y_e < zl.y_span.1
                        && in_nontrivial(frame, pairing, k, j, y_e)
                    {
                        support.push(builder.qubit(zq_y(j, x_e, y_e, z)));
                        kind = CheckKind::JunctionStar;
                    }
                }
                // Weld join at a crossed ẑ junction on this site.
                for &(wj, wi, wk) in weld_sites {
                    if wk == k
                        && frame.qubit_plane(wi) == link.marker
                        && frame.zcheck_plane(wj) == x_e
                    {
                        let pos = [x_e, link.marker, z];
                        support.push(builder.qubit(weld(wj, wi, wk, pos)));
                        kind = CheckKind::JunctionStar;
                    }
                }
                builder.add(
                    CheckKey {
                        pauli: Pauli::X,
                        owner: Owner::XCheckLayer(k),
                        site: [x_e, link.marker, z],
                        kind,
                    },
                    support,
                );
            }
        }
    }
}

/// Whether odd-or-even coordinate `y` lies strictly inside a nontrivial
/// interval of the crossing line of X check `k` and Z check `j`.
fn in_nontrivial(frame: Frame, pairing: &OverlapPairing, k: usize, j: usize, y: i64) -> bool {
    debug_assert!(frame.plane_to_qubit(y).is_none());
    if y < 2 {
        return false;
    }
    let below = ((y - 2) / frame.step) as usize;
    pairing.segment_between(k, j, below) == SegmentKind::Nontrivial
}

fn freeze_and_validate(
    builder: Builder,
    code: &CssCode,
    c: usize,
    layout: LayerLayout,
    registry: crate::registry::DefectRegistry,
) -> Result<LayerCode, BuildError> {
    let n = builder.ids.len();
    let qubits: Vec<QubitInfo> = builder
        .ids
        .iter()
        .map(|(key, &id)| QubitInfo {
            id,
            pos: key.pos,
            owner: key.owner,
            role: key.role,
        })
        .collect();

    let mut hx_rows = Vec::new();
    let mut hz_rows = Vec::new();
    let mut x_provenance = Vec::new();
    let mut z_provenance = Vec::new();
    for (key, support) in &builder.checks {
        let mut row = layercode_gf2::BinaryVector::zeros(n);
        for &q in support {
            row.set(q, true);
        }
        let prov = CheckProvenance {
            owner: key.owner,
            kind: key.kind,
            site: key.site,
        };
        match key.pauli {
            Pauli::X => {
                hx_rows.push(row);
                x_provenance.push(prov);
            }
            Pauli::Z => {
                hz_rows.push(row);
                z_provenance.push(prov);
            }
        }
    }
    let hx = BinaryMatrix::from_rows(n, hx_rows).expect("uniform width");
    let hz = BinaryMatrix::from_rows(n, hz_rows).expect("uniform width");

    let out = LayerCode {
        input: code.clone(),
        c,
        qubits,
        hx,
        hz,
        x_provenance,
        z_provenance,
        layout,
        registry,
    };

    if let Some((a, b)) = out.commutation_violation() {
        return Err(BuildError::Anticommuting {
            x_site: out.x_provenance[a].site,
            z_site: out.z_provenance[b].site,
        });
    }
    for (matrix, provs, pauli) in [
        (&out.hx, &out.x_provenance, 'X'),
        (&out.hz, &out.z_provenance, 'Z'),
    ] {
        for (row, prov) in matrix.rows().iter().zip(provs.iter()) {
            let weight = row.weight();
            if weight > 6 {
                return Err(BuildError::Overweight {
                    pauli,
                    site: prov.site,
                    weight,
                });
            }
        }
    }
    let bound = 2 * c as i64 + 1;
    for (matrix, provs, pauli) in [
        (&out.hx, &out.x_provenance, 'X'),
        (&out.hz, &out.z_provenance, 'Z'),
    ] {
        for (row, prov) in matrix.rows().iter().zip(provs.iter()) {
            let mut min = [i64::MAX; 3];
            let mut max = [i64::MIN; 3];
            for q in row.support() {
                let p = out.qubits[q].pos;
                for a in 0..3 {
                    min[a] = min[a].min(p[a]);
                    max[a] = max[a].max(p[a]);
                }
            }
            let side = (0..3).map(|a| max[a] - min[a]).max().unwrap_or(0);
            if side > bound {
                return Err(BuildError::NonLocal {
                    pauli,
                    site: prov.site,
                    side,
                    bound,
                });
            }
        }
    }
    let expected = code
        .logical_qubit_count()
        .expect("validated input counts logicals");
    let got = out.logical_qubit_count();
    if got != expected {
        return Err(BuildError::LogicalCountChanged { expected, got });
    }
    Ok(out)
}
