//! Serialized forms of a built layer code.

use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::json;

use layercode_css::CssCode;
use layercode_gf2::{write_matrix_market, BinaryMatrix, MatrixMarketError};

use crate::code::{CheckProvenance, LayerCode, QubitInfo};
use crate::geometry::Frame;
use crate::layout::LayerLayout;
use crate::registry::{DefectRegistry, PointKind};

#[derive(Debug, thiserror::Error)]
pub enum ExportError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    MatrixMarket(#[from] MatrixMarketError),
    #[error("layer code json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("layer code json: {0}")]
    Malformed(String),
}

#[derive(Serialize, Deserialize)]
struct CheckJson {
    support: Vec<usize>,
    origin: String,
    provenance: CheckProvenance,
}

/// Full layer-code JSON: qubit coordinates, checks with provenance, the
/// defect registry and the layout.
pub fn layer_code_json(code: &LayerCode) -> serde_json::Value {
    let qubits: Vec<_> = code
        .qubits
        .iter()
        .map(|q| {
            json!({
                "id": q.id,
                "x": q.pos[0],
                "y": q.pos[1],
                "z": q.pos[2],
                "owner": q.owner.label(),
                "role": format!("{:?}", q.role),
            })
        })
        .collect();
    let checks = |matrix: &layercode_gf2::BinaryMatrix, provs: &[crate::code::CheckProvenance]| {
        matrix
            .rows()
            .iter()
            .zip(provs)
            .map(|(row, p)| CheckJson {
                support: row.support(),
                origin: format!("{}:{:?}@{:?}", p.owner.label(), p.kind, p.site),
                provenance: p.clone(),
            })
            .collect::<Vec<_>>()
    };
    json!({
        "input": {
            "name": code.input.name(),
            "n": code.input.num_qubits(),
            "code": serde_json::from_str::<serde_json::Value>(
                &layercode_css::to_json(&code.input)).expect("valid json"),
        },
        "c": code.c,
        "qubits": qubits,
        "qubit_table": code.qubits,
        "x_checks": checks(&code.hx, &code.x_provenance),
        "z_checks": checks(&code.hz, &code.z_provenance),
        "defects": {
            "registry": code.registry,
            "points": code.registry.points.iter().map(|p| json!({
                "site": p.site,
                "kind": match &p.kind {
                    PointKind::Bulk(k) => format!("bulk:{k:?}"),
                    PointKind::Boundary(k) => format!("boundary:{k:?}"),
                },
                "qubit_layer": p.qubit_layer,
                "x_check": p.x_check,
                "z_check": p.z_check,
            })).collect::<Vec<_>>(),
        },
        "layout": code.layout,
    })
}

/// Parses a layer code back from [`layer_code_json`] output. The file is
/// taken at face value (mutations included); validation is the verifier's
/// job, not the parser's.
pub fn layer_code_from_json(value: &serde_json::Value) -> Result<LayerCode, ExportError> {
    let input_value = value
        .pointer("/input/code")
        .ok_or_else(|| ExportError::Malformed("missing /input/code".into()))?;
    let input: CssCode = layercode_css::from_json(&input_value.to_string())
        .map_err(|e| ExportError::Malformed(e.to_string()))?;
    let c = value
        .get("c")
        .and_then(|v| v.as_u64())
        .ok_or_else(|| ExportError::Malformed("missing c".into()))? as usize;
    let qubits: Vec<QubitInfo> = serde_json::from_value(
        value
            .get("qubit_table")
            .cloned()
            .ok_or_else(|| ExportError::Malformed("missing qubit_table".into()))?,
    )?;
    let n = qubits.len();
    let parse_checks = |key: &str| -> Result<(BinaryMatrix, Vec<CheckProvenance>), ExportError> {
        let checks: Vec<CheckJson> = serde_json::from_value(
            value
                .get(key)
                .cloned()
                .ok_or_else(|| ExportError::Malformed(format!("missing {key}")))?,
        )?;
        let mut rows = Vec::with_capacity(checks.len());
        let mut provs = Vec::with_capacity(checks.len());
        for c in checks {
            let row = layercode_gf2::BinaryVector::from_support(n, &c.support)
                .map_err(|e| ExportError::Malformed(e.to_string()))?;
            rows.push(row);
            provs.push(c.provenance);
        }
        Ok((
            BinaryMatrix::from_rows(n, rows).expect("uniform width"),
            provs,
        ))
    };
    let (hx, x_provenance) = parse_checks("x_checks")?;
    let (hz, z_provenance) = parse_checks("z_checks")?;
    let mut layout: LayerLayout = serde_json::from_value(
        value
            .get("layout")
            .cloned()
            .ok_or_else(|| ExportError::Malformed("missing layout".into()))?,
    )?;
    layout.frame = Frame::new(
        c,
        input.num_qubits(),
        input.num_x_checks(),
        input.num_z_checks(),
    );
    let registry: DefectRegistry = serde_json::from_value(
        value
            .pointer("/defects/registry")
            .cloned()
            .ok_or_else(|| ExportError::Malformed("missing defect registry".into()))?,
    )?;
    Ok(LayerCode {
        input,
        c,
        qubits,
        hx,
        hz,
        x_provenance,
        z_provenance,
        layout,
        registry,
    })
}

/// Geometry listing for plotting: planes and defect lines only.
pub fn geometry_json(code: &LayerCode) -> serde_json::Value {
    let mut layers = Vec::new();
    for ql in &code.layout.qubit_layers {
        layers.push(json!({
            "plane": "xz",
            "coord": ql.y,
            "span": [ql.x_extent.0, ql.x_extent.1, ql.z_extent.0, ql.z_extent.1],
        }));
    }
    for zl in &code.layout.zcheck_layers {
        layers.push(json!({
            "plane": "yz",
            "coord": zl.plane,
            "span": [zl.y_span.0, zl.y_span.1],
        }));
    }
    for xl in &code.layout.xcheck_layers {
        layers.push(json!({
            "plane": "xy",
            "coord": xl.plane,
            "span": [xl.y_span.0, xl.y_span.1],
        }));
    }
    let defect_lines: Vec<_> = code
        .registry
        .lines
        .iter()
        .map(|l| {
            json!({
                "kind": l.kind,
                "from": l.from,
                "to": l.to,
            })
        })
        .collect();
    json!({ "layers": layers, "defect_lines": defect_lines })
}

/// Writes `hx`/`hz` as Matrix Market pattern files next to `stem`.
pub fn write_check_matrices(code: &LayerCode, stem: &Path) -> Result<(), ExportError> {
    let mut xbuf = Vec::new();
    write_matrix_market(&code.hx, &mut xbuf)?;
    let mut xfile = std::fs::File::create(stem.with_extension("x.mtx"))?;
    xfile.write_all(&xbuf)?;
    let mut zbuf = Vec::new();
    write_matrix_market(&code.hz, &mut zbuf)?;
    let mut zfile = std::fs::File::create(stem.with_extension("z.mtx"))?;
    zfile.write_all(&zbuf)?;
    Ok(())
}
