//! Subcommand implementations.

use std::fmt;
use std::path::Path;

use serde_json::json;

use layercode_analysis::{
    energy_barrier_exact, energy_barrier_sweep, layer_distance_bounds, point_defect_correctability,
    relation_inheritance, BarrierMode,
};
use layercode_css::{builtin, logical_basis, read_code_files, CssCode};
use layercode_gf2::SearchBudget;
use layercode_layer::{
    build_layer_code, geometry_json, layer_code_from_json, layer_code_json, tile_blocks,
    write_check_matrices, LayerCode,
};
use layercode_logical::{map_layer_logical_to_input, quasiconcatenated_logical, PauliSide};

use crate::manifest::RunManifest;

/// Failure category carrying the CLI exit code.
pub struct CliError {
    message: String,
    code: u8,
}

impl CliError {
    pub fn input(msg: impl fmt::Display) -> Self {
        Self {
            message: msg.to_string(),
            code: 2,
        }
    }

    pub fn verification(msg: impl fmt::Display) -> Self {
        Self {
            message: msg.to_string(),
            code: 1,
        }
    }

    pub fn internal(msg: impl fmt::Display) -> Self {
        Self {
            message: msg.to_string(),
            code: 3,
        }
    }

    pub fn exit_code(&self) -> u8 {
        self.code
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

fn load_input(builtin_name: Option<&str>, input: Option<&Path>) -> Result<CssCode, CliError> {
    let code = match (builtin_name, input) {
        (Some(name), None) => builtin(name).map_err(CliError::input)?,
        (None, Some(path)) => read_code_files(path).map_err(CliError::input)?,
        _ => {
            return Err(CliError::input(
                "exactly one of --builtin or --input is required",
            ))
        }
    };
    let report = code.validate();
    if !report.passed() {
        return Err(CliError::input(format!(
            "input code does not commute: {} violating pairs, first {:?}",
            report.violations.len(),
            report.violations[0]
        )));
    }
    Ok(code)
}

pub fn build(
    builtin_name: Option<&str>,
    input: Option<&Path>,
    c: usize,
    output: &Path,
    blocks: usize,
) -> Result<(), CliError> {
    let code = load_input(builtin_name, input)?;
    let lc = if blocks == 1 {
        build_layer_code(&code, c)
    } else {
        tile_blocks(&code, c, blocks)
    }
    .map_err(CliError::internal)?;

    let stem = output.with_extension("");
    let main_path = stem.with_extension("json");
    let doc = layer_code_json(&lc);
    std::fs::write(&main_path, serde_json::to_string_pretty(&doc).unwrap())
        .map_err(CliError::input)?;
    write_check_matrices(&lc, &stem).map_err(CliError::input)?;
    let geo_path = stem.with_extension("geometry.json");
    std::fs::write(
        &geo_path,
        serde_json::to_string_pretty(&geometry_json(&lc)).unwrap(),
    )
    .map_err(CliError::input)?;

    let mut manifest = RunManifest::new(
        "build",
        &layercode_css::to_json(&code),
        json!({ "c": c, "blocks": blocks }),
    );
    for path in [
        &main_path,
        &stem.with_extension("x.mtx"),
        &stem.with_extension("z.mtx"),
        &geo_path,
    ] {
        manifest.record_output(path).map_err(CliError::input)?;
    }
    std::fs::write(
        stem.with_extension("manifest.json"),
        serde_json::to_string_pretty(&manifest.finish()).unwrap(),
    )
    .map_err(CliError::input)?;

    println!(
        "built {}: {} layers, {} qubits, {} X checks, {} Z checks",
        lc.input.name(),
        lc.layout.total_layers(),
        lc.num_qubits(),
        lc.hx.num_rows(),
        lc.hz.num_rows()
    );
    Ok(())
}

fn load_layer_code(file: &Path) -> Result<LayerCode, CliError> {
    let text = std::fs::read_to_string(file).map_err(CliError::input)?;
    let value: serde_json::Value = serde_json::from_str(&text).map_err(CliError::input)?;
    layer_code_from_json(&value).map_err(CliError::input)
}

pub fn verify(file: &Path, level: &str) -> Result<(), CliError> {
    if level != "fast" && level != "full" {
        return Err(CliError::input(format!(
            "unknown level `{level}`; use fast or full"
        )));
    }
    let lc = load_layer_code(file)?;
    let mut failures: Vec<serde_json::Value> = Vec::new();

    if let Some((a, b)) = lc.commutation_violation() {
        failures.push(json!({
            "check": "commutation",
            "x_row": a,
            "z_row": b,
            "x_site": lc.x_provenance[a].site,
            "z_site": lc.z_provenance[b].site,
        }));
    }
    let weight = lc.max_check_weight();
    if weight > 6 {
        failures.push(json!({ "check": "weight", "max": weight, "bound": 6 }));
    }
    let bound = 2 * lc.c as i64 + 1;
    let side = lc.max_check_box();
    if side > bound {
        failures.push(json!({ "check": "locality", "max_box": side, "bound": bound }));
    }
    let expected = lc.input.logical_qubit_count().map_err(CliError::input)?;
    let got = lc.logical_qubit_count();
    if got != expected {
        failures.push(json!({
            "check": "logical-count",
            "expected": expected,
            "got": got,
        }));
    }

    if level == "full" && failures.is_empty() {
        let radius = 2 * lc.c as i64;
        let report = point_defect_correctability(&lc, radius);
        for ball in report.balls.iter().filter(|b| !b.pass) {
            failures.push(json!({
                "check": "correctability",
                "site": ball.site,
                "kind": ball.kind,
                "x_logicals_inside": ball.x_logicals_inside,
                "z_logicals_inside": ball.z_logicals_inside,
            }));
        }
        let basis = logical_basis(&lc.input).map_err(CliError::internal)?;
        for (side_tag, logicals, stab) in [
            ("X", &basis.x_logicals, lc.input.hx()),
            ("Z", &basis.z_logicals, lc.input.hz()),
        ] {
            let side = if side_tag == "X" {
                PauliSide::X
            } else {
                PauliSide::Z
            };
            for v in logicals {
                let op = quasiconcatenated_logical(&lc, v, side).map_err(CliError::internal)?;
                let back = map_layer_logical_to_input(&lc, &op).map_err(CliError::internal)?;
                let diff = back.xor(v);
                if !stab.in_row_space(&diff).map_err(CliError::internal)? {
                    failures.push(json!({
                        "check": "logical-roundtrip",
                        "side": side_tag,
                        "logical": v.support(),
                        "mapped": back.support(),
                    }));
                }
            }
        }
        let budget = SearchBudget::default();
        let bounds = layer_distance_bounds(&lc, 4, &budget).map_err(CliError::internal)?;
        if bounds.lower() > bounds.upper() {
            failures.push(json!({
                "check": "distance-sandwich",
                "lower": bounds.lower(),
                "upper": bounds.upper(),
            }));
        }
    }

    let report = json!({
        "file": file.display().to_string(),
        "level": level,
        "passed": failures.is_empty(),
        "failures": failures,
    });
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    if report["passed"].as_bool() == Some(true) {
        Ok(())
    } else {
        Err(CliError::verification("verification failed"))
    }
}

pub struct AnalyzeTasks {
    pub distance: bool,
    pub barrier: bool,
    pub relations: bool,
}

pub fn analyze(
    file: &Path,
    tasks: AnalyzeTasks,
    seed: u64,
    budget: u64,
    cutoff: usize,
    output: Option<&Path>,
) -> Result<(), CliError> {
    if !(tasks.distance || tasks.barrier || tasks.relations) {
        return Err(CliError::input(
            "pick at least one task: --distance, --barrier, --relations",
        ));
    }
    let lc = load_layer_code(file)?;
    let search = SearchBudget {
        exhaustion_limit: budget,
        restarts: 200,
        seed,
    };
    let mut report = json!({
        "file": file.display().to_string(),
        "input": lc.input.name(),
        "seed": seed,
        "budget": budget,
    });

    if tasks.distance {
        match layer_distance_bounds(&lc, cutoff, &search) {
            Ok(bounds) => {
                report["distance"] = json!({
                    "lower_x": { "value": bounds.lower_x, "mode": if bounds.exact_x { "exact-floor" } else { "truncated-floor" } },
                    "upper_x": { "value": bounds.upper_x, "mode": "randomized-upper" },
                    "lower_z": { "value": bounds.lower_z, "mode": if bounds.exact_z { "exact-floor" } else { "truncated-floor" } },
                    "upper_z": { "value": bounds.upper_z, "mode": "randomized-upper" },
                });
            }
            Err(e) => {
                report["distance"] =
                    json!({ "value": "unknown", "mode": "refused", "reason": e.to_string() });
            }
        }
    }
    if tasks.barrier {
        let mut barriers = json!({});
        for (tag, side) in [("X", PauliSide::X), ("Z", PauliSide::Z)] {
            match energy_barrier_exact(&lc.input, side) {
                Ok(exact) => {
                    barriers[format!("input_{tag}")] = json!({
                        "value": exact.value, "mode": "exact",
                    });
                }
                Err(e) => {
                    barriers[format!("input_{tag}")] =
                        json!({ "value": "unknown", "mode": "refused", "reason": e.to_string() });
                }
            }
            let basis = logical_basis(&lc.input).map_err(CliError::internal)?;
            let logicals = match side {
                PauliSide::X => &basis.x_logicals,
                PauliSide::Z => &basis.z_logicals,
            };
            let mut best: Option<usize> = None;
            for v in logicals {
                let sweep = energy_barrier_sweep(&lc, v, side).map_err(CliError::internal)?;
                debug_assert_eq!(sweep.mode, BarrierMode::UpperBound);
                best = Some(best.map_or(sweep.value, |b: usize| b.min(sweep.value)));
            }
            if let Some(value) = best {
                barriers[format!("layer_sweep_{tag}")] =
                    json!({ "value": value, "mode": "upper-bound" });
            }
        }
        report["barrier"] = barriers;
    }
    if tasks.relations {
        // certify inheritance for a basis of input check relations
        let mut certified = Vec::new();
        for (tag, side, matrix) in [
            ("X", PauliSide::X, lc.input.hx()),
            ("Z", PauliSide::Z, lc.input.hz()),
        ] {
            let relations = matrix.transpose().nullspace_basis();
            for rel in relations.rows() {
                let indices = rel.support();
                let cert = relation_inheritance(&lc, &indices, side).map_err(CliError::internal)?;
                certified.push(json!({
                    "side": tag,
                    "relation": indices,
                    "combination_size": cert.combination.len(),
                    "mode": "exact",
                }));
            }
        }
        report["relations"] = json!({ "certified": certified });
    }

    let text = serde_json::to_string_pretty(&report).unwrap();
    match output {
        Some(path) => std::fs::write(path, text).map_err(CliError::input)?,
        None => println!("{text}"),
    }
    Ok(())
}

pub fn export_geometry(file: &Path, output: Option<&Path>) -> Result<(), CliError> {
    let lc = load_layer_code(file)?;
    let text = serde_json::to_string_pretty(&geometry_json(&lc)).unwrap();
    match output {
        Some(path) => std::fs::write(path, text).map_err(CliError::input)?,
        None => println!("{text}"),
    }
    Ok(())
}
