//! Command implementations shared by the binary and the integration tests.

use crate::output::{csv_cell, distance_record, sig9};
use crate::schema::{
    resolve_element, resolve_state, resolve_triple, ElementSpec, StateSpec, StatesFile, TripleSpec,
};
use serde_json::{json, Value};
use specdist::solver::{connes_distance, SolverOptions};
use specdist::verify::{run_suite, suite_names, SuiteReport};
use specdist::Error as CoreError;
use std::path::Path;

/// Exit code 2: input files failed to parse or violate the schema.
pub const EXIT_PARSE: i32 = 2;
/// Exit code 3: the solver could not certify a result.
pub const EXIT_SOLVER: i32 = 3;

/// Error carrying the process exit code.
#[derive(Debug)]
pub struct CmdError {
    pub code: i32,
    pub message: String,
}

impl CmdError {
    fn parse(message: impl Into<String>) -> Self {
        CmdError {
            code: EXIT_PARSE,
            message: message.into(),
        }
    }
}

impl std::fmt::Display for CmdError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.message)
    }
}

fn core_error(e: CoreError) -> CmdError {
    let code = match e {
        CoreError::SolverDiagnostic { .. } | CoreError::NonConvergence { .. } => EXIT_SOLVER,
        _ => EXIT_PARSE,
    };
    CmdError {
        code,
        message: e.to_string(),
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path, what: &str) -> Result<T, CmdError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CmdError::parse(format!("cannot read {what} file {path:?}: {e}")))?;
    serde_json::from_str(&text)
        .map_err(|e| CmdError::parse(format!("cannot parse {what} file {path:?}: {e}")))
}

/// Solver flags shared by `distance` and `table`.
#[derive(Clone, Copy, Debug, Default)]
pub struct SolverFlags {
    pub tol: Option<f64>,
    pub seed: Option<u64>,
    pub restarts: Option<usize>,
    pub force_bisection: bool,
}

impl SolverFlags {
    fn to_options(self) -> SolverOptions<f64> {
        let mut opts = SolverOptions::default();
        if let Some(t) = self.tol {
            opts.tol = t;
        }
        if let Some(s) = self.seed {
            opts.seed = s;
        }
        if let Some(r) = self.restarts {
            opts.restarts = r;
        }
        opts.force_bisection = self.force_bisection;
        opts
    }
}

/// `distance TRIPLE STATE1 STATE2`: JSON record on stdout.
pub fn cmd_distance(
    triple_file: &Path,
    state1_file: &Path,
    state2_file: &Path,
    flags: SolverFlags,
) -> Result<Value, CmdError> {
    let spec: TripleSpec = read_json(triple_file, "triple")?;
    let triple = resolve_triple(&spec).map_err(CmdError::parse)?;
    let s1: StateSpec = read_json(state1_file, "state")?;
    let s2: StateSpec = read_json(state2_file, "state")?;
    let rho1 = resolve_state(&s1, triple.algebra_dim()).map_err(CmdError::parse)?;
    let rho2 = resolve_state(&s2, triple.algebra_dim()).map_err(CmdError::parse)?;
    let res = connes_distance(&triple, &rho1, &rho2, &flags.to_options()).map_err(core_error)?;
    Ok(distance_record(&res))
}

/// `seminorm TRIPLE ELEMENT`: JSON record on stdout.
pub fn cmd_seminorm(triple_file: &Path, element_file: &Path) -> Result<Value, CmdError> {
    let spec: TripleSpec = read_json(triple_file, "triple")?;
    let triple = resolve_triple(&spec).map_err(CmdError::parse)?;
    let espec: ElementSpec = read_json(element_file, "element")?;
    let element = resolve_element(&espec, triple.algebra_dim()).map_err(CmdError::parse)?;
    let seminorm = sig9(triple.lipschitz_seminorm(&element).map_err(core_error)?);
    Ok(json!({
        "seminorm": seminorm,
        "in_ball": seminorm <= 1.0,
        "kernel_dim": triple.seminorm_kernel().len(),
    }))
}

/// `verify [--suites a,b|all] [--trials N] [--seed S] [--out PATH]`:
/// runs the suites, returns the reports and whether all passed.
pub fn cmd_verify(
    suites: &str,
    trials: usize,
    seed: u64,
    out: Option<&Path>,
) -> Result<(Vec<SuiteReport>, bool), CmdError> {
    let names: Vec<String> = if suites == "all" {
        suite_names().iter().map(|s| s.to_string()).collect()
    } else {
        suites.split(',').map(|s| s.trim().to_string()).collect()
    };
    let mut reports = Vec::with_capacity(names.len());
    for name in &names {
        reports.push(run_suite(name, trials, seed).map_err(core_error)?);
    }
    let all_pass = reports.iter().all(|r| r.pass);
    if let Some(path) = out {
        let text = serde_json::to_string_pretty(&reports)
            .map_err(|e| CmdError::parse(format!("cannot serialize reports: {e}")))?;
        std::fs::write(path, text)
            .map_err(|e| CmdError::parse(format!("cannot write report file {path:?}: {e}")))?;
    }
    Ok((reports, all_pass))
}

/// Output format of the `table` command.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
}

/// `table TRIPLE STATES`: pairwise distance matrix.
pub fn cmd_table(
    triple_file: &Path,
    states_file: &Path,
    flags: SolverFlags,
    format: TableFormat,
) -> Result<String, CmdError> {
    let spec: TripleSpec = read_json(triple_file, "triple")?;
    let triple = resolve_triple(&spec).map_err(CmdError::parse)?;
    let file: StatesFile = read_json(states_file, "states")?;
    if file.states.is_empty() {
        return Err(CmdError::parse("states file lists no states"));
    }
    let labels: Vec<String> = file
        .states
        .iter()
        .enumerate()
        .map(|(i, s)| s.label.clone().unwrap_or_else(|| format!("s{i}")))
        .collect();
    let states = file
        .states
        .iter()
        .map(|s| resolve_state(s, triple.algebra_dim()))
        .collect::<Result<Vec<_>, String>>()
        .map_err(CmdError::parse)?;

    let n = states.len();
    let opts = flags.to_options();
    // Upper triangle only; the mirrored matrix is symmetric by construction.
    let mut matrix = vec![vec![0.0f64; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let res = connes_distance(&triple, &states[i], &states[j], &opts).map_err(core_error)?;
            let d = res.distance.value();
            matrix[i][j] = d;
            matrix[j][i] = d;
        }
    }

    match format {
        TableFormat::Csv => {
            let mut out = String::new();
            out.push_str(&labels.join(","));
            out.push('\n');
            for row in &matrix {
                let cells: Vec<String> = row.iter().map(|&d| csv_cell(d)).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
            Ok(out)
        }
        TableFormat::Json => {
            let rows: Vec<Vec<Value>> = matrix
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|&d| {
                            if d.is_infinite() {
                                json!("inf")
                            } else {
                                json!(sig9(d))
                            }
                        })
                        .collect()
                })
                .collect();
            let v = json!({ "labels": labels, "matrix": rows });
            serde_json::to_string_pretty(&v)
                .map_err(|e| CmdError::parse(format!("cannot serialize table: {e}")))
        }
    }
}
