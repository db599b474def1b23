//! Command-line front end.
//!
//! Exit codes: `0` success or verification pass, `1` verification failure,
//! `2` usage, parse, or model error.

pub mod circuit_file;
pub mod json;
pub mod render;

use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::ctqw::{gadget_cx, gadget_h, gadget_t, run_walk, DynamicGraph};
use crate::linalg::Statevector;
use crate::maqaoa::{run_schedule, schedule_unitary, Schedule};
use crate::transpiler::{
    dynamic_graph_to_schedule, layer_count, merge_phase_layers, schedule_to_dynamic_graph, transpile_with, CxOrder,
    GateCircuit, Packing, TranspileOptions,
};
use crate::verify::{check_equivalence, reference_gate_unitary};

pub use circuit_file::parse_circuit;
pub use json::{dynamic_graph_to_json, parse_document, schedule_to_json, Document};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{message}, line {line} (token `{token}`)")]
    Parse { line: usize, token: String, message: String },
    #[error("invalid JSON document: {0}")]
    Json(String),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error(transparent)]
    Core(#[from] crate::Error),
}

#[derive(Debug, Parser)]
#[command(
    name = "maqaoa",
    version,
    about = "Compile {H, T, CX} circuits into ma-QAOA schedules and dynamic quantum walks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PackingArg {
    Balanced,
    PadOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CxOrderArg {
    SwapThenPhase,
    PhaseThenSwap,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GadgetKind {
    H,
    T,
    Cx,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compile a circuit file into an ma-QAOA schedule.
    Transpile {
        circuit: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "balanced")]
        packing: PackingArg,
        #[arg(long, value_enum, default_value = "swap-then-phase")]
        cx_order: CxOrderArg,
        /// Merge γ half-layers separated only by a zero β half-layer.
        #[arg(long)]
        merge_phases: bool,
    },
    /// Simulate a circuit (via its schedule) or a schedule file.
    Simulate {
        #[arg(long, conflicts_with = "schedule", required_unless_present = "schedule")]
        circuit: Option<PathBuf>,
        #[arg(long)]
        schedule: Option<PathBuf>,
        /// `plus` or `basis:<index>`.
        #[arg(long, default_value = "plus")]
        init: String,
        /// Print the state after every half-layer.
        #[arg(long)]
        trace: bool,
    },
    /// Run a dynamic-graph quantum walk.
    Walk {
        dynamic_graph: PathBuf,
        #[arg(long, default_value = "plus")]
        init: String,
        #[arg(long)]
        trace: bool,
    },
    /// Check a transpiled circuit against its reference unitary.
    Verify {
        circuit: PathBuf,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long)]
        json: bool,
    },
    /// Convert a schedule to a dynamic graph or a dynamic graph to a schedule.
    Convert {
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the dynamic graph of a single-gate gadget.
    Gadget {
        #[arg(value_enum)]
        kind: GadgetKind,
        /// Target qubit, or control then target for CX.
        qubits: Vec<usize>,
        #[arg(long)]
        n: usize,
    },
}

/// Text for the output stream plus the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub stdout: String,
    pub exit_code: u8,
}

impl CommandOutput {
    fn ok(stdout: String) -> Self {
        Self { stdout, exit_code: EXIT_OK }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn emit(text: String, out: Option<&Path>) -> Result<CommandOutput, CliError> {
    match out {
        Some(path) => {
            std::fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
            Ok(CommandOutput::ok(String::new()))
        }
        None => Ok(CommandOutput::ok(text)),
    }
}

/// Parses `plus` or `basis:<z>` into an initial state.
pub fn parse_init(spec: &str, n: usize) -> Result<Statevector, CliError> {
    if spec == "plus" {
        return Ok(Statevector::plus(n)?);
    }
    if let Some(z) = spec.strip_prefix("basis:") {
        let z = z.parse::<usize>().map_err(|_| CliError::Usage(format!("bad basis index in init spec {spec:?}")))?;
        return Ok(Statevector::basis(n, z)?);
    }
    Err(CliError::Usage(format!("unknown init spec {spec:?}; use 'plus' or 'basis:<index>'")))
}

pub fn cmd_transpile(
    circuit_path: &Path,
    format: OutputFormat,
    out: Option<&Path>,
    options: &TranspileOptions,
    merge_phases: bool,
) -> Result<CommandOutput, CliError> {
    let circuit = parse_circuit(&read(circuit_path)?)?;
    let mut schedule = transpile_with(&circuit, options)?;
    if merge_phases {
        schedule = merge_phase_layers(&schedule)?;
    }
    let text = match format {
        OutputFormat::Json => schedule_to_json(&schedule),
        OutputFormat::Csv => render::schedule_csv(&schedule),
        OutputFormat::Table => render::schedule_table(&schedule),
    };
    emit(text, out)
}

fn load_schedule_input(circuit: Option<&Path>, schedule: Option<&Path>) -> Result<Schedule, CliError> {
    match (circuit, schedule) {
        (Some(c), None) => Ok(transpile_with(&parse_circuit(&read(c)?)?, &TranspileOptions::default())?),
        (None, Some(s)) => json::parse_schedule(&read(s)?),
        _ => Err(CliError::Usage("give exactly one of --circuit or --schedule".into())),
    }
}

pub fn cmd_simulate(
    circuit: Option<&Path>,
    schedule: Option<&Path>,
    init: &str,
    trace: bool,
) -> Result<CommandOutput, CliError> {
    let schedule = load_schedule_input(circuit, schedule)?;
    let psi0 = parse_init(init, schedule.num_qubits())?;
    let run = run_schedule(&schedule, &psi0)?;
    let mut out = String::new();
    if trace {
        let _ = writeln!(out, "initial:");
        out.push_str(&render::state_lines(&psi0));
        for entry in &run.trace {
            let _ = writeln!(out, "after {}:", entry.label);
            out.push_str(&render::state_lines(&entry.state));
        }
        let _ = writeln!(out, "final:");
    }
    out.push_str(&render::state_lines(&run.final_state));
    Ok(CommandOutput::ok(out))
}

pub fn cmd_walk(path: &Path, init: &str, trace: bool) -> Result<CommandOutput, CliError> {
    let dg = json::parse_dynamic_graph(&read(path)?)?;
    let psi0 = parse_init(init, dg.num_qubits())?;
    let run = run_walk(&dg, &psi0)?;
    let mut out = String::new();
    if trace {
        let _ = writeln!(out, "initial:");
        out.push_str(&render::state_lines(&psi0));
        for (i, state) in run.trace.iter().enumerate() {
            let _ = writeln!(out, "after G{} (t = {}):", i + 1, render::format_angle(dg.steps()[i].time));
            out.push_str(&render::state_lines(state));
        }
        let _ = writeln!(out, "final:");
    }
    out.push_str(&render::state_lines(&run.final_state));
    Ok(CommandOutput::ok(out))
}

pub fn cmd_verify(path: &Path, tol: f64, as_json: bool) -> Result<CommandOutput, CliError> {
    let circuit = parse_circuit(&read(path)?)?;
    let report = verify_circuit(&circuit, tol)?;
    let mut text = if as_json { report.render_json() + "\n" } else { report.render_text() };
    if !as_json {
        let count = layer_count(&circuit);
        match count {
            Ok(c) => {
                let _ = writeln!(text, "layers: {} (bound {} for {} gates)", c.pairs, c.bound, c.gates);
            }
            Err(e) => {
                let _ = writeln!(text, "layers: {e}");
            }
        }
    }
    let exit_code = if report.pass { EXIT_OK } else { EXIT_VERIFY_FAILED };
    Ok(CommandOutput { stdout: text, exit_code })
}

/// Transpiles and compares against the reference circuit unitary up to global phase.
pub fn verify_circuit(circuit: &GateCircuit, tol: f64) -> Result<crate::verify::EquivalenceReport, CliError> {
    let schedule = transpile_with(circuit, &TranspileOptions::default())?;
    let reference = reference_gate_unitary(circuit);
    Ok(check_equivalence(schedule_unitary(&schedule).matrix(), reference.matrix(), tol, true)?)
}

pub fn cmd_convert(input: &Path, out: Option<&Path>) -> Result<CommandOutput, CliError> {
    let text = match parse_document(&read(input)?)? {
        Document::Schedule(s) => dynamic_graph_to_json(&schedule_to_dynamic_graph(&s)?),
        Document::DynamicGraph(dg) => schedule_to_json(&dynamic_graph_to_schedule(&dg)?),
    };
    emit(text, out)
}

pub fn cmd_gadget(kind: GadgetKind, qubits: &[usize], n: usize) -> Result<CommandOutput, CliError> {
    let dg: DynamicGraph = match (kind, qubits) {
        (GadgetKind::H, [q]) => gadget_h(*q, n)?,
        (GadgetKind::T, [q]) => gadget_t(*q, n)?,
        (GadgetKind::Cx, [c, t]) => gadget_cx(*c, *t, n)?,
        _ => return Err(CliError::Usage("H and T take one qubit, CX takes control and target".into())),
    };
    Ok(CommandOutput::ok(dynamic_graph_to_json(&dg)))
}

pub fn execute(command: &Command) -> Result<CommandOutput, CliError> {
    match command {
        Command::Transpile { circuit, format, out, packing, cx_order, merge_phases } => {
            let options = TranspileOptions {
                packing: match packing {
                    PackingArg::Balanced => Packing::Balanced,
                    PackingArg::PadOnly => Packing::PadOnly,
                },
                cx_order: match cx_order {
                    CxOrderArg::SwapThenPhase => CxOrder::SwapThenPhase,
                    CxOrderArg::PhaseThenSwap => CxOrder::PhaseThenSwap,
                },
            };
            cmd_transpile(circuit, *format, out.as_deref(), &options, *merge_phases)
        }
        Command::Simulate { circuit, schedule, init, trace } => {
            cmd_simulate(circuit.as_deref(), schedule.as_deref(), init, *trace)
        }
        Command::Walk { dynamic_graph, init, trace } => cmd_walk(dynamic_graph, init, *trace),
        Command::Verify { circuit, tol, json } => cmd_verify(circuit, *tol, *json),
        Command::Convert { input, out } => cmd_convert(input, out.as_deref()),
        Command::Gadget { kind, qubits, n } => cmd_gadget(*kind, qubits, *n),
    }
}

/// Parses `args`, runs the command, writes its output, and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(stderr, "{e}") } else { write!(stdout, "{e}") };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(out) => {
            let _ = stdout.write_all(out.stdout.as_bytes());
            out.exit_code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}
