//! Command-line driver and file emission.
//!
//! Subcommands: `solve` (one optimization run), `sweep` (a parameter sweep
//! over one axis with selectable benchmark schemes), `verify` (the detection
//! verification battery) and `defaults` (prints the built-in scenarios).
//!
//! Exit codes: 0 success, 2 validation/configuration, 3 solver failure,
//! 4 verification failure. Failures also emit one machine-readable JSON line
//! on stderr.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;
use sha2::{Digest, Sha256};

use crate::conic::SolveOpts;
use crate::mc::run_battery;
use crate::optimizer::{sca_solve, RunStatus, ScaOptions, SolveResult};
use crate::sca::{Bench, Mode};
use crate::scenario::{default_scenario, load_scenario, Scenario, Variant};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_SOLVER: i32 = 3;
pub const EXIT_VERIFICATION: i32 = 4;

#[derive(Parser)]
#[command(name = "covert-uav", version, about = "Joint trajectory/power design for dual-UAV covert communication")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Single,
    Multi,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Single => Mode::SingleAntenna,
            ModeArg::Multi => Mode::MultiAntenna,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchArg {
    Proposed,
    B1,
    B2,
    B3,
}

impl From<BenchArg> for Bench {
    fn from(b: BenchArg) -> Self {
        match b {
            BenchArg::Proposed => Bench::Proposed,
            BenchArg::B1 => Bench::FixedS,
            BenchArg::B2 => Bench::FixedJ,
            BenchArg::B3 => Bench::HoverJ,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Optimize one scenario; writes trajectory.csv, trace.json,
    /// covert_report.csv and manifest.json into --out.
    Solve {
        /// Scenario document (TOML).
        config: PathBuf,
        #[arg(long, value_enum, default_value = "single")]
        mode: ModeArg,
        #[arg(long, value_enum, default_value = "proposed")]
        bench: BenchArg,
        #[arg(long)]
        out: PathBuf,
        /// Recorded in the manifest; the optimizer itself is deterministic.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run one sweep specification; writes sweep.csv into --out.
    Sweep {
        /// Sweep specification (TOML): axis, values, benches, mode, [base].
        spec: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Worker threads; defaults to one per sweep cell, capped at the
        /// hardware thread count.
        #[arg(long)]
        parallelism: Option<usize>,
    },
    /// Run the detection verification battery (closed forms vs oracles).
    Verify {
        /// Report file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1_000_000)]
        trials: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Print a built-in scenario document.
    Defaults {
        #[arg(long, default_value = "scenario1")]
        variant: String,
    },
}

fn fail(code: i32, kind: &str, message: impl std::fmt::Display) -> i32 {
    eprintln!("{}", json!({ "error": kind, "message": message.to_string() }));
    code
}

fn env_f64(name: &str) -> Option<f64> {
    std::env::var(name).ok().and_then(|v| v.parse().ok())
}

/// Outer-loop options with environment overrides applied
/// (COVERT_UAV_FEAS_TOL, COVERT_UAV_GAP_TOL, COVERT_UAV_SCA_TOL,
/// COVERT_UAV_MAX_ITER).
pub fn options_from_env() -> ScaOptions {
    let mut conic = SolveOpts::default();
    if let Some(v) = env_f64("COVERT_UAV_FEAS_TOL") {
        conic.feas_tol = v;
    }
    if let Some(v) = env_f64("COVERT_UAV_GAP_TOL") {
        conic.gap_tol = v;
    }
    let mut opts = ScaOptions { conic, ..Default::default() };
    if let Some(v) = env_f64("COVERT_UAV_SCA_TOL") {
        opts.tol = Some(v);
    }
    if let Some(v) = std::env::var("COVERT_UAV_MAX_ITER").ok().and_then(|v| v.parse().ok()) {
        opts.max_iter = v;
    }
    opts
}

/// Entry point used by the binary.
pub fn run() -> i32 {
    execute(std::env::args())
}

/// Testable entry point.
pub fn execute<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version with its own formatting
            let _ = e.print();
            return if e.use_stderr() { EXIT_VALIDATION } else { EXIT_OK };
        }
    };
    match cli.cmd {
        Cmd::Solve { config, mode, bench, out, seed } => {
            cmd_solve(&config, mode.into(), bench.into(), &out, seed)
        }
        Cmd::Sweep { spec, out, parallelism } => cmd_sweep(&spec, &out, parallelism),
        Cmd::Verify { out, trials, seed } => cmd_verify(out.as_deref(), trials, seed),
        Cmd::Defaults { variant } => cmd_defaults(&variant),
    }
}

fn scenario_hash(scn: &Scenario) -> String {
    let mut hasher = Sha256::new();
    hasher.update(scn.to_document().as_bytes());
    format!("{:x}", hasher.finalize())
}

#[derive(Serialize)]
struct TraceFile<'a> {
    mode: &'a str,
    bench: &'a str,
    status: String,
    sca_tol: f64,
    max_iter: usize,
    final_objective: f64,
    iterations: &'a [crate::optimizer::IterationRecord],
}

fn write_solve_outputs(
    out_dir: &Path,
    scn: &Scenario,
    mode: Mode,
    bench: Bench,
    seed: u64,
    opts: &ScaOptions,
    res: &SolveResult,
) -> Result<(), String> {
    fs::create_dir_all(out_dir).map_err(|e| format!("create {}: {e}", out_dir.display()))?;
    let write = |name: &str, bytes: &[u8]| -> Result<(), String> {
        fs::write(out_dir.join(name), bytes).map_err(|e| format!("write {name}: {e}"))
    };

    let mut traj_csv = Vec::new();
    res.final_iterate
        .traj
        .write_csv(&mut traj_csv)
        .map_err(|e| e.to_string())?;
    write("trajectory.csv", &traj_csv)?;

    let trace = TraceFile {
        mode: mode.as_str(),
        bench: bench.as_str(),
        status: res.status.as_str(),
        sca_tol: opts.tol.unwrap_or(scn.sca_tol),
        max_iter: opts.max_iter,
        final_objective: res.objective(),
        iterations: &res.trace,
    };
    let trace_json =
        serde_json::to_string_pretty(&trace).map_err(|e| e.to_string())?;
    write("trace.json", trace_json.as_bytes())?;

    let mut report_csv = String::from("slot,warden,worst_gamma,gamma_cap,ratio,min_dep\n");
    if let Some(rep) = &res.covert_report {
        for r in &rep.rows {
            report_csv.push_str(&format!(
                "{},{},{},{},{},{}\n",
                r.slot, r.warden, r.worst_gamma, r.gamma_cap, r.ratio, r.min_dep
            ));
        }
    }
    write("covert_report.csv", report_csv.as_bytes())?;

    let manifest = json!({
        "created_unix_ms": std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_millis() as u64)
            .unwrap_or(0),
        "scenario_hash": scenario_hash(scn),
        "mode": mode.as_str(),
        "bench": bench.as_str(),
        "seed": seed,
        "tolerances": {
            "sca_tol": opts.tol.unwrap_or(scn.sca_tol),
            "feas_tol": opts.conic.feas_tol,
            "gap_tol": opts.conic.gap_tol,
            "max_iter": opts.max_iter,
        },
        "outputs": ["trajectory.csv", "trace.json", "covert_report.csv"],
    });
    write("manifest.json", serde_json::to_string_pretty(&manifest).unwrap().as_bytes())
}

fn cmd_solve(config: &Path, mode: Mode, bench: Bench, out_dir: &Path, seed: u64) -> i32 {
    let doc = match fs::read_to_string(config) {
        Ok(doc) => doc,
        Err(e) => return fail(EXIT_VALIDATION, "io", format!("{}: {e}", config.display())),
    };
    let scn = match load_scenario(&doc) {
        Ok(scn) => scn,
        Err(e) => return fail(EXIT_VALIDATION, "validation", e),
    };
    let opts = options_from_env();
    let res = match sca_solve(&scn, mode, bench, &opts) {
        Ok(res) => res,
        Err(e) => return fail(EXIT_SOLVER, "solver", e),
    };
    if let RunStatus::SubproblemFailure { .. } = res.status {
        return fail(EXIT_SOLVER, "solver", res.status.as_str());
    }
    match write_solve_outputs(out_dir, &scn, mode, bench, seed, &opts, &res) {
        Ok(()) => EXIT_OK,
        Err(e) => fail(EXIT_VALIDATION, "io", e),
    }
}

/// Sweep axes: each maps one scalar onto the scenario.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepAxis {
    NObs,
    Epsilon,
    PJam,
    RadiusScale,
    NAntennas,
}

impl SweepAxis {
    fn parse(s: &str) -> Option<Self> {
        match s {
            "n_obs" => Some(SweepAxis::NObs),
            "epsilon" => Some(SweepAxis::Epsilon),
            "p_jam" => Some(SweepAxis::PJam),
            "radius_scale" => Some(SweepAxis::RadiusScale),
            "n_antennas" => Some(SweepAxis::NAntennas),
            _ => None,
        }
    }

    fn apply(&self, scn: &mut Scenario, value: f64) -> Result<(), String> {
        let as_int = |v: f64| -> Result<u32, String> {
            if v.fract() == 0.0 && v >= 1.0 && v <= u32::MAX as f64 {
                Ok(v as u32)
            } else {
                Err(format!("value {v} must be a positive integer"))
            }
        };
        match self {
            SweepAxis::NObs => scn.n_obs = as_int(value)?,
            SweepAxis::Epsilon => scn.epsilon = value,
            SweepAxis::PJam => scn.p_jam = value,
            SweepAxis::RadiusScale => {
                for w in &mut scn.wardens {
                    w.radius *= value;
                }
            }
            SweepAxis::NAntennas => scn.n_antennas = as_int(value)?,
        }
        scn.validate().map_err(|e| e.to_string())
    }
}

/// A parsed sweep specification.
pub struct SweepSpec {
    pub axis: SweepAxis,
    pub values: Vec<f64>,
    pub benches: Vec<Bench>,
    pub mode: Mode,
    pub base: Scenario,
}

pub fn parse_sweep_spec(text: &str) -> Result<SweepSpec, String> {
    let table: toml::Table = text.parse().map_err(|e| format!("parse: {e}"))?;
    let axis_name = table
        .get("axis")
        .and_then(|v| v.as_str())
        .ok_or("missing `axis`")?;
    let axis = SweepAxis::parse(axis_name).ok_or_else(|| format!("unknown axis `{axis_name}`"))?;
    let values: Vec<f64> = table
        .get("values")
        .and_then(|v| v.as_array())
        .ok_or("missing `values`")?
        .iter()
        .map(|v| {
            v.as_float()
                .or_else(|| v.as_integer().map(|i| i as f64))
                .ok_or("values must be numbers".to_string())
        })
        .collect::<Result<_, _>>()?;
    if values.is_empty() {
        return Err("values must be nonempty".into());
    }
    if !values.windows(2).all(|w| w[0] < w[1]) {
        return Err("values must be strictly increasing".into());
    }
    let benches: Vec<Bench> = table
        .get("benches")
        .and_then(|v| v.as_array())
        .ok_or("missing `benches`")?
        .iter()
        .map(|v| match v.as_str() {
            Some("proposed") => Ok(Bench::Proposed),
            Some("b1") => Ok(Bench::FixedS),
            Some("b2") => Ok(Bench::FixedJ),
            Some("b3") => Ok(Bench::HoverJ),
            other => Err(format!("unknown bench {other:?}")),
        })
        .collect::<Result<_, _>>()?;
    if benches.is_empty() {
        return Err("benches must be nonempty".into());
    }
    let mode = match table.get("mode").and_then(|v| v.as_str()).unwrap_or("single") {
        "single" => Mode::SingleAntenna,
        "multi" => Mode::MultiAntenna,
        other => return Err(format!("unknown mode `{other}`")),
    };
    let base = match table.get("base") {
        Some(v) => {
            let doc = toml::to_string(v).map_err(|e| e.to_string())?;
            load_scenario(&doc).map_err(|e| e.to_string())?
        }
        None => default_scenario(Variant::Scenario1),
    };
    Ok(SweepSpec { axis, values, benches, mode, base })
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub axis_value: f64,
    pub bench: String,
    pub min_avg_rate: Option<f64>,
    pub avg_power: Option<f64>,
    pub iterations: Option<usize>,
    pub wall_seconds: f64,
    pub status: String,
}

/// Runs every (value x bench) cell, in parallel, and returns rows in a fixed
/// deterministic order. Failed cells carry their status; the sweep continues.
pub fn run_sweep(spec: &SweepSpec, parallelism: Option<usize>) -> Vec<SweepRow> {
    let cells: Vec<(usize, usize)> = (0..spec.values.len())
        .flat_map(|vi| (0..spec.benches.len()).map(move |bi| (vi, bi)))
        .collect();
    let threads = parallelism
        .unwrap_or(cells.len())
        .clamp(1, std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1));
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool");
    let opts = options_from_env();
    let mut rows: Vec<((usize, usize), SweepRow)> = pool.install(|| {
        cells
            .par_iter()
            .map(|&(vi, bi)| {
                let value = spec.values[vi];
                let bench = spec.benches[bi];
                let started = Instant::now();
                let mut scn = spec.base.clone();
                let row = match spec.axis.apply(&mut scn, value) {
                    Err(e) => SweepRow {
                        axis_value: value,
                        bench: bench.as_str().into(),
                        min_avg_rate: None,
                        avg_power: None,
                        iterations: None,
                        wall_seconds: started.elapsed().as_secs_f64(),
                        status: format!("error: {e}"),
                    },
                    Ok(()) => match sca_solve(&scn, spec.mode, bench, &opts) {
                        Ok(res) => {
                            let n = res.final_iterate.traj.slots.len() as f64;
                            let avg_power =
                                res.final_iterate.traj.slots.iter().map(|s| s.p_s).sum::<f64>()
                                    / n;
                            SweepRow {
                                axis_value: value,
                                bench: bench.as_str().into(),
                                min_avg_rate: Some(res.objective()),
                                avg_power: Some(avg_power),
                                iterations: Some(res.iterations()),
                                wall_seconds: started.elapsed().as_secs_f64(),
                                status: res.status.as_str(),
                            }
                        }
                        Err(e) => SweepRow {
                            axis_value: value,
                            bench: bench.as_str().into(),
                            min_avg_rate: None,
                            avg_power: None,
                            iterations: None,
                            wall_seconds: started.elapsed().as_secs_f64(),
                            status: format!("error: {e}"),
                        },
                    },
                };
                ((vi, bi), row)
            })
            .collect()
    });
    rows.sort_by_key(|&(key, _)| key);
    rows.into_iter().map(|(_, row)| row).collect()
}

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("axis_value,bench,min_avg_rate,avg_power,iterations,wall_seconds,status\n");
    let opt = |v: &Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.axis_value,
            r.bench,
            opt(&r.min_avg_rate),
            opt(&r.avg_power),
            r.iterations.map(|i| i.to_string()).unwrap_or_default(),
            r.wall_seconds,
            r.status
        ));
    }
    out
}

fn cmd_sweep(spec_path: &Path, out_dir: &Path, parallelism: Option<usize>) -> i32 {
    let text = match fs::read_to_string(spec_path) {
        Ok(t) => t,
        Err(e) => return fail(EXIT_VALIDATION, "io", format!("{}: {e}", spec_path.display())),
    };
    let spec = match parse_sweep_spec(&text) {
        Ok(s) => s,
        Err(e) => return fail(EXIT_VALIDATION, "validation", e),
    };
    let rows = run_sweep(&spec, parallelism);
    if let Err(e) = fs::create_dir_all(out_dir) {
        return fail(EXIT_VALIDATION, "io", format!("create {}: {e}", out_dir.display()));
    }
    if let Err(e) = fs::write(out_dir.join("sweep.csv"), sweep_csv(&rows)) {
        return fail(EXIT_VALIDATION, "io", e);
    }
    if rows.iter().any(|r| r.min_avg_rate.is_some()) {
        EXIT_OK
    } else {
        fail(EXIT_SOLVER, "solver", "every sweep cell failed")
    }
}

fn cmd_verify(out: Option<&Path>, trials: u64, seed: u64) -> i32 {
    let report = match run_battery(trials, seed) {
        Ok(r) => r,
        Err(e) => return fail(EXIT_VALIDATION, "validation", e),
    };
    let body = serde_json::to_string_pretty(&report).expect("report serializes");
    match out {
        Some(path) => {
            if let Err(e) = fs::write(path, &body) {
                return fail(EXIT_VALIDATION, "io", e);
            }
        }
        None => println!("{body}"),
    }
    if report.all_pass() {
        EXIT_OK
    } else {
        fail(
            EXIT_VERIFICATION,
            "verification",
            format!("{} case(s) failed", report.n_fail),
        )
    }
}

fn cmd_defaults(variant: &str) -> i32 {
    let v = match variant {
        "scenario1" => Variant::Scenario1,
        "scenario2" => Variant::Scenario2,
        other => return fail(EXIT_VALIDATION, "validation", format!("unknown variant `{other}`")),
    };
    println!("{}", default_scenario(v).to_document());
    EXIT_OK
}
