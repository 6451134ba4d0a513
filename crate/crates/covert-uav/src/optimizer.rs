//! Outer optimization loop and robust covertness verification.
//!
//! The loop starts from a documented feasible point (straight constant-speed
//! lines, per-slot power backed off from the worst-case covertness cap),
//! then alternates subproblem assembly, a conic solve and an iterate update
//! until the true objective improves by less than the tolerance. Slack
//! warm-starts come from the solved subproblem, keeping every linearization
//! tangent at the incumbent.

use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::conic::{SolveOpts, SolveStatus};
use crate::detection::{dep_single, kl_divergence, pinsker_bound, DetectionError};
use crate::geometry::{dist, dist2, min_avg_rate, GeometryError, Trajectory};
use crate::geometry::{warden_sinr_multi, warden_sinr_single};
use crate::sca::{assemble_subproblem, Bench, Iterate, Mode, ScaError, POWER_FLOOR_FRAC};
use crate::scenario::Scenario;

#[derive(Debug, Error)]
pub enum OptimError {
    #[error("infeasible initialization: {0}")]
    InfeasibleInit(String),
    #[error("feasibility chain broken at iteration {iteration}: {reason}")]
    FeasibilityChain { iteration: usize, reason: String },
    #[error(transparent)]
    Sca(#[from] ScaError),
    #[error(transparent)]
    Detection(#[from] DetectionError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Conic(#[from] crate::conic::ConicError),
}

/// Outer-loop options.
#[derive(Debug, Clone)]
pub struct ScaOptions {
    /// Outer iteration cap.
    pub max_iter: usize,
    /// Convergence tolerance on the objective improvement; `None` takes the
    /// scenario's `sca_tol`.
    pub tol: Option<f64>,
    /// Conic backend tolerances.
    pub conic: SolveOpts,
    /// Uncertainty-disc samples per (slot, warden) in the post-check.
    pub covert_samples: usize,
}

impl Default for ScaOptions {
    fn default() -> Self {
        ScaOptions { max_iter: 50, tol: None, conic: SolveOpts::default(), covert_samples: 200 }
    }
}

/// One outer iteration record.
#[derive(Debug, Clone, Serialize)]
pub struct IterationRecord {
    pub iteration: usize,
    /// Surrogate optimum (the subproblem's epigraph value).
    pub eta: f64,
    /// True min-average rate at the updated iterate.
    pub objective: f64,
    pub solver_status: String,
    pub wall_ms: u64,
}

/// Terminal state of one run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RunStatus {
    Converged,
    MaxIter,
    SubproblemFailure { iteration: usize, backend: SolveStatus },
}

impl RunStatus {
    pub fn as_str(&self) -> String {
        match self {
            RunStatus::Converged => "converged".into(),
            RunStatus::MaxIter => "max_iter".into(),
            RunStatus::SubproblemFailure { iteration, backend } => {
                format!("subproblem_failure(iteration={iteration},backend={})", backend.as_str())
            }
        }
    }
}

/// Worst sampled covertness margin for one (slot, warden) pair.
#[derive(Debug, Clone, Serialize)]
pub struct CovertRow {
    pub slot: usize,
    pub warden: usize,
    pub worst_gamma: f64,
    pub gamma_cap: f64,
    /// `worst_gamma / gamma_cap`; covert iff <= 1 up to numerical tolerance.
    pub ratio: f64,
    /// DEP (or its Pinsker bound in the multi-antenna case) at the worst
    /// sampled position.
    pub min_dep: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CovertReport {
    pub rows: Vec<CovertRow>,
    pub max_ratio: f64,
    pub min_dep: f64,
}

/// Result of one optimization run.
#[derive(Debug, Clone)]
pub struct SolveResult {
    pub final_iterate: Iterate,
    pub trace: Vec<IterationRecord>,
    pub status: RunStatus,
    pub covert_report: Option<CovertReport>,
}

impl SolveResult {
    pub fn objective(&self) -> f64 {
        self.final_iterate.objective
    }

    pub fn iterations(&self) -> usize {
        self.trace.len()
    }
}

/// Largest slack value the S-procedure admits for the squared base-station
/// to warden distance over the whole uncertainty disc (plus altitude).
fn sproc_v_max(w_dist: f64, radius: f64, s_alt: f64) -> f64 {
    let horiz = (w_dist - radius).max(0.0);
    horiz * horiz + s_alt * s_alt
}

/// Largest transmit power satisfying the covertness cap at the worst-case
/// disc position of one warden.
fn cap_power(
    scn: &Scenario,
    gamma_cap: f64,
    antenna_factor: f64,
    q_s: [f64; 2],
    q_j: [f64; 2],
    warden_idx: usize,
) -> f64 {
    let w = &scn.wardens[warden_idx];
    let ds_min = (dist(q_s, w.est_pos) - w.radius).max(0.0);
    let gain_s_max = scn.ref_gain / (ds_min * ds_min + scn.s_alt * scn.s_alt);
    let dj_max = dist(q_j, w.est_pos) + w.radius;
    let gain_j_min = scn.ref_gain / (dj_max * dj_max + scn.j_alt * scn.j_alt);
    gamma_cap * (scn.noise_power + antenna_factor * scn.p_jam * gain_j_min)
        / (antenna_factor * gain_s_max)
}

/// Documented initialization: straight constant-speed lines (the hovering
/// benchmark parks J at its corridor midpoint), per-slot power at 90% of the
/// worst-case covertness cap, slacks tight, feasibility verified.
pub fn initialize(scn: &Scenario, mode: Mode, bench: Bench) -> Result<Iterate, OptimError> {
    let gamma_cap = mode.gamma_cap(scn)?;
    let kf = mode.antenna_factor(scn);
    let mut traj = Trajectory::straight_line(scn, scn.p_max);
    if bench == Bench::HoverJ {
        let mid =
            [0.5 * (scn.j_start[0] + scn.j_end[0]), 0.5 * (scn.j_start[1] + scn.j_end[1])];
        for s in &mut traj.slots {
            s.q_j = mid;
        }
    }
    for s in &mut traj.slots {
        let p_cov = scn
            .wardens
            .iter()
            .enumerate()
            .map(|(m, _)| cap_power(scn, gamma_cap, kf, s.q_s, s.q_j, m))
            .fold(f64::INFINITY, f64::min);
        s.p_s = (0.9 * p_cov).clamp(POWER_FLOOR_FRAC * scn.p_max, scn.p_max);
    }
    let it = iterate_with_tight_slacks(scn, traj)?;
    check_iterate_feasible(scn, &it, mode, bench).map_err(OptimError::InfeasibleInit)?;
    Ok(it)
}

fn iterate_with_tight_slacks(scn: &Scenario, traj: Trajectory) -> Result<Iterate, OptimError> {
    let hs2 = scn.s_alt * scn.s_alt;
    let hj2 = scn.j_alt * scn.j_alt;
    let d_prev = traj
        .slots
        .iter()
        .map(|s| scn.users.iter().map(|&u| dist2(s.q_s, u) + hs2).collect())
        .collect();
    let c_prev = traj
        .slots
        .iter()
        .map(|s| {
            scn.wardens
                .iter()
                .map(|w| (dist(s.q_j, w.est_pos) + w.radius).powi(2) + hj2)
                .collect()
        })
        .collect();
    let objective = min_avg_rate(&traj, scn)?;
    Ok(Iterate { traj, d_prev, c_prev, objective })
}

/// Relative slack allowed when re-checking subproblem feasibility of an
/// iterate that came out of a tolerance-limited interior-point solve.
const CHAIN_TOL: f64 = 1e-6;

/// Verifies that an iterate admits a feasible slack assignment for its own
/// subproblem: trajectory constraints, slack lower bounds and the covertness
/// chain through the tight S-procedure value.
pub fn check_iterate_feasible(
    scn: &Scenario,
    it: &Iterate,
    mode: Mode,
    bench: Bench,
) -> Result<(), String> {
    it.validate(scn).map_err(|e| e.to_string())?;
    let require_j_endpoints = bench != Bench::HoverJ;
    it.traj
        .validate(scn, require_j_endpoints, 1e-6)
        .map_err(|e| e.to_string())?;
    let gamma_cap = mode.gamma_cap(scn).map_err(|e| e.to_string())?;
    let kf = mode.antenna_factor(scn);
    let hs2 = scn.s_alt * scn.s_alt;
    let hj2 = scn.j_alt * scn.j_alt;
    for (i, s) in it.traj.slots.iter().enumerate() {
        for (k, &u) in scn.users.iter().enumerate() {
            let need = dist2(s.q_s, u) + hs2;
            if it.d_prev[i][k] < need * (1.0 - CHAIN_TOL) {
                return Err(format!(
                    "slot {i} user {k}: d = {} below distance bound {need}",
                    it.d_prev[i][k]
                ));
            }
        }
        for (m, w) in scn.wardens.iter().enumerate() {
            let need = (dist(s.q_j, w.est_pos) + w.radius).powi(2) + hj2;
            if it.c_prev[i][m] < need * (1.0 - CHAIN_TOL) {
                return Err(format!(
                    "slot {i} warden {m}: c = {} below inflated distance {need}",
                    it.c_prev[i][m]
                ));
            }
            let b_max = kf * scn.ref_gain * scn.p_jam / it.c_prev[i][m] + scn.noise_power;
            let v_max = sproc_v_max(dist(s.q_s, w.est_pos), w.radius, scn.s_alt);
            let lhs = kf * scn.ref_gain * s.p_s;
            let rhs = gamma_cap * b_max * v_max;
            if lhs > rhs * (1.0 + CHAIN_TOL) {
                return Err(format!(
                    "slot {i} warden {m}: covert chain violated ({lhs:e} > {rhs:e})"
                ));
            }
        }
    }
    Ok(())
}

/// Runs the outer loop until the objective improvement drops below the
/// tolerance or the iteration cap is hit.
pub fn sca_solve(
    scn: &Scenario,
    mode: Mode,
    bench: Bench,
    opts: &ScaOptions,
) -> Result<SolveResult, OptimError> {
    let tol = opts.tol.unwrap_or(scn.sca_tol);
    let mut it = initialize(scn, mode, bench)?;
    let mut trace: Vec<IterationRecord> = Vec::new();
    let mut status = RunStatus::MaxIter;
    for iteration in 1..=opts.max_iter {
        check_iterate_feasible(scn, &it, mode, bench)
            .map_err(|reason| OptimError::FeasibilityChain { iteration, reason })?;
        let started = Instant::now();
        let sub = assemble_subproblem(scn, &it, mode, bench)?;
        let out = sub.program.solve(&opts.conic)?;
        let wall_ms = started.elapsed().as_millis() as u64;
        if out.status != SolveStatus::Optimal {
            status = RunStatus::SubproblemFailure { iteration, backend: out.status };
            trace.push(IterationRecord {
                iteration,
                eta: f64::NAN,
                objective: it.objective,
                solver_status: out.status.as_str().into(),
                wall_ms,
            });
            break;
        }
        let next = sub.extract(&out, scn, &it)?;
        let improvement = next.objective - it.objective;
        // Adopt the new point only if it improves. Reduced-accuracy backend
        // terminations can return a feasible point a hair below the
        // incumbent; a non-improving step means convergence either way.
        if improvement > 0.0 {
            it = next;
        }
        trace.push(IterationRecord {
            iteration,
            eta: out.objective,
            objective: it.objective,
            solver_status: out.backend.clone(),
            wall_ms,
        });
        if improvement < tol {
            status = RunStatus::Converged;
            break;
        }
    }
    let covert_report = if status == RunStatus::Converged {
        Some(verify_trajectory(scn, &it.traj, mode, opts.covert_samples)?)
    } else {
        None
    };
    Ok(SolveResult { final_iterate: it, trace, status, covert_report })
}

/// Samples the uncertainty disc of every warden at every slot and reports the
/// worst SINR margin and DEP against the mode's cap.
///
/// Sampled points: the disc center, the analytic nearest point to S, the
/// analytic farthest point from J, and `samples` points on the boundary.
pub fn verify_covertness(
    result: &SolveResult,
    scn: &Scenario,
    mode: Mode,
    samples: usize,
) -> Result<CovertReport, OptimError> {
    verify_trajectory(scn, &result.final_iterate.traj, mode, samples)
}

pub(crate) fn verify_trajectory(
    scn: &Scenario,
    traj: &Trajectory,
    mode: Mode,
    samples: usize,
) -> Result<CovertReport, OptimError> {
    let gamma_cap = mode.gamma_cap(scn)?;
    let mut rows = Vec::with_capacity(traj.slots.len() * scn.wardens.len());
    let mut max_ratio = 0.0f64;
    let mut min_dep = 1.0f64;
    for (i, s) in traj.slots.iter().enumerate() {
        for (m, w) in scn.wardens.iter().enumerate() {
            let mut points = Vec::with_capacity(samples + 3);
            points.push(w.est_pos);
            let towards_s = dist(s.q_s, w.est_pos);
            if towards_s > 0.0 {
                points.push([
                    w.est_pos[0] + w.radius * (s.q_s[0] - w.est_pos[0]) / towards_s,
                    w.est_pos[1] + w.radius * (s.q_s[1] - w.est_pos[1]) / towards_s,
                ]);
            }
            let from_j = dist(s.q_j, w.est_pos);
            if from_j > 0.0 {
                points.push([
                    w.est_pos[0] + w.radius * (w.est_pos[0] - s.q_j[0]) / from_j,
                    w.est_pos[1] + w.radius * (w.est_pos[1] - s.q_j[1]) / from_j,
                ]);
            }
            for j in 0..samples {
                let phi = 2.0 * std::f64::consts::PI * j as f64 / samples.max(1) as f64;
                points.push([
                    w.est_pos[0] + w.radius * phi.cos(),
                    w.est_pos[1] + w.radius * phi.sin(),
                ]);
            }
            let mut worst = 0.0f64;
            for pos in points {
                let gamma = match mode {
                    Mode::SingleAntenna => warden_sinr_single(s, pos, scn)?,
                    Mode::MultiAntenna => warden_sinr_multi(s, pos, scn)?,
                };
                worst = worst.max(gamma);
            }
            let dep = match mode {
                Mode::SingleAntenna => dep_single(worst, scn.n_obs)?,
                Mode::MultiAntenna => pinsker_bound(kl_divergence(worst, scn.n_obs)?),
            };
            let ratio = worst / gamma_cap;
            max_ratio = max_ratio.max(ratio);
            min_dep = min_dep.min(dep);
            rows.push(CovertRow {
                slot: i + 1,
                warden: m + 1,
                worst_gamma: worst,
                gamma_cap,
                ratio,
                min_dep: dep,
            });
        }
    }
    Ok(CovertReport { rows, max_ratio, min_dep })
}
