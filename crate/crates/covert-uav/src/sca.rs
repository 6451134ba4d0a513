//! Assembly of one convex SCA subproblem around a feasible point.
//!
//! Each outer iteration linearizes the non-convex pieces at the previous
//! iterate: the rate denominator slack, the transmit-power logarithm, the
//! inverse jammer-distance slack and the warden-distance square inside the
//! robustness constraint. Location uncertainty enters through a triangle
//! inequality on the jammer side and an S-procedure on the base-station side;
//! the resulting 3x3 matrix condition is reduced exactly to a rotated
//! second-order cone (its top-left block is `(1+theta) I` with `theta >= 0`,
//! so the Schur complement is lossless).
//!
//! Variable scaling inside the builder: positions in units of 100 m, powers
//! in units of `p_max`, power-like slacks in units of the noise power. Raw SI
//! values span ~15 orders of magnitude and break interior-point backends.

use thiserror::Error;

use crate::conic::{ConicError, ConvexProgram, LinExpr, SolveOutcome, VarId};
use crate::detection::{gamma_cap_multi, gamma_cap_single, DetectionError};
use crate::geometry::{dist, dist2, min_avg_rate, GeometryError, SlotState, Trajectory};
use crate::scenario::Scenario;

#[derive(Debug, Error)]
pub enum ScaError {
    #[error("linearization point invalid: {0}")]
    Linearization(String),
    #[error("benchmark/iterate mismatch: {0}")]
    Mode(String),
    #[error(transparent)]
    Conic(#[from] ConicError),
    #[error(transparent)]
    Detection(#[from] DetectionError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// Which covertness cap applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    SingleAntenna,
    MultiAntenna,
}

/// Optimization scheme: the proposed joint design or one of the benchmarks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bench {
    /// Jointly optimize S power, S trajectory and J trajectory.
    Proposed,
    /// S flies the iterate's trajectory unchanged (benchmark 1).
    FixedS,
    /// J flies the iterate's trajectory unchanged (benchmark 2).
    FixedJ,
    /// J hovers at one optimized position; its endpoint constraints are
    /// dropped (benchmark 3).
    HoverJ,
}

impl Bench {
    pub fn as_str(&self) -> &'static str {
        match self {
            Bench::Proposed => "proposed",
            Bench::FixedS => "b1",
            Bench::FixedJ => "b2",
            Bench::HoverJ => "b3",
        }
    }
}

impl Mode {
    pub fn as_str(&self) -> &'static str {
        match self {
            Mode::SingleAntenna => "single",
            Mode::MultiAntenna => "multi",
        }
    }

    /// Effective antenna count entering the cap and jam-power constraints.
    pub fn antenna_factor(&self, scn: &Scenario) -> f64 {
        match self {
            Mode::SingleAntenna => 1.0,
            Mode::MultiAntenna => scn.n_antennas as f64,
        }
    }

    /// Covertness SINR cap for this mode.
    pub fn gamma_cap(&self, scn: &Scenario) -> Result<f64, DetectionError> {
        match self {
            Mode::SingleAntenna => gamma_cap_single(scn.epsilon, scn.n_obs),
            Mode::MultiAntenna => gamma_cap_multi(scn.epsilon, scn.n_obs),
        }
    }
}

/// Transmit powers below this fraction of `p_max` are clamped up so the
/// power-log linearization stays defined; the corresponding SINR is orders of
/// magnitude below any covertness cap.
pub const POWER_FLOOR_FRAC: f64 = 1e-12;

/// Position unit used inside the conic data, meters.
const POS_UNIT: f64 = 100.0;

/// Numerical floors (SI units) keeping slacks away from log/denominator
/// singularities; far below physically attainable values.
const V_FLOOR_M2: f64 = 1e-6;

/// The feasible point carried between outer iterations.
#[derive(Debug, Clone)]
pub struct Iterate {
    pub traj: Trajectory,
    /// Rate denominator slack per `[slot][user]`, m^2.
    pub d_prev: Vec<Vec<f64>>,
    /// Jammer-distance slack per `[slot][warden]`, m^2.
    pub c_prev: Vec<Vec<f64>>,
    /// Min-average rate achieved by `traj`, bits/s/Hz.
    pub objective: f64,
}

impl Iterate {
    pub fn validate(&self, scn: &Scenario) -> Result<(), ScaError> {
        let n = scn.n_slots;
        if self.traj.slots.len() != n || self.d_prev.len() != n || self.c_prev.len() != n {
            return Err(ScaError::Linearization("iterate slot count mismatch".into()));
        }
        let hs2 = scn.s_alt * scn.s_alt;
        let hj2 = scn.j_alt * scn.j_alt;
        for slot in 0..n {
            let p = self.traj.slots[slot].p_s;
            if !(p > 0.0) || !p.is_finite() {
                return Err(ScaError::Linearization(format!("slot {slot}: power {p} must be positive")));
            }
            for (k, &d) in self.d_prev[slot].iter().enumerate() {
                if !(d >= hs2 * (1.0 - 1e-9)) || !d.is_finite() {
                    return Err(ScaError::Linearization(format!("slot {slot} user {k}: d = {d} below H_S^2")));
                }
            }
            for (m, &c) in self.c_prev[slot].iter().enumerate() {
                if !(c >= hj2 * (1.0 - 1e-9)) || !c.is_finite() {
                    return Err(ScaError::Linearization(format!("slot {slot} warden {m}: c = {c} below H_J^2")));
                }
            }
        }
        Ok(())
    }
}

// --- the four surrogate formulas, SI units, shared by builder and tests ---

/// Concave lower bound of the rate at denominator slack `d`, linearized at
/// `d_l`: `log2(gamma0 p + d) - log2(d_l) - (d - d_l) / (d_l ln 2)`.
pub fn rate_lb_value(gamma0: f64, p: f64, d: f64, d_l: f64) -> f64 {
    (gamma0 * p + d).log2() - d_l.log2() - (d - d_l) / (d_l * std::f64::consts::LN_2)
}

/// Affine over-estimator of `ln(rho0 p)`, tangent at `p_l`.
pub fn log_power_value(rho0: f64, p: f64, p_l: f64) -> f64 {
    (rho0 * p_l).ln() + (p - p_l) / p_l
}

/// Affine under-estimator of `1/c`, tangent at `c_l`.
pub fn inverse_lb_value(c: f64, c_l: f64) -> f64 {
    1.0 / c_l - (c - c_l) / (c_l * c_l)
}

/// Affine under-estimator of `||q - q_hat||^2`, tangent at `q_l`.
pub fn sqdist_lb_value(q: [f64; 2], q_l: [f64; 2], q_hat: [f64; 2]) -> f64 {
    dist2(q_l, q_hat)
        + 2.0 * ((q_l[0] - q_hat[0]) * (q[0] - q_l[0]) + (q_l[1] - q_hat[1]) * (q[1] - q_l[1]))
}

/// Variable handles of an assembled subproblem, for extraction and
/// diagnostics. Indexing is `[slot][user]` / `[slot][warden]`.
#[derive(Debug)]
pub struct SubproblemVars {
    pub p: Vec<VarId>,
    pub eta: VarId,
    pub q_s: Option<Vec<[VarId; 2]>>,
    pub q_j: JammerVars,
    pub d: Vec<Vec<VarId>>,
    pub c: Vec<Vec<VarId>>,
    pub b: Vec<Vec<VarId>>,
    pub v: Vec<Vec<VarId>>,
    pub theta: Vec<Vec<VarId>>,
}

#[derive(Debug)]
pub enum JammerVars {
    PerSlot(Vec<[VarId; 2]>),
    Shared([VarId; 2]),
    Frozen,
}

/// An assembled convex subproblem plus the book-keeping to read a solution
/// back into SI units.
#[derive(Debug)]
pub struct Subproblem {
    pub program: ConvexProgram,
    pub vars: SubproblemVars,
    bench: Bench,
}

impl Subproblem {
    /// Reads the solved point back into an [`Iterate`] (SI units), copying
    /// frozen quantities bit-for-bit from the previous iterate.
    ///
    /// The next linearization slacks are recomputed tight from the new
    /// geometry rather than taken from the solved subproblem: the solver
    /// leaves non-binding `d`/`c` wherever the interior-point path dropped
    /// them, and linearizing there makes the surrogate at the incumbent fall
    /// below the true objective, breaking monotone improvement. At the tight
    /// values the rate surrogate equals the true rate exactly.
    pub fn extract(
        &self,
        outcome: &SolveOutcome,
        scn: &Scenario,
        prev: &Iterate,
    ) -> Result<Iterate, ScaError> {
        if outcome.values.is_none() {
            return Err(ScaError::Mode("extract requires an optimal outcome".into()));
        }
        let u = POS_UNIT;
        let n = scn.n_slots;
        let hs2 = scn.s_alt * scn.s_alt;
        let hj2 = scn.j_alt * scn.j_alt;
        let mut slots = Vec::with_capacity(n);
        for i in 0..n {
            let p_s = (outcome.value(self.vars.p[i]) * scn.p_max)
                .clamp(POWER_FLOOR_FRAC * scn.p_max, scn.p_max);
            let q_s = match &self.vars.q_s {
                Some(v) => [outcome.value(v[i][0]) * u, outcome.value(v[i][1]) * u],
                None => prev.traj.slots[i].q_s,
            };
            let q_j = match &self.vars.q_j {
                JammerVars::PerSlot(v) => [outcome.value(v[i][0]) * u, outcome.value(v[i][1]) * u],
                JammerVars::Shared(v) => [outcome.value(v[0]) * u, outcome.value(v[1]) * u],
                JammerVars::Frozen => prev.traj.slots[i].q_j,
            };
            slots.push(SlotState { q_s, q_j, p_s });
        }
        // Endpoints are hard equality rows; snap away the solver residual so
        // downstream validation sees them exactly.
        if self.vars.q_s.is_some() {
            slots[0].q_s = scn.s_start;
            slots[n - 1].q_s = scn.s_end;
        }
        if matches!(self.vars.q_j, JammerVars::PerSlot(_)) {
            slots[0].q_j = scn.j_start;
            slots[n - 1].q_j = scn.j_end;
        }
        let traj = Trajectory { slots };
        let d_prev: Vec<Vec<f64>> = traj
            .slots
            .iter()
            .map(|s| scn.users.iter().map(|&user| dist2(s.q_s, user) + hs2).collect())
            .collect();
        let c_prev: Vec<Vec<f64>> = traj
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

    pub fn bench(&self) -> Bench {
        self.bench
    }
}

/// Expected IR size for one subproblem; the builder is checked against this.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProgramCensus {
    pub vars: usize,
    pub eq_rows: usize,
    pub ge_rows: usize,
    pub soc_cones: usize,
    pub exp_cones: usize,
}

/// Closed-form variable/constraint census.
///
/// With `N` slots, `U` users, `W` wardens:
/// vars   = 1 + 5N + 2NU + 7NW  (minus 2N frozen positions, or 2 shared for
///          the hovering jammer),
/// eq     = 8 endpoint rows (4 per free UAV trajectory),
/// ge     = U + 2N + 6NW  (rate rows, power box, cap and jam rows, floors),
/// soc    = NU + 3NW + per-UAV velocity rows (N - 1 each),
/// exp    = NU + 2NW.
pub fn expected_census(scn: &Scenario, bench: Bench) -> ProgramCensus {
    let n = scn.n_slots;
    let u = scn.users.len();
    let w = scn.wardens.len();
    let mut vars = 1 + 5 * n + 2 * n * u + 7 * n * w;
    let mut eq = 8;
    let mut soc = n * u + 3 * n * w + 2 * (n - 1);
    match bench {
        Bench::Proposed => {}
        Bench::FixedS => {
            vars -= 2 * n;
            eq -= 4;
            soc -= n - 1;
        }
        Bench::FixedJ => {
            vars -= 2 * n;
            eq -= 4;
            soc -= n - 1;
        }
        Bench::HoverJ => {
            vars = vars - 2 * n + 2;
            eq -= 4;
            soc -= n - 1;
        }
    }
    ProgramCensus {
        vars,
        eq_rows: eq,
        ge_rows: u + 2 * n + 6 * n * w,
        soc_cones: soc,
        exp_cones: n * u + 2 * n * w,
    }
}

/// Builds the convex subproblem for the given mode and benchmark around the
/// iterate. The returned program maximizes the rate epigraph variable `eta`.
pub fn assemble_subproblem(
    scn: &Scenario,
    it: &Iterate,
    mode: Mode,
    bench: Bench,
) -> Result<Subproblem, ScaError> {
    let cap = mode.gamma_cap(scn)?;
    assemble_with_cap(scn, it, cap, mode.antenna_factor(scn), bench)
}

/// Core builder, parametrized directly by the SINR cap and antenna factor.
pub(crate) fn assemble_with_cap(
    scn: &Scenario,
    it: &Iterate,
    gamma_cap: f64,
    antenna_factor: f64,
    bench: Bench,
) -> Result<Subproblem, ScaError> {
    it.validate(scn)?;
    if bench == Bench::HoverJ {
        let q0 = it.traj.slots[0].q_j;
        for (i, s) in it.traj.slots.iter().enumerate() {
            if dist(s.q_j, q0) > 1e-6 {
                return Err(ScaError::Mode(format!(
                    "hovering benchmark needs a constant jammer iterate, slot {i} differs"
                )));
            }
        }
    }

    let n = scn.n_slots;
    let n_users = scn.users.len();
    let n_wardens = scn.wardens.len();
    let u = POS_UNIT;
    let u2 = u * u;
    let ln2 = std::f64::consts::LN_2;

    let hs2 = (scn.s_alt / u).powi(2);
    let hj2 = (scn.j_alt / u).powi(2);
    let g_rate = scn.gamma0() * scn.p_max / u2;
    // b is measured in units of the received jam power at unit scaled
    // distance (falling back to the noise power for a silent jammer), which
    // keeps the exponential-cone arguments near 1.
    let jam_unit = if scn.p_jam > 0.0 {
        antenna_factor * scn.ref_gain * scn.p_jam / u2
    } else {
        scn.noise_power
    };
    let jam_b_coef = antenna_factor * scn.ref_gain * scn.p_jam / (jam_unit * u2);
    let noise_b = scn.noise_power / jam_unit;
    // cap row: A_scaled <= shift + ln(b~) + ln(v~), where
    // shift = ln(gamma_cap jam_unit u^2) - ln(K rho0 p_max)
    let cap_shift = (gamma_cap * jam_unit * u2).ln()
        - (antenna_factor * scn.ref_gain * scn.p_max).ln();

    let mut prog = ConvexProgram::new();

    // -- variables --
    let p: Vec<VarId> = (0..n)
        .map(|i| prog.add_variable(format!("p[{i}]"), Some(POWER_FLOOR_FRAC), Some(1.0)))
        .collect();
    let eta = prog.add_variable("eta", None, None);
    let q_s_vars: Option<Vec<[VarId; 2]>> = if bench == Bench::FixedS {
        None
    } else {
        Some(
            (0..n)
                .map(|i| {
                    [
                        prog.add_variable(format!("xs[{i}]"), None, None),
                        prog.add_variable(format!("ys[{i}]"), None, None),
                    ]
                })
                .collect(),
        )
    };
    let q_j_vars = match bench {
        Bench::FixedJ => JammerVars::Frozen,
        Bench::HoverJ => JammerVars::Shared([
            prog.add_variable("xj", None, None),
            prog.add_variable("yj", None, None),
        ]),
        _ => JammerVars::PerSlot(
            (0..n)
                .map(|i| {
                    [
                        prog.add_variable(format!("xj[{i}]"), None, None),
                        prog.add_variable(format!("yj[{i}]"), None, None),
                    ]
                })
                .collect(),
        ),
    };
    let grid =
        |name: &str, cols: usize, lb: Option<f64>, prog: &mut ConvexProgram| -> Vec<Vec<VarId>> {
            (0..n)
                .map(|i| {
                    (0..cols)
                        .map(|j| prog.add_variable(format!("{name}[{i}][{j}]"), lb, None))
                        .collect()
                })
                .collect()
        };
    let d = grid("d", n_users, None, &mut prog);
    let t_rate = grid("tr", n_users, None, &mut prog);
    let b = grid("b", n_wardens, Some(0.5 * noise_b), &mut prog);
    let c = grid("c", n_wardens, Some(hj2), &mut prog);
    let v = grid("v", n_wardens, Some(V_FLOOR_M2 / u2), &mut prog);
    let theta = grid("th", n_wardens, Some(0.0), &mut prog);
    let t_b = grid("tb", n_wardens, None, &mut prog);
    let t_v = grid("tv", n_wardens, None, &mut prog);
    let t_j = grid("tj", n_wardens, None, &mut prog);

    prog.set_objective(LinExpr::var(eta));

    // position expressions, scaled
    let qs_expr: Vec<[LinExpr; 2]> = (0..n)
        .map(|i| match &q_s_vars {
            Some(vars) => [LinExpr::var(vars[i][0]), LinExpr::var(vars[i][1])],
            None => {
                let q = it.traj.slots[i].q_s;
                [LinExpr::constant(q[0] / u), LinExpr::constant(q[1] / u)]
            }
        })
        .collect();
    let qj_expr: Vec<[LinExpr; 2]> = (0..n)
        .map(|i| match &q_j_vars {
            JammerVars::PerSlot(vars) => [LinExpr::var(vars[i][0]), LinExpr::var(vars[i][1])],
            JammerVars::Shared(vars) => [LinExpr::var(vars[0]), LinExpr::var(vars[1])],
            JammerVars::Frozen => {
                let q = it.traj.slots[i].q_j;
                [LinExpr::constant(q[0] / u), LinExpr::constant(q[1] / u)]
            }
        })
        .collect();

    // `||args||^2 <= w` as a second-order cone
    fn quad_le(
        prog: &mut ConvexProgram,
        mut args: Vec<LinExpr>,
        w: LinExpr,
    ) -> Result<(), ConicError> {
        let half_minus = w.clone().scale(0.5).add_const(-0.5);
        let bound = w.scale(0.5).add_const(0.5);
        args.push(half_minus);
        prog.add_soc(args, bound)?;
        Ok(())
    }

    // -- rate epigraphs and the min-average objective rows --
    for k in 0..n_users {
        let user = [scn.users[k][0] / u, scn.users[k][1] / u];
        // eta <= (1/N) sum_n [tr - log2(d_l) - (d - d_l)/(d_l ln2)]
        let mut avg = LinExpr::constant(0.0);
        for i in 0..n {
            let d_l = it.d_prev[i][k] / u2;
            if !(d_l > 0.0) {
                return Err(ScaError::Linearization(format!("d_prev[{i}][{k}] = {d_l}")));
            }
            // d >= ||q_s - user||^2 + H_S^2
            let diff = vec![
                qs_expr[i][0].clone().add_const(-user[0]),
                qs_expr[i][1].clone().add_const(-user[1]),
            ];
            quad_le(&mut prog, diff, LinExpr::var(d[i][k]).add_const(-hs2))?;
            // tr * ln2 <= ln(p + d/g_rate); the true rate term is
            // tr + log2(g_rate), folded into the averaging row below
            prog.add_log_epigraph(
                LinExpr::term(t_rate[i][k], ln2),
                LinExpr::var(p[i]).add_term(d[i][k], 1.0 / g_rate),
            )?;
            avg = avg
                .add_term(t_rate[i][k], 1.0)
                .add_term(d[i][k], -1.0 / (d_l * ln2))
                .add_const(g_rate.log2() - d_l.log2() + 1.0 / ln2);
        }
        avg = avg.scale(1.0 / n as f64);
        prog.add_affine_ge(avg.add_term(eta, -1.0))?;
    }

    // -- covertness constraints per slot and warden --
    for i in 0..n {
        let p_l = it.traj.slots[i].p_s / scn.p_max;
        for m in 0..n_wardens {
            let wd = &scn.wardens[m];
            let w_hat = [wd.est_pos[0] / u, wd.est_pos[1] / u];
            let radius = wd.radius / u;
            let c_l = it.c_prev[i][m] / u2;

            // A(n) <= shift + ln(b) + ln(v):
            // affine part A = ln(rho0 K p_max p_l) + (p - p_l)/p_l, with the
            // constant ln(rho0 K p_max) folded into `shift`.
            prog.add_log_epigraph(LinExpr::var(t_b[i][m]), LinExpr::var(b[i][m]))?;
            prog.add_log_epigraph(LinExpr::var(t_v[i][m]), LinExpr::var(v[i][m]))?;
            let row = LinExpr::var(t_b[i][m])
                .add_term(t_v[i][m], 1.0)
                .add_const(cap_shift - p_l.ln() + 1.0)
                .add_term(p[i], -1.0 / p_l);
            prog.add_affine_ge(row)?;

            // b <= jam_b_coef * (2/c_l - c/c_l^2) + noise_b
            let row = LinExpr::constant(jam_b_coef * 2.0 / c_l + noise_b)
                .add_term(c[i][m], -jam_b_coef / (c_l * c_l))
                .add_term(b[i][m], -1.0);
            prog.add_affine_ge(row)?;

            // t_j >= ||q_j - w_hat||, then (t_j + r)^2 <= c - H_J^2
            prog.add_soc(
                vec![
                    qj_expr[i][0].clone().add_const(-w_hat[0]),
                    qj_expr[i][1].clone().add_const(-w_hat[1]),
                ],
                LinExpr::var(t_j[i][m]),
            )?;
            quad_le(
                &mut prog,
                vec![LinExpr::var(t_j[i][m]).add_const(radius)],
                LinExpr::var(c[i][m]).add_const(-hj2),
            )?;

            // S-procedure, Schur-reduced:
            // ||q_s - w_hat||^2 <= (1 + theta) (C + H_S^2 - v - theta r^2)
            let q_l = [it.traj.slots[i].q_s[0] / u, it.traj.slots[i].q_s[1] / u];
            let w_l = dist2(q_l, w_hat);
            let lin = [q_l[0] - w_hat[0], q_l[1] - w_hat[1]];
            // C = w_l + 2 lin . (q_s - q_l)
            let c_expr = qs_expr[i][0]
                .clone()
                .scale(2.0 * lin[0])
                .add(&qs_expr[i][1].clone().scale(2.0 * lin[1]))
                .add_const(w_l - 2.0 * (lin[0] * q_l[0] + lin[1] * q_l[1]));
            let b_expr = c_expr
                .add_const(hs2)
                .add_term(v[i][m], -1.0)
                .add_term(theta[i][m], -radius * radius);
            prog.add_rsoc(
                vec![
                    qs_expr[i][0].clone().add_const(-w_hat[0]),
                    qs_expr[i][1].clone().add_const(-w_hat[1]),
                ],
                LinExpr::term(theta[i][m], 0.5).add_const(0.5),
                b_expr,
            )?;
        }
    }

    // -- endpoints and velocities --
    if let Some(vars) = &q_s_vars {
        for (slot, target) in [(0, scn.s_start), (n - 1, scn.s_end)] {
            prog.add_affine_eq(LinExpr::var(vars[slot][0]).add_const(-target[0] / u))?;
            prog.add_affine_eq(LinExpr::var(vars[slot][1]).add_const(-target[1] / u))?;
        }
        let step = scn.s_step_max() / u;
        for i in 0..n - 1 {
            prog.add_soc(
                vec![
                    LinExpr::var(vars[i + 1][0]).add_term(vars[i][0], -1.0),
                    LinExpr::var(vars[i + 1][1]).add_term(vars[i][1], -1.0),
                ],
                LinExpr::constant(step),
            )?;
        }
    }
    if let JammerVars::PerSlot(vars) = &q_j_vars {
        for (slot, target) in [(0, scn.j_start), (n - 1, scn.j_end)] {
            prog.add_affine_eq(LinExpr::var(vars[slot][0]).add_const(-target[0] / u))?;
            prog.add_affine_eq(LinExpr::var(vars[slot][1]).add_const(-target[1] / u))?;
        }
        let step = scn.j_step_max() / u;
        for i in 0..n - 1 {
            prog.add_soc(
                vec![
                    LinExpr::var(vars[i + 1][0]).add_term(vars[i][0], -1.0),
                    LinExpr::var(vars[i + 1][1]).add_term(vars[i][1], -1.0),
                ],
                LinExpr::constant(step),
            )?;
        }
    }

    Ok(Subproblem {
        program: prog,
        vars: SubproblemVars { p, eta, q_s: q_s_vars, q_j: q_j_vars, d, c, b, v, theta },
        bench,
    })
}
