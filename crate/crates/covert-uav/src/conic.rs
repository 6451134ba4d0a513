//! Solver-agnostic convex-program intermediate representation.
//!
//! A [`ConvexProgram`] carries named scalar variables, one affine objective to
//! maximize, and four constraint families: affine rows, second-order cones,
//! rotated second-order cones and log epigraphs. All curvature lives in the
//! cones, so any interior-point backend supporting linear, second-order and
//! exponential cones can serve; the bundled backend is Clarabel. Optimal
//! outcomes are re-verified against the IR's own feasibility check,
//! independent of the backend's reported residuals.

use std::fmt::Write as _;

use clarabel::algebra::CscMatrix;
use clarabel::solver::{
    DefaultSettingsBuilder, DefaultSolver, IPSolver, SolverStatus, SupportedConeT,
};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConicError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("backend error: {0}")]
    Backend(String),
}

/// Handle to a declared variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VarId(usize);

/// Handle to a recorded constraint, for diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstraintId {
    AffineEq(usize),
    AffineGe(usize),
    Soc(usize),
    Rsoc(usize),
    Exp(usize),
}

/// Affine expression `sum(coeff * var) + constant`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct LinExpr {
    pub terms: Vec<(VarId, f64)>,
    pub constant: f64,
}

impl LinExpr {
    pub fn constant(c: f64) -> Self {
        LinExpr { terms: Vec::new(), constant: c }
    }

    pub fn var(v: VarId) -> Self {
        LinExpr::term(v, 1.0)
    }

    pub fn term(v: VarId, coeff: f64) -> Self {
        LinExpr { terms: vec![(v, coeff)], constant: 0.0 }
    }

    pub fn add_term(mut self, v: VarId, coeff: f64) -> Self {
        self.terms.push((v, coeff));
        self
    }

    pub fn add_const(mut self, c: f64) -> Self {
        self.constant += c;
        self
    }

    pub fn add(mut self, other: &LinExpr) -> Self {
        self.terms.extend_from_slice(&other.terms);
        self.constant += other.constant;
        self
    }

    pub fn sub(mut self, other: &LinExpr) -> Self {
        for &(v, c) in &other.terms {
            self.terms.push((v, -c));
        }
        self.constant -= other.constant;
        self
    }

    pub fn scale(mut self, s: f64) -> Self {
        for t in &mut self.terms {
            t.1 *= s;
        }
        self.constant *= s;
        self
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        self.constant + self.terms.iter().map(|&(v, c)| c * x[v.0]).sum::<f64>()
    }
}

#[derive(Debug, Clone)]
struct VarInfo {
    name: String,
    lb: Option<f64>,
    ub: Option<f64>,
}

#[derive(Debug, Clone)]
struct SocCon {
    /// `|| norm_args || <= bound`
    norm_args: Vec<LinExpr>,
    bound: LinExpr,
}

#[derive(Debug, Clone)]
struct RsocCon {
    /// `|| args ||^2 <= 2 a b`, `a, b >= 0`
    args: Vec<LinExpr>,
    a: LinExpr,
    b: LinExpr,
}

#[derive(Debug, Clone)]
struct ExpCon {
    /// `t <= ln(s)`, `s > 0`
    t: LinExpr,
    s: LinExpr,
}

/// Outcome classification of one solve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    Optimal,
    Infeasible,
    Unbounded,
    NumericalLimit,
}

impl SolveStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            SolveStatus::Optimal => "optimal",
            SolveStatus::Infeasible => "infeasible",
            SolveStatus::Unbounded => "unbounded",
            SolveStatus::NumericalLimit => "numerical_limit",
        }
    }
}

/// Solution report. `values` is present exactly when the status is optimal;
/// the objective is recomputed from the returned point, not taken from the
/// backend.
#[derive(Debug, Clone)]
pub struct SolveOutcome {
    pub status: SolveStatus,
    pub values: Option<Vec<f64>>,
    pub objective: f64,
    /// Raw backend status, for diagnostics.
    pub backend: String,
}

impl SolveOutcome {
    /// Value of one variable; panics if the outcome is not optimal.
    pub fn value(&self, v: VarId) -> f64 {
        self.values.as_ref().expect("optimal outcome")[v.0]
    }
}

/// Backend tolerances.
#[derive(Debug, Clone)]
pub struct SolveOpts {
    pub feas_tol: f64,
    pub gap_tol: f64,
    pub max_iter: u32,
    pub verbose: bool,
}

impl Default for SolveOpts {
    fn default() -> Self {
        SolveOpts { feas_tol: 1e-8, gap_tol: 1e-8, max_iter: 200, verbose: false }
    }
}

/// One convex program under construction.
#[derive(Debug, Clone, Default)]
pub struct ConvexProgram {
    vars: Vec<VarInfo>,
    objective: LinExpr,
    affine_eq: Vec<LinExpr>,
    affine_ge: Vec<LinExpr>,
    soc: Vec<SocCon>,
    rsoc: Vec<RsocCon>,
    exp: Vec<ExpCon>,
}

impl ConvexProgram {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_variable(
        &mut self,
        name: impl Into<String>,
        lb: Option<f64>,
        ub: Option<f64>,
    ) -> VarId {
        self.vars.push(VarInfo { name: name.into(), lb, ub });
        VarId(self.vars.len() - 1)
    }

    /// Objective expression, maximized.
    pub fn set_objective(&mut self, expr: LinExpr) {
        self.objective = expr;
    }

    fn check_expr(&self, e: &LinExpr) -> Result<(), ConicError> {
        for &(v, c) in &e.terms {
            if v.0 >= self.vars.len() {
                return Err(ConicError::Shape(format!("variable #{} not declared", v.0)));
            }
            if !c.is_finite() {
                return Err(ConicError::Shape(format!("non-finite coefficient {c}")));
            }
        }
        if !e.constant.is_finite() {
            return Err(ConicError::Shape(format!("non-finite constant {}", e.constant)));
        }
        Ok(())
    }

    /// `expr == 0`
    pub fn add_affine_eq(&mut self, expr: LinExpr) -> Result<ConstraintId, ConicError> {
        self.check_expr(&expr)?;
        self.affine_eq.push(expr);
        Ok(ConstraintId::AffineEq(self.affine_eq.len() - 1))
    }

    /// `expr >= 0`
    pub fn add_affine_ge(&mut self, expr: LinExpr) -> Result<ConstraintId, ConicError> {
        self.check_expr(&expr)?;
        self.affine_ge.push(expr);
        Ok(ConstraintId::AffineGe(self.affine_ge.len() - 1))
    }

    /// `|| norm_args || <= bound`
    pub fn add_soc(
        &mut self,
        norm_args: Vec<LinExpr>,
        bound: LinExpr,
    ) -> Result<ConstraintId, ConicError> {
        if norm_args.is_empty() {
            return Err(ConicError::Shape("second-order cone needs at least one norm entry".into()));
        }
        for e in &norm_args {
            self.check_expr(e)?;
        }
        self.check_expr(&bound)?;
        self.soc.push(SocCon { norm_args, bound });
        Ok(ConstraintId::Soc(self.soc.len() - 1))
    }

    /// `|| args ||^2 <= 2 a b` with `a, b >= 0`
    pub fn add_rsoc(
        &mut self,
        args: Vec<LinExpr>,
        a: LinExpr,
        b: LinExpr,
    ) -> Result<ConstraintId, ConicError> {
        if args.is_empty() {
            return Err(ConicError::Shape("rotated cone needs at least one norm entry".into()));
        }
        for e in &args {
            self.check_expr(e)?;
        }
        self.check_expr(&a)?;
        self.check_expr(&b)?;
        self.rsoc.push(RsocCon { args, a, b });
        Ok(ConstraintId::Rsoc(self.rsoc.len() - 1))
    }

    /// `t <= ln(s)` with `s` affine positive.
    pub fn add_log_epigraph(
        &mut self,
        t: LinExpr,
        s: LinExpr,
    ) -> Result<ConstraintId, ConicError> {
        self.check_expr(&t)?;
        self.check_expr(&s)?;
        self.exp.push(ExpCon { t, s });
        Ok(ConstraintId::Exp(self.exp.len() - 1))
    }

    pub fn n_vars(&self) -> usize {
        self.vars.len()
    }

    /// (eq rows, ge rows incl. bounds, soc count incl. lowered rsoc, exp count)
    pub fn counts(&self) -> (usize, usize, usize, usize) {
        let bounds = self
            .vars
            .iter()
            .map(|v| v.lb.is_some() as usize + v.ub.is_some() as usize)
            .sum::<usize>();
        (
            self.affine_eq.len(),
            self.affine_ge.len() + bounds,
            self.soc.len() + self.rsoc.len(),
            self.exp.len(),
        )
    }

    /// Worst relative constraint violation at a candidate point.
    pub fn max_violation(&self, x: &[f64]) -> f64 {
        let rel = |viol: f64, scale: f64| viol / scale.max(1.0);
        let mut worst = 0.0f64;
        for (i, v) in self.vars.iter().enumerate() {
            if let Some(lb) = v.lb {
                worst = worst.max(rel(lb - x[i], lb.abs()));
            }
            if let Some(ub) = v.ub {
                worst = worst.max(rel(x[i] - ub, ub.abs()));
            }
        }
        for e in &self.affine_eq {
            worst = worst.max(rel(e.eval(x).abs(), expr_scale(e, x)));
        }
        for e in &self.affine_ge {
            worst = worst.max(rel(-e.eval(x), expr_scale(e, x)));
        }
        for c in &self.soc {
            let norm = c.norm_args.iter().map(|e| e.eval(x).powi(2)).sum::<f64>().sqrt();
            let bound = c.bound.eval(x);
            worst = worst.max(rel(norm - bound, bound.abs()));
        }
        for c in &self.rsoc {
            let sq = c.args.iter().map(|e| e.eval(x).powi(2)).sum::<f64>();
            let (a, b) = (c.a.eval(x), c.b.eval(x));
            worst = worst.max(rel(-a, 1.0)).max(rel(-b, 1.0));
            worst = worst.max(rel(sq - 2.0 * a * b, sq.abs()));
        }
        for c in &self.exp {
            let (t, s) = (c.t.eval(x), c.s.eval(x));
            if s <= 0.0 {
                worst = worst.max(rel(-s + f64::MIN_POSITIVE, 1.0).max(1.0));
            } else {
                worst = worst.max(rel(t - s.ln(), t.abs()));
            }
        }
        worst
    }

    /// Portable text listing of variables, cones and coefficients.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "variables {}", self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            let _ = writeln!(
                out,
                "  v{} {} lb={:?} ub={:?}",
                i, v.name, v.lb, v.ub
            );
        }
        let fmt_expr = |e: &LinExpr| {
            let mut s = String::new();
            for &(v, c) in &e.terms {
                let _ = write!(s, "{:+.17e}*v{} ", c, v.0);
            }
            let _ = write!(s, "{:+.17e}", e.constant);
            s
        };
        let _ = writeln!(out, "maximize {}", fmt_expr(&self.objective));
        for e in &self.affine_eq {
            let _ = writeln!(out, "eq  0 == {}", fmt_expr(e));
        }
        for e in &self.affine_ge {
            let _ = writeln!(out, "ge  0 <= {}", fmt_expr(e));
        }
        for c in &self.soc {
            let _ = writeln!(out, "soc bound {}", fmt_expr(&c.bound));
            for a in &c.norm_args {
                let _ = writeln!(out, "    arg {}", fmt_expr(a));
            }
        }
        for c in &self.rsoc {
            let _ = writeln!(out, "rsoc a {} ; b {}", fmt_expr(&c.a), fmt_expr(&c.b));
            for a in &c.args {
                let _ = writeln!(out, "    arg {}", fmt_expr(a));
            }
        }
        for c in &self.exp {
            let _ = writeln!(out, "exp {} <= ln( {} )", fmt_expr(&c.t), fmt_expr(&c.s));
        }
        out
    }

    /// Solves with the bundled interior-point backend.
    pub fn solve(&self, opts: &SolveOpts) -> Result<SolveOutcome, ConicError> {
        let n = self.vars.len();
        let mut rows = RowAccum::new(n);
        let mut cones: Vec<SupportedConeT<f64>> = Vec::new();

        // zero cone: eq rows
        for e in &self.affine_eq {
            rows.push_expr(e);
        }
        if !self.affine_eq.is_empty() {
            cones.push(SupportedConeT::ZeroConeT(self.affine_eq.len()));
        }

        // nonnegative cone: ge rows plus variable bounds
        let mut nn = 0usize;
        for e in &self.affine_ge {
            rows.push_expr(e);
            nn += 1;
        }
        for (i, v) in self.vars.iter().enumerate() {
            if let Some(lb) = v.lb {
                rows.push_expr(&LinExpr::term(VarId(i), 1.0).add_const(-lb));
                nn += 1;
            }
            if let Some(ub) = v.ub {
                rows.push_expr(&LinExpr::term(VarId(i), -1.0).add_const(ub));
                nn += 1;
            }
        }
        if nn > 0 {
            cones.push(SupportedConeT::NonnegativeConeT(nn));
        }

        // second-order cones: (bound, args...)
        for c in &self.soc {
            rows.push_expr(&c.bound);
            for a in &c.norm_args {
                rows.push_expr(a);
            }
            cones.push(SupportedConeT::SecondOrderConeT(c.norm_args.len() + 1));
        }

        // rotated cones, lowered: ||(sqrt2 * args, a - b)|| <= a + b
        for c in &self.rsoc {
            rows.push_expr(&c.a.clone().add(&c.b));
            for a in &c.args {
                rows.push_expr(&a.clone().scale(std::f64::consts::SQRT_2));
            }
            rows.push_expr(&c.a.clone().sub(&c.b));
            cones.push(SupportedConeT::SecondOrderConeT(c.args.len() + 2));
        }

        // exponential cones: (t, 1, s)
        for c in &self.exp {
            rows.push_expr(&c.t);
            rows.push_expr(&LinExpr::constant(1.0));
            rows.push_expr(&c.s);
            cones.push(SupportedConeT::ExponentialConeT());
        }

        let (a_mat, b_vec) = rows.into_csc();
        let p = CscMatrix::zeros((n, n));
        let mut q = vec![0.0f64; n];
        for &(v, c) in &self.objective.terms {
            q[v.0] -= c; // backend minimizes
        }

        let settings = DefaultSettingsBuilder::default()
            .verbose(opts.verbose)
            .max_iter(opts.max_iter)
            .tol_feas(opts.feas_tol)
            .tol_gap_abs(opts.gap_tol)
            .tol_gap_rel(opts.gap_tol)
            .build()
            .map_err(|e| ConicError::Backend(format!("settings: {e:?}")))?;
        let mut solver = DefaultSolver::new(&p, &q, &a_mat, &b_vec, &cones, settings)
            .map_err(|e| ConicError::Backend(format!("setup: {e:?}")))?;
        solver.solve();
        let sol = &solver.solution;

        let status = match sol.status {
            SolverStatus::Solved | SolverStatus::AlmostSolved => {
                // Accept only if the IR's own feasibility check concurs.
                if self.max_violation(&sol.x) <= 10.0 * opts.feas_tol {
                    SolveStatus::Optimal
                } else {
                    SolveStatus::NumericalLimit
                }
            }
            SolverStatus::PrimalInfeasible | SolverStatus::AlmostPrimalInfeasible => {
                SolveStatus::Infeasible
            }
            SolverStatus::DualInfeasible | SolverStatus::AlmostDualInfeasible => {
                SolveStatus::Unbounded
            }
            SolverStatus::MaxIterations
            | SolverStatus::MaxTime
            | SolverStatus::NumericalError
            | SolverStatus::InsufficientProgress => SolveStatus::NumericalLimit,
            other => return Err(ConicError::Backend(format!("unexpected status {other:?}"))),
        };

        let backend = format!("{:?}", sol.status);
        if status == SolveStatus::Optimal {
            let objective = self.objective.eval(&sol.x);
            Ok(SolveOutcome { status, values: Some(sol.x.clone()), objective, backend })
        } else {
            Ok(SolveOutcome { status, values: None, objective: f64::NAN, backend })
        }
    }
}

fn expr_scale(e: &LinExpr, x: &[f64]) -> f64 {
    e.constant.abs()
        + e.terms.iter().map(|&(v, c)| (c * x[v.0]).abs()).sum::<f64>()
}

/// Row-wise builder for the backend's `A x + s = b` data.
struct RowAccum {
    n_cols: usize,
    triplets: Vec<(usize, usize, f64)>, // (row, col, value) of A
    b: Vec<f64>,
}

impl RowAccum {
    fn new(n_cols: usize) -> Self {
        RowAccum { n_cols, triplets: Vec::new(), b: Vec::new() }
    }

    /// Appends a row with slack `s_row = expr`, i.e. `A_row = -coeffs`,
    /// `b_row = constant`.
    fn push_expr(&mut self, e: &LinExpr) {
        let row = self.b.len();
        for &(v, c) in &e.terms {
            if c != 0.0 {
                self.triplets.push((row, v.0, -c));
            }
        }
        self.b.push(e.constant);
    }

    fn into_csc(mut self) -> (CscMatrix<f64>, Vec<f64>) {
        self.triplets.sort_by_key(|&(r, c, _)| (c, r));
        let mut colptr = Vec::with_capacity(self.n_cols + 1);
        colptr.push(0usize);
        let mut rowval: Vec<usize> = Vec::with_capacity(self.triplets.len());
        let mut nzval: Vec<f64> = Vec::with_capacity(self.triplets.len());
        let mut it = self.triplets.iter().peekable();
        for col in 0..self.n_cols {
            let col_start = rowval.len();
            while let Some(&&(r, c, v)) = it.peek() {
                if c != col {
                    break;
                }
                it.next();
                if rowval.len() > col_start && *rowval.last().unwrap() == r {
                    *nzval.last_mut().unwrap() += v;
                } else {
                    rowval.push(r);
                    nzval.push(v);
                }
            }
            colptr.push(rowval.len());
        }
        let m = self.b.len();
        (CscMatrix::new(m, self.n_cols, colptr, rowval, nzval), self.b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solve(p: &ConvexProgram) -> SolveOutcome {
        p.solve(&SolveOpts::default()).unwrap()
    }

    #[test]
    fn linear_box() {
        let mut p = ConvexProgram::new();
        let x = p.add_variable("x", None, Some(3.0));
        p.set_objective(LinExpr::var(x));
        let out = solve(&p);
        assert_eq!(out.status, SolveStatus::Optimal);
        assert!((out.objective - 3.0).abs() < 1e-7);
    }

    #[test]
    fn log_epigraph_fixed_argument() {
        let mut p = ConvexProgram::new();
        let t = p.add_variable("t", None, None);
        let s = p.add_variable("s", None, None);
        p.add_affine_eq(LinExpr::var(s).add_const(-5.0)).unwrap();
        p.add_log_epigraph(LinExpr::var(t), LinExpr::var(s)).unwrap();
        p.set_objective(LinExpr::var(t));
        let out = solve(&p);
        assert_eq!(out.status, SolveStatus::Optimal);
        assert!((out.objective - 5f64.ln()).abs() < 1e-7);
    }

    #[test]
    fn log_epigraph_chain() {
        // maximize t s.t. t <= ln(x), x <= e^2
        let mut p = ConvexProgram::new();
        let t = p.add_variable("t", None, None);
        let x = p.add_variable("x", None, Some(std::f64::consts::E.powi(2)));
        p.add_log_epigraph(LinExpr::var(t), LinExpr::var(x)).unwrap();
        p.set_objective(LinExpr::var(t));
        let out = solve(&p);
        assert_eq!(out.status, SolveStatus::Optimal);
        assert!((out.objective - 2.0).abs() < 1e-7);
    }

    #[test]
    fn unit_ball_support() {
        let mut p = ConvexProgram::new();
        let x1 = p.add_variable("x1", None, None);
        let x2 = p.add_variable("x2", None, None);
        p.add_soc(
            vec![LinExpr::var(x1), LinExpr::var(x2)],
            LinExpr::constant(1.0),
        )
        .unwrap();
        p.set_objective(LinExpr::var(x1));
        let out = solve(&p);
        assert_eq!(out.status, SolveStatus::Optimal);
        assert!((out.objective - 1.0).abs() < 1e-7);
    }

    #[test]
    fn rotated_cone_optimum() {
        // minimize a+b s.t. ||(1,1)||^2 <= 2ab, a = b  ->  a = b = 1
        let mut p = ConvexProgram::new();
        let a = p.add_variable("a", None, None);
        let b = p.add_variable("b", None, None);
        p.add_rsoc(
            vec![LinExpr::constant(1.0), LinExpr::constant(1.0)],
            LinExpr::var(a),
            LinExpr::var(b),
        )
        .unwrap();
        p.add_affine_eq(LinExpr::var(a).sub(&LinExpr::var(b))).unwrap();
        p.set_objective(LinExpr::var(a).add(&LinExpr::var(b)).scale(-1.0));
        let out = solve(&p);
        assert_eq!(out.status, SolveStatus::Optimal);
        assert!((out.value(a) - 1.0).abs() < 1e-6);
        assert!((out.value(b) - 1.0).abs() < 1e-6);
    }

    #[test]
    fn rsoc_rows_recorded() {
        let mut p = ConvexProgram::new();
        let th = p.add_variable("theta", Some(0.0), None);
        let b = p.add_variable("b", None, None);
        let id = p
            .add_rsoc(
                vec![LinExpr::constant(0.3), LinExpr::constant(-0.4)],
                LinExpr::var(th).scale(0.5).add_const(0.5),
                LinExpr::var(b),
            )
            .unwrap();
        assert_eq!(id, ConstraintId::Rsoc(0));
        assert_eq!(p.counts().2, 1);
        assert!(p.dump().contains("rsoc"));
    }

    #[test]
    fn infeasible_and_unbounded() {
        let mut p = ConvexProgram::new();
        let x = p.add_variable("x", Some(1.0), Some(0.0));
        p.set_objective(LinExpr::var(x));
        assert_eq!(solve(&p).status, SolveStatus::Infeasible);

        let mut p = ConvexProgram::new();
        let x = p.add_variable("x", Some(0.0), None);
        p.set_objective(LinExpr::var(x));
        assert_eq!(solve(&p).status, SolveStatus::Unbounded);
    }

    #[test]
    fn shape_errors() {
        let mut p = ConvexProgram::new();
        let x = p.add_variable("x", None, None);
        assert!(p.add_soc(vec![], LinExpr::var(x)).is_err());
        assert!(p.add_affine_eq(LinExpr::term(x, f64::NAN)).is_err());
        let foreign = VarId(7);
        assert!(p.add_affine_ge(LinExpr::var(foreign)).is_err());
    }

    #[test]
    fn optimal_points_verify_feasible() {
        let mut p = ConvexProgram::new();
        let t = p.add_variable("t", None, None);
        let x = p.add_variable("x", Some(0.1), Some(4.0));
        let y = p.add_variable("y", Some(0.0), None);
        p.add_log_epigraph(LinExpr::var(t), LinExpr::var(x)).unwrap();
        p.add_soc(vec![LinExpr::var(x), LinExpr::var(y)], LinExpr::constant(3.0)).unwrap();
        p.add_rsoc(vec![LinExpr::var(t).add_const(1.0)], LinExpr::var(x), LinExpr::var(y))
            .unwrap();
        p.set_objective(LinExpr::var(t).add(&LinExpr::term(y, 0.25)));
        let out = solve(&p);
        assert_eq!(out.status, SolveStatus::Optimal);
        let x = out.values.as_ref().unwrap();
        assert!(p.max_violation(x) <= 10.0 * SolveOpts::default().feas_tol);
    }

    #[test]
    fn deterministic_resolve() {
        let build = || {
            let mut p = ConvexProgram::new();
            let t = p.add_variable("t", None, None);
            let x = p.add_variable("x", Some(0.1), Some(7.0));
            p.add_log_epigraph(LinExpr::var(t), LinExpr::var(x)).unwrap();
            p.set_objective(LinExpr::var(t));
            p
        };
        let a = build().solve(&SolveOpts::default()).unwrap();
        let b = build().solve(&SolveOpts::default()).unwrap();
        assert_eq!(a.values.unwrap(), b.values.unwrap());
        assert_eq!(a.objective.to_bits(), b.objective.to_bits());
    }
}
