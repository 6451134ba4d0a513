//! Small tour of the conic-program IR: a log epigraph, a second-order cone
//! and a rotated cone, each with a known optimum, plus the debug dump.
//!
//! Run with: `cargo run --example conic_modeling`

use covert_uav::conic::{ConvexProgram, LinExpr, SolveOpts};

fn main() {
    // maximize t subject to t <= ln(x), x <= e^2   (optimum: t = 2)
    let mut p = ConvexProgram::new();
    let t = p.add_variable("t", None, None);
    let x = p.add_variable("x", None, Some(std::f64::consts::E.powi(2)));
    p.add_log_epigraph(LinExpr::var(t), LinExpr::var(x)).unwrap();
    p.set_objective(LinExpr::var(t));
    let out = p.solve(&SolveOpts::default()).unwrap();
    println!("log epigraph : t* = {:.9} (expect 2)", out.objective);

    // maximize x1 subject to ||(x1, x2)|| <= 1     (optimum: 1)
    let mut p = ConvexProgram::new();
    let x1 = p.add_variable("x1", None, None);
    let x2 = p.add_variable("x2", None, None);
    p.add_soc(vec![LinExpr::var(x1), LinExpr::var(x2)], LinExpr::constant(1.0)).unwrap();
    p.set_objective(LinExpr::var(x1));
    let out = p.solve(&SolveOpts::default()).unwrap();
    println!("unit ball    : x1* = {:.9} (expect 1)", out.objective);

    // minimize a + b subject to ||(1,1)||^2 <= 2ab, a = b   (optimum: a = b = 1)
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
    let out = p.solve(&SolveOpts::default()).unwrap();
    println!("rotated cone : a* = {:.9}, b* = {:.9} (expect 1, 1)", out.value(a), out.value(b));

    println!("\nIR dump of the last program:\n{}", p.dump());
}
