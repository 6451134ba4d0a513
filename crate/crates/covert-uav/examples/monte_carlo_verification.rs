//! Runs the detection verification battery at a reduced trial count and
//! prints one line per case (closed form vs simulated/quadrature oracle).
//!
//! Run with: `cargo run --release --example monte_carlo_verification`

use covert_uav::mc::run_battery;

fn main() {
    let trials = 200_000;
    let report = run_battery(trials, 42).expect("battery");
    println!(
        "{} trials, seed {}: {} cases, {} failed, {} inconclusive",
        report.trials,
        report.seed,
        report.cases.len(),
        report.n_fail,
        report.n_inconclusive
    );
    println!(
        "{:<28} {:>14} {:>14} {:>12} {:>12}",
        "case", "closed form", "estimate", "halfwidth", "verdict"
    );
    for c in &report.cases {
        println!(
            "{:<28} {:>14.6e} {:>14.6e} {:>12.2e} {:>12}",
            c.name,
            c.closed_form,
            c.estimate,
            c.halfwidth,
            format!("{:?}", c.verdict)
        );
    }
    std::process::exit(if report.all_pass() { 0 } else { 4 });
}
