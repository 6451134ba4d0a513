//! Runs the proposed scheme against the three benchmarks on a shortened
//! mission and prints the resulting covert-rate ordering.
//!
//! Run with: `cargo run --release --example compare_benchmarks`

use covert_uav::optimizer::{sca_solve, ScaOptions};
use covert_uav::sca::{Bench, Mode};
use covert_uav::scenario::{default_scenario, Variant};

fn main() {
    let mut scn = default_scenario(Variant::Scenario1);
    scn.n_slots = 20;

    println!("{:<10} {:>12} {:>12} {:>6}", "scheme", "rate", "avg power", "iters");
    for bench in [Bench::Proposed, Bench::FixedS, Bench::FixedJ, Bench::HoverJ] {
        let res = sca_solve(&scn, Mode::SingleAntenna, bench, &ScaOptions::default())
            .expect("solve");
        let n = res.final_iterate.traj.slots.len() as f64;
        let avg_p = res.final_iterate.traj.slots.iter().map(|s| s.p_s).sum::<f64>() / n;
        println!(
            "{:<10} {:>12.6} {:>12.6} {:>6}",
            bench.as_str(),
            res.objective(),
            avg_p,
            res.iterations()
        );
    }
}
