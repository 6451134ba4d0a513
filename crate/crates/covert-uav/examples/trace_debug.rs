use covert_uav::optimizer::{sca_solve, ScaOptions};
use covert_uav::sca::{Bench, Mode};
use covert_uav::scenario::{default_scenario, Variant};

fn main() {
    let mut scn = default_scenario(Variant::Scenario1);
    scn.n_slots = 6;
    scn.v_s_max = 850.0 / (5.0 * scn.slot_seconds);
    scn.v_j_max = 850.0 / (5.0 * scn.slot_seconds);
    let res = sca_solve(&scn, Mode::SingleAntenna, Bench::Proposed, &ScaOptions::default()).unwrap();
    println!("status {:?}", res.status.as_str());
    for r in &res.trace {
        println!("iter {:>2} eta {:+.9} obj {:+.9} [{}] {}ms", r.iteration, r.eta, r.objective, r.solver_status, r.wall_ms);
    }
}
