//! Sweeps the warden observation count on a desk-scale mission and writes
//! the aggregated CSV, mirroring `covert-uav sweep`.
//!
//! Run with: `cargo run --release --example sweep_observations`

use covert_uav::cli::{parse_sweep_spec, run_sweep, sweep_csv};

fn main() {
    let spec = parse_sweep_spec(
        r#"
axis = "n_obs"
values = [10, 20, 30, 40]
benches = ["proposed"]
mode = "single"

[base]
n_slots = 12
"#,
    )
    .expect("spec");

    let rows = run_sweep(&spec, None);
    print!("{}", sweep_csv(&rows));

    let out = std::path::Path::new("target/sweep_observations");
    std::fs::create_dir_all(out).unwrap();
    std::fs::write(out.join("sweep.csv"), sweep_csv(&rows)).unwrap();
    println!("written to {}", out.join("sweep.csv").display());
}
