//! Scratch check: estimator drift at increasing trial counts.

use covert_uav::detection::{fa_single, md_single, SlotDetectionInput};
use covert_uav::mc::{simulate_single, McConfig};

fn main() {
    let input = SlotDetectionInput {
        p_s: 0.05,
        p_jam: 0.1,
        gain_sw: 5e-8,
        gain_jw: 1.35e-7,
        noise: 1e-15,
    };
    let gamma = input.p_s * input.gain_sw / (input.p_jam * input.gain_jw + input.noise);
    let fa = fa_single(gamma, 30).unwrap();
    let md = md_single(gamma, 30).unwrap();
    println!("closed: fa={fa:.6} md={md:.6}");
    for (trials, seed) in [(200_000u64, 11u64), (2_000_000, 11), (8_000_000, 12)] {
        let cfg = McConfig { trials, seed, input, n_obs: 30, n_antennas: 1 };
        let est = simulate_single(&cfg);
        println!(
            "trials={trials:>9} seed={seed}: fa={:.6} (d={:+.2e}) md={:.6} (d={:+.2e}) hw={:.2e}",
            est.fa_hat,
            est.fa_hat - fa,
            est.md_hat,
            est.md_hat - md,
            est.ci_halfwidth
        );
    }
}
