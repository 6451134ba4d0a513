//! Tabulates the closed-form detection quantities: DEP against SINR, the
//! covertness caps for several (epsilon, I) pairs, KL divergence and its
//! Pinsker bound.
//!
//! Run with: `cargo run --example detection_curves`

use covert_uav::detection::{
    dep_single, gamma_cap_multi, gamma_cap_single, kl_divergence, pinsker_bound,
};

fn main() {
    let i_obs = 30;
    println!("DEP of the single-antenna detector, I = {i_obs}:");
    println!("{:>12} {:>12}", "gamma", "DEP");
    let mut gamma = 1e-3;
    while gamma <= 10.0 {
        println!("{gamma:>12.5} {:>12.6}", dep_single(gamma, i_obs).unwrap());
        gamma *= 10f64.sqrt();
    }

    println!("\ncovertness SINR caps:");
    println!("{:>8} {:>6} {:>14} {:>14}", "eps", "I", "cap single", "cap multi");
    for eps in [0.01, 0.05, 0.1] {
        for i in [10u32, 30, 100] {
            println!(
                "{eps:>8} {i:>6} {:>14.6e} {:>14.6e}",
                gamma_cap_single(eps, i).unwrap(),
                gamma_cap_multi(eps, i).unwrap()
            );
        }
    }

    println!("\nKL divergence and Pinsker bound, I = {i_obs}:");
    println!("{:>12} {:>14} {:>12}", "gamma", "KL (nats)", "DEP bound");
    for gamma in [1e-3, 1e-2, 0.0185, 0.1, 0.5] {
        let d = kl_divergence(gamma, i_obs).unwrap();
        println!("{gamma:>12.5} {d:>14.6e} {:>12.6}", pinsker_bound(d));
    }
}
