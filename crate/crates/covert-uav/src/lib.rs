//! Joint trajectory and power design for dual-UAV covert communication.
//!
//! An aerial base station serves ground users while a friendly aerial jammer
//! degrades the detectors of several ground wardens whose positions are only
//! known up to an uncertainty disc. The library maximizes the minimum average
//! covert rate across users by successive convex approximation: each outer
//! iteration builds a conic subproblem (second-order, rotated and exponential
//! cones) around the previous feasible point and solves it with an
//! interior-point backend.
//!
//! Module map:
//!
//! - [`scenario`]: parameter documents, validation, built-in default scenarios
//! - [`geometry`]: LoS channel gains, user rates, warden SINRs, trajectories
//! - [`detection`]: closed-form detection statistics (DEP, KL divergence,
//!   covertness SINR caps)
//! - [`conic`]: solver-agnostic convex-program IR and the solving contract
//! - [`sca`]: convexified subproblem assembly (linearizations, S-procedure)
//! - [`optimizer`]: the outer loop, benchmark drivers, robust post-checks
//! - [`mc`]: Monte-Carlo and quadrature oracles for every closed form
//! - [`cli`]: the `solve` / `sweep` / `verify` / `defaults` command driver
//!
//! See the crate examples for runnable entry points into each capability.

pub mod cli;
pub mod conic;
pub mod detection;
pub mod geometry;
pub mod mc;
pub mod optimizer;
pub mod sca;
pub mod scenario;

pub use detection::{
    dep_multi, dep_single, gamma_cap_multi, gamma_cap_single, kl_divergence, pinsker_bound,
    reg_lower_gamma, DetectionError, DetectorParams, SlotDetectionInput,
};
pub use geometry::{
    gain_sq, min_avg_rate, user_rate, warden_sinr_multi, warden_sinr_single, GeometryError,
    SlotState, Trajectory,
};
pub use optimizer::{initialize, sca_solve, verify_covertness, ScaOptions, SolveResult};
pub use scenario::{db_to_linear, default_scenario, load_scenario, Scenario, ScenarioError};
