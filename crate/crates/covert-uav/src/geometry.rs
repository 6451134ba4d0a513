//! Deterministic LoS channel gains, user rates and warden SINRs.
//!
//! All operations are pure functions of positions and powers; distances are
//! evaluated in double precision. This module also owns the trajectory CSV
//! interchange format used by the CLI.

use std::io::{Read, Write};

use thiserror::Error;

use crate::scenario::Scenario;

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("degenerate geometry: transmitter and receiver coincide at zero altitude")]
    DegenerateGeometry,
    #[error("trajectory has {got} slots, scenario expects {want}")]
    SlotCount { got: usize, want: usize },
    #[error("slot {slot}: {reason}")]
    InvalidSlot { slot: usize, reason: String },
    #[error("trajectory csv: {0}")]
    Csv(String),
}

pub(crate) fn dist2(a: [f64; 2], b: [f64; 2]) -> f64 {
    (a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2)
}

pub(crate) fn dist(a: [f64; 2], b: [f64; 2]) -> f64 {
    dist2(a, b).sqrt()
}

/// Squared channel gain `ref_gain / (horizontal_dist^2 + alt^2)`.
pub fn gain_sq(
    q_tx: [f64; 2],
    alt: f64,
    q_rx: [f64; 2],
    ref_gain: f64,
) -> Result<f64, GeometryError> {
    let den = dist2(q_tx, q_rx) + alt * alt;
    if den == 0.0 {
        return Err(GeometryError::DegenerateGeometry);
    }
    Ok(ref_gain / den)
}

/// UAV positions and transmit power during one slot.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlotState {
    /// Base-station horizontal position, meters.
    pub q_s: [f64; 2],
    /// Jammer horizontal position, meters.
    pub q_j: [f64; 2],
    /// Base-station transmit power, watts.
    pub p_s: f64,
}

/// Achievable downlink rate of one user, bits/s/Hz.
pub fn user_rate(state: &SlotState, user: [f64; 2], scn: &Scenario) -> Result<f64, GeometryError> {
    let g = gain_sq(state.q_s, scn.s_alt, user, scn.ref_gain)?;
    Ok((1.0 + state.p_s * g / scn.noise_power).log2())
}

/// Warden SINR for a single-antenna detector, evaluated at `warden_pos`.
///
/// The caller decides whether `warden_pos` is the estimate or a point sampled
/// from the uncertainty disc.
pub fn warden_sinr_single(
    state: &SlotState,
    warden_pos: [f64; 2],
    scn: &Scenario,
) -> Result<f64, GeometryError> {
    let g_sw = gain_sq(state.q_s, scn.s_alt, warden_pos, scn.ref_gain)?;
    let g_jw = gain_sq(state.q_j, scn.j_alt, warden_pos, scn.ref_gain)?;
    Ok(state.p_s * g_sw / (scn.p_jam * g_jw + scn.noise_power))
}

/// Warden SINR for a `n_antennas`-element detector.
///
/// Channel vectors have identical entries, so vector norms reduce to
/// `K * |h|^2`.
pub fn warden_sinr_multi(
    state: &SlotState,
    warden_pos: [f64; 2],
    scn: &Scenario,
) -> Result<f64, GeometryError> {
    let k = scn.n_antennas as f64;
    let g_sw = gain_sq(state.q_s, scn.s_alt, warden_pos, scn.ref_gain)?;
    let g_jw = gain_sq(state.q_j, scn.j_alt, warden_pos, scn.ref_gain)?;
    Ok(state.p_s * k * g_sw / (scn.noise_power + scn.p_jam * k * g_jw))
}

/// Per-slot flight and power profile over the whole mission.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub slots: Vec<SlotState>,
}

/// Default slack for endpoint/velocity checks, meters.
pub const TRAJ_TOL: f64 = 1e-9;

impl Trajectory {
    /// Straight constant-speed lines between the scenario endpoints, with a
    /// uniform power profile.
    pub fn straight_line(scn: &Scenario, p_s: f64) -> Self {
        let n = scn.n_slots;
        let slots = (0..n)
            .map(|i| {
                let t = i as f64 / (n - 1) as f64;
                let lerp = |a: [f64; 2], b: [f64; 2]| {
                    [a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])]
                };
                SlotState {
                    q_s: lerp(scn.s_start, scn.s_end),
                    q_j: lerp(scn.j_start, scn.j_end),
                    p_s,
                }
            })
            .collect();
        Trajectory { slots }
    }

    /// Endpoint, velocity and power-box checks, with `tol` meters of slack.
    ///
    /// `require_j_endpoints = false` skips the jammer take-off/landing rows
    /// (used by the hovering benchmark, which has none).
    pub fn validate(
        &self,
        scn: &Scenario,
        require_j_endpoints: bool,
        tol: f64,
    ) -> Result<(), GeometryError> {
        if self.slots.len() != scn.n_slots {
            return Err(GeometryError::SlotCount {
                got: self.slots.len(),
                want: scn.n_slots,
            });
        }
        let bad = |slot: usize, reason: String| GeometryError::InvalidSlot { slot, reason };
        let first = &self.slots[0];
        let last = &self.slots[scn.n_slots - 1];
        if dist(first.q_s, scn.s_start) > tol || dist(last.q_s, scn.s_end) > tol {
            return Err(bad(0, "S endpoint constraint violated".into()));
        }
        if require_j_endpoints
            && (dist(first.q_j, scn.j_start) > tol || dist(last.q_j, scn.j_end) > tol)
        {
            return Err(bad(0, "J endpoint constraint violated".into()));
        }
        for (i, s) in self.slots.iter().enumerate() {
            if !(s.p_s >= -tol && s.p_s <= scn.p_max + tol) {
                return Err(bad(i, format!("power {} outside [0, {}]", s.p_s, scn.p_max)));
            }
        }
        for i in 0..scn.n_slots - 1 {
            let ds = dist(self.slots[i + 1].q_s, self.slots[i].q_s);
            if ds > scn.s_step_max() + tol {
                return Err(bad(i, format!("S displacement {ds} exceeds {}", scn.s_step_max())));
            }
            let dj = dist(self.slots[i + 1].q_j, self.slots[i].q_j);
            if dj > scn.j_step_max() + tol {
                return Err(bad(i, format!("J displacement {dj} exceeds {}", scn.j_step_max())));
            }
        }
        Ok(())
    }

    /// Writes the CSV interchange form: `slot,x_s,y_s,x_j,y_j,p_s_watts`.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<(), GeometryError> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["slot", "x_s", "y_s", "x_j", "y_j", "p_s_watts"])
            .map_err(|e| GeometryError::Csv(e.to_string()))?;
        for (i, s) in self.slots.iter().enumerate() {
            w.write_record([
                (i + 1).to_string(),
                s.q_s[0].to_string(),
                s.q_s[1].to_string(),
                s.q_j[0].to_string(),
                s.q_j[1].to_string(),
                s.p_s.to_string(),
            ])
            .map_err(|e| GeometryError::Csv(e.to_string()))?;
        }
        w.flush().map_err(|e| GeometryError::Csv(e.to_string()))
    }

    /// Parses the CSV interchange form written by [`Trajectory::write_csv`].
    pub fn read_csv<R: Read>(input: R) -> Result<Self, GeometryError> {
        let mut rdr = csv::Reader::from_reader(input);
        let mut slots = Vec::new();
        for rec in rdr.records() {
            let rec = rec.map_err(|e| GeometryError::Csv(e.to_string()))?;
            if rec.len() != 6 {
                return Err(GeometryError::Csv(format!("expected 6 columns, got {}", rec.len())));
            }
            let f = |i: usize| -> Result<f64, GeometryError> {
                rec[i]
                    .parse()
                    .map_err(|e| GeometryError::Csv(format!("column {i}: {e}")))
            };
            slots.push(SlotState {
                q_s: [f(1)?, f(2)?],
                q_j: [f(3)?, f(4)?],
                p_s: f(5)?,
            });
        }
        Ok(Trajectory { slots })
    }
}

/// Minimum over users of the average per-slot rate.
pub fn min_avg_rate(traj: &Trajectory, scn: &Scenario) -> Result<f64, GeometryError> {
    let n = traj.slots.len() as f64;
    let mut min_rate = f64::INFINITY;
    for &user in &scn.users {
        let mut total = 0.0;
        for slot in &traj.slots {
            total += user_rate(slot, user, scn)?;
        }
        min_rate = min_rate.min(total / n);
    }
    Ok(min_rate)
}
