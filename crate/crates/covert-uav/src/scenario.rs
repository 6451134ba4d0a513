//! Scenario parameters: ingestion, validation and normalization.
//!
//! A scenario document is a flat TOML key-value file. All lengths are meters,
//! powers watts and gains linear after load; logarithmic inputs are accepted
//! through explicit `_db` / `_dbm` suffixed keys and converted at load time.
//! Omitted keys fall back to the built-in defaults (scenario 1).

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid `{field}`: {reason}")]
    Validation { field: &'static str, reason: String },
    #[error("{uav} endpoints unreachable: needs {needed:.3} m but at most {available:.3} m")]
    Reachability {
        uav: &'static str,
        needed: f64,
        available: f64,
    },
}

/// Converts a decibel value to a linear ratio.
///
/// dBm callers subtract 30 first to obtain dBW.
pub fn db_to_linear(value_db: f64) -> f64 {
    10f64.powf(value_db / 10.0)
}

/// Converts dBm to watts.
pub fn dbm_to_watts(value_dbm: f64) -> f64 {
    db_to_linear(value_dbm - 30.0)
}

/// A warden with an estimated position and an uncertainty disc radius.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Warden {
    /// Estimated ground position, meters.
    pub est_pos: [f64; 2],
    /// Estimation error radius, meters.
    pub radius: f64,
}

/// All physical and algorithmic parameters of one problem instance.
///
/// Immutable after load; safe to share read-only across threads.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scenario {
    /// Number of time slots.
    pub n_slots: usize,
    /// Slot duration, seconds.
    pub slot_seconds: f64,
    /// Base-station altitude, meters.
    pub s_alt: f64,
    /// Jammer altitude, meters.
    pub j_alt: f64,
    /// Base-station take-off position, meters.
    pub s_start: [f64; 2],
    /// Base-station landing position, meters.
    pub s_end: [f64; 2],
    /// Jammer take-off position, meters.
    pub j_start: [f64; 2],
    /// Jammer landing position, meters.
    pub j_end: [f64; 2],
    /// Ground user positions, meters.
    pub users: Vec<[f64; 2]>,
    /// Wardens (estimated position + uncertainty radius).
    pub wardens: Vec<Warden>,
    /// Peak transmit power of the base station, watts.
    pub p_max: f64,
    /// Fixed jamming power, watts.
    pub p_jam: f64,
    /// Receiver noise power, watts (linear).
    pub noise_power: f64,
    /// Channel power gain at the reference distance (linear).
    pub ref_gain: f64,
    /// Covertness tolerance, in (0, 1).
    pub epsilon: f64,
    /// Number of warden observations per slot.
    pub n_obs: u32,
    /// Warden antennas.
    pub n_antennas: u32,
    /// Outer-loop convergence tolerance on the objective.
    pub sca_tol: f64,
    /// Maximum base-station speed, m/s.
    pub v_s_max: f64,
    /// Maximum jammer speed, m/s.
    pub v_j_max: f64,
}

impl Scenario {
    /// Reference SNR gain: `ref_gain / noise_power`.
    pub fn gamma0(&self) -> f64 {
        self.ref_gain / self.noise_power
    }

    /// Maximum per-slot displacement of the base station, meters.
    pub fn s_step_max(&self) -> f64 {
        self.v_s_max * self.slot_seconds
    }

    /// Maximum per-slot displacement of the jammer, meters.
    pub fn j_step_max(&self) -> f64 {
        self.v_j_max * self.slot_seconds
    }

    /// Checks every invariant; returns the first violation.
    pub fn validate(&self) -> Result<(), ScenarioError> {
        fn bad(field: &'static str, reason: impl Into<String>) -> ScenarioError {
            ScenarioError::Validation {
                field,
                reason: reason.into(),
            }
        }
        if self.n_slots < 2 {
            return Err(bad("n_slots", "must be at least 2"));
        }
        if !(self.slot_seconds > 0.0) {
            return Err(bad("slot_seconds", "must be positive"));
        }
        if !(self.noise_power > 0.0) {
            return Err(bad("noise_power", "must be positive"));
        }
        for (field, v) in [
            ("s_alt", self.s_alt),
            ("j_alt", self.j_alt),
            ("p_max", self.p_max),
            ("p_jam", self.p_jam),
            ("ref_gain", self.ref_gain),
            ("v_s_max", self.v_s_max),
            ("v_j_max", self.v_j_max),
            ("sca_tol", self.sca_tol),
        ] {
            if !(v >= 0.0) || !v.is_finite() {
                return Err(bad(field, format!("must be finite and nonnegative, got {v}")));
            }
        }
        if !(self.epsilon > 0.0 && self.epsilon < 1.0) {
            return Err(bad("epsilon", format!("must lie in (0, 1), got {}", self.epsilon)));
        }
        if self.users.is_empty() {
            return Err(bad("users", "at least one user required"));
        }
        if self.wardens.is_empty() {
            return Err(bad("wardens", "at least one warden required"));
        }
        for w in &self.wardens {
            if !(w.radius >= 0.0) {
                return Err(bad("wardens", format!("radius must be nonnegative, got {}", w.radius)));
            }
        }
        if self.n_obs < 1 {
            return Err(bad("n_obs", "must be at least 1"));
        }
        if self.n_antennas < 1 {
            return Err(bad("n_antennas", "must be at least 1"));
        }
        let hops = (self.n_slots - 1) as f64;
        for (uav, a, b, reach) in [
            ("S", self.s_start, self.s_end, self.s_step_max() * hops),
            ("J", self.j_start, self.j_end, self.j_step_max() * hops),
        ] {
            let needed = ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2)).sqrt();
            if needed > reach {
                return Err(ScenarioError::Reachability {
                    uav,
                    needed,
                    available: reach,
                });
            }
        }
        Ok(())
    }

    /// Serializes back to the document format accepted by [`load_scenario`].
    pub fn to_document(&self) -> String {
        toml::to_string_pretty(self).expect("scenario serializes")
    }
}

/// Which of the two built-in warden layouts to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Scenario1,
    Scenario2,
}

/// Built-in default scenario.
///
/// Scenario 1 places wardens at (100,0), (300,100), (500,0); scenario 2 at
/// (100,100), (300,0), (500,100). Everything else is shared: three users,
/// 100 s flight split into 50 slots of 2 s, peak power 0.2 W, 0.1 W jamming,
/// -120 dBm noise, -30 dB reference gain, epsilon 0.05, 30 observations.
pub fn default_scenario(variant: Variant) -> Scenario {
    let warden_rows: [[f64; 2]; 3] = match variant {
        Variant::Scenario1 => [[100.0, 0.0], [300.0, 100.0], [500.0, 0.0]],
        Variant::Scenario2 => [[100.0, 100.0], [300.0, 0.0], [500.0, 100.0]],
    };
    let radii = [15.0, 30.0, 15.0];
    Scenario {
        n_slots: 50,
        slot_seconds: 2.0,
        s_alt: 100.0,
        j_alt: 70.0,
        s_start: [-100.0, 100.0],
        s_end: [700.0, 100.0],
        // The jammer corridor is not pinned by the reference parameter set;
        // these defaults run parallel to S on the warden side and are
        // overridable in the document.
        j_start: [-100.0, 0.0],
        j_end: [700.0, 0.0],
        users: vec![[100.0, 200.0], [300.0, 300.0], [500.0, 200.0]],
        wardens: warden_rows
            .iter()
            .zip(radii)
            .map(|(&est_pos, radius)| Warden { est_pos, radius })
            .collect(),
        p_max: 0.2,
        p_jam: 0.1,
        noise_power: dbm_to_watts(-120.0),
        ref_gain: db_to_linear(-30.0),
        epsilon: 0.05,
        n_obs: 30,
        n_antennas: 1,
        sca_tol: 0.001,
        v_s_max: 20.0,
        v_j_max: 10.0,
    }
}

/// Raw document schema. Every key is optional; omitted keys take the
/// scenario-1 defaults. Logarithmic alternates (`noise_power_dbm`,
/// `ref_gain_db`) may be given instead of the linear keys, not in addition.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScenarioDoc {
    n_slots: Option<usize>,
    slot_seconds: Option<f64>,
    s_alt: Option<f64>,
    j_alt: Option<f64>,
    s_start: Option<[f64; 2]>,
    s_end: Option<[f64; 2]>,
    j_start: Option<[f64; 2]>,
    j_end: Option<[f64; 2]>,
    users: Option<Vec<[f64; 2]>>,
    wardens: Option<Vec<Warden>>,
    p_max: Option<f64>,
    p_jam: Option<f64>,
    noise_power: Option<f64>,
    noise_power_dbm: Option<f64>,
    ref_gain: Option<f64>,
    ref_gain_db: Option<f64>,
    epsilon: Option<f64>,
    n_obs: Option<u32>,
    n_antennas: Option<u32>,
    sca_tol: Option<f64>,
    v_s_max: Option<f64>,
    v_j_max: Option<f64>,
}

/// Parses a scenario document, fills defaults, converts logarithmic fields
/// and validates every invariant.
pub fn load_scenario(document: &str) -> Result<Scenario, ScenarioError> {
    let doc: ScenarioDoc =
        toml::from_str(document).map_err(|e| ScenarioError::Parse(e.to_string()))?;
    let base = default_scenario(Variant::Scenario1);

    let noise_power = match (doc.noise_power, doc.noise_power_dbm) {
        (Some(_), Some(_)) => {
            return Err(ScenarioError::Validation {
                field: "noise_power",
                reason: "give either `noise_power` or `noise_power_dbm`, not both".into(),
            })
        }
        (Some(w), None) => w,
        (None, Some(dbm)) => dbm_to_watts(dbm),
        (None, None) => base.noise_power,
    };
    let ref_gain = match (doc.ref_gain, doc.ref_gain_db) {
        (Some(_), Some(_)) => {
            return Err(ScenarioError::Validation {
                field: "ref_gain",
                reason: "give either `ref_gain` or `ref_gain_db`, not both".into(),
            })
        }
        (Some(g), None) => g,
        (None, Some(db)) => db_to_linear(db),
        (None, None) => base.ref_gain,
    };

    let scn = Scenario {
        n_slots: doc.n_slots.unwrap_or(base.n_slots),
        slot_seconds: doc.slot_seconds.unwrap_or(base.slot_seconds),
        s_alt: doc.s_alt.unwrap_or(base.s_alt),
        j_alt: doc.j_alt.unwrap_or(base.j_alt),
        s_start: doc.s_start.unwrap_or(base.s_start),
        s_end: doc.s_end.unwrap_or(base.s_end),
        j_start: doc.j_start.unwrap_or(base.j_start),
        j_end: doc.j_end.unwrap_or(base.j_end),
        users: doc.users.unwrap_or(base.users),
        wardens: doc.wardens.unwrap_or(base.wardens),
        p_max: doc.p_max.unwrap_or(base.p_max),
        p_jam: doc.p_jam.unwrap_or(base.p_jam),
        noise_power,
        ref_gain,
        epsilon: doc.epsilon.unwrap_or(base.epsilon),
        n_obs: doc.n_obs.unwrap_or(base.n_obs),
        n_antennas: doc.n_antennas.unwrap_or(base.n_antennas),
        sca_tol: doc.sca_tol.unwrap_or(base.sca_tol),
        v_s_max: doc.v_s_max.unwrap_or(base.v_s_max),
        v_j_max: doc.v_j_max.unwrap_or(base.v_j_max),
    };
    scn.validate()?;
    Ok(scn)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn db_conversions() {
        assert_eq!(db_to_linear(0.0), 1.0);
        assert!((db_to_linear(-30.0) - 1e-3).abs() < 1e-18);
        assert!((dbm_to_watts(-120.0) - 1e-15).abs() < 1e-30);
    }

    #[test]
    fn db_is_multiplicative() {
        for (a, b) in [(3.0, 7.0), (-30.0, -90.0), (12.5, -4.25)] {
            let lhs = db_to_linear(a) * db_to_linear(b);
            let rhs = db_to_linear(a + b);
            assert!((lhs / rhs - 1.0).abs() < 1e-12, "{a} {b}");
        }
    }

    #[test]
    fn table_defaults() {
        let s1 = default_scenario(Variant::Scenario1);
        assert_eq!(s1.n_slots, 50);
        assert_eq!(s1.wardens[1].est_pos, [300.0, 100.0]);
        assert_eq!(s1.wardens[1].radius, 30.0);
        assert!((s1.noise_power - 1e-15).abs() < 1e-30);
        assert!((s1.ref_gain - 1e-3).abs() < 1e-18);
        assert_eq!(s1.s_step_max(), 40.0);
        s1.validate().unwrap();

        let s2 = default_scenario(Variant::Scenario2);
        assert_eq!(s2.wardens[1].est_pos, [300.0, 0.0]);
        s2.validate().unwrap();
    }

    #[test]
    fn empty_document_is_scenario1() {
        let scn = load_scenario("").unwrap();
        assert_eq!(scn, default_scenario(Variant::Scenario1));
    }

    #[test]
    fn loads_db_alternates() {
        let scn = load_scenario("noise_power_dbm = -120\nref_gain_db = -30\n").unwrap();
        assert!((scn.noise_power - 1e-15).abs() < 1e-30);
        assert!((scn.ref_gain - 1e-3).abs() < 1e-18);
    }

    #[test]
    fn rejects_conflicting_noise_keys() {
        let err = load_scenario("noise_power = 1e-15\nnoise_power_dbm = -120\n").unwrap_err();
        assert!(matches!(err, ScenarioError::Validation { field: "noise_power", .. }));
    }

    #[test]
    fn rejects_epsilon_out_of_range() {
        let err = load_scenario("epsilon = 1.5").unwrap_err();
        assert!(matches!(err, ScenarioError::Validation { field: "epsilon", .. }));
    }

    #[test]
    fn rejects_unreachable_endpoints() {
        let err = load_scenario("n_slots = 2\nv_s_max = 1.0").unwrap_err();
        assert!(matches!(err, ScenarioError::Reachability { uav: "S", .. }));
    }

    #[test]
    fn hover_endpoints_allowed() {
        let doc = "n_slots = 2\ns_start = [0, 0]\ns_end = [0, 0]\nj_start = [10, 0]\nj_end = [10, 0]";
        let scn = load_scenario(doc).unwrap();
        assert_eq!(scn.n_slots, 2);
    }

    #[test]
    fn rejects_malformed_document() {
        assert!(matches!(load_scenario("n_slots = [["), Err(ScenarioError::Parse(_))));
        assert!(matches!(load_scenario("unknown_key = 1"), Err(ScenarioError::Parse(_))));
    }

    #[test]
    fn document_round_trip() {
        let mut scn = default_scenario(Variant::Scenario2);
        scn.n_slots = 45;
        scn.epsilon = 0.2;
        scn.wardens[0].radius = 7.5;
        scn.validate().unwrap();
        let reparsed = load_scenario(&scn.to_document()).unwrap();
        assert_eq!(scn, reparsed);
    }
}
