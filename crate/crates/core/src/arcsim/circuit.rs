//! Per-phase equivalent circuit with an optional arc branch.
//!
//! Each phase is a Thevenin source behind series R-L impedance feeding a
//! resistive load; the arc connects the load node to ground on the faulted
//! phase. The series current uses trapezoidal discretization while the arc
//! conductance advances by RK4, both at an internal step of 1/(32 fs),
//! decimated to fs.

use super::arc::{arc_step, ArcParams, ArcState, G_FLOOR};
use crate::error::{Error, Result};

/// Conductance assigned to a freshly ignited arc channel, siemens.
const G_IGNITE: f64 = 1e-3;

/// Electrical parameters of the per-phase equivalent circuit.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct CircuitParams {
    /// Phase-to-ground source peak voltage, volts.
    pub source_peak_voltage: f64,
    /// Nominal system frequency, hertz.
    pub system_frequency: f64,
    /// Source resistance, ohms.
    pub source_resistance: f64,
    /// Source inductance, henries.
    pub source_inductance: f64,
    /// Line resistance, ohms.
    pub line_resistance: f64,
    /// Line inductance, henries.
    pub line_inductance: f64,
    /// Load resistance, ohms.
    pub load_resistance: f64,
}

impl Default for CircuitParams {
    /// A 10 kV feeder: phase-ground peak = 10 kV * sqrt(2/3).
    fn default() -> Self {
        Self {
            source_peak_voltage: 10_000.0 * (2.0f64 / 3.0).sqrt(),
            system_frequency: 50.0,
            source_resistance: 0.5,
            source_inductance: 5e-3,
            line_resistance: 1.0,
            line_inductance: 10e-3,
            load_resistance: 100.0,
        }
    }
}

impl CircuitParams {
    pub fn validate(&self) -> Result<()> {
        let fields = [
            self.source_peak_voltage,
            self.system_frequency,
            self.source_resistance,
            self.source_inductance,
            self.line_resistance,
            self.line_inductance,
            self.load_resistance,
        ];
        if fields.iter().any(|&v| !(v > 0.0) || !v.is_finite()) {
            return Err(Error::InvalidParam(
                "all circuit parameters must be positive and finite".into(),
            ));
        }
        Ok(())
    }

    /// Total series resistance source + line, ohms.
    pub fn series_resistance(&self) -> f64 {
        self.source_resistance + self.line_resistance
    }

    /// Total series inductance source + line, henries.
    pub fn series_inductance(&self) -> f64 {
        self.source_inductance + self.line_inductance
    }

    /// Magnitude of the series impedance at system frequency, ohms.
    pub fn series_impedance_mag(&self) -> f64 {
        let omega = 2.0 * std::f64::consts::PI * self.system_frequency;
        let x = omega * self.series_inductance();
        (self.series_resistance().powi(2) + x * x).sqrt()
    }

    /// Peak of the nominal (pre-fault) load current, amperes.
    pub fn nominal_current_peak(&self) -> f64 {
        let omega = 2.0 * std::f64::consts::PI * self.system_frequency;
        let r = self.series_resistance() + self.load_resistance;
        let x = omega * self.series_inductance();
        self.source_peak_voltage / (r * r + x * x).sqrt()
    }
}

/// Arc branch schedule for one phase.
#[derive(Debug, Clone, Copy)]
pub enum ArcSchedule {
    /// No arc on this phase.
    None,
    /// Arc ignites at `t_start`; after `t_clear_earliest` it opens at the
    /// next fault-current zero crossing.
    Transient {
        t_start: f64,
        t_clear_earliest: f64,
        params: ArcParams,
    },
    /// Arc ignites at `t_start` and conducts until the end of the record.
    Permanent { t_start: f64, params: ArcParams },
}

/// Sampled outcome of one phase simulation.
#[derive(Debug, Clone)]
pub struct PhaseTrace {
    /// Line current at the output sampling instants, amperes.
    pub current: Vec<f64>,
    /// Load-node voltage at the output sampling instants, volts.
    pub node_voltage: Vec<f64>,
    /// Arc branch current at the output sampling instants, amperes.
    pub fault_current: Vec<f64>,
}

/// Simulate one phase for `n_samples` output samples at rate `fs`.
///
/// `phase_shift` is the EMF phase in radians. The internal step is
/// 1/(32 fs); output sample `s` is the state at t = s/fs exactly. The
/// series current starts at its pre-fault steady state so records carry no
/// artificial energization transient.
pub fn simulate_phase(
    circuit: &CircuitParams,
    phase_shift: f64,
    schedule: &ArcSchedule,
    fs: f64,
    n_samples: usize,
) -> Result<PhaseTrace> {
    circuit.validate()?;
    if !(fs > 0.0) {
        return Err(Error::InvalidParam(format!("fs {fs} must be positive")));
    }

    let omega = 2.0 * std::f64::consts::PI * circuit.system_frequency;
    let v_pk = circuit.source_peak_voltage;
    let r_series = circuit.series_resistance();
    let l = circuit.series_inductance();
    let r_load = circuit.load_resistance;
    let dt = 1.0 / (32.0 * fs);

    let emf = |t: f64| v_pk * (omega * t + phase_shift).sin();

    // pre-fault steady state
    let r_pre = r_series + r_load;
    let theta = (omega * l).atan2(r_pre);
    let y_mag = 1.0 / (r_pre * r_pre + (omega * l) * (omega * l)).sqrt();
    let mut i = v_pk * y_mag * (phase_shift - theta).sin();

    let mut arc_on = false;
    let mut arc_done = matches!(schedule, ArcSchedule::None);
    let mut arc = ArcState::new(G_FLOOR, 0.0);
    let mut prev_if = 0.0;

    let node_voltage = |i: f64, g: f64| i / (1.0 / r_load + g);

    let mut trace = PhaseTrace {
        current: Vec::with_capacity(n_samples),
        node_voltage: Vec::with_capacity(n_samples),
        fault_current: Vec::with_capacity(n_samples),
    };

    for step in 0..n_samples * 32 {
        let t = step as f64 * dt;
        let g_now = if arc_on { arc.g } else { 0.0 };

        if step % 32 == 0 {
            let v = node_voltage(i, g_now);
            trace.current.push(i);
            trace.node_voltage.push(v);
            trace.fault_current.push(v * g_now);
        }

        // arc lifecycle
        if !arc_on && !arc_done {
            let t_start = match schedule {
                ArcSchedule::Transient { t_start, .. } => *t_start,
                ArcSchedule::Permanent { t_start, .. } => *t_start,
                ArcSchedule::None => f64::INFINITY,
            };
            if t >= t_start {
                arc_on = true;
                arc = ArcState::new(G_IGNITE, t);
                prev_if = node_voltage(i, G_IGNITE) * G_IGNITE;
            }
        }

        let mut i_f = 0.0;
        if arc_on {
            i_f = node_voltage(i, arc.g) * arc.g;
            if let ArcSchedule::Transient {
                t_clear_earliest, ..
            } = schedule
            {
                // scheduled duration elapsed: open at the next current zero
                if t >= *t_clear_earliest && (i_f * prev_if < 0.0 || i_f.abs() < 1e-6) {
                    arc_on = false;
                    arc_done = true;
                    arc = ArcState::new(G_FLOOR, t);
                    i_f = 0.0;
                }
            }
            prev_if = i_f;
        }

        // advance arc conductance, fault current frozen over the substep
        let g_n = if arc_on { arc.g } else { 0.0 };
        let g_next = if arc_on {
            let params = match schedule {
                ArcSchedule::Transient { params, .. } | ArcSchedule::Permanent { params, .. } => {
                    params
                }
                ArcSchedule::None => unreachable!("arc active without schedule"),
            };
            arc = arc_step(&arc, |_| i_f, params, dt)?;
            arc.g
        } else {
            0.0
        };

        // trapezoidal series-current update
        let r_eff = |g: f64| r_series + 1.0 / (1.0 / r_load + g);
        let lhs = l / dt + 0.5 * r_eff(g_next);
        let rhs = i * (l / dt - 0.5 * r_eff(g_n)) + 0.5 * (emf(t) + emf(t + dt));
        i = rhs / lhs;

        if !i.is_finite() {
            return Err(Error::Integration(format!(
                "circuit solve diverged at t={t}"
            )));
        }
    }

    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn healthy_phase_is_steady_sinusoid() {
        let circuit = CircuitParams::default();
        let fs = 4000.0;
        let n = 1280;
        let trace = simulate_phase(&circuit, 0.0, &ArcSchedule::None, fs, n).unwrap();

        let expected_peak = circuit.nominal_current_peak();
        let max_i = trace.current.iter().cloned().fold(0.0f64, |a, b| a.max(b.abs()));
        assert!(
            (max_i - expected_peak).abs() / expected_peak < 0.01,
            "peak {max_i} vs expected {expected_peak}"
        );
        // no startup transient: first and last cycle peaks agree
        let spc = (fs / circuit.system_frequency) as usize;
        let first: f64 = trace.current[..spc].iter().cloned().fold(0.0, |a, b| a.max(b.abs()));
        let last: f64 = trace.current[n - spc..].iter().cloned().fold(0.0, |a, b| a.max(b.abs()));
        assert!((first - last).abs() / last < 1e-3);
        assert!(trace.fault_current.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn permanent_arc_raises_current_until_end() {
        let circuit = CircuitParams::default();
        let fs = 4000.0;
        let n = 1280;
        let params = ArcParams::new(0.3e-3, 1000.0, 0.012).unwrap();
        let schedule = ArcSchedule::Permanent {
            t_start: 4.0 / circuit.system_frequency,
            params,
        };
        let trace = simulate_phase(&circuit, 0.0, &schedule, fs, n).unwrap();

        let nominal = circuit.nominal_current_peak();
        let spc = (fs / circuit.system_frequency) as usize;
        // from inception (cycle 5 to be safe) to the end, per-cycle peak > 3x nominal
        for cycle in 5..16 {
            let seg = &trace.current[cycle * spc..(cycle + 1) * spc];
            let peak = seg.iter().cloned().fold(0.0f64, |a, b| a.max(b.abs()));
            assert!(
                peak > 3.0 * nominal,
                "cycle {cycle} peak {peak} not above 3x nominal {nominal}"
            );
        }
    }

    #[test]
    fn transient_arc_clears_at_zero_crossing() {
        let circuit = CircuitParams::default();
        let fs = 4000.0;
        let n = 1280;
        let period = 1.0 / circuit.system_frequency;
        let params = ArcParams::new(0.25e-3, 800.0, 0.011).unwrap();
        let schedule = ArcSchedule::Transient {
            t_start: 4.0 * period,
            t_clear_earliest: 4.5 * period,
            params,
        };
        let trace = simulate_phase(&circuit, 0.0, &schedule, fs, n).unwrap();

        // fault current vanishes well before the record ends and stays zero
        let spc = (fs / circuit.system_frequency) as usize;
        let tail = &trace.fault_current[8 * spc..];
        assert!(tail.iter().all(|&v| v == 0.0), "arc did not clear");
        // and it did conduct at some point
        let peak_if = trace.fault_current.iter().cloned().fold(0.0f64, |a, b| a.max(b.abs()));
        assert!(peak_if > 10.0, "arc never conducted (peak {peak_if})");
    }

    #[test]
    fn invalid_circuit_is_rejected() {
        let mut circuit = CircuitParams::default();
        circuit.load_resistance = -5.0;
        assert!(simulate_phase(&circuit, 0.0, &ArcSchedule::None, 4000.0, 64).is_err());
    }
}
