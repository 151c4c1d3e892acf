//! Arc conductance dynamics.
//!
//! The arc column is modeled by a first-order energy-balance ODE on the
//! conductance g:
//!
//! ```text
//! dg/dt = (1/tau) * ( |i_f| / (u_o + r_o * |i_f|) - g )
//! ```
//!
//! with time constant `tau`, characteristic voltage `u_o`, and characteristic
//! resistance `r_o`. The step integrator is classical RK4 and samples the
//! fault current at the substep times, so smooth current waveforms integrate
//! at fourth order.

use crate::error::{Error, Result};

/// Conductance floor modeling the extinguished arc, in siemens.
pub const G_FLOOR: f64 = 1e-8;

/// Sampling range for the arc time constant, seconds.
pub const TAU_RANGE: (f64, f64) = (0.2e-3, 0.4e-3);
/// Sampling range for the arc characteristic voltage, volts.
pub const U_O_RANGE: (f64, f64) = (300.0, 4000.0);
/// Sampling range for the arc characteristic resistance, ohms.
pub const R_O_RANGE: (f64, f64) = (0.01, 0.015);

/// Static parameters of one arc.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct ArcParams {
    /// Arc time constant, seconds.
    pub tau: f64,
    /// Arc characteristic voltage, volts.
    pub u_o: f64,
    /// Arc characteristic resistance, ohms.
    pub r_o: f64,
}

impl ArcParams {
    /// Construct parameters, rejecting values outside the sampling ranges.
    pub fn new(tau: f64, u_o: f64, r_o: f64) -> Result<Self> {
        let in_range = |v: f64, (lo, hi): (f64, f64)| v >= lo && v <= hi;
        if !(in_range(tau, TAU_RANGE) && in_range(u_o, U_O_RANGE) && in_range(r_o, R_O_RANGE)) {
            return Err(Error::InvalidParam(format!(
                "arc parameters out of range: tau={tau}, u_o={u_o}, r_o={r_o} \
                 (expected tau in {TAU_RANGE:?} s, u_o in {U_O_RANGE:?} V, r_o in {R_O_RANGE:?} ohm)"
            )));
        }
        Ok(Self { tau, u_o, r_o })
    }

    /// Construct parameters outside the documented ranges. Still requires
    /// strictly positive values.
    pub fn new_unchecked_range(tau: f64, u_o: f64, r_o: f64) -> Result<Self> {
        if tau <= 0.0 || u_o <= 0.0 || r_o <= 0.0 {
            return Err(Error::InvalidParam(
                "arc parameters must be strictly positive".into(),
            ));
        }
        Ok(Self { tau, u_o, r_o })
    }

    /// Stationary conductance for a constant current magnitude.
    pub fn steady_state(&self, current: f64) -> f64 {
        let i = current.abs();
        i / (self.u_o + self.r_o * i)
    }
}

/// Instantaneous arc state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArcState {
    /// Arc conductance, siemens. Never below [`G_FLOOR`].
    pub g: f64,
    /// Simulation time, seconds.
    pub t: f64,
}

impl ArcState {
    pub fn new(g: f64, t: f64) -> Self {
        Self {
            g: g.max(G_FLOOR),
            t,
        }
    }
}

fn slope(g: f64, current: f64, p: &ArcParams) -> f64 {
    (p.steady_state(current) - g) / p.tau
}

/// Advance the arc state by one RK4 step of size `dt`.
///
/// `fault_current` maps absolute time to the instantaneous fault current; it
/// is evaluated at the start, midpoint, and end of the step. The returned
/// conductance is clamped below at [`G_FLOOR`].
pub fn arc_step<F>(state: &ArcState, fault_current: F, p: &ArcParams, dt: f64) -> Result<ArcState>
where
    F: Fn(f64) -> f64,
{
    if dt <= 0.0 {
        return Err(Error::Integration(format!("step size {dt} must be > 0")));
    }
    if dt > p.tau / 10.0 {
        return Err(Error::Integration(format!(
            "step size {dt} exceeds stability bound tau/10 = {}",
            p.tau / 10.0
        )));
    }
    let t = state.t;
    let i0 = fault_current(t);
    let i_half = fault_current(t + dt / 2.0);
    let i1 = fault_current(t + dt);
    if !(i0.is_finite() && i_half.is_finite() && i1.is_finite()) {
        return Err(Error::Integration(format!(
            "non-finite fault current near t={t}"
        )));
    }

    let g = state.g;
    let k1 = slope(g, i0, p);
    let k2 = slope(g + dt / 2.0 * k1, i_half, p);
    let k3 = slope(g + dt / 2.0 * k2, i_half, p);
    let k4 = slope(g + dt * k3, i1, p);
    let g_next = g + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    Ok(ArcState {
        g: g_next.max(G_FLOOR),
        t: t + dt,
    })
}
