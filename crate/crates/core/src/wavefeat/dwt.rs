//! Multi-level discrete wavelet transform with periodic boundary handling.
//!
//! The analysis filter slides with stride two over the periodically extended
//! signal, so for an even-length input every level is an orthonormal change
//! of basis: the inverse is the exact adjoint, reconstruction is exact to
//! rounding, and coefficient energy equals signal energy.

use crate::error::{Error, Result};

/// Daubechies-4 scaling (low-pass analysis) filter, 8 taps.
const DB4_LO: [f64; 8] = [
    0.230_377_813_308_855_23,
    0.714_846_570_552_541_5,
    0.630_880_767_929_590_4,
    -0.027_983_769_416_983_85,
    -0.187_034_811_718_881_14,
    0.030_841_381_835_986_965,
    0.032_883_011_666_982_945,
    -0.010_597_401_784_997_278,
];

/// Shortest level input for which the periodized filter rows stay orthonormal.
const MIN_LEVEL_LEN: usize = 2 * DB4_LO.len();

fn db4_hi() -> [f64; 8] {
    let mut g = [0.0; 8];
    for (k, g_k) in g.iter_mut().enumerate() {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        *g_k = sign * DB4_LO[DB4_LO.len() - 1 - k];
    }
    g
}

/// Output of a multi-level decomposition.
///
/// `details[0]` is the finest band (upper half of the spectrum); the last
/// entry is the band just above the approximation.
#[derive(Debug, Clone)]
pub struct DecompositionResult {
    /// Approximation coefficients of the deepest level.
    pub approx: Vec<f64>,
    /// Detail coefficients, finest level first.
    pub details: Vec<Vec<f64>>,
    /// Number of levels in the decomposition.
    pub levels: usize,
    /// Identifier of the analysis wavelet.
    pub wavelet_id: &'static str,
}

impl DecompositionResult {
    /// Length of the signal the decomposition came from.
    pub fn signal_len(&self) -> usize {
        2 * self.details[0].len()
    }

    /// Total coefficient energy (sum of squares over all bands).
    pub fn energy(&self) -> f64 {
        let e_a: f64 = self.approx.iter().map(|c| c * c).sum();
        let e_d: f64 = self
            .details
            .iter()
            .flat_map(|d| d.iter())
            .map(|c| c * c)
            .sum();
        e_a + e_d
    }
}

fn analyze_level(signal: &[f64], lo: &[f64; 8], hi: &[f64; 8]) -> (Vec<f64>, Vec<f64>) {
    let n = signal.len();
    let half = n / 2;
    let mut approx = vec![0.0; half];
    let mut detail = vec![0.0; half];
    for k in 0..half {
        let mut a = 0.0;
        let mut d = 0.0;
        for (m, (&l, &h)) in lo.iter().zip(hi.iter()).enumerate() {
            let x = signal[(2 * k + m) % n];
            a += l * x;
            d += h * x;
        }
        approx[k] = a;
        detail[k] = d;
    }
    (approx, detail)
}

fn synthesize_level(approx: &[f64], detail: &[f64], lo: &[f64; 8], hi: &[f64; 8]) -> Vec<f64> {
    let n = 2 * approx.len();
    let mut signal = vec![0.0; n];
    for k in 0..approx.len() {
        let a = approx[k];
        let d = detail[k];
        for (m, (&l, &h)) in lo.iter().zip(hi.iter()).enumerate() {
            signal[(2 * k + m) % n] += a * l + d * h;
        }
    }
    signal
}

fn check_input(signal: &[f64], levels: usize) -> Result<()> {
    if levels == 0 {
        return Err(Error::Signal("levels must be >= 1".into()));
    }
    if signal.iter().any(|v| !v.is_finite()) {
        return Err(Error::Signal("signal contains non-finite samples".into()));
    }
    let mut len = signal.len();
    for level in 1..=levels {
        if len < MIN_LEVEL_LEN || len % 2 != 0 {
            return Err(Error::Signal(format!(
                "signal too short: level {level} input has {len} samples; \
                 need an even length >= {MIN_LEVEL_LEN} at every level"
            )));
        }
        len /= 2;
    }
    Ok(())
}

/// Decompose `signal` into `levels` detail bands plus one approximation band.
pub fn dwt(signal: &[f64], levels: usize) -> Result<DecompositionResult> {
    check_input(signal, levels)?;
    let hi = db4_hi();
    let mut details = Vec::with_capacity(levels);
    let mut current = signal.to_vec();
    for _ in 0..levels {
        let (a, d) = analyze_level(&current, &DB4_LO, &hi);
        details.push(d);
        current = a;
    }
    Ok(DecompositionResult {
        approx: current,
        details,
        levels,
        wavelet_id: "db4",
    })
}

/// Invert a decomposition back to the time domain.
pub fn idwt(dec: &DecompositionResult) -> Vec<f64> {
    let hi = db4_hi();
    let mut current = dec.approx.clone();
    for detail in dec.details.iter().rev() {
        current = synthesize_level(&current, detail, &DB4_LO, &hi);
    }
    current
}

/// Reconstruct only the approximation band (all detail bands zeroed).
pub fn reconstruct_approx(dec: &DecompositionResult) -> Vec<f64> {
    let hi = db4_hi();
    let mut current = dec.approx.clone();
    for detail in dec.details.iter().rev() {
        let zeros = vec![0.0; detail.len()];
        current = synthesize_level(&current, &zeros, &DB4_LO, &hi);
    }
    current
}

/// Reconstruct only the detail bands (approximation zeroed).
pub fn reconstruct_details(dec: &DecompositionResult) -> Vec<f64> {
    let hi = db4_hi();
    let mut current = vec![0.0; dec.approx.len()];
    for detail in dec.details.iter().rev() {
        current = synthesize_level(&current, detail, &DB4_LO, &hi);
    }
    current
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_signal(n: usize, seed: u64) -> Vec<f64> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect()
    }

    #[test]
    fn filters_are_orthonormal() {
        let hi = db4_hi();
        let dot_ll: f64 = DB4_LO.iter().map(|c| c * c).sum();
        let dot_lh: f64 = DB4_LO.iter().zip(hi.iter()).map(|(a, b)| a * b).sum();
        assert!((dot_ll - 1.0).abs() < 1e-12);
        assert!(dot_lh.abs() < 1e-12);
    }

    #[test]
    fn constant_signal_has_zero_details() {
        let signal = vec![3.25; 1024];
        let dec = dwt(&signal, 5).unwrap();
        for band in &dec.details {
            for &c in band {
                assert!(c.abs() < 1e-10, "detail coefficient {c} not ~0");
            }
        }
        // approximation carries all the energy
        let e_sig: f64 = signal.iter().map(|v| v * v).sum();
        let e_a: f64 = dec.approx.iter().map(|v| v * v).sum();
        assert!((e_a - e_sig).abs() / e_sig < 1e-9);
    }

    #[test]
    fn round_trip_random_1024() {
        let signal = random_signal(1024, 7);
        let dec = dwt(&signal, 5).unwrap();
        let rec = idwt(&dec);
        let max_err = signal
            .iter()
            .zip(rec.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        assert!(max_err < 1e-9, "round-trip error {max_err}");
    }

    #[test]
    fn energy_is_preserved() {
        let signal = random_signal(1024, 11);
        let dec = dwt(&signal, 5).unwrap();
        let e_sig: f64 = signal.iter().map(|v| v * v).sum();
        let rel = (dec.energy() - e_sig).abs() / e_sig;
        assert!(rel < 1e-9, "energy relative error {rel}");
    }

    #[test]
    fn band_reconstructions_sum_to_signal() {
        let signal = random_signal(1280, 3);
        let dec = dwt(&signal, 4).unwrap();
        let approx = reconstruct_approx(&dec);
        let detail = reconstruct_details(&dec);
        for i in 0..signal.len() {
            assert!((approx[i] + detail[i] - signal[i]).abs() < 1e-9);
        }
    }

    #[test]
    fn too_short_signal_is_rejected() {
        let signal = vec![1.0; 8];
        assert!(dwt(&signal, 1).is_err());
    }

    #[test]
    fn odd_level_length_is_rejected() {
        // 144 = 16 * 9: level 5 would need 9 -> error before that
        let signal = vec![1.0; 144];
        assert!(dwt(&signal, 5).is_err());
    }

    #[test]
    fn non_finite_samples_are_rejected() {
        let mut signal = vec![0.0; 64];
        signal[10] = f64::NAN;
        assert!(dwt(&signal, 1).is_err());
    }

    #[test]
    fn zero_levels_is_rejected() {
        let signal = vec![1.0; 64];
        assert!(dwt(&signal, 0).is_err());
    }
}
