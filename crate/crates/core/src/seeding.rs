//! Deterministic seed derivation.
//!
//! Every stochastic stage derives its own stream from a single run seed so
//! that records, splits, and trainings stay reproducible no matter which
//! subset of the pipeline is re-run.

/// SplitMix64 step; the standard way to expand one u64 seed into a stream.
fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derive a child seed from `base` for the stage named `tag` and index `idx`.
///
/// Different tags and indices give statistically independent streams; the
/// mapping is pure so callers may re-derive at any point.
pub fn derive_seed(base: u64, tag: &str, idx: u64) -> u64 {
    let mut state = base;
    for &b in tag.as_bytes() {
        state ^= splitmix64(&mut state).wrapping_add(b as u64);
    }
    state ^= splitmix64(&mut state).wrapping_add(idx);
    splitmix64(&mut state)
}
