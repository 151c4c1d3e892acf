//! Distribution-network fault identification via adaptive probability learning.
//!
//! The pipeline has five stages:
//!
//! 1. [`arcsim`] — synthesize labeled six-channel waveform records for four
//!    event categories by integrating an arc-conductance ODE inside a
//!    per-phase equivalent circuit, for a "source" domain and a
//!    parameter-shifted pseudo-field domain.
//! 2. [`wavefeat`] — decompose each channel with a discrete wavelet
//!    transform, extract interpretable component features, and emit a
//!    fixed-length normalized feature vector per record.
//! 3. [`aplcore`] — learn a linear embedding by minimizing source
//!    classification loss plus walker/visit association losses between the
//!    two domains; classify unlabeled records by association mass.
//! 4. [`baselines`] — KNN and polynomial-kernel SVM classifiers over the
//!    same features, for comparison.
//! 5. [`evalharness`] — the two experiment protocols, seeded splits,
//!    repetitions, and F1 reporting.
//!
//! The [`cli`] module wires everything into a single `gridfault` binary.

pub mod aplcore;
pub mod arcsim;
pub mod baselines;
pub mod cli;
pub mod error;
pub mod evalharness;
pub mod seeding;
pub mod wavefeat;

pub use error::{Error, Result};
