//! Statistical simulation and estimation for quantum-optical photodetection.
//!
//! This crate models the full chain of a phase-insensitive quantum-optical
//! measurement at desk scale: benchmark single-mode states, detector forward
//! models (imperfect photon counting and random-phase homodyne detection with
//! finite bins), linear-kernel estimators applied to histogram data, and the
//! exact second-order statistics (mean, variance, covariance, correlation) of
//! those estimators via their generating function.
//!
//! The pieces fit together as a pipeline:
//!
//! 1. [`states`] builds photon-number distributions and phase-averaged
//!    quadrature densities for coherent, thermal and squeezed-vacuum states.
//! 2. [`measurement`] maps a state to outcome probabilities for a detector
//!    model (Bernoulli transform for counting, per-bin quadrature for
//!    homodyne).
//! 3. [`estimation`] evaluates linear estimators `A = Σ aₙ kₙ/N` over
//!    histograms and provides closed-form moments, covariances and the
//!    kernel factories (inverse Bernoulli, photocount parity).
//! 4. [`patterns`] constructs pattern functions for Fock-diagonal
//!    reconstruction from random-phase homodyne data, plus the regularized
//!    parity kernel `g_K`.
//! 5. [`montecarlo`] samples seeded experiments (multinomial histograms,
//!    two-stage homodyne events) and repeated-trial ensembles for comparing
//!    empirical estimator statistics against the closed forms.
//! 6. [`cli`] drives batch experiments from JSON configs and writes CSV/JSON
//!    result tables (the `photostat` binary).
//!
//! All value types are immutable after construction and safe to share across
//! threads; trial simulation is embarrassingly parallel with per-trial
//! deterministic seeds.

pub mod cli;
pub mod error;
pub mod estimation;
pub mod measurement;
pub mod montecarlo;
mod numerics;
pub mod oscillator;
pub mod patterns;
pub mod states;

pub use error::{Error, Result};
