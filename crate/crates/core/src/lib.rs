//! Out-of-distribution detection with a discrete-time denoising diffusion
//! model.
//!
//! The crate trains a small noise-prediction U-Net and scores samples with a
//! complexity-corrected likelihood ratio (CCLR): the difference between a
//! low-noise partial ELBO and the full importance-weighted ELBO, both
//! estimated from per-timestep L1 noise-prediction losses.

pub mod checkpoint;
pub mod data;
pub mod denoiser;
pub mod error;
pub mod eval;
pub mod math;
pub mod rng;
pub mod schedule;
pub mod scoring;
pub mod training;

pub mod nn;

pub use error::{Error, Result};
pub use math::Scalar;
