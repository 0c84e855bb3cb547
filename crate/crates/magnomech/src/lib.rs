//! Steady-state quantum correlations of a cavity magnomechanical system with
//! a coherent feedback loop and magnon self-Kerr squeezing.
//!
//! The pipeline is: physical parameters -> feedback-modified rates -> linearized
//! drift/diffusion matrices -> steady-state Lyapunov covariance -> two-mode
//! entanglement (logarithmic negativity), Gaussian steering and steering
//! asymmetry, evaluated at single operating points or over 1D/2D parameter
//! sweeps.

pub mod cli;
pub mod config;
pub mod constants;
pub mod dynamics;
pub mod error;
pub mod io;
pub mod measures;
pub mod model;
pub mod sweep;

pub use error::{Error, Result};
