//! Physical constants (CODATA 2018), pinned so tests can assert exact values.

/// Reduced Planck constant, J s.
pub const HBAR: f64 = 1.054571817e-34;

/// Boltzmann constant, J/K.
pub const KB: f64 = 1.380649e-23;

/// 2π, for converting ordinary frequencies (Hz) to angular frequencies (rad/s).
pub const TWO_PI: f64 = 2.0 * std::f64::consts::PI;
