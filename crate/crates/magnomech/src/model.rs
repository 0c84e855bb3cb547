//! Physical parameters of the three-mode system and the mean-field
//! (steady-state amplitude) layer.
//!
//! All quantities are held in coherent units: angular frequencies and rates in
//! rad/s, temperature in kelvin, couplings in rad/s. Configuration files speak
//! ordinary frequencies (Hz); conversion happens at the config boundary.

use num_complex::Complex64;

use crate::constants::{HBAR, KB, TWO_PI};
use crate::error::{Error, Result};

/// Warn when the mechanical quality factor omega_m/gamma_m drops below this.
pub const MIN_MECHANICAL_Q: f64 = 100.0;

/// All physical rates, frequencies and couplings of the photon-magnon-phonon
/// system plus the feedback-loop and self-Kerr parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemParams {
    /// Cavity resonance, rad/s.
    pub omega_a: f64,
    /// Magnon resonance, rad/s.
    pub omega_b: f64,
    /// Mechanical resonance, rad/s.
    pub omega_m: f64,
    /// Cavity amplitude decay rate, rad/s.
    pub gamma_a: f64,
    /// Magnon dissipation rate, rad/s.
    pub gamma_b: f64,
    /// Mechanical damping rate, rad/s.
    pub gamma_m: f64,
    /// Magnon-photon coupling, rad/s.
    pub g_ga: f64,
    /// Effective magnomechanical coupling magnitude, rad/s.
    pub g_gb_eff: f64,
    /// Magnon self-Kerr coefficient, rad/s.
    pub xi: f64,
    /// Cavity-drive detuning, rad/s. May be any real value.
    pub delta_a: f64,
    /// Effective magnon-drive detuning, rad/s, treated as a real tunable input.
    pub delta_b_tilde: f64,
    /// Bath temperature, K.
    pub temperature: f64,
    /// Feedback beam-splitter reflectivity, in [0, 1].
    pub tau: f64,
    /// Feedback phase, radians.
    pub beta: f64,
}

impl SystemParams {
    /// The operating point quoted in the source experiments:
    /// omega_a/2pi = 10 GHz, omega_m/2pi = 10 MHz, gamma_m/2pi = 100 Hz,
    /// gamma_a/2pi = gamma_b/2pi = 1 MHz, g_Ga/2pi = G_Gb/2pi = 3.2 MHz,
    /// xi = gamma_a, T = 10 mK, tau = 0.9, beta = pi, Delta_a = -omega_m,
    /// Delta_b_tilde = 0.9 omega_m.
    pub fn defaults() -> Self {
        let omega_m = TWO_PI * 10e6;
        SystemParams {
            omega_a: TWO_PI * 10e9,
            omega_b: TWO_PI * 10e9,
            omega_m,
            gamma_a: TWO_PI * 1e6,
            gamma_b: TWO_PI * 1e6,
            gamma_m: TWO_PI * 100.0,
            g_ga: TWO_PI * 3.2e6,
            g_gb_eff: TWO_PI * 3.2e6,
            xi: TWO_PI * 1e6,
            delta_a: -omega_m,
            delta_b_tilde: 0.9 * omega_m,
            temperature: 10e-3,
            tau: 0.9,
            beta: std::f64::consts::PI,
        }
    }

    /// Hard invariants: finite values, non-negative rates/frequencies
    /// (detunings excepted), tau in [0, 1], T >= 0.
    pub fn validate(&self) -> Result<()> {
        let named = [
            ("omega_a", self.omega_a),
            ("omega_b", self.omega_b),
            ("omega_m", self.omega_m),
            ("gamma_a", self.gamma_a),
            ("gamma_b", self.gamma_b),
            ("gamma_m", self.gamma_m),
            ("g_ga", self.g_ga),
            ("g_gb_eff", self.g_gb_eff),
            ("xi", self.xi),
            ("T", self.temperature),
        ];
        for (name, v) in named {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::domain(format!(
                    "{name} must be finite and non-negative, got {v}"
                )));
            }
        }
        for (name, v) in [("delta_a", self.delta_a), ("delta_b_tilde", self.delta_b_tilde), ("beta", self.beta)] {
            if !v.is_finite() {
                return Err(Error::domain(format!("{name} must be finite, got {v}")));
            }
        }
        if !(0.0..=1.0).contains(&self.tau) {
            return Err(Error::domain(format!("tau must be in [0, 1], got {}", self.tau)));
        }
        Ok(())
    }

    /// Soft diagnostics, currently the mechanical-quality-factor check needed
    /// for the Markovian noise model.
    pub fn warnings(&self) -> Vec<String> {
        let mut w = Vec::new();
        if self.gamma_m > 0.0 && self.omega_m / self.gamma_m < MIN_MECHANICAL_Q {
            w.push(format!(
                "mechanical quality factor omega_m/gamma_m = {:.3} is below {}; the Markovian noise model is questionable",
                self.omega_m / self.gamma_m,
                MIN_MECHANICAL_Q
            ));
        }
        w
    }
}

/// Parameters of the magnon drive chain used to derive the Rabi frequency and
/// the mean-field amplitudes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DriveParams {
    /// Drive magnetic field amplitude, T.
    pub b0: f64,
    /// YIG sphere diameter, m.
    pub sphere_diameter: f64,
    /// Spin density, m^-3.
    pub rho_spin: f64,
    /// Gyromagnetic ratio, rad/s per tesla.
    pub kappa_gyro: f64,
    /// Single-magnon magnomechanical coupling, rad/s.
    pub g_gb_single: f64,
    /// Cavity drive amplitude, rad/s-equivalent. No value is quoted for the
    /// reference operating point, so it defaults to zero (magnon drive only).
    pub cavity_drive_amp: f64,
}

impl DriveParams {
    /// Reference drive chain: B0 = 3.9e-5 T, 250 um sphere, YIG spin density,
    /// kappa/2pi = 28 GHz/T, g_gb/2pi = 0.2 Hz, no cavity drive.
    pub fn defaults() -> Self {
        DriveParams {
            b0: 3.9e-5,
            sphere_diameter: 250e-6,
            rho_spin: 4.22e27,
            kappa_gyro: TWO_PI * 28e9,
            g_gb_single: TWO_PI * 0.2,
            cavity_drive_amp: 0.0,
        }
    }
}

/// Feedback-modified cavity rates and beam-splitter factors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FeedbackRates {
    /// Modified cavity decay gamma_a (1 - 2 tau cos beta), rad/s.
    pub gamma_fb: f64,
    /// Effective cavity detuning Delta_a + 2 gamma_a tau sin beta, rad/s.
    pub delta_fb: f64,
    /// Beam-splitter transmission, sqrt(1 - tau^2) for a lossless splitter.
    pub psi: f64,
    /// Input-noise scaling psi^2 |1 - tau e^{i beta}|^2.
    pub noise_factor: f64,
}

/// Mean-field steady state of the driven system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SteadyState {
    pub a_mean: Complex64,
    pub b_mean: Complex64,
    /// Mean mechanical displacement, -(g_gb/omega_m) |<b>|^2.
    pub x_mean: f64,
    /// Effective magnomechanical coupling magnitude sqrt(2) g_gb |<b>|, rad/s.
    pub g_eff: f64,
}

/// How the mean-field amplitudes are obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeanFieldMode {
    /// Solve the coupled 2x2 complex linear system exactly.
    Exact,
    /// Closed form <b> = (i Omega Delta_fb - i psi E) / (g_Ga^2 - Dtilde_b Delta_fb),
    /// valid far from resonance.
    Approximate,
}

/// Mean thermal occupancy 1/(exp(hbar omega / kB T) - 1). Returns exactly 0 at
/// T = 0. Stable for both very large and very small hbar omega / kB T.
pub fn thermal_occupancy(omega: f64, temperature: f64) -> Result<f64> {
    if !(omega > 0.0) {
        return Err(Error::InvalidFrequency(omega));
    }
    if temperature < 0.0 {
        return Err(Error::domain(format!("temperature must be >= 0, got {temperature}")));
    }
    if temperature == 0.0 {
        return Ok(0.0);
    }
    let x = HBAR * omega / (KB * temperature);
    let n = 1.0 / x.exp_m1();
    // exp_m1 overflows to +inf for x > ~709, giving the correct limit 0.
    Ok(if n.is_finite() { n } else { 0.0 })
}

/// Feedback-modified cavity decay, detuning, transmission and noise factor.
pub fn feedback_rates(gamma_a: f64, delta_a: f64, tau: f64, beta: f64) -> Result<FeedbackRates> {
    if !(0.0..=1.0).contains(&tau) {
        return Err(Error::domain(format!("tau must be in [0, 1], got {tau}")));
    }
    let psi = (1.0 - tau * tau).max(0.0).sqrt();
    // |1 - tau e^{i beta}|^2 = 1 + tau^2 - 2 tau cos beta
    let loop_gain = 1.0 + tau * tau - 2.0 * tau * beta.cos();
    Ok(FeedbackRates {
        gamma_fb: gamma_a * (1.0 - 2.0 * tau * beta.cos()),
        delta_fb: delta_a + 2.0 * gamma_a * tau * beta.sin(),
        psi,
        noise_factor: psi * psi * loop_gain,
    })
}

/// Rabi frequency Omega = (sqrt(5)/4) kappa sqrt(N) B0 with
/// N = rho_spin (pi/6) d^3 total spins.
pub fn rabi_frequency(drive: &DriveParams) -> Result<f64> {
    if drive.b0 == 0.0 {
        return Ok(0.0);
    }
    if drive.b0 < 0.0 || drive.sphere_diameter <= 0.0 || drive.rho_spin <= 0.0 {
        return Err(Error::domain(
            "rabi_frequency needs b0 >= 0, sphere_diameter > 0, rho_spin > 0".to_string(),
        ));
    }
    let volume = std::f64::consts::PI / 6.0 * drive.sphere_diameter.powi(3);
    let n_spins = drive.rho_spin * volume;
    Ok(5.0_f64.sqrt() / 4.0 * drive.kappa_gyro * n_spins.sqrt() * drive.b0)
}

/// Effective magnomechanical coupling |i sqrt(2) g_gb <b>| = sqrt(2) g_gb |<b>|.
/// The phase of <b> is rotated away; only the magnitude enters the drift matrix.
pub fn effective_coupling(g_gb_single: f64, b_mean: Complex64) -> f64 {
    std::f64::consts::SQRT_2 * g_gb_single * b_mean.norm()
}

/// Steady-state mean amplitudes of the driven cavity and magnon modes.
pub fn steady_state(
    params: &SystemParams,
    drive: &DriveParams,
    mode: MeanFieldMode,
) -> Result<SteadyState> {
    params.validate()?;
    let rates = feedback_rates(params.gamma_a, params.delta_a, params.tau, params.beta)?;
    let omega_rabi = rabi_frequency(drive)?;
    let drive_amp = drive.cavity_drive_amp;

    let i = Complex64::I;
    let (a_mean, b_mean) = match mode {
        MeanFieldMode::Exact => {
            // i g_Ga a + (i Dtilde_b + gamma_b) b = Omega
            // (i Delta_fb + gamma_fb) a + i g_Ga b = -i psi E
            let m00 = i * params.g_ga;
            let m01 = Complex64::new(params.gamma_b, params.delta_b_tilde);
            let m10 = Complex64::new(rates.gamma_fb, rates.delta_fb);
            let m11 = i * params.g_ga;
            let r0 = Complex64::new(omega_rabi, 0.0);
            let r1 = -i * rates.psi * drive_amp;
            let det = m00 * m11 - m01 * m10;
            let scale = m00.norm() * m11.norm() + m01.norm() * m10.norm();
            if det.norm() <= 1e-14 * scale.max(f64::MIN_POSITIVE) {
                return Err(Error::DegenerateOperatingPoint);
            }
            ((r0 * m11 - m01 * r1) / det, (m00 * r1 - r0 * m10) / det)
        }
        MeanFieldMode::Approximate => {
            let denom = params.g_ga * params.g_ga - params.delta_b_tilde * rates.delta_fb;
            let scale = params.g_ga * params.g_ga
                + (params.delta_b_tilde * rates.delta_fb).abs();
            if denom.abs() <= 1e-12 * scale.max(f64::MIN_POSITIVE) {
                return Err(Error::DegenerateOperatingPoint);
            }
            let b = (i * omega_rabi * rates.delta_fb - i * rates.psi * drive_amp) / denom;
            let a = -(i * params.g_ga * b + i * rates.psi * drive_amp)
                / Complex64::new(rates.gamma_fb, rates.delta_fb);
            (a, b)
        }
    };

    let b_abs2 = b_mean.norm_sqr();
    let x_mean = if params.omega_m > 0.0 {
        -(drive.g_gb_single / params.omega_m) * b_abs2
    } else {
        0.0
    };
    Ok(SteadyState {
        a_mean,
        b_mean,
        x_mean,
        g_eff: effective_coupling(drive.g_gb_single, b_mean),
    })
}
