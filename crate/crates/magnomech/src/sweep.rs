//! Full-pipeline evaluation over 1D and 2D parameter grids, with presets
//! matching the reference figures.

use rayon::prelude::*;

use crate::constants::TWO_PI;
use crate::dynamics::{build_diffusion, build_drift, check_stability, solve_lyapunov, StabilityReport};
use crate::error::{Error, Result};
use crate::measures::{CorrelationReport, PAIRS};
use crate::model::{feedback_rates, thermal_occupancy, SystemParams};

/// Default grid resolution per axis.
pub const DEFAULT_GRID: usize = 101;

/// Parameters that can be swept.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepParam {
    DeltaA,
    DeltaBTilde,
    Tau,
    Beta,
    Temperature,
    Xi,
    GGbEff,
}

impl SweepParam {
    pub fn name(self) -> &'static str {
        match self {
            SweepParam::DeltaA => "delta_a",
            SweepParam::DeltaBTilde => "delta_b_tilde",
            SweepParam::Tau => "tau",
            SweepParam::Beta => "beta",
            SweepParam::Temperature => "T",
            SweepParam::Xi => "xi",
            SweepParam::GGbEff => "g_gb_eff",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Ok(match name {
            "delta_a" => SweepParam::DeltaA,
            "delta_b_tilde" => SweepParam::DeltaBTilde,
            "tau" => SweepParam::Tau,
            "beta" => SweepParam::Beta,
            "T" => SweepParam::Temperature,
            "xi" => SweepParam::Xi,
            "g_gb_eff" => SweepParam::GGbEff,
            other => return Err(Error::domain(format!("unknown sweep parameter '{other}'"))),
        })
    }

    /// True for parameters expressed as angular frequencies internally and
    /// ordinary frequencies (Hz) at the user boundary.
    pub fn is_frequency_like(self) -> bool {
        matches!(
            self,
            SweepParam::DeltaA | SweepParam::DeltaBTilde | SweepParam::Xi | SweepParam::GGbEff
        )
    }

    fn apply(self, params: &mut SystemParams, value: f64) {
        match self {
            SweepParam::DeltaA => params.delta_a = value,
            SweepParam::DeltaBTilde => params.delta_b_tilde = value,
            SweepParam::Tau => params.tau = value,
            SweepParam::Beta => params.beta = value,
            SweepParam::Temperature => params.temperature = value,
            SweepParam::Xi => params.xi = value,
            SweepParam::GGbEff => params.g_gb_eff = value,
        }
    }
}

/// One sweep axis, in internal units (rad/s, K, dimensionless), linear scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisSpec {
    pub param: SweepParam,
    pub start: f64,
    pub stop: f64,
    pub points: usize,
}

impl AxisSpec {
    pub fn validate(&self) -> Result<()> {
        if self.points < 2 {
            return Err(Error::domain(format!(
                "axis {} needs at least 2 points, got {}",
                self.param.name(),
                self.points
            )));
        }
        if self.start == self.stop {
            return Err(Error::domain(format!(
                "axis {} has start == stop == {}",
                self.param.name(),
                self.start
            )));
        }
        Ok(())
    }

    pub fn values(&self) -> Vec<f64> {
        let step = (self.stop - self.start) / (self.points - 1) as f64;
        (0..self.points).map(|i| self.start + step * i as f64).collect()
    }
}

/// Per-grid-point outcome. Unstable points carry their stability report and
/// no measures; they are never silently zeroed.
#[derive(Debug, Clone, PartialEq)]
pub struct PointRecord {
    pub stability: StabilityReport,
    /// Minimum symplectic eigenvalue of V (physicality diagnostic), present
    /// only for stable points.
    pub min_symplectic: Option<f64>,
    /// Reports in pair order ab, am, bm; present only for stable points.
    pub reports: Option<[CorrelationReport; 3]>,
}

impl PointRecord {
    pub fn stable(&self) -> bool {
        self.stability.stable
    }
}

/// Result of a 1D or 2D grid sweep, records in row-major order (first axis
/// outer, second axis inner).
#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub axes: Vec<AxisSpec>,
    pub grids: Vec<Vec<f64>>,
    pub records: Vec<PointRecord>,
}

impl SweepResult {
    pub fn record(&self, indices: &[usize]) -> &PointRecord {
        match (self.axes.len(), indices) {
            (1, [i]) => &self.records[*i],
            (2, [i, j]) => &self.records[i * self.grids[1].len() + j],
            _ => panic!("index arity does not match sweep dimensionality"),
        }
    }
}

/// Run the full pipeline at one operating point: feedback rates, thermal
/// occupancies, drift/diffusion, Lyapunov covariance, and the three
/// bipartition reports.
pub fn evaluate_point(params: &SystemParams) -> Result<PointRecord> {
    params.validate()?;
    let rates = feedback_rates(params.gamma_a, params.delta_a, params.tau, params.beta)?;
    let n_a = thermal_occupancy(params.omega_a, params.temperature)?;
    let n_b = thermal_occupancy(params.omega_b, params.temperature)?;
    let n_m = thermal_occupancy(params.omega_m, params.temperature)?;
    let drift = build_drift(params, &rates, params.g_gb_eff);
    let diffusion = build_diffusion(params, &rates, n_a, n_b, n_m)?;
    let stability = check_stability(&drift);
    if !stability.stable {
        return Ok(PointRecord {
            stability,
            min_symplectic: None,
            reports: None,
        });
    }
    let v = solve_lyapunov(&drift, &diffusion)?;
    let full = nalgebra::DMatrix::from_fn(6, 6, |i, j| v.matrix()[(i, j)]);
    let min_symplectic = crate::measures::symplectic_eigenvalues(&full)?
        .into_iter()
        .fold(f64::INFINITY, f64::min);
    let mut reports = Vec::with_capacity(3);
    for pair in PAIRS {
        reports.push(CorrelationReport::compute(&v, pair)?);
    }
    let reports: [CorrelationReport; 3] = reports.try_into().expect("three pairs");
    Ok(PointRecord {
        stability,
        min_symplectic: Some(min_symplectic),
        reports: Some(reports),
    })
}

/// Evaluate the pipeline over a 1- or 2-axis grid. Points are independent and
/// evaluated in parallel; the output order is grid-major regardless of
/// scheduling.
pub fn sweep(base: &SystemParams, axes: &[AxisSpec]) -> Result<SweepResult> {
    if axes.is_empty() || axes.len() > 2 {
        return Err(Error::domain("sweep needs 1 or 2 axes"));
    }
    for axis in axes {
        axis.validate()?;
    }
    if axes.len() == 2 && axes[0].param == axes[1].param {
        return Err(Error::domain("sweep axes must use distinct parameters"));
    }

    let grids: Vec<Vec<f64>> = axes.iter().map(AxisSpec::values).collect();
    let mut points: Vec<SystemParams> = Vec::new();
    match grids.len() {
        1 => {
            for &x in &grids[0] {
                let mut p = *base;
                axes[0].param.apply(&mut p, x);
                points.push(p);
            }
        }
        _ => {
            for &x in &grids[0] {
                for &y in &grids[1] {
                    let mut p = *base;
                    axes[0].param.apply(&mut p, x);
                    axes[1].param.apply(&mut p, y);
                    points.push(p);
                }
            }
        }
    }

    let records: Result<Vec<PointRecord>> =
        points.par_iter().map(evaluate_point).collect();
    Ok(SweepResult {
        axes: axes.to_vec(),
        grids,
        records: records?,
    })
}

/// Named figure presets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigurePreset {
    Fig2,
    Fig3,
    Fig4a,
    Fig4b,
    Fig4c,
    Fig5,
}

impl FigurePreset {
    pub const ALL: [FigurePreset; 6] = [
        FigurePreset::Fig2,
        FigurePreset::Fig3,
        FigurePreset::Fig4a,
        FigurePreset::Fig4b,
        FigurePreset::Fig4c,
        FigurePreset::Fig5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FigurePreset::Fig2 => "fig2",
            FigurePreset::Fig3 => "fig3",
            FigurePreset::Fig4a => "fig4a",
            FigurePreset::Fig4b => "fig4b",
            FigurePreset::Fig4c => "fig4c",
            FigurePreset::Fig5 => "fig5",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Ok(match name {
            "fig2" => FigurePreset::Fig2,
            "fig3" => FigurePreset::Fig3,
            "fig4a" => FigurePreset::Fig4a,
            "fig4b" => FigurePreset::Fig4b,
            "fig4c" => FigurePreset::Fig4c,
            "fig5" => FigurePreset::Fig5,
            other => return Err(Error::domain(format!("unknown figure preset '{other}'"))),
        })
    }
}

/// Base parameters and axes for a figure preset, at the given grid
/// resolution. The tau axes stop at 0.999 to avoid the degenerate psi = 0
/// endpoint.
pub fn figure_preset(preset: FigurePreset, grid: usize) -> (SystemParams, Vec<AxisSpec>) {
    let mut base = SystemParams::defaults();
    let omega_m = base.omega_m;
    let axis = |param, start, stop| AxisSpec { param, start, stop, points: grid };
    match preset {
        FigurePreset::Fig2 => {
            let axes = vec![
                axis(SweepParam::DeltaA, -2.0 * omega_m, 0.0),
                axis(SweepParam::DeltaBTilde, 0.0, 2.0 * omega_m),
            ];
            (base, axes)
        }
        FigurePreset::Fig3 => {
            let axes = vec![
                axis(SweepParam::Tau, 0.0, 0.999),
                axis(SweepParam::Beta, 0.0, TWO_PI),
            ];
            (base, axes)
        }
        FigurePreset::Fig4a => {
            base.g_gb_eff = TWO_PI * 4.8e6;
            base.tau = 0.98;
            (base, vec![axis(SweepParam::Temperature, 0.0, 4.0)])
        }
        FigurePreset::Fig4b => {
            base.g_gb_eff = TWO_PI * 4.8e6;
            base.tau = 0.4;
            (base, vec![axis(SweepParam::Xi, 0.0, 1e7)])
        }
        FigurePreset::Fig4c => {
            base.g_gb_eff = TWO_PI * 4.8e6;
            (base, vec![axis(SweepParam::Tau, 0.0, 0.999)])
        }
        FigurePreset::Fig5 => {
            base.g_gb_eff = TWO_PI * 4.8e6;
            base.tau = 0.98;
            (base, vec![axis(SweepParam::Temperature, 0.0, 4.0)])
        }
    }
}
