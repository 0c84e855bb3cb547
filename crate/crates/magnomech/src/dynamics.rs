//! Linearized fluctuation dynamics: drift and diffusion matrix assembly,
//! stability analysis, and the steady-state Lyapunov solve for the 6x6
//! covariance matrix.
//!
//! Quadrature ordering is (X_a, Y_a, X_b, Y_b, x, y).

use std::io::Write;

use nalgebra::{DMatrix, Matrix6, Vector6};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::model::{FeedbackRates, SystemParams};

/// Relative margin below zero that the largest eigenvalue real part must
/// clear for the matrix to count as stable.
pub const STABILITY_MARGIN: f64 = 1e-9;

/// Relative Frobenius residual bound for the Lyapunov solve.
pub const LYAPUNOV_TOL: f64 = 1e-10;

/// Drift matrix of the linearized quantum Langevin equations.
#[derive(Debug, Clone, PartialEq)]
pub struct DriftMatrix(pub Matrix6<f64>);

/// Diagonal diffusion (noise strength) matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DiffusionMatrix {
    pub diagonal: Vector6<f64>,
}

impl DiffusionMatrix {
    pub fn as_matrix(&self) -> Matrix6<f64> {
        Matrix6::from_diagonal(&self.diagonal)
    }
}

/// Eigenvalue report for the drift matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct StabilityReport {
    pub eigenvalues: [Complex64; 6],
    pub max_real_part: f64,
    pub stable: bool,
}

/// Steady-state covariance matrix of the quadrature fluctuations.
#[derive(Debug, Clone, PartialEq)]
pub struct SteadyCovariance(pub Matrix6<f64>);

impl SteadyCovariance {
    pub fn matrix(&self) -> &Matrix6<f64> {
        &self.0
    }
}

/// Assemble the 6x6 drift matrix:
///
/// ```text
/// [ -g_fb   D_fb    0      g_Ga    0      0   ]
/// [ -D_fb  -g_fb   -g_Ga   0       0      0   ]
/// [  0      g_Ga   -g_b+xi D_b    -G      0   ]
/// [ -g_Ga   0      -D_b   -g_b-xi  0      0   ]
/// [  0      0       0      0       0      w_m ]
/// [  0      0       0      G      -w_m   -g_m ]
/// ```
pub fn build_drift(params: &SystemParams, rates: &FeedbackRates, g_eff: f64) -> DriftMatrix {
    let mut m = Matrix6::zeros();
    m[(0, 0)] = -rates.gamma_fb;
    m[(0, 1)] = rates.delta_fb;
    m[(0, 3)] = params.g_ga;
    m[(1, 0)] = -rates.delta_fb;
    m[(1, 1)] = -rates.gamma_fb;
    m[(1, 2)] = -params.g_ga;
    m[(2, 1)] = params.g_ga;
    m[(2, 2)] = -params.gamma_b + params.xi;
    m[(2, 3)] = params.delta_b_tilde;
    m[(2, 4)] = -g_eff;
    m[(3, 0)] = -params.g_ga;
    m[(3, 2)] = -params.delta_b_tilde;
    m[(3, 3)] = -params.gamma_b - params.xi;
    m[(4, 5)] = params.omega_m;
    m[(5, 3)] = g_eff;
    m[(5, 4)] = -params.omega_m;
    m[(5, 5)] = -params.gamma_m;
    DriftMatrix(m)
}

/// Assemble the diagonal diffusion matrix
/// diag[g_a F (2n_a+1), g_a F (2n_a+1), g_b (2n_b+1), g_b (2n_b+1), 0, g_m (2n_m+1)]
/// with F the feedback noise factor.
pub fn build_diffusion(
    params: &SystemParams,
    rates: &FeedbackRates,
    n_a: f64,
    n_b: f64,
    n_m: f64,
) -> Result<DiffusionMatrix> {
    for (name, n) in [("n_a", n_a), ("n_b", n_b), ("n_m", n_m)] {
        if !(n >= 0.0) {
            return Err(Error::domain(format!("occupancy {name} must be >= 0, got {n}")));
        }
    }
    let cav = params.gamma_a * rates.noise_factor * (2.0 * n_a + 1.0);
    let mag = params.gamma_b * (2.0 * n_b + 1.0);
    let mech = params.gamma_m * (2.0 * n_m + 1.0);
    Ok(DiffusionMatrix {
        diagonal: Vector6::new(cav, cav, mag, mag, 0.0, mech),
    })
}

fn inf_norm(m: &Matrix6<f64>) -> f64 {
    (0..6)
        .map(|i| (0..6).map(|j| m[(i, j)].abs()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// Eigenvalues of the drift matrix and the stability verdict. "Stable" means
/// every real part is below -STABILITY_MARGIN * ||L||_inf, so marginal
/// matrices produced by rounding are not accepted.
pub fn check_stability(drift: &DriftMatrix) -> StabilityReport {
    let eig = drift.0.complex_eigenvalues();
    let mut eigenvalues = [Complex64::new(0.0, 0.0); 6];
    for (dst, src) in eigenvalues.iter_mut().zip(eig.iter()) {
        *dst = *src;
    }
    let max_real_part = eigenvalues.iter().map(|z| z.re).fold(f64::NEG_INFINITY, f64::max);
    let stable = max_real_part < -STABILITY_MARGIN * inf_norm(&drift.0);
    StabilityReport {
        eigenvalues,
        max_real_part,
        stable,
    }
}

/// Column-major vectorization index.
#[inline]
fn vec_idx(row: usize, col: usize) -> usize {
    row + 6 * col
}

/// Solve L V + V L^T + K = 0 for the steady-state covariance V.
///
/// The 36-unknown linear system (I (x) L + L (x) I) vec(V) = -vec(K) is exact
/// at this fixed size; a few iterative-refinement passes push the Frobenius
/// residual below LYAPUNOV_TOL * ||K||_F. The inputs are scaled by 1/||L||_inf
/// first (V is invariant under (cL, cK)).
pub fn solve_lyapunov(drift: &DriftMatrix, diffusion: &DiffusionMatrix) -> Result<SteadyCovariance> {
    let report = check_stability(drift);
    if !report.stable {
        return Err(Error::Unstable {
            max_real_part: report.max_real_part,
        });
    }

    let scale = inf_norm(&drift.0);
    let l = drift.0 / scale;
    let k = diffusion.as_matrix() / scale;
    let k_norm = k.norm();

    let mut system = DMatrix::<f64>::zeros(36, 36);
    for i in 0..6 {
        for j in 0..6 {
            for c in 0..6 {
                // (I (x) L): row (i,j) column (c,j)
                system[(vec_idx(i, j), vec_idx(c, j))] += l[(i, c)];
                // (L (x) I): row (i,j) column (i,c)
                system[(vec_idx(i, j), vec_idx(i, c))] += l[(j, c)];
            }
        }
    }
    let lu = system.lu();

    let solve_rhs = |rhs: &Matrix6<f64>| -> Result<Matrix6<f64>> {
        let mut b = DMatrix::<f64>::zeros(36, 1);
        for i in 0..6 {
            for j in 0..6 {
                b[(vec_idx(i, j), 0)] = -rhs[(i, j)];
            }
        }
        let x = lu.solve(&b).ok_or(Error::DegenerateDynamics)?;
        let mut out = Matrix6::zeros();
        for i in 0..6 {
            for j in 0..6 {
                out[(i, j)] = x[(vec_idx(i, j), 0)];
            }
        }
        Ok(out)
    };

    let mut v = solve_rhs(&k)?;
    v = (v + v.transpose()) / 2.0;
    let bound = LYAPUNOV_TOL * k_norm;
    let mut residual = (l * v + v * l.transpose() + k).norm();
    for _ in 0..4 {
        if residual <= bound {
            break;
        }
        let r = l * v + v * l.transpose() + k;
        let correction = solve_rhs(&r)?;
        v += correction;
        v = (v + v.transpose()) / 2.0;
        residual = (l * v + v * l.transpose() + k).norm();
    }
    if residual > bound {
        return Err(Error::LyapunovResidual { residual, bound });
    }
    Ok(SteadyCovariance(v))
}

/// Plain-text matrix dump (row-major, scientific notation, 17 significant
/// digits) for cross-implementation diffing.
pub fn write_matrix_text<W: Write>(w: &mut W, label: &str, m: &Matrix6<f64>) -> std::io::Result<()> {
    writeln!(w, "# {label}")?;
    for i in 0..6 {
        let row: Vec<String> = (0..6).map(|j| format!("{:.16e}", m[(i, j)])).collect();
        writeln!(w, "{}", row.join(" "))?;
    }
    Ok(())
}
