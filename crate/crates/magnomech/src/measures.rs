//! Two-mode reductions of the steady covariance and the Gaussian correlation
//! measures: logarithmic negativity, directional Gaussian steering, steering
//! asymmetry, and the steering classification.
//!
//! Conventions: vacuum quadrature variance 1/2, natural logarithms. A state is
//! physical when every symplectic eigenvalue is >= 1/2.

use nalgebra::{DMatrix, Matrix2, Matrix4};

use crate::dynamics::SteadyCovariance;
use crate::error::{Error, Result};

/// Tiny negative intermediates above this are clamped to zero instead of
/// erroring; anything below it is a genuine physicality failure.
pub const CLAMP_TOL: f64 = -1e-12;

/// Steering/entanglement values below this count as zero for classification.
pub const ZERO_THRESHOLD: f64 = 1e-10;

/// The three bosonic modes, in covariance row order (photon -> rows 0,1;
/// magnon -> 2,3; phonon -> 4,5).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModeLabel {
    Photon,
    Magnon,
    Phonon,
}

impl ModeLabel {
    pub fn row_offset(self) -> usize {
        match self {
            ModeLabel::Photon => 0,
            ModeLabel::Magnon => 2,
            ModeLabel::Phonon => 4,
        }
    }

    pub fn short(self) -> &'static str {
        match self {
            ModeLabel::Photon => "a",
            ModeLabel::Magnon => "b",
            ModeLabel::Phonon => "m",
        }
    }
}

/// The three bipartitions, in output order.
pub const PAIRS: [(ModeLabel, ModeLabel); 3] = [
    (ModeLabel::Photon, ModeLabel::Magnon),
    (ModeLabel::Photon, ModeLabel::Phonon),
    (ModeLabel::Magnon, ModeLabel::Phonon),
];

/// Two-mode covariance in block form [[A, C], [C^T, B]].
#[derive(Debug, Clone, PartialEq)]
pub struct TwoModeCM {
    pub a: Matrix2<f64>,
    pub b: Matrix2<f64>,
    pub c: Matrix2<f64>,
    pub labels: (ModeLabel, ModeLabel),
}

impl TwoModeCM {
    pub fn from_blocks(
        a: Matrix2<f64>,
        b: Matrix2<f64>,
        c: Matrix2<f64>,
        labels: (ModeLabel, ModeLabel),
    ) -> Self {
        TwoModeCM { a, b, c, labels }
    }

    pub fn as_matrix(&self) -> Matrix4<f64> {
        let mut m = Matrix4::zeros();
        m.fixed_view_mut::<2, 2>(0, 0).copy_from(&self.a);
        m.fixed_view_mut::<2, 2>(0, 2).copy_from(&self.c);
        m.fixed_view_mut::<2, 2>(2, 0).copy_from(&self.c.transpose());
        m.fixed_view_mut::<2, 2>(2, 2).copy_from(&self.b);
        m
    }
}

/// Steering direction for a (mode A, mode B) pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SteeringDirection {
    AtoB,
    BtoA,
}

/// Steering classification of an entangled (or separable) pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    NoWay,
    OneWayAtoB,
    OneWayBtoA,
    TwoWay,
    SeparableUnsteerable,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::NoWay => "no-way",
            Classification::OneWayAtoB => "one-way-AtoB",
            Classification::OneWayBtoA => "one-way-BtoA",
            Classification::TwoWay => "two-way",
            Classification::SeparableUnsteerable => "separable-unsteerable",
        }
    }
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which partial-transpose invariant to use in the logarithmic negativity.
/// `Standard` is det A + det B - 2 det C (reproduces the two-mode squeezed
/// vacuum closed form); `PaperDetC` is the det A + det B - det C variant kept
/// for diagnosis only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NegativityForm {
    #[default]
    Standard,
    PaperDetC,
}

/// Per-bipartition correlation summary.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationReport {
    pub pair: (ModeLabel, ModeLabel),
    pub e_n: f64,
    pub s_ab: f64,
    pub s_ba: f64,
    pub s_asym: f64,
    pub classification: Classification,
}

impl CorrelationReport {
    /// Full measure set for one bipartition of the steady covariance.
    pub fn compute(v: &SteadyCovariance, pair: (ModeLabel, ModeLabel)) -> Result<Self> {
        let cm = extract_pair(v, pair)?;
        let e_n = log_negativity(&cm)?;
        let s_ab = gaussian_steering(&cm, SteeringDirection::AtoB)?;
        let s_ba = gaussian_steering(&cm, SteeringDirection::BtoA)?;
        Ok(CorrelationReport {
            pair,
            e_n,
            s_ab,
            s_ba,
            s_asym: steering_asymmetry(s_ab, s_ba)?,
            classification: classify_steering(e_n, s_ab, s_ba),
        })
    }

    pub fn pair_name(&self) -> String {
        format!("{}{}", self.pair.0.short(), self.pair.1.short())
    }
}

/// Extract the 4x4 two-mode covariance for a pair of distinct modes, in label
/// order.
pub fn extract_pair(v: &SteadyCovariance, pair: (ModeLabel, ModeLabel)) -> Result<TwoModeCM> {
    if pair.0 == pair.1 {
        return Err(Error::domain("extract_pair needs two distinct mode labels"));
    }
    let m = v.matrix();
    let (ra, rb) = (pair.0.row_offset(), pair.1.row_offset());
    let block = |r: usize, c: usize| Matrix2::from_fn(|i, j| m[(r + i, c + j)]);
    Ok(TwoModeCM {
        a: block(ra, ra),
        b: block(rb, rb),
        c: block(ra, rb),
        labels: pair,
    })
}

/// Symplectic eigenvalues of a 2n x 2n real symmetric positive matrix: the
/// moduli of the eigenvalues of i Omega sigma (each conjugate pair counted
/// once), sorted ascending. Omega is the direct sum of n copies of
/// [[0, 1], [-1, 0]].
///
/// Computed without a nonsymmetric eigensolve: with sigma = L L^T, the matrix
/// Omega sigma is similar to the antisymmetric L^T Omega L, whose eigenvalue
/// moduli are its singular values (which come in equal pairs).
pub fn symplectic_eigenvalues(sigma: &DMatrix<f64>) -> Result<Vec<f64>> {
    let dim = sigma.nrows();
    if sigma.ncols() != dim || dim % 2 != 0 || dim == 0 || dim > 6 {
        return Err(Error::domain(format!(
            "symplectic_eigenvalues needs a 2n x 2n matrix with n in 1..=3, got {}x{}",
            sigma.nrows(),
            sigma.ncols()
        )));
    }
    let scale = sigma.norm().max(f64::MIN_POSITIVE);
    if (sigma - sigma.transpose()).norm() > 1e-9 * scale {
        return Err(Error::domain("symplectic_eigenvalues needs a symmetric matrix"));
    }
    let sym = nalgebra::SymmetricEigen::new(sigma.clone());
    let mut l = sym.eigenvectors;
    for (j, lam) in sym.eigenvalues.iter().enumerate() {
        if *lam < -1e-9 * scale {
            return Err(Error::Physicality(format!(
                "covariance matrix has negative eigenvalue {lam:e}"
            )));
        }
        let s = lam.max(0.0).sqrt();
        for i in 0..dim {
            l[(i, j)] *= s;
        }
    }
    let mut omega = DMatrix::<f64>::zeros(dim, dim);
    for k in 0..dim / 2 {
        omega[(2 * k, 2 * k + 1)] = 1.0;
        omega[(2 * k + 1, 2 * k)] = -1.0;
    }
    let k = l.transpose() * omega * &l;
    let mut svals: Vec<f64> = k.singular_values().iter().copied().collect();
    svals.sort_by(|x, y| x.partial_cmp(y).unwrap());
    // Singular values of an antisymmetric matrix come in equal pairs.
    Ok(svals.into_iter().step_by(2).collect())
}

fn clamp_non_negative(x: f64, scale: f64) -> Result<f64> {
    if x >= 0.0 {
        Ok(x)
    } else if x >= CLAMP_TOL * scale.max(1.0) {
        Ok(0.0)
    } else {
        Err(Error::Physicality(format!(
            "negative intermediate {x:e} beyond clamp tolerance"
        )))
    }
}

/// Logarithmic negativity E_N = max(0, -ln(2 Lambda_minus)), with
/// Lambda_minus the smallest symplectic eigenvalue of the partially
/// transposed two-mode covariance, evaluated in closed form.
pub fn log_negativity(cm: &TwoModeCM) -> Result<f64> {
    log_negativity_with(cm, NegativityForm::Standard)
}

/// Closed-form logarithmic negativity with a selectable partial-transpose
/// invariant.
pub fn log_negativity_with(cm: &TwoModeCM, form: NegativityForm) -> Result<f64> {
    let det_a = cm.a.determinant();
    let det_b = cm.b.determinant();
    let det_c = cm.c.determinant();
    let det_sigma = cm.as_matrix().determinant();
    let sigma_tilde = match form {
        NegativityForm::Standard => det_a + det_b - 2.0 * det_c,
        NegativityForm::PaperDetC => det_a + det_b - det_c,
    };
    let scale = sigma_tilde.abs().max(det_sigma.abs()).max(1.0);
    let disc = clamp_non_negative(sigma_tilde * sigma_tilde - 4.0 * det_sigma, scale * scale)?;
    let lam_sq = clamp_non_negative((sigma_tilde - disc.sqrt()) / 2.0, scale)?;
    let lam = lam_sq.sqrt();
    if lam <= 0.0 {
        return Err(Error::Physicality(
            "vanishing minimum symplectic eigenvalue of the partial transpose".to_string(),
        ));
    }
    Ok((-(2.0 * lam).ln()).max(0.0))
}

/// Gaussian steering in one direction. For A -> B the steered party's
/// conditional covariance is the Schur complement sigma_bar = B - C^T A^-1 C;
/// the measure is max(0, -sum over { nu : 2 nu < 1 } of ln(2 nu)) over its
/// symplectic eigenvalues, so the vacuum (nu = 1/2) is exactly unsteerable.
pub fn gaussian_steering(cm: &TwoModeCM, direction: SteeringDirection) -> Result<f64> {
    let (conditioning, steered, cross) = match direction {
        SteeringDirection::AtoB => (cm.a, cm.b, cm.c),
        SteeringDirection::BtoA => (cm.b, cm.a, cm.c.transpose()),
    };
    let det_cond = conditioning.determinant();
    if det_cond.abs() < 1e-300 {
        return Err(Error::domain(
            "singular conditioning block in gaussian_steering",
        ));
    }
    let inv = conditioning
        .try_inverse()
        .ok_or_else(|| Error::domain("singular conditioning block in gaussian_steering"))?;
    let schur = steered - cross.transpose() * inv * cross;
    // One steered mode: the single symplectic eigenvalue is sqrt(det).
    let det_schur = clamp_non_negative(schur.determinant(), schur.norm().powi(2).max(1.0))?;
    let nu = det_schur.sqrt();
    if 2.0 * nu < 1.0 {
        if nu <= 0.0 {
            return Err(Error::domain("degenerate conditional state in gaussian_steering"));
        }
        Ok(-(2.0 * nu).ln())
    } else {
        Ok(0.0)
    }
}

/// |S_AtoB - S_BtoA|.
pub fn steering_asymmetry(s_ab: f64, s_ba: f64) -> Result<f64> {
    if s_ab < 0.0 || s_ba < 0.0 {
        return Err(Error::domain("steering values must be non-negative"));
    }
    Ok((s_ab - s_ba).abs())
}

/// Classify the pair by which steering directions are strictly positive.
pub fn classify_steering(e_n: f64, s_ab: f64, s_ba: f64) -> Classification {
    let entangled = e_n > ZERO_THRESHOLD;
    let ab = s_ab > ZERO_THRESHOLD;
    let ba = s_ba > ZERO_THRESHOLD;
    if !entangled {
        Classification::SeparableUnsteerable
    } else {
        match (ab, ba) {
            (false, false) => Classification::NoWay,
            (true, false) => Classification::OneWayAtoB,
            (false, true) => Classification::OneWayBtoA,
            (true, true) => Classification::TwoWay,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::SteadyCovariance;
    use approx::assert_relative_eq;
    use nalgebra::Matrix6;
    use proptest::prelude::*;

    fn vacuum_cm() -> TwoModeCM {
        TwoModeCM::from_blocks(
            Matrix2::identity() * 0.5,
            Matrix2::identity() * 0.5,
            Matrix2::zeros(),
            (ModeLabel::Photon, ModeLabel::Magnon),
        )
    }

    /// Two-mode squeezed vacuum with squeezing r, vacuum variance 1/2.
    fn tmsv(r: f64) -> TwoModeCM {
        let ch = (2.0 * r).cosh() / 2.0;
        let sh = (2.0 * r).sinh() / 2.0;
        TwoModeCM::from_blocks(
            Matrix2::identity() * ch,
            Matrix2::identity() * ch,
            Matrix2::new(sh, 0.0, 0.0, -sh),
            (ModeLabel::Photon, ModeLabel::Magnon),
        )
    }

    #[test]
    fn extract_pair_vacuum() {
        let v = SteadyCovariance(Matrix6::identity() * 0.5);
        for pair in PAIRS {
            let cm = extract_pair(&v, pair).unwrap();
            assert_eq!(cm.a, Matrix2::identity() * 0.5);
            assert_eq!(cm.b, Matrix2::identity() * 0.5);
            assert_eq!(cm.c, Matrix2::zeros());
        }
    }

    #[test]
    fn extract_pair_block_diagonal_has_zero_cross() {
        let mut m = Matrix6::identity() * 0.7;
        m[(0, 1)] = 0.1;
        m[(1, 0)] = 0.1;
        m[(4, 5)] = -0.2;
        m[(5, 4)] = -0.2;
        let v = SteadyCovariance(m);
        for pair in PAIRS {
            assert_eq!(extract_pair(&v, pair).unwrap().c, Matrix2::zeros());
        }
    }

    #[test]
    fn extract_pair_rejects_identical_labels() {
        let v = SteadyCovariance(Matrix6::identity() * 0.5);
        assert!(extract_pair(&v, (ModeLabel::Magnon, ModeLabel::Magnon)).is_err());
    }

    #[test]
    fn extract_pair_respects_label_order() {
        let mut m = Matrix6::identity() * 0.5;
        m[(0, 0)] = 2.0;
        m[(1, 1)] = 2.0;
        let v = SteadyCovariance(m);
        let cm = extract_pair(&v, (ModeLabel::Magnon, ModeLabel::Photon)).unwrap();
        assert_eq!(cm.a, Matrix2::identity() * 0.5);
        assert_eq!(cm.b, Matrix2::identity() * 2.0);
    }

    #[test]
    fn symplectic_vacuum_and_thermal() {
        let vac = DMatrix::from_diagonal_element(2, 2, 0.5);
        assert_relative_eq!(symplectic_eigenvalues(&vac).unwrap()[0], 0.5, max_relative = 1e-12);
        let n = 3.7;
        let th = DMatrix::from_diagonal_element(2, 2, n + 0.5);
        assert_relative_eq!(symplectic_eigenvalues(&th).unwrap()[0], n + 0.5, max_relative = 1e-12);
    }

    #[test]
    fn symplectic_tmsv_is_pure() {
        let cm = tmsv(0.8);
        let m = DMatrix::from_fn(4, 4, |i, j| cm.as_matrix()[(i, j)]);
        let nus = symplectic_eigenvalues(&m).unwrap();
        assert_eq!(nus.len(), 2);
        for nu in nus {
            assert_relative_eq!(nu, 0.5, max_relative = 1e-9);
        }
    }

    #[test]
    fn symplectic_rejects_non_symmetric() {
        let mut m = DMatrix::from_diagonal_element(2, 2, 0.5);
        m[(0, 1)] = 0.3;
        assert!(symplectic_eigenvalues(&m).is_err());
    }

    #[test]
    fn log_negativity_separable_cases() {
        assert_eq!(log_negativity(&vacuum_cm()).unwrap(), 0.0);
        // Any product state has C = 0 and E_N = 0.
        let product = TwoModeCM::from_blocks(
            Matrix2::identity() * 1.3,
            Matrix2::identity() * 0.6,
            Matrix2::zeros(),
            (ModeLabel::Photon, ModeLabel::Phonon),
        );
        assert_eq!(log_negativity(&product).unwrap(), 0.0);
    }

    #[test]
    fn log_negativity_tmsv_closed_form() {
        for r in [0.1, 0.5, 1.0] {
            assert_relative_eq!(log_negativity(&tmsv(r)).unwrap(), 2.0 * r, epsilon = 1e-9);
        }
    }

    /// Brute-force oracle: partially transpose the 4x4 CM explicitly
    /// (Y -> -Y on the second mode) and take -ln of twice the minimum
    /// symplectic eigenvalue.
    fn log_negativity_bruteforce(cm: &TwoModeCM) -> f64 {
        let p = Matrix4::from_diagonal(&nalgebra::Vector4::new(1.0, 1.0, 1.0, -1.0));
        let pt = p * cm.as_matrix() * p;
        let m = DMatrix::from_fn(4, 4, |i, j| pt[(i, j)]);
        let nus = symplectic_eigenvalues(&m).unwrap();
        (-(2.0 * nus[0]).ln()).max(0.0)
    }

    #[test]
    fn log_negativity_matches_bruteforce_on_tmsv() {
        for r in [0.05, 0.3, 0.9] {
            let cm = tmsv(r);
            assert_relative_eq!(
                log_negativity(&cm).unwrap(),
                log_negativity_bruteforce(&cm),
                epsilon = 1e-9
            );
        }
    }

    #[test]
    fn steering_vacuum_is_zero() {
        let cm = vacuum_cm();
        assert_eq!(gaussian_steering(&cm, SteeringDirection::AtoB).unwrap(), 0.0);
        assert_eq!(gaussian_steering(&cm, SteeringDirection::BtoA).unwrap(), 0.0);
    }

    #[test]
    fn steering_tmsv_closed_form() {
        for r in [0.1, 0.5, 1.0] {
            let cm = tmsv(r);
            let expect = (2.0 * r).cosh().ln();
            for dir in [SteeringDirection::AtoB, SteeringDirection::BtoA] {
                assert_relative_eq!(gaussian_steering(&cm, dir).unwrap(), expect, epsilon = 1e-9);
            }
            // One-mode cross-check oracle: (1/2) ln(det A / (4 det sigma)).
            let det_a = cm.a.determinant();
            let det_s = cm.as_matrix().determinant();
            assert_relative_eq!(
                gaussian_steering(&cm, SteeringDirection::AtoB).unwrap(),
                0.5 * (det_a / (4.0 * det_s)).ln(),
                epsilon = 1e-9
            );
        }
    }

    #[test]
    fn asymmetry_and_classification() {
        assert_eq!(steering_asymmetry(0.0, 0.0).unwrap(), 0.0);
        assert_eq!(steering_asymmetry(0.7, 0.7).unwrap(), 0.0);
        assert_relative_eq!(steering_asymmetry(0.9, 0.2).unwrap(), 0.7, epsilon = 1e-15);
        assert!(steering_asymmetry(-0.1, 0.0).is_err());

        assert_eq!(classify_steering(0.5, 0.3, 0.0), Classification::OneWayAtoB);
        assert_eq!(classify_steering(0.5, 0.0, 0.3), Classification::OneWayBtoA);
        assert_eq!(classify_steering(0.5, 0.0, 0.0), Classification::NoWay);
        assert_eq!(classify_steering(0.5, 0.1, 0.3), Classification::TwoWay);
        assert_eq!(classify_steering(0.0, 0.0, 0.0), Classification::SeparableUnsteerable);
    }

    // ---- randomized physical states -------------------------------------

    /// Random single-mode symplectic: rotation * squeeze * rotation.
    fn local_symplectic(theta: f64, r: f64, phi: f64) -> Matrix2<f64> {
        let rot = |t: f64| Matrix2::new(t.cos(), t.sin(), -t.sin(), t.cos());
        rot(theta) * Matrix2::new(r.exp(), 0.0, 0.0, (-r).exp()) * rot(phi)
    }

    /// Beam-splitter symplectic mixing the two modes.
    fn beamsplitter(theta: f64) -> Matrix4<f64> {
        let (c, s) = (theta.cos(), theta.sin());
        let mut m = Matrix4::zeros();
        let i2 = Matrix2::identity();
        m.fixed_view_mut::<2, 2>(0, 0).copy_from(&(i2 * c));
        m.fixed_view_mut::<2, 2>(0, 2).copy_from(&(i2 * s));
        m.fixed_view_mut::<2, 2>(2, 0).copy_from(&(i2 * -s));
        m.fixed_view_mut::<2, 2>(2, 2).copy_from(&(i2 * c));
        m
    }

    fn two_mode_symplectic(p: &[f64; 7]) -> Matrix4<f64> {
        let mut s = Matrix4::zeros();
        s.fixed_view_mut::<2, 2>(0, 0)
            .copy_from(&local_symplectic(p[0], p[1], p[2]));
        s.fixed_view_mut::<2, 2>(2, 2)
            .copy_from(&local_symplectic(p[3], p[4], p[5]));
        beamsplitter(p[6]) * s
    }

    /// Physical random two-mode CM: S diag(a, a, b, b) S^T with a, b >= 1/2
    /// and S symplectic.
    fn random_physical_cm(p: &[f64; 7], na: f64, nb: f64) -> TwoModeCM {
        let s = two_mode_symplectic(p);
        let d = Matrix4::from_diagonal(&nalgebra::Vector4::new(
            na + 0.5,
            na + 0.5,
            nb + 0.5,
            nb + 0.5,
        ));
        let m = s * d * s.transpose();
        let block = |r: usize, c: usize| Matrix2::from_fn(|i, j| m[(r + i, c + j)]);
        TwoModeCM::from_blocks(
            block(0, 0),
            block(2, 2),
            block(0, 2),
            (ModeLabel::Photon, ModeLabel::Magnon),
        )
    }

    proptest! {
        #[test]
        fn steering_bounded_by_entanglement_on_physical_states(
            p in proptest::array::uniform7(-1.5f64..1.5),
            na in 0.0f64..2.0,
            nb in 0.0f64..2.0,
        ) {
            let mut params = p;
            params[1] = params[1].clamp(-1.0, 1.0);
            params[4] = params[4].clamp(-1.0, 1.0);
            let cm = random_physical_cm(&params, na, nb);
            let e = log_negativity(&cm).unwrap();
            for dir in [SteeringDirection::AtoB, SteeringDirection::BtoA] {
                let s = gaussian_steering(&cm, dir).unwrap();
                prop_assert!(s <= e + 1e-9, "steering {} exceeds entanglement {}", s, e);
            }
        }

        #[test]
        fn closed_form_negativity_matches_bruteforce(
            p in proptest::array::uniform7(-1.2f64..1.2),
            na in 0.0f64..2.0,
            nb in 0.0f64..2.0,
        ) {
            let cm = random_physical_cm(&p, na, nb);
            let closed = log_negativity(&cm).unwrap();
            let brute = log_negativity_bruteforce(&cm);
            prop_assert!((closed - brute).abs() <= 1e-9 * (1.0 + closed.abs()));
        }

        #[test]
        fn symplectic_eigenvalues_invariant_under_symplectics(
            p in proptest::array::uniform7(-1.0f64..1.0),
            na in 0.0f64..2.0,
            nb in 0.0f64..2.0,
            q in proptest::array::uniform7(-1.0f64..1.0),
        ) {
            let cm = random_physical_cm(&p, na, nb).as_matrix();
            let s = two_mode_symplectic(&q);
            let transformed = s * cm * s.transpose();
            let to_d = |m: &Matrix4<f64>| DMatrix::from_fn(4, 4, |i, j| m[(i, j)]);
            let nu1 = symplectic_eigenvalues(&to_d(&cm)).unwrap();
            let nu2 = symplectic_eigenvalues(&to_d(&transformed)).unwrap();
            for (a, b) in nu1.iter().zip(nu2.iter()) {
                prop_assert!((a - b).abs() <= 1e-9 * (1.0 + a.abs()));
            }
        }

        #[test]
        fn measures_invariant_under_local_rotations(
            p in proptest::array::uniform7(-1.0f64..1.0),
            na in 0.0f64..2.0,
            nb in 0.0f64..2.0,
            th1 in 0.0f64..6.3,
            th2 in 0.0f64..6.3,
        ) {
            let cm = random_physical_cm(&p, na, nb);
            let rot = |t: f64| Matrix2::new(t.cos(), t.sin(), -t.sin(), t.cos());
            let (r1, r2) = (rot(th1), rot(th2));
            let rotated = TwoModeCM::from_blocks(
                r1 * cm.a * r1.transpose(),
                r2 * cm.b * r2.transpose(),
                r1 * cm.c * r2.transpose(),
                cm.labels,
            );
            let tol = 1e-9;
            prop_assert!((log_negativity(&cm).unwrap() - log_negativity(&rotated).unwrap()).abs() < tol);
            for dir in [SteeringDirection::AtoB, SteeringDirection::BtoA] {
                let s1 = gaussian_steering(&cm, dir).unwrap();
                let s2 = gaussian_steering(&rotated, dir).unwrap();
                prop_assert!((s1 - s2).abs() < tol);
            }
        }
    }
}
