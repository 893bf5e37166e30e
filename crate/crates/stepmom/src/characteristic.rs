//! Quantization (characteristic) functions whose zeros are the bound-state
//! roots η_n, in closed form and via two general formulations.
//!
//! All four formulations vanish on the same root set:
//!
//! * [`hermitian_char`]: (1−μ₀)sin(η/(1−μ₀))cos(η/(1+μ₀)) +
//!   (1+μ₀)cos(η/(1−μ₀))sin(η/(1+μ₀))
//! * [`pt_char`]: sin(2η) + μ₀·sinh(2ημ₀)
//! * [`determinant_char`]: the 4×4 boundary-condition determinant, a
//!   positive real multiple of the matching closed form (2η/(1−μ₀²) and
//!   2η respectively) after removing a constant 2i factor
//! * [`transfer_matrix_char`]: the Dirichlet misfit of the ordered
//!   2×2 propagation product, valid for any N-segment profile
//!
//! Only zeros and signs of these values are contractual; overall positive
//! scale factors differ between the formulations.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::core::{wave_numbers, Mode, StepProfile, WellConfig};
use crate::error::{Error, Result};

/// Which formulation produced a characteristic value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CharacteristicKind {
    /// Closed form for the two-segment Hermitian step.
    HermitianClosedForm,
    /// Closed form for the two-segment PT step.
    PtClosedForm,
    /// 4×4 boundary-condition determinant.
    DeterminantForm,
    /// 2×2 transfer-matrix product (N-segment capable).
    TransferMatrixForm,
}

fn check_eta_finite(eta: f64) -> Result<()> {
    if !eta.is_finite() {
        return Err(Error::NonFinite {
            name: "eta",
            value: eta,
        });
    }
    Ok(())
}

/// Hermitian closed-form characteristic. Zeros (η > 0) are the bound
/// states; η = 0 is the trivial root of the null eigenfunction.
pub fn hermitian_char(eta: f64, mu0: f64) -> Result<f64> {
    Mode::Hermitian.validate_mu0(mu0)?;
    check_eta_finite(eta)?;
    let a = eta / (1.0 - mu0);
    let b = eta / (1.0 + mu0);
    Ok((1.0 - mu0) * a.sin() * b.cos() + (1.0 + mu0) * a.cos() * b.sin())
}

/// PT closed-form characteristic. Real-energy bound states are its zeros;
/// the sinh term caps the root set, so only finitely many exist for
/// μ₀ > 0 and none at all for μ₀ above the critical step height.
pub fn pt_char(eta: f64, mu0: f64) -> Result<f64> {
    Mode::PtSymmetric.validate_mu0(mu0)?;
    check_eta_finite(eta)?;
    Ok((2.0 * eta).sin() + mu0 * (2.0 * eta * mu0).sinh())
}

/// Closed form dispatched on mode.
pub fn closed_form(eta: f64, mu0: f64, mode: Mode) -> Result<f64> {
    match mode {
        Mode::Hermitian => hermitian_char(eta, mu0),
        Mode::PtSymmetric => pt_char(eta, mu0),
    }
}

/// 4×4 boundary-condition determinant in dimensionless form.
///
/// Rows: ψ continuity at 0, ψ(−l) = 0, ψ(+l) = 0, ψ' continuity at 0
/// (the last row scaled by l). The raw determinant is 2i times a real
/// quantity and carries an extra factor 2η (times 1/(1−μ₀²) in Hermitian
/// mode) relative to the closed form; both are divided out so the value
/// is real up to roundoff, O(1) over the scan window, and free of the
/// quadratic degeneracy at the trivial root η = 0. Zeros and signs for
/// η > 0 are untouched by the scaling.
pub fn determinant_char(eta: f64, mu0: f64, mode: Mode) -> Result<Complex64> {
    let (kl, kbl) = wave_numbers(eta, mu0, mode)?;
    let i = Complex64::new(0.0, 1.0);
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let m = [
        [one, one, -one, -one],
        [(-i * kl).exp(), (i * kl).exp(), zero, zero],
        [zero, zero, (i * kbl).exp(), (-i * kbl).exp()],
        [kl, -kl, -kbl, kbl],
    ];
    let scale = match mode {
        Mode::Hermitian => 2.0 * eta / (1.0 - mu0 * mu0),
        Mode::PtSymmetric => 2.0 * eta,
    };
    Ok(det4(&m) / (2.0 * i * scale))
}

fn det3(m: &[[Complex64; 3]; 3]) -> Complex64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

fn det4(m: &[[Complex64; 4]; 4]) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for col in 0..4 {
        let mut minor = [[Complex64::new(0.0, 0.0); 3]; 3];
        for (r, row) in m.iter().skip(1).enumerate() {
            let mut c3 = 0;
            for (c, &v) in row.iter().enumerate() {
                if c != col {
                    minor[r][c3] = v;
                    c3 += 1;
                }
            }
        }
        let sign = if col % 2 == 0 { 1.0 } else { -1.0 };
        acc += sign * m[0][col] * det3(&minor);
    }
    acc
}

/// Transfer-matrix characteristic for an N-segment profile.
///
/// `lambda` is the free-space wavenumber √(2mE)/ħ; in segment j the local
/// wavenumber is k_j = λ/α_j and the (ψ, ψ') state propagates by
///
/// ```text
/// | cos(k d)      sin(k d)/k |
/// | -k sin(k d)   cos(k d)   |
/// ```
///
/// with ψ and ψ' continuous at the interfaces. Starting from
/// (ψ, ψ') = (0, 1) at x = −l, the returned value is λ·ψ(l): its zeros in
/// λ are the Dirichlet eigenvalues. For the two-segment step profiles the
/// value is real up to roundoff and a positive multiple of the closed
/// form at η = λl (Hermitian) or η = λl/(1+μ₀²) (PT).
pub fn transfer_matrix_char(
    lambda: f64,
    profile: &StepProfile,
    well: &WellConfig,
) -> Result<Complex64> {
    if !lambda.is_finite() {
        return Err(Error::NonFinite {
            name: "lambda",
            value: lambda,
        });
    }
    if lambda <= 0.0 {
        return Err(Error::NonPositive {
            name: "lambda",
            value: lambda,
        });
    }
    let mut psi = Complex64::new(0.0, 0.0);
    let mut dpsi = Complex64::new(1.0, 0.0);
    for seg in profile.segments(well) {
        if seg.alpha.norm() == 0.0 {
            return Err(Error::InvalidProfile(
                "degenerate segment factor alpha = 0".into(),
            ));
        }
        let k = Complex64::new(lambda, 0.0) / seg.alpha;
        let d = seg.x_end - seg.x_start;
        let kd = k * d;
        let (s, c) = (kd.sin(), kd.cos());
        let new_psi = c * psi + s / k * dpsi;
        let new_dpsi = -k * s * psi + c * dpsi;
        psi = new_psi;
        dpsi = new_dpsi;
    }
    Ok(lambda * psi)
}
