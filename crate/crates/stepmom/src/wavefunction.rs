//! Eigenfunctions, normalization and probability densities.
//!
//! Bound-state eigenfunctions are sampled from the closed two-branch form
//!
//! ```text
//! psi_n(x) = N_n * (  sin(kbar l) sin(k (x+l))   on -l < x < 0
//!                   , -sin(k l)  sin(kbar (x-l)) on  0 < x < l )
//! ```
//!
//! which satisfies the walls exactly, is continuous at x = 0 by
//! construction, and has continuous derivative precisely at the
//! characteristic roots. The exponential-superposition coefficients
//! (b, c, d) = (B, C, D)/A exist only for residual validation of the
//! boundary-condition system; the sampler never divides by cos(kbar l),
//! so it stays finite where that representation is singular.
//!
//! Normalization is analytic: ∫|sin((s±it)u)|² du integrates to
//! elementary sin/sinh antiderivatives; quadrature is used only as a test
//! oracle. In PT mode N_n is real, which together with kbar = conj(k)
//! makes the eigenfunctions PT-symmetric: psi*(-x) = psi(x).

use num_complex::Complex64;

use crate::core::{
    wave_numbers, EigenState, Mode, SampleKind, SampleMeta, SampledFunction, WellConfig,
};
use crate::error::{Error, Result};

/// Coefficient ratios of the exponential superposition, relative to A.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoefficientSet {
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

/// Representation-conditioning guard for the coefficient routes.
const ROUTE_GUARD: f64 = 1e-8;

/// Coefficient ratios b = B/A, c = C/A, d = D/A at a characteristic root.
///
/// b = −e^{−2iκl} always; c is taken from the derivative-matching route
/// c = (κ cos κl)/(κ̄ cos κ̄l)·e^{−i(κ+κ̄)l} when cos(κ̄l) is
/// well-conditioned, otherwise from the equivalent continuity route
/// c = (1+b)/(1−e^{2iκ̄l}). The two routes are singular on disjoint sets
/// (cos and sin of one argument cannot both vanish), so at least one is
/// always available; [`Error::SingularRepresentation`] is reserved for
/// degenerate inputs where neither is.
pub fn coefficients(eta: f64, mu0: f64, mode: Mode) -> Result<CoefficientSet> {
    let (kl, kbl) = wave_numbers(eta, mu0, mode)?;
    let i = Complex64::new(0.0, 1.0);
    let b = -(-2.0 * i * kl).exp();

    let cos_kbl = kbl.cos();
    let sin_kbl = kbl.sin();
    let c = if cos_kbl.norm() > ROUTE_GUARD && kl != kbl {
        (kl * kl.cos()) / (kbl * cos_kbl) * (-i * (kl + kbl)).exp()
    } else {
        let denom = Complex64::new(1.0, 0.0) - (2.0 * i * kbl).exp();
        if denom.norm() > 2.0 * ROUTE_GUARD {
            (Complex64::new(1.0, 0.0) + b) / denom
        } else if cos_kbl.norm() > ROUTE_GUARD {
            (kl * kl.cos()) / (kbl * cos_kbl) * (-i * (kl + kbl)).exp()
        } else {
            return Err(Error::SingularRepresentation {
                eta,
                cos_abs: cos_kbl.norm(),
                sin_abs: sin_kbl.norm(),
            });
        }
    };
    let d = -c * (2.0 * i * kbl).exp();
    Ok(CoefficientSet { b, c, d })
}

/// Residuals of the four boundary-condition equations for a coefficient
/// set: ψ continuity at 0, ψ(−l) = 0, ψ(+l) = 0, ψ' continuity at 0.
/// All four vanish exactly when η is a characteristic root.
pub fn boundary_residuals(
    eta: f64,
    mu0: f64,
    mode: Mode,
    coeffs: &CoefficientSet,
) -> Result<[f64; 4]> {
    let (kl, kbl) = wave_numbers(eta, mu0, mode)?;
    let i = Complex64::new(0.0, 1.0);
    let one = Complex64::new(1.0, 0.0);
    let CoefficientSet { b, c, d } = *coeffs;
    Ok([
        (b - c - d + one).norm(),
        (b * (i * kl).exp() + (-i * kl).exp()).norm(),
        (c * (i * kbl).exp() + d * (-i * kbl).exp()).norm(),
        (-b * kl - kbl * c + kbl * d + kl).norm(),
    ])
}

/// Momentum eigenfunction φ_𝔭 of the Hermitian step momentum, unit
/// amplitude: e^{i𝔭x/(ħ(1+μ₀))} for x<0, exactly 1 at x=0,
/// e^{i𝔭x/(ħ(1−μ₀))} for x>0. The eigenvalue 𝔭 is real and continuous.
pub fn momentum_eigenfunction(
    p_val: f64,
    mu0: f64,
    mode: Mode,
    grid: &[f64],
    well: &WellConfig,
) -> Result<SampledFunction> {
    if mode != Mode::Hermitian {
        return Err(Error::HermitianOnly {
            op: "momentum_eigenfunction",
        });
    }
    Mode::Hermitian.validate_mu0(mu0)?;
    if !p_val.is_finite() {
        return Err(Error::NonFinite {
            name: "p_val",
            value: p_val,
        });
    }
    let hbar = well.hbar();
    let i = Complex64::new(0.0, 1.0);
    let values = grid
        .iter()
        .map(|&x| {
            if x == 0.0 {
                Complex64::new(1.0, 0.0)
            } else if x < 0.0 {
                (i * p_val * x / (hbar * (1.0 + mu0))).exp()
            } else {
                (i * p_val * x / (hbar * (1.0 - mu0))).exp()
            }
        })
        .collect();
    SampledFunction::new(
        grid.to_vec(),
        values,
        SampleMeta {
            mode,
            mu0,
            kind: SampleKind::MomentumEigenfunction { p: p_val },
        },
    )
}

/// ∫₀^L |sin(z·u)|² du for complex z = s + it:
/// |sin((s+it)u)|² = sin²(su) + sinh²(tu).
fn abs_sin_sq_integral(z: Complex64, len: f64) -> f64 {
    int_sin_sq(z.re, len) + int_sinh_sq(z.im, len)
}

/// ∫₀^L sin²(su) du = L/2 − sin(2sL)/(4s), series near s = 0.
fn int_sin_sq(s: f64, len: f64) -> f64 {
    let a = s * len;
    if a.abs() < 1e-4 {
        s * s * len.powi(3) * (1.0 / 3.0 - a * a / 15.0)
    } else {
        0.5 * len - (2.0 * s * len).sin() / (4.0 * s)
    }
}

/// ∫₀^L sinh²(tu) du = sinh(2tL)/(4t) − L/2, series near t = 0.
fn int_sinh_sq(t: f64, len: f64) -> f64 {
    let a = t * len;
    if a.abs() < 1e-4 {
        t * t * len.powi(3) * (1.0 / 3.0 + a * a / 15.0)
    } else {
        (2.0 * t * len).sinh() / (4.0 * t) - 0.5 * len
    }
}

/// Pre-normalization L² norm squared of the two-branch form.
fn raw_norm_sq(kl: Complex64, kbl: Complex64, l: f64) -> f64 {
    let k = kl / l;
    let kb = kbl / l;
    kbl.sin().norm_sqr() * abs_sin_sq_integral(k, l)
        + kl.sin().norm_sqr() * abs_sin_sq_integral(kb, l)
}

/// Threshold in κl below which the two-branch form is the trivial-root
/// null function (η → 0 makes every factor vanish). A tiny overall
/// prefactor at larger η — e.g. sin(κ̄l) ≈ 0 for even states at μ₀ = 0 —
/// is a representation artifact instead and cancels exactly against the
/// normalization constant.
const NULL_KAPPA_L: f64 = 1e-7;

/// Normalization constant N_n > 0 with ∫₋ₗˡ |ψ_n|² dx = 1, from the
/// closed-form antiderivatives of the |sin|² pieces.
pub fn norm_constant(eta: f64, mu0: f64, mode: Mode, well: &WellConfig) -> Result<f64> {
    let (kl, kbl) = wave_numbers(eta, mu0, mode)?;
    let norm_sq = raw_norm_sq(kl, kbl, well.half_width());
    let amplitude = norm_sq.sqrt();
    if amplitude == 0.0 || kl.norm().max(kbl.norm()) < NULL_KAPPA_L {
        return Err(Error::NullEigenfunction { amplitude });
    }
    Ok(1.0 / amplitude)
}

/// Raw (unnormalized) two-branch value at x; the left-branch value is
/// emitted at x = 0, where both branches agree.
fn raw_branch(x: f64, kl: Complex64, kbl: Complex64, l: f64) -> Complex64 {
    if x <= 0.0 {
        kbl.sin() * (kl * ((x + l) / l)).sin()
    } else {
        -kl.sin() * (kbl * ((x - l) / l)).sin()
    }
}

fn state_meta(state: &EigenState, mode: Mode, mu0: f64) -> SampleMeta {
    SampleMeta {
        mode,
        mu0,
        kind: SampleKind::Eigenfunction { n: state.n },
    }
}

/// Normalized eigenfunction samples over `grid` (positions in [−l, l]).
pub fn eigenfunction(
    state: &EigenState,
    mode: Mode,
    mu0: f64,
    grid: &[f64],
    well: &WellConfig,
) -> Result<SampledFunction> {
    let (kl, kbl) = wave_numbers(state.eta, mu0, mode)?;
    let l = well.half_width();
    let norm = norm_constant(state.eta, mu0, mode, well)?;
    let values = grid
        .iter()
        .map(|&x| norm * raw_branch(x, kl, kbl, l))
        .collect();
    SampledFunction::new(grid.to_vec(), values, state_meta(state, mode, mu0))
}

/// |ψ_n|² samples of the normalized eigenfunction. Tagged as a
/// pseudo-probability density in PT mode, where |ψ|² lacks the standard
/// interpretation.
pub fn probability_density(
    state: &EigenState,
    mode: Mode,
    mu0: f64,
    grid: &[f64],
    well: &WellConfig,
) -> Result<SampledFunction> {
    let psi = eigenfunction(state, mode, mu0, grid, well)?;
    let values = psi
        .values()
        .iter()
        .map(|v| Complex64::new(v.norm_sqr(), 0.0))
        .collect();
    SampledFunction::new(
        grid.to_vec(),
        values,
        SampleMeta {
            mode,
            mu0,
            kind: SampleKind::Density {
                n: state.n,
                pseudo: mode == Mode::PtSymmetric,
            },
        },
    )
}

/// Mismatch of the two branch forms at x = 0: (value gap, derivative gap
/// relative to the larger branch derivative). Both vanish at
/// characteristic roots — derivative continuity *is* the quantization
/// condition.
pub fn matching_residuals(eta: f64, mu0: f64, mode: Mode, well: &WellConfig) -> Result<(f64, f64)> {
    let (kl, kbl) = wave_numbers(eta, mu0, mode)?;
    let l = well.half_width();
    let left_val = kbl.sin() * kl.sin();
    let right_val = -kl.sin() * (-kbl).sin();
    let left_d = kl / l * kbl.sin() * kl.cos();
    let right_d = -kbl / l * kl.sin() * kbl.cos();
    let dmax = left_d.norm().max(right_d.norm()).max(f64::MIN_POSITIVE);
    Ok((
        (left_val - right_val).norm(),
        (left_d - right_d).norm() / dmax,
    ))
}

/// ∫₋ₗ⁰ |ψ_n|² dx of the normalized eigenfunction, in closed form.
pub fn left_half_probability(eta: f64, mu0: f64, mode: Mode, well: &WellConfig) -> Result<f64> {
    let (kl, kbl) = wave_numbers(eta, mu0, mode)?;
    let l = well.half_width();
    let total = raw_norm_sq(kl, kbl, l);
    if total == 0.0 || kl.norm().max(kbl.norm()) < NULL_KAPPA_L {
        return Err(Error::NullEigenfunction {
            amplitude: total.sqrt(),
        });
    }
    let left = kbl.sin().norm_sqr() * abs_sin_sq_integral(kl / l, l);
    Ok(left / total)
}

/// Overlap ∫ ψ_m* ψ_n dx of two normalized Hermitian-mode states, in
/// closed form, optionally against the weight 1/(1+μ(x))² under which
/// the piecewise Hamiltonian is self-adjoint.
///
/// With plain weight the eigenfunctions of distinct states are *not*
/// orthogonal (the interface defect [(1+μ₀)²−(1−μ₀)²]·W(0) survives);
/// with the operator weight they are, to machine precision.
pub fn hermitian_overlap(
    eta_m: f64,
    eta_n: f64,
    mu0: f64,
    well: &WellConfig,
    operator_weight: bool,
) -> Result<f64> {
    let (km, kbm) = wave_numbers(eta_m, mu0, Mode::Hermitian)?;
    let (kn, kbn) = wave_numbers(eta_n, mu0, Mode::Hermitian)?;
    let l = well.half_width();
    let nm = norm_constant(eta_m, mu0, Mode::Hermitian, well)?;
    let nn = norm_constant(eta_n, mu0, Mode::Hermitian, well)?;
    let (w_left, w_right) = if operator_weight {
        (
            1.0 / ((1.0 + mu0) * (1.0 + mu0)),
            1.0 / ((1.0 - mu0) * (1.0 - mu0)),
        )
    } else {
        (1.0, 1.0)
    };
    // left: sin(kbar_m l) sin(kbar_n l) ∫ sin(k_m u) sin(k_n u) du,
    // right: sin(k_m l) sin(k_n l) ∫ sin(kbar_m u) sin(kbar_n u) du
    let left = kbm.sin().re * kbn.sin().re * int_sin_prod(km.re / l, kn.re / l, l);
    let right = km.sin().re * kn.sin().re * int_sin_prod(kbm.re / l, kbn.re / l, l);
    Ok(nm * nn * (w_left * left + w_right * right))
}

/// ∫₀^L sin(a u) sin(b u) du.
fn int_sin_prod(a: f64, b: f64, len: f64) -> f64 {
    if (a - b).abs() < 1e-9 * a.abs().max(b.abs()) {
        return int_sin_sq(0.5 * (a + b), len);
    }
    let diff = a - b;
    let sum = a + b;
    0.5 * ((diff * len).sin() / diff - (sum * len).sin() / sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characteristic::{hermitian_char, pt_char};
    use crate::core::linspace;
    use crate::rootfind::find_roots;
    use crate::core::RootConfig;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use std::f64::consts::PI;

    fn state_for(mode: Mode, mu0: f64, n: usize) -> EigenState {
        let cfg = RootConfig {
            eta_max: 4.0 * PI,
            ..RootConfig::default()
        };
        let f = |e: f64| match mode {
            Mode::Hermitian => hermitian_char(e, mu0).unwrap(),
            Mode::PtSymmetric => pt_char(e, mu0).unwrap(),
        };
        let roots = find_roots(f, &cfg).unwrap();
        let eta = roots[n - 1].eta;
        let (kl, kbl) = wave_numbers(eta, mu0, mode).unwrap();
        EigenState {
            n: n as u32,
            eta,
            energy_ratio: crate::core::energy_ratio(eta, mu0, mode).unwrap(),
            kappa_l: kl,
            kappa_bar_l: kbl,
            norm: norm_constant(eta, mu0, mode, &WellConfig::default()).unwrap(),
        }
    }

    /// Composite Simpson over uniform samples (test oracle).
    fn simpson(ys: &[f64], h: f64) -> f64 {
        assert!(ys.len() >= 3 && ys.len() % 2 == 1);
        let mut acc = ys[0] + ys[ys.len() - 1];
        for (i, y) in ys.iter().enumerate().take(ys.len() - 1).skip(1) {
            acc += if i % 2 == 1 { 4.0 * y } else { 2.0 * y };
        }
        acc * h / 3.0
    }

    #[test]
    fn momentum_eigenfunction_zero_momentum_is_constant() {
        let well = WellConfig::default();
        let grid = linspace(-1.0, 1.0, 101);
        let phi = momentum_eigenfunction(0.0, 0.3, Mode::Hermitian, &grid, &well).unwrap();
        for (_, v) in phi.iter() {
            assert_eq!(v, Complex64::new(1.0, 0.0));
        }
    }

    #[test]
    fn momentum_eigenfunction_plane_wave_at_mu0_zero() {
        let well = WellConfig::default();
        let grid = linspace(-1.0, 1.0, 101);
        let phi = momentum_eigenfunction(1.0, 0.0, Mode::Hermitian, &grid, &well).unwrap();
        for (x, v) in phi.iter() {
            let want = Complex64::new(0.0, x).exp();
            assert!((v - want).norm() < 1e-15);
        }
    }

    #[test]
    fn momentum_eigenfunction_rejects_pt_mode() {
        let well = WellConfig::default();
        let grid = linspace(-1.0, 1.0, 11);
        assert!(matches!(
            momentum_eigenfunction(1.0, 0.1, Mode::PtSymmetric, &grid, &well),
            Err(Error::HermitianOnly { .. })
        ));
    }

    #[test]
    fn momentum_eigenfunction_finite_difference_second_order() {
        // applying the piecewise operator -i hbar (1 ± mu0) d/dx by central
        // differences reproduces p*phi with O(h^2) error away from x = 0
        let well = WellConfig::default();
        let mu0 = 0.2;
        let p = 1.0;
        let mut errs = Vec::new();
        for n in [1001usize, 2001] {
            let grid = linspace(-1.0, 1.0, n);
            let h = grid[1] - grid[0];
            let phi = momentum_eigenfunction(p, mu0, Mode::Hermitian, &grid, &well).unwrap();
            let v = phi.values();
            let mut worst = 0.0f64;
            for i in 1..n - 1 {
                if grid[i - 1] * grid[i + 1] <= 0.0 || grid[i] == 0.0 {
                    continue;
                }
                let fac = if grid[i] < 0.0 { 1.0 + mu0 } else { 1.0 - mu0 };
                let lhs = Complex64::new(0.0, -fac) * (v[i + 1] - v[i - 1]) / (2.0 * h);
                worst = worst.max((lhs - p * v[i]).norm());
            }
            errs.push(worst);
        }
        let ratio = errs[0] / errs[1];
        assert!(
            (3.6..=4.4).contains(&ratio),
            "two-grid error ratio {ratio} not ~4 (errs {errs:?})"
        );
    }

    #[test]
    fn coefficients_standard_well_ground_state() {
        // eta = pi/2, mu0 = 0: b = 1, c = 1, d = 1 in both modes
        for mode in [Mode::Hermitian, Mode::PtSymmetric] {
            let cs = coefficients(PI / 2.0, 0.0, mode).unwrap();
            assert!((cs.b - 1.0).norm() < 1e-12, "b = {}", cs.b);
            assert!((cs.c - 1.0).norm() < 1e-12, "c = {}", cs.c);
            assert!((cs.d - 1.0).norm() < 1e-12, "d = {}", cs.d);
            let res = boundary_residuals(PI / 2.0, 0.0, mode, &cs).unwrap();
            for r in res {
                assert!(r < 1e-12, "residuals {res:?}");
            }
        }
    }

    #[test]
    fn coefficients_residuals_vanish_at_roots() {
        for (mode, mu0) in [
            (Mode::Hermitian, 0.1),
            (Mode::Hermitian, 0.3),
            (Mode::PtSymmetric, 0.1),
            (Mode::PtSymmetric, 0.2),
        ] {
            for n in 1..=2 {
                let st = state_for(mode, mu0, n);
                let cs = coefficients(st.eta, mu0, mode).unwrap();
                let res = boundary_residuals(st.eta, mu0, mode, &cs).unwrap();
                for r in res {
                    assert!(
                        r < 1e-8,
                        "mode {mode:?} mu0 {mu0} n {n}: residuals {res:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn coefficients_dual_routes_agree_where_both_valid() {
        // at a root with both cos(kbl) and sin(kbl) well-conditioned the
        // derivative route and the continuity route give the same c
        let st = state_for(Mode::Hermitian, 0.1, 1);
        let (kl, kbl) = wave_numbers(st.eta, 0.1, Mode::Hermitian).unwrap();
        let i = Complex64::new(0.0, 1.0);
        let b = -(-2.0 * i * kl).exp();
        let c_deriv = (kl * kl.cos()) / (kbl * kbl.cos()) * (-i * (kl + kbl)).exp();
        let c_cont = (Complex64::new(1.0, 0.0) + b)
            / (Complex64::new(1.0, 0.0) - (2.0 * i * kbl).exp());
        assert!((c_deriv - c_cont).norm() < 1e-10);
        let cs = coefficients(st.eta, 0.1, Mode::Hermitian).unwrap();
        assert!((cs.c - c_deriv).norm() < 1e-10);
    }

    #[test]
    fn eigenfunction_standard_well_is_cosine() {
        // n = 1, mu0 = 0: psi = cos(pi x / 2), normalized over [-1, 1]
        let well = WellConfig::default();
        let st = state_for(Mode::Hermitian, 0.0, 1);
        let grid = linspace(-1.0, 1.0, 401);
        let psi = eigenfunction(&st, Mode::Hermitian, 0.0, &grid, &well).unwrap();
        for (x, v) in psi.iter() {
            let want = (PI * x / 2.0).cos();
            assert_abs_diff_eq!(v.re, want, epsilon = 1e-9);
            assert_abs_diff_eq!(v.im, 0.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn eigenfunction_vanishes_at_walls() {
        let well = WellConfig::default();
        for (mode, mu0) in [(Mode::Hermitian, 0.3), (Mode::PtSymmetric, 0.2)] {
            for n in 1..=2 {
                let st = state_for(mode, mu0, n);
                let grid = vec![-1.0, 0.0, 1.0];
                let psi = eigenfunction(&st, mode, mu0, &grid, &well).unwrap();
                assert!(psi.values()[0].norm() < 1e-10);
                assert!(psi.values()[2].norm() < 1e-10);
            }
        }
    }

    #[test]
    fn branch_matching_at_roots() {
        let well = WellConfig::default();
        for (mode, mu0) in [(Mode::Hermitian, 0.1), (Mode::PtSymmetric, 0.3)] {
            let st = state_for(mode, mu0, 1);
            let (dv, dd) = matching_residuals(st.eta, mu0, mode, &well).unwrap();
            assert!(dv < 1e-8, "value mismatch {dv}");
            assert!(dd < 1e-8, "derivative mismatch {dd}");
        }
    }

    #[test]
    fn normalization_closed_form_vs_simpson() {
        let well = WellConfig::default();
        for (mode, mu0, n) in [
            (Mode::Hermitian, 0.2, 2),
            (Mode::PtSymmetric, 0.1, 1),
        ] {
            let st = state_for(mode, mu0, n);
            let grid = linspace(-1.0, 1.0, 20001);
            let psi = eigenfunction(&st, mode, mu0, &grid, &well).unwrap();
            let dens: Vec<f64> = psi.values().iter().map(|v| v.norm_sqr()).collect();
            let integral = simpson(&dens, grid[1] - grid[0]);
            assert_abs_diff_eq!(integral, 1.0, epsilon = 1e-9);
        }
    }

    #[test]
    fn pt_norm_constant_real_positive_density_integrates_to_one() {
        let st = state_for(Mode::PtSymmetric, 0.1, 1);
        assert!(st.norm > 0.0);
        // frozen independent value (adaptive quadrature oracle)
        assert_relative_eq!(st.norm, 0.974574787025, max_relative = 1e-9);
    }

    #[test]
    fn pt_eigenfunction_is_pt_symmetric() {
        // psi*(-x) = psi(x) for real-energy PT states
        let well = WellConfig::default();
        for n in 1..=2 {
            let st = state_for(Mode::PtSymmetric, 0.2, n);
            let xs = linspace(1.0e-3, 0.999, 301);
            let mirrored: Vec<f64> = xs.iter().map(|x| -x).rev().collect();
            let right = eigenfunction(&st, Mode::PtSymmetric, 0.2, &xs, &well).unwrap();
            let left = eigenfunction(&st, Mode::PtSymmetric, 0.2, &mirrored, &well).unwrap();
            for (rv, lv) in right.values().iter().zip(left.values().iter().rev()) {
                assert!((lv.conj() - rv).norm() < 1e-8);
            }
        }
    }

    #[test]
    fn hermitian_ground_state_occupancies() {
        // frozen from closed-form + RK4-shooting cross-check: the ground
        // state shifts toward the half with the larger wave number
        let well = WellConfig::default();
        let expect = [(0.1, 0.45124074), (0.2, 0.40893243), (0.3, 0.37599384)];
        for (mu0, want) in expect {
            let st = state_for(Mode::Hermitian, mu0, 1);
            let got = left_half_probability(st.eta, mu0, Mode::Hermitian, &well).unwrap();
            assert_abs_diff_eq!(got, want, epsilon = 1e-6);
        }
        // symmetric at mu0 = 0
        let st = state_for(Mode::Hermitian, 0.0, 1);
        assert_abs_diff_eq!(
            left_half_probability(st.eta, 0.0, Mode::Hermitian, &well).unwrap(),
            0.5,
            epsilon = 1e-12
        );
    }

    #[test]
    fn density_symmetric_where_expected() {
        let well = WellConfig::default();
        // Hermitian mu0 = 0: even density
        let st = state_for(Mode::Hermitian, 0.0, 1);
        let grid = linspace(-1.0, 1.0, 501);
        let rho = probability_density(&st, Mode::Hermitian, 0.0, &grid, &well).unwrap();
        let v = rho.values();
        for i in 0..v.len() {
            assert_abs_diff_eq!(v[i].re, v[v.len() - 1 - i].re, epsilon = 1e-12);
        }
        // PT: |psi| is even for every real-energy state
        let st = state_for(Mode::PtSymmetric, 0.3, 1);
        let rho = probability_density(&st, Mode::PtSymmetric, 0.3, &grid, &well).unwrap();
        assert!(matches!(
            rho.meta.kind,
            SampleKind::Density { pseudo: true, .. }
        ));
        let v = rho.values();
        for i in 0..v.len() {
            assert_abs_diff_eq!(v[i].re, v[v.len() - 1 - i].re, epsilon = 1e-10);
        }
    }

    #[test]
    fn plain_overlap_large_weighted_overlap_zero() {
        // the operator is self-adjoint under the 1/(1+mu)^2 weight, not in
        // plain L2: distinct states are weighted-orthogonal only
        let well = WellConfig::default();
        let mu0 = 0.3;
        let s1 = state_for(Mode::Hermitian, mu0, 1);
        let s2 = state_for(Mode::Hermitian, mu0, 2);
        let plain = hermitian_overlap(s1.eta, s2.eta, mu0, &well, false).unwrap();
        let weighted = hermitian_overlap(s1.eta, s2.eta, mu0, &well, true).unwrap();
        assert_abs_diff_eq!(plain, -0.343, epsilon = 1e-3);
        assert!(weighted.abs() < 1e-12, "weighted overlap {weighted}");
    }

    #[test]
    fn weighted_orthogonality_first_four_states() {
        let well = WellConfig::default();
        for mu0 in [0.1, 0.2, 0.3] {
            let states: Vec<_> = (1..=4).map(|n| state_for(Mode::Hermitian, mu0, n)).collect();
            for i in 0..4 {
                for j in (i + 1)..4 {
                    let w = hermitian_overlap(states[i].eta, states[j].eta, mu0, &well, true)
                        .unwrap();
                    assert!(
                        w.abs() < 1e-12,
                        "mu0 {mu0} states {}/{}: weighted overlap {w}",
                        i + 1,
                        j + 1
                    );
                }
            }
        }
    }

    #[test]
    fn norm_constant_rejects_null_function() {
        let well = WellConfig::default();
        // eta tiny but positive: raw amplitude ~ eta^2 below threshold
        let err = norm_constant(1e-9, 0.2, Mode::Hermitian, &well);
        assert!(matches!(err, Err(Error::NullEigenfunction { .. })));
    }

    #[test]
    fn small_argument_integral_series_continuity() {
        // series and closed form agree across the switchover
        for s in [9e-5, 1.1e-4] {
            let a = int_sin_sq(s, 1.0);
            let exact = 0.5 - (2.0 * s).sin() / (4.0 * s);
            assert_relative_eq!(a, exact, max_relative = 1e-10);
            let b = int_sinh_sq(s, 1.0);
            let exact = (2.0 * s).sinh() / (4.0 * s) - 0.5;
            assert_relative_eq!(b, exact, max_relative = 1e-10);
        }
    }
}
