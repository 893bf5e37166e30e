//! Domain types, unit conventions and the dimensionless reductions shared
//! by the solver modules.
//!
//! Working variables:
//!
//! * η = λl, the dimensionless root variable. Hermitian: λ² = 2mE/ħ².
//!   PT: λ = √(2mE/ħ²)/(1+μ₀²).
//! * κl, κ̄l (Hermitian) or κl, κ̃l (PT): dimensionless wave numbers of the
//!   left/right well halves. Hermitian: κl = η/(1+μ₀), κ̄l = η/(1−μ₀),
//!   both real. PT: κl = η(1−iμ₀), κ̃l = η(1+iμ₀) = conj(κl).
//! * E/E₀ with E₀ = π²ħ²/(8ml²): Hermitian (2η/π)², PT (2η/π)²(1+μ₀²)².

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Flavour of the step auxiliary function μ(x).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Mode {
    /// Real step: μ(x) = +μ₀ for x<0, −μ₀ for x>0. Requires μ₀ ∈ [0, 1);
    /// at μ₀ ≥ 1 the right-half kinetic factor (1−μ₀)² degenerates.
    Hermitian,
    /// Imaginary step: μ(x) = +iμ₀ for x<0, −iμ₀ for x>0, μ₀ ≥ 0.
    PtSymmetric,
}

impl Mode {
    /// Check a step height against the mode's domain.
    pub fn validate_mu0(self, mu0: f64) -> Result<()> {
        if !mu0.is_finite() {
            return Err(Error::NonFinite {
                name: "mu0",
                value: mu0,
            });
        }
        if mu0 < 0.0 {
            return Err(Error::InvalidMu0 {
                mode: self,
                mu0,
                reason: "step height must be non-negative",
            });
        }
        if self == Mode::Hermitian && mu0 >= 1.0 {
            return Err(Error::InvalidMu0 {
                mode: self,
                mu0,
                reason: "Hermitian step requires mu0 < 1 (factor 1 - mu0 must stay positive)",
            });
        }
        Ok(())
    }
}

/// Infinite square well on [−l, l] plus the unit convention.
///
/// Defaults to ħ = 2m = 1 (ħ = 1, m = 1/2) and l = 1, under which the
/// standard-well ground state energy is E₀ = π²/4.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WellConfig {
    half_width: f64,
    hbar: f64,
    mass: f64,
}

impl Default for WellConfig {
    fn default() -> Self {
        Self {
            half_width: 1.0,
            hbar: 1.0,
            mass: 0.5,
        }
    }
}

impl WellConfig {
    pub fn new(half_width: f64, hbar: f64, mass: f64) -> Result<Self> {
        for (name, value) in [("half_width", half_width), ("hbar", hbar), ("mass", mass)] {
            if !value.is_finite() {
                return Err(Error::NonFinite { name, value });
            }
            if value <= 0.0 {
                return Err(Error::NonPositive { name, value });
            }
        }
        Ok(Self {
            half_width,
            hbar,
            mass,
        })
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    /// Ground-state energy E₀ = π²ħ²/(8ml²) of the standard well (μ₀ = 0).
    pub fn ground_energy(&self) -> f64 {
        let l = self.half_width;
        PI * PI * self.hbar * self.hbar / (8.0 * self.mass * l * l)
    }
}

/// Scan interval, grid resolution and refinement tolerances for the
/// root finder.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RootConfig {
    /// Lower end of the η scan; strictly positive so the trivial root
    /// η = 0 (null eigenfunction) is excluded.
    pub eta_min: f64,
    /// Upper end of the η scan window.
    pub eta_max: f64,
    /// Scan grid step in η.
    pub grid_step: f64,
    /// Absolute bracket width at which refinement stops.
    pub refine_tol: f64,
    /// Iteration budget for a single bracket refinement.
    pub max_refine_iters: u32,
}

impl Default for RootConfig {
    fn default() -> Self {
        Self {
            eta_min: 1e-6,
            eta_max: 8.0 * PI,
            grid_step: 1e-3,
            refine_tol: 1e-12,
            max_refine_iters: 100,
        }
    }
}

impl RootConfig {
    pub fn validate(&self) -> Result<()> {
        let all = [
            ("eta_min", self.eta_min),
            ("eta_max", self.eta_max),
            ("grid_step", self.grid_step),
            ("refine_tol", self.refine_tol),
        ];
        for (name, value) in all {
            if !value.is_finite() {
                return Err(Error::NonFinite { name, value });
            }
        }
        if self.eta_min <= 0.0 {
            return Err(Error::InvalidRootConfig(format!(
                "eta_min = {} must be > 0",
                self.eta_min
            )));
        }
        if self.eta_min >= self.eta_max {
            return Err(Error::InvalidRootConfig(format!(
                "eta_min = {} must be < eta_max = {}",
                self.eta_min, self.eta_max
            )));
        }
        if self.grid_step <= 0.0 {
            return Err(Error::InvalidRootConfig(format!(
                "grid_step = {} must be > 0",
                self.grid_step
            )));
        }
        if self.refine_tol <= 0.0 {
            return Err(Error::InvalidRootConfig(format!(
                "refine_tol = {} must be > 0",
                self.refine_tol
            )));
        }
        if self.max_refine_iters == 0 {
            return Err(Error::InvalidRootConfig(
                "max_refine_iters must be >= 1".into(),
            ));
        }
        Ok(())
    }
}

/// One bound state of the well.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EigenState {
    /// State index n = 1, 2, 3, … (the zero number of the characteristic
    /// function for the given mode and μ₀).
    pub n: u32,
    /// Dimensionless root η_n = λ_n·l.
    pub eta: f64,
    /// E_n/E₀.
    pub energy_ratio: f64,
    /// κl: dimensionless wave number of the left half (real in Hermitian
    /// mode).
    pub kappa_l: Complex64,
    /// κ̄l (Hermitian) or κ̃l (PT) of the right half; in PT mode this is
    /// the complex conjugate of `kappa_l`.
    pub kappa_bar_l: Complex64,
    /// Normalization constant N_n > 0 with ∫|ψ|²dx = 1.
    pub norm: f64,
}

/// E/E₀ as a function of the dimensionless root η.
///
/// Hermitian: (2η/π)². PT: (2η/π)²(1+μ₀²)².
pub fn energy_ratio(eta: f64, mu0: f64, mode: Mode) -> Result<f64> {
    mode.validate_mu0(mu0)?;
    if !eta.is_finite() || eta <= 0.0 {
        return Err(Error::EtaOutOfDomain { eta });
    }
    let base = (2.0 * eta / PI) * (2.0 * eta / PI);
    Ok(match mode {
        Mode::Hermitian => base,
        Mode::PtSymmetric => {
            let f = 1.0 + mu0 * mu0;
            base * f * f
        }
    })
}

/// Dimensionless wave numbers (κl, κ̄l) of the two well halves.
///
/// Hermitian: (η/(1+μ₀), η/(1−μ₀)), both real.
/// PT: (η(1−iμ₀), η(1+iμ₀)), complex conjugates.
pub fn wave_numbers(eta: f64, mu0: f64, mode: Mode) -> Result<(Complex64, Complex64)> {
    mode.validate_mu0(mu0)?;
    if !eta.is_finite() || eta <= 0.0 {
        return Err(Error::EtaOutOfDomain { eta });
    }
    Ok(match mode {
        Mode::Hermitian => (
            Complex64::new(eta / (1.0 + mu0), 0.0),
            Complex64::new(eta / (1.0 - mu0), 0.0),
        ),
        Mode::PtSymmetric => (
            Complex64::new(eta, -eta * mu0),
            Complex64::new(eta, eta * mu0),
        ),
    })
}

/// One constant-coefficient segment of an N-segment profile.
///
/// Inside the segment the reduced equation is ψ'' + (λ/α)²ψ = 0 with
/// α = 1 + μ the (possibly complex) momentum deformation factor.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Segment {
    pub x_start: f64,
    pub x_end: f64,
    pub alpha: Complex64,
}

/// Piecewise auxiliary profile μ(x) over the well.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum StepProfile {
    /// The two-segment step of the model: α = 1±μ₀ (Hermitian) or
    /// 1±iμ₀ (PT), split at x = 0.
    Step { mode: Mode, mu0: f64 },
    /// General ordered segment list for the N-segment extension.
    General { segments: Vec<Segment> },
}

impl StepProfile {
    pub fn hermitian(mu0: f64) -> Result<Self> {
        Mode::Hermitian.validate_mu0(mu0)?;
        Ok(StepProfile::Step {
            mode: Mode::Hermitian,
            mu0,
        })
    }

    pub fn pt_symmetric(mu0: f64) -> Result<Self> {
        Mode::PtSymmetric.validate_mu0(mu0)?;
        Ok(StepProfile::Step {
            mode: Mode::PtSymmetric,
            mu0,
        })
    }

    /// Build a general profile, checking that the segments partition
    /// [−l, l] with no gaps or overlaps and that every α ≠ 0.
    pub fn general(segments: Vec<Segment>, well: &WellConfig) -> Result<Self> {
        let l = well.half_width();
        if segments.is_empty() {
            return Err(Error::InvalidProfile("empty segment list".into()));
        }
        let gap_tol = 1e-12 * l.max(1.0);
        let mut expected = -l;
        for (i, seg) in segments.iter().enumerate() {
            if (seg.x_start - expected).abs() > gap_tol {
                return Err(Error::InvalidProfile(format!(
                    "segment {i} starts at {} but previous ends at {expected}",
                    seg.x_start
                )));
            }
            if seg.x_end <= seg.x_start {
                return Err(Error::InvalidProfile(format!(
                    "segment {i} has non-positive width"
                )));
            }
            if seg.alpha.norm() == 0.0 {
                return Err(Error::InvalidProfile(format!(
                    "segment {i} has degenerate factor alpha = 0"
                )));
            }
            expected = seg.x_end;
        }
        if (expected - l).abs() > gap_tol {
            return Err(Error::InvalidProfile(format!(
                "segments end at {expected}, well ends at {l}"
            )));
        }
        Ok(StepProfile::General { segments })
    }

    /// Materialize the ordered segment list over the given well.
    pub fn segments(&self, well: &WellConfig) -> Vec<Segment> {
        let l = well.half_width();
        match self {
            StepProfile::Step { mode, mu0 } => {
                let (a_left, a_right) = match mode {
                    Mode::Hermitian => {
                        (Complex64::new(1.0 + mu0, 0.0), Complex64::new(1.0 - mu0, 0.0))
                    }
                    Mode::PtSymmetric => {
                        (Complex64::new(1.0, *mu0), Complex64::new(1.0, -mu0))
                    }
                };
                vec![
                    Segment {
                        x_start: -l,
                        x_end: 0.0,
                        alpha: a_left,
                    },
                    Segment {
                        x_start: 0.0,
                        x_end: l,
                        alpha: a_right,
                    },
                ]
            }
            StepProfile::General { segments } => segments.clone(),
        }
    }
}

/// What a [`SampledFunction`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum SampleKind {
    /// Energy eigenfunction ψ_n.
    Eigenfunction { n: u32 },
    /// |ψ_n|²; `pseudo` marks the PT case, where |ψ|² lacks the standard
    /// probabilistic interpretation.
    Density { n: u32, pseudo: bool },
    /// Momentum eigenfunction φ_𝔭.
    MomentumEigenfunction { p: f64 },
    /// Characteristic-function samples over an η grid.
    CharacteristicCurve,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SampleMeta {
    pub mode: Mode,
    pub mu0: f64,
    pub kind: SampleKind,
}

/// Complex samples over a strictly increasing grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampledFunction {
    grid: Vec<f64>,
    values: Vec<Complex64>,
    pub meta: SampleMeta,
}

impl SampledFunction {
    pub fn new(grid: Vec<f64>, values: Vec<Complex64>, meta: SampleMeta) -> Result<Self> {
        if grid.len() != values.len() {
            return Err(Error::LengthMismatch {
                grid_len: grid.len(),
                values_len: values.len(),
            });
        }
        for i in 1..grid.len() {
            if grid[i] <= grid[i - 1] {
                return Err(Error::GridNotIncreasing { index: i });
            }
        }
        Ok(Self { grid, values, meta })
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.grid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grid.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, Complex64)> + '_ {
        self.grid.iter().copied().zip(self.values.iter().copied())
    }
}

/// Uniform grid of `n` points covering [a, b] inclusive.
pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    assert!(n >= 2, "linspace needs at least two points");
    let h = (b - a) / (n - 1) as f64;
    (0..n)
        .map(|i| if i == n - 1 { b } else { a + i as f64 * h })
        .collect()
}
