//! Spectral solver for a quantum particle with a step momentum operator
//! inside an infinite square well.
//!
//! The momentum operator is the generalized form
//! `p = -iħ(1+μ(x))∂ₓ - iħμ'(x)/2` with a two-valued step auxiliary
//! function μ(x). Two flavours are supported:
//!
//! * **Hermitian**: μ(x) = +μ₀ for x<0, −μ₀ for x>0 (real step).
//!   Infinitely many bound states; energies decrease with μ₀.
//! * **PT-symmetric**: μ(x) = +iμ₀ for x<0, −iμ₀ for x>0 (imaginary step).
//!   Finitely many real-energy bound states; none at all above the
//!   critical step height μ₀* ≈ 0.377.
//!
//! The quantization conditions are transcendental; zeros are located by a
//! bracketing scan plus Brent refinement ([`rootfind`]), cross-checkable
//! through four equivalent characteristic formulations
//! ([`characteristic`]). Eigenfunctions, normalization constants and
//! probability densities come from closed two-branch forms
//! ([`wavefunction`]). [`zmap`] maps the PT well onto the non-Hermitian
//! square well parameterization (E_z, Z).
//!
//! Everything is dimensionless where possible: roots are reported as
//! η = λl and energies as ratios E/E₀ with E₀ the standard-well ground
//! state energy.

pub mod characteristic;
pub mod core;
mod error;
pub mod rootfind;
pub mod spectrum;
pub mod wavefunction;
pub mod zmap;

pub use crate::core::{
    energy_ratio, wave_numbers, EigenState, Mode, RootConfig, SampleKind, SampleMeta,
    SampledFunction, Segment, StepProfile, WellConfig,
};
pub use crate::error::{Error, Result};
pub use crate::spectrum::{critical_mu0, solve_spectrum, Spectrum};
