//! Correspondence between the PT step-momentum well and the
//! non-Hermitian square well (NSW) parameterization.
//!
//! Supposing equal complex wave numbers, κ_z² = E_z − iZ must equal
//! κ_μ² = E_μ/(1+iμ₀)², which splits into
//!
//! ```text
//! E_z = (1 − μ₀²)/(1 + μ₀²)² · E_μ
//! Z   =      2μ₀/(1 + μ₀²)² · E_μ
//! ```
//!
//! and inverts to μ₀ = (E_z/Z)(√(1 + Z²/E_z²) − 1). Units ħ² = 2m = 1
//! are baked in. The map relates parameters only; no claim is made that
//! the two spectra coincide.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Matched parameter set of the two models.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZnojilParams {
    /// NSW energy.
    pub e_z: f64,
    /// NSW non-Hermiticity measure, > 0.
    pub z: f64,
    /// Step-momentum model energy.
    pub e_mu: f64,
    /// Step height, > 0.
    pub mu0: f64,
}

fn check_positive(name: &'static str, value: f64) -> Result<()> {
    if !value.is_finite() {
        return Err(Error::NonFinite { name, value });
    }
    if value <= 0.0 {
        return Err(Error::NonPositive { name, value });
    }
    Ok(())
}

/// Step height μ₀ from the NSW parameters.
///
/// Evaluated as Z/(E_z + √(E_z² + Z²)), which is algebraically identical
/// to (E_z/Z)(√(1+Z²/E_z²) − 1) but free of cancellation for Z ≪ E_z.
pub fn mu0_from_znojil(e_z: f64, z: f64) -> Result<f64> {
    check_positive("e_z", e_z)?;
    check_positive("z", z)?;
    Ok(z / (e_z + e_z.hypot(z)))
}

/// NSW parameters (E_z, Z) matched to a step-momentum state.
pub fn znojil_from_mu0(mu0: f64, e_mu: f64) -> Result<(f64, f64)> {
    check_positive("mu0", mu0)?;
    check_positive("e_mu", e_mu)?;
    let denom = (1.0 + mu0 * mu0) * (1.0 + mu0 * mu0);
    Ok((
        (1.0 - mu0 * mu0) / denom * e_mu,
        2.0 * mu0 / denom * e_mu,
    ))
}

impl ZnojilParams {
    pub fn from_mu0(mu0: f64, e_mu: f64) -> Result<Self> {
        let (e_z, z) = znojil_from_mu0(mu0, e_mu)?;
        Ok(Self { e_z, z, e_mu, mu0 })
    }

    /// Recover (μ₀, E_μ) from (E_z, Z); E_μ comes from the Z relation,
    /// which stays regular at μ₀ = 1 where E_z vanishes.
    pub fn from_znojil(e_z: f64, z: f64) -> Result<Self> {
        let mu0 = mu0_from_znojil(e_z, z)?;
        let e_mu = z * (1.0 + mu0 * mu0) * (1.0 + mu0 * mu0) / (2.0 * mu0);
        Ok(Self { e_z, z, e_mu, mu0 })
    }
}
