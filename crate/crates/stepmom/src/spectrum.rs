//! Bound-state spectra: assemble eigenstates for a given (mode, μ₀),
//! count the PT real-energy states, and locate the critical step height
//! where they disappear.
//!
//! The Hermitian well has infinitely many bound states, so the scan
//! window is extended until the requested count is reached. The PT well
//! with μ₀ > 0 supports real roots only while μ₀·sinh(2ημ₀) can be
//! balanced by |sin 2η| ≤ 1, i.e. below
//!
//! ```text
//! eta_cap(mu0) = asinh(1/mu0) / (2 mu0)
//! ```
//!
//! scanning up to that cap is a proof of completeness, and a request for
//! more states than exist reports a shortfall rather than an error.

use serde::{Deserialize, Serialize};

use crate::characteristic::closed_form;
use crate::core::{
    energy_ratio, wave_numbers, EigenState, Mode, RootConfig, SampleKind, SampleMeta,
    SampledFunction, WellConfig,
};
use crate::error::{Error, Result};
use crate::rootfind::find_roots;
use crate::wavefunction::norm_constant;

/// Safety limit on scan-window extensions for the unbounded Hermitian
/// spectrum (covers tens of thousands of states at the default window).
const MAX_WINDOWS: usize = 1024;

/// Bound states of one (mode, μ₀) configuration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub mode: Mode,
    pub mu0: f64,
    /// States sorted by η, strictly increasing energy ratios. May hold
    /// fewer than `requested` entries in PT mode (finite real spectrum).
    pub states: Vec<EigenState>,
    /// Number of states asked for.
    pub requested: usize,
    /// Root-scan configuration the spectrum was produced with.
    pub cfg: RootConfig,
}

impl Spectrum {
    /// Requested states that do not exist as real-energy bound states.
    pub fn shortfall(&self) -> usize {
        self.requested.saturating_sub(self.states.len())
    }
}

/// η beyond which the PT characteristic has no further real zeros
/// (μ₀·sinh(2ημ₀) > 1 there); `None` for μ₀ = 0 (standard well,
/// infinitely many states).
pub fn pt_eta_cap(mu0: f64) -> Option<f64> {
    (mu0 > 0.0).then(|| (1.0 / mu0).asinh() / (2.0 * mu0))
}

/// Solve for up to `n_states` bound states.
pub fn solve_spectrum(
    mode: Mode,
    mu0: f64,
    n_states: usize,
    cfg: &RootConfig,
    well: &WellConfig,
) -> Result<Spectrum> {
    mode.validate_mu0(mu0)?;
    cfg.validate()?;
    if n_states == 0 {
        return Err(Error::NonPositive {
            name: "n_states",
            value: 0.0,
        });
    }
    let cap = match mode {
        Mode::PtSymmetric => pt_eta_cap(mu0),
        Mode::Hermitian => None,
    };
    let f = |eta: f64| closed_form(eta, mu0, mode).expect("validated domain");

    let window = cfg.eta_max - cfg.eta_min;
    let mut etas: Vec<f64> = Vec::new();
    let mut start = cfg.eta_min;
    for _ in 0..MAX_WINDOWS {
        let mut end = start + window;
        if let Some(cap) = cap {
            end = end.min(cap);
        }
        if end > start {
            let wcfg = RootConfig {
                eta_min: start,
                eta_max: end,
                ..*cfg
            };
            for rec in find_roots(f, &wcfg)? {
                if etas
                    .last()
                    .is_none_or(|last| rec.eta - last > 10.0 * cfg.refine_tol)
                {
                    etas.push(rec.eta);
                }
            }
        }
        let covered_cap = cap.is_some_and(|c| end >= c);
        if etas.len() >= n_states || covered_cap {
            break;
        }
        start = end;
    }

    let mut states = Vec::with_capacity(etas.len().min(n_states));
    for (idx, &eta) in etas.iter().take(n_states).enumerate() {
        let norm = match norm_constant(eta, mu0, mode, well) {
            Ok(n) => n,
            // trivial-root guard: a null eigenfunction is not a state
            Err(Error::NullEigenfunction { .. }) => continue,
            Err(e) => return Err(e),
        };
        let (kappa_l, kappa_bar_l) = wave_numbers(eta, mu0, mode)?;
        states.push(EigenState {
            n: (idx + 1) as u32,
            eta,
            energy_ratio: energy_ratio(eta, mu0, mode)?,
            kappa_l,
            kappa_bar_l,
            norm,
        });
    }
    Ok(Spectrum {
        mode,
        mu0,
        states,
        requested: n_states,
        cfg: *cfg,
    })
}

/// Number of real-energy PT bound states at the given step height,
/// counted over the full completeness window [eta_min, eta_cap].
pub fn pt_root_count(mu0: f64, cfg: &RootConfig) -> Result<usize> {
    Mode::PtSymmetric.validate_mu0(mu0)?;
    cfg.validate()?;
    let Some(cap) = pt_eta_cap(mu0) else {
        // mu0 = 0: standard well, infinitely many
        return Ok(usize::MAX);
    };
    if cap <= cfg.eta_min {
        return Ok(0);
    }
    let f = |eta: f64| closed_form(eta, mu0, Mode::PtSymmetric).expect("validated domain");
    let mut count = 0;
    let window = cfg.eta_max - cfg.eta_min;
    let mut start = cfg.eta_min;
    let mut last_eta = f64::NEG_INFINITY;
    while start < cap {
        let end = (start + window).min(cap);
        let wcfg = RootConfig {
            eta_min: start,
            eta_max: end,
            ..*cfg
        };
        for rec in find_roots(f, &wcfg)? {
            if rec.eta - last_eta > 10.0 * cfg.refine_tol {
                count += 1;
                last_eta = rec.eta;
            }
        }
        start = end;
    }
    Ok(count)
}

/// Largest μ₀ (within `search_tol`) still supporting at least one
/// real-energy PT bound state, by bisection on the root count.
pub fn critical_mu0(cfg: &RootConfig, search_tol: f64) -> Result<f64> {
    cfg.validate()?;
    if !search_tol.is_finite() || search_tol <= 0.0 {
        return Err(Error::NonPositive {
            name: "search_tol",
            value: search_tol,
        });
    }
    let has_state = |mu0: f64| -> Result<bool> { Ok(pt_root_count(mu0, cfg)? > 0) };

    let mut lo = 0.25;
    while !has_state(lo)? {
        lo *= 0.5;
        if lo < 1e-6 {
            return Err(Error::InvalidRootConfig(
                "no PT bound state found even at tiny mu0; scan grid too coarse".into(),
            ));
        }
    }
    let mut hi = 0.5;
    while has_state(hi)? {
        hi *= 1.5;
        if hi > 64.0 {
            return Err(Error::InvalidRootConfig(
                "PT bound states persist at huge mu0; scan configuration inconsistent".into(),
            ));
        }
    }
    while hi - lo > search_tol {
        let mid = 0.5 * (lo + hi);
        if has_state(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// E_n/E₀ matrix: rows n = 1..n_states, one column per μ₀ value;
/// `None` marks a PT state that does not exist.
pub fn table_rows(
    mode: Mode,
    mu0_list: &[f64],
    n_states: usize,
    cfg: &RootConfig,
    well: &WellConfig,
) -> Result<Vec<Vec<Option<f64>>>> {
    let mut columns = Vec::with_capacity(mu0_list.len());
    for &mu0 in mu0_list {
        let spectrum = solve_spectrum(mode, mu0, n_states, cfg, well)?;
        columns.push(spectrum.states);
    }
    let rows = (0..n_states)
        .map(|i| {
            columns
                .iter()
                .map(|states| states.get(i).map(|s| s.energy_ratio))
                .collect()
        })
        .collect();
    Ok(rows)
}

/// Closed-form characteristic sampled over an η grid, for figure export.
pub fn characteristic_curve(mode: Mode, mu0: f64, eta_grid: &[f64]) -> Result<SampledFunction> {
    mode.validate_mu0(mu0)?;
    let mut values = Vec::with_capacity(eta_grid.len());
    for &eta in eta_grid {
        values.push(num_complex::Complex64::new(
            closed_form(eta, mu0, mode)?,
            0.0,
        ));
    }
    SampledFunction::new(
        eta_grid.to_vec(),
        values,
        SampleMeta {
            mode,
            mu0,
            kind: SampleKind::CharacteristicCurve,
        },
    )
}
