//! Deterministic location of all zeros of a real-valued function on a
//! bounded interval: a fixed-grid bracketing scan followed by Brent
//! refinement (inverse-quadratic steps with a bisection fallback).
//!
//! The scan carries a near-tangency rule for the disappearing-root regime
//! (the PT characteristic just below the critical step height, where two
//! roots merge): a grid-local minimum of |f| below 1e-8 of the scan scale
//! without a sign change triggers a 100x local re-scan; if the refined
//! minimum falls below 1e-12 of scale the argmin is accepted as a
//! degenerate (tangent or endpoint) root.

use serde::{Deserialize, Serialize};

use crate::core::RootConfig;
use crate::error::{Error, Result};

/// Trigger for the local 100x re-scan, relative to the scan scale.
const TANGENCY_TRIGGER: f64 = 1e-8;
/// Acceptance threshold for a degenerate root, relative to the scan scale.
const DEGENERATE_ACCEPT: f64 = 1e-12;
/// Local re-scan refinement factor.
const LOCAL_REFINE: usize = 100;

/// One located root with its provenance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RootRecord {
    /// Refined root position.
    pub eta: f64,
    /// Bracket handed to the refiner; degenerate (a == b) for exact-zero
    /// grid points and tangent roots.
    pub bracket: (f64, f64),
    /// |f(eta)| after refinement.
    pub residual: f64,
    /// Refinement iterations consumed.
    pub iterations: u32,
}

/// Scan [eta_min, eta_max] on the configured grid and return every
/// bracket [a, b] with f(a)·f(b) < 0, in increasing order. Grid points
/// evaluating exactly to zero and accepted tangency minima are returned
/// as degenerate brackets [a, a].
pub fn scan_brackets<F>(f: F, cfg: &RootConfig) -> Result<Vec<(f64, f64)>>
where
    F: Fn(f64) -> f64,
{
    cfg.validate()?;
    let xs = scan_grid(cfg);
    let vals: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
    let scale = vals
        .iter()
        .filter(|v| v.is_finite())
        .fold(1.0f64, |acc, v| acc.max(v.abs()));

    let mut brackets: Vec<(f64, f64)> = Vec::new();
    for i in 0..xs.len() {
        if vals[i] == 0.0 {
            brackets.push((xs[i], xs[i]));
        } else if i + 1 < xs.len() && vals[i] * vals[i + 1] < 0.0 {
            brackets.push((xs[i], xs[i + 1]));
        }
    }

    // Near-tangency pass: same-sign local minima of |f| below the trigger.
    for i in 0..xs.len() {
        let v = vals[i].abs();
        if v == 0.0 || v >= TANGENCY_TRIGGER * scale {
            continue;
        }
        let left_ok = i == 0 || (vals[i - 1] * vals[i] > 0.0 && vals[i - 1].abs() >= v);
        let right_ok =
            i + 1 == xs.len() || (vals[i + 1] * vals[i] > 0.0 && vals[i + 1].abs() >= v);
        if !(left_ok && right_ok) {
            continue;
        }
        let lo = if i == 0 { xs[0] } else { xs[i - 1] };
        let hi = if i + 1 == xs.len() { xs[i] } else { xs[i + 1] };
        if let Some(b) = local_rescan(&f, lo, hi, scale) {
            brackets.push(b);
        }
    }

    brackets.sort_by(|a, b| a.0.total_cmp(&b.0));
    brackets.dedup_by(|a, b| a.0 == b.0 && a.1 == b.1);
    Ok(brackets)
}

/// 100x finer re-scan of [lo, hi]; returns a sign-change bracket, a
/// degenerate bracket at the argmin when the minimum is consistent with
/// a tangent/endpoint zero, or nothing.
fn local_rescan<F>(f: &F, lo: f64, hi: f64, scale: f64) -> Option<(f64, f64)>
where
    F: Fn(f64) -> f64,
{
    let n = 2 * LOCAL_REFINE;
    let h = (hi - lo) / n as f64;
    let mut best = (lo, f(lo).abs());
    let mut prev = (lo, f(lo));
    for k in 1..=n {
        let x = if k == n { hi } else { lo + k as f64 * h };
        let v = f(x);
        if prev.1 * v < 0.0 {
            return Some((prev.0, x));
        }
        if v.abs() < best.1 {
            best = (x, v.abs());
        }
        prev = (x, v);
    }
    (best.1 < DEGENERATE_ACCEPT * scale).then_some((best.0, best.0))
}

fn scan_grid(cfg: &RootConfig) -> Vec<f64> {
    let span = cfg.eta_max - cfg.eta_min;
    let cells = (span / cfg.grid_step).ceil() as usize;
    let mut xs = Vec::with_capacity(cells + 1);
    for k in 0..=cells {
        let x = cfg.eta_min + k as f64 * cfg.grid_step;
        if x >= cfg.eta_max {
            xs.push(cfg.eta_max);
            break;
        }
        xs.push(x);
    }
    if *xs.last().unwrap() < cfg.eta_max {
        xs.push(cfg.eta_max);
    }
    xs
}

/// Refine one bracket to a root via Brent's method.
///
/// Converges when the bracket width falls below `refine_tol` (plus a few
/// ulps of the iterate) or f hits exactly zero; bisection steps are taken
/// whenever the inverse-quadratic candidate would leave the bracket or
/// shrink too slowly.
pub fn refine<F>(f: F, bracket: (f64, f64), cfg: &RootConfig) -> Result<RootRecord>
where
    F: Fn(f64) -> f64,
{
    cfg.validate()?;
    let (mut a, mut b) = bracket;
    if a == b {
        return Ok(RootRecord {
            eta: a,
            bracket,
            residual: f(a).abs(),
            iterations: 0,
        });
    }
    let mut fa = f(a);
    let mut fb = f(b);
    if fa == 0.0 {
        return Ok(RootRecord {
            eta: a,
            bracket,
            residual: 0.0,
            iterations: 0,
        });
    }
    if fb == 0.0 {
        return Ok(RootRecord {
            eta: b,
            bracket,
            residual: 0.0,
            iterations: 0,
        });
    }
    if fa * fb > 0.0 {
        return Err(Error::InvalidBracket { a, b });
    }

    let eps = f64::EPSILON;
    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut e = d;
    for iter in 1..=cfg.max_refine_iters {
        if (fb > 0.0 && fc > 0.0) || (fb < 0.0 && fc < 0.0) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * eps * b.abs() + 0.5 * cfg.refine_tol;
        let xm = 0.5 * (c - b);
        if xm.abs() <= tol1 || fb == 0.0 {
            return Ok(RootRecord {
                eta: b,
                bracket,
                residual: fb.abs(),
                iterations: iter,
            });
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            // inverse quadratic interpolation (secant when a == c)
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                q = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
                q = (q - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            let min1 = 3.0 * xm * q - (tol1 * q).abs();
            let min2 = (e * q).abs();
            if 2.0 * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        if d.abs() > tol1 {
            b += d;
        } else {
            b += tol1.copysign(xm);
        }
        fb = f(b);
    }
    Err(Error::IterationBudget {
        a: bracket.0,
        b: bracket.1,
        max_iters: cfg.max_refine_iters,
    })
}

/// Scan and refine: every root of f on [eta_min, eta_max], strictly
/// increasing, duplicates within 10·refine_tol merged.
pub fn find_roots<F>(f: F, cfg: &RootConfig) -> Result<Vec<RootRecord>>
where
    F: Fn(f64) -> f64,
{
    let brackets = scan_brackets(&f, cfg)?;
    let mut roots = Vec::with_capacity(brackets.len());
    for bracket in brackets {
        roots.push(refine(&f, bracket, cfg)?);
    }
    roots.sort_by(|a, b| a.eta.total_cmp(&b.eta));
    roots.dedup_by(|next, prev| (next.eta - prev.eta).abs() <= 10.0 * cfg.refine_tol);
    Ok(roots)
}
