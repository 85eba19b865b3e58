//! Small numerical utilities shared across modules.

use crate::error::{Error, Result};

/// Table of ln(k!) for k = 0..=n, built by cumulative summation.
pub fn ln_factorials(n: usize) -> Vec<f64> {
    let mut table = Vec::with_capacity(n + 1);
    table.push(0.0);
    let mut acc = 0.0;
    for k in 1..=n {
        acc += (k as f64).ln();
        table.push(acc);
    }
    table
}

/// ln C(n, k) from a precomputed ln-factorial table.
pub fn ln_choose(table: &[f64], n: usize, k: usize) -> f64 {
    debug_assert!(k <= n && n < table.len());
    table[n] - table[k] - table[n - k]
}

/// Adaptive Simpson quadrature with an absolute-error target.
///
/// Splits intervals until the Richardson estimate of the local error is below
/// the locally apportioned tolerance; reports non-convergence instead of
/// silently returning a truncated value.
pub fn adaptive_simpson<F>(f: &F, lo: f64, hi: f64, abs_tol: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    const MAX_DEPTH: u32 = 40;
    let mid = 0.5 * (lo + hi);
    let f_lo = f(lo);
    let f_mid = f(mid);
    let f_hi = f(hi);
    let whole = simpson(lo, hi, f_lo, f_mid, f_hi);
    simpson_step(
        f,
        lo,
        hi,
        f_lo,
        f_mid,
        f_hi,
        whole,
        abs_tol,
        MAX_DEPTH,
    )
    .ok_or(Error::QuadratureNonConvergence {
        lo,
        hi,
        tolerance: abs_tol,
    })
}

fn simpson(lo: f64, hi: f64, f_lo: f64, f_mid: f64, f_hi: f64) -> f64 {
    (hi - lo) / 6.0 * (f_lo + 4.0 * f_mid + f_hi)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step<F>(
    f: &F,
    lo: f64,
    hi: f64,
    f_lo: f64,
    f_mid: f64,
    f_hi: f64,
    whole: f64,
    abs_tol: f64,
    depth: u32,
) -> Option<f64>
where
    F: Fn(f64) -> f64,
{
    let mid = 0.5 * (lo + hi);
    let lmid = 0.5 * (lo + mid);
    let rmid = 0.5 * (mid + hi);
    let f_lmid = f(lmid);
    let f_rmid = f(rmid);
    let left = simpson(lo, mid, f_lo, f_lmid, f_mid);
    let right = simpson(mid, hi, f_mid, f_rmid, f_hi);
    let delta = left + right - whole;
    if delta.abs() <= 15.0 * abs_tol {
        return Some(left + right + delta / 15.0);
    }
    if depth == 0 {
        return None;
    }
    let half_tol = 0.5 * abs_tol;
    let l = simpson_step(f, lo, mid, f_lo, f_lmid, f_mid, left, half_tol, depth - 1)?;
    let r = simpson_step(f, mid, hi, f_mid, f_rmid, f_hi, right, half_tol, depth - 1)?;
    Some(l + r)
}
