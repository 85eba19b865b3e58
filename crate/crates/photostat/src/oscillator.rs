//! Harmonic-oscillator wavefunction machinery.
//!
//! Normalized eigenfunctions ψ_ν (vacuum variance 1/2) are evaluated by the
//! stable upward three-term recurrence; the non-normalizable second solutions
//! φ_ν, fixed by the Wronskian ψ_ν φ_ν' − ψ_ν' φ_ν = 2, are integrated
//! outward from the origin with a Numerov scheme (outward is the stable
//! direction for a solution that grows past its turning point). Both families
//! satisfy the same ladder and three-term recurrences, which is what makes
//! the analytic product-derivative form of the pattern functions possible.

use crate::error::{Error, Result};

/// Uniform evaluation grid x_i = start + i·step.
#[derive(Debug, Clone, PartialEq)]
pub struct UniformGrid {
    start: f64,
    step: f64,
    len: usize,
}

impl UniformGrid {
    pub fn new(start: f64, step: f64, len: usize) -> Result<Self> {
        if !start.is_finite() || !step.is_finite() || step <= 0.0 {
            return Err(Error::invalid("step", "grid step must be finite and positive"));
        }
        if len < 2 {
            return Err(Error::invalid("len", "grid needs at least two points"));
        }
        Ok(UniformGrid { start, step, len })
    }

    /// Centers of `count` equal bins spanning [lo, hi].
    pub fn bin_centers(lo: f64, hi: f64, count: usize) -> Result<Self> {
        if !(lo < hi) {
            return Err(Error::invalid("range", "bin range must satisfy lo < hi"));
        }
        let step = (hi - lo) / count as f64;
        Self::new(lo + 0.5 * step, step, count)
    }

    pub fn x(&self, i: usize) -> f64 {
        self.start + self.step * i as f64
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn start(&self) -> f64 {
        self.start
    }

    pub fn end(&self) -> f64 {
        self.x(self.len - 1)
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.len).map(|i| self.x(i))
    }

    /// Refined grid with `factor` extra nodes per step, sharing this grid's
    /// nodes, extended to cover a neighborhood of the origin.
    pub(crate) fn refine_through_origin(&self, factor: usize) -> (UniformGrid, usize, Vec<usize>) {
        let h = self.step / factor as f64;
        // lattice index (relative to self.start) of the node nearest 0
        let j_origin = (-self.start / h).round() as i64;
        let j_lo = j_origin.min(0) - 1;
        let j_hi = j_origin.max(((self.len - 1) * factor) as i64) + 1;
        let len = (j_hi - j_lo + 1) as usize;
        let fine = UniformGrid {
            start: self.start + h * j_lo as f64,
            step: h,
            len,
        };
        let origin_idx = (j_origin - j_lo) as usize;
        let sample_idx = (0..self.len)
            .map(|i| ((i * factor) as i64 - j_lo) as usize)
            .collect();
        (fine, origin_idx, sample_idx)
    }
}

/// ψ_ν(x) for ν = 0..=nu_max on the given abscissas, one row per ν.
pub fn eigenfunctions(xs: &[f64], nu_max: usize) -> Vec<Vec<f64>> {
    let norm0 = std::f64::consts::PI.powf(-0.25);
    let mut rows = Vec::with_capacity(nu_max + 1);
    rows.push(xs.iter().map(|&x| norm0 * (-0.5 * x * x).exp()).collect::<Vec<_>>());
    if nu_max == 0 {
        return rows;
    }
    let sqrt2 = std::f64::consts::SQRT_2;
    rows.push(
        xs.iter()
            .zip(&rows[0])
            .map(|(&x, &p0)| sqrt2 * x * p0)
            .collect(),
    );
    for nu in 1..nu_max {
        let a = (2.0 / (nu as f64 + 1.0)).sqrt();
        let b = (nu as f64 / (nu as f64 + 1.0)).sqrt();
        let next: Vec<f64> = xs
            .iter()
            .enumerate()
            .map(|(i, &x)| a * x * rows[nu][i] - b * rows[nu - 1][i])
            .collect();
        rows.push(next);
    }
    rows
}

/// ψ_ν(0) for ν = 0..=nu_max (zero at odd ν).
pub fn eigenfunctions_at_zero(nu_max: usize) -> Vec<f64> {
    let mut vals = vec![0.0; nu_max + 1];
    vals[0] = std::f64::consts::PI.powf(-0.25);
    let mut nu = 2;
    while nu <= nu_max {
        vals[nu] = -((nu as f64 - 1.0) / nu as f64).sqrt() * vals[nu - 2];
        nu += 2;
    }
    vals
}

/// Σ w_ν ψ_ν(x)² evaluated by a streaming recurrence at a single point.
pub fn eigenfunction_square_mixture(weights: &[f64], x: f64) -> f64 {
    let mut prev = std::f64::consts::PI.powf(-0.25) * (-0.5 * x * x).exp();
    let mut total = weights[0] * prev * prev;
    if weights.len() == 1 {
        return total;
    }
    let mut curr = std::f64::consts::SQRT_2 * x * prev;
    total += weights[1] * curr * curr;
    for (nu, &w) in weights.iter().enumerate().skip(2) {
        let k = nu as f64;
        let next = (2.0 / k).sqrt() * x * curr - ((k - 1.0) / k).sqrt() * prev;
        prev = curr;
        curr = next;
        total += w * curr * curr;
    }
    total
}

/// Taylor coefficients of y'' = (x² − c)·y around 0 for seeds (a0, a1).
fn taylor_value(c: f64, a0: f64, a1: f64, x: f64) -> f64 {
    const TERMS: usize = 30;
    let mut coeff = [0.0; TERMS];
    coeff[0] = a0;
    coeff[1] = a1;
    for k in 0..TERMS - 2 {
        let lower = if k >= 2 { coeff[k - 2] } else { 0.0 };
        coeff[k + 2] = (lower - c * coeff[k]) / ((k as f64 + 2.0) * (k as f64 + 1.0));
    }
    coeff.iter().rev().fold(0.0, |acc, &a| acc * x + a)
}

/// φ_ν on the grid for ν = 0..=nu_max, Wronskian-normalized against ψ_ν.
///
/// Each level is integrated independently; sharing the three-term recurrence
/// across levels is unstable wherever an intermediate level is deep in its
/// classically forbidden region.
pub fn irregular_solutions(grid: &UniformGrid, nu_max: usize) -> Result<Vec<Vec<f64>>> {
    let max_abs_x = grid.start().abs().max(grid.end().abs());
    if max_abs_x > 36.0 {
        return Err(Error::invalid(
            "grid",
            format!("|x| up to {max_abs_x:.1} overflows the irregular solution"),
        ));
    }
    let psi0 = eigenfunctions_at_zero(nu_max.max(1));
    let mut rows = Vec::with_capacity(nu_max + 1);
    for nu in 0..=nu_max {
        // parity opposite to psi_nu fixes the seed from the Wronskian at 0
        let (a0, a1) = if nu % 2 == 0 {
            (0.0, 2.0 / psi0[nu])
        } else {
            let dpsi0 = (2.0 * nu as f64).sqrt() * psi0[nu - 1];
            (-2.0 / dpsi0, 0.0)
        };
        rows.push(integrate_outward(grid, 2.0 * nu as f64 + 1.0, a0, a1)?);
    }
    Ok(rows)
}

/// Numerov integration of y'' = (x² − c)·y outward from the origin.
fn integrate_outward(grid: &UniformGrid, c: f64, a0: f64, a1: f64) -> Result<Vec<f64>> {
    let h = grid.step();
    let n = grid.len();
    let q = |i: usize| {
        let x = grid.x(i);
        x * x - c
    };
    let q_max = grid.start().abs().max(grid.end().abs()).powi(2).max(c);
    if h * h * q_max / 12.0 >= 0.9 {
        return Err(Error::invalid(
            "grid",
            format!("step {h} too coarse for the Numerov scheme at this level"),
        ));
    }
    let origin = (-grid.start() / h).round().clamp(0.0, (n - 1) as f64) as usize;
    let mut y = vec![0.0; n];
    let seed = |i: usize| taylor_value(c, a0, a1, grid.x(i));
    y[origin] = seed(origin);
    if origin + 1 < n {
        y[origin + 1] = seed(origin + 1);
        for i in origin + 1..n - 1 {
            y[i + 1] = (2.0 * (1.0 + 5.0 * h * h * q(i) / 12.0) * y[i]
                - (1.0 - h * h * q(i - 1) / 12.0) * y[i - 1])
                / (1.0 - h * h * q(i + 1) / 12.0);
        }
    }
    if origin >= 1 {
        y[origin - 1] = seed(origin - 1);
        for i in (1..=origin - 1).rev() {
            y[i - 1] = (2.0 * (1.0 + 5.0 * h * h * q(i) / 12.0) * y[i]
                - (1.0 - h * h * q(i + 1) / 12.0) * y[i + 1])
                / (1.0 - h * h * q(i - 1) / 12.0);
        }
    }
    Ok(y)
}
