//! Benchmark single-mode states: photon-number distributions, exact parity,
//! and phase-averaged quadrature densities.
//!
//! The quadrature convention is fixed so that the vacuum density is
//! `π^(-1/2) exp(-x²)` (vacuum variance 1/2, level-ν second moment ν + 1/2).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oscillator;

/// Family of the benchmark state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StateKind {
    Coherent,
    Thermal,
    SqueezedVacuum,
}

/// A single-mode state identified by its family and mean photon number.
///
/// For `SqueezedVacuum` the (real, phase-zero) squeeze parameter is implied
/// by `sinh²r = ⟨n̂⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StateSpec {
    pub kind: StateKind,
    pub mean_photon_number: f64,
}

impl StateSpec {
    pub fn new(kind: StateKind, mean_photon_number: f64) -> Result<Self> {
        if !mean_photon_number.is_finite() || mean_photon_number < 0.0 {
            return Err(Error::invalid(
                "mean_photon_number",
                format!("must be a finite nonnegative real, got {mean_photon_number}"),
            ));
        }
        Ok(StateSpec {
            kind,
            mean_photon_number,
        })
    }

    pub fn coherent(mean_photon_number: f64) -> Result<Self> {
        Self::new(StateKind::Coherent, mean_photon_number)
    }

    pub fn thermal(mean_photon_number: f64) -> Result<Self> {
        Self::new(StateKind::Thermal, mean_photon_number)
    }

    pub fn squeezed_vacuum(mean_photon_number: f64) -> Result<Self> {
        Self::new(StateKind::SqueezedVacuum, mean_photon_number)
    }
}

/// Truncated photon-number distribution ρ_ν for ν = 0..=cutoff, together
/// with the probability mass excluded by the truncation.
#[derive(Debug, Clone, PartialEq)]
pub struct PhotonDistribution {
    probs: Vec<f64>,
    tail_bound: f64,
}

impl PhotonDistribution {
    /// Wraps an explicit probability sequence, validating the mass balance.
    pub fn from_probs(probs: Vec<f64>, tail_bound: f64) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::invalid("probs", "must not be empty"));
        }
        if probs.iter().any(|&p| !(0.0..=1.0).contains(&p)) {
            return Err(Error::invalid("probs", "every entry must lie in [0, 1]"));
        }
        if !(0.0..=1.0).contains(&tail_bound) {
            return Err(Error::invalid("tail_bound", "must lie in [0, 1]"));
        }
        let total: f64 = probs.iter().sum::<f64>() + tail_bound;
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::invalid(
                "probs",
                format!("mass plus tail must be 1 within 1e-12, got {total}"),
            ));
        }
        Ok(PhotonDistribution { probs, tail_bound })
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    /// Highest retained Fock index.
    pub fn cutoff(&self) -> usize {
        self.probs.len() - 1
    }

    pub fn tail_bound(&self) -> f64 {
        self.tail_bound
    }

    /// ρ_ν, zero beyond the cutoff.
    pub fn prob(&self, nu: usize) -> f64 {
        self.probs.get(nu).copied().unwrap_or(0.0)
    }

    /// Σ ν ρ_ν over the retained range.
    pub fn mean(&self) -> f64 {
        self.probs
            .iter()
            .enumerate()
            .map(|(nu, &p)| nu as f64 * p)
            .sum()
    }
}

/// Raw probability sequence with a bound on the mass beyond the last term.
///
/// Terms are generated until the remaining tail provably drops below
/// `limit`; the bound comes from the monotone geometric-ratio envelope of
/// each family, so limits far below the 1e-16 resolution of a cumulative
/// sum remain meaningful.
fn raw_probs(spec: &StateSpec, limit: f64) -> (Vec<f64>, f64) {
    let nbar = spec.mean_photon_number;
    let mut probs = Vec::new();
    match spec.kind {
        StateKind::Coherent => {
            // Poisson with intensity nbar.
            let mut p = (-nbar).exp();
            probs.push(p);
            let mut nu = 0usize;
            loop {
                let ratio_next = nbar / (nu as f64 + 1.0);
                // once the ratio is below 1/2 the remaining tail is bounded
                // by a geometric series with that ratio
                if ratio_next < 0.5 {
                    let bound = p * ratio_next / (1.0 - ratio_next);
                    if bound <= limit || bound == 0.0 {
                        return (probs, bound);
                    }
                }
                p *= ratio_next;
                probs.push(p);
                nu += 1;
                if nu > 1_000_000 {
                    return (probs, p);
                }
            }
        }
        StateKind::Thermal => {
            // Geometric: ρ_ν = nbar^ν / (1+nbar)^(ν+1).
            let r = nbar / (1.0 + nbar);
            let mut p = 1.0 / (1.0 + nbar);
            probs.push(p);
            loop {
                let bound = if r < 1.0 { p * r / (1.0 - r) } else { 1.0 };
                if bound <= limit || bound == 0.0 {
                    return (probs, bound);
                }
                p *= r;
                probs.push(p);
                if probs.len() > 1_000_000 {
                    return (probs, p);
                }
            }
        }
        StateKind::SqueezedVacuum => {
            // Even Fock levels only; sinh²r = nbar fixes tanh²r.
            let t2 = nbar / (1.0 + nbar);
            let mut p = 1.0 / (1.0 + nbar).sqrt();
            probs.push(p);
            let mut m = 0usize;
            loop {
                let bound = if t2 < 1.0 { p * t2 / (1.0 - t2) } else { 1.0 };
                if bound <= limit || bound == 0.0 {
                    return (probs, bound);
                }
                let next = p * t2 * (2.0 * m as f64 + 1.0) / (2.0 * m as f64 + 2.0);
                probs.push(0.0);
                probs.push(next);
                p = next;
                m += 1;
                if probs.len() > 1_000_000 {
                    return (probs, p);
                }
            }
        }
    }
}

/// Truncated photon-number distribution of a benchmark state.
///
/// The cutoff is the smallest Fock index whose excluded tail mass is at or
/// below `tail_tolerance`; tail masses are accumulated from the far end so
/// tolerances well below 1e-16 of total mass remain honored.
pub fn photon_distribution(spec: &StateSpec, tail_tolerance: f64) -> Result<PhotonDistribution> {
    if !(tail_tolerance > 0.0 && tail_tolerance <= 1e-6) {
        return Err(Error::invalid(
            "tail_tolerance",
            format!("must lie in (0, 1e-6], got {tail_tolerance}"),
        ));
    }
    let (probs, bound_beyond) = raw_probs(spec, tail_tolerance * 1e-3);
    // suffix sums from the far end: no cancellation, accurate tiny tails
    let mut tail = bound_beyond;
    let mut cutoff = probs.len() - 1;
    let mut tail_at_cutoff = tail;
    for nu in (1..probs.len()).rev() {
        tail += probs[nu];
        if tail <= tail_tolerance {
            cutoff = nu - 1;
            tail_at_cutoff = tail;
        } else {
            break;
        }
    }
    let truncated = probs[..=cutoff].to_vec();
    PhotonDistribution::from_probs(truncated, tail_at_cutoff)
}

/// Expectation of the parity operator, Σ (−1)^ν ρ_ν, summed until the
/// absolute tail is below 1e-12.
pub fn exact_parity(spec: &StateSpec) -> f64 {
    let (probs, _) = raw_probs(spec, 1e-13);
    probs
        .iter()
        .enumerate()
        .map(|(nu, &p)| if nu % 2 == 0 { p } else { -p })
        .sum()
}

/// Phase-averaged quadrature density p(x) = Σ ρ_ν ψ_ν(x)².
#[derive(Debug, Clone)]
pub struct QuadratureDensity {
    probs: Vec<f64>,
    support: (f64, f64),
}

impl QuadratureDensity {
    /// Density value at x (nonnegative everywhere).
    pub fn density(&self, x: f64) -> f64 {
        oscillator::eigenfunction_square_mixture(&self.probs, x)
    }

    /// Interval outside which the density mass is negligible.
    pub fn support_hint(&self) -> (f64, f64) {
        self.support
    }

    /// The photon-number weights behind the mixture.
    pub fn weights(&self) -> &[f64] {
        &self.probs
    }
}

/// Phase-averaged quadrature density of a benchmark state at a given Fock
/// cutoff. Rejects cutoffs that leave more than 1e-6 of tail mass.
pub fn phase_averaged_density(spec: &StateSpec, cutoff: usize) -> Result<QuadratureDensity> {
    let (probs, bound_beyond) = raw_probs(spec, 1e-18);
    let tail: f64 = if cutoff + 1 < probs.len() {
        probs[cutoff + 1..].iter().rev().sum::<f64>() + bound_beyond
    } else {
        bound_beyond
    };
    if tail > 1e-6 {
        return Err(Error::invalid(
            "cutoff",
            format!("leaves tail mass {tail:e} above 1e-6"),
        ));
    }
    let keep = cutoff.min(probs.len() - 1);
    let probs = probs[..=keep].to_vec();
    // classical turning point of the highest retained level, padded
    let turning = (2.0 * keep as f64 + 1.0).sqrt();
    let half_width = (turning + 5.0).max(6.0);
    Ok(QuadratureDensity {
        probs,
        support: (-half_width, half_width),
    })
}

/// Convenience: density with the cutoff chosen for tail mass ≤ 1e-12.
pub fn phase_averaged_density_auto(spec: &StateSpec) -> Result<QuadratureDensity> {
    let dist = photon_distribution(spec, 1e-12)?;
    phase_averaged_density(spec, dist.cutoff())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::adaptive_simpson;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn specs() -> [StateSpec; 3] {
        [
            StateSpec::coherent(4.0).unwrap(),
            StateSpec::thermal(2.0).unwrap(),
            StateSpec::squeezed_vacuum(1.0).unwrap(),
        ]
    }

    #[test]
    fn rejects_negative_mean_photon_number() {
        assert!(StateSpec::coherent(-0.5).is_err());
        assert!(StateSpec::new(StateKind::Thermal, f64::NAN).is_err());
    }

    #[test]
    fn coherent_ground_probability_is_poisson() {
        // independent oracle: evaluate the Poisson mass function directly
        let lambda: f64 = 4.0;
        let oracle_rho0 = (-lambda).exp();
        let oracle_rho3 = (-lambda).exp() * lambda.powi(3) / 6.0;
        let dist = photon_distribution(&StateSpec::coherent(4.0).unwrap(), 1e-12).unwrap();
        assert_relative_eq!(dist.prob(0), oracle_rho0, max_relative = 1e-14);
        assert_relative_eq!(dist.prob(3), oracle_rho3, max_relative = 1e-14);
        assert_abs_diff_eq!(dist.prob(0), 1.8316e-2, epsilon = 1e-6);
    }

    #[test]
    fn thermal_probabilities_are_geometric() {
        let dist = photon_distribution(&StateSpec::thermal(2.0).unwrap(), 1e-12).unwrap();
        assert_relative_eq!(dist.prob(0), 1.0 / 3.0, max_relative = 1e-15);
        assert_relative_eq!(dist.prob(1), 2.0 / 9.0, max_relative = 1e-15);
    }

    #[test]
    fn squeezed_vacuum_has_even_support_only() {
        let dist = photon_distribution(&StateSpec::squeezed_vacuum(1.0).unwrap(), 1e-12).unwrap();
        assert_eq!(dist.prob(1), 0.0);
        for m in 0..dist.cutoff() / 2 {
            assert_eq!(dist.prob(2 * m + 1), 0.0, "odd level {} not empty", 2 * m + 1);
        }
        assert!(dist.prob(2) > 0.0);
    }

    #[test]
    fn mean_reproduces_spec_for_all_kinds() {
        for spec in specs() {
            let dist = photon_distribution(&spec, 1e-12).unwrap();
            assert_abs_diff_eq!(dist.mean(), spec.mean_photon_number, epsilon = 1e-8);
        }
    }

    #[test]
    fn mass_balance_holds() {
        for spec in specs() {
            for tol in [1e-6, 1e-10, 1e-14, 1e-40, 1e-120] {
                let dist = photon_distribution(&spec, tol).unwrap();
                let total: f64 = dist.probs().iter().sum::<f64>() + dist.tail_bound();
                assert_abs_diff_eq!(total, 1.0, epsilon = 1e-12);
                assert!(dist.tail_bound() <= tol, "tail {} above {}", dist.tail_bound(), tol);
            }
        }
    }

    #[test]
    fn tiny_tolerances_extend_the_cutoff() {
        let spec = StateSpec::thermal(0.9).unwrap();
        let coarse = photon_distribution(&spec, 1e-10).unwrap();
        let fine = photon_distribution(&spec, 1e-120).unwrap();
        assert!(fine.cutoff() > 2 * coarse.cutoff());
        // geometric tail: ratio^(cutoff+1) <= tol
        let r: f64 = 0.9 / 1.9;
        assert!(r.powi(fine.cutoff() as i32 + 1) <= 1e-120 * 1.01);
    }

    #[test]
    fn parity_of_thermal_matches_alternating_series() {
        // brute-force alternating sum of the geometric distribution
        let nbar: f64 = 2.0;
        let mut oracle = 0.0;
        for nu in 0..2000 {
            let p = nbar.powi(nu) / (1.0 + nbar).powi(nu + 1);
            oracle += if nu % 2 == 0 { p } else { -p };
        }
        let parity = exact_parity(&StateSpec::thermal(2.0).unwrap());
        assert_relative_eq!(parity, oracle, max_relative = 1e-12);
        assert_relative_eq!(parity, 0.2, max_relative = 1e-11);
    }

    #[test]
    fn parity_of_vacuum_is_one() {
        assert_relative_eq!(exact_parity(&StateSpec::coherent(0.0).unwrap()), 1.0);
        assert_relative_eq!(exact_parity(&StateSpec::thermal(0.0).unwrap()), 1.0);
    }

    #[test]
    fn parity_of_coherent_matches_brute_force() {
        // brute-force alternating Poisson sum
        let lambda: f64 = 4.0;
        let mut term = (-lambda).exp();
        let mut oracle = term;
        for nu in 1..400 {
            term *= lambda / nu as f64;
            oracle += if nu % 2 == 0 { term } else { -term };
        }
        let parity = exact_parity(&StateSpec::coherent(4.0).unwrap());
        assert_relative_eq!(parity, oracle, max_relative = 1e-10);
        assert_abs_diff_eq!(parity, 3.3546e-4, epsilon = 1e-8);
    }

    #[test]
    fn parity_stays_in_unit_interval() {
        for spec in specs() {
            let p = exact_parity(&spec);
            assert!((-1.0..=1.0).contains(&p));
        }
        // squeezed vacuum has even support only, so parity is +1
        assert_abs_diff_eq!(
            exact_parity(&StateSpec::squeezed_vacuum(1.0).unwrap()),
            1.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn vacuum_density_is_the_ground_state_density() {
        let density = phase_averaged_density_auto(&StateSpec::coherent(0.0).unwrap()).unwrap();
        for &x in &[0.0, 0.7, -1.3, 2.9] {
            let expect = (-x * x).exp() / std::f64::consts::PI.sqrt();
            assert_relative_eq!(density.density(x), expect, max_relative = 1e-12);
        }
    }

    #[test]
    fn thermal_density_matches_direct_mixture_at_origin() {
        // direct sum with independently evaluated Hermite-function values
        let spec = StateSpec::thermal(2.0).unwrap();
        let dist = photon_distribution(&spec, 1e-12).unwrap();
        let psi0 = oscillator::eigenfunctions(&[0.0], dist.cutoff());
        let oracle: f64 = dist
            .probs()
            .iter()
            .enumerate()
            .map(|(nu, &p)| p * psi0[nu][0] * psi0[nu][0])
            .sum();
        let density = phase_averaged_density(&spec, dist.cutoff()).unwrap();
        assert_relative_eq!(density.density(0.0), oracle, max_relative = 1e-12);
    }

    #[test]
    fn densities_are_normalized() {
        for spec in specs() {
            let density = phase_averaged_density_auto(&spec).unwrap();
            let (lo, hi) = density.support_hint();
            let total = adaptive_simpson(&|x| density.density(x), lo, hi, 1e-11).unwrap();
            assert_abs_diff_eq!(total, 1.0, epsilon = 1e-9);
        }
    }

    #[test]
    fn density_second_moment_fixes_the_convention() {
        for spec in specs() {
            let density = phase_averaged_density_auto(&spec).unwrap();
            let (lo, hi) = density.support_hint();
            let second = adaptive_simpson(&|x| x * x * density.density(x), lo, hi, 1e-10).unwrap();
            assert_abs_diff_eq!(second, spec.mean_photon_number + 0.5, epsilon = 1e-6);
        }
    }

    #[test]
    fn density_rejects_cutoff_with_large_tail() {
        let spec = StateSpec::thermal(2.0).unwrap();
        assert!(phase_averaged_density(&spec, 3).is_err());
        assert!(phase_averaged_density(&spec, 80).is_ok());
    }
}
