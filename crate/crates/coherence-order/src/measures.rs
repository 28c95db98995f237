//! The four coherence measures on a qubit density matrix.
//!
//! - `l1`: C_l1(ρ) = Σ_{i≠j} |ρ_ij| = 2|ρ01|
//! - `relative entropy`: C_r(ρ) = S(ρ_diag) - S(ρ)
//! - `geometric`: C_g(ρ) = 1 - max over incoherent σ of F(ρ, σ)
//! - `tsallis(α)`: C_α(ρ) = (r^α - 1)/(α - 1) with
//!   r = Σ_i <i|ρ^α|i>^(1/α), α in (0,1) ∪ (1,2]
//!
//! Everything is a pure function of the input matrix.

use serde::Serialize;
use std::fmt;

use crate::error::{Error, Result};
use crate::qubit::{check_tsallis_alpha, DensityMatrix};

/// Identifies one coherence measure (the Tsallis family carries its order).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Measure {
    L1,
    RelativeEntropy,
    Geometric,
    Tsallis(f64),
}

impl Measure {
    /// Rejects Tsallis orders outside (0,1) ∪ (1,2].
    pub fn validate(&self) -> Result<()> {
        match self {
            Measure::Tsallis(alpha) => check_tsallis_alpha(*alpha),
            _ => Ok(()),
        }
    }

    pub fn evaluate(&self, rho: &DensityMatrix) -> Result<f64> {
        match self {
            Measure::L1 => Ok(l1_coherence(rho)),
            Measure::RelativeEntropy => Ok(relative_entropy_coherence(rho)),
            Measure::Geometric => geometric_coherence(rho),
            Measure::Tsallis(alpha) => tsallis_coherence(rho, *alpha),
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Measure::L1 => write!(f, "l1"),
            Measure::RelativeEntropy => write!(f, "relative-entropy"),
            Measure::Geometric => write!(f, "geometric"),
            Measure::Tsallis(alpha) => write!(f, "tsallis({alpha})"),
        }
    }
}

/// C_l1(ρ) = 2|ρ01| for a qubit; equals t·sqrt(1 - n_z²).
pub fn l1_coherence(rho: &DensityMatrix) -> f64 {
    2.0 * rho.entry(0, 1).norm()
}

/// C_r(ρ) = S(ρ_diag) - S(ρ) = h(ρ00) - h((1+t)/2), base-2.
pub fn relative_entropy_coherence(rho: &DensityMatrix) -> f64 {
    rho.diagonal_entropy() - rho.von_neumann_entropy()
}

/// Width of the coarse grid over the incoherent parameter q.
const GEOMETRIC_COARSE_STEP: f64 = 1e-3;
/// Bracket width at which the golden-section refinement stops.
const GEOMETRIC_REFINE_WIDTH: f64 = 1e-10;
const GEOMETRIC_MAX_ITERS: usize = 200;

/// Fidelity against diag(q, 1-q) in closed form; smooth and concave in q.
#[inline]
fn fidelity_incoherent(rho00: f64, rho11: f64, det: f64, q: f64) -> f64 {
    q * rho00 + (1.0 - q) * rho11 + 2.0 * (det * q * (1.0 - q)).max(0.0).sqrt()
}

/// C_g(ρ) = 1 - max_q F(ρ, diag(q, 1-q)).
///
/// The maximum is located by a coarse grid (step 1e-3) followed by
/// golden-section refinement of the best bracket down to width 1e-10; the
/// two-stage search does not assume unimodality of the profile.
pub fn geometric_coherence(rho: &DensityMatrix) -> Result<f64> {
    let rho00 = rho.entry(0, 0).re;
    let rho11 = rho.entry(1, 1).re;
    let det = rho.mat().det().re.max(0.0);
    let f = |q: f64| fidelity_incoherent(rho00, rho11, det, q);

    let steps = (1.0 / GEOMETRIC_COARSE_STEP).round() as usize;
    let mut best_i = 0usize;
    let mut best_v = f64::NEG_INFINITY;
    for i in 0..=steps {
        let v = f(i as f64 * GEOMETRIC_COARSE_STEP);
        if v > best_v {
            best_v = v;
            best_i = i;
        }
    }
    let mut lo = ((best_i as f64 - 1.0) * GEOMETRIC_COARSE_STEP).max(0.0);
    let mut hi = ((best_i as f64 + 1.0) * GEOMETRIC_COARSE_STEP).min(1.0);

    // golden-section refinement
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    let mut converged = false;
    for _ in 0..GEOMETRIC_MAX_ITERS {
        if hi - lo < GEOMETRIC_REFINE_WIDTH {
            converged = true;
            break;
        }
        if f1 >= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }
    if !converged {
        return Err(Error::OptimizerFailure);
    }
    let fmax = best_v.max(f1).max(f2).max(f(0.5 * (lo + hi)));
    Ok(1.0 - fmax)
}

/// C_α(ρ) = (r^α - 1)/(α - 1) with r = Σ_i <i|ρ^α|i>^(1/α).
pub fn tsallis_coherence(rho: &DensityMatrix, alpha: f64) -> Result<f64> {
    let pow = rho.power(alpha)?;
    let d0 = pow.entry(0, 0).re.max(0.0);
    let d1 = pow.entry(1, 1).re.max(0.0);
    let r = d0.powf(1.0 / alpha) + d1.powf(1.0 / alpha);
    Ok((r.powf(alpha) - 1.0) / (alpha - 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qubit::{binary_entropy, BlochState, Mat2};
    use num_complex::Complex64;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn plus_state() -> DensityMatrix {
        DensityMatrix::from_entries(c(0.5, 0.0), c(0.5, 0.0), c(0.5, 0.0), c(0.5, 0.0)).unwrap()
    }

    fn random_states(seed: u64, count: usize) -> Vec<BlochState> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count).map(|_| BlochState::random(&mut rng)).collect()
    }

    /// Exhaustive q-grid oracle for the geometric measure (resolution 1e-5),
    /// independent of the production two-stage search.
    fn geometric_grid_oracle(rho: &DensityMatrix) -> f64 {
        let rho00 = rho.entry(0, 0).re;
        let rho11 = rho.entry(1, 1).re;
        let det = rho.mat().det().re.max(0.0);
        let mut best = f64::NEG_INFINITY;
        for i in 0..=100_000u32 {
            let q = i as f64 * 1e-5;
            best = best.max(fidelity_incoherent(rho00, rho11, det, q));
        }
        1.0 - best
    }

    #[test]
    fn l1_examples() {
        for q in [0.0, 0.3, 1.0] {
            assert_eq!(l1_coherence(&DensityMatrix::incoherent(q).unwrap()), 0.0);
        }
        assert!((l1_coherence(&plus_state()) - 1.0).abs() < 1e-15);
        let s = BlochState::new(0.8, [0.6, 0.0, 0.8]).unwrap().density_matrix();
        assert!((l1_coherence(&s) - 0.48).abs() < 1e-12);
    }

    #[test]
    fn relative_entropy_examples() {
        for q in [0.0, 0.2, 0.5, 0.9, 1.0] {
            assert!(relative_entropy_coherence(&DensityMatrix::incoherent(q).unwrap()).abs() < 1e-12);
        }
        assert!((relative_entropy_coherence(&plus_state()) - 1.0).abs() < 1e-12);
        // h(0.635) - h(0.95), both entropies from the scalar oracle
        let s = BlochState::new(0.9, [(1.0f64 - 0.09).sqrt(), 0.0, 0.3]).unwrap();
        let want = binary_entropy(0.635).unwrap() - binary_entropy(0.95).unwrap();
        assert!((relative_entropy_coherence(&s.density_matrix()) - want).abs() < 1e-12);
    }

    #[test]
    fn geometric_examples() {
        // diagonal: the maximizer is q = rho00 and the measure vanishes
        let d = DensityMatrix::incoherent(0.7).unwrap();
        assert!(geometric_coherence(&d).unwrap().abs() < 1e-10);

        // maximally coherent: F(q) = 1/2 for every q
        let g = geometric_coherence(&plus_state()).unwrap();
        assert!((g - 0.5).abs() < 1e-10);
        assert!((geometric_grid_oracle(&plus_state()) - 0.5).abs() < 1e-9);

        let s = BlochState::new(0.6, [1.0, 0.0, 0.0]).unwrap().density_matrix();
        let g = geometric_coherence(&s).unwrap();
        assert!((g - geometric_grid_oracle(&s)).abs() < 1e-9);
        assert!((g - 0.1).abs() < 1e-9); // (1 - sqrt(1 - 0.36))/2
    }

    #[test]
    fn geometric_matches_grid_oracle_on_random_states() {
        for s in random_states(17, 60) {
            let rho = s.density_matrix();
            let fast = geometric_coherence(&rho).unwrap();
            let slow = geometric_grid_oracle(&rho);
            assert!((fast - slow).abs() < 1e-9, "state {s}: {fast} vs {slow}");
            assert!((-1e-10..=0.5 + 1e-10).contains(&fast));
        }
    }

    #[test]
    fn tsallis_examples() {
        for alpha in [0.25, 0.5, 1.5, 2.0] {
            let d = DensityMatrix::incoherent(0.35).unwrap();
            assert!(tsallis_coherence(&d, alpha).unwrap().abs() < 1e-12);
        }
        assert!((tsallis_coherence(&plus_state(), 2.0).unwrap() - 1.0).abs() < 1e-12);
        let s = BlochState::new(0.5, [0.0, 0.0, 1.0]).unwrap().density_matrix();
        assert!(tsallis_coherence(&s, 0.5).unwrap().abs() < 1e-12);
        assert!(tsallis_coherence(&plus_state(), 1.0).is_err());
        assert!(tsallis_coherence(&plus_state(), 2.5).is_err());
    }

    #[test]
    fn faithfulness_on_random_states() {
        let measures: Vec<Measure> = vec![
            Measure::L1,
            Measure::RelativeEntropy,
            Measure::Geometric,
            Measure::Tsallis(0.25),
            Measure::Tsallis(0.75),
            Measure::Tsallis(1.25),
            Measure::Tsallis(1.75),
            Measure::Tsallis(2.0),
        ];
        // zero on incoherent states
        for k in 0..=10 {
            let d = DensityMatrix::incoherent(k as f64 / 10.0).unwrap();
            for m in &measures {
                assert!(m.evaluate(&d).unwrap().abs() < 1e-10, "{m} on diag({k}/10)");
            }
        }
        // strictly positive once the off-diagonal is appreciable; the three
        // entropy-free measures clear 1e-6 whenever |rho01| > 1e-3, while the
        // small-coherence prefactor of the Tsallis family drops to ~alpha/2
        // (about 0.5 |rho01|^2 at alpha = 1/4), so its floor sits lower
        let mut checked = 0usize;
        for s in random_states(23, 2000) {
            let rho = s.density_matrix();
            if rho.entry(0, 1).norm() <= 1e-3 {
                continue;
            }
            checked += 1;
            for m in &measures {
                let floor = match m {
                    Measure::Tsallis(_) => 1e-7,
                    _ => 1e-6,
                };
                assert!(m.evaluate(&rho).unwrap() > floor, "{m} on {s}");
            }
            if checked >= 1000 {
                break;
            }
        }
        assert!(checked >= 1000);
    }

    #[test]
    fn invariance_under_diagonal_phase_unitaries() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        let measures = [
            Measure::L1,
            Measure::RelativeEntropy,
            Measure::Geometric,
            Measure::Tsallis(0.25),
            Measure::Tsallis(1.75),
        ];
        for _ in 0..200 {
            let s = BlochState::random(&mut rng);
            let gamma: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            let d = Mat2::new(c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), Complex64::from_polar(1.0, gamma));
            let rho = s.density_matrix();
            let rotated = DensityMatrix::new(d * rho.mat() * d.adjoint()).unwrap();
            for m in &measures {
                let a = m.evaluate(&rho).unwrap();
                let b = m.evaluate(&rotated).unwrap();
                assert!((a - b).abs() < 1e-10, "{m}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn l1_and_geometric_order_states_identically() {
        // the full 1e4-pair version lives in the acceptance suite
        let states = random_states(31, 1000);
        for pair in states.chunks(2) {
            let (r1, r2) = (pair[0].density_matrix(), pair[1].density_matrix());
            let dl = l1_coherence(&r1) - l1_coherence(&r2);
            let dg = geometric_coherence(&r1).unwrap() - geometric_coherence(&r2).unwrap();
            if dl.abs() > 1e-8 && dg.abs() > 1e-8 {
                assert_eq!(dl.signum(), dg.signum(), "{} vs {}", pair[0], pair[1]);
            }
        }
    }

    #[test]
    fn tsallis_approaches_relative_entropy_near_one() {
        // sanity check only: C_α -> C_r · ln 2 as α -> 1
        let ln2 = std::f64::consts::LN_2;
        for s in random_states(37, 100) {
            let rho = s.density_matrix();
            let cr = relative_entropy_coherence(&rho) * ln2;
            for alpha in [1.0 - 1e-4, 1.0 + 1e-4] {
                let ca = tsallis_coherence(&rho, alpha).unwrap();
                assert!((ca - cr).abs() < 1e-2, "alpha={alpha} state {s}");
            }
        }
    }
}
