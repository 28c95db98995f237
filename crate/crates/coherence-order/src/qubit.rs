//! Exact 2×2 numerics for qubit states: Bloch parametrization, closed-form
//! spectral decomposition, matrix powers, entropies, and fidelity.
//!
//! All eigenproblems are solved in closed form from trace and determinant;
//! nothing here iterates, so values are reproducible bit-for-bit across runs.

use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;
use std::f64::consts::TAU;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};

/// Tolerance used by the structural invariants (Hermiticity, unit trace,
/// positivity, unit direction).
pub const STRUCT_TOL: f64 = 1e-12;

#[inline]
pub(crate) fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// A 2×2 complex matrix, stored row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2(pub [[Complex64; 2]; 2]);

impl Mat2 {
    pub fn zero() -> Self {
        Mat2([[c(0.0, 0.0); 2]; 2])
    }

    pub fn identity() -> Self {
        Mat2([[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]])
    }

    pub fn new(a00: Complex64, a01: Complex64, a10: Complex64, a11: Complex64) -> Self {
        Mat2([[a00, a01], [a10, a11]])
    }

    /// Pauli σ_x.
    pub fn sigma_x() -> Self {
        Mat2::new(c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0))
    }

    /// Pauli σ_y.
    pub fn sigma_y() -> Self {
        Mat2::new(c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0))
    }

    /// Pauli σ_z.
    pub fn sigma_z() -> Self {
        Mat2::new(c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0))
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.0[i][j]
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Mat2([
            [self.0[0][0].conj(), self.0[1][0].conj()],
            [self.0[0][1].conj(), self.0[1][1].conj()],
        ])
    }

    pub fn trace(&self) -> Complex64 {
        self.0[0][0] + self.0[1][1]
    }

    pub fn det(&self) -> Complex64 {
        self.0[0][0] * self.0[1][1] - self.0[0][1] * self.0[1][0]
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut out = *self;
        for row in out.0.iter_mut() {
            for e in row.iter_mut() {
                *e *= s;
            }
        }
        out
    }

    /// Largest entrywise absolute difference from `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut d = 0.0f64;
        for i in 0..2 {
            for j in 0..2 {
                d = d.max((self.0[i][j] - other.0[i][j]).norm());
            }
        }
        d
    }

    /// Largest deviation from Hermiticity, max over |a_ij - conj(a_ji)|.
    pub fn hermiticity_defect(&self) -> f64 {
        let mut d = self.0[0][0].im.abs().max(self.0[1][1].im.abs());
        d = d.max((self.0[0][1] - self.0[1][0].conj()).norm());
        d
    }

    /// Closed-form eigendecomposition of a Hermitian matrix.
    ///
    /// Returns eigenvalues sorted descending together with the matching
    /// orthonormal eigenvectors (as columns `[v+, v-]`). The input is assumed
    /// Hermitian; only the real parts of the diagonal and the upper
    /// off-diagonal entry are consulted.
    pub fn eigh(&self) -> ([f64; 2], [[Complex64; 2]; 2]) {
        let a = self.0[0][0].re;
        let b = self.0[1][1].re;
        let off = self.0[0][1];
        let offn = off.norm();
        let gap = ((a - b).powi(2) + 4.0 * offn * offn).sqrt();
        let lp = 0.5 * ((a + b) + gap);
        let lm = 0.5 * ((a + b) - gap);
        if gap == 0.0 {
            return ([lp, lm], [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]]);
        }
        // Pick the better-conditioned component for the +1 eigenvector.
        let (v0, v1) = if (lp - b).abs() >= (lp - a).abs() {
            (c(lp - b, 0.0), off.conj())
        } else {
            (off, c(lp - a, 0.0))
        };
        let nrm = (v0.norm_sqr() + v1.norm_sqr()).sqrt();
        let vp = [v0 / nrm, v1 / nrm];
        let vm = [-vp[1].conj(), vp[0].conj()];
        ([lp, lm], [vp, vm])
    }
}

impl Add for Mat2 {
    type Output = Mat2;
    fn add(self, rhs: Mat2) -> Mat2 {
        let mut out = Mat2::zero();
        for i in 0..2 {
            for j in 0..2 {
                out.0[i][j] = self.0[i][j] + rhs.0[i][j];
            }
        }
        out
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, rhs: Mat2) -> Mat2 {
        let mut out = Mat2::zero();
        for i in 0..2 {
            for j in 0..2 {
                out.0[i][j] = self.0[i][j] - rhs.0[i][j];
            }
        }
        out
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        let mut out = Mat2::zero();
        for i in 0..2 {
            for j in 0..2 {
                out.0[i][j] = self.0[i][0] * rhs.0[0][j] + self.0[i][1] * rhs.0[1][j];
            }
        }
        out
    }
}

impl Mul<Complex64> for Mat2 {
    type Output = Mat2;
    fn mul(self, s: Complex64) -> Mat2 {
        let mut out = self;
        for row in out.0.iter_mut() {
            for e in row.iter_mut() {
                *e *= s;
            }
        }
        out
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..2 {
            write!(f, "[ ")?;
            for j in 0..2 {
                let e = self.0[i][j];
                write!(f, "{:+.12}{:+.12}i  ", e.re, e.im)?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// A qubit state as radius `t = ||k||` and unit direction `n`, so that
/// ρ = (I + t n·σ)/2.
///
/// Invariants: `0 <= t <= 1` and `||n|| = 1`. At `t = 0` the direction is
/// immaterial and is fixed to `(0, 0, 1)` so every state has one canonical
/// representation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BlochState {
    t: f64,
    n: [f64; 3],
}

impl BlochState {
    /// Builds a state, enforcing the radius and unit-direction invariants
    /// within `STRUCT_TOL`.
    pub fn new(t: f64, n: [f64; 3]) -> Result<Self> {
        if !t.is_finite() || !(-STRUCT_TOL..=1.0 + STRUCT_TOL).contains(&t) {
            return Err(Error::InvalidState(format!(
                "radius t = {t} outside [0, 1]"
            )));
        }
        let t = t.clamp(0.0, 1.0);
        if t == 0.0 {
            return Ok(BlochState { t, n: [0.0, 0.0, 1.0] });
        }
        let norm = (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]).sqrt();
        if !norm.is_finite() || (norm - 1.0).abs() > STRUCT_TOL {
            return Err(Error::InvalidState(format!(
                "direction norm {norm} deviates from 1 beyond {STRUCT_TOL:.0e}"
            )));
        }
        Ok(BlochState { t, n })
    }

    /// Like [`BlochState::new`] but re-normalizes directions whose norm is
    /// within `1e-6` of unity (hand-typed input); larger deviations are
    /// rejected as typos.
    pub fn with_normalized_direction(t: f64, n: [f64; 3]) -> Result<Self> {
        let norm = (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]).sqrt();
        if !norm.is_finite() || (norm - 1.0).abs() > 1e-6 {
            return Err(Error::InvalidState(format!(
                "direction norm {norm} deviates from 1 beyond 1e-6"
            )));
        }
        Self::new(t, [n[0] / norm, n[1] / norm, n[2] / norm])
    }

    /// State on the sphere slice `(t, n_z)` at the given azimuth:
    /// `n = (w cos φ, w sin φ, n_z)` with `w = sqrt(1 - n_z²)`.
    pub fn from_polar(t: f64, n_z: f64, azimuth: f64) -> Result<Self> {
        if !(-1.0..=1.0).contains(&n_z) {
            return Err(Error::InvalidState(format!("n_z = {n_z} outside [-1, 1]")));
        }
        let w = (1.0 - n_z * n_z).max(0.0).sqrt();
        Self::new(t, [w * azimuth.cos(), w * azimuth.sin(), n_z])
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn n(&self) -> [f64; 3] {
        self.n
    }

    pub fn nx(&self) -> f64 {
        self.n[0]
    }

    pub fn ny(&self) -> f64 {
        self.n[1]
    }

    pub fn nz(&self) -> f64 {
        self.n[2]
    }

    /// ρ = (I + t n·σ)/2, entrywise
    /// `[[(1 + t n_z)/2, t(n_x - i n_y)/2], [t(n_x + i n_y)/2, (1 - t n_z)/2]]`.
    pub fn density_matrix(&self) -> DensityMatrix {
        let (t, [nx, ny, nz]) = (self.t, self.n);
        DensityMatrix {
            m: Mat2::new(
                c((1.0 + t * nz) / 2.0, 0.0),
                c(t * nx / 2.0, -t * ny / 2.0),
                c(t * nx / 2.0, t * ny / 2.0),
                c((1.0 - t * nz) / 2.0, 0.0),
            ),
        }
    }

    /// Uniform radius in [0,1] and uniform direction on the sphere.
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let t: f64 = rng.gen();
        let cz: f64 = rng.gen_range(-1.0..=1.0);
        let az: f64 = rng.gen_range(0.0..TAU);
        BlochState::from_polar(t, cz, az).expect("sampled parameters are in range")
    }
}

impl fmt::Display for BlochState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "t = {:.12}, n = ({:.12}, {:.12}, {:.12})",
            self.t, self.n[0], self.n[1], self.n[2]
        )
    }
}

/// A 2×2 density matrix: Hermitian, unit trace, positive semidefinite
/// (all within `STRUCT_TOL`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix {
    m: Mat2,
}

impl DensityMatrix {
    pub fn new(m: Mat2) -> Result<Self> {
        let herm = m.hermiticity_defect();
        if herm > STRUCT_TOL {
            return Err(Error::InvalidMatrix(format!(
                "Hermiticity defect {herm:.3e} exceeds {STRUCT_TOL:.0e}"
            )));
        }
        let tr = m.trace();
        if (tr.re - 1.0).abs() > STRUCT_TOL {
            return Err(Error::InvalidMatrix(format!(
                "trace {} deviates from 1 beyond {STRUCT_TOL:.0e}",
                tr.re
            )));
        }
        let det = m.det().re;
        if det < -STRUCT_TOL || m.0[0][0].re < -STRUCT_TOL {
            return Err(Error::InvalidMatrix(format!(
                "not positive semidefinite: det = {det:.3e}, rho00 = {:.3e}",
                m.0[0][0].re
            )));
        }
        Ok(DensityMatrix { m })
    }

    pub(crate) fn new_unchecked(m: Mat2) -> Self {
        debug_assert!(m.hermiticity_defect() <= 1e-9, "non-Hermitian construction");
        DensityMatrix { m }
    }

    pub fn from_entries(
        a00: Complex64,
        a01: Complex64,
        a10: Complex64,
        a11: Complex64,
    ) -> Result<Self> {
        Self::new(Mat2::new(a00, a01, a10, a11))
    }

    pub fn mat(&self) -> Mat2 {
        self.m
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.m.0[i][j]
    }

    /// Maximally mixed state I/2.
    pub fn maximally_mixed() -> Self {
        DensityMatrix {
            m: Mat2::identity().scale(0.5),
        }
    }

    /// diag(q, 1-q), the incoherent state with ground population `q`.
    pub fn incoherent(q: f64) -> Result<Self> {
        if !(-STRUCT_TOL..=1.0 + STRUCT_TOL).contains(&q) {
            return Err(Error::Domain(format!("population q = {q} outside [0, 1]")));
        }
        let q = q.clamp(0.0, 1.0);
        Self::new(Mat2::new(
            c(q, 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(1.0 - q, 0.0),
        ))
    }

    /// Inverts the Bloch parametrization: `k_x = 2 Re ρ01`, `k_y = -2 Im ρ01`,
    /// `k_z = ρ00 - ρ11`, `t = ||k||`.
    pub fn bloch(&self) -> BlochState {
        let kx = 2.0 * self.m.0[0][1].re;
        let ky = -2.0 * self.m.0[0][1].im;
        let kz = self.m.0[0][0].re - self.m.0[1][1].re;
        let t = (kx * kx + ky * ky + kz * kz).sqrt();
        if t == 0.0 {
            return BlochState { t: 0.0, n: [0.0, 0.0, 1.0] };
        }
        BlochState {
            t: t.min(1.0),
            n: [kx / t, ky / t, kz / t],
        }
    }

    /// Bloch radius `t` (purity radius).
    pub fn radius(&self) -> f64 {
        self.bloch().t()
    }

    /// Closed-form spectral decomposition; eigenvalues are `(1 ± t)/2`.
    pub fn eigen(&self) -> SpectralDecomposition {
        let s = self.bloch();
        let (t, [nx, ny, nz]) = (s.t(), s.n());
        let lp = (1.0 + t) / 2.0;
        let lm = ((1.0 - t) / 2.0).max(0.0); // t <= 1 + tol; clamp the boundary
        // Eigenvector of n·σ for +1, chosen by the better-conditioned branch.
        let vp: [Complex64; 2] = if nz >= 0.0 {
            let a = ((1.0 + nz) / 2.0).sqrt();
            let denom = (2.0 * (1.0 + nz)).sqrt();
            [c(a, 0.0), c(nx / denom, ny / denom)]
        } else {
            let b = ((1.0 - nz) / 2.0).sqrt();
            let denom = (2.0 * (1.0 - nz)).sqrt();
            [c(nx / denom, -ny / denom), c(b, 0.0)]
        };
        let vm = [-vp[1].conj(), vp[0].conj()];
        SpectralDecomposition {
            eigenvalues: [lp, lm],
            eigenvectors: [vp, vm],
        }
    }

    /// ρ^α = Σ λ_k^α v_k v_k', with the convention 0^α = 0.
    ///
    /// Requires α in (0,1) ∪ (1,2]; eigenvalues in [-STRUCT_TOL, 0) are
    /// clamped to 0 so pure states on the boundary stay admissible.
    pub fn power(&self, alpha: f64) -> Result<Mat2> {
        check_tsallis_alpha(alpha)?;
        let dec = self.eigen();
        let mut out = Mat2::zero();
        for k in 0..2 {
            let lam = dec.eigenvalues[k].max(0.0);
            let w = lam.powf(alpha); // 0^α = 0 for α > 0
            let v = dec.eigenvectors[k];
            for i in 0..2 {
                for j in 0..2 {
                    out.0[i][j] += v[i] * v[j].conj() * w;
                }
            }
        }
        Ok(out)
    }

    /// S(ρ) = -Tr ρ log₂ ρ; equals h((1+t)/2) for a qubit.
    pub fn von_neumann_entropy(&self) -> f64 {
        binary_entropy_clamped((1.0 + self.radius()) / 2.0)
    }

    /// Entropy of the diagonal part, h(ρ00).
    pub fn diagonal_entropy(&self) -> f64 {
        binary_entropy_clamped(self.m.0[0][0].re)
    }
}

impl fmt::Display for DensityMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.m.fmt(f)
    }
}

/// Eigenvalues λ+ >= λ- with orthonormal eigenvectors, closed form.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    /// `[λ+, λ-]`, descending; λ+ + λ- = 1.
    pub eigenvalues: [f64; 2],
    /// `[v+, v-]`, orthonormal complex 2-vectors matching `eigenvalues`.
    pub eigenvectors: [[Complex64; 2]; 2],
}

impl SpectralDecomposition {
    /// λ+ v+v+' + λ- v-v-'.
    pub fn reconstruct(&self) -> Mat2 {
        let mut out = Mat2::zero();
        for k in 0..2 {
            let v = self.eigenvectors[k];
            for i in 0..2 {
                for j in 0..2 {
                    out.0[i][j] += v[i] * v[j].conj() * self.eigenvalues[k];
                }
            }
        }
        out
    }
}

pub(crate) fn check_tsallis_alpha(alpha: f64) -> Result<()> {
    if !alpha.is_finite() || alpha <= 0.0 || alpha > 2.0 || alpha == 1.0 {
        return Err(Error::InvalidAlpha(alpha));
    }
    Ok(())
}

/// h(x) = -x log₂ x - (1-x) log₂(1-x), with h(0) = h(1) = 0.
///
/// Arguments within `STRUCT_TOL` of the boundary are clamped; anything
/// further outside [0,1] is a domain error.
pub fn binary_entropy(x: f64) -> Result<f64> {
    if !x.is_finite() || !(-STRUCT_TOL..=1.0 + STRUCT_TOL).contains(&x) {
        return Err(Error::Domain(format!("binary entropy argument {x} outside [0, 1]")));
    }
    Ok(binary_entropy_clamped(x))
}

pub(crate) fn binary_entropy_clamped(x: f64) -> f64 {
    let x = x.clamp(0.0, 1.0);
    if x == 0.0 || x == 1.0 {
        return 0.0;
    }
    -(x * x.log2() + (1.0 - x) * (1.0 - x).log2())
}

/// Uhlmann fidelity F(ρ,σ) = (Tr sqrt(sqrt(σ) ρ sqrt(σ)))², evaluated through
/// the closed 2×2 form F = Tr(ρσ) + 2 sqrt(det ρ · det σ).
pub fn fidelity(rho: &DensityMatrix, sigma: &DensityMatrix) -> f64 {
    let tr = (rho.m * sigma.m).trace().re;
    let da = rho.m.det().re.max(0.0);
    let db = sigma.m.det().re.max(0.0);
    tr + 2.0 * (da * db).sqrt()
}
