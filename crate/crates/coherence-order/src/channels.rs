//! Kraus-map construction and application for the four Markovian qubit
//! channels and the two rank-2 non-coherence-generating (NC) families, plus
//! closed-form post-channel states and coherence values with their
//! intermediates.
//!
//! Closed forms are always cross-checkable against the direct route
//! (build the Kraus set, apply it, measure the output); the tests treat the
//! direct route as the oracle. Several nearby variants of these expressions
//! (sign, exponent, and radicand slips) fail that cross-check; regression
//! tests pin each corrected reading against its broken variant.

use num_complex::Complex64;
use serde::Serialize;
use std::fmt;

use crate::error::{Error, Result};
use crate::measures::Measure;
use crate::qubit::{binary_entropy_clamped, c, check_tsallis_alpha, BlochState, DensityMatrix, Mat2};

/// Completeness and incoherence checks run at this tolerance.
pub const CHANNEL_TOL: f64 = 1e-12;

/// A finite Kraus decomposition Λ(ρ) = Σ_n K_n ρ K_n'.
#[derive(Debug, Clone)]
pub struct KrausChannel {
    operators: Vec<Mat2>,
    label: String,
}

impl KrausChannel {
    /// Validates the completeness relation Σ K'K = I within `CHANNEL_TOL`.
    pub fn new(operators: Vec<Mat2>, label: impl Into<String>) -> Result<Self> {
        let mut sum = Mat2::zero();
        for k in &operators {
            sum = sum + k.adjoint() * *k;
        }
        let defect = sum.max_abs_diff(&Mat2::identity());
        if defect > CHANNEL_TOL {
            return Err(Error::IncompleteChannel(defect));
        }
        Ok(KrausChannel {
            operators,
            label: label.into(),
        })
    }

    pub fn operators(&self) -> &[Mat2] {
        &self.operators
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Σ_n K_n ρ K_n'. The output of a complete Kraus set is again a valid
    /// density matrix; the result is re-Hermitized to absorb rounding.
    pub fn apply(&self, rho: &DensityMatrix) -> DensityMatrix {
        let mut out = Mat2::zero();
        for k in &self.operators {
            out = out + *k * rho.mat() * k.adjoint();
        }
        let herm = (out + out.adjoint()).scale(0.5);
        DensityMatrix::new(herm).expect("CPTP map preserves density-matrix invariants")
    }

    /// True iff K_n |i><i| K_n' is diagonal for both basis projectors and
    /// every Kraus operator (sufficient for qubits by linearity).
    pub fn is_incoherent(&self) -> bool {
        self.operators.iter().all(|k| {
            (0..2).all(|i| (k.0[0][i] * k.0[1][i].conj()).norm() <= CHANNEL_TOL)
        })
    }
}

/// The four Markovian channel families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
pub enum MarkovianKind {
    AmplitudeDamping,
    PhaseDamping,
    Depolarizing,
    BitFlip,
}

impl MarkovianKind {
    pub fn label(&self) -> &'static str {
        match self {
            MarkovianKind::AmplitudeDamping => "amplitude-damping",
            MarkovianKind::PhaseDamping => "phase-damping",
            MarkovianKind::Depolarizing => "depolarizing",
            MarkovianKind::BitFlip => "bit-flip",
        }
    }

    pub const ALL: [MarkovianKind; 4] = [
        MarkovianKind::AmplitudeDamping,
        MarkovianKind::PhaseDamping,
        MarkovianKind::Depolarizing,
        MarkovianKind::BitFlip,
    ];
}

impl fmt::Display for MarkovianKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A Markovian channel with its strength parameter `p ∈ [0,1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Markovian {
    kind: MarkovianKind,
    p: f64,
}

/// Per-channel closed-form intermediates, returned alongside every
/// closed-form coherence value so tests can pin each one separately.
#[derive(Debug, Clone, Copy, Serialize)]
pub enum ChannelAux {
    /// Post-channel Bloch parameters
    /// `t' = sqrt((1-p) t² (1-n_z²) + (p + (1-p) n_z t)²)`,
    /// `n' = (sqrt(1-p) n_x t, sqrt(1-p) n_y t, p + (1-p) n_z t) / t'`.
    AmplitudeDamping { t_out: f64, n_out: [f64; 3] },
    /// `a = 1 + (p² - 1)(1 - n_z²)`, `b = (1 + t sqrt(a))/2`,
    /// `c = (sqrt(a) + n_z)²`, `d = p² (1 - n_z²)`.
    ///
    /// The variant of `a` with `(1 - n_z)²` in place of `1 - n_z²` does not
    /// reproduce the post-channel Bloch radius (see the radicand regression
    /// test); both agree at n_z = 0.
    PhaseDamping { a: f64, b: f64, c: f64, d: f64 },
    /// `e = (1 + t(1-p))/2`, `f = (1 + n_z)/2`.
    Depolarizing { e: f64, f: f64 },
    /// `g = 1 + 4(p² - p)(1 - n_x²)` (a radicand: the post-channel radius is
    /// `t sqrt(g)`), `h = (1 + t sqrt(g))/2`, `m = n_x² + (2p-1)² n_y²`,
    /// `n = (sqrt(g) - (2p-1) n_z)²`.
    BitFlip { g: f64, h: f64, m: f64, n: f64 },
}

impl Markovian {
    pub fn new(kind: MarkovianKind, p: f64) -> Result<Self> {
        if !p.is_finite() || !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidProbability(p));
        }
        Ok(Markovian { kind, p })
    }

    pub fn kind(&self) -> MarkovianKind {
        self.kind
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    /// The Kraus set of this channel.
    ///
    /// Amplitude damping: K0 = |0><0| + sqrt(1-p)|1><1|, K1 = sqrt(p)|0><1|,
    /// so p = 0 is the identity and p = 1 maps every state onto |0><0|.
    /// Phase damping: {sqrt(p) I, sqrt(1-p)|0><0|, sqrt(1-p)|1><1|}.
    /// Depolarizing ε(ρ) = pI/2 + (1-p)ρ realized as the Pauli set
    /// {sqrt(1-3p/4) I, sqrt(p/4) σx, sqrt(p/4) σy, sqrt(p/4) σz}.
    /// Bit flip: {sqrt(p) I, sqrt(1-p) σx}.
    pub fn kraus(&self) -> KrausChannel {
        let p = self.p;
        let zero = c(0.0, 0.0);
        let ops = match self.kind {
            MarkovianKind::AmplitudeDamping => vec![
                Mat2::new(c(1.0, 0.0), zero, zero, c((1.0 - p).sqrt(), 0.0)),
                Mat2::new(zero, c(p.sqrt(), 0.0), zero, zero),
            ],
            MarkovianKind::PhaseDamping => vec![
                Mat2::identity().scale(p.sqrt()),
                Mat2::new(c((1.0 - p).sqrt(), 0.0), zero, zero, zero),
                Mat2::new(zero, zero, zero, c((1.0 - p).sqrt(), 0.0)),
            ],
            MarkovianKind::Depolarizing => vec![
                Mat2::identity().scale((1.0 - 0.75 * p).sqrt()),
                Mat2::sigma_x().scale((p / 4.0).sqrt()),
                Mat2::sigma_y().scale((p / 4.0).sqrt()),
                Mat2::sigma_z().scale((p / 4.0).sqrt()),
            ],
            MarkovianKind::BitFlip => vec![
                Mat2::identity().scale(p.sqrt()),
                Mat2::sigma_x().scale((1.0 - p).sqrt()),
            ],
        };
        KrausChannel::new(ops, format!("{}(p={})", self.kind.label(), p))
            .expect("the Markovian Kraus sets are complete by construction")
    }

    /// The post-channel density matrix in closed form (no Kraus application).
    pub fn output(&self, s: &BlochState) -> DensityMatrix {
        let (p, t) = (self.p, s.t());
        let [nx, ny, nz] = s.n();
        let m = match self.kind {
            MarkovianKind::AmplitudeDamping => Mat2::new(
                c((1.0 + t * nz) / 2.0 + p * (1.0 - t * nz) / 2.0, 0.0),
                c((1.0 - p).sqrt() * t * nx / 2.0, -(1.0 - p).sqrt() * t * ny / 2.0),
                c((1.0 - p).sqrt() * t * nx / 2.0, (1.0 - p).sqrt() * t * ny / 2.0),
                c((1.0 - p) * (1.0 - t * nz) / 2.0, 0.0),
            ),
            MarkovianKind::PhaseDamping => Mat2::new(
                c((1.0 + t * nz) / 2.0, 0.0),
                c(t * p * nx / 2.0, -t * p * ny / 2.0),
                c(t * p * nx / 2.0, t * p * ny / 2.0),
                c((1.0 - t * nz) / 2.0, 0.0),
            ),
            MarkovianKind::Depolarizing => Mat2::new(
                c((1.0 + t * nz * (1.0 - p)) / 2.0, 0.0),
                c((1.0 - p) * nx * t / 2.0, -(1.0 - p) * ny * t / 2.0),
                c((1.0 - p) * nx * t / 2.0, (1.0 - p) * ny * t / 2.0),
                c((1.0 - t * nz * (1.0 - p)) / 2.0, 0.0),
            ),
            MarkovianKind::BitFlip => {
                let q = 2.0 * p - 1.0;
                Mat2::new(
                    c((1.0 + t * nz * q) / 2.0, 0.0),
                    c(t * nx / 2.0, -t * ny * q / 2.0),
                    c(t * nx / 2.0, t * ny * q / 2.0),
                    c((1.0 - t * nz * q) / 2.0, 0.0),
                )
            }
        };
        DensityMatrix::new_unchecked(m)
    }

    /// The closed-form intermediates for this channel at the given input.
    pub fn aux(&self, s: &BlochState) -> ChannelAux {
        let (p, t) = (self.p, s.t());
        let [nx, ny, nz] = s.n();
        match self.kind {
            MarkovianKind::AmplitudeDamping => {
                let kz = p + (1.0 - p) * nz * t;
                let kx = (1.0 - p).sqrt() * nx * t;
                let ky = (1.0 - p).sqrt() * ny * t;
                let t_out = (kx * kx + ky * ky + kz * kz).sqrt();
                let n_out = if t_out > 0.0 {
                    [kx / t_out, ky / t_out, kz / t_out]
                } else {
                    [0.0, 0.0, 1.0]
                };
                ChannelAux::AmplitudeDamping { t_out, n_out }
            }
            MarkovianKind::PhaseDamping => {
                let a = 1.0 + (p * p - 1.0) * (1.0 - nz * nz);
                let ra = a.max(0.0).sqrt();
                ChannelAux::PhaseDamping {
                    a,
                    b: (1.0 + t * ra) / 2.0,
                    c: (ra + nz) * (ra + nz),
                    d: p * p * (1.0 - nz * nz),
                }
            }
            MarkovianKind::Depolarizing => ChannelAux::Depolarizing {
                e: (1.0 + t * (1.0 - p)) / 2.0,
                f: (1.0 + nz) / 2.0,
            },
            MarkovianKind::BitFlip => {
                let g = 1.0 + 4.0 * (p * p - p) * (1.0 - nx * nx);
                let rg = g.max(0.0).sqrt();
                let q = 2.0 * p - 1.0;
                ChannelAux::BitFlip {
                    g,
                    h: (1.0 + t * rg) / 2.0,
                    m: nx * nx + q * q * ny * ny,
                    n: (rg - q * nz) * (rg - q * nz),
                }
            }
        }
    }

    /// Post-channel Bloch radius and z-direction in closed form.
    fn output_bloch(&self, s: &BlochState) -> (f64, f64) {
        let (p, t) = (self.p, s.t());
        let [nx, ny, nz] = s.n();
        let (kperp, kz) = match self.kind {
            MarkovianKind::AmplitudeDamping => (
                (1.0 - p).sqrt() * t * nx.hypot(ny),
                p + (1.0 - p) * t * nz,
            ),
            MarkovianKind::PhaseDamping => (p * t * nx.hypot(ny), t * nz),
            MarkovianKind::Depolarizing => ((1.0 - p) * t * nx.hypot(ny), (1.0 - p) * t * nz),
            MarkovianKind::BitFlip => {
                let q = 2.0 * p - 1.0;
                ((t * nx).hypot(q * t * ny), q * t * nz)
            }
        };
        let t_out = kperp.hypot(kz);
        let nz_out = if t_out > 0.0 { kz / t_out } else { 1.0 };
        (t_out, nz_out)
    }

    /// The closed-form post-channel coherence together with the populated
    /// intermediates. No closed form exists for the geometric measure; that
    /// one must be evaluated on the channel output directly.
    pub fn coherence(&self, s: &BlochState, m: &Measure) -> Result<(f64, ChannelAux)> {
        let aux = self.aux(s);
        let value = match m {
            Measure::L1 => self.l1_closed_form(s),
            Measure::RelativeEntropy => self.relative_entropy_closed_form(s),
            Measure::Tsallis(alpha) => self.tsallis_closed_form(s, *alpha)?,
            Measure::Geometric => return Err(Error::UnsupportedMeasure("geometric".into())),
        };
        Ok((value, aux))
    }

    /// Amplitude damping: sqrt(1-p)·t·sqrt(1-n_z²). The post-channel
    /// off-diagonal is sqrt(1-p)·ρ01 entrywise, so the scale carries the
    /// square root; the linear (1-p) variant fails the direct cross-check.
    /// Phase damping: p·t·sqrt(1-n_z²) (radicand 1-n_z², not 1-n_z).
    /// Depolarizing: (1-p)·t·sqrt(1-n_z²).
    /// Bit flip: sqrt(t²n_x² + (2p-1)²t²n_y²); at p = 1/2 this is t|n_x|.
    fn l1_closed_form(&self, s: &BlochState) -> f64 {
        let (p, t) = (self.p, s.t());
        let [nx, ny, _] = s.n();
        match self.kind {
            MarkovianKind::AmplitudeDamping => (1.0 - p).sqrt() * t * nx.hypot(ny),
            MarkovianKind::PhaseDamping => p * t * nx.hypot(ny),
            MarkovianKind::Depolarizing => (1.0 - p) * t * nx.hypot(ny),
            MarkovianKind::BitFlip => (t * nx).hypot((2.0 * p - 1.0) * t * ny),
        }
    }

    fn relative_entropy_closed_form(&self, s: &BlochState) -> f64 {
        let (p, t) = (self.p, s.t());
        let nz = s.nz();
        let h = binary_entropy_clamped;
        match (self.kind, self.aux(s)) {
            (MarkovianKind::AmplitudeDamping, ChannelAux::AmplitudeDamping { t_out, .. }) => {
                let kz = p + (1.0 - p) * t * nz; // t' n_z' without the quotient
                h((1.0 + kz) / 2.0) - h((1.0 + t_out) / 2.0)
            }
            (MarkovianKind::PhaseDamping, ChannelAux::PhaseDamping { b, .. }) => {
                h((1.0 + t * nz) / 2.0) - h(b)
            }
            (MarkovianKind::Depolarizing, _) => {
                h((1.0 + t * nz * (1.0 - p)) / 2.0) - h((1.0 + t * (1.0 - p)) / 2.0)
            }
            (MarkovianKind::BitFlip, ChannelAux::BitFlip { h: hh, .. }) => {
                h((1.0 + t * nz * (2.0 * p - 1.0)) / 2.0) - h(hh)
            }
            _ => unreachable!("aux variant matches the channel kind"),
        }
    }

    /// (r^α - 1)/(α - 1) with the two-term r built from the post-channel
    /// eigenvalues λ± = (1 ± t')/2 and populations (1 ± n_z')/2. The
    /// per-channel weight quotients C/(C+D) and M/(M+N) equal (1 ± n_z')/2
    /// wherever their denominators are nonzero (pinned by tests); the Bloch
    /// form below extends them continuously across the degenerate points.
    fn tsallis_closed_form(&self, s: &BlochState, alpha: f64) -> Result<f64> {
        check_tsallis_alpha(alpha)?;
        let (t_out, nz_out) = self.output_bloch(s);
        let lp = (1.0 + t_out) / 2.0;
        let lm = ((1.0 - t_out) / 2.0).max(0.0);
        let w = ((1.0 + nz_out) / 2.0).clamp(0.0, 1.0);
        let t1 = lp.powf(alpha) * w + lm.powf(alpha) * (1.0 - w);
        let t2 = lp.powf(alpha) * (1.0 - w) + lm.powf(alpha) * w;
        let r = t1.powf(1.0 / alpha) + t2.powf(1.0 / alpha);
        Ok((r.powf(alpha) - 1.0) / (alpha - 1.0))
    }
}

impl fmt::Display for Markovian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(p={})", self.kind.label(), self.p)
    }
}

/// ∂C_r(ε(ρ))/∂t under phase damping (base-2 logarithms).
pub fn phase_damping_cr_slope_t(s: &BlochState, p: f64) -> f64 {
    let (t, nz) = (s.t(), s.nz());
    let a = 1.0 + (p * p - 1.0) * (1.0 - nz * nz);
    let ra = a.max(0.0).sqrt();
    0.5 * nz * ((1.0 - t * nz) / (1.0 + t * nz)).log2()
        + 0.5 * ra * ((1.0 + t * ra) / (1.0 - t * ra)).log2()
}

/// ∂C_r(ε(ρ))/∂n_z under depolarizing (base-2 logarithms).
pub fn depolarizing_cr_slope_nz(s: &BlochState, p: f64) -> f64 {
    let u = s.t() * (1.0 - p);
    0.5 * u * ((1.0 - u * s.nz()) / (1.0 + u * s.nz())).log2()
}

/// ∂/∂n_x of the post-channel coherence under the bit flip at p = 1/2,
/// valid for n_x >= 0 where the channel output depends on t·n_x alone.
pub fn bit_flip_half_slope_nx(m: &Measure, t: f64, nx: f64) -> Result<f64> {
    match m {
        Measure::L1 => Ok(t),
        Measure::RelativeEntropy => {
            Ok(0.5 * t * ((1.0 + t * nx) / (1.0 - t * nx)).log2())
        }
        Measure::Tsallis(alpha) => {
            check_tsallis_alpha(*alpha)?;
            let a = *alpha;
            let xp = (1.0 + t * nx) / 2.0;
            let xm = (1.0 - t * nx) / 2.0;
            let s = 0.5 * xp.powf(a) + 0.5 * xm.powf(a);
            let r = 2.0 * s.powf(1.0 / a);
            Ok(a * t / (2.0 * (a - 1.0))
                * r.powf(a - 1.0)
                * s.powf(1.0 / a - 1.0)
                * (xp.powf(a - 1.0) - xm.powf(a - 1.0)))
        }
        Measure::Geometric => Err(Error::UnsupportedMeasure("geometric".into())),
    }
}

/// The two rank-2 NC channel families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
pub enum NcFamily {
    Phi1,
    Phi2,
}

impl fmt::Display for NcFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NcFamily::Phi1 => write!(f, "phi1"),
            NcFamily::Phi2 => write!(f, "phi2"),
        }
    }
}

/// A rank-2 NC channel with its angle parameters (radians; `eta` is unused
/// by the second family).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NcChannel {
    pub family: NcFamily,
    pub theta: f64,
    pub phi: f64,
    pub xi: f64,
    pub eta: f64,
}

/// Input decomposition and output entries of an NC channel:
/// `a = (1 - t n_z)/2`, `b = t(n_x - i n_y)/2 = |b| e^{iβ}`, the output
/// population `diag` and off-diagonal `offdiag`, and the closed-form
/// `l1` value (2|offdiag|).
#[derive(Debug, Clone, Copy, Serialize)]
pub struct NcAux {
    pub a: f64,
    pub b: Complex64,
    pub beta: f64,
    pub diag: f64,
    pub offdiag: Complex64,
    pub l1: f64,
}

impl NcChannel {
    pub fn phi1(theta: f64, phi: f64, xi: f64, eta: f64) -> Self {
        NcChannel { family: NcFamily::Phi1, theta, phi, xi, eta }
    }

    pub fn phi2(theta: f64, phi: f64, xi: f64) -> Self {
        NcChannel { family: NcFamily::Phi2, theta, phi, xi, eta: 0.0 }
    }

    /// The two-operator Kraus decomposition with the exact matrix entries of
    /// the family definition.
    pub fn kraus(&self) -> KrausChannel {
        let (st, ct) = self.theta.sin_cos();
        let (sp, cp) = self.phi.sin_cos();
        let exi = Complex64::from_polar(1.0, self.xi);
        let zero = c(0.0, 0.0);
        let ops = match self.family {
            NcFamily::Phi1 => {
                let eta = Complex64::from_polar(1.0, self.eta);
                vec![
                    Mat2::new(eta * ct * cp, zero, c(-st * sp, 0.0), exi * cp),
                    Mat2::new(c(st * cp, 0.0), exi * sp, eta.conj() * ct * sp, zero),
                ]
            }
            NcFamily::Phi2 => vec![
                Mat2::new(c(ct, 0.0), zero, zero, exi * cp),
                Mat2::new(zero, c(sp, 0.0), exi * st, zero),
            ],
        };
        KrausChannel::new(ops, format!("{}", self))
            .expect("the NC Kraus pairs are complete by construction")
    }

    /// True iff the channel is incoherent: always for the second family,
    /// and exactly when sinθ cosθ sinφ cosφ = 0 for the first.
    pub fn incoherence_condition(&self) -> bool {
        match self.family {
            NcFamily::Phi1 => {
                (self.theta.sin() * self.theta.cos() * self.phi.sin() * self.phi.cos()).abs()
                    <= CHANNEL_TOL
            }
            NcFamily::Phi2 => true,
        }
    }

    /// Closed-form output entries.
    ///
    /// With `a = (1 - t n_z)/2` (the excited population, so ρ00 = 1-a) and
    /// `b = ρ01`:
    ///
    /// family 1: `diag = (1-a)cos²φ + 2Re(b e^{-iξ}) sinθ sinφ cosφ + a sin²φ`,
    /// `offdiag = e^{iη} cosθ (b e^{-iξ} cos²φ + b* e^{iξ} sin²φ)`;
    ///
    /// family 2: `diag = (1-a)cos²θ + a sin²φ`,
    /// `offdiag = e^{-iξ}(b cosθ cosφ + b* sinθ sinφ)`, whose magnitude is
    /// `|b| sqrt(cos²β cos²(θ-φ) + sin²β cos²(θ+φ))`.
    pub fn output_entries(&self, s: &BlochState) -> NcAux {
        let (t, [nx, ny, nz]) = (s.t(), s.n());
        let a = (1.0 - t * nz) / 2.0;
        let b = c(t * nx / 2.0, -t * ny / 2.0);
        let beta = b.arg();
        let (st, ct) = self.theta.sin_cos();
        let (sp, cp) = self.phi.sin_cos();
        let exi = Complex64::from_polar(1.0, self.xi);
        let (diag, offdiag) = match self.family {
            NcFamily::Phi1 => {
                let eta = Complex64::from_polar(1.0, self.eta);
                let diag = (1.0 - a) * cp * cp
                    + 2.0 * (b * exi.conj()).re * st * sp * cp
                    + a * sp * sp;
                let offdiag = eta * ct * (b * exi.conj() * cp * cp + b.conj() * exi * sp * sp);
                (diag, offdiag)
            }
            NcFamily::Phi2 => {
                let diag = (1.0 - a) * ct * ct + a * sp * sp;
                let offdiag = exi.conj() * (b * ct * cp + b.conj() * st * sp);
                (diag, offdiag)
            }
        };
        NcAux {
            a,
            b,
            beta,
            diag,
            offdiag,
            l1: 2.0 * offdiag.norm(),
        }
    }
}

impl fmt::Display for NcChannel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            NcFamily::Phi1 => write!(
                f,
                "phi1(theta={}, phi={}, xi={}, eta={})",
                self.theta, self.phi, self.xi, self.eta
            ),
            NcFamily::Phi2 => {
                write!(f, "phi2(theta={}, phi={}, xi={})", self.theta, self.phi, self.xi)
            }
        }
    }
}
