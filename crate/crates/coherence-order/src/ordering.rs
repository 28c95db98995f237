//! Grid scans over the Bloch ball: pairwise ordering checks before and after
//! a channel, reversal-witness searches, finite-difference monotonicity
//! verification, and figure-surface emission.
//!
//! Scans are serial and iterate in a fixed order (t outer, then n_z, then
//! azimuth), so identical inputs produce identical reports.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::f64::consts::{PI, TAU};

use crate::channels::{KrausChannel, Markovian, NcChannel, NcFamily};
use crate::error::{Error, Result};
use crate::measures::Measure;
use crate::qubit::BlochState;

/// Default tie tolerance for ordering signs: gaps at or below this count as
/// ties, so a reversal must cross strictly on both sides.
pub const DEFAULT_TIE_TOL: f64 = 1e-9;

/// Reports keep at most this many witnesses; `reversals_found` always holds
/// the full count.
pub const WITNESS_CAP: usize = 1000;

/// Discretization of the state and parameter space for scans.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridSpec {
    pub t_values: Vec<f64>,
    pub n_z_values: Vec<f64>,
    pub azimuth_values: Vec<f64>,
    pub p_values: Vec<f64>,
}

fn range_inclusive(start: f64, stop: f64, step: f64) -> Vec<f64> {
    let n = ((stop - start) / step).round() as usize;
    (0..=n).map(|k| start + k as f64 * step).collect()
}

impl GridSpec {
    pub fn new(
        t_values: Vec<f64>,
        n_z_values: Vec<f64>,
        azimuth_values: Vec<f64>,
        p_values: Vec<f64>,
    ) -> Result<Self> {
        if t_values.is_empty() || n_z_values.is_empty() || azimuth_values.is_empty() || p_values.is_empty() {
            return Err(Error::InvalidGrid("all value lists must be non-empty".into()));
        }
        if t_values.iter().any(|t| !(0.0..=1.0).contains(t)) {
            return Err(Error::InvalidGrid("t values must lie in [0, 1]".into()));
        }
        if n_z_values.iter().any(|z| !(-1.0..=1.0).contains(z)) {
            return Err(Error::InvalidGrid("n_z values must lie in [-1, 1]".into()));
        }
        if p_values.iter().any(|p| !(0.0..=1.0).contains(p)) {
            return Err(Error::InvalidGrid("p values must lie in [0, 1]".into()));
        }
        Ok(GridSpec { t_values, n_z_values, azimuth_values, p_values })
    }

    /// The default scan grid: t in {0.05, …, 0.95}, n_z in {-0.95, …, 0.95}
    /// (step 0.05 both), azimuth in {0, π/6, …, 2π}, p in {0.1, …, 0.9}.
    /// Boundary values (t = 0, p ∈ {0,1}) are left out: the channels there
    /// are trivial and the t = 0 direction is a convention.
    pub fn default_scan() -> Self {
        GridSpec {
            t_values: range_inclusive(0.05, 0.95, 0.05),
            n_z_values: range_inclusive(-0.95, 0.95, 0.05),
            azimuth_values: (0..=12).map(|k| k as f64 * PI / 6.0).collect(),
            p_values: range_inclusive(0.1, 0.9, 0.1),
        }
    }

    /// The grid behind the surface figures: t in {0.05, …, 0.95} and
    /// n_z in {0.30, …, 0.95}, azimuth fixed at 0 so n_y = 0. The n_z range
    /// starts at 0.30 — the smallest slice value used by the line figures —
    /// which keeps every emitted surface inside the region where the
    /// monotonicity statements hold.
    pub fn figure_grid() -> Self {
        GridSpec {
            t_values: range_inclusive(0.05, 0.95, 0.05),
            n_z_values: range_inclusive(0.30, 0.95, 0.05),
            azimuth_values: vec![0.0],
            p_values: range_inclusive(0.1, 0.9, 0.1),
        }
    }

    /// Small deterministic grid for NC witness searches: a few radii and
    /// polar slices with a full circle of azimuths (the phase β of the
    /// off-diagonal entry is what the searched channels are sensitive to).
    pub fn nc_search_grid() -> Self {
        GridSpec {
            t_values: vec![0.3, 0.6, 0.9],
            n_z_values: vec![0.0, 0.4],
            azimuth_values: (0..12).map(|k| k as f64 * PI / 6.0).collect(),
            p_values: vec![0.5],
        }
    }

    /// All grid states in deterministic order: t outer, then n_z, then azimuth.
    pub fn states(&self) -> Vec<BlochState> {
        let mut out =
            Vec::with_capacity(self.t_values.len() * self.n_z_values.len() * self.azimuth_values.len());
        for &t in &self.t_values {
            for &nz in &self.n_z_values {
                for &az in &self.azimuth_values {
                    out.push(BlochState::from_polar(t, nz, az).expect("grid values validated"));
                }
            }
        }
        out
    }
}

/// Which coordinate a state pair must share.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum PairConstraint {
    /// Pairs share the radius t (direction free).
    FixedT,
    /// Pairs share n_z (radius and azimuth free).
    FixedNz,
    /// All pairs.
    None,
}

/// Sign of m(ρ1) - m(ρ2) with gaps of magnitude ≤ `tol` reported as 0.
pub fn ordering_sign(
    m: &Measure,
    rho1: &crate::qubit::DensityMatrix,
    rho2: &crate::qubit::DensityMatrix,
    tol: f64,
) -> Result<i8> {
    let gap = m.evaluate(rho1)? - m.evaluate(rho2)?;
    Ok(if gap > tol {
        1
    } else if gap < -tol {
        -1
    } else {
        0
    })
}

/// A state pair whose coherence ordering strictly flips under a channel:
/// before.0 > before.1 and after.0 < after.1, both beyond the tie tolerance.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ReversalWitness {
    pub s1: BlochState,
    pub s2: BlochState,
    pub before: (f64, f64),
    pub after: (f64, f64),
}

/// Outcome of a pairwise ordering scan.
#[derive(Debug, Clone, Serialize)]
pub struct OrderingReport {
    pub channel: String,
    pub measure: String,
    pub constraint: PairConstraint,
    pub pairs_checked: u64,
    pub reversals_found: u64,
    /// The first `witness_cap` witnesses in scan order.
    pub reversals: Vec<ReversalWitness>,
    pub witness_cap: usize,
    pub tie_tolerance: f64,
}

fn constraint_groups(g: &GridSpec, constraint: PairConstraint) -> Vec<Vec<usize>> {
    let nt = g.t_values.len();
    let nz = g.n_z_values.len();
    let na = g.azimuth_values.len();
    match constraint {
        PairConstraint::FixedT => (0..nt)
            .map(|it| (it * nz * na..(it + 1) * nz * na).collect())
            .collect(),
        PairConstraint::FixedNz => (0..nz)
            .map(|iz| {
                (0..nt)
                    .flat_map(|it| (0..na).map(move |ia| (it * nz + iz) * na + ia))
                    .collect()
            })
            .collect(),
        PairConstraint::None => vec![(0..nt * nz * na).collect()],
    }
}

fn measure_tables(
    ch: &KrausChannel,
    m: &Measure,
    states: &[BlochState],
) -> Result<(Vec<f64>, Vec<f64>)> {
    let mut before = Vec::with_capacity(states.len());
    let mut after = Vec::with_capacity(states.len());
    for s in states {
        let rho = s.density_matrix();
        before.push(m.evaluate(&rho)?);
        after.push(m.evaluate(&ch.apply(&rho))?);
    }
    Ok((before, after))
}

/// Enumerates every state pair sharing the constrained coordinate, compares
/// the ordering signs before and after the channel, and records each strict
/// reversal (up to [`WITNESS_CAP`] stored witnesses; the count is exact).
pub fn check_preservation(
    ch: &Markovian,
    m: &Measure,
    g: &GridSpec,
    constraint: PairConstraint,
    tie_tol: f64,
) -> Result<OrderingReport> {
    m.validate()?;
    let states = g.states();
    let kraus = ch.kraus();
    let (before, after) = measure_tables(&kraus, m, &states)?;

    let mut pairs_checked = 0u64;
    let mut reversals_found = 0u64;
    let mut reversals = Vec::new();
    for group in constraint_groups(g, constraint) {
        for (a, &i) in group.iter().enumerate() {
            for &j in &group[a + 1..] {
                pairs_checked += 1;
                let db = before[i] - before[j];
                let da = after[i] - after[j];
                let (hi, lo) = if db > tie_tol && da < -tie_tol {
                    (i, j)
                } else if db < -tie_tol && da > tie_tol {
                    (j, i)
                } else {
                    continue;
                };
                reversals_found += 1;
                if reversals.len() < WITNESS_CAP {
                    reversals.push(ReversalWitness {
                        s1: states[hi],
                        s2: states[lo],
                        before: (before[hi], before[lo]),
                        after: (after[hi], after[lo]),
                    });
                }
            }
        }
    }
    Ok(OrderingReport {
        channel: format!("{ch}"),
        measure: m.to_string(),
        constraint,
        pairs_checked,
        reversals_found,
        reversals,
        witness_cap: WITNESS_CAP,
        tie_tolerance: tie_tol,
    })
}

/// Recomputes a witness from scratch (channel application plus direct
/// measure evaluation, no closed forms) and checks its defining inequalities.
pub fn validate_witness(
    kraus: &KrausChannel,
    m: &Measure,
    w: &ReversalWitness,
    tol: f64,
) -> Result<bool> {
    let r1 = w.s1.density_matrix();
    let r2 = w.s2.density_matrix();
    let b1 = m.evaluate(&r1)?;
    let b2 = m.evaluate(&r2)?;
    let a1 = m.evaluate(&kraus.apply(&r1))?;
    let a2 = m.evaluate(&kraus.apply(&r2))?;
    Ok(b1 > b2 + tol && a1 < a2 - tol)
}

/// First reversal witness in deterministic grid order, or `None` if the grid
/// is exhausted. The returned witness is re-validated from scratch.
pub fn find_reversal(
    ch: &Markovian,
    m: &Measure,
    g: &GridSpec,
    constraint: PairConstraint,
    tie_tol: f64,
) -> Result<Option<ReversalWitness>> {
    m.validate()?;
    let states = g.states();
    let kraus = ch.kraus();
    let (before, after) = measure_tables(&kraus, m, &states)?;
    for group in constraint_groups(g, constraint) {
        for (a, &i) in group.iter().enumerate() {
            for &j in &group[a + 1..] {
                let db = before[i] - before[j];
                let da = after[i] - after[j];
                let (hi, lo) = if db > tie_tol && da < -tie_tol {
                    (i, j)
                } else if db < -tie_tol && da > tie_tol {
                    (j, i)
                } else {
                    continue;
                };
                let w = ReversalWitness {
                    s1: states[hi],
                    s2: states[lo],
                    before: (before[hi], before[lo]),
                    after: (after[hi], after[lo]),
                };
                if validate_witness(&kraus, m, &w, tie_tol)? {
                    return Ok(Some(w));
                }
            }
        }
    }
    Ok(None)
}

/// Random-pair variant of the ordering check (unconstrained pairs), used by
/// the CLI when `--samples` is given.
pub fn sampled_ordering_check(
    ch: &Markovian,
    m: &Measure,
    samples: u64,
    seed: u64,
    tie_tol: f64,
) -> Result<OrderingReport> {
    m.validate()?;
    let kraus = ch.kraus();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut reversals_found = 0u64;
    let mut reversals = Vec::new();
    for _ in 0..samples {
        let s1 = BlochState::random(&mut rng);
        let s2 = BlochState::random(&mut rng);
        let (r1, r2) = (s1.density_matrix(), s2.density_matrix());
        let b1 = m.evaluate(&r1)?;
        let b2 = m.evaluate(&r2)?;
        let a1 = m.evaluate(&kraus.apply(&r1))?;
        let a2 = m.evaluate(&kraus.apply(&r2))?;
        let (hi, lo) = if b1 - b2 > tie_tol && a1 - a2 < -tie_tol {
            ((s1, b1, a1), (s2, b2, a2))
        } else if b2 - b1 > tie_tol && a2 - a1 < -tie_tol {
            ((s2, b2, a2), (s1, b1, a1))
        } else {
            continue;
        };
        reversals_found += 1;
        if reversals.len() < WITNESS_CAP {
            reversals.push(ReversalWitness {
                s1: hi.0,
                s2: lo.0,
                before: (hi.1, lo.1),
                after: (hi.2, lo.2),
            });
        }
    }
    Ok(OrderingReport {
        channel: format!("{ch}"),
        measure: m.to_string(),
        constraint: PairConstraint::None,
        pairs_checked: samples,
        reversals_found,
        reversals,
        witness_cap: WITNESS_CAP,
        tie_tolerance: tie_tol,
    })
}

/// The coordinate a monotonicity scan differentiates along.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Axis {
    T,
    Nz,
    /// Varies n_x keeping n_z = 0, completing with n_y = sqrt(1 - n_x²);
    /// the axis coordinates are taken from `n_z_values`.
    Nx,
}

/// The direction a slope is claimed to have.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ClaimedSign {
    NonDecreasing,
    NonIncreasing,
}

/// One central-difference sample of the post-channel coherence.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SlopeSample {
    /// Coordinate on the scanned axis.
    pub axis_value: f64,
    pub t: f64,
    pub n_z: f64,
    pub azimuth: f64,
    pub slope: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct MonotonicityReport {
    pub channel: String,
    pub measure: String,
    pub axis: Axis,
    pub claimed: ClaimedSign,
    pub step: f64,
    pub sign_tolerance: f64,
    pub min_slope: f64,
    pub max_slope: f64,
    pub samples: Vec<SlopeSample>,
    /// Samples whose slope contradicts the claimed sign beyond the tolerance.
    pub violations: Vec<SlopeSample>,
}

/// Central finite differences of the post-channel coherence along `axis` at
/// every interior grid point (the first and last axis values are skipped).
pub fn monotonicity_scan(
    ch: &Markovian,
    m: &Measure,
    axis: Axis,
    g: &GridSpec,
    step: f64,
    claimed: ClaimedSign,
    sign_tol: f64,
) -> Result<MonotonicityReport> {
    m.validate()?;
    if step <= 0.0 {
        return Err(Error::InvalidGrid(format!("step {step} must be positive")));
    }
    let kraus = ch.kraus();
    let eval = |s: &BlochState| -> Result<f64> { m.evaluate(&kraus.apply(&s.density_matrix())) };

    // base points: (t, n_z, azimuth) triples that stay fixed while the axis moves
    let mut samples = Vec::new();
    match axis {
        Axis::T => {
            for &nz in &g.n_z_values {
                for &az in &g.azimuth_values {
                    for &t in interior(&g.t_values) {
                        if t - step < 0.0 || t + step > 1.0 {
                            return Err(Error::InvalidGrid(format!("t = {t} ± {step} leaves [0,1]")));
                        }
                        let fp = eval(&BlochState::from_polar(t + step, nz, az)?)?;
                        let fm = eval(&BlochState::from_polar(t - step, nz, az)?)?;
                        samples.push(SlopeSample {
                            axis_value: t,
                            t,
                            n_z: nz,
                            azimuth: az,
                            slope: (fp - fm) / (2.0 * step),
                        });
                    }
                }
            }
        }
        Axis::Nz => {
            for &t in &g.t_values {
                for &az in &g.azimuth_values {
                    for &nz in interior(&g.n_z_values) {
                        if nz - step < -1.0 || nz + step > 1.0 {
                            return Err(Error::InvalidGrid(format!("n_z = {nz} ± {step} leaves [-1,1]")));
                        }
                        let fp = eval(&BlochState::from_polar(t, nz + step, az)?)?;
                        let fm = eval(&BlochState::from_polar(t, nz - step, az)?)?;
                        samples.push(SlopeSample {
                            axis_value: nz,
                            t,
                            n_z: nz,
                            azimuth: az,
                            slope: (fp - fm) / (2.0 * step),
                        });
                    }
                }
            }
        }
        Axis::Nx => {
            for &t in &g.t_values {
                for &nx in interior(&g.n_z_values) {
                    if nx - step < 0.0 || nx + step > 1.0 {
                        return Err(Error::InvalidGrid(format!("n_x = {nx} ± {step} leaves [0,1]")));
                    }
                    let state_at = |x: f64| -> Result<BlochState> {
                        BlochState::new(t, [x, (1.0 - x * x).max(0.0).sqrt(), 0.0])
                    };
                    let fp = eval(&state_at(nx + step)?)?;
                    let fm = eval(&state_at(nx - step)?)?;
                    samples.push(SlopeSample {
                        axis_value: nx,
                        t,
                        n_z: 0.0,
                        azimuth: 0.0,
                        slope: (fp - fm) / (2.0 * step),
                    });
                }
            }
        }
    }

    let min_slope = samples.iter().map(|s| s.slope).fold(f64::INFINITY, f64::min);
    let max_slope = samples.iter().map(|s| s.slope).fold(f64::NEG_INFINITY, f64::max);
    let violations: Vec<SlopeSample> = samples
        .iter()
        .copied()
        .filter(|s| match claimed {
            ClaimedSign::NonDecreasing => s.slope < -sign_tol,
            ClaimedSign::NonIncreasing => s.slope > sign_tol,
        })
        .collect();
    Ok(MonotonicityReport {
        channel: format!("{ch}"),
        measure: m.to_string(),
        axis,
        claimed,
        step,
        sign_tolerance: sign_tol,
        min_slope,
        max_slope,
        samples,
        violations,
    })
}

fn interior(values: &[f64]) -> &[f64] {
    if values.len() <= 2 {
        &[]
    } else {
        &values[1..values.len() - 1]
    }
}

/// One (t, n_z, value) row of a surface table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SurfacePoint {
    pub t: f64,
    pub n_z: f64,
    pub value: f64,
}

/// Post-channel coherence over the (t, n_z) grid at the grid's first azimuth
/// (n_y = 0 for the default figure grid). Row order: t outer, n_z inner.
pub fn figure_surface(ch: &Markovian, m: &Measure, g: &GridSpec) -> Result<Vec<SurfacePoint>> {
    m.validate()?;
    let kraus = ch.kraus();
    let az = g.azimuth_values[0];
    let mut rows = Vec::with_capacity(g.t_values.len() * g.n_z_values.len());
    for &t in &g.t_values {
        for &nz in &g.n_z_values {
            let s = BlochState::from_polar(t, nz, az)?;
            rows.push(SurfacePoint {
                t,
                n_z: nz,
                value: m.evaluate(&kraus.apply(&s.density_matrix()))?,
            });
        }
    }
    Ok(rows)
}

/// Data behind one of the six reference figures.
#[derive(Debug, Clone, Serialize)]
pub struct FigureData {
    pub id: u8,
    /// Column names for the four row entries.
    pub columns: [&'static str; 4],
    pub rows: Vec<[f64; 4]>,
}

/// Regenerates the data for figures 1–6:
///
/// 1. relative entropy under amplitude damping, surfaces at p ∈ {1/4, 1/2, 3/4};
/// 2. the same quantity as t-series at n_z ∈ {0.3, 0.6, 0.9};
/// 3. the same quantity as n_z-series at t ∈ {0.3, 0.6, 0.9};
/// 4. Tsallis order 2 under amplitude damping at p ∈ {1/8, 3/8, 5/8, 7/8};
/// 5. Tsallis orders {1/4, 3/4, 5/4, 7/4} under amplitude damping at p = 1/2;
/// 6. the same orders under phase damping at p = 1/2.
pub fn figure_data(id: u8) -> Result<FigureData> {
    let g = GridSpec::figure_grid();
    let ad = |p: f64| Markovian::new(crate::channels::MarkovianKind::AmplitudeDamping, p);
    let pd = |p: f64| Markovian::new(crate::channels::MarkovianKind::PhaseDamping, p);
    let mut rows = Vec::new();
    let columns = match id {
        1 => {
            for p in [0.25, 0.5, 0.75] {
                for pt in figure_surface(&ad(p)?, &Measure::RelativeEntropy, &g)? {
                    rows.push([p, pt.t, pt.n_z, pt.value]);
                }
            }
            ["p", "t", "n_z", "value"]
        }
        2 => {
            for p in [0.25, 0.5, 0.75] {
                let ch = ad(p)?;
                let kraus = ch.kraus();
                for nz in [0.3, 0.6, 0.9] {
                    for &t in &g.t_values {
                        let s = BlochState::from_polar(t, nz, 0.0)?;
                        let v = Measure::RelativeEntropy.evaluate(&kraus.apply(&s.density_matrix()))?;
                        rows.push([p, nz, t, v]);
                    }
                }
            }
            ["p", "n_z", "t", "value"]
        }
        3 => {
            for p in [0.25, 0.5, 0.75] {
                let ch = ad(p)?;
                let kraus = ch.kraus();
                for t in [0.3, 0.6, 0.9] {
                    for &nz in &g.n_z_values {
                        let s = BlochState::from_polar(t, nz, 0.0)?;
                        let v = Measure::RelativeEntropy.evaluate(&kraus.apply(&s.density_matrix()))?;
                        rows.push([p, t, nz, v]);
                    }
                }
            }
            ["p", "t", "n_z", "value"]
        }
        4 => {
            for p in [0.125, 0.375, 0.625, 0.875] {
                for pt in figure_surface(&ad(p)?, &Measure::Tsallis(2.0), &g)? {
                    rows.push([p, pt.t, pt.n_z, pt.value]);
                }
            }
            ["p", "t", "n_z", "value"]
        }
        5 => {
            for alpha in [0.25, 0.75, 1.25, 1.75] {
                for pt in figure_surface(&ad(0.5)?, &Measure::Tsallis(alpha), &g)? {
                    rows.push([alpha, pt.t, pt.n_z, pt.value]);
                }
            }
            ["alpha", "t", "n_z", "value"]
        }
        6 => {
            for alpha in [0.25, 0.75, 1.25, 1.75] {
                for pt in figure_surface(&pd(0.5)?, &Measure::Tsallis(alpha), &g)? {
                    rows.push([alpha, pt.t, pt.n_z, pt.value]);
                }
            }
            ["alpha", "t", "n_z", "value"]
        }
        _ => return Err(Error::Domain(format!("figure id {id} outside 1..=6"))),
    };
    Ok(FigureData { id, columns, rows })
}

/// Searches the given angle grid of one NC family, restricted to its
/// incoherent members, for a channel together with a state pair whose l1
/// ordering strictly reverses. Returns the first hit in deterministic order.
pub fn nc_reversal_search(
    family: NcFamily,
    angles: &[f64],
    g: &GridSpec,
    tie_tol: f64,
) -> Result<Option<(NcChannel, ReversalWitness)>> {
    if angles.is_empty() {
        return Err(Error::InvalidGrid("angle list must be non-empty".into()));
    }
    let states = g.states();
    let before: Vec<f64> = states
        .iter()
        .map(|s| Measure::L1.evaluate(&s.density_matrix()))
        .collect::<Result<_>>()?;

    let mut channels = Vec::new();
    match family {
        NcFamily::Phi1 => {
            for &th in angles {
                for &ph in angles {
                    for &xi in angles {
                        for &eta in angles {
                            channels.push(NcChannel::phi1(th, ph, xi, eta));
                        }
                    }
                }
            }
        }
        NcFamily::Phi2 => {
            for &th in angles {
                for &ph in angles {
                    for &xi in angles {
                        channels.push(NcChannel::phi2(th, ph, xi));
                    }
                }
            }
        }
    }

    for ch in channels {
        let kraus = ch.kraus();
        if !kraus.is_incoherent() {
            continue;
        }
        let after: Vec<f64> = states
            .iter()
            .map(|s| Measure::L1.evaluate(&kraus.apply(&s.density_matrix())))
            .collect::<Result<_>>()?;
        for i in 0..states.len() {
            for j in (i + 1)..states.len() {
                let db = before[i] - before[j];
                let da = after[i] - after[j];
                let (hi, lo) = if db > tie_tol && da < -tie_tol {
                    (i, j)
                } else if db < -tie_tol && da > tie_tol {
                    (j, i)
                } else {
                    continue;
                };
                let w = ReversalWitness {
                    s1: states[hi],
                    s2: states[lo],
                    before: (before[hi], before[lo]),
                    after: (after[hi], after[lo]),
                };
                if validate_witness(&kraus, &Measure::L1, &w, tie_tol)? {
                    return Ok(Some((ch, w)));
                }
            }
        }
    }
    Ok(None)
}

/// Angle grid {0, π/8, …, π/2} used as the default NC search space.
pub fn default_nc_angles() -> Vec<f64> {
    (0..=4).map(|k| k as f64 * PI / 8.0).collect()
}

/// Seeded random states, shared by the sampled checks and the test suites.
pub fn random_states(seed: u64, count: usize) -> Vec<BlochState> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| BlochState::random(&mut rng)).collect()
}

/// Convenience: the azimuth circle {0, π/6, …, 2π}.
pub fn full_azimuth_circle() -> Vec<f64> {
    (0..=12).map(|k| k as f64 * TAU / 12.0).collect()
}
