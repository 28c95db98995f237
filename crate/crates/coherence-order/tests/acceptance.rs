//! Acceptance suite: eight end-to-end checks, one test per criterion, with
//! all tolerances pinned in code.
//!
//! Run `cargo test --test acceptance -- --nocapture` to see one summary line
//! per criterion; the test names double as the pass/fail lines in the
//! harness output.

use std::time::Instant;

use coherence_order::channels::{
    bit_flip_half_slope_nx, depolarizing_cr_slope_nz, phase_damping_cr_slope_t, Markovian,
    MarkovianKind, NcChannel,
};
use coherence_order::measures::Measure;
use coherence_order::ordering::{
    check_preservation, figure_data, find_reversal, monotonicity_scan, nc_reversal_search,
    random_states, validate_witness, Axis, ClaimedSign, GridSpec, PairConstraint, ReversalWitness,
};
use coherence_order::qubit::BlochState;

fn p_grid_11() -> Vec<f64> {
    (0..=10).map(|k| k as f64 / 10.0).collect()
}

fn tsallis_alphas() -> [f64; 5] {
    [0.25, 0.75, 1.25, 1.75, 2.0]
}

fn all_measures() -> Vec<Measure> {
    let mut v = vec![Measure::L1, Measure::RelativeEntropy, Measure::Geometric];
    v.extend(tsallis_alphas().map(Measure::Tsallis));
    v
}

#[test]
fn c1_closed_form_output_matches_kraus_oracle() {
    let start = Instant::now();
    let states = random_states(101, 500);
    let mut max_diff = 0.0f64;
    for kind in MarkovianKind::ALL {
        for p in p_grid_11() {
            let ch = Markovian::new(kind, p).unwrap();
            let kraus = ch.kraus();
            for s in &states {
                let direct = kraus.apply(&s.density_matrix());
                let closed = ch.output(s);
                max_diff = max_diff.max(direct.mat().max_abs_diff(&closed.mat()));
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    println!(
        "criterion 1 (channel oracle equivalence): {} — max entrywise diff {max_diff:.3e} \
         over 4 kinds x 11 p x 500 states in {secs:.2} s",
        if max_diff <= 1e-12 && secs < 5.0 { "PASS" } else { "FAIL" }
    );
    assert!(secs < 5.0, "runtime {secs:.2} s exceeds 5 s");
    assert!(max_diff <= 1e-12, "max entrywise diff {max_diff:.3e}");
}

#[test]
fn c2_closed_form_coherence_matches_direct_measurement() {
    let start = Instant::now();
    let states = random_states(103, 500);
    let mut measures = vec![Measure::L1, Measure::RelativeEntropy];
    measures.extend(tsallis_alphas().map(Measure::Tsallis));
    let mut max_diff = 0.0f64;
    for kind in MarkovianKind::ALL {
        for p in p_grid_11() {
            let ch = Markovian::new(kind, p).unwrap();
            let kraus = ch.kraus();
            for s in &states {
                let out = kraus.apply(&s.density_matrix());
                for m in &measures {
                    let (closed, _) = ch.coherence(s, m).unwrap();
                    let direct = m.evaluate(&out).unwrap();
                    max_diff = max_diff.max((closed - direct).abs());
                }
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    println!(
        "criterion 2 (closed-form coherence): {} — max |closed - direct| {max_diff:.3e} in {secs:.2} s",
        if max_diff <= 1e-10 && secs < 30.0 { "PASS" } else { "FAIL" }
    );
    assert!(secs < 30.0, "runtime {secs:.2} s exceeds 30 s");
    assert!(max_diff <= 1e-10, "max |closed - direct| = {max_diff:.3e}");
}

#[test]
fn c3_ad_pd_dep_preserve_ordering_on_default_grid() {
    let start = Instant::now();
    let grid = GridSpec::default_scan();
    let kinds = [
        MarkovianKind::AmplitudeDamping,
        MarkovianKind::PhaseDamping,
        MarkovianKind::Depolarizing,
    ];
    let mut total_reversals = 0u64;
    let mut failing: Vec<(String, u64, Option<ReversalWitness>)> = Vec::new();
    for kind in kinds {
        for &p in &grid.p_values.clone() {
            let ch = Markovian::new(kind, p).unwrap();
            for m in all_measures() {
                for constraint in [PairConstraint::FixedT, PairConstraint::FixedNz] {
                    let report = check_preservation(&ch, &m, &grid, constraint, 1e-9).unwrap();
                    if report.reversals_found > 0 {
                        total_reversals += report.reversals_found;
                        failing.push((
                            format!("{ch} / {m} / {constraint:?}"),
                            report.reversals_found,
                            report.reversals.first().copied(),
                        ));
                    }
                }
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    println!(
        "criterion 3 (ordering preservation, AD/PD/depolarizing): {} — {total_reversals} \
         reversals across {} failing combination(s) in {secs:.2} s",
        if total_reversals == 0 && secs < 120.0 { "PASS" } else { "FAIL" },
        failing.len()
    );
    assert!(secs < 120.0, "runtime {secs:.2} s exceeds 2 min");
    if total_reversals > 0 {
        let mut detail = String::new();
        for (combo, count, witness) in failing.iter().take(6) {
            detail.push_str(&format!("\n  {combo}: {count} reversal(s)"));
            if let Some(w) = witness {
                detail.push_str(&format!(
                    "\n    first witness: s1 = [{}], s2 = [{}], before ({:.6}, {:.6}), after ({:.6}, {:.6})",
                    w.s1, w.s2, w.before.0, w.before.1, w.after.0, w.after.1
                ));
            }
        }
        if failing.len() > 6 {
            detail.push_str(&format!("\n  ... and {} more combinations", failing.len() - 6));
        }
        panic!(
            "expected zero ordering reversals for amplitude damping, phase damping, and \
             depolarizing on the default grid, found {total_reversals}.\nEvery witness \
             re-validates through the direct Kraus route (see \
             ordering::tests::amplitude_damping_relative_entropy_fixed_t_reversal_exists); the \
             post-channel relative-entropy and Tsallis coherences under amplitude damping \
             increase with n_z near the equator, so fixed-t pairs there genuinely reverse.{detail}"
        );
    }
}

#[test]
fn c4_bit_flip_at_one_half_reverses_all_four_measures() {
    let start = Instant::now();
    let ch = Markovian::new(MarkovianKind::BitFlip, 0.5).unwrap();
    let grid = GridSpec::default_scan();
    let kraus = ch.kraus();
    for m in all_measures() {
        for constraint in [PairConstraint::FixedT, PairConstraint::FixedNz] {
            let witness = find_reversal(&ch, &m, &grid, constraint, 1e-9)
                .unwrap()
                .unwrap_or_else(|| panic!("no witness for {m} under {constraint:?}"));
            assert!(
                validate_witness(&kraus, &m, &witness, 1e-9).unwrap(),
                "witness failed re-validation for {m} under {constraint:?}"
            );
        }
    }

    // the pinned reference pair re-validates with the stated gaps
    let s1 = BlochState::new(0.9, [0.3, 0.90f64.sqrt(), 0.1]).unwrap();
    let s2 = BlochState::new(0.9, [0.6, 0.39f64.sqrt(), 0.5]).unwrap();
    let m = Measure::L1;
    let b1 = m.evaluate(&s1.density_matrix()).unwrap();
    let b2 = m.evaluate(&s2.density_matrix()).unwrap();
    let a1 = m.evaluate(&kraus.apply(&s1.density_matrix())).unwrap();
    let a2 = m.evaluate(&kraus.apply(&s2.density_matrix())).unwrap();
    assert!(b1 - b2 > 0.11, "before gap {}", b1 - b2);
    assert!(a1 - a2 < -0.26, "after gap {}", a1 - a2);

    let secs = start.elapsed().as_secs_f64();
    println!(
        "criterion 4 (bit-flip reversal at p = 1/2): PASS — witnesses found and re-validated \
         for all four measures under both constraints; pinned pair gaps {:.4} / {:.4} in {secs:.2} s",
        b1 - b2,
        a1 - a2
    );
}

#[test]
fn c5_finite_differences_match_analytic_slopes() {
    let start = Instant::now();
    let step = 1e-5;
    let sign_tol = 1e-8;
    let agree = |fd: f64, analytic: f64| (fd - analytic).abs() <= (1e-6f64).max(1e-4 * analytic.abs());

    // phase damping: dC_r/dt >= 0 on the full default grid, both n_z signs
    let full = GridSpec::default_scan();
    for &p in &full.p_values.clone() {
        let ch = Markovian::new(MarkovianKind::PhaseDamping, p).unwrap();
        let report = monotonicity_scan(
            &ch,
            &Measure::RelativeEntropy,
            Axis::T,
            &full,
            step,
            ClaimedSign::NonDecreasing,
            sign_tol,
        )
        .unwrap();
        assert!(
            report.violations.is_empty(),
            "phase damping p={p}: min slope {}",
            report.min_slope
        );
        for s in &report.samples {
            let state = BlochState::from_polar(s.t, s.n_z, s.azimuth).unwrap();
            let analytic = phase_damping_cr_slope_t(&state, p);
            assert!(agree(s.slope, analytic), "pd p={p} t={} nz={}: fd {} vs {}", s.t, s.n_z, s.slope, analytic);
        }
    }

    // depolarizing: dC_r/dn_z agrees with the formula on the full grid and
    // is non-positive on the n_z >= 0 half where the sign statement applies
    let nonneg = GridSpec::new(
        full.t_values.clone(),
        full.n_z_values.iter().copied().filter(|z| *z >= 0.0).collect(),
        full.azimuth_values.clone(),
        full.p_values.clone(),
    )
    .unwrap();
    for &p in &full.p_values.clone() {
        let ch = Markovian::new(MarkovianKind::Depolarizing, p).unwrap();
        let everywhere = monotonicity_scan(
            &ch,
            &Measure::RelativeEntropy,
            Axis::Nz,
            &full,
            step,
            ClaimedSign::NonIncreasing,
            f64::INFINITY, // sign claim checked on the non-negative half below
        )
        .unwrap();
        for s in &everywhere.samples {
            let state = BlochState::from_polar(s.t, s.n_z, s.azimuth).unwrap();
            let analytic = depolarizing_cr_slope_nz(&state, p);
            assert!(agree(s.slope, analytic), "dep p={p} t={} nz={}: fd {} vs {}", s.t, s.n_z, s.slope, analytic);
        }
        let half = monotonicity_scan(
            &ch,
            &Measure::RelativeEntropy,
            Axis::Nz,
            &nonneg,
            step,
            ClaimedSign::NonIncreasing,
            sign_tol,
        )
        .unwrap();
        assert!(
            half.violations.is_empty(),
            "depolarizing p={p}: max slope {} on n_z >= 0",
            half.max_slope
        );
    }

    // bit flip at p = 1/2: d/dn_x of all closed-form measures is >= 0 and
    // matches the displayed derivatives (n_x >= 0 family, n_z = 0)
    let bf = Markovian::new(MarkovianKind::BitFlip, 0.5).unwrap();
    let nx_grid = GridSpec::new(
        full.t_values.clone(),
        full.n_z_values.iter().copied().filter(|z| *z >= 0.05).collect(),
        vec![0.0],
        vec![0.5],
    )
    .unwrap();
    let mut bf_measures = vec![Measure::L1, Measure::RelativeEntropy];
    bf_measures.extend(tsallis_alphas().map(Measure::Tsallis));
    for m in &bf_measures {
        let report = monotonicity_scan(
            &bf,
            m,
            Axis::Nx,
            &nx_grid,
            step,
            ClaimedSign::NonDecreasing,
            sign_tol,
        )
        .unwrap();
        assert!(report.violations.is_empty(), "bit flip {m}: min slope {}", report.min_slope);
        for s in &report.samples {
            let analytic = bit_flip_half_slope_nx(m, s.t, s.axis_value).unwrap();
            assert!(
                agree(s.slope, analytic),
                "bf {m} t={} nx={}: fd {} vs {}",
                s.t,
                s.axis_value,
                s.slope,
                analytic
            );
        }
    }

    let secs = start.elapsed().as_secs_f64();
    println!(
        "criterion 5 (finite differences vs analytic slopes): PASS — all interior grid points \
         within max(1e-6, 1e-4 rel), claimed signs respected within 1e-8, in {secs:.2} s"
    );
}

#[test]
fn c6_l1_and_geometric_order_identically() {
    let start = Instant::now();
    let states = random_states(107, 20_000);
    let mut compared = 0u64;
    for pair in states.chunks(2) {
        let (r1, r2) = (pair[0].density_matrix(), pair[1].density_matrix());
        let dl = Measure::L1.evaluate(&r1).unwrap() - Measure::L1.evaluate(&r2).unwrap();
        let dg = Measure::Geometric.evaluate(&r1).unwrap() - Measure::Geometric.evaluate(&r2).unwrap();
        if dl.abs() > 1e-8 && dg.abs() > 1e-8 {
            compared += 1;
            assert_eq!(
                dl.signum(),
                dg.signum(),
                "ordering disagreement on pair {} / {}",
                pair[0],
                pair[1]
            );
        }
    }
    let secs = start.elapsed().as_secs_f64();
    println!(
        "criterion 6 (l1/geometric ordering equivalence): PASS — identical signs on {compared} \
         of 10000 random pairs with gaps > 1e-8, zero exceptions, in {secs:.2} s"
    );
    assert!(secs < 30.0, "runtime {secs:.2} s exceeds 30 s");
    assert!(compared > 9000, "only {compared} pairs had resolvable gaps");
}

#[test]
fn c7_nc_families_incoherence_and_reversal_witness() {
    let start = Instant::now();
    let nine: Vec<f64> = (0..9).map(|k| k as f64 * std::f64::consts::PI / 8.0).collect();

    // the second family is incoherent on the full 9^3 grid
    for &th in &nine {
        for &ph in &nine {
            for &xi in &nine {
                let ch = NcChannel::phi2(th, ph, xi);
                assert!(ch.kraus().is_incoherent(), "{ch}");
            }
        }
    }

    // the first family is incoherent exactly where sinθcosθsinφcosφ = 0 (9^4 grid)
    for &th in &nine {
        for &ph in &nine {
            for &xi in &nine {
                for &eta in &nine {
                    let ch = NcChannel::phi1(th, ph, xi, eta);
                    let expected = (th.sin() * th.cos() * ph.sin() * ph.cos()).abs() <= 1e-12;
                    assert_eq!(ch.kraus().is_incoherent(), expected, "{ch}");
                }
            }
        }
    }

    // a validated l1 reversal witness exists among incoherent channels
    let grid = GridSpec::nc_search_grid();
    let angles = coherence_order::ordering::default_nc_angles();
    for family in [coherence_order::channels::NcFamily::Phi2, coherence_order::channels::NcFamily::Phi1] {
        let (ch, w) = nc_reversal_search(family, &angles, &grid, 1e-9)
            .unwrap()
            .unwrap_or_else(|| panic!("no witness for {family:?}"));
        assert!(ch.kraus().is_incoherent());
        assert!(validate_witness(&ch.kraus(), &Measure::L1, &w, 1e-9).unwrap());
    }

    let secs = start.elapsed().as_secs_f64();
    println!(
        "criterion 7 (NC families): PASS — phi2 incoherent on 9^3 grid, phi1 boundary exact on \
         9^4 grid, reversal witnesses found and validated, in {secs:.2} s"
    );
}

#[test]
fn c8_figure_regeneration_and_surface_monotonicity() {
    let start = Instant::now();
    let tol = 1e-8;
    for id in 1..=6u8 {
        let data = figure_data(id).unwrap();
        match id {
            1 | 4 | 5 | 6 => {
                // panels of (t, n_z) surfaces: t outer, n_z inner
                let g = GridSpec::figure_grid();
                let (nt, nnz) = (g.t_values.len(), g.n_z_values.len());
                assert_eq!(data.rows.len() % (nt * nnz), 0);
                for panel in data.rows.chunks(nt * nnz) {
                    for iz in 0..nnz {
                        for it in 1..nt {
                            let prev = panel[(it - 1) * nnz + iz][3];
                            let cur = panel[it * nnz + iz][3];
                            assert!(cur >= prev - tol, "figure {id}: value decreases along t");
                        }
                    }
                    for it in 0..nt {
                        for iz in 1..nnz {
                            let prev = panel[it * nnz + iz - 1][3];
                            let cur = panel[it * nnz + iz][3];
                            assert!(cur <= prev + tol, "figure {id}: value increases along n_z");
                        }
                    }
                }
            }
            2 => {
                // t-series per (p, n_z): non-decreasing
                let nt = GridSpec::figure_grid().t_values.len();
                for series in data.rows.chunks(nt) {
                    for k in 1..series.len() {
                        assert!(series[k][3] >= series[k - 1][3] - tol, "figure 2 series decreases");
                    }
                }
            }
            3 => {
                // n_z-series per (p, t): non-increasing
                let nnz = GridSpec::figure_grid().n_z_values.len();
                for series in data.rows.chunks(nnz) {
                    for k in 1..series.len() {
                        assert!(series[k][3] <= series[k - 1][3] + tol, "figure 3 series increases");
                    }
                }
            }
            _ => unreachable!(),
        }
    }
    let secs = start.elapsed().as_secs_f64();
    println!(
        "criterion 8 (figure regeneration): {} — all six figures regenerated, surfaces \
         non-decreasing in t and non-increasing in n_z within 1e-8, in {secs:.2} s",
        if secs < 10.0 { "PASS" } else { "FAIL" }
    );
    assert!(secs < 10.0, "runtime {secs:.2} s exceeds 10 s");
}
