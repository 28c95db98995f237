//! Scan state pairs for ordering reversals under the damping and
//! depolarizing channels.
//!
//! Phase damping and depolarizing keep the coherence-induced ordering for
//! every measure on the default grid. Amplitude damping keeps it under the
//! l1 and geometric measures, and under relative entropy with fixed n_z, but
//! near the equator its post-channel relative-entropy and Tsallis coherences
//! increase with n_z, so fixed-t pairs straddling the equator reverse; the
//! scan below finds those witnesses.
//!
//! Run with: cargo run --release --example ordering_preservation

use coherence_order::ordering::{check_preservation, GridSpec, PairConstraint};
use coherence_order::{Markovian, MarkovianKind, Measure};

fn main() {
    let grid = GridSpec::default_scan();
    let measures = [Measure::L1, Measure::RelativeEntropy, Measure::Tsallis(2.0)];
    let kinds = [
        MarkovianKind::AmplitudeDamping,
        MarkovianKind::PhaseDamping,
        MarkovianKind::Depolarizing,
    ];

    for kind in kinds {
        let ch = Markovian::new(kind, 0.5).unwrap();
        println!("{ch}");
        for m in &measures {
            for constraint in [PairConstraint::FixedT, PairConstraint::FixedNz] {
                let report = check_preservation(&ch, m, &grid, constraint, 1e-9).unwrap();
                print!(
                    "  {m:<18} {constraint:<8?}: {} reversal(s) in {} pairs",
                    report.reversals_found, report.pairs_checked
                );
                if let Some(w) = report.reversals.first() {
                    print!(
                        "   e.g. n_z {:.2} vs {:.2} at t {:.2}: before {:+.2e}, after {:+.2e}",
                        w.s1.nz(),
                        w.s2.nz(),
                        w.s1.t(),
                        w.before.0 - w.before.1,
                        w.after.0 - w.after.1
                    );
                }
                println!();
            }
        }
        println!();
    }
}
