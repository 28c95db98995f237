//! The two rank-2 non-coherence-generating families: incoherence boundary of
//! the first family and an ordering-reversal witness among incoherent members.
//!
//! Run with: cargo run --example nc_channels

use coherence_order::ordering::{default_nc_angles, nc_reversal_search, GridSpec};
use coherence_order::{BlochState, Measure, NcChannel, NcFamily};
use std::f64::consts::PI;

fn main() {
    // the first family is incoherent exactly when sin θ cos θ sin φ cos φ = 0
    println!("phi1 incoherence over a θ, φ grid (ξ = 0.4, η = 1.1):");
    print!("{:>8}", "θ\\φ");
    let angles: Vec<f64> = (0..=4).map(|k| k as f64 * PI / 8.0).collect();
    for ph in &angles {
        print!("{:>8.3}", ph);
    }
    println!();
    for th in &angles {
        print!("{th:>8.3}");
        for ph in &angles {
            let ch = NcChannel::phi1(*th, *ph, 0.4, 1.1);
            print!("{:>8}", if ch.kraus().is_incoherent() { "yes" } else { "no" });
        }
        println!();
    }

    // the second family is incoherent for every parameter choice
    let ch = NcChannel::phi2(PI / 3.0, PI / 6.0, 0.7);
    println!("\n{ch}: incoherent = {}", ch.kraus().is_incoherent());
    let s = BlochState::new(0.8, [0.6, 0.0, 0.8]).unwrap();
    let aux = ch.output_entries(&s);
    let direct = ch.kraus().apply(&s.density_matrix());
    println!(
        "closed-form entries vs Kraus map on {s}:\n  population {:.12} vs {:.12}\n  |off-diagonal| {:.12} vs {:.12}",
        aux.diag,
        direct.entry(0, 0).re,
        aux.offdiag.norm(),
        direct.entry(0, 1).norm()
    );

    // both families contain incoherent channels that reorder states under l1
    for family in [NcFamily::Phi2, NcFamily::Phi1] {
        let hit = nc_reversal_search(family, &default_nc_angles(), &GridSpec::nc_search_grid(), 1e-9)
            .unwrap();
        match hit {
            Some((ch, w)) => {
                println!("\n{family:?} witness: {ch}");
                println!("  s1: {}", w.s1);
                println!("  s2: {}", w.s2);
                println!("  l1 before: {:.6} > {:.6}", w.before.0, w.before.1);
                println!("  l1 after:  {:.6} < {:.6}", w.after.0, w.after.1);
                let m = Measure::L1;
                let k = ch.kraus();
                let a1 = m.evaluate(&k.apply(&w.s1.density_matrix())).unwrap();
                let a2 = m.evaluate(&k.apply(&w.s2.density_matrix())).unwrap();
                println!("  recomputed after: {a1:.6} vs {a2:.6}");
            }
            None => println!("\n{family:?}: grid exhausted with no witness"),
        }
    }
}
