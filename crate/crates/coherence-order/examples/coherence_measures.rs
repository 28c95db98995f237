//! Evaluate the four coherence measures on a few representative states.
//!
//! Run with: cargo run --example coherence_measures

use coherence_order::{BlochState, DensityMatrix, Measure};

fn main() {
    let states = [
        ("maximally coherent |+>", BlochState::new(1.0, [1.0, 0.0, 0.0]).unwrap()),
        ("pure pole state |0>", BlochState::new(1.0, [0.0, 0.0, 1.0]).unwrap()),
        ("mixed, tilted", BlochState::new(0.8, [0.6, 0.0, 0.8]).unwrap()),
        ("maximally mixed", BlochState::new(0.0, [0.0, 0.0, 1.0]).unwrap()),
    ];
    let measures = [
        Measure::L1,
        Measure::RelativeEntropy,
        Measure::Geometric,
        Measure::Tsallis(0.5),
        Measure::Tsallis(2.0),
    ];

    for (name, s) in &states {
        let rho = s.density_matrix();
        println!("{name}: {s}");
        for m in &measures {
            println!("  {m:<18} = {:.12}", m.evaluate(&rho).unwrap());
        }
        println!();
    }

    // every measure vanishes exactly on incoherent (diagonal) states
    let diag = DensityMatrix::incoherent(0.7).unwrap();
    println!("diag(0.7, 0.3):");
    for m in &measures {
        println!("  {m:<18} = {:.3e}", m.evaluate(&diag).unwrap());
    }
}
