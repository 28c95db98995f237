//! The bit flip at p = 1/2 reorders states under every measure: search the
//! default grid for witnesses with fixed t and with fixed n_z.
//!
//! Run with: cargo run --release --example bitflip_reversal

use coherence_order::ordering::{find_reversal, validate_witness, GridSpec, PairConstraint};
use coherence_order::{BlochState, Markovian, MarkovianKind, Measure};

fn main() {
    let ch = Markovian::new(MarkovianKind::BitFlip, 0.5).unwrap();
    let kraus = ch.kraus();
    let grid = GridSpec::default_scan();
    let measures = [
        Measure::L1,
        Measure::RelativeEntropy,
        Measure::Geometric,
        Measure::Tsallis(2.0),
    ];

    println!("channel: {ch}\n");
    for m in &measures {
        for constraint in [PairConstraint::FixedT, PairConstraint::FixedNz] {
            match find_reversal(&ch, m, &grid, constraint, 1e-9).unwrap() {
                Some(w) => {
                    let ok = validate_witness(&kraus, m, &w, 1e-9).unwrap();
                    println!("{m} / {constraint:?}: witness (revalidated: {ok})");
                    println!("  s1: {}", w.s1);
                    println!("  s2: {}", w.s2);
                    println!("  before: {:.6} > {:.6}", w.before.0, w.before.1);
                    println!("  after:  {:.6} < {:.6}", w.after.0, w.after.1);
                }
                None => println!("{m} / {constraint:?}: no witness on this grid"),
            }
        }
    }

    // the reference pair: same radius, n_x and n_z both increase
    let s1 = BlochState::new(0.9, [0.3, 0.90f64.sqrt(), 0.1]).unwrap();
    let s2 = BlochState::new(0.9, [0.6, 0.39f64.sqrt(), 0.5]).unwrap();
    let m = Measure::L1;
    let b1 = m.evaluate(&s1.density_matrix()).unwrap();
    let b2 = m.evaluate(&s2.density_matrix()).unwrap();
    let a1 = m.evaluate(&kraus.apply(&s1.density_matrix())).unwrap();
    let a2 = m.evaluate(&kraus.apply(&s2.density_matrix())).unwrap();
    println!("\nreference pair under l1:");
    println!("  before: {b1:.6} vs {b2:.6} (gap {:+.6})", b1 - b2);
    println!("  after:  {a1:.6} vs {a2:.6} (gap {:+.6})", a1 - a2);
}
