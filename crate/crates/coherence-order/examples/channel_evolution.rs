//! Send one state through all four Markovian channels and compare the
//! closed-form output against the direct Kraus application.
//!
//! Run with: cargo run --example channel_evolution

use coherence_order::{BlochState, Markovian, MarkovianKind, Measure};

fn main() {
    let s = BlochState::new(0.9, [0.48, 0.6, 0.64]).unwrap();
    println!("input: {s}\n");

    for kind in MarkovianKind::ALL {
        let ch = Markovian::new(kind, 0.5).unwrap();
        let closed = ch.output(&s);
        let direct = ch.kraus().apply(&s.density_matrix());
        let diff = closed.mat().max_abs_diff(&direct.mat());
        let out = closed.bloch();
        println!("{ch}");
        println!("  output: {out}");
        println!("  closed form vs Kraus map: max entrywise diff = {diff:.3e}");
        for m in [Measure::L1, Measure::RelativeEntropy, Measure::Tsallis(2.0)] {
            let (value, _aux) = ch.coherence(&s, &m).unwrap();
            let measured = m.evaluate(&direct).unwrap();
            println!("  {m:<18} closed = {value:.12}  direct = {measured:.12}");
        }
        println!();
    }
}
