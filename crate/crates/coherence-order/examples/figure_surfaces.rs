//! Regenerate the six reference data sets and verify that each emitted
//! surface grows with t and decays with n_z.
//!
//! Run with: cargo run --example figure_surfaces
//! (The CLI equivalent is `coherence-order figure --id N [--out file.csv]`.)

use coherence_order::ordering::{figure_data, GridSpec};

fn main() {
    let g = GridSpec::figure_grid();
    println!(
        "figure grid: {} t-values x {} n_z-values (n_z from {} to {})\n",
        g.t_values.len(),
        g.n_z_values.len(),
        g.n_z_values.first().unwrap(),
        g.n_z_values.last().unwrap()
    );

    for id in 1..=6u8 {
        let data = figure_data(id).unwrap();
        println!("figure {id}: columns {:?}, {} rows", data.columns, data.rows.len());
        for row in data.rows.iter().take(2) {
            println!("  {row:?}");
        }

        // monotonicity of the surface figures along both axes
        if matches!(id, 1 | 4 | 5 | 6) {
            let (nt, nnz) = (g.t_values.len(), g.n_z_values.len());
            let mut min_dt = f64::INFINITY;
            let mut max_dnz = f64::NEG_INFINITY;
            for panel in data.rows.chunks(nt * nnz) {
                for iz in 0..nnz {
                    for it in 1..nt {
                        min_dt = min_dt.min(panel[it * nnz + iz][3] - panel[(it - 1) * nnz + iz][3]);
                    }
                }
                for it in 0..nt {
                    for iz in 1..nnz {
                        max_dnz = max_dnz.max(panel[it * nnz + iz][3] - panel[it * nnz + iz - 1][3]);
                    }
                }
            }
            println!("  min step along t = {min_dt:+.3e} (expected >= 0)");
            println!("  max step along n_z = {max_dnz:+.3e} (expected <= 0)");
        }
        println!();
    }
}
