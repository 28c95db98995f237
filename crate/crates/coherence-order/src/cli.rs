//! Command-line front end.
//!
//! Subcommands: `coherence`, `evolve`, `scan`, `ordering-check`, `figure`,
//! `nc-search`. Exit codes: 0 success, 1 invalid arguments, 2 internal
//! numerical or i/o failure, 3 reserved for "reversal found" from
//! `ordering-check`.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::ffi::OsString;
use std::path::PathBuf;

use crate::channels::{Markovian, MarkovianKind, NcChannel, NcFamily};
use crate::error::Error;
use crate::measures::Measure;
use crate::ordering::{
    check_preservation, default_nc_angles, figure_data, figure_surface, nc_reversal_search,
    sampled_ordering_check, GridSpec, OrderingReport, PairConstraint, ReversalWitness,
    DEFAULT_TIE_TOL,
};
use crate::qubit::BlochState;

/// Exit code signalling that `ordering-check` found a reversal.
pub const EXIT_REVERSAL_FOUND: i32 = 3;

#[derive(Parser)]
#[command(
    name = "coherence-order",
    version,
    about = "Qubit coherence measures, Markovian channels, and state-ordering scans"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MeasureKind {
    L1,
    RelativeEntropy,
    Geometric,
    Tsallis,
}

#[derive(Subcommand)]
enum Command {
    /// Print all four coherence measures of a state.
    Coherence {
        /// State as t,nx,ny,nz (direction re-normalized if off by <= 1e-6).
        #[arg(long, allow_hyphen_values = true)]
        state: String,
        /// Tsallis order, in (0,1) or (1,2].
        #[arg(long, default_value_t = 2.0)]
        alpha: f64,
    },
    /// Apply a Markovian channel and print the post-channel matrix and
    /// Bloch parameters.
    Evolve {
        #[arg(long)]
        channel: MarkovianKind,
        #[arg(long)]
        p: f64,
        #[arg(long, allow_hyphen_values = true)]
        state: String,
    },
    /// Write a (t, n_z, value) surface CSV of the post-channel coherence.
    Scan {
        #[arg(long)]
        channel: MarkovianKind,
        #[arg(long)]
        measure: MeasureKind,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 2.0)]
        alpha: f64,
        /// t grid as start:stop:step or a comma list.
        #[arg(long, name = "t-grid", allow_hyphen_values = true)]
        t_grid: Option<String>,
        /// n_z grid as start:stop:step or a comma list.
        #[arg(long, name = "nz-grid", allow_hyphen_values = true)]
        nz_grid: Option<String>,
        /// Azimuth of the scanned slice (radians).
        #[arg(long, default_value_t = 0.0)]
        azimuth: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Scan state pairs for ordering reversals under a channel; exits with
    /// code 3 when a reversal is found.
    OrderingCheck {
        #[arg(long)]
        channel: MarkovianKind,
        #[arg(long)]
        measure: MeasureKind,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 2.0)]
        alpha: f64,
        #[arg(long)]
        constraint: PairConstraint,
        #[arg(long, name = "tie-tol", default_value_t = DEFAULT_TIE_TOL)]
        tie_tol: f64,
        #[arg(long, name = "t-grid", allow_hyphen_values = true)]
        t_grid: Option<String>,
        #[arg(long, name = "nz-grid", allow_hyphen_values = true)]
        nz_grid: Option<String>,
        #[arg(long, name = "az-grid", allow_hyphen_values = true)]
        az_grid: Option<String>,
        /// Check this many random pairs instead of the grid (requires
        /// --constraint none).
        #[arg(long)]
        samples: Option<u64>,
        /// Seed for the randomized scan.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Regenerate the data behind one of the reference figures (1..=6) as CSV.
    Figure {
        #[arg(long)]
        id: u8,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search an NC channel family for an l1 ordering-reversal witness.
    NcSearch {
        #[arg(long)]
        family: NcFamily,
        /// Angle grid as start:stop:step or a comma list (radians).
        #[arg(long, allow_hyphen_values = true)]
        angles: Option<String>,
        #[arg(long, name = "t-grid", allow_hyphen_values = true)]
        t_grid: Option<String>,
        #[arg(long, name = "nz-grid", allow_hyphen_values = true)]
        nz_grid: Option<String>,
        #[arg(long, name = "az-grid", allow_hyphen_values = true)]
        az_grid: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parses argv and runs one subcommand, returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            code
        }
    }
}

type CmdResult = std::result::Result<i32, (i32, String)>;

fn lib_err(e: Error) -> (i32, String) {
    let code = match e {
        Error::OptimizerFailure => 2,
        _ => 1,
    };
    (code, e.to_string())
}

fn io_err(e: std::io::Error) -> (i32, String) {
    (2, format!("i/o failure: {e}"))
}

/// 17 significant digits; round-trips f64 bit-exactly and is locale-free.
fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}

fn parse_state(text: &str) -> std::result::Result<BlochState, (i32, String)> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 4 {
        return Err((1, format!("state must be t,nx,ny,nz; got `{text}`")));
    }
    let mut vals = [0.0f64; 4];
    for (slot, part) in vals.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse::<f64>()
            .map_err(|e| (1, format!("bad number `{part}` in state: {e}")))?;
    }
    BlochState::with_normalized_direction(vals[0], [vals[1], vals[2], vals[3]]).map_err(lib_err)
}

/// Accepts `start:stop:step` or a comma-separated list.
fn parse_values(text: &str) -> std::result::Result<Vec<f64>, (i32, String)> {
    let parse_one = |s: &str| {
        s.trim()
            .parse::<f64>()
            .map_err(|e| (1, format!("bad number `{s}`: {e}")))
    };
    if text.contains(':') {
        let parts: Vec<&str> = text.split(':').collect();
        if parts.len() != 3 {
            return Err((1, format!("range must be start:stop:step; got `{text}`")));
        }
        let (start, stop, step) = (parse_one(parts[0])?, parse_one(parts[1])?, parse_one(parts[2])?);
        if step <= 0.0 || stop < start {
            return Err((1, format!("empty or descending range `{text}`")));
        }
        let n = ((stop - start) / step).round() as usize;
        Ok((0..=n).map(|k| start + k as f64 * step).collect())
    } else {
        text.split(',').map(parse_one).collect()
    }
}

fn build_measure(kind: MeasureKind, alpha: f64) -> std::result::Result<Measure, (i32, String)> {
    let m = match kind {
        MeasureKind::L1 => Measure::L1,
        MeasureKind::RelativeEntropy => Measure::RelativeEntropy,
        MeasureKind::Geometric => Measure::Geometric,
        MeasureKind::Tsallis => Measure::Tsallis(alpha),
    };
    m.validate().map_err(lib_err)?;
    Ok(m)
}

fn write_output(out: &Option<PathBuf>, content: &str) -> std::result::Result<(), (i32, String)> {
    match out {
        Some(path) => std::fs::write(path, content).map_err(io_err),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct GridConfig {
    t_values: Vec<f64>,
    n_z_values: Vec<f64>,
    azimuth_values: Vec<f64>,
}

#[derive(Serialize)]
struct OrderingCheckConfig {
    channel: String,
    p: f64,
    measure: String,
    constraint: PairConstraint,
    tie_tolerance: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    samples: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    grid: Option<GridConfig>,
}

#[derive(Serialize)]
struct OrderingCheckOutput {
    config: OrderingCheckConfig,
    report: OrderingReport,
}

#[derive(Serialize)]
struct NcSearchConfig {
    family: String,
    angles: Vec<f64>,
    grid: GridConfig,
    tie_tolerance: f64,
}

#[derive(Serialize)]
struct NcSearchOutput {
    config: NcSearchConfig,
    found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    channel: Option<NcChannel>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<ReversalWitness>,
}

fn execute(command: Command) -> CmdResult {
    match command {
        Command::Coherence { state, alpha } => {
            let s = parse_state(&state)?;
            let rho = s.density_matrix();
            let measures = [
                Measure::L1,
                Measure::RelativeEntropy,
                Measure::Geometric,
                Measure::Tsallis(alpha),
            ];
            let mut text = format!("state: {s}\n");
            for m in measures {
                m.validate().map_err(lib_err)?;
                let v = m.evaluate(&rho).map_err(lib_err)?;
                text.push_str(&format!("{m} = {}\n", fmt17(v)));
            }
            write_output(&None, &text)?;
            Ok(0)
        }
        Command::Evolve { channel, p, state } => {
            let s = parse_state(&state)?;
            let ch = Markovian::new(channel, p).map_err(lib_err)?;
            let out = ch.output(&s);
            let bloch = out.bloch();
            let mut text = format!("channel: {ch}\ninput:  {s}\n");
            text.push_str(&format!("output density matrix:\n{out}"));
            text.push_str(&format!("output: {bloch}\n"));
            write_output(&None, &text)?;
            Ok(0)
        }
        Command::Scan { channel, measure, p, alpha, t_grid, nz_grid, azimuth, out } => {
            let m = build_measure(measure, alpha)?;
            let ch = Markovian::new(channel, p).map_err(lib_err)?;
            let defaults = GridSpec::default_scan();
            let g = GridSpec::new(
                match t_grid {
                    Some(ref s) => parse_values(s)?,
                    None => defaults.t_values,
                },
                match nz_grid {
                    Some(ref s) => parse_values(s)?,
                    None => defaults.n_z_values,
                },
                vec![azimuth],
                vec![p],
            )
            .map_err(lib_err)?;
            let rows = figure_surface(&ch, &m, &g).map_err(lib_err)?;
            let mut csv = String::from("t,n_z,value\n");
            for r in rows {
                csv.push_str(&format!("{},{},{}\n", fmt17(r.t), fmt17(r.n_z), fmt17(r.value)));
            }
            write_output(&out, &csv)?;
            Ok(0)
        }
        Command::OrderingCheck {
            channel,
            measure,
            p,
            alpha,
            constraint,
            tie_tol,
            t_grid,
            nz_grid,
            az_grid,
            samples,
            seed,
            out,
        } => {
            let m = build_measure(measure, alpha)?;
            let ch = Markovian::new(channel, p).map_err(lib_err)?;
            let (report, config) = match samples {
                Some(n) => {
                    if constraint != PairConstraint::None {
                        return Err((
                            1,
                            "--samples draws unconstrained pairs; use --constraint none".into(),
                        ));
                    }
                    let report = sampled_ordering_check(&ch, &m, n, seed, tie_tol).map_err(lib_err)?;
                    let config = OrderingCheckConfig {
                        channel: ch.kind().label().into(),
                        p,
                        measure: m.to_string(),
                        constraint,
                        tie_tolerance: tie_tol,
                        samples: Some(n),
                        seed: Some(seed),
                        grid: None,
                    };
                    (report, config)
                }
                None => {
                    let defaults = GridSpec::default_scan();
                    let g = GridSpec::new(
                        match t_grid {
                            Some(ref s) => parse_values(s)?,
                            None => defaults.t_values,
                        },
                        match nz_grid {
                            Some(ref s) => parse_values(s)?,
                            None => defaults.n_z_values,
                        },
                        match az_grid {
                            Some(ref s) => parse_values(s)?,
                            None => defaults.azimuth_values,
                        },
                        vec![p],
                    )
                    .map_err(lib_err)?;
                    let report =
                        check_preservation(&ch, &m, &g, constraint, tie_tol).map_err(lib_err)?;
                    let config = OrderingCheckConfig {
                        channel: ch.kind().label().into(),
                        p,
                        measure: m.to_string(),
                        constraint,
                        tie_tolerance: tie_tol,
                        samples: None,
                        seed: None,
                        grid: Some(GridConfig {
                            t_values: g.t_values.clone(),
                            n_z_values: g.n_z_values.clone(),
                            azimuth_values: g.azimuth_values.clone(),
                        }),
                    };
                    (report, config)
                }
            };
            let found = report.reversals_found > 0;
            let doc = OrderingCheckOutput { config, report };
            let json = serde_json::to_string_pretty(&doc)
                .map_err(|e| (2, format!("serialization failure: {e}")))?;
            write_output(&out, &(json + "\n"))?;
            Ok(if found { EXIT_REVERSAL_FOUND } else { 0 })
        }
        Command::Figure { id, out } => {
            let data = figure_data(id).map_err(lib_err)?;
            let mut csv = data.columns.join(",");
            csv.push('\n');
            for row in &data.rows {
                let cells: Vec<String> = row.iter().map(|v| fmt17(*v)).collect();
                csv.push_str(&cells.join(","));
                csv.push('\n');
            }
            write_output(&out, &csv)?;
            Ok(0)
        }
        Command::NcSearch { family, angles, t_grid, nz_grid, az_grid, out } => {
            let angle_values = match angles {
                Some(ref s) => parse_values(s)?,
                None => default_nc_angles(),
            };
            let defaults = GridSpec::nc_search_grid();
            let g = GridSpec::new(
                match t_grid {
                    Some(ref s) => parse_values(s)?,
                    None => defaults.t_values,
                },
                match nz_grid {
                    Some(ref s) => parse_values(s)?,
                    None => defaults.n_z_values,
                },
                match az_grid {
                    Some(ref s) => parse_values(s)?,
                    None => defaults.azimuth_values,
                },
                vec![0.5],
            )
            .map_err(lib_err)?;
            let hit = nc_reversal_search(family, &angle_values, &g, DEFAULT_TIE_TOL).map_err(lib_err)?;
            let config = NcSearchConfig {
                family: family.to_string(),
                angles: angle_values,
                grid: GridConfig {
                    t_values: g.t_values.clone(),
                    n_z_values: g.n_z_values.clone(),
                    azimuth_values: g.azimuth_values.clone(),
                },
                tie_tolerance: DEFAULT_TIE_TOL,
            };
            let doc = match hit {
                Some((ch, w)) => NcSearchOutput {
                    config,
                    found: true,
                    channel: Some(ch),
                    witness: Some(w),
                },
                None => NcSearchOutput { config, found: false, channel: None, witness: None },
            };
            let json = serde_json::to_string_pretty(&doc)
                .map_err(|e| (2, format!("serialization failure: {e}")))?;
            write_output(&out, &(json + "\n"))?;
            Ok(0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_values_forms() {
        assert_eq!(parse_values("0.1,0.2,0.3").unwrap(), vec![0.1, 0.2, 0.3]);
        let r = parse_values("0.0:1.0:0.25").unwrap();
        assert_eq!(r.len(), 5);
        assert!((r[4] - 1.0).abs() < 1e-15);
        assert!(parse_values("1:0:0.1").is_err());
        assert!(parse_values("a,b").is_err());
    }

    #[test]
    fn parse_state_forms() {
        let s = parse_state("0.8,0.6,0,0.8").unwrap();
        assert!((s.t() - 0.8).abs() < 1e-15);
        assert!(parse_state("0.8,1,0").is_err());
        assert!(parse_state("0.8,2,0,0").is_err());
    }

    #[test]
    fn float_format_round_trips() {
        for v in [0.0, 0.25, 1.0 / 3.0, 0.1 + 0.2, f64::MIN_POSITIVE, 0.8954886963959582] {
            let text = fmt17(v);
            let back: f64 = text.parse().unwrap();
            assert_eq!(v.to_bits(), back.to_bits(), "{text}");
        }
    }
}
