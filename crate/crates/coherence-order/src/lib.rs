//! Coherence measures for single-qubit states, Markovian noise channels, and
//! scans that decide whether a channel preserves the coherence-induced
//! ordering of states.
//!
//! The crate is organized in five layers:
//!
//! - [`qubit`]: Bloch parametrization, density matrices, closed-form
//!   spectral decomposition, entropies, fidelity.
//! - [`measures`]: the l1, relative-entropy, geometric, and Tsallis
//!   coherence measures.
//! - [`channels`]: Kraus sets for amplitude damping, phase damping,
//!   depolarizing, and bit flip, the two rank-2 NC families, and closed-form
//!   post-channel states and coherence values with their intermediates.
//! - [`ordering`]: grid scans for ordering preservation, reversal-witness
//!   searches, finite-difference monotonicity checks, and surface tables.
//! - [`cli`]: the command-line front end (`coherence`, `evolve`, `scan`,
//!   `ordering-check`, `figure`, `nc-search`).
//!
//! The `examples/` directory contains one runnable example per capability;
//! start with `cargo run --example coherence_measures`.

pub mod channels;
pub mod cli;
pub mod error;
pub mod measures;
pub mod ordering;
pub mod qubit;

pub use channels::{
    ChannelAux, KrausChannel, Markovian, MarkovianKind, NcAux, NcChannel, NcFamily,
};
pub use error::{Error, Result};
pub use measures::Measure;
pub use ordering::{
    GridSpec, MonotonicityReport, OrderingReport, PairConstraint, ReversalWitness,
};
pub use qubit::{fidelity, BlochState, DensityMatrix, Mat2, SpectralDecomposition};
