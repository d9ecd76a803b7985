//! Simulator for continuous-time multi-boson quantum walks on coupled
//! superconducting resonator networks.
//!
//! The crate covers the full pipeline: truncated Fock-basis enumeration,
//! random coupling graphs and their perturbations, sparse second-quantized
//! Hamiltonians with relaxation/dephasing collapse operators, closed- and
//! open-system time evolution, the distance metrics used to quantify
//! decoherence and perturbation sensitivity, a classical amplitude path for
//! coherent-state inputs, and seeded ensemble experiments with a CLI front
//! end that serializes plot-ready CSV.

pub mod cli;
pub mod coherent;
pub mod dynamics;
pub mod experiments;
pub mod fock;
pub mod hamiltonian;
pub mod metrics;
pub mod network;

pub(crate) mod numeric;

use thiserror::Error;

/// Crate-wide error type. The CLI maps these onto exit codes: domain and
/// sizing errors are configuration problems (1), numerical failures are 2,
/// I/O failures are 3.
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on an operation's inputs was violated.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// A requested basis would exceed the allocation cap.
    #[error("Fock basis dimension {dim} exceeds cap {cap}")]
    DimensionCap { dim: u128, cap: u64 },
    /// An iterative numerical procedure failed to meet its contract.
    #[error("numerical failure: {0}")]
    Numerical(String),
    /// Configuration file parse or validation failure.
    #[error("config error: {0}")]
    Config(String),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub use coherent::ModeAmplitudes;
pub use dynamics::{DensityMatrix, StateVector};
pub use experiments::ExperimentConfig;
pub use fock::{OccupationBasis, OccupationVector};
pub use hamiltonian::SparseOperator;
pub use network::{CouplingGraph, ModeUnitary};
