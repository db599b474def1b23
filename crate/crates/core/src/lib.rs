//! Multi-angle QAOA schedules as a restriction of continuous-time quantum walks
//! on dynamic graphs.
//!
//! The crate compiles circuits over `{H, T, CX}` into ma-QAOA angle schedules,
//! simulates schedules and dynamic-graph walks on dense statevectors, converts
//! between the two models, and checks every construction against independent
//! reference unitaries.
//!
//! Module map:
//!
//! - [`linalg`]: dense complex matrices, Hermitian exponentials, spectral norms,
//!   phase-aligned distances.
//! - [`operators`]: Pauli strings, projector clauses, mixer summands, hypercubes.
//! - [`maqaoa`]: γ/β layers, schedules and their simulation.
//! - [`ctqw`]: weighted graphs, dynamic graphs, walks and the H/T/CX gadgets.
//! - [`transpiler`]: gate fragments, packing, and schedule/dynamic-graph conversion.
//! - [`verify`]: reference gate unitaries, a series exponential oracle, equivalence reports.
//! - [`cli`]: file formats and the commands behind the `maqaoa` binary.

pub mod cli;
pub mod ctqw;
pub mod error;
pub mod linalg;
pub mod maqaoa;
pub mod operators;
pub mod tolerance;
pub mod transpiler;
pub mod verify;

pub use error::{Error, Result};

/// Largest register the dense representation accepts (4096 × 4096 matrices).
pub const MAX_QUBITS: usize = 12;
