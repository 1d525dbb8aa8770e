//! Simulation and analysis of a one-dimensional quantum lattice gas
//! automaton on a periodic lattice, with a classical random-walk comparator,
//! mixing-time analytics and a gate-level circuit compiler.

pub mod circuit;
pub mod cli;
pub mod dist;
pub mod error;
pub mod lattice;
pub mod mixing;
pub mod spread;
pub mod walk;

pub use dist::{tv_distance, Distribution};
pub use error::{Error, Result};
pub use lattice::{
    dense_unitary, DenseUnitary, InitialState, LatticeSize, QlgaState, ScatterAngle, ScatterMatrix, Velocity,
};
pub use mixing::{
    classical_mixing_time, quantum_mixing_time, scaling_fit, time_averaged_distribution, MixingReport, ScalingFit,
    System,
};
