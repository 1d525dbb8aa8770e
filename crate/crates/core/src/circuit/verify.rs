//! Dense cross-check of the compiled timestep against the lattice operator.
//!
//! The lattice state is flattened site-major (`2x + v`); the circuit basis
//! index is `x + 2^n·v` with the velocity qubit on top. Both describe the
//! same `(x, v)` pair, and the maps below convert between them.

use serde::Serialize;

use super::compile::{qlga_step_circuit_with, StepOptions};
use super::state::circuit_matrix;
use crate::error::{Error, Result};
use crate::lattice::{dense_unitary, LatticeSize, ScatterAngle};

pub const MAX_VERIFY_QUBITS: usize = 6;

pub fn lattice_to_circuit_index(i: usize, n: usize) -> usize {
    (i >> 1) | ((i & 1) << n)
}

pub fn circuit_to_lattice_index(j: usize, n: usize) -> usize {
    let x = j & ((1 << n) - 1);
    let v = j >> n;
    2 * x + v
}

/// Max entrywise error between the compiled step (default options) and the
/// dense lattice operator on `2^n` sites.
pub fn verify_against_dense(n: usize, s: f64) -> Result<f64> {
    verify_against_dense_with(n, s, StepOptions::default())
}

pub fn verify_against_dense_with(n: usize, s: f64, options: StepOptions) -> Result<f64> {
    if !(1..=MAX_VERIFY_QUBITS).contains(&n) {
        return Err(Error::VerifyRange(n));
    }
    let circuit = circuit_matrix(&qlga_step_circuit_with(n, s, options)?)?;
    let lattice = dense_unitary(LatticeSize::from_qubits(n)?, ScatterAngle(s))?;
    let dim = lattice.dim();
    let mut worst: f64 = 0.0;
    for row in 0..dim {
        let r = lattice_to_circuit_index(row, n);
        for col in 0..dim {
            let c = lattice_to_circuit_index(col, n);
            worst = worst.max((lattice.entry(row, col) - circuit.entry(r, c)).norm());
        }
    }
    Ok(worst)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyPoint {
    pub n: usize,
    pub s: f64,
    pub max_error: f64,
}
