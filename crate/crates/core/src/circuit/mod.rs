//! Gate-level circuits: simulation, the compiled lattice-gas timestep,
//! gate counting and the one-query XOR demonstration.

mod compile;
mod count;
mod dj;
mod gate;
mod state;
mod verify;

pub use compile::{
    inverse_qft_circuit, phase_diag_circuit, qft_circuit, qlga_step_circuit, qlga_step_circuit_with, shift_circuit,
    shift_circuit_with, Direction, StepOptions, SwapMode,
};
pub use count::{fit_quadratic, gate_count, GateCountReport, QuadraticFit};
pub use dj::{classical_one_query_bound, dj_circuit, run_dj, DjOutcome, OneQueryStrategy, QUERY, RESPONSE};
pub use gate::{Circuit, Gate, GateKind, TruthTable};
pub use state::{apply_circuit, apply_gate, circuit_matrix, StateVector};
pub use verify::{
    circuit_to_lattice_index, lattice_to_circuit_index, verify_against_dense, verify_against_dense_with, VerifyPoint,
    MAX_VERIFY_QUBITS,
};
