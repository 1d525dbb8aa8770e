//! Gate-level compilation of the Fourier transform, cyclic shifts and one
//! full lattice-gas timestep.
//!
//! Position bit `j` (weight `2^j`) lives on qubit `j`; the velocity qubit of a
//! timestep circuit is qubit `n`, with `|1⟩` meaning α = +1.
//!
//! The cyclic left shift `|x⟩ ↦ |x−1⟩` factors as `F · D · F†` with
//! `D = diag(ω^x)` and `ω = e^{2πi/N}`; the right shift is `F† · D · F`. `D` is
//! a product of one phase gate per position qubit.
//!
//! The swap-free Fourier core `Q` satisfies `F = P·Q` with `P` the qubit
//! reversal. Conjugating by `P` is the same as renaming qubits `j ↦ n−1−j`, so
//! `F·D·F† = P·(Q·D·Q†)·P` can be emitted without a single swap gate.

use std::f64::consts::{PI, TAU};

use super::gate::{Circuit, Gate};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// `|x⟩ ↦ |x − 1 mod N⟩`
    Left,
    /// `|x⟩ ↦ |x + 1 mod N⟩`
    Right,
}

/// How the bit reversal at the end of the Fourier transform is realized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum SwapMode {
    /// Every transform ends with `⌊n/2⌋` swap gates.
    Explicit,
    /// Reversals are absorbed by renaming qubits; no swap gates are emitted.
    #[default]
    Relabeled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct StepOptions {
    pub swaps: SwapMode,
    /// Drop the back-to-back `F · F†` pair between the unconditional left
    /// shift and the controlled double right shift.
    pub merge_transforms: bool,
}

fn check_qubits(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::NoQubits)
    } else {
        Ok(())
    }
}

/// Fourier core without the final reversal, on qubits `0..n` of a `width`-qubit circuit.
fn fourier_core(n: usize) -> Vec<Gate> {
    let mut gates = Vec::with_capacity(n * (n + 1) / 2);
    for j in (0..n).rev() {
        gates.push(Gate::h(j));
        for k in (0..j).rev() {
            gates.push(Gate::phase(j, PI / (1u64 << (j - k)) as f64).controlled_by(k));
        }
    }
    gates
}

fn reversal_swaps(n: usize) -> Vec<Gate> {
    (0..n / 2).map(|i| Gate::swap(i, n - 1 - i)).collect()
}

fn inverse_gates(gates: &[Gate]) -> Vec<Gate> {
    gates.iter().rev().map(Gate::inverse).collect()
}

fn reversed_labels(gates: Vec<Gate>, n: usize) -> Vec<Gate> {
    gates.into_iter().map(|g| g.relabel(|q| if q < n { n - 1 - q } else { q })).collect()
}

fn phase_angle(n: usize, k: i64, j: usize) -> f64 {
    let modulus = 1i128 << n;
    let turns = (k as i128 * (1i128 << j)).rem_euclid(modulus);
    TAU * turns as f64 / modulus as f64
}

fn diag_gates(n: usize, k: i64) -> Vec<Gate> {
    (0..n).map(|j| Gate::phase(j, phase_angle(n, k, j))).collect()
}

/// `F_N` with `(F_N)_{jk} = ω^{jk}/√N`: `n` Hadamards, `n(n−1)/2` controlled
/// phases of angle `π/2^m`, then `⌊n/2⌋` swaps.
pub fn qft_circuit(n: usize) -> Result<Circuit> {
    check_qubits(n)?;
    let mut gates = fourier_core(n);
    gates.extend(reversal_swaps(n));
    Circuit::from_gates(n, gates)
}

pub fn inverse_qft_circuit(n: usize) -> Result<Circuit> {
    Ok(qft_circuit(n)?.inverse())
}

/// `diag(ω^{k·x})` as `n` phase gates: qubit `j` gets `2π·k·2^j/N`, reduced to `[0, 2π)`.
pub fn phase_diag_circuit(n: usize, k: i64) -> Result<Circuit> {
    check_qubits(n)?;
    Circuit::from_gates(n, diag_gates(n, k))
}

/// `F·D^k·F†` (left, `|x⟩ ↦ |x−k⟩`) or `F†·D^k·F` (right, `|x⟩ ↦ |x+k⟩`),
/// optionally with every diagonal phase controlled by `control`.
fn conjugated_diag(n: usize, k: i64, direction: Direction, swaps: SwapMode, control: Option<usize>) -> [Vec<Gate>; 3] {
    let core = fourier_core(n);
    let core_inv = inverse_gates(&core);
    let control_all = |gates: Vec<Gate>| -> Vec<Gate> {
        match control {
            Some(c) => gates.into_iter().map(|g| g.controlled_by(c)).collect(),
            None => gates,
        }
    };
    let diag = control_all(diag_gates(n, k));
    match (direction, swaps) {
        (Direction::Left, SwapMode::Explicit) => {
            let mut f_inv = reversal_swaps(n);
            f_inv.extend(core_inv);
            let mut f = core;
            f.extend(reversal_swaps(n));
            [f_inv, diag, f]
        }
        (Direction::Right, SwapMode::Explicit) => {
            let mut f = core;
            f.extend(reversal_swaps(n));
            let mut f_inv = reversal_swaps(n);
            f_inv.extend(core_inv);
            [f, diag, f_inv]
        }
        // P·(Q·D·Q†)·P: the whole sandwich with reversed labels.
        (Direction::Left, SwapMode::Relabeled) => [
            reversed_labels(core_inv, n),
            reversed_labels(diag, n),
            reversed_labels(core, n),
        ],
        // Q†·(P·D·P)·Q: only the diagonal is relabeled.
        (Direction::Right, SwapMode::Relabeled) => [core, reversed_labels(diag, n), core_inv],
    }
}

/// Cyclic shift by one site using the textbook transforms, swaps included.
pub fn shift_circuit(n: usize, direction: Direction) -> Result<Circuit> {
    shift_circuit_with(n, direction, SwapMode::Explicit)
}

pub fn shift_circuit_with(n: usize, direction: Direction, swaps: SwapMode) -> Result<Circuit> {
    check_qubits(n)?;
    let [a, d, b] = conjugated_diag(n, 1, direction, swaps, None);
    Circuit::from_gates(n, a.into_iter().chain(d).chain(b).collect())
}

/// One timestep on `n` position qubits plus the velocity qubit `n`, with
/// default options (relabeled reversals, transforms kept unmerged).
pub fn qlga_step_circuit(n: usize, s: f64) -> Result<Circuit> {
    qlga_step_circuit_with(n, s, StepOptions::default())
}

/// Unconditional left shift, then a right shift by two conditioned on the
/// velocity qubit, then scattering on the velocity qubit.
///
/// The double right shift is `F·D^{−2}·F†`, and only its diagonal phases are
/// controlled: with the control at 0 the transforms cancel.
pub fn qlga_step_circuit_with(n: usize, s: f64, options: StepOptions) -> Result<Circuit> {
    check_qubits(n)?;
    let velocity = n;
    let [left_open, left_diag, left_close] = conjugated_diag(n, 1, Direction::Left, options.swaps, None);
    let [ctrl_open, ctrl_diag, ctrl_close] = conjugated_diag(n, -2, Direction::Left, options.swaps, Some(velocity));

    let mut gates = Vec::new();
    gates.extend(left_open);
    gates.extend(left_diag);
    if !options.merge_transforms {
        gates.extend(left_close);
        gates.extend(ctrl_open);
    }
    gates.extend(ctrl_diag);
    gates.extend(ctrl_close);
    gates.push(Gate::scatter(velocity, s));
    Circuit::from_gates(n + 1, gates)
}
