//! Dense state-vector simulation.
//!
//! Qubit `q` is bit `q` of the basis index (little-endian).

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::gate::{Circuit, Gate, GateKind};
use crate::error::{Error, Result};
use crate::lattice::{DenseUnitary, NORM_TOLERANCE};

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    qubits: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// `|0…0⟩` on `qubits` qubits.
    pub fn zero(qubits: usize) -> Self {
        Self::basis(qubits, 0)
    }

    pub fn basis(qubits: usize, index: usize) -> Self {
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << qubits];
        amps[index] = Complex64::new(1.0, 0.0);
        Self { qubits, amps }
    }

    pub fn from_amplitudes(qubits: usize, amps: Vec<Complex64>) -> Result<Self> {
        if amps.len() != 1 << qubits {
            return Err(Error::SizeMismatch { left: amps.len(), right: 1 << qubits });
        }
        let norm: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        if (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::NotNormalized(norm));
        }
        Ok(Self { qubits, amps })
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Probability that measuring `qubit` yields 1.
    pub fn probability_one(&self, qubit: usize) -> f64 {
        self.amps
            .iter()
            .enumerate()
            .filter(|(i, _)| i & (1 << qubit) != 0)
            .map(|(_, a)| a.norm_sqr())
            .sum()
    }

    /// Draws `shots` measurement outcomes of `qubit` from a seeded ChaCha8 stream.
    pub fn sample_qubit(&self, qubit: usize, shots: usize, seed: u64) -> Vec<bool> {
        let p1 = self.probability_one(qubit);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..shots).map(|_| rng.gen::<f64>() < p1).collect()
    }

    pub fn apply_gate(&mut self, gate: &Gate) -> Result<()> {
        gate.validate(self.qubits)?;
        let cmask: usize = gate.controls.iter().map(|&c| 1 << c).sum();
        let active = |i: usize| i & cmask == cmask;
        match gate.kind {
            GateKind::Swap => {
                let (a, b) = (1 << gate.targets[0], 1 << gate.targets[1]);
                for i in 0..self.amps.len() {
                    if i & a != 0 && i & b == 0 && active(i) {
                        self.amps.swap(i, i ^ a ^ b);
                    }
                }
            }
            GateKind::FCnot(f) => {
                let (x, b) = (1 << gate.targets[0], 1 << gate.targets[1]);
                for i in 0..self.amps.len() {
                    if i & b == 0 && active(i) && f.eval(i & x != 0) {
                        self.amps.swap(i, i | b);
                    }
                }
            }
            kind => {
                let m = kind.matrix().expect("single-target gate");
                let t = 1 << gate.targets[0];
                for i in 0..self.amps.len() {
                    if i & t == 0 && active(i) {
                        let (a0, a1) = (self.amps[i], self.amps[i | t]);
                        self.amps[i] = m[0] * a0 + m[1] * a1;
                        self.amps[i | t] = m[2] * a0 + m[3] * a1;
                    }
                }
            }
        }
        Ok(())
    }

    pub fn apply_circuit(&mut self, circuit: &Circuit) -> Result<()> {
        if circuit.width() != self.qubits {
            return Err(Error::WidthMismatch { circuit: circuit.width(), state: self.qubits });
        }
        for g in circuit.gates() {
            self.apply_gate(g)?;
        }
        Ok(())
    }
}

/// Value-returning form of [`StateVector::apply_gate`].
pub fn apply_gate(v: &StateVector, gate: &Gate) -> Result<StateVector> {
    let mut out = v.clone();
    out.apply_gate(gate)?;
    Ok(out)
}

pub fn apply_circuit(v: &StateVector, circuit: &Circuit) -> Result<StateVector> {
    let mut out = v.clone();
    out.apply_circuit(circuit)?;
    Ok(out)
}

/// Dense matrix of a circuit, built column by column from basis states.
pub fn circuit_matrix(circuit: &Circuit) -> Result<DenseUnitary> {
    let dim = 1usize << circuit.width();
    let mut entries = vec![Complex64::new(0.0, 0.0); dim * dim];
    for col in 0..dim {
        let mut v = StateVector::basis(circuit.width(), col);
        v.apply_circuit(circuit)?;
        for (row, a) in v.amps.iter().enumerate() {
            entries[row * dim + col] = *a;
        }
    }
    DenseUnitary::new(dim, entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn hadamard_on_zero() {
        let v = apply_gate(&StateVector::zero(1), &Gate::h(0)).unwrap();
        assert!((v.amplitudes()[0] - c(FRAC_1_SQRT_2, 0.0)).norm() < 1e-15);
        assert!((v.amplitudes()[1] - c(FRAC_1_SQRT_2, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn x_and_phase() {
        let v = apply_gate(&StateVector::zero(1), &Gate::x(0)).unwrap();
        assert_eq!(v, StateVector::basis(1, 1));

        let plus = apply_gate(&StateVector::zero(1), &Gate::h(0)).unwrap();
        let minus = apply_gate(&plus, &Gate::phase(0, PI)).unwrap();
        assert!((minus.amplitudes()[0] - c(FRAC_1_SQRT_2, 0.0)).norm() < 1e-15);
        assert!((minus.amplitudes()[1] - c(-FRAC_1_SQRT_2, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn empty_and_double_x_are_identity() {
        let v = StateVector::basis(2, 2);
        assert_eq!(apply_circuit(&v, &Circuit::new(2)).unwrap(), v);
        let xx = Circuit::from_gates(2, vec![Gate::x(1), Gate::x(1)]).unwrap();
        assert_eq!(apply_circuit(&v, &xx).unwrap(), v);
    }

    #[test]
    fn width_mismatch() {
        let err = apply_circuit(&StateVector::zero(2), &Circuit::new(3));
        assert_eq!(err, Err(Error::WidthMismatch { circuit: 3, state: 2 }));
        assert!(apply_gate(&StateVector::zero(1), &Gate::h(1)).is_err());
    }

    #[test]
    fn controls_act_on_one_subspace() {
        // CX with control 0, target 1: |01⟩ (index 1) ↦ |11⟩ (index 3).
        let cx = Gate::x(1).controlled_by(0);
        assert_eq!(apply_gate(&StateVector::basis(2, 1), &cx).unwrap(), StateVector::basis(2, 3));
        assert_eq!(apply_gate(&StateVector::basis(2, 2), &cx).unwrap(), StateVector::basis(2, 2));
    }

    #[test]
    fn swap_permutes_bits() {
        let s = Gate::swap(0, 2);
        assert_eq!(apply_gate(&StateVector::basis(3, 0b001), &s).unwrap(), StateVector::basis(3, 0b100));
        assert_eq!(apply_gate(&StateVector::basis(3, 0b011), &s).unwrap(), StateVector::basis(3, 0b110));
        assert_eq!(apply_gate(&StateVector::basis(3, 0b101), &s).unwrap(), StateVector::basis(3, 0b101));
    }

    // Hand-written dense matrices as the oracle for gate application.
    #[test]
    fn circuit_matrix_matches_hand_built_cphase() {
        let phi = 0.7;
        let circ = Circuit::from_gates(2, vec![Gate::phase(1, phi).controlled_by(0)]).unwrap();
        let m = circuit_matrix(&circ).unwrap();
        for r in 0..4 {
            for col in 0..4 {
                let expect = match (r, col) {
                    (3, 3) => Complex64::from_polar(1.0, phi),
                    (a, b) if a == b => c(1.0, 0.0),
                    _ => c(0.0, 0.0),
                };
                assert!((m.entry(r, col) - expect).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn sampling_is_seeded() {
        let plus = apply_gate(&StateVector::zero(1), &Gate::h(0)).unwrap();
        let a = plus.sample_qubit(0, 64, 5);
        assert_eq!(a, plus.sample_qubit(0, 64, 5));
        assert!(a.iter().any(|b| *b) && a.iter().any(|b| !*b));
        assert!(StateVector::basis(1, 1).sample_qubit(0, 16, 1).iter().all(|b| *b));
    }
}
