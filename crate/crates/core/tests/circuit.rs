mod common;

use std::f64::consts::{FRAC_PI_4, FRAC_PI_8};

use common::{dft_matrix, mat_vec, oracle_step_matrix, unit_vector};
use proptest::prelude::*;
use qlga::circuit::{
    circuit_matrix, circuit_to_lattice_index, classical_one_query_bound, dj_circuit, gate_count, inverse_qft_circuit,
    lattice_to_circuit_index, phase_diag_circuit, qft_circuit, qlga_step_circuit, qlga_step_circuit_with, run_dj,
    shift_circuit, shift_circuit_with, verify_against_dense, verify_against_dense_with, Circuit, Direction, Gate,
    GateKind, StateVector, StepOptions, SwapMode, TruthTable,
};

fn all_options() -> Vec<StepOptions> {
    let mut v = Vec::new();
    for swaps in [SwapMode::Explicit, SwapMode::Relabeled] {
        for merge_transforms in [false, true] {
            v.push(StepOptions { swaps, merge_transforms });
        }
    }
    v
}

fn max_diff(a: &[num_complex::Complex64], b: &[num_complex::Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

#[test]
fn qft_equals_dft() {
    for n in 1..=6 {
        let m = circuit_matrix(&qft_circuit(n).unwrap()).unwrap();
        assert!(max_diff(m.entries(), &dft_matrix(1 << n)) <= 1e-10, "n={n}");
    }
}

#[test]
fn inverse_qft_is_conjugate_dft() {
    for n in 1..=5 {
        let m = circuit_matrix(&inverse_qft_circuit(n).unwrap()).unwrap();
        let dim = 1 << n;
        let f = dft_matrix(dim);
        for r in 0..dim {
            for c in 0..dim {
                assert!((m.entry(r, c) - f[c * dim + r].conj()).norm() <= 1e-10);
            }
        }
    }
}

#[test]
fn phase_diag_matches_powers_of_omega() {
    for n in 1..=5 {
        let dim = 1usize << n;
        for k in [-3i64, -2, -1, 0, 1, 2, 5] {
            let m = circuit_matrix(&phase_diag_circuit(n, k).unwrap()).unwrap();
            for x in 0..dim {
                let turns = (k * x as i64).rem_euclid(dim as i64) as f64 / dim as f64;
                let expect = num_complex::Complex64::from_polar(1.0, std::f64::consts::TAU * turns);
                assert!((m.entry(x, x) - expect).norm() <= 1e-10);
            }
        }
    }
}

#[test]
fn shifts_are_cyclic_permutations() {
    for n in 1..=6 {
        let dim = 1usize << n;
        for swaps in [SwapMode::Explicit, SwapMode::Relabeled] {
            for (dir, delta) in [(Direction::Left, dim - 1), (Direction::Right, 1)] {
                let m = circuit_matrix(&shift_circuit_with(n, dir, swaps).unwrap()).unwrap();
                for x in 0..dim {
                    for y in 0..dim {
                        let expect = if y == (x + delta) % dim { 1.0 } else { 0.0 };
                        assert!((m.entry(y, x) - expect).norm() <= 1e-10, "n={n} {dir:?} {swaps:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn two_qubit_left_shift_wraps_zero_to_three() {
    let mut v = StateVector::basis(2, 0);
    v.apply_circuit(&shift_circuit(2, Direction::Left).unwrap()).unwrap();
    assert!((v.amplitudes()[3].norm() - 1.0).abs() <= 1e-12);
}

#[test]
fn left_then_right_is_identity() {
    for n in 1..=6 {
        let mut c = shift_circuit(n, Direction::Left).unwrap();
        c.append(&shift_circuit(n, Direction::Right).unwrap()).unwrap();
        let m = circuit_matrix(&c).unwrap();
        let dim = 1 << n;
        for r in 0..dim {
            for col in 0..dim {
                let expect = if r == col { 1.0 } else { 0.0 };
                assert!((m.entry(r, col) - expect).norm() <= 1e-10);
            }
        }
        let mut inv = shift_circuit(n, Direction::Left).unwrap();
        inv.append(&shift_circuit(n, Direction::Left).unwrap().inverse()).unwrap();
        assert!(circuit_matrix(&inv).unwrap().max_abs_diff(&circuit_matrix(&Circuit::new(n)).unwrap()).unwrap() <= 1e-10);
    }
}

#[test]
fn step_circuit_matches_update_rule_for_every_option() {
    for n in 1..=5 {
        let dim = 2usize << n;
        for s in [0.0, FRAC_PI_8, FRAC_PI_4, 1.0] {
            let oracle = oracle_step_matrix(1 << n, s);
            for options in all_options() {
                let m = circuit_matrix(&qlga_step_circuit_with(n, s, options).unwrap()).unwrap();
                let mut err: f64 = 0.0;
                for r in 0..dim {
                    for c in 0..dim {
                        let want = oracle[r * dim + c];
                        let got = m.entry(lattice_to_circuit_index(r, n), lattice_to_circuit_index(c, n));
                        err = err.max((want - got).norm());
                    }
                }
                assert!(err <= 1e-10, "n={n} s={s} {options:?}: {err}");
                assert!(verify_against_dense_with(n, s, options).unwrap() <= 1e-10);
            }
        }
    }
    assert!(verify_against_dense(6, 0.3).unwrap() <= 1e-10);
}

#[test]
fn index_maps_are_inverse() {
    for n in 1..=8 {
        for i in 0..(2usize << n) {
            assert_eq!(circuit_to_lattice_index(lattice_to_circuit_index(i, n), n), i);
        }
    }
}

#[test]
fn step_gate_count_is_exact_quadratic() {
    for n in 1..=14 {
        let r = gate_count(&qlga_step_circuit(n, 0.5).unwrap());
        assert_eq!(r.total, 2 * n * n + 4 * n + 1, "n={n}");
        assert_eq!(r.get("H"), 4 * n);
        assert_eq!(r.get("PHASE"), n);
        assert_eq!(r.get("C-PHASE"), 2 * n * (n - 1) + n);
        assert_eq!(r.get("SCATTER"), 1);
        assert_eq!(r.get("SWAP"), 0);
    }
}

#[test]
fn explicit_swaps_add_four_transforms_worth() {
    for n in 1..=12 {
        let explicit = gate_count(&qlga_step_circuit_with(n, 0.5, StepOptions { swaps: SwapMode::Explicit, merge_transforms: false }).unwrap());
        assert_eq!(explicit.get("SWAP"), 4 * (n / 2));
        assert_eq!(explicit.total, 2 * n * n + 4 * n + 1 + 4 * (n / 2));
        assert_eq!(explicit.swap_cnot_equivalent, 12 * (n / 2));
    }
}

#[test]
fn one_qubit_step_by_hand() {
    // N = 2: left shift = H·P(π)·H, controlled double shift has two H's
    // around a controlled P(0) (ω^{-2} = 1), then scattering.
    let c = qlga_step_circuit(1, 0.25).unwrap();
    let expect = vec![
        Gate::h(0),
        Gate::phase(0, std::f64::consts::PI),
        Gate::h(0),
        Gate::h(0),
        Gate::phase(0, 0.0).controlled_by(1),
        Gate::h(0),
        Gate::scatter(1, 0.25),
    ];
    assert_eq!(c.gates(), expect.as_slice());
    assert_eq!(gate_count(&c).total, 7);
}

#[test]
fn pretty_print_golden_two_qubits() {
    let text = qlga_step_circuit(2, FRAC_PI_4).unwrap().to_string();
    // Left shift with reversed labels, controlled F·D^{-2}·F† (D^{-2} has
    // phases π and 0), then scattering on the velocity qubit.
    let golden = include_str!("golden/qlga_step_n2.txt");
    assert_eq!(text, golden);
}

#[test]
fn dj_is_exact_with_one_oracle_call() {
    for f in TruthTable::ALL {
        let out = run_dj(f).unwrap();
        assert_eq!(out.output == 1, f.eval(false) ^ f.eval(true));
        assert!((out.probability - 1.0).abs() <= 1e-12);
        let oracle_calls = dj_circuit(f).gates().iter().filter(|g| matches!(g.kind, GateKind::FCnot(_))).count();
        assert_eq!(oracle_calls, 1);
    }
    assert_eq!(classical_one_query_bound(), 0.5);
}

#[test]
fn dj_sampling_is_seeded() {
    let mut v = StateVector::zero(2);
    v.apply_circuit(&dj_circuit(TruthTable::new(true, false))).unwrap();
    let a = v.sample_qubit(0, 64, 9);
    assert_eq!(a, v.sample_qubit(0, 64, 9));
    assert!(a.iter().all(|&b| b));
}

#[test]
fn fcnot_truth_table_action() {
    for f in TruthTable::ALL {
        for x in 0..2usize {
            for b in 0..2usize {
                let mut v = StateVector::basis(2, x | (b << 1));
                v.apply_gate(&Gate::fcnot(f, 0, 1)).unwrap();
                let out_b = b ^ usize::from(f.eval(x == 1));
                assert!((v.amplitudes()[x | (out_b << 1)].norm() - 1.0).abs() < 1e-15);
            }
        }
    }
}

#[test]
fn gate_validation() {
    let mut c = Circuit::new(2);
    assert!(c.push(Gate::h(2)).is_err());
    assert!(c.push(Gate::swap(1, 1)).is_err());
    assert!(c.push(Gate::x(0).controlled_by(0)).is_err());
    assert!(c.push(Gate::new(GateKind::H, vec![0, 1])).is_err());
    assert!(c.is_empty());
}

fn families() -> Vec<(&'static str, Circuit)> {
    let mut v = Vec::new();
    for n in 1..=5 {
        v.push(("qft", qft_circuit(n).unwrap()));
        v.push(("iqft", inverse_qft_circuit(n).unwrap()));
        v.push(("diag", phase_diag_circuit(n, 3).unwrap()));
        v.push(("left", shift_circuit(n, Direction::Left).unwrap()));
        v.push(("right", shift_circuit(n, Direction::Right).unwrap()));
        for o in all_options() {
            v.push(("step", qlga_step_circuit_with(n, 0.7, o).unwrap()));
        }
    }
    v.push(("dj", dj_circuit(TruthTable::new(false, true))));
    v
}

#[test]
fn every_family_preserves_norm() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for (name, c) in families() {
        let dim = 1usize << c.width();
        for _ in 0..100 {
            let raw: Vec<(f64, f64)> = (0..dim).map(|_| (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
            let mut v = StateVector::from_amplitudes(c.width(), common::normalize(raw)).unwrap();
            v.apply_circuit(&c).unwrap();
            assert!((v.norm_sqr() - 1.0).abs() <= 1e-10, "{name}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn step_circuit_acts_like_lattice_step(
        (n, amps) in (1usize..=5).prop_flat_map(|n| (Just(n), unit_vector(2 << n))),
        s in -3.2f64..3.2,
    ) {
        let dim = 2usize << n;
        let lattice_out = mat_vec(&oracle_step_matrix(1 << n, s), &amps);
        let mut circuit_in = vec![num_complex::Complex64::new(0.0, 0.0); dim];
        for (i, a) in amps.iter().enumerate() {
            circuit_in[lattice_to_circuit_index(i, n)] = *a;
        }
        let mut v = StateVector::from_amplitudes(n + 1, circuit_in).unwrap();
        v.apply_circuit(&qlga_step_circuit(n, s).unwrap()).unwrap();
        for (i, want) in lattice_out.iter().enumerate() {
            prop_assert!((v.amplitudes()[lattice_to_circuit_index(i, n)] - want).norm() <= 1e-10);
        }
    }

    #[test]
    fn inverse_circuit_undoes_circuit(
        (n, amps) in (1usize..=4).prop_flat_map(|n| (Just(n), unit_vector(2 << n))),
        s in -3.2f64..3.2,
    ) {
        let c = qlga_step_circuit(n, s).unwrap();
        let mut v = StateVector::from_amplitudes(n + 1, amps.clone()).unwrap();
        v.apply_circuit(&c).unwrap();
        v.apply_circuit(&c.inverse()).unwrap();
        prop_assert!(max_diff(v.amplitudes(), &amps) <= 1e-10);
    }
}
