use std::ffi::c_char;
use std::ptr;

use qlga_ffi::*;

fn last_error() -> String {
    unsafe { borrow_str(qlga_last_error_message()) }.unwrap_or_default().to_owned()
}

fn new_state(n: usize, kind: QlgaInitKind, x0: usize, v: i32) -> *mut QlgaState {
    let mut h = ptr::null_mut();
    let st = unsafe { qlga_state_new(n, kind, x0, v, 2.0, 0.0, &mut h) };
    assert_eq!(st, QlgaStatus::Ok, "{}", last_error());
    assert!(!h.is_null());
    h
}

fn take_string(p: *mut c_char) -> String {
    let s = unsafe { borrow_str(p) }.unwrap().to_owned();
    unsafe { qlga_string_free(p) };
    s
}

#[test]
fn version_matches_crate() {
    assert_eq!(unsafe { borrow_str(qlga_version()) }, Some(env!("CARGO_PKG_VERSION")));
}

#[test]
fn state_round_trip() {
    let h = new_state(8, QlgaInitKind::Symmetric, 3, 0);
    let mut n = 0;
    assert_eq!(unsafe { qlga_state_sites(h, &mut n) }, QlgaStatus::Ok);
    assert_eq!(n, 8);

    assert_eq!(unsafe { qlga_state_evolve(h, std::f64::consts::FRAC_PI_4, 37) }, QlgaStatus::Ok);
    let mut norm = 0.0;
    unsafe { qlga_state_norm_sqr(h, &mut norm) };
    assert!((norm - 1.0).abs() < 1e-12);

    let mut p = [0.0; 8];
    assert_eq!(unsafe { qlga_state_position_distribution(h, p.as_mut_ptr(), p.len()) }, QlgaStatus::Ok);
    assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-12);

    let mut amps = [0.0; 32];
    assert_eq!(unsafe { qlga_state_amplitudes(h, amps.as_mut_ptr(), amps.len()) }, QlgaStatus::Ok);
    for x in 0..8 {
        let site: f64 = amps[4 * x..4 * x + 4].iter().map(|a| a * a).sum();
        assert!((site - p[x]).abs() < 1e-14);
    }

    let mut copy = ptr::null_mut();
    assert_eq!(unsafe { qlga_state_from_amplitudes(8, amps.as_ptr(), &mut copy) }, QlgaStatus::Ok);
    let mut q = [0.0; 8];
    unsafe { qlga_state_position_distribution(copy, q.as_mut_ptr(), q.len()) };
    assert_eq!(p, q);

    unsafe {
        qlga_state_free(copy);
        qlga_state_free(h);
        qlga_state_free(ptr::null_mut());
    }
}

#[test]
fn no_scattering_translates() {
    let h = new_state(11, QlgaInitKind::Delta, 2, -1);
    unsafe { qlga_state_evolve(h, 0.0, 5) };
    let mut p = [0.0; 11];
    unsafe { qlga_state_position_distribution(h, p.as_mut_ptr(), 11) };
    assert_eq!(p[8], 1.0);
    unsafe { qlga_state_free(h) };
}

#[test]
fn clone_is_independent() {
    let h = new_state(6, QlgaInitKind::Delta, 0, 1);
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { qlga_state_clone(h, &mut c) }, QlgaStatus::Ok);
    unsafe { qlga_state_evolve(c, 0.0, 1) };
    let (mut a, mut b) = ([0.0; 6], [0.0; 6]);
    unsafe {
        qlga_state_position_distribution(h, a.as_mut_ptr(), 6);
        qlga_state_position_distribution(c, b.as_mut_ptr(), 6);
    }
    assert_eq!(a[0], 1.0);
    assert_eq!(b[1], 1.0);
    unsafe {
        qlga_state_free(h);
        qlga_state_free(c);
    }
}

#[test]
fn errors_set_status_and_message() {
    let mut h = ptr::null_mut();
    let st = unsafe { qlga_state_new(0, QlgaInitKind::Uniform, 0, 1, 1.0, 0.0, &mut h) };
    assert_eq!(st, QlgaStatus::InvalidArgument);
    assert!(h.is_null());
    assert!(!last_error().is_empty());

    let st = unsafe { qlga_state_new(4, QlgaInitKind::Delta, 9, 1, 1.0, 0.0, &mut h) };
    assert_eq!(st, QlgaStatus::OutOfRange);

    let st = unsafe { qlga_state_new(4, QlgaInitKind::Delta, 0, 0, 1.0, 0.0, &mut h) };
    assert_eq!(st, QlgaStatus::InvalidArgument);
    assert!(last_error().contains("velocity"));

    let st = unsafe { qlga_state_new(4, QlgaInitKind::Uniform, 0, 1, 1.0, 0.0, ptr::null_mut()) };
    assert_eq!(st, QlgaStatus::NullPointer);

    let bad = [1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0];
    assert_eq!(unsafe { qlga_state_from_amplitudes(2, bad.as_ptr(), &mut h) }, QlgaStatus::NotNormalized);

    let ok = new_state(4, QlgaInitKind::Uniform, 0, 1);
    assert!(qlga_last_error_message().is_null());
    let mut short = [0.0; 3];
    assert_eq!(unsafe { qlga_state_position_distribution(ok, short.as_mut_ptr(), 3) }, QlgaStatus::BufferTooSmall);
    assert_eq!(unsafe { qlga_state_evolve(ok, f64::NAN, 1) }, QlgaStatus::InvalidArgument);
    assert_eq!(unsafe { qlga_state_evolve(ptr::null_mut(), 0.1, 1) }, QlgaStatus::NullPointer);
    unsafe { qlga_state_free(ok) };
}

#[test]
fn tv_distance() {
    let p = [0.5, 0.5, 0.0];
    let q = [0.0, 0.5, 0.5];
    let mut tv = -1.0;
    assert_eq!(unsafe { qlga_tv_distance(p.as_ptr(), q.as_ptr(), 3, &mut tv) }, QlgaStatus::Ok);
    assert!((tv - 0.5).abs() < 1e-15);
    let neg = [1.5, -0.5, 0.0];
    assert_eq!(unsafe { qlga_tv_distance(neg.as_ptr(), q.as_ptr(), 3, &mut tv) }, QlgaStatus::InvalidArgument);
}

#[test]
fn mixing_times_agree_with_core() {
    let eps = 0.05;
    let h = new_state(17, QlgaInitKind::Symmetric, 0, 0);
    let mut tq = 0;
    assert_eq!(unsafe { qlga_quantum_mixing_time(h, std::f64::consts::FRAC_PI_4, eps, 5000, &mut tq) }, QlgaStatus::Ok);
    let core = qlga::quantum_mixing_time(
        qlga::LatticeSize::new(17).unwrap(),
        qlga::ScatterAngle(std::f64::consts::FRAC_PI_4),
        qlga::InitialState::Symmetric { x0: 0 },
        eps,
        5000,
    )
    .unwrap();
    assert_eq!(Some(tq), core.t_mix);

    let mut tc = 0;
    assert_eq!(unsafe { qlga_classical_mixing_time(17, 0, eps, 100_000, &mut tc) }, QlgaStatus::Ok);
    assert!(tc > tq);

    // Unreachable within the horizon.
    assert_eq!(unsafe { qlga_classical_mixing_time(101, 0, 0.01, 3, &mut tc) }, QlgaStatus::Ok);
    assert_eq!(tc, 0);
    assert_eq!(unsafe { qlga_classical_mixing_time(17, 0, 0.0, 10, &mut tc) }, QlgaStatus::InvalidArgument);
    assert_eq!(unsafe { qlga_quantum_mixing_time(h, 0.1, 0.1, 0, &mut tq) }, QlgaStatus::InvalidArgument);
    unsafe { qlga_state_free(h) };
}

#[test]
fn circuit_counts_and_text() {
    for n in 1..=6usize {
        let mut c = ptr::null_mut();
        assert_eq!(unsafe { qlga_circuit_step_new(n, 0.3, false, false, &mut c) }, QlgaStatus::Ok);
        let (mut w, mut g) = (0, 0);
        unsafe { qlga_circuit_info(c, &mut w, &mut g) };
        assert_eq!(w, n + 1);
        assert_eq!(g, 2 * n * n + 4 * n + 1);

        let mut json = ptr::null_mut();
        assert_eq!(unsafe { qlga_circuit_gate_count_json(c, &mut json) }, QlgaStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(v["total"], g);

        let mut text = ptr::null_mut();
        assert_eq!(unsafe { qlga_circuit_to_string(c, &mut text) }, QlgaStatus::Ok);
        assert_eq!(take_string(text).lines().count(), g);
        unsafe { qlga_circuit_free(c) };
    }
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { qlga_circuit_step_new(0, 0.3, false, false, &mut c) }, QlgaStatus::InvalidArgument);
}

#[test]
fn shift_circuit_moves_basis_states() {
    let n = 3;
    for (dir, delta) in [(-1, 7usize), (1, 1)] {
        let mut c = ptr::null_mut();
        assert_eq!(unsafe { qlga_circuit_shift_new(n, dir, &mut c) }, QlgaStatus::Ok);
        for x in 0..8usize {
            let mut amps = [0.0; 16];
            amps[2 * x] = 1.0;
            assert_eq!(unsafe { qlga_circuit_apply(c, amps.as_mut_ptr(), amps.len()) }, QlgaStatus::Ok);
            let y = (x + delta) % 8;
            let mag = amps[2 * y].hypot(amps[2 * y + 1]);
            assert!((mag - 1.0).abs() < 1e-12, "dir {dir} x {x}");
        }
        let mut wrong = [0.0; 8];
        assert_eq!(unsafe { qlga_circuit_apply(c, wrong.as_mut_ptr(), 8) }, QlgaStatus::BufferTooSmall);
        unsafe { qlga_circuit_free(c) };
    }
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { qlga_circuit_shift_new(n, 0, &mut c) }, QlgaStatus::InvalidArgument);
}

#[test]
fn qft_of_zero_is_flat() {
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { qlga_circuit_qft_new(4, &mut c) }, QlgaStatus::Ok);
    let mut amps = [0.0; 32];
    amps[0] = 1.0;
    unsafe { qlga_circuit_apply(c, amps.as_mut_ptr(), 32) };
    for k in 0..16 {
        assert!((amps[2 * k] - 0.25).abs() < 1e-12);
        assert!(amps[2 * k + 1].abs() < 1e-12);
    }
    unsafe { qlga_circuit_free(c) };
}

#[test]
fn verify_and_dj() {
    let mut err = 1.0;
    assert_eq!(unsafe { qlga_verify_step(4, 0.9, &mut err) }, QlgaStatus::Ok);
    assert!(err < 1e-10);
    assert_eq!(unsafe { qlga_verify_step(7, 0.9, &mut err) }, QlgaStatus::OutOfRange);

    for (f0, f1) in [(false, false), (false, true), (true, false), (true, true)] {
        let (mut bit, mut prob) = (9u8, 0.0);
        assert_eq!(unsafe { qlga_dj_run(f0, f1, &mut bit, &mut prob) }, QlgaStatus::Ok);
        assert_eq!(bit, u8::from(f0 ^ f1));
        assert!((prob - 1.0).abs() < 1e-12);
    }
    assert_eq!(qlga_classical_one_query_bound(), 0.5);
}

#[test]
fn header_is_current() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/qlga.h")).unwrap();
    for sym in ["qlga_state_new", "qlga_circuit_apply", "QLGA_STATUS_BUFFER_TOO_SMALL", "typedef struct QlgaState QlgaState"] {
        assert!(header.contains(sym), "{sym}");
    }
    assert!(!header.contains("borrow_str"));
}
