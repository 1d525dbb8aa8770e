//! C ABI over the `qlga` crate.
//!
//! Every fallible function returns a [`QlgaStatus`] and writes results
//! through out-pointers. On failure a message is kept per thread and can be
//! read with [`qlga_last_error_message`]. Handles are opaque and must be
//! released with the matching `_free` function. Complex vectors cross the
//! boundary interleaved as `re, im, re, im, …`; lattice amplitudes use the
//! site-major order `(x, α=−1), (x, α=+1)` for `x = 0..N`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_complex::Complex64;
use qlga::circuit::{
    classical_one_query_bound, gate_count, qft_circuit, qlga_step_circuit_with, run_dj, shift_circuit, Circuit,
    Direction, StateVector, StepOptions, SwapMode, TruthTable,
};
use qlga::mixing::{classical_mixing_time, first_crossing, QuantumWalk};
use qlga::{Distribution, Error, InitialState, LatticeSize, ScatterAngle, Velocity};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QlgaStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    OutOfRange = 3,
    BufferTooSmall = 4,
    NotNormalized = 5,
    Panic = 6,
}

/// Starting condition for [`qlga_state_new`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QlgaInitKind {
    Delta = 0,
    Symmetric = 1,
    Gaussian = 2,
    Uniform = 3,
}

/// Amplitude field of a single particle on a periodic lattice.
pub struct QlgaState {
    inner: qlga::QlgaState,
}

/// A gate list over a fixed number of qubits.
pub struct QlgaCircuit {
    inner: Circuit,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(err: &Error) -> QlgaStatus {
    match err {
        Error::SiteOutOfRange { .. } | Error::QubitOutOfRange { .. } | Error::VerifyRange(_) => QlgaStatus::OutOfRange,
        Error::NotNormalized(_) => QlgaStatus::NotNormalized,
        _ => QlgaStatus::InvalidArgument,
    }
}

struct Failure(QlgaStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(QlgaStatus::NullPointer, format!("{what} is null"))
}

fn too_small(what: &str, need: usize, got: usize) -> Failure {
    Failure(QlgaStatus::BufferTooSmall, format!("{what} needs {need} elements, got {got}"))
}

/// Runs `body`, turning errors and panics into a status and a stored message.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> QlgaStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            clear_error();
            QlgaStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            QlgaStatus::Panic
        }
    }
}

unsafe fn out<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| null(what))
}

unsafe fn slice<'a, T>(p: *const T, len: usize, what: &str) -> Result<&'a [T], Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn slice_mut<'a, T>(p: *mut T, len: usize, what: &str) -> Result<&'a mut [T], Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts_mut(p, len))
}

fn velocity(sign: i32) -> Result<Velocity, Failure> {
    match sign {
        1 => Ok(Velocity::Right),
        -1 => Ok(Velocity::Left),
        _ => Err(Failure(QlgaStatus::InvalidArgument, format!("velocity must be +1 or -1, got {sign}"))),
    }
}

fn interleave(amps: &[Complex64], dst: &mut [f64]) {
    for (pair, a) in dst.chunks_exact_mut(2).zip(amps) {
        pair[0] = a.re;
        pair[1] = a.im;
    }
}

fn deinterleave(src: &[f64]) -> Vec<Complex64> {
    src.chunks_exact(2).map(|p| Complex64::new(p[0], p[1])).collect()
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn qlga_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message describing the last failed call on this thread, or NULL after a
/// successful call. The pointer stays valid until the next call into the
/// library from the same thread.
#[no_mangle]
pub extern "C" fn qlga_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from a `qlga_*` function documented as returning an owned
/// string, and must not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn qlga_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Prepares a normalized state on `n` sites.
///
/// `x0` is ignored for `Uniform`; `velocity` (+1 or −1) is read only for
/// `Delta`; `width` and `momentum` only for `Gaussian`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn qlga_state_new(
    n: usize,
    kind: QlgaInitKind,
    x0: usize,
    velocity_sign: i32,
    width: f64,
    momentum: f64,
    out_state: *mut *mut QlgaState,
) -> QlgaStatus {
    guard(|| {
        let slot = out(out_state, "out_state")?;
        let init = match kind {
            QlgaInitKind::Delta => InitialState::Delta { x0, velocity: velocity(velocity_sign)? },
            QlgaInitKind::Symmetric => InitialState::Symmetric { x0 },
            QlgaInitKind::Gaussian => InitialState::Gaussian { x0, width, momentum },
            QlgaInitKind::Uniform => InitialState::Uniform,
        };
        let inner = qlga::QlgaState::prepare(LatticeSize::new(n)?, init)?;
        *slot = Box::into_raw(Box::new(QlgaState { inner }));
        Ok(())
    })
}

/// Builds a state from `2·n` interleaved complex amplitudes (`4·n` doubles).
/// The vector must have unit norm within 1e-10.
///
/// # Safety
/// `amplitudes` must point to `4·n` readable doubles and `out_state` to
/// writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn qlga_state_from_amplitudes(
    n: usize,
    amplitudes: *const f64,
    out_state: *mut *mut QlgaState,
) -> QlgaStatus {
    guard(|| {
        let slot = out(out_state, "out_state")?;
        let size = LatticeSize::new(n)?;
        let raw = slice(amplitudes, 2 * size.dim(), "amplitudes")?;
        let inner = qlga::QlgaState::from_amplitudes(size, deinterleave(raw))?;
        *slot = Box::into_raw(Box::new(QlgaState { inner }));
        Ok(())
    })
}

/// Deep copy of a state.
///
/// # Safety
/// `state` must be a live handle and `out_state` writable.
#[no_mangle]
pub unsafe extern "C" fn qlga_state_clone(state: *const QlgaState, out_state: *mut *mut QlgaState) -> QlgaStatus {
    guard(|| {
        let s = state.as_ref().ok_or_else(|| null("state"))?;
        let slot = out(out_state, "out_state")?;
        *slot = Box::into_raw(Box::new(QlgaState { inner: s.inner.clone() }));
        Ok(())
    })
}

/// Releases a state. NULL is ignored.
///
/// # Safety
/// `state` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn qlga_state_free(state: *mut QlgaState) {
    if !state.is_null() {
        drop(Box::from_raw(state));
    }
}

/// Number of lattice sites.
///
/// # Safety
/// `state` must be a live handle and `out_n` writable.
#[no_mangle]
pub unsafe extern "C" fn qlga_state_sites(state: *const QlgaState, out_n: *mut usize) -> QlgaStatus {
    guard(|| {
        let s = state.as_ref().ok_or_else(|| null("state"))?;
        *out(out_n, "out_n")? = s.inner.size().get();
        Ok(())
    })
}

/// Advances the state by `steps` timesteps with scattering angle `s`.
///
/// # Safety
/// `state` must be a live handle not used concurrently elsewhere.
#[no_mangle]
pub unsafe extern "C" fn qlga_state_evolve(state: *mut QlgaState, s: f64, steps: u64) -> QlgaStatus {
    guard(|| {
        let st = state.as_mut().ok_or_else(|| null("state"))?;
        if !s.is_finite() {
            return Err(Failure(QlgaStatus::InvalidArgument, "scattering angle must be finite".into()));
        }
        let m = ScatterAngle(s).matrix();
        for _ in 0..steps {
            st.inner.step_mut(m);
        }
        Ok(())
    })
}

/// Squared norm of the amplitude field.
///
/// # Safety
/// `state` must be a live handle and `out_norm` writable.
#[no_mangle]
pub unsafe extern "C" fn qlga_state_norm_sqr(state: *const QlgaState, out_norm: *mut f64) -> QlgaStatus {
    guard(|| {
        let s = state.as_ref().ok_or_else(|| null("state"))?;
        *out(out_norm, "out_norm")? = s.inner.norm_sqr();
        Ok(())
    })
}

/// Writes `P(x)` for `x = 0..N` into `out_p`, which must hold at least `N` doubles.
///
/// # Safety
/// `out_p` must point to `len` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn qlga_state_position_distribution(
    state: *const QlgaState,
    out_p: *mut f64,
    len: usize,
) -> QlgaStatus {
    guard(|| {
        let s = state.as_ref().ok_or_else(|| null("state"))?;
        let n = s.inner.size().get();
        if len < n {
            return Err(too_small("out_p", n, len));
        }
        let dst = slice_mut(out_p, len, "out_p")?;
        dst[..n].copy_from_slice(s.inner.position_distribution().as_slice());
        Ok(())
    })
}

/// Writes the `2·N` amplitudes interleaved into `out_amplitudes` (`4·N` doubles).
///
/// # Safety
/// `out_amplitudes` must point to `len` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn qlga_state_amplitudes(
    state: *const QlgaState,
    out_amplitudes: *mut f64,
    len: usize,
) -> QlgaStatus {
    guard(|| {
        let s = state.as_ref().ok_or_else(|| null("state"))?;
        let need = 2 * s.inner.size().dim();
        if len < need {
            return Err(too_small("out_amplitudes", need, len));
        }
        interleave(s.inner.amplitudes(), slice_mut(out_amplitudes, len, "out_amplitudes")?);
        Ok(())
    })
}

/// Total variation distance between two distributions of length `len`.
///
/// # Safety
/// `p` and `q` must each point to `len` readable doubles.
#[no_mangle]
pub unsafe extern "C" fn qlga_tv_distance(p: *const f64, q: *const f64, len: usize, out_tv: *mut f64) -> QlgaStatus {
    guard(|| {
        let p = Distribution::new(slice(p, len, "p")?.to_vec())?;
        let q = Distribution::new(slice(q, len, "q")?.to_vec())?;
        *out(out_tv, "out_tv")? = p.tv_distance(&q)?;
        Ok(())
    })
}

fn check_search(epsilon: f64, t_max: u64) -> Result<(), Failure> {
    if !(epsilon > 0.0 && epsilon <= 1.0) {
        return Err(Error::InvalidEpsilon(epsilon).into());
    }
    if t_max == 0 {
        return Err(Error::ZeroHorizon.into());
    }
    Ok(())
}

/// Mixing time of the time-averaged distribution of `state` under angle `s`.
/// Writes 0 when no horizon up to `t_max` reaches `epsilon`. The state is
/// not modified.
///
/// # Safety
/// `state` must be a live handle and `out_t_mix` writable.
#[no_mangle]
pub unsafe extern "C" fn qlga_quantum_mixing_time(
    state: *const QlgaState,
    s: f64,
    epsilon: f64,
    t_max: u64,
    out_t_mix: *mut u64,
) -> QlgaStatus {
    guard(|| {
        let st = state.as_ref().ok_or_else(|| null("state"))?;
        let slot = out(out_t_mix, "out_t_mix")?;
        check_search(epsilon, t_max)?;
        let walk = QuantumWalk::new(st.inner.clone(), ScatterAngle(s));
        *slot = first_crossing(walk, epsilon, t_max).unwrap_or(0);
        Ok(())
    })
}

/// Mixing time of the classical ±1 walk started at `x0` on `n` sites.
/// Writes 0 when no horizon up to `t_max` reaches `epsilon`.
///
/// # Safety
/// `out_t_mix` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qlga_classical_mixing_time(
    n: usize,
    x0: usize,
    epsilon: f64,
    t_max: u64,
    out_t_mix: *mut u64,
) -> QlgaStatus {
    guard(|| {
        let slot = out(out_t_mix, "out_t_mix")?;
        let report = classical_mixing_time(LatticeSize::new(n)?, x0, epsilon, t_max)?;
        *slot = report.t_mix.unwrap_or(0);
        Ok(())
    })
}

fn boxed_circuit(slot: &mut *mut QlgaCircuit, c: Circuit) {
    *slot = Box::into_raw(Box::new(QlgaCircuit { inner: c }));
}

/// Compiles one timestep on `qubits` position qubits plus a velocity qubit.
/// `explicit_swaps` keeps the bit-reversal swaps instead of relabeling;
/// `merge_transforms` cancels the adjacent transform pair.
///
/// # Safety
/// `out_circuit` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qlga_circuit_step_new(
    qubits: usize,
    s: f64,
    explicit_swaps: bool,
    merge_transforms: bool,
    out_circuit: *mut *mut QlgaCircuit,
) -> QlgaStatus {
    guard(|| {
        let slot = out(out_circuit, "out_circuit")?;
        let swaps = if explicit_swaps { SwapMode::Explicit } else { SwapMode::Relabeled };
        boxed_circuit(slot, qlga_step_circuit_with(qubits, s, StepOptions { swaps, merge_transforms })?);
        Ok(())
    })
}

/// Fourier transform on `qubits` qubits.
///
/// # Safety
/// `out_circuit` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qlga_circuit_qft_new(qubits: usize, out_circuit: *mut *mut QlgaCircuit) -> QlgaStatus {
    guard(|| {
        let slot = out(out_circuit, "out_circuit")?;
        boxed_circuit(slot, qft_circuit(qubits)?);
        Ok(())
    })
}

/// Cyclic shift by one site: `direction < 0` maps x to x−1, `direction > 0` to x+1.
///
/// # Safety
/// `out_circuit` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qlga_circuit_shift_new(
    qubits: usize,
    direction: i32,
    out_circuit: *mut *mut QlgaCircuit,
) -> QlgaStatus {
    guard(|| {
        let slot = out(out_circuit, "out_circuit")?;
        let dir = match direction.signum() {
            -1 => Direction::Left,
            1 => Direction::Right,
            _ => return Err(Failure(QlgaStatus::InvalidArgument, "direction must be nonzero".into())),
        };
        boxed_circuit(slot, shift_circuit(qubits, dir)?);
        Ok(())
    })
}

/// Releases a circuit. NULL is ignored.
///
/// # Safety
/// `circuit` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn qlga_circuit_free(circuit: *mut QlgaCircuit) {
    if !circuit.is_null() {
        drop(Box::from_raw(circuit));
    }
}

/// Qubit count and total gate count.
///
/// # Safety
/// `circuit` must be a live handle; either out-pointer may be NULL.
#[no_mangle]
pub unsafe extern "C" fn qlga_circuit_info(
    circuit: *const QlgaCircuit,
    out_width: *mut usize,
    out_gates: *mut usize,
) -> QlgaStatus {
    guard(|| {
        let c = circuit.as_ref().ok_or_else(|| null("circuit"))?;
        if let Some(w) = out_width.as_mut() {
            *w = c.inner.width();
        }
        if let Some(g) = out_gates.as_mut() {
            *g = c.inner.len();
        }
        Ok(())
    })
}

/// Gate-count breakdown as a JSON object. The string must be released with
/// [`qlga_string_free`].
///
/// # Safety
/// `circuit` must be a live handle and `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn qlga_circuit_gate_count_json(
    circuit: *const QlgaCircuit,
    out_json: *mut *mut c_char,
) -> QlgaStatus {
    guard(|| {
        let c = circuit.as_ref().ok_or_else(|| null("circuit"))?;
        let slot = out(out_json, "out_json")?;
        let text = serde_json::to_string(&gate_count(&c.inner)).expect("report serializes");
        *slot = CString::new(text).expect("JSON has no NUL").into_raw();
        Ok(())
    })
}

/// One gate per line, as printed by the command-line tool. The string must
/// be released with [`qlga_string_free`].
///
/// # Safety
/// `circuit` must be a live handle and `out_text` writable.
#[no_mangle]
pub unsafe extern "C" fn qlga_circuit_to_string(circuit: *const QlgaCircuit, out_text: *mut *mut c_char) -> QlgaStatus {
    guard(|| {
        let c = circuit.as_ref().ok_or_else(|| null("circuit"))?;
        let slot = out(out_text, "out_text")?;
        *slot = CString::new(c.inner.to_string()).expect("gate text has no NUL").into_raw();
        Ok(())
    })
}

/// Applies the circuit in place to `2^width` interleaved amplitudes
/// (`len` = `2^(width+1)` doubles), little-endian qubit order.
///
/// # Safety
/// `amplitudes` must point to `len` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn qlga_circuit_apply(circuit: *const QlgaCircuit, amplitudes: *mut f64, len: usize) -> QlgaStatus {
    guard(|| {
        let c = circuit.as_ref().ok_or_else(|| null("circuit"))?;
        let need = 2usize << c.inner.width();
        if len != need {
            return Err(Failure(QlgaStatus::BufferTooSmall, format!("amplitudes needs exactly {need} doubles, got {len}")));
        }
        let buf = slice_mut(amplitudes, len, "amplitudes")?;
        let mut v = StateVector::from_amplitudes(c.inner.width(), deinterleave(buf))?;
        v.apply_circuit(&c.inner)?;
        interleave(v.amplitudes(), buf);
        Ok(())
    })
}

/// Largest entrywise difference between the compiled timestep and the dense
/// lattice operator, for `1 ≤ qubits ≤ 6`.
///
/// # Safety
/// `out_error` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qlga_verify_step(qubits: usize, s: f64, out_error: *mut f64) -> QlgaStatus {
    guard(|| {
        let slot = out(out_error, "out_error")?;
        *slot = qlga::circuit::verify_against_dense(qubits, s)?;
        Ok(())
    })
}

/// Runs the one-query XOR circuit for `f = (f0, f1)`, writing the more
/// likely query-qubit outcome and its probability.
///
/// # Safety
/// Both out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn qlga_dj_run(
    f0: bool,
    f1: bool,
    out_bit: *mut u8,
    out_probability: *mut f64,
) -> QlgaStatus {
    guard(|| {
        let bit = out(out_bit, "out_bit")?;
        let prob = out(out_probability, "out_probability")?;
        let r = run_dj(TruthTable::new(f0, f1))?;
        *bit = r.output;
        *prob = r.probability;
        Ok(())
    })
}

/// Best success probability of a deterministic classical one-query strategy.
#[no_mangle]
pub extern "C" fn qlga_classical_one_query_bound() -> f64 {
    classical_one_query_bound()
}

/// Borrowed view of a library string, for Rust callers and tests.
///
/// # Safety
/// `s` must be NULL or a valid NUL-terminated string.
pub unsafe fn borrow_str<'a>(s: *const c_char) -> Option<&'a str> {
    if s.is_null() {
        None
    } else {
        CStr::from_ptr(s).to_str().ok()
    }
}
