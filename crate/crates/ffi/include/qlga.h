#ifndef QLGA_H
#define QLGA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Starting condition for [`qlga_state_new`].
 */
typedef enum {
  QLGA_INIT_KIND_DELTA = 0,
  QLGA_INIT_KIND_SYMMETRIC = 1,
  QLGA_INIT_KIND_GAUSSIAN = 2,
  QLGA_INIT_KIND_UNIFORM = 3,
} QlgaInitKind;

/**
 * Result code of every fallible call.
 */
typedef enum {
  QLGA_STATUS_OK = 0,
  QLGA_STATUS_NULL_POINTER = 1,
  QLGA_STATUS_INVALID_ARGUMENT = 2,
  QLGA_STATUS_OUT_OF_RANGE = 3,
  QLGA_STATUS_BUFFER_TOO_SMALL = 4,
  QLGA_STATUS_NOT_NORMALIZED = 5,
  QLGA_STATUS_PANIC = 6,
} QlgaStatus;

/**
 * A gate list over a fixed number of qubits.
 */
typedef struct QlgaCircuit QlgaCircuit;

/**
 * Amplitude field of a single particle on a periodic lattice.
 */
typedef struct QlgaState QlgaState;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *qlga_version(void);

/**
 * Message describing the last failed call on this thread, or NULL after a
 * successful call. The pointer stays valid until the next call into the
 * library from the same thread.
 */
const char *qlga_last_error_message(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from a `qlga_*` function documented as returning an owned
 * string, and must not be freed twice.
 */
void qlga_string_free(char *s);

/**
 * Prepares a normalized state on `n` sites.
 *
 * `x0` is ignored for `Uniform`; `velocity` (+1 or −1) is read only for
 * `Delta`; `width` and `momentum` only for `Gaussian`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
QlgaStatus qlga_state_new(size_t n,
                          QlgaInitKind kind,
                          size_t x0,
                          int32_t velocity_sign,
                          double width,
                          double momentum,
                          QlgaState **out_state);

/**
 * Builds a state from `2·n` interleaved complex amplitudes (`4·n` doubles).
 * The vector must have unit norm within 1e-10.
 *
 * # Safety
 * `amplitudes` must point to `4·n` readable doubles and `out_state` to
 * writable storage for one handle.
 */
QlgaStatus qlga_state_from_amplitudes(size_t n, const double *amplitudes, QlgaState **out_state);

/**
 * Deep copy of a state.
 *
 * # Safety
 * `state` must be a live handle and `out_state` writable.
 */
QlgaStatus qlga_state_clone(const QlgaState *state, QlgaState **out_state);

/**
 * Releases a state. NULL is ignored.
 *
 * # Safety
 * `state` must come from this library and not be used afterwards.
 */
void qlga_state_free(QlgaState *state);

/**
 * Number of lattice sites.
 *
 * # Safety
 * `state` must be a live handle and `out_n` writable.
 */
QlgaStatus qlga_state_sites(const QlgaState *state, size_t *out_n);

/**
 * Advances the state by `steps` timesteps with scattering angle `s`.
 *
 * # Safety
 * `state` must be a live handle not used concurrently elsewhere.
 */
QlgaStatus qlga_state_evolve(QlgaState *state, double s, uint64_t steps);

/**
 * Squared norm of the amplitude field.
 *
 * # Safety
 * `state` must be a live handle and `out_norm` writable.
 */
QlgaStatus qlga_state_norm_sqr(const QlgaState *state, double *out_norm);

/**
 * Writes `P(x)` for `x = 0..N` into `out_p`, which must hold at least `N` doubles.
 *
 * # Safety
 * `out_p` must point to `len` writable doubles.
 */
QlgaStatus qlga_state_position_distribution(const QlgaState *state, double *out_p, size_t len);

/**
 * Writes the `2·N` amplitudes interleaved into `out_amplitudes` (`4·N` doubles).
 *
 * # Safety
 * `out_amplitudes` must point to `len` writable doubles.
 */
QlgaStatus qlga_state_amplitudes(const QlgaState *state, double *out_amplitudes, size_t len);

/**
 * Total variation distance between two distributions of length `len`.
 *
 * # Safety
 * `p` and `q` must each point to `len` readable doubles.
 */
QlgaStatus qlga_tv_distance(const double *p, const double *q, size_t len, double *out_tv);

/**
 * Mixing time of the time-averaged distribution of `state` under angle `s`.
 * Writes 0 when no horizon up to `t_max` reaches `epsilon`. The state is
 * not modified.
 *
 * # Safety
 * `state` must be a live handle and `out_t_mix` writable.
 */
QlgaStatus qlga_quantum_mixing_time(const QlgaState *state,
                                    double s,
                                    double epsilon,
                                    uint64_t t_max,
                                    uint64_t *out_t_mix);

/**
 * Mixing time of the classical ±1 walk started at `x0` on `n` sites.
 * Writes 0 when no horizon up to `t_max` reaches `epsilon`.
 *
 * # Safety
 * `out_t_mix` must be writable.
 */
QlgaStatus qlga_classical_mixing_time(size_t n,
                                      size_t x0,
                                      double epsilon,
                                      uint64_t t_max,
                                      uint64_t *out_t_mix);

/**
 * Compiles one timestep on `qubits` position qubits plus a velocity qubit.
 * `explicit_swaps` keeps the bit-reversal swaps instead of relabeling;
 * `merge_transforms` cancels the adjacent transform pair.
 *
 * # Safety
 * `out_circuit` must be writable.
 */
QlgaStatus qlga_circuit_step_new(size_t qubits,
                                 double s,
                                 bool explicit_swaps,
                                 bool merge_transforms,
                                 QlgaCircuit **out_circuit);

/**
 * Fourier transform on `qubits` qubits.
 *
 * # Safety
 * `out_circuit` must be writable.
 */
QlgaStatus qlga_circuit_qft_new(size_t qubits, QlgaCircuit **out_circuit);

/**
 * Cyclic shift by one site: `direction < 0` maps x to x−1, `direction > 0` to x+1.
 *
 * # Safety
 * `out_circuit` must be writable.
 */
QlgaStatus qlga_circuit_shift_new(size_t qubits, int32_t direction, QlgaCircuit **out_circuit);

/**
 * Releases a circuit. NULL is ignored.
 *
 * # Safety
 * `circuit` must come from this library and not be used afterwards.
 */
void qlga_circuit_free(QlgaCircuit *circuit);

/**
 * Qubit count and total gate count.
 *
 * # Safety
 * `circuit` must be a live handle; either out-pointer may be NULL.
 */
QlgaStatus qlga_circuit_info(const QlgaCircuit *circuit, size_t *out_width, size_t *out_gates);

/**
 * Gate-count breakdown as a JSON object. The string must be released with
 * [`qlga_string_free`].
 *
 * # Safety
 * `circuit` must be a live handle and `out_json` writable.
 */
QlgaStatus qlga_circuit_gate_count_json(const QlgaCircuit *circuit, char **out_json);

/**
 * One gate per line, as printed by the command-line tool. The string must
 * be released with [`qlga_string_free`].
 *
 * # Safety
 * `circuit` must be a live handle and `out_text` writable.
 */
QlgaStatus qlga_circuit_to_string(const QlgaCircuit *circuit, char **out_text);

/**
 * Applies the circuit in place to `2^width` interleaved amplitudes
 * (`len` = `2^(width+1)` doubles), little-endian qubit order.
 *
 * # Safety
 * `amplitudes` must point to `len` writable doubles.
 */
QlgaStatus qlga_circuit_apply(const QlgaCircuit *circuit, double *amplitudes, size_t len);

/**
 * Largest entrywise difference between the compiled timestep and the dense
 * lattice operator, for `1 ≤ qubits ≤ 6`.
 *
 * # Safety
 * `out_error` must be writable.
 */
QlgaStatus qlga_verify_step(size_t qubits, double s, double *out_error);

/**
 * Runs the one-query XOR circuit for `f = (f0, f1)`, writing the more
 * likely query-qubit outcome and its probability.
 *
 * # Safety
 * Both out-pointers must be writable.
 */
QlgaStatus qlga_dj_run(bool f0, bool f1, uint8_t *out_bit, double *out_probability);

/**
 * Best success probability of a deterministic classical one-query strategy.
 */
double qlga_classical_one_query_bound(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QLGA_H */
