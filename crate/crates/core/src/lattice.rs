//! Dense one-particle quantum lattice gas on a periodic 1D lattice.
//!
//! A state is a complex amplitude for every (site, velocity) pair. One
//! timestep advects each velocity component one site in its direction and
//! then mixes the two velocity amplitudes at every site with the 2×2
//! scattering matrix `S(s) = [[cos s, i sin s], [i sin s, cos s]]`.
//!
//! Amplitudes are stored site-major: flat index `2x + v`, where `v = 0` is the
//! left-moving (α = −1) component and `v = 1` the right-moving one.

use std::f64::consts::{FRAC_1_SQRT_2, TAU};
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::dist::Distribution;
use crate::error::{Error, Result};

/// Allowed deviation of `Σ|ψ|²` from 1 when a state is constructed.
pub const NORM_TOLERANCE: f64 = 1e-10;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Number of lattice sites, at least 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "usize", into = "usize")]
pub struct LatticeSize(usize);

impl LatticeSize {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::LatticeTooSmall(n));
        }
        Ok(Self(n))
    }

    /// The size `2^qubits`, for lattices addressed by a position register.
    pub fn from_qubits(qubits: usize) -> Result<Self> {
        if qubits == 0 {
            return Err(Error::NoQubits);
        }
        Self::new(1usize << qubits)
    }

    pub fn get(self) -> usize {
        self.0
    }

    /// Number of position qubits, if the size is a power of two.
    pub fn qubits(self) -> Result<usize> {
        if self.0.is_power_of_two() {
            Ok(self.0.trailing_zeros() as usize)
        } else {
            Err(Error::NotPowerOfTwo(self.0))
        }
    }

    /// Dimension of the one-particle Hilbert space, `2N`.
    pub fn dim(self) -> usize {
        2 * self.0
    }

    /// `(x + d) mod N` for any signed displacement.
    pub fn wrap(self, x: usize, d: i64) -> usize {
        (x as i64 + d).rem_euclid(self.0 as i64) as usize
    }
}

impl TryFrom<usize> for LatticeSize {
    type Error = Error;

    fn try_from(n: usize) -> Result<Self> {
        Self::new(n)
    }
}

impl From<LatticeSize> for usize {
    fn from(n: LatticeSize) -> usize {
        n.0
    }
}

impl fmt::Display for LatticeSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Particle velocity α ∈ {−1, +1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Velocity {
    Left,
    Right,
}

impl Velocity {
    pub const ALL: [Velocity; 2] = [Velocity::Left, Velocity::Right];

    /// Storage index: 0 for α = −1, 1 for α = +1.
    pub fn index(self) -> usize {
        match self {
            Velocity::Left => 0,
            Velocity::Right => 1,
        }
    }

    pub fn from_index(v: usize) -> Self {
        if v == 0 {
            Velocity::Left
        } else {
            Velocity::Right
        }
    }

    pub fn sign(self) -> i64 {
        match self {
            Velocity::Left => -1,
            Velocity::Right => 1,
        }
    }
}

/// Scattering angle `s` in radians. Any finite value is accepted.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct ScatterAngle(pub f64);

impl ScatterAngle {
    pub fn radians(self) -> f64 {
        self.0
    }

    /// The angle reduced to `[0, 2π)`.
    pub fn canonical(self) -> f64 {
        let r = self.0.rem_euclid(TAU);
        if r >= TAU {
            0.0
        } else {
            r
        }
    }

    pub fn matrix(self) -> ScatterMatrix {
        ScatterMatrix { cos: self.0.cos(), sin: self.0.sin() }
    }
}

impl From<f64> for ScatterAngle {
    fn from(s: f64) -> Self {
        ScatterAngle(s)
    }
}

/// `S = [[cos s, i sin s], [i sin s, cos s]]`, acting on `(ψ₋, ψ₊)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatterMatrix {
    cos: f64,
    sin: f64,
}

impl ScatterMatrix {
    #[inline]
    pub fn apply(&self, left: Complex64, right: Complex64) -> (Complex64, Complex64) {
        let is = Complex64::new(0.0, self.sin);
        (left * self.cos + right * is, left * is + right * self.cos)
    }

    /// Row-major 2×2 entries.
    pub fn entries(&self) -> [Complex64; 4] {
        let c = Complex64::new(self.cos, 0.0);
        let is = Complex64::new(0.0, self.sin);
        [c, is, is, c]
    }
}

/// Initial conditions for a single particle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum InitialState {
    /// Amplitude 1 at `(x0, velocity)`.
    Delta { x0: usize, velocity: Velocity },
    /// `(|x0,−1⟩ + |x0,+1⟩)/√2`.
    Symmetric { x0: usize },
    /// Envelope `exp(−d²/4w²)·exp(i·k·x)` with `d` the periodic displacement
    /// from `x0`, split equally over both velocities.
    Gaussian { x0: usize, width: f64, momentum: f64 },
    /// `ψ_{x,α} = 1/√(2N)` everywhere. Its position distribution is
    /// stationary for every scattering angle.
    Uniform,
}

impl InitialState {
    pub fn name(&self) -> &'static str {
        match self {
            InitialState::Delta { .. } => "delta",
            InitialState::Symmetric { .. } => "symmetric",
            InitialState::Gaussian { .. } => "gaussian",
            InitialState::Uniform => "uniform",
        }
    }

    /// Starting site, if the state has one.
    pub fn origin(&self) -> Option<usize> {
        match *self {
            InitialState::Delta { x0, .. }
            | InitialState::Symmetric { x0 }
            | InitialState::Gaussian { x0, .. } => Some(x0),
            InitialState::Uniform => None,
        }
    }
}

impl fmt::Display for InitialState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            InitialState::Delta { x0, velocity } => write!(f, "delta({x0},{:+})", velocity.sign()),
            InitialState::Symmetric { x0 } => write!(f, "symmetric({x0})"),
            InitialState::Gaussian { x0, width, momentum } => {
                write!(f, "gaussian({x0},{width},{momentum})")
            }
            InitialState::Uniform => write!(f, "uniform"),
        }
    }
}

/// Normalized amplitude field `ψ_{x,α}`.
#[derive(Debug, Clone, PartialEq)]
pub struct QlgaState {
    size: LatticeSize,
    amps: Vec<Complex64>,
}

impl QlgaState {
    /// Wraps a site-major amplitude vector, checking its length and norm.
    pub fn from_amplitudes(size: LatticeSize, amps: Vec<Complex64>) -> Result<Self> {
        if amps.len() != size.dim() {
            return Err(Error::SizeMismatch { left: amps.len(), right: size.dim() });
        }
        let norm = norm_sqr(&amps);
        if (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::NotNormalized(norm));
        }
        Ok(Self { size, amps })
    }

    pub fn prepare(size: LatticeSize, init: InitialState) -> Result<Self> {
        let n = size.get();
        if let Some(x0) = init.origin() {
            if x0 >= n {
                return Err(Error::SiteOutOfRange { site: x0, size: n });
            }
        }
        let mut amps = vec![ZERO; size.dim()];
        match init {
            InitialState::Delta { x0, velocity } => {
                amps[2 * x0 + velocity.index()] = Complex64::new(1.0, 0.0);
            }
            InitialState::Symmetric { x0 } => {
                amps[2 * x0] = Complex64::new(FRAC_1_SQRT_2, 0.0);
                amps[2 * x0 + 1] = Complex64::new(FRAC_1_SQRT_2, 0.0);
            }
            InitialState::Gaussian { x0, width, momentum } => {
                if !(width > 0.0 && width.is_finite()) {
                    return Err(Error::NonPositiveWidth(width));
                }
                for x in 0..n {
                    let d = periodic_displacement(x, x0, n) as f64;
                    let envelope = (-d * d / (4.0 * width * width)).exp();
                    let a = Complex64::from_polar(envelope, momentum * x as f64);
                    amps[2 * x] = a;
                    amps[2 * x + 1] = a;
                }
                let scale = norm_sqr(&amps).sqrt();
                amps.iter_mut().for_each(|a| *a /= scale);
            }
            InitialState::Uniform => {
                let a = Complex64::new(1.0 / (size.dim() as f64).sqrt(), 0.0);
                amps.fill(a);
            }
        }
        Self::from_amplitudes(size, amps)
    }

    pub fn size(&self) -> LatticeSize {
        self.size
    }

    pub fn amplitude(&self, x: usize, v: Velocity) -> Complex64 {
        self.amps[2 * x + v.index()]
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        norm_sqr(&self.amps)
    }

    /// `(x, α) ↦ (x + α, α)` with periodic wrap.
    pub fn advect(&self) -> Self {
        let mut next = self.clone();
        advect_in_place(&mut next.amps, 1);
        next
    }

    /// Inverse of [`advect`](Self::advect).
    pub fn retreat(&self) -> Self {
        let mut next = self.clone();
        advect_in_place(&mut next.amps, -1);
        next
    }

    pub fn scatter(&self, s: ScatterAngle) -> Self {
        let mut next = self.clone();
        scatter_in_place(&mut next.amps, s.matrix());
        next
    }

    /// One timestep: advect, then scatter.
    pub fn step(&self, s: ScatterAngle) -> Self {
        let mut next = self.clone();
        next.step_mut(s.matrix());
        next
    }

    pub fn evolve(&self, s: ScatterAngle, steps: u64) -> Self {
        let mut next = self.clone();
        let m = s.matrix();
        for _ in 0..steps {
            next.step_mut(m);
        }
        next
    }

    /// In-place timestep with a precomputed scattering matrix.
    pub fn step_mut(&mut self, m: ScatterMatrix) {
        advect_in_place(&mut self.amps, 1);
        scatter_in_place(&mut self.amps, m);
    }

    /// `P(x) = |ψ_{x,−1}|² + |ψ_{x,+1}|²`.
    pub fn position_distribution(&self) -> Distribution {
        let mut p = vec![0.0; self.size.get()];
        self.accumulate_position(&mut p);
        let total: f64 = p.iter().sum();
        p.iter_mut().for_each(|v| *v /= total);
        Distribution::from_vec_unchecked(p)
    }

    /// Adds `P(x)` into `acc` without renormalizing.
    pub fn accumulate_position(&self, acc: &mut [f64]) {
        for (slot, pair) in acc.iter_mut().zip(self.amps.chunks_exact(2)) {
            *slot += pair[0].norm_sqr() + pair[1].norm_sqr();
        }
    }
}

fn norm_sqr(amps: &[Complex64]) -> f64 {
    amps.iter().map(|a| a.norm_sqr()).sum()
}

/// Signed shortest displacement from `x0` to `x` on the N-cycle, in `(−N/2, N/2]`.
pub fn periodic_displacement(x: usize, x0: usize, n: usize) -> i64 {
    let n = n as i64;
    let mut d = (x as i64 - x0 as i64).rem_euclid(n);
    if d > n / 2 {
        d -= n;
    }
    d
}

/// Moves every velocity component `direction` (±1) sites along its own velocity.
fn advect_in_place(amps: &mut [Complex64], direction: i64) {
    let n = amps.len() / 2;
    // Left movers live at even offsets, right movers at odd ones.
    rotate_strided(amps, 0, n, direction > 0);
    rotate_strided(amps, 1, n, direction < 0);
}

/// Rotates the `n` entries at `offset, offset + 2, ...` by one site: towards
/// lower sites when `down` is set, otherwise towards higher sites.
fn rotate_strided(amps: &mut [Complex64], offset: usize, n: usize, down: bool) {
    if down {
        let first = amps[offset];
        for x in 0..n - 1 {
            amps[2 * x + offset] = amps[2 * x + 2 + offset];
        }
        amps[2 * (n - 1) + offset] = first;
    } else {
        let last = amps[2 * (n - 1) + offset];
        for x in (1..n).rev() {
            amps[2 * x + offset] = amps[2 * x - 2 + offset];
        }
        amps[offset] = last;
    }
}

fn scatter_in_place(amps: &mut [Complex64], m: ScatterMatrix) {
    for pair in amps.chunks_exact_mut(2) {
        let (l, r) = m.apply(pair[0], pair[1]);
        pair[0] = l;
        pair[1] = r;
    }
}

/// A dense square matrix verified to be unitary.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseUnitary {
    dim: usize,
    entries: Vec<Complex64>,
}

/// Tolerance on `max |U†U − I|` accepted by [`DenseUnitary::new`].
pub const UNITARITY_TOLERANCE: f64 = 1e-10;

impl DenseUnitary {
    /// Takes row-major entries and checks `U†U = I`.
    pub fn new(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::SizeMismatch { left: entries.len(), right: dim * dim });
        }
        let err = unitarity_defect(dim, &entries);
        if err.is_nan() || err > UNITARITY_TOLERANCE {
            return Err(Error::NotUnitary(err));
        }
        Ok(Self { dim, entries })
    }

    /// The full single-timestep operator on the flattened `(x, α)` basis.
    ///
    /// Column `j` is the image of basis state `j` under one step, which makes
    /// the matrix `(⊕ S) · A` with `A` the advection permutation.
    pub fn qlga_step(size: LatticeSize, s: ScatterAngle) -> Result<Self> {
        let dim = size.dim();
        let mut entries = vec![ZERO; dim * dim];
        let n = size.get();
        let sm = s.matrix().entries();
        for x in 0..n {
            for v in Velocity::ALL {
                let col = 2 * x + v.index();
                let y = size.wrap(x, v.sign());
                // S column v lands on both velocities at the advected site.
                for w in 0..2 {
                    entries[(2 * y + w) * dim + col] = sm[w * 2 + v.index()];
                }
            }
        }
        Self::new(dim, entries)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn apply(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        if v.len() != self.dim {
            return Err(Error::SizeMismatch { left: v.len(), right: self.dim });
        }
        Ok(self
            .entries
            .chunks_exact(self.dim)
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn apply_state(&self, state: &QlgaState) -> Result<QlgaState> {
        let out = self.apply(state.amplitudes())?;
        QlgaState::from_amplitudes(state.size(), out)
    }

    /// Max entrywise `|self − other|`.
    pub fn max_abs_diff(&self, other: &DenseUnitary) -> Result<f64> {
        if self.dim != other.dim {
            return Err(Error::SizeMismatch { left: self.dim, right: other.dim });
        }
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }
}

/// `dense_unitary(N, s)`: the dense single-step matrix.
pub fn dense_unitary(size: LatticeSize, s: ScatterAngle) -> Result<DenseUnitary> {
    DenseUnitary::qlga_step(size, s)
}

/// `max |(U†U)_{ij} − δ_ij|` for row-major entries.
pub fn unitarity_defect(dim: usize, u: &[Complex64]) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..dim {
        for j in 0..dim {
            let mut acc = ZERO;
            for k in 0..dim {
                acc += u[k * dim + i].conj() * u[k * dim + j];
            }
            if i == j {
                acc -= 1.0;
            }
            worst = worst.max(acc.norm());
        }
    }
    worst
}
