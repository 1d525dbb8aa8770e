//! Time-averaged distributions, mixing times and log-log scaling fits.
//!
//! Both walks are compared through their Cesàro averages
//! `avg_T = (1/T) Σ_{t<T} P_t`. The unitary walk never converges pointwise
//! and the non-lazy classical walk is periodic on even cycles, so the running
//! average is the quantity that settles.
//!
//! Mixing-time search schedule: every `T ≤ 1000` is checked; beyond that the
//! horizon follows the grid `T_{k+1} = ⌈1.1·T_k⌉` from `T_0 = 1000`, and the
//! first grid interval that crosses below ε is bisected down to a single step.
//! The result is exact in the dense region. Beyond it, it is a `T` with
//! `TV ≤ ε` whose predecessor fails, located inside the first passing grid
//! interval.

use rayon::prelude::*;
use serde::Serialize;

use crate::dist::{tv_to_uniform_scaled, Distribution};
use crate::error::{Error, Result};
use crate::lattice::{InitialState, LatticeSize, QlgaState, ScatterAngle, ScatterMatrix};
use crate::walk::markov_step_into;

pub const DEFAULT_EPSILON: f64 = 0.05;
pub const DENSE_LIMIT: u64 = 1000;
pub const GRID_RATIO: f64 = 1.1;

/// Default search cap, `50·N²`.
pub fn default_t_max(size: LatticeSize) -> u64 {
    50 * (size.get() as u64).pow(2)
}

/// A process whose position distributions can be averaged over time.
pub trait AveragedProcess: Clone {
    fn sites(&self) -> usize;
    /// Adds the current position distribution into `acc`.
    fn add_distribution(&self, acc: &mut [f64]);
    fn advance(&mut self);
}

#[derive(Debug, Clone)]
pub struct QuantumWalk {
    state: QlgaState,
    scatter: ScatterMatrix,
}

impl QuantumWalk {
    pub fn new(state: QlgaState, s: ScatterAngle) -> Self {
        Self { state, scatter: s.matrix() }
    }

    pub fn state(&self) -> &QlgaState {
        &self.state
    }
}

impl AveragedProcess for QuantumWalk {
    fn sites(&self) -> usize {
        self.state.size().get()
    }

    fn add_distribution(&self, acc: &mut [f64]) {
        self.state.accumulate_position(acc);
    }

    fn advance(&mut self) {
        self.state.step_mut(self.scatter);
    }
}

#[derive(Debug, Clone)]
pub struct ClassicalWalk {
    p: Vec<f64>,
    scratch: Vec<f64>,
}

impl ClassicalWalk {
    pub fn new(start: &Distribution) -> Self {
        Self { p: start.as_slice().to_vec(), scratch: vec![0.0; start.len()] }
    }
}

impl AveragedProcess for ClassicalWalk {
    fn sites(&self) -> usize {
        self.p.len()
    }

    fn add_distribution(&self, acc: &mut [f64]) {
        acc.iter_mut().zip(&self.p).for_each(|(a, p)| *a += p);
    }

    fn advance(&mut self) {
        markov_step_into(&self.p, &mut self.scratch);
        std::mem::swap(&mut self.p, &mut self.scratch);
    }
}

/// Running sum of position distributions. After `push` has been called `T`
/// times the average covers `t = 0..T` and the process sits at time `T`.
#[derive(Debug, Clone)]
pub struct CesaroAverage<P> {
    process: P,
    sum: Vec<f64>,
    terms: u64,
}

impl<P: AveragedProcess> CesaroAverage<P> {
    pub fn new(process: P) -> Self {
        let sum = vec![0.0; process.sites()];
        Self { process, sum, terms: 0 }
    }

    pub fn push(&mut self) {
        self.process.add_distribution(&mut self.sum);
        self.terms += 1;
        self.process.advance();
    }

    pub fn terms(&self) -> u64 {
        self.terms
    }

    /// TV distance from the current average to uniform. `None` before the first push.
    pub fn tv_to_uniform(&self) -> Option<f64> {
        (self.terms > 0).then(|| tv_to_uniform_scaled(&self.sum, 1.0 / self.terms as f64))
    }

    pub fn average(&self) -> Option<Distribution> {
        if self.terms == 0 {
            return None;
        }
        let total: f64 = self.sum.iter().sum();
        Some(Distribution::from_vec_unchecked(self.sum.iter().map(|v| v / total).collect()))
    }
}

/// `(1/T) Σ_{t<T} P_t` for the QLGA, in a single forward pass.
pub fn time_averaged_distribution(state0: &QlgaState, s: ScatterAngle, horizon: u64) -> Result<Distribution> {
    if horizon == 0 {
        return Err(Error::ZeroHorizon);
    }
    let mut avg = CesaroAverage::new(QuantumWalk::new(state0.clone(), s));
    for _ in 0..horizon {
        avg.push();
    }
    Ok(avg.average().expect("horizon is positive"))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum System {
    Quantum { s: f64 },
    Classical,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MixingReport {
    #[serde(rename = "N")]
    pub lattice_size: usize,
    pub epsilon: f64,
    /// `None` when no horizon up to `t_max` reached ε.
    pub t_mix: Option<u64>,
    pub t_max: u64,
    pub system: System,
}

fn validate(epsilon: f64, t_max: u64) -> Result<()> {
    if !(epsilon > 0.0 && epsilon <= 1.0) {
        return Err(Error::InvalidEpsilon(epsilon));
    }
    if t_max == 0 {
        return Err(Error::ZeroHorizon);
    }
    Ok(())
}

/// Smallest horizon on the search schedule whose average is within `epsilon`
/// of uniform, or `None` if `t_max` is reached first.
pub fn first_crossing<P: AveragedProcess>(process: P, epsilon: f64, t_max: u64) -> Option<u64> {
    let mut avg = CesaroAverage::new(process);
    let passes = |a: &CesaroAverage<P>| a.tv_to_uniform().is_some_and(|tv| tv <= epsilon);

    while avg.terms() < DENSE_LIMIT.min(t_max) {
        avg.push();
        if passes(&avg) {
            return Some(avg.terms());
        }
    }

    let mut last_fail = avg.clone();
    while avg.terms() < t_max {
        let grid = ((avg.terms() as f64 * GRID_RATIO).ceil() as u64).max(avg.terms() + 1).min(t_max);
        while avg.terms() < grid {
            avg.push();
        }
        if passes(&avg) {
            return Some(bisect(last_fail, grid, &passes));
        }
        last_fail = avg.clone();
    }
    None
}

/// Narrows `(lo.terms, hi]` to adjacent horizons, `lo` failing and `hi` passing.
fn bisect<P, F>(mut lo: CesaroAverage<P>, mut hi: u64, passes: &F) -> u64
where
    P: AveragedProcess,
    F: Fn(&CesaroAverage<P>) -> bool,
{
    while hi - lo.terms() > 1 {
        let mid = lo.terms() + (hi - lo.terms()) / 2;
        let mut probe = lo.clone();
        while probe.terms() < mid {
            probe.push();
        }
        if passes(&probe) {
            hi = mid;
        } else {
            lo = probe;
        }
    }
    hi
}

pub fn quantum_mixing_time(
    size: LatticeSize,
    s: ScatterAngle,
    init: InitialState,
    epsilon: f64,
    t_max: u64,
) -> Result<MixingReport> {
    validate(epsilon, t_max)?;
    let state = QlgaState::prepare(size, init)?;
    let t_mix = first_crossing(QuantumWalk::new(state, s), epsilon, t_max);
    Ok(MixingReport {
        lattice_size: size.get(),
        epsilon,
        t_mix,
        t_max,
        system: System::Quantum { s: s.radians() },
    })
}

/// Classical mixing time from a walker started at `x0`.
pub fn classical_mixing_time(size: LatticeSize, x0: usize, epsilon: f64, t_max: u64) -> Result<MixingReport> {
    classical_mixing_time_from(&Distribution::delta(size.get(), x0)?, epsilon, t_max)
}

pub fn classical_mixing_time_from(start: &Distribution, epsilon: f64, t_max: u64) -> Result<MixingReport> {
    validate(epsilon, t_max)?;
    let t_mix = first_crossing(ClassicalWalk::new(start), epsilon, t_max);
    Ok(MixingReport { lattice_size: start.len(), epsilon, t_mix, t_max, system: System::Classical })
}

/// Runs one measurement per lattice size in parallel, returning them in input order.
pub fn sweep<F>(sizes: &[LatticeSize], measure: F) -> Result<Vec<MixingReport>>
where
    F: Fn(LatticeSize) -> Result<MixingReport> + Sync,
{
    sizes.par_iter().map(|&n| measure(n)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScalingPoint {
    #[serde(rename = "N")]
    pub n: f64,
    pub t_mix: f64,
}

/// Least-squares line through `(ln N, ln T_mix)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScalingFit {
    pub points: Vec<ScalingPoint>,
    pub slope: f64,
    pub intercept: f64,
    pub r2: f64,
}

pub fn scaling_fit(points: &[(f64, f64)]) -> Result<ScalingFit> {
    if points.len() < 3 {
        return Err(Error::TooFewPoints(points.len()));
    }
    if let Some(&(n, t)) = points.iter().find(|(n, t)| !(*n > 0.0 && *t > 0.0)) {
        return Err(Error::NonPositivePoint(n, t));
    }
    let xs: Vec<f64> = points.iter().map(|p| p.0.ln()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.1.ln()).collect();
    let k = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    if sxx == 0.0 {
        return Err(Error::NonPositivePoint(points[0].0, points[0].1));
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss_res: f64 = xs.iter().zip(&ys).map(|(x, y)| (y - (intercept + slope * x)).powi(2)).sum();
    let ss_tot: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    let r2 = if ss_tot == 0.0 { 1.0 } else { (1.0 - ss_res / ss_tot).clamp(0.0, 1.0) };
    Ok(ScalingFit {
        points: points.iter().map(|&(n, t)| ScalingPoint { n, t_mix: t }).collect(),
        slope,
        intercept,
        r2,
    })
}

/// Fit over the reports that found a mixing time.
pub fn fit_reports(reports: &[MixingReport]) -> Result<ScalingFit> {
    let points: Vec<(f64, f64)> = reports
        .iter()
        .filter_map(|r| r.t_mix.map(|t| (r.lattice_size as f64, t as f64)))
        .collect();
    scaling_fit(&points)
}
