//! Tracking how far the probability front has travelled from the start site.

use serde::Serialize;

use crate::dist::Distribution;
use crate::error::{Error, Result};
use crate::lattice::{InitialState, LatticeSize, QlgaState, ScatterAngle};

/// Distance `d ∈ [0, N/2]` of the largest `P(x0 + d)`, ties going to the
/// smaller `d`.
pub fn right_front(p: &Distribution, x0: usize) -> usize {
    let n = p.len();
    let mut best = 0;
    for d in 1..=n / 2 {
        if p[(x0 + d) % n] > p[(x0 + best) % n] {
            best = d;
        }
    }
    best
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FrontTrack {
    pub fronts: Vec<usize>,
    pub slope: f64,
    pub intercept: f64,
    pub max_residual: f64,
}

/// Front position for `t = 0..=steps` with a least-squares line through it.
pub fn track_front(size: LatticeSize, s: ScatterAngle, init: InitialState, steps: u64) -> Result<FrontTrack> {
    let x0 = init.origin().ok_or_else(|| Error::InvalidDistribution("initial state has no origin".into()))?;
    if steps < 2 {
        return Err(Error::TooFewPoints(steps as usize + 1));
    }
    let mut state = QlgaState::prepare(size, init)?;
    let m = s.matrix();
    let mut fronts = Vec::with_capacity(steps as usize + 1);
    for t in 0..=steps {
        if t > 0 {
            state.step_mut(m);
        }
        fronts.push(right_front(&state.position_distribution(), x0));
    }
    let (slope, intercept) = least_squares(&fronts);
    let max_residual = fronts
        .iter()
        .enumerate()
        .map(|(t, &f)| (f as f64 - intercept - slope * t as f64).abs())
        .fold(0.0, f64::max);
    Ok(FrontTrack { fronts, slope, intercept, max_residual })
}

fn least_squares(ys: &[usize]) -> (f64, f64) {
    let k = ys.len() as f64;
    let mx = (k - 1.0) / 2.0;
    let my = ys.iter().sum::<usize>() as f64 / k;
    let (mut sxx, mut sxy) = (0.0, 0.0);
    for (t, &y) in ys.iter().enumerate() {
        sxx += (t as f64 - mx).powi(2);
        sxy += (t as f64 - mx) * (y as f64 - my);
    }
    let slope = sxy / sxx;
    (slope, my - slope * mx)
}
