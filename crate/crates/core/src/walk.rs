//! Classical comparator: the unbiased, non-lazy random walk on the N-cycle.
//!
//! Exact evolution uses `p'(x) = ½ p(x−1) + ½ p(x+1)` with periodic indices.
//! Trajectories draw one coin flip per step from a ChaCha8 stream seeded with
//! `ChaCha8Rng::seed_from_u64(seed)`, so every seed owns an independent,
//! reproducible stream.

use std::ops::Range;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::dist::Distribution;
use crate::error::{Error, Result};
use crate::lattice::LatticeSize;

/// Probability vector of the walker's position.
pub type MarkovDist = Distribution;

pub fn markov_step(d: &MarkovDist) -> MarkovDist {
    let mut next = vec![0.0; d.len()];
    markov_step_into(d.as_slice(), &mut next);
    Distribution::from_vec_unchecked(next)
}

pub(crate) fn markov_step_into(p: &[f64], next: &mut [f64]) {
    let n = p.len();
    for x in 0..n {
        let left = p[(x + n - 1) % n];
        let right = p[(x + 1) % n];
        next[x] = 0.5 * left + 0.5 * right;
    }
}

pub fn markov_evolve(d: &MarkovDist, steps: u64) -> MarkovDist {
    let mut cur = d.as_slice().to_vec();
    let mut next = vec![0.0; cur.len()];
    for _ in 0..steps {
        markov_step_into(&cur, &mut next);
        std::mem::swap(&mut cur, &mut next);
    }
    Distribution::from_vec_unchecked(cur)
}

/// `(1/T) Σ_{t<T} p_t` for the walk started from `d0`.
pub fn time_average_markov(d0: &MarkovDist, horizon: u64) -> Result<Distribution> {
    if horizon == 0 {
        return Err(Error::ZeroHorizon);
    }
    let mut cur = d0.as_slice().to_vec();
    let mut next = vec![0.0; cur.len()];
    let mut acc = vec![0.0; cur.len()];
    for t in 0..horizon {
        acc.iter_mut().zip(&cur).for_each(|(a, p)| *a += p);
        if t + 1 < horizon {
            markov_step_into(&cur, &mut next);
            std::mem::swap(&mut cur, &mut next);
        }
    }
    let scale = 1.0 / horizon as f64;
    acc.iter_mut().for_each(|a| *a *= scale);
    Ok(Distribution::from_vec_unchecked(acc))
}

/// Sites visited by one walker, starting position included.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WalkerTrajectory {
    pub positions: Vec<usize>,
    pub seed: u64,
}

impl WalkerTrajectory {
    pub fn final_position(&self) -> usize {
        *self.positions.last().expect("trajectory always holds its start")
    }

    /// Whether consecutive positions differ by ±1 mod N.
    pub fn is_nearest_neighbour(&self, size: LatticeSize) -> bool {
        self.positions
            .windows(2)
            .all(|w| w[1] == size.wrap(w[0], 1) || w[1] == size.wrap(w[0], -1))
    }
}

pub fn sample_trajectory(size: LatticeSize, x0: usize, steps: u64, seed: u64) -> Result<WalkerTrajectory> {
    if x0 >= size.get() {
        return Err(Error::SiteOutOfRange { site: x0, size: size.get() });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut positions = Vec::with_capacity(steps as usize + 1);
    let mut x = x0;
    positions.push(x);
    for _ in 0..steps {
        x = size.wrap(x, if rng.gen::<bool>() { 1 } else { -1 });
        positions.push(x);
    }
    Ok(WalkerTrajectory { positions, seed })
}

/// Final-position histogram over one trajectory per seed, normalized.
///
/// Trajectories run in parallel; the result does not depend on scheduling.
pub fn endpoint_histogram(size: LatticeSize, x0: usize, steps: u64, seeds: Range<u64>) -> Result<Distribution> {
    if seeds.is_empty() {
        return Err(Error::ZeroHorizon);
    }
    let n = size.get();
    let count = seeds.end - seeds.start;
    let ends = seeds
        .into_par_iter()
        .map(|seed| sample_trajectory(size, x0, steps, seed).map(|t| t.final_position()))
        .collect::<Result<Vec<_>>>()?;
    let mut hist = vec![0u64; n];
    for e in ends {
        hist[e] += 1;
    }
    Ok(Distribution::from_vec_unchecked(hist.into_iter().map(|c| c as f64 / count as f64).collect()))
}
