//! Probability distributions over lattice sites.

use serde::Serialize;

use crate::error::{Error, Result};

/// Allowed deviation of the total mass from 1.
pub const MASS_TOLERANCE: f64 = 1e-10;

/// A nonnegative vector over lattice sites summing to one.
///
/// Shared by the quantum side (instantaneous and time-averaged position
/// distributions) and the classical random walk.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Distribution {
    p: Vec<f64>,
}

impl Distribution {
    pub fn new(p: Vec<f64>) -> Result<Self> {
        if p.len() < 2 {
            return Err(Error::LatticeTooSmall(p.len()));
        }
        if let Some((x, v)) = p.iter().enumerate().find(|(_, v)| !(v.is_finite() && **v >= 0.0)) {
            return Err(Error::InvalidDistribution(format!("p({x}) = {v}")));
        }
        let total: f64 = p.iter().sum();
        if (total - 1.0).abs() > MASS_TOLERANCE {
            return Err(Error::InvalidDistribution(format!("total mass {total}")));
        }
        Ok(Self { p })
    }

    /// Wraps a vector that is nonnegative and normalized by construction.
    pub(crate) fn from_vec_unchecked(p: Vec<f64>) -> Self {
        debug_assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-8);
        Self { p }
    }

    pub fn uniform(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::LatticeTooSmall(n));
        }
        Ok(Self { p: vec![1.0 / n as f64; n] })
    }

    pub fn delta(n: usize, site: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::LatticeTooSmall(n));
        }
        if site >= n {
            return Err(Error::SiteOutOfRange { site, size: n });
        }
        let mut p = vec![0.0; n];
        p[site] = 1.0;
        Ok(Self { p })
    }

    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.p
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.p
    }

    pub fn total(&self) -> f64 {
        self.p.iter().sum()
    }

    /// Total-variation distance `½ Σ |p(x) − q(x)|`.
    pub fn tv_distance(&self, other: &Distribution) -> Result<f64> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch { left: self.len(), right: other.len() });
        }
        Ok(tv_slices(&self.p, &other.p))
    }

    /// Total-variation distance to the uniform distribution on the same sites.
    pub fn tv_to_uniform(&self) -> f64 {
        tv_to_uniform_scaled(&self.p, 1.0)
    }
}

impl std::ops::Index<usize> for Distribution {
    type Output = f64;

    fn index(&self, x: usize) -> &f64 {
        &self.p[x]
    }
}

pub fn tv_distance(p: &Distribution, q: &Distribution) -> Result<f64> {
    p.tv_distance(q)
}

pub(crate) fn tv_slices(p: &[f64], q: &[f64]) -> f64 {
    0.5 * p.iter().zip(q).map(|(a, b)| (a - b).abs()).sum::<f64>()
}

/// TV distance between `scale * weights` and uniform, without allocating.
pub(crate) fn tv_to_uniform_scaled(weights: &[f64], scale: f64) -> f64 {
    let u = 1.0 / weights.len() as f64;
    0.5 * weights.iter().map(|w| (w * scale - u).abs()).sum::<f64>()
}
