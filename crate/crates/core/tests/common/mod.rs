#![allow(dead_code)]

use num_complex::Complex64;
use proptest::prelude::*;
use std::f64::consts::TAU;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Row-major `2N × 2N` timestep matrix written straight from the update rule:
/// the amplitude at `(x, α)` moves to `x + α`, then the two velocities at
/// each site are mixed by `[[cos s, i sin s], [i sin s, cos s]]`.
pub fn oracle_step_matrix(n: usize, s: f64) -> Vec<Complex64> {
    let dim = 2 * n;
    let mut u = vec![c(0.0, 0.0); dim * dim];
    let scatter = [[c(s.cos(), 0.0), c(0.0, s.sin())], [c(0.0, s.sin()), c(s.cos(), 0.0)]];
    for x in 0..n {
        for v in 0..2 {
            let alpha: i64 = if v == 1 { 1 } else { -1 };
            let dest = (x as i64 + alpha).rem_euclid(n as i64) as usize;
            for v_out in 0..2 {
                u[(2 * dest + v_out) * dim + 2 * x + v] = scatter[v_out][v];
            }
        }
    }
    u
}

pub fn mat_vec(u: &[Complex64], v: &[Complex64]) -> Vec<Complex64> {
    let dim = v.len();
    (0..dim).map(|r| (0..dim).map(|k| u[r * dim + k] * v[k]).sum()).collect()
}

/// Unitary DFT, `F[j][k] = ω^{jk}/√N`.
pub fn dft_matrix(n: usize) -> Vec<Complex64> {
    let scale = 1.0 / (n as f64).sqrt();
    let mut f = Vec::with_capacity(n * n);
    for j in 0..n {
        for k in 0..n {
            let turns = ((j * k) % n) as f64 / n as f64;
            f.push(Complex64::from_polar(scale, TAU * turns));
        }
    }
    f
}

pub fn binomial(n: u64, k: u64) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Exact endpoint law of the ±1 walk: `P(x) = Σ_{k : 2k − t ≡ x − x0} C(t,k)/2^t`.
pub fn walk_law(n: usize, x0: usize, t: u64) -> Vec<f64> {
    let mut p = vec![0.0; n];
    let norm = 2f64.powi(t as i32);
    for k in 0..=t {
        let x = (x0 as i64 + 2 * k as i64 - t as i64).rem_euclid(n as i64) as usize;
        p[x] += binomial(t, k) / norm;
    }
    p
}

pub fn normalize(raw: Vec<(f64, f64)>) -> Vec<Complex64> {
    let v: Vec<Complex64> = raw.into_iter().map(|(a, b)| c(a, b)).collect();
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|z| z / norm).collect()
}

/// Normalized random vectors of length `dim`, away from the zero vector.
pub fn unit_vector(dim: usize) -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), dim)
        .prop_filter("nonzero", |v| v.iter().map(|(a, b)| a * a + b * b).sum::<f64>() > 1e-3)
        .prop_map(normalize)
}

pub fn distribution(len: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.0f64..1.0, len)
        .prop_filter("positive mass", |v| v.iter().sum::<f64>() > 1e-3)
        .prop_map(|v| {
            let total: f64 = v.iter().sum();
            v.into_iter().map(|x| x / total).collect()
        })
}
