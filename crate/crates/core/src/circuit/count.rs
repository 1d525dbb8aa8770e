use std::collections::BTreeMap;

use serde::Serialize;

use super::gate::Circuit;

/// Gate tallies for one circuit.
///
/// Kinds with controls are keyed with a `C-` prefix per control, so a
/// singly-controlled phase counts under `C-PHASE`. A swap counts as one gate;
/// `swap_cnot_equivalent` gives the three-CNOT cost of the swaps on its own.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GateCountReport {
    pub width: usize,
    pub by_kind: BTreeMap<String, usize>,
    pub total: usize,
    pub controlled: usize,
    pub swap_cnot_equivalent: usize,
}

impl GateCountReport {
    pub fn get(&self, key: &str) -> usize {
        self.by_kind.get(key).copied().unwrap_or(0)
    }
}

pub fn gate_count(circuit: &Circuit) -> GateCountReport {
    let mut by_kind = BTreeMap::new();
    let mut controlled = 0;
    for g in circuit.gates() {
        let key = format!("{}{}", "C-".repeat(g.controls.len()), g.kind.name());
        *by_kind.entry(key).or_insert(0) += 1;
        if g.is_controlled() {
            controlled += 1;
        }
    }
    let swaps = by_kind.get("SWAP").copied().unwrap_or(0);
    GateCountReport {
        width: circuit.width(),
        by_kind,
        total: circuit.len(),
        controlled,
        swap_cnot_equivalent: 3 * swaps,
    }
}

/// `count(n) = a·n² + b·n + c` through the first three points, with the
/// residual at every point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuadraticFit {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub residuals: Vec<f64>,
}

impl QuadraticFit {
    pub fn is_exact(&self) -> bool {
        self.residuals.iter().all(|r| *r == 0.0)
    }

    pub fn eval(&self, n: f64) -> f64 {
        self.a * n * n + self.b * n + self.c
    }
}

/// Interpolates through the first three `(n, count)` points. Integer counts
/// at consecutive `n` give half-integer coefficients, so the arithmetic is exact.
pub fn fit_quadratic(points: &[(usize, usize)]) -> Option<QuadraticFit> {
    if points.len() < 3 {
        return None;
    }
    let [(n0, y0), (n1, y1), (n2, y2)] = [points[0], points[1], points[2]].map(|(n, y)| (n as f64, y as f64));
    // Lagrange form, solved for monomial coefficients.
    let d01 = (y1 - y0) / (n1 - n0);
    let d12 = (y2 - y1) / (n2 - n1);
    let a = (d12 - d01) / (n2 - n0);
    let b = d01 - a * (n0 + n1);
    let c = y0 - a * n0 * n0 - b * n0;
    let mut fit = QuadraticFit { a, b, c, residuals: Vec::new() };
    fit.residuals = points.iter().map(|&(n, y)| y as f64 - fit.eval(n as f64)).collect();
    Some(fit)
}
