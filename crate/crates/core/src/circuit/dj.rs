//! The one-bit XOR problem: learn `f(0) ⊕ f(1)` with a single oracle call.

use serde::Serialize;

use super::gate::{Circuit, Gate, TruthTable};
use super::state::StateVector;
use crate::error::Result;

pub const QUERY: usize = 0;
pub const RESPONSE: usize = 1;

/// `H` on the query, `X` then `H` on the response, one f-controlled NOT,
/// and a final `H` on the query.
pub fn dj_circuit(f: TruthTable) -> Circuit {
    Circuit::from_gates(
        2,
        vec![Gate::h(QUERY), Gate::x(RESPONSE), Gate::h(RESPONSE), Gate::fcnot(f, QUERY, RESPONSE), Gate::h(QUERY)],
    )
    .expect("fixed two-qubit layout")
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DjOutcome {
    pub f: String,
    /// Probability that the query qubit reads 1.
    pub p_one: f64,
    /// The more likely query outcome.
    pub output: u8,
    pub probability: f64,
    pub expected: u8,
}

impl DjOutcome {
    pub fn is_correct(&self, tolerance: f64) -> bool {
        self.output == self.expected && (self.probability - 1.0).abs() <= tolerance
    }
}

pub fn run_dj(f: TruthTable) -> Result<DjOutcome> {
    let mut v = StateVector::zero(2);
    v.apply_circuit(&dj_circuit(f))?;
    let p_one = v.probability_one(QUERY);
    let output = u8::from(p_one >= 0.5);
    Ok(DjOutcome {
        f: f.to_string(),
        p_one,
        output,
        probability: if output == 1 { p_one } else { 1.0 - p_one },
        expected: u8::from(f.xor()),
    })
}

/// A deterministic classical algorithm allowed one oracle call: query `x`,
/// then answer `respond(f(x))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OneQueryStrategy {
    pub query: bool,
    /// `respond[b]` is the answer given when the oracle returns `b`.
    pub respond: [bool; 2],
}

impl OneQueryStrategy {
    /// All 2 × 4 strategies.
    pub fn all() -> Vec<Self> {
        let mut out = Vec::with_capacity(8);
        for query in [false, true] {
            for r0 in [false, true] {
                for r1 in [false, true] {
                    out.push(Self { query, respond: [r0, r1] });
                }
            }
        }
        out
    }

    /// Success probability for `f` drawn uniformly from the four truth tables.
    pub fn success_probability(&self) -> f64 {
        let wins = TruthTable::ALL
            .iter()
            .filter(|f| self.respond[f.eval(self.query) as usize] == f.xor())
            .count();
        wins as f64 / TruthTable::ALL.len() as f64
    }
}

/// Best success probability of any deterministic one-query classical strategy.
pub fn classical_one_query_bound() -> f64 {
    OneQueryStrategy::all().iter().map(OneQueryStrategy::success_probability).fold(0.0, f64::max)
}
