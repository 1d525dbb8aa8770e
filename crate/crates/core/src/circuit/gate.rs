use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A Boolean function on one bit, stored as its truth table `(f(0), f(1))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TruthTable {
    pub f0: bool,
    pub f1: bool,
}

impl TruthTable {
    pub const ALL: [TruthTable; 4] = [
        TruthTable { f0: false, f1: false },
        TruthTable { f0: false, f1: true },
        TruthTable { f0: true, f1: false },
        TruthTable { f0: true, f1: true },
    ];

    pub fn new(f0: bool, f1: bool) -> Self {
        Self { f0, f1 }
    }

    pub fn eval(self, x: bool) -> bool {
        if x {
            self.f1
        } else {
            self.f0
        }
    }

    pub fn xor(self) -> bool {
        self.f0 ^ self.f1
    }
}

impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.f0 as u8, self.f1 as u8)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GateKind {
    H,
    X,
    /// `diag(1, e^{iφ})`.
    Phase(f64),
    /// The lattice-gas scattering matrix `[[cos s, i sin s], [i sin s, cos s]]`.
    Scatter(f64),
    /// `|x, b⟩ ↦ |x, b ⊕ f(x)⟩` on targets `[x, b]`.
    FCnot(TruthTable),
    Swap,
}

impl GateKind {
    pub fn name(&self) -> &'static str {
        match self {
            GateKind::H => "H",
            GateKind::X => "X",
            GateKind::Phase(_) => "PHASE",
            GateKind::Scatter(_) => "SCATTER",
            GateKind::FCnot(_) => "FCNOT",
            GateKind::Swap => "SWAP",
        }
    }

    pub fn arity(&self) -> usize {
        match self {
            GateKind::FCnot(_) | GateKind::Swap => 2,
            _ => 1,
        }
    }

    /// Row-major 2×2 matrix of a single-target kind.
    pub fn matrix(&self) -> Option<[Complex64; 4]> {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        match *self {
            GateKind::H => {
                let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
                Some([h, h, h, -h])
            }
            GateKind::X => Some([zero, one, one, zero]),
            GateKind::Phase(phi) => Some([one, zero, zero, Complex64::from_polar(1.0, phi)]),
            GateKind::Scatter(s) => {
                let c = Complex64::new(s.cos(), 0.0);
                let is = Complex64::new(0.0, s.sin());
                Some([c, is, is, c])
            }
            GateKind::FCnot(_) | GateKind::Swap => None,
        }
    }

    pub fn inverse(self) -> Self {
        match self {
            GateKind::Phase(phi) => GateKind::Phase(-phi),
            GateKind::Scatter(s) => GateKind::Scatter(-s),
            other => other,
        }
    }
}

/// A gate placed on specific qubits. Controls fire on value 1.
#[derive(Debug, Clone, PartialEq)]
pub struct Gate {
    pub kind: GateKind,
    pub targets: Vec<usize>,
    pub controls: Vec<usize>,
}

impl Gate {
    pub fn new(kind: GateKind, targets: Vec<usize>) -> Self {
        Self { kind, targets, controls: Vec::new() }
    }

    pub fn h(q: usize) -> Self {
        Self::new(GateKind::H, vec![q])
    }

    pub fn x(q: usize) -> Self {
        Self::new(GateKind::X, vec![q])
    }

    pub fn phase(q: usize, phi: f64) -> Self {
        Self::new(GateKind::Phase(phi), vec![q])
    }

    pub fn scatter(q: usize, s: f64) -> Self {
        Self::new(GateKind::Scatter(s), vec![q])
    }

    pub fn swap(a: usize, b: usize) -> Self {
        Self::new(GateKind::Swap, vec![a, b])
    }

    pub fn fcnot(f: TruthTable, query: usize, response: usize) -> Self {
        Self::new(GateKind::FCnot(f), vec![query, response])
    }

    pub fn controlled_by(mut self, control: usize) -> Self {
        self.controls.push(control);
        self
    }

    pub fn inverse(&self) -> Self {
        Self { kind: self.kind.inverse(), targets: self.targets.clone(), controls: self.controls.clone() }
    }

    pub fn is_controlled(&self) -> bool {
        !self.controls.is_empty()
    }

    /// Applies `map` to every target and control index.
    pub fn relabel(&self, map: impl Fn(usize) -> usize) -> Self {
        Self {
            kind: self.kind,
            targets: self.targets.iter().map(|&q| map(q)).collect(),
            controls: self.controls.iter().map(|&q| map(q)).collect(),
        }
    }

    pub fn validate(&self, width: usize) -> Result<()> {
        if self.targets.len() != self.kind.arity() {
            return Err(Error::TargetArity {
                kind: self.kind.name(),
                expected: self.kind.arity(),
                got: self.targets.len(),
            });
        }
        let mut seen = 0u64;
        for &q in self.targets.iter().chain(&self.controls) {
            if q >= width {
                return Err(Error::QubitOutOfRange { qubit: q, width });
            }
            if seen & (1 << q) != 0 {
                return Err(Error::DuplicateQubit(q));
            }
            seen |= 1 << q;
        }
        Ok(())
    }
}

fn join(qs: &[usize]) -> String {
    qs.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(",")
}

/// `KIND(params) targets [controls]`; real parameters use 12 significant digits.
impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.kind.name())?;
        match self.kind {
            GateKind::Phase(v) | GateKind::Scatter(v) => write!(f, "({v:.11e})")?,
            GateKind::FCnot(t) => write!(f, "({t})")?,
            _ => {}
        }
        write!(f, " {}", join(&self.targets))?;
        if self.is_controlled() {
            write!(f, " [{}]", join(&self.controls))?;
        }
        Ok(())
    }
}

/// Ordered gate list over a fixed number of qubits.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Circuit {
    width: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(width: usize) -> Self {
        Self { width, gates: Vec::new() }
    }

    pub fn from_gates(width: usize, gates: Vec<Gate>) -> Result<Self> {
        let mut c = Self::new(width);
        for g in gates {
            c.push(g)?;
        }
        Ok(c)
    }

    pub fn push(&mut self, gate: Gate) -> Result<()> {
        gate.validate(self.width)?;
        self.gates.push(gate);
        Ok(())
    }

    /// Appends every gate of `other`, which must not be wider than `self`.
    pub fn append(&mut self, other: &Circuit) -> Result<()> {
        for g in &other.gates {
            self.push(g.clone())?;
        }
        Ok(())
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// Reversed gate order with each gate inverted.
    pub fn inverse(&self) -> Self {
        Self { width: self.width, gates: self.gates.iter().rev().map(Gate::inverse).collect() }
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.gates {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}
