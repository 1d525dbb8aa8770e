use thiserror::Error;

/// Errors produced while building or evolving states, distributions and circuits.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("lattice size must be at least 2, got {0}")]
    LatticeTooSmall(usize),
    #[error("lattice size {0} is not a power of two")]
    NotPowerOfTwo(usize),
    #[error("site {site} is outside the lattice 0..{size}")]
    SiteOutOfRange { site: usize, size: usize },
    #[error("wave packet width must be positive, got {0}")]
    NonPositiveWidth(f64),
    #[error("state is not normalized: squared norm {0}")]
    NotNormalized(f64),
    #[error("distribution is invalid: {0}")]
    InvalidDistribution(String),
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("matrix is not unitary: max |U^dag U - I| = {0:e}")]
    NotUnitary(f64),
    #[error("epsilon must lie in (0, 1], got {0}")]
    InvalidEpsilon(f64),
    #[error("horizon must be at least 1")]
    ZeroHorizon,
    #[error("scaling fit needs at least 3 points, got {0}")]
    TooFewPoints(usize),
    #[error("scaling fit needs positive coordinates, got ({0}, {1})")]
    NonPositivePoint(f64, f64),
    #[error("qubit {qubit} out of range for width {width}")]
    QubitOutOfRange { qubit: usize, width: usize },
    #[error("gate uses qubit {0} more than once")]
    DuplicateQubit(usize),
    #[error("gate {kind} expects {expected} targets, got {got}")]
    TargetArity { kind: &'static str, expected: usize, got: usize },
    #[error("circuit width {circuit} does not match state width {state}")]
    WidthMismatch { circuit: usize, state: usize },
    #[error("qubit count must be at least 1")]
    NoQubits,
    #[error("qubit count {0} outside the verification range 1..=6")]
    VerifyRange(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
