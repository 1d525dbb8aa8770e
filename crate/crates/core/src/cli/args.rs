use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, FRAC_PI_8};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::circuit::SwapMode;
use crate::lattice::{InitialState, Velocity};

/// Decimal radians, or one of `pi/2`, `pi/4`, `pi/8`.
pub fn parse_angle(s: &str) -> Result<f64, String> {
    let v = match s.trim() {
        "pi/2" => FRAC_PI_2,
        "pi/4" => FRAC_PI_4,
        "pi/8" => FRAC_PI_8,
        other => other
            .parse::<f64>()
            .map_err(|_| format!("invalid angle '{s}': expected radians or one of pi/2, pi/4, pi/8"))?,
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("invalid angle '{s}': not finite"))
    }
}

pub fn parse_velocity(s: &str) -> Result<Velocity, String> {
    match s {
        "+1" | "1" | "right" => Ok(Velocity::Right),
        "-1" | "left" => Ok(Velocity::Left),
        _ => Err(format!("invalid velocity '{s}': expected +1 or -1")),
    }
}

#[derive(Debug, Parser)]
#[command(name = "qlga", version, about = "Quantum lattice gas automaton experiments")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dump P_t(x) for t = 0..=steps.
    Evolve(EvolveArgs),
    /// TV distance of the time average to uniform on a geometric grid of horizons.
    Timeavg(TimeavgArgs),
    /// Mixing times over a list of lattice sizes with a log-log fit.
    MixingScan(MixingScanArgs),
    /// Sample classical walkers and compare their endpoints with the exact chain.
    Walk(WalkArgs),
    /// Compile and check the gate-level timestep.
    #[command(subcommand)]
    Circuit(CircuitCommand),
    /// One-query XOR demonstration for all four one-bit functions.
    Dj(DjArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InitKind {
    Delta,
    Symmetric,
    Gaussian,
    Uniform,
}

#[derive(Debug, Clone, Args)]
pub struct InitArgs {
    #[arg(long, value_enum, default_value = "symmetric")]
    pub init: InitKind,
    #[arg(long, default_value_t = 0)]
    pub x0: usize,
    /// Starting velocity for `--init delta` (+1 or -1).
    #[arg(long, value_parser = parse_velocity, default_value = "+1", allow_hyphen_values = true)]
    pub velocity: Velocity,
    /// Envelope width for `--init gaussian`.
    #[arg(long, default_value_t = 2.0)]
    pub width: f64,
    /// Wavenumber for `--init gaussian`.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub momentum: f64,
}

impl InitArgs {
    pub fn initial_state(&self) -> InitialState {
        match self.init {
            InitKind::Delta => InitialState::Delta { x0: self.x0, velocity: self.velocity },
            InitKind::Symmetric => InitialState::Symmetric { x0: self.x0 },
            InitKind::Gaussian => InitialState::Gaussian { x0: self.x0, width: self.width, momentum: self.momentum },
            InitKind::Uniform => InitialState::Uniform,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Destination file; standard output when omitted.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
pub struct EvolveArgs {
    #[arg(long)]
    pub lattice_size: usize,
    #[arg(long, value_parser = parse_angle, allow_hyphen_values = true)]
    pub scatter_angle: f64,
    #[arg(long)]
    pub steps: u64,
    #[command(flatten)]
    pub init: InitArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct TimeavgArgs {
    #[arg(long)]
    pub lattice_size: usize,
    #[arg(long, value_parser = parse_angle, allow_hyphen_values = true)]
    pub scatter_angle: f64,
    /// Largest horizon T.
    #[arg(long)]
    pub steps: u64,
    /// Grid density of the reported horizons.
    #[arg(long, default_value_t = 10)]
    pub points_per_decade: u32,
    #[command(flatten)]
    pub init: InitArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SystemArg {
    Quantum,
    Classical,
    Both,
}

#[derive(Debug, Args)]
pub struct MixingScanArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    pub lattice_sizes: Vec<usize>,
    #[arg(long, value_enum, default_value = "both")]
    pub system: SystemArg,
    #[arg(long, value_parser = parse_angle, default_value = "pi/4", allow_hyphen_values = true)]
    pub scatter_angle: f64,
    #[arg(long, default_value_t = crate::mixing::DEFAULT_EPSILON)]
    pub epsilon: f64,
    /// Horizon cap; 50·N² per size when omitted.
    #[arg(long)]
    pub t_max: Option<u64>,
    #[command(flatten)]
    pub init: InitArgs,
    #[command(flatten)]
    pub out: OutputArgs,
    /// Additional CSV table of the per-size results.
    #[arg(long)]
    pub csv_output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct WalkArgs {
    #[arg(long)]
    pub lattice_size: usize,
    #[arg(long)]
    pub steps: u64,
    #[arg(long, default_value_t = 0)]
    pub x0: usize,
    #[arg(long, default_value_t = 10_000)]
    pub samples: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SwapArg {
    Explicit,
    Relabeled,
}

impl From<SwapArg> for SwapMode {
    fn from(s: SwapArg) -> Self {
        match s {
            SwapArg::Explicit => SwapMode::Explicit,
            SwapArg::Relabeled => SwapMode::Relabeled,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct CompileArgs {
    #[arg(long, value_enum, default_value = "relabeled")]
    pub swaps: SwapArg,
    /// Cancel the adjacent transform pair inside the timestep.
    #[arg(long)]
    pub merge_transforms: bool,
}

#[derive(Debug, Subcommand)]
pub enum CircuitCommand {
    /// Max entrywise error against the dense lattice operator over an (n, s) grid.
    Verify(VerifyArgs),
    /// Gate counts over a qubit range with an interpolating quadratic.
    Count(CountArgs),
    /// Print the timestep circuit, one gate per line.
    Print(PrintArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 1)]
    pub min_qubits: usize,
    #[arg(long, default_value_t = 5)]
    pub max_qubits: usize,
    #[arg(long, value_delimiter = ',', value_parser = parse_angle, default_value = "0,pi/8,pi/4,1.0")]
    pub scatter_angles: Vec<f64>,
    #[arg(long, default_value_t = 1e-10)]
    pub tolerance: f64,
    #[command(flatten)]
    pub compile: CompileArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long, default_value_t = 2)]
    pub min_qubits: usize,
    #[arg(long, default_value_t = 12)]
    pub max_qubits: usize,
    #[arg(long, value_parser = parse_angle, default_value = "pi/4", allow_hyphen_values = true)]
    pub scatter_angle: f64,
    #[command(flatten)]
    pub compile: CompileArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct PrintArgs {
    #[arg(long)]
    pub qubits: usize,
    #[arg(long, value_parser = parse_angle, default_value = "pi/4", allow_hyphen_values = true)]
    pub scatter_angle: f64,
    #[command(flatten)]
    pub compile: CompileArgs,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DjArgs {
    /// Also sample the query qubit this many times per function.
    #[arg(long, default_value_t = 0)]
    pub shots: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}
