//! Report construction for each subcommand, kept separate from argument
//! parsing and file output so the reports can be built and checked in-process.

use serde::Serialize;

use super::args::{
    CompileArgs, CountArgs, EvolveArgs, MixingScanArgs, SwapArg, SystemArg, TimeavgArgs, VerifyArgs, WalkArgs,
};
use super::output::{sci, CsvText};
use super::CliError;
use crate::circuit::{
    classical_one_query_bound, fit_quadratic, gate_count, qlga_step_circuit_with, run_dj, verify_against_dense_with,
    DjOutcome, GateCountReport, QuadraticFit, StepOptions, TruthTable, VerifyPoint, MAX_VERIFY_QUBITS, QUERY,
};
use crate::circuit::{dj_circuit, StateVector};
use crate::dist::Distribution;
use crate::lattice::{InitialState, LatticeSize, QlgaState, ScatterAngle};
use crate::mixing::{
    classical_mixing_time_from, default_t_max, fit_reports, quantum_mixing_time, sweep, CesaroAverage, MixingReport,
    QuantumWalk, ScalingFit,
};
use crate::walk::{endpoint_histogram, markov_evolve};

fn invalid(e: impl std::fmt::Display) -> CliError {
    CliError::Invalid(e.to_string())
}

fn lattice(n: usize) -> Result<LatticeSize, CliError> {
    LatticeSize::new(n).map_err(invalid)
}

fn check_epsilon(eps: f64) -> Result<(), CliError> {
    if eps > 0.0 && eps <= 1.0 {
        Ok(())
    } else {
        Err(invalid(format!("epsilon must lie in (0, 1], got {eps}")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvolveRow {
    pub t: u64,
    pub x: usize,
    pub p: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvolutionDump {
    #[serde(rename = "N")]
    pub n: usize,
    pub s: f64,
    pub init: InitialState,
    pub steps: u64,
    pub rows: Vec<EvolveRow>,
}

impl EvolutionDump {
    pub fn to_csv(&self) -> String {
        let mut c = CsvText::default();
        c.meta("command", "evolve")
            .meta("N", self.n)
            .meta("s", sci(self.s))
            .meta("init", self.init)
            .meta("steps", self.steps)
            .row(["t", "x", "p"]);
        for r in &self.rows {
            c.row([r.t.to_string(), r.x.to_string(), sci(r.p)]);
        }
        c.finish()
    }
}

pub fn evolve(args: &EvolveArgs) -> Result<EvolutionDump, CliError> {
    let size = lattice(args.lattice_size)?;
    let init = args.init.initial_state();
    let mut state = QlgaState::prepare(size, init).map_err(invalid)?;
    let m = ScatterAngle(args.scatter_angle).matrix();
    let n = size.get();
    let mut rows = Vec::with_capacity(n * (args.steps as usize + 1));
    for t in 0..=args.steps {
        if t > 0 {
            state.step_mut(m);
        }
        let p = state.position_distribution();
        rows.extend(p.as_slice().iter().enumerate().map(|(x, &p)| EvolveRow { t, x, p }));
    }
    Ok(EvolutionDump { n, s: args.scatter_angle, init, steps: args.steps, rows })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TimeavgPoint {
    #[serde(rename = "T")]
    pub horizon: u64,
    pub tv: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TimeavgReport {
    #[serde(rename = "N")]
    pub n: usize,
    pub s: f64,
    pub init: InitialState,
    pub points: Vec<TimeavgPoint>,
}

impl TimeavgReport {
    pub fn to_csv(&self) -> String {
        let mut c = CsvText::default();
        c.meta("command", "timeavg").meta("N", self.n).meta("s", sci(self.s)).meta("init", self.init).row(["T", "tv"]);
        for p in &self.points {
            c.row([p.horizon.to_string(), sci(p.tv)]);
        }
        c.finish()
    }
}

/// `round(10^{k/per_decade})` for `k = 0, 1, …`, deduplicated, capped by and ending at `last`.
pub fn geometric_horizons(last: u64, per_decade: u32) -> Vec<u64> {
    let mut out: Vec<u64> = Vec::new();
    for k in 0.. {
        let t = 10f64.powf(k as f64 / per_decade as f64).round() as u64;
        if t >= last {
            break;
        }
        if out.last() != Some(&t) {
            out.push(t);
        }
    }
    out.push(last);
    out
}

pub fn timeavg(args: &TimeavgArgs) -> Result<TimeavgReport, CliError> {
    let size = lattice(args.lattice_size)?;
    if args.steps == 0 {
        return Err(invalid("steps must be positive"));
    }
    if args.points_per_decade == 0 {
        return Err(invalid("points-per-decade must be positive"));
    }
    let init = args.init.initial_state();
    let state = QlgaState::prepare(size, init).map_err(invalid)?;
    let mut avg = CesaroAverage::new(QuantumWalk::new(state, ScatterAngle(args.scatter_angle)));
    let mut points = Vec::new();
    for horizon in geometric_horizons(args.steps, args.points_per_decade) {
        while avg.terms() < horizon {
            avg.push();
        }
        points.push(TimeavgPoint { horizon, tv: avg.tv_to_uniform().expect("horizon is positive") });
    }
    Ok(TimeavgReport { n: size.get(), s: args.scatter_angle, init, points })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub reports: Vec<MixingReport>,
    /// Absent when fewer than three sizes reached ε.
    pub fit: Option<ScalingFit>,
}

impl SweepReport {
    fn new(reports: Vec<MixingReport>) -> Self {
        let fit = fit_reports(&reports).ok();
        Self { reports, fit }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MixingScanReport {
    pub epsilon: f64,
    pub s: f64,
    pub init: InitialState,
    pub quantum: Option<SweepReport>,
    pub classical: Option<SweepReport>,
}

impl MixingScanReport {
    pub fn to_csv(&self) -> String {
        let mut c = CsvText::default();
        c.meta("command", "mixing-scan").meta("epsilon", sci(self.epsilon)).meta("s", sci(self.s)).meta("init", self.init);
        let sweeps = [("quantum", &self.quantum), ("classical", &self.classical)];
        for (name, sweep) in sweeps {
            if let Some(fit) = sweep.as_ref().and_then(|s| s.fit.as_ref()) {
                c.meta(&format!("{name}_slope"), sci(fit.slope)).meta(&format!("{name}_r2"), sci(fit.r2));
            }
        }
        c.row(["system", "N", "t_mix", "t_max"]);
        for (name, sweep) in sweeps {
            for r in sweep.iter().flat_map(|s| &s.reports) {
                let t_mix = r.t_mix.map(|t| t.to_string()).unwrap_or_default();
                c.row([name.to_string(), r.lattice_size.to_string(), t_mix, r.t_max.to_string()]);
            }
        }
        c.finish()
    }
}

pub fn mixing_scan(args: &MixingScanArgs) -> Result<MixingScanReport, CliError> {
    check_epsilon(args.epsilon)?;
    if args.t_max == Some(0) {
        return Err(invalid("t-max must be positive"));
    }
    let init = args.init.initial_state();
    let sizes = args.lattice_sizes.iter().map(|&n| lattice(n)).collect::<Result<Vec<_>, _>>()?;
    // Prepare every start up front so bad inputs fail before any sweep runs.
    let starts = sizes
        .iter()
        .map(|&size| QlgaState::prepare(size, init).map(|q| (size.get(), q.position_distribution())))
        .collect::<Result<Vec<_>, _>>()
        .map_err(invalid)?;
    let t_max = |size: LatticeSize| args.t_max.unwrap_or_else(|| default_t_max(size));
    let s = ScatterAngle(args.scatter_angle);

    let quantum = match args.system {
        SystemArg::Quantum | SystemArg::Both => Some(SweepReport::new(
            sweep(&sizes, |size| quantum_mixing_time(size, s, init, args.epsilon, t_max(size))).map_err(invalid)?,
        )),
        SystemArg::Classical => None,
    };
    let classical = match args.system {
        SystemArg::Classical | SystemArg::Both => Some(SweepReport::new(
            sweep(&sizes, |size| {
                let start = &starts.iter().find(|(n, _)| *n == size.get()).expect("prepared above").1;
                classical_mixing_time_from(start, args.epsilon, t_max(size))
            })
            .map_err(invalid)?,
        )),
        SystemArg::Quantum => None,
    };
    Ok(MixingScanReport { epsilon: args.epsilon, s: args.scatter_angle, init, quantum, classical })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WalkPoint {
    pub x: usize,
    pub empirical: f64,
    pub exact: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WalkReport {
    #[serde(rename = "N")]
    pub n: usize,
    pub steps: u64,
    pub x0: usize,
    pub samples: u64,
    pub seed: u64,
    pub tv: f64,
    pub points: Vec<WalkPoint>,
}

impl WalkReport {
    pub fn to_csv(&self) -> String {
        let mut c = CsvText::default();
        c.meta("command", "walk")
            .meta("N", self.n)
            .meta("steps", self.steps)
            .meta("x0", self.x0)
            .meta("samples", self.samples)
            .meta("seed", self.seed)
            .meta("tv", sci(self.tv))
            .row(["x", "empirical", "exact"]);
        for p in &self.points {
            c.row([p.x.to_string(), sci(p.empirical), sci(p.exact)]);
        }
        c.finish()
    }
}

pub fn walk(args: &WalkArgs) -> Result<WalkReport, CliError> {
    let size = lattice(args.lattice_size)?;
    if args.samples == 0 {
        return Err(invalid("samples must be positive"));
    }
    let end = args.seed.checked_add(args.samples).ok_or_else(|| invalid("seed + samples overflows"))?;
    let exact = markov_evolve(&Distribution::delta(size.get(), args.x0).map_err(invalid)?, args.steps);
    let empirical = endpoint_histogram(size, args.x0, args.steps, args.seed..end).map_err(invalid)?;
    let tv = empirical.tv_distance(&exact).map_err(invalid)?;
    let points = (0..size.get())
        .map(|x| WalkPoint { x, empirical: empirical[x], exact: exact[x] })
        .collect();
    Ok(WalkReport { n: size.get(), steps: args.steps, x0: args.x0, samples: args.samples, seed: args.seed, tv, points })
}

pub fn step_options(c: &CompileArgs) -> StepOptions {
    StepOptions { swaps: c.swaps.into(), merge_transforms: c.merge_transforms }
}

fn swap_name(s: SwapArg) -> &'static str {
    match s {
        SwapArg::Explicit => "explicit",
        SwapArg::Relabeled => "relabeled",
    }
}

fn check_qubit_range(min: usize, max: usize, cap: usize) -> Result<(), CliError> {
    if min == 0 || min > max || max > cap {
        return Err(invalid(format!("qubit range must satisfy 1 <= min <= max <= {cap}, got {min}..={max}")));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub tolerance: f64,
    pub swaps: &'static str,
    pub merge_transforms: bool,
    pub points: Vec<VerifyPoint>,
    pub max_error: f64,
    pub passed: bool,
}

impl VerifyReport {
    pub fn to_csv(&self) -> String {
        let mut c = CsvText::default();
        c.meta("command", "circuit verify")
            .meta("tolerance", sci(self.tolerance))
            .meta("swaps", self.swaps)
            .meta("merge_transforms", self.merge_transforms)
            .meta("passed", self.passed)
            .row(["n", "s", "max_error"]);
        for p in &self.points {
            c.row([p.n.to_string(), sci(p.s), sci(p.max_error)]);
        }
        c.finish()
    }
}

pub fn verify(args: &VerifyArgs) -> Result<VerifyReport, CliError> {
    check_qubit_range(args.min_qubits, args.max_qubits, MAX_VERIFY_QUBITS)?;
    if args.scatter_angles.is_empty() {
        return Err(invalid("at least one scatter angle is required"));
    }
    if args.tolerance.is_nan() || args.tolerance < 0.0 {
        return Err(invalid("tolerance must be non-negative"));
    }
    let options = step_options(&args.compile);
    let mut points = Vec::new();
    for n in args.min_qubits..=args.max_qubits {
        for &s in &args.scatter_angles {
            let max_error = verify_against_dense_with(n, s, options).map_err(invalid)?;
            points.push(VerifyPoint { n, s, max_error });
        }
    }
    let max_error = points.iter().map(|p| p.max_error).fold(0.0, f64::max);
    Ok(VerifyReport {
        tolerance: args.tolerance,
        swaps: swap_name(args.compile.swaps),
        merge_transforms: args.compile.merge_transforms,
        points,
        max_error,
        passed: max_error <= args.tolerance,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CountRow {
    pub n: usize,
    pub counts: GateCountReport,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CountReport {
    pub s: f64,
    pub swaps: &'static str,
    pub merge_transforms: bool,
    pub rows: Vec<CountRow>,
    /// Quadratic through the first three rows; absent with fewer rows.
    pub fit: Option<QuadraticFit>,
    pub exact_quadratic: bool,
}

impl CountReport {
    pub fn to_csv(&self) -> String {
        let mut kinds: Vec<&String> = self.rows.iter().flat_map(|r| r.counts.by_kind.keys()).collect();
        kinds.sort();
        kinds.dedup();
        let mut c = CsvText::default();
        c.meta("command", "circuit count")
            .meta("s", sci(self.s))
            .meta("swaps", self.swaps)
            .meta("merge_transforms", self.merge_transforms);
        if let Some(f) = &self.fit {
            c.meta("fit_a", sci(f.a)).meta("fit_b", sci(f.b)).meta("fit_c", sci(f.c));
        }
        c.meta("exact_quadratic", self.exact_quadratic);
        let mut header = vec!["n".to_string(), "total".into(), "controlled".into(), "swap_cnot_equivalent".into()];
        header.extend(kinds.iter().map(|k| k.to_string()));
        header.push("residual".into());
        c.row(header);
        for (i, r) in self.rows.iter().enumerate() {
            let mut cells = vec![
                r.n.to_string(),
                r.counts.total.to_string(),
                r.counts.controlled.to_string(),
                r.counts.swap_cnot_equivalent.to_string(),
            ];
            cells.extend(kinds.iter().map(|k| r.counts.get(k).to_string()));
            cells.push(self.fit.as_ref().map(|f| sci(f.residuals[i])).unwrap_or_default());
            c.row(cells);
        }
        c.finish()
    }
}

/// Largest width the count command will build.
pub const MAX_COUNT_QUBITS: usize = 24;

pub fn count(args: &CountArgs) -> Result<CountReport, CliError> {
    check_qubit_range(args.min_qubits, args.max_qubits, MAX_COUNT_QUBITS)?;
    let options = step_options(&args.compile);
    let rows = (args.min_qubits..=args.max_qubits)
        .map(|n| {
            qlga_step_circuit_with(n, args.scatter_angle, options).map(|c| CountRow { n, counts: gate_count(&c) })
        })
        .collect::<Result<Vec<_>, _>>()
        .map_err(invalid)?;
    let pairs: Vec<(usize, usize)> = rows.iter().map(|r| (r.n, r.counts.total)).collect();
    let fit = fit_quadratic(&pairs);
    let exact_quadratic = fit.as_ref().is_some_and(QuadraticFit::is_exact);
    Ok(CountReport {
        s: args.scatter_angle,
        swaps: swap_name(args.compile.swaps),
        merge_transforms: args.compile.merge_transforms,
        rows,
        fit,
        exact_quadratic,
    })
}

fn truth_label(f: TruthTable) -> String {
    format!("f=({},{})", u8::from(f.eval(false)), u8::from(f.eval(true)))
}

/// Text report of the XOR demonstration, and whether every run was exact.
pub fn dj_text(shots: usize, seed: u64) -> Result<(String, bool), CliError> {
    let mut text = String::new();
    let mut all_correct = true;
    for f in TruthTable::ALL {
        let out: DjOutcome = run_dj(f).map_err(invalid)?;
        all_correct &= out.is_correct(1e-12);
        text.push_str(&format!(
            "{}: output {}, probability {:.6} (P0={:.6}, P1={:.6})\n",
            truth_label(f),
            out.output,
            out.probability,
            (1.0 - out.p_one).clamp(0.0, 1.0),
            out.p_one.clamp(0.0, 1.0)
        ));
        if shots > 0 {
            let mut v = StateVector::zero(2);
            v.apply_circuit(&dj_circuit(f)).map_err(invalid)?;
            let ones = v.sample_qubit(QUERY, shots, seed).iter().filter(|&&b| b).count();
            text.push_str(&format!("  sampled {shots} shots: {} zeros, {ones} ones\n", shots - ones));
        }
    }
    text.push_str(&format!("max classical 1-query success = {}\n", classical_one_query_bound()));
    Ok((text, all_correct))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn horizon_grid() {
        assert_eq!(geometric_horizons(1, 10), vec![1]);
        assert_eq!(geometric_horizons(10, 4), vec![1, 2, 3, 6, 10]);
        let g = geometric_horizons(10_000, 10);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(*g.last().unwrap(), 10_000);
    }

    #[test]
    fn dj_report_lines() {
        let (text, ok) = dj_text(0, 0).unwrap();
        assert!(ok);
        assert!(text.contains("f=(0,0): output 0, probability 1.000000"));
        assert!(text.contains("f=(1,0): output 1, probability 1.000000"));
        assert!(text.ends_with("max classical 1-query success = 0.5\n"));
    }
}
