//! Command-line front end: every analysis in the crate is reachable as a
//! subcommand emitting a machine-readable CSV or JSON report.
//!
//! Output is deterministic: the same configuration produces byte-identical
//! reports, and every floating-point value is serialized with 17 significant
//! digits (lossless for binary64).

use crate::analysis::{
    cross_net_check, interval_net_check, plunge_counts, trace_check, trace_k_max, NetReport,
    PlungeReport,
};
use crate::asymptotics::{transition_point, AsymptoticReport, Regime};
use crate::error::{Error, Result};
use crate::prolate::{compute_prolate, eigenfunction_on_big_interval, prolate_eval};
use crate::spectrum::{spectrum_table, SpectrumTable};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NetDomainArg {
    Interval,
    Cross,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RegimeArg {
    /// sigma_k against the small-bandwidth law
    SmallSigma,
    /// |lambda_k| against the small-bandwidth law
    SmallLambda,
    /// 1 - sigma_k against the large-bandwidth deficit law
    Deficit,
    /// sigma at the transition index against (1 + e^(pi b))^(-1)
    Transition,
}

#[derive(Debug, Clone, Args)]
pub struct OutputOpts {
    /// Report format (default: csv for spectrum/eigenfunction, json otherwise)
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
    /// Write the report to a file instead of standard output
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// `start:stop:step` sweep of the bandwidth parameter.
#[derive(Debug, Clone)]
pub struct AGrid {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl AGrid {
    pub fn points(&self) -> Vec<f64> {
        let mut out = Vec::new();
        let mut i = 0usize;
        loop {
            let a = self.start + self.step * i as f64;
            if a > self.stop + 1e-9 * self.step {
                break;
            }
            out.push(a);
            i += 1;
        }
        out
    }
}

fn parse_a_grid(s: &str) -> std::result::Result<AGrid, String> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("expected start:stop:step, got {s:?}"));
    }
    let nums: Vec<f64> = parts
        .iter()
        .map(|p| p.parse::<f64>().map_err(|e| format!("bad number {p:?}: {e}")))
        .collect::<std::result::Result<_, _>>()?;
    let (start, stop, step) = (nums[0], nums[1], nums[2]);
    if !(step > 0.0) || stop < start {
        return Err("grid needs step > 0 and stop >= start".into());
    }
    Ok(AGrid { start, stop, step })
}

#[derive(Debug, Clone, Args)]
pub struct BandwidthArg {
    /// Single bandwidth value
    #[arg(long, conflicts_with = "a_grid")]
    pub a: Option<f64>,
    /// Bandwidth sweep start:stop:step; one record per grid point
    #[arg(long = "a-grid", value_parser = parse_a_grid)]
    pub a_grid: Option<AGrid>,
}

impl BandwidthArg {
    fn points(&self) -> std::result::Result<Vec<f64>, String> {
        match (&self.a, &self.a_grid) {
            (Some(a), None) => Ok(vec![*a]),
            (None, Some(g)) => Ok(g.points()),
            _ => Err("exactly one of --a and --a-grid is required".into()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "prolate",
    version,
    about = "Spectrum of the Fourier operator truncated to [-a, a]",
    after_help = "Exit status: 0 success, 1 computation failure, 2 usage error."
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eigenvalue table: gamma_k, mu_k, sigma_k and lambda_k for one bandwidth
    Spectrum {
        #[arg(long)]
        a: f64,
        #[arg(long = "k-max", default_value_t = 20)]
        k_max: usize,
        /// Cross-check sigma against the Nystrom discretization
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Sample g_k(t, a) and e_k(a t, a) on a uniform grid over [-1, 1]
    Eigenfunction {
        #[arg(long)]
        a: f64,
        #[arg(long)]
        k: usize,
        #[arg(long = "grid-size", default_value_t = 201)]
        grid_size: usize,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Computed spectrum against a closed-form asymptotic law
    Asymptotics {
        #[arg(long, value_enum)]
        regime: RegimeArg,
        #[arg(long)]
        a: f64,
        #[arg(long = "k-max", default_value_t = 5)]
        k_max: usize,
        /// b values for the transition regime (comma separated)
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        b: Option<Vec<f64>>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Eigenvalue counts near 1, near 0 and in the plunge, with their bounds
    Plunge {
        #[command(flatten)]
        bandwidth: BandwidthArg,
        #[arg(long)]
        epsilon: f64,
        /// Table size; default ceil(2 a^2 / pi) + 40 per grid point
        #[arg(long = "k-max")]
        k_max: Option<usize>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// kappa-net coverage of [0, 1] by sigma or of the cross by lambda
    Net {
        #[command(flatten)]
        bandwidth: BandwidthArg,
        #[arg(long)]
        kappa: f64,
        #[arg(long, value_enum, default_value_t = NetDomainArg::Interval)]
        domain: NetDomainArg,
        #[arg(long = "k-max", default_value_t = 80)]
        k_max: usize,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Trace identities and the sigma(1 - sigma) bound
    Trace {
        #[arg(long)]
        a: f64,
        /// Table size; default ceil(2 a^2 / pi) + 40
        #[arg(long = "k-max")]
        k_max: Option<usize>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Transition point k(a, b) with the implicit-equation root delta
    Slepian {
        #[arg(long)]
        a: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        b: f64,
        #[command(flatten)]
        out: OutputOpts,
    },
}

#[derive(Debug)]
pub enum CliError {
    /// Rejected before any computation started; exit status 2.
    Usage(String),
    /// Computation failed; exit status 1.
    Failed(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Failed(e)
    }
}

/// Parse the process arguments and run; returns the process exit status.
pub fn main_entry() -> i32 {
    let config = RunConfig::parse();
    match run(config) {
        Ok(()) => 0,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CliError::Failed(e)) => {
            eprintln!("error: {e}");
            1
        }
    }
}

// 17-significant-digit JSON: serde_json with write_f64 overridden.
struct SciFormatter;

impl serde_json::ser::Formatter for SciFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> std::io::Result<()>
    where
        W: ?Sized + std::io::Write,
    {
        if value.is_finite() {
            write!(writer, "{value:.16e}")
        } else {
            writer.write_all(b"null")
        }
    }
}

/// Serialize a report to JSON with 17 significant digits on every float.
pub fn to_json(value: &impl Serialize) -> Result<String> {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, SciFormatter);
    value
        .serialize(&mut ser)
        .map_err(|e| Error::Numerical(format!("serialization failed: {e}")))?;
    String::from_utf8(buf).map_err(|e| Error::Numerical(format!("non-utf8 report: {e}")))
}

fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

fn emit(out: &OutputOpts, content: &str) -> Result<()> {
    match &out.output {
        Some(path) => {
            let mut f = std::fs::File::create(path)?;
            f.write_all(content.as_bytes())?;
            Ok(())
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(content.as_bytes())?;
            Ok(())
        }
    }
}

fn format_or(out: &OutputOpts, default: OutputFormat) -> OutputFormat {
    out.format.unwrap_or(default)
}

/// JSON mirror of a spectrum table row.
#[derive(Debug, Serialize, Deserialize)]
pub struct SpectrumRow {
    pub k: usize,
    pub gamma: f64,
    pub mu: f64,
    pub sigma: f64,
    pub lambda_re: f64,
    pub lambda_im: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma_oracle: Option<f64>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub a: f64,
    pub k_max: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_agreement: Option<f64>,
    pub rows: Vec<SpectrumRow>,
}

fn spectrum_report(table: &SpectrumTable, oracle: Option<&[f64]>) -> SpectrumReport {
    let rows = table
        .entries
        .iter()
        .map(|e| SpectrumRow {
            k: e.k,
            gamma: e.gamma,
            mu: e.gamma / (table.a * table.a),
            sigma: e.sigma,
            lambda_re: e.lambda.re,
            lambda_im: e.lambda.im,
            sigma_oracle: oracle.map(|o| o[e.k]),
        })
        .collect();
    SpectrumReport {
        a: table.a,
        k_max: table.k_max,
        oracle_agreement: table.oracle_agreement,
        rows,
    }
}

fn spectrum_csv(report: &SpectrumReport) -> String {
    let mut s = String::new();
    if report.rows.iter().any(|r| r.sigma_oracle.is_some()) {
        s.push_str("k,gamma,mu,sigma,lambda_re,lambda_im,sigma_oracle\n");
    } else {
        s.push_str("k,gamma,mu,sigma,lambda_re,lambda_im\n");
    }
    for r in &report.rows {
        let _ = write!(
            s,
            "{},{},{},{},{},{}",
            r.k,
            fmt_f64(r.gamma),
            fmt_f64(r.mu),
            fmt_f64(r.sigma),
            fmt_f64(r.lambda_re),
            fmt_f64(r.lambda_im)
        );
        if let Some(o) = r.sigma_oracle {
            let _ = write!(s, ",{}", fmt_f64(o));
        }
        s.push('\n');
    }
    s
}

/// One sampled row of an eigenfunction dump; the two value columns are the
/// same function through two evaluation paths and must agree.
#[derive(Debug, Serialize, Deserialize)]
pub struct EigenfunctionRow {
    pub t: f64,
    pub g: f64,
    pub e: f64,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct EigenfunctionReport {
    pub a: f64,
    pub k: usize,
    pub rows: Vec<EigenfunctionRow>,
}

/// Sample (t, g_k(t, a), e_k(a t, a)) on a uniform grid over [-1, 1].
///
/// The columns are identical by the rescaling identity; both are emitted and
/// compared as a built-in self-check.
pub fn eigenfunction_dump(a: f64, k: usize, grid_size: usize) -> Result<EigenfunctionReport> {
    if grid_size < 2 {
        return Err(Error::Precondition(format!(
            "grid size {grid_size} must be at least 2"
        )));
    }
    let pfs = compute_prolate(a, k)?;
    let pf = &pfs[k];
    let mut rows = Vec::with_capacity(grid_size);
    for i in 0..grid_size {
        let t = -1.0 + 2.0 * i as f64 / (grid_size - 1) as f64;
        let t = t.clamp(-1.0, 1.0);
        let g = prolate_eval(pf, t)?;
        let e = if a > 0.0 {
            eigenfunction_on_big_interval(pf, a * t)?
        } else {
            g
        };
        if (g - e).abs() > 1e-14 * g.abs().max(1.0) {
            return Err(Error::Inconsistent(format!(
                "g_k and rescaled e_k disagree at t = {t}: {g} vs {e}"
            )));
        }
        rows.push(EigenfunctionRow { t, g, e });
    }
    Ok(EigenfunctionReport { a, k, rows })
}

fn eigenfunction_csv(report: &EigenfunctionReport) -> String {
    let mut s = String::from("t,g,e\n");
    for r in &report.rows {
        let _ = writeln!(s, "{},{},{}", fmt_f64(r.t), fmt_f64(r.g), fmt_f64(r.e));
    }
    s
}

fn asymptotics_csv(report: &AsymptoticReport) -> String {
    let mut s = String::from("index,a,computed,formula,ratio\n");
    for r in &report.rows {
        let _ = writeln!(
            s,
            "{},{},{},{},{}",
            fmt_f64(r.index),
            fmt_f64(r.a),
            fmt_f64(r.computed),
            fmt_f64(r.formula),
            fmt_f64(r.ratio)
        );
    }
    s
}

fn plunge_csv(reports: &[PlungeReport]) -> String {
    let mut s = String::from(
        "a,epsilon,n_above_eps,n_above_1m_eps,n_middle,zero_region_bound,\
         one_region_bound,middle_bound,transition_lo,transition_hi,transition_covered\n",
    );
    for r in reports {
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{},{},{},{},{}",
            fmt_f64(r.a),
            fmt_f64(r.epsilon),
            r.n_above_eps,
            r.n_above_1m_eps,
            r.n_middle,
            fmt_f64(r.zero_region_bound),
            fmt_f64(r.one_region_bound),
            fmt_f64(r.middle_bound),
            fmt_f64(r.transition_lo),
            fmt_f64(r.transition_hi),
            r.transition_covered
        );
    }
    s
}

#[derive(Debug, Serialize, Deserialize)]
pub struct NetRecord {
    pub a: f64,
    #[serde(flatten)]
    pub report: NetReport,
}

fn net_csv(records: &[NetRecord]) -> String {
    let mut s = String::from("a,kappa,domain,is_net,largest_gap,witness_arm,witness_position\n");
    for r in records {
        let domain = match r.report.domain {
            crate::analysis::NetDomain::UnitInterval => "unit_interval",
            crate::analysis::NetDomain::Cross => "cross",
        };
        let arm = r
            .report
            .witness
            .arm
            .map(|x| x.to_string())
            .unwrap_or_default();
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{}",
            fmt_f64(r.a),
            fmt_f64(r.report.kappa),
            domain,
            r.report.is_net,
            fmt_f64(r.report.largest_gap),
            arm,
            fmt_f64(r.report.witness.position)
        );
    }
    s
}

fn trace_csv(report: &crate::analysis::TraceReport) -> String {
    let mut s = String::from(
        "a,sum_sigma,target,sum_sigma_sq,lower_bound,itz_sum,itz_bound,\
         tail_estimate,tail_trusted,trace_ok,sum_sq_ok,itz_ok\n",
    );
    let _ = writeln!(
        s,
        "{},{},{},{},{},{},{},{},{},{},{},{}",
        fmt_f64(report.a),
        fmt_f64(report.sum_sigma),
        fmt_f64(report.target),
        fmt_f64(report.sum_sigma_sq),
        fmt_f64(report.lower_bound),
        fmt_f64(report.itz_sum),
        fmt_f64(report.itz_bound),
        fmt_f64(report.tail_estimate),
        report.tail_trusted,
        report.trace_ok,
        report.sum_sq_ok,
        report.itz_ok
    );
    s
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Execute one parsed command.
pub fn run(config: RunConfig) -> std::result::Result<(), CliError> {
    match config.command {
        Command::Spectrum {
            a,
            k_max,
            oracle,
            out,
        } => {
            if !(a > 0.0) {
                return Err(usage(format!("--a must be positive, got {a}")));
            }
            let mut table = spectrum_table(a, k_max, false)?;
            let oracle_vals = if oracle {
                let m = crate::spectrum::default_oracle_size(a, k_max);
                let vals = crate::spectrum::nystrom_sigma(a, k_max, m)?;
                table.oracle_agreement = Some(
                    table
                        .entries
                        .iter()
                        .zip(&vals)
                        .map(|(e, o)| (e.sigma - o).abs())
                        .fold(0.0f64, f64::max),
                );
                Some(vals)
            } else {
                None
            };
            let report = spectrum_report(&table, oracle_vals.as_deref());
            let content = match format_or(&out, OutputFormat::Csv) {
                OutputFormat::Csv => spectrum_csv(&report),
                OutputFormat::Json => to_json(&report).map_err(CliError::Failed)? + "\n",
            };
            emit(&out, &content).map_err(CliError::Failed)
        }
        Command::Eigenfunction {
            a,
            k,
            grid_size,
            out,
        } => {
            if !(a >= 0.0) {
                return Err(usage(format!("--a must be nonnegative, got {a}")));
            }
            if grid_size < 2 {
                return Err(usage(format!("--grid-size must be at least 2, got {grid_size}")));
            }
            let report = eigenfunction_dump(a, k, grid_size)?;
            let content = match format_or(&out, OutputFormat::Csv) {
                OutputFormat::Csv => eigenfunction_csv(&report),
                OutputFormat::Json => to_json(&report).map_err(CliError::Failed)? + "\n",
            };
            emit(&out, &content).map_err(CliError::Failed)
        }
        Command::Asymptotics {
            regime,
            a,
            k_max,
            b,
            out,
        } => {
            if !(a > 0.0) {
                return Err(usage(format!("--a must be positive, got {a}")));
            }
            let report = match regime {
                RegimeArg::SmallSigma | RegimeArg::SmallLambda | RegimeArg::Deficit => {
                    let table = spectrum_table(a, k_max, false)?;
                    match regime {
                        RegimeArg::SmallSigma => AsymptoticReport::small_a_sigma(&table)?,
                        RegimeArg::SmallLambda => AsymptoticReport::small_a_lambda(&table)?,
                        _ => AsymptoticReport::large_a_deficit(&table)?,
                    }
                }
                RegimeArg::Transition => {
                    if !(a > 0.5) {
                        return Err(usage(format!("transition regime needs --a > 0.5, got {a}")));
                    }
                    let bs = b.unwrap_or_else(|| vec![-2.0, -1.0, 0.0, 1.0, 2.0]);
                    let k_hi = bs
                        .iter()
                        .map(|&b| crate::asymptotics::transition_index(a, b))
                        .collect::<Result<Vec<_>>>()?
                        .into_iter()
                        .max()
                        .unwrap_or(0);
                    let table = spectrum_table(a, k_hi.max(k_max), false)?;
                    AsymptoticReport::transition(&table, &bs)?
                }
            };
            debug_assert_eq!(
                std::mem::discriminant(&report.regime),
                std::mem::discriminant(&match regime {
                    RegimeArg::SmallSigma => Regime::SmallASigma,
                    RegimeArg::SmallLambda => Regime::SmallALambda,
                    RegimeArg::Deficit => Regime::LargeADeficit,
                    RegimeArg::Transition => Regime::Transition,
                })
            );
            let content = match format_or(&out, OutputFormat::Json) {
                OutputFormat::Csv => asymptotics_csv(&report),
                OutputFormat::Json => to_json(&report).map_err(CliError::Failed)? + "\n",
            };
            emit(&out, &content).map_err(CliError::Failed)
        }
        Command::Plunge {
            bandwidth,
            epsilon,
            k_max,
            out,
        } => {
            if !(epsilon > 0.0 && epsilon < 0.5) {
                return Err(usage(format!("--epsilon must be in (0, 1/2), got {epsilon}")));
            }
            let points = bandwidth.points().map_err(usage)?;
            if points.iter().any(|&a| !(a > 0.0)) {
                return Err(usage("every bandwidth must be positive"));
            }
            let mut reports = Vec::new();
            for a in points {
                let km = k_max.unwrap_or_else(|| trace_k_max(a));
                let table = spectrum_table(a, km, false)?;
                reports.push(plunge_counts(&table, epsilon)?);
            }
            let content = match format_or(&out, OutputFormat::Json) {
                OutputFormat::Csv => plunge_csv(&reports),
                OutputFormat::Json => to_json(&reports).map_err(CliError::Failed)? + "\n",
            };
            emit(&out, &content).map_err(CliError::Failed)
        }
        Command::Net {
            bandwidth,
            kappa,
            domain,
            k_max,
            out,
        } => {
            if !(kappa > 0.0) {
                return Err(usage(format!("--kappa must be positive, got {kappa}")));
            }
            let points = bandwidth.points().map_err(usage)?;
            if points.iter().any(|&a| !(a > 0.0)) {
                return Err(usage("every bandwidth must be positive"));
            }
            let mut records = Vec::new();
            for a in points {
                let table = spectrum_table(a, k_max, false)?;
                let report = match domain {
                    NetDomainArg::Interval => interval_net_check(&table.sigmas(), kappa)?,
                    NetDomainArg::Cross => cross_net_check(&table, kappa)?,
                };
                records.push(NetRecord { a, report });
            }
            let content = match format_or(&out, OutputFormat::Json) {
                OutputFormat::Csv => net_csv(&records),
                OutputFormat::Json => to_json(&records).map_err(CliError::Failed)? + "\n",
            };
            emit(&out, &content).map_err(CliError::Failed)
        }
        Command::Trace { a, k_max, out } => {
            if !(a > 0.0) {
                return Err(usage(format!("--a must be positive, got {a}")));
            }
            let km = k_max.unwrap_or_else(|| trace_k_max(a));
            if km < trace_k_max(a) {
                return Err(usage(format!(
                    "--k-max must be at least {} for a = {a}",
                    trace_k_max(a)
                )));
            }
            let table = spectrum_table(a, km, false)?;
            let report = trace_check(&table)?;
            let content = match format_or(&out, OutputFormat::Json) {
                OutputFormat::Csv => trace_csv(&report),
                OutputFormat::Json => to_json(&report).map_err(CliError::Failed)? + "\n",
            };
            emit(&out, &content).map_err(CliError::Failed)
        }
        Command::Slepian { a, b, out } => {
            if !(a > 0.5) {
                return Err(usage(format!("--a must exceed 0.5, got {a}")));
            }
            let tp = transition_point(a, b)?;
            let content = match format_or(&out, OutputFormat::Json) {
                OutputFormat::Csv => {
                    let mut s = String::from("a,b,k,sigma_limit,delta\n");
                    let _ = writeln!(
                        s,
                        "{},{},{},{},{}",
                        fmt_f64(tp.a),
                        fmt_f64(tp.b),
                        tp.k,
                        fmt_f64(tp.sigma_limit),
                        tp.delta.map(fmt_f64).unwrap_or_default()
                    );
                    s
                }
                OutputFormat::Json => to_json(&tp).map_err(CliError::Failed)? + "\n",
            };
            emit(&out, &content).map_err(CliError::Failed)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_floats_have_17_significant_digits() {
        #[derive(Serialize)]
        struct S {
            x: f64,
            y: f64,
        }
        let s = to_json(&S {
            x: 0.1,
            y: 2.0 / std::f64::consts::PI,
        })
        .unwrap();
        assert_eq!(s, r#"{"x":1.0000000000000001e-1,"y":6.3661977236758138e-1}"#);
        // round trip is exact
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["x"].as_f64().unwrap(), 0.1);
        assert_eq!(v["y"].as_f64().unwrap(), 2.0 / std::f64::consts::PI);
    }

    #[test]
    fn nonfinite_floats_serialize_as_null() {
        #[derive(Serialize)]
        struct S {
            x: f64,
        }
        assert_eq!(to_json(&S { x: f64::INFINITY }).unwrap(), r#"{"x":null}"#);
    }

    #[test]
    fn a_grid_parsing() {
        let g = parse_a_grid("2:8:2").unwrap();
        assert_eq!(g.points(), vec![2.0, 4.0, 6.0, 8.0]);
        let g = parse_a_grid("0.5:1.0:0.25").unwrap();
        assert_eq!(g.points(), vec![0.5, 0.75, 1.0]);
        assert!(parse_a_grid("1:2").is_err());
        assert!(parse_a_grid("2:1:1").is_err());
        assert!(parse_a_grid("1:2:0").is_err());
        assert!(parse_a_grid("a:b:c").is_err());
    }

    #[test]
    fn eigenfunction_dump_legendre_limit() {
        let report = eigenfunction_dump(0.0, 2, 5).unwrap();
        assert_eq!(report.rows.len(), 5);
        // P_2 at -1, -1/2, 0, 1/2, 1
        let expect = [1.0, -0.125, -0.5, -0.125, 1.0];
        for (row, e) in report.rows.iter().zip(expect) {
            assert!((row.g - e).abs() < 1e-12);
            assert_eq!(row.g, row.e);
        }
    }

    #[test]
    fn eigenfunction_dump_odd_vanishes_at_zero() {
        let report = eigenfunction_dump(1.0, 1, 3).unwrap();
        assert_eq!(report.rows[1].t, 0.0);
        assert_eq!(report.rows[1].g, 0.0);
        assert!(eigenfunction_dump(1.0, 1, 1).is_err());
    }

    #[test]
    fn spectrum_csv_columns() {
        let table = spectrum_table(2.0, 3, false).unwrap();
        let report = spectrum_report(&table, None);
        let csv = spectrum_csv(&report);
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "k,gamma,mu,sigma,lambda_re,lambda_im");
        assert_eq!(lines.count(), 4);
    }
}
