//! Command-line front end.
//!
//! Exit codes: 0 when every check passes, 1 on any identity or agreement
//! failure (including a singular system), 2 on a usage error.

use std::ffi::OsString;
use std::fs;
use std::hint::black_box;
use std::io::{self, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::identity::{
    boole_sum, closed_form_solution, expected_value, verify_cramer, verify_stirling,
    verify_theorem_with, CaseResult, StirlingTable, VerificationReport,
};
use crate::rational::{factorial, Rational};
use crate::sampling::{random_pairs, ParameterSampler};
use crate::vandermonde::{
    build_system, det_bareiss, det_vandermonde_closed, det_vandermonde_general, det_vk_closed,
    solve_exact, ArithmeticNodes,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Repetitions per timed call in `bench`; the median is reported.
pub const BENCH_REPETITIONS: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Verify,
    Solve,
    Det,
    Stirling,
    Bench,
}

/// Fully resolved parameters of one invocation. Each command reads only the
/// fields its flags populate.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: CommandKind,
    pub a: Rational,
    pub b: Rational,
    pub n: usize,
    pub n_max: usize,
    pub m_max: usize,
    pub seed: u64,
    pub trials: usize,
    pub output_path: Option<PathBuf>,
    pub format: Format,
    /// Test hook: perturbs one expected value in the `verify` sweep.
    pub inject_failure: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            command: CommandKind::Verify,
            a: Rational::zero(),
            b: Rational::one(),
            n: 4,
            n_max: 10,
            m_max: 10,
            seed: 0,
            trials: 0,
            output_path: None,
            format: Format::Text,
            inject_failure: false,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "boole",
    version,
    about = "Exact checks of alternating binomial sum identities via Vandermonde systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Verify the identities over a fixed (a, b) plus seeded random pairs.
    Verify(VerifyArgs),
    /// Solve the Vandermonde system generically and in closed form.
    Solve(SystemArgs),
    /// Compare closed-form and generic determinants.
    Det(SystemArgs),
    /// Tabulate Stirling partition numbers against Boole's sum.
    Stirling(StirlingArgs),
    /// Time closed-form versus elimination determinants (CSV).
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
struct ParamArgs {
    /// First node, as P/Q or an integer.
    #[arg(long, default_value = "0", allow_hyphen_values = true, value_parser = parse_rational)]
    a: Rational,
    /// Node spacing, as P/Q or an integer.
    #[arg(long, default_value = "1", allow_hyphen_values = true, value_parser = parse_rational)]
    b: Rational,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the document here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, default_value_t = 10)]
    n_max: usize,
    /// Largest m for the Stirling sweep; defaults to --n-max.
    #[arg(long)]
    m_max: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of additional seeded random (a, b) pairs.
    #[arg(long, default_value_t = 0)]
    trials: usize,
    #[arg(long, hide = true)]
    inject_failure: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct SystemArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, default_value_t = 4)]
    n: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct StirlingArgs {
    #[arg(long, default_value_t = 8)]
    m_max: usize,
    #[arg(long, default_value_t = 8)]
    n_max: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
    n_max: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    output: Option<PathBuf>,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

impl From<Cli> for RunConfig {
    fn from(cli: Cli) -> Self {
        let base = RunConfig::default();
        match cli.command {
            Command::Verify(v) => RunConfig {
                command: CommandKind::Verify,
                a: v.params.a,
                b: v.params.b,
                n_max: v.n_max,
                m_max: v.m_max.unwrap_or(v.n_max),
                seed: v.seed,
                trials: v.trials,
                inject_failure: v.inject_failure,
                format: v.output.format,
                output_path: v.output.output,
                ..base
            },
            Command::Solve(s) => RunConfig {
                command: CommandKind::Solve,
                ..system_config(s, base)
            },
            Command::Det(s) => RunConfig {
                command: CommandKind::Det,
                ..system_config(s, base)
            },
            Command::Stirling(s) => RunConfig {
                command: CommandKind::Stirling,
                m_max: s.m_max,
                n_max: s.n_max,
                format: s.output.format,
                output_path: s.output.output,
                ..base
            },
            Command::Bench(bench) => RunConfig {
                command: CommandKind::Bench,
                n_max: bench.n_max as usize,
                seed: bench.seed,
                format: Format::Csv,
                output_path: bench.output,
                ..base
            },
        }
    }
}

fn system_config(s: SystemArgs, base: RunConfig) -> RunConfig {
    RunConfig {
        a: s.params.a,
        b: s.params.b,
        n: s.n,
        format: s.output.format,
        output_path: s.output.output,
        ..base
    }
}

/// Result of running one command: the document to emit, messages for the
/// error stream, and the exit code.
#[derive(Debug, Clone)]
pub struct CommandOutput {
    pub exit_code: i32,
    pub document: Option<String>,
    pub diagnostics: Vec<String>,
}

impl CommandOutput {
    fn document(exit_code: i32, document: String) -> Self {
        Self {
            exit_code,
            document: Some(document),
            diagnostics: Vec::new(),
        }
    }

    fn failure(message: impl Into<String>) -> Self {
        Self {
            exit_code: EXIT_FAILURE,
            document: None,
            diagnostics: vec![message.into()],
        }
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// its output. Returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_OK
            };
        }
    };
    let config = RunConfig::from(cli);
    let output = run(&config);
    for line in &output.diagnostics {
        eprintln!("{line}");
    }
    if let Some(doc) = &output.document {
        let written = match &config.output_path {
            Some(path) => fs::write(path, doc),
            None => io::stdout().lock().write_all(doc.as_bytes()),
        };
        if let Err(e) = written {
            eprintln!("error: failed to write output: {e}");
            return EXIT_FAILURE;
        }
    }
    output.exit_code
}

pub fn run(config: &RunConfig) -> CommandOutput {
    match config.command {
        CommandKind::Verify => cmd_verify(config),
        CommandKind::Solve => cmd_solve(config),
        CommandKind::Det => cmd_det(config),
        CommandKind::Stirling => cmd_stirling(config),
        CommandKind::Bench => cmd_bench(config),
    }
}

fn status(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_FAILURE
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

fn to_csv<T: Serialize>(header: &[&str], rows: &[T]) -> String {
    let mut writer = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    writer.write_record(header).expect("in-memory write");
    for row in rows {
        writer.serialize(row).expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 csv")
}

fn rationals_text(xs: &[Rational]) -> String {
    let items: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("[{}]", items.join(", "))
}

// verify

#[derive(Debug, Serialize)]
pub struct ReportDocument {
    pub command: String,
    pub params: ReportParams,
    pub cases: Vec<CaseRow>,
    pub summary: Summary,
    pub notes: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct ReportParams {
    pub a: Rational,
    pub b: Rational,
    pub n_max: usize,
    pub seed: u64,
    pub m_max: usize,
    pub trials: usize,
}

#[derive(Debug, Serialize)]
pub struct CaseRow {
    pub n: usize,
    pub m: usize,
    pub check: &'static str,
    pub a: Rational,
    pub b: Rational,
    pub lhs: Rational,
    pub rhs: Rational,
    pub pass: bool,
}

impl From<&CaseResult> for CaseRow {
    fn from(r: &CaseResult) -> Self {
        Self {
            n: r.case.n,
            m: r.case.m,
            check: r.check.as_str(),
            a: r.case.a.clone(),
            b: r.case.b.clone(),
            lhs: r.lhs.clone(),
            rhs: r.rhs.clone(),
            pass: r.pass,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Summary {
    pub total: usize,
    pub failures: usize,
}

/// Runs the full verification sweep for `config` and returns the merged
/// report, ordered by parameter pair, then by sweep, then by `(n, m)`.
pub fn verification_report(config: &RunConfig) -> VerificationReport {
    let mut pairs = vec![(config.a.clone(), config.b.clone())];
    pairs.extend(random_pairs(config.seed, config.trials));

    let mut report = VerificationReport::default();
    for (idx, (a, b)) in pairs.iter().enumerate() {
        let corrupt = config.inject_failure && idx == 0;
        let n_max = config.n_max;
        report.merge(verify_theorem_with(a, b, n_max, |a, b, n, m| {
            let value = expected_value(a, b, n, m)?;
            Ok(if corrupt && n == n_max && m == n_max {
                value + Rational::one()
            } else {
                value
            })
        }));
        if b.is_zero() {
            report.notes.push(format!(
                "a={a}, b=0: Cramer checks skipped (singular system)"
            ));
            continue;
        }
        for n in 0..=n_max {
            report.merge(verify_cramer(a, b, n).expect("b is nonzero"));
        }
    }
    report.merge(verify_stirling(config.m_max, config.n_max));
    report
}

pub fn report_document(config: &RunConfig, report: &VerificationReport) -> ReportDocument {
    ReportDocument {
        command: "verify".to_string(),
        params: ReportParams {
            a: config.a.clone(),
            b: config.b.clone(),
            n_max: config.n_max,
            seed: config.seed,
            m_max: config.m_max,
            trials: config.trials,
        },
        cases: report.results.iter().map(CaseRow::from).collect(),
        summary: Summary {
            total: report.total,
            failures: report.failures,
        },
        notes: report.notes.clone(),
    }
}

pub fn cmd_verify(config: &RunConfig) -> CommandOutput {
    let report = verification_report(config);
    let doc = report_document(config, &report);
    let body = match config.format {
        Format::Json => to_json(&doc),
        Format::Csv => to_csv(
            &["n", "m", "check", "a", "b", "lhs", "rhs", "pass"],
            &doc.cases,
        ),
        Format::Text => {
            let mut out = format!(
                "verify a={} b={} n_max={} m_max={} seed={} trials={}\n",
                config.a, config.b, config.n_max, config.m_max, config.seed, config.trials
            );
            let mut kinds: Vec<&str> = Vec::new();
            for row in &doc.cases {
                if !kinds.contains(&row.check) {
                    kinds.push(row.check);
                }
            }
            for kind in kinds {
                let rows = doc.cases.iter().filter(|c| c.check == kind);
                let (total, failed) =
                    rows.fold((0, 0), |(t, f), c| (t + 1, f + usize::from(!c.pass)));
                out.push_str(&format!(
                    "  {kind:<18} {total:>6} checks, {failed} failed\n"
                ));
            }
            for row in doc.cases.iter().filter(|c| !c.pass) {
                out.push_str(&format!(
                    "FAIL {} n={} m={} a={} b={}: {} != {}\n",
                    row.check, row.n, row.m, row.a, row.b, row.lhs, row.rhs
                ));
            }
            for note in &doc.notes {
                out.push_str(&format!("note: {note}\n"));
            }
            out.push_str(&format!(
                "total {} failures {}\n",
                report.total, report.failures
            ));
            out
        }
    };
    CommandOutput::document(status(report.passed()), body)
}

// solve

#[derive(Debug, Serialize)]
struct SolveDocument {
    command: &'static str,
    params: SystemParams,
    matrix: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    solver: Vec<Rational>,
    closed_form: Vec<Rational>,
    agree: bool,
}

#[derive(Debug, Serialize)]
struct SystemParams {
    a: Rational,
    b: Rational,
    n: usize,
}

#[derive(Debug, Serialize)]
struct SolveRow<'a> {
    k: usize,
    solver: &'a Rational,
    closed_form: &'a Rational,
    agree: bool,
}

pub fn cmd_solve(config: &RunConfig) -> CommandOutput {
    let nodes = ArithmeticNodes::new(config.a.clone(), config.b.clone(), config.n);
    let system = build_system(&nodes);
    let solver = match solve_exact(&system) {
        Ok(x) => x,
        Err(Error::Singular) => {
            return CommandOutput::failure(format!(
                "error: singular system for a={} b={} n={} (coincident nodes)",
                config.a, config.b, config.n
            ))
        }
        Err(e) => return CommandOutput::failure(format!("error: {e}")),
    };
    let closed: Vec<Rational> = closed_form_solution(config.n)
        .into_iter()
        .map(Rational::from_integer)
        .collect();
    let agree = solver == closed;
    let body = match config.format {
        Format::Json => to_json(&SolveDocument {
            command: "solve",
            params: SystemParams {
                a: config.a.clone(),
                b: config.b.clone(),
                n: config.n,
            },
            matrix: system.matrix().row_vecs(),
            rhs: system.rhs().to_vec(),
            solver: solver.clone(),
            closed_form: closed.clone(),
            agree,
        }),
        Format::Csv => {
            let rows: Vec<SolveRow> = solver
                .iter()
                .zip(&closed)
                .enumerate()
                .map(|(k, (s, c))| SolveRow {
                    k,
                    solver: s,
                    closed_form: c,
                    agree: s == c,
                })
                .collect();
            to_csv(&["k", "solver", "closed_form", "agree"], &rows)
        }
        Format::Text => format!(
            "matrix:\n{}rhs: {}\nsolver:      {}\nclosed form: {}\n{}\n",
            system.matrix(),
            rationals_text(system.rhs()),
            rationals_text(&solver),
            rationals_text(&closed),
            if agree { "agree" } else { "MISMATCH" }
        ),
    };
    CommandOutput::document(status(agree), body)
}

// det

#[derive(Debug, Serialize)]
struct DetDocument {
    command: &'static str,
    params: SystemParams,
    closed: Rational,
    pairwise: Rational,
    bareiss: Rational,
    columns: Vec<ColumnRow>,
    agree: bool,
}

#[derive(Debug, Serialize)]
struct ColumnRow {
    k: usize,
    closed: Rational,
    bareiss: Rational,
    /// `det V_k / det V`, absent when `det V = 0`.
    ratio: Option<Rational>,
    expected: Rational,
    agree: bool,
}

pub fn cmd_det(config: &RunConfig) -> CommandOutput {
    let (n, b) = (config.n, &config.b);
    let nodes = ArithmeticNodes::new(config.a.clone(), b.clone(), n);
    let system = build_system(&nodes);
    let closed = det_vandermonde_closed(n, b);
    let pairwise = det_vandermonde_general(&nodes.nodes());
    let bareiss = det_bareiss(system.matrix()).expect("square matrix");
    let mut agree = closed == pairwise && closed == bareiss;

    let expected = closed_form_solution(n);
    let mut columns = Vec::with_capacity(n + 1);
    for (k, x_k) in expected.into_iter().enumerate() {
        let vk_closed = det_vk_closed(n, k, b).expect("k <= n");
        let replaced = system
            .matrix()
            .with_column(k, system.rhs())
            .expect("column in range");
        let vk_bareiss = det_bareiss(&replaced).expect("square matrix");
        let ratio = vk_closed.checked_div(&closed).ok();
        let x_k = Rational::from_integer(x_k);
        let ok = vk_closed == vk_bareiss && ratio.as_ref().is_none_or(|r| *r == x_k);
        agree &= ok;
        columns.push(ColumnRow {
            k,
            closed: vk_closed,
            bareiss: vk_bareiss,
            ratio,
            expected: x_k,
            agree: ok,
        });
    }

    let body = match config.format {
        Format::Json => to_json(&DetDocument {
            command: "det",
            params: SystemParams {
                a: config.a.clone(),
                b: b.clone(),
                n,
            },
            closed: closed.clone(),
            pairwise: pairwise.clone(),
            bareiss: bareiss.clone(),
            columns,
            agree,
        }),
        Format::Csv => {
            #[derive(Serialize)]
            struct Row<'a> {
                k: String,
                closed: &'a Rational,
                bareiss: &'a Rational,
                ratio: Option<&'a Rational>,
                expected: Option<&'a Rational>,
                agree: bool,
            }
            let mut rows = vec![Row {
                k: "V".to_string(),
                closed: &closed,
                bareiss: &bareiss,
                ratio: None,
                expected: Some(&pairwise),
                agree: closed == pairwise && closed == bareiss,
            }];
            rows.extend(columns.iter().map(|c| Row {
                k: c.k.to_string(),
                closed: &c.closed,
                bareiss: &c.bareiss,
                ratio: c.ratio.as_ref(),
                expected: Some(&c.expected),
                agree: c.agree,
            }));
            to_csv(
                &["k", "closed", "bareiss", "ratio", "expected", "agree"],
                &rows,
            )
        }
        Format::Text => {
            let mut out =
                format!("det V  closed={closed}  pairwise={pairwise}  bareiss={bareiss}\n");
            for c in &columns {
                let ratio = c
                    .ratio
                    .as_ref()
                    .map_or_else(|| "-".to_string(), ToString::to_string);
                out.push_str(&format!(
                    "det V_{}  closed={}  bareiss={}  ratio={}  x_k={}\n",
                    c.k, c.closed, c.bareiss, ratio, c.expected
                ));
            }
            out.push_str(if agree { "agree\n" } else { "MISMATCH\n" });
            out
        }
    };
    CommandOutput::document(status(agree), body)
}

// stirling

#[derive(Debug, Serialize)]
struct StirlingRow {
    m: usize,
    n: usize,
    stirling: Rational,
    boole_sum: Rational,
    factorial_times_stirling: Rational,
    pass: bool,
}

#[derive(Debug, Serialize)]
struct StirlingDocument {
    command: &'static str,
    params: StirlingParams,
    rows: Vec<StirlingRow>,
    summary: Summary,
}

#[derive(Debug, Serialize)]
struct StirlingParams {
    m_max: usize,
    n_max: usize,
}

pub fn cmd_stirling(config: &RunConfig) -> CommandOutput {
    let table = StirlingTable::new(config.m_max, config.n_max);
    let mut rows = Vec::new();
    for m in 0..=config.m_max {
        for n in 0..=config.n_max {
            let s = table.get(m, n).clone();
            let product = Rational::from_integer(factorial(n) * &s);
            let sum = Rational::from_integer(boole_sum(n, m));
            rows.push(StirlingRow {
                m,
                n,
                stirling: Rational::from_integer(s),
                pass: sum == product,
                boole_sum: sum,
                factorial_times_stirling: product,
            });
        }
    }
    let failures = rows.iter().filter(|r| !r.pass).count();
    let body = match config.format {
        Format::Json => to_json(&StirlingDocument {
            command: "stirling",
            params: StirlingParams {
                m_max: config.m_max,
                n_max: config.n_max,
            },
            summary: Summary {
                total: rows.len(),
                failures,
            },
            rows,
        }),
        Format::Csv => to_csv(
            &[
                "m",
                "n",
                "stirling",
                "boole_sum",
                "factorial_times_stirling",
                "pass",
            ],
            &rows,
        ),
        Format::Text => {
            let mut out = format!(
                "{:>3} {:>3} {:>12} {:>16} {:>16}  ok\n",
                "m", "n", "S(m,n)", "boole_sum", "n!*S(m,n)"
            );
            for r in &rows {
                out.push_str(&format!(
                    "{:>3} {:>3} {:>12} {:>16} {:>16}  {}\n",
                    r.m,
                    r.n,
                    r.stirling.to_string(),
                    r.boole_sum.to_string(),
                    r.factorial_times_stirling.to_string(),
                    if r.pass { "yes" } else { "NO" }
                ));
            }
            out.push_str(&format!("total {} failures {failures}\n", rows.len()));
            out
        }
    };
    CommandOutput::document(status(failures == 0), body)
}

// bench

#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub closed_ns: u128,
    pub bareiss_ns: u128,
    pub agree: bool,
}

fn median_ns<T>(mut f: impl FnMut() -> T) -> u128 {
    let mut samples: Vec<u128> = (0..BENCH_REPETITIONS)
        .map(|_| {
            let start = Instant::now();
            black_box(f());
            start.elapsed().as_nanos()
        })
        .collect();
    samples.sort_unstable();
    samples[samples.len() / 2]
}

/// Times both determinant routes for `n` in `1..=n_max` on nodes drawn from
/// `seed`. Agreement is checked before anything is timed.
pub fn bench_rows(n_max: usize, seed: u64) -> Vec<BenchRow> {
    let (a, b) = ParameterSampler::new(seed).nonsingular_pair();
    (1..=n_max)
        .map(|n| {
            let system = build_system(&ArithmeticNodes::new(a.clone(), b.clone(), n));
            let closed = det_vandermonde_closed(n, &b);
            let eliminated = det_bareiss(system.matrix()).expect("square matrix");
            let agree = closed == eliminated;
            let closed_ns = median_ns(|| det_vandermonde_closed(n, &b));
            let bareiss_ns = median_ns(|| det_bareiss(system.matrix()));
            BenchRow {
                n,
                closed_ns,
                bareiss_ns,
                agree,
            }
        })
        .collect()
}

pub fn cmd_bench(config: &RunConfig) -> CommandOutput {
    if config.n_max < 1 {
        return CommandOutput {
            exit_code: EXIT_USAGE,
            document: None,
            diagnostics: vec!["error: bench requires --n-max >= 1".to_string()],
        };
    }
    let rows = bench_rows(config.n_max, config.seed);
    let agree = rows.iter().all(|r| r.agree);
    CommandOutput::document(
        status(agree),
        to_csv(&["n", "closed_ns", "bareiss_ns", "agree"], &rows),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(command: CommandKind) -> RunConfig {
        RunConfig {
            command,
            ..RunConfig::default()
        }
    }

    #[test]
    fn negative_rational_flags_parse() {
        let cli = Cli::try_parse_from(["boole", "solve", "--a", "9/4", "--b", "-1/3", "--n", "3"])
            .unwrap();
        let cfg = RunConfig::from(cli);
        assert_eq!(cfg.command, CommandKind::Solve);
        assert_eq!(cfg.b, "-1/3".parse().unwrap());
        assert_eq!(cfg.n, 3);
    }

    #[test]
    fn flags_are_scoped_per_command() {
        assert!(Cli::try_parse_from(["boole", "stirling", "--a", "1"]).is_err());
        assert!(Cli::try_parse_from(["boole", "bench", "--format", "json"]).is_err());
        assert!(Cli::try_parse_from(["boole", "solve", "--trials", "3"]).is_err());
        assert!(Cli::try_parse_from(["boole", "verify", "--b", "1/0"]).is_err());
        assert!(Cli::try_parse_from(["boole", "bench", "--n-max", "0"]).is_err());
    }

    #[test]
    fn verify_m_max_defaults_to_n_max() {
        let cfg =
            RunConfig::from(Cli::try_parse_from(["boole", "verify", "--n-max", "5"]).unwrap());
        assert_eq!(cfg.m_max, 5);
    }

    #[test]
    fn verify_single_case() {
        let cfg = RunConfig {
            a: "1".parse().unwrap(),
            b: "2".parse().unwrap(),
            n_max: 0,
            m_max: 0,
            ..config(CommandKind::Verify)
        };
        let report = verification_report(&cfg);
        let theorem: Vec<_> = report
            .results
            .iter()
            .filter(|r| r.check.as_str() == "theorem")
            .collect();
        assert_eq!(theorem.len(), 1);
        assert_eq!(theorem[0].lhs, Rational::one());
        assert_eq!(cmd_verify(&cfg).exit_code, EXIT_OK);
    }

    #[test]
    fn injected_failure_exits_one() {
        let cfg = RunConfig {
            n_max: 3,
            inject_failure: true,
            format: Format::Json,
            ..config(CommandKind::Verify)
        };
        let out = cmd_verify(&cfg);
        assert_eq!(out.exit_code, EXIT_FAILURE);
        let doc: serde_json::Value =
            serde_json::from_str(out.document.as_deref().unwrap()).unwrap();
        assert_eq!(doc["summary"]["failures"], 1);
    }

    #[test]
    fn solve_singular_exits_one() {
        let cfg = RunConfig {
            a: "1".parse().unwrap(),
            b: Rational::zero(),
            n: 1,
            ..config(CommandKind::Solve)
        };
        let out = cmd_solve(&cfg);
        assert_eq!(out.exit_code, EXIT_FAILURE);
        assert!(out.document.is_none());
        assert!(out.diagnostics[0].contains("singular"));
    }

    #[test]
    fn det_degenerate_spacing_agrees() {
        let cfg = RunConfig {
            a: "5".parse().unwrap(),
            b: Rational::zero(),
            n: 2,
            format: Format::Json,
            ..config(CommandKind::Det)
        };
        let out = cmd_det(&cfg);
        assert_eq!(out.exit_code, EXIT_OK);
        let doc: serde_json::Value =
            serde_json::from_str(out.document.as_deref().unwrap()).unwrap();
        assert_eq!(doc["closed"], "0/1");
        assert_eq!(doc["bareiss"], "0/1");
        assert_eq!(doc["pairwise"], "0/1");
    }

    #[test]
    fn bench_single_row() {
        let rows = bench_rows(1, 0);
        assert_eq!(rows.len(), 1);
        assert!(rows[0].agree);
    }
}
