//! Command-line front end: `eval | scan | bounds | graph | verify`.
//!
//! Every command prints one [`OutputRecord`] (JSON by default, CSV with
//! `--format csv`). Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 2 | usage error or violated precondition |
//! | 3 | numerical tolerance not reached |
//! | 4 | degenerate input (edgeless graph) |
//! | 5 | eigenfunction verification failed |

mod config;
mod output;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bounds::{self, AdjacencyMatrix, Provenance};
use crate::error::Error;
use crate::geometry::Point;
use crate::spectrum;
use crate::spherical::{self, SpectralParameter};

pub use config::{Config, CONFIG_ENV};
pub use output::{Field, OutputRecord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_TOLERANCE: i32 = 3;
pub const EXIT_DEGENERATE: i32 = 4;
pub const EXIT_VERIFY_FAILED: i32 = 5;

/// Residual threshold for `verify`.
pub const VERIFY_THRESHOLD: f64 = 1e-6;

#[derive(Debug, Parser)]
#[command(
    name = "spectral-chroma",
    version,
    about = "Spherical functions, circle-averaging spectra and coloring bounds on the hyperbolic plane"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate P_{-1/2+is}(cosh r) next to the envelope (r+1)e^{-r/2}.
    Eval(EvalArgs),
    /// Scan the principal series for the infimum of the spectrum of A_r.
    Scan(ScanArgs),
    /// Independence-ratio and chromatic-number bounds for radius r.
    Bounds(BoundsArgs),
    /// Hoffman bound of a finite graph given as an edge list.
    Graph(GraphArgs),
    /// Check the eigenfunction property by averaging over a circle.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct ParamArgs {
    /// Principal-series parameter.
    #[arg(long, allow_negative_numbers = true)]
    s: Option<f64>,
    /// Complementary-series parameter, |sigma| <= 1/2.
    #[arg(long, allow_negative_numbers = true)]
    sigma: Option<f64>,
}

#[derive(Debug, Args)]
struct EvalArgs {
    #[arg(long, allow_negative_numbers = true)]
    r: f64,
    #[command(flatten)]
    param: ParamArgs,
    /// Absolute quadrature tolerance.
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Debug, Args)]
struct ScanArgs {
    #[arg(long, allow_negative_numbers = true)]
    r: f64,
    #[arg(long = "s-max")]
    s_max: Option<f64>,
    #[arg(long)]
    step: Option<f64>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Debug, Args)]
struct BoundsArgs {
    #[arg(long, allow_negative_numbers = true)]
    r: f64,
    /// Smallest non-trivial Laplace eigenvalue of the surface.
    #[arg(long, allow_negative_numbers = true)]
    lambda: Option<f64>,
    /// Decay exponent C in [0, 1); required when --lambda < 0.25.
    #[arg(long, allow_negative_numbers = true)]
    c: Option<f64>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Debug, Args)]
struct GraphArgs {
    /// Edge-list file.
    #[arg(long)]
    input: PathBuf,
    /// Require the graph to be regular.
    #[arg(long)]
    regular: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, allow_negative_numbers = true)]
    r: f64,
    #[command(flatten)]
    param: ParamArgs,
    /// Number of circle samples.
    #[arg(long)]
    n: Option<usize>,
    /// Circle centre as "x,y".
    #[arg(long, default_value = "0.7,2.0", allow_hyphen_values = true)]
    base: String,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Lib(Error::ToleranceNotReached { .. } | Error::StepSizeUnderflow { .. }) => {
                EXIT_TOLERANCE
            }
            Failure::Lib(Error::Edgeless) => EXIT_DEGENERATE,
            Failure::Lib(_) => EXIT_USAGE,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) => m.clone(),
            Failure::Lib(e) => e.to_string(),
        }
    }
}

struct Emitted {
    stdout: String,
    stderr: String,
    code: i32,
}

impl Emitted {
    fn ok(stdout: String) -> Self {
        Emitted {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }
}

/// Runs the CLI with the process's stdout, stderr and config.
pub fn main_entry() -> i32 {
    let mut stdout = std::io::stdout().lock();
    let mut stderr = std::io::stderr().lock();
    run(std::env::args_os(), Config::from_env(), &mut stdout, &mut stderr)
}

/// Parses `args` (program name first), executes the command and writes its
/// output. Returns the exit code.
pub fn run<I, T>(
    args: I,
    config: Result<Config, String>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let config = match config {
        Ok(c) => c,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_USAGE;
        }
    };

    let result = match cli.command {
        Command::Eval(a) => cmd_eval(a, &config),
        Command::Scan(a) => cmd_scan(a, &config),
        Command::Bounds(a) => cmd_bounds(a),
        Command::Graph(a) => cmd_graph(a),
        Command::Verify(a) => cmd_verify(a, &config),
    };
    match result {
        Ok(out) => {
            let _ = stdout.write_all(out.stdout.as_bytes());
            let _ = stderr.write_all(out.stderr.as_bytes());
            out.code
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message());
            f.exit_code()
        }
    }
}

fn require_positive_r(r: f64) -> Result<(), Failure> {
    if r > 0.0 && r.is_finite() {
        Ok(())
    } else {
        Err(Failure::Usage(format!("precondition violated: r > 0 (got --r {r})")))
    }
}

fn parameter(p: &ParamArgs, record: &mut OutputRecord) -> Result<SpectralParameter, Failure> {
    match (p.s, p.sigma) {
        (Some(s), None) => {
            record.input("s", s);
            Ok(SpectralParameter::principal(s)?)
        }
        (None, Some(sigma)) => {
            record.input("sigma", sigma);
            Ok(SpectralParameter::complementary(sigma)?)
        }
        _ => Err(Failure::Usage("exactly one of --s and --sigma is required".into())),
    }
}

fn render(record: &OutputRecord, format: Format) -> String {
    match format {
        Format::Json => record.to_json() + "\n",
        Format::Csv => {
            let mut buf = Vec::new();
            record.write_csv(&mut buf).expect("writing to memory");
            String::from_utf8(buf).expect("csv output is UTF-8")
        }
    }
}

fn cmd_eval(a: EvalArgs, config: &Config) -> Result<Emitted, Failure> {
    require_positive_r(a.r)?;
    let mut quad = config.quad;
    if let Some(tol) = a.tol {
        quad.abs_tol = tol;
    }
    quad.validate()?;

    let mut record = OutputRecord::new("eval");
    record.input("r", a.r);
    let param = parameter(&a.param, &mut record)?;
    let e = spherical::eval_detailed(param, a.r, &quad)?;

    record
        .result("value", e.value, Provenance::NumericalScan)
        .result("error_estimate", e.error_estimate, Provenance::NumericalScan)
        .result("envelope", spherical::envelope(a.r), Provenance::CertifiedAnalytic)
        .meta("tolerances", quad);
    Ok(Emitted::ok(render(&record, a.format)))
}

fn cmd_scan(a: ScanArgs, config: &Config) -> Result<Emitted, Failure> {
    require_positive_r(a.r)?;
    let s_max = a
        .s_max
        .or(config.s_max)
        .unwrap_or_else(|| spectrum::default_s_max(a.r));
    let step = a
        .step
        .or(config.grid_step)
        .unwrap_or_else(|| spectrum::default_grid_step(a.r));

    let (summary, grid) = spectrum::scan_principal_with_grid(a.r, s_max, step, &config.quad)?;

    let mut record = OutputRecord::new("scan");
    record
        .input("r", a.r)
        .input("s_max", s_max)
        .input("step", step)
        .result("M", summary.m_max, Provenance::CertifiedAnalytic)
        .result("m_analytic", summary.m_analytic, Provenance::CertifiedAnalytic)
        .result("m_numeric", summary.m_numeric, Provenance::NumericalScan)
        .result("argmin_s", summary.argmin_s, Provenance::NumericalScan)
        .result("degenerate", summary.degenerate, Provenance::NumericalScan)
        .meta("tolerances", config.quad)
        .meta(
            "grid",
            serde_json::json!({
                "s_max_scanned": summary.s_max_scanned,
                "grid_step": summary.grid_step,
                "points": grid.len(),
            }),
        );

    match a.format {
        Format::Json => Ok(Emitted::ok(render(&record, Format::Json))),
        Format::Csv => {
            let mut buf = Vec::new();
            {
                let mut w = csv::Writer::from_writer(&mut buf);
                let write = |w: &mut csv::Writer<&mut Vec<u8>>| -> csv::Result<()> {
                    w.write_record(["s", "value"])?;
                    for p in &grid {
                        w.write_record([p.s.to_string(), p.value.to_string()])?;
                    }
                    w.flush()?;
                    Ok(())
                };
                write(&mut w).expect("writing to memory");
            }
            Ok(Emitted {
                stdout: String::from_utf8(buf).expect("csv output is UTF-8"),
                stderr: record.to_json() + "\n",
                code: EXIT_OK,
            })
        }
    }
}

fn cmd_bounds(a: BoundsArgs) -> Result<Emitted, Failure> {
    require_positive_r(a.r)?;
    if let Some(lambda) = a.lambda {
        if lambda < 0.25 && a.c.is_none() {
            return Err(Failure::Usage(
                "missing --c: the decay exponent is required when --lambda < 0.25".into(),
            ));
        }
    }
    let report = bounds::compare(a.r, a.lambda, a.c)?;

    let mut record = OutputRecord::new("bounds");
    record.input("r", a.r);
    if let Some(lambda) = a.lambda {
        record.input("lambda", lambda);
    }
    if let Some(c) = a.c {
        record.input("c", c);
    }
    record
        .result("m_used", report.m_used, report.m_provenance)
        .result("ind_ratio_exact", report.ind_ratio_exact, report.m_provenance)
        .result("ind_ratio_relaxed", report.ind_ratio_relaxed, Provenance::CertifiedAnalytic)
        .result("chi_lower", report.chi_lower, Provenance::CertifiedAnalytic)
        .result("vacuous", report.vacuous, Provenance::Formula);
    if let Some(pp) = report.pp_chi_upper {
        record.result("pp_chi_upper", pp, Provenance::Formula);
    }
    if let Some(nevo) = report.nevo {
        record
            .result("nevo_beta", nevo.bound.beta, Provenance::Formula)
            .result("nevo_alpha_bound", nevo.bound.alpha_bound, Provenance::Formula)
            .result("nevo_winner", nevo.winner, Provenance::Formula);
    }
    Ok(Emitted::ok(render(&record, a.format)))
}

fn cmd_graph(a: GraphArgs) -> Result<Emitted, Failure> {
    let text = std::fs::read_to_string(&a.input)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", a.input.display())))?;
    let graph: AdjacencyMatrix = text.parse()?;
    let res = bounds::hoffman_finite(&graph, a.regular)?;

    let mut record = OutputRecord::new("graph");
    record
        .input("input", a.input.display().to_string())
        .input("regular", a.regular)
        .result("n", res.n, Provenance::Formula)
        .result("edges", res.edges, Provenance::Formula)
        .result("regular", res.regular, Provenance::Formula)
        .result("M", res.max_eigenvalue, Provenance::NumericalScan)
        .result("m", res.min_eigenvalue, Provenance::NumericalScan)
        .result("alpha_bound", res.alpha_bound, Provenance::NumericalScan)
        .result("chi_bound", res.chi_bound, Provenance::NumericalScan);
    Ok(Emitted::ok(render(&record, a.format)))
}

fn parse_base(text: &str) -> Result<Point, Failure> {
    let (x, y) = text
        .split_once(',')
        .ok_or_else(|| Failure::Usage(format!("--base must be \"x,y\", got {text:?}")))?;
    let parse = |v: &str| {
        v.trim()
            .parse::<f64>()
            .map_err(|_| Failure::Usage(format!("--base must be \"x,y\", got {text:?}")))
    };
    Ok(Point::new(parse(x)?, parse(y)?)?)
}

fn cmd_verify(a: VerifyArgs, config: &Config) -> Result<Emitted, Failure> {
    require_positive_r(a.r)?;
    let base = parse_base(&a.base)?;
    let n = a.n.unwrap_or(config.n_points);

    let mut record = OutputRecord::new("verify");
    record.input("r", a.r).input("n", n).input("base", [base.x(), base.y()]);
    let param = parameter(&a.param, &mut record)?;
    let check = spectrum::verify_eigenfunction(param, a.r, base, n, &config.quad)?;
    let pass = check.residual < VERIFY_THRESHOLD;

    record
        .result("residual", check.residual, Provenance::NumericalScan)
        .result("circle_average", check.circle_average, Provenance::NumericalScan)
        .result("predicted", check.predicted, Provenance::NumericalScan)
        .result("threshold", VERIFY_THRESHOLD, Provenance::Formula)
        .result("pass", pass, Provenance::Formula)
        .meta("tolerances", config.quad);

    let mut out = Emitted::ok(render(&record, a.format));
    if !pass {
        out.stderr = format!(
            "verification failed: residual {} >= {VERIFY_THRESHOLD}\n",
            check.residual
        );
        out.code = EXIT_VERIFY_FAILED;
    }
    Ok(out)
}
