//! Command-line front end. [`run`] does all the work and returns the exit
//! code together with the text destined for stdout and stderr, so tests can
//! drive it in-process.

use std::ffi::OsString;
use std::fmt;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{self, BoundKind, BoundReport, BoundsError, KnotInvariants, SeifertMatrix};
use crate::engine::{self, EngineError, TowerImage};
use crate::lattice::{self, FailureCounts};
use crate::model::{self, FundamentalComplex, Hand, ModelError, StandardReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_MISSING_DATA: i32 = 4;
pub const EXIT_INTERNAL: i32 = 5;

pub const FIXTURES_ENV: &str = "FLOER_GAMMA_FIXTURES";
pub const BUILTIN_KNOTS: [&str; 4] = ["unknot", "trefoil_l", "trefoil_r", "9_42"];

#[derive(Debug, Parser)]
#[command(
    name = "floer-gamma",
    version,
    about = "Correction terms of ±1 surgery and non-orientable genus bounds"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Directory holding `seifert.txt` and the `.cfk` fixtures.
    #[arg(long, global = true, env = FIXTURES_ENV)]
    pub fixtures_dir: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Manifold {
    S4,
    Ncp2,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// d(S³±1(K)) with the per-translate tower trace.
    DInvariant {
        #[arg(long)]
        knot: String,
        /// +1 or -1.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_surgery)]
        surgery: i8,
    },
    /// Lower bound for the non-orientable genus in S⁴ or punctured nCP².
    Bound {
        #[arg(long)]
        knot: String,
        #[arg(long, value_enum)]
        manifold: Manifold,
        #[arg(long, default_value_t = 0)]
        n: u32,
    },
    /// Lower and upper bounds for the (n + k)-fold sum of 9_42, k = 1..=k_max.
    ReproduceThm3 {
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k_max: u32,
    },
    /// Seeded audit of the spin^c inequality chain.
    Audit {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
    /// Parse a complex file and check that it is a standard model.
    Validate { path: PathBuf },
}

fn parse_surgery(s: &str) -> Result<i8, String> {
    match s {
        "+1" | "1" => Ok(1),
        "-1" => Ok(-1),
        _ => Err(format!("surgery coefficient must be +1 or -1, got `{s}`")),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<ModelError> for CliError {
    fn from(e: ModelError) -> Self {
        let code = if e.is_syntax() {
            EXIT_PARSE
        } else {
            EXIT_VALIDATION
        };
        CliError::new(code, e.to_string())
    }
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        let code = match e {
            EngineError::ZeroTensorPower | EngineError::NonStandard(_) => EXIT_VALIDATION,
            _ => EXIT_INTERNAL,
        };
        CliError::new(code, e.to_string())
    }
}

impl From<BoundsError> for CliError {
    fn from(e: BoundsError) -> Self {
        let code = match &e {
            BoundsError::Parse { .. } => EXIT_PARSE,
            BoundsError::Engine(inner) => return inner.clone().into(),
            BoundsError::NegativeCorrectionTerm(_) | BoundsError::TableMismatch { .. } => {
                EXIT_INTERNAL
            }
            _ => EXIT_VALIDATION,
        };
        CliError::new(code, e.to_string())
    }
}

/// Resolved knot: a CFK model plus, when available, its signature.
#[derive(Debug, Clone)]
pub struct Knot {
    pub label: String,
    pub complex: FundamentalComplex,
    pub sigma: Result<i64, String>,
}

impl Knot {
    pub fn sigma(&self) -> Result<i64, CliError> {
        self.sigma
            .clone()
            .map_err(|why| CliError::new(EXIT_MISSING_DATA, why))
    }
}

pub fn default_fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::new(EXIT_MISSING_DATA, format!("{}: {e}", path.display())))
}

fn read_seifert_file(path: &Path) -> Result<Vec<(String, SeifertMatrix)>, CliError> {
    let text = read_file(path)?;
    bounds::parse_seifert(&text).map_err(|e| {
        let mut err = CliError::from(e);
        err.message = format!("{}: {}", path.display(), err.message);
        err
    })
}

fn builtin_sigma(name: &str, fixtures: &Path) -> Result<Result<i64, String>, CliError> {
    let path = fixtures.join("seifert.txt");
    if !path.exists() {
        return Ok(Err(format!(
            "no Seifert matrix for `{name}`: {} does not exist",
            path.display()
        )));
    }
    let table = read_seifert_file(&path)?;
    Ok(table
        .iter()
        .find(|(n, _)| n == name)
        .map(|(_, v)| bounds::signature(v))
        .ok_or_else(|| format!("no Seifert matrix named `{name}` in {}", path.display())))
}

/// Resolves a knot reference.
///
/// Accepted forms: a builtin name, `connsum:<knot>:<m>`,
/// `file:<complex>[,<seifert>]`, or a bare path ending in `.cfk`.
pub fn resolve_knot(reference: &str, fixtures: &Path) -> Result<Knot, CliError> {
    let complex = match reference {
        "unknot" => Some(model::build_unknot()),
        "trefoil_l" => Some(model::build_trefoil(Hand::Left)),
        "trefoil_r" => Some(model::build_trefoil(Hand::Right)),
        "9_42" => Some(model::build_9_42()),
        _ => None,
    };
    if let Some(complex) = complex {
        return Ok(Knot {
            label: reference.to_string(),
            complex,
            sigma: builtin_sigma(reference, fixtures)?,
        });
    }
    if let Some(rest) = reference.strip_prefix("connsum:") {
        let (base, m) = rest.rsplit_once(':').ok_or_else(|| {
            CliError::new(
                EXIT_USAGE,
                format!("expected connsum:<knot>:<m>, got `{reference}`"),
            )
        })?;
        let m: usize = m
            .parse()
            .map_err(|_| CliError::new(EXIT_USAGE, format!("bad copy count `{m}`")))?;
        let base = resolve_knot(base, fixtures)?;
        let complex = engine::tensor_power(&base.complex, m)?;
        let sigma = base
            .sigma
            .map(|s| bounds::signature_connected_sum(&vec![s; m]));
        return Ok(Knot {
            label: reference.to_string(),
            complex,
            sigma,
        });
    }
    let file_ref = reference
        .strip_prefix("file:")
        .or_else(|| reference.ends_with(".cfk").then_some(reference));
    let Some(file_ref) = file_ref else {
        return Err(CliError::new(
            EXIT_USAGE,
            format!(
                "unknown knot `{reference}`; expected one of {}, connsum:<knot>:<m>, file:<path>[,<seifert>] or a .cfk path",
                BUILTIN_KNOTS.join(", ")
            ),
        ));
    };
    let (cfk, seifert) = match file_ref.split_once(',') {
        Some((c, s)) => (c, Some(s)),
        None => (file_ref, None),
    };
    let cfk_path = Path::new(cfk);
    let complex = model::parse_complex(&read_file(cfk_path)?).map_err(|e| {
        let mut err = CliError::from(e);
        err.message = format!("{}: {}", cfk_path.display(), err.message);
        err
    })?;
    let sigma = match seifert {
        None => Err(format!("no Seifert matrix given for `{reference}`")),
        Some(path) => {
            let table = read_seifert_file(Path::new(path))?;
            table
                .first()
                .map(|(_, v)| bounds::signature(v))
                .ok_or_else(|| format!("{path} contains no Seifert matrix"))
        }
    };
    Ok(Knot {
        label: reference.to_string(),
        complex,
        sigma,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct DInvariantOutput {
    pub knot: String,
    pub surgery: i8,
    pub d: i64,
    pub translate_l_achieving_min: i64,
    pub grading_trace: Vec<TowerImage>,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct TableRow {
    pub n: u32,
    pub k: u32,
    pub lower: i64,
    pub upper: i64,
    pub equal: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableOutput {
    pub n: u32,
    pub k_max: u32,
    pub sigma_9_42: i64,
    pub rows: Vec<TableRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditOutput {
    pub seed: u64,
    pub trials: usize,
    pub ineq3_held: usize,
    pub ineq5_held: usize,
    pub alt_reading_disagreements: usize,
    pub failures: FailureCounts,
    pub failure_total: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidationError {
    pub code: String,
    pub message: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidateOutput {
    pub path: String,
    pub valid: bool,
    pub standard: bool,
    pub generators: Option<usize>,
    pub arrows: Option<usize>,
    pub error: Option<ValidationError>,
    pub report: Option<StandardReport>,
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output types serialize");
    s.push('\n');
    s
}

fn to_csv<R: Serialize>(header: Option<&[&str]>, rows: impl IntoIterator<Item = R>) -> String {
    let mut w = csv::WriterBuilder::new()
        .has_headers(header.is_none())
        .from_writer(Vec::new());
    if let Some(h) = header {
        w.write_record(h).expect("in-memory write");
    }
    for r in rows {
        w.serialize(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
}

pub fn cmd_d_invariant(knot: &Knot, surgery: i8) -> Result<DInvariantOutput, CliError> {
    let report = if surgery > 0 {
        engine::d_plus_one_surgery_report(&knot.complex)?
    } else {
        engine::d_minus_one_surgery_report(&knot.complex)?
    };
    Ok(DInvariantOutput {
        knot: knot.label.clone(),
        surgery,
        d: report.d,
        translate_l_achieving_min: report.translate,
        grading_trace: report.trace,
    })
}

pub fn cmd_bound(knot: &Knot, manifold: Manifold, n: u32) -> Result<BoundReport, CliError> {
    let sigma = knot.sigma()?;
    let invariants = KnotInvariants {
        sigma,
        d_plus: engine::d_plus_one_surgery(&knot.complex)?,
        d_minus: engine::d_minus_one_surgery(&knot.complex)?,
    };
    let kind = match manifold {
        Manifold::S4 => BoundKind::Batson,
        Manifold::Ncp2 => BoundKind::Cp2 { n },
    };
    Ok(invariants.report(&knot.label, kind)?)
}

pub fn cmd_reproduce_thm3(n: u32, k_max: u32, fixtures: &Path) -> Result<TableOutput, CliError> {
    let sigma_9_42 = resolve_knot("9_42", fixtures)?.sigma()?;
    let base = model::build_9_42();
    let rows = (1..=k_max)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&k| -> Result<TableRow, CliError> {
            let copies = (n + k) as usize;
            let d = engine::d_plus_one_surgery(&engine::tensor_power(&base, copies)?)?;
            let sigma = bounds::signature_connected_sum(&vec![sigma_9_42; copies]);
            let lower = bounds::cp2_bound(sigma, d, n)?;
            let upper = i64::from(k);
            Ok(TableRow {
                n,
                k,
                lower,
                upper,
                equal: lower == upper,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TableOutput {
        n,
        k_max,
        sigma_9_42,
        rows,
    })
}

pub fn cmd_audit(seed: u64, trials: usize) -> AuditOutput {
    let s = lattice::run_audit(seed, trials);
    AuditOutput {
        seed: s.seed,
        trials: s.trials,
        ineq3_held: s.ineq3_held,
        ineq5_held: s.ineq5_held,
        alt_reading_disagreements: s.alt_reading_disagreements,
        failure_total: s.failures.total(),
        failures: s.failures,
    }
}

/// Returns the report and the exit code it warrants.
pub fn cmd_validate(path: &Path) -> (ValidateOutput, i32) {
    let mut out = ValidateOutput {
        path: path.display().to_string(),
        valid: false,
        standard: false,
        generators: None,
        arrows: None,
        error: None,
        report: None,
    };
    let text = match read_file(path) {
        Ok(t) => t,
        Err(e) => {
            out.error = Some(ValidationError {
                code: "io".into(),
                message: e.message,
            });
            return (out, e.code);
        }
    };
    let complex = match model::parse_complex(&text) {
        Ok(c) => c,
        Err(e) => {
            out.error = Some(ValidationError {
                code: e.code().into(),
                message: e.to_string(),
            });
            return (out, CliError::from(e).code);
        }
    };
    out.valid = true;
    out.generators = Some(complex.len());
    out.arrows = Some(complex.arrow_count());
    let report = model::validate_standard(&complex);
    out.standard = report.standard;
    out.report = Some(report);
    let code = if out.standard {
        EXIT_OK
    } else {
        EXIT_VALIDATION
    };
    (out, code)
}

fn failure(e: CliError) -> Outcome {
    Outcome {
        code: e.code,
        stdout: String::new(),
        stderr: format!("error: {}\n", e.message),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> Outcome {
    let fixtures = cli
        .fixtures_dir
        .clone()
        .unwrap_or_else(default_fixtures_dir);
    let format = cli.format;
    let ok = |stdout: String| Outcome {
        code: EXIT_OK,
        stdout,
        stderr: String::new(),
    };
    match &cli.command {
        Command::DInvariant { knot, surgery } => {
            let out =
                match resolve_knot(knot, &fixtures).and_then(|k| cmd_d_invariant(&k, *surgery)) {
                    Ok(o) => o,
                    Err(e) => return failure(e),
                };
            ok(match format {
                Format::Json => to_json(&out),
                Format::Csv => to_csv(
                    Some(&[
                        "knot",
                        "surgery",
                        "d",
                        "translate_l_achieving_min",
                        "translate",
                        "nonzero",
                        "grading",
                    ]),
                    out.grading_trace.iter().map(|t| {
                        (
                            &out.knot,
                            out.surgery,
                            out.d,
                            out.translate_l_achieving_min,
                            t.translate,
                            t.nonzero,
                            t.grading,
                        )
                    }),
                ),
            })
        }
        Command::Bound { knot, manifold, n } => {
            let report =
                match resolve_knot(knot, &fixtures).and_then(|k| cmd_bound(&k, *manifold, *n)) {
                    Ok(r) => r,
                    Err(e) => return failure(e),
                };
            ok(match format {
                Format::Json => to_json(&report),
                Format::Csv => {
                    let (kind, n) = match report.bound_kind {
                        BoundKind::Batson => ("batson", None),
                        BoundKind::Cp2 { n } => ("cp2", Some(n)),
                        BoundKind::Prop14 { .. } => ("prop14", None),
                    };
                    to_csv(
                        Some(&[
                            "knot",
                            "sigma",
                            "d_plus",
                            "d_minus",
                            "bound_kind",
                            "n",
                            "bound_value",
                            "formula",
                        ]),
                        [(
                            &report.knot,
                            report.sigma,
                            report.d_plus,
                            report.d_minus,
                            kind,
                            n,
                            report.bound_value,
                            &report.formula,
                        )],
                    )
                }
            })
        }
        Command::ReproduceThm3 { n, k_max } => {
            let table = match cmd_reproduce_thm3(*n, *k_max, &fixtures) {
                Ok(t) => t,
                Err(e) => return failure(e),
            };
            let stdout = match format {
                Format::Json => to_json(&table),
                Format::Csv => to_csv(None, table.rows.iter()),
            };
            let bad: Vec<u32> = table
                .rows
                .iter()
                .filter(|r| !r.equal)
                .map(|r| r.k)
                .collect();
            if bad.is_empty() {
                ok(stdout)
            } else {
                Outcome {
                    code: EXIT_INTERNAL,
                    stdout,
                    stderr: format!("error: lower and upper bounds differ for k in {bad:?}\n"),
                }
            }
        }
        Command::Audit { seed, trials } => {
            let out = cmd_audit(*seed, *trials);
            let stdout = match format {
                Format::Json => to_json(&out),
                Format::Csv => to_csv(
                    Some(&[
                        "seed",
                        "trials",
                        "ineq3_held",
                        "ineq5_held",
                        "alt_reading_disagreements",
                        "epsilon",
                        "characteristic",
                        "dual_route",
                        "pairing",
                        "implication",
                        "ineq2_equivalence",
                        "beta2_minus",
                        "failure_total",
                    ]),
                    [(
                        out.seed,
                        out.trials,
                        out.ineq3_held,
                        out.ineq5_held,
                        out.alt_reading_disagreements,
                        out.failures.epsilon,
                        out.failures.characteristic,
                        out.failures.dual_route,
                        out.failures.pairing,
                        out.failures.implication,
                        out.failures.ineq2_equivalence,
                        out.failures.beta2_minus,
                        out.failure_total,
                    )],
                ),
            };
            if out.failure_total == 0 {
                ok(stdout)
            } else {
                Outcome {
                    code: EXIT_INTERNAL,
                    stdout,
                    stderr: format!(
                        "error: {} internal-consistency failures\n",
                        out.failure_total
                    ),
                }
            }
        }
        Command::Validate { path } => {
            let (out, code) = cmd_validate(path);
            let stdout = match format {
                Format::Json => to_json(&out),
                Format::Csv => to_csv(
                    Some(&[
                        "path",
                        "valid",
                        "standard",
                        "generators",
                        "arrows",
                        "error_code",
                    ]),
                    [(
                        &out.path,
                        out.valid,
                        out.standard,
                        out.generators,
                        out.arrows,
                        out.error.as_ref().map(|e| e.code.as_str()),
                    )],
                ),
            };
            let stderr = match (&out.error, &out.report) {
                (Some(e), _) => format!("error: {}\n", e.message),
                (None, Some(r)) if !r.standard => {
                    format!("error: not standard: {}\n", r.issues.join("; "))
                }
                _ => String::new(),
            };
            Outcome {
                code,
                stdout,
                stderr,
            }
        }
    }
}
