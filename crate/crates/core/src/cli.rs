//! The `bicomplex` command line: `analyze`, `generate`, `verify`.
//!
//! Exit codes are stable:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success, every check passed |
//! | 1 | a counterexample was found |
//! | 2 | input could not be read or parsed (file or arguments) |
//! | 3 | contract violation, e.g. a square-only check on rectangular input or a bad generator spec |
//!
//! `BICOMPLEX_MODE` (`exact` or `float`) sets the default `--mode`.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

use crate::error::Error;
use crate::format::{read_document, ComponentCertificates, DocumentKind, Encoding, MatrixDocument, Metadata, Shape};
use crate::generators::{derive_seed, generate, Certificate, GenKind, GenSpec, DEFAULT_ENTRY_BOUND, RNG_ALGORITHM};
use crate::matrix::float::{FloatBicomplexMatrix, DEFAULT_TOLERANCE};
use crate::matrix::{BicomplexMatrix, NilpotencyReport, SingularityReport};
use crate::scalar::ScalarClass;
use crate::verify::{self, Suite, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CONTRACT: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "bicomplex",
    version,
    about = "Exact analysis of bicomplex matrices and operators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report idempotency, nilpotency, and singularity of a matrix file.
    Analyze(AnalyzeArgs),
    /// Write certified random instances.
    Generate(GenerateArgs),
    /// Run the theorem checks over seeded instances, or replay one file.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Exact,
    Float,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Predicate {
    Idempotent,
    Nilpotent,
    Singular,
}

#[derive(clap::Args, Debug)]
struct AnalyzeArgs {
    path: PathBuf,
    #[arg(long, value_enum, env = "BICOMPLEX_MODE", default_value = "exact")]
    mode: Mode,
    /// Tolerance for float mode; ignored in exact mode.
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    tol: f64,
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
    /// Require a predicate to be applicable (exit 3 on rectangular input).
    /// Without any `--check`, all predicates are reported when applicable.
    #[arg(long = "check", value_enum)]
    checks: Vec<Predicate>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Nilpotent,
    Idempotent,
    Invertible,
    Arbitrary,
}

#[derive(clap::Args, Debug)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    kind: KindArg,
    #[arg(long)]
    n: usize,
    /// Nilpotency index of the `e₁` component.
    #[arg(long)]
    k: Option<usize>,
    /// Nilpotency index of the `e₂` component; defaults to `--k`.
    #[arg(long)]
    k2: Option<usize>,
    /// Idempotent rank of the `e₁` component.
    #[arg(long)]
    r: Option<usize>,
    /// Idempotent rank of the `e₂` component; defaults to `--r`.
    #[arg(long)]
    r2: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    count: usize,
    #[arg(long, default_value = ".")]
    out: PathBuf,
    #[arg(long, default_value_t = DEFAULT_ENTRY_BOUND)]
    bound: u32,
    #[arg(long, value_enum, default_value = "idempotent")]
    encoding: EncodingArg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EncodingArg {
    Idempotent,
    Cartesian,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    All,
    Scalar,
    Nilpotent,
    Idempotent,
}

#[derive(clap::Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    suite: SuiteArg,
    #[arg(long, default_value_t = 100)]
    instances: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Directory for counterexample files.
    #[arg(long, default_value = "counterexamples")]
    out: PathBuf,
    /// Replay a single file: check its certificates and structural identities.
    #[arg(long)]
    instance: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
}

/// Counts of entry scalars by class.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EntrySummary {
    pub total: usize,
    pub zero: usize,
    pub invertible: usize,
    pub zero_divisor: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Singularity {
    pub singular: bool,
    pub minus_singular: bool,
    pub plus_singular: bool,
}

impl From<SingularityReport> for Singularity {
    fn from(r: SingularityReport) -> Self {
        Self {
            singular: r.is_singular(),
            minus_singular: r.minus_singular,
            plus_singular: r.plus_singular,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Determinants {
    pub minus: String,
    pub plus: String,
}

/// Everything `analyze` knows about one file. Square-only fields are `None`
/// and listed in `not_applicable` for rectangular input.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub kind: DocumentKind,
    pub shape: Shape,
    pub encoding: Encoding,
    pub mode: Mode,
    pub tolerance: Option<f64>,
    pub entries: EntrySummary,
    pub is_zero: bool,
    pub is_idempotent: Option<bool>,
    pub nilpotency: Option<NilpotencyReport>,
    pub singularity: Option<Singularity>,
    pub determinants: Option<Determinants>,
    pub not_applicable: Vec<String>,
}

fn float_string(z: Complex64) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{}{}{}i", z.re, sign, z.im.abs())
}

pub fn analyze_matrix(
    m: &BicomplexMatrix,
    kind: DocumentKind,
    encoding: Encoding,
    mode: Mode,
    tol: f64,
) -> crate::error::Result<AnalysisReport> {
    let (rows, cols) = m.shape();
    let mut entries = EntrySummary::default();
    for s in m.entries() {
        entries.total += 1;
        match s.classify() {
            ScalarClass::Zero => entries.zero += 1,
            ScalarClass::Invertible => entries.invertible += 1,
            ScalarClass::ZeroDivisor => entries.zero_divisor += 1,
        }
    }
    let mut report = AnalysisReport {
        kind,
        shape: Shape { rows, cols },
        encoding,
        mode,
        tolerance: (mode == Mode::Float).then_some(tol),
        entries,
        is_zero: m.is_zero(),
        is_idempotent: None,
        nilpotency: None,
        singularity: None,
        determinants: None,
        not_applicable: Vec::new(),
    };
    if !m.is_square() {
        report.not_applicable = ["is_idempotent", "nilpotency", "singularity", "determinants"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        return Ok(report);
    }
    match mode {
        Mode::Exact => {
            let (dm, dp) = m.determinants()?;
            report.is_idempotent = Some(m.is_idempotent()?);
            report.nilpotency = Some(m.nilpotency()?);
            report.singularity = Some(m.is_singular()?.into());
            report.determinants = Some(Determinants {
                minus: dm.to_string(),
                plus: dp.to_string(),
            });
        }
        Mode::Float => {
            let f = FloatBicomplexMatrix::from_exact(m, tol);
            let (dm, dp) = f.determinants()?;
            report.is_idempotent = Some(f.is_idempotent()?);
            report.nilpotency = Some(f.nilpotency()?);
            report.singularity = Some(f.is_singular()?.into());
            report.determinants = Some(Determinants {
                minus: float_string(dm),
                plus: float_string(dp),
            });
        }
    }
    Ok(report)
}

fn opt<T: std::fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "n/a".to_string(), |x| x.to_string())
}

impl AnalysisReport {
    /// One `key: value` line per structured field.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let mut line = |k: &str, v: String| {
            s.push_str(k);
            s.push_str(": ");
            s.push_str(&v);
            s.push('\n');
        };
        line("kind", variant_name(&self.kind));
        line("shape", format!("{}x{}", self.shape.rows, self.shape.cols));
        line("encoding", self.encoding.as_str().to_string());
        line("mode", variant_name(&self.mode));
        line("tolerance", opt(&self.tolerance));
        let e = &self.entries;
        line(
            "entries",
            format!(
                "total={} zero={} invertible={} zero_divisor={}",
                e.total, e.zero, e.invertible, e.zero_divisor
            ),
        );
        line("is_zero", self.is_zero.to_string());
        line("is_idempotent", opt(&self.is_idempotent));
        match &self.nilpotency {
            Some(n) => {
                line("is_nilpotent", n.is_nilpotent.to_string());
                line("nilpotency_index", opt(&n.index));
                line("minus_index", opt(&n.minus_index));
                line("plus_index", opt(&n.plus_index));
            }
            None => line("is_nilpotent", "n/a".into()),
        }
        match &self.singularity {
            Some(sg) => {
                line("is_singular", sg.singular.to_string());
                line("minus_singular", sg.minus_singular.to_string());
                line("plus_singular", sg.plus_singular.to_string());
            }
            None => line("is_singular", "n/a".into()),
        }
        match &self.determinants {
            Some(d) => {
                line("det_minus", d.minus.clone());
                line("det_plus", d.plus.clone());
            }
            None => line("determinants", "n/a".into()),
        }
        line(
            "not_applicable",
            if self.not_applicable.is_empty() {
                "none".into()
            } else {
                self.not_applicable.join(",")
            },
        );
        s
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// snake_case name of a unit variant, as serde writes it.
fn variant_name<T: Serialize>(v: &T) -> String {
    match serde_json::to_value(v) {
        Ok(serde_json::Value::String(s)) => s,
        other => format!("{other:?}"),
    }
}

fn exit_for(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => EXIT_PARSE,
        _ => EXIT_CONTRACT,
    }
}

fn read_input(path: &Path, err: &mut dyn Write) -> Result<String, i32> {
    fs::read_to_string(path).map_err(|e| {
        let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
        EXIT_PARSE
    })
}

fn cmd_analyze(args: AnalyzeArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let text = match read_input(&args.path, err) {
        Ok(t) => t,
        Err(code) => return code,
    };
    let (doc, decoded) = match read_document(&text) {
        Ok(d) => d,
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", args.path.display());
            return exit_for(&e);
        }
    };
    let m = decoded.as_bicomplex();
    if !m.is_square() && !args.checks.is_empty() {
        let (r, c) = m.shape();
        let _ = writeln!(
            err,
            "error: {:?} check needs a square matrix, got {r}x{c}",
            args.checks[0]
        );
        return EXIT_CONTRACT;
    }
    if args.mode == Mode::Float && !(args.tol.is_finite() && args.tol >= 0.0) {
        let _ = writeln!(err, "error: --tol must be a finite nonnegative number");
        return EXIT_CONTRACT;
    }
    let mut report = match analyze_matrix(&m, doc.kind, doc.encoding, args.mode, args.tol) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit_for(&e);
        }
    };
    if !args.checks.is_empty() {
        if !args.checks.contains(&Predicate::Idempotent) {
            report.is_idempotent = None;
        }
        if !args.checks.contains(&Predicate::Nilpotent) {
            report.nilpotency = None;
        }
        if !args.checks.contains(&Predicate::Singular) {
            report.singularity = None;
            report.determinants = None;
        }
    }
    let body = match args.format {
        OutputFormat::Text => report.to_text(),
        OutputFormat::Json => report.to_json(),
    };
    let _ = out.write_all(body.as_bytes());
    EXIT_OK
}

fn component_kind(args: &GenerateArgs, second: bool) -> Result<GenKind, String> {
    let pick = |first: Option<usize>, other: Option<usize>, flag: &str| {
        let v = if second { other.or(first) } else { first };
        v.ok_or_else(|| format!("--kind {:?} needs --{flag}", args.kind).to_lowercase())
    };
    Ok(match args.kind {
        KindArg::Nilpotent => GenKind::Nilpotent {
            index: pick(args.k, args.k2, "k")?,
        },
        KindArg::Idempotent => GenKind::Idempotent {
            rank: pick(args.r, args.r2, "r")?,
        },
        KindArg::Invertible => GenKind::Invertible,
        KindArg::Arbitrary => GenKind::Arbitrary,
    })
}

fn certificate_name(c: &Certificate) -> String {
    match c {
        Certificate::NilpotentIndex(k) => format!("nilpotent_index={k}"),
        Certificate::IdempotentRank(r) => format!("idempotent_rank={r}"),
        Certificate::UnitDeterminant(d) => format!("unit_determinant={d}"),
        Certificate::None => "none".into(),
    }
}

fn cmd_generate(args: GenerateArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let kinds = match (component_kind(&args, false), component_kind(&args, true)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_CONTRACT;
        }
    };
    if let Err(e) = fs::create_dir_all(&args.out) {
        let _ = writeln!(err, "error: cannot create {}: {e}", args.out.display());
        return EXIT_CONTRACT;
    }
    let kind_name = format!("{:?}", args.kind).to_lowercase();
    let encoding = match args.encoding {
        EncodingArg::Idempotent => Encoding::Idempotent,
        EncodingArg::Cartesian => Encoding::Cartesian,
    };
    for i in 0..args.count {
        let seed = derive_seed(args.seed, i as u64);
        let make = |stream: u64, kind: GenKind| {
            generate(&GenSpec::new(derive_seed(seed, stream), args.n, kind).with_entry_bound(args.bound))
        };
        let (a, b) = match (make(1, kinds.0), make(2, kinds.1)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) => {
                let _ = writeln!(err, "error: {e}");
                return exit_for(&e);
            }
        };
        let m = BicomplexMatrix::compose(a.matrix, b.matrix).expect("components share a shape");
        let doc = MatrixDocument::from_matrix(&m, encoding).with_metadata(Metadata {
            rng: RNG_ALGORITHM.into(),
            seed,
            kind: kind_name.clone(),
            n: args.n,
            entry_bound: args.bound,
            certificate: ComponentCertificates {
                minus: a.certificate,
                plus: b.certificate,
            },
        });
        let path = args
            .out
            .join(format!("{kind_name}_n{}_s{}_{i:03}.json", args.n, args.seed));
        if let Err(e) = fs::write(&path, doc.to_json()) {
            let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
            return EXIT_CONTRACT;
        }
        let _ = writeln!(
            out,
            "{}: minus {} plus {}",
            path.display(),
            certificate_name(&a.certificate),
            certificate_name(&b.certificate)
        );
    }
    EXIT_OK
}

fn cmd_verify(args: VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if let Some(path) = &args.instance {
        let text = match read_input(path, err) {
            Ok(t) => t,
            Err(code) => return code,
        };
        let (doc, decoded) = match read_document(&text) {
            Ok(d) => d,
            Err(e) => {
                let _ = writeln!(err, "error: {}: {e}", path.display());
                return exit_for(&e);
            }
        };
        let failed = verify::check_document(&doc, &decoded);
        if failed.is_empty() {
            let _ = writeln!(out, "PASS {}", path.display());
            return EXIT_OK;
        }
        for identity in &failed {
            let _ = writeln!(out, "FAIL {}: {identity}", path.display());
        }
        return EXIT_COUNTEREXAMPLE;
    }
    let suite = match args.suite {
        SuiteArg::All => Suite::All,
        SuiteArg::Scalar => Suite::Scalar,
        SuiteArg::Nilpotent => Suite::Nilpotent,
        SuiteArg::Idempotent => Suite::Idempotent,
    };
    let report = verify::run(&VerifyConfig {
        suite,
        instances: args.instances,
        seed: args.seed,
    });
    let mut written = Vec::new();
    for (n, cx) in report.counterexamples().enumerate() {
        if let Some(doc) = &cx.document {
            if n == 0 {
                let _ = fs::create_dir_all(&args.out);
            }
            let path = args.out.join(format!("{}_{:04}.json", cx.check, cx.instance));
            match fs::write(&path, doc.to_json()) {
                Ok(()) => written.push(path),
                Err(e) => {
                    let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                }
            }
        }
    }
    match args.format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
            s.push('\n');
            let _ = out.write_all(s.as_bytes());
        }
        OutputFormat::Text => {
            for c in &report.checks {
                let status = if c.counterexamples.is_empty() { "PASS" } else { "FAIL" };
                let _ = writeln!(out, "{status} {} ({}/{})", c.check, c.passed, c.instances);
                for cx in &c.counterexamples {
                    let _ = writeln!(out, "  instance {}: {}", cx.instance, cx.identity);
                }
            }
            for p in &written {
                let _ = writeln!(out, "counterexample written to {}", p.display());
            }
            let total: usize = report.checks.iter().map(|c| c.instances).sum();
            let _ = writeln!(
                out,
                "{}: {} checks, {total} instances, seed {}",
                if report.passed() { "ok" } else { "FAILED" },
                report.checks.len(),
                report.seed
            );
        }
    }
    if report.passed() {
        EXIT_OK
    } else {
        EXIT_COUNTEREXAMPLE
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match cli.command {
        Command::Analyze(a) => cmd_analyze(a, out, err),
        Command::Generate(g) => cmd_generate(g, out, err),
        Command::Verify(v) => cmd_verify(v, out, err),
    }
}
