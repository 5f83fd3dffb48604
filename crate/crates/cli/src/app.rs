use crate::document::{matrix_from_strings, matrix_to_strings, AlgebraDocument, Kind, SchemaError};
use adlie::construct::{cotangent, double_extension, modified_cotangent, normal_form};
use adlie::exactla::{BilinearSpace, Mat};
use adlie::geomiso::{build_cross_isometry, geometry_report, isometry_descriptor, muller_check, muller_check_between};
use adlie::jmaps::{decide_admits_ad_invariant, Decision};
use adlie::rhoform::{generate_with, Generated, NonexistenceCertificate};
use adlie::rmatrix::{coboundary, lift_r, r_bracket, RMatrix};
use adlie::liealg::{is_skew_for, series, MetricLieAlgebra};
use adlie::Error;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use std::io::Write;
use std::path::{Path, PathBuf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "adlie", version, about = "Exact tools for 2-step nilpotent Lie algebras with ad-invariant metrics")]
pub struct Cli {
    /// Print only machine-readable JSON; suppresses the summary on stderr.
    #[arg(long, global = true)]
    json: bool,
    /// Write the main JSON output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Seed for commands that sample random fixtures.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a map ρ in the given dimension, or a nonexistence certificate.
    Generate {
        #[arg(long)]
        dim: usize,
        /// Random forms checked by a certificate.
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Re-check every document in a file.
    Verify(Input),
    /// The cotangent algebra h* ⋊ h of a Lie algebra.
    Cotangent(AlgebraArg),
    /// The modified cotangent n(V, ρ).
    ModifiedCotangent(RhoArg),
    /// Double extension of a metric Lie algebra by a skew derivation.
    DoubleExtend {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long, value_name = "FILE")]
        derivation: PathBuf,
    },
    /// Split a metric algebra as a central factor plus a modified cotangent.
    NormalForm(AlgebraArg),
    /// Decide whether a 2-step algebra admits an ad-invariant metric.
    Decide {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// `identity` or a file holding a Gram matrix.
        #[arg(long, default_value = "identity")]
        inner: String,
    },
    /// Connection, curvature, Ricci form, holonomy and isometry group.
    Geom(AlgebraArg),
    /// Classical r-matrix checks, the lift to the modified cotangent and the cobracket.
    Rmatrix {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// `zero`, `identity` or a file holding a matrix.
        #[arg(long)]
        r: String,
    },
    /// Isometry group descriptor, cross isometries and Müller checks.
    Isometry {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long, value_name = "FILE")]
        other: Option<PathBuf>,
        #[arg(long, value_name = "FILE")]
        map: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct AlgebraArg {
    #[arg(long, value_name = "FILE")]
    algebra: PathBuf,
}

#[derive(Args, Debug)]
struct RhoArg {
    #[arg(long, value_name = "FILE")]
    rho: PathBuf,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Input {
    #[arg(long, value_name = "FILE")]
    algebra: Option<PathBuf>,
    #[arg(long, value_name = "FILE")]
    rho: Option<PathBuf>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Failed(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Failed(_) => EXIT_FAILED,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }
}

impl From<SchemaError> for CliError {
    fn from(e: SchemaError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::DimensionMismatch { .. }
            | Error::ShapeMismatch(_)
            | Error::SizeMismatch(_)
            | Error::BadParameter(_)
            | Error::OddDimension(_)
            | Error::NotSymmetric => CliError::Usage(e.to_string()),
            Error::Inconsistent | Error::NoSuchComplement | Error::TooManyParameters { .. } => {
                CliError::Internal(e.to_string())
            }
            _ => CliError::Failed(e.to_string()),
        }
    }
}

/// What a command produced: the JSON payload, a one-line summary and the exit code.
struct Report {
    value: Value,
    summary: String,
    code: i32,
}

impl Report {
    fn ok(value: Value, summary: impl Into<String>) -> Self {
        Report { value, summary: summary.into(), code: EXIT_OK }
    }

    fn with_status(value: Value, summary: impl Into<String>, ok: bool) -> Self {
        Report { value, summary: summary.into(), code: if ok { EXIT_OK } else { EXIT_FAILED } }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn read_json(path: &Path) -> Result<Value, CliError> {
    serde_json::from_str(&read(path)?).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<AlgebraDocument, CliError> {
    AlgebraDocument::parse(&read(path)?).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn load_metric(path: &Path) -> Result<MetricLieAlgebra, CliError> {
    load(path)?.to_metric_lie().map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

/// A matrix file: a bare array of rows, or any document carrying a `gram`.
fn load_matrix(path: &Path) -> Result<Mat, CliError> {
    let value = read_json(path)?;
    let rows = match value.get("gram") {
        Some(g) => g.clone(),
        None => value,
    };
    let rows: Vec<Vec<String>> = serde_json::from_value(rows)
        .map_err(|e| CliError::Usage(format!("{}: expected an array of rows of rational strings: {e}", path.display())))?;
    matrix_from_strings(&path.display().to_string(), &rows).map_err(CliError::from)
}

fn matrix_or_keyword(arg: &str, n: usize) -> Result<Mat, CliError> {
    match arg {
        "identity" => Ok(Mat::identity(n)),
        "zero" => Ok(Mat::zeros(n, n)),
        file => load_matrix(Path::new(file)),
    }
}

fn doc_value(doc: &AlgebraDocument) -> Value {
    serde_json::to_value(doc).expect("documents always serialize")
}

fn certificate_value(c: &NonexistenceCertificate) -> Value {
    json!({
        "kind": "nonexistence_certificate",
        "dim": c.dim,
        "witness_rule": c.witness_rule,
        "checked_samples": c.checked_samples,
        "all_samples_passed": c.all_samples_passed,
        "form_space_dim": c.form_space_dim,
        "symbolic_check": c.symbolic_check,
    })
}

fn generate_cmd(dim: usize, samples: usize, seed: u64) -> Result<Report, CliError> {
    match generate_with(dim, samples, seed)? {
        Generated::Rho(rho) => {
            let doc = AlgebraDocument::from_rho(&rho).map_err(CliError::Internal)?;
            Ok(Report::ok(doc_value(&doc), format!("generated ρ in dimension {dim}")))
        }
        Generated::Certificate(c) => {
            let summary = format!("no injective ρ with ρ(v)v = 0 exists in dimension {dim}");
            Ok(Report { value: certificate_value(&c), summary, code: EXIT_FAILED })
        }
    }
}

fn collect_documents(value: &Value, path: String, out: &mut Vec<(String, Value)>) {
    match value {
        Value::Object(map) if map.contains_key("schema_version") => out.push((path, value.clone())),
        Value::Object(map) => {
            for (k, v) in map {
                collect_documents(v, format!("{path}.{k}"), out);
            }
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                collect_documents(v, format!("{path}[{i}]"), out);
            }
        }
        _ => {}
    }
}

fn verify_document(doc: &AlgebraDocument) -> Result<Value, CliError> {
    Ok(match doc.kind {
        Kind::Lie => {
            let l = doc.to_lie()?;
            let rep = l.validate();
            json!({"kind": "lie", "valid": rep.is_valid(), "jacobi": rep.is_valid()})
        }
        Kind::MetricLie => {
            let m = doc.to_metric_lie()?;
            let valid = m.algebra().is_valid();
            let violation = m.ad_invariance_violation();
            json!({
                "kind": "metric_lie",
                "valid": valid && violation.is_none(),
                "jacobi": valid,
                "ad_invariant": violation.is_none(),
                "violation": violation.map(|(i, j, k)| vec![i, j, k]),
            })
        }
        Kind::Rho => {
            let rho = doc.to_rho()?;
            let rep = rho.validate();
            json!({
                "kind": "rho",
                "valid": rep.is_valid(),
                "skew": rep.skew,
                "ss": rep.ss,
                "injective": rep.injective,
                "skew_violations": rep.skew_violations,
            })
        }
    })
}

fn verify_cmd(input: &Input) -> Result<Report, CliError> {
    let path = input.algebra.as_ref().or(input.rho.as_ref()).expect("clap enforces one input");
    let value = read_json(path)?;
    let mut docs = Vec::new();
    collect_documents(&value, "$".into(), &mut docs);
    if docs.is_empty() {
        return Err(CliError::Usage(format!("{}: no documents found", path.display())));
    }
    let mut results = Vec::new();
    let mut all_valid = true;
    for (at, v) in docs {
        let doc = AlgebraDocument::from_value(v).map_err(|e| CliError::Usage(format!("{at}: {e}")))?;
        if input.rho.is_some() && doc.kind != Kind::Rho {
            return Err(CliError::Usage(format!("{at}: --rho expects rho documents")));
        }
        let mut r = verify_document(&doc)?;
        all_valid &= r["valid"] == Value::Bool(true);
        r["path"] = Value::String(at);
        results.push(r);
    }
    let n = results.len();
    let summary = if all_valid { format!("{n} document(s) valid") } else { format!("invalid document among {n}") };
    Ok(Report::with_status(json!({"valid": all_valid, "documents": results}), summary, all_valid))
}

fn metric_report(m: &MetricLieAlgebra, what: &str) -> Report {
    let s = series(m.algebra());
    let summary = format!(
        "{what}: dim {}, signature {:?}, nilpotency class {:?}",
        m.dim(),
        m.metric().signature().pair(),
        s.nilpotency_class
    );
    Report::ok(doc_value(&AlgebraDocument::from_metric_lie(m)), summary)
}

fn normal_form_cmd(path: &Path) -> Result<Report, CliError> {
    let m = load_metric(path)?;
    let nf = normal_form(&m)?;
    let rho = AlgebraDocument::from_rho(&nf.rho).map_err(CliError::Internal)?;
    let value = json!({
        "corank": nf.corank,
        "central_gram": matrix_to_strings(&nf.central_gram),
        "iso": matrix_to_strings(&nf.iso),
        "rho": doc_value(&rho),
        "model": doc_value(&AlgebraDocument::from_metric_lie(&nf.model)),
    });
    Ok(Report::ok(value, format!("corank {}, ρ of dimension {}", nf.corank, nf.rho.dim())))
}

fn decide_cmd(path: &Path, inner: &str) -> Result<Report, CliError> {
    let l = load(path)?.to_lie()?;
    let gram = matrix_or_keyword(inner, l.dim())?;
    let inner = BilinearSpace::new(gram)?;
    Ok(match decide_admits_ad_invariant(&l, &inner)? {
        Decision::Yes { metric, s } => Report::ok(
            json!({"admits": true, "metric": matrix_to_strings(metric.gram()), "s": matrix_to_strings(&s)}),
            "admits an ad-invariant metric",
        ),
        Decision::No { failed } => Report::with_status(
            json!({"admits": false, "failed": failed.label()}),
            format!("no ad-invariant metric: condition ({}) fails", failed.label()),
            false,
        ),
    })
}

fn geom_cmd(path: &Path) -> Result<Report, CliError> {
    let m = load_metric(path)?;
    let g = geometry_report(&m)?;
    let value = json!({
        "is_flat": g.is_flat,
        "ricci": matrix_to_strings(&g.ricci),
        "killing": matrix_to_strings(&g.killing),
        "holonomy_dim": g.holonomy_basis.len(),
        "holonomy_basis": g.holonomy_basis.iter().map(matrix_to_strings).collect::<Vec<_>>(),
        "isometry": g.isometry.to_string(),
    });
    let summary = format!("flat: {}, holonomy dim {}, isometry {}", g.is_flat, g.holonomy_basis.len(), g.isometry);
    Ok(Report::ok(value, summary))
}

fn rmatrix_cmd(path: &Path, r_arg: &str) -> Result<Report, CliError> {
    let m = load_metric(path)?;
    let r = matrix_or_keyword(r_arg, m.dim())?;
    let rb = r_bracket(&RMatrix::new(m.algebra().clone(), r.clone())?);
    let skew = is_skew_for(m.gram(), &r);
    let lift = if m.metric().is_positive_definite() {
        let (nn, lifted) = lift_r(&m, &r)?;
        let lrb = r_bracket(&lifted);
        json!({
            "classical": lrb.classical,
            "skew": is_skew_for(nn.gram(), &lifted.r),
            "r": matrix_to_strings(&lifted.r),
            "algebra": doc_value(&AlgebraDocument::from_metric_lie(&nn)),
        })
    } else {
        Value::Null
    };
    let cobracket = if skew && m.is_ad_invariant() {
        let cb = coboundary(&m, &r)?;
        json!({
            "cocycle": cb.cocycle,
            "dual_jacobi": cb.dual_jacobi,
            "matches_r_bracket": cb.matches_r_bracket,
            "bialgebra": cb.is_bialgebra(),
        })
    } else {
        Value::Null
    };
    let value = json!({
        "classical": rb.classical,
        "violation": rb.violation.map(|(i, j, k)| vec![i, j, k]),
        "skew": skew,
        "lift": lift,
        "cobracket": cobracket,
    });
    let summary = format!("classical: {}, skew: {skew}", rb.classical);
    Ok(Report::ok(value, summary))
}

fn isometry_cmd(path: &Path, other: Option<&Path>, map: Option<&Path>) -> Result<Report, CliError> {
    let m = load_metric(path)?;
    let desc = isometry_descriptor(&m)?;
    let mut value = json!({"descriptor": desc.to_string()});
    let mut ok = true;
    let mut summary = format!("isometry group descriptor {desc}");
    let m2 = other.map(load_metric).transpose()?;
    if let Some(m2) = &m2 {
        let a = build_cross_isometry(&m, m2)?;
        value["cross_isometry"] = json!(matrix_to_strings(&a));
        summary.push_str("; cross isometry built");
    }
    if let Some(map) = map {
        let a = load_matrix(map)?;
        let passes = match &m2 {
            Some(m2) => muller_check_between(&m, m2, &a)?,
            None => muller_check(&m, &a)?,
        };
        value["muller"] = Value::Bool(passes);
        ok &= passes;
        summary.push_str(&format!("; map passes Müller conditions: {passes}"));
    }
    Ok(Report::with_status(value, summary, ok))
}

fn execute(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Generate { dim, samples } => generate_cmd(*dim, *samples, cli.seed),
        Command::Verify(input) => verify_cmd(input),
        Command::Cotangent(a) => {
            let l = load(&a.algebra)?.to_lie()?;
            Ok(metric_report(&cotangent(&l)?, "cotangent"))
        }
        Command::ModifiedCotangent(r) => {
            let rho = load(&r.rho)?.to_rho()?;
            Ok(metric_report(&modified_cotangent(&rho)?, "modified cotangent"))
        }
        Command::DoubleExtend { algebra, derivation } => {
            let m = load_metric(&algebra.algebra)?;
            let s = load_matrix(derivation)?;
            Ok(metric_report(&double_extension(&m, &s)?, "double extension"))
        }
        Command::NormalForm(a) => normal_form_cmd(&a.algebra),
        Command::Decide { algebra, inner } => decide_cmd(&algebra.algebra, inner),
        Command::Geom(a) => geom_cmd(&a.algebra),
        Command::Rmatrix { algebra, r } => rmatrix_cmd(&algebra.algebra, r),
        Command::Isometry { algebra, other, map } => isometry_cmd(&algebra.algebra, other.as_deref(), map.as_deref()),
    }
}

fn emit(cli: &Cli, report: &Report, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(&report.value).expect("values always serialize");
    match &cli.out {
        Some(path) => std::fs::write(path, format!("{text}\n"))
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?,
        None => writeln!(out, "{text}").map_err(|e| CliError::Internal(e.to_string()))?,
    }
    if !cli.json {
        writeln!(err, "{}", report.summary).map_err(|e| CliError::Internal(e.to_string()))?;
    }
    Ok(())
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{rendered}") } else { write!(out, "{rendered}") };
            return code;
        }
    };
    let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| execute(&cli)))
        .unwrap_or_else(|_| Err(CliError::Internal("invariant breach".into())));
    let result = outcome.and_then(|report| emit(&cli, &report, out, err).map(|_| report.code));
    match result {
        Ok(code) => code,
        Err(e) => {
            if cli.json {
                let _ = writeln!(out, "{}", json!({"error": e.to_string(), "exit_code": e.exit_code()}));
            }
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
