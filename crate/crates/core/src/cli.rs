//! Command-line front end: `list`, `eval` and `verify`.
//!
//! Exit codes: 0 on success, 1 when a verification fails or an evaluation
//! errors, 2 on usage or configuration errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rug::Float;
use serde::{Deserialize, Serialize};

use crate::catalog::{catalog, lookup, verify_all, verify_selected, VerificationReport, VerifyOptions};
use crate::dbhs::{deformed_qexp, phi_big, phi_classic, r_alpha, SeriesSpec};
use crate::error::Error;
use crate::numerics::{Precision, Scalar};
use crate::qcalc::{qbinomial, qpochhammer, qpochhammer_inf, TruncationPolicy};
use crate::stfib::{
    catalan_st, central_fibonomial, fib_binet, fib_int, fibonomial, fibonomial_general, STFamily, STParams,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "qlehmer", version, about = "Deformed q-series, (s,t)-fibonomials and Lehmer-type identity checks")]
pub struct Cli {
    #[command(flatten)]
    pub config: ConfigArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct ConfigArgs {
    /// Working precision in bits.
    #[arg(long, global = true, env = "QLEHMER_PRECISION", default_value_t = 256)]
    pub precision: u32,
    /// Relative residual tolerance for `verify`.
    #[arg(long, global = true, allow_hyphen_values = true, default_value_t = 1e-25)]
    pub tol: f64,
    /// Term budget for every series and product.
    #[arg(long, global = true, default_value_t = 10_000)]
    pub max_terms: usize,
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// fibonacci, pell, jacobsthal, mersenne, or `s,t`.
    #[arg(long, global = true, default_value = "mersenne")]
    pub family: String,
    /// Explicit family parameters, e.g. `3,-2` or `1/2,1/3`. Overrides --family.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub st: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Sample points per record for `verify`.
    #[arg(long, global = true, default_value_t = 5)]
    pub points: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print every identity id, title and anchor.
    List,
    /// Evaluate one function.
    Eval(Box<EvalArgs>),
    /// Check identities from the catalog.
    Verify {
        ids: Vec<String>,
        #[arg(long, conflicts_with = "ids")]
        all: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Function {
    Qpochhammer,
    Qbinomial,
    Fib,
    Fibonomial,
    CentralFibonomial,
    Catalan,
    Qexp,
    #[value(name = "phi")]
    PhiClassic,
    #[value(name = "Phi")]
    PhiDeformed,
    #[value(name = "R-alpha", alias = "r-alpha")]
    RAlpha,
}

#[derive(Args, Debug, Clone)]
pub struct EvalArgs {
    #[arg(value_enum)]
    pub function: Function,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    /// Base; defaults to the family's `q`.
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub n: Option<i64>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub z: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub u: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    /// Upper parameters, comma separated.
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
    pub upper: Vec<String>,
    /// Lower parameters, comma separated.
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
    pub lower: Vec<String>,
}

/// Validated run settings.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub precision: Precision,
    pub tolerance: f64,
    pub max_terms: usize,
    pub seed: u64,
    pub family: STFamily,
    pub output_format: Format,
    pub points: usize,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn from_args(a: &ConfigArgs) -> Result<Self, CliError> {
        let precision = Precision::new(a.precision).map_err(usage)?;
        if !(a.tol > 0.0 && a.tol.is_finite()) {
            return Err(CliError::Usage(format!("--tol must be positive, got {}", a.tol)));
        }
        if a.max_terms == 0 {
            return Err(CliError::Usage("--max-terms must be positive".into()));
        }
        let family = STFamily::parse(a.st.as_deref().unwrap_or(&a.family)).map_err(usage)?;
        Ok(RunConfig {
            precision,
            tolerance: a.tol,
            max_terms: a.max_terms,
            seed: a.seed,
            family,
            output_format: a.format,
            points: a.points,
            out: a.out.clone(),
        })
    }

    pub fn policy(&self) -> TruncationPolicy {
        TruncationPolicy::for_precision(self.precision).with_max_terms(self.max_terms)
    }

    pub fn verify_options(&self) -> VerifyOptions {
        let mut opts = VerifyOptions::new(self.precision).with_policy(self.policy());
        opts.n_points = self.points;
        opts.seed = self.seed;
        opts.tol = self.tolerance;
        opts
    }

    fn digits(&self) -> usize {
        self.precision.decimal_digits()
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failure(String),
}

fn usage(e: Error) -> CliError {
    CliError::Usage(e.to_string())
}

fn failure(e: Error) -> CliError {
    CliError::Failure(e.to_string())
}

// JSON schemas

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ListEntry {
    pub id: String,
    pub title: String,
    pub anchor: String,
    pub formula: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunInfo {
    pub precision: u32,
    pub tolerance: String,
    pub seed: u64,
    pub family: String,
    pub timestamp: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointJson {
    pub params: BTreeMap<String, String>,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    pub rel_residual: Option<String>,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VariantJson {
    pub name: String,
    pub note: String,
    pub canonical: bool,
    pub max_rel_residual: Option<String>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultJson {
    pub id: String,
    pub family: String,
    pub points: Vec<PointJson>,
    pub max_rel_residual: Option<String>,
    pub pass: bool,
    pub status: String,
    pub flags: Vec<String>,
    pub variants: Vec<VariantJson>,
    pub max_terms_used: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyJson {
    pub run: RunInfo,
    pub results: Vec<ResultJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvalJson {
    pub function: String,
    pub precision: u32,
    pub value: String,
}

fn float_str(f: &Float, digits: usize) -> String {
    f.to_string_radix(10, Some(digits))
}

impl ResultJson {
    pub fn from_report(r: &VerificationReport, digits: usize) -> Self {
        let points = r
            .points
            .iter()
            .map(|p| PointJson {
                params: p.params.iter().map(|(k, v)| (k.clone(), v.to_decimal(digits))).collect(),
                lhs: p.lhs.as_ref().map(|v| v.to_decimal(digits)),
                rhs: p.rhs.as_ref().map(|v| v.to_decimal(digits)),
                rel_residual: p.rel_residual.as_ref().map(|v| float_str(v, digits)),
                lhs_terms: p.lhs_terms,
                rhs_terms: p.rhs_terms,
                error: p.error.clone(),
            })
            .collect();
        ResultJson {
            id: r.id.to_string(),
            family: r.family.clone(),
            points,
            max_rel_residual: r.max_rel_residual.as_ref().map(|v| float_str(v, digits)),
            pass: r.pass,
            status: r.status.as_str().to_string(),
            flags: r.flags.iter().map(|f| f.as_str().to_string()).collect(),
            variants: r
                .variants
                .iter()
                .map(|v| VariantJson {
                    name: v.name.to_string(),
                    note: v.note.to_string(),
                    canonical: v.canonical,
                    max_rel_residual: v.max_rel_residual.as_ref().map(|x| float_str(x, digits)),
                    pass: v.pass,
                })
                .collect(),
            max_terms_used: r.max_terms_used,
        }
    }
}

pub fn verify_json(cfg: &RunConfig, reports: &[VerificationReport]) -> VerifyJson {
    let timestamp = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
    VerifyJson {
        run: RunInfo {
            precision: cfg.precision.bits(),
            tolerance: format!("{:e}", cfg.tolerance),
            seed: cfg.seed,
            family: cfg.family.name(),
            timestamp,
        },
        results: reports.iter().map(|r| ResultJson::from_report(r, cfg.digits())).collect(),
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

fn to_csv<F>(header: &[&str], fill: F) -> Result<String, CliError>
where
    F: FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    let run = || -> csv::Result<Vec<u8>> {
        w.write_record(header)?;
        fill(&mut w)?;
        w.into_inner().map_err(|e| e.into_error().into())
    };
    let bytes = run().map_err(|e| CliError::Failure(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

// Commands

pub fn cmd_list(cfg: &RunConfig) -> Result<(String, i32), CliError> {
    let entries: Vec<ListEntry> = catalog()
        .iter()
        .map(|r| ListEntry {
            id: r.id.to_string(),
            title: r.title.to_string(),
            anchor: r.anchor.citation.to_string(),
            formula: r.anchor.display.to_string(),
        })
        .collect();
    let out = match cfg.output_format {
        Format::Json => to_json(&entries),
        Format::Csv => to_csv(&["id", "title", "anchor", "formula"], |w| {
            for e in &entries {
                w.write_record([&e.id, &e.title, &e.anchor, &e.formula])?;
            }
            Ok(())
        })?,
        Format::Text => {
            let mut s = String::new();
            for e in &entries {
                s.push_str(&format!("{:<26} {:<58} {}\n", e.id, e.title, e.anchor));
            }
            s
        }
    };
    Ok((out, EXIT_OK))
}

fn parse_scalar(name: &str, v: &Option<String>, prec: Precision) -> Result<Scalar, CliError> {
    let src = v.as_ref().ok_or_else(|| CliError::Usage(format!("missing --{name}")))?;
    Scalar::parse(src, prec).map_err(|e| CliError::Usage(format!("--{name}: {e}")))
}

fn parse_list(name: &str, v: &[String], prec: Precision) -> Result<Vec<Scalar>, CliError> {
    v.iter()
        .map(|s| Scalar::parse(s, prec).map_err(|e| CliError::Usage(format!("--{name}: {e}"))))
        .collect()
}

fn need<T: Copy>(name: &str, v: Option<T>) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("missing --{name}")))
}

fn need_index(v: Option<i64>) -> Result<usize, CliError> {
    let n = need("n", v)?;
    usize::try_from(n).map_err(|_| CliError::Usage(format!("--n must be non-negative, got {n}")))
}

fn family_params(cfg: &RunConfig) -> Result<STParams, CliError> {
    cfg.family.params(cfg.precision).map_err(usage)
}

fn base(cfg: &RunConfig, e: &EvalArgs) -> Result<Scalar, CliError> {
    match &e.q {
        Some(_) => parse_scalar("q", &e.q, cfg.precision),
        None => Ok(family_params(cfg)?.q),
    }
}

/// Evaluate one `eval` request.
pub fn evaluate(cfg: &RunConfig, e: &EvalArgs) -> Result<Scalar, CliError> {
    let prec = cfg.precision;
    let policy = cfg.policy();
    let v = match e.function {
        Function::Qpochhammer => {
            let a = parse_scalar("a", &e.a, prec)?;
            let q = base(cfg, e)?;
            match e.n {
                Some(_) => qpochhammer(&a, &q, need_index(e.n)?),
                None => qpochhammer_inf(&a, &q, &policy).map_err(failure)?,
            }
        }
        Function::Qbinomial => qbinomial(need_index(e.n)?, need("k", e.k)?, &base(cfg, e)?).map_err(failure)?,
        Function::Fib => {
            let p = family_params(cfg)?;
            match &e.alpha {
                Some(_) => fib_binet(&parse_scalar("alpha", &e.alpha, prec)?, &p),
                None => fib_int(need("n", e.n)?, &p),
            }
            .map_err(failure)?
        }
        Function::Fibonomial => {
            let p = family_params(cfg)?;
            let k = need("k", e.k)?;
            match &e.alpha {
                Some(_) => fibonomial_general(&parse_scalar("alpha", &e.alpha, prec)?, k, &p),
                None => fibonomial(need_index(e.n)?, k, &p),
            }
            .map_err(failure)?
        }
        Function::CentralFibonomial => central_fibonomial(need_index(e.n)?, &family_params(cfg)?).map_err(failure)?,
        Function::Catalan => catalan_st(need_index(e.n)?, &family_params(cfg)?).map_err(failure)?,
        Function::Qexp => {
            let z = parse_scalar("z", &e.z, prec)?;
            let u = parse_scalar("u", &e.u, prec)?;
            deformed_qexp(&z, &u, &base(cfg, e)?, &policy).and_then(|s| s.checked()).map_err(failure)?
        }
        Function::PhiClassic => {
            let upper = parse_list("upper", &e.upper, prec)?;
            let lower = parse_list("lower", &e.lower, prec)?;
            let z = parse_scalar("z", &e.z, prec)?;
            phi_classic(&upper, &lower, &base(cfg, e)?, &z, &policy).and_then(|s| s.checked()).map_err(failure)?
        }
        Function::PhiDeformed => {
            let spec = SeriesSpec::new(
                parse_list("upper", &e.upper, prec)?,
                parse_list("lower", &e.lower, prec)?,
                base(cfg, e)?,
                parse_scalar("u", &e.u, prec)?,
            );
            let z = parse_scalar("z", &e.z, prec)?;
            phi_big(&spec, &z, &policy).and_then(|s| s.checked()).map_err(failure)?
        }
        Function::RAlpha => {
            let alpha = parse_scalar("alpha", &e.alpha, prec)?;
            let x = parse_scalar("x", &e.x, prec)?;
            let u = parse_scalar("u", &e.u, prec)?;
            r_alpha(&alpha, &x, &u, &family_params(cfg)?, &policy).and_then(|s| s.checked()).map_err(failure)?
        }
    };
    Ok(v)
}

pub fn cmd_eval(cfg: &RunConfig, e: &EvalArgs) -> Result<(String, i32), CliError> {
    let v = evaluate(cfg, e)?;
    let name = e.function.to_possible_value().expect("no skipped variants").get_name().to_string();
    let out = match cfg.output_format {
        Format::Text => format!("{}\n", v.to_display(cfg.digits())),
        Format::Json => to_json(&EvalJson { function: name, precision: cfg.precision.bits(), value: v.to_decimal(cfg.digits()) }),
        Format::Csv => {
            let value = v.to_decimal(cfg.digits());
            to_csv(&["function", "value"], |w| w.write_record([name.as_str(), value.as_str()]))?
        }
    };
    Ok((out, EXIT_OK))
}

fn text_report(cfg: &RunConfig, reports: &[VerificationReport]) -> String {
    let mut s = String::new();
    for r in reports {
        let res = r.max_rel_residual.as_ref().map(|v| format!("{:.3e}", v.to_f64())).unwrap_or_else(|| "error".into());
        s.push_str(&format!("{:<26} {:<22} {:<13} {:>10}  terms={}", r.id, r.family, r.status.as_str(), res, r.max_terms_used));
        for v in r.variants.iter().filter(|v| !v.canonical) {
            let m = v.max_rel_residual.as_ref().map(|x| format!("{:.1e}", x.to_f64())).unwrap_or_else(|| "error".into());
            s.push_str(&format!("  {}={}", v.name, m));
        }
        if let Some(err) = r.points.iter().find_map(|p| p.error.as_ref()) {
            s.push_str(&format!("  [{err}]"));
        }
        s.push('\n');
    }
    let failed = reports.iter().filter(|r| !r.status.accepted()).count();
    s.push_str(&format!(
        "{} reports, {} failed (tol {:e}, {} bits, seed {})\n",
        reports.len(),
        failed,
        cfg.tolerance,
        cfg.precision.bits(),
        cfg.seed
    ));
    s
}

pub fn cmd_verify(cfg: &RunConfig, ids: &[String], all: bool) -> Result<(String, i32), CliError> {
    if !all && ids.is_empty() {
        return Err(CliError::Usage("verify needs identity ids or --all".into()));
    }
    for id in ids {
        lookup(id).map_err(usage)?;
    }
    let opts = cfg.verify_options();
    let reports = if all { verify_all(&cfg.family, &opts) } else { verify_selected(ids, &cfg.family, &opts) };
    let reports = reports.map_err(|e| match e {
        Error::InvalidInput(_) | Error::Domain(_) | Error::UnknownIdentity(_) => usage(e),
        e => failure(e),
    })?;
    let code = if reports.iter().all(|r| r.status.accepted()) { EXIT_OK } else { EXIT_FAILURE };
    let digits = cfg.digits();
    let out = match cfg.output_format {
        Format::Text => text_report(cfg, &reports),
        Format::Json => to_json(&verify_json(cfg, &reports)),
        Format::Csv => to_csv(&["id", "family", "status", "pass", "max_rel_residual", "max_terms_used"], |w| {
            for r in &reports {
                let res = r.max_rel_residual.as_ref().map(|v| float_str(v, digits)).unwrap_or_default();
                w.write_record([
                    r.id,
                    r.family.as_str(),
                    r.status.as_str(),
                    if r.pass { "true" } else { "false" },
                    res.as_str(),
                    r.max_terms_used.to_string().as_str(),
                ])?;
            }
            Ok(())
        })?,
    };
    Ok((out, code))
}

fn emit(cfg: &RunConfig, text: &str) -> Result<(), CliError> {
    match &cfg.out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Usage(format!("--out {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|e| CliError::Failure(e.to_string()))
        }
    }
}

/// Parse `args` (including the program name), run, and return the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let result = RunConfig::from_args(&cli.config).and_then(|cfg| {
        let (text, code) = match &cli.command {
            Command::List => cmd_list(&cfg)?,
            Command::Eval(e) => cmd_eval(&cfg, e)?,
            Command::Verify { ids, all } => cmd_verify(&cfg, ids, *all)?,
        };
        emit(&cfg, &text)?;
        Ok(code)
    });
    match result {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Failure(msg)) => {
            eprintln!("error: {msg}");
            EXIT_FAILURE
        }
    }
}
