//! Command-line front end: argument definitions, command dispatch and exit
//! codes. `main.rs` is a thin wrapper around [`run`].

mod output;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num::{BigInt, One};
use thiserror::Error;

pub use output::{latex_scalar, terms, Document, Format, Row, Term};

use crate::algebra::{genocchi_numbers, q_tangent_numbers, tangent_numbers, Poly};
use crate::families::special::v_q_at_one;
use crate::families::{family_key, functional_key, sigma, sigma_q, AnyPoly, ClassicalFamily, FamilySpec, QFamily};
use crate::identities::{self, IdentityError, Ranges};
use crate::lattice::{PathTable, Weights};
use crate::scalar::{int, QRat, Rational, Scalar};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

/// Largest index accepted by the table commands.
const MAX_INDEX: usize = 64;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }
}

impl From<IdentityError> for CliError {
    fn from(e: IdentityError) -> Self {
        match e {
            IdentityError::Internal { .. } => CliError::Internal(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

fn internal(e: impl std::fmt::Display) -> CliError {
    CliError::Internal(e.to_string())
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

#[derive(Debug, Parser)]
#[command(name = "supercatalan", version, about = "Exact super Catalan moments, polynomial families and identity checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Write the document here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Table of polynomials p_0..p_n of a family.
    Family(FamilyArgs),
    /// Moments L(x^0)..L(x^{2n}) of a functional.
    Moments(MomentArgs),
    /// Run identity checks.
    Verify(VerifyArgs),
    /// Exact number sequences.
    Sequence(SequenceArgs),
    /// Weighted ballot table; row n is the polynomial Σ_k b(n,k) x^k.
    Paths(PathArgs),
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// lucas, fibonacci, cheb_t, cheb_u, l, v, lq, hq, vq, Hq, Rq, rq.
    pub name: String,
    #[arg(long, default_value_t = 0)]
    pub m: usize,
    /// Rational for classical families, q-rational (e.g. "-q^2", "1 / q") for q-families.
    /// Omitted: coefficients are printed symbolically in `s`.
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<String>,
    #[arg(long, visible_alias = "max-n", default_value_t = 6)]
    pub n: usize,
}

#[derive(Debug, Args)]
pub struct MomentArgs {
    /// lambda, lambda_star, cheb_t, cheb_u, lambda_m, v_m, lambda_q, phi_q, h_q, hermite_q, r_q, r_inf.
    pub functional: String,
    #[arg(long, default_value_t = 0)]
    pub m: usize,
    /// Default -1 for the l-type functionals and 1 otherwise.
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<String>,
    #[arg(long, visible_alias = "max-n", default_value_t = 6)]
    pub n: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Identity ids; all registered identities when empty.
    pub ids: Vec<String>,
    /// Only `all` is defined.
    #[arg(long)]
    pub suite: Option<String>,
    #[arg(long, default_value_t = Ranges::default().max_n)]
    pub max_n: usize,
    #[arg(long, default_value_t = Ranges::default().max_l)]
    pub max_l: usize,
    #[arg(long, default_value_t = Ranges::default().max_m)]
    pub max_m: usize,
    #[arg(long, default_value_t = Ranges::default().max_j)]
    pub max_j: usize,
    #[arg(long, default_value_t = Ranges::default().order)]
    pub order: usize,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug, Args)]
pub struct SequenceArgs {
    /// tangent, genocchi, q-tangent, sigma, sigma-q, l-at-1, lq-at-1, vq-at-1.
    pub name: String,
    #[arg(long, default_value_t = 8)]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub m: usize,
}

#[derive(Debug, Args)]
pub struct PathArgs {
    /// ones, lucas, lambda (r_j = -s·λ_j(m)), lambda-q, mu-q (r_j = s·μ_j(m,q)).
    #[arg(long, default_value = "ones")]
    pub weights: String,
    #[arg(long, default_value_t = 0)]
    pub m: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<String>,
    #[arg(long, visible_alias = "max-n", default_value_t = 8)]
    pub n: usize,
}

/// A rendered document and the process exit status it implies.
#[derive(Debug)]
pub struct Outcome {
    pub document: Document,
    pub exit_code: i32,
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let ok = |document| Ok(Outcome { document, exit_code: EXIT_OK });
    match &cli.command {
        Command::Family(a) => ok(family(a)?),
        Command::Moments(a) => ok(moments(a)?),
        Command::Sequence(a) => ok(sequence(a)?),
        Command::Paths(a) => ok(paths(a)?),
        Command::Verify(a) => verify(a),
    }
}

fn check_index(n: usize) -> Result<(), CliError> {
    if n > MAX_INDEX {
        return Err(usage(format!("index {n} exceeds the cap {MAX_INDEX}")));
    }
    Ok(())
}

fn parse_rational(s: &str) -> Result<Rational, CliError> {
    s.trim().parse().map_err(|_| usage(format!("invalid rational `{s}`")))
}

fn parse_qrat(s: &str) -> Result<QRat, CliError> {
    s.parse().map_err(|e| usage(format!("invalid q-rational: {e}")))
}

/// Terms of `p`, with the coefficient of `x^{n-2k}` multiplied by `s^k`.
fn symbolic_terms<S: Scalar>(p: &Poly<S>, n: usize) -> Vec<Term> {
    terms(p)
        .into_iter()
        .map(|t| {
            let k = (n - t.pow) / 2;
            let coeff = match (k, t.coeff.as_str()) {
                (0, _) => t.coeff,
                (_, c) => {
                    let s = if k == 1 { "s".to_string() } else { format!("s^{k}") };
                    match c {
                        "1" => s,
                        "-1" => format!("-{s}"),
                        c if c.contains(' ') => format!("({c})*{s}"),
                        c => format!("{c}*{s}"),
                    }
                }
            };
            Term { pow: t.pow, coeff }
        })
        .collect()
}

fn family(a: &FamilyArgs) -> Result<Document, CliError> {
    check_index(a.n)?;
    let (key, has_s, has_m) = family_key(&a.name).ok_or_else(|| usage(format!("unknown family `{}`", a.name)))?;
    let symbolic = has_s && a.s.is_none();
    let f = FamilySpec::parse(key, a.m, a.s.as_deref()).map_err(|e| usage(e.to_string()))?;
    let mut doc = Document::new("family").param("name", key).param("n", a.n);
    if has_m {
        doc = doc.param("m", a.m);
    }
    if has_s {
        doc = doc.param("s", a.s.clone().unwrap_or_else(|| "s".into()));
    }
    for n in 0..=a.n {
        let t = match (f.closed_form(n), symbolic) {
            (AnyPoly::Rational(p), true) => symbolic_terms(&p, n),
            (AnyPoly::Q(p), true) => symbolic_terms(&p, n),
            (AnyPoly::Rational(p), false) => terms(&p),
            (AnyPoly::Q(p), false) => terms(&p),
        };
        doc.rows.push(Row::poly(n, t));
    }
    Ok(doc)
}

fn moments(a: &MomentArgs) -> Result<Document, CliError> {
    check_index(2 * a.n)?;
    let (key, default_s) =
        functional_key(&a.functional).ok_or_else(|| usage(format!("unknown functional `{}`", a.functional)))?;
    let (_, has_s, has_m) = family_key(key).expect("functionals map to families");
    let s = a.s.as_deref().unwrap_or(default_s);
    let f = FamilySpec::parse(key, a.m, Some(s)).map_err(|e| usage(e.to_string()))?;
    let mut doc = Document::new("moments").param("functional", a.functional.as_str()).param("n", a.n);
    if has_m {
        doc = doc.param("m", a.m);
    }
    if has_s {
        doc = doc.param("s", s);
    }
    doc.rows = (0..=2 * a.n).map(|k| Row::value(k, f.moment(k))).collect();
    Ok(doc)
}

fn sequence(a: &SequenceArgs) -> Result<Document, CliError> {
    check_index(a.count)?;
    let big = |v: Vec<BigInt>| v.into_iter().map(|b| b.to_string()).collect::<Vec<_>>();
    let values: Vec<String> = match a.name.as_str() {
        "tangent" => big(tangent_numbers(a.count).map_err(internal)?),
        "genocchi" => big(genocchi_numbers(a.count).map_err(internal)?),
        "q-tangent" => q_tangent_numbers(a.count)
            .map_err(internal)?
            .into_iter()
            .map(|p| QRat::from_poly(p).render())
            .collect(),
        "sigma" => (0..a.count).map(|n| sigma(a.m, n).render()).collect(),
        "sigma-q" => (0..a.count).map(|n| sigma_q(a.m, n).render()).collect(),
        "l-at-1" => {
            let f = ClassicalFamily::L { m: a.m, s: int(-1) };
            (0..a.count).map(|n| f.closed_form(n).evaluate(&int(1)).render()).collect()
        }
        "lq-at-1" => {
            let f = QFamily::L { m: a.m, s: QRat::from_int(-1) };
            (0..a.count).map(|n| f.closed_form(n).evaluate(&QRat::one()).render()).collect()
        }
        "vq-at-1" => (0..a.count).map(|n| v_q_at_one(a.m, n).render()).collect(),
        other => return Err(usage(format!("unknown sequence `{other}`"))),
    };
    let mut doc = Document::new("sequence").param("name", a.name.as_str()).param("count", a.count);
    if matches!(a.name.as_str(), "sigma" | "sigma-q" | "l-at-1" | "lq-at-1" | "vq-at-1") {
        doc = doc.param("m", a.m);
    }
    doc.rows = values.into_iter().enumerate().map(|(i, v)| Row::value(i, v)).collect();
    Ok(doc)
}

fn path_rows<S: Scalar>(w: &Weights<S>, n_max: usize) -> Result<Vec<Row>, CliError> {
    let table = PathTable::build(w, n_max).map_err(internal)?;
    (0..=n_max)
        .map(|n| {
            let row = (0..=n).map(|k| table.get(n, k)).collect::<Result<Vec<S>, _>>().map_err(internal)?;
            Ok(Row::poly(n, terms(&Poly::new(row))))
        })
        .collect()
}

fn paths(a: &PathArgs) -> Result<Document, CliError> {
    check_index(a.n)?;
    let len = a.n + 1;
    let rows = match a.weights.as_str() {
        "ones" => path_rows(&Weights::<Rational>::ones(len), a.n)?,
        "lucas" => path_rows(&crate::lattice::lucas_weights(len), a.n)?,
        "lambda" => {
            let s = parse_rational(a.s.as_deref().unwrap_or("-1"))?;
            path_rows(&Weights::lambda(a.m, &s, len), a.n)?
        }
        "lambda-q" => path_rows(&Weights::lambda_q(a.m, len), a.n)?,
        "mu-q" => {
            let s = parse_qrat(a.s.as_deref().unwrap_or("1"))?;
            path_rows(&Weights::mu_q(a.m, &s, len), a.n)?
        }
        other => return Err(usage(format!("unknown weight family `{other}`"))),
    };
    let mut doc = Document::new("paths").param("weights", a.weights.as_str()).param("n", a.n);
    if matches!(a.weights.as_str(), "lambda" | "lambda-q" | "mu-q") {
        doc = doc.param("m", a.m);
    }
    if let Some(s) = &a.s {
        doc = doc.param("s", s.as_str());
    }
    doc.rows = rows;
    Ok(doc)
}

fn verify(a: &VerifyArgs) -> Result<Outcome, CliError> {
    if let Some(suite) = &a.suite {
        if suite != "all" {
            return Err(usage(format!("unknown suite `{suite}`")));
        }
        if !a.ids.is_empty() {
            return Err(usage("pass either identity ids or --suite, not both"));
        }
    }
    let ranges = Ranges { max_n: a.max_n, max_l: a.max_l, max_m: a.max_m, max_j: a.max_j, order: a.order };
    let ids: Vec<&str> = a.ids.iter().map(String::as_str).collect();
    let suite = identities::check_all(&ranges, (!ids.is_empty()).then_some(&ids[..]), a.jobs)?;
    let mut doc = Document::new("verify")
        .param("ranges", ranges.describe())
        .param("identities", suite.reports.len())
        .param("passed", suite.passed())
        .param("ok", suite.ok());
    for (i, r) in suite.reports.iter().enumerate() {
        let detail = match r.first_failure() {
            Some(p) => match &p.outcome {
                identities::Outcome::Fail { lhs, rhs } => format!("{}: lhs={lhs} rhs={rhs}", p.params),
                identities::Outcome::Pass => String::new(),
            },
            None => format!("{} points", r.points.len()),
        };
        doc.rows.push(Row {
            index: i,
            id: Some(r.id.clone()),
            value: Some(if r.ok() { "pass" } else { "fail" }.into()),
            poly: None,
            detail: Some(detail),
        });
    }
    let cross = suite.pairs.iter().map(|c| ("pair", c)).chain(suite.groups.iter().map(|c| ("group", c)));
    for (kind, c) in cross {
        doc.rows.push(Row {
            index: doc.rows.len(),
            id: Some(format!("{kind}:{}", c.ids.join("/"))),
            value: Some(if c.ok { "pass" } else { "fail" }.into()),
            poly: None,
            detail: Some(c.detail.clone().unwrap_or_else(|| format!("{} compared", c.compared))),
        });
    }
    doc.flags = suite.flags().into_iter().cloned().collect();
    let exit_code = if suite.ok() { EXIT_OK } else { EXIT_VERIFY_FAILED };
    Ok(Outcome { document: doc, exit_code })
}
