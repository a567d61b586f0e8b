//! Command-line front end for `reciprocity-lab`.
//!
//! [`parse`] turns argv into a validated [`Cli`], [`run`] executes it and
//! writes JSON or CSV to the given sink. Exit codes: 0 when every computed
//! identity holds, 1 when one fails, 2 on usage errors.

pub mod args;
pub mod bench;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use reciprocity_lab::bernoulli::{bernoulli_number, bernoulli_poly};
use reciprocity_lab::dedekind::{apostol_sum_fast_traced, apostol_sum_naive, ReciprocityReport, ReciprocityVariant};
use reciprocity_lab::knot::{KnotReport, SignatureMethod, TorusKnotQuery};
use reciprocity_lab::semigroup::GenPolyKind;
use reciprocity_lab::spectra::{spectral_power_sum, SpectralQuery};
use reciprocity_lab::{Method, NumericalSemigroup, Rational};

pub use args::{Cli, Command, Format};

/// Environment variable capping the sweep worker count.
pub const THREADS_ENV: &str = "RECIPROCITY_LAB_THREADS";

#[derive(Debug, Error, PartialEq, Eq)]
#[error("invalid value for '{flag}': {message}")]
pub struct UsageError {
    pub flag: String,
    pub message: String,
}

impl UsageError {
    pub fn new(flag: impl Into<String>, message: impl Into<String>) -> Self {
        UsageError {
            flag: flag.into(),
            message: message.into(),
        }
    }
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error(transparent)]
    Clap(#[from] clap::Error),
    #[error(transparent)]
    Usage(#[from] UsageError),
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Usage(#[from] UsageError),
    #[error(transparent)]
    Lab(#[from] reciprocity_lab::Error),
    #[error("output: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv output: {0}")]
    Csv(#[from] csv::Error),
    #[error("json output: {0}")]
    Json(#[from] serde_json::Error),
}

/// Whether every identity computed by a command held.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Verified,
    Failed,
}

impl Status {
    fn from_ok(ok: bool) -> Self {
        if ok {
            Status::Verified
        } else {
            Status::Failed
        }
    }

    pub fn exit_code(self) -> u8 {
        match self {
            Status::Verified => 0,
            Status::Failed => 1,
        }
    }
}

pub fn parse<I, T>(argv: I) -> Result<Cli, ParseError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv)?;
    cli.validate()?;
    Ok(cli)
}

/// Rows for CSV output.
struct Table {
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn new(header: &[&'static str]) -> Self {
        Table {
            header: header.to_vec(),
            rows: Vec::new(),
        }
    }

    fn row<I: IntoIterator<Item = S>, S: ToString>(mut self, cells: I) -> Self {
        self.rows.push(cells.into_iter().map(|c| c.to_string()).collect());
        self
    }

    fn write(&self, out: &mut dyn Write) -> Result<(), CliError> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.header)?;
        for r in &self.rows {
            w.write_record(r)?;
        }
        w.flush()?;
        Ok(())
    }
}

fn emit(format: Format, out: &mut dyn Write, json: &impl Serialize, table: Table) -> Result<(), CliError> {
    match format {
        Format::Json => {
            serde_json::to_writer(&mut *out, json)?;
            writeln!(out)?;
            Ok(())
        }
        Format::Csv => table.write(out),
    }
}

fn opt(v: &Option<Rational>) -> String {
    v.as_ref().map(Rational::to_string).unwrap_or_default()
}

fn thread_pool() -> Result<Option<rayon::ThreadPool>, UsageError> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(None);
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| UsageError::new(THREADS_ENV, format!("expected a positive integer, got {raw:?}")))?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build()
        .map_err(|e| UsageError::new(THREADS_ENV, e.to_string()))?;
    Ok(Some(pool))
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<Status, CliError> {
    let f = cli.format;
    match &cli.command {
        Command::Bernoulli { n, x } => {
            let value = match x {
                Some(x) => bernoulli_poly(*n, x),
                None => bernoulli_number(*n),
            };
            let body = match x {
                Some(x) => json!({"n": n, "x": x, "value": value}),
                None => json!({"n": n, "value": value}),
            };
            let table = Table::new(&["n", "x", "value"]).row([n.to_string(), opt(x), value.to_string()]);
            emit(f, out, &body, table)?;
            Ok(Status::Verified)
        }
        Command::Semigroup { pair, query } => {
            let s = NumericalSemigroup::new(pair.a, pair.b)?;
            run_semigroup(f, out, &s, *query)?;
            Ok(Status::Verified)
        }
        Command::Dedekind { pair, n, method, rhs } => {
            let (a, b, n) = (pair.a, pair.b, *n);
            if let Some(v) = rhs {
                let variant = match v {
                    args::RhsVariant::Eq1 => ReciprocityVariant::Eq1,
                    args::RhsVariant::Prop3 => ReciprocityVariant::Prop3,
                    args::RhsVariant::Prop4 => ReciprocityVariant::Prop4,
                };
                let rep = ReciprocityReport::compute(a, b, n, variant)?;
                let table = Table::new(&["a", "b", "n", "variant", "lhs", "rhs", "equal"]).row([
                    a.to_string(),
                    b.to_string(),
                    n.to_string(),
                    format!("{v:?}").to_lowercase(),
                    rep.lhs.to_string(),
                    rep.rhs.to_string(),
                    rep.equal.to_string(),
                ]);
                emit(f, out, &rep, table)?;
                return Ok(Status::from_ok(rep.equal));
            }
            let naive = matches!(method, args::SumMethod::Naive | args::SumMethod::Both)
                .then(|| apostol_sum_naive(a, b, n))
                .transpose()?;
            let fast = matches!(method, args::SumMethod::Fast | args::SumMethod::Both)
                .then(|| apostol_sum_fast_traced(a, b, n))
                .transpose()?;
            let equal = match (&naive, &fast) {
                (Some(x), Some(y)) => Some(*x == y.value),
                _ => None,
            };
            let mut body = json!({"a": a, "b": b, "n": n});
            let mut table = Table::new(&["a", "b", "n", "method", "value"]);
            if let Some(v) = &naive {
                body["naive"] = json!(v);
                table = table.row([a.to_string(), b.to_string(), n.to_string(), "naive".into(), v.to_string()]);
            }
            if let Some(e) = &fast {
                body["fast"] = json!(e.value);
                body["depth"] = json!(e.depth);
                table = table.row([a.to_string(), b.to_string(), n.to_string(), "fast".into(), e.value.to_string()]);
            }
            if let Some(eq) = equal {
                body["equal"] = json!(eq);
            }
            emit(f, out, &body, table)?;
            Ok(Status::from_ok(equal != Some(false)))
        }
        Command::Spectra { pair, n, x, method } => {
            let q = SpectralQuery::new(pair.a, pair.b, *n, x.clone())?;
            let want = |m: args::SpectraMethod| *method == m || *method == args::SpectraMethod::Both;
            let brute = want(args::SpectraMethod::Brute)
                .then(|| spectral_power_sum(&q, Method::Brute))
                .transpose()?;
            let closed = want(args::SpectraMethod::Closed)
                .then(|| spectral_power_sum(&q, Method::Closed))
                .transpose()?;
            let mut body = json!({"a": q.a, "b": q.b, "n": q.n, "x": q.x});
            let mut table = Table::new(&["a", "b", "n", "x", "method", "value"]);
            for (name, v) in [("brute", &brute), ("closed", &closed)] {
                if let Some(v) = v {
                    body[name] = json!(v);
                    table = table.row([
                        q.a.to_string(),
                        q.b.to_string(),
                        q.n.to_string(),
                        q.x.to_string(),
                        name.to_string(),
                        v.to_string(),
                    ]);
                }
            }
            let equal = match (&brute, &closed) {
                (Some(x), Some(y)) => Some(x == y),
                _ => None,
            };
            if let Some(eq) = equal {
                body["equal"] = json!(eq);
            }
            emit(f, out, &body, table)?;
            Ok(Status::from_ok(equal != Some(false)))
        }
        Command::Knot { pair, method } => {
            let q = TorusKnotQuery::new(pair.a, pair.b)?;
            let methods: &[SignatureMethod] = match method {
                args::KnotMethod::Sum15 => &[SignatureMethod::Sum15],
                args::KnotMethod::Closed9 => &[SignatureMethod::Closed9],
                args::KnotMethod::Both => &[SignatureMethod::Sum15, SignatureMethod::Closed9],
            };
            let rep = KnotReport::compute(&q, methods);
            let mut table = Table::new(&["a", "b", "method", "value"]);
            for (name, v) in [("sum15", &rep.sum15), ("closed9", &rep.closed9)] {
                if let Some(v) = v {
                    table = table.row([rep.a.to_string(), rep.b.to_string(), name.to_string(), v.to_string()]);
                }
            }
            emit(f, out, &rep, table)?;
            Ok(Status::from_ok(rep.equal != Some(false)))
        }
        Command::Verify(v) => {
            let pool = thread_pool()?;
            let (cases, report) = match &pool {
                Some(p) => p.install(|| verify::run_verify(v)),
                None => verify::run_verify(v),
            }?;
            match f {
                Format::Json => {
                    if !v.summary_only {
                        for c in &cases {
                            serde_json::to_writer(&mut *out, c)?;
                            writeln!(out)?;
                        }
                    }
                    serde_json::to_writer(&mut *out, &report)?;
                    writeln!(out)?;
                }
                Format::Csv if v.summary_only => {
                    Table::new(&["identity", "cases_run", "failures", "elapsed_ms"])
                        .row([
                            report.identity.to_string(),
                            report.cases_run.to_string(),
                            report.failures.len().to_string(),
                            report.elapsed_ms.to_string(),
                        ])
                        .write(out)?;
                }
                Format::Csv => {
                    let mut table = Table::new(&["identity", "params", "lhs", "rhs", "ok"]);
                    for c in &cases {
                        table = table.row([
                            c.identity.to_string(),
                            c.params.to_string(),
                            c.lhs.clone(),
                            c.rhs.clone(),
                            c.ok.to_string(),
                        ]);
                    }
                    table.write(out)?;
                }
            }
            Ok(Status::from_ok(report.passed()))
        }
        Command::Bench { pairs, n } => {
            let rows = bench::run_bench(&pairs.0, *n)?;
            let mut table = Table::new(&["pair", "a", "b", "n", "t_naive_ms", "t_fast_ms", "equal"]);
            for r in &rows {
                table = table.row([
                    r.pair.clone(),
                    r.a.to_string(),
                    r.b.to_string(),
                    r.n.to_string(),
                    r.t_naive_ms.map(|t| format!("{t:.3}")).unwrap_or_default(),
                    format!("{:.3}", r.t_fast_ms),
                    r.equal.map(|e| e.to_string()).unwrap_or_default(),
                ]);
            }
            emit(f, out, &rows, table)?;
            Ok(Status::from_ok(rows.iter().all(bench::BenchRow::passed)))
        }
    }
}

fn run_semigroup(
    f: Format,
    out: &mut dyn Write,
    s: &NumericalSemigroup,
    query: Option<args::SemigroupQuery>,
) -> Result<(), CliError> {
    use args::SemigroupQuery as Q;
    let (a, b) = (s.a(), s.b());
    let pair = [a.to_string(), b.to_string()];
    let with = |extra: &[String]| pair.iter().cloned().chain(extra.iter().cloned()).collect::<Vec<_>>();
    match query {
        None => {
            let gaps = s.gaps();
            let body = json!({"a": a, "b": b, "frobenius": s.frobenius(), "genus": gaps.len(), "gaps": gaps});
            let table = Table::new(&["a", "b", "frobenius", "genus"])
                .row(with(&[s.frobenius().to_string(), gaps.len().to_string()]));
            emit(f, out, &body, table)
        }
        Some(Q::Gaps) => {
            let gaps = s.gaps();
            let mut table = Table::new(&["a", "b", "gap"]);
            for g in &gaps.elements {
                table = table.row(with(&[g.to_string()]));
            }
            emit(f, out, &json!({"a": a, "b": b, "gaps": gaps}), table)
        }
        Some(Q::Frobenius) => {
            let fr = s.frobenius();
            let table = Table::new(&["a", "b", "frobenius"]).row(with(&[fr.to_string()]));
            emit(f, out, &json!({"a": a, "b": b, "frobenius": fr}), table)
        }
        Some(Q::Apery { m }) => {
            let ap = s.apery_set(m)?;
            let mut table = Table::new(&["a", "b", "m", "element"]);
            for e in &ap.elements {
                table = table.row(with(&[m.to_string(), e.to_string()]));
            }
            emit(f, out, &json!({"a": a, "b": b, "m": m, "apery": ap}), table)
        }
        Some(Q::Sylvester { m }) => {
            let v = s.sylvester_sum(m);
            let table = Table::new(&["a", "b", "m", "value"]).row(with(&[m.to_string(), v.to_string()]));
            emit(f, out, &json!({"a": a, "b": b, "m": m, "value": v}), table)
        }
        Some(Q::Genpoly { m }) => {
            let (kind, poly) = match m {
                Some(m) => ("apery", s.gen_poly(GenPolyKind::Apery(m))?),
                None => ("gaps", s.gen_poly(GenPolyKind::Gaps)?),
            };
            let mut body = json!({"a": a, "b": b, "kind": kind, "poly": poly});
            if let Some(m) = m {
                body["m"] = Value::from(m);
            }
            let mut table = Table::new(&["a", "b", "exponent", "coefficient"]);
            for (e, c) in poly.terms() {
                table = table.row(with(&[e.to_string(), c.to_string()]));
            }
            emit(f, out, &body, table)
        }
    }
}
