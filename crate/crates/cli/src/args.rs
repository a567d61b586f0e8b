use clap::{Args, Parser, Subcommand, ValueEnum};

use reciprocity_lab::arith::gcd;
use reciprocity_lab::Rational;

use crate::UsageError;

#[derive(Debug, Parser)]
#[command(name = "reciprocity-lab", version, about = "Exact Dedekind-sum reciprocity, semigroup identities and spectral sums")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bernoulli number B_n, or the polynomial B_n(x) with --x.
    Bernoulli {
        n: u32,
        #[arg(long)]
        x: Option<Rational>,
    },
    /// Gaps, Frobenius number, Apéry sets, Sylvester sums and generating polynomials of S(a,b).
    Semigroup {
        #[command(flatten)]
        pair: Pair,
        #[command(subcommand)]
        query: Option<SemigroupQuery>,
    },
    /// Apostol-Dedekind sum s_n(a,b), or both sides of reciprocity with --rhs.
    Dedekind {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = SumMethod::Both)]
        method: SumMethod,
        #[arg(long, value_enum)]
        rhs: Option<RhsVariant>,
    },
    /// Power sum of the shifted Brieskorn spectrum.
    Spectra {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        x: Rational,
        #[arg(long, value_enum, default_value_t = SpectraMethod::Both)]
        method: SpectraMethod,
    },
    /// Integral of the torus-knot signature function.
    Knot {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_enum, default_value_t = KnotMethod::Both)]
        method: KnotMethod,
    },
    /// Exhaustive identity sweep: one JSON line per case, then a summary.
    Verify(VerifyArgs),
    /// Time the naive sum against the Euclidean descent.
    Bench {
        /// Comma-separated `a:b` pairs.
        #[arg(long, value_parser = parse_pairs, allow_hyphen_values = true)]
        pairs: PairList,
        #[arg(long)]
        n: u32,
    },
}

#[derive(Clone, Copy, Debug, Args)]
pub struct Pair {
    pub a: u64,
    pub b: u64,
}

#[derive(Clone, Copy, Debug, Subcommand)]
pub enum SemigroupQuery {
    Gaps,
    Frobenius,
    Apery { m: u64 },
    Sylvester { m: u32 },
    /// Gap polynomial, or the Apéry polynomial of `m`.
    Genpoly { m: Option<u64> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SumMethod {
    Naive,
    Fast,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RhsVariant {
    Eq1,
    Prop3,
    Prop4,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SpectraMethod {
    Brute,
    Closed,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KnotMethod {
    Sum15,
    Closed9,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum IdentityId {
    Eq1,
    Prop3,
    Prop4,
    Prop1Genfun,
    Prop2Rsets,
    GassertShor,
    Tuenter,
    Mordell,
    MordellSplit,
    Eq11,
    Eq12,
    Eq14,
    Prop5,
    Prop5Zero,
    Eq9,
    FractionSum,
    Errata,
}

impl IdentityId {
    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Eq1 => "eq1",
            IdentityId::Prop3 => "prop3",
            IdentityId::Prop4 => "prop4",
            IdentityId::Prop1Genfun => "prop1_genfun",
            IdentityId::Prop2Rsets => "prop2_rsets",
            IdentityId::GassertShor => "gassert_shor",
            IdentityId::Tuenter => "tuenter",
            IdentityId::Mordell => "mordell",
            IdentityId::MordellSplit => "mordell_split",
            IdentityId::Eq11 => "eq11",
            IdentityId::Eq12 => "eq12",
            IdentityId::Eq14 => "eq14",
            IdentityId::Prop5 => "prop5",
            IdentityId::Prop5Zero => "prop5_zero",
            IdentityId::Eq9 => "eq9",
            IdentityId::FractionSum => "fraction_sum",
            IdentityId::Errata => "errata",
        }
    }
}

#[derive(Clone, Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub identity: IdentityId,
    #[arg(long)]
    pub a_max: Option<u64>,
    #[arg(long)]
    pub b_max: Option<u64>,
    /// Comma-separated orders.
    #[arg(long, value_delimiter = ',')]
    pub n_list: Option<Vec<u32>>,
    /// Comma-separated rational shifts.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub x_list: Option<Vec<Rational>>,
    /// Print only the summary report.
    #[arg(long)]
    pub summary_only: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PairList(pub Vec<(u64, u64)>);

fn parse_pairs(s: &str) -> Result<PairList, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(PairList::default());
    }
    s.split(',')
        .map(|item| {
            let (a, b) = item
                .split_once(':')
                .ok_or_else(|| format!("expected a:b, got {item:?}"))?;
            let a = a.trim().parse::<u64>().map_err(|e| format!("{item:?}: {e}"))?;
            let b = b.trim().parse::<u64>().map_err(|e| format!("{item:?}: {e}"))?;
            Ok((a, b))
        })
        .collect::<Result<Vec<_>, String>>()
        .map(PairList)
}

fn coprime(flag: &str, a: u64, b: u64) -> Result<(), UsageError> {
    if a == 0 || b == 0 {
        return Err(UsageError::new(flag, format!("generators must be positive, got a = {a}, b = {b}")));
    }
    if gcd(a, b) != 1 {
        return Err(UsageError::new(flag, format!("gcd(a,b) must be 1, got a = {a}, b = {b}")));
    }
    Ok(())
}

fn odd(flag: &str, n: u32) -> Result<(), UsageError> {
    if n.is_multiple_of(2) {
        return Err(UsageError::new(flag, format!("n must be odd, got {n}")));
    }
    Ok(())
}

impl Cli {
    /// Preconditions that clap cannot express.
    pub fn validate(&self) -> Result<(), UsageError> {
        match &self.command {
            Command::Bernoulli { .. } => Ok(()),
            Command::Semigroup { pair, .. } => coprime("<a> <b>", pair.a, pair.b),
            Command::Dedekind { pair, n, .. } => {
                coprime("<a> <b>", pair.a, pair.b)?;
                odd("--n", *n)
            }
            Command::Spectra { pair, .. } => coprime("<a> <b>", pair.a, pair.b),
            Command::Knot { pair, .. } => {
                coprime("<a> <b>", pair.a, pair.b)?;
                if pair.a < 2 || pair.b < 2 {
                    return Err(UsageError::new("<a> <b>", "torus knot needs a, b >= 2"));
                }
                Ok(())
            }
            Command::Verify(v) => {
                if let Some(ns) = &v.n_list {
                    if matches!(v.identity, IdentityId::Eq1 | IdentityId::Prop3 | IdentityId::Prop4) {
                        ns.iter().try_for_each(|&n| odd("--n-list", n))?;
                    }
                    if v.identity == IdentityId::Eq14 && ns.iter().any(|&n| n < 2) {
                        return Err(UsageError::new("--n-list", "lattice power sums need n >= 2"));
                    }
                    if matches!(v.identity, IdentityId::Eq11 | IdentityId::Prop5Zero | IdentityId::Prop2Rsets)
                        && ns.contains(&0)
                    {
                        return Err(UsageError::new("--n-list", "n must be positive"));
                    }
                }
                Ok(())
            }
            Command::Bench { pairs, n } => {
                odd("--n", *n)?;
                pairs.0.iter().try_for_each(|&(a, b)| coprime("--pairs", a, b))
            }
        }
    }
}
