//! Identity sweeps behind `verify`.

use std::fmt::Display;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use reciprocity_lab::arith::gcd;
use reciprocity_lab::bernoulli::{power_sum_closed, weighted_bernoulli_sum_closed, weighted_bernoulli_sum_direct};
use reciprocity_lab::dedekind::{reciprocity_lhs, reciprocity_rhs, ReciprocityVariant};
use reciprocity_lab::errata::errata_catalog;
use reciprocity_lab::function::standard_corpus;
use reciprocity_lab::knot::{lattice_fraction_sum, signature_integral, SignatureMethod, TorusKnotQuery};
use reciprocity_lab::semigroup::{Identity, IdentityEvaluator};
use reciprocity_lab::spectra::{lattice_power_sum, spectral_power_sum, spectral_power_sum_at_zero, SpectralQuery};
use reciprocity_lab::{Method, NumericalSemigroup, Rational, Result, Sides};

use crate::args::{IdentityId, VerifyArgs};

/// Seed of the function corpus used by the Gassert–Shor, Tuenter and Mordell sweeps.
pub const CORPUS_SEED: u64 = 2024;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseReport {
    pub identity: &'static str,
    pub params: Value,
    pub lhs: String,
    pub rhs: String,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub params: Value,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub identity: &'static str,
    pub cases_run: usize,
    pub failures: Vec<Failure>,
    pub elapsed_ms: u64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Sweep ranges after defaults are filled in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ranges {
    pub a_max: u64,
    pub b_max: u64,
    pub n_list: Vec<u32>,
    pub x_list: Vec<Rational>,
}

fn default_xs() -> Vec<Rational> {
    ["0", "1/2", "-2/3", "6", "7"].iter().map(|s| s.parse().unwrap()).collect()
}

impl Ranges {
    pub fn resolve(args: &VerifyArgs) -> Self {
        use IdentityId::*;
        let (bound, ns): (u64, Vec<u32>) = match args.identity {
            Eq1 | Prop3 | Prop4 => (40, vec![1, 3, 5, 7, 9]),
            Prop1Genfun => (15, vec![]),
            Prop2Rsets => (15, vec![1, 2, 3]),
            GassertShor | Tuenter | Mordell | MordellSplit => (25, vec![]),
            Eq11 => (30, (1..=8).collect()),
            Eq12 => (20, (0..=6).collect()),
            Eq14 => (20, (2..=8).collect()),
            Prop5 => (20, (0..=6).collect()),
            Prop5Zero => (20, (1..=6).collect()),
            Eq9 | FractionSum => (50, vec![]),
            Errata => (0, vec![]),
        };
        Ranges {
            a_max: args.a_max.unwrap_or(bound),
            b_max: args.b_max.unwrap_or(bound),
            n_list: args.n_list.clone().unwrap_or(ns),
            x_list: args.x_list.clone().unwrap_or_else(default_xs),
        }
    }

    /// Coprime `lo <= a < b`.
    fn increasing(&self, lo: u64) -> Vec<(u64, u64)> {
        (lo..=self.a_max)
            .flat_map(|a| (a + 1..=self.b_max).map(move |b| (a, b)))
            .filter(|&(a, b)| gcd(a, b) == 1)
            .collect()
    }

    /// Coprime ordered pairs with both entries at least 1.
    fn ordered(&self) -> Vec<(u64, u64)> {
        (1..=self.a_max)
            .flat_map(|a| (1..=self.b_max).map(move |b| (a, b)))
            .filter(|&(a, b)| gcd(a, b) == 1)
            .collect()
    }
}

fn case(identity: IdentityId, params: Value, lhs: impl Display, rhs: impl Display, ok: bool) -> CaseReport {
    CaseReport {
        identity: identity.name(),
        params,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        ok,
    }
}

fn sides(identity: IdentityId, params: Value, s: Sides) -> CaseReport {
    let ok = s.holds();
    case(identity, params, s.lhs, s.rhs, ok)
}

fn equal(identity: IdentityId, params: Value, lhs: Rational, rhs: Rational) -> CaseReport {
    sides(identity, params, Sides { lhs, rhs })
}

/// Runs `f` on every unit in parallel, keeping unit order in the output.
fn sweep<U, F>(units: Vec<U>, f: F) -> Result<Vec<CaseReport>>
where
    U: Sync,
    F: Fn(&U) -> Result<Vec<CaseReport>> + Sync + Send,
{
    let chunks = units.par_iter().map(f).collect::<Result<Vec<_>>>()?;
    Ok(chunks.into_iter().flatten().collect())
}

fn with_ns<T: Copy + Sync>(items: Vec<T>, ns: &[u32]) -> Vec<(T, u32)> {
    items.into_iter().flat_map(|t| ns.iter().map(move |&n| (t, n))).collect()
}

/// Every case of the identity, in `(a, b, n, x)` order.
pub fn run_cases(identity: IdentityId, r: &Ranges) -> Result<Vec<CaseReport>> {
    use IdentityId::*;
    match identity {
        Eq1 | Prop3 | Prop4 => {
            let variant = match identity {
                Eq1 => ReciprocityVariant::Eq1,
                Prop3 => ReciprocityVariant::Prop3,
                _ => ReciprocityVariant::Prop4,
            };
            sweep(with_ns(r.increasing(2), &r.n_list), |&((a, b), n)| {
                let lhs = reciprocity_lhs(a, b, n)?;
                let rhs = reciprocity_rhs(a, b, n, variant)?;
                Ok(vec![equal(identity, json!({"a": a, "b": b, "n": n}), lhs, rhs)])
            })
        }
        Prop1Genfun => sweep(r.increasing(1), |&(a, b)| {
            let s = NumericalSemigroup::new(a, b)?;
            let mut out = Vec::new();
            for m in (1..=2 * a * b).filter(|&m| s.contains(m as i64)) {
                let (l, rr) = s.genfun_gap_residual(m)?;
                let ok = l == rr;
                out.push(case(identity, json!({"a": a, "b": b, "m": m, "form": "gaps"}), l, rr, ok));
                let (l, rr) = s.genfun_cross_residual(m, a)?;
                let ok = l == rr;
                out.push(case(identity, json!({"a": a, "b": b, "m": m, "m2": a, "form": "cross"}), l, rr, ok));
            }
            Ok(out)
        }),
        Prop2Rsets => sweep(with_ns(r.increasing(1), &r.n_list), |&((a, b), n)| {
            let s = NumericalSemigroup::new(a, b)?;
            let window = s.r_set_window(n)?;
            let bound = (n as u64 + 1) * a * b;
            let oracle: Vec<u64> = (0..bound).filter(|&k| s.representation_count(k) == n as u64).collect();
            let list = |v: &[u64]| format!("{v:?}");
            let (l, rr) = s.r_set_genfun_residual(n)?;
            let ok = l == rr;
            Ok(vec![
                case(
                    identity,
                    json!({"a": a, "b": b, "n": n, "form": "window"}),
                    list(&window),
                    list(&oracle),
                    window == oracle,
                ),
                case(identity, json!({"a": a, "b": b, "n": n, "form": "genfun"}), l, rr, ok),
            ])
        }),
        GassertShor | Tuenter | Mordell | MordellSplit => {
            let corpus = standard_corpus(CORPUS_SEED);
            sweep(r.increasing(1), |&(a, b)| {
                let s = NumericalSemigroup::new(a, b)?;
                let max_m = if identity == GassertShor { 2 * a * b } else { 0 };
                let members: Vec<u64> = (1..=max_m).filter(|&m| s.contains(m as i64)).collect();
                let mut out = Vec::new();
                for f in &corpus {
                    let ev = IdentityEvaluator::new(&s, f, max_m)?;
                    let label = f.label();
                    let single = match identity {
                        Tuenter => Some(Identity::Tuenter),
                        Mordell => Some(Identity::Mordell),
                        MordellSplit => Some(Identity::MordellSplit),
                        _ => None,
                    };
                    match single {
                        Some(id) => out.push(sides(identity, json!({"a": a, "b": b, "f": label}), ev.residual(id)?)),
                        None => {
                            for &m in &members {
                                let res = ev.residual(Identity::GassertShor { m })?;
                                out.push(sides(identity, json!({"a": a, "b": b, "f": label, "m": m}), res));
                            }
                        }
                    }
                }
                Ok(out)
            })
        }
        Eq11 => sweep(with_ns((1..=r.b_max).collect(), &r.n_list), |&(m, n)| {
            let lhs = weighted_bernoulli_sum_direct(m, n);
            let rhs = weighted_bernoulli_sum_closed(m, n)?;
            Ok(vec![equal(identity, json!({"m": m, "n": n}), lhs, rhs)])
        }),
        Eq12 => {
            let units: Vec<(usize, u64, u32)> = (0..r.x_list.len())
                .flat_map(|xi| (0..=r.b_max).flat_map(move |m| r.n_list.iter().map(move |&n| (xi, m, n))))
                .collect();
            sweep(units, |&(xi, m, n)| {
                let x = &r.x_list[xi];
                let lhs: Rational = (0..m).map(|k| (x + Rational::from(k)).pow(n)).sum();
                let rhs = power_sum_closed(x, m, n);
                Ok(vec![equal(identity, json!({"x": x.to_string(), "m": m, "n": n}), lhs, rhs)])
            })
        }
        Eq14 | Prop5 => sweep(with_ns(r.ordered(), &r.n_list), |&((a, b), n)| {
            r.x_list
                .iter()
                .map(|x| {
                    let params = json!({"a": a, "b": b, "n": n, "x": x.to_string()});
                    let (lhs, rhs) = if identity == Eq14 {
                        (
                            lattice_power_sum(a, b, n, x, Method::Brute)?,
                            lattice_power_sum(a, b, n, x, Method::Closed)?,
                        )
                    } else {
                        let q = SpectralQuery::new(a, b, n, x.clone())?;
                        (spectral_power_sum(&q, Method::Brute)?, spectral_power_sum(&q, Method::Closed)?)
                    };
                    Ok(equal(identity, params, lhs, rhs))
                })
                .collect()
        }),
        Prop5Zero => sweep(with_ns(r.ordered(), &r.n_list), |&((a, b), n)| {
            let q = SpectralQuery::new(a, b, n, Rational::zero())?;
            let lhs = spectral_power_sum(&q, Method::Brute)?;
            let rhs = spectral_power_sum_at_zero(a, b, n)?;
            Ok(vec![equal(identity, json!({"a": a, "b": b, "n": n}), lhs, rhs)])
        }),
        Eq9 | FractionSum => sweep(r.increasing(2), |&(a, b)| {
            let q = TorusKnotQuery::new(a, b)?;
            let (lhs, rhs) = if identity == Eq9 {
                (
                    signature_integral(&q, SignatureMethod::Sum15),
                    signature_integral(&q, SignatureMethod::Closed9),
                )
            } else {
                (lattice_fraction_sum(&q, Method::Brute), lattice_fraction_sum(&q, Method::Closed))
            };
            Ok(vec![equal(identity, json!({"a": a, "b": b}), lhs, rhs)])
        }),
        Errata => Ok(errata_catalog()?
            .into_iter()
            .map(|e| {
                let ok = e.confirmed();
                let params = json!({"id": e.id, "at": e.params, "oracle": e.oracle.to_string()});
                case(identity, params, e.printed, e.corrected, ok)
            })
            .collect()),
    }
}

/// Runs the sweep and summarizes it.
pub fn run_verify(args: &VerifyArgs) -> Result<(Vec<CaseReport>, VerifyReport)> {
    let start = Instant::now();
    let ranges = Ranges::resolve(args);
    let cases = run_cases(args.identity, &ranges)?;
    let failures = cases
        .iter()
        .filter(|c| !c.ok)
        .map(|c| Failure {
            params: c.params.clone(),
            lhs: c.lhs.clone(),
            rhs: c.rhs.clone(),
        })
        .collect();
    let report = VerifyReport {
        identity: args.identity.name(),
        cases_run: cases.len(),
        failures,
        elapsed_ms: start.elapsed().as_millis() as u64,
    };
    Ok((cases, report))
}
