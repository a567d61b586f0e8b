//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use reciprocity_lab::arith::{euclid_steps, gcd};
use reciprocity_lab::bernoulli::{weighted_bernoulli_sum_closed, weighted_bernoulli_sum_direct};
use reciprocity_lab::dedekind::{
    apostol_sum_fast, apostol_sum_fast_traced, reciprocity_lhs, reciprocity_rhs, ApostolTable, ReciprocityVariant,
};
use reciprocity_lab::errata::{
    reciprocity_rhs_printed, spectral_power_sum_at_zero_printed, weighted_bernoulli_sum_printed,
};
use reciprocity_lab::function::standard_corpus;
use reciprocity_lab::knot::{signature_integral, SignatureMethod, TorusKnotQuery};
use reciprocity_lab::semigroup::{Identity, IdentityEvaluator};
use reciprocity_lab::semigroup::sylvester_sum_closed;
use reciprocity_lab::spectra::{
    lattice_power_sum, spectral_power_sum, spectral_power_sum_at_zero, spectral_split_residual, SpectralQuery,
};
use reciprocity_lab::{Method, NumericalSemigroup, Rational};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn r(s: &str) -> Rational {
    s.parse().unwrap()
}

/// Coprime `lo <= a < b <= hi`.
fn increasing_pairs(lo: u64, hi: u64) -> Vec<(u64, u64)> {
    (lo..=hi)
        .flat_map(|a| (a + 1..=hi).map(move |b| (a, b)))
        .filter(|&(a, b)| gcd(a, b) == 1)
        .collect()
}

/// Coprime ordered pairs in `1..=hi`.
fn ordered_pairs(hi: u64) -> Vec<(u64, u64)> {
    (1..=hi)
        .flat_map(|a| (1..=hi).map(move |b| (a, b)))
        .filter(|&(a, b)| gcd(a, b) == 1)
        .collect()
}

fn expect(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn eq1_reciprocity() -> Outcome {
    let mut cases = 0;
    for (a, b) in increasing_pairs(2, 40) {
        for n in [1, 3, 5, 7, 9] {
            let lhs = reciprocity_lhs(a, b, n).map_err(|e| e.to_string())?;
            let rhs = reciprocity_rhs(a, b, n, ReciprocityVariant::Eq1).map_err(|e| e.to_string())?;
            expect(lhs == rhs, || format!("(a,b,n)=({a},{b},{n}): {lhs} != {rhs}"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} cases"))
}

fn prop3_prop4_reciprocity() -> Outcome {
    let mut cases = 0;
    for (a, b) in increasing_pairs(2, 40) {
        for n in [1, 3, 5, 7, 9] {
            let lhs = reciprocity_lhs(a, b, n).map_err(|e| e.to_string())?;
            for v in [ReciprocityVariant::Prop3, ReciprocityVariant::Prop4] {
                let rhs = reciprocity_rhs(a, b, n, v).map_err(|e| e.to_string())?;
                expect(lhs == rhs, || format!("{v:?} (a,b,n)=({a},{b},{n}): {lhs} != {rhs}"))?;
                cases += 1;
            }
        }
    }
    for v in ReciprocityVariant::ALL {
        let got = reciprocity_rhs(2, 3, 1, v).map_err(|e| e.to_string())?;
        expect(got == r("-1/3"), || format!("{v:?} at (2,3,1) = {got}"))?;
    }
    let lhs = reciprocity_lhs(2, 3, 1).map_err(|e| e.to_string())?;
    expect(lhs == r("-1/3"), || format!("lhs at (2,3,1) = {lhs}"))?;
    Ok(format!("{cases} cases, (2,3,1) = -1/3"))
}

fn erratum_suite() -> Outcome {
    let printed = weighted_bernoulli_sum_printed(3, 1).map_err(|e| e.to_string())?;
    let corrected = weighted_bernoulli_sum_closed(3, 1).map_err(|e| e.to_string())?;
    let oracle = weighted_bernoulli_sum_direct(3, 1);
    expect(
        printed == r("5/3") && oracle == r("1/6") && corrected == oracle,
        || format!("weighted sum (3,1): printed {printed}, corrected {corrected}, oracle {oracle}"),
    )?;

    let printed = spectral_power_sum_at_zero_printed(2, 3, 1).map_err(|e| e.to_string())?;
    let corrected = spectral_power_sum_at_zero(2, 3, 1).map_err(|e| e.to_string())?;
    let q = SpectralQuery::new(2, 3, 1, Rational::zero()).map_err(|e| e.to_string())?;
    let oracle = spectral_power_sum(&q, Method::Brute).map_err(|e| e.to_string())?;
    expect(
        printed == r("13/6") && oracle == r("2") && corrected == oracle,
        || format!("x=0 spectral (2,3,1): printed {printed}, corrected {corrected}, oracle {oracle}"),
    )?;

    let printed = reciprocity_rhs_printed(2, 3, 1, ReciprocityVariant::Prop4).map_err(|e| e.to_string())?;
    let corrected = reciprocity_rhs(2, 3, 1, ReciprocityVariant::Prop4).map_err(|e| e.to_string())?;
    let oracle = reciprocity_lhs(2, 3, 1).map_err(|e| e.to_string())?;
    expect(
        printed == r("13/6") && printed != oracle && corrected == oracle,
        || format!("prop4 (2,3,1): printed {printed}, corrected {corrected}, oracle {oracle}"),
    )?;
    Ok("5/3 vs 1/6, 13/6 vs 2, 13/6 vs -1/3".into())
}

fn identity_sweeps() -> Outcome {
    let corpus = standard_corpus(2024);
    let mut cases = 0u64;
    for (a, b) in increasing_pairs(1, 25) {
        let s = NumericalSemigroup::new(a, b).map_err(|e| e.to_string())?;
        let max_m = 2 * a * b;
        let members: Vec<u64> = (1..=max_m).filter(|&m| s.contains(m as i64)).collect();
        for f in &corpus {
            let ev = IdentityEvaluator::new(&s, f, max_m).map_err(|e| e.to_string())?;
            let ids = [Identity::Tuenter, Identity::Mordell, Identity::MordellSplit]
                .into_iter()
                .chain(members.iter().map(|&m| Identity::GassertShor { m }));
            for id in ids {
                let sides = ev.residual(id).map_err(|e| e.to_string())?;
                expect(sides.holds(), || {
                    format!("{id:?} ({a},{b}) {}: {} != {}", f.label(), sides.lhs, sides.rhs)
                })?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} cases over {} functions", corpus.len()))
}

fn generating_functions() -> Outcome {
    let mut cases = 0;
    for (a, b) in increasing_pairs(1, 15) {
        let s = NumericalSemigroup::new(a, b).map_err(|e| e.to_string())?;
        let members: Vec<u64> = (1..=2 * a * b).filter(|&m| s.contains(m as i64)).collect();
        for &m in &members {
            let (l, rr) = s.genfun_gap_residual(m).map_err(|e| e.to_string())?;
            expect(l == rr, || format!("gap identity ({a},{b}) m={m}"))?;
            let (l, rr) = s.genfun_cross_residual(m, a).map_err(|e| e.to_string())?;
            expect(l == rr, || format!("cross identity ({a},{b}) m={m}"))?;
            cases += 2;
        }
        for n in 1..=3u32 {
            let window = s.r_set_window(n).map_err(|e| e.to_string())?;
            let bound = (n as u64 + 1) * a * b;
            let oracle: Vec<u64> = (0..bound).filter(|&k| s.representation_count(k) == n as u64).collect();
            expect(window == oracle, || format!("R_{n} window ({a},{b})"))?;
            let (l, rr) = s.r_set_genfun_residual(n).map_err(|e| e.to_string())?;
            expect(l == rr, || format!("R_{n} generating function ({a},{b})"))?;
            cases += 2;
        }
    }
    Ok(format!("{cases} cases"))
}

fn sylvester_closed_form() -> Outcome {
    let mut cases = 0;
    for (a, b) in ordered_pairs(20) {
        let s = NumericalSemigroup::new(a, b).map_err(|e| e.to_string())?;
        for m in 1..=9u32 {
            let closed = sylvester_sum_closed(a, b, m).map_err(|e| e.to_string())?;
            let brute = s.sylvester_sum(m - 1);
            expect(closed == brute, || format!("({a},{b}) m={m}: {closed} != {brute}"))?;
            cases += 1;
        }
    }
    let spot = NumericalSemigroup::new(3, 5).unwrap().sylvester_sum(1);
    expect(spot == r("14"), || format!("S_(3,5)(1) = {spot}"))?;
    Ok(format!("{cases} cases, S_(3,5)(1) = 14"))
}

fn spectral_sums() -> Outcome {
    let xs = ["0", "1/2", "-2/3", "6", "7"].map(r);
    let mut cases = 0;
    for (a, b) in ordered_pairs(20) {
        for x in &xs {
            for n in 0..=6u32 {
                let q = SpectralQuery::new(a, b, n, x.clone()).map_err(|e| e.to_string())?;
                let brute = spectral_power_sum(&q, Method::Brute).map_err(|e| e.to_string())?;
                let closed = spectral_power_sum(&q, Method::Closed).map_err(|e| e.to_string())?;
                expect(brute == closed, || format!("spectral ({a},{b},{n},{x}): {closed} != {brute}"))?;
                let split = spectral_split_residual(a, b, n, x).map_err(|e| e.to_string())?;
                expect(split.holds(), || format!("split ({a},{b},{n},{x})"))?;
                if n >= 1 && x.is_zero() {
                    let zero = spectral_power_sum_at_zero(a, b, n).map_err(|e| e.to_string())?;
                    expect(zero == brute, || format!("x=0 form ({a},{b},{n}): {zero} != {brute}"))?;
                }
                cases += 1;
            }
            for n in 2..=8u32 {
                let brute = lattice_power_sum(a, b, n, x, Method::Brute).map_err(|e| e.to_string())?;
                let closed = lattice_power_sum(a, b, n, x, Method::Closed).map_err(|e| e.to_string())?;
                expect(brute == closed, || format!("lattice ({a},{b},{n},{x}): {closed} != {brute}"))?;
                cases += 1;
            }
        }
    }
    let spot = lattice_power_sum(2, 3, 3, &Rational::zero(), Method::Closed).map_err(|e| e.to_string())?;
    expect(spot == r("14"), || format!("lattice(2,3,3,0) = {spot}"))?;
    Ok(format!("{cases} cases, lattice(2,3,3,0) = 14"))
}

fn signature_integral_sweep() -> Outcome {
    let mut cases = 0;
    for (a, b) in increasing_pairs(2, 50) {
        let q = TorusKnotQuery::new(a, b).map_err(|e| e.to_string())?;
        let sum = signature_integral(&q, SignatureMethod::Sum15);
        let closed = signature_integral(&q, SignatureMethod::Closed9);
        expect(sum == closed, || format!("({a},{b}): {sum} != {closed}"))?;
        cases += 1;
    }
    for (a, b, want) in [(2, 3, "-4/3"), (3, 5, "-64/15")] {
        let q = TorusKnotQuery::new(a, b).unwrap();
        for m in [SignatureMethod::Sum15, SignatureMethod::Closed9] {
            let got = signature_integral(&q, m);
            expect(got == r(want), || format!("{m:?} ({a},{b}) = {got}"))?;
        }
    }
    Ok(format!("{cases} pairs, (2,3) = -4/3, (3,5) = -64/15"))
}

fn fast_evaluator() -> Outcome {
    let mut cases = 0u64;
    for n in [1, 3, 5, 7] {
        for b in 1..=500u64 {
            let table = ApostolTable::new(b, n).map_err(|e| e.to_string())?;
            for a in (1..=b).filter(|&a| gcd(a, b) == 1) {
                let naive = table.sum(a).map_err(|e| e.to_string())?;
                let fast = apostol_sum_fast_traced(a, b, n).map_err(|e| e.to_string())?;
                expect(fast.value == naive, || format!("(a,b,n)=({a},{b},{n}): {} != {naive}", fast.value))?;
                let steps = euclid_steps(b, a % b);
                expect(fast.depth == steps, || format!("({a},{b}) depth {} != {steps}", fast.depth))?;
                cases += 1;
            }
        }
    }
    let (a, b) = (75025, 121393);
    let start = Instant::now();
    let fast = apostol_sum_fast_traced(a, b, 3).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    expect(elapsed < Duration::from_secs(1), || format!("fast ({a},{b},3) took {elapsed:?}"))?;
    let steps = euclid_steps(b, a % b);
    expect(fast.depth == steps, || format!("({a},{b}) depth {} != {steps}", fast.depth))?;
    let again = apostol_sum_fast(a, b, 3).map_err(|e| e.to_string())?;
    expect(again == fast.value, || "fast evaluator is not deterministic".into())?;
    let naive = ApostolTable::new(b, 3).and_then(|t| t.sum(a)).map_err(|e| e.to_string())?;
    expect(naive == fast.value, || format!("({a},{b},3): fast != naive"))?;
    Ok(format!("{cases} cases; ({a},{b},3) fast in {elapsed:?}, depth {steps}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("eq1 reciprocity, 2<=a<b<=40, n in {1,3,5,7,9}", eq1_reciprocity),
        ("prop3/prop4 corrected rhs, same sweep, (2,3,1) = -1/3", prop3_prop4_reciprocity),
        ("erratum suite", erratum_suite),
        ("gassert-shor / tuenter / mordell / mordell-split, a<b<=25", identity_sweeps),
        ("prop1 polynomial identity and prop2 windows, a<b<=15, n in {1,2,3}", generating_functions),
        ("sylvester closed form, a,b<=20, m<=8", sylvester_closed_form),
        ("prop5 and lattice power sums, a,b<=20", spectral_sums),
        ("signature integral sum15 = closed9, 2<=a<b<=50", signature_integral_sweep),
        ("fast evaluator, b<=500, odd n<=7, fibonacci pair", fast_evaluator),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS [{}] {name}: {detail} ({elapsed:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL [{}] {name}: {why} ({elapsed:.1}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
