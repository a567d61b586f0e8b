use std::time::Instant;

use serde::Serialize;

use reciprocity_lab::dedekind::{apostol_sum_fast, apostol_sum_naive};
use reciprocity_lab::Result;

/// Largest `b` for which the naive sum is still run.
pub const NAIVE_LIMIT: u64 = 10_000;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRow {
    pub pair: String,
    pub a: u64,
    pub b: u64,
    pub n: u32,
    pub t_naive_ms: Option<f64>,
    pub t_fast_ms: f64,
    /// `None` when the naive sum was skipped.
    pub equal: Option<bool>,
}

impl BenchRow {
    pub fn passed(&self) -> bool {
        self.equal != Some(false)
    }
}

/// Timed runs per measurement; the fastest one is reported.
const REPEATS: usize = 3;

/// Best wall-clock time of `f` in milliseconds, rounded to nanoseconds, with its value.
fn time<T>(mut f: impl FnMut() -> Result<T>) -> Result<(f64, T)> {
    let mut best = f64::INFINITY;
    let mut value = None;
    for _ in 0..REPEATS {
        let start = Instant::now();
        let v = f()?;
        best = best.min(start.elapsed().as_secs_f64() * 1e3);
        value = Some(v);
    }
    Ok(((best * 1e6).round() / 1e6, value.expect("REPEATS > 0")))
}

pub fn run_bench(pairs: &[(u64, u64)], n: u32) -> Result<Vec<BenchRow>> {
    // Fill the Bernoulli and polynomial caches before anything is timed.
    apostol_sum_fast(1, 2, n)?;
    apostol_sum_naive(1, 2, n)?;
    pairs
        .iter()
        .map(|&(a, b)| {
            let (t_fast_ms, fast) = time(|| apostol_sum_fast(a, b, n))?;
            let (t_naive_ms, equal) = if b <= NAIVE_LIMIT {
                let (t, naive) = time(|| apostol_sum_naive(a, b, n))?;
                (Some(t), Some(naive == fast))
            } else {
                (None, None)
            };
            Ok(BenchRow {
                pair: format!("{a}:{b}"),
                a,
                b,
                n,
                t_naive_ms,
                t_fast_ms,
                equal,
            })
        })
        .collect()
}
