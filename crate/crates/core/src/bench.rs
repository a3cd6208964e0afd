//! Closed form against enumeration, timed on minimal triples of growing
//! size.

use std::fmt::Write;
use std::time::{Duration, Instant};

use rand::Rng;

use crate::error::Result;
use crate::exact_arith::{BernoulliCache, BigInt};
use crate::power_sums::{g_m3_nonsym, g_m3_sym};
use crate::relations::{classify, minimal_relations, SemigroupClass};
use crate::sample;
use crate::semigroup::{apery_profile, oracle_power_sum_from_profile, validate, GeneratorTuple};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRow {
    pub generators: Vec<u64>,
    pub n_max: usize,
    pub trials: usize,
    pub closed_form_median: Duration,
    pub oracle_median: Duration,
    pub agree: bool,
}

/// One minimal triple per decade up to `d_max` (and one at `d_max`),
/// drawn from `[s/2, s]`.
pub fn bench_tuples(d_max: u64, seed: u64) -> Vec<GeneratorTuple> {
    let mut scales = Vec::new();
    let mut s = 10u64;
    while s <= d_max {
        scales.push(s);
        s = s.saturating_mul(10);
    }
    if scales.last() != Some(&d_max) && d_max >= 10 {
        scales.push(d_max);
    }
    let mut rng = sample::rng(seed);
    scales
        .into_iter()
        .map(|s| loop {
            let raw: Vec<i64> = (0..3).map(|_| rng.gen_range(s / 2..=s) as i64).collect();
            if let Ok(g) = validate(&raw) {
                if g.order() == 3 && g.minimal() {
                    break g;
                }
            }
        })
        .collect()
}

fn closed_form_all(
    g: &GeneratorTuple,
    n_max: usize,
    cache: &BernoulliCache,
) -> Result<Vec<BigInt>> {
    let rel = minimal_relations(g)?;
    let cls = classify(g, &rel)?;
    (0..=n_max)
        .map(|n| {
            Ok(match cls {
                SemigroupClass::NonSymmetric { .. } => g_m3_nonsym(g, &cls, &rel, n, cache)?,
                SemigroupClass::Symmetric { .. } => g_m3_sym(g, &cls, &rel, n, cache)?,
            }
            .value)
        })
        .collect()
}

fn oracle_all(g: &GeneratorTuple, n_max: usize) -> Vec<BigInt> {
    let profile = apery_profile(g);
    (0..=n_max)
        .map(|n| oracle_power_sum_from_profile(&profile, n as u32))
        .collect()
}

fn median(mut xs: Vec<Duration>) -> Duration {
    xs.sort();
    xs[xs.len() / 2]
}

pub fn run_bench(tuples: &[GeneratorTuple], n_max: usize, trials: usize) -> Result<Vec<BenchRow>> {
    let trials = trials.max(1);
    let mut rows = Vec::with_capacity(tuples.len());
    for g in tuples {
        let mut closed_times = Vec::with_capacity(trials);
        let mut oracle_times = Vec::with_capacity(trials);
        let mut agree = true;
        for _ in 0..trials {
            // fresh cache so every trial pays for its Bernoulli numbers
            let cache = BernoulliCache::new();
            let start = Instant::now();
            let closed = closed_form_all(g, n_max, &cache)?;
            closed_times.push(start.elapsed());

            let start = Instant::now();
            let oracle = oracle_all(g, n_max);
            oracle_times.push(start.elapsed());
            agree &= closed == oracle;
        }
        rows.push(BenchRow {
            generators: g.generators().to_vec(),
            n_max,
            trials,
            closed_form_median: median(closed_times),
            oracle_median: median(oracle_times),
            agree,
        });
    }
    rows.sort_by(|a, b| a.generators.cmp(&b.generators));
    Ok(rows)
}

pub const CSV_HEADER: &str = "d1,d2,d3,n_max,trials,closed_form_median_us,oracle_median_us,agree";

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            r.generators[0],
            r.generators[1],
            r.generators[2],
            r.n_max,
            r.trials,
            r.closed_form_median.as_micros(),
            r.oracle_median.as_micros(),
            r.agree
        );
    }
    out
}
