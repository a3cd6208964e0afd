//! Invariant suite behind `semigaps selftest`.
//!
//! Each check runs over seeded random tuples and reports how many cases
//! it covered, or the first violation it found.

use num_integer::Integer;
use num_traits::Zero;

use crate::bernoulli_higher::{eval_expansion, eval_recursive, HigherOrderQuery};
use crate::exact_arith::{binomial, int, BernoulliCache, BigInt, BigRational};
use crate::power_sums::{
    g_m2_compact, g_m2_double_sum, g_m2_low_order, g_m3_low_order, g_m3_nonsym, g_m3_sym,
};
use crate::relations::{
    classify, minimal_relations, numerator_closed_form, symmetric_exponents, SemigroupClass,
};
use crate::sample;
use crate::semigroup::{
    apery_profile, gap_set_from_profile, is_representable, numerator_from_gaps,
    oracle_power_sum_from_profile, sieve_gap_set, GeneratorTuple,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failure: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub seed: u64,
    pub pairs: usize,
    pub pair_max: u64,
    pub pair_n_max: usize,
    pub triples: usize,
    pub symmetric_triples: usize,
    pub triple_max: u64,
    pub triple_n_max: usize,
    pub bernoulli_max: usize,
}

impl SuiteConfig {
    pub fn quick(seed: u64) -> Self {
        Self {
            seed,
            pairs: 40,
            pair_max: 60,
            pair_n_max: 8,
            triples: 20,
            symmetric_triples: 8,
            triple_max: 50,
            triple_n_max: 6,
            bernoulli_max: 50,
        }
    }

    pub fn full(seed: u64) -> Self {
        Self {
            pairs: 200,
            triples: 100,
            symmetric_triples: 30,
            ..Self::quick(seed)
        }
    }
}

type CheckResult = std::result::Result<usize, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

struct Tuples {
    pairs: Vec<GeneratorTuple>,
    nonsym: Vec<GeneratorTuple>,
    sym: Vec<GeneratorTuple>,
}

impl Tuples {
    fn draw(cfg: &SuiteConfig) -> Self {
        let mut rng = sample::rng(cfg.seed);
        let pairs = (0..cfg.pairs)
            .map(|_| sample::coprime_pair(&mut rng, cfg.pair_max))
            .collect();
        let nonsym = (0..cfg.triples)
            .map(|_| sample::minimal_triple(&mut rng, cfg.triple_max, Some(false)))
            .collect();
        let sym = (0..cfg.symmetric_triples)
            .map(|_| sample::symmetric_triple(&mut rng, cfg.triple_max))
            .collect();
        Self { pairs, nonsym, sym }
    }

    fn triples(&self) -> impl Iterator<Item = &GeneratorTuple> {
        self.nonsym.iter().chain(&self.sym)
    }

    fn all(&self) -> impl Iterator<Item = &GeneratorTuple> {
        self.pairs.iter().chain(self.triples())
    }
}

fn bernoulli_identity(cfg: &SuiteConfig, cache: &BernoulliCache) -> CheckResult {
    let b = cache.table(cfg.bernoulli_max + 1);
    for k in 1..=cfg.bernoulli_max {
        let s: BigRational = (0..=k)
            .map(|j| int(binomial(k as u64 + 1, j as i64)) * &b[j])
            .sum();
        ensure(s.is_zero(), || format!("Σ C({},j) B_j = {s}", k + 1))?;
    }
    let mut odd = 0;
    for k in (3..=cfg.bernoulli_max + 1).step_by(2) {
        ensure(b[k].is_zero(), || format!("B_{k} = {}", b[k]))?;
        odd += 1;
    }
    Ok(cfg.bernoulli_max + odd)
}

fn higher_order_routes(cfg: &SuiteConfig, cache: &BernoulliCache) -> CheckResult {
    let mut rng = sample::rng(cfg.seed ^ 0x5eed);
    use rand::Rng;
    let mut cases = 0;
    for _ in 0..12 {
        let m = rng.gen_range(2..=3);
        let w: Vec<u64> = (0..m).map(|_| rng.gen_range(1..=20)).collect();
        let xs = [0i64, (w[0] * w[1]) as i64, rng.gen_range(1..=100)];
        for n in 0..=12 {
            for &x in &xs {
                let q = HigherOrderQuery::new(n, x, &w).expect("valid query");
                let a = eval_recursive(&q, cache);
                let b = eval_expansion(&q, cache).map_err(|e| e.to_string())?;
                ensure(a == b, || format!("B_{n}^({m})({x}|{w:?}): {a} vs {b}"))?;
                cases += 1;
            }
        }
    }
    Ok(cases)
}

fn gap_oracles(t: &Tuples) -> CheckResult {
    let mut cases = 0;
    for g in t.all() {
        let profile = apery_profile(g);
        let gaps = gap_set_from_profile(&profile);
        ensure(gaps.gaps().first() == Some(&1), || {
            format!("{g:?}: smallest gap is not 1")
        })?;
        ensure(profile.genus() == gaps.genus(), || {
            format!("{g:?}: Apéry genus mismatch")
        })?;
        ensure(sieve_gap_set(g) == gaps.gaps(), || {
            format!("{g:?}: sieve disagrees")
        })?;
        let limit = gaps.frobenius().unwrap_or(0) + g.generators()[0];
        for x in 0..=limit {
            let representable = is_representable(x, g.generators());
            ensure(representable != gaps.contains(x), || {
                format!("{g:?}: {x} is both or neither gap and element")
            })?;
        }
        cases += 1;
    }
    Ok(cases)
}

fn relation_rows(t: &Tuples) -> CheckResult {
    let mut cases = 0;
    for g in t.triples() {
        let rel = minimal_relations(g).map_err(|e| e.to_string())?;
        let a = rel.entries();
        let d = g.generators();
        for i in 0..3 {
            ensure(a[i][i] >= 2, || format!("{d:?}: a_{i}{i} < 2"))?;
            let rhs: u64 = (0..3).filter(|&j| j != i).map(|j| a[i][j] * d[j]).sum();
            ensure(a[i][i] * d[i] == rhs, || {
                format!("{d:?}: row {} identity fails", i + 1)
            })?;
            let row_gcd = a[i][0].gcd(&a[i][1]).gcd(&a[i][2]);
            ensure(row_gcd == 1, || {
                format!("{d:?}: row {} gcd {row_gcd}", i + 1)
            })?;
        }
        cases += 1;
    }
    Ok(cases)
}

fn numerators(t: &Tuples) -> CheckResult {
    let mut cases = 0;
    for g in t.triples() {
        let rel = minimal_relations(g).map_err(|e| e.to_string())?;
        let cls = classify(g, &rel).map_err(|e| e.to_string())?;
        let gaps = gap_set_from_profile(&apery_profile(g));
        let oracle = numerator_from_gaps(g, &gaps);
        let closed = numerator_closed_form(g, &cls, &rel).map_err(|e| e.to_string())?;
        ensure(oracle == closed, || {
            format!("{g:?}: oracle {oracle} vs closed {closed}")
        })?;
        // (1 - z^e)^2 collapses to three terms when both exponents coincide
        let terms = match cls {
            SemigroupClass::Symmetric {
                vanishing_column, ..
            } => {
                let (e2, e3) = symmetric_exponents(&rel, vanishing_column);
                if e2 == e3 {
                    3
                } else {
                    4
                }
            }
            SemigroupClass::NonSymmetric { .. } => 6,
        };
        ensure(oracle.num_terms() == terms, || {
            format!("{g:?}: {oracle} has wrong shape")
        })?;
        cases += 1;
    }
    for g in &t.pairs {
        let gaps = gap_set_from_profile(&apery_profile(g));
        let d = g.generators();
        let expected = crate::polynomial::NumeratorPolynomial::one_minus_z_pow(d[0] * d[1]);
        ensure(numerator_from_gaps(g, &gaps) == expected, || {
            format!("{d:?}: pair numerator")
        })?;
        cases += 1;
    }
    Ok(cases)
}

fn symmetry_and_top_degree(t: &Tuples) -> CheckResult {
    let mut cases = 0;
    for g in t.triples() {
        let rel = minimal_relations(g).map_err(|e| e.to_string())?;
        let cls = classify(g, &rel).map_err(|e| e.to_string())?;
        let gaps = gap_set_from_profile(&apery_profile(g));
        let frob = gaps.frobenius().expect("d1 > 1");
        let genus = gaps.genus();
        let s_d = g.sum();
        ensure((frob + 1 == 2 * genus) == cls.is_symmetric(), || {
            format!("{g:?}: F = {frob}, G = {genus}, classified {cls:?}")
        })?;
        match cls {
            SemigroupClass::Symmetric { reduced_trace, .. } => {
                ensure(frob + s_d == reduced_trace, || {
                    format!("{g:?}: F + s_d != <ã,d>")
                })?;
            }
            SemigroupClass::NonSymmetric { j_invariant } => {
                let t2 = rel.weighted_trace() + j_invariant;
                ensure(2 * (frob + s_d) == t2, || {
                    format!("{g:?}: F + s_d != (<a,d>+J)/2")
                })?;
            }
        }
        cases += 1;
    }
    Ok(cases)
}

fn pair_power_sums(cfg: &SuiteConfig, t: &Tuples, cache: &BernoulliCache) -> CheckResult {
    let mut cases = 0;
    for g in &t.pairs {
        let profile = apery_profile(g);
        for n in 0..=cfg.pair_n_max {
            let a = g_m2_double_sum(g, n, cache)
                .map_err(|e| e.to_string())?
                .value;
            let b = g_m2_compact(g, n, cache).map_err(|e| e.to_string())?.value;
            let o = oracle_power_sum_from_profile(&profile, n as u32);
            ensure(a == b && b == o, || {
                format!("{g:?} n={n}: {a} / {b} / oracle {o}")
            })?;
            if n <= 2 {
                let l = g_m2_low_order(g, n).map_err(|e| e.to_string())?.value;
                ensure(l == o, || format!("{g:?} n={n}: low order {l} vs {o}"))?;
            }
            cases += 1;
        }
    }
    Ok(cases)
}

fn triple_power_sums(cfg: &SuiteConfig, t: &Tuples, cache: &BernoulliCache) -> CheckResult {
    let mut cases = 0;
    for g in t.triples() {
        let rel = minimal_relations(g).map_err(|e| e.to_string())?;
        let cls = classify(g, &rel).map_err(|e| e.to_string())?;
        let profile = apery_profile(g);
        let mut previous: Option<BigInt> = None;
        for n in 0..=cfg.triple_n_max {
            let closed = match cls {
                SemigroupClass::NonSymmetric { .. } => g_m3_nonsym(g, &cls, &rel, n, cache),
                SemigroupClass::Symmetric { .. } => g_m3_sym(g, &cls, &rel, n, cache),
            }
            .map_err(|e| e.to_string())?
            .value;
            let o = oracle_power_sum_from_profile(&profile, n as u32);
            ensure(closed == o, || {
                format!("{g:?} n={n}: closed {closed} vs oracle {o}")
            })?;
            if n <= 2 {
                let l = g_m3_low_order(g, &cls, &rel, n)
                    .map_err(|e| e.to_string())?
                    .value;
                ensure(l == o, || {
                    format!("{g:?} n={n}: low order {l} vs oracle {o}")
                })?;
            }
            if let Some(p) = &previous {
                ensure(*p <= closed, || format!("{g:?}: g_{n} < g_{}", n - 1))?;
            }
            previous = Some(closed);
            cases += 1;
        }
    }
    Ok(cases)
}

pub fn run_suite(cfg: &SuiteConfig) -> Vec<CheckOutcome> {
    let cache = BernoulliCache::new();
    let tuples = Tuples::draw(cfg);
    let outcome = |name, r: CheckResult| match r {
        Ok(cases) => CheckOutcome {
            name,
            cases,
            failure: None,
        },
        Err(msg) => CheckOutcome {
            name,
            cases: 0,
            failure: Some(msg),
        },
    };
    vec![
        outcome(
            "bernoulli recurrence and odd zeros",
            bernoulli_identity(cfg, &cache),
        ),
        outcome(
            "higher-order Bernoulli routes agree",
            higher_order_routes(cfg, &cache),
        ),
        outcome("gap set oracles agree", gap_oracles(&tuples)),
        outcome("minimal relation rows", relation_rows(&tuples)),
        outcome(
            "Hilbert numerator closed form = oracle",
            numerators(&tuples),
        ),
        outcome("symmetry and top degree", symmetry_and_top_degree(&tuples)),
        outcome(
            "two-generator power sums",
            pair_power_sums(cfg, &tuples, &cache),
        ),
        outcome(
            "three-generator power sums",
            triple_power_sums(cfg, &tuples, &cache),
        ),
    ]
}
