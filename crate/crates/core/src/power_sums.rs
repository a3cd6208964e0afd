//! Closed-form power sums `g_n = Σ s^n` over the gap set.
//!
//! Every route computes an exact rational and refuses to return unless its
//! denominator is 1. The `equation` tag carried by errors names the
//! formula that produced the value.

use std::fmt;

use num_traits::{One, Zero};

use crate::bernoulli_higher::{EvalPath, Evaluator, HigherOrderQuery};
use crate::error::{Error, Result};
use crate::exact_arith::{int, pascal, BernoulliCache, BigInt, BigRational};
use crate::relations::{
    classify, minimal_relations, symmetric_exponents, top_exponents, RelationMatrix, SemigroupClass,
};
use crate::semigroup::{apery_profile, oracle_power_sum_from_profile, validate, GeneratorTuple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Fast,
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    ClosedFormM2DoubleSum,
    ClosedFormM2Compact,
    ClosedFormM3Nonsym,
    ClosedFormM3Sym,
    SpecializedLowOrder,
    Oracle,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::ClosedFormM2DoubleSum => "closed_form_m2_double_sum",
            Method::ClosedFormM2Compact => "closed_form_m2_compact",
            Method::ClosedFormM3Nonsym => "closed_form_m3_nonsym",
            Method::ClosedFormM3Sym => "closed_form_m3_sym",
            Method::SpecializedLowOrder => "specialized_low_order",
            Method::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSumResult {
    pub n: usize,
    pub value: BigInt,
    pub method: Method,
    /// Set in verify mode: every independent route agreed.
    pub agreement: Option<bool>,
}

impl PowerSumResult {
    fn new(n: usize, value: BigInt, method: Method) -> Self {
        Self {
            n,
            value,
            method,
            agreement: None,
        }
    }
}

fn to_integer(value: BigRational, equation: &'static str, n: usize) -> Result<BigInt> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::NonIntegral { equation, n, value })
    }
}

fn require_order(g: &GeneratorTuple, expected: usize, operation: &'static str) -> Result<()> {
    if g.order() != expected {
        return Err(Error::WrongGeneratorCount {
            operation,
            expected,
            got: g.order(),
        });
    }
    Ok(())
}

/// `-B_{n+1} / (n+1)`, the contribution of `1/(1-z)`.
fn unit_term(n: usize, cache: &BernoulliCache) -> BigRational {
    -cache.get(n + 1) / int(n as u64 + 1)
}

/// Two generators, as a double sum over Bernoulli numbers:
///
/// ```text
/// g_n = 1/((n+1)(n+2)) Σ_k Σ_l C(n+2,k) C(n+2-k,l) B_k B_l d1^{n+1-k} d2^{n+1-l}
///       - B_{n+1}/(n+1)
/// ```
pub fn g_m2_double_sum(
    g: &GeneratorTuple,
    n: usize,
    cache: &BernoulliCache,
) -> Result<PowerSumResult> {
    require_order(g, 2, "two-generator double sum")?;
    let (d1, d2) = (
        BigInt::from(g.generators()[0]),
        BigInt::from(g.generators()[1]),
    );
    let top = n + 1;
    let bern = cache.table(top);
    let binom = pascal(n + 2);
    let p1: Vec<BigInt> = (0..=top).map(|e| d1.pow(e as u32)).collect();
    let p2: Vec<BigInt> = (0..=top).map(|e| d2.pow(e as u32)).collect();

    let mut sum = BigRational::zero();
    for k in 0..=top {
        for l in 0..=top - k {
            let c = &binom[n + 2][k] * &binom[n + 2 - k][l] * &p1[top - k] * &p2[top - l];
            sum += int(c) * &bern[k] * &bern[l];
        }
    }
    let value = sum / int((n as u64 + 1) * (n as u64 + 2)) + unit_term(n, cache);
    Ok(PowerSumResult::new(
        n,
        to_integer(value, "gen1a", n)?,
        Method::ClosedFormM2DoubleSum,
    ))
}

/// Two generators through the order-2 Bernoulli polynomial:
///
/// ```text
/// g_n = -B_{n+1}/(n+1)
///       - [B^(2)_{n+2}(0|d) - B^(2)_{n+2}(d1 d2|d)] / (d1 d2 (n+1)(n+2))
/// ```
pub fn g_m2_compact(
    g: &GeneratorTuple,
    n: usize,
    cache: &BernoulliCache,
) -> Result<PowerSumResult> {
    g_m2_compact_with(g, n, &Evaluator::new(EvalPath::Expansion, cache))
}

pub fn g_m2_compact_with(g: &GeneratorTuple, n: usize, eval: &Evaluator) -> Result<PowerSumResult> {
    require_order(g, 2, "two-generator compact form")?;
    let w = g.generators();
    let corner = BigInt::from(w[0]) * w[1];
    let cache = eval.cache();
    let at = |x: BigInt| eval.eval(&HigherOrderQuery::new(n + 2, x, w).expect("valid weights"));
    let bracket = at(BigInt::zero()) - at(corner.clone());
    let scale = corner * (n as u64 + 1) * (n as u64 + 2);
    let value = unit_term(n, cache) - bracket / int(scale);
    Ok(PowerSumResult::new(
        n,
        to_integer(value, "gnd2", n)?,
        Method::ClosedFormM2Compact,
    ))
}

/// `-B_{n+1}/(n+1) + n!/((n+3)! π_d) Σ sign · B^(3)_{n+3}(x | d)`.
fn m3_from_terms(
    g: &GeneratorTuple,
    n: usize,
    terms: &[(u64, bool)],
    eval: &Evaluator,
) -> BigRational {
    let w = g.generators();
    let mut bracket = BigRational::zero();
    for &(x, positive) in terms {
        let q = HigherOrderQuery::new(n + 3, x, w).expect("valid weights");
        let b = eval.eval(&q);
        if positive {
            bracket += b;
        } else {
            bracket -= b;
        }
    }
    let n = n as u64;
    let scale = g.product() * ((n + 1) * (n + 2) * (n + 3));
    unit_term(n as usize, eval.cache()) + bracket / int(scale)
}

fn check_triple(g: &GeneratorTuple, rel: &RelationMatrix) -> Result<()> {
    require_order(g, 3, "three-generator closed form")?;
    if !g.minimal() {
        return Err(Error::NotMinimal(g.generators().to_vec()));
    }
    if g.generators() != rel.generators() {
        return Err(Error::Precondition(
            "relation matrix belongs to different generators".into(),
        ));
    }
    Ok(())
}

pub fn g_m3_nonsym(
    g: &GeneratorTuple,
    cls: &SemigroupClass,
    rel: &RelationMatrix,
    n: usize,
    cache: &BernoulliCache,
) -> Result<PowerSumResult> {
    g_m3_nonsym_with(g, cls, rel, n, &Evaluator::new(EvalPath::Expansion, cache))
}

pub fn g_m3_nonsym_with(
    g: &GeneratorTuple,
    cls: &SemigroupClass,
    rel: &RelationMatrix,
    n: usize,
    eval: &Evaluator,
) -> Result<PowerSumResult> {
    check_triple(g, rel)?;
    let SemigroupClass::NonSymmetric { j_invariant } = *cls else {
        return Err(Error::Precondition(
            "non-symmetric formula applied to a symmetric semigroup".into(),
        ));
    };
    let t = rel.weighted_trace();
    if !(t + j_invariant).is_multiple_of(2) {
        return Err(Error::Relations {
            equation: "gnd3ns",
            detail: format!("<a,d> = {t} and J = {j_invariant} have different parity"),
        });
    }
    let (lo, hi) = top_exponents(rel, j_invariant);
    let [p1, p2, p3] = rel.diag_weights();
    let terms = [
        (0, true),
        (p1, false),
        (p2, false),
        (p3, false),
        (lo, true),
        (hi, true),
    ];
    let value = m3_from_terms(g, n, &terms, eval);
    Ok(PowerSumResult::new(
        n,
        to_integer(value, "gnd3ns", n)?,
        Method::ClosedFormM3Nonsym,
    ))
}

pub fn g_m3_sym(
    g: &GeneratorTuple,
    cls: &SemigroupClass,
    rel: &RelationMatrix,
    n: usize,
    cache: &BernoulliCache,
) -> Result<PowerSumResult> {
    g_m3_sym_with(g, cls, rel, n, &Evaluator::new(EvalPath::Expansion, cache))
}

pub fn g_m3_sym_with(
    g: &GeneratorTuple,
    cls: &SemigroupClass,
    rel: &RelationMatrix,
    n: usize,
    eval: &Evaluator,
) -> Result<PowerSumResult> {
    check_triple(g, rel)?;
    let SemigroupClass::Symmetric {
        vanishing_column, ..
    } = *cls
    else {
        return Err(Error::Precondition(
            "symmetric formula applied to a non-symmetric semigroup".into(),
        ));
    };
    let (e2, e3) = symmetric_exponents(rel, vanishing_column);
    let terms = [(0, true), (e2, false), (e3, false), (e2 + e3, true)];
    let value = m3_from_terms(g, n, &terms, eval);
    Ok(PowerSumResult::new(
        n,
        to_integer(value, "gnd3s", n)?,
        Method::ClosedFormM3Sym,
    ))
}

fn exact_div(num: BigInt, den: i64, equation: &'static str, n: usize) -> Result<BigInt> {
    to_integer(BigRational::new(num, den.into()), equation, n)
}

/// Polynomial closed forms for `n <= 2` with three generators, in integer
/// arithmetic. In the non-symmetric `g_1` the pair sum runs over the six
/// ordered pairs `i != j`; in `g_2` the pair sum runs over all nine ordered
/// pairs including `i = j`.
pub fn g_m3_low_order(
    g: &GeneratorTuple,
    cls: &SemigroupClass,
    rel: &RelationMatrix,
    n: usize,
) -> Result<PowerSumResult> {
    check_triple(g, rel)?;
    if n > 2 {
        return Err(Error::Precondition(format!(
            "low-order formulas cover n <= 2, got n = {n}"
        )));
    }
    let d: Vec<BigInt> = g.generators().iter().map(|&v| BigInt::from(v)).collect();
    let s = &d[0] + &d[1] + &d[2];
    let sigma2 = &d[0] * &d[1] + &d[0] * &d[2] + &d[1] * &d[2];
    let pi_d = &d[0] * &d[1] * &d[2];

    let value = match *cls {
        SemigroupClass::Symmetric { reduced_trace, .. } => {
            let rt = BigInt::from(reduced_trace);
            match n {
                0 => exact_div(BigInt::one() - &s + &rt, 2, "g0d3s", n)?,
                1 => exact_div(
                    (&s - &rt) * (&s - &rt * 2) + &sigma2 - &pi_d - 1,
                    12,
                    "g1d3s",
                    n,
                )?,
                _ => exact_div(
                    (&s - &rt) * (&s * &rt - &rt * &rt - &sigma2 + &pi_d),
                    12,
                    "g2d3s",
                    n,
                )?,
            }
        }
        SemigroupClass::NonSymmetric { .. } => {
            let t = BigInt::from(rel.weighted_trace());
            let pi_a = BigInt::from(rel.diag_product());
            let p: Vec<BigInt> = rel
                .diag_weights()
                .iter()
                .map(|&v| BigInt::from(v))
                .collect();
            match n {
                0 => exact_div(BigInt::one() - &s - &pi_a + &t, 2, "g0d3n", n)?,
                1 => {
                    let ordered_pairs = (&p[0] * &p[1] + &p[0] * &p[2] + &p[1] * &p[2]) * 2;
                    let twelve = &t * (&t * 2 - &s * 3 - &pi_a * 2) + &s * (&s + &pi_a * 3)
                        - ordered_pairs
                        + &sigma2
                        + &pi_d
                        - 1;
                    exact_div(twelve, 12, "g1d3n", n)?
                }
                _ => {
                    let a: Vec<BigInt> = rel.diag().iter().map(|&v| BigInt::from(v) - 1).collect();
                    // twice the bracketed sums, to clear the halves
                    let mut twice = BigInt::zero();
                    for i in 0..3 {
                        let ai = &a[i];
                        let di = &d[i];
                        twice += ai
                            * ((ai * 2 + 1) * di * di * di * 2 - &pi_a * (ai + 2) * di * di
                                + &pi_d * di * 2
                                + &pi_d * (ai * 2 + 1));
                    }
                    for i in 0..3 {
                        for j in 0..3 {
                            let (ai, aj) = (&a[i], &a[j]);
                            let b_ij = ai * aj - ai - aj;
                            let c_ij = ai * (ai * aj - ai - 1);
                            let f_ij = ai * (aj * 2 + 1);
                            twice += c_ij * &d[i] * &d[i] * &d[j] * 2
                                - &pi_a * b_ij * &d[i] * &d[j]
                                - &pi_d * f_ij;
                        }
                    }
                    exact_div(twice, 24, "g2d3n", n)?
                }
            }
        }
    };
    Ok(PowerSumResult::new(n, value, Method::SpecializedLowOrder))
}

/// Classical closed forms for `n <= 2` with two generators.
pub fn g_m2_low_order(g: &GeneratorTuple, n: usize) -> Result<PowerSumResult> {
    require_order(g, 2, "two-generator low-order formulas")?;
    if n > 2 {
        return Err(Error::Precondition(format!(
            "low-order formulas cover n <= 2, got n = {n}"
        )));
    }
    let d1 = BigInt::from(g.generators()[0]);
    let d2 = BigInt::from(g.generators()[1]);
    let g0 = exact_div((&d1 - 1) * (&d2 - 1), 2, "sylvester g0", n)?;
    let value = match n {
        0 => g0,
        1 => exact_div(&g0 * (&d1 * &d2 * 2 - &d1 - &d2 - 1), 6, "g1(d^2)", n)?,
        _ => {
            let prod = &d1 * &d2;
            exact_div(&g0 * &prod * (&prod - &d1 - &d2), 6, "g2(d^2)", n)?
        }
    };
    Ok(PowerSumResult::new(n, value, Method::SpecializedLowOrder))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReportClass {
    Symmetric,
    NonSymmetric,
    /// Two generators, given directly or left after dropping a redundant
    /// third one.
    ReducedM2,
    /// A generator equal to 1: every nonnegative integer is representable.
    Trivial,
}

impl ReportClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            ReportClass::Symmetric => "symmetric",
            ReportClass::NonSymmetric => "nonsymmetric",
            ReportClass::ReducedM2 => "reduced-m2",
            ReportClass::Trivial => "trivial",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSumReport {
    /// Sorted, deduplicated input generators.
    pub generators: Vec<u64>,
    pub minimal: bool,
    /// Generators actually fed to the formulas.
    pub reduced: Vec<u64>,
    pub class: ReportClass,
    pub results: Vec<PowerSumResult>,
}

fn agree(equation: &'static str, n: usize, closed: &BigInt, reference: BigInt) -> Result<()> {
    if *closed == reference {
        Ok(())
    } else {
        Err(Error::Disagreement {
            equation,
            n,
            closed: closed.clone(),
            reference,
        })
    }
}

enum Pipeline {
    Pair,
    Triple(SemigroupClass, RelationMatrix),
}

/// Validates, reduces non-minimal triples, dispatches to the two- or
/// three-generator formulas for `n = 0..=n_max`. In verify mode every
/// value is recomputed along each independent route, including the
/// enumeration oracle, and any mismatch is an error.
pub fn power_sums_auto(
    raw: &[i64],
    n_max: usize,
    mode: Mode,
    cache: &BernoulliCache,
) -> Result<PowerSumReport> {
    if !(2..=3).contains(&raw.len()) {
        return Err(Error::Arity(raw.len()));
    }
    if let Some(&bad) = raw.iter().find(|&&d| d < 1) {
        return Err(Error::GeneratorTooSmall(bad));
    }
    if raw.contains(&1) {
        let mut generators: Vec<u64> = raw.iter().map(|&d| d as u64).collect();
        generators.sort_unstable();
        generators.dedup();
        let results = (0..=n_max)
            .map(|n| PowerSumResult {
                n,
                value: BigInt::zero(),
                method: Method::Oracle,
                agreement: None,
            })
            .collect();
        return Ok(PowerSumReport {
            minimal: generators.len() == 1,
            generators,
            reduced: vec![1],
            class: ReportClass::Trivial,
            results,
        });
    }

    let g = validate(raw)?;
    let reduced = g.reduce();
    let (pipeline, class) = if reduced.order() == 2 {
        (Pipeline::Pair, ReportClass::ReducedM2)
    } else {
        let rel = minimal_relations(&reduced)?;
        let cls = classify(&reduced, &rel)?;
        let class = if cls.is_symmetric() {
            ReportClass::Symmetric
        } else {
            ReportClass::NonSymmetric
        };
        (Pipeline::Triple(cls, rel), class)
    };
    let profile = (mode == Mode::Verify).then(|| apery_profile(&reduced));
    let recursive = Evaluator::with_horizon(EvalPath::Recursive, cache, n_max + 3);

    let mut results = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let result = match (&pipeline, mode) {
            (Pipeline::Pair, Mode::Fast) if n <= 2 => g_m2_low_order(&reduced, n)?,
            (Pipeline::Pair, Mode::Fast) => g_m2_double_sum(&reduced, n, cache)?,
            (Pipeline::Triple(cls, rel), Mode::Fast) if n <= 2 => {
                g_m3_low_order(&reduced, cls, rel, n)?
            }
            (Pipeline::Triple(cls, rel), Mode::Fast) => match cls {
                SemigroupClass::NonSymmetric { .. } => g_m3_nonsym(&reduced, cls, rel, n, cache)?,
                SemigroupClass::Symmetric { .. } => g_m3_sym(&reduced, cls, rel, n, cache)?,
            },
            (Pipeline::Pair, Mode::Verify) => {
                let mut r = g_m2_double_sum(&reduced, n, cache)?;
                let v = &r.value;
                agree("gnd2", n, v, g_m2_compact(&reduced, n, cache)?.value)?;
                agree(
                    "gnd2/recursive",
                    n,
                    v,
                    g_m2_compact_with(&reduced, n, &recursive)?.value,
                )?;
                if n <= 2 {
                    agree(
                        "g_n(d^2) low order",
                        n,
                        v,
                        g_m2_low_order(&reduced, n)?.value,
                    )?;
                }
                let oracle = oracle_power_sum_from_profile(profile.as_ref().unwrap(), n as u32);
                agree("oracle", n, v, oracle)?;
                r.agreement = Some(true);
                r
            }
            (Pipeline::Triple(cls, rel), Mode::Verify) => {
                let (mut r, alt, name) = match cls {
                    SemigroupClass::NonSymmetric { .. } => (
                        g_m3_nonsym(&reduced, cls, rel, n, cache)?,
                        g_m3_nonsym_with(&reduced, cls, rel, n, &recursive)?,
                        "gnd3ns/recursive",
                    ),
                    SemigroupClass::Symmetric { .. } => (
                        g_m3_sym(&reduced, cls, rel, n, cache)?,
                        g_m3_sym_with(&reduced, cls, rel, n, &recursive)?,
                        "gnd3s/recursive",
                    ),
                };
                let v = &r.value;
                agree(name, n, v, alt.value)?;
                if n <= 2 {
                    agree(
                        "g_n(d^3) low order",
                        n,
                        v,
                        g_m3_low_order(&reduced, cls, rel, n)?.value,
                    )?;
                }
                let oracle = oracle_power_sum_from_profile(profile.as_ref().unwrap(), n as u32);
                agree("oracle", n, v, oracle)?;
                r.agreement = Some(true);
                r
            }
        };
        results.push(result);
    }

    Ok(PowerSumReport {
        generators: g.generators().to_vec(),
        minimal: g.minimal(),
        reduced: reduced.generators().to_vec(),
        class,
        results,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{oracle_power_sum, validate};

    fn tuple(raw: &[i64]) -> GeneratorTuple {
        validate(raw).unwrap()
    }

    fn triple(raw: &[i64]) -> (GeneratorTuple, SemigroupClass, RelationMatrix) {
        let g = tuple(raw);
        let rel = minimal_relations(&g).unwrap();
        let cls = classify(&g, &rel).unwrap();
        (g, cls, rel)
    }

    fn values(report: &PowerSumReport) -> Vec<i64> {
        report
            .results
            .iter()
            .map(|r| i64::try_from(&r.value).unwrap())
            .collect()
    }

    #[test]
    fn pair_examples() {
        let cache = BernoulliCache::new();
        let g = tuple(&[3, 5]);
        let expected = [4, 14, 70, 416];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(g_m2_double_sum(&g, n, &cache).unwrap().value, e.into());
            assert_eq!(g_m2_compact(&g, n, &cache).unwrap().value, e.into());
        }
        for (n, &e) in expected.iter().take(3).enumerate() {
            assert_eq!(g_m2_low_order(&g, n).unwrap().value, e.into());
        }
        let g = tuple(&[2, 3]);
        assert_eq!(g_m2_compact(&g, 7, &cache).unwrap().value, 1.into());
        assert_eq!(g_m2_low_order(&g, 0).unwrap().value, 1.into());
        let g = tuple(&[5, 7]);
        assert_eq!(
            g_m2_compact(&g, 2, &cache).unwrap().value,
            oracle_power_sum(&g, 2)
        );
        let g = tuple(&[7, 11]);
        assert_eq!(
            g_m2_low_order(&g, 1).unwrap().value,
            g_m2_double_sum(&g, 1, &cache).unwrap().value
        );
    }

    #[test]
    fn nonsymmetric_345() {
        let cache = BernoulliCache::new();
        let (g, cls, rel) = triple(&[3, 4, 5]);
        for (n, e) in [(0, 2), (1, 3), (5, 33)] {
            let r = g_m3_nonsym(&g, &cls, &rel, n, &cache).unwrap();
            assert_eq!(r.value, e.into());
            assert_eq!(r.method, Method::ClosedFormM3Nonsym);
        }
        for (n, e) in [(0, 2), (1, 3), (2, 5)] {
            assert_eq!(g_m3_low_order(&g, &cls, &rel, n).unwrap().value, e.into());
        }
    }

    #[test]
    fn symmetric_469() {
        let cache = BernoulliCache::new();
        let (g, cls, rel) = triple(&[4, 6, 9]);
        for (n, e) in [(0, 6), (1, 29), (2, 209)] {
            assert_eq!(g_m3_sym(&g, &cls, &rel, n, &cache).unwrap().value, e.into());
            assert_eq!(g_m3_low_order(&g, &cls, &rel, n).unwrap().value, e.into());
        }
    }

    #[test]
    fn wrong_class_is_rejected() {
        let cache = BernoulliCache::new();
        let (g, cls, rel) = triple(&[3, 4, 5]);
        assert!(g_m3_sym(&g, &cls, &rel, 0, &cache).is_err());
        let (g2, cls2, rel2) = triple(&[4, 6, 9]);
        assert!(g_m3_nonsym(&g2, &cls2, &rel2, 0, &cache).is_err());
        assert!(g_m3_low_order(&g, &cls, &rel, 3).is_err());
        assert!(g_m3_nonsym(&g, &cls, &rel2, 0, &cache).is_err());
        assert!(g_m2_double_sum(&g, 0, &cache).is_err());
    }

    #[test]
    fn auto_dispatch() {
        let cache = BernoulliCache::new();
        let r = power_sums_auto(&[2, 3, 5], 2, Mode::Verify, &cache).unwrap();
        assert_eq!(r.class, ReportClass::ReducedM2);
        assert_eq!(r.reduced, vec![2, 3]);
        assert!(!r.minimal);
        assert_eq!(values(&r), [1, 1, 1]);

        let r = power_sums_auto(&[3, 4, 5], 2, Mode::Verify, &cache).unwrap();
        assert_eq!(r.class, ReportClass::NonSymmetric);
        assert_eq!(values(&r), [2, 3, 5]);
        assert!(r.results.iter().all(|x| x.agreement == Some(true)));

        let r = power_sums_auto(&[1, 4, 9], 3, Mode::Fast, &cache).unwrap();
        assert_eq!(r.class, ReportClass::Trivial);
        assert_eq!(values(&r), [0, 0, 0, 0]);

        let r = power_sums_auto(&[9, 6, 4], 4, Mode::Fast, &cache).unwrap();
        assert_eq!(r.class, ReportClass::Symmetric);
        assert_eq!(r.results[3].method, Method::ClosedFormM3Sym);
        assert_eq!(r.results[1].method, Method::SpecializedLowOrder);
        assert!(r.results.iter().all(|x| x.agreement.is_none()));

        assert_eq!(
            power_sums_auto(&[2, 4, 6], 2, Mode::Fast, &cache),
            Err(Error::NotCoprime(2))
        );
        assert_eq!(
            power_sums_auto(&[0, 4, 9], 2, Mode::Fast, &cache),
            Err(Error::GeneratorTooSmall(0))
        );
    }

    #[test]
    fn fast_and_verify_agree() {
        let cache = BernoulliCache::new();
        for raw in [
            &[3i64, 5][..],
            &[3, 4, 5],
            &[4, 6, 9],
            &[5, 7, 11],
            &[6, 10, 15],
        ] {
            let fast = power_sums_auto(raw, 6, Mode::Fast, &cache).unwrap();
            let verify = power_sums_auto(raw, 6, Mode::Verify, &cache).unwrap();
            assert_eq!(values(&fast), values(&verify), "{raw:?}");
        }
    }
}
