//! Bernoulli polynomials of higher order `B_n^(m)(x | d_1, ..., d_m)`,
//! defined by
//!
//! ```text
//! e^{xt} / Π (e^{d_i t} - 1) = (1 / Π d_i) Σ_n B_n^(m)(x | d) t^{n-m} / n!
//! ```
//!
//! Two evaluation routes are provided. [`eval_recursive`] peels one weight
//! at a time off the generating function and starts from the scaled
//! classical polynomial `d^n B_n(x / d)`. [`eval_expansion`] writes the
//! polynomial out as an explicit double (m = 2) or triple (m = 3) sum over
//! Bernoulli numbers and evaluates it over a common denominator.

use std::collections::HashMap;
use std::sync::Mutex;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_arith::{int, pascal, BernoulliCache, BigInt, BigRational};

/// Which route [`evaluate`] takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EvalPath {
    Recursive,
    Expansion,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HigherOrderQuery {
    n: usize,
    x: BigInt,
    weights: Vec<u64>,
}

impl HigherOrderQuery {
    pub fn new(n: usize, x: impl Into<BigInt>, weights: &[u64]) -> Result<Self> {
        if weights.is_empty() || weights.len() > 3 {
            return Err(Error::InvalidQuery(format!(
                "order must be 1, 2 or 3, got {}",
                weights.len()
            )));
        }
        if weights.contains(&0) {
            return Err(Error::InvalidQuery("weights must be positive".into()));
        }
        Ok(Self {
            n,
            x: x.into(),
            weights: weights.to_vec(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.weights.len()
    }

    pub fn x(&self) -> &BigInt {
        &self.x
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }
}

fn powers(base: &BigInt, max: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(max + 1);
    let mut acc = BigInt::one();
    for _ in 0..=max {
        out.push(acc.clone());
        acc *= base;
    }
    out
}

/// Recursion over the order:
/// `B_n^(m)(x|d^m) = Σ_p C(n,p) d_m^p B_p B_{n-p}^(m-1)(x|d^{m-1})`,
/// seeded with `B_k^(1)(x|d) = d^k B_k(x/d)`.
pub fn eval_recursive(q: &HigherOrderQuery, cache: &BernoulliCache) -> BigRational {
    eval_recursive_table(q, cache).swap_remove(q.n)
}

/// `B_k^(m)(x | d)` for every `k = 0..=n`; the recursion produces all of
/// them at once.
pub fn eval_recursive_table(q: &HigherOrderQuery, cache: &BernoulliCache) -> Vec<BigRational> {
    let n = q.n;
    let bern = cache.table(n);
    let binom = pascal(n);

    let d1 = BigInt::from(q.weights[0]);
    let y = BigRational::new(q.x.clone(), d1.clone());
    let mut y_pows = Vec::with_capacity(n + 1);
    let mut acc = BigRational::one();
    for _ in 0..=n {
        y_pows.push(acc.clone());
        acc *= &y;
    }
    let d1_pows = powers(&d1, n);

    // level[k] = B_k^(order)(x | weights[..order])
    let mut level: Vec<BigRational> = (0..=n)
        .map(|k| {
            let poly: BigRational = (0..=k)
                .map(|j| int(binom[k][j].clone()) * &bern[j] * &y_pows[k - j])
                .sum();
            poly * int(d1_pows[k].clone())
        })
        .collect();

    for &w in &q.weights[1..] {
        let w_pows = powers(&BigInt::from(w), n);
        let scaled: Vec<BigRational> = (0..=n).map(|p| int(w_pows[p].clone()) * &bern[p]).collect();
        level = (0..=n)
            .map(|k| {
                (0..=k)
                    .map(|p| int(binom[k][p].clone()) * &scaled[p] * &level[k - p])
                    .sum()
            })
            .collect();
    }
    level
}

/// Explicit multiple sum over Bernoulli numbers, for orders 2 and 3. At
/// `x = 0` with three weights the innermost sum collapses and the double
/// sum form is used.
pub fn eval_expansion(q: &HigherOrderQuery, cache: &BernoulliCache) -> Result<BigRational> {
    let m = q.order();
    if m == 1 {
        return Err(Error::InvalidQuery(
            "expansion needs order 2 or 3; use the scaled classical polynomial for order 1".into(),
        ));
    }
    let n = q.n;
    let bern = cache.table(n);
    // B_j = num[j] / den for a shared denominator
    let den = bern.iter().fold(BigInt::one(), |acc, b| acc.lcm(b.denom()));
    let num: Vec<BigInt> = bern
        .iter()
        .map(|b| b.numer() * (&den / b.denom()))
        .collect();
    let binom = pascal(n);
    let pw: Vec<Vec<BigInt>> = q
        .weights
        .iter()
        .map(|&w| powers(&BigInt::from(w), n))
        .collect();

    let mut total = BigInt::zero();
    if m == 2 {
        let xp = powers(&q.x, n);
        for j in 0..=n {
            let outer = &binom[n][j] * &pw[1][n - j] * &num[n - j];
            if outer.is_zero() {
                continue;
            }
            for k in 0..=j {
                total += &outer * &binom[j][k] * &pw[0][j - k] * &num[j - k] * &xp[k];
            }
        }
        return Ok(BigRational::new(total, den.pow(2)));
    }

    if q.x.is_zero() {
        for j in 0..=n {
            let outer = &binom[n][j] * &pw[2][n - j] * &num[n - j];
            if outer.is_zero() {
                continue;
            }
            for k in 0..=j {
                total += &outer * &binom[j][k] * &pw[0][k] * &pw[1][j - k] * &num[k] * &num[j - k];
            }
        }
    } else {
        let xp = powers(&q.x, n);
        for j in 0..=n {
            let outer = &binom[n][j] * &pw[2][n - j] * &num[n - j];
            if outer.is_zero() {
                continue;
            }
            for k in 0..=j {
                let middle = &outer * &binom[j][k] * &pw[1][j - k] * &num[j - k];
                if middle.is_zero() {
                    continue;
                }
                for l in 0..=k {
                    total += &middle * &binom[k][l] * &pw[0][k - l] * &num[k - l] * &xp[l];
                }
            }
        }
    }
    Ok(BigRational::new(total, den.pow(3)))
}

/// Weights and evaluation point.
type TableKey = (Vec<u64>, BigInt);

/// Evaluates queries along one route. The recursive route keeps the whole
/// table it computes for each `(weights, x)`, so later queries of lower or
/// equal degree at the same point are lookups.
#[derive(Debug)]
pub struct Evaluator<'a> {
    path: EvalPath,
    cache: &'a BernoulliCache,
    horizon: usize,
    tables: Mutex<HashMap<TableKey, Vec<BigRational>>>,
}

impl<'a> Evaluator<'a> {
    pub fn new(path: EvalPath, cache: &'a BernoulliCache) -> Self {
        Self::with_horizon(path, cache, 0)
    }

    /// Recursive tables are built at least up to degree `horizon`, so a
    /// sweep over `n` computes each point once.
    pub fn with_horizon(path: EvalPath, cache: &'a BernoulliCache, horizon: usize) -> Self {
        Self {
            path,
            cache,
            horizon,
            tables: Mutex::new(HashMap::new()),
        }
    }

    pub fn path(&self) -> EvalPath {
        self.path
    }

    pub fn cache(&self) -> &'a BernoulliCache {
        self.cache
    }

    /// Order-1 queries always go through the recursive base case.
    pub fn eval(&self, q: &HigherOrderQuery) -> BigRational {
        if self.path == EvalPath::Expansion && q.order() > 1 {
            return eval_expansion(q, self.cache).expect("order checked above");
        }
        let key = (q.weights.clone(), q.x.clone());
        if let Some(table) = self.tables.lock().expect("evaluator poisoned").get(&key) {
            if let Some(v) = table.get(q.n) {
                return v.clone();
            }
        }
        let deep = HigherOrderQuery {
            n: q.n.max(self.horizon),
            ..q.clone()
        };
        let table = eval_recursive_table(&deep, self.cache);
        let v = table[q.n].clone();
        self.tables
            .lock()
            .expect("evaluator poisoned")
            .insert(key, table);
        v
    }
}
