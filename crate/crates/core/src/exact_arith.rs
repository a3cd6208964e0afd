//! Exact integers, rationals, binomials and Bernoulli numbers.
//!
//! Bernoulli numbers follow the `t / (e^t - 1)` convention, so `B_1 = -1/2`.

use std::sync::RwLock;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
use num_traits::{One, Zero};

/// `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Rows `C(n, 0..=n)` for `n = 0..=max`.
pub(crate) fn pascal(max: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max + 1);
    for n in 0..=max {
        let mut row = vec![BigInt::one(); n + 1];
        for k in 1..n {
            row[k] = &rows[n - 1][k - 1] + &rows[n - 1][k];
        }
        rows.push(row);
    }
    rows
}

pub(crate) fn int(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

/// Lazily grown table of Bernoulli numbers shared between threads.
///
/// Entries are generated with the Akiyama–Tanigawa transform; the working
/// row of the transform is kept so that extending the table costs only the
/// new entries.
#[derive(Debug, Default)]
pub struct BernoulliCache {
    state: RwLock<CacheState>,
}

#[derive(Debug, Default)]
struct CacheState {
    values: Vec<BigRational>,
    row: Vec<BigRational>,
}

impl CacheState {
    fn extend_to(&mut self, k: usize) {
        while self.values.len() <= k {
            let m = self.values.len();
            self.row
                .push(BigRational::new(BigInt::one(), BigInt::from(m + 1)));
            for j in (1..=m).rev() {
                let diff = &self.row[j - 1] - &self.row[j];
                self.row[j - 1] = diff * int(j);
            }
            // the transform yields B_1 = +1/2
            let b = if m == 1 {
                -self.row[0].clone()
            } else {
                self.row[0].clone()
            };
            self.values.push(b);
        }
    }
}

impl BernoulliCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of entries computed so far.
    pub fn len(&self) -> usize {
        self.state
            .read()
            .expect("bernoulli cache poisoned")
            .values
            .len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, k: usize) -> BigRational {
        {
            let state = self.state.read().expect("bernoulli cache poisoned");
            if let Some(v) = state.values.get(k) {
                return v.clone();
            }
        }
        let mut state = self.state.write().expect("bernoulli cache poisoned");
        state.extend_to(k);
        state.values[k].clone()
    }

    /// `B_0, ..., B_upto`.
    pub fn table(&self, upto: usize) -> Vec<BigRational> {
        {
            let state = self.state.read().expect("bernoulli cache poisoned");
            if state.values.len() > upto {
                return state.values[..=upto].to_vec();
            }
        }
        let mut state = self.state.write().expect("bernoulli cache poisoned");
        state.extend_to(upto);
        state.values[..=upto].to_vec()
    }
}

/// `B_k` with `B_1 = -1/2`.
pub fn bernoulli_number(k: usize, cache: &BernoulliCache) -> BigRational {
    cache.get(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    /// B_k from `Σ_{j<=k} C(k+1, j) B_j = 0`, solved for B_k.
    fn recurrence_oracle(max: usize) -> Vec<BigRational> {
        let mut b = vec![BigRational::one()];
        for k in 1..=max {
            let mut s = BigRational::zero();
            for (j, bj) in b.iter().enumerate() {
                s += BigRational::from_integer(binomial(k as u64 + 1, j as i64)) * bj;
            }
            b.push(-s / int(k as u64 + 1));
        }
        b
    }

    #[test]
    fn small_values() {
        let cache = BernoulliCache::new();
        assert_eq!(bernoulli_number(0, &cache), q(1, 1));
        assert_eq!(bernoulli_number(1, &cache), q(-1, 2));
        assert_eq!(bernoulli_number(2, &cache), q(1, 6));
        assert_eq!(bernoulli_number(4, &cache), q(-1, 30));
        assert_eq!(bernoulli_number(12, &cache), q(-691, 2730));
    }

    #[test]
    fn matches_recurrence_oracle() {
        let cache = BernoulliCache::new();
        let oracle = recurrence_oracle(60);
        assert_eq!(cache.table(60), oracle);
    }

    #[test]
    fn odd_entries_vanish() {
        let cache = BernoulliCache::new();
        for k in 1..=25 {
            assert!(
                bernoulli_number(2 * k + 1, &cache).is_zero(),
                "B_{}",
                2 * k + 1
            );
        }
    }

    #[test]
    fn cache_is_append_only() {
        let cache = BernoulliCache::new();
        let early = cache.table(10);
        cache.get(40);
        assert_eq!(cache.len(), 41);
        assert_eq!(cache.table(10), early);
        // out-of-order access
        let fresh = BernoulliCache::new();
        assert_eq!(fresh.get(30), cache.get(30));
    }

    #[test]
    fn concurrent_readers_agree() {
        let cache = BernoulliCache::new();
        let results: Vec<BigRational> = std::thread::scope(|s| {
            let handles: Vec<_> = (0..8).map(|_| s.spawn(|| cache.get(36))).collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        assert!(results.windows(2).all(|w| w[0] == w[1]));
    }

    #[test]
    fn binomial_basics() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        for n in 0..10 {
            assert_eq!(binomial(n, 0), BigInt::one());
        }
        assert_eq!(binomial(4, 7), BigInt::zero());
        assert_eq!(binomial(4, -1), BigInt::zero());
        assert_eq!(binomial(60, 30).to_string(), "118264581564861424");
    }

    #[test]
    fn pascal_matches_binomial() {
        let rows = pascal(20);
        for (n, row) in rows.iter().enumerate() {
            for (k, c) in row.iter().enumerate() {
                assert_eq!(*c, binomial(n as u64, k as i64));
            }
        }
    }

    #[test]
    fn rationals_are_reduced() {
        let r = q(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        let z = q(0, 7);
        assert_eq!(z.denom(), &BigInt::one());
        assert_eq!(&r * r.recip(), BigRational::one());
    }
}
