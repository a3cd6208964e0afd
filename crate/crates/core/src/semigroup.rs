//! Generator tuples and the enumeration oracle.
//!
//! Gap sets are read off the Apéry set of the semigroup with respect to its
//! smallest generator: for every residue `r mod d1` the least semigroup
//! element `w_r` in that class, found by shortest paths on the residue
//! classes. Everything here is independent of the Bernoulli machinery.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::BigUint;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exact_arith::BigInt;
use crate::polynomial::NumeratorPolynomial;

/// Sorted, coprime generators `1 < d1 < ... < dm`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorTuple {
    generators: Vec<u64>,
    minimal: bool,
}

impl GeneratorTuple {
    /// Generators that already satisfy the ordering and coprimality
    /// conditions. Any number of generators is accepted here.
    pub(crate) fn from_sorted(generators: Vec<u64>) -> Self {
        debug_assert!(generators.windows(2).all(|w| w[0] < w[1]));
        let minimal = (0..generators.len()).all(|i| {
            let others: Vec<u64> = generators
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &d)| d)
                .collect();
            !is_representable(generators[i], &others)
        });
        Self {
            generators,
            minimal,
        }
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.generators.len()
    }

    pub fn minimal(&self) -> bool {
        self.minimal
    }

    /// `s_d = Σ d_i`.
    pub fn sum(&self) -> u64 {
        self.generators.iter().sum()
    }

    /// `π_d = Π d_i`.
    pub fn product(&self) -> BigInt {
        self.generators.iter().map(|&d| BigInt::from(d)).product()
    }

    /// Drops every generator representable by the smaller ones that are
    /// kept. The semigroup is unchanged.
    pub fn reduce(&self) -> GeneratorTuple {
        let mut kept: Vec<u64> = Vec::with_capacity(self.generators.len());
        for &d in &self.generators {
            if !is_representable(d, &kept) {
                kept.push(d);
            }
        }
        GeneratorTuple::from_sorted(kept)
    }

    pub fn contains(&self, x: u64) -> bool {
        is_representable(x, &self.generators)
    }
}

/// Whether `target` is a nonnegative integer combination of `gens`,
/// by dynamic programming over `0..=target`.
pub fn is_representable(target: u64, gens: &[u64]) -> bool {
    if target == 0 {
        return true;
    }
    let gens: Vec<usize> = gens
        .iter()
        .filter(|&&d| d > 0 && d <= target)
        .map(|&d| d as usize)
        .collect();
    if gens.is_empty() {
        return false;
    }
    let t = target as usize;
    let mut reach = vec![false; t + 1];
    reach[0] = true;
    for x in 1..=t {
        reach[x] = gens.iter().any(|&d| d <= x && reach[x - d]);
    }
    reach[t]
}

/// Checks and normalizes a raw generator list (two or three entries).
pub fn validate(raw: &[i64]) -> Result<GeneratorTuple> {
    if !(2..=3).contains(&raw.len()) {
        return Err(Error::Arity(raw.len()));
    }
    if let Some(&bad) = raw.iter().find(|&&d| d <= 1) {
        return Err(Error::GeneratorTooSmall(bad));
    }
    let mut gens: Vec<u64> = raw.iter().map(|&d| d as u64).collect();
    gens.sort_unstable();
    gens.dedup();
    let g = gens.iter().fold(0u64, |acc, &d| acc.gcd(&d));
    if g != 1 {
        return Err(Error::NotCoprime(g));
    }
    Ok(GeneratorTuple::from_sorted(gens))
}

/// Least semigroup element in each residue class modulo `d1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperyProfile {
    modulus: u64,
    minima: Vec<u64>,
}

impl AperyProfile {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn minima(&self) -> &[u64] {
        &self.minima
    }

    /// Membership in the semigroup.
    pub fn contains(&self, x: u64) -> bool {
        x >= self.minima[(x % self.modulus) as usize]
    }

    /// `max w_r - d1`, the largest gap. `None` when there are no gaps.
    pub fn frobenius(&self) -> Option<u64> {
        let top = *self.minima.iter().max().expect("modulus >= 1");
        top.checked_sub(self.modulus)
    }

    /// `Σ_r (w_r - r) / d1`.
    pub fn genus(&self) -> u64 {
        self.minima
            .iter()
            .enumerate()
            .map(|(r, &w)| (w - r as u64) / self.modulus)
            .sum()
    }

    /// Gaps of residue class `r`: `r, r + d1, ..., w_r - d1`, skipping 0.
    fn class_gaps(&self, r: usize) -> impl Iterator<Item = u64> {
        let start = if r == 0 { self.modulus } else { r as u64 };
        (start..self.minima[r]).step_by(self.modulus as usize)
    }
}

/// Dijkstra over the residue classes of `d1` with edges `r -> r + d_j`.
pub fn apery_profile(g: &GeneratorTuple) -> AperyProfile {
    let gens = g.generators();
    let m = gens[0];
    let size = m as usize;
    let mut minima = vec![u64::MAX; size];
    minima[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, 0usize)));
    while let Some(Reverse((dist, r))) = heap.pop() {
        if dist > minima[r] {
            continue;
        }
        for &d in &gens[1..] {
            let next = dist + d;
            let slot = (next % m) as usize;
            if next < minima[slot] {
                minima[slot] = next;
                heap.push(Reverse((next, slot)));
            }
        }
    }
    debug_assert!(minima.iter().all(|&w| w != u64::MAX));
    AperyProfile { modulus: m, minima }
}

/// The finite set of positive integers outside the semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapSet {
    gaps: Vec<u64>,
}

impl GapSet {
    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    pub fn genus(&self) -> u64 {
        self.gaps.len() as u64
    }

    pub fn frobenius(&self) -> Option<u64> {
        self.gaps.last().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.gaps.is_empty()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.gaps.binary_search(&x).is_ok()
    }

    /// `Σ s^n` by direct summation.
    pub fn power_sum(&self, n: u32) -> BigInt {
        let mut acc = PowerAccumulator::default();
        for &s in &self.gaps {
            acc.add(s, n);
        }
        acc.finish()
    }
}

pub fn gap_set(g: &GeneratorTuple) -> GapSet {
    gap_set_from_profile(&apery_profile(g))
}

pub fn gap_set_from_profile(profile: &AperyProfile) -> GapSet {
    let mut gaps: Vec<u64> = (0..profile.minima.len())
        .flat_map(|r| profile.class_gaps(r))
        .collect();
    gaps.sort_unstable();
    GapSet { gaps }
}

/// Exact sum of machine-sized terms, spilling into a big integer only when
/// the 128-bit running total would overflow.
#[derive(Debug, Default)]
struct PowerAccumulator {
    small: u128,
    big: BigUint,
}

impl PowerAccumulator {
    fn add(&mut self, s: u64, n: u32) {
        match (s as u128).checked_pow(n) {
            Some(term) => match self.small.checked_add(term) {
                Some(v) => self.small = v,
                None => {
                    self.big += self.small;
                    self.small = term;
                }
            },
            None => self.big += BigUint::from(s).pow(n),
        }
    }

    fn finish(self) -> BigInt {
        BigInt::from(self.big + self.small)
    }
}

/// `g_n = Σ s^n` over all gaps, streamed from the Apéry set.
pub fn oracle_power_sum(g: &GeneratorTuple, n: u32) -> BigInt {
    oracle_power_sum_from_profile(&apery_profile(g), n)
}

pub fn oracle_power_sum_from_profile(profile: &AperyProfile, n: u32) -> BigInt {
    let mut acc = PowerAccumulator::default();
    for r in 0..profile.minima.len() {
        for s in profile.class_gaps(r) {
            acc.add(s, n);
        }
    }
    acc.finish()
}

/// Hilbert series numerator `Q = (1/(1-z) - Φ(z)) Π (1 - z^{d_j})`, with
/// `Φ` the gap generating polynomial. `Q` has degree at most
/// `F + Σ d_j`, so truncating the series there is exact.
pub fn numerator_from_oracle(g: &GeneratorTuple) -> NumeratorPolynomial {
    numerator_from_gaps(g, &gap_set(g))
}

pub fn numerator_from_gaps(g: &GeneratorTuple, gaps: &GapSet) -> NumeratorPolynomial {
    let top = gaps.frobenius().unwrap_or(0) + g.sum();
    let len = top as usize + 1;
    // 1/(1-z) - Φ(z) up to z^top
    let mut coeffs = vec![1i64; len];
    for &s in gaps.gaps() {
        coeffs[s as usize] -= 1;
    }
    for &d in g.generators() {
        let d = d as usize;
        for i in (d..len).rev() {
            coeffs[i] -= coeffs[i - d];
        }
    }
    NumeratorPolynomial::from_dense(&coeffs)
}

/// Second-opinion gap enumeration by a plain sieve. Stops after `d1`
/// consecutive representable integers, past which everything is
/// representable.
pub fn sieve_gap_set(g: &GeneratorTuple) -> Vec<u64> {
    let gens: Vec<usize> = g.generators().iter().map(|&d| d as usize).collect();
    let d1 = gens[0];
    let mut reach = vec![true];
    let mut gaps = Vec::new();
    let mut run = 1usize;
    let mut x = 0usize;
    while run < d1 {
        x += 1;
        let hit = gens.iter().any(|&d| d <= x && reach[x - d]);
        reach.push(hit);
        if hit {
            run += 1;
        } else {
            run = 0;
            gaps.push(x as u64);
        }
    }
    gaps
}
