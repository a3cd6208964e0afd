use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use num_traits::{One, Signed, Zero};

use crate::exact_arith::BigInt;

/// Sparse integer polynomial in `z`, used for Hilbert series numerators.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NumeratorPolynomial {
    coefficients: BTreeMap<u64, BigInt>,
}

impl NumeratorPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_terms([(0, BigInt::one())])
    }

    /// `1 - z^e`.
    pub fn one_minus_z_pow(e: u64) -> Self {
        Self::from_terms([(0, BigInt::one()), (e, BigInt::from(-1))])
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (u64, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub(crate) fn from_dense(coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != 0)
                .map(|(e, c)| (e as u64, *c)),
        )
    }

    pub fn add_term(&mut self, exponent: u64, coefficient: BigInt) {
        let slot = self.coefficients.entry(exponent).or_default();
        *slot += coefficient;
        if slot.is_zero() {
            self.coefficients.remove(&exponent);
        }
    }

    pub fn coefficient(&self, exponent: u64) -> BigInt {
        self.coefficients
            .get(&exponent)
            .cloned()
            .unwrap_or_default()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigInt)> {
        self.coefficients.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coefficients.len()
    }

    pub fn degree(&self) -> Option<u64> {
        self.coefficients.keys().next_back().copied()
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coefficients.values().sum()
    }
}

impl Mul for &NumeratorPolynomial {
    type Output = NumeratorPolynomial;

    fn mul(self, rhs: &NumeratorPolynomial) -> NumeratorPolynomial {
        let mut out = NumeratorPolynomial::zero();
        for (ea, ca) in self.terms() {
            for (eb, cb) in rhs.terms() {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for NumeratorPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{mag}z")?,
                (_, true) => write!(f, "z^{e}")?,
                (_, false) => write!(f, "{mag}z^{e}")?,
            }
        }
        Ok(())
    }
}
