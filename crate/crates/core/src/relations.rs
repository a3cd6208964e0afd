//! Johnson's minimal relations for three generators.
//!
//! For each generator `d_i` the least multiple `a_ii d_i` (with
//! `a_ii >= 2`) that is a nonnegative combination of the other two
//! generators, together with the coefficients of that combination:
//!
//! ```text
//! a11 d1 = a12 d2 + a13 d3
//! a22 d2 = a21 d1 + a23 d3
//! a33 d3 = a31 d1 + a32 d2
//! ```
//!
//! The semigroup is symmetric exactly when both off-diagonal entries of
//! some column vanish. Otherwise the Hilbert numerator has two top
//! exponents `(⟨a,d⟩ ± J) / 2`.

use num_integer::Roots;

use crate::error::{Error, Result};
use crate::polynomial::NumeratorPolynomial;
use crate::semigroup::GeneratorTuple;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationMatrix {
    a: [[u64; 3]; 3],
    d: [u64; 3],
}

impl RelationMatrix {
    /// Rows in the caller's generator order.
    pub fn entries(&self) -> &[[u64; 3]; 3] {
        &self.a
    }

    pub fn generators(&self) -> [u64; 3] {
        self.d
    }

    pub fn diag(&self) -> [u64; 3] {
        [self.a[0][0], self.a[1][1], self.a[2][2]]
    }

    /// `a_ii d_i` for each i.
    pub fn diag_weights(&self) -> [u64; 3] {
        [0, 1, 2].map(|i| self.a[i][i] * self.d[i])
    }

    /// `π_a = a11 a22 a33`.
    pub fn diag_product(&self) -> u64 {
        self.diag().iter().product()
    }

    /// `⟨a,d⟩ = Σ a_ii d_i`.
    pub fn weighted_trace(&self) -> u64 {
        self.diag_weights().iter().sum()
    }

    /// `J² = ⟨a,d⟩² - 4 Σ_{i>j} a_ii a_jj d_i d_j + 4 d1 d2 d3`.
    pub fn j_squared(&self) -> i128 {
        let p = self.diag_weights().map(|v| v as i128);
        let t = self.weighted_trace() as i128;
        let pairs = p[0] * p[1] + p[0] * p[2] + p[1] * p[2];
        let pi_d: i128 = self.d.iter().map(|&v| v as i128).product();
        t * t - 4 * pairs + 4 * pi_d
    }

    /// Columns whose two off-diagonal entries are both zero.
    fn vanishing_column(&self) -> Option<usize> {
        (0..3).find(|&c| (0..3).filter(|&r| r != c).all(|r| self.a[r][c] == 0))
    }
}

/// All `(x, y)` with `x dj + y dk = target`, `dj < dk`, ordered by `y`.
fn witnesses(target: u64, dj: u64, dk: u64) -> Vec<(u64, u64)> {
    (0..=target / dk)
        .filter_map(|y| {
            let rest = target - y * dk;
            rest.is_multiple_of(dj).then_some((rest / dj, y))
        })
        .collect()
}

fn others(i: usize) -> (usize, usize) {
    match i {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

/// Least `v >= 2` with `v d_i` representable by the other two generators,
/// and all witnesses of it. Every witness of the least `v` has row gcd 1
/// for a minimal tuple.
fn row_candidates(d: &[u64; 3], i: usize) -> (u64, Vec<(u64, u64)>) {
    let (j, k) = others(i);
    // d_j d_i = d_i d_j bounds the search
    for v in 2..=d[j] {
        let w = witnesses(v * d[i], d[j], d[k]);
        if !w.is_empty() {
            return (v, w);
        }
    }
    unreachable!("v = d_j always has a witness")
}

pub fn minimal_relations(g: &GeneratorTuple) -> Result<RelationMatrix> {
    if g.order() != 3 {
        return Err(Error::WrongGeneratorCount {
            operation: "minimal relations",
            expected: 3,
            got: g.order(),
        });
    }
    if !g.minimal() {
        return Err(Error::NotMinimal(g.generators().to_vec()));
    }
    let gens = g.generators();
    let d = [gens[0], gens[1], gens[2]];
    let rows: Vec<(u64, Vec<(u64, u64)>)> = (0..3).map(|i| row_candidates(&d, i)).collect();

    // A witness with zero coefficient on column c, if row i has one.
    let zero_witness = |i: usize, c: usize| -> Option<(u64, u64)> {
        let (j, _) = others(i);
        rows[i]
            .1
            .iter()
            .copied()
            .find(|&(x, y)| if c == j { x == 0 } else { y == 0 })
    };
    let vanishing = (0..3).find(|&c| {
        (0..3)
            .filter(|&r| r != c)
            .all(|r| zero_witness(r, c).is_some())
    });

    let mut a = [[0u64; 3]; 3];
    for i in 0..3 {
        let (v, ref list) = rows[i];
        let (x, y) = match vanishing {
            Some(c) if c != i => zero_witness(i, c).expect("checked above"),
            // smallest coefficient on the larger generator
            _ => list[0],
        };
        let (j, k) = others(i);
        a[i][i] = v;
        a[i][j] = x;
        a[i][k] = y;
    }
    Ok(RelationMatrix { a, d })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SemigroupClass {
    /// `vanishing_column` is moved to the third position in the normal form
    /// `a13 = a23 = 0`; `reduced_trace = ⟨a,d⟩ - a11 d1` there.
    Symmetric {
        vanishing_column: usize,
        reduced_trace: u64,
    },
    NonSymmetric {
        j_invariant: u64,
    },
}

impl SemigroupClass {
    pub fn is_symmetric(&self) -> bool {
        matches!(self, SemigroupClass::Symmetric { .. })
    }

    /// Generator order that puts the vanishing column last.
    pub fn normal_form_permutation(&self) -> [usize; 3] {
        match *self {
            SemigroupClass::Symmetric {
                vanishing_column, ..
            } => {
                let (i, j) = others(vanishing_column);
                [i, j, vanishing_column]
            }
            SemigroupClass::NonSymmetric { .. } => [0, 1, 2],
        }
    }
}

pub fn classify(g: &GeneratorTuple, rel: &RelationMatrix) -> Result<SemigroupClass> {
    if g.generators() != rel.d {
        return Err(Error::Precondition(
            "relation matrix belongs to different generators".into(),
        ));
    }
    let p = rel.diag_weights();
    if let Some(c) = rel.vanishing_column() {
        let (i, j) = others(c);
        if p[i] != p[j] {
            return Err(Error::Relations {
                equation: "nomn3",
                detail: format!(
                    "vanishing column {} but a_ii d_i = {} differs from a_jj d_j = {}",
                    c + 1,
                    p[i],
                    p[j]
                ),
            });
        }
        return Ok(SemigroupClass::Symmetric {
            vanishing_column: c,
            reduced_trace: p[i] + p[c],
        });
    }

    let j2 = rel.j_squared();
    if j2 <= 0 {
        return Err(Error::Relations {
            equation: "nomn2",
            detail: format!("J^2 = {j2} is not positive"),
        });
    }
    let j = j2.sqrt();
    if j * j != j2 {
        return Err(Error::Relations {
            equation: "nomn2",
            detail: format!("J^2 = {j2} is not a perfect square"),
        });
    }
    if (rel.weighted_trace() as i128 - j) % 2 != 0 {
        return Err(Error::Relations {
            equation: "nomn2",
            detail: format!(
                "<a,d> = {} and J = {j} have different parity",
                rel.weighted_trace()
            ),
        });
    }
    Ok(SemigroupClass::NonSymmetric {
        j_invariant: j as u64,
    })
}

/// `(⟨a,d⟩ - J) / 2` and `(⟨a,d⟩ + J) / 2`.
pub fn top_exponents(rel: &RelationMatrix, j_invariant: u64) -> (u64, u64) {
    let t = rel.weighted_trace();
    ((t - j_invariant) / 2, (t + j_invariant) / 2)
}

/// `(a22 d2, a33 d3)` in the symmetric normal form.
pub fn symmetric_exponents(rel: &RelationMatrix, vanishing_column: usize) -> (u64, u64) {
    let p = rel.diag_weights();
    let (i, _) = others(vanishing_column);
    (p[i], p[vanishing_column])
}

/// Hilbert numerator from the relations:
/// `1 - Σ z^{a_ii d_i} + z^{(⟨a,d⟩-J)/2} + z^{(⟨a,d⟩+J)/2}` when
/// non-symmetric, `(1 - z^{a22 d2})(1 - z^{a33 d3})` when symmetric.
pub fn numerator_closed_form(
    g: &GeneratorTuple,
    cls: &SemigroupClass,
    rel: &RelationMatrix,
) -> Result<NumeratorPolynomial> {
    if g.order() != 3 || !g.minimal() {
        return Err(Error::Precondition(
            "closed-form numerator needs a minimal triple".into(),
        ));
    }
    Ok(match *cls {
        SemigroupClass::NonSymmetric { j_invariant } => {
            let (lo, hi) = top_exponents(rel, j_invariant);
            let mut q = NumeratorPolynomial::one();
            for e in rel.diag_weights() {
                q.add_term(e, (-1).into());
            }
            q.add_term(lo, 1.into());
            q.add_term(hi, 1.into());
            q
        }
        SemigroupClass::Symmetric {
            vanishing_column, ..
        } => {
            let (e2, e3) = symmetric_exponents(rel, vanishing_column);
            &NumeratorPolynomial::one_minus_z_pow(e2) * &NumeratorPolynomial::one_minus_z_pow(e3)
        }
    })
}

/// Closed-form Hilbert numerator for any valid tuple: `1 - z^{d1 d2}` for
/// pairs, the relation formulas for minimal triples, and for a redundant
/// generator the reduced numerator times `(1 - z^d)` for each dropped `d`.
pub fn numerator_closed_form_for(g: &GeneratorTuple) -> Result<NumeratorPolynomial> {
    let reduced = g.reduce();
    let d = reduced.generators();
    let mut q = match reduced.order() {
        2 => NumeratorPolynomial::one_minus_z_pow(d[0] * d[1]),
        3 => {
            let rel = minimal_relations(&reduced)?;
            let cls = classify(&reduced, &rel)?;
            numerator_closed_form(&reduced, &cls, &rel)?
        }
        k => {
            return Err(Error::WrongGeneratorCount {
                operation: "closed-form numerator",
                expected: 3,
                got: k,
            })
        }
    };
    for dropped in g.generators().iter().filter(|x| !d.contains(x)) {
        q = &q * &NumeratorPolynomial::one_minus_z_pow(*dropped);
    }
    Ok(q)
}
