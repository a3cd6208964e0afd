//! Exact power sums of the gaps of numerical semigroups `S(d1, d2)` and
//! `S(d1, d2, d3)`.
//!
//! The closed forms express `g_n = Σ s^n` over the gap set through
//! Bernoulli numbers and Bernoulli polynomials of higher order. Every
//! closed-form path runs in exact rational arithmetic and can be checked
//! against an enumeration oracle built on Apéry sets.
//!
//! ```
//! use semigaps::{power_sums_auto, BernoulliCache, Mode};
//!
//! let cache = BernoulliCache::new();
//! let report = power_sums_auto(&[3, 5], 3, Mode::Verify, &cache).unwrap();
//! let values: Vec<String> = report.results.iter().map(|r| r.value.to_string()).collect();
//! assert_eq!(values, ["4", "14", "70", "416"]);
//! ```

pub mod bench;
pub mod bernoulli_higher;
pub mod checks;
mod error;
pub mod exact_arith;
pub mod polynomial;
pub mod power_sums;
pub mod relations;
pub mod sample;
pub mod semigroup;

pub use bernoulli_higher::{eval_expansion, eval_recursive, EvalPath, Evaluator, HigherOrderQuery};
pub use error::{Error, Result};
pub use exact_arith::{bernoulli_number, binomial, BernoulliCache, BigInt, BigRational};
pub use polynomial::NumeratorPolynomial;
pub use power_sums::{
    g_m2_compact, g_m2_double_sum, g_m2_low_order, g_m3_low_order, g_m3_nonsym, g_m3_sym,
    power_sums_auto, Method, Mode, PowerSumReport, PowerSumResult, ReportClass,
};
pub use relations::{
    classify, minimal_relations, numerator_closed_form, numerator_closed_form_for, RelationMatrix,
    SemigroupClass,
};
pub use semigroup::{
    apery_profile, gap_set, numerator_from_oracle, oracle_power_sum, validate, AperyProfile,
    GapSet, GeneratorTuple,
};
