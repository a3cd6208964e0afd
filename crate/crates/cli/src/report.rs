//! Rendering of command results as text tables, JSON and CSV.
//!
//! JSON objects declare their fields in alphabetical order, so the output is
//! already in canonical key order and survives a parse/re-serialize cycle
//! byte for byte. Big integers are written as decimal strings.

use std::collections::BTreeSet;
use std::fmt::Write;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use semigaps::checks::CheckOutcome;
use semigaps::{
    GapSet, GeneratorTuple, NumeratorPolynomial, PowerSumReport, RelationMatrix, SemigroupClass,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable report");
    s.push('\n');
    s
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct PowerSumJson {
    pub class: String,
    pub generators: Vec<String>,
    pub minimal: bool,
    pub results: Vec<PowerSumRowJson>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct PowerSumRowJson {
    pub method: String,
    pub n: usize,
    pub value: String,
    pub verified: Option<bool>,
}

pub fn power_sums(format: Format, r: &PowerSumReport) -> String {
    match format {
        Format::Json => to_json(&PowerSumJson {
            class: r.class.as_str().to_string(),
            generators: strings(&r.generators),
            minimal: r.minimal,
            results: r
                .results
                .iter()
                .map(|x| PowerSumRowJson {
                    method: x.method.as_str().to_string(),
                    n: x.n,
                    value: x.value.to_string(),
                    verified: x.agreement,
                })
                .collect(),
        }),
        Format::Csv => {
            let mut out = String::from("n,value,method,verified\n");
            for x in &r.results {
                let verified = x.agreement.map(|b| b.to_string()).unwrap_or_default();
                let _ = writeln!(out, "{},{},{},{verified}", x.n, x.value, x.method);
            }
            out
        }
        Format::Table => {
            let mut out = String::new();
            let _ = writeln!(out, "generators: {:?}", r.generators);
            if r.reduced != r.generators {
                let _ = writeln!(out, "reduced to: {:?}", r.reduced);
            }
            let _ = writeln!(out, "minimal:    {}", r.minimal);
            let _ = writeln!(out, "class:      {}", r.class.as_str());
            let width = r
                .results
                .iter()
                .map(|x| x.value.to_string().len())
                .max()
                .unwrap_or(1)
                .max(5);
            let _ = writeln!(
                out,
                "{:>3}  {:>width$}  {:<26}  verified",
                "n", "g_n", "method"
            );
            for x in &r.results {
                let verified = match x.agreement {
                    Some(true) => "yes",
                    Some(false) => "NO",
                    None => "-",
                };
                let _ = writeln!(
                    out,
                    "{:>3}  {:>width$}  {:<26}  {verified}",
                    x.n,
                    x.value.to_string(),
                    x.method.as_str()
                );
            }
            out
        }
    }
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct GapsJson {
    pub frobenius: Option<String>,
    pub gaps: Vec<String>,
    pub generators: Vec<String>,
    pub genus: String,
}

pub fn gaps(format: Format, g: &GeneratorTuple, gs: &GapSet) -> String {
    let frob = gs.frobenius().map(|f| f.to_string());
    match format {
        Format::Json => to_json(&GapsJson {
            frobenius: frob,
            gaps: strings(gs.gaps()),
            generators: strings(g.generators()),
            genus: gs.genus().to_string(),
        }),
        Format::Csv => {
            let join = |xs: &[u64]| strings(xs).join(";");
            format!(
                "generators,genus,frobenius,gaps\n{},{},{},{}\n",
                join(g.generators()),
                gs.genus(),
                frob.unwrap_or_default(),
                join(gs.gaps())
            )
        }
        Format::Table => format!(
            "generators: {:?}\ngaps:       {{{}}}\ngenus:      {}\nfrobenius:  {}\n",
            g.generators(),
            strings(gs.gaps()).join(", "),
            gs.genus(),
            frob.unwrap_or_else(|| "-".into())
        ),
    }
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct RelationsJson {
    pub class: String,
    pub diag_product: String,
    pub generators: Vec<String>,
    pub j_invariant: Option<String>,
    pub matrix: Vec<Vec<String>>,
    pub normal_form: Vec<String>,
    pub reduced_trace: Option<String>,
    pub weighted_trace: String,
}

fn class_parts(cls: &SemigroupClass) -> (&'static str, Option<String>, Option<String>) {
    match *cls {
        SemigroupClass::Symmetric { reduced_trace, .. } => {
            ("symmetric", None, Some(reduced_trace.to_string()))
        }
        SemigroupClass::NonSymmetric { j_invariant } => {
            ("nonsymmetric", Some(j_invariant.to_string()), None)
        }
    }
}

pub fn relations(
    format: Format,
    g: &GeneratorTuple,
    rel: &RelationMatrix,
    cls: &SemigroupClass,
) -> String {
    let (class, j, rt) = class_parts(cls);
    let d = g.generators();
    let normal: Vec<u64> = cls
        .normal_form_permutation()
        .iter()
        .map(|&i| d[i])
        .collect();
    match format {
        Format::Json => to_json(&RelationsJson {
            class: class.into(),
            diag_product: rel.diag_product().to_string(),
            generators: strings(d),
            j_invariant: j,
            matrix: rel.entries().iter().map(|row| strings(row)).collect(),
            normal_form: strings(&normal),
            reduced_trace: rt,
            weighted_trace: rel.weighted_trace().to_string(),
        }),
        Format::Csv => {
            let a = rel.entries();
            let cells: Vec<String> = a.iter().flatten().map(ToString::to_string).collect();
            format!(
                "d1,d2,d3,class,a11,a12,a13,a21,a22,a23,a31,a32,a33,weighted_trace,j_invariant,reduced_trace\n{},{},{},{class},{},{},{},{}\n",
                d[0],
                d[1],
                d[2],
                cells.join(","),
                rel.weighted_trace(),
                j.unwrap_or_default(),
                rt.unwrap_or_default()
            )
        }
        Format::Table => {
            let mut out = String::new();
            let _ = writeln!(out, "generators: {d:?}");
            let _ = writeln!(out, "relations:");
            for (i, row) in rel.entries().iter().enumerate() {
                let _ = writeln!(
                    out,
                    "  [{:>4} {:>4} {:>4}]   a{}{} d{} = {}",
                    row[0],
                    row[1],
                    row[2],
                    i + 1,
                    i + 1,
                    i + 1,
                    row[i] * d[i]
                );
            }
            let _ = writeln!(out, "class:      {class}");
            let _ = writeln!(out, "<a,d>:      {}", rel.weighted_trace());
            let _ = writeln!(out, "pi_a:       {}", rel.diag_product());
            match (j, rt) {
                (Some(j), _) => {
                    let _ = writeln!(out, "J:          {j}");
                }
                (_, Some(rt)) => {
                    let _ = writeln!(out, "normal form: {normal:?}");
                    let _ = writeln!(out, "<a~,d>:     {rt}");
                }
                _ => {}
            }
            out
        }
    }
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct TermJson {
    pub coefficient: String,
    pub exponent: String,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct HilbertJson {
    pub closed_form: String,
    pub closed_form_terms: Vec<TermJson>,
    pub equal: bool,
    pub generators: Vec<String>,
    pub oracle: String,
    pub oracle_terms: Vec<TermJson>,
}

fn terms(p: &NumeratorPolynomial) -> Vec<TermJson> {
    p.terms()
        .map(|(e, c)| TermJson {
            coefficient: c.to_string(),
            exponent: e.to_string(),
        })
        .collect()
}

pub fn hilbert(
    format: Format,
    g: &GeneratorTuple,
    closed: &NumeratorPolynomial,
    oracle: &NumeratorPolynomial,
) -> String {
    let equal = closed == oracle;
    match format {
        Format::Json => to_json(&HilbertJson {
            closed_form: closed.to_string(),
            closed_form_terms: terms(closed),
            equal,
            generators: strings(g.generators()),
            oracle: oracle.to_string(),
            oracle_terms: terms(oracle),
        }),
        Format::Csv => {
            let exps: BTreeSet<u64> = closed.terms().chain(oracle.terms()).map(|(e, _)| e).collect();
            let mut out = String::from("exponent,closed_form,oracle\n");
            for e in exps {
                let _ = writeln!(out, "{e},{},{}", closed.coefficient(e), oracle.coefficient(e));
            }
            out
        }
        Format::Table => format!(
            "generators:  {:?}\nclosed form: {closed}\noracle:      {oracle}\nequal:       {equal}\n",
            g.generators()
        ),
    }
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct CheckJson {
    pub cases: usize,
    pub failure: Option<String>,
    pub name: String,
    pub passed: bool,
}

pub fn selftest(format: Format, outcomes: &[CheckOutcome]) -> String {
    match format {
        Format::Json => to_json(
            &outcomes
                .iter()
                .map(|o| CheckJson {
                    cases: o.cases,
                    failure: o.failure.clone(),
                    name: o.name.to_string(),
                    passed: o.passed(),
                })
                .collect::<Vec<_>>(),
        ),
        Format::Csv => {
            let mut out = String::from("check,cases,passed,failure\n");
            for o in outcomes {
                let failure = o.failure.clone().unwrap_or_default().replace(',', ";");
                let _ = writeln!(out, "{},{},{},{failure}", o.name, o.cases, o.passed());
            }
            out
        }
        Format::Table => {
            let mut out = String::new();
            for o in outcomes {
                match &o.failure {
                    None => {
                        let _ = writeln!(out, "[PASS] {} ({} cases)", o.name, o.cases);
                    }
                    Some(f) => {
                        let _ = writeln!(out, "[FAIL] {}: {f}", o.name);
                    }
                }
            }
            let passed = outcomes.iter().filter(|o| o.passed()).count();
            let _ = writeln!(out, "{passed}/{} checks passed", outcomes.len());
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use semigaps::{power_sums_auto, BernoulliCache, Mode};

    #[test]
    fn json_round_trip_is_byte_identical() {
        let cache = BernoulliCache::new();
        for raw in [&[3i64, 5][..], &[4, 6, 9], &[2, 3, 5], &[1, 4, 9]] {
            let r = power_sums_auto(raw, 9, Mode::Verify, &cache).unwrap();
            let s = power_sums(Format::Json, &r);
            let v: serde_json::Value = serde_json::from_str(&s).unwrap();
            let mut again = serde_json::to_string_pretty(&v).unwrap();
            again.push('\n');
            assert_eq!(s, again);
            let typed: PowerSumJson = serde_json::from_str(&s).unwrap();
            assert_eq!(typed.results.len(), 10);
        }
    }
}
