//! Acceptance criteria driven through a string-in, JSON-out front end. Shared by the
//! command-line and wasm crates, which include it with `#[path]`.
//!
//! Inputs are rendered with `Display` and parsed again by the front end, so every
//! criterion also exercises the text grammar round trip.

use std::time::{Duration, Instant};

use dedekind_core::oracle::{
    classical_dedekind_qp, exhaustive_factor, quadratic_poly, quadratic_table, squarefree_range,
};
use dedekind_core::parse::parse_field_element;
use dedekind_core::sample::Sampler;
use dedekind_core::{Poly, ResiduePoly, ValuedField};
use serde_json::Value;

const RANDOM_PER_VARIANT: usize = 1000;
const EISENSTEIN_SAMPLES: usize = 500;

pub trait Frontend {
    /// Name used in the PASS/FAIL lines.
    fn name(&self) -> &str;
    /// The `check` report in assert mode.
    fn check(&self, field: &str, poly: &str) -> Result<Value, String>;
    fn eisenstein(&self, field: &str, poly: &str) -> Result<Value, String>;
    fn transform(&self, field: &str, n: u32, a: &str) -> Result<Value, String>;
}

#[derive(Default)]
struct Outcome {
    failures: Vec<String>,
    /// `(field, poly, degree, report)` for every closed case seen so far.
    closed: Vec<(String, String, usize, Value)>,
}

impl Outcome {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn report(&mut self, fe: &dyn Frontend, f: &Poly) -> Option<Value> {
        let (field, poly) = (f.field().to_string(), f.to_string());
        match fe.check(&field, &poly) {
            Ok(report) => {
                if report["verdict"] == "CLOSED" {
                    let degree = f.degree().unwrap();
                    self.closed.push((field, poly, degree, report.clone()));
                }
                Some(report)
            }
            Err(e) => {
                self.failures.push(format!("{field} / {poly}: {e}"));
                None
            }
        }
    }
}

fn parse(field: &str, poly: &str) -> Poly {
    dedekind_core::parse::parse_poly(&field.parse().unwrap(), poly).unwrap()
}

fn example_one(fe: &dyn Frontend, out: &mut Outcome) {
    let (Some(closed), Some(open)) = (
        out.report(fe, &parse("lex:F2", "x^3 + (Y)")),
        out.report(fe, &parse("lex:F2", "x^3 + (Y)*x + (X)")),
    ) else {
        return;
    };
    out.check(
        closed["verdict"] == "CLOSED"
            && closed["sigma"] == "(0,1)"
            && closed["factors"][0]["r"] == "(Y)"
            && closed["factors"][0]["r_value"] == "(0,1)",
        || format!("Z^3 + Y: {closed}"),
    );
    out.check(
        open["verdict"] == "NOT_CLOSED"
            && open["sigma"] == "(0,1)"
            && open["factors"][0]["r"] == "(X)"
            && open["factors"][0]["r_value"] == "(1,0)",
        || format!("Z^3 + YZ + X: {open}"),
    );
}

fn example_two(fe: &dyn Frontend, out: &mut Outcome) {
    let (Some(trivial), Some(dense)) = (
        out.report(fe, &parse("lambda-trivial:F2", "x^3 + (X)")),
        out.report(fe, &parse("lambda-composite:p2:sqrt2", "x^3 + 2*x + 2")),
    ) else {
        return;
    };
    out.check(
        trivial["verdict"] == "CLOSED"
            && trivial["sigma"] == "lambda"
            && trivial["factors"][0]["r_value"] == "lambda",
        || format!("Z^3 + X: {trivial}"),
    );
    out.check(
        dense["verdict"] == "NOT_CLOSED"
            && dense["verdict_detail"] == "GROUP_HAS_NO_MIN_WITH_REPEATED_FACTOR",
        || format!("Z^3 + 2Z + 2: {dense}"),
    );
}

fn quadratic_sweep(fe: &dyn Frontend, out: &mut Outcome) {
    for d in squarefree_range(-50, 50) {
        for p in [2, 3, 5, 7] {
            let f = quadratic_poly(d, p).unwrap();
            let Some(report) = out.report(fe, &f) else {
                continue;
            };
            let table = quadratic_table(d, p).unwrap();
            let classical = classical_dedekind_qp(&f).unwrap();
            let closed = report["verdict"] == "CLOSED";
            out.check(closed == table && table == classical, || {
                format!(
                    "d = {d}, p = {p}: front end {closed}, table {table}, classical {classical}"
                )
            });
        }
    }
}

fn variants() -> Vec<Vec<ValuedField>> {
    vec![
        vec![
            ValuedField::p_adic(2).unwrap(),
            ValuedField::p_adic(3).unwrap(),
            ValuedField::p_adic(5).unwrap(),
        ],
        vec![
            ValuedField::lex_bivariate(2).unwrap(),
            ValuedField::lex_bivariate(3).unwrap(),
        ],
        vec![
            ValuedField::lambda_trivial(2, 2).unwrap(),
            ValuedField::lambda_trivial(3, 2).unwrap(),
        ],
        vec![
            ValuedField::lambda_composite(2, 2).unwrap(),
            ValuedField::lambda_composite(3, 3).unwrap(),
        ],
    ]
}

fn three_formulations(fe: &dyn Frontend, out: &mut Outcome) {
    for (v, fields) in variants().iter().enumerate() {
        let mut samplers: Vec<Sampler> = fields
            .iter()
            .enumerate()
            .map(|(j, k)| Sampler::new(k, 2000 + 10 * v as u64 + j as u64))
            .collect();
        for i in 0..RANDOM_PER_VARIANT {
            let f = samplers[i % fields.len()].separable_monic(6);
            let Some(report) = out.report(fe, &f) else {
                continue;
            };
            let closed = Value::Bool(report["verdict"] == "CLOSED");
            let ershov = &report["witnesses"]["ershov"]["closed"];
            let m_form = &report["witnesses"]["m_form"];
            out.check(
                *ershov == closed && (m_form.is_null() || m_form["closed"] == closed),
                || format!("{} / {f}: {}", f.field(), report["witnesses"]),
            );
        }
    }
}

fn eisenstein_suite(fe: &dyn Frontend, out: &mut Outcome) {
    let fields: Vec<ValuedField> = variants()
        .into_iter()
        .flatten()
        .filter(|k| k.sigma().is_some())
        .collect();
    let mut samplers: Vec<Sampler> = fields
        .iter()
        .enumerate()
        .map(|(j, k)| Sampler::new(k, 6000 + j as u64))
        .collect();
    for i in 0..EISENSTEIN_SAMPLES {
        let s = &mut samplers[i % fields.len()];
        let g = s.eisenstein(6).expect("field has a minimum");
        let field = g.field().to_string();
        match (fe.eisenstein(&field, &g.to_string()), out.report(fe, &g)) {
            (Ok(eis), Some(report)) => out.check(
                eis["is_eisenstein"] == true && report["verdict"] == "CLOSED",
                || format!("{field} / {g}: {eis}"),
            ),
            (Err(e), _) => out.check(false, || format!("{field} / {g}: {e}")),
            _ => {}
        }
        let bad = s.eisenstein_perturbed(6).expect("field has a minimum");
        match fe.eisenstein(&field, &bad.to_string()) {
            Ok(eis) => out.check(eis["is_eisenstein"] == false, || {
                format!("{field} / {bad} accepted")
            }),
            Err(e) => out.check(false, || format!("{field} / {bad}: {e}")),
        }
    }
}

fn ramification_bookkeeping(out: &mut Outcome, closed: &[(String, String, usize, Value)]) {
    for (field, poly, degree, report) in closed {
        let ram = &report["ramification"];
        let total: u64 = ram["rows"]
            .as_array()
            .map(|rows| {
                rows.iter()
                    .map(|r| r["e"].as_u64().unwrap_or(0) * r["f"].as_u64().unwrap_or(0))
                    .sum()
            })
            .unwrap_or(0);
        out.check(total == *degree as u64 && ram["total"] == *degree, || {
            format!("{field} / {poly}: sum e*f = {total}, degree {degree}")
        });
    }
}

fn radical_transforms(fe: &dyn Frontend, out: &mut Outcome) {
    for p in [2i64, 5] {
        let k = ValuedField::p_adic(p as u64).unwrap();
        let field = k.to_string();
        for n in 1u32..=7 {
            for m in (1u32..=7).filter(|m| gcd(n, *m) == 1) {
                for unit in [1, 3] {
                    let a = k.from_int(unit).mul(&k.from_int(p).pow(m));
                    let t = match fe.transform(&field, n, &a.to_string()) {
                        Ok(t) => t,
                        Err(e) => {
                            out.check(false, || format!("p = {p}, n = {n}, m = {m}: {e}"));
                            continue;
                        }
                    };
                    let int = |key: &str| t[key].as_i64().unwrap_or(i64::MIN);
                    let (tm, u, v) = (int("m"), int("u"), int("v"));
                    let a_value = t["A"]
                        .as_str()
                        .and_then(|s| parse_field_element(&k, s).ok())
                        .map(|x| x.valuation());
                    out.check(
                        tm * v - i64::from(n) * u == 1
                            && (0..i64::from(n)).contains(&v)
                            && a_value == k.sigma()
                            && t["eisenstein"]["is_eisenstein"] == true,
                        || format!("p = {p}, n = {n}, m = {m}: {t}"),
                    );
                }
            }
        }
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn all_monic(field: &ValuedField, degree: usize) -> Vec<ResiduePoly> {
    let k = field.residue_field();
    let q = k.order();
    (0..q.pow(degree as u32))
        .map(|mut index| {
            let mut coeffs = Vec::with_capacity(degree + 1);
            for _ in 0..degree {
                coeffs.push(index % q);
                index /= q;
            }
            coeffs.push(1);
            ResiduePoly::new(k.clone(), coeffs)
        })
        .collect()
}

/// A separable integral lift of `f_bar`, found by adding multiples of `p`.
fn separable_lift(k: &ValuedField, f_bar: &ResiduePoly, p: i64) -> Poly {
    let base = Poly::lift(k, f_bar);
    let linear = if f_bar.degree() > Some(1) { p } else { 0 };
    (1..)
        .flat_map(|c| {
            [
                Poly::from_ints(k, &[c * p]),
                Poly::from_ints(k, &[c * p, linear]),
            ]
        })
        .map(|shift| base.add(&shift))
        .find(|f| f.is_separable())
        .unwrap()
}

fn factorization_oracle(fe: &dyn Frontend, out: &mut Outcome) {
    for (p, max_degree) in [(2, 4), (3, 4), (5, 3)] {
        let k = ValuedField::p_adic(p).unwrap();
        for degree in 1..=max_degree {
            for f_bar in all_monic(&k, degree) {
                let f = separable_lift(&k, &f_bar, p as i64);
                let Some(report) = out.report(fe, &f) else {
                    continue;
                };
                let expected: Vec<(String, u64)> = exhaustive_factor(&f_bar)
                    .unwrap()
                    .factors
                    .iter()
                    .map(|(phi, l)| (phi.to_string(), u64::from(*l)))
                    .collect();
                let got: Vec<(String, u64)> = report["factors"]
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|c| {
                        (
                            c["phi_bar"].as_str().unwrap_or_default().to_string(),
                            c["l"].as_u64().unwrap_or(0),
                        )
                    })
                    .collect();
                out.check(got == expected, || {
                    format!("F_{p}: {f_bar}: {got:?} vs {expected:?}")
                });
            }
        }
    }
}

fn line(
    fe: &dyn Frontend,
    number: usize,
    name: &str,
    out: &Outcome,
    elapsed: Duration,
    budget: Option<u64>,
) -> bool {
    let ok = out.failures.is_empty() && budget.is_none_or(|b| elapsed.as_secs_f64() <= b as f64);
    let limit = budget.map_or("no limit".to_string(), |b| format!("limit {b} s"));
    println!(
        "criterion {number} ({name}, via {}): {} [{:.3} s, {limit}]",
        fe.name(),
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64()
    );
    for failure in out.failures.iter().take(5) {
        println!("    {failure}");
    }
    if out.failures.len() > 5 {
        println!("    ... {} failures in total", out.failures.len());
    }
    ok
}

type Criterion = (&'static str, fn(&dyn Frontend, &mut Outcome), Option<u64>);

/// Runs criteria 1 to 8 and returns whether all of them passed.
pub fn run_all(fe: &dyn Frontend) -> bool {
    let criteria: [Criterion; 5] = [
        ("lexicographic example", example_one, Some(1)),
        ("rank-one irrational examples", example_two, Some(1)),
        ("quadratic oracle sweep", quadratic_sweep, Some(30)),
        ("three formulations agree", three_formulations, Some(60)),
        ("Eisenstein suite", eisenstein_suite, Some(30)),
    ];
    let mut all_ok = true;
    let mut closed = Vec::new();
    for (i, (name, run, budget)) in criteria.into_iter().enumerate() {
        let mut out = Outcome::default();
        let start = Instant::now();
        run(fe, &mut out);
        all_ok &= line(fe, i + 1, name, &out, start.elapsed(), budget);
        closed.append(&mut out.closed);
    }

    let mut out = Outcome::default();
    let start = Instant::now();
    ramification_bookkeeping(&mut out, &closed);
    let name = format!(
        "ramification bookkeeping over {} closed cases",
        closed.len()
    );
    all_ok &= line(fe, 6, &name, &out, start.elapsed(), None);

    let tail: [Criterion; 2] = [
        ("radical transform", radical_transforms, Some(5)),
        ("factorization oracle", factorization_oracle, Some(30)),
    ];
    for (i, (name, run, budget)) in tail.into_iter().enumerate() {
        let mut out = Outcome::default();
        let start = Instant::now();
        run(fe, &mut out);
        all_ok &= line(fe, i + 7, name, &out, start.elapsed(), budget);
    }
    all_ok
}
