//! Serializable reports shared by the command-line tool and the web demo.
//!
//! Every value is rendered in the same grammar the parsers accept, so a report can
//! be fed back in. The text form is produced from the same structures as the JSON.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::Value;

use crate::criterion::{
    dedekind_test, dedekind_test_m_form, ershov_test, is_nu_eisenstein, radical_test,
    radical_transform, ramification_report, DedekindReport, EisensteinOutcome, FactorCertificate,
    Irreducibility, Options, RadicalTransform, RamificationReport, Verdict,
};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::valued_field::{FieldElement, ValuedField};
use crate::valuegroup::GroupElement;

fn integer_value(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(n.to_string()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorEntry {
    pub phi: String,
    pub phi_bar: String,
    pub l: u32,
    pub r: String,
    pub r_value: String,
    pub passes: bool,
    #[serde(skip)]
    relation: String,
}

impl FactorEntry {
    fn new(c: &FactorCertificate, sigma: Option<&GroupElement>) -> Self {
        let relation = match sigma {
            _ if c.l == 1 => "simple factor".to_string(),
            None => format!("nuG(r) = {}, no minimum positive value", c.r_value),
            Some(s) if c.r_value == *s => format!("nuG(r) = {} = sigma", c.r_value),
            Some(s) => format!("nuG(r) = {} > sigma = {s}", c.r_value),
        };
        FactorEntry {
            phi: c.phi.to_string(),
            phi_bar: c.phi_bar.to_string(),
            l: c.l,
            r: c.r.to_string(),
            r_value: c.r_value.to_string(),
            passes: c.passes,
            relation,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ErshovEntry {
    pub closed: bool,
    pub pi: Option<String>,
    pub t: Option<String>,
    pub t_bar: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MFormEntry {
    pub closed: bool,
    pub pi: String,
    pub m: String,
    pub m_bar: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    pub ershov: ErshovEntry,
    /// Absent when the value group has no minimum or no factor repeats.
    pub m_form: Option<MFormEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RamificationEntry {
    pub phi: String,
    pub e: u32,
    pub f: usize,
    pub phi_alpha_value: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RamificationSummary {
    pub s: usize,
    pub total: usize,
    pub rows: Vec<RamificationEntry>,
}

impl From<&RamificationReport> for RamificationSummary {
    fn from(r: &RamificationReport) -> Self {
        RamificationSummary {
            s: r.s,
            total: r.total,
            rows: r
                .rows
                .iter()
                .map(|row| RamificationEntry {
                    phi: row.phi.to_string(),
                    e: row.e,
                    f: row.f,
                    phi_alpha_value: row.phi_alpha_value.clone(),
                })
                .collect(),
        }
    }
}

/// Output of `check`, `radical` and `ramify`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub field: String,
    pub poly: String,
    pub verdict: &'static str,
    pub verdict_detail: Option<&'static str>,
    pub sigma: Option<String>,
    pub irreducibility: Irreducibility,
    pub factors: Vec<FactorEntry>,
    pub witnesses: Witnesses,
    /// Present exactly when the verdict is `CLOSED`.
    pub ramification: Option<RamificationSummary>,
}

impl CheckReport {
    /// Adds the cross-check witnesses and ramification data to an engine report.
    pub fn from_engine(report: &DedekindReport, options: &Options) -> Result<Self> {
        let f = &report.f;
        let ershov = ershov_test(f, options)?;
        let m_form = match dedekind_test_m_form(f, options) {
            Ok(m) => Some(MFormEntry {
                closed: m.closed,
                pi: m.pi.to_string(),
                m: m.m.to_string(),
                m_bar: m.m_bar.to_string(),
            }),
            Err(Error::NoMinimum) | Err(Error::Precondition(_)) => None,
            Err(e) => return Err(e),
        };
        let ramification = if report.is_closed() {
            Some(RamificationSummary::from(&ramification_report(report)?))
        } else {
            None
        };
        Ok(CheckReport {
            field: f.field().to_string(),
            poly: f.to_string(),
            verdict: report.verdict.label(),
            verdict_detail: match report.verdict {
                Verdict::GroupHasNoMinWithRepeatedFactor => {
                    Some("GROUP_HAS_NO_MIN_WITH_REPEATED_FACTOR")
                }
                _ => None,
            },
            sigma: report.sigma.as_ref().map(|s| s.to_string()),
            irreducibility: report.irreducibility,
            factors: report
                .certificates
                .iter()
                .map(|c| FactorEntry::new(c, report.sigma.as_ref()))
                .collect(),
            witnesses: Witnesses {
                ershov: ErshovEntry {
                    closed: ershov.closed,
                    pi: ershov.pi.map(|p| p.to_string()),
                    t: ershov.t.map(|t| t.to_string()),
                    t_bar: ershov.t_bar.map(|t| t.to_string()),
                },
                m_form,
            },
            ramification,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn irreducibility_label(i: Irreducibility) -> &'static str {
    match i {
        Irreducibility::CertifiedResidueIrreducible => "CERTIFIED_RESIDUE_IRREDUCIBLE",
        Irreducibility::CertifiedEisenstein => "CERTIFIED_EISENSTEIN",
        Irreducibility::AssertedByCaller => "ASSERTED_BY_CALLER",
        Irreducibility::Unknown => "UNKNOWN",
    }
}

fn write_ramification(f: &mut fmt::Formatter<'_>, r: &RamificationSummary) -> fmt::Result {
    writeln!(f, "extensions: {}", r.s)?;
    for row in &r.rows {
        write!(f, "  phi = {}: e = {}, f = {}", row.phi, row.e, row.f)?;
        if let Some(v) = &row.phi_alpha_value {
            write!(f, ", value of phi(alpha) = {v}")?;
        }
        writeln!(f)?;
    }
    writeln!(f, "sum e*f = {}", r.total)
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "field: {}", self.field)?;
        writeln!(f, "poly: {}", self.poly)?;
        write!(f, "verdict: {}", self.verdict)?;
        if let Some(detail) = self.verdict_detail {
            write!(f, " ({detail})")?;
        }
        writeln!(f)?;
        writeln!(
            f,
            "sigma: {}",
            self.sigma
                .as_deref()
                .unwrap_or("none (no minimum positive value)")
        )?;
        writeln!(
            f,
            "irreducibility: {}",
            irreducibility_label(self.irreducibility)
        )?;
        for c in &self.factors {
            writeln!(
                f,
                "factor {} (l = {}): phi = {}, r = {}, {}{}",
                c.phi_bar,
                c.l,
                c.phi,
                c.r,
                c.relation,
                if c.passes { "" } else { " [fails]" }
            )?;
        }
        let e = &self.witnesses.ershov;
        match (&e.pi, &e.t, &e.t_bar) {
            (Some(pi), Some(t), Some(t_bar)) => writeln!(
                f,
                "ershov: pi = {pi}, T = {t}, T mod M = {t_bar}, closed = {}",
                e.closed
            )?,
            _ => writeln!(f, "ershov: f = prod phi^l, closed = {}", e.closed)?,
        }
        if let Some(m) = &self.witnesses.m_form {
            writeln!(
                f,
                "m-form: pi = {}, M = {}, M mod M_v = {}, closed = {}",
                m.pi, m.m, m.m_bar, m.closed
            )?;
        }
        if let Some(r) = &self.ramification {
            write_ramification(f, r)?;
        }
        Ok(())
    }
}

/// `check`: the full report for `f`.
pub fn check(f: &Poly, options: &Options) -> Result<CheckReport> {
    CheckReport::from_engine(&dedekind_test(f, options)?, options)
}

/// `radical`: the full report for `x^n - a`.
pub fn radical(
    field: &ValuedField,
    n: u32,
    a: &FieldElement,
    options: &Options,
) -> Result<CheckReport> {
    CheckReport::from_engine(&radical_test(field, n, a, options)?, options)
}

/// Output of `ramify`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RamifyReport {
    pub field: String,
    pub poly: String,
    pub verdict: &'static str,
    pub ramification: RamificationSummary,
}

impl RamifyReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for RamifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "field: {}", self.field)?;
        writeln!(f, "poly: {}", self.poly)?;
        writeln!(f, "verdict: {}", self.verdict)?;
        write_ramification(f, &self.ramification)
    }
}

/// `ramify`: extension data, failing with a precondition error when not closed.
pub fn ramify(f: &Poly, options: &Options) -> Result<RamifyReport> {
    let report = dedekind_test(f, options)?;
    let ram = ramification_report(&report)?;
    Ok(RamifyReport {
        field: f.field().to_string(),
        poly: f.to_string(),
        verdict: report.verdict.label(),
        ramification: RamificationSummary::from(&ram),
    })
}

/// Output of `eisenstein`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EisensteinReport {
    pub field: String,
    pub poly: String,
    pub is_eisenstein: bool,
    pub sigma: Option<String>,
    pub psi: Option<String>,
    pub psi_bar: Option<String>,
    pub l: Option<u32>,
    pub r: Option<String>,
    pub r_value: Option<String>,
    pub reason: Option<String>,
}

impl EisensteinReport {
    fn new(g: &Poly, out: &EisensteinOutcome) -> Self {
        EisensteinReport {
            field: g.field().to_string(),
            poly: g.to_string(),
            is_eisenstein: out.is_eisenstein,
            sigma: g.field().sigma().map(|s| s.to_string()),
            psi: out.psi.as_ref().map(|p| p.to_string()),
            psi_bar: out.psi_bar.as_ref().map(|p| p.to_string()),
            l: out.l,
            r: out.r.as_ref().map(|p| p.to_string()),
            r_value: out.r_value.as_ref().map(|v| v.to_string()),
            reason: out.reason.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for EisensteinReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "field: {}", self.field)?;
        writeln!(f, "poly: {}", self.poly)?;
        writeln!(f, "eisenstein: {}", self.is_eisenstein)?;
        if let (Some(psi), Some(l), Some(r), Some(v)) = (&self.psi, self.l, &self.r, &self.r_value)
        {
            writeln!(f, "psi: {psi} (l = {l})")?;
            writeln!(f, "r: {r}, nuG(r) = {v}")?;
        }
        if let Some(reason) = &self.reason {
            writeln!(f, "reason: {reason}")?;
        }
        Ok(())
    }
}

/// `eisenstein`: the v-Eisenstein check with its witness.
pub fn eisenstein(g: &Poly) -> Result<EisensteinReport> {
    Ok(EisensteinReport::new(g, &is_nu_eisenstein(g)?))
}

/// Output of `transform`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TransformReport {
    pub field: String,
    pub n: u32,
    pub a: String,
    pub m: Value,
    pub u: Value,
    pub v: Value,
    #[serde(rename = "A")]
    pub a_transformed: String,
    pub g: String,
    pub eisenstein: EisensteinReport,
}

impl TransformReport {
    fn new(field: &ValuedField, n: u32, a: &FieldElement, t: &RadicalTransform) -> Self {
        TransformReport {
            field: field.to_string(),
            n,
            a: a.to_string(),
            m: integer_value(&t.m),
            u: integer_value(&t.u),
            v: integer_value(&t.v),
            a_transformed: t.a_transformed.to_string(),
            g: t.g.to_string(),
            eisenstein: EisensteinReport::new(&t.g, &t.eisenstein),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for TransformReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "field: {}", self.field)?;
        writeln!(f, "n: {}, a: {}", self.n, self.a)?;
        writeln!(f, "m: {}, u: {}, v: {}", self.m, self.u, self.v)?;
        writeln!(f, "A: {}", self.a_transformed)?;
        writeln!(f, "g: {}", self.g)?;
        writeln!(f, "eisenstein: {}", self.eisenstein.is_eisenstein)
    }
}

/// `transform`: rewrites `x^n - a` as a v-Eisenstein polynomial.
pub fn transform(field: &ValuedField, n: u32, a: &FieldElement) -> Result<TransformReport> {
    Ok(TransformReport::new(
        field,
        n,
        a,
        &radical_transform(field, n, a)?,
    ))
}
