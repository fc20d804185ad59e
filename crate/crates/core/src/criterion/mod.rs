//! The integral-closedness engine.
//!
//! With `f mod M = prod phi_i^(l_i)` and `r_i` the remainder of `f` by a monic lift
//! of `phi_i`, `R[alpha]` is integrally closed exactly when every repeated factor
//! (`l_i >= 2`) has `v^G(r_i)` equal to the smallest positive value `sigma`. When the
//! value group has no smallest positive element, closedness means no factor repeats.

mod eisenstein;
mod radical;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{Poly, ResiduePoly, DEFAULT_MAX_DEGREE};
use crate::residue_factor::{self, ResidueFactorization};
use crate::valued_field::FieldElement;
use crate::valuegroup::GroupElement;

pub use eisenstein::{certify_irreducible, is_nu_eisenstein, EisensteinOutcome};
pub use radical::{radical_polynomial, radical_test, radical_transform, RadicalTransform};

/// How irreducibility of `f` over the base field is established.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Refuse inputs without an irreducibility certificate.
    Strict,
    /// The caller vouches for irreducibility.
    #[default]
    Assert,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Irreducibility {
    /// `f mod M` is irreducible of full degree.
    CertifiedResidueIrreducible,
    /// `f` is v-Eisenstein.
    CertifiedEisenstein,
    AssertedByCaller,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub mode: Mode,
    pub max_degree: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            mode: Mode::Assert,
            max_degree: DEFAULT_MAX_DEGREE,
        }
    }
}

impl Options {
    pub fn strict() -> Self {
        Options {
            mode: Mode::Strict,
            ..Options::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Closed,
    NotClosed,
    /// Not closed: some residue factor repeats and the value group has no minimum
    /// positive element.
    GroupHasNoMinWithRepeatedFactor,
}

impl Verdict {
    pub fn is_closed(self) -> bool {
        self == Verdict::Closed
    }

    /// `CLOSED` or `NOT_CLOSED`.
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Closed => "CLOSED",
            _ => "NOT_CLOSED",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Division data for one residue factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorCertificate {
    pub phi_bar: ResiduePoly,
    /// Monic lift of `phi_bar`.
    pub phi: Poly,
    pub l: u32,
    /// Remainder of `f` by `phi`.
    pub r: Poly,
    /// `v^G(r)`.
    pub r_value: GroupElement,
    /// `r_value == sigma`; always true when `l == 1`.
    pub passes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DedekindReport {
    pub f: Poly,
    pub verdict: Verdict,
    pub sigma: Option<GroupElement>,
    pub certificates: Vec<FactorCertificate>,
    pub separable: bool,
    pub irreducibility: Irreducibility,
}

impl DedekindReport {
    pub fn is_closed(&self) -> bool {
        self.verdict.is_closed()
    }

    /// Certificates of the repeated factors.
    pub fn repeated(&self) -> impl Iterator<Item = &FactorCertificate> {
        self.certificates.iter().filter(|c| c.l >= 2)
    }
}

/// Validated input: the polynomial and its residue factorization.
pub(crate) struct Prepared {
    pub factorization: ResidueFactorization,
    pub irreducibility: Irreducibility,
}

pub(crate) fn prepare(f: &Poly, options: &Options) -> Result<Prepared> {
    let degree = f.degree().unwrap_or(0);
    if degree == 0 {
        return Err(Error::Precondition(format!(
            "{f} must have positive degree"
        )));
    }
    if !f.is_monic() {
        return Err(Error::NotMonic(f.to_string()));
    }
    if !f.is_integral() {
        return Err(Error::NotIntegral(format!(
            "{f} has a coefficient outside the valuation ring"
        )));
    }
    if degree > options.max_degree {
        return Err(Error::Precondition(format!(
            "degree {degree} exceeds the cap {}",
            options.max_degree
        )));
    }
    if !f.is_separable() {
        return Err(Error::InseparableInput(f.to_string()));
    }
    let factorization = residue_factor::factor(&f.reduce()?)?;
    let certificate = eisenstein::certify_with(f, &factorization)?;
    let irreducibility = match (certificate, options.mode) {
        (Irreducibility::Unknown, Mode::Strict) => {
            return Err(Error::IrreducibilityUncertified(f.to_string()))
        }
        (Irreducibility::Unknown, Mode::Assert) => Irreducibility::AssertedByCaller,
        (c, _) => c,
    };
    Ok(Prepared {
        factorization,
        irreducibility,
    })
}

fn canonical_lifts(f: &Poly, factorization: &ResidueFactorization) -> Vec<Poly> {
    factorization
        .factors
        .iter()
        .map(|(phi_bar, _)| Poly::lift(f.field(), phi_bar))
        .collect()
}

fn evaluate(
    f: &Poly,
    factorization: &ResidueFactorization,
    lifts: &[Poly],
) -> Result<(Verdict, Vec<FactorCertificate>)> {
    let sigma = f.field().sigma();
    let mut certificates = Vec::with_capacity(lifts.len());
    for ((phi_bar, l), phi) in factorization.factors.iter().zip(lifts) {
        let (_, r) = f.euclid_divide(phi)?;
        let r_value = r.gauss_valuation();
        if *l >= 2 && !r.is_zero() && !r_value.is_positive() {
            return Err(Error::Internal(format!(
                "remainder {r} of a repeated factor has non-positive value {r_value}"
            )));
        }
        let passes = *l == 1 || sigma.as_ref() == Some(&r_value);
        certificates.push(FactorCertificate {
            phi_bar: phi_bar.clone(),
            phi: phi.clone(),
            l: *l,
            r,
            r_value,
            passes,
        });
    }
    let repeated = factorization.factors.iter().any(|(_, l)| *l >= 2);
    let verdict = if !repeated {
        Verdict::Closed
    } else if sigma.is_none() {
        Verdict::GroupHasNoMinWithRepeatedFactor
    } else if certificates.iter().all(|c| c.passes) {
        Verdict::Closed
    } else {
        Verdict::NotClosed
    };
    Ok((verdict, certificates))
}

/// Decides whether `R[alpha]` is integrally closed, `alpha` a root of `f`.
pub fn dedekind_test(f: &Poly, options: &Options) -> Result<DedekindReport> {
    let prepared = prepare(f, options)?;
    let lifts = canonical_lifts(f, &prepared.factorization);
    build_report(f, prepared, &lifts)
}

/// As [`dedekind_test`], with caller-chosen monic lifts of the residue factors
/// (one per factor, in the order of the residue factorization).
pub fn dedekind_test_with_lifts(
    f: &Poly,
    lifts: &[Poly],
    options: &Options,
) -> Result<DedekindReport> {
    let prepared = prepare(f, options)?;
    let factors = &prepared.factorization.factors;
    if lifts.len() != factors.len() {
        return Err(Error::Precondition(format!(
            "expected {} lifts, got {}",
            factors.len(),
            lifts.len()
        )));
    }
    for (lift, (phi_bar, _)) in lifts.iter().zip(factors) {
        if !lift.is_monic() || !lift.is_integral() || lift.reduce()? != *phi_bar {
            return Err(Error::Precondition(format!(
                "{lift} is not a monic lift of {phi_bar}"
            )));
        }
    }
    build_report(f, prepared, lifts)
}

/// Residue factorization of `f` for a polynomial that passes the engine's checks.
pub fn residue_factorization(f: &Poly, options: &Options) -> Result<ResidueFactorization> {
    Ok(prepare(f, options)?.factorization)
}

fn build_report(f: &Poly, prepared: Prepared, lifts: &[Poly]) -> Result<DedekindReport> {
    let (verdict, certificates) = evaluate(f, &prepared.factorization, lifts)?;
    Ok(DedekindReport {
        f: f.clone(),
        verdict,
        sigma: f.field().sigma(),
        certificates,
        separable: true,
        irreducibility: prepared.irreducibility,
    })
}

fn lifted_product(f: &Poly, factorization: &ResidueFactorization, lifts: &[Poly]) -> Poly {
    factorization
        .factors
        .iter()
        .zip(lifts)
        .fold(Poly::constant(f.field().one()), |acc, ((_, l), phi)| {
            acc.mul(&phi.pow(*l))
        })
}

/// Witness for the `f = prod phi_i^(l_i) + pi*T` formulation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ErshovOutcome {
    pub closed: bool,
    /// `D = f - prod phi_i^(l_i)`.
    pub difference: Poly,
    /// Element with `v(pi) = v^G(D)`; absent when `D = 0`.
    pub pi: Option<FieldElement>,
    pub t: Option<Poly>,
    pub t_bar: Option<ResiduePoly>,
}

/// Closed iff no factor repeats, or `v(pi) = sigma` and no repeated `phi_i` divides `T mod M`.
pub fn ershov_test(f: &Poly, options: &Options) -> Result<ErshovOutcome> {
    let prepared = prepare(f, options)?;
    let factorization = &prepared.factorization;
    let lifts = canonical_lifts(f, factorization);
    let difference = f.sub(&lifted_product(f, factorization, &lifts));
    let repeated = factorization.repeated();
    if difference.is_zero() {
        if repeated.is_empty() {
            return Ok(ErshovOutcome {
                closed: true,
                difference,
                pi: None,
                t: None,
                t_bar: None,
            });
        }
        return Err(Error::Internal(format!(
            "{f} equals a product with repeated factors but passed the separability check"
        )));
    }
    let value = difference.gauss_valuation();
    if !value.is_positive() {
        return Err(Error::Internal(format!(
            "f - prod phi^l has non-positive value {value}"
        )));
    }
    let pi = f.field().element_of_value(&value)?;
    let t = difference.div_scalar(&pi)?;
    let t_bar = t.reduce()?;
    let closed = repeated.is_empty()
        || (f.field().sigma().as_ref() == Some(&value)
            && repeated
                .iter()
                .all(|&i| !factorization.factors[i].0.divides(&t_bar)));
    Ok(ErshovOutcome {
        closed,
        difference,
        pi: Some(pi),
        t: Some(t),
        t_bar: Some(t_bar),
    })
}

/// Witness for the `M = (f - prod phi_i^(l_i)) / pi` formulation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MFormOutcome {
    pub closed: bool,
    pub pi: FieldElement,
    pub m: Poly,
    pub m_bar: ResiduePoly,
}

/// Closed iff no repeated `phi_i` divides `M mod M_v`. Needs a minimum positive value
/// and at least one repeated factor.
pub fn dedekind_test_m_form(f: &Poly, options: &Options) -> Result<MFormOutcome> {
    let pi = f.field().uniformizer().ok_or(Error::NoMinimum)?;
    let prepared = prepare(f, options)?;
    let factorization = &prepared.factorization;
    let repeated = factorization.repeated();
    if repeated.is_empty() {
        return Err(Error::Precondition(
            "the M-form applies only when a residue factor repeats".into(),
        ));
    }
    let lifts = canonical_lifts(f, factorization);
    let m = f
        .sub(&lifted_product(f, factorization, &lifts))
        .div_scalar(&pi)?;
    if !m.is_integral() {
        return Err(Error::Internal(format!("M = {m} is not integral")));
    }
    let m_bar = m.reduce()?;
    let closed = repeated
        .iter()
        .all(|&i| !factorization.factors[i].0.divides(&m_bar));
    Ok(MFormOutcome {
        closed,
        pi,
        m,
        m_bar,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamificationRow {
    pub phi: Poly,
    /// Ramification index, equal to the multiplicity `l_i`.
    pub e: u32,
    /// Residue degree, equal to `deg phi_i`.
    pub f: usize,
    /// `sigma / l_i`, the value of `phi_i(alpha)` under the matching extension
    /// (informational; only for repeated factors).
    pub phi_alpha_value: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamificationReport {
    /// Number of extensions of the valuation.
    pub s: usize,
    pub rows: Vec<RamificationRow>,
    /// `sum e_i * f_i`.
    pub total: usize,
}

/// Ramification indices and residue degrees of the extensions, for a closed report.
pub fn ramification_report(report: &DedekindReport) -> Result<RamificationReport> {
    if !report.is_closed() {
        return Err(Error::Precondition(
            "ramification data is only derived for integrally closed R[alpha]".into(),
        ));
    }
    let rows: Vec<RamificationRow> = report
        .certificates
        .iter()
        .map(|c| RamificationRow {
            phi: c.phi.clone(),
            e: c.l,
            f: c.phi.degree().unwrap_or(0),
            phi_alpha_value: match (&report.sigma, c.l) {
                (Some(sigma), l) if l >= 2 => Some(format!("{sigma}/{l}")),
                _ => None,
            },
        })
        .collect();
    let total = rows.iter().map(|r| r.e as usize * r.f).sum();
    let degree = report.f.degree().unwrap_or(0);
    if total != degree {
        return Err(Error::Internal(format!(
            "sum e*f = {total} differs from deg f = {degree}"
        )));
    }
    Ok(RamificationReport {
        s: rows.len(),
        rows,
        total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::valued_field::ValuedField;

    fn poly(field: &str, text: &str) -> Poly {
        parse_poly(&field.parse().unwrap(), text).unwrap()
    }

    #[test]
    fn lex_examples() {
        let closed = dedekind_test(&poly("lex:F2", "x^3 + (Y)"), &Options::default()).unwrap();
        assert_eq!(closed.verdict, Verdict::Closed);
        assert_eq!(closed.sigma, Some(GroupElement::lex(0, 1)));
        assert_eq!(closed.certificates[0].r.to_string(), "(Y)");
        assert_eq!(closed.certificates[0].r_value, GroupElement::lex(0, 1));

        let open =
            dedekind_test(&poly("lex:F2", "x^3 + (Y)*x + (X)"), &Options::default()).unwrap();
        assert_eq!(open.verdict, Verdict::NotClosed);
        assert_eq!(open.certificates[0].r.to_string(), "(X)");
        assert_eq!(open.certificates[0].r_value, GroupElement::lex(1, 0));
    }

    #[test]
    fn rational_examples() {
        let five = dedekind_test(&poly("qp:2", "x^2 - 5"), &Options::default()).unwrap();
        assert_eq!(five.verdict, Verdict::NotClosed);
        assert_eq!(five.certificates[0].phi.to_string(), "x + 1");
        assert_eq!(five.certificates[0].r.to_string(), "-4");
        assert_eq!(five.certificates[0].r_value, GroupElement::integer(2));
        assert_eq!(five.irreducibility, Irreducibility::AssertedByCaller);

        let three = dedekind_test(&poly("qp:2", "x^2 - 3"), &Options::default()).unwrap();
        assert_eq!(three.verdict, Verdict::Closed);
        assert_eq!(three.certificates[0].r.to_string(), "-2");
    }

    #[test]
    fn dense_group_with_repeated_factor() {
        let f = poly("lambda-composite:p2:sqrt2", "x^3 + 2*x + 2");
        let report = dedekind_test(&f, &Options::default()).unwrap();
        assert_eq!(report.verdict, Verdict::GroupHasNoMinWithRepeatedFactor);
        assert_eq!(report.sigma, None);
        assert!(!ershov_test(&f, &Options::default()).unwrap().closed);
        assert_eq!(
            dedekind_test_m_form(&f, &Options::default()),
            Err(Error::NoMinimum)
        );
    }

    #[test]
    fn ershov_witnesses() {
        let three = ershov_test(&poly("qp:2", "x^2 - 3"), &Options::default()).unwrap();
        assert!(three.closed);
        assert_eq!(three.difference.to_string(), "-2*x - 4");
        assert_eq!(three.pi.unwrap().to_string(), "2");
        assert_eq!(three.t.unwrap().to_string(), "-x - 2");
        assert_eq!(three.t_bar.unwrap().to_string(), "x");

        let five = ershov_test(&poly("qp:2", "x^2 - 5"), &Options::default()).unwrap();
        assert!(!five.closed);
        assert_eq!(five.t.unwrap().to_string(), "-x - 3");
        assert_eq!(five.t_bar.unwrap().to_string(), "x + 1");

        let squarefree = ershov_test(&poly("qp:5", "x^2 + 1"), &Options::default()).unwrap();
        assert!(squarefree.closed);
    }

    #[test]
    fn m_form_witnesses() {
        let three = dedekind_test_m_form(&poly("qp:2", "x^2 - 3"), &Options::default()).unwrap();
        assert!(three.closed);
        assert_eq!(three.m.to_string(), "-x - 2");
        assert_eq!(three.m_bar.to_string(), "x");
        let five = dedekind_test_m_form(&poly("qp:2", "x^2 - 5"), &Options::default()).unwrap();
        assert!(!five.closed);
        assert_eq!(five.m_bar.to_string(), "x + 1");
        let lex = dedekind_test_m_form(&poly("lex:F2", "x^3 + (Y)"), &Options::default()).unwrap();
        assert!(lex.closed);
        assert!(lex.m.to_string() == "1");
        assert!(matches!(
            dedekind_test_m_form(&poly("qp:5", "x^2 + 1"), &Options::default()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn precondition_errors() {
        let opts = Options::default();
        assert!(matches!(
            dedekind_test(&poly("qp:2", "2*x^2 + 1"), &opts),
            Err(Error::NotMonic(_))
        ));
        assert!(matches!(
            dedekind_test(&poly("qp:2", "x^2 + 1/2"), &opts),
            Err(Error::NotIntegral(_))
        ));
        assert!(matches!(
            dedekind_test(&poly("lambda-trivial:F3", "x^3 + (X)"), &opts),
            Err(Error::InseparableInput(_))
        ));
        assert!(matches!(
            dedekind_test(&poly("qp:2", "x^2 - 5"), &Options::strict()),
            Err(Error::IrreducibilityUncertified(_))
        ));
        assert!(matches!(
            dedekind_test(&poly("qp:2", "7"), &opts),
            Err(Error::Precondition(_))
        ));
        let capped = Options {
            max_degree: 2,
            ..Options::default()
        };
        assert!(matches!(
            dedekind_test(&poly("qp:2", "x^3 + 2"), &capped),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn linear_polynomials_are_closed() {
        let report = dedekind_test(&poly("qp:3", "x + 9"), &Options::strict()).unwrap();
        assert!(report.is_closed());
        let ram = ramification_report(&report).unwrap();
        assert_eq!((ram.s, ram.rows[0].e, ram.rows[0].f), (1, 1, 1));
    }

    #[test]
    fn ramification_examples() {
        let lex = dedekind_test(&poly("lex:F2", "x^3 + (Y)"), &Options::default()).unwrap();
        let ram = ramification_report(&lex).unwrap();
        assert_eq!(
            (ram.s, ram.rows[0].e, ram.rows[0].f, ram.total),
            (1, 3, 1, 3)
        );
        assert_eq!(ram.rows[0].phi_alpha_value.as_deref(), Some("(0,1)/3"));

        let q2 = dedekind_test(&poly("qp:2", "x^2 - 3"), &Options::default()).unwrap();
        let ram = ramification_report(&q2).unwrap();
        assert_eq!((ram.s, ram.rows[0].e, ram.rows[0].f), (1, 2, 1));

        let q5 = dedekind_test(&poly("qp:5", "x^2 + x + 1"), &Options::strict()).unwrap();
        assert_eq!(
            q5.irreducibility,
            Irreducibility::CertifiedResidueIrreducible
        );
        let ram = ramification_report(&q5).unwrap();
        assert_eq!((ram.s, ram.rows[0].e, ram.rows[0].f), (1, 1, 2));

        let open = dedekind_test(&poly("qp:2", "x^2 - 5"), &Options::default()).unwrap();
        assert!(matches!(
            ramification_report(&open),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn lifts_are_validated() {
        let f = poly("qp:2", "x^2 - 5");
        let k = ValuedField::p_adic(2).unwrap();
        let good = Poly::from_ints(&k, &[3, 1]);
        let report = dedekind_test_with_lifts(&f, &[good], &Options::default()).unwrap();
        assert_eq!(report.verdict, Verdict::NotClosed);
        let bad = Poly::from_ints(&k, &[0, 1]);
        assert!(dedekind_test_with_lifts(&f, &[bad], &Options::default()).is_err());
    }
}
