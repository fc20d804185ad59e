use crate::error::{Error, Result};
use crate::poly::{Poly, ResiduePoly};
use crate::residue_factor::{self, ResidueFactorization};
use crate::valuegroup::GroupElement;

use super::Irreducibility;

/// Outcome of the v-Eisenstein check. When `is_eisenstein` holds, `psi` is a monic
/// lift of the single residue factor with `v^G(g mod psi) = sigma`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EisensteinOutcome {
    pub is_eisenstein: bool,
    pub psi: Option<Poly>,
    pub psi_bar: Option<ResiduePoly>,
    pub l: Option<u32>,
    pub r: Option<Poly>,
    pub r_value: Option<GroupElement>,
    /// Why the check failed.
    pub reason: Option<String>,
}

impl EisensteinOutcome {
    fn rejected(reason: String) -> Self {
        EisensteinOutcome {
            is_eisenstein: false,
            psi: None,
            psi_bar: None,
            l: None,
            r: None,
            r_value: None,
            reason: Some(reason),
        }
    }
}

fn check_shape(g: &Poly) -> Result<()> {
    if g.degree().unwrap_or(0) == 0 {
        return Err(Error::Precondition(format!(
            "{g} must have positive degree"
        )));
    }
    if !g.is_monic() {
        return Err(Error::NotMonic(g.to_string()));
    }
    if !g.is_integral() {
        return Err(Error::NotIntegral(format!(
            "{g} has a coefficient outside the valuation ring"
        )));
    }
    Ok(())
}

/// Whether `g mod M` is a power of one irreducible `psi_bar` and some monic lift
/// `psi` leaves a remainder of value exactly `sigma`.
///
/// For `l >= 2` the remainder value does not depend on the lift. For `l = 1`,
/// `psi = g - pi` always works, so the check reduces to `g mod M` being irreducible.
pub fn is_nu_eisenstein(g: &Poly) -> Result<EisensteinOutcome> {
    check_shape(g)?;
    let factorization = residue_factor::factor(&g.reduce()?)?;
    eisenstein_with(g, &factorization)
}

pub(super) fn eisenstein_with(
    g: &Poly,
    factorization: &ResidueFactorization,
) -> Result<EisensteinOutcome> {
    let field = g.field();
    let Some(sigma) = field.sigma() else {
        return Ok(EisensteinOutcome::rejected(
            "the value group has no minimum positive element".into(),
        ));
    };
    if factorization.s() != 1 {
        return Ok(EisensteinOutcome::rejected(format!(
            "the residue polynomial has {} distinct irreducible factors",
            factorization.s()
        )));
    }
    let (psi_bar, l) = factorization.factors[0].clone();
    let canonical = Poly::lift_monic(field, &psi_bar)?;
    let (_, r) = g.euclid_divide(&canonical)?;
    let r_value = r.gauss_valuation();
    let (psi, r, r_value) = if r_value == sigma || l >= 2 {
        (canonical, r, r_value)
    } else {
        let pi = Poly::constant(field.uniformizer().ok_or(Error::NoMinimum)?);
        (g.sub(&pi), pi, sigma.clone())
    };
    let is_eisenstein = r_value == sigma;
    let reason = (!is_eisenstein).then(|| format!("v(r) = {r_value} differs from sigma = {sigma}"));
    Ok(EisensteinOutcome {
        is_eisenstein,
        psi: Some(psi),
        psi_bar: Some(psi_bar),
        l: Some(l),
        r: Some(r),
        r_value: Some(r_value),
        reason,
    })
}

pub(super) fn certify_with(
    f: &Poly,
    factorization: &ResidueFactorization,
) -> Result<Irreducibility> {
    if let [(phi_bar, 1)] = factorization.factors.as_slice() {
        if phi_bar.degree() == f.degree() {
            return Ok(Irreducibility::CertifiedResidueIrreducible);
        }
    }
    if eisenstein_with(f, factorization)?.is_eisenstein {
        return Ok(Irreducibility::CertifiedEisenstein);
    }
    Ok(Irreducibility::Unknown)
}

/// Tries to prove `f` irreducible over the base field.
pub fn certify_irreducible(f: &Poly) -> Result<Irreducibility> {
    check_shape(f)?;
    let factorization = residue_factor::factor(&f.reduce()?)?;
    certify_with(f, &factorization)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn poly(field: &str, text: &str) -> Poly {
        parse_poly(&field.parse().unwrap(), text).unwrap()
    }

    #[test]
    fn classical_eisenstein() {
        let out = is_nu_eisenstein(&poly("qp:3", "x^3 + 3*x + 6")).unwrap();
        assert!(out.is_eisenstein);
        assert_eq!(out.psi.unwrap().to_string(), "x");
        assert_eq!(out.l, Some(3));
        assert_eq!(out.r_value, Some(GroupElement::integer(1)));
    }

    #[test]
    fn remainder_value_too_large() {
        let out = is_nu_eisenstein(&poly("qp:2", "x^2 - 5")).unwrap();
        assert!(!out.is_eisenstein);
        assert_eq!(out.r_value, Some(GroupElement::integer(2)));
        assert!(out.reason.is_some());
    }

    #[test]
    fn irreducible_residue_uses_shifted_lift() {
        let out = is_nu_eisenstein(&poly("qp:2", "x^2 + x + 1")).unwrap();
        assert!(out.is_eisenstein);
        assert_eq!(out.psi.unwrap().to_string(), "x^2 + x - 1");
        assert_eq!(out.r.unwrap().to_string(), "2");
    }

    #[test]
    fn several_residue_factors() {
        let out = is_nu_eisenstein(&poly("qp:5", "x^2 - 1")).unwrap();
        assert!(!out.is_eisenstein);
        assert!(out.psi.is_none());
    }

    #[test]
    fn dense_group_has_no_eisenstein_polynomials() {
        let out = is_nu_eisenstein(&poly("lambda-composite:p2:sqrt2", "x^2 + 2")).unwrap();
        assert!(!out.is_eisenstein);
    }

    #[test]
    fn certificates() {
        assert_eq!(
            certify_irreducible(&poly("lex:F2", "x^3 + (Y)")).unwrap(),
            Irreducibility::CertifiedEisenstein
        );
        assert_eq!(
            certify_irreducible(&poly("qp:5", "x^2 + 2")).unwrap(),
            Irreducibility::CertifiedResidueIrreducible
        );
        assert_eq!(
            certify_irreducible(&poly("qp:2", "x^2 - 5")).unwrap(),
            Irreducibility::Unknown
        );
        assert!(matches!(
            is_nu_eisenstein(&poly("qp:2", "x^2 + 1/2")),
            Err(Error::NotIntegral(_))
        ));
    }
}
