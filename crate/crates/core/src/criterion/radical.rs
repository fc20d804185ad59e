use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::{Poly, ResiduePoly};
use crate::valued_field::{FieldElement, ValuedField};

use super::eisenstein::{is_nu_eisenstein, EisensteinOutcome};
use super::{prepare, DedekindReport, FactorCertificate, Options, Verdict};

/// `x^n - a`.
pub fn radical_polynomial(field: &ValuedField, n: u32, a: &FieldElement) -> Result<Poly> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    if a.field() != field {
        return Err(Error::Domain(format!("{a} does not belong to {field}")));
    }
    Ok(Poly::monomial(field.one(), n as usize).sub(&Poly::constant(a.clone())))
}

/// Integral closedness of `R[a^(1/n)]` for `a` in the maximal ideal.
///
/// Here `x^n - a` reduces to `x^n`, the only lift is `x` and the remainder is `-a`,
/// so the answer is `n = 1` or `v(a) = sigma`.
pub fn radical_test(
    field: &ValuedField,
    n: u32,
    a: &FieldElement,
    options: &Options,
) -> Result<DedekindReport> {
    let f = radical_polynomial(field, n, a)?;
    if !a.in_maximal_ideal() || a.is_zero() {
        return Err(Error::Precondition(format!(
            "{a} must be a nonzero element of the maximal ideal"
        )));
    }
    let prepared = prepare(&f, options)?;
    let sigma = field.sigma();
    let r_value = a.valuation();
    let passes = n == 1 || sigma.as_ref() == Some(&r_value);
    let verdict = match (&sigma, n) {
        (_, 1) => Verdict::Closed,
        (None, _) => Verdict::GroupHasNoMinWithRepeatedFactor,
        _ if passes => Verdict::Closed,
        _ => Verdict::NotClosed,
    };
    Ok(DedekindReport {
        f,
        verdict,
        sigma,
        certificates: vec![FactorCertificate {
            phi_bar: ResiduePoly::x(field.residue_field()),
            phi: Poly::x(field),
            l: n,
            r: Poly::constant(a.neg()),
            r_value,
            passes,
        }],
        separable: true,
        irreducibility: prepared.irreducibility,
    })
}

/// Rewriting of `a^(1/n)` as a root of a v-Eisenstein `x^n - A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalTransform {
    /// `v(a) = m * sigma`.
    pub m: BigInt,
    /// `m * v = 1 + n * u`.
    pub u: BigInt,
    pub v: BigInt,
    /// `A = a^v / pi^(n*u)`, of value `sigma`.
    pub a_transformed: FieldElement,
    pub g: Poly,
    pub eisenstein: EisensteinOutcome,
}

/// For `v(a) = m * sigma` with `gcd(m, n) = 1`, produces `A` with `v(A) = sigma` and
/// `K(a^(1/n)) = K(A^(1/n))`.
pub fn radical_transform(
    field: &ValuedField,
    n: u32,
    a: &FieldElement,
) -> Result<RadicalTransform> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    let sigma = field.sigma().ok_or(Error::NoMinimum)?;
    let pi = field.uniformizer().ok_or(Error::NoMinimum)?;
    let value = a.valuation();
    let m = value
        .multiple_of(&sigma)
        .filter(|m| !m.is_negative())
        .ok_or_else(|| Error::ValueNotMultipleOfSigma(value.to_string()))?;
    let n_big = BigInt::from(n);
    let gcd = m.gcd(&n_big);
    if !gcd.is_one() {
        return Err(Error::GcdNotOne {
            m: m.to_string(),
            n: n.to_string(),
            gcd: gcd.to_string(),
        });
    }
    let v = if n == 1 {
        BigInt::zero()
    } else {
        m.extended_gcd(&n_big).x.mod_floor(&n_big)
    };
    let u = (&m * &v - BigInt::one()).div_floor(&n_big);
    let too_large = || Error::Precondition("exponent out of range".into());
    let a_pow = a.powi(v.to_i64().ok_or_else(too_large)?)?;
    let shift = (&n_big * &u).to_i64().ok_or_else(too_large)?;
    let a_transformed = a_pow.checked_div(&pi.powi(shift)?)?;
    if a_transformed.valuation() != sigma {
        return Err(Error::Internal(format!(
            "transformed element {a_transformed} has value {} instead of {sigma}",
            a_transformed.valuation()
        )));
    }
    let g = radical_polynomial(field, n, &a_transformed)?;
    let eisenstein = is_nu_eisenstein(&g)?;
    Ok(RadicalTransform {
        m,
        u,
        v,
        a_transformed,
        g,
        eisenstein,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_root_of_four() {
        let k = ValuedField::p_adic(2).unwrap();
        let t = radical_transform(&k, 3, &k.from_int(4)).unwrap();
        assert_eq!((t.m, t.v.clone(), t.u), (2.into(), 2.into(), 1.into()));
        assert_eq!(t.a_transformed, k.from_int(2));
        assert_eq!(t.g.to_string(), "x^3 - 2");
        assert!(t.eisenstein.is_eisenstein);
    }

    #[test]
    fn transform_errors() {
        let k = ValuedField::p_adic(2).unwrap();
        assert!(matches!(
            radical_transform(&k, 4, &k.from_int(4)),
            Err(Error::GcdNotOne { .. })
        ));
        assert!(matches!(
            radical_transform(&k, 3, &k.rational(1, 2).unwrap()),
            Err(Error::ValueNotMultipleOfSigma(_))
        ));
        let dense = ValuedField::lambda_composite(2, 2).unwrap();
        assert_eq!(
            radical_transform(&dense, 3, &dense.from_int(2)),
            Err(Error::NoMinimum)
        );
        let lex = ValuedField::lex_bivariate(2).unwrap();
        assert!(matches!(
            radical_transform(&lex, 3, &lex.var_x().unwrap()),
            Err(Error::ValueNotMultipleOfSigma(_))
        ));
    }

    #[test]
    fn lex_transform() {
        let lex = ValuedField::lex_bivariate(3).unwrap();
        let a = lex.monomial(0, 2).unwrap();
        let t = radical_transform(&lex, 5, &a).unwrap();
        assert_eq!(t.a_transformed.valuation(), lex.sigma().unwrap());
        assert!(t.eisenstein.is_eisenstein);
    }

    #[test]
    fn radical_verdicts() {
        let k = ValuedField::p_adic(3).unwrap();
        let opts = Options::default();
        assert!(radical_test(&k, 2, &k.from_int(3), &opts)
            .unwrap()
            .is_closed());
        assert_eq!(
            radical_test(&k, 2, &k.from_int(18), &opts).unwrap().verdict,
            Verdict::NotClosed
        );
        assert!(matches!(
            radical_test(&k, 2, &k.from_int(2), &opts),
            Err(Error::Precondition(_))
        ));
        let dense = ValuedField::lambda_composite(2, 2).unwrap();
        assert_eq!(
            radical_test(&dense, 3, &dense.from_int(2), &opts)
                .unwrap()
                .verdict,
            Verdict::GroupHasNoMinWithRepeatedFactor
        );
    }
}
