//! Independent reference computations for cross-checking the engine.
//!
//! Nothing here goes through [`crate::criterion`]: the rational case uses the
//! classical gcd form of Dedekind's criterion, quadratic orders use the closed-form
//! answer, and residue factorizations come from trial division by every monic
//! polynomial of small degree.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::finite_field::ResidueField;
use crate::poly::{Poly, ResiduePoly};
use crate::residue_factor::{squarefree_decomposition, ResidueFactorization};
use crate::valued_field::ValuedField;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum OracleSource {
    ClassicalGcdForm,
    QuadraticTable,
    ExhaustiveFactor,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleAnswer {
    Closed(bool),
    Factorization(ResidueFactorization),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleVerdict {
    pub source: OracleSource,
    pub verdict: OracleAnswer,
}

/// `p`-maximality of `Z_(p)[alpha]` by the classical criterion: with `g` the lifted
/// radical of `f mod p`, `h` the lifted cofactor and `T = (g*h - f)/p`, the order is
/// maximal iff `gcd(T mod p, g mod p, h mod p) = 1`.
pub fn classical_dedekind_qp(f: &Poly) -> Result<bool> {
    let field = f.field();
    let ValuedField::PAdic { p, .. } = field else {
        return Err(Error::Domain(format!(
            "the classical criterion needs a p-adic field, not {field}"
        )));
    };
    if f.degree().unwrap_or(0) == 0 {
        return Err(Error::Precondition(format!(
            "{f} must have positive degree"
        )));
    }
    if !f.is_monic() {
        return Err(Error::NotMonic(f.to_string()));
    }
    if !f.is_integral() {
        return Err(Error::NotIntegral(f.to_string()));
    }
    if !f.is_separable() {
        return Err(Error::InseparableInput(f.to_string()));
    }
    let f_bar = f.reduce()?;
    let residue = field.residue_field();
    let g_bar = squarefree_decomposition(&f_bar)
        .into_iter()
        .fold(ResiduePoly::one(residue), |acc, (a, _)| acc.mul(&a));
    let (h_bar, rest) = f_bar.div_rem(&g_bar)?;
    if !rest.is_zero() {
        return Err(Error::Internal(format!("{g_bar} does not divide {f_bar}")));
    }
    let g = Poly::lift(field, &g_bar);
    let h = Poly::lift(field, &h_bar);
    let t = g.mul(&h).sub(f).div_scalar(&field.from_int(*p as i64))?;
    let t_bar = t.reduce()?;
    Ok(t_bar.gcd(&g_bar).gcd(&h_bar).is_one())
}

fn is_squarefree_integer(d: &BigInt) -> bool {
    let n = d.abs();
    let mut k = BigInt::from(2);
    while &k * &k <= n {
        if n.is_multiple_of(&(&k * &k)) {
            return false;
        }
        k += 1;
    }
    true
}

/// Whether `Z_(p)[sqrt(d)]` is integrally closed, for squarefree `d != 0, 1`.
pub fn quadratic_table(d: i64, p: u64) -> Result<bool> {
    if !crate::finite_field::is_prime(p) {
        return Err(Error::Precondition(format!("{p} is not prime")));
    }
    let big = BigInt::from(d);
    if d == 0 || d == 1 || !is_squarefree_integer(&big) {
        return Err(Error::Precondition(format!(
            "{d} must be a squarefree integer other than 0 and 1"
        )));
    }
    Ok(!(p == 2 && big.mod_floor(&BigInt::from(4)) == BigInt::from(1)))
}

const EXHAUSTIVE_MAX_DEGREE: usize = 6;
const EXHAUSTIVE_MAX_FIELD: u64 = 9;

fn monic_of_degree(field: &ResidueField, degree: usize, index: u64) -> ResiduePoly {
    let q = field.order();
    let mut coeffs = Vec::with_capacity(degree + 1);
    let mut rest = index;
    for _ in 0..degree {
        coeffs.push(rest % q);
        rest /= q;
    }
    coeffs.push(1);
    ResiduePoly::new(field.clone(), coeffs)
}

/// Factorization by trial division with every monic polynomial, in increasing degree.
pub fn exhaustive_factor(poly: &ResiduePoly) -> Result<ResidueFactorization> {
    let field = poly.field().clone();
    let degree = match poly.degree() {
        Some(d) if d >= 1 => d,
        _ => {
            return Err(Error::Precondition(format!(
                "{poly} must have positive degree"
            )))
        }
    };
    if degree > EXHAUSTIVE_MAX_DEGREE || field.order() > EXHAUSTIVE_MAX_FIELD {
        return Err(Error::Precondition(format!(
            "exhaustive factorization is limited to degree {EXHAUSTIVE_MAX_DEGREE} over fields of size at most {EXHAUSTIVE_MAX_FIELD}"
        )));
    }
    let unit = poly.leading();
    let mut rest = poly.make_monic();
    let mut factors = Vec::new();
    let mut d = 1;
    while 2 * d <= rest.degree().unwrap_or(0) {
        let count = field.order().pow(d as u32);
        for index in 0..count {
            let candidate = monic_of_degree(&field, d, index);
            let mut l = 0;
            loop {
                let (q, r) = rest.div_rem(&candidate)?;
                if !r.is_zero() {
                    break;
                }
                rest = q;
                l += 1;
            }
            if l > 0 {
                factors.push((candidate, l));
            }
        }
        d += 1;
    }
    if rest.degree().unwrap_or(0) > 0 {
        factors.push((rest, 1));
    }
    factors.sort_by(|a, b| match a.0.canonical_cmp(&b.0) {
        Ordering::Equal => a.1.cmp(&b.1),
        other => other,
    });
    Ok(ResidueFactorization { unit, factors })
}

/// [`exhaustive_factor`] tagged with its source.
pub fn exhaustive_verdict(poly: &ResiduePoly) -> Result<OracleVerdict> {
    Ok(OracleVerdict {
        source: OracleSource::ExhaustiveFactor,
        verdict: OracleAnswer::Factorization(exhaustive_factor(poly)?),
    })
}

/// [`classical_dedekind_qp`] tagged with its source.
pub fn classical_verdict(f: &Poly) -> Result<OracleVerdict> {
    Ok(OracleVerdict {
        source: OracleSource::ClassicalGcdForm,
        verdict: OracleAnswer::Closed(classical_dedekind_qp(f)?),
    })
}

/// [`quadratic_table`] tagged with its source.
pub fn quadratic_verdict(d: i64, p: u64) -> Result<OracleVerdict> {
    Ok(OracleVerdict {
        source: OracleSource::QuadraticTable,
        verdict: OracleAnswer::Closed(quadratic_table(d, p)?),
    })
}

/// `x^2 - d` over `Q` with the `p`-adic valuation.
pub fn quadratic_poly(d: i64, p: u64) -> Result<Poly> {
    let field = ValuedField::p_adic(p)?;
    Ok(Poly::from_ints(&field, &[-d, 0, 1]))
}

/// Squarefree integers in `[lo, hi]` other than `0` and `1`.
pub fn squarefree_range(lo: i64, hi: i64) -> Vec<i64> {
    (lo..=hi)
        .filter(|&d| d != 0 && d != 1 && is_squarefree_integer(&BigInt::from(d)))
        .collect()
}
