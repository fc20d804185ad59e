//! Exact base fields with a valuation: `(Q, v_p)`, `F_q(X, Y)` with the rank-two
//! lexicographic valuation, `F_q(X)` with `v(X) = lambda`, and `Q(X)` with
//! `v(sum a_i X^i) = min(v_p(a_i) + i*sqrt(d))`.

mod ratfun;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
pub use crate::finite_field::{ResidueElement, ResidueField};
use crate::valuegroup::{GroupDescriptor, GroupElement};
pub use ratfun::{CoeffField, MPoly, Monomial, RatFun, Rationals};

/// A concrete valued field together with its residue field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValuedField {
    /// `Q` with the `p`-adic valuation.
    PAdic { p: u64, residue: ResidueField },
    /// `F_q(X, Y)`, `v(sum a_ij X^i Y^j) = lexicographic min of (i, j)`.
    LexBivariate { coeffs: ResidueField },
    /// `F_q(X)`, `v(sum a_i X^i) = (min i) * lambda` with `lambda = sqrt(d)` kept symbolic.
    LambdaTrivial { coeffs: ResidueField, lambda: u32 },
    /// `Q(X)`, `v(sum a_i X^i) = min(v_p(a_i) + i*sqrt(d))`.
    LambdaComposite {
        p: u64,
        lambda: u32,
        residue: ResidueField,
    },
}

impl ValuedField {
    pub fn p_adic(p: u64) -> Result<Self> {
        Ok(ValuedField::PAdic {
            p,
            residue: ResidueField::prime(p)?,
        })
    }

    pub fn lex_bivariate(q: u64) -> Result<Self> {
        Ok(ValuedField::LexBivariate {
            coeffs: ResidueField::new(q)?,
        })
    }

    pub fn lambda_trivial(q: u64, lambda: u32) -> Result<Self> {
        GroupDescriptor::dense_quadratic(lambda).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(ValuedField::LambdaTrivial {
            coeffs: ResidueField::new(q)?,
            lambda,
        })
    }

    pub fn lambda_composite(p: u64, lambda: u32) -> Result<Self> {
        GroupDescriptor::dense_quadratic(lambda).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(ValuedField::LambdaComposite {
            p,
            lambda,
            residue: ResidueField::prime(p)?,
        })
    }

    pub fn value_group(&self) -> GroupDescriptor {
        match self {
            ValuedField::PAdic { .. } => GroupDescriptor::IntegerRankOne,
            ValuedField::LexBivariate { .. } => GroupDescriptor::LexPairRankTwo,
            ValuedField::LambdaTrivial { .. } => GroupDescriptor::ScaledInteger,
            ValuedField::LambdaComposite { lambda, .. } => {
                GroupDescriptor::DenseQuadratic { d: *lambda }
            }
        }
    }

    pub fn residue_field(&self) -> &ResidueField {
        match self {
            ValuedField::PAdic { residue, .. } | ValuedField::LambdaComposite { residue, .. } => {
                residue
            }
            ValuedField::LexBivariate { coeffs } | ValuedField::LambdaTrivial { coeffs, .. } => {
                coeffs
            }
        }
    }

    /// Characteristic of the field itself (0 for the `Q`-based fields).
    pub fn characteristic(&self) -> u64 {
        match self {
            ValuedField::PAdic { .. } | ValuedField::LambdaComposite { .. } => 0,
            ValuedField::LexBivariate { coeffs } | ValuedField::LambdaTrivial { coeffs, .. } => {
                coeffs.characteristic()
            }
        }
    }

    /// `min` of the positive values, when it exists.
    pub fn sigma(&self) -> Option<GroupElement> {
        GroupElement::min_positive(self.value_group())
    }

    pub fn has_y(&self) -> bool {
        matches!(self, ValuedField::LexBivariate { .. })
    }

    pub fn has_x(&self) -> bool {
        !matches!(self, ValuedField::PAdic { .. })
    }

    fn wrap(&self, repr: Repr) -> FieldElement {
        FieldElement {
            field: self.clone(),
            repr,
        }
    }

    fn from_mpoly_q(&self, p: MPoly<BigRational>) -> FieldElement {
        self.wrap(Repr::QFunction(RatFun::from_poly(&Rationals, p)))
    }

    fn from_mpoly_f(&self, p: MPoly<u64>) -> FieldElement {
        self.wrap(Repr::FqFunction(RatFun::from_poly(self.residue_field(), p)))
    }

    pub fn from_bigint(&self, n: &BigInt) -> FieldElement {
        match self {
            ValuedField::PAdic { .. } => {
                self.wrap(Repr::Rational(BigRational::from_integer(n.clone())))
            }
            ValuedField::LambdaComposite { .. } => {
                self.from_mpoly_q(MPoly::constant(&Rationals, Rationals.from_int(n)))
            }
            _ => {
                let k = self.residue_field();
                self.from_mpoly_f(MPoly::constant(k, k.from_int(n)))
            }
        }
    }

    pub fn from_int(&self, n: i64) -> FieldElement {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn zero(&self) -> FieldElement {
        self.from_int(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    /// `num / den` as an element of the prime field image.
    pub fn rational(&self, num: i64, den: i64) -> Result<FieldElement> {
        self.from_int(num).checked_div(&self.from_int(den))
    }

    /// The monomial `X^x Y^y` with unit coefficient.
    pub fn monomial(&self, x: u32, y: u32) -> Result<FieldElement> {
        if (x > 0 && !self.has_x()) || (y > 0 && !self.has_y()) {
            return Err(Error::Parse(format!("variable not available in {self}")));
        }
        let m = Monomial::new(x, y);
        Ok(match self {
            ValuedField::PAdic { .. } => self.one(),
            ValuedField::LambdaComposite { .. } => {
                self.from_mpoly_q(MPoly::monomial(&Rationals, m, BigRational::one()))
            }
            _ => self.from_mpoly_f(MPoly::monomial(self.residue_field(), m, 1)),
        })
    }

    pub fn var_x(&self) -> Result<FieldElement> {
        self.monomial(1, 0)
    }

    pub fn var_y(&self) -> Result<FieldElement> {
        self.monomial(0, 1)
    }

    /// The generator `t` of a non-prime coefficient field `F_q`.
    pub fn generator_t(&self) -> Result<FieldElement> {
        match self {
            ValuedField::LexBivariate { coeffs } | ValuedField::LambdaTrivial { coeffs, .. } => {
                let t = coeffs
                    .generator()
                    .ok_or_else(|| Error::Parse(format!("{coeffs} is a prime field; no t")))?;
                Ok(self.from_mpoly_f(MPoly::constant(coeffs, t)))
            }
            _ => Err(Error::Parse(format!("t is not available in {self}"))),
        }
    }

    /// Canonical lift of a residue: an integer in `[0, p)` or a constant of `F_q`.
    pub fn lift(&self, r: &ResidueElement) -> FieldElement {
        debug_assert_eq!(r.field(), self.residue_field());
        self.lift_raw(r.value())
    }

    pub(crate) fn lift_raw(&self, value: u64) -> FieldElement {
        match self {
            ValuedField::PAdic { .. } | ValuedField::LambdaComposite { .. } => {
                self.from_bigint(&BigInt::from(value))
            }
            _ => self.from_mpoly_f(MPoly::constant(self.residue_field(), value)),
        }
    }

    /// An element whose valuation is exactly `value`.
    pub fn element_of_value(&self, value: &GroupElement) -> Result<FieldElement> {
        let bad = || Error::NoUniformizerAtValue(value.to_string());
        if value.group() != self.value_group() {
            return Err(bad());
        }
        let (a, b) = value.coords().ok_or_else(bad)?;
        let a = a.to_i64().ok_or_else(bad)?;
        let b = b.to_i64().ok_or_else(bad)?;
        Ok(match self {
            ValuedField::PAdic { p, .. } => self.from_int(*p as i64).powi(a)?,
            ValuedField::LexBivariate { .. } => self.var_x()?.powi(a)?.mul(&self.var_y()?.powi(b)?),
            ValuedField::LambdaTrivial { .. } => self.var_x()?.powi(a)?,
            ValuedField::LambdaComposite { p, .. } => self
                .from_int(*p as i64)
                .powi(a)?
                .mul(&self.var_x()?.powi(b)?),
        })
    }

    /// An element of value `min(positive values)`; `None` when there is no minimum.
    pub fn uniformizer(&self) -> Option<FieldElement> {
        let sigma = self.sigma()?;
        self.element_of_value(&sigma).ok()
    }

    /// Parses an element written in the polynomial grammar (no main variable).
    pub fn parse_element(&self, text: &str) -> Result<FieldElement> {
        crate::parse::parse_field_element(self, text)
    }
}

impl fmt::Display for ValuedField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValuedField::PAdic { p, .. } => write!(f, "qp:{p}"),
            ValuedField::LexBivariate { coeffs } => write!(f, "lex:{coeffs}"),
            ValuedField::LambdaTrivial { coeffs, lambda } => {
                write!(f, "lambda-trivial:{coeffs}:sqrt{lambda}")
            }
            ValuedField::LambdaComposite { p, lambda, .. } => {
                write!(f, "lambda-composite:p{p}:sqrt{lambda}")
            }
        }
    }
}

impl FromStr for ValuedField {
    type Err = Error;

    /// `qp:5`, `lex:F2`, `lambda-trivial:F3:sqrt2`, `lambda-composite:p2:sqrt2`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unrecognized field descriptor {s:?}"));
        let parts: Vec<&str> = s.trim().split(':').collect();
        let number = |text: &str, prefix: &str| -> Result<u64> {
            text.strip_prefix(prefix)
                .and_then(|n| n.parse::<u64>().ok())
                .ok_or_else(bad)
        };
        let lambda = |part: Option<&&str>| -> Result<u32> {
            match part {
                None => Ok(2),
                Some(text) => text
                    .strip_prefix("sqrt")
                    .and_then(|n| n.parse::<u32>().ok())
                    .ok_or_else(bad),
            }
        };
        match parts.as_slice() {
            ["qp", p] => ValuedField::p_adic(number(p, "")?),
            ["lex", q] => ValuedField::lex_bivariate(number(q, "F")?),
            ["lambda-trivial", q, rest @ ..] if rest.len() <= 1 => {
                ValuedField::lambda_trivial(number(q, "F")?, lambda(rest.first())?)
            }
            ["lambda-composite", p, rest @ ..] if rest.len() <= 1 => {
                ValuedField::lambda_composite(number(p, "p")?, lambda(rest.first())?)
            }
            _ => Err(bad()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Repr {
    Rational(BigRational),
    FqFunction(RatFun<u64>),
    QFunction(RatFun<BigRational>),
}

/// An exact element of a [`ValuedField`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldElement {
    field: ValuedField,
    repr: Repr,
}

fn padic_valuation(n: &BigInt, p: u64) -> i64 {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

fn rational_valuation(x: &BigRational, p: u64) -> i64 {
    padic_valuation(x.numer(), p) - padic_valuation(x.denom(), p)
}

/// Residue of a `p`-adic unit.
fn rational_residue(x: &BigRational, k: &ResidueField) -> u64 {
    let num = k.from_int(x.numer());
    let den = k.from_int(x.denom());
    k.div(num, den).expect("p-adic unit has a unit denominator")
}

impl FieldElement {
    pub fn field(&self) -> &ValuedField {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Rational(x) => x.is_zero(),
            Repr::FqFunction(x) => x.is_zero(),
            Repr::QFunction(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.field.one()
    }

    /// Value of a nonzero term of a numerator or denominator.
    fn term_value_f(&self, m: &Monomial) -> GroupElement {
        match &self.field {
            ValuedField::LexBivariate { .. } => GroupElement::lex(m.x, m.y),
            _ => GroupElement::scaled(m.x),
        }
    }

    fn term_value_q(&self, m: &Monomial, c: &BigRational) -> GroupElement {
        let ValuedField::LambdaComposite { p, lambda, .. } = &self.field else {
            unreachable!("rational-function coefficients only occur over Q(X)");
        };
        GroupElement::quadratic(*lambda, rational_valuation(c, *p), m.x)
    }

    fn min_term_f<'a>(&self, poly: &'a MPoly<u64>) -> (GroupElement, &'a u64) {
        poly.terms()
            .map(|(m, c)| (self.term_value_f(m), c))
            .min_by(|a, b| a.0.compare(&b.0).expect("same group"))
            .expect("nonzero polynomial")
    }

    fn min_term_q<'a>(&self, poly: &'a MPoly<BigRational>) -> (GroupElement, &'a BigRational) {
        poly.terms()
            .map(|(m, c)| (self.term_value_q(m, c), c))
            .min_by(|a, b| a.0.compare(&b.0).expect("same group"))
            .expect("nonzero polynomial")
    }

    pub fn valuation(&self) -> GroupElement {
        if self.is_zero() {
            return GroupElement::infinity(self.field.value_group());
        }
        match (&self.repr, &self.field) {
            (Repr::Rational(x), ValuedField::PAdic { p, .. }) => {
                GroupElement::integer(rational_valuation(x, *p))
            }
            (Repr::FqFunction(x), _) => &self.min_term_f(x.num()).0 - &self.min_term_f(x.den()).0,
            (Repr::QFunction(x), _) => &self.min_term_q(x.num()).0 - &self.min_term_q(x.den()).0,
            _ => unreachable!("representation matches the field"),
        }
    }

    pub fn is_integral(&self) -> bool {
        !self
            .valuation()
            .compare(&GroupElement::zero(self.field.value_group()))
            .map(|o| o == Ordering::Less)
            .unwrap_or(true)
    }

    /// Member of the maximal ideal (positive valuation, or zero).
    pub fn in_maximal_ideal(&self) -> bool {
        let v = self.valuation();
        v.is_infinite() || v.is_positive()
    }

    /// Residue of a unit of the valuation ring.
    pub fn residue(&self) -> Result<ResidueElement> {
        let v = self.valuation();
        if !v.is_zero() {
            return Err(Error::NotAUnit(format!("{self} has value {v}")));
        }
        let k = self.field.residue_field();
        let value = match &self.repr {
            Repr::Rational(x) => rational_residue(x, k),
            Repr::FqFunction(x) => {
                // The minimal terms of numerator and denominator sit at the same monomial.
                let (_, a) = self.min_term_f(x.num());
                let (_, b) = self.min_term_f(x.den());
                k.div(*a, *b)?
            }
            Repr::QFunction(x) => {
                let (_, a) = self.min_term_q(x.num());
                let (_, b) = self.min_term_q(x.den());
                rational_residue(&(a / b), k)
            }
        };
        Ok(k.element(value))
    }

    /// Image in the residue field of an element of the valuation ring.
    pub fn reduce(&self) -> Result<ResidueElement> {
        let v = self.valuation();
        if v.is_infinite() || v.is_positive() {
            return Ok(self.field.residue_field().element(0));
        }
        if v.is_zero() {
            return self.residue();
        }
        Err(Error::NotIntegral(format!("{self} has value {v}")))
    }

    fn binary(&self, other: &Self, op: Op) -> FieldElement {
        assert_eq!(self.field, other.field, "elements of different fields");
        let repr = match (&self.repr, &other.repr) {
            (Repr::Rational(a), Repr::Rational(b)) => Repr::Rational(match op {
                Op::Add => a + b,
                Op::Sub => a - b,
                Op::Mul => a * b,
            }),
            (Repr::FqFunction(a), Repr::FqFunction(b)) => {
                let k = self.field.residue_field();
                Repr::FqFunction(match op {
                    Op::Add => a.add(k, b),
                    Op::Sub => a.sub(k, b),
                    Op::Mul => a.mul(k, b),
                })
            }
            (Repr::QFunction(a), Repr::QFunction(b)) => Repr::QFunction(match op {
                Op::Add => a.add(&Rationals, b),
                Op::Sub => a.sub(&Rationals, b),
                Op::Mul => a.mul(&Rationals, b),
            }),
            _ => unreachable!("same field implies same representation"),
        };
        self.field.wrap(repr)
    }

    pub fn add(&self, other: &Self) -> FieldElement {
        self.binary(other, Op::Add)
    }

    pub fn sub(&self, other: &Self) -> FieldElement {
        self.binary(other, Op::Sub)
    }

    pub fn mul(&self, other: &Self) -> FieldElement {
        self.binary(other, Op::Mul)
    }

    pub fn neg(&self) -> FieldElement {
        self.field.zero().sub(self)
    }

    pub fn inv(&self) -> Result<FieldElement> {
        let repr = match &self.repr {
            Repr::Rational(a) => {
                if a.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Repr::Rational(a.recip())
            }
            Repr::FqFunction(a) => Repr::FqFunction(
                a.inv(self.field.residue_field())
                    .ok_or(Error::DivisionByZero)?,
            ),
            Repr::QFunction(a) => Repr::QFunction(a.inv(&Rationals).ok_or(Error::DivisionByZero)?),
        };
        Ok(self.field.wrap(repr))
    }

    pub fn checked_div(&self, other: &Self) -> Result<FieldElement> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: u32) -> FieldElement {
        let mut acc = self.field.one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Integer power; negative exponents invert.
    pub fn powi(&self, e: i64) -> Result<FieldElement> {
        let magnitude = u32::try_from(e.unsigned_abs())
            .map_err(|_| Error::Domain(format!("exponent {e} too large")))?;
        let p = self.pow(magnitude);
        if e < 0 {
            p.inv()
        } else {
            Ok(p)
        }
    }

    /// Plain integer rendering, when the element is an integer constant.
    pub(crate) fn as_integer_literal(&self) -> Option<BigInt> {
        match &self.repr {
            Repr::Rational(x) if x.is_integer() => Some(x.to_integer()),
            Repr::QFunction(x) if x.den().is_one(&Rationals) => x
                .num()
                .as_constant(&Rationals)
                .filter(|c| c.is_integer())
                .map(|c| c.to_integer()),
            Repr::FqFunction(x) if x.den().is_one(self.field.residue_field()) => {
                let k = self.field.residue_field();
                x.num()
                    .as_constant(k)
                    .filter(|c| !k.is_compound(*c) && (k.degree() == 1 || *c < k.characteristic()))
                    .map(BigInt::from)
            }
            _ => None,
        }
    }

    /// True if the rendering starts with a minus sign and is a single signed term.
    pub(crate) fn is_negative_integer(&self) -> bool {
        self.as_integer_literal().is_some_and(|n| n.is_negative())
    }
}

#[derive(Clone, Copy)]
enum Op {
    Add,
    Sub,
    Mul,
}

fn eval_mpoly<E: Clone + fmt::Debug + PartialEq + Eq>(
    p: &MPoly<E>,
    target: &ResidueField,
    coeff: impl Fn(&E) -> Option<u64>,
    x: u64,
    y: u64,
) -> Option<u64> {
    let mut acc = 0;
    for (m, c) in p.terms() {
        let term = target.mul(
            coeff(c)?,
            target.mul(target.pow(x, m.x as u128), target.pow(y, m.y as u128)),
        );
        acc = target.add(acc, term);
    }
    Some(acc)
}

fn rational_mod(r: &BigRational, target: &ResidueField) -> Option<u64> {
    let den = target.from_int(r.denom());
    if den == 0 {
        return None;
    }
    target.div(target.from_int(r.numer()), den).ok()
}

impl FieldElement {
    /// Image under `X -> x`, `Y -> y` in a finite field whose prime field receives the
    /// constants. `None` when a denominator vanishes or the constants do not embed.
    pub(crate) fn specialize(&self, target: &ResidueField, x: u64, y: u64) -> Option<u64> {
        let ratio = |num: Option<u64>, den: Option<u64>| match (num, den) {
            (Some(n), Some(d)) if d != 0 => target.div(n, d).ok(),
            _ => None,
        };
        match &self.repr {
            Repr::Rational(r) => rational_mod(r, target),
            Repr::FqFunction(f) => {
                let k = self.field.residue_field();
                if k.degree() != 1 || k.characteristic() != target.characteristic() {
                    return None;
                }
                let coeff = |c: &u64| Some(*c);
                ratio(
                    eval_mpoly(f.num(), target, coeff, x, y),
                    eval_mpoly(f.den(), target, coeff, x, y),
                )
            }
            Repr::QFunction(f) => {
                let coeff = |c: &BigRational| rational_mod(c, target);
                ratio(
                    eval_mpoly(f.num(), target, coeff, x, y),
                    eval_mpoly(f.den(), target, coeff, x, y),
                )
            }
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Rational(x) => write!(f, "{x}"),
            Repr::FqFunction(x) => write!(f, "{}", x.render(self.field.residue_field())),
            Repr::QFunction(x) => write!(f, "{}", x.render(&Rationals)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(p: u64) -> ValuedField {
        ValuedField::p_adic(p).unwrap()
    }

    #[test]
    fn padic_valuation_and_residue() {
        let k = qp(2);
        assert_eq!(k.from_int(12).valuation(), GroupElement::integer(2));
        let k5 = qp(5);
        let x = k5.rational(7, 3).unwrap();
        assert_eq!(x.residue().unwrap().value(), 4);
        let half = k.rational(1, 2).unwrap();
        assert!(matches!(half.residue(), Err(Error::NotAUnit(_))));
        assert!(k.zero().valuation().is_infinite());
    }

    #[test]
    fn lex_valuation_and_residue() {
        let k = ValuedField::lex_bivariate(2).unwrap();
        let x = k.var_x().unwrap();
        let y = k.var_y().unwrap();
        assert_eq!(y.add(&x.mul(&y)).valuation(), GroupElement::lex(0, 1));
        let num = k.one().add(&x).add(&y);
        let den = k.one().add(&x.mul(&y));
        assert_eq!(num.checked_div(&den).unwrap().residue().unwrap().value(), 1);
        let a = x.checked_div(&x.add(&y)).unwrap();
        let b = x.add(&y).checked_div(&x).unwrap();
        assert!(a.mul(&b).is_one());
    }

    #[test]
    fn composite_valuation_picks_the_exact_minimum() {
        let k = ValuedField::lambda_composite(2, 2).unwrap();
        let x = k.var_x().unwrap();
        // v(2 + X) = min(1, sqrt 2) = 1
        assert_eq!(
            k.from_int(2).add(&x).valuation(),
            GroupElement::quadratic(2, 1, 0)
        );
        assert!(k.uniformizer().is_none());
        // residue of (3 + X)/(1 + 2X) = 3 = 1 mod 2
        let r = k
            .from_int(3)
            .add(&x)
            .checked_div(&k.one().add(&k.from_int(2).mul(&x)))
            .unwrap();
        assert_eq!(r.residue().unwrap().value(), 1);
    }

    #[test]
    fn lifts_round_trip() {
        let k = qp(7);
        for r in 0..7 {
            let e = k.residue_field().element(r);
            let lifted = k.lift(&e);
            assert_eq!(lifted.residue().map(|x| x.value()).unwrap_or(0), r);
            assert_eq!(lifted.reduce().unwrap(), e);
        }
        assert_eq!(
            qp(5).lift(&qp(5).residue_field().element(4)),
            qp(5).from_int(4)
        );
        let lex = ValuedField::lex_bivariate(2).unwrap();
        assert!(lex.lift(&lex.residue_field().element(1)).is_one());
    }

    #[test]
    fn uniformizers() {
        assert_eq!(qp(3).uniformizer(), Some(qp(3).from_int(3)));
        let lex = ValuedField::lex_bivariate(2).unwrap();
        assert_eq!(lex.uniformizer(), Some(lex.var_y().unwrap()));
        let lt = ValuedField::lambda_trivial(3, 2).unwrap();
        assert_eq!(lt.uniformizer(), Some(lt.var_x().unwrap()));
        for field in [qp(3), lex, lt] {
            assert_eq!(
                field.uniformizer().unwrap().valuation(),
                field.sigma().unwrap()
            );
        }
    }

    #[test]
    fn elements_of_every_value() {
        let lex = ValuedField::lex_bivariate(3).unwrap();
        let v = GroupElement::lex(1, -3);
        assert_eq!(lex.element_of_value(&v).unwrap().valuation(), v);
        let comp = ValuedField::lambda_composite(3, 5).unwrap();
        let w = GroupElement::quadratic(5, -2, 3);
        assert_eq!(comp.element_of_value(&w).unwrap().valuation(), w);
    }

    #[test]
    fn descriptor_round_trip() {
        for text in [
            "qp:5",
            "lex:F2",
            "lex:F9",
            "lambda-trivial:F3:sqrt2",
            "lambda-composite:p2:sqrt2",
        ] {
            let field: ValuedField = text.parse().unwrap();
            assert_eq!(field.to_string(), text);
        }
        let err = "qp:0".parse::<ValuedField>().unwrap_err();
        assert_eq!(err, Error::Parse("0 is not prime".into()));
        assert!("lex:F6".parse::<ValuedField>().is_err());
        assert!("lambda-composite:p2:sqrt4".parse::<ValuedField>().is_err());
        assert!("hensel:3".parse::<ValuedField>().is_err());
    }

    #[test]
    fn arithmetic_basics() {
        let k = qp(3);
        let sum = k.rational(1, 2).unwrap().add(&k.rational(1, 3).unwrap());
        assert_eq!(sum, k.rational(5, 6).unwrap());
        assert_eq!(k.zero().inv(), Err(Error::DivisionByZero));
        assert_eq!(sum.sub(&sum), k.zero());
    }
}
