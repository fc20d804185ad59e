//! Totally ordered abelian value groups.
//!
//! Four concrete groups are supported:
//!
//! * `IntegerRankOne`: the integers with their usual order.
//! * `LexPairRankTwo`: `Z x Z` ordered lexicographically, first coordinate dominant.
//! * `DenseQuadratic { d }`: the rank-one group `Z + Z*sqrt(d)` inside the reals,
//!   with `d` a positive non-square. It is dense, so it has no minimum positive element.
//! * `ScaledInteger`: `lambda * Z` for a symbolic positive unit `lambda`.
//!
//! Every comparison is carried out in exact integer arithmetic.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupDescriptor {
    IntegerRankOne,
    LexPairRankTwo,
    /// `Z + Z*sqrt(d)` with `d` positive and not a perfect square.
    DenseQuadratic {
        d: u32,
    },
    ScaledInteger,
}

impl GroupDescriptor {
    /// Validated constructor for the dense quadratic group.
    pub fn dense_quadratic(d: u32) -> Result<Self> {
        if d == 0 {
            return Err(Error::Domain("sqrt(0) is not a positive irrational".into()));
        }
        let r = d.sqrt();
        if r * r == d {
            return Err(Error::Domain(format!("{d} is a perfect square")));
        }
        Ok(GroupDescriptor::DenseQuadratic { d })
    }

    fn uses_second_coordinate(self) -> bool {
        matches!(
            self,
            GroupDescriptor::LexPairRankTwo | GroupDescriptor::DenseQuadratic { .. }
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Value {
    Finite(BigInt, BigInt),
    Infinity,
}

/// An element of a value group, or the symbol `inf` standing for the value of zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement {
    group: GroupDescriptor,
    value: Value,
}

impl GroupElement {
    /// Builds `(a, b)`. For the rank-one groups `b` must be zero.
    pub fn new(group: GroupDescriptor, a: BigInt, b: BigInt) -> Result<Self> {
        if !group.uses_second_coordinate() && !b.is_zero() {
            return Err(Error::Domain(format!(
                "{group:?} elements have a single coordinate"
            )));
        }
        Ok(GroupElement {
            group,
            value: Value::Finite(a, b),
        })
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        GroupElement {
            group: GroupDescriptor::IntegerRankOne,
            value: Value::Finite(n.into(), BigInt::zero()),
        }
    }

    pub fn lex(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        GroupElement {
            group: GroupDescriptor::LexPairRankTwo,
            value: Value::Finite(a.into(), b.into()),
        }
    }

    /// `a + b*sqrt(d)`. Panics if `d` is a square; use [`GroupDescriptor::dense_quadratic`]
    /// to validate untrusted input first.
    pub fn quadratic(d: u32, a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        let group = GroupDescriptor::dense_quadratic(d).expect("d must be a positive non-square");
        GroupElement {
            group,
            value: Value::Finite(a.into(), b.into()),
        }
    }

    /// `n * lambda`.
    pub fn scaled(n: impl Into<BigInt>) -> Self {
        GroupElement {
            group: GroupDescriptor::ScaledInteger,
            value: Value::Finite(n.into(), BigInt::zero()),
        }
    }

    pub fn zero(group: GroupDescriptor) -> Self {
        GroupElement {
            group,
            value: Value::Finite(BigInt::zero(), BigInt::zero()),
        }
    }

    pub fn infinity(group: GroupDescriptor) -> Self {
        GroupElement {
            group,
            value: Value::Infinity,
        }
    }

    pub fn group(&self) -> GroupDescriptor {
        self.group
    }

    pub fn is_infinite(&self) -> bool {
        self.value == Value::Infinity
    }

    /// Coordinates of a finite element.
    pub fn coords(&self) -> Option<(&BigInt, &BigInt)> {
        match &self.value {
            Value::Finite(a, b) => Some((a, b)),
            Value::Infinity => None,
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.group != other.group {
            return Err(Error::Domain(format!(
                "cannot combine elements of {:?} and {:?}",
                self.group, other.group
            )));
        }
        Ok(())
    }

    pub fn compare(&self, other: &Self) -> Result<Ordering> {
        self.check_same(other)?;
        let ((a, b), (c, e)) = match (&self.value, &other.value) {
            (Value::Infinity, Value::Infinity) => return Ok(Ordering::Equal),
            (Value::Infinity, _) => return Ok(Ordering::Greater),
            (_, Value::Infinity) => return Ok(Ordering::Less),
            (Value::Finite(a, b), Value::Finite(c, e)) => ((a, b), (c, e)),
        };
        Ok(match self.group {
            GroupDescriptor::IntegerRankOne | GroupDescriptor::ScaledInteger => a.cmp(c),
            GroupDescriptor::LexPairRankTwo => a.cmp(c).then_with(|| b.cmp(e)),
            GroupDescriptor::DenseQuadratic { d } => quadratic_sign(&(a - c), &(b - e), d),
        })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let value = match (&self.value, &other.value) {
            (Value::Finite(a, b), Value::Finite(c, e)) => Value::Finite(a + c, b + e),
            _ => Value::Infinity,
        };
        Ok(GroupElement {
            group: self.group,
            value,
        })
    }

    /// `self - other`; subtracting infinity is a domain error.
    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let value = match (&self.value, &other.value) {
            (_, Value::Infinity) => {
                return Err(Error::Domain("cannot subtract inf".into()));
            }
            (Value::Infinity, _) => Value::Infinity,
            (Value::Finite(a, b), Value::Finite(c, e)) => Value::Finite(a - c, b - e),
        };
        Ok(GroupElement {
            group: self.group,
            value,
        })
    }

    pub fn scalar_mul(&self, n: &BigInt) -> Result<Self> {
        let value = match &self.value {
            Value::Finite(a, b) => Value::Finite(a * n, b * n),
            Value::Infinity if n.is_positive() => Value::Infinity,
            Value::Infinity => {
                return Err(Error::Domain("inf times a non-positive integer".into()));
            }
        };
        Ok(GroupElement {
            group: self.group,
            value,
        })
    }

    pub fn is_positive(&self) -> bool {
        self.compare(&GroupElement::zero(self.group)) == Ok(Ordering::Greater)
    }

    pub fn is_zero(&self) -> bool {
        self.value == Value::Finite(BigInt::zero(), BigInt::zero())
    }

    /// The smallest strictly positive element, when the group has one.
    pub fn min_positive(group: GroupDescriptor) -> Option<Self> {
        match group {
            GroupDescriptor::IntegerRankOne => Some(GroupElement::integer(1)),
            GroupDescriptor::ScaledInteger => Some(GroupElement::scaled(1)),
            GroupDescriptor::LexPairRankTwo => Some(GroupElement::lex(0, 1)),
            GroupDescriptor::DenseQuadratic { .. } => None,
        }
    }

    /// Returns `m` with `self == m * unit`, if such an integer exists.
    pub fn multiple_of(&self, unit: &Self) -> Option<BigInt> {
        if self.group != unit.group {
            return None;
        }
        let (a, b) = self.coords()?;
        let (c, e) = unit.coords()?;
        let pick = |x: &BigInt, y: &BigInt| -> Option<Option<BigInt>> {
            if y.is_zero() {
                return if x.is_zero() { Some(None) } else { None };
            }
            let (q, r) = x.div_rem(y);
            if r.is_zero() {
                Some(Some(q))
            } else {
                None
            }
        };
        match (pick(a, c)?, pick(b, e)?) {
            (Some(m1), Some(m2)) if m1 == m2 => Some(m1),
            (Some(m), None) | (None, Some(m)) => Some(m),
            (None, None) => Some(BigInt::zero()),
            _ => None,
        }
    }

    /// For the dense group, a positive element strictly below `self` (which must be positive).
    ///
    /// Built from continued-fraction convergents `h/k` of `sqrt(d)`: `|h - k*sqrt(d)| < 1/k`.
    pub fn positive_element_below(&self) -> Option<Self> {
        let GroupDescriptor::DenseQuadratic { d } = self.group else {
            return None;
        };
        if !self.is_positive() || self.is_infinite() {
            return None;
        }
        let d_big = BigInt::from(d);
        let a0 = BigInt::from(d.sqrt());
        let (mut m, mut den, mut a) = (BigInt::zero(), BigInt::one(), a0.clone());
        let (mut h_prev, mut h) = (BigInt::one(), a0.clone());
        let (mut k_prev, mut k) = (BigInt::zero(), BigInt::one());
        loop {
            let mut candidate = GroupElement::quadratic(d, h.clone(), -k.clone());
            if !candidate.is_positive() {
                candidate = -&candidate;
            }
            if candidate.compare(self) == Ok(Ordering::Less) {
                return Some(candidate);
            }
            m = &den * &a - &m;
            den = (&d_big - &m * &m) / &den;
            a = (&a0 + &m) / &den;
            let h_next = &a * &h + &h_prev;
            let k_next = &a * &k + &k_prev;
            h_prev = std::mem::replace(&mut h, h_next);
            k_prev = std::mem::replace(&mut k, k_next);
        }
    }

    /// Parses the textual rendering produced by `Display`.
    pub fn parse_in(group: GroupDescriptor, text: &str) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("cannot read {text:?} as an element of {group:?}"));
        if s == "inf" {
            return Ok(GroupElement::infinity(group));
        }
        match group {
            GroupDescriptor::IntegerRankOne => Ok(GroupElement::integer(
                s.parse::<BigInt>().map_err(|_| bad())?,
            )),
            GroupDescriptor::LexPairRankTwo => {
                let inner = s
                    .strip_prefix('(')
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(bad)?;
                let (a, b) = inner.split_once(',').ok_or_else(bad)?;
                Ok(GroupElement::lex(
                    a.parse::<BigInt>().map_err(|_| bad())?,
                    b.parse::<BigInt>().map_err(|_| bad())?,
                ))
            }
            GroupDescriptor::ScaledInteger => {
                if s == "0" {
                    return Ok(GroupElement::scaled(0));
                }
                let coeff = s.strip_suffix("lambda").ok_or_else(bad)?;
                let coeff = coeff.strip_suffix('*').unwrap_or(coeff);
                Ok(GroupElement::scaled(
                    parse_coefficient(coeff).ok_or_else(bad)?,
                ))
            }
            GroupDescriptor::DenseQuadratic { d } => {
                let surd = format!("sqrt({d})");
                let (mut a, mut b) = (BigInt::zero(), BigInt::zero());
                for term in split_signed_terms(&s) {
                    if let Some(coeff) = term.strip_suffix(surd.as_str()) {
                        let coeff = coeff.strip_suffix('*').unwrap_or(coeff);
                        b += parse_coefficient(coeff).ok_or_else(bad)?;
                    } else {
                        a += term.parse::<BigInt>().map_err(|_| bad())?;
                    }
                }
                Ok(GroupElement::quadratic(d, a, b))
            }
        }
    }
}

/// Sign of `a + b*sqrt(d)` for irrational `sqrt(d)`.
fn quadratic_sign(a: &BigInt, b: &BigInt, d: u32) -> Ordering {
    let sa = a.sign();
    let sb = b.sign();
    use num_bigint::Sign::*;
    match (sa, sb) {
        (NoSign, NoSign) => Ordering::Equal,
        (Plus, Plus) | (Plus, NoSign) | (NoSign, Plus) => Ordering::Greater,
        (Minus, Minus) | (Minus, NoSign) | (NoSign, Minus) => Ordering::Less,
        _ => {
            // Opposite signs: compare a^2 with d*b^2, never equal since sqrt(d) is irrational.
            let lhs = a * a;
            let rhs = b * b * BigInt::from(d);
            let a_dominates = lhs > rhs;
            match (sa == Plus, a_dominates) {
                (true, true) | (false, false) => Ordering::Greater,
                _ => Ordering::Less,
            }
        }
    }
}

fn parse_coefficient(s: &str) -> Option<BigInt> {
    match s {
        "" | "+" => Some(BigInt::one()),
        "-" => Some(-BigInt::one()),
        _ => s.strip_prefix('+').unwrap_or(s).parse().ok(),
    }
}

fn split_signed_terms(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut start = 0;
    let bytes = s.as_bytes();
    let mut depth = 0;
    for (i, &c) in bytes.iter().enumerate() {
        match c {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' | b'-' if i > start && depth == 0 => {
                out.push(&s[start..i]);
                start = i;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.compare(other).ok()
    }
}

impl Add for &GroupElement {
    type Output = GroupElement;

    /// Panics on mismatched groups; use `checked_add` for untrusted operands.
    fn add(self, rhs: &GroupElement) -> GroupElement {
        self.checked_add(rhs).expect("value group mismatch")
    }
}

impl Sub for &GroupElement {
    type Output = GroupElement;

    fn sub(self, rhs: &GroupElement) -> GroupElement {
        self.checked_sub(rhs)
            .expect("invalid value group subtraction")
    }
}

impl Neg for &GroupElement {
    type Output = GroupElement;

    fn neg(self) -> GroupElement {
        match &self.value {
            Value::Finite(a, b) => GroupElement {
                group: self.group,
                value: Value::Finite(-a, -b),
            },
            Value::Infinity => panic!("cannot negate inf"),
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = match &self.value {
            Value::Infinity => return write!(f, "inf"),
            Value::Finite(a, b) => (a, b),
        };
        match self.group {
            GroupDescriptor::IntegerRankOne => write!(f, "{a}"),
            GroupDescriptor::LexPairRankTwo => write!(f, "({a},{b})"),
            GroupDescriptor::ScaledInteger => write_multiple(f, a, "lambda", true),
            GroupDescriptor::DenseQuadratic { d } => {
                let surd = format!("sqrt({d})");
                if b.is_zero() {
                    return write!(f, "{a}");
                }
                if a.is_zero() {
                    return write_multiple(f, b, &surd, true);
                }
                write!(f, "{a} {} ", if b.is_negative() { '-' } else { '+' })?;
                write_multiple(f, &b.abs(), &surd, false)
            }
        }
    }
}

fn write_multiple(f: &mut fmt::Formatter<'_>, n: &BigInt, unit: &str, signed: bool) -> fmt::Result {
    if n.is_zero() {
        write!(f, "0")
    } else if n.is_one() {
        write!(f, "{unit}")
    } else if signed && *n == -BigInt::one() {
        write!(f, "-{unit}")
    } else {
        write!(f, "{n}*{unit}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lex_order_is_first_coordinate_dominant() {
        let small = GroupElement::lex(0, 1);
        let big = GroupElement::lex(1, 0);
        assert_eq!(small.compare(&big), Ok(Ordering::Less));
        assert_eq!(
            GroupElement::lex(1, -100).compare(&GroupElement::lex(0, 100)),
            Ok(Ordering::Greater)
        );
        assert!(!GroupElement::lex(0, -2).is_positive());
    }

    #[test]
    fn quadratic_comparison_is_exact() {
        // 3 - 2*sqrt(2): 9 > 8, so positive.
        let x = GroupElement::quadratic(2, 3, -2);
        assert_eq!(
            x.compare(&GroupElement::zero(x.group())),
            Ok(Ordering::Greater)
        );
        // 1 vs sqrt(2)
        assert_eq!(
            GroupElement::quadratic(2, 1, 0).compare(&GroupElement::quadratic(2, 0, 1)),
            Ok(Ordering::Less)
        );
        assert_eq!(
            GroupElement::integer(0).compare(&GroupElement::integer(0)),
            Ok(Ordering::Equal)
        );
    }

    #[test]
    fn basic_arithmetic() {
        assert_eq!(
            &GroupElement::lex(0, 1) + &GroupElement::lex(1, -1),
            GroupElement::lex(1, 0)
        );
        assert_eq!(
            GroupElement::quadratic(2, 1, 0)
                .scalar_mul(&BigInt::from(3))
                .unwrap(),
            GroupElement::quadratic(2, 3, 0)
        );
        let inf = GroupElement::infinity(GroupDescriptor::IntegerRankOne);
        assert!((&inf + &GroupElement::integer(5)).is_infinite());
        assert!(inf > GroupElement::integer(1_000_000));
    }

    #[test]
    fn mismatched_groups_are_rejected() {
        let err = GroupElement::integer(1).compare(&GroupElement::scaled(1));
        assert!(matches!(err, Err(Error::Domain(_))));
        assert!(GroupElement::integer(1)
            .checked_add(&GroupElement::lex(0, 1))
            .is_err());
        assert!(GroupElement::new(GroupDescriptor::IntegerRankOne, 1.into(), 1.into()).is_err());
    }

    #[test]
    fn minimum_positive_elements() {
        assert_eq!(
            GroupElement::min_positive(GroupDescriptor::IntegerRankOne),
            Some(GroupElement::integer(1))
        );
        assert_eq!(
            GroupElement::min_positive(GroupDescriptor::LexPairRankTwo),
            Some(GroupElement::lex(0, 1))
        );
        assert_eq!(
            GroupElement::min_positive(GroupDescriptor::ScaledInteger),
            Some(GroupElement::scaled(1))
        );
        assert_eq!(
            GroupElement::min_positive(GroupDescriptor::dense_quadratic(2).unwrap()),
            None
        );
    }

    #[test]
    fn rendering_and_parsing() {
        let cases = [
            (GroupElement::integer(3), "3"),
            (GroupElement::lex(0, 1), "(0,1)"),
            (GroupElement::quadratic(2, 3, -2), "3 - 2*sqrt(2)"),
            (GroupElement::quadratic(2, 0, 1), "sqrt(2)"),
            (GroupElement::quadratic(3, -1, 1), "-1 + sqrt(3)"),
            (GroupElement::scaled(2), "2*lambda"),
            (GroupElement::scaled(1), "lambda"),
            (GroupElement::scaled(-1), "-lambda"),
            (
                GroupElement::infinity(GroupDescriptor::IntegerRankOne),
                "inf",
            ),
        ];
        for (elem, text) in cases {
            assert_eq!(elem.to_string(), text);
            assert_eq!(GroupElement::parse_in(elem.group(), text).unwrap(), elem);
        }
        assert!(GroupElement::parse_in(GroupDescriptor::LexPairRankTwo, "(1;2)").is_err());
    }

    #[test]
    fn multiples() {
        let sigma = GroupElement::lex(0, 1);
        assert_eq!(
            GroupElement::lex(0, 7).multiple_of(&sigma),
            Some(BigInt::from(7))
        );
        assert_eq!(GroupElement::lex(1, 0).multiple_of(&sigma), None);
        assert_eq!(
            GroupElement::integer(6).multiple_of(&GroupElement::integer(1)),
            Some(BigInt::from(6))
        );
    }

    #[test]
    fn rejects_square_radicands() {
        assert!(GroupDescriptor::dense_quadratic(4).is_err());
        assert!(GroupDescriptor::dense_quadratic(0).is_err());
        assert!(GroupDescriptor::dense_quadratic(7).is_ok());
    }

    fn any_group() -> impl Strategy<Value = GroupDescriptor> {
        prop_oneof![
            Just(GroupDescriptor::IntegerRankOne),
            Just(GroupDescriptor::LexPairRankTwo),
            Just(GroupDescriptor::DenseQuadratic { d: 2 }),
            Just(GroupDescriptor::DenseQuadratic { d: 7 }),
            Just(GroupDescriptor::ScaledInteger),
        ]
    }

    fn element(group: GroupDescriptor, a: i64, b: i64) -> GroupElement {
        let b = if group.uses_second_coordinate() { b } else { 0 };
        GroupElement::new(group, a.into(), b.into()).unwrap()
    }

    const R: i64 = 1_000_000;

    proptest! {
        #[test]
        fn order_is_total_and_antisymmetric(g in any_group(), a in -R..R, b in -R..R, c in -R..R, e in -R..R) {
            let x = element(g, a, b);
            let y = element(g, c, e);
            let xy = x.compare(&y).unwrap();
            prop_assert_eq!(xy, y.compare(&x).unwrap().reverse());
            prop_assert_eq!(xy == Ordering::Equal, x == y);
        }

        #[test]
        fn order_is_translation_invariant(g in any_group(), a in -R..R, b in -R..R, c in -R..R, e in -R..R, s in -R..R, t in -R..R) {
            let x = element(g, a, b);
            let y = element(g, c, e);
            let z = element(g, s, t);
            prop_assert_eq!(x.compare(&y).unwrap(), (&x + &z).compare(&(&y + &z)).unwrap());
        }

        #[test]
        fn min_positive_is_below_every_positive(g in any_group(), a in -R..R, b in -R..R) {
            let x = element(g, a, b);
            if let Some(m) = GroupElement::min_positive(g) {
                prop_assert!(m.is_positive());
                if x.is_positive() {
                    prop_assert_ne!(m.compare(&x).unwrap(), Ordering::Greater);
                }
            }
        }

        #[test]
        fn dense_group_has_smaller_positive_elements(a in -R..R, b in -R..R) {
            let mut x = GroupElement::quadratic(2, a, b);
            if x.is_zero() {
                return Ok(());
            }
            if !x.is_positive() {
                x = -&x;
            }
            let below = x.positive_element_below().unwrap();
            prop_assert!(below.is_positive());
            prop_assert_eq!(below.compare(&x).unwrap(), Ordering::Less);
        }

        #[test]
        fn rendering_round_trips(g in any_group(), a in -R..R, b in -R..R) {
            let x = element(g, a, b);
            prop_assert_eq!(GroupElement::parse_in(g, &x.to_string()).unwrap(), x);
        }
    }
}
