//! Sparse polynomials in `X, Y` and reduced rational functions over an exact
//! coefficient field (`Q` or a finite field).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::finite_field::ResidueField;

/// Exact coefficient arithmetic, passed explicitly as context.
pub trait CoeffField: Clone + Debug + PartialEq {
    type Elem: Clone + Debug + PartialEq + Eq;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Panics on zero; callers check first.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn from_int(&self, n: &BigInt) -> Self::Elem;
    /// Plain rendering of a coefficient, and whether it needs parentheses in a product.
    fn render(&self, a: &Self::Elem) -> (String, bool);
    fn is_negative(&self, _a: &Self::Elem) -> bool {
        false
    }
}

/// The rational numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rationals;

impl CoeffField for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn from_int(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn render(&self, a: &BigRational) -> (String, bool) {
        (a.to_string(), false)
    }
    fn is_negative(&self, a: &BigRational) -> bool {
        a.is_negative()
    }
}

impl CoeffField for ResidueField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ResidueField::add(self, *a, *b)
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        ResidueField::sub(self, *a, *b)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ResidueField::mul(self, *a, *b)
    }
    fn neg(&self, a: &u64) -> u64 {
        ResidueField::neg(self, *a)
    }
    fn inv(&self, a: &u64) -> u64 {
        ResidueField::inv(self, *a).expect("inverse of a nonzero element")
    }
    fn from_int(&self, n: &BigInt) -> u64 {
        let p = BigInt::from(self.characteristic());
        let r = ((n % &p) + &p) % &p;
        u64::try_from(r).expect("residue fits")
    }
    fn render(&self, a: &u64) -> (String, bool) {
        (ResidueField::render(self, *a), self.is_compound(*a))
    }
}

/// Exponents of `X^x * Y^y`. Ordered by total degree, then by the `X` exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0 };

    pub fn new(x: u32, y: u32) -> Self {
        Monomial { x, y }
    }

    fn mul(self, other: Monomial) -> Monomial {
        Monomial::new(self.x + other.x, self.y + other.y)
    }

    fn div(self, other: Monomial) -> Option<Monomial> {
        Some(Monomial::new(
            self.x.checked_sub(other.x)?,
            self.y.checked_sub(other.y)?,
        ))
    }

    fn render(self) -> String {
        let part = |name: &str, e: u32| match e {
            0 => None,
            1 => Some(name.to_string()),
            _ => Some(format!("{name}^{e}")),
        };
        [part("X", self.x), part("Y", self.y)]
            .into_iter()
            .flatten()
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.x + self.y)
            .cmp(&(other.x + other.y))
            .then(self.x.cmp(&other.x))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `X, Y`; no zero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly<E> {
    terms: BTreeMap<Monomial, E>,
}

impl<E: Clone + Debug + PartialEq + Eq> MPoly<E> {
    pub fn zero() -> Self {
        MPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant<F: CoeffField<Elem = E>>(k: &F, c: E) -> Self {
        Self::monomial(k, Monomial::ONE, c)
    }

    pub fn monomial<F: CoeffField<Elem = E>>(k: &F, m: Monomial, c: E) -> Self {
        let mut terms = BTreeMap::new();
        if !k.is_zero(&c) {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &E)> {
        self.terms.iter()
    }

    pub fn leading(&self) -> Option<(&Monomial, &E)> {
        self.terms.iter().next_back()
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn as_constant<F: CoeffField<Elem = E>>(&self, k: &F) -> Option<E> {
        match self.terms.len() {
            0 => Some(k.zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn is_one<F: CoeffField<Elem = E>>(&self, k: &F) -> bool {
        self.as_constant(k) == Some(k.one())
    }

    fn insert_add<F: CoeffField<Elem = E>>(&mut self, k: &F, m: Monomial, c: E) {
        let sum = match self.terms.get(&m) {
            Some(old) => k.add(old, &c),
            None => c,
        };
        if k.is_zero(&sum) {
            self.terms.remove(&m);
        } else {
            self.terms.insert(m, sum);
        }
    }

    pub fn add<F: CoeffField<Elem = E>>(&self, k: &F, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(k, *m, c.clone());
        }
        out
    }

    pub fn neg<F: CoeffField<Elem = E>>(&self, k: &F) -> Self {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, k.neg(c))).collect(),
        }
    }

    pub fn sub<F: CoeffField<Elem = E>>(&self, k: &F, other: &Self) -> Self {
        self.add(k, &other.neg(k))
    }

    pub fn mul<F: CoeffField<Elem = E>>(&self, k: &F, other: &Self) -> Self {
        let mut out = MPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.insert_add(k, m1.mul(*m2), k.mul(c1, c2));
            }
        }
        out
    }

    pub fn scale<F: CoeffField<Elem = E>>(&self, k: &F, c: &E) -> Self {
        if k.is_zero(c) {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, a)| (*m, k.mul(a, c))).collect(),
        }
    }

    /// Exact quotient `self / divisor`; `None` when the division leaves a remainder.
    pub fn div_exact<F: CoeffField<Elem = E>>(&self, k: &F, divisor: &Self) -> Option<Self> {
        let (lead_m, lead_c) = divisor.leading()?;
        let lead_inv = k.inv(lead_c);
        let mut rem = self.clone();
        let mut quot = MPoly::zero();
        while let Some((m, c)) = rem.leading() {
            let qm = m.div(*lead_m)?;
            let qc = k.mul(c, &lead_inv);
            let term = MPoly::monomial(k, qm, qc);
            rem = rem.sub(k, &term.mul(k, divisor));
            quot = quot.add(k, &term);
        }
        Some(quot)
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic<F: CoeffField<Elem = E>>(&self, k: &F) -> Self {
        match self.leading() {
            Some((_, c)) => {
                let inv = k.inv(c);
                self.scale(k, &inv)
            }
            None => self.clone(),
        }
    }

    pub fn uses_y(&self) -> bool {
        self.terms.keys().any(|m| m.y > 0)
    }

    /// Renders in decreasing term order, e.g. `X^2 + 3*Y - 1`.
    pub fn render<F: CoeffField<Elem = E>>(&self, k: &F) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (m, c) in self.terms.iter().rev() {
            let negative = k.is_negative(c);
            let magnitude = if negative { k.neg(c) } else { c.clone() };
            let (text, compound) = k.render(&magnitude);
            let body = if *m == Monomial::ONE {
                if compound {
                    format!("({text})")
                } else {
                    text
                }
            } else if magnitude == k.one() {
                m.render()
            } else if compound {
                format!("({text})*{}", m.render())
            } else {
                format!("{text}*{}", m.render())
            };
            match (out.is_empty(), negative) {
                (true, false) => out.push_str(&body),
                (true, true) => {
                    out.push('-');
                    out.push_str(&body);
                }
                (false, false) => {
                    out.push_str(" + ");
                    out.push_str(&body);
                }
                (false, true) => {
                    out.push_str(" - ");
                    out.push_str(&body);
                }
            }
        }
        out
    }

    pub fn is_single_term(&self) -> bool {
        self.terms.len() == 1
    }
}

// Dense univariate helpers over the coefficient field, used by the gcd.
type Dense<E> = Vec<E>;

fn trim<F: CoeffField>(k: &F, mut a: Dense<F::Elem>) -> Dense<F::Elem> {
    while a.last().is_some_and(|c| k.is_zero(c)) {
        a.pop();
    }
    a
}

fn dense_mul<F: CoeffField>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> Dense<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![k.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = k.add(&out[i + j], &k.mul(x, y));
        }
    }
    trim(k, out)
}

fn dense_sub<F: CoeffField>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> Dense<F::Elem> {
    let n = a.len().max(b.len());
    let zero = k.zero();
    let out = (0..n)
        .map(|i| k.sub(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
        .collect();
    trim(k, out)
}

fn dense_div_rem<F: CoeffField>(
    k: &F,
    a: &[F::Elem],
    b: &[F::Elem],
) -> (Dense<F::Elem>, Dense<F::Elem>) {
    let db = b.len() - 1;
    let lead_inv = k.inv(&b[db]);
    let mut rem = a.to_vec();
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![k.zero(); rem.len() - db];
    for top in (db..rem.len()).rev() {
        let c = k.mul(&rem[top], &lead_inv);
        if k.is_zero(&c) {
            continue;
        }
        for (i, bi) in b.iter().enumerate() {
            let idx = top - db + i;
            rem[idx] = k.sub(&rem[idx], &k.mul(&c, bi));
        }
        quot[top - db] = c;
    }
    rem.truncate(db);
    (trim(k, quot), trim(k, rem))
}

fn dense_monic<F: CoeffField>(k: &F, a: Dense<F::Elem>) -> Dense<F::Elem> {
    match a.last() {
        Some(lead) => {
            let inv = k.inv(lead);
            a.iter().map(|c| k.mul(c, &inv)).collect()
        }
        None => a,
    }
}

fn dense_gcd<F: CoeffField>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> Dense<F::Elem> {
    let mut a = trim(k, a.to_vec());
    let mut b = trim(k, b.to_vec());
    while !b.is_empty() {
        let (_, r) = dense_div_rem(k, &a, &b);
        a = b;
        b = r;
    }
    dense_monic(k, a)
}

/// Polynomial in `Y` whose coefficients are dense polynomials in `X`.
type Bivariate<E> = Vec<Dense<E>>;

fn to_bivariate<F: CoeffField>(k: &F, p: &MPoly<F::Elem>) -> Bivariate<F::Elem> {
    let max_y = p.terms.keys().map(|m| m.y).max().unwrap_or(0) as usize;
    let mut out: Bivariate<F::Elem> = vec![Vec::new(); max_y + 1];
    for (m, c) in &p.terms {
        let row = &mut out[m.y as usize];
        if row.len() <= m.x as usize {
            row.resize(m.x as usize + 1, k.zero());
        }
        row[m.x as usize] = c.clone();
    }
    out
}

fn from_bivariate<F: CoeffField>(k: &F, b: &Bivariate<F::Elem>) -> MPoly<F::Elem> {
    let mut out = MPoly::zero();
    for (y, row) in b.iter().enumerate() {
        for (x, c) in row.iter().enumerate() {
            out.insert_add(k, Monomial::new(x as u32, y as u32), c.clone());
        }
    }
    out
}

fn biv_trim<E>(mut b: Bivariate<E>) -> Bivariate<E> {
    while b.last().is_some_and(|r| r.is_empty()) {
        b.pop();
    }
    b
}

fn content<F: CoeffField>(k: &F, b: &Bivariate<F::Elem>) -> Dense<F::Elem> {
    b.iter()
        .fold(Vec::new(), |acc, row| dense_gcd(k, &acc, row))
}

fn primitive_part<F: CoeffField>(k: &F, b: &Bivariate<F::Elem>) -> Bivariate<F::Elem> {
    let c = content(k, b);
    if c.is_empty() {
        return Vec::new();
    }
    b.iter().map(|row| dense_div_rem(k, row, &c).0).collect()
}

/// Pseudo-remainder of `a` by `b` as polynomials in `Y`.
fn pseudo_rem<F: CoeffField>(
    k: &F,
    a: &Bivariate<F::Elem>,
    b: &Bivariate<F::Elem>,
) -> Bivariate<F::Elem> {
    let db = b.len() - 1;
    let lead = &b[db];
    let mut rem = a.clone();
    while rem.len() > db && !rem.is_empty() {
        let top = rem.len() - 1;
        let c = rem[top].clone();
        let shift = top - db;
        // rem = lead * rem - c * Y^shift * b
        let mut next: Bivariate<F::Elem> = rem.iter().map(|row| dense_mul(k, lead, row)).collect();
        for (i, bi) in b.iter().enumerate() {
            next[shift + i] = dense_sub(k, &next[shift + i], &dense_mul(k, &c, bi));
        }
        rem = biv_trim(next);
    }
    rem
}

/// Gcd in `F[X, Y]`, normalized to leading coefficient one.
pub fn gcd<F: CoeffField>(k: &F, a: &MPoly<F::Elem>, b: &MPoly<F::Elem>) -> MPoly<F::Elem> {
    if a.is_zero() {
        return b.monic(k);
    }
    if b.is_zero() {
        return a.monic(k);
    }
    let a = to_bivariate(k, a);
    let b = to_bivariate(k, b);
    let c = dense_gcd(k, &content(k, &a), &content(k, &b));
    let mut u = primitive_part(k, &a);
    let mut v = primitive_part(k, &b);
    if u.len() < v.len() {
        std::mem::swap(&mut u, &mut v);
    }
    while !v.is_empty() {
        let r = pseudo_rem(k, &u, &v);
        u = v;
        v = if r.is_empty() {
            r
        } else {
            primitive_part(k, &r)
        };
    }
    let g: Bivariate<F::Elem> = if u.len() <= 1 { vec![vec![k.one()]] } else { u };
    let scaled: Bivariate<F::Elem> = g.iter().map(|row| dense_mul(k, row, &c)).collect();
    from_bivariate(k, &scaled).monic(k)
}

/// Reduced fraction `num / den` with `den` having leading coefficient one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFun<E> {
    num: MPoly<E>,
    den: MPoly<E>,
}

impl<E: Clone + Debug + PartialEq + Eq> RatFun<E> {
    pub fn new<F: CoeffField<Elem = E>>(k: &F, num: MPoly<E>, den: MPoly<E>) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::reduce(k, num, den))
    }

    pub fn from_poly<F: CoeffField<Elem = E>>(k: &F, num: MPoly<E>) -> Self {
        RatFun {
            num,
            den: MPoly::constant(k, k.one()),
        }
    }

    fn reduce<F: CoeffField<Elem = E>>(k: &F, num: MPoly<E>, den: MPoly<E>) -> Self {
        if num.is_zero() {
            return RatFun::from_poly(k, num);
        }
        if let Some(c) = den.as_constant(k) {
            let inv = k.inv(&c);
            return RatFun::from_poly(k, num.scale(k, &inv));
        }
        let g = gcd(k, &num, &den);
        let (num, den) = if g.is_one(k) {
            (num, den)
        } else {
            (
                num.div_exact(k, &g).expect("gcd divides numerator"),
                den.div_exact(k, &g).expect("gcd divides denominator"),
            )
        };
        let (_, lead) = den.leading().expect("nonzero denominator");
        let inv = k.inv(lead);
        RatFun {
            num: num.scale(k, &inv),
            den: den.scale(k, &inv),
        }
    }

    pub fn num(&self) -> &MPoly<E> {
        &self.num
    }

    pub fn den(&self) -> &MPoly<E> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add<F: CoeffField<Elem = E>>(&self, k: &F, other: &Self) -> Self {
        if self.den == other.den {
            return Self::reduce(k, self.num.add(k, &other.num), self.den.clone());
        }
        let num = self
            .num
            .mul(k, &other.den)
            .add(k, &other.num.mul(k, &self.den));
        Self::reduce(k, num, self.den.mul(k, &other.den))
    }

    pub fn neg<F: CoeffField<Elem = E>>(&self, k: &F) -> Self {
        RatFun {
            num: self.num.neg(k),
            den: self.den.clone(),
        }
    }

    pub fn sub<F: CoeffField<Elem = E>>(&self, k: &F, other: &Self) -> Self {
        self.add(k, &other.neg(k))
    }

    pub fn mul<F: CoeffField<Elem = E>>(&self, k: &F, other: &Self) -> Self {
        Self::reduce(k, self.num.mul(k, &other.num), self.den.mul(k, &other.den))
    }

    pub fn inv<F: CoeffField<Elem = E>>(&self, k: &F) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::reduce(k, self.den.clone(), self.num.clone()))
    }

    pub fn render<F: CoeffField<Elem = E>>(&self, k: &F) -> String {
        let num = self.num.render(k);
        if self.den.is_one(k) {
            return num;
        }
        let den = self.den.render(k);
        let wrap = |s: String, single: bool| if single { s } else { format!("({s})") };
        format!(
            "{}/{}",
            wrap(
                num,
                self.num.is_single_term() && !self.num.render(k).starts_with('-')
            ),
            wrap(den, false)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Monomial {
        Monomial::new(1, 0)
    }
    fn y() -> Monomial {
        Monomial::new(0, 1)
    }

    fn poly_q(terms: &[(i64, u32, u32)]) -> MPoly<BigRational> {
        let k = Rationals;
        terms.iter().fold(MPoly::zero(), |acc, &(c, ex, ey)| {
            acc.add(
                &k,
                &MPoly::monomial(
                    &k,
                    Monomial::new(ex, ey),
                    BigRational::from_integer(c.into()),
                ),
            )
        })
    }

    fn poly_f(q: u64, terms: &[(u64, u32, u32)]) -> (ResidueField, MPoly<u64>) {
        let k = ResidueField::new(q).unwrap();
        let p = terms.iter().fold(MPoly::zero(), |acc, &(c, ex, ey)| {
            acc.add(&k, &MPoly::monomial(&k, Monomial::new(ex, ey), c))
        });
        (k, p)
    }

    #[test]
    fn monomial_order_is_degree_then_x() {
        assert!(y() < x());
        assert!(x() < Monomial::new(0, 2));
        assert!(Monomial::new(1, 1) < Monomial::new(2, 0));
    }

    #[test]
    fn bivariate_gcd_over_f2() {
        // (X + Y)(X*Y + 1) and (X + Y)(X + 1)
        let (k, a) = poly_f(2, &[(1, 1, 0), (1, 0, 1)]);
        let (_, b) = poly_f(2, &[(1, 1, 1), (1, 0, 0)]);
        let (_, c) = poly_f(2, &[(1, 1, 0), (1, 0, 0)]);
        let g = gcd(&k, &a.mul(&k, &b), &a.mul(&k, &c));
        assert_eq!(g, a);
    }

    #[test]
    fn univariate_gcd_over_q() {
        let k = Rationals;
        let a = poly_q(&[(1, 2, 0), (-1, 0, 0)]); // X^2 - 1
        let b = poly_q(&[(2, 1, 0), (2, 0, 0)]); // 2X + 2
        assert_eq!(gcd(&k, &a, &b), poly_q(&[(1, 1, 0), (1, 0, 0)]));
    }

    #[test]
    fn fractions_cancel() {
        let (k, x_plus_y) = poly_f(2, &[(1, 1, 0), (1, 0, 1)]);
        let (_, xx) = poly_f(2, &[(1, 1, 0)]);
        let a = RatFun::new(&k, xx.clone(), x_plus_y.clone()).unwrap();
        let b = RatFun::new(&k, x_plus_y, xx).unwrap();
        let one = RatFun::from_poly(&k, MPoly::constant(&k, 1));
        assert_eq!(a.mul(&k, &b), one);
        assert!(a.sub(&k, &a).is_zero());
    }

    #[test]
    fn rendering() {
        let k = Rationals;
        let p = poly_q(&[(1, 2, 0), (3, 0, 1), (-1, 0, 0)]);
        assert_eq!(p.render(&k), "X^2 + 3*Y - 1");
        let f = RatFun::new(&k, poly_q(&[(1, 1, 0)]), poly_q(&[(2, 1, 0), (2, 0, 1)])).unwrap();
        assert_eq!(f.render(&k), "1/2*X/(X + Y)");
    }
}
