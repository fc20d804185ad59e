//! Finite residue fields `F_q`, `q = p^k`.
//!
//! Elements are stored as integers in `[0, q)`: the base-`p` digits of an element are
//! its coefficients in the power basis `1, t, ..., t^(k-1)`, where `t` is a root of the
//! field's defining polynomial (the first monic irreducible of degree `k` over `F_p`
//! in enumeration order). For `k = 1` this is plain arithmetic modulo `p`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::ResiduePoly;

/// Largest supported field size.
pub const MAX_FIELD_SIZE: u64 = 1 << 31;

#[derive(Debug)]
struct Inner {
    p: u64,
    degree: u32,
    q: u64,
    /// Monic defining polynomial over `F_p`, lowest coefficient first. Empty for `k = 1`.
    modulus: Vec<u64>,
}

/// The finite field `F_q`. Cloning is cheap.
#[derive(Clone, Debug)]
pub struct ResidueField(Arc<Inner>);

impl PartialEq for ResidueField {
    fn eq(&self, other: &Self) -> bool {
        self.0.p == other.0.p && self.0.degree == other.0.degree
    }
}

impl Eq for ResidueField {}

/// An element of a residue field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueElement {
    field: ResidueField,
    value: u64,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl ResidueField {
    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Parse(format!("{p} is not prime")));
        }
        if p >= MAX_FIELD_SIZE {
            return Err(Error::Parse(format!(
                "{p} exceeds the supported field size"
            )));
        }
        Ok(ResidueField(Arc::new(Inner {
            p,
            degree: 1,
            q: p,
            modulus: Vec::new(),
        })))
    }

    /// `F_q` for a prime power `q`.
    pub fn new(q: u64) -> Result<Self> {
        if q < 2 {
            return Err(Error::Parse(format!("{q} is not a prime power")));
        }
        let p = (2..)
            .take_while(|d| d * d <= q)
            .find(|d| q.is_multiple_of(*d))
            .unwrap_or(q);
        let mut rest = q;
        let mut degree = 0u32;
        while rest.is_multiple_of(p) {
            rest /= p;
            degree += 1;
        }
        if rest != 1 {
            return Err(Error::Parse(format!("{q} is not a prime power")));
        }
        let base = Self::prime(p)?;
        if degree == 1 {
            return Ok(base);
        }
        if q > MAX_FIELD_SIZE {
            return Err(Error::Parse(format!(
                "{q} exceeds the supported field size"
            )));
        }
        let modulus = first_irreducible(&base, degree as usize);
        Ok(ResidueField(Arc::new(Inner {
            p,
            degree,
            q,
            modulus,
        })))
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn order(&self) -> u64 {
        self.0.q
    }

    /// Extension degree over the prime field.
    pub fn degree(&self) -> u32 {
        self.0.degree
    }

    /// The prime field inside `self`.
    pub fn prime_subfield(&self) -> ResidueField {
        Self::prime(self.0.p).expect("characteristic is prime")
    }

    pub fn element(&self, value: u64) -> ResidueElement {
        assert!(
            value < self.0.q,
            "{value} is not a canonical element of F_{}",
            self.0.q
        );
        ResidueElement {
            field: self.clone(),
            value,
        }
    }

    /// Image of an integer under `Z -> F_p -> F_q`.
    pub fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.0.p as i64) as u64
    }

    /// The generator `t` of `F_q` over `F_p`; `None` for prime fields.
    pub fn generator(&self) -> Option<u64> {
        (self.0.degree > 1).then_some(self.0.p)
    }

    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.0.q
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.0.degree == 1 {
            let s = a + b;
            return if s >= self.0.p { s - self.0.p } else { s };
        }
        self.digitwise(a, b, |x, y| (x + y) % self.0.p)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if self.0.degree == 1 {
            return if a >= b { a - b } else { a + self.0.p - b };
        }
        self.digitwise(a, b, |x, y| (x + self.0.p - y) % self.0.p)
    }

    pub fn neg(&self, a: u64) -> u64 {
        self.sub(0, a)
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        let p = self.0.p;
        if self.0.degree == 1 {
            return ((a as u128 * b as u128) % p as u128) as u64;
        }
        let k = self.0.degree as usize;
        let x = self.digits(a);
        let y = self.digits(b);
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + xi * yj) % p;
            }
        }
        // Reduce modulo the monic defining polynomial.
        for top in (k..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for (i, &m) in self.0.modulus[..k].iter().enumerate() {
                let idx = top - k + i;
                prod[idx] = (prod[idx] + (p - c) * m % p) % p;
            }
        }
        self.from_digits(&prod[..k])
    }

    pub fn pow(&self, a: u64, mut e: u128) -> u64 {
        let mut base = a;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.0.q as u128 - 2))
    }

    pub fn div(&self, a: u64, b: u64) -> Result<u64> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// The unique `p`-th root (Frobenius is bijective on a finite field).
    pub fn pth_root(&self, a: u64) -> u64 {
        self.pow(a, (self.0.q / self.0.p) as u128)
    }

    fn digits(&self, mut a: u64) -> Vec<u64> {
        let p = self.0.p;
        (0..self.0.degree)
            .map(|_| {
                let d = a % p;
                a /= p;
                d
            })
            .collect()
    }

    fn from_digits(&self, digits: &[u64]) -> u64 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.0.p + d)
    }

    fn digitwise(&self, a: u64, b: u64, op: impl Fn(u64, u64) -> u64) -> u64 {
        let x = self.digits(a);
        let y = self.digits(b);
        let z: Vec<u64> = x.iter().zip(&y).map(|(&u, &v)| op(u, v)).collect();
        self.from_digits(&z)
    }

    /// Renders an element; composite fields use the generator `t`.
    pub fn render(&self, a: u64) -> String {
        if self.0.degree == 1 {
            return a.to_string();
        }
        let digits = self.digits(a);
        let mut terms = Vec::new();
        for (i, &d) in digits.iter().enumerate().rev() {
            if d == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            terms.push(match (d, mono.is_empty()) {
                (_, true) => d.to_string(),
                (1, false) => mono,
                (_, false) => format!("{d}*{mono}"),
            });
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    /// True when `render` may produce a sum that needs parentheses inside a product.
    pub fn is_compound(&self, a: u64) -> bool {
        self.0.degree > 1 && self.digits(a).iter().filter(|&&d| d != 0).count() > 1
    }
}

impl fmt::Display for ResidueField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.0.q)
    }
}

impl ResidueElement {
    pub fn field(&self) -> &ResidueField {
        &self.field
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn add(&self, other: &Self) -> Self {
        self.field.element(self.field.add(self.value, other.value))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.field.element(self.field.sub(self.value, other.value))
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.field.element(self.field.mul(self.value, other.value))
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(self.field.element(self.field.inv(self.value)?))
    }
}

impl fmt::Display for ResidueElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.render(self.value))
    }
}

fn first_irreducible(base: &ResidueField, degree: usize) -> Vec<u64> {
    let p = base.order();
    let count = p.pow(degree as u32);
    for index in 0..count {
        let mut coeffs = Vec::with_capacity(degree + 1);
        let mut rest = index;
        for _ in 0..degree {
            coeffs.push(rest % p);
            rest /= p;
        }
        coeffs.push(1);
        let candidate = ResiduePoly::new(base.clone(), coeffs.clone());
        if crate::residue_factor::is_irreducible(&candidate) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}
