use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::finite_field::ResidueField;

/// Dense univariate polynomial over a residue field, lowest coefficient first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResiduePoly {
    field: ResidueField,
    coeffs: Vec<u64>,
}

impl ResiduePoly {
    pub fn new(field: ResidueField, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        debug_assert!(coeffs.iter().all(|&c| c < field.order()));
        ResiduePoly { field, coeffs }
    }

    pub fn zero(field: &ResidueField) -> Self {
        ResiduePoly::new(field.clone(), Vec::new())
    }

    pub fn one(field: &ResidueField) -> Self {
        ResiduePoly::new(field.clone(), vec![1])
    }

    /// The monomial `x`.
    pub fn x(field: &ResidueField) -> Self {
        ResiduePoly::new(field.clone(), vec![0, 1])
    }

    pub fn field(&self) -> &ResidueField {
        &self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn make_monic(&self) -> Self {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let inv = self
            .field
            .inv(self.leading())
            .expect("nonzero leading coefficient");
        self.scale(inv)
    }

    pub fn scale(&self, c: u64) -> Self {
        let f = &self.field;
        ResiduePoly::new(
            f.clone(),
            self.coeffs.iter().map(|&a| f.mul(a, c)).collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| f.add(self.coeff(i), other.coeff(i)))
            .collect();
        ResiduePoly::new(f.clone(), coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| f.sub(self.coeff(i), other.coeff(i)))
            .collect();
        ResiduePoly::new(f.clone(), coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return ResiduePoly::zero(&self.field);
        }
        let f = &self.field;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        ResiduePoly::new(f.clone(), out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(ResiduePoly::one(&self.field), |acc, _| acc.mul(self))
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let f = &self.field;
        let d = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = f.inv(divisor.leading())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((ResiduePoly::zero(f), self.clone()));
        }
        let mut quot = vec![0u64; rem.len() - d];
        for top in (d..rem.len()).rev() {
            let c = f.mul(rem[top], lead_inv);
            if c == 0 {
                continue;
            }
            quot[top - d] = c;
            for (i, &b) in divisor.coeffs.iter().enumerate() {
                let idx = top - d + i;
                rem[idx] = f.sub(rem[idx], f.mul(c, b));
            }
        }
        rem.truncate(d);
        Ok((
            ResiduePoly::new(f.clone(), quot),
            ResiduePoly::new(f.clone(), rem),
        ))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.div_rem(divisor)?.1)
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.make_monic()
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(f.from_i64((i as u64 % f.characteristic()) as i64), c))
            .collect();
        ResiduePoly::new(f.clone(), coeffs)
    }

    /// `self^e mod modulus` with a big exponent given as little-endian bits source.
    pub fn pow_mod(&self, exponent: &num_bigint::BigUint, modulus: &Self) -> Result<Self> {
        let mut acc = ResiduePoly::one(&self.field).rem(modulus)?;
        let base = self.rem(modulus)?;
        for i in (0..exponent.bits()).rev() {
            acc = acc.mul(&acc).rem(modulus)?;
            if exponent.bit(i) {
                acc = acc.mul(&base).rem(modulus)?;
            }
        }
        Ok(acc)
    }

    /// `self^(q^times) mod modulus`, computed by repeated `q`-th powering.
    pub fn frobenius_mod(&self, times: usize, modulus: &Self) -> Result<Self> {
        let q = num_bigint::BigUint::from(self.field.order());
        let mut acc = self.rem(modulus)?;
        for _ in 0..times {
            acc = acc.pow_mod(&q, modulus)?;
        }
        Ok(acc)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Total order used to sort factor lists: by degree, then coefficient vectors
    /// compared from the leading coefficient down.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }

    /// Renders with the given variable name.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let f = &self.field;
        let mut out = String::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push_str(" + ");
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            let coeff = if f.is_compound(c) {
                format!("({})", f.render(c))
            } else {
                f.render(c)
            };
            match (c, mono.is_empty()) {
                (_, true) => out.push_str(&coeff),
                (1, false) => out.push_str(&mono),
                (_, false) => out.push_str(&format!("{coeff}*{mono}")),
            }
        }
        out
    }
}

impl fmt::Display for ResiduePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(q: u64, coeffs: &[u64]) -> ResiduePoly {
        ResiduePoly::new(ResidueField::new(q).unwrap(), coeffs.to_vec())
    }

    #[test]
    fn division_identity() {
        let a = poly(5, &[1, 2, 3, 4, 1]);
        let b = poly(5, &[3, 0, 2]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 2);
    }

    #[test]
    fn gcd_and_derivative() {
        // (x + 1)^2 over F2 = x^2 + 1, derivative 0
        let sq = poly(2, &[1, 0, 1]);
        assert!(sq.derivative().is_zero());
        let a = poly(5, &[4, 0, 1]); // x^2 - 1
        let b = poly(5, &[1, 1]); // x + 1
        assert_eq!(a.gcd(&b), b);
        assert!(b.divides(&a));
    }

    #[test]
    fn rendering() {
        assert_eq!(poly(2, &[1, 1, 1]).to_string(), "x^2 + x + 1");
        assert_eq!(poly(5, &[2, 0, 3]).render("Z"), "3*Z^2 + 2");
        assert_eq!(poly(4, &[3, 1]).to_string(), "x + (t + 1)");
    }
}
