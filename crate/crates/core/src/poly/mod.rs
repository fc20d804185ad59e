//! Univariate polynomials over a valued field and over its residue field.

mod residue;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::finite_field::ResidueField;
use crate::valued_field::{FieldElement, ValuedField};
use crate::valuegroup::GroupElement;
pub use residue::ResiduePoly;

/// Default cap on the degree accepted by the engine.
pub const DEFAULT_MAX_DEGREE: usize = 32;

const SPECIALIZATION_PRIME: u64 = 2_147_483_647;

/// Large finite field receiving the function-field coefficients; `None` for `Q`.
fn specialization_field(field: &ValuedField) -> Option<ResidueField> {
    static CACHE: OnceLock<Mutex<HashMap<u64, ResidueField>>> = OnceLock::new();
    let size = match field {
        ValuedField::PAdic { .. } => return None,
        ValuedField::LambdaComposite { .. } => SPECIALIZATION_PRIME,
        ValuedField::LexBivariate { coeffs } | ValuedField::LambdaTrivial { coeffs, .. } => {
            if coeffs.degree() != 1 {
                return None;
            }
            let p = coeffs.characteristic();
            let mut q = p;
            while q < 1 << 20 {
                q *= p;
            }
            q
        }
    };
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut cache = cache.lock().unwrap_or_else(|e| e.into_inner());
    if let Some(k) = cache.get(&size) {
        return Some(k.clone());
    }
    let k = ResidueField::new(size).ok()?;
    cache.insert(size, k.clone());
    Some(k)
}

/// Dense polynomial over a [`ValuedField`], lowest coefficient first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: ValuedField,
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn new(field: ValuedField, mut coeffs: Vec<FieldElement>) -> Self {
        debug_assert!(coeffs.iter().all(|c| *c.field() == field));
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: &ValuedField) -> Self {
        Poly::new(field.clone(), Vec::new())
    }

    pub fn constant(c: FieldElement) -> Self {
        Poly::new(c.field().clone(), vec![c])
    }

    /// `c * x^n`.
    pub fn monomial(c: FieldElement, n: usize) -> Self {
        let field = c.field().clone();
        let mut coeffs = vec![field.zero(); n];
        coeffs.push(c);
        Poly::new(field, coeffs)
    }

    pub fn x(field: &ValuedField) -> Self {
        Poly::monomial(field.one(), 1)
    }

    /// Builds a polynomial from integer coefficients, lowest first.
    pub fn from_ints(field: &ValuedField, coeffs: &[i64]) -> Self {
        Poly::new(
            field.clone(),
            coeffs.iter().map(|&c| field.from_int(c)).collect(),
        )
    }

    pub fn field(&self) -> &ValuedField {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> FieldElement {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    /// All coefficients lie in the valuation ring.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integral())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            self.field.clone(),
            (0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            self.field.clone(),
            (0..n).map(|i| self.coeff(i).sub(&other.coeff(i))).collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Poly::new(
            self.field.clone(),
            self.coeffs.iter().map(|c| c.neg()).collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        Poly::new(self.field.clone(), out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Poly::constant(self.field.one()), |acc, _| acc.mul(self))
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        Poly::new(
            self.field.clone(),
            self.coeffs.iter().map(|a| a.mul(c)).collect(),
        )
    }

    /// Divides every coefficient by `c`.
    pub fn div_scalar(&self, c: &FieldElement) -> Result<Self> {
        let inv = c.inv()?;
        Ok(self.scale(&inv))
    }

    /// Minimum of the coefficient valuations; `inf` for the zero polynomial.
    pub fn gauss_valuation(&self) -> GroupElement {
        self.coeffs
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| c.valuation())
            .min_by(|a, b| a.compare(b).expect("same group"))
            .unwrap_or_else(|| GroupElement::infinity(self.field.value_group()))
    }

    /// Euclidean division by a monic polynomial of positive degree: `self = q*divisor + r`.
    pub fn euclid_divide(&self, divisor: &Self) -> Result<(Self, Self)> {
        if !divisor.is_monic() || divisor.degree() == Some(0) {
            return Err(Error::Precondition(format!(
                "divisor {divisor} must be monic of positive degree"
            )));
        }
        Ok(self.div_rem_unchecked(divisor))
    }

    fn div_rem_unchecked(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("nonzero divisor");
        let lead_inv = divisor
            .leading()
            .inv()
            .expect("nonzero leading coefficient");
        let monic = lead_inv.is_one();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Poly::zero(&self.field), self.clone());
        }
        let mut quot = vec![self.field.zero(); rem.len() - d];
        for top in (d..rem.len()).rev() {
            if rem[top].is_zero() {
                continue;
            }
            let c = if monic {
                rem[top].clone()
            } else {
                rem[top].mul(&lead_inv)
            };
            for (i, b) in divisor.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    let idx = top - d + i;
                    rem[idx] = rem[idx].sub(&c.mul(b));
                }
            }
            quot[top - d] = c;
        }
        rem.truncate(d);
        (
            Poly::new(self.field.clone(), quot),
            Poly::new(self.field.clone(), rem),
        )
    }

    /// Coefficientwise reduction into the residue field.
    pub fn reduce(&self) -> Result<ResiduePoly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.reduce().map(|r| r.value()))
            .collect::<Result<Vec<_>>>()
            .map_err(|_| Error::NotIntegral(format!("{self}")))?;
        Ok(ResiduePoly::new(self.field.residue_field().clone(), coeffs))
    }

    /// Canonical coefficientwise lift of a residue polynomial.
    pub fn lift(field: &ValuedField, p: &ResiduePoly) -> Self {
        Poly::new(
            field.clone(),
            p.coeffs().iter().map(|&c| field.lift_raw(c)).collect(),
        )
    }

    /// Monic lift of a monic residue polynomial.
    pub fn lift_monic(field: &ValuedField, p: &ResiduePoly) -> Result<Self> {
        if !p.is_monic() {
            return Err(Error::Precondition(format!("{p} is not monic")));
        }
        Ok(Poly::lift(field, p))
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.field.clone(),
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul(&self.field.from_int(i as i64)))
                .collect(),
        )
    }

    pub fn make_monic(&self) -> Self {
        match self.coeffs.last() {
            Some(lead) if !lead.is_one() => self.div_scalar(lead).expect("nonzero leading"),
            _ => self.clone(),
        }
    }

    /// Monic gcd over the field, by the Euclidean algorithm.
    pub fn gcd_over_k(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::Precondition("gcd(0, 0) is undefined".into()));
        }
        let mut a = self.make_monic();
        let mut b = other.make_monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem_unchecked(&b);
            a = b;
            b = r.make_monic();
        }
        Ok(a)
    }

    /// `gcd(f, f') = 1` over the field.
    pub fn is_separable(&self) -> bool {
        if let Some(answer) = self.separability_fast() {
            return answer;
        }
        self.gcd_over_k(&self.derivative())
            .map(|g| g.degree() == Some(0))
            .unwrap_or(false)
    }

    /// Separability when it can be settled without a gcd over a function field;
    /// `None` otherwise.
    pub fn separability_fast(&self) -> Option<bool> {
        if self.degree().unwrap_or(0) == 0 {
            return Some(false);
        }
        let derivative = self.derivative();
        if derivative.is_zero() {
            return Some(false);
        }
        // A squarefree reduction already forces separability.
        if self.is_monic() && self.is_integral() {
            if let Ok(bar) = self.reduce() {
                if bar.gcd(&bar.derivative()).is_one() {
                    return Some(true);
                }
            }
        }
        if let ValuedField::PAdic { .. } = self.field {
            return self
                .gcd_over_k(&derivative)
                .ok()
                .map(|g| g.degree() == Some(0));
        }
        if self.separable_by_specialization(&derivative) {
            return Some(true);
        }
        None
    }

    /// Maps `X`, `Y` to random points of a large finite field. A coprime image of
    /// `f, f'` (with all denominators surviving) proves `f` separable; failure proves
    /// nothing.
    fn separable_by_specialization(&self, derivative: &Poly) -> bool {
        let Some(target) = specialization_field(&self.field) else {
            return false;
        };
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        'points: for _ in 0..4 {
            let (x, y) = (
                rng.gen_range(0..target.order()),
                rng.gen_range(0..target.order()),
            );
            let mut images = Vec::with_capacity(2);
            for p in [self, derivative] {
                let mut coeffs = Vec::with_capacity(p.coeffs.len());
                for c in &p.coeffs {
                    match c.specialize(&target, x, y) {
                        Some(v) => coeffs.push(v),
                        None => continue 'points,
                    }
                }
                images.push(ResiduePoly::new(target.clone(), coeffs));
            }
            if images[0].degree() == self.degree() && images[0].gcd(&images[1]).is_one() {
                return true;
            }
        }
        false
    }

    /// Renders with the given main-variable name, e.g. `x^3 + (Y)*x + (X)`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            let (negative, body) = match c.as_integer_literal() {
                Some(n) => {
                    let mag = n.magnitude().to_string();
                    let body = match (mono.is_empty(), mag.as_str()) {
                        (true, _) => mag,
                        (false, "1") => mono.clone(),
                        (false, _) => format!("{mag}*{mono}"),
                    };
                    (c.is_negative_integer(), body)
                }
                None => {
                    let text = format!("({c})");
                    if mono.is_empty() {
                        (false, text)
                    } else {
                        (false, format!("{text}*{mono}"))
                    }
                }
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
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(p: u64) -> ValuedField {
        ValuedField::p_adic(p).unwrap()
    }

    #[test]
    fn gauss_valuation_examples() {
        let k5 = qp(5);
        assert_eq!(
            Poly::from_ints(&k5, &[1, 25, 5]).gauss_valuation(),
            GroupElement::integer(0)
        );
        assert_eq!(
            Poly::from_ints(&qp(2), &[6, 4]).gauss_valuation(),
            GroupElement::integer(1)
        );
        let lex = ValuedField::lex_bivariate(2).unwrap();
        let p = Poly::new(
            lex.clone(),
            vec![lex.var_y().unwrap(), lex.var_x().unwrap()],
        );
        assert_eq!(p.gauss_valuation(), GroupElement::lex(0, 1));
        assert!(Poly::zero(&k5).gauss_valuation().is_infinite());
    }

    #[test]
    fn euclidean_division_examples() {
        let k = qp(5);
        let f = Poly::from_ints(&k, &[-5, 0, 1]);
        let (q, r) = f.euclid_divide(&Poly::from_ints(&k, &[1, 1])).unwrap();
        assert_eq!(q, Poly::from_ints(&k, &[-1, 1]));
        assert_eq!(r, Poly::from_ints(&k, &[-4]));
        let (q, r) = f.euclid_divide(&f).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, Poly::from_ints(&k, &[1]));
        assert!(f.euclid_divide(&Poly::from_ints(&k, &[1, 2])).is_err());

        let lex = ValuedField::lex_bivariate(2).unwrap();
        let (x, y) = (lex.var_x().unwrap(), lex.var_y().unwrap());
        let g = Poly::new(
            lex.clone(),
            vec![x.clone(), y.clone(), lex.zero(), lex.one()],
        );
        let (q, r) = g.euclid_divide(&Poly::x(&lex)).unwrap();
        assert_eq!(q, Poly::new(lex.clone(), vec![y, lex.zero(), lex.one()]));
        assert_eq!(r, Poly::constant(x));
    }

    #[test]
    fn reduction_examples() {
        let f2 = Poly::from_ints(&qp(2), &[-5, 0, 1]).reduce().unwrap();
        assert_eq!(f2.coeffs(), &[1, 0, 1]);
        assert!(Poly::from_ints(&qp(3), &[6, 3]).reduce().unwrap().is_zero());
        let lex = ValuedField::lex_bivariate(2).unwrap();
        let g = Poly::new(
            lex.clone(),
            vec![
                lex.var_x().unwrap(),
                lex.var_y().unwrap(),
                lex.zero(),
                lex.one(),
            ],
        );
        assert_eq!(g.reduce().unwrap().coeffs(), &[0, 0, 0, 1]);
        let half = Poly::constant(qp(2).rational(1, 2).unwrap());
        assert!(matches!(half.reduce(), Err(Error::NotIntegral(_))));
    }

    #[test]
    fn monic_lifts() {
        let k = qp(2);
        let bar = ResiduePoly::new(k.residue_field().clone(), vec![1, 1]);
        assert_eq!(
            Poly::lift_monic(&k, &bar).unwrap(),
            Poly::from_ints(&k, &[1, 1])
        );
        let k3 = qp(3);
        for a in 0..3 {
            for b in 0..3 {
                let bar = ResiduePoly::new(k3.residue_field().clone(), vec![a, b, 1]);
                assert_eq!(Poly::lift_monic(&k3, &bar).unwrap().reduce().unwrap(), bar);
            }
        }
        let not_monic = ResiduePoly::new(k3.residue_field().clone(), vec![1, 2]);
        assert!(Poly::lift_monic(&k3, &not_monic).is_err());
    }

    #[test]
    fn derivative_gcd_and_separability() {
        let k = qp(5);
        let f = Poly::from_ints(&k, &[-5, 0, 1]);
        assert_eq!(f.derivative(), Poly::from_ints(&k, &[0, 2]));
        assert_eq!(
            f.gcd_over_k(&f.derivative()).unwrap(),
            Poly::from_ints(&k, &[1])
        );
        assert!(f.is_separable());
        assert!(Poly::zero(&k).gcd_over_k(&Poly::zero(&k)).is_err());

        let lex3 = ValuedField::lex_bivariate(3).unwrap();
        let g = Poly::new(
            lex3.clone(),
            vec![lex3.var_y().unwrap(), lex3.zero(), lex3.zero(), lex3.one()],
        );
        assert!(g.derivative().is_zero());
        assert!(!g.is_separable());

        let lex2 = ValuedField::lex_bivariate(2).unwrap();
        let h = Poly::new(
            lex2.clone(),
            vec![lex2.var_y().unwrap(), lex2.zero(), lex2.zero(), lex2.one()],
        );
        assert!(h.is_separable());
        assert_eq!(h.gcd_over_k(&h.derivative()).unwrap().degree(), Some(0));
    }

    #[test]
    fn rendering() {
        let k = qp(2);
        assert_eq!(Poly::from_ints(&k, &[-5, 0, 1]).to_string(), "x^2 - 5");
        assert_eq!(
            Poly::from_ints(&k, &[2, -3, 1]).to_string(),
            "x^2 - 3*x + 2"
        );
        let lex = ValuedField::lex_bivariate(2).unwrap();
        let g = Poly::new(
            lex.clone(),
            vec![
                lex.var_x().unwrap(),
                lex.var_y().unwrap(),
                lex.zero(),
                lex.one(),
            ],
        );
        assert_eq!(g.to_string(), "x^3 + (Y)*x + (X)");
        let half = Poly::new(k.clone(), vec![k.rational(-1, 2).unwrap(), k.one()]);
        assert_eq!(half.to_string(), "x + (-1/2)");
    }
}
