//! Reproducible random elements and polynomials for each field variant.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::{Poly, ResiduePoly};
use crate::residue_factor::is_irreducible;
use crate::valued_field::{FieldElement, ValuedField};

/// Fields covering every value-group shape, used by the randomized checks.
pub fn standard_fields() -> Vec<ValuedField> {
    vec![
        ValuedField::p_adic(2).expect("prime"),
        ValuedField::p_adic(3).expect("prime"),
        ValuedField::p_adic(5).expect("prime"),
        ValuedField::lex_bivariate(2).expect("field size"),
        ValuedField::lex_bivariate(3).expect("field size"),
        ValuedField::lambda_trivial(2, 2).expect("field size"),
        ValuedField::lambda_trivial(3, 2).expect("field size"),
        ValuedField::lambda_composite(2, 2).expect("prime"),
        ValuedField::lambda_composite(3, 3).expect("prime"),
    ]
}

pub struct Sampler {
    field: ValuedField,
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(field: &ValuedField, seed: u64) -> Self {
        Sampler {
            field: field.clone(),
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn field(&self) -> &ValuedField {
        &self.field
    }

    fn residue_coeff(&mut self) -> u64 {
        let q = self.field.residue_field().order();
        self.rng.gen_range(0..q)
    }

    fn small_int(&mut self, bound: i64) -> FieldElement {
        let n = self.rng.gen_range(-bound..=bound);
        self.field.from_int(n)
    }

    /// A nonzero element of non-negative value, usually with few terms.
    pub fn integral_element(&mut self) -> FieldElement {
        loop {
            let e = self.integral_element_or_zero();
            if !e.is_zero() {
                return e;
            }
        }
    }

    /// As [`Sampler::integral_element`], with zero allowed.
    pub fn integral_element_or_zero(&mut self) -> FieldElement {
        let k = self.field.clone();
        match &k {
            ValuedField::PAdic { p, .. } => {
                let num = self.small_int(20);
                if self.rng.gen_bool(0.2) {
                    let mut den = self.rng.gen_range(1..8i64);
                    while den % *p as i64 == 0 {
                        den += 1;
                    }
                    num.checked_div(&k.from_int(den)).expect("nonzero")
                } else {
                    num
                }
            }
            ValuedField::LexBivariate { .. } => {
                let terms = self.rng.gen_range(0..=3);
                let mut acc = k.zero();
                for _ in 0..terms {
                    let c = self.residue_coeff();
                    let (i, j) = (self.rng.gen_range(0..3), self.rng.gen_range(0..3));
                    let m = k.monomial(i, j).expect("bivariate");
                    acc = acc.add(&k.lift_raw(c).mul(&m));
                }
                if self.rng.gen_bool(0.1) {
                    let unit = k.one().add(&k.monomial(1, 1).expect("bivariate"));
                    acc = acc.checked_div(&unit).expect("unit");
                }
                acc
            }
            ValuedField::LambdaTrivial { .. } => {
                let terms = self.rng.gen_range(0..=3);
                let mut acc = k.zero();
                for _ in 0..terms {
                    let c = self.residue_coeff();
                    let m = k.monomial(self.rng.gen_range(0..4), 0).expect("univariate");
                    acc = acc.add(&k.lift_raw(c).mul(&m));
                }
                acc
            }
            ValuedField::LambdaComposite { .. } => {
                let terms = self.rng.gen_range(0..=3);
                let mut acc = k.zero();
                for _ in 0..terms {
                    let c = self.small_int(6);
                    let m = k.monomial(self.rng.gen_range(0..3), 0).expect("univariate");
                    acc = acc.add(&c.mul(&m));
                }
                acc
            }
        }
    }

    /// A nonzero element, possibly of negative value.
    pub fn element(&mut self) -> FieldElement {
        let num = self.integral_element();
        if self.rng.gen_bool(0.5) {
            return num;
        }
        let den = self.integral_element();
        num.checked_div(&den).expect("nonzero denominator")
    }

    /// A nonzero element of positive value.
    pub fn positive_element(&mut self) -> FieldElement {
        let k = self.field.clone();
        let base = match &k {
            ValuedField::PAdic { p, .. } => vec![k.from_int(*p as i64)],
            ValuedField::LexBivariate { .. } => vec![
                k.var_x().expect("bivariate"),
                k.var_y().expect("bivariate"),
                k.monomial(1, 1).expect("bivariate"),
            ],
            ValuedField::LambdaTrivial { .. } => vec![k.var_x().expect("univariate")],
            ValuedField::LambdaComposite { p, .. } => {
                vec![k.from_int(*p as i64), k.var_x().expect("univariate")]
            }
        };
        let b = base.choose(&mut self.rng).expect("nonempty").clone();
        let unit = loop {
            let u = self.integral_element();
            if !u.in_maximal_ideal() {
                break u;
            }
        };
        b.mul(&unit)
    }

    /// A random monic residue polynomial of the given degree.
    pub fn residue_monic(&mut self, degree: usize) -> ResiduePoly {
        let mut coeffs: Vec<u64> = (0..degree).map(|_| self.residue_coeff()).collect();
        coeffs.push(1);
        ResiduePoly::new(self.field.residue_field().clone(), coeffs)
    }

    pub fn residue_irreducible(&mut self, degree: usize) -> ResiduePoly {
        loop {
            let p = self.residue_monic(degree);
            if is_irreducible(&p) {
                return p;
            }
        }
    }

    /// Integral polynomial of degree below `bound`.
    pub fn integral_poly(&mut self, bound: usize) -> Poly {
        let coeffs = (0..bound)
            .map(|_| self.integral_element_or_zero())
            .collect();
        Poly::new(self.field.clone(), coeffs)
    }

    /// Monic integral polynomial of the given degree, not necessarily separable.
    pub fn monic_integral(&mut self, degree: usize) -> Poly {
        let lead = Poly::monomial(self.field.one(), degree);
        if self.rng.gen_bool(0.5) {
            return lead.add(&self.integral_poly(degree));
        }
        // Force repeated residue factors: psi^l * h + pi * T.
        let psi_deg = self.rng.gen_range(1..=2.min(degree));
        let max_l = degree / psi_deg;
        let l = self.rng.gen_range(1..=max_l) as u32;
        let psi_bar = self.residue_monic(psi_deg);
        let psi = Poly::lift(&self.field, &psi_bar);
        let rest = degree - psi_deg * l as usize;
        let h = Poly::monomial(self.field.one(), rest).add(&self.integral_poly(rest));
        let mut pi = self.positive_element();
        if self.rng.gen_bool(0.3) {
            pi = pi.mul(&self.positive_element());
        }
        let t = self.integral_poly(degree).scale(&pi);
        psi.pow(l).mul(&h).add(&t)
    }

    /// Monic integral separable polynomial of degree in `1..=max_degree`.
    pub fn separable_monic(&mut self, max_degree: usize) -> Poly {
        loop {
            let degree = self.rng.gen_range(1..=max_degree);
            let f = self.monic_integral(degree);
            if f.separability_fast() == Some(true) {
                return f;
            }
        }
    }

    /// `psi^l + pi^k * (Q*psi + U)` with `U` of value zero and degree below `deg psi`.
    fn eisenstein_shape(&mut self, max_degree: usize, k: u32, min_l: usize) -> Option<Poly> {
        let pi = self.field.uniformizer()?;
        loop {
            let psi_deg = self.rng.gen_range(1..=2.min(max_degree / min_l));
            let l = self.rng.gen_range(min_l..=max_degree / psi_deg);
            let psi_bar = self.residue_irreducible(psi_deg);
            let psi = Poly::lift(&self.field, &psi_bar);
            let unit_poly = loop {
                let u = self.integral_poly(psi_deg);
                if !u.is_zero() && u.gauss_valuation().is_zero() {
                    break u;
                }
            };
            let q = self.integral_poly((l - 1) * psi_deg);
            let tail = q.mul(&psi).add(&unit_poly).scale(&pi.pow(k));
            let g = psi.pow(l as u32).add(&tail);
            if g.separability_fast() == Some(true) {
                return Some(g);
            }
        }
    }

    /// Separable v-Eisenstein polynomial of degree at most `max_degree`; `None` when the
    /// value group has no minimum.
    pub fn eisenstein(&mut self, max_degree: usize) -> Option<Poly> {
        self.eisenstein_shape(max_degree, 1, 1)
    }

    /// A repeated residue factor with remainder value at least `2*sigma`, never v-Eisenstein.
    pub fn eisenstein_perturbed(&mut self, max_degree: usize) -> Option<Poly> {
        self.eisenstein_shape(max_degree, 2, 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_are_reproducible() {
        for k in standard_fields() {
            let a: Vec<Poly> = {
                let mut s = Sampler::new(&k, 7);
                (0..5).map(|_| s.separable_monic(4)).collect()
            };
            let mut s = Sampler::new(&k, 7);
            let b: Vec<Poly> = (0..5).map(|_| s.separable_monic(4)).collect();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn generated_shapes() {
        for k in standard_fields() {
            let mut s = Sampler::new(&k, 11);
            for _ in 0..10 {
                assert!(s.integral_element().is_integral());
                assert!(s.positive_element().in_maximal_ideal());
                let f = s.separable_monic(5);
                assert!(f.is_monic() && f.is_integral() && f.is_separable());
            }
            match s.eisenstein(6) {
                Some(g) => assert!(g.is_monic() && g.is_integral()),
                None => assert!(k.sigma().is_none()),
            }
        }
    }
}
