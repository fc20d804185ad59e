//! Complete factorization over finite residue fields.
//!
//! Pipeline: squarefree decomposition (with the `p`-th root step needed in
//! characteristic `p`), distinct-degree factorization, then Cantor-Zassenhaus
//! equal-degree splitting. Splitting uses a fixed-seed generator and the final list
//! is sorted, so the output is reproducible.

use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::finite_field::ResidueField;
use crate::poly::ResiduePoly;

/// Monic irreducible factorization `unit * prod phi_i^(l_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueFactorization {
    /// Leading coefficient of the factored polynomial.
    pub unit: u64,
    /// `(phi_i, l_i)` sorted by [`ResiduePoly::canonical_cmp`].
    pub factors: Vec<(ResiduePoly, u32)>,
}

impl ResidueFactorization {
    /// Number of distinct irreducible factors.
    pub fn s(&self) -> usize {
        self.factors.len()
    }

    /// Indices of the repeated factors (`l_i >= 2`).
    pub fn repeated(&self) -> Vec<usize> {
        self.factors
            .iter()
            .enumerate()
            .filter(|(_, (_, l))| *l >= 2)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, l)| *l == 1)
    }

    /// Multiplies the factorization back out.
    pub fn reconstruct(&self, field: &ResidueField) -> ResiduePoly {
        self.factors.iter().fold(
            ResiduePoly::new(field.clone(), vec![self.unit]),
            |acc, (phi, l)| acc.mul(&phi.pow(*l)),
        )
    }

    /// `sum l_i * deg(phi_i)`.
    pub fn total_degree(&self) -> usize {
        self.factors
            .iter()
            .map(|(phi, l)| *l as usize * phi.degree().unwrap_or(0))
            .sum()
    }
}

pub fn factor(poly: &ResiduePoly) -> Result<ResidueFactorization> {
    match poly.degree() {
        None => {
            return Err(Error::Precondition(
                "cannot factor the zero polynomial".into(),
            ))
        }
        Some(0) => {
            return Err(Error::Precondition(
                "cannot factor a constant polynomial".into(),
            ))
        }
        Some(_) => {}
    }
    let unit = poly.leading();
    let monic = poly.make_monic();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decomposition(&monic) {
        for (block, degree) in distinct_degree(&part) {
            for irreducible in equal_degree(&block, degree, &mut rng) {
                factors.push((irreducible, mult));
            }
        }
    }
    factors.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    let result = ResidueFactorization { unit, factors };
    if result.reconstruct(poly.field()) != *poly {
        return Err(Error::Internal(format!(
            "factorization of {poly} does not multiply back"
        )));
    }
    Ok(result)
}

/// Rabin's irreducibility test.
pub fn is_irreducible(poly: &ResiduePoly) -> bool {
    let Some(n) = poly.degree() else {
        return false;
    };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let f = poly.make_monic();
    let x = ResiduePoly::x(f.field());
    let frob = |k: usize| x.frobenius_mod(k, &f).expect("nonzero modulus");
    if frob(n)
        .sub(&x)
        .rem(&f)
        .map(|r| !r.is_zero())
        .unwrap_or(true)
    {
        return false;
    }
    prime_divisors(n)
        .into_iter()
        .all(|r| frob(n / r).sub(&x).gcd(&f).is_one())
}

/// `f = prod g_i^(m_i)` with each `g_i` squarefree, monic and pairwise coprime.
pub fn squarefree_decomposition(f: &ResiduePoly) -> Vec<(ResiduePoly, u32)> {
    let field = f.field().clone();
    let p = field.characteristic();
    let mut out = Vec::new();
    let mut c = f.gcd(&f.derivative());
    let mut w = exact_div(f, &c);
    let mut i = 1u32;
    while !w.is_one() {
        let y = w.gcd(&c);
        let z = exact_div(&w, &y);
        if !z.is_one() {
            out.push((z, i));
        }
        i += 1;
        c = exact_div(&c, &y);
        w = y;
    }
    if !c.is_one() {
        // What is left is a polynomial in x^p.
        let root: Vec<u64> = c
            .coeffs()
            .iter()
            .step_by(p as usize)
            .map(|&a| field.pth_root(a))
            .collect();
        let root = ResiduePoly::new(field, root);
        for (g, m) in squarefree_decomposition(&root) {
            out.push((g, m * p as u32));
        }
    }
    out
}

fn exact_div(a: &ResiduePoly, b: &ResiduePoly) -> ResiduePoly {
    let (q, r) = a.div_rem(b).expect("nonzero divisor");
    debug_assert!(r.is_zero());
    q
}

/// Splits a squarefree monic polynomial into products of irreducibles of equal degree.
fn distinct_degree(f: &ResiduePoly) -> Vec<(ResiduePoly, usize)> {
    let mut out = Vec::new();
    let x = ResiduePoly::x(f.field());
    let mut g = f.clone();
    let mut h = x.rem(&g).expect("nonzero");
    let mut d = 1;
    let q = BigUint::from(f.field().order());
    while g.degree().unwrap_or(0) >= 2 * d {
        h = h.pow_mod(&q, &g).expect("nonzero");
        let common = g.gcd(&h.sub(&x));
        if !common.is_one() {
            g = exact_div(&g, &common);
            h = h.rem(&g).expect("nonzero");
            out.push((common, d));
        }
        d += 1;
    }
    if g.degree().unwrap_or(0) > 0 {
        let deg = g.degree().unwrap();
        out.push((g, deg));
    }
    out
}

/// Cantor-Zassenhaus splitting of a product of distinct irreducibles of degree `d`.
fn equal_degree(f: &ResiduePoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<ResiduePoly> {
    let n = f.degree().expect("nonzero");
    if n == d {
        return vec![f.clone()];
    }
    let field = f.field().clone();
    let q = field.order();
    loop {
        let candidate: Vec<u64> = (0..n).map(|_| rng.gen_range(0..q)).collect();
        let a = ResiduePoly::new(field.clone(), candidate);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if q % 2 == 1 {
            let exp = (BigUint::from(q).pow(d as u32) - BigUint::one()) >> 1;
            a.pow_mod(&exp, f)
                .expect("nonzero")
                .sub(&ResiduePoly::one(&field))
        } else {
            // Absolute trace to F_2: a + a^2 + ... + a^(2^(k*d - 1)).
            let two = BigUint::from(2u32);
            let steps = field.degree() as usize * d;
            let mut term = a.rem(f).expect("nonzero");
            let mut acc = term.clone();
            for _ in 1..steps {
                term = term.pow_mod(&two, f).expect("nonzero");
                acc = acc.add(&term);
            }
            acc
        };
        let g = f.gcd(&b);
        let deg = g.degree().unwrap_or(0);
        if deg > 0 && deg < n {
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&exact_div(f, &g), d, rng));
            return out;
        }
    }
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
