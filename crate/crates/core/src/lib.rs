//! Decides whether `R[alpha]` is integrally closed, where `R` is the valuation ring
//! of a valued field `(K, v)` of arbitrary rank and `alpha` is a root of a monic,
//! irreducible, separable `f` with coefficients in `R`.
//!
//! The decision uses the Euclidean remainders of `f` by monic lifts of the repeated
//! irreducible factors of `f mod M`, and is cross-checked by the `f = prod phi^l + pi*T`
//! form and by the `M = (f - prod phi^l)/pi` form.

pub mod criterion;
pub mod error;
pub mod finite_field;
pub mod oracle;
pub mod parse;
pub mod poly;
pub mod report;
pub mod residue_factor;
pub mod sample;
pub mod valued_field;
pub mod valuegroup;

pub use criterion::{DedekindReport, Mode, Options, Verdict};
pub use error::{Error, Result};
pub use poly::{Poly, ResiduePoly};
pub use residue_factor::ResidueFactorization;
pub use valued_field::{FieldElement, ValuedField};
pub use valuegroup::{GroupDescriptor, GroupElement};
