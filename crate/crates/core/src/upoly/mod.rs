//! Polynomials and rational functions over `F_{p^s}`: factorization,
//! places, valuations, partial fractions and residue evaluation.

mod factor;
mod partial;
mod place;
mod poly;
mod ratfunc;

pub use factor::{distinct_degree, equal_degree, factor, is_irreducible, squarefree, Factorization};
pub use partial::{partial_fractions, PartialFractions, PoleTerm};
pub use place::{residue_eval, Place, ResidueField};
pub use poly::Poly;
pub use ratfunc::{place_valuation, RatFunc};
