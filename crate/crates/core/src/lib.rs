//! Elementary abelian p-extensions and Artin–Schreier–Witt extensions of
//! rational function fields `k = k0(T)` over finite fields.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is a pure
//! function of its inputs; parsing, reports and the command-line front end
//! live in the `aspw` crate.
//!
//! Module map:
//!
//! - [`gf`]: explicit finite fields `F_{p^s}`, Frobenius, traces, embeddings.
//! - [`upoly`]: polynomials and rational functions over `F_{p^s}`, places,
//!   valuations, factorization and partial fractions.
//! - [`addpoly`]: additive polynomials, their root groups, subspace
//!   polynomials, hyperplanes and Moore matrices.
//! - [`asext`]: extensions `K = k(y)` with `f(y) = u`: reduction, ramification,
//!   subextensions, splitting of places, generator relations and a quotient
//!   algebra model of `K`.
//! - [`witt`]: Witt vectors of finite length, Galois rings and
//!   Artin–Schreier–Witt equations.
//! - [`oracle`]: exhaustive ground truth used to cross-check the criteria.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod addpoly;
pub mod algebra;
pub mod asext;
mod error;
pub mod gf;
pub mod oracle;
pub mod upoly;
pub mod witt;

pub use error::{Error, Result};
pub use gf::{FFElem, FieldCtx, SubfieldEmbedding};
pub use upoly::{Place, Poly, RatFunc};
