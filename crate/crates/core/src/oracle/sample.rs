//! Seeded random inputs for sampled checks.

use alloc::vec::Vec;

use rand::Rng;

use crate::addpoly::{fp_independent, subspace_poly, AdditivePoly};
use crate::asext::ExtensionSpec;
use crate::gf::{FFElem, FieldCtx};
use crate::upoly::{Poly, RatFunc};

pub use rand_chacha::ChaCha8Rng as SampleRng;

pub fn rng(seed: u64) -> SampleRng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn random_elem<R: Rng>(rng: &mut R, ctx: &FieldCtx) -> FFElem {
    ctx.elem(ctx.code_at(rng.gen_range(0..ctx.size())))
}

pub fn random_nonzero<R: Rng>(rng: &mut R, ctx: &FieldCtx) -> FFElem {
    ctx.elem(ctx.code_at(rng.gen_range(1..ctx.size())))
}

/// Degree at most `deg`.
pub fn random_poly<R: Rng>(rng: &mut R, ctx: &FieldCtx, deg: usize) -> Poly {
    let c: Vec<FFElem> = (0..=deg).map(|_| random_elem(rng, ctx)).collect();
    Poly::from_elems(ctx, &c)
}

/// Numerator and monic denominator of degree at most `deg`.
pub fn random_ratfunc<R: Rng>(rng: &mut R, ctx: &FieldCtx, deg: usize) -> RatFunc {
    let num = random_poly(rng, ctx, deg);
    let dd = rng.gen_range(0..=deg);
    let mut den = random_poly(rng, ctx, dd);
    if den.is_zero() {
        den = Poly::one(ctx);
    }
    RatFunc::new(num, den.monic()).expect("nonzero denominator")
}

/// A random `F_p`-independent `n`-tuple of elements of `ctx`.
pub fn random_subspace_basis<R: Rng>(rng: &mut R, ctx: &FieldCtx, n: usize) -> Vec<FFElem> {
    assert!(n as u32 <= ctx.degree());
    let mut basis: Vec<FFElem> = Vec::new();
    while basis.len() < n {
        let x = random_nonzero(rng, ctx);
        let mut trial = basis.clone();
        trial.push(x);
        if fp_independent(&trial) {
            basis = trial;
        }
    }
    basis
}

/// A random additive polynomial of `p`-degree `n` with all roots in `ctx`.
pub fn random_additive<R: Rng>(rng: &mut R, ctx: &FieldCtx, n: usize) -> AdditivePoly {
    let v = random_subspace_basis(rng, ctx, n);
    subspace_poly(ctx, &v).expect("independent basis")
}

/// Random irreducible spec; retries until the hyperplane test passes.
pub fn random_spec<R: Rng>(rng: &mut R, ctx: &FieldCtx, n: usize, deg: usize) -> ExtensionSpec {
    loop {
        let f = random_additive(rng, ctx, n);
        let u = random_ratfunc(rng, ctx, deg);
        if let Ok(s) = ExtensionSpec::new(f, u) {
            if s.is_irreducible() {
                return s;
            }
        }
    }
}
