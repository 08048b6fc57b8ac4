//! Additive polynomials `f(X) = sum a_i X^(p^i)`, their root groups,
//! subspace polynomials, hyperplanes, the operators `wp_a` and Moore
//! matrices.

mod linalg;
mod roots;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

pub use linalg::{
    determinant, fp_independent, fp_rank, fp_span, fp_span_with_coords, moore_matrix, rank_mod_p,
    row_reduce_mod_p, solve,
};
pub use roots::{
    enumerate_hyperplanes, intersection_dim, root_group, subspace_poly, subspace_poly_by_composition, subspace_poly_of_set,
    Hyperplane, RootGroup,
};

use crate::algebra::{Algebra, Ring};
use crate::gf::{FFElem, FieldCtx};
use crate::upoly::Poly;
use crate::{Error, Result};

/// `f(X) = sum_{i<=n} a_i X^(p^i)` with `a_n = 1` and `a_0 != 0`.
#[derive(Clone, PartialEq, Eq)]
pub struct AdditivePoly {
    ctx: FieldCtx,
    a: Vec<FFElem>,
}

impl AdditivePoly {
    /// Coefficients `a_0, ..., a_n` keyed by `p`-power index.
    pub fn new(a: Vec<FFElem>) -> Result<Self> {
        let Some(last) = a.last() else {
            return Err(Error::NotAdditive);
        };
        let ctx = last.ctx().clone();
        if a.iter().any(|x| !x.ctx().same(&ctx)) {
            return Err(Error::ContextMismatch);
        }
        if !last.is_one() || a[0].is_zero() {
            return Err(Error::NotAdditive);
        }
        Ok(AdditivePoly { ctx, a })
    }

    /// `X^(p^n) - X`.
    pub fn x_q_minus_x(ctx: &FieldCtx, n: usize) -> Self {
        let mut a = vec![ctx.zero(); n + 1];
        a[0] = -ctx.one();
        a[n] = ctx.one();
        if n == 0 {
            a[0] = ctx.one();
        }
        AdditivePoly { ctx: ctx.clone(), a }
    }

    /// `X^p - X`.
    pub fn wp(ctx: &FieldCtx) -> Self {
        Self::x_q_minus_x(ctx, 1)
    }

    /// `X^p - c^(p-1) X`.
    pub fn wp_scaled(c: &FFElem) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::ZeroScale);
        }
        let p = c.ctx().p() as u64;
        Ok(AdditivePoly { ctx: c.ctx().clone(), a: vec![-c.pow(p - 1), c.ctx().one()] })
    }

    /// The identity `X`.
    pub fn identity(ctx: &FieldCtx) -> Self {
        AdditivePoly { ctx: ctx.clone(), a: vec![ctx.one()] }
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[FFElem] {
        &self.a
    }

    /// The `p`-degree `n`.
    pub fn n(&self) -> usize {
        self.a.len() - 1
    }

    /// `q = p^n`, the ordinary degree.
    pub fn q(&self) -> u64 {
        (self.ctx.p() as u64).pow(self.n() as u32)
    }

    /// True for `X^(p^n) - X`.
    pub fn is_x_q_minus_x(&self) -> bool {
        *self == Self::x_q_minus_x(&self.ctx, self.n())
    }

    /// Coefficients all in the prime field, so `f` commutes with Frobenius.
    pub fn has_prime_coeffs(&self) -> bool {
        self.a.iter().all(|x| x.in_prime_field())
    }

    pub fn eval<A: Algebra>(&self, x: &A) -> Result<A> {
        if !x.base_field().same(&self.ctx) {
            return Err(Error::ContextMismatch);
        }
        let mut acc = x.zero_like();
        let mut xp = x.clone();
        for (i, ai) in self.a.iter().enumerate() {
            if i > 0 {
                xp = xp.frobenius();
            }
            if !ai.is_zero() {
                acc = acc.add(&xp.scale(ai));
            }
        }
        Ok(acc)
    }

    pub fn eval_elem(&self, x: &FFElem) -> FFElem {
        self.ctx.elem(self.eval_code(x.code()))
    }

    pub(crate) fn eval_code(&self, x: u32) -> u32 {
        let c = &self.ctx;
        let mut acc = 0;
        let mut xp = x;
        for (i, ai) in self.a.iter().enumerate() {
            if i > 0 {
                xp = c.frob(xp, 1);
            }
            acc = c.add(acc, c.mul(ai.code(), xp));
        }
        acc
    }

    /// `self(g(X))`, again additive.
    pub fn compose(&self, g: &AdditivePoly) -> AdditivePoly {
        let n = self.n() + g.n();
        let mut out = vec![self.ctx.zero(); n + 1];
        for (i, ai) in self.a.iter().enumerate() {
            for (j, gj) in g.a.iter().enumerate() {
                out[i + j] = &out[i + j] + &(ai * &gj.frobenius_power(i as i64));
            }
        }
        AdditivePoly { ctx: self.ctx.clone(), a: out }
    }

    /// `self / c` coefficientwise (used for generator formulas).
    pub fn scaled_coeffs(&self, c: &FFElem) -> Vec<FFElem> {
        self.a.iter().map(|x| x * c).collect()
    }

    /// Ordinary polynomial in `X`.
    pub fn to_poly(&self) -> Poly {
        let mut v = vec![0u32; self.q() as usize + 1];
        for (i, ai) in self.a.iter().enumerate() {
            v[(self.ctx.p() as usize).pow(i as u32)] = ai.code();
        }
        Poly::from_codes(&self.ctx, v)
    }

    /// Reads an ordinary polynomial back, if it is monic additive.
    pub fn from_poly(f: &Poly) -> Result<Self> {
        let ctx = f.ctx();
        let p = ctx.p() as usize;
        let is_p_power = |mut d: usize| {
            while d > 1 && d % p == 0 {
                d /= p;
            }
            d == 1
        };
        if f.codes().iter().enumerate().any(|(d, &c)| c != 0 && !is_p_power(d)) {
            return Err(Error::NotAdditive);
        }
        let mut a = Vec::new();
        let mut d = 1;
        while d < f.codes().len() {
            a.push(f.coeff(d));
            d *= p;
        }
        Self::new(a)
    }
}

/// `wp_a(x) = x^p - a^(p-1) x`.
pub fn wp_a<A: Ring>(a: &A, x: &A) -> Result<A> {
    if a.is_zero() {
        return Err(Error::ZeroScale);
    }
    let p = a.characteristic() as u64;
    Ok(x.frobenius().sub(&a.pow(p - 1).mul(x)))
}

/// `wp(x) = x^p - x`.
pub fn wp<A: Ring>(x: &A) -> A {
    x.frobenius().sub(x)
}

impl fmt::Display for AdditivePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_poly().fmt_var("X"))
    }
}

impl fmt::Debug for AdditivePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
