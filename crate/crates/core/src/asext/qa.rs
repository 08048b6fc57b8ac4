//! `K = k[Y]/(f(Y) - u)` as a `p^n`-dimensional `k`-algebra with the
//! translation automorphisms `sigma_xi: Y -> Y + xi`.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::spec::ExtensionSpec;
use crate::addpoly::AdditivePoly;
use crate::algebra::{Algebra, Ring};
use crate::gf::{FFElem, FieldCtx};
use crate::upoly::RatFunc;
use crate::{Error, Result};

#[derive(Clone)]
pub struct QuotientAlgebra(Arc<QAData>);

struct QAData {
    spec: ExtensionSpec,
    dim: usize,
}

impl QuotientAlgebra {
    pub fn new(spec: &ExtensionSpec) -> Self {
        let dim = spec.degree() as usize;
        QuotientAlgebra(Arc::new(QAData { spec: spec.clone(), dim }))
    }

    pub fn spec(&self) -> &ExtensionSpec {
        &self.0.spec
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn ctx(&self) -> &FieldCtx {
        self.0.spec.f().ctx()
    }

    pub fn same(&self, o: &QuotientAlgebra) -> bool {
        Arc::ptr_eq(&self.0, &o.0)
    }

    pub fn zero(&self) -> QAElem {
        QAElem { alg: self.clone(), c: vec![RatFunc::zero(self.ctx()); self.dim()] }
    }

    pub fn from_base(&self, a: &RatFunc) -> QAElem {
        let mut z = self.zero();
        z.c[0] = a.clone();
        z
    }

    /// The class of `Y`.
    pub fn y(&self) -> QAElem {
        let mut z = self.zero();
        z.c[1] = RatFunc::one(self.ctx());
        z
    }

    /// `sum c_j Y^j`; fails when `coeffs.len() > p^n`.
    pub fn element(&self, coeffs: Vec<RatFunc>) -> Result<QAElem> {
        if coeffs.len() > self.dim() {
            return Err(Error::DegreeOverflow { degree: coeffs.len() - 1, bound: self.dim() - 1 });
        }
        if coeffs.iter().any(|c| !c.ctx().same(self.ctx())) {
            return Err(Error::ContextMismatch);
        }
        let mut z = self.zero();
        for (i, c) in coeffs.into_iter().enumerate() {
            z.c[i] = c;
        }
        Ok(z)
    }

    /// `sum g_i Y^(p^i)` for constants `g_i`.
    pub fn additive(&self, g: &[FFElem]) -> QAElem {
        let p = self.ctx().p() as usize;
        let mut v = vec![RatFunc::zero(self.ctx()); 1];
        let mut e = 1usize;
        for gi in g {
            if v.len() <= e {
                v.resize(e + 1, RatFunc::zero(self.ctx()));
            }
            v[e] = v[e].add(&RatFunc::constant(gi));
            e *= p;
        }
        self.wrap(v)
    }

    fn wrap(&self, v: Vec<RatFunc>) -> QAElem {
        QAElem { alg: self.clone(), c: self.reduce(v) }
    }

    /// Rewrites `Y^(p^n)` as `u - sum_{i<n} a_i Y^(p^i)` from the top down.
    fn reduce(&self, mut v: Vec<RatFunc>) -> Vec<RatFunc> {
        let dim = self.dim();
        let f = self.spec().f();
        let u = self.spec().u();
        let p = self.ctx().p() as usize;
        let low: Vec<(usize, FFElem)> = f
            .coeffs()
            .iter()
            .take(f.n())
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(i, a)| (p.pow(i as u32), a.clone()))
            .collect();
        for k in (dim..v.len()).rev() {
            if v[k].is_zero() {
                continue;
            }
            let c = core::mem::replace(&mut v[k], RatFunc::zero(self.ctx()));
            let base = k - dim;
            v[base] = v[base].add(&c.mul(u));
            for (e, a) in &low {
                v[base + e] = v[base + e].sub(&c.scale(a));
            }
        }
        v.resize(dim, RatFunc::zero(self.ctx()));
        v
    }

    /// `sigma_xi` for `xi` in the root group of `f`.
    pub fn sigma(&self, xi: &FFElem, z: &QAElem) -> Result<QAElem> {
        if !self.spec().group().contains(xi) {
            return Err(Error::NotASubgroup);
        }
        if !z.alg.same(self) {
            return Err(Error::ContextMismatch);
        }
        let dim = self.dim();
        let mut acc: Vec<RatFunc> = vec![RatFunc::zero(self.ctx()); dim];
        for j in (0..dim).rev() {
            // acc <- acc * (Y + xi) + c_j; degree stays below dim
            let mut next = vec![RatFunc::zero(self.ctx()); dim];
            for i in 0..dim {
                if acc[i].is_zero() {
                    continue;
                }
                if i + 1 < dim {
                    next[i + 1] = next[i + 1].add(&acc[i]);
                }
                next[i] = next[i].add(&acc[i].scale(xi));
            }
            next[0] = next[0].add(&z.c[j]);
            acc = next;
        }
        Ok(QAElem { alg: self.clone(), c: acc })
    }
}

impl fmt::Debug for QuotientAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuotientAlgebra({} = {})", self.spec().f(), self.spec().u())
    }
}

#[derive(Clone)]
pub struct QAElem {
    alg: QuotientAlgebra,
    c: Vec<RatFunc>,
}

impl QAElem {
    pub fn algebra(&self) -> &QuotientAlgebra {
        &self.alg
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.c
    }

    /// The element as a member of `k`, if it is one.
    pub fn as_base(&self) -> Option<&RatFunc> {
        self.c[1..].iter().all(|c| c.is_zero()).then(|| &self.c[0])
    }

    fn zip(&self, o: &QAElem, op: impl Fn(&RatFunc, &RatFunc) -> RatFunc) -> QAElem {
        assert!(self.alg.same(&o.alg), "elements of different quotient algebras");
        let c = self.c.iter().zip(&o.c).map(|(a, b)| op(a, b)).collect();
        QAElem { alg: self.alg.clone(), c }
    }

    pub fn scale_base(&self, a: &RatFunc) -> QAElem {
        QAElem { alg: self.alg.clone(), c: self.c.iter().map(|x| x.mul(a)).collect() }
    }
}

impl PartialEq for QAElem {
    fn eq(&self, o: &QAElem) -> bool {
        self.alg.same(&o.alg) && self.c == o.c
    }
}

impl fmt::Debug for QAElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.c.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "({c})")?,
                _ => write!(f, "({c})*Y^{j}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Ring for QAElem {
    fn zero_like(&self) -> Self {
        self.alg.zero()
    }

    fn one_like(&self) -> Self {
        self.alg.from_base(&RatFunc::one(self.alg.ctx()))
    }

    fn add(&self, o: &Self) -> Self {
        self.zip(o, RatFunc::add)
    }

    fn sub(&self, o: &Self) -> Self {
        self.zip(o, RatFunc::sub)
    }

    fn mul(&self, o: &Self) -> Self {
        assert!(self.alg.same(&o.alg), "elements of different quotient algebras");
        let dim = self.alg.dim();
        let mut v = vec![RatFunc::zero(self.alg.ctx()); 2 * dim - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] = v[i + j].add(&a.mul(b));
                }
            }
        }
        self.alg.wrap(v)
    }

    fn neg(&self) -> Self {
        QAElem { alg: self.alg.clone(), c: self.c.iter().map(RatFunc::neg).collect() }
    }

    fn is_zero(&self) -> bool {
        self.c.iter().all(RatFunc::is_zero)
    }

    fn from_int(&self, n: i64) -> Self {
        self.alg.from_base(&RatFunc::constant(&self.alg.ctx().from_int(n)))
    }

    fn characteristic(&self) -> u32 {
        self.alg.ctx().p()
    }

    fn frobenius(&self) -> Self {
        let p = self.alg.ctx().p() as usize;
        let dim = self.alg.dim();
        let mut v = vec![RatFunc::zero(self.alg.ctx()); (dim - 1) * p + 1];
        for (j, c) in self.c.iter().enumerate() {
            if !c.is_zero() {
                v[j * p] = c.pth_power();
            }
        }
        self.alg.wrap(v)
    }

    fn same_ring(&self, o: &Self) -> bool {
        self.alg.same(&o.alg)
    }
}

impl Algebra for QAElem {
    fn base_field(&self) -> &FieldCtx {
        self.alg.ctx()
    }

    fn scale(&self, a: &FFElem) -> Self {
        QAElem { alg: self.alg.clone(), c: self.c.iter().map(|x| x.scale(a)).collect() }
    }
}

/// A statement about an element `sum expr_j Y^j` of the algebra.
#[derive(Clone, Debug)]
pub enum Claim {
    /// Fixed by `sigma_xi` for every listed `xi`.
    FixedBy { expr: Vec<RatFunc>, subgroup: Vec<FFElem> },
    /// `g(expr) = rhs`.
    Satisfies { expr: Vec<RatFunc>, equation: AdditivePoly, rhs: RatFunc },
    /// `sigma_xi(expr) = expr + shift`.
    MovedBy { expr: Vec<RatFunc>, xi: FFElem, shift: RatFunc },
}

pub fn qa_verify(qa: &QuotientAlgebra, claim: &Claim) -> Result<bool> {
    match claim {
        Claim::FixedBy { expr, subgroup } => {
            let z = qa.element(expr.clone())?;
            for xi in subgroup {
                if qa.sigma(xi, &z)? != z {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        Claim::Satisfies { expr, equation, rhs } => {
            let z = qa.element(expr.clone())?;
            Ok(equation.eval(&z)? == qa.from_base(rhs))
        }
        Claim::MovedBy { expr, xi, shift } => {
            let z = qa.element(expr.clone())?;
            Ok(qa.sigma(xi, &z)? == z.add(&qa.from_base(shift)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    fn small() -> QuotientAlgebra {
        let k = make_field(2, 2, None).unwrap();
        let t = RatFunc::t(&k);
        let spec = ExtensionSpec::new(AdditivePoly::x_q_minus_x(&k, 2), t.powi(3).unwrap()).unwrap();
        QuotientAlgebra::new(&spec)
    }

    #[test]
    fn defining_equation_holds() {
        let qa = small();
        let y = qa.y();
        let f = qa.spec().f().clone();
        assert_eq!(f.eval(&y).unwrap(), qa.from_base(qa.spec().u()));
        assert_eq!(y.frobenius(), y.mul(&y));
    }

    #[test]
    fn translations_compose() {
        let qa = small();
        let k = qa.ctx().clone();
        let t = RatFunc::t(&k);
        let z = qa.element(vec![t.clone(), RatFunc::one(&k), t.powi(-1).unwrap(), t.clone()]).unwrap();
        for xi in qa.spec().group().elements() {
            assert_eq!(qa.sigma(&xi, &qa.y()).unwrap(), qa.y().add(&qa.from_base(&RatFunc::constant(&xi))));
            for eta in qa.spec().group().elements() {
                let lhs = qa.sigma(&xi, &qa.sigma(&eta, &z).unwrap()).unwrap();
                assert_eq!(lhs, qa.sigma(&(&xi + &eta), &z).unwrap());
            }
            // sigma is multiplicative
            let zz = z.mul(&z);
            let s = qa.sigma(&xi, &z).unwrap();
            assert_eq!(qa.sigma(&xi, &zz).unwrap(), s.mul(&s));
        }
    }

    #[test]
    fn overflow_rejected() {
        let qa = small();
        let k = qa.ctx().clone();
        let err = qa.element(vec![RatFunc::one(&k); 5]).unwrap_err();
        assert_eq!(err, Error::DegreeOverflow { degree: 4, bound: 3 });
    }
}
