use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::gf::{FFElem, FieldCtx};

/// Dense univariate polynomial over an explicit finite field; the
/// coefficient of `T^i` sits at index `i` and there is no trailing zero.
#[derive(Clone)]
pub struct Poly {
    ctx: FieldCtx,
    c: Vec<u32>,
}

impl Poly {
    pub fn from_codes(ctx: &FieldCtx, mut c: Vec<u32>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        Poly { ctx: ctx.clone(), c }
    }

    pub fn from_elems(ctx: &FieldCtx, coeffs: &[FFElem]) -> Self {
        let c = coeffs
            .iter()
            .map(|e| {
                assert!(e.ctx().same(ctx), "coefficient from a different field");
                e.code()
            })
            .collect();
        Self::from_codes(ctx, c)
    }

    pub fn zero(ctx: &FieldCtx) -> Self {
        Poly { ctx: ctx.clone(), c: Vec::new() }
    }

    pub fn one(ctx: &FieldCtx) -> Self {
        Self::constant(&ctx.one())
    }

    pub fn constant(c: &FFElem) -> Self {
        Self::from_codes(c.ctx(), vec![c.code()])
    }

    /// The variable `T`.
    pub fn t(ctx: &FieldCtx) -> Self {
        Self::from_codes(ctx, vec![0, 1])
    }

    pub fn monomial(c: &FFElem, k: usize) -> Self {
        let mut v = vec![0; k + 1];
        v[k] = c.code();
        Self::from_codes(c.ctx(), v)
    }

    /// `T - c`.
    pub fn linear(c: &FFElem) -> Self {
        let ctx = c.ctx();
        Self::from_codes(ctx, vec![ctx.neg(c.code()), 1])
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn codes(&self) -> &[u32] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> FFElem {
        self.ctx.elem(self.c.get(i).copied().unwrap_or(0))
    }

    pub fn coeffs(&self) -> Vec<FFElem> {
        self.c.iter().map(|&c| self.ctx.elem(c)).collect()
    }

    pub fn deg(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Degree with `-1` for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.c.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c == [1]
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn lc(&self) -> FFElem {
        self.ctx.elem(self.c.last().copied().unwrap_or(0))
    }

    pub fn is_monic(&self) -> bool {
        self.c.last() == Some(&1)
    }

    pub fn monic(&self) -> Poly {
        match self.c.last() {
            None => self.clone(),
            Some(&l) => self.scale_code(self.ctx.inv(l).unwrap()),
        }
    }

    pub(crate) fn scale_code(&self, k: u32) -> Poly {
        if k == 0 {
            return Poly::zero(&self.ctx);
        }
        Poly::from_codes(&self.ctx, self.c.iter().map(|&x| self.ctx.mul(x, k)).collect())
    }

    pub fn scale(&self, k: &FFElem) -> Poly {
        self.scale_code(k.code())
    }

    pub fn add(&self, o: &Poly) -> Poly {
        self.check(o);
        let n = self.c.len().max(o.c.len());
        let v = (0..n)
            .map(|i| {
                let a = self.c.get(i).copied().unwrap_or(0);
                let b = o.c.get(i).copied().unwrap_or(0);
                self.ctx.add(a, b)
            })
            .collect();
        Poly::from_codes(&self.ctx, v)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly { ctx: self.ctx.clone(), c: self.c.iter().map(|&x| self.ctx.neg(x)).collect() }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        self.check(o);
        if self.is_zero() || o.is_zero() {
            return Poly::zero(&self.ctx);
        }
        let mut v = vec![0u32; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                if b != 0 {
                    v[i + j] = self.ctx.add(v[i + j], self.ctx.mul(a, b));
                }
            }
        }
        Poly::from_codes(&self.ctx, v)
    }

    /// Multiplication by `T^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![0; k];
        v.extend_from_slice(&self.c);
        Poly { ctx: self.ctx.clone(), c: v }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        self.check(d);
        let dd = d.deg().expect("polynomial division by zero");
        let ctx = &self.ctx;
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (Poly::zero(ctx), self.clone());
        }
        let inv = ctx.inv(d.c[dd]).unwrap();
        let mut q = vec![0u32; r.len() - dd];
        for top in (dd..r.len()).rev() {
            let k = ctx.mul(r[top], inv);
            if k == 0 {
                continue;
            }
            q[top - dd] = k;
            for (i, &dc) in d.c.iter().enumerate() {
                if dc != 0 {
                    let idx = top - dd + i;
                    r[idx] = ctx.sub(r[idx], ctx.mul(k, dc));
                }
            }
        }
        r.truncate(dd);
        (Poly::from_codes(ctx, q), Poly::from_codes(ctx, r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.divrem(d).1
    }

    pub fn div_exact(&self, d: &Poly) -> Poly {
        let (q, r) = self.divrem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn divides(&self, f: &Poly) -> bool {
        f.rem(self).is_zero()
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, o: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s*self + t*o = g` and `g` monic.
    pub fn ext_gcd(&self, o: &Poly) -> (Poly, Poly, Poly) {
        let ctx = &self.ctx;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Poly::one(ctx), Poly::zero(ctx));
        let (mut t0, mut t1) = (Poly::zero(ctx), Poly::one(ctx));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = core::mem::replace(&mut r1, r);
            let s2 = s0.sub(&q.mul(&s1));
            s0 = core::mem::replace(&mut s1, s2);
            let t2 = t0.sub(&q.mul(&t1));
            t0 = core::mem::replace(&mut t1, t2);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let k = ctx.inv(*r0.c.last().unwrap()).unwrap();
        (r0.scale_code(k), s0.scale_code(k), t0.scale_code(k))
    }

    /// Inverse modulo `m` when it exists.
    pub fn inv_mod(&self, m: &Poly) -> Option<Poly> {
        let (g, s, _) = self.rem(m).ext_gcd(m);
        g.is_one().then(|| s.rem(m))
    }

    pub fn mulmod(&self, o: &Poly, m: &Poly) -> Poly {
        self.mul(o).rem(m)
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.ctx);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn powmod(&self, mut e: u64, m: &Poly) -> Poly {
        let mut base = self.rem(m);
        let mut acc = Poly::one(&self.ctx).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mulmod(&base, m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mulmod(&base, m);
            }
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        let v = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &x)| self.ctx.mul_int(x, i as i64))
            .collect();
        Poly::from_codes(&self.ctx, v)
    }

    /// Evaluation at a point of the coefficient field.
    pub fn eval(&self, x: &FFElem) -> FFElem {
        self.ctx.elem(self.eval_code(x.code()))
    }

    pub(crate) fn eval_code(&self, x: u32) -> u32 {
        let mut acc = 0;
        for &c in self.c.iter().rev() {
            acc = self.ctx.add(self.ctx.mul(acc, x), c);
        }
        acc
    }

    /// Applies `x -> x^(p^i)` to every coefficient.
    pub fn frobenius_coeffs(&self, i: i64) -> Poly {
        Poly::from_codes(&self.ctx, self.c.iter().map(|&x| self.ctx.frob(x, i)).collect())
    }

    /// `self(T)^p`, computed as `self^(p)(T^p)`.
    pub fn pth_power(&self) -> Poly {
        let p = self.ctx.p() as usize;
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![0u32; (self.c.len() - 1) * p + 1];
        for (i, &x) in self.c.iter().enumerate() {
            v[i * p] = self.ctx.frob(x, 1);
        }
        Poly::from_codes(&self.ctx, v)
    }

    /// `p`-th root of a polynomial in `T^p`.
    pub(crate) fn pth_root(&self) -> Poly {
        let p = self.ctx.p() as usize;
        let v = self
            .c
            .iter()
            .enumerate()
            .filter(|(i, _)| i % p == 0)
            .map(|(_, &x)| self.ctx.frob(x, -1))
            .collect();
        debug_assert!(self.c.iter().enumerate().all(|(i, &x)| i % p == 0 || x == 0));
        Poly::from_codes(&self.ctx, v)
    }

    /// Multiplicity of `p` as a factor of `self` (self nonzero).
    pub fn multiplicity(&self, p: &Poly) -> usize {
        let mut n = 0;
        let mut f = self.clone();
        loop {
            let (q, r) = f.divrem(p);
            if !r.is_zero() {
                return n;
            }
            n += 1;
            f = q;
        }
    }

    /// `self(g(T))`.
    pub fn compose(&self, g: &Poly) -> Poly {
        let mut acc = Poly::zero(&self.ctx);
        for &c in self.c.iter().rev() {
            acc = acc.mul(g).add(&Poly::from_codes(&self.ctx, vec![c]));
        }
        acc
    }

    fn check(&self, o: &Poly) {
        assert!(self.ctx.same(&o.ctx), "polynomials over different fields");
    }

    pub fn fmt_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts: Vec<String> = Vec::new();
        for (k, &c) in self.c.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let cs = self.ctx.code_string(c);
            let mono = match k {
                0 => String::new(),
                1 => var.into(),
                k => alloc::format!("{var}^{k}"),
            };
            let term = if k == 0 {
                cs
            } else if c == 1 {
                mono
            } else if self.ctx.is_monomial_code(c) {
                alloc::format!("{cs}*{mono}")
            } else {
                alloc::format!("({cs})*{mono}")
            };
            parts.push(term);
        }
        parts.join("+")
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.c.iter().filter(|&&c| c != 0).count()
    }
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.c == other.c && self.ctx.same(&other.ctx)
    }
}

impl Eq for Poly {}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree first, then coefficients from the constant term up in
/// enumeration order.
impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.c.len().cmp(&other.c.len()).then_with(|| {
            for (a, b) in self.c.iter().zip(&other.c) {
                let o = self.ctx.index_of(*a).cmp(&other.ctx.index_of(*b));
                if o != Ordering::Equal {
                    return o;
                }
            }
            Ordering::Equal
        })
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var("T"))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var("T"))
    }
}

macro_rules! poly_binop {
    ($tr:ident, $m:ident) => {
        impl core::ops::$tr<&Poly> for &Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                Poly::$m(self, rhs)
            }
        }
        impl core::ops::$tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                Poly::$m(&self, &rhs)
            }
        }
    };
}

poly_binop!(Add, add);
poly_binop!(Sub, sub);
poly_binop!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    #[test]
    fn division_and_gcd() {
        let f = make_field(3, 2, None).unwrap();
        let t = Poly::t(&f);
        let one = Poly::one(&f);
        let a = (&t + &one).pow(3).mul(&t);
        let b = (&t + &one).mul(&t.pow(2));
        let g = a.gcd(&b);
        assert_eq!(g, (&t + &one).mul(&t));
        let (q, r) = a.divrem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        let (g2, s, u) = a.ext_gcd(&b);
        assert_eq!(&(&s * &a) + &(&u * &b), g2);
    }

    #[test]
    fn display_shapes() {
        let f = make_field(3, 3, Some(&[1, 2, 0, 1])).unwrap();
        let w = f.gen();
        let one = f.one();
        let p = Poly::from_elems(&f, &[&w + &one, one.clone(), f.zero(), one.clone()]);
        assert_eq!(p.to_string(), "T^3+T+w+1");
        let q = Poly::from_elems(&f, &[f.zero(), &w + &one, f.from_int(2)]);
        assert_eq!(q.to_string(), "2*T^2+(w+1)*T");
    }

    #[test]
    fn pth_power_matches_multiplication() {
        let f = make_field(2, 2, None).unwrap();
        let p = Poly::from_elems(&f, &[f.gen(), f.one(), f.gen()]);
        assert_eq!(p.pth_power(), p.mul(&p));
        assert_eq!(p.pth_power().pth_root(), p);
    }
}
