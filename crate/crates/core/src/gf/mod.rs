//! Explicit finite fields `F_{p^s}`.
//!
//! An element is stored as its code `c_0 + c_1 p + ... + c_{s-1} p^{s-1}`
//! where `c_i` is the coefficient of `w^i` and `w` is the class of `x`
//! modulo the field's modulus. Multiplication runs through log/exp tables.
//!
//! Enumeration order is lexicographic on `(c_0, c_1, ...)` with `c_0`
//! compared first; every scan in the crate uses it.

mod embed;
pub(crate) mod fp_poly;

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

pub use embed::{embed, SubfieldEmbedding};

use crate::algebra::{Algebra, Ring};
use crate::{Error, Result};

/// Largest field the tables are built for.
pub const FIELD_CAP: u64 = 1 << 20;

struct FieldData {
    p: u32,
    s: u32,
    q: u32,
    modulus: Vec<u32>,
    symbol: String,
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// Handle to an immutable finite field; cheap to clone and share.
#[derive(Clone)]
pub struct FieldCtx(Arc<FieldData>);

/// Builds `F_{p^s}`. With no modulus the lexicographically smallest monic
/// irreducible of degree `s` is used. `modulus` lists coefficients from the
/// constant term up and must be monic of degree `s`.
pub fn make_field(p: u32, s: u32, modulus: Option<&[u32]>) -> Result<FieldCtx> {
    FieldCtx::new(p, s, modulus, "w")
}

impl FieldCtx {
    pub fn new(p: u32, s: u32, modulus: Option<&[u32]>, symbol: &str) -> Result<Self> {
        if !fp_poly::is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if s == 0 {
            return Err(Error::InvalidModulus("degree must be at least 1".into()));
        }
        let size = (p as u64).checked_pow(s).unwrap_or(u64::MAX);
        if size > FIELD_CAP {
            return Err(Error::FieldTooLarge { size, cap: FIELD_CAP });
        }
        let modulus = match modulus {
            Some(m) => {
                let m: Vec<u32> = m.iter().map(|&c| c % p).collect();
                if m.len() != s as usize + 1 || m[s as usize] != 1 {
                    return Err(Error::InvalidModulus(
                        "modulus must be monic of the field degree".into(),
                    ));
                }
                if !fp_poly::is_irreducible(&m, p) {
                    return Err(Error::ReducibleModulus);
                }
                m
            }
            None => fp_poly::smallest_irreducible(p, s),
        };
        let q = size as u32;
        let (exp, log) = build_tables(p, s, q, &modulus);
        Ok(FieldCtx(Arc::new(FieldData {
            p,
            s,
            q,
            modulus,
            symbol: symbol.to_string(),
            exp,
            log,
        })))
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.s
    }

    pub fn size(&self) -> u32 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn symbol(&self) -> &str {
        &self.0.symbol
    }

    /// Same field: same pointer, or same `(p, s, modulus)`.
    pub fn same(&self, other: &FieldCtx) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.s == other.0.s && self.0.modulus == other.0.modulus)
    }

    pub fn zero(&self) -> FFElem {
        FFElem { ctx: self.clone(), code: 0 }
    }

    pub fn one(&self) -> FFElem {
        FFElem { ctx: self.clone(), code: 1 }
    }

    /// The designated generator `w`, the class of `x`.
    pub fn gen(&self) -> FFElem {
        let code = if self.0.s == 1 { (self.0.p - self.0.modulus[0]) % self.0.p } else { self.0.p };
        FFElem { ctx: self.clone(), code }
    }

    pub fn elem(&self, code: u32) -> FFElem {
        assert!(code < self.0.q, "code {code} out of range for F_{}", self.0.q);
        FFElem { ctx: self.clone(), code }
    }

    pub fn from_int(&self, n: i64) -> FFElem {
        let code = self.int_code(n);
        FFElem { ctx: self.clone(), code }
    }

    /// Element with coordinates `c_0, c_1, ...` (reduced mod `p`).
    pub fn from_coeffs(&self, coeffs: &[i64]) -> FFElem {
        let p = self.0.p as i64;
        let mut code = 0u32;
        let mut pw = 1u32;
        let mut rest = coeffs.to_vec();
        // coordinates beyond s - 1 are reduced through w^s = -(m_0 + ... )
        if rest.len() > self.0.s as usize {
            let x = self.gen();
            let mut acc = self.zero();
            let mut wp = self.one();
            for &c in &rest {
                acc = &acc + &(&wp * &self.from_int(c));
                wp = &wp * &x;
            }
            return acc;
        }
        rest.resize(self.0.s as usize, 0);
        for c in rest {
            code += (c.rem_euclid(p) as u32) * pw;
            pw = pw.wrapping_mul(self.0.p);
        }
        FFElem { ctx: self.clone(), code }
    }

    /// All elements in enumeration order.
    pub fn elements(&self) -> impl Iterator<Item = FFElem> + '_ {
        (0..self.0.q).map(move |i| FFElem { ctx: self.clone(), code: self.code_at(i) })
    }

    /// Enumeration index to code (digit reversal).
    pub fn code_at(&self, index: u32) -> u32 {
        let p = self.0.p;
        let mut t = index;
        let mut code = 0;
        for _ in 0..self.0.s {
            code = code * p + t % p;
            t /= p;
        }
        code
    }

    pub fn index_of(&self, code: u32) -> u32 {
        self.code_at(code)
    }

    pub(crate) fn int_code(&self, n: i64) -> u32 {
        n.rem_euclid(self.0.p as i64) as u32
    }

    pub(crate) fn digits(&self, code: u32) -> Vec<u32> {
        let p = self.0.p;
        let mut t = code;
        (0..self.0.s)
            .map(|_| {
                let d = t % p;
                t /= p;
                d
            })
            .collect()
    }

    #[inline]
    pub(crate) fn add(&self, a: u32, b: u32) -> u32 {
        let d = &*self.0;
        if d.p == 2 {
            return a ^ b;
        }
        if d.s == 1 {
            let t = a + b;
            return if t >= d.p { t - d.p } else { t };
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut pw = 1;
        while a > 0 || b > 0 {
            let mut t = a % d.p + b % d.p;
            if t >= d.p {
                t -= d.p;
            }
            out += t * pw;
            pw *= d.p;
            a /= d.p;
            b /= d.p;
        }
        out
    }

    #[inline]
    pub(crate) fn neg(&self, a: u32) -> u32 {
        let d = &*self.0;
        if d.p == 2 {
            return a;
        }
        if d.s == 1 {
            return if a == 0 { 0 } else { d.p - a };
        }
        let mut a = a;
        let mut out = 0;
        let mut pw = 1;
        while a > 0 {
            let t = a % d.p;
            if t != 0 {
                out += (d.p - t) * pw;
            }
            pw *= d.p;
            a /= d.p;
        }
        out
    }

    #[inline]
    pub(crate) fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub(crate) fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let d = &*self.0;
        let e = d.log[a as usize] + d.log[b as usize];
        let n = d.q - 1;
        d.exp[(if e >= n { e - n } else { e }) as usize]
    }

    pub(crate) fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let d = &*self.0;
        let n = d.q - 1;
        let l = d.log[a as usize];
        Some(d.exp[((n - l) % n) as usize])
    }

    pub(crate) fn div(&self, a: u32, b: u32) -> u32 {
        self.mul(a, self.inv(b).expect("division by zero in finite field"))
    }

    pub(crate) fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let d = &*self.0;
        let n = (d.q - 1) as u64;
        let l = d.log[a as usize] as u64 * (e % n) % n;
        d.exp[l as usize]
    }

    /// `a^(p^i)`, any integer `i` (negative means iterated `p`-th roots).
    pub(crate) fn frob(&self, a: u32, i: i64) -> u32 {
        if a == 0 {
            return 0;
        }
        let d = &*self.0;
        let k = i.rem_euclid(d.s as i64) as u32;
        let n = (d.q - 1) as u64;
        let mut l = d.log[a as usize] as u64;
        for _ in 0..k {
            l = l * d.p as u64 % n;
        }
        d.exp[l as usize]
    }

    /// Scalar multiple by an integer.
    pub(crate) fn mul_int(&self, a: u32, n: i64) -> u32 {
        self.mul(a, self.int_code(n))
    }

    /// `Tr_{F_{p^s}/F_{p^t}}`; requires `t | s`.
    pub(crate) fn trace_code(&self, a: u32, t: u32) -> u32 {
        let s = self.0.s;
        let mut acc = 0;
        let mut x = a;
        for _ in 0..s / t {
            acc = self.add(acc, x);
            x = self.frob(x, t as i64);
        }
        acc
    }

    /// `Tr_{F_{p^s}/F_p}` as an integer in `0..p`.
    pub(crate) fn abs_trace(&self, a: u32) -> u32 {
        self.trace_code(a, 1)
    }

    pub fn fmt_code(&self, code: u32, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code_string(code))
    }

    pub fn code_string(&self, code: u32) -> String {
        if code == 0 {
            return "0".into();
        }
        let digits = self.digits(code);
        let sym = &self.0.symbol;
        let mut parts: Vec<String> = Vec::new();
        for (i, &c) in digits.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let term = match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => sym.clone(),
                (1, c) => alloc::format!("{c}*{sym}"),
                (i, 1) => alloc::format!("{sym}^{i}"),
                (i, c) => alloc::format!("{c}*{sym}^{i}"),
            };
            parts.push(term);
        }
        parts.join("+")
    }

    /// True when the printed form of `code` is a single term.
    pub(crate) fn is_monomial_code(&self, code: u32) -> bool {
        self.digits(code).iter().filter(|&&c| c != 0).count() <= 1
    }
}

fn build_tables(p: u32, s: u32, q: u32, modulus: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let to_code = |v: &[u32]| -> u32 {
        let mut c = 0u32;
        for &d in v.iter().rev() {
            c = c * p + d;
        }
        c
    };
    let to_digits = |mut c: u32| -> Vec<u32> {
        let mut v = Vec::with_capacity(s as usize);
        for _ in 0..s {
            v.push(c % p);
            c /= p;
        }
        fp_poly::trim(&mut v);
        v
    };
    if q == 2 {
        return (vec![1], vec![0, 0]);
    }
    let n = q - 1;
    let order: Vec<u64> = fp_poly::prime_factors(n as u64);
    // first primitive element in enumeration order
    let mut index = 1u32;
    let g = loop {
        let mut t = index;
        let mut code = 0;
        for _ in 0..s {
            code = code * p + t % p;
            t /= p;
        }
        let gd = to_digits(code);
        let is_primitive = order.iter().all(|&r| {
            let e = n as u64 / r;
            let mut acc: Vec<u32> = vec![1];
            let mut base = gd.clone();
            let mut k = e;
            while k > 0 {
                if k & 1 == 1 {
                    acc = fp_poly::mulmod(&acc, &base, modulus, p);
                }
                base = fp_poly::mulmod(&base, &base, modulus, p);
                k >>= 1;
            }
            acc != [1]
        });
        if is_primitive {
            break gd;
        }
        index += 1;
    };
    let mut exp = vec![0u32; n as usize];
    let mut log = vec![0u32; q as usize];
    let mut cur: Vec<u32> = vec![1];
    for (i, slot) in exp.iter_mut().enumerate() {
        let c = to_code(&cur);
        *slot = c;
        log[c as usize] = i as u32;
        cur = fp_poly::mulmod(&cur, &g, modulus, p);
    }
    (exp, log)
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}[{:?}]", self.0.q, self.0.modulus)
    }
}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.q)
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for FieldCtx {}

/// An element of an explicit finite field.
#[derive(Clone)]
pub struct FFElem {
    ctx: FieldCtx,
    code: u32,
}

impl FFElem {
    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn code(&self) -> u32 {
        self.code
    }

    /// Position in the field's enumeration order.
    pub fn index(&self) -> u32 {
        self.ctx.index_of(self.code)
    }

    /// Coordinates `c_0, ..., c_{s-1}` in the power basis of `w`.
    pub fn coeffs(&self) -> Vec<u32> {
        self.ctx.digits(self.code)
    }

    pub fn is_zero(&self) -> bool {
        self.code == 0
    }

    pub fn is_one(&self) -> bool {
        self.code == 1
    }

    pub fn inv(&self) -> Option<FFElem> {
        self.ctx.inv(self.code).map(|c| self.with(c))
    }

    pub fn pow(&self, e: u64) -> FFElem {
        self.with(self.ctx.pow(self.code, e))
    }

    pub fn frobenius_power(&self, i: i64) -> FFElem {
        frobenius_power(self, i)
    }

    pub fn trace(&self, target_degree: u32) -> Result<FFElem> {
        trace_map(self, target_degree)
    }

    /// `Tr_{k/F_p}` as an integer in `0..p`.
    pub fn abs_trace(&self) -> u32 {
        self.ctx.abs_trace(self.code)
    }

    /// Membership in the prime field.
    pub fn in_prime_field(&self) -> bool {
        self.code < self.ctx.p()
    }

    /// The value as an integer when it lies in the prime field.
    pub fn as_prime(&self) -> Option<u32> {
        self.in_prime_field().then_some(self.code)
    }

    fn with(&self, code: u32) -> FFElem {
        FFElem { ctx: self.ctx.clone(), code }
    }

    fn check(&self, other: &FFElem) -> Result<()> {
        if self.ctx.same(&other.ctx) {
            Ok(())
        } else {
            Err(Error::IncompatibleContexts)
        }
    }

    pub fn checked_add(&self, o: &FFElem) -> Result<FFElem> {
        self.check(o)?;
        Ok(self.with(self.ctx.add(self.code, o.code)))
    }

    pub fn checked_sub(&self, o: &FFElem) -> Result<FFElem> {
        self.check(o)?;
        Ok(self.with(self.ctx.sub(self.code, o.code)))
    }

    pub fn checked_mul(&self, o: &FFElem) -> Result<FFElem> {
        self.check(o)?;
        Ok(self.with(self.ctx.mul(self.code, o.code)))
    }
}

/// `x^(p^i)`; negative `i` takes iterated `p`-th roots.
pub fn frobenius_power(x: &FFElem, i: i64) -> FFElem {
    x.with(x.ctx.frob(x.code, i))
}

/// Trace from `F_{p^s}` down to its subfield of degree `target_degree`.
pub fn trace_map(x: &FFElem, target_degree: u32) -> Result<FFElem> {
    let s = x.ctx.degree();
    if target_degree == 0 || s % target_degree != 0 {
        return Err(Error::NotASubfield { sub: target_degree, sup: s });
    }
    Ok(x.with(x.ctx.trace_code(x.code, target_degree)))
}

impl PartialEq for FFElem {
    fn eq(&self, other: &Self) -> bool {
        self.code == other.code && self.ctx.same(&other.ctx)
    }
}

impl Eq for FFElem {}

impl PartialOrd for FFElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FFElem {
    fn cmp(&self, other: &Self) -> Ordering {
        self.index().cmp(&other.index())
    }
}

impl core::hash::Hash for FFElem {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.code.hash(state);
    }
}

impl fmt::Debug for FFElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.ctx.fmt_code(self.code, f)
    }
}

impl fmt::Display for FFElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.ctx.fmt_code(self.code, f)
    }
}

macro_rules! ff_binop {
    ($tr:ident, $m:ident, $op:ident) => {
        impl core::ops::$tr<&FFElem> for &FFElem {
            type Output = FFElem;
            fn $m(self, rhs: &FFElem) -> FFElem {
                assert!(self.ctx.same(&rhs.ctx), "finite field elements from different fields");
                self.with(self.ctx.$op(self.code, rhs.code))
            }
        }
        impl core::ops::$tr<FFElem> for FFElem {
            type Output = FFElem;
            fn $m(self, rhs: FFElem) -> FFElem {
                core::ops::$tr::$m(&self, &rhs)
            }
        }
        impl core::ops::$tr<&FFElem> for FFElem {
            type Output = FFElem;
            fn $m(self, rhs: &FFElem) -> FFElem {
                core::ops::$tr::$m(&self, rhs)
            }
        }
    };
}

ff_binop!(Add, add, add);
ff_binop!(Sub, sub, sub);
ff_binop!(Mul, mul, mul);
ff_binop!(Div, div, div);

impl core::ops::Neg for &FFElem {
    type Output = FFElem;
    fn neg(self) -> FFElem {
        self.with(self.ctx.neg(self.code))
    }
}

impl core::ops::Neg for FFElem {
    type Output = FFElem;
    fn neg(self) -> FFElem {
        -&self
    }
}

impl Ring for FFElem {
    fn zero_like(&self) -> Self {
        self.with(0)
    }
    fn one_like(&self) -> Self {
        self.with(1)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        self.code == 0
    }
    fn from_int(&self, n: i64) -> Self {
        self.ctx.from_int(n)
    }
    fn characteristic(&self) -> u32 {
        self.ctx.p()
    }
    fn frobenius(&self) -> Self {
        frobenius_power(self, 1)
    }
    fn same_ring(&self, other: &Self) -> bool {
        self.ctx.same(&other.ctx)
    }
    fn pow(&self, e: u64) -> Self {
        FFElem::pow(self, e)
    }
}

impl Algebra for FFElem {
    fn base_field(&self) -> &FieldCtx {
        &self.ctx
    }
    fn scale(&self, c: &FFElem) -> Self {
        self * c
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f4_default_and_frobenius() {
        let f4 = make_field(2, 2, None).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        let w = f4.gen();
        assert_eq!(w.frobenius_power(1), &w + &f4.one());
        let w1 = &w + &f4.one();
        assert_eq!(w1.frobenius_power(-1), w);
        assert_eq!(w.trace(1).unwrap(), f4.one());
        assert_eq!(f4.one().trace(1).unwrap(), f4.zero());
        assert!(matches!(f4.one().trace(3), Err(Error::NotASubfield { .. })));
    }

    #[test]
    fn f27_relation() {
        let f = make_field(3, 3, Some(&[1, 2, 0, 1])).unwrap();
        let w = f.gen();
        assert_eq!(w.pow(3), &w + &f.from_int(2));
        let d = make_field(3, 3, None).unwrap();
        assert_eq!(d.modulus(), &[1, 0, 2, 1]);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(make_field(4, 1, None).unwrap_err(), Error::NotPrime(4));
        assert_eq!(make_field(3, 2, Some(&[2, 0, 1])).unwrap_err(), Error::ReducibleModulus);
        assert!(matches!(make_field(3, 2, Some(&[1, 1])), Err(Error::InvalidModulus(_))));
    }

    #[test]
    fn enumeration_order() {
        let f9 = make_field(3, 2, None).unwrap();
        let v: Vec<Vec<u32>> = f9.elements().map(|e| e.coeffs()).collect();
        assert_eq!(v[0], [0, 0]);
        assert_eq!(v[1], [0, 1]);
        assert_eq!(v[3], [1, 0]);
        assert_eq!(v[8], [2, 2]);
        for (i, e) in f9.elements().enumerate() {
            assert_eq!(e.index() as usize, i);
        }
    }

    #[test]
    fn fermat_and_frobenius_hom() {
        for (p, s) in [(2, 1), (2, 3), (3, 2), (5, 2), (2, 8), (3, 5)] {
            let f = make_field(p, s, None).unwrap();
            let q = f.size() as u64;
            for x in f.elements() {
                assert_eq!(x.pow(q), x);
                assert_eq!(x.frobenius_power(s as i64), x);
            }
            if q <= 512 {
                for x in f.elements() {
                    for y in f.elements().step_by(3) {
                        assert_eq!((&x + &y).frobenius_power(1), x.frobenius_power(1) + y.frobenius_power(1));
                        assert_eq!((&x * &y).frobenius_power(1), x.frobenius_power(1) * y.frobenius_power(1));
                    }
                }
            }
        }
    }

    #[test]
    fn trace_linear_surjective() {
        for (p, s) in [(2, 2), (3, 2), (3, 3), (2, 9), (7, 3)] {
            let f = make_field(p, s, None).unwrap();
            let mut hit = vec![false; p as usize];
            for x in f.elements() {
                let t = x.trace(1).unwrap();
                assert!(t.in_prime_field());
                hit[t.code() as usize] = true;
                let y = f.gen();
                assert_eq!((&x + &y).trace(1).unwrap(), &t + &y.trace(1).unwrap());
                let two = f.from_int(2);
                assert_eq!((&x * &two).trace(1).unwrap(), &t * &two);
            }
            assert!(hit.iter().all(|&h| h));
        }
    }

    #[test]
    fn display() {
        let f = make_field(3, 3, Some(&[1, 2, 0, 1])).unwrap();
        assert_eq!(f.from_coeffs(&[1, 1, 2]).to_string(), "2*w^2+w+1");
        assert_eq!(f.from_coeffs(&[0, 2]).to_string(), "2*w");
        assert_eq!(f.zero().to_string(), "0");
        // w^3 reduces to w + 2
        assert_eq!(f.from_coeffs(&[0, 0, 0, 1]).to_string(), "w+2");
    }
}
