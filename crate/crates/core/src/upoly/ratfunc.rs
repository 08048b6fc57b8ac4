use alloc::vec::Vec;
use core::fmt;

use super::{partial_fractions, Place, Poly};
use crate::algebra::{Algebra, Ring};
use crate::gf::{FFElem, FieldCtx};
use crate::{Error, Result};

/// Element of `k0(T)` kept in lowest terms with a monic denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc { den: Poly::one(num.ctx()), num };
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g), den.div_exact(&g))
            }
        };
        let l = den.lc();
        if l.is_one() {
            RatFunc { num, den }
        } else {
            let li = l.inv().unwrap();
            RatFunc { num: num.scale(&li), den: den.scale(&li) }
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        let den = Poly::one(p.ctx());
        RatFunc { num: p, den }
    }

    pub fn constant(c: &FFElem) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn zero(ctx: &FieldCtx) -> Self {
        Self::from_poly(Poly::zero(ctx))
    }

    pub fn one(ctx: &FieldCtx) -> Self {
        Self::from_poly(Poly::one(ctx))
    }

    pub fn t(ctx: &FieldCtx) -> Self {
        Self::from_poly(Poly::t(ctx))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn ctx(&self) -> &FieldCtx {
        self.num.ctx()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.den.is_one() && self.num.is_constant()
    }

    pub fn constant_value(&self) -> Option<FFElem> {
        self.is_constant().then(|| self.num.coeff(0))
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        if self.den == o.den {
            return Self::normalized(self.num.add(&o.num), self.den.clone());
        }
        let g = self.den.gcd(&o.den);
        let a = self.den.div_exact(&g);
        let b = o.den.div_exact(&g);
        let num = self.num.mul(&b).add(&o.num.mul(&a));
        Self::normalized(num, a.mul(&o.den))
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero(self.ctx());
        }
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let num = self.num.div_exact(&g1).mul(&o.num.div_exact(&g2));
        let den = self.den.div_exact(&g2).mul(&o.den.div_exact(&g1));
        Self::normalized_coprime(num, den)
    }

    fn normalized_coprime(num: Poly, den: Poly) -> RatFunc {
        let l = den.lc();
        if l.is_one() {
            RatFunc { num, den }
        } else {
            let li = l.inv().unwrap();
            RatFunc { num: num.scale(&li), den: den.scale(&li) }
        }
    }

    pub fn inv(&self) -> Option<RatFunc> {
        if self.is_zero() {
            return None;
        }
        Some(Self::normalized_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &RatFunc) -> Result<RatFunc> {
        let inv = o.inv().ok_or(Error::ZeroPolynomial)?;
        Ok(self.mul(&inv))
    }

    pub fn scale(&self, c: &FFElem) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero(self.ctx());
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Integer powers; negative exponents invert.
    pub fn powi(&self, e: i64) -> Result<RatFunc> {
        let base = if e < 0 { self.inv().ok_or(Error::ZeroPolynomial)? } else { self.clone() };
        let k = e.unsigned_abs();
        Ok(RatFunc { num: base.num.pow(k), den: base.den.pow(k) })
    }

    /// `u^p`.
    pub fn pth_power(&self) -> RatFunc {
        RatFunc { num: self.num.pth_power(), den: self.den.pth_power() }
    }

    /// Valuation at a place; `None` stands for `+infinity` (u = 0).
    pub fn valuation(&self, place: &Place) -> Option<i64> {
        place_valuation(self, place)
    }

    /// Value at a point of `k0`, when `T = x` is not a pole.
    pub fn eval(&self, x: &FFElem) -> Option<FFElem> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(&self.num.eval(x) / &d)
    }

    /// `u(T) -> u(g(T))` for a polynomial `g`.
    pub fn compose_poly(&self, g: &Poly) -> RatFunc {
        Self::normalized(self.num.compose(g), self.den.compose(g))
    }

    /// Degree-like size used for bounding work: `max(deg num, deg den)`.
    pub fn height(&self) -> usize {
        self.num.degree().max(self.den.degree()).max(0) as usize
    }
}

/// `v_P(u)`; `None` means `+infinity`.
pub fn place_valuation(u: &RatFunc, place: &Place) -> Option<i64> {
    if u.is_zero() {
        return None;
    }
    Some(match place {
        Place::Infinity => u.den.degree() - u.num.degree(),
        Place::Finite(p) => u.num.multiplicity(p) as i64 - u.den.multiplicity(p) as i64,
    })
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Prints the partial-fraction shape: pole terms by place (highest power
/// first), then the polynomial part.
impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_poly() {
            return f.write_str(&self.num.fmt_var("T"));
        }
        let pf = partial_fractions(self);
        let mut parts: Vec<alloc::string::String> = Vec::new();
        for term in &pf.terms {
            let ps = term.place.fmt_var("T");
            let den_base =
                if term.place.term_count() == 1 && term.place.lc().is_one() { ps } else { alloc::format!("({ps})") };
            for j in (1..=term.order).rev() {
                let c = &term.digits[j - 1];
                if c.is_zero() {
                    continue;
                }
                let cs = c.fmt_var("T");
                let num = if c.term_count() == 1 && c.ctx().is_monomial_code(*c.codes().last().unwrap()) {
                    cs
                } else {
                    alloc::format!("({cs})")
                };
                let den = if j == 1 { den_base.clone() } else { alloc::format!("{den_base}^{j}") };
                parts.push(alloc::format!("{num}/{den}"));
            }
        }
        if !pf.poly_part.is_zero() {
            parts.push(pf.poly_part.fmt_var("T"));
        }
        f.write_str(&parts.join(" + "))
    }
}

macro_rules! rf_binop {
    ($tr:ident, $m:ident) => {
        impl core::ops::$tr<&RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                RatFunc::$m(self, rhs)
            }
        }
        impl core::ops::$tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                RatFunc::$m(&self, &rhs)
            }
        }
    };
}

rf_binop!(Add, add);
rf_binop!(Sub, sub);
rf_binop!(Mul, mul);

impl core::ops::Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc::neg(self)
    }
}

impl Ring for RatFunc {
    fn zero_like(&self) -> Self {
        RatFunc::zero(self.ctx())
    }
    fn one_like(&self) -> Self {
        RatFunc::one(self.ctx())
    }
    fn add(&self, rhs: &Self) -> Self {
        RatFunc::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        RatFunc::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        RatFunc::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        RatFunc::neg(self)
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn from_int(&self, n: i64) -> Self {
        RatFunc::constant(&self.ctx().from_int(n))
    }
    fn characteristic(&self) -> u32 {
        self.ctx().p()
    }
    fn frobenius(&self) -> Self {
        self.pth_power()
    }
    fn same_ring(&self, other: &Self) -> bool {
        self.ctx().same(other.ctx())
    }
    fn pow(&self, e: u64) -> Self {
        RatFunc { num: self.num.pow(e), den: self.den.pow(e) }
    }
}

impl Algebra for RatFunc {
    fn base_field(&self) -> &FieldCtx {
        self.ctx()
    }
    fn scale(&self, c: &FFElem) -> Self {
        RatFunc::scale(self, c)
    }
}
