//! Pole stripping: replace `y` by `y - delta` to push every pole order of
//! `u` (and the degree of its polynomial part) off multiples of `p^n`.

use alloc::vec::Vec;

use crate::addpoly::AdditivePoly;
use crate::gf::FFElem;
use crate::upoly::{partial_fractions, PartialFractions, Place, PoleTerm, Poly, RatFunc};

/// One substitution `y -> y - delta`, tagged with the place it acts on
/// (`None` for the constant step).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shift {
    pub place: Option<Place>,
    pub delta: RatFunc,
}

/// Ordered shifts; the new generator is `z = y - sum(delta_j)` and the new
/// right-hand side is `u - f(sum(delta_j))`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SubstitutionLog {
    pub shifts: Vec<Shift>,
}

impl SubstitutionLog {
    pub fn is_identity(&self) -> bool {
        self.shifts.is_empty()
    }

    /// `sum(delta_j)`.
    pub fn total(&self, ctx: &crate::gf::FieldCtx) -> RatFunc {
        self.shifts.iter().fold(RatFunc::zero(ctx), |acc, s| acc.add(&s.delta))
    }

    /// Applies the shifts one at a time to `u`.
    pub fn replay(&self, f: &AdditivePoly, u: &RatFunc) -> RatFunc {
        self.shifts.iter().fold(u.clone(), |acc, s| acc.sub(&f.eval(&s.delta).expect("same field")))
    }

    pub fn extend(&mut self, other: SubstitutionLog) {
        self.shifts.extend(other.shifts);
    }
}

#[derive(Clone, Debug)]
pub(crate) enum Scope {
    /// Every finite pole, infinity, then the constant step.
    Global,
    /// A single place; at infinity only the degree is reduced.
    At(Place),
}

pub(crate) struct Reduction {
    pub log: SubstitutionLog,
    pub u: RatFunc,
    pub pf: PartialFractions,
}

fn p_adic_val(mut e: u64, p: u64) -> u32 {
    let mut m = 0;
    while e > 0 && e % p == 0 {
        e /= p;
        m += 1;
    }
    m
}

/// `x^(p^-n)` in `k0[T]/(P)`.
fn residue_root(x: &Poly, place: &Poly, n: usize) -> Poly {
    let ctx = place.ctx();
    let d = ctx.degree() as usize * place.deg().unwrap();
    let k = (d - n % d) % d;
    let mut r = x.rem(place);
    for _ in 0..k {
        r = r.powmod(ctx.p() as u64, place);
    }
    r
}

fn reduce_pole(f: &AdditivePoly, term: &PoleTerm, log: &mut SubstitutionLog) -> Option<PoleTerm> {
    let p = f.ctx().p() as u64;
    let n = f.n();
    let q = f.q();
    let place = &term.place;
    let mut numer = term.numer.clone();
    let mut e = term.order as u64;
    while e > 0 && p_adic_val(e, p) as usize >= n {
        let k = e / q;
        let lead = numer.rem(place);
        let c = residue_root(&lead, place, n);
        let delta = RatFunc::new(c.clone(), place.pow(k)).unwrap();
        // f(delta) written over place^e
        let mut fd = Poly::zero(f.ctx());
        let mut cp = c.clone();
        let mut pi = 1u64;
        for (i, ai) in f.coeffs().iter().enumerate() {
            if i > 0 {
                cp = cp.pth_power();
                pi *= p;
            }
            if !ai.is_zero() {
                fd = fd.add(&cp.scale(ai).mul(&place.pow(e - k * pi)));
            }
        }
        numer = numer.sub(&fd);
        log.shifts.push(Shift { place: Some(Place::Finite(place.clone())), delta });
        if numer.is_zero() {
            e = 0;
            break;
        }
        while e > 0 {
            let (qq, r) = numer.divrem(place);
            if !r.is_zero() {
                break;
            }
            numer = qq;
            e -= 1;
        }
    }
    (e > 0).then(|| PoleTerm::from_numer(place.clone(), e as usize, numer))
}

fn reduce_poly_part(f: &AdditivePoly, r: &Poly, log: &mut SubstitutionLog) -> Poly {
    let p = f.ctx().p() as u64;
    let n = f.n();
    let q = f.q();
    let mut r = r.clone();
    loop {
        let d = r.degree();
        if d <= 0 || (p_adic_val(d as u64, p) as usize) < n {
            return r;
        }
        let b = r.lc();
        let c = b.frobenius_power(-(n as i64));
        let delta = Poly::monomial(&c, (d as u64 / q) as usize);
        let fd = f.eval(&RatFunc::from_poly(delta.clone())).unwrap();
        r = r.sub(fd.num());
        log.shifts.push(Shift { place: Some(Place::Infinity), delta: RatFunc::from_poly(delta) });
    }
}

/// Some `c in k0` with `f(c) = r`, first in enumeration order.
pub(crate) fn solve_constant(f: &AdditivePoly, r: &FFElem) -> Option<FFElem> {
    if f.n() == 1 && f.is_x_q_minus_x() && r.abs_trace() != 0 {
        return None;
    }
    f.ctx().elements().find(|c| f.eval_code(c.code()) == r.code())
}

pub(crate) fn reduce_with(f: &AdditivePoly, u: &RatFunc, scope: &Scope) -> Reduction {
    let mut log = SubstitutionLog::default();
    let pf = partial_fractions(u);
    let mut terms = Vec::new();
    for t in &pf.terms {
        let act = match scope {
            Scope::Global => true,
            Scope::At(Place::Finite(pl)) => pl == &t.place,
            Scope::At(Place::Infinity) => false,
        };
        if act {
            if let Some(nt) = reduce_pole(f, t, &mut log) {
                terms.push(nt);
            }
        } else {
            terms.push(t.clone());
        }
    }
    let mut poly = pf.poly_part.clone();
    if matches!(scope, Scope::Global | Scope::At(Place::Infinity)) {
        poly = reduce_poly_part(f, &poly, &mut log);
    }
    if matches!(scope, Scope::Global) && poly.degree() == 0 {
        let r = poly.coeff(0);
        if let Some(c) = solve_constant(f, &r) {
            poly = Poly::zero(f.ctx());
            log.shifts.push(Shift { place: None, delta: RatFunc::constant(&c) });
        }
    }
    let pf = PartialFractions { terms, poly_part: poly };
    let u = pf.recombine();
    Reduction { log, u, pf }
}

/// Shape predicate for a reduced right-hand side: every pole order and the
/// degree of a nonconstant polynomial part are `lambda p^m` with `m < n`,
/// and a nonzero constant part lies outside `f(k0)`.
pub fn is_reduced(f: &AdditivePoly, u: &RatFunc) -> bool {
    let p = f.ctx().p() as u64;
    let n = f.n();
    let pf = partial_fractions(u);
    let poles_ok = pf.terms.iter().all(|t| (p_adic_val(t.order as u64, p) as usize) < n);
    let r = &pf.poly_part;
    let poly_ok = match r.degree() {
        d if d > 0 => (p_adic_val(d as u64, p) as usize) < n,
        0 => solve_constant(f, &r.coeff(0)).is_none(),
        _ => true,
    };
    poles_ok && poly_ok
}

pub(crate) fn lambda_m(e: u64, p: u64) -> (u64, u32) {
    let m = p_adic_val(e, p);
    (e / p.pow(m), m)
}
