use alloc::vec::Vec;

use super::reduce::{lambda_m, reduce_with, Scope, SubstitutionLog};
use crate::addpoly::{enumerate_hyperplanes, root_group, AdditivePoly, Hyperplane, RootGroup};
use crate::upoly::{Place, RatFunc};
use crate::{Error, Result};

/// An extension `K = k(y)`, `f(y) = u`, with the root group of `f` and its
/// hyperplanes precomputed.
#[derive(Clone, Debug)]
pub struct ExtensionSpec {
    f: AdditivePoly,
    u: RatFunc,
    group: RootGroup,
    hyperplanes: Vec<Hyperplane>,
    irreducible: bool,
}

impl ExtensionSpec {
    pub fn new(f: AdditivePoly, u: RatFunc) -> Result<Self> {
        if !f.ctx().same(u.ctx()) {
            return Err(Error::ContextMismatch);
        }
        let group = root_group(&f)?;
        let hyperplanes = enumerate_hyperplanes(&group);
        let irreducible = hyperplanes.iter().all(|h| !wp_membership(&hyperplane_rhs(&u, h)).0);
        Ok(ExtensionSpec { f, u, group, hyperplanes, irreducible })
    }

    /// Like [`ExtensionSpec::new`] but rejects reducible equations.
    pub fn irreducible(f: AdditivePoly, u: RatFunc) -> Result<Self> {
        let s = Self::new(f, u)?;
        s.require_irreducible()?;
        Ok(s)
    }

    pub fn f(&self) -> &AdditivePoly {
        &self.f
    }

    pub fn u(&self) -> &RatFunc {
        &self.u
    }

    pub fn group(&self) -> &RootGroup {
        &self.group
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn is_irreducible(&self) -> bool {
        self.irreducible
    }

    pub fn require_irreducible(&self) -> Result<()> {
        if self.irreducible {
            Ok(())
        } else {
            Err(Error::NotIrreducible)
        }
    }

    /// `p^n`.
    pub fn degree(&self) -> u64 {
        self.f.q()
    }

    /// Same `f`, different right-hand side.
    pub fn with_u(&self, u: RatFunc) -> Result<Self> {
        if !self.f.ctx().same(u.ctx()) {
            return Err(Error::ContextMismatch);
        }
        let irreducible = self.hyperplanes.iter().all(|h| !wp_membership(&hyperplane_rhs(&u, h)).0);
        Ok(ExtensionSpec { u, irreducible, ..self.clone() })
    }
}

/// Right-hand side `u / f_H(eps_H)^p` of the degree-`p` subextension fixed by `H`.
pub fn hyperplane_rhs(u: &RatFunc, h: &Hyperplane) -> RatFunc {
    let c = h.fh_at_eps.pow(u.ctx().p() as u64);
    u.scale(&c.inv().expect("f_H(eps) is nonzero"))
}

/// Decides `w in wp(k)`; on success returns `delta` with `delta^p - delta = w`.
pub fn wp_membership(w: &RatFunc) -> (bool, Option<RatFunc>) {
    let f = AdditivePoly::wp(w.ctx());
    let red = reduce_with(&f, w, &Scope::Global);
    if red.u.is_zero() {
        let delta = red.log.total(w.ctx());
        debug_assert!(f.eval(&delta).unwrap() == *w);
        (true, Some(delta))
    } else {
        (false, None)
    }
}

/// Every hyperplane subextension is a proper degree-`p` extension.
pub fn check_irreducible(spec: &ExtensionSpec) -> bool {
    spec.irreducible
}

/// Strips the pole of `u` at one place; other places are untouched.
pub fn normalize_at(spec: &ExtensionSpec, place: &Place) -> Result<(SubstitutionLog, RatFunc)> {
    spec.require_irreducible()?;
    let red = reduce_with(&spec.f, &spec.u, &Scope::At(place.clone()));
    Ok((red.log, red.u))
}

/// Strips every pole, the polynomial part, and a constant in `f(k0)`.
pub fn reduce_global(spec: &ExtensionSpec) -> Result<(SubstitutionLog, ExtensionSpec)> {
    spec.require_irreducible()?;
    let red = reduce_with(&spec.f, &spec.u, &Scope::Global);
    Ok((red.log, ExtensionSpec { u: red.u, ..spec.clone() }))
}

/// Ramification data at one place read off a reduced right-hand side:
/// pole order `lambda p^m`, bound `p^(n-m)` on the ramification index, exact
/// when `m = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamifiedPlace {
    pub place: Place,
    pub order: u64,
    pub lambda: u64,
    pub m: u32,
    pub e_bound: u64,
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamificationReport {
    pub reduced_u: RatFunc,
    pub log: SubstitutionLog,
    pub finite: Vec<RamifiedPlace>,
    /// `None` when infinity is unramified.
    pub infinity: Option<RamifiedPlace>,
}

impl RamificationReport {
    pub fn at(&self, place: &Place) -> Option<&RamifiedPlace> {
        match place {
            Place::Infinity => self.infinity.as_ref(),
            _ => self.finite.iter().find(|r| &r.place == place),
        }
    }

    pub fn ramified_places(&self) -> impl Iterator<Item = &RamifiedPlace> {
        self.finite.iter().chain(self.infinity.iter())
    }
}

fn ramified(place: Place, order: u64, p: u64, n: usize) -> RamifiedPlace {
    let (lambda, m) = lambda_m(order, p);
    let e_bound = p.pow(n as u32 - m);
    RamifiedPlace { place, order, lambda, m, e_bound, exact: m == 0 }
}

pub fn ramification_report(spec: &ExtensionSpec) -> Result<RamificationReport> {
    spec.require_irreducible()?;
    let red = reduce_with(&spec.f, &spec.u, &Scope::Global);
    let p = spec.f.ctx().p() as u64;
    let n = spec.f.n();
    let finite = red
        .pf
        .terms
        .iter()
        .map(|t| ramified(Place::Finite(t.place.clone()), t.order as u64, p, n))
        .collect();
    let d = red.pf.poly_part.degree();
    let infinity = (d > 0).then(|| ramified(Place::Infinity, d as u64, p, n));
    Ok(RamificationReport { reduced_u: red.u, log: red.log, finite, infinity })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;
    use crate::upoly::Poly;

    fn t_plus_1_pow(ctx: &crate::FieldCtx, e: i64) -> RatFunc {
        let t1 = RatFunc::from_poly(Poly::linear(&ctx.from_int(-1)));
        t1.powi(e).unwrap()
    }

    #[test]
    fn reduces_cubic_field_example() {
        let k = make_field(3, 3, Some(&[1, 2, 0, 1])).unwrap();
        let w = k.gen();
        let t = RatFunc::t(&k);
        let poly = t.powi(9).unwrap() + t.powi(3).unwrap() + t.clone() + RatFunc::constant(&(&w + &k.one()));
        let u = t_plus_1_pow(&k, -54) + t_plus_1_pow(&k, -1) + poly.clone();
        let spec = ExtensionSpec::new(AdditivePoly::x_q_minus_x(&k, 3), u.clone()).unwrap();
        assert!(spec.is_irreducible());
        let (log, reduced) = reduce_global(&spec).unwrap();
        let r = reduced.u().clone();
        assert!(crate::asext::is_reduced(spec.f(), &r));
        let expect = t_plus_1_pow(&k, -2) + t_plus_1_pow(&k, -1) + poly;
        assert_eq!(r, expect);
        assert_eq!(log.replay(spec.f(), &u), r);
        let rep = ramification_report(&spec).unwrap();
        assert_eq!(rep.finite.len(), 1);
        assert_eq!((rep.finite[0].lambda, rep.finite[0].m, rep.finite[0].e_bound), (2, 0, 27));
        let inf = rep.infinity.unwrap();
        assert_eq!((inf.lambda, inf.m, inf.e_bound, inf.exact), (1, 2, 3, false));
    }

    #[test]
    fn membership_witness() {
        let k = make_field(3, 1, None).unwrap();
        let t = RatFunc::t(&k);
        let d = t.powi(-2).unwrap() + t.powi(4).unwrap() + RatFunc::constant(&k.from_int(2));
        let w = crate::addpoly::wp(&d);
        let (ok, wit) = wp_membership(&w);
        assert!(ok);
        assert_eq!(crate::addpoly::wp(&wit.unwrap()), w);
        assert!(!wp_membership(&t).0);
        assert!(!wp_membership(&RatFunc::one(&k)).0);
    }

    #[test]
    fn reducible_equation_rejected() {
        let k = make_field(2, 2, None).unwrap();
        let t = RatFunc::t(&k);
        let u = crate::addpoly::wp(&t.powi(3).unwrap());
        let spec = ExtensionSpec::new(AdditivePoly::x_q_minus_x(&k, 2), u).unwrap();
        assert!(!spec.is_irreducible());
        assert_eq!(reduce_global(&spec).unwrap_err(), Error::NotIrreducible);
    }
}
