use core::fmt;

use super::{factor::is_irreducible, place_valuation, Poly, RatFunc};
use crate::gf::{make_field, FFElem, FieldCtx, SubfieldEmbedding};
use crate::{Error, Result};

/// A place of `k0(T)`: a monic irreducible polynomial or the infinite place.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Place {
    Finite(Poly),
    Infinity,
}

impl Place {
    pub fn finite(p: Poly) -> Result<Place> {
        if !p.is_monic() || !is_irreducible(&p) {
            return Err(Error::NotIrreduciblePlace);
        }
        Ok(Place::Finite(p))
    }

    pub fn degree(&self) -> usize {
        match self {
            Place::Finite(p) => p.deg().unwrap(),
            Place::Infinity => 1,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Place::Infinity)
    }

    pub fn poly(&self) -> Option<&Poly> {
        match self {
            Place::Finite(p) => Some(p),
            Place::Infinity => None,
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "({p})"),
            Place::Infinity => f.write_str("inf"),
        }
    }
}

impl fmt::Debug for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The residue field `k' = k0[T]/(P)` realized as an explicit field of
/// degree `s * deg P` over `F_p`, with `k0` embedded and a designated root
/// `nu` of `P` (the first root in enumeration order).
#[derive(Clone, Debug)]
pub struct ResidueField {
    place: Poly,
    field: FieldCtx,
    emb: SubfieldEmbedding,
    nu: FFElem,
}

impl ResidueField {
    pub fn new(place: &Poly) -> Result<Self> {
        let k0 = place.ctx();
        let d = place.deg().ok_or(Error::NotIrreduciblePlace)?;
        if d == 0 || !place.is_monic() {
            return Err(Error::NotIrreduciblePlace);
        }
        if d == 1 {
            let nu = -&place.coeff(0);
            return Ok(ResidueField {
                place: place.clone(),
                field: k0.clone(),
                emb: SubfieldEmbedding::identity(k0),
                nu,
            });
        }
        let field = make_field(k0.p(), k0.degree() * d as u32, None)?;
        let emb = SubfieldEmbedding::new(k0, &field)?;
        let image: alloc::vec::Vec<u32> = place.codes().iter().map(|&c| emb.embed_code(c)).collect();
        let nu = field
            .elements()
            .find(|x| {
                let mut acc = 0;
                for &c in image.iter().rev() {
                    acc = field.add(field.mul(acc, x.code()), c);
                }
                acc == 0
            })
            .ok_or(Error::NotIrreduciblePlace)?;
        Ok(ResidueField { place: place.clone(), field, emb, nu })
    }

    pub fn for_place(place: &Place) -> Result<Self> {
        match place {
            Place::Finite(p) => Self::new(p),
            Place::Infinity => Err(Error::NotIrreduciblePlace),
        }
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn embedding(&self) -> &SubfieldEmbedding {
        &self.emb
    }

    pub fn nu(&self) -> &FFElem {
        &self.nu
    }

    pub fn place(&self) -> &Poly {
        &self.place
    }

    /// Image of a constant of `k0`.
    pub fn embed(&self, c: &FFElem) -> FFElem {
        self.emb.embed(c).expect("constant from the base field")
    }

    pub fn eval_poly(&self, g: &Poly) -> FFElem {
        let f = &self.field;
        let mut acc = 0;
        for &c in g.codes().iter().rev() {
            acc = f.add(f.mul(acc, self.nu.code()), self.emb.embed_code(c));
        }
        f.elem(acc)
    }

    /// `u(nu)`; fails when `u` has a pole at the place.
    pub fn eval(&self, u: &RatFunc) -> Result<FFElem> {
        let pl = Place::Finite(self.place.clone());
        if place_valuation(u, &pl).is_some_and(|v| v < 0) {
            return Err(Error::PoleAtPlace);
        }
        let n = self.eval_poly(u.num());
        let d = self.eval_poly(u.den());
        Ok(&n / &d)
    }
}

/// `u(nu)` for the designated root `nu` of the residue field.
pub fn residue_eval(u: &RatFunc, residue: &ResidueField) -> Result<FFElem> {
    residue.eval(u)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_places() {
        let f = make_field(3, 2, None).unwrap();
        let c = f.gen();
        let rf = ResidueField::new(&Poly::linear(&c)).unwrap();
        assert_eq!(rf.eval(&RatFunc::t(&f)).unwrap(), c);
        let one = Poly::one(&f);
        let u = RatFunc::new(one.clone(), Poly::t(&f).add(&one)).unwrap();
        let at_zero = ResidueField::new(&Poly::t(&f)).unwrap();
        assert_eq!(at_zero.eval(&u).unwrap(), f.one());
        let pole = ResidueField::new(&Poly::t(&f).add(&one)).unwrap();
        assert_eq!(pole.eval(&u).unwrap_err(), Error::PoleAtPlace);
    }

    #[test]
    fn quadratic_place_matches_quotient_ring() {
        let f3 = make_field(3, 1, None).unwrap();
        let t = Poly::t(&f3);
        let one = Poly::one(&f3);
        let p = t.mul(&t).add(&one);
        let rf = ResidueField::new(&p).unwrap();
        assert_eq!(rf.field().size(), 9);
        assert!(rf.eval_poly(&p).is_zero());
        let num = t.mul(&t).add(&one).add(&t);
        let den = t.add(&one);
        let u = RatFunc::new(num.clone(), den.clone()).unwrap();
        // in F_3[T]/(P): num * den^-1 reduced, then mapped through T -> nu
        let r = num.mul(&den.inv_mod(&p).unwrap()).rem(&p);
        assert_eq!(rf.eval(&u).unwrap(), rf.eval_poly(&r));
    }

    #[test]
    fn place_validation() {
        let f = make_field(2, 1, None).unwrap();
        let t = Poly::t(&f);
        assert!(Place::finite(t.mul(&t)).is_err());
        assert!(Place::finite(t.clone()).is_ok());
        assert_eq!(Place::finite(t.mul(&t).add(&t).add(&Poly::one(&f))).unwrap().degree(), 2);
    }
}
