use alloc::vec::Vec;

use super::factor::factor;
use super::{Poly, RatFunc};

/// One pole: `numer / place^order = sum_j digits[j-1] / place^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleTerm {
    pub place: Poly,
    pub order: usize,
    pub numer: Poly,
    /// `digits[j-1]` is the coefficient of `1/place^j`, of degree below
    /// `deg place`.
    pub digits: Vec<Poly>,
}

impl PoleTerm {
    pub(crate) fn from_numer(place: Poly, order: usize, numer: Poly) -> Self {
        let digits = padic_digits(&numer, &place, order);
        PoleTerm { place, order, numer, digits }
    }

    pub fn to_ratfunc(&self) -> RatFunc {
        RatFunc::new(self.numer.clone(), self.place.pow(self.order as u64)).unwrap()
    }

    /// Coefficient of the top pole `1/place^order`.
    pub fn leading_digit(&self) -> &Poly {
        &self.digits[self.order - 1]
    }
}

/// `u = sum(terms) + poly_part` with one term per pole place, sorted by
/// `(deg P, coefficients)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialFractions {
    pub terms: Vec<PoleTerm>,
    pub poly_part: Poly,
}

impl PartialFractions {
    pub fn recombine(&self) -> RatFunc {
        let mut acc = RatFunc::from_poly(self.poly_part.clone());
        for t in &self.terms {
            acc = acc.add(&t.to_ratfunc());
        }
        acc
    }

    pub fn term_at(&self, place: &Poly) -> Option<&PoleTerm> {
        self.terms.iter().find(|t| &t.place == place)
    }
}

pub fn partial_fractions(u: &RatFunc) -> PartialFractions {
    let (poly_part, r) = u.num().divrem(u.den());
    let mut terms = Vec::new();
    if !u.den().is_one() {
        let fac = factor(u.den()).expect("denominator is nonzero");
        for (pl, e) in fac.factors {
            let pe = pl.pow(e as u64);
            let cof = u.den().div_exact(&pe);
            let q = r.mul(&cof.inv_mod(&pe).expect("coprime cofactor")).rem(&pe);
            terms.push(PoleTerm::from_numer(pl, e, q));
        }
    }
    terms.sort_by(|a, b| a.place.cmp(&b.place));
    PartialFractions { terms, poly_part }
}

/// Digits of `numer / place^order` as coefficients of `1/place^j`.
fn padic_digits(numer: &Poly, place: &Poly, order: usize) -> Vec<Poly> {
    let mut digits = alloc::vec![Poly::zero(place.ctx()); order];
    let mut rest = numer.clone();
    for t in 0..order {
        let (q, r) = rest.divrem(place);
        digits[order - 1 - t] = r;
        rest = q;
    }
    digits
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;
    use crate::upoly::{place_valuation, Place};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn simple_split() {
        let f2 = make_field(2, 1, None).unwrap();
        let t = Poly::t(&f2);
        let one = Poly::one(&f2);
        let u = RatFunc::new(one.clone(), t.mul(&t).add(&t)).unwrap();
        let pf = partial_fractions(&u);
        assert_eq!(pf.terms.len(), 2);
        assert_eq!(pf.terms[0].place, t);
        assert_eq!(pf.terms[1].place, t.add(&one));
        assert!(pf.terms.iter().all(|x| x.numer.is_one() && x.order == 1));
        assert_eq!(pf.recombine(), u);
    }

    #[test]
    fn polynomial_input() {
        let f = make_field(3, 2, None).unwrap();
        let g = Poly::t(&f).pow(4).add(&Poly::constant(&f.gen()));
        let pf = partial_fractions(&RatFunc::from_poly(g.clone()));
        assert!(pf.terms.is_empty());
        assert_eq!(pf.poly_part, g);
    }

    #[test]
    fn worked_example_shape() {
        let f = make_field(3, 3, Some(&[1, 2, 0, 1])).unwrap();
        let one = Poly::one(&f);
        let l = Poly::t(&f).add(&one);
        let w = f.gen();
        let poly = Poly::from_elems(
            &f,
            &[&w + &f.one(), f.one(), f.zero(), f.one(), f.zero(), f.zero(), f.zero(), f.zero(), f.zero(), f.one()],
        );
        let u = RatFunc::new(one.clone(), l.pow(54)).unwrap()
            + RatFunc::new(one.clone(), l.clone()).unwrap()
            + RatFunc::from_poly(poly.clone());
        let pf = partial_fractions(&u);
        assert_eq!(pf.poly_part, poly);
        assert_eq!(pf.terms.len(), 1);
        let term = &pf.terms[0];
        assert_eq!((term.place.clone(), term.order), (l, 54));
        for (j, d) in term.digits.iter().enumerate() {
            assert_eq!(d.is_one(), j == 0 || j == 53, "digit {}", j + 1);
            assert!(d.is_one() || d.is_zero());
        }
    }

    fn random_ratfunc(rng: &mut ChaCha8Rng, f: &crate::gf::FieldCtx, max_deg: usize) -> RatFunc {
        let dn = rng.gen_range(0..=max_deg);
        let dd = rng.gen_range(0..=max_deg);
        let n: Vec<u32> = (0..=dn).map(|_| rng.gen_range(0..f.size())).collect();
        let mut d: Vec<u32> = (0..dd).map(|_| rng.gen_range(0..f.size())).collect();
        d.push(1);
        RatFunc::new(Poly::from_codes(f, n), Poly::from_codes(f, d)).unwrap()
    }

    #[test]
    fn recombination_and_divisor_degree() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for (p, s) in [(2, 2), (3, 2), (3, 3)] {
            let f = make_field(p, s, None).unwrap();
            for _ in 0..70 {
                let u = random_ratfunc(&mut rng, &f, 12);
                let pf = partial_fractions(&u);
                assert_eq!(pf.recombine(), u);
                for t in &pf.terms {
                    assert!(t.numer.degree() < (t.place.degree() * t.order as i64));
                    assert!(t.numer.gcd(&t.place).is_one());
                    assert!(!t.leading_digit().is_zero());
                }
                if u.is_zero() {
                    continue;
                }
                let mut places: Vec<Place> = Vec::new();
                for poly in [u.num(), u.den()] {
                    if poly.degree() > 0 {
                        for (pl, _) in factor(poly).unwrap().factors {
                            places.push(Place::Finite(pl));
                        }
                    }
                }
                places.push(Place::Infinity);
                let total: i64 = places
                    .iter()
                    .map(|pl| place_valuation(&u, pl).unwrap() * pl.degree() as i64)
                    .sum();
                assert_eq!(total, 0);
            }
        }
    }
}
