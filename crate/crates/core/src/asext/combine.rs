use alloc::vec::Vec;

use super::spec::{wp_membership, ExtensionSpec};
use crate::addpoly::{AdditivePoly, RootGroup};
use crate::gf::FFElem;
use crate::upoly::RatFunc;
use crate::{Error, Result};

/// `K = k(y)` with `y = sum mu_i z_i`, `z_i^p - z_i = gamma_i`.
#[derive(Clone, Debug)]
pub struct Combined {
    pub spec: ExtensionSpec,
    pub mu: Vec<FFElem>,
    pub gammas: Vec<RatFunc>,
    /// `h_i = sum_j a_j mu_i^(p^j) l_j(gamma_i)`; `u = sum h_i`.
    pub h: Vec<RatFunc>,
}

/// `l_j(g) = g + g^p + ... + g^(p^(j-1))`.
fn l_j(g: &RatFunc, j: usize) -> RatFunc {
    let mut acc = RatFunc::zero(g.ctx());
    let mut gp = g.clone();
    for _ in 0..j {
        acc = acc.add(&gp);
        gp = gp.pth_power();
    }
    acc
}

/// Nonzero coordinate vectors of `F_p^n` whose first nonzero entry is one.
pub(crate) fn normalized_vectors(n: usize, p: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for idx in 1..p.pow(n as u32) {
        let mut c = alloc::vec![0u32; n];
        let mut t = idx;
        for i in (0..n).rev() {
            c[i] = t % p;
            t /= p;
        }
        if c.iter().find(|&&x| x != 0) == Some(&1) {
            out.push(c);
        }
    }
    out
}

pub fn combine_generators(f: &AdditivePoly, gammas: &[RatFunc], mu: &[FFElem]) -> Result<Combined> {
    let ctx = f.ctx();
    let n = f.n();
    if gammas.len() != n || mu.len() != n {
        return Err(Error::DependentGenerators);
    }
    if gammas.iter().any(|g| !g.ctx().same(ctx)) {
        return Err(Error::ContextMismatch);
    }
    RootGroup::with_basis(f, mu.to_vec())?;
    let p = ctx.p();
    for c in normalized_vectors(n, p) {
        let w = c
            .iter()
            .zip(gammas)
            .fold(RatFunc::zero(ctx), |acc, (&ci, g)| acc.add(&g.scale(&ctx.from_int(ci as i64))));
        if wp_membership(&w).0 {
            return Err(Error::DependentSubextensions);
        }
    }
    let a = f.coeffs();
    let h: Vec<RatFunc> = gammas
        .iter()
        .zip(mu)
        .map(|(g, m)| {
            let mut acc = RatFunc::zero(ctx);
            let mut mp = m.clone();
            for (j, aj) in a.iter().enumerate() {
                if j > 0 {
                    mp = mp.pow(p as u64);
                    if !aj.is_zero() {
                        acc = acc.add(&l_j(g, j).scale(&(aj * &mp)));
                    }
                }
            }
            acc
        })
        .collect();
    let u = h.iter().fold(RatFunc::zero(ctx), |acc, x| acc.add(x));
    let spec = ExtensionSpec::irreducible(f.clone(), u)?;
    Ok(Combined { spec, mu: mu.to_vec(), gammas: gammas.to_vec(), h })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asext::{decomposition_type, hyperplane_rhs, ramification_report};
    use crate::gf::make_field;
    use crate::upoly::Place;

    fn f9() -> (crate::FieldCtx, FFElem) {
        let k = make_field(3, 2, None).unwrap();
        let mu = k.elements().find(|x| !x.in_prime_field()).unwrap();
        (k, mu)
    }

    #[test]
    fn polynomial_pair() {
        let (k, mu) = f9();
        let t = RatFunc::t(&k);
        let f = AdditivePoly::x_q_minus_x(&k, 2);
        let c = combine_generators(&f, &[t.clone(), t.powi(2).unwrap()], &[k.one(), mu.clone()]).unwrap();
        let t3 = t.powi(3).unwrap();
        let expect = t3.mul(&RatFunc::one(&k).add(&t3.scale(&mu))).add(&t.add(&t.powi(2).unwrap().scale(&mu)));
        assert_eq!(*c.spec.u(), expect);
        let rep = ramification_report(&c.spec).unwrap();
        let inf = rep.infinity.unwrap();
        assert_eq!((inf.lambda, inf.m, inf.e_bound, inf.exact), (2, 1, 3, false));
        let dt = decomposition_type(&c.spec, &Place::Infinity).unwrap();
        assert_eq!((dt.e, dt.f, dt.g), (9, 1, 1));
        // every hyperplane right-hand side is a combination of the gammas modulo wp(k)
        for h in c.spec.hyperplanes() {
            let rhs = hyperplane_rhs(c.spec.u(), h);
            let hit = normalized_vectors(2, 3).into_iter().any(|cv| {
                (1..3).any(|j| {
                    let comb = cv.iter().zip(&c.gammas).fold(RatFunc::zero(&k), |acc, (&ci, g)| {
                        acc.add(&g.scale(&k.from_int((ci * j) as i64)))
                    });
                    wp_membership(&rhs.sub(&comb)).0
                })
            });
            assert!(hit, "{:?}", h.functional);
        }
    }

    #[test]
    fn pole_at_zero_pair() {
        let (k, mu) = f9();
        let t = RatFunc::t(&k);
        let f = AdditivePoly::x_q_minus_x(&k, 2);
        let c = combine_generators(&f, &[t.clone(), t.powi(-1).unwrap()], &[k.one(), mu]).unwrap();
        let dt = decomposition_type(&c.spec, &Place::Infinity).unwrap();
        assert_eq!(dt.e, 3);
    }

    #[test]
    fn dependent_rejected() {
        let (k, mu) = f9();
        let t = RatFunc::t(&k);
        let f = AdditivePoly::x_q_minus_x(&k, 2);
        let g2 = t.scale(&k.from_int(2)).add(&crate::addpoly::wp(&t.powi(-1).unwrap()));
        let err = combine_generators(&f, &[t.clone(), g2], &[k.one(), mu]).unwrap_err();
        assert_eq!(err, Error::DependentSubextensions);
    }

    #[test]
    fn single_generator() {
        let k = make_field(3, 1, None).unwrap();
        let t = RatFunc::t(&k);
        let c = combine_generators(&AdditivePoly::wp(&k), &[t.powi(2).unwrap()], &[k.one()]).unwrap();
        assert_eq!(*c.spec.u(), t.powi(2).unwrap());
    }
}
