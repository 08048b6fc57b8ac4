//! Factorization over `F_q`: squarefree split, distinct-degree split and a
//! deterministic equal-degree split.

use alloc::vec;
use alloc::vec::Vec;

use super::Poly;
use crate::gf::FFElem;
use crate::gf::fp_poly::prime_factors;
use crate::{Error, Result};

/// `f = unit * prod(factor^mult)` with monic irreducible factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: FFElem,
    pub factors: Vec<(Poly, usize)>,
}

impl Factorization {
    pub fn product(&self) -> Poly {
        let mut acc = Poly::constant(&self.unit);
        for (f, e) in &self.factors {
            acc = acc.mul(&f.pow(*e as u64));
        }
        acc
    }
}

pub fn factor(f: &Poly) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let unit = f.lc();
    let mut factors: Vec<(Poly, usize)> = Vec::new();
    for (g, m) in squarefree(&f.monic()) {
        for (h, d) in distinct_degree(&g) {
            for irr in equal_degree(&h, d) {
                factors.push((irr, m));
            }
        }
    }
    factors.sort();
    Ok(Factorization { unit, factors })
}

/// Squarefree decomposition of a monic polynomial.
pub fn squarefree(f: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    squarefree_rec(f, 1, &mut out);
    out
}

fn squarefree_rec(f: &Poly, mult: usize, out: &mut Vec<(Poly, usize)>) {
    if f.degree() < 1 {
        return;
    }
    let p = f.ctx().p() as usize;
    let mut c = f.gcd(&f.derivative());
    let mut w = f.div_exact(&c);
    let mut i = 1;
    while w.degree() > 0 {
        let y = w.gcd(&c);
        let z = w.div_exact(&y);
        if z.degree() > 0 {
            out.push((z, i * mult));
        }
        i += 1;
        w = y;
        c = c.div_exact(&w);
    }
    if c.degree() > 0 {
        squarefree_rec(&c.pth_root(), mult * p, out);
    }
}

/// Splits a squarefree monic polynomial into products of irreducibles of a
/// common degree.
pub fn distinct_degree(f: &Poly) -> Vec<(Poly, usize)> {
    let ctx = f.ctx();
    let q = ctx.size() as u64;
    let t = Poly::t(ctx);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = t.rem(&rest);
    let mut d = 1usize;
    while rest.degree() >= 2 * d as i64 {
        h = h.powmod(q, &rest);
        let g = rest.gcd(&h.sub(&t));
        if g.degree() > 0 {
            rest = rest.div_exact(&g);
            h = h.rem(&rest);
            out.push((g, d));
        }
        d += 1;
    }
    if rest.degree() > 0 {
        let n = rest.degree() as usize;
        out.push((rest, n));
    }
    out
}

/// Splits a product of distinct irreducibles of degree `d`.
pub fn equal_degree(f: &Poly, d: usize) -> Vec<Poly> {
    let n = f.degree() as usize;
    if n == d {
        return vec![f.clone()];
    }
    if d == 1 {
        let ctx = f.ctx();
        return ctx
            .elements()
            .filter(|x| f.eval_code(x.code()) == 0)
            .map(|x| Poly::linear(&x))
            .collect();
    }
    let g = find_splitter(f, d);
    let h = f.div_exact(&g);
    let mut out = equal_degree(&g, d);
    out.extend(equal_degree(&h, d));
    out.sort();
    out
}

fn find_splitter(f: &Poly, d: usize) -> Poly {
    let ctx = f.ctx();
    let q = ctx.size() as u64;
    let p = ctx.p();
    let n = f.degree() as usize;
    let mut idx: u64 = q;
    loop {
        let a = candidate(f, idx);
        idx += 1;
        if a.degree() < 1 || a.degree() as usize >= n {
            continue;
        }
        let g = if p == 2 {
            let s = ctx.degree() as usize * d;
            let mut acc = Poly::zero(ctx);
            let mut x = a.rem(f);
            for _ in 0..s {
                acc = acc.add(&x);
                x = x.mulmod(&x, f);
            }
            f.gcd(&acc)
        } else {
            // a^((q^d-1)/2) = N(a)^((q-1)/2) with N(a) = a a^q ... a^(q^(d-1))
            let mut t = a.rem(f);
            let mut norm = t.clone();
            for _ in 1..d {
                t = t.powmod(q, f);
                norm = norm.mulmod(&t, f);
            }
            let b = norm.powmod((q - 1) / 2, f);
            f.gcd(&b.sub(&Poly::one(ctx)))
        };
        if g.degree() > 0 && (g.degree() as usize) < n {
            return g;
        }
    }
}

/// The polynomial whose coefficient codes are the base-`q` digits of `idx`.
fn candidate(f: &Poly, mut idx: u64) -> Poly {
    let q = f.ctx().size() as u64;
    let mut v = Vec::new();
    while idx > 0 {
        v.push((idx % q) as u32);
        idx /= q;
    }
    Poly::from_codes(f.ctx(), v)
}

/// Rabin's irreducibility test over `F_q`.
pub fn is_irreducible(f: &Poly) -> bool {
    let n = match f.deg() {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(n) => n,
    };
    let f = f.monic();
    let ctx = f.ctx();
    let q = ctx.size() as u64;
    let t = Poly::t(ctx);
    let frob = |k: usize| {
        let mut h = t.rem(&f);
        for _ in 0..k {
            h = h.powmod(q, &f);
        }
        h
    };
    if frob(n) != t.rem(&f) {
        return false;
    }
    prime_factors(n as u64).into_iter().all(|r| {
        let h = frob(n / r as usize);
        f.gcd(&h.sub(&t)).is_one()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn visible_roots() {
        let f2 = make_field(2, 1, None).unwrap();
        let t = Poly::t(&f2);
        let f = t.mul(&t).add(&t);
        let fac = factor(&f).unwrap();
        let one = Poly::one(&f2);
        assert_eq!(fac.factors, vec![(t.clone(), 1), (t.add(&one), 1)]);
    }

    #[test]
    fn power_of_linear() {
        let f27 = make_field(3, 3, None).unwrap();
        let l = Poly::t(&f27).add(&Poly::one(&f27));
        let fac = factor(&l.pow(54)).unwrap();
        assert_eq!(fac.factors, vec![(l, 54)]);
    }

    #[test]
    fn zero_rejected() {
        let f = make_field(3, 1, None).unwrap();
        assert_eq!(factor(&Poly::zero(&f)).unwrap_err(), Error::ZeroPolynomial);
    }

    #[test]
    fn random_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (p, s, deg) in [(3, 2, 6), (2, 2, 10), (3, 3, 7), (5, 1, 12), (2, 1, 20)] {
            let f = make_field(p, s, None).unwrap();
            for _ in 0..30 {
                let mut c: Vec<u32> = (0..deg).map(|_| rng.gen_range(0..f.size())).collect();
                c.push(1);
                let g = Poly::from_codes(&f, c);
                let fac = factor(&g).unwrap();
                assert_eq!(fac.product(), g);
                let mut total = 0;
                for (h, e) in &fac.factors {
                    assert!(h.is_monic() && is_irreducible(h), "{h}");
                    total += h.deg().unwrap() * e;
                }
                assert_eq!(total, deg);
            }
        }
    }

    #[test]
    fn repeated_factors_with_p_power_multiplicity() {
        let f = make_field(3, 1, None).unwrap();
        let t = Poly::t(&f);
        let one = Poly::one(&f);
        let a = t.mul(&t).add(&one); // irreducible over F_3
        let b = t.add(&one);
        let g = a.pow(3).mul(&b.pow(4)).mul(&t.pow(9));
        let fac = factor(&g).unwrap();
        assert_eq!(fac.factors, vec![(t, 9), (b, 4), (a, 3)]);
    }
}
