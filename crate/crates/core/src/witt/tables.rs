//! Universal Witt polynomials `S_i`, `D_i`, `M_i` from ghost components,
//! computed over the integers and then reduced modulo `p`.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::Ring;
use crate::{Error, Result};

/// Largest supported Witt length.
pub const MAX_LENGTH: usize = 4;

/// Integer polynomial in `x_1..x_m, y_1..y_m` (variables `0..2m`).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntPoly {
    pub terms: BTreeMap<Vec<u32>, BigInt>,
}

impl IntPoly {
    fn var(nvars: usize, k: usize) -> Self {
        let mut e = vec![0; nvars];
        e[k] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(e, BigInt::one());
        IntPoly { terms }
    }

    fn add_scaled(&mut self, o: &IntPoly, c: &BigInt) {
        for (e, v) in &o.terms {
            let entry = self.terms.entry(e.clone()).or_insert_with(BigInt::zero);
            *entry += v * c;
            if entry.is_zero() {
                self.terms.remove(e);
            }
        }
    }

    fn mul(&self, o: &IntPoly) -> IntPoly {
        let mut out = IntPoly::default();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let entry = out.terms.entry(e).or_insert_with(BigInt::zero);
                *entry += c1 * c2;
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    fn pow(&self, mut e: u64, nvars: usize) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::default();
        acc.terms.insert(vec![0; nvars], BigInt::one());
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

    fn div_exact(&self, d: &BigInt) -> IntPoly {
        let mut out = IntPoly::default();
        for (e, c) in &self.terms {
            let (q, r) = (c / d, c % d);
            assert!(r.is_zero(), "ghost recursion division by {d} is not exact");
            out.terms.insert(e.clone(), q);
        }
        out
    }

    /// Value at integer points.
    pub fn eval_int(&self, x: &[BigInt]) -> BigInt {
        let mut acc = BigInt::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &k) in x.iter().zip(e) {
                if k > 0 {
                    t *= num_traits::pow(xi.clone(), k as usize);
                }
            }
            acc += t;
        }
        acc
    }
}

/// `ghost_i(v) = sum_{j<=i} p^(j-1) v_j^(p^(i-j))`, 1-based `i`.
pub fn ghost_component<T: Clone>(
    v: &[T],
    i: usize,
    p: u64,
    pow: impl Fn(&T, u64) -> T,
    scale: impl Fn(&T, &BigInt) -> T,
    add: impl Fn(&T, &T) -> T,
) -> T {
    let mut acc: Option<T> = None;
    for j in 1..=i {
        let term = scale(&pow(&v[j - 1], p.pow((i - j) as u32)), &BigInt::from(p).pow((j - 1) as u32));
        acc = Some(match acc {
            None => term,
            Some(a) => add(&a, &term),
        });
    }
    acc.expect("i >= 1")
}

/// Integer ghost components of an integer vector.
pub fn ghost_integers(v: &[BigInt], p: u64) -> Vec<BigInt> {
    (1..=v.len())
        .map(|i| ghost_component(v, i, p, |x, e| num_traits::pow(x.clone(), e as usize), |x, c| x * c, |a, b| a + b))
        .collect()
}

/// Reduced (mod `p`) polynomial: list of exponent vectors with nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModPoly {
    pub terms: Vec<(Vec<u32>, u32)>,
}

impl ModPoly {
    fn from_int(f: &IntPoly, p: u32) -> Self {
        let pb = BigInt::from(p);
        let terms = f
            .terms
            .iter()
            .filter_map(|(e, c)| {
                let mut r = c % &pb;
                if r.is_negative() {
                    r += &pb;
                }
                let r: u32 = r.try_into().expect("residue fits");
                (r != 0).then(|| (e.clone(), r))
            })
            .collect();
        ModPoly { terms }
    }

    fn eval<R: Ring>(&self, powers: &[Vec<R>], like: &R) -> R {
        let mut acc = like.zero_like();
        for (e, c) in &self.terms {
            let mut t = like.from_int(*c as i64);
            for (k, &ek) in e.iter().enumerate() {
                if ek > 0 {
                    t = t.mul(&powers[k][ek as usize]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    fn max_exps(&self, nvars: usize) -> Vec<u32> {
        let mut m = vec![0; nvars];
        for (e, _) in &self.terms {
            for (a, b) in m.iter_mut().zip(e) {
                *a = (*a).max(*b);
            }
        }
        m
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WittOp {
    Add,
    Sub,
    Mul,
}

/// `S`, `D`, `M` for one `(p, m)`.
#[derive(Clone, Debug)]
pub struct WittTables {
    p: u32,
    m: usize,
    int: [Vec<IntPoly>; 3],
    reduced: [Vec<ModPoly>; 3],
    max_exps: [Vec<u32>; 3],
}

fn op_index(op: WittOp) -> usize {
    match op {
        WittOp::Add => 0,
        WittOp::Sub => 1,
        WittOp::Mul => 2,
    }
}

pub fn build_tables(p: u32, m: usize) -> Result<WittTables> {
    if m > MAX_LENGTH {
        return Err(Error::LengthCapExceeded { m, cap: MAX_LENGTH });
    }
    if m == 0 {
        return Err(Error::LengthMismatch);
    }
    if !crate::gf::fp_poly::is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    let nv = 2 * m;
    let pu = p as u64;
    let xs: Vec<IntPoly> = (0..m).map(|k| IntPoly::var(nv, k)).collect();
    let ys: Vec<IntPoly> = (0..m).map(|k| IntPoly::var(nv, m + k)).collect();
    let gh = |v: &[IntPoly], i: usize| {
        ghost_component(
            v,
            i,
            pu,
            |x, e| x.pow(e, nv),
            |x, c| {
                let mut o = IntPoly::default();
                o.add_scaled(x, c);
                o
            },
            |a, b| {
                let mut o = a.clone();
                o.add_scaled(b, &BigInt::one());
                o
            },
        )
    };
    let mut int: [Vec<IntPoly>; 3] = [Vec::new(), Vec::new(), Vec::new()];
    for (idx, op) in [WittOp::Add, WittOp::Sub, WittOp::Mul].into_iter().enumerate() {
        let mut res: Vec<IntPoly> = Vec::new();
        for i in 1..=m {
            let (gx, gy) = (gh(&xs, i), gh(&ys, i));
            let mut target = match op {
                WittOp::Add => {
                    let mut t = gx;
                    t.add_scaled(&gy, &BigInt::one());
                    t
                }
                WittOp::Sub => {
                    let mut t = gx;
                    t.add_scaled(&gy, &-BigInt::one());
                    t
                }
                WittOp::Mul => gx.mul(&gy),
            };
            for (j, rj) in res.iter().enumerate() {
                let c = -BigInt::from(pu).pow(j as u32);
                target.add_scaled(&rj.pow(pu.pow((i - 1 - j) as u32), nv), &c);
            }
            res.push(target.div_exact(&BigInt::from(pu).pow((i - 1) as u32)));
        }
        int[idx] = res;
    }
    let reduced = int.clone().map(|v| v.iter().map(|f| ModPoly::from_int(f, p)).collect::<Vec<_>>());
    let max_exps = reduced.clone().map(|v| {
        v.iter().fold(vec![0; nv], |acc, f| acc.iter().zip(f.max_exps(nv)).map(|(a, b)| (*a).max(b)).collect())
    });
    Ok(WittTables { p, m, int, reduced, max_exps })
}

impl WittTables {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn length(&self) -> usize {
        self.m
    }

    /// Integer polynomial for component `i` (0-based) of `op`.
    pub fn integer_poly(&self, op: WittOp, i: usize) -> &IntPoly {
        &self.int[op_index(op)][i]
    }

    pub fn reduced_poly(&self, op: WittOp, i: usize) -> &ModPoly {
        &self.reduced[op_index(op)][i]
    }

    /// Components of `op(x, y)`.
    pub fn apply<R: Ring>(&self, op: WittOp, x: &[R], y: &[R]) -> Vec<R> {
        let idx = op_index(op);
        let like = &x[0];
        let vars: Vec<&R> = x.iter().chain(y.iter()).collect();
        let powers: Vec<Vec<R>> = vars
            .iter()
            .zip(&self.max_exps[idx])
            .map(|(v, &mx)| {
                let mut ps = vec![like.one_like()];
                for e in 1..=mx as usize {
                    let next = ps[e - 1].mul(v);
                    ps.push(next);
                }
                ps
            })
            .collect();
        self.reduced[idx].iter().map(|f| f.eval(&powers, like)).collect()
    }
}

/// Memo of tables keyed by `(p, m)`; shared through `Arc`.
#[derive(Default, Debug)]
pub struct WittTableCache {
    map: BTreeMap<(u32, usize), Arc<WittTables>>,
}

impl WittTableCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, p: u32, m: usize) -> Result<Arc<WittTables>> {
        if let Some(t) = self.map.get(&(p, m)) {
            return Ok(t.clone());
        }
        let t = Arc::new(build_tables(p, m)?);
        self.map.insert((p, m), t.clone());
        Ok(t)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}
