use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use super::linalg::{fp_independent, fp_span, fp_span_with_coords, rank_mod_p};
use super::AdditivePoly;
use crate::gf::{FFElem, FieldCtx};
use crate::upoly::Poly;
use crate::{Error, Result};

/// The root space of an additive polynomial inside `k0`, with an
/// `F_p`-basis picked greedily in enumeration order.
#[derive(Clone, Debug)]
pub struct RootGroup {
    owner: AdditivePoly,
    basis: Vec<FFElem>,
    coords: BTreeMap<u32, Vec<u32>>,
}

pub fn root_group(f: &AdditivePoly) -> Result<RootGroup> {
    let ctx = f.ctx();
    let n = f.n();
    let expected = f.q() as usize;
    let roots: Vec<FFElem> = ctx.elements().filter(|x| f.eval_code(x.code()) == 0).collect();
    if roots.len() != expected {
        return Err(Error::RootsNotInBaseField { found: roots.len(), expected });
    }
    let mut basis: Vec<FFElem> = Vec::with_capacity(n);
    for r in roots {
        if basis.len() == n {
            break;
        }
        let mut trial = basis.clone();
        trial.push(r);
        if fp_independent(&trial) {
            basis = trial;
        }
    }
    RootGroup::with_basis(f, basis)
}

impl RootGroup {
    /// A root group with a caller-chosen basis.
    pub fn with_basis(f: &AdditivePoly, basis: Vec<FFElem>) -> Result<Self> {
        if basis.len() != f.n() || !fp_independent(&basis) {
            return Err(Error::DependentGenerators);
        }
        if basis.iter().any(|b| !f.eval_elem(b).is_zero()) {
            return Err(Error::NotASubgroup);
        }
        let coords = fp_span_with_coords(f.ctx(), &basis).into_iter().map(|(x, c)| (x.code(), c)).collect();
        Ok(RootGroup { owner: f.clone(), basis, coords })
    }

    pub fn owner(&self) -> &AdditivePoly {
        &self.owner
    }

    pub fn basis(&self) -> &[FFElem] {
        &self.basis
    }

    pub fn ctx(&self) -> &FieldCtx {
        self.owner.ctx()
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// All `p^n` elements.
    pub fn elements(&self) -> Vec<FFElem> {
        fp_span(self.ctx(), &self.basis)
    }

    pub fn contains(&self, x: &FFElem) -> bool {
        x.ctx().same(self.ctx()) && self.coords.contains_key(&x.code())
    }

    /// Coordinates in the basis.
    pub fn coords(&self, x: &FFElem) -> Option<&[u32]> {
        self.coords.get(&x.code()).map(|v| v.as_slice())
    }

    pub fn from_coords(&self, c: &[u32]) -> FFElem {
        let ctx = self.ctx();
        let mut acc = ctx.zero();
        for (b, &ci) in self.basis.iter().zip(c) {
            acc = &acc + &(b * &ctx.from_int(ci as i64));
        }
        acc
    }

    /// `f_V` for `V` spanned by elements of this group.
    pub fn subspace_poly(&self, v: &[FFElem]) -> Result<AdditivePoly> {
        if v.iter().any(|x| !self.contains(x)) {
            return Err(Error::NotASubgroup);
        }
        subspace_poly(self.ctx(), v)
    }
}

/// `prod_{d in span V} (X - d)` by direct expansion, read back as an
/// additive polynomial.
pub fn subspace_poly(ctx: &FieldCtx, v: &[FFElem]) -> Result<AdditivePoly> {
    if !fp_independent(v) {
        return Err(Error::DependentGenerators);
    }
    let mut prod = Poly::one(ctx);
    for d in fp_span(ctx, v) {
        prod = prod.mul(&Poly::linear(&d));
    }
    AdditivePoly::from_poly(&prod).map_err(|_| Error::NotASubgroup)
}

/// `f_V` for a set given elementwise; the set must be an additive subgroup.
pub fn subspace_poly_of_set(ctx: &FieldCtx, set: &[FFElem]) -> Result<AdditivePoly> {
    let codes: BTreeSet<u32> = set.iter().map(|x| x.code()).collect();
    let closed = codes.contains(&0)
        && codes.iter().all(|&a| codes.iter().all(|&b| codes.contains(&ctx.add(a, b))));
    if !closed {
        return Err(Error::NotASubgroup);
    }
    let mut basis: Vec<FFElem> = Vec::new();
    for &c in &codes {
        let mut trial = basis.clone();
        trial.push(ctx.elem(c));
        if fp_independent(&trial) {
            basis = trial;
        }
    }
    subspace_poly(ctx, &basis)
}

/// `f_V` by the doubling `f_{V + <d>} = wp_{f_V(d)} o f_V`.
pub fn subspace_poly_by_composition(ctx: &FieldCtx, v: &[FFElem]) -> Result<AdditivePoly> {
    if !fp_independent(v) {
        return Err(Error::DependentGenerators);
    }
    let mut fv = AdditivePoly::identity(ctx);
    for d in v {
        let c = fv.eval_elem(d);
        fv = AdditivePoly::wp_scaled(&c)?.compose(&fv);
    }
    Ok(fv)
}

/// A codimension-one subspace `H` of the root group, described as the kernel
/// of a normalized functional `phi` (first nonzero entry 1), together with
/// `eps_H` (the basis vector at that entry, so `phi(eps_H) = 1`), `f_H` and
/// `f_H(eps_H)`.
#[derive(Clone, Debug)]
pub struct Hyperplane {
    pub functional: Vec<u32>,
    pub basis: Vec<FFElem>,
    pub eps: FFElem,
    pub fh: AdditivePoly,
    pub fh_at_eps: FFElem,
}

impl Hyperplane {
    pub fn contains(&self, g: &RootGroup, x: &FFElem) -> bool {
        g.coords(x).is_some_and(|c| self.apply(c, g.ctx().p()) == 0)
    }

    /// `phi(c)` for coordinates `c`.
    pub fn apply(&self, c: &[u32], p: u32) -> u32 {
        let s: u64 = self.functional.iter().zip(c).map(|(&a, &b)| a as u64 * b as u64).sum();
        (s % p as u64) as u32
    }
}

/// All `(p^n - 1)/(p - 1)` hyperplanes in lexicographic functional order.
pub fn enumerate_hyperplanes(g: &RootGroup) -> Vec<Hyperplane> {
    let ctx = g.ctx();
    let p = ctx.p();
    let n = g.rank();
    let f = g.owner();
    let mut out = Vec::new();
    for idx in 1..p.pow(n as u32) {
        let mut phi = vec![0u32; n];
        let mut t = idx;
        for i in (0..n).rev() {
            phi[i] = t % p;
            t /= p;
        }
        let lead = phi.iter().position(|&x| x != 0).unwrap();
        if phi[lead] != 1 {
            continue;
        }
        let eps = g.basis()[lead].clone();
        let basis: Vec<FFElem> = (0..n)
            .filter(|&i| i != lead)
            .map(|i| &g.basis()[i] - &(&eps * &ctx.from_int(phi[i] as i64)))
            .collect();
        let fh = subspace_poly_by_composition(ctx, &basis).expect("kernel basis is independent");
        let fh_at_eps = fh.eval_elem(&eps);
        let recomposed = AdditivePoly::wp_scaled(&fh_at_eps).expect("eps is outside H").compose(&fh);
        assert!(recomposed == *f, "composition identity failed for hyperplane {phi:?}");
        out.push(Hyperplane { functional: phi, basis, eps, fh, fh_at_eps });
    }
    out
}

/// Dimension of the intersection of the kernels of the given functionals.
pub fn intersection_dim(functionals: &[&[u32]], n: usize, p: u32) -> usize {
    let rows: Vec<Vec<u32>> = functionals.iter().map(|f| f.to_vec()).collect();
    n - rank_mod_p(&rows, p)
}
