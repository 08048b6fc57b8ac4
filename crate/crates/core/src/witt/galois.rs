//! `W_m(F_q)` as a free `W_m(F_p)`-module and linear algebra over it.

use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::tables::WittTables;
use super::vector::WittVector;
use crate::addpoly::fp_independent;
use crate::gf::{FFElem, FieldCtx};
use crate::{Error, Result};

pub type WittF = WittVector<FFElem>;

/// Every element of `W_m(F)` with components in `F`, in lexicographic
/// component order.
pub fn all_vectors(tables: &Arc<WittTables>, ctx: &FieldCtx) -> Vec<WittF> {
    let m = tables.length();
    let q = ctx.size() as u64;
    let total = q.pow(m as u32);
    (0..total)
        .map(|mut idx| {
            let mut comps = alloc::vec![ctx.zero(); m];
            for i in (0..m).rev() {
                comps[i] = ctx.elem(ctx.code_at((idx % q) as u32));
                idx /= q;
            }
            WittVector::new(tables, comps).expect("length m")
        })
        .collect()
}

/// Elements of `W_m(F_p)` (components in the prime field) inside `ctx`.
pub fn prime_vectors(tables: &Arc<WittTables>, ctx: &FieldCtx) -> Vec<WittF> {
    let p = ctx.p() as u64;
    let m = tables.length();
    (0..p.pow(m as u32))
        .map(|mut idx| {
            let mut comps = alloc::vec![ctx.zero(); m];
            for i in (0..m).rev() {
                comps[i] = ctx.from_int((idx % p) as i64);
                idx /= p;
            }
            WittVector::new(tables, comps).expect("length m")
        })
        .collect()
}

/// First components form an `F_p`-basis of `F_q`.
pub fn basis_check(xs: &[WittF]) -> bool {
    let Some(first) = xs.first() else { return false };
    let ctx = first.comps()[0].ctx();
    let firsts: Vec<FFElem> = xs.iter().map(|x| x.comps()[0].clone()).collect();
    xs.len() == ctx.degree() as usize && fp_independent(&firsts)
}

/// `W_m(F_p)`-combinations of `xs` cover all of `W_m(F_q)`.
pub fn span_check(xs: &[WittF]) -> bool {
    let Some(first) = xs.first() else { return false };
    let tables = first.tables().clone();
    let ctx = first.comps()[0].ctx().clone();
    let scalars = prime_vectors(&tables, &ctx);
    let mut reached: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut combos: Vec<WittF> = alloc::vec![WittVector::zero(&tables, &ctx.zero())];
    for x in xs {
        let mut next = Vec::with_capacity(combos.len() * scalars.len());
        for c in &combos {
            for s in &scalars {
                next.push(c.witt_add(&s.witt_mul(x)));
            }
        }
        combos = next;
    }
    for c in &combos {
        reached.insert(c.comps().iter().map(|e| e.code()).collect());
    }
    let target = (ctx.size() as u64).pow(tables.length() as u32);
    reached.len() as u64 == target
}

/// `M[i][j] = mu_i^(p^j)` (componentwise Frobenius).
pub fn witt_moore_matrix(mu: &[WittF]) -> Vec<Vec<WittF>> {
    mu.iter().map(|m| (0..mu.len()).map(|j| m.frobenius_iter(j as u32)).collect()).collect()
}

/// Solves `M x = b` over `W_m(F_q)` with unit pivots.
pub fn solve_witt(m: &[Vec<WittF>], b: &[WittF]) -> Result<Vec<WittF>> {
    let n = m.len();
    let mut a: Vec<Vec<WittF>> = m.iter().zip(b).map(|(row, bi)| {
        let mut r = row.clone();
        r.push(bi.clone());
        r
    }).collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| a[r][col].is_unit()).ok_or(Error::SingularWittSystem)?;
        a.swap(col, piv);
        let inv = a[col][col].inverse().expect("unit pivot");
        for j in col..=n {
            a[col][j] = a[col][j].witt_mul(&inv);
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for j in col..=n {
                    let t = factor.witt_mul(&a[col][j]);
                    a[r][j] = a[r][j].witt_sub(&t);
                }
            }
        }
    }
    Ok(a.into_iter().map(|r| r[n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;
    use crate::witt::build_tables;

    #[test]
    fn criterion_matches_enumeration_over_f4() {
        let t = Arc::new(build_tables(2, 2).unwrap());
        let k = make_field(2, 2, None).unwrap();
        let all = all_vectors(&t, &k);
        assert_eq!(all.len(), 16);
        for a in &all {
            for b in &all {
                let xs = [a.clone(), b.clone()];
                assert_eq!(basis_check(&xs), span_check(&xs), "{a:?} {b:?}");
            }
        }
    }

    #[test]
    fn teichmuller_basis_and_moore_solve() {
        let t = Arc::new(build_tables(3, 2).unwrap());
        let k = make_field(3, 2, None).unwrap();
        let mu = [WittVector::one(&t, &k.one()), WittVector::teichmuller(&t, &k.gen())];
        assert!(basis_check(&mu));
        let m = witt_moore_matrix(&mu);
        let b = [WittVector::from_int(&t, &k.one(), 2), WittVector::teichmuller(&t, &(k.gen() + k.one()))];
        let x = solve_witt(&m, &b).unwrap();
        for i in 0..2 {
            let lhs = m[i][0].witt_mul(&x[0]).witt_add(&m[i][1].witt_mul(&x[1]));
            assert_eq!(lhs, b[i]);
        }
        let sing = [mu[0].clone(), mu[0].clone()];
        assert_eq!(solve_witt(&witt_moore_matrix(&sing), &b).unwrap_err(), Error::SingularWittSystem);
    }
}
