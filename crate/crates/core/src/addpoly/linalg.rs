//! Small dense linear algebra: over `k0` (Moore systems) and over `F_p`
//! (coordinates of elements, functionals).

use alloc::vec::Vec;

use crate::gf::{FFElem, FieldCtx};
use crate::{Error, Result};

/// Moore matrix `M[i][j] = mu_i^(p^j)`, `0 <= j < len(mu)`, with its
/// determinant.
pub fn moore_matrix(mu: &[FFElem]) -> (Vec<Vec<FFElem>>, FFElem) {
    let m: Vec<Vec<FFElem>> = mu
        .iter()
        .map(|x| (0..mu.len()).map(|j| x.frobenius_power(j as i64)).collect())
        .collect();
    let det = match mu.first() {
        Some(x) => determinant(&m, x.ctx()),
        None => panic!("Moore matrix of an empty list has no field"),
    };
    (m, det)
}

pub fn determinant(m: &[Vec<FFElem>], ctx: &FieldCtx) -> FFElem {
    let n = m.len();
    let mut a: Vec<Vec<u32>> = m.iter().map(|r| r.iter().map(|x| x.code()).collect()).collect();
    let mut det = 1u32;
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| a[r][col] != 0) else {
            return ctx.zero();
        };
        if piv != col {
            a.swap(piv, col);
            det = ctx.neg(det);
        }
        det = ctx.mul(det, a[col][col]);
        let inv = ctx.inv(a[col][col]).unwrap();
        for r in col + 1..n {
            let k = ctx.mul(a[r][col], inv);
            if k == 0 {
                continue;
            }
            for c in col..n {
                let v = ctx.mul(k, a[col][c]);
                a[r][c] = ctx.sub(a[r][c], v);
            }
        }
    }
    ctx.elem(det)
}

/// Solves `m x = b` for square nonsingular `m`.
pub fn solve(m: &[Vec<FFElem>], b: &[FFElem], ctx: &FieldCtx) -> Result<Vec<FFElem>> {
    let n = m.len();
    let mut a: Vec<Vec<u32>> = m
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut row: Vec<u32> = r.iter().map(|x| x.code()).collect();
            row.push(bi.code());
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| a[r][col] != 0).ok_or(Error::SingularSystem)?;
        a.swap(piv, col);
        let inv = ctx.inv(a[col][col]).unwrap();
        for c in col..=n {
            a[col][c] = ctx.mul(a[col][c], inv);
        }
        for r in 0..n {
            if r == col || a[r][col] == 0 {
                continue;
            }
            let k = a[r][col];
            for c in col..=n {
                let v = ctx.mul(k, a[col][c]);
                a[r][c] = ctx.sub(a[r][c], v);
            }
        }
    }
    Ok(a.into_iter().map(|r| ctx.elem(r[n])).collect())
}

/// Rank over `F_p` of vectors with entries in `0..p`.
pub fn rank_mod_p(rows: &[Vec<u32>], p: u32) -> usize {
    row_reduce_mod_p(rows, p).len()
}

/// Nonzero rows of the reduced echelon form.
pub fn row_reduce_mod_p(rows: &[Vec<u32>], p: u32) -> Vec<Vec<u32>> {
    let mut a: Vec<Vec<u32>> = rows.to_vec();
    let width = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..width {
        let Some(piv) = (rank..a.len()).find(|&r| a[r][col] % p != 0) else {
            continue;
        };
        a.swap(piv, rank);
        let inv = inv_mod_p(a[rank][col], p);
        for c in 0..width {
            a[rank][c] = (a[rank][c] as u64 * inv as u64 % p as u64) as u32;
        }
        for r in 0..a.len() {
            if r == rank || a[r][col] == 0 {
                continue;
            }
            let k = a[r][col] as u64;
            for c in 0..width {
                let v = (k * a[rank][c] as u64 % p as u64) as u32;
                a[r][c] = (a[r][c] + p - v) % p;
            }
        }
        rank += 1;
    }
    a.truncate(rank);
    a
}

pub(crate) fn inv_mod_p(a: u32, p: u32) -> u32 {
    crate::gf::fp_poly::pow_mod(a as u64, (p - 2) as u64, p as u64) as u32
}

/// `F_p`-rank of a list of field elements (coordinates in the power basis).
pub fn fp_rank(elems: &[FFElem]) -> usize {
    let Some(first) = elems.first() else { return 0 };
    let rows: Vec<Vec<u32>> = elems.iter().map(|e| e.coeffs()).collect();
    rank_mod_p(&rows, first.ctx().p())
}

pub fn fp_independent(elems: &[FFElem]) -> bool {
    fp_rank(elems) == elems.len()
}

/// All `F_p`-combinations `sum c_i e_i`, coefficient tuples in
/// lexicographic order with `c_0` most significant.
pub fn fp_span(ctx: &FieldCtx, elems: &[FFElem]) -> Vec<FFElem> {
    fp_span_with_coords(ctx, elems).into_iter().map(|(x, _)| x).collect()
}

pub fn fp_span_with_coords(ctx: &FieldCtx, elems: &[FFElem]) -> Vec<(FFElem, Vec<u32>)> {
    let p = ctx.p();
    let k = elems.len() as u32;
    let total = p.pow(k);
    (0..total)
        .map(|idx| {
            let mut c = alloc::vec![0u32; k as usize];
            let mut t = idx;
            for i in (0..k as usize).rev() {
                c[i] = t % p;
                t /= p;
            }
            let mut acc = 0u32;
            for (e, &ci) in elems.iter().zip(&c) {
                acc = ctx.add(acc, ctx.mul_int(e.code(), ci as i64));
            }
            (ctx.elem(acc), c)
        })
        .collect()
}
