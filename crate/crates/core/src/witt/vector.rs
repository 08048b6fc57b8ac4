use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use super::tables::{WittOp, WittTables};
use crate::algebra::Ring;
use crate::{Error, Result};

/// `(x_1, ..., x_m)` over a ring of characteristic `p`.
#[derive(Clone)]
pub struct WittVector<R: Ring> {
    comps: Vec<R>,
    tables: Arc<WittTables>,
}

impl<R: Ring> WittVector<R> {
    pub fn new(tables: &Arc<WittTables>, comps: Vec<R>) -> Result<Self> {
        if comps.len() != tables.length() {
            return Err(Error::LengthMismatch);
        }
        if comps.iter().any(|c| !c.same_ring(&comps[0]) || c.characteristic() != tables.p()) {
            return Err(Error::RingMismatch);
        }
        Ok(WittVector { comps, tables: tables.clone() })
    }

    pub fn zero(tables: &Arc<WittTables>, like: &R) -> Self {
        WittVector { comps: alloc::vec![like.zero_like(); tables.length()], tables: tables.clone() }
    }

    pub fn one(tables: &Arc<WittTables>, like: &R) -> Self {
        Self::teichmuller(tables, &like.one_like())
    }

    /// `{u} = (u, 0, ..., 0)`.
    pub fn teichmuller(tables: &Arc<WittTables>, u: &R) -> Self {
        let mut v = Self::zero(tables, u);
        v.comps[0] = u.clone();
        v
    }

    /// `t` copies of `1` added (subtracted for negative `t`).
    pub fn from_int(tables: &Arc<WittTables>, like: &R, t: i64) -> Self {
        let one = Self::one(tables, like);
        let mut acc = Self::zero(tables, like);
        for _ in 0..t.unsigned_abs() {
            acc = if t > 0 { acc.witt_add(&one) } else { acc.witt_sub(&one) };
        }
        acc
    }

    pub fn comps(&self) -> &[R] {
        &self.comps
    }

    pub fn tables(&self) -> &Arc<WittTables> {
        &self.tables
    }

    pub fn length(&self) -> usize {
        self.comps.len()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Ring::is_zero)
    }

    /// Leading zero components.
    pub fn valuation(&self) -> usize {
        self.comps.iter().take_while(|c| c.is_zero()).count()
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.length() != o.length() {
            return Err(Error::LengthMismatch);
        }
        if !self.comps[0].same_ring(&o.comps[0]) || self.tables.p() != o.tables.p() {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn op(&self, op: WittOp, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(WittVector { comps: self.tables.apply(op, &self.comps, &o.comps), tables: self.tables.clone() })
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.op(WittOp::Add, o)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.op(WittOp::Sub, o)
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.op(WittOp::Mul, o)
    }

    pub(crate) fn witt_add(&self, o: &Self) -> Self {
        self.add(o).expect("compatible Witt vectors")
    }

    pub(crate) fn witt_sub(&self, o: &Self) -> Self {
        self.sub(o).expect("compatible Witt vectors")
    }

    pub(crate) fn witt_mul(&self, o: &Self) -> Self {
        self.mul(o).expect("compatible Witt vectors")
    }

    pub fn neg(&self) -> Self {
        Self::zero(&self.tables, &self.comps[0]).witt_sub(self)
    }

    /// Componentwise `p`-th power, the Frobenius of `W_m`.
    pub fn frobenius(&self) -> Self {
        self.frobenius_iter(1)
    }

    /// Componentwise `p^k`-th power.
    pub fn frobenius_iter(&self, k: u32) -> Self {
        WittVector { comps: self.comps.iter().map(|c| c.frobenius_iter(k)).collect(), tables: self.tables.clone() }
    }

    /// `x^p - x`.
    pub fn wp(&self) -> Self {
        self.frobenius().witt_sub(self)
    }

    /// `x^q - x` for `q = p^n`.
    pub fn wp_q(&self, n: u32) -> Self {
        self.frobenius_iter(n).witt_sub(self)
    }

    /// Ring power in `W_m`.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.tables, &self.comps[0]);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.witt_mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.witt_mul(&base);
            }
        }
        acc
    }

    /// `V^k`: shift components right by `k`.
    pub fn verschiebung(&self, k: usize) -> Self {
        let z = self.comps[0].zero_like();
        let m = self.length();
        let comps = (0..m).map(|i| if i < k { z.clone() } else { self.comps[i - k].clone() }).collect();
        WittVector { comps, tables: self.tables.clone() }
    }

    /// The first `j` components as a vector of length `j`.
    pub fn truncate(&self, tables: &Arc<WittTables>) -> Result<Self> {
        let j = tables.length();
        if j > self.length() || tables.p() != self.tables.p() {
            return Err(Error::LengthMismatch);
        }
        Ok(WittVector { comps: self.comps[..j].to_vec(), tables: tables.clone() })
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> WittVector<S> {
        WittVector { comps: self.comps.iter().map(f).collect(), tables: self.tables.clone() }
    }
}

impl WittVector<crate::gf::FFElem> {
    /// Units of `W_m(F_q)` have nonzero first component.
    pub fn is_unit(&self) -> bool {
        !self.comps[0].is_zero()
    }

    /// Inverse in `W_m(F_q)` as `x^((q-1) q^(m-1) - 1)`.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_unit() {
            return None;
        }
        let q = self.comps[0].ctx().size() as u64;
        let order = (q - 1) * q.pow(self.length() as u32 - 1);
        Some(self.pow(order - 1))
    }
}

impl<R: Ring> PartialEq for WittVector<R> {
    fn eq(&self, o: &Self) -> bool {
        self.comps == o.comps
    }
}

impl<R: Ring + Eq> Eq for WittVector<R> {}

impl<R: Ring + fmt::Display> fmt::Display for WittVector<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.comps.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl<R: Ring> fmt::Debug for WittVector<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.comps).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;
    use crate::witt::build_tables;

    #[test]
    fn small_integers_in_w2_f2() {
        let t = Arc::new(build_tables(2, 2).unwrap());
        let k = make_field(2, 1, None).unwrap();
        let one = WittVector::one(&t, &k.one());
        assert_eq!(one.witt_add(&one).comps(), &[k.zero(), k.one()]);
        assert_eq!(WittVector::from_int(&t, &k.one(), 3).comps(), &[k.one(), k.one()]);
        assert!(WittVector::from_int(&t, &k.one(), 4).is_zero());
        assert!(one.witt_sub(&one).is_zero());
        assert_eq!(WittVector::teichmuller(&t, &k.zero()), WittVector::zero(&t, &k.one()));
    }

    #[test]
    fn powers_of_p_shift() {
        for p in [2u32, 3] {
            let t = Arc::new(build_tables(p, 3).unwrap());
            let k = make_field(p, 1, None).unwrap();
            let one = WittVector::one(&t, &k.one());
            let pv = WittVector::from_int(&t, &k.one(), p as i64);
            for j in 0..3 {
                let v = pv.pow(j as u64).witt_mul(&one);
                assert_eq!(v, one.verschiebung(j));
            }
            assert!(WittVector::from_int(&t, &k.one(), (p as i64).pow(3)).is_zero());
        }
    }

    #[test]
    fn unit_inverse() {
        let t = Arc::new(build_tables(3, 2).unwrap());
        let k = make_field(3, 2, None).unwrap();
        let x = WittVector::new(&t, alloc::vec![k.gen(), k.one()]).unwrap();
        let inv = x.inverse().unwrap();
        assert_eq!(x.witt_mul(&inv), WittVector::one(&t, &k.one()));
        assert!(WittVector::new(&t, alloc::vec![k.zero(), k.one()]).unwrap().inverse().is_none());
    }

    #[test]
    fn mismatches() {
        let t2 = Arc::new(build_tables(2, 2).unwrap());
        let t3 = Arc::new(build_tables(2, 3).unwrap());
        let k = make_field(2, 1, None).unwrap();
        let k4 = make_field(2, 2, None).unwrap();
        let a = WittVector::one(&t2, &k.one());
        let b = WittVector::one(&t3, &k.one());
        let c = WittVector::one(&t2, &k4.one());
        assert_eq!(a.add(&b).unwrap_err(), Error::LengthMismatch);
        assert_eq!(a.add(&c).unwrap_err(), Error::RingMismatch);
        assert_eq!(WittVector::new(&t2, alloc::vec![k.one()]).unwrap_err(), Error::LengthMismatch);
    }
}
