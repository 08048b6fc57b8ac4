//! Minimal algebraic interfaces shared by field elements, rational
//! functions, quotient-algebra elements and Witt vectors.

use core::fmt::Debug;

use crate::gf::{FFElem, FieldCtx};

/// A commutative ring of characteristic `p` with an explicit Frobenius.
///
/// Values carry their own context (a field handle, an algebra handle), so
/// constants are produced from an existing value with `zero_like` and
/// `one_like`. Mixing values from different contexts panics; the checked
/// entry points of each module test `same_ring` first.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// Image of the integer `n` under `Z -> R`.
    fn from_int(&self, n: i64) -> Self;
    fn characteristic(&self) -> u32;
    /// `x^p`.
    fn frobenius(&self) -> Self;
    fn same_ring(&self, other: &Self) -> bool;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
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

    /// `x^(p^i)` for `i >= 0`.
    fn frobenius_iter(&self, i: u32) -> Self {
        let mut x = self.clone();
        for _ in 0..i {
            x = x.frobenius();
        }
        x
    }
}

/// A ring that is also an algebra over an explicit finite field `k0`.
pub trait Algebra: Ring {
    fn base_field(&self) -> &FieldCtx;
    fn scale(&self, c: &FFElem) -> Self;

    fn from_scalar(&self, c: &FFElem) -> Self {
        self.one_like().scale(c)
    }
}
