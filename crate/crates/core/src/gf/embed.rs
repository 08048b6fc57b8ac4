use alloc::vec;
use alloc::vec::Vec;

use super::{FFElem, FieldCtx};
use crate::{Error, Result};

const NONE: u32 = u32::MAX;

/// Field homomorphism `F_{p^n} -> F_{p^s}` with `n | s`, fixed by sending
/// the source generator to the first root (in enumeration order) of the
/// source modulus inside the target.
#[derive(Clone, Debug)]
pub struct SubfieldEmbedding {
    source: FieldCtx,
    target: FieldCtx,
    image_of_generator: FFElem,
    image: Vec<u32>,
    preimage: Vec<u32>,
}

impl SubfieldEmbedding {
    pub fn new(source: &FieldCtx, target: &FieldCtx) -> Result<Self> {
        if source.p() != target.p() {
            return Err(Error::IncompatibleContexts);
        }
        let (n, s) = (source.degree(), target.degree());
        if s % n != 0 {
            return Err(Error::NotASubfield { sub: n, sup: s });
        }
        if source.same(target) {
            return Ok(Self::identity(source));
        }
        let m = source.modulus();
        let root = target
            .elements()
            .find(|x| {
                let mut acc = 0u32;
                for &c in m.iter().rev() {
                    acc = target.add(target.mul(acc, x.code()), c);
                }
                acc == 0
            })
            .expect("a subfield modulus splits in the larger field");
        let powers: Vec<u32> = {
            let mut v = Vec::with_capacity(n as usize);
            let mut cur = 1u32;
            for _ in 0..n {
                v.push(cur);
                cur = target.mul(cur, root.code());
            }
            v
        };
        let mut image = vec![0u32; source.size() as usize];
        let mut preimage = vec![NONE; target.size() as usize];
        for code in 0..source.size() {
            let mut acc = 0u32;
            for (i, d) in source.digits(code).into_iter().enumerate() {
                acc = target.add(acc, target.mul_int(powers[i], d as i64));
            }
            image[code as usize] = acc;
            preimage[acc as usize] = code;
        }
        Ok(SubfieldEmbedding {
            source: source.clone(),
            target: target.clone(),
            image_of_generator: root,
            image,
            preimage,
        })
    }

    pub fn identity(ctx: &FieldCtx) -> Self {
        let q = ctx.size();
        SubfieldEmbedding {
            source: ctx.clone(),
            target: ctx.clone(),
            image_of_generator: ctx.gen(),
            image: (0..q).collect(),
            preimage: (0..q).collect(),
        }
    }

    pub fn source(&self) -> &FieldCtx {
        &self.source
    }

    pub fn target(&self) -> &FieldCtx {
        &self.target
    }

    pub fn image_of_generator(&self) -> &FFElem {
        &self.image_of_generator
    }

    pub fn embed(&self, e: &FFElem) -> Result<FFElem> {
        if !e.ctx().same(&self.source) {
            return Err(Error::IncompatibleContexts);
        }
        Ok(self.target.elem(self.image[e.code() as usize]))
    }

    pub(crate) fn embed_code(&self, code: u32) -> u32 {
        self.image[code as usize]
    }

    /// Inverse image of a target element lying in the subfield.
    pub fn restrict(&self, e: &FFElem) -> Option<FFElem> {
        if !e.ctx().same(&self.target) {
            return None;
        }
        match self.preimage[e.code() as usize] {
            NONE => None,
            c => Some(self.source.elem(c)),
        }
    }
}

/// Embeds `e` along `emb`.
pub fn embed(e: &FFElem, emb: &SubfieldEmbedding) -> Result<FFElem> {
    emb.embed(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    #[test]
    fn f4_into_f16_is_a_homomorphism() {
        let f4 = make_field(2, 2, None).unwrap();
        let f16 = make_field(2, 4, None).unwrap();
        let e = SubfieldEmbedding::new(&f4, &f16).unwrap();
        assert_eq!(e.embed(&f4.one()).unwrap(), f16.one());
        for a in f4.elements() {
            for b in f4.elements() {
                let ab = e.embed(&(&a * &b)).unwrap();
                assert_eq!(ab, e.embed(&a).unwrap() * e.embed(&b).unwrap());
                assert_eq!(e.embed(&(&a + &b)).unwrap(), e.embed(&a).unwrap() + e.embed(&b).unwrap());
            }
            let ea = e.embed(&a).unwrap();
            assert_eq!(e.restrict(&ea), Some(a.clone()));
            assert_eq!(e.embed(&a.frobenius_power(1)).unwrap(), ea.frobenius_power(1));
        }
        let images: alloc::collections::BTreeSet<u32> =
            f4.elements().map(|a| e.embed(&a).unwrap().code()).collect();
        assert_eq!(images.len(), 4);
    }

    #[test]
    fn non_divisible_degree() {
        let f4 = make_field(2, 2, None).unwrap();
        let f8 = make_field(2, 3, None).unwrap();
        assert_eq!(
            SubfieldEmbedding::new(&f4, &f8).unwrap_err(),
            Error::NotASubfield { sub: 2, sup: 3 }
        );
        let f9 = make_field(3, 2, None).unwrap();
        assert!(embed(&f9.one(), &SubfieldEmbedding::identity(&f4)).is_err());
    }
}
