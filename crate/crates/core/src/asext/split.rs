use alloc::vec::Vec;

use super::reduce::{reduce_with, Scope};
use super::spec::{ramification_report, ExtensionSpec, RamifiedPlace};
use crate::addpoly::{intersection_dim, AdditivePoly, Hyperplane};
use crate::gf::FFElem;
use crate::upoly::{partial_fractions, Place, RatFunc, ResidueField};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitVerdict {
    FullySplit,
    /// Inertia degree `p`.
    Inert(u64),
    Ramified(RamifiedPlace),
}

/// Raised when the hyperplane-wise test and the direct image test
/// `u(nu) in f(k')` disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitWarning {
    SplitButOutsideImage { value: FFElem },
    InertButInsideImage { value: FFElem },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitReport {
    pub place: Place,
    pub verdict: SplitVerdict,
    /// Value of the reduced right-hand side at the place (in the residue field).
    pub value: Option<FFElem>,
    pub warnings: Vec<SplitWarning>,
}

/// Largest residue field scanned for the direct image cross-check.
const IMAGE_SCAN_CAP: u32 = 1 << 12;

fn image_contains(f: &AdditivePoly, rf: &ResidueField, w: &FFElem) -> Option<bool> {
    let kp = rf.field();
    if kp.size() > IMAGE_SCAN_CAP {
        return None;
    }
    let a: Vec<FFElem> = f.coeffs().iter().map(|c| rf.embed(c)).collect();
    let p = kp.p() as u64;
    Some(kp.elements().any(|x| {
        let mut acc = kp.zero();
        let mut xp = x;
        for (i, ai) in a.iter().enumerate() {
            if i > 0 {
                xp = xp.pow(p);
            }
            acc = &acc + &(ai * &xp);
        }
        acc == *w
    }))
}

/// `Tr(w / f_H(eps_H)^p) = 0` in the residue field for every hyperplane.
fn all_hyperplanes_split(hs: &[Hyperplane], rf: &ResidueField, w: &FFElem) -> bool {
    hs.iter().all(|h| hyperplane_splits(h, rf, w))
}

fn hyperplane_splits(h: &Hyperplane, rf: &ResidueField, w: &FFElem) -> bool {
    let p = rf.field().p() as u64;
    let c = rf.embed(&h.fh_at_eps).pow(p);
    (w / &c).abs_trace() == 0
}

fn infinity_residue(spec: &ExtensionSpec) -> Result<ResidueField> {
    let t = crate::upoly::Poly::t(spec.f().ctx());
    ResidueField::new(&t)
}

/// Splitting behaviour of `place` in `K/k`; the right-hand side is reduced
/// first.
pub fn place_splitting(spec: &ExtensionSpec, place: &Place) -> Result<SplitReport> {
    let rep = ramification_report(spec)?;
    if let Some(r) = rep.at(place) {
        return Ok(SplitReport { place: place.clone(), verdict: SplitVerdict::Ramified(r.clone()), value: None, warnings: Vec::new() });
    }
    let p = spec.f().ctx().p() as u64;
    let u = &rep.reduced_u;
    let (rf, w) = match place {
        Place::Finite(pl) => {
            let rf = ResidueField::new(pl)?;
            let w = rf.eval(u)?;
            (rf, w)
        }
        Place::Infinity => {
            let r = partial_fractions(u).poly_part;
            let rf = infinity_residue(spec)?;
            let w = rf.embed(&r.coeff(0));
            (rf, w)
        }
    };
    let split = all_hyperplanes_split(spec.hyperplanes(), &rf, &w);
    let verdict = if split { SplitVerdict::FullySplit } else { SplitVerdict::Inert(p) };
    let mut warnings = Vec::new();
    if let Some(inside) = image_contains(spec.f(), &rf, &w) {
        if split && !inside {
            warnings.push(SplitWarning::SplitButOutsideImage { value: w.clone() });
        }
        if !split && inside {
            warnings.push(SplitWarning::InertButInsideImage { value: w.clone() });
        }
    }
    Ok(SplitReport { place: place.clone(), verdict, value: Some(w), warnings })
}

/// A split or inert answer; ramified places are an error.
pub fn split_or_inert(spec: &ExtensionSpec, place: &Place) -> Result<SplitVerdict> {
    match place_splitting(spec, place)?.verdict {
        SplitVerdict::Ramified(_) => Err(Error::RamifiedPlaceForSplitTest),
        v => Ok(v),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SubextBehavior {
    Split,
    Inert,
    Ramified,
}

/// Behaviour of a place in one degree-`p` extension `z^p - z = w`.
pub fn degree_p_behavior(w: &RatFunc, place: &Place) -> Result<SubextBehavior> {
    let f = AdditivePoly::wp(w.ctx());
    let red = reduce_with(&f, w, &Scope::At(place.clone()));
    let value = match place {
        Place::Finite(pl) => {
            if red.pf.term_at(pl).is_some() {
                return Ok(SubextBehavior::Ramified);
            }
            ResidueField::new(pl)?.eval(&red.u)?
        }
        Place::Infinity => {
            if red.pf.poly_part.degree() > 0 {
                return Ok(SubextBehavior::Ramified);
            }
            red.pf.poly_part.coeff(0)
        }
    };
    Ok(if value.abs_trace() == 0 { SubextBehavior::Split } else { SubextBehavior::Inert })
}

/// `(e, f, g)` of a place in `K/k` assembled from the behaviour of the
/// place in each degree-`p` subextension: the decomposition group is the
/// intersection of the split hyperplanes, the inertia group the
/// intersection of the unramified ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionType {
    pub place: Place,
    pub e: u64,
    pub f: u64,
    pub g: u64,
    /// Behaviour per hyperplane, in hyperplane order.
    pub behaviors: Vec<(Vec<u32>, SubextBehavior)>,
    /// Independent split hyperplanes; their fields generate the decomposition field.
    pub decomposition_generators: Vec<Vec<u32>>,
    /// Independent unramified hyperplanes; their fields generate the inertia field.
    pub inertia_generators: Vec<Vec<u32>>,
}

fn independent_subset(fs: &[&Vec<u32>], p: u32) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = Vec::new();
    for f in fs {
        let mut trial = out.clone();
        trial.push((*f).clone());
        if crate::addpoly::rank_mod_p(&trial, p) == trial.len() {
            out = trial;
        }
    }
    out
}

pub fn decomposition_type(spec: &ExtensionSpec, place: &Place) -> Result<DecompositionType> {
    spec.require_irreducible()?;
    let p = spec.f().ctx().p();
    let n = spec.f().n();
    let mut behaviors = Vec::new();
    for h in spec.hyperplanes() {
        let w = super::spec::hyperplane_rhs(spec.u(), h);
        behaviors.push((h.functional.clone(), degree_p_behavior(&w, place)?));
    }
    let split: Vec<&Vec<u32>> =
        behaviors.iter().filter(|(_, b)| *b == SubextBehavior::Split).map(|(f, _)| f).collect();
    let unram: Vec<&Vec<u32>> =
        behaviors.iter().filter(|(_, b)| *b != SubextBehavior::Ramified).map(|(f, _)| f).collect();
    let split_s: Vec<&[u32]> = split.iter().map(|f| f.as_slice()).collect();
    let unram_s: Vec<&[u32]> = unram.iter().map(|f| f.as_slice()).collect();
    let dim_d = intersection_dim(&split_s, n, p);
    let dim_i = intersection_dim(&unram_s, n, p);
    let pp = p as u64;
    Ok(DecompositionType {
        place: place.clone(),
        e: pp.pow(dim_i as u32),
        f: pp.pow((dim_d - dim_i) as u32),
        g: pp.pow((n - dim_d) as u32),
        decomposition_generators: independent_subset(&split, p),
        inertia_generators: independent_subset(&unram, p),
        behaviors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;
    use crate::upoly::Poly;

    #[test]
    fn verdicts_at_rational_places() {
        let k = make_field(2, 1, None).unwrap();
        let t = RatFunc::t(&k);
        // y^2 - y = T/(T^2+T+1) + 1 takes the values 1, 0, 1 at T = 0, 1, inf
        let u = t.div(&RatFunc::from_poly(Poly::from_codes(&k, alloc::vec![1, 1, 1]))).unwrap().add(&RatFunc::one(&k));
        let spec = ExtensionSpec::irreducible(AdditivePoly::wp(&k), u).unwrap();
        let r0 = place_splitting(&spec, &Place::finite(Poly::t(&k)).unwrap()).unwrap();
        assert_eq!(r0.verdict, SplitVerdict::Inert(2));
        let r1 = place_splitting(&spec, &Place::finite(Poly::linear(&k.one())).unwrap()).unwrap();
        assert_eq!(r1.verdict, SplitVerdict::FullySplit);
        assert!(r1.warnings.is_empty());
        let inf = place_splitting(&spec, &Place::Infinity).unwrap();
        assert_eq!(inf.verdict, SplitVerdict::Inert(2));
        let bad = place_splitting(&spec, &Place::finite(Poly::from_codes(&k, alloc::vec![1, 1, 1])).unwrap()).unwrap();
        assert!(matches!(bad.verdict, SplitVerdict::Ramified(_)));
        assert_eq!(
            split_or_inert(&spec, &Place::finite(Poly::from_codes(&k, alloc::vec![1, 1, 1])).unwrap()),
            Err(Error::RamifiedPlaceForSplitTest)
        );
    }
}
