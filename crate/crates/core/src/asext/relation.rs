use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::qa::{QAElem, QuotientAlgebra};
use super::reduce::SubstitutionLog;
use super::spec::{reduce_global, ExtensionSpec};
use crate::addpoly::{fp_independent, fp_rank, moore_matrix, solve, subspace_poly, AdditivePoly};
use crate::algebra::Ring;
use crate::gf::FFElem;
use crate::upoly::RatFunc;
use crate::{Error, Result};

/// `z = sum A_j y^(p^j) + D` with `l(X) = sum A_j X^(p^j)` vanishing exactly
/// on the target subgroup, and `f_V(z) = w` for `V = l(G_f)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorRelation {
    pub a: Vec<FFElem>,
    pub d: RatFunc,
    /// `gamma_i = sigma_{mu_i}(z) - z` for the root group basis `mu`.
    pub gammas: Vec<FFElem>,
    pub moore_det: FFElem,
    /// Basis of the kernel of `l` on the root group.
    pub kernel: Vec<FFElem>,
    /// Basis of `V = l(G_f)`.
    pub image_basis: Vec<FFElem>,
    pub fv: AdditivePoly,
    pub w: RatFunc,
}

impl GeneratorRelation {
    /// `sum A_j Y^(p^j) + D` in the algebra.
    pub fn rebuild(&self, qa: &QuotientAlgebra) -> QAElem {
        qa.additive(&self.a).add(&qa.from_base(&self.d))
    }

    /// `l(x)`.
    pub fn l(&self, x: &FFElem) -> FFElem {
        let p = x.ctx().p() as u64;
        let mut acc = x.ctx().zero();
        let mut xp = x.clone();
        for (j, aj) in self.a.iter().enumerate() {
            if j > 0 {
                xp = xp.pow(p);
            }
            acc = &acc + &(aj * &xp);
        }
        acc
    }
}

fn not_fixed(why: String) -> Error {
    Error::NotAFixedField(why)
}

/// Expresses `z`, a generator of the fixed field of `target` inside
/// `qa`, through `y`.
pub fn generator_relation(qa: &QuotientAlgebra, z: &QAElem, target: &[FFElem]) -> Result<GeneratorRelation> {
    if !z.algebra().same(qa) {
        return Err(Error::ContextMismatch);
    }
    let spec = qa.spec();
    let ctx = qa.ctx().clone();
    let group = spec.group();
    if target.iter().any(|h| !group.contains(h)) {
        return Err(Error::NotASubgroup);
    }
    for h in target {
        if qa.sigma(h, z)? != *z {
            return Err(not_fixed(format!("element is moved by {h}")));
        }
    }
    let mu = group.basis().to_vec();
    let mut gammas = Vec::new();
    for m in &mu {
        let g = qa.sigma(m, z)?.sub(z);
        let c = g
            .as_base()
            .and_then(|r| r.constant_value())
            .ok_or_else(|| not_fixed(format!("sigma_{m}(z) - z is not a constant")))?;
        gammas.push(c);
    }
    let rank = fp_rank(&gammas);
    let n = mu.len();
    let target_rank = fp_rank(target);
    if n - rank != target_rank {
        return Err(not_fixed(format!(
            "fixed group has rank {} but the target has rank {target_rank}",
            n - rank
        )));
    }
    let (m, det) = moore_matrix(&mu);
    let a = solve(&m, &gammas, &ctx)?;
    let y_part = qa.additive(&a);
    let d = z
        .sub(&y_part)
        .as_base()
        .cloned()
        .ok_or_else(|| not_fixed(String::from("z - l(y) is not in k")))?;
    let mut image_basis: Vec<FFElem> = Vec::new();
    for g in &gammas {
        let mut trial = image_basis.clone();
        trial.push(g.clone());
        if fp_independent(&trial) {
            image_basis = trial;
        }
    }
    let fv = subspace_poly(&ctx, &image_basis)?;
    let w = fv
        .eval(z)?
        .as_base()
        .cloned()
        .ok_or_else(|| not_fixed(String::from("f_V(z) is not in k")))?;
    let kernel = kernel_basis(group, &gammas);
    Ok(GeneratorRelation { a, d, gammas, moore_det: det, kernel, image_basis, fv, w })
}

/// Basis of `{sum c_i mu_i : sum c_i gamma_i = 0}` by enumeration of
/// coordinate vectors.
fn kernel_basis(group: &crate::addpoly::RootGroup, gammas: &[FFElem]) -> Vec<FFElem> {
    let ctx = group.ctx();
    let mut out: Vec<FFElem> = Vec::new();
    for x in group.elements() {
        if x.is_zero() {
            continue;
        }
        let c = group.coords(&x).expect("element of the group");
        let img = c
            .iter()
            .zip(gammas)
            .fold(ctx.zero(), |acc, (&ci, g)| &acc + &(g * &ctx.from_int(ci as i64)));
        if img.is_zero() {
            let mut trial = out.clone();
            trial.push(x);
            if fp_independent(&trial) {
                out = trial;
            }
        }
    }
    out
}

/// `f(l(y) + D)` for `l = sum A_j X^(p^j)`; it must lie in `k`.
pub fn relate_by_linear_map(qa: &QuotientAlgebra, a: &[FFElem], d: &RatFunc) -> Result<RatFunc> {
    let z = qa.additive(a).add(&qa.from_base(d));
    qa.spec()
        .f()
        .eval(&z)?
        .as_base()
        .cloned()
        .ok_or_else(|| not_fixed(String::from("f(l(y) + D) is not in k")))
}

/// Normal form of the generator `y^(p^j)`: when `f` has prime-field
/// coefficients `f(y^(p^j)) = u^(p^j)`, which is then reduced by shifts.
#[derive(Clone, Debug)]
pub struct PowerNormalForm {
    pub j: u32,
    pub log: SubstitutionLog,
    pub u_prime: RatFunc,
    pub relation: GeneratorRelation,
}

pub fn power_normal_form(qa: &QuotientAlgebra, j: u32) -> Result<PowerNormalForm> {
    let spec = qa.spec();
    let f = spec.f();
    let p = f.ctx().p() as usize;
    let mut coeffs = alloc::vec![RatFunc::zero(f.ctx()); p.pow(j) + 1];
    coeffs[p.pow(j)] = RatFunc::one(f.ctx());
    let yj = if p.pow(j) < qa.dim() {
        qa.element(coeffs)?
    } else {
        (0..j).fold(qa.y(), |acc, _| acc.frobenius())
    };
    let uj = f
        .eval(&yj)?
        .as_base()
        .cloned()
        .ok_or_else(|| not_fixed(String::from("f(y^(p^j)) is not in k; f needs prime-field coefficients")))?;
    let (log, reduced) = reduce_global(&spec.with_u(uj)?)?;
    let z = yj.sub(&qa.from_base(&log.total(f.ctx())));
    let u_prime = reduced.u().clone();
    if f.eval(&z)?.as_base() != Some(&u_prime) {
        return Err(Error::VerificationFailed(String::from("shifted power does not satisfy the reduced equation")));
    }
    let relation = generator_relation(qa, &z, &[])?;
    Ok(PowerNormalForm { j, log, u_prime, relation })
}

/// The reduced equations for `y, y^p, ..., y^(p^(n-1))`.
pub fn power_normal_forms(spec: &ExtensionSpec) -> Result<Vec<PowerNormalForm>> {
    let qa = QuotientAlgebra::new(spec);
    (0..spec.f().n() as u32).map(|j| power_normal_form(&qa, j)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asext::ramification_report;
    use crate::gf::make_field;
    use crate::upoly::Place;

    #[test]
    fn frobenius_twist_of_monomial() {
        for p in [2u32, 3] {
            let k = make_field(p, 2, None).unwrap();
            let lambda = 1;
            let t = RatFunc::t(&k);
            let u = t.powi((lambda * p) as i64).unwrap();
            let spec = ExtensionSpec::irreducible(AdditivePoly::x_q_minus_x(&k, 2), u).unwrap();
            let rep = ramification_report(&spec).unwrap();
            assert!(!rep.infinity.as_ref().unwrap().exact);
            let qa = QuotientAlgebra::new(&spec);
            let nf = power_normal_form(&qa, 1).unwrap();
            assert_eq!(nf.u_prime, t.powi(lambda as i64).unwrap());
            assert_eq!(nf.relation.a, alloc::vec![k.zero(), k.one()]);
            assert_eq!(nf.relation.d, t.powi(lambda as i64).unwrap().neg());
            assert!(nf.relation.kernel.is_empty());
            let z = qa.additive(&nf.relation.a).add(&qa.from_base(&nf.relation.d));
            assert_eq!(nf.relation.rebuild(&qa), z);
            let rep2 = ramification_report(&spec.with_u(nf.u_prime.clone()).unwrap()).unwrap();
            let inf = rep2.at(&Place::Infinity).unwrap();
            assert!(inf.exact);
            assert_eq!(inf.e_bound, (p * p) as u64);
        }
    }

    #[test]
    fn subfield_generator_relation() {
        let k = make_field(3, 2, None).unwrap();
        let t = RatFunc::t(&k);
        let spec = ExtensionSpec::irreducible(AdditivePoly::x_q_minus_x(&k, 2), t.powi(5).unwrap()).unwrap();
        let qa = QuotientAlgebra::new(&spec);
        let subs = crate::asext::subextensions_in(&qa).unwrap();
        for s in &subs {
            let z = s.generator_element(&qa);
            let rel = generator_relation(&qa, &z, &s.hyperplane.basis).unwrap();
            assert_eq!(rel.rebuild(&qa), z);
            assert!(!rel.moore_det.is_zero());
            assert_eq!(rel.kernel.len(), 1);
            for h in &s.hyperplane.basis {
                assert!(rel.l(h).is_zero());
            }
            assert_eq!(rel.image_basis.len(), 1);
        }
        // the full generator is moved by everything
        let err = generator_relation(&qa, &qa.y(), &[k.one()]).unwrap_err();
        assert!(matches!(err, Error::NotAFixedField(_)));
        // an element of k has the whole group as fixed group
        let c = qa.from_base(&t);
        let rel = generator_relation(&qa, &c, spec.group().basis()).unwrap();
        assert!(rel.a.iter().all(|x| x.is_zero()));
        assert_eq!(rel.d, t);
    }
}
