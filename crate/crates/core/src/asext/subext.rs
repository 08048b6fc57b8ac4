use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::qa::{qa_verify, Claim, QAElem, QuotientAlgebra};
use super::spec::{hyperplane_rhs, ExtensionSpec};
use crate::addpoly::{AdditivePoly, Hyperplane};
use crate::gf::FFElem;
use crate::upoly::RatFunc;
use crate::{Error, Result};

/// The degree-`p` subextension `k(z_H)` fixed by a hyperplane `H`, with
/// `z_H = sum g_i y^(p^i)` and `z_H^p - z_H = rhs`.
#[derive(Clone, Debug)]
pub struct SubextensionDesc {
    pub hyperplane: Hyperplane,
    pub rhs: RatFunc,
    /// Coefficients `g_i` of `y^(p^i)` in `z_H`.
    pub generator: Vec<FFElem>,
}

impl SubextensionDesc {
    pub fn generator_element(&self, qa: &QuotientAlgebra) -> QAElem {
        qa.additive(&self.generator)
    }

    /// The generator as a polynomial in `y`, for example `w*y^3+2*y`.
    pub fn generator_formula(&self) -> String {
        linear_formula(&self.generator, "y")
    }

    fn expr(&self, qa: &QuotientAlgebra) -> Vec<RatFunc> {
        self.generator_element(qa).coeffs().to_vec()
    }

    /// Equation, fixed group and the shift by `eps_H`, checked in `qa`.
    pub fn verify(&self, qa: &QuotientAlgebra) -> Result<bool> {
        let ctx = qa.ctx();
        let expr = self.expr(qa);
        let eq = qa_verify(
            qa,
            &Claim::Satisfies { expr: expr.clone(), equation: AdditivePoly::wp(ctx), rhs: self.rhs.clone() },
        )?;
        let fixed = qa_verify(qa, &Claim::FixedBy { expr: expr.clone(), subgroup: self.hyperplane.basis.clone() })?;
        let moved = qa_verify(
            qa,
            &Claim::MovedBy { expr, xi: self.hyperplane.eps.clone(), shift: RatFunc::one(ctx) },
        )?;
        Ok(eq && fixed && moved)
    }
}

pub(crate) fn linear_formula(g: &[FFElem], var: &str) -> String {
    let p = g.first().map_or(2, |x| x.ctx().p() as u64);
    let mut parts = Vec::new();
    for (i, c) in g.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mono = match i {
            0 => String::from(var),
            _ => format!("{var}^{}", p.pow(i as u32)),
        };
        let cs = format!("{c}");
        parts.push(if c.is_one() {
            mono
        } else if cs.contains('+') {
            format!("({cs})*{mono}")
        } else {
            format!("{cs}*{mono}")
        });
    }
    if parts.is_empty() {
        String::from("0")
    } else {
        parts.join("+")
    }
}

fn describe(spec: &ExtensionSpec, h: &Hyperplane) -> SubextensionDesc {
    let c = h.fh_at_eps.inv().expect("f_H(eps) is nonzero");
    let generator = h.fh.coeffs().iter().map(|a| a * &c).collect();
    SubextensionDesc { hyperplane: h.clone(), rhs: hyperplane_rhs(spec.u(), h), generator }
}

/// All `(p^n - 1)/(p - 1)` degree-`p` subextensions, each verified in the
/// quotient algebra.
pub fn subextensions(spec: &ExtensionSpec) -> Result<Vec<SubextensionDesc>> {
    spec.require_irreducible()?;
    let qa = QuotientAlgebra::new(spec);
    subextensions_in(&qa)
}

pub fn subextensions_in(qa: &QuotientAlgebra) -> Result<Vec<SubextensionDesc>> {
    let spec = qa.spec();
    spec.require_irreducible()?;
    let mut out = Vec::new();
    for h in spec.hyperplanes() {
        let d = describe(spec, h);
        if !d.verify(qa)? {
            return Err(Error::VerificationFailed(format!(
                "subextension for hyperplane {:?} failed its algebra check",
                h.functional
            )));
        }
        out.push(d);
    }
    Ok(out)
}

/// For `f = X^q - X`: `y_mu = sum_{i<n} (mu y)^(p^i)` with
/// `y_mu^p - y_mu = mu u`, fixed by `{xi : Tr(mu xi) = 0}`.
#[derive(Clone, Debug)]
pub struct TraceGenerator {
    pub mu: FFElem,
    pub rhs: RatFunc,
    pub generator: Vec<FFElem>,
    /// Index into `spec.hyperplanes()` of the fixed hyperplane.
    pub hyperplane: usize,
}

impl TraceGenerator {
    pub fn generator_element(&self, qa: &QuotientAlgebra) -> QAElem {
        qa.additive(&self.generator)
    }
}

pub fn trace_generator(spec: &ExtensionSpec, mu: &FFElem) -> Result<TraceGenerator> {
    let f = spec.f();
    if !f.is_x_q_minus_x() {
        return Err(Error::NotAFixedField(String::from("trace generators need f = X^q - X")));
    }
    if !spec.group().contains(mu) || mu.is_zero() {
        return Err(Error::NotAFixedField(format!("{mu} is not a nonzero element of F_q")));
    }
    let n = f.n();
    let generator: Vec<FFElem> = (0..n).map(|i| mu.frobenius_power(i as i64)).collect();
    let tr_zero = |xi: &FFElem| {
        (0..n).fold(f.ctx().zero(), |acc, i| &acc + &(mu * xi).frobenius_power(i as i64)).is_zero()
    };
    let hyperplane = spec
        .hyperplanes()
        .iter()
        .position(|h| h.basis.iter().all(tr_zero))
        .ok_or_else(|| Error::VerificationFailed(String::from("no hyperplane matches the trace kernel")))?;
    Ok(TraceGenerator { mu: mu.clone(), rhs: spec.u().scale(mu), generator, hyperplane })
}

/// One `y_mu` per hyperplane, `mu` normalized to leading coordinate one in
/// the root group basis, in hyperplane order.
pub fn trace_generators(spec: &ExtensionSpec) -> Result<Vec<TraceGenerator>> {
    let group = spec.group();
    let mut found: Vec<Option<TraceGenerator>> = alloc::vec![None; spec.hyperplanes().len()];
    for mu in group.elements() {
        let Some(c) = group.coords(&mu) else { continue };
        if c.iter().find(|&&x| x != 0) != Some(&1) {
            continue;
        }
        let tg = trace_generator(spec, &mu)?;
        let slot = &mut found[tg.hyperplane];
        if slot.is_none() {
            *slot = Some(tg);
        }
    }
    found
        .into_iter()
        .map(|t| t.ok_or_else(|| Error::VerificationFailed(String::from("hyperplane without trace generator"))))
        .collect()
}
