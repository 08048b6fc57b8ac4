//! Artin–Schreier–Witt equations `y^q - y = alpha` over `k = k0(T)`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::galois::{all_vectors, basis_check, prime_vectors, solve_witt, witt_moore_matrix, WittF};
use super::tables::WittTables;
use super::vector::WittVector;
use crate::addpoly::AdditivePoly;
use crate::asext::{is_reduced, wp_membership, ExtensionSpec, SubstitutionLog};
use crate::asext::{reduce_with, Scope};
use crate::upoly::RatFunc;
use crate::{Error, Result};

pub type WittK = WittVector<RatFunc>;

/// `y^q - y = alpha` with `q = p^n`, `alpha` in `W_m(k)`.
#[derive(Clone, Debug)]
pub struct WittExtensionSpec {
    n: u32,
    alpha: WittK,
    reduced: bool,
}

impl WittExtensionSpec {
    pub fn new(n: u32, alpha: WittK) -> Result<Self> {
        let ctx = alpha.comps()[0].ctx();
        if n == 0 || ctx.degree() % n != 0 {
            return Err(Error::NotASubfield { sub: n, sup: ctx.degree() });
        }
        let f = AdditivePoly::x_q_minus_x(ctx, n as usize);
        let reduced = alpha.comps().iter().all(|c| is_reduced(&f, c));
        Ok(WittExtensionSpec { n, alpha, reduced })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u64 {
        (self.alpha.tables().p() as u64).pow(self.n)
    }

    pub fn m(&self) -> usize {
        self.alpha.length()
    }

    pub fn alpha(&self) -> &WittK {
        &self.alpha
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// `y_1^q - y_1 = alpha_1`.
    pub fn first_component(&self) -> Result<ExtensionSpec> {
        let ctx = self.alpha.comps()[0].ctx();
        ExtensionSpec::new(AdditivePoly::x_q_minus_x(ctx, self.n as usize), self.alpha.comps()[0].clone())
    }
}

/// `y -> y - theta` acting on component `component` (`theta = V^component(x)`).
#[derive(Clone, Debug)]
pub struct WittShift {
    pub component: usize,
    pub theta: WittK,
    pub scalar_log: SubstitutionLog,
}

#[derive(Clone, Debug, Default)]
pub struct WittSubstitutionLog {
    pub shifts: Vec<WittShift>,
}

impl WittSubstitutionLog {
    /// `alpha -(W) wp_q(theta_1) -(W) wp_q(theta_2) ...`.
    pub fn replay(&self, alpha: &WittK, n: u32) -> WittK {
        self.shifts.iter().fold(alpha.clone(), |a, s| a.witt_sub(&s.theta.wp_q(n)))
    }

    /// Witt sum of the shifts.
    pub fn total(&self, like: &WittK) -> WittK {
        let z = WittVector::zero(like.tables(), &like.comps()[0]);
        self.shifts.iter().fold(z, |a, s| a.witt_add(&s.theta))
    }
}

fn reduce_vector(alpha: &WittK, n: u32) -> (WittSubstitutionLog, WittK) {
    let ctx = alpha.comps()[0].ctx().clone();
    let f = AdditivePoly::x_q_minus_x(&ctx, n as usize);
    let mut log = WittSubstitutionLog::default();
    let mut a = alpha.clone();
    for i in 0..a.length() {
        let red = reduce_with(&f, &a.comps()[i], &Scope::Global);
        let (slog, r) = (red.log, red.u);
        if slog.is_identity() {
            continue;
        }
        let delta = slog.total(&ctx);
        let theta = WittVector::teichmuller(a.tables(), &delta).verschiebung(i);
        a = a.witt_sub(&theta.wp_q(n));
        debug_assert!(a.comps()[i] == r);
        log.shifts.push(WittShift { component: i, theta, scalar_log: slog });
    }
    (log, a)
}

/// Component-by-component shift reduction.
pub fn witt_reduce(spec: &WittExtensionSpec) -> Result<(WittSubstitutionLog, WittExtensionSpec)> {
    let (log, a) = reduce_vector(&spec.alpha, spec.n);
    Ok((log, WittExtensionSpec::new(spec.n, a)?))
}

/// Reduction of the generator `y^(p^j)`, whose right-hand side is `alpha^(p^j)`.
pub fn witt_power_normal_form(
    spec: &WittExtensionSpec,
    j: u32,
) -> Result<(WittSubstitutionLog, WittExtensionSpec)> {
    let twisted = WittExtensionSpec::new(spec.n, spec.alpha.frobenius_iter(j))?;
    witt_reduce(&twisted)
}

/// Cyclic subextension `y_xi^p - y_xi = xi alpha`, with generator
/// `y_xi = sum_{i<n} xi^(p^i) y^(p^i)`.
#[derive(Clone, Debug)]
pub struct CyclicSubextension {
    pub xi: WittF,
    pub rhs: WittK,
    /// Degree `p^m` exactly (`xi` a unit).
    pub full_degree: bool,
    pub generator: Vec<WittF>,
}

impl CyclicSubextension {
    pub fn generator_formula(&self) -> String {
        let parts: Vec<String> = self
            .generator
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let p = c.tables().p() as u64;
                format!("{c}*y^{}", p.pow(i as u32))
            })
            .collect();
        parts.join(" + ")
    }

    /// `y_xi` for a concrete `y` in `W_m(k)`.
    pub fn generator_value(&self, y: &WittK) -> WittK {
        let mut acc = WittVector::zero(y.tables(), &y.comps()[0]);
        for (i, c) in self.generator.iter().enumerate() {
            let lifted = c.map(RatFunc::constant);
            acc = acc.witt_add(&lifted.witt_mul(&y.frobenius_iter(i as u32)));
        }
        acc
    }
}

pub fn cyclic_subextension(xi: &WittF, alpha: &WittK, n: u32) -> Result<CyclicSubextension> {
    if xi.tables().length() != alpha.length() {
        return Err(Error::LengthMismatch);
    }
    if !xi.comps()[0].ctx().same(alpha.comps()[0].ctx()) {
        return Err(Error::RingMismatch);
    }
    let rhs = xi.map(RatFunc::constant).mul(alpha)?;
    let generator = (0..n).map(|i| xi.frobenius_iter(i)).collect();
    Ok(CyclicSubextension { xi: xi.clone(), rhs, full_degree: xi.is_unit(), generator })
}

/// Number of `W_m(F_p)^*`-orbits of units of `W_m(F_q)`.
pub fn count_cyclic_subextensions(tables: &Arc<WittTables>, ctx: &crate::FieldCtx) -> usize {
    let units: Vec<WittF> = all_vectors(tables, ctx).into_iter().filter(|x| x.is_unit()).collect();
    let scalars: Vec<WittF> = prime_vectors(tables, ctx).into_iter().filter(|x| x.is_unit()).collect();
    let key = |x: &WittF| -> Vec<u32> { x.comps().iter().map(|c| c.code()).collect() };
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut orbits = 0;
    for u in &units {
        if seen.contains(&key(u)) {
            continue;
        }
        orbits += 1;
        for s in &scalars {
            seen.insert(key(&s.witt_mul(u)));
        }
    }
    orbits
}

/// `z = sum A_i y^(p^i) + D` between `y^q - y = alpha` and `z^q - z = beta`.
#[derive(Clone, Debug)]
pub struct WittRelation {
    pub a: Vec<WittF>,
    pub d: WittK,
    pub log: WittSubstitutionLog,
}

impl WittRelation {
    /// `R(x) = sum A_i x^(p^i)`.
    pub fn apply(&self, x: &WittK) -> WittK {
        let mut acc = WittVector::zero(x.tables(), &x.comps()[0]);
        for (i, ai) in self.a.iter().enumerate() {
            acc = acc.witt_add(&ai.map(RatFunc::constant).witt_mul(&x.frobenius_iter(i as u32)));
        }
        acc
    }
}

/// Solves the Witt–Moore system `M A = xi` for the basis `mu`, then finds
/// `D` with `beta = R(alpha) + wp_q(D)`.
pub fn witt_generator_relation(alpha: &WittK, beta: &WittK, mu: &[WittF], xi: &[WittF]) -> Result<WittRelation> {
    if !basis_check(mu) || !basis_check(xi) || mu.len() != xi.len() {
        return Err(Error::SingularWittSystem);
    }
    let n = mu.len() as u32;
    let a = solve_witt(&witt_moore_matrix(mu), xi)?;
    let partial = WittRelation { a, d: WittVector::zero(alpha.tables(), &alpha.comps()[0]), log: Default::default() };
    let r_alpha = partial.apply(alpha);
    let diff = beta.sub(&r_alpha)?;
    let (log, rest) = reduce_vector(&diff, n);
    if !rest.is_zero() {
        return Err(Error::IdentityFailure(format!("beta - R(alpha) = {rest} is not in wp_q(W(k))")));
    }
    let d = log.total(&diff);
    if r_alpha.witt_add(&d.wp_q(n)) != *beta {
        return Err(Error::IdentityFailure(String::from("beta != R(alpha) + wp_q(D)")));
    }
    Ok(WittRelation { a: partial.a, d, log })
}

/// `(e, f, g)` of infinity for `y^p - y = gamma` (cyclic, `q = p`), `gamma`
/// the reduced polynomial part: `s` leading zeros, components `s+1..t` in
/// `k0`, component `t+1` nonconstant.
pub fn witt_infinity_splitting(gamma: &WittK) -> Result<(u64, u64, u64)> {
    let m = gamma.length();
    let ctx = gamma.comps()[0].ctx();
    let f = AdditivePoly::wp(ctx);
    for (i, c) in gamma.comps().iter().enumerate() {
        if !c.is_poly() {
            return Err(Error::NotReduced(format!("component {} has finite poles", i + 1)));
        }
        if !is_reduced(&f, c) && !c.is_constant() {
            return Err(Error::NotReduced(format!("component {} has degree divisible by p", i + 1)));
        }
    }
    let s = gamma.valuation();
    if s < m {
        let c = &gamma.comps()[s];
        if c.is_constant() && wp_membership(c).0 {
            return Err(Error::NotReduced(format!("component {} is a constant in wp(k0)", s + 1)));
        }
    }
    let t = gamma.comps().iter().position(|c| !c.is_constant()).unwrap_or(m);
    let p = ctx.p() as u64;
    Ok((p.pow((m - t) as u32), p.pow((t - s) as u32), p.pow(s as u32)))
}
