//! Subcommands on `f(y) = u`: reduce, ramify, subext, split, relate, combine.

use aspw_core::addpoly::{rank_mod_p, AdditivePoly};
use aspw_core::asext::{
    decomposition_type, generator_relation, normalize_at, place_splitting, power_normal_form, ramification_report,
    reduce_global, relate_by_linear_map, subextensions_in, trace_generator, combine_generators, ExtensionSpec,
    QuotientAlgebra, RamifiedPlace, Shift, SplitVerdict, SplitWarning, SubextBehavior, SubstitutionLog,
};
use aspw_core::oracle::splitting_oracle;
use aspw_core::{FFElem, FieldCtx, Place, RatFunc};
use serde_json::{json, Value};

use crate::parse::{parse_additive, parse_element, parse_field, parse_place, parse_ratfunc, split_list};
use crate::report::{el, elems, functional, place_str, rf, Report};
use crate::{CliResult, SpecArgs};

pub fn load_spec(a: &SpecArgs) -> CliResult<(FieldCtx, ExtensionSpec)> {
    let k = parse_field(&a.field)?;
    let f = parse_additive(&k, &a.f)?;
    let u = parse_ratfunc(&k, &a.u)?;
    Ok((k.clone(), ExtensionSpec::new(f, u)?))
}

fn shift_json(s: &Shift) -> Value {
    json!({
        "place": s.place.as_ref().map(place_str).unwrap_or_else(|| "const".into()),
        "delta": rf(&s.delta),
    })
}

fn log_json(log: &SubstitutionLog) -> Value {
    Value::Array(log.shifts.iter().map(shift_json).collect())
}

fn log_lines(rep: &mut Report, log: &SubstitutionLog) {
    for s in &log.shifts {
        let at = s.place.as_ref().map(place_str).unwrap_or_else(|| "const".into());
        rep.line(format!("  shift at {at}: y -> y - ({})", s.delta));
    }
}

pub fn reduce(a: &SpecArgs, place: Option<&str>) -> CliResult<Report> {
    let (k, spec) = load_spec(a)?;
    let mut rep = Report::new("reduce");
    let (log, r, scope) = match place {
        Some(pl) => {
            let pl = parse_place(&k, pl)?;
            let (log, u) = normalize_at(&spec, &pl)?;
            (log, u, place_str(&pl))
        }
        None => {
            let (log, red) = reduce_global(&spec)?;
            (log, red.u().clone(), "global".to_string())
        }
    };
    rep.line(format!("r(T) = {r}"));
    log_lines(&mut rep, &log);
    rep.set("input_u", rf(spec.u()));
    rep.set("reduced_u", rf(&r));
    rep.set("scope", scope);
    rep.set("shifts", log_json(&log));
    rep.set("total_shift", rf(&log.total(&k)));
    Ok(rep)
}

fn ramified_json(r: &RamifiedPlace, q: u64) -> Value {
    json!({
        "place": place_str(&r.place),
        "pole_order": r.order,
        "lambda": r.lambda,
        "m": r.m,
        "e": r.e_bound,
        "exact": r.exact,
        "fully_ramified": r.exact && r.e_bound == q,
    })
}

fn ramified_text(r: &RamifiedPlace, q: u64) -> String {
    let e = if r.exact { format!("e = {}", r.e_bound) } else { format!("e <= {}", r.e_bound) };
    let full = if r.exact && r.e_bound == q { ", fully ramified" } else { "" };
    format!("{}: pole order {} = {}*p^{}, {e}{full}", place_str(&r.place), r.order, r.lambda, r.m)
}

pub fn ramify(a: &SpecArgs) -> CliResult<Report> {
    let (_, spec) = load_spec(a)?;
    let q = spec.degree();
    let rr = ramification_report(&spec)?;
    let mut rep = Report::new("ramify");
    rep.line(format!("r(T) = {}", rr.reduced_u));
    for r in rr.ramified_places() {
        rep.line(ramified_text(r, q));
    }
    if rr.infinity.is_none() {
        rep.line("inf: unramified");
    }
    rep.set("degree", q);
    rep.set("reduced_u", rf(&rr.reduced_u));
    rep.set("ramified", Value::Array(rr.ramified_places().map(|r| ramified_json(r, q)).collect()));
    rep.set("infinity_ramified", rr.infinity.is_some());
    Ok(rep)
}

fn reduce_degree_p(rhs: &RatFunc) -> CliResult<RatFunc> {
    let s = ExtensionSpec::new(AdditivePoly::wp(rhs.ctx()), rhs.clone())?;
    if !s.is_irreducible() {
        return Ok(rhs.clone());
    }
    Ok(reduce_global(&s)?.1.u().clone())
}

/// `y_1, ..., y_n` for `f = X^q - X`: `y_i = sum_j (mu_i y)^(p^j)` with
/// `mu_i = w^(i-1)` when `F_q = k0`, otherwise the root group basis.
pub struct LabeledTrace {
    pub label: String,
    pub mu: FFElem,
    pub rhs: RatFunc,
    pub hyperplane: Vec<u32>,
}

pub fn labeled_traces(spec: &ExtensionSpec) -> CliResult<Option<Vec<LabeledTrace>>> {
    let f = spec.f();
    if !f.is_x_q_minus_x() {
        return Ok(None);
    }
    let k = f.ctx();
    let basis: Vec<FFElem> = if f.n() as u32 == k.degree() {
        (0..f.n()).map(|i| k.gen().pow(i as u64)).collect()
    } else {
        spec.group().basis().to_vec()
    };
    let mut out = Vec::new();
    for (i, mu) in basis.iter().enumerate() {
        let tg = trace_generator(spec, mu)?;
        out.push(LabeledTrace {
            label: format!("y{}", i + 1),
            mu: mu.clone(),
            rhs: tg.rhs,
            hyperplane: spec.hyperplanes()[tg.hyperplane].functional.clone(),
        });
    }
    Ok(Some(out))
}

/// Smallest set of labeled generators whose fields generate the same field
/// as the hyperplanes `gens`; `None` if no such subset exists.
pub fn field_tags(gens: &[Vec<u32>], traces: &[LabeledTrace], p: u32) -> Option<Vec<String>> {
    let target = rank_mod_p(gens, p);
    let n = traces.len();
    let mut best: Option<Vec<usize>> = None;
    for mask in 0u32..(1 << n) {
        let idx: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        if best.as_ref().is_some_and(|b| b.len() <= idx.len()) {
            continue;
        }
        let rows: Vec<Vec<u32>> = idx.iter().map(|&i| traces[i].hyperplane.clone()).collect();
        if rank_mod_p(&rows, p) != target || idx.len() != target {
            continue;
        }
        let mut all = rows.clone();
        all.extend(gens.iter().cloned());
        if rank_mod_p(&all, p) == target {
            best = Some(idx);
        }
    }
    best.map(|b| b.into_iter().map(|i| traces[i].label.clone()).collect())
}

fn tag_text(tags: &Option<Vec<String>>) -> String {
    match tags {
        Some(t) if t.is_empty() => "k".into(),
        Some(t) => format!("k({})", t.join(",")),
        None => "(not generated by y_i)".into(),
    }
}

pub fn subext(a: &SpecArgs) -> CliResult<Report> {
    let (_, spec) = load_spec(a)?;
    spec.require_irreducible()?;
    let qa = QuotientAlgebra::new(&spec);
    let descs = subextensions_in(&qa)?;
    let mut rep = Report::new("subext");
    let mut items = Vec::new();
    rep.line(format!("{} subextensions of degree p", descs.len()));
    for d in &descs {
        let red = reduce_degree_p(&d.rhs)?;
        rep.line(format!("H {:?}: z = {}, z^p - z = {}", d.hyperplane.functional, d.generator_formula(), red));
        items.push(json!({
            "hyperplane": functional(&d.hyperplane.functional),
            "generator": d.generator_formula(),
            "rhs": rf(&d.rhs),
            "reduced_rhs": rf(&red),
            "verified": true,
        }));
    }
    rep.set("subextensions", Value::Array(items));
    let mut traces = Vec::new();
    if let Some(ts) = labeled_traces(&spec)? {
        for t in &ts {
            let red = reduce_degree_p(&t.rhs)?;
            rep.line(format!("{} (mu = {}): {}^p - {} = {}", t.label, t.mu, t.label, t.label, red));
            traces.push(json!({
                "label": t.label,
                "mu": el(&t.mu),
                "rhs": rf(&t.rhs),
                "reduced_rhs": rf(&red),
                "hyperplane": functional(&t.hyperplane),
            }));
        }
    }
    rep.set("trace_generators", Value::Array(traces));
    Ok(rep)
}

fn behavior_str(b: &SubextBehavior) -> &'static str {
    match b {
        SubextBehavior::Split => "split",
        SubextBehavior::Inert => "inert",
        SubextBehavior::Ramified => "ramified",
    }
}

pub fn split(a: &SpecArgs, place: &str, oracle: bool) -> CliResult<Report> {
    let (k, spec) = load_spec(a)?;
    let place = parse_place(&k, place)?;
    let sr = place_splitting(&spec, &place)?;
    let (_, reduced) = reduce_global(&spec)?;
    let dt = decomposition_type(&reduced, &place)?;
    let mut rep = Report::new("split");
    rep.set("place", place_str(&place));
    let verdict = match &sr.verdict {
        SplitVerdict::FullySplit => "split".to_string(),
        SplitVerdict::Inert(d) => {
            rep.set("inertia_degree", *d);
            "inert".to_string()
        }
        SplitVerdict::Ramified(r) => {
            rep.set("ramification", ramified_json(r, spec.degree()));
            "ramified".to_string()
        }
    };
    rep.line(format!("place {}: {verdict}", place_str(&place)));
    rep.line(format!("e={} f={} g={}", dt.e, dt.f, dt.g));
    rep.set("verdict", verdict.clone());
    rep.set("value", sr.value.as_ref().map(el));
    rep.set("e", dt.e);
    rep.set("f", dt.f);
    rep.set("g", dt.g);
    rep.set(
        "behaviors",
        Value::Array(
            dt.behaviors.iter().map(|(h, b)| json!({"hyperplane": functional(h), "behavior": behavior_str(b)})).collect(),
        ),
    );
    rep.set("decomposition_generators", json!(dt.decomposition_generators));
    rep.set("inertia_generators", json!(dt.inertia_generators));
    if let Some(ts) = labeled_traces(&reduced)? {
        let p = k.p();
        let dtag = field_tags(&dt.decomposition_generators, &ts, p);
        let itag = field_tags(&dt.inertia_generators, &ts, p);
        rep.line(format!("decomposition field: {}", tag_text(&dtag)));
        rep.line(format!("inertia field: {}", tag_text(&itag)));
        for t in &ts {
            let b = dt.behaviors.iter().find(|(h, _)| *h == t.hyperplane).map(|(_, b)| behavior_str(b));
            rep.line(format!("  {} (mu = {}): {}", t.label, t.mu, b.unwrap_or("?")));
        }
        rep.set("decomposition_field", json!(dtag));
        rep.set("inertia_field", json!(itag));
        rep.set(
            "trace_behaviors",
            Value::Array(
                ts.iter()
                    .map(|t| {
                        let b = dt.behaviors.iter().find(|(h, _)| *h == t.hyperplane).map(|(_, b)| behavior_str(b));
                        json!({"label": t.label, "mu": el(&t.mu), "behavior": b})
                    })
                    .collect(),
            ),
        );
    }
    let warnings: Vec<Value> = sr
        .warnings
        .iter()
        .map(|w| match w {
            SplitWarning::SplitButOutsideImage { value } => json!({"kind": "split_but_outside_image", "value": el(value)}),
            SplitWarning::InertButInsideImage { value } => json!({"kind": "inert_but_inside_image", "value": el(value)}),
        })
        .collect();
    if !warnings.is_empty() {
        rep.line(format!("warning: hyperplane test and image test disagree ({} case)", warnings.len()));
        rep.disagreement = true;
    }
    rep.set("warnings", Value::Array(warnings));
    if oracle {
        let (o, agree) = oracle_check(&reduced, &place, &sr.verdict)?;
        if let Some(count) = o {
            rep.line(format!("oracle: {count} roots, {}", if agree { "agrees" } else { "DISAGREES" }));
        } else {
            rep.line("oracle: not applicable at a ramified place");
        }
        rep.set("oracle_roots", o);
        rep.set("oracle_agrees", agree);
        if !agree {
            rep.disagreement = true;
        }
    }
    Ok(rep)
}

/// Root count of `f(X) = u` in the residue field against the verdict.
pub fn oracle_check(reduced: &ExtensionSpec, place: &Place, verdict: &SplitVerdict) -> CliResult<(Option<usize>, bool)> {
    if matches!(verdict, SplitVerdict::Ramified(_)) {
        return Ok((None, true));
    }
    let count = splitting_oracle(reduced, place)?;
    let agree = match verdict {
        SplitVerdict::FullySplit => count as u64 == reduced.degree(),
        SplitVerdict::Inert(_) => count == 0,
        SplitVerdict::Ramified(_) => true,
    };
    Ok((Some(count), agree))
}

pub fn relate(a: &SpecArgs, power: Option<u32>, subext: bool, linear: Option<&str>, shift: &str) -> CliResult<Report> {
    let (k, spec) = load_spec(a)?;
    spec.require_irreducible()?;
    let qa = QuotientAlgebra::new(&spec);
    let mut rep = Report::new("relate");
    if let Some(lin) = linear {
        let coeffs: Vec<FFElem> = split_list(lin).iter().map(|s| parse_element(&k, s)).collect::<Result<_, _>>()?;
        let d = parse_ratfunc(&k, shift)?;
        let w = relate_by_linear_map(&qa, &coeffs, &d)?;
        rep.line(format!("f(l(y) + D) = {w}"));
        rep.set("mode", "linear");
        rep.set("a", elems(&coeffs));
        rep.set("d", rf(&d));
        rep.set("rhs", rf(&w));
        return Ok(rep);
    }
    if subext {
        let descs = subextensions_in(&qa)?;
        let mut items = Vec::new();
        for d in &descs {
            let z = d.generator_element(&qa);
            let rel = generator_relation(&qa, &z, &d.hyperplane.basis)?;
            let reproduces = rel.rebuild(&qa) == z;
            let nonsingular = !rel.moore_det.is_zero();
            if !reproduces || !nonsingular {
                rep.disagreement = true;
            }
            rep.line(format!(
                "H {:?}: z = {} = l(y) + ({}), Moore det {}, {}",
                d.hyperplane.functional,
                d.generator_formula(),
                rel.d,
                rel.moore_det,
                if reproduces { "reproduced" } else { "NOT reproduced" }
            ));
            items.push(json!({
                "hyperplane": functional(&d.hyperplane.functional),
                "a": elems(&rel.a),
                "d": rf(&rel.d),
                "gammas": elems(&rel.gammas),
                "moore_det": el(&rel.moore_det),
                "kernel": elems(&rel.kernel),
                "f_v": rel.fv.to_string(),
                "w": rf(&rel.w),
                "reproduces": reproduces,
                "nonsingular": nonsingular,
            }));
        }
        rep.set("mode", "subext");
        rep.set("relations", Value::Array(items));
        return Ok(rep);
    }
    let j = power.unwrap_or(1);
    let pnf = power_normal_form(&qa, j)?;
    let new_spec = spec.with_u(pnf.u_prime.clone())?;
    let rr = ramification_report(&new_spec)?;
    let q = spec.degree();
    rep.line(format!("y^(p^{j}) normal form: u' = {}", pnf.u_prime));
    log_lines(&mut rep, &pnf.log);
    rep.line(format!("z = {} + ({})", linear_text(&pnf.relation.a, k.p()), pnf.relation.d));
    for r in rr.ramified_places() {
        rep.line(ramified_text(r, q));
    }
    rep.set("mode", "power");
    rep.set("j", j);
    rep.set("u_prime", rf(&pnf.u_prime));
    rep.set("shifts", log_json(&pnf.log));
    rep.set("a", elems(&pnf.relation.a));
    rep.set("d", rf(&pnf.relation.d));
    rep.set("ramified", Value::Array(rr.ramified_places().map(|r| ramified_json(r, q)).collect()));
    Ok(rep)
}

/// `A_0*y + A_1*y^p + ...`, zero terms dropped.
pub fn linear_text(a: &[FFElem], p: u32) -> String {
    let parts: Vec<String> = a
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, c)| {
            let mono = if j == 0 { "y".to_string() } else { format!("y^{}", (p as u64).pow(j as u32)) };
            if c.is_one() {
                mono
            } else {
                format!("({c})*{mono}")
            }
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

pub fn combine(field: &str, f: &str, gammas: &str, mu: &str) -> CliResult<Report> {
    let k = parse_field(field)?;
    let f = parse_additive(&k, f)?;
    let gs: Vec<RatFunc> = split_list(gammas).iter().map(|s| parse_ratfunc(&k, s)).collect::<Result<_, _>>()?;
    let ms: Vec<FFElem> = split_list(mu).iter().map(|s| parse_element(&k, s)).collect::<Result<_, _>>()?;
    let c = combine_generators(&f, &gs, &ms)?;
    let spec = &c.spec;
    let q = spec.degree();
    let rr = ramification_report(spec)?;
    let (_, reduced) = reduce_global(spec)?;
    let dt = decomposition_type(&reduced, &Place::Infinity)?;
    let v_inf = spec.u().valuation(&Place::Infinity);
    let mut rep = Report::new("combine");
    rep.line(format!("u = {}", spec.u()));
    rep.line(format!("v_inf(u) = {}", v_inf.map_or("inf".to_string(), |v| v.to_string())));
    match &rr.infinity {
        Some(r) => rep.line(ramified_text(r, q)),
        None => rep.line("inf: unramified"),
    }
    rep.line(format!("inf from subextensions: e={} f={} g={}", dt.e, dt.f, dt.g));
    rep.set("u", rf(spec.u()));
    rep.set("h", Value::Array(c.h.iter().map(rf).collect()));
    rep.set("v_inf", v_inf);
    rep.set("infinity", rr.infinity.as_ref().map(|r| ramified_json(r, q)));
    rep.set("ramified", Value::Array(rr.ramified_places().map(|r| ramified_json(r, q)).collect()));
    rep.set("infinity_type", json!({"e": dt.e, "f": dt.f, "g": dt.g}));
    Ok(rep)
}
