//! `aspw verify ...`: exhaustive oracles and sampled identity checks.

use aspw_core::asext::{place_splitting, ramification_report, reduce_global, ExtensionSpec, SplitVerdict};
use aspw_core::oracle::{
    random_spec, rng, verify_eq_star, verify_lemma_62, verify_witt_integers, witt_axiom_sampler, OracleReport,
    WittSampleRing,
};
use aspw_core::upoly::is_irreducible;
use aspw_core::{FieldCtx, Place, Poly};
use clap::Subcommand;
use serde_json::{json, Value};

use crate::ext::oracle_check;
use crate::parse::{parse_additive, parse_field};
use crate::report::{oracle_json, oracle_text, place_str, rf, Report};
use crate::CliResult;

#[derive(Subcommand, Debug)]
pub enum VerifyCommand {
    /// `mu S in wp(F_(q^m))` for all `mu` in F_q iff `S = l^q - l`.
    Lemma62 {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: u32,
    },
    /// Image of f against the intersection of the images of wp_(a_i).
    Eqstar {
        #[arg(long)]
        field: String,
        #[arg(long)]
        f: String,
    },
    /// Witt ring axioms, Frobenius distribution and wp additivity.
    Axioms {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        m: usize,
        /// Coefficients in F_(p^s).
        #[arg(long, default_value_t = 1)]
        s: u32,
        /// Use F_(p^s)(T) with this numerator/denominator degree bound.
        #[arg(long)]
        deg: Option<usize>,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Check W_m(F_p) against Z/p^m instead.
        #[arg(long)]
        integers: bool,
    },
    /// place_splitting against root counting on random specs.
    Oracle {
        #[arg(long)]
        field: String,
        /// p-degree of the random additive polynomials.
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// Number of random specs.
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Degree bound of the random right-hand sides.
        #[arg(long, default_value_t = 3)]
        deg: usize,
        /// Check every place of degree at most this (plus infinity).
        #[arg(long, default_value_t = 1)]
        max_place_degree: usize,
    },
}

fn from_oracle(name: &str, r: &OracleReport) -> Report {
    let mut rep = Report::new(name);
    rep.line(oracle_text(r));
    rep.json = oracle_json(r);
    rep.disagreement = !r.verdict;
    rep
}

/// Monic irreducible polynomials of degree `1..=d`, in enumeration order.
pub fn places_up_to(k: &FieldCtx, d: usize) -> Vec<Place> {
    let q = k.size() as u64;
    let mut out = Vec::new();
    for deg in 1..=d {
        for idx in 0..q.pow(deg as u32) {
            let mut c = Vec::with_capacity(deg + 1);
            let mut t = idx;
            for _ in 0..deg {
                c.push(k.code_at((t % q) as u32));
                t /= q;
            }
            c.push(1);
            let pl = Poly::from_codes(k, c);
            if is_irreducible(&pl) {
                out.push(Place::Finite(pl));
            }
        }
    }
    out.push(Place::Infinity);
    out
}

#[derive(Debug, Default, Clone)]
struct Tally {
    checked: usize,
    split: usize,
    inert: usize,
    skipped_ramified: usize,
    warnings: usize,
    disagreements: Vec<Value>,
}

fn check_spec(spec: &ExtensionSpec, places: &[Place], index: usize) -> CliResult<Tally> {
    let mut t = Tally::default();
    let rr = ramification_report(spec)?;
    let (_, reduced) = reduce_global(spec)?;
    for pl in places {
        if rr.at(pl).is_some() {
            t.skipped_ramified += 1;
            continue;
        }
        let sr = place_splitting(spec, pl)?;
        t.warnings += sr.warnings.len();
        let (count, agree) = oracle_check(&reduced, pl, &sr.verdict)?;
        t.checked += 1;
        match sr.verdict {
            SplitVerdict::FullySplit => t.split += 1,
            SplitVerdict::Inert(_) => t.inert += 1,
            SplitVerdict::Ramified(_) => {}
        }
        if !agree {
            t.disagreements.push(json!({
                "spec": index,
                "f": spec.f().to_string(),
                "u": rf(spec.u()),
                "place": place_str(pl),
                "roots": count,
            }));
        }
    }
    Ok(t)
}

fn oracle_sweep(field: &str, n: usize, count: usize, seed: u64, deg: usize, dmax: usize, jobs: usize) -> CliResult<Report> {
    let k = parse_field(field)?;
    let mut r = rng(seed);
    let specs: Vec<ExtensionSpec> = (0..count).map(|_| random_spec(&mut r, &k, n, deg)).collect();
    let places = places_up_to(&k, dmax);
    let chunk = specs.len().div_ceil(jobs).max(1);
    let results: Vec<CliResult<Tally>> = std::thread::scope(|s| {
        let handles: Vec<_> = specs
            .chunks(chunk)
            .enumerate()
            .map(|(ci, part)| {
                let places = &places;
                s.spawn(move || {
                    let mut acc = Tally::default();
                    for (i, spec) in part.iter().enumerate() {
                        let t = check_spec(spec, places, ci * chunk + i)?;
                        acc.checked += t.checked;
                        acc.split += t.split;
                        acc.inert += t.inert;
                        acc.skipped_ramified += t.skipped_ramified;
                        acc.warnings += t.warnings;
                        acc.disagreements.extend(t.disagreements);
                    }
                    Ok(acc)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut total = Tally::default();
    for r in results {
        let t = r?;
        total.checked += t.checked;
        total.split += t.split;
        total.inert += t.inert;
        total.skipped_ramified += t.skipped_ramified;
        total.warnings += t.warnings;
        total.disagreements.extend(t.disagreements);
    }
    let mut rep = Report::new("verify oracle");
    rep.line(format!(
        "{} specs, {} places each: {} checked ({} split, {} inert), {} ramified skipped, {} disagreements, {} warnings",
        count,
        places.len(),
        total.checked,
        total.split,
        total.inert,
        total.skipped_ramified,
        total.disagreements.len(),
        total.warnings
    ));
    for d in &total.disagreements {
        rep.line(format!("  disagreement: {d}"));
    }
    rep.disagreement = !total.disagreements.is_empty() || total.warnings > 0;
    rep.set("field", k.to_string());
    rep.set("n", n);
    rep.set("count", count);
    rep.set("seed", seed);
    rep.set("deg", deg);
    rep.set("max_place_degree", dmax);
    rep.set("places_per_spec", places.len());
    rep.set("checked", total.checked);
    rep.set("split", total.split);
    rep.set("inert", total.inert);
    rep.set("skipped_ramified", total.skipped_ramified);
    rep.set("warnings", total.warnings);
    rep.set("disagreements", Value::Array(total.disagreements));
    Ok(rep)
}

pub fn run(cmd: &VerifyCommand, jobs: usize) -> CliResult<Report> {
    match cmd {
        VerifyCommand::Lemma62 { q, m } => Ok(from_oracle("verify lemma62", &verify_lemma_62(*q, *m)?)),
        VerifyCommand::Eqstar { field, f } => {
            let k = parse_field(field)?;
            let f = parse_additive(&k, f)?;
            Ok(from_oracle("verify eqstar", &verify_eq_star(&f)?))
        }
        VerifyCommand::Axioms { p, m, s, deg, samples, seed, integers } => {
            let r = if *integers {
                verify_witt_integers(*p, *m)?
            } else {
                let ring = match deg {
                    Some(d) => WittSampleRing::RationalFunctions { s: *s, deg: *d },
                    None => WittSampleRing::Finite { s: *s },
                };
                witt_axiom_sampler(*p, *m, ring, *samples, *seed)?
            };
            Ok(from_oracle("verify axioms", &r))
        }
        VerifyCommand::Oracle { field, n, count, seed, deg, max_place_degree } => {
            oracle_sweep(field, *n, *count, *seed, *deg, *max_place_degree, jobs)
        }
    }
}
