use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::sample::{random_elem, random_ratfunc, rng};
use super::{Mode, OracleReport};
use crate::algebra::Ring;
use crate::gf::make_field;
use crate::upoly::RatFunc;
use crate::witt::{all_vectors, build_tables, WittTables, WittVector};
use crate::Result;

/// Coefficient ring for the Witt axiom checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WittSampleRing {
    /// `F_(p^s)`.
    Finite { s: u32 },
    /// `F_(p^s)(T)` with numerator and denominator degree at most `deg`.
    RationalFunctions { s: u32, deg: usize },
}

/// Largest number of triples checked exhaustively.
const EXHAUSTIVE_TRIPLES: u64 = 1 << 15;

fn check_triple<R: Ring>(x: &WittVector<R>, y: &WittVector<R>, z: &WittVector<R>) -> Option<&'static str> {
    let t = x.tables();
    let zero = WittVector::zero(t, &x.comps()[0]);
    let one = WittVector::one(t, &x.comps()[0]);
    let add = |a: &WittVector<R>, b: &WittVector<R>| a.add(b).unwrap();
    let sub = |a: &WittVector<R>, b: &WittVector<R>| a.sub(b).unwrap();
    let mul = |a: &WittVector<R>, b: &WittVector<R>| a.mul(b).unwrap();
    if add(&add(x, y), z) != add(x, &add(y, z)) {
        return Some("additive associativity");
    }
    if add(x, y) != add(y, x) {
        return Some("additive commutativity");
    }
    if add(x, &zero) != *x {
        return Some("additive identity");
    }
    if !sub(x, x).is_zero() || add(&sub(x, y), y) != *x {
        return Some("subtraction");
    }
    if mul(&mul(x, y), z) != mul(x, &mul(y, z)) {
        return Some("multiplicative associativity");
    }
    if mul(x, y) != mul(y, x) {
        return Some("multiplicative commutativity");
    }
    if mul(x, &one) != *x {
        return Some("multiplicative identity");
    }
    if mul(x, &add(y, z)) != add(&mul(x, y), &mul(x, z)) {
        return Some("distributivity");
    }
    let (fx, fy) = (x.frobenius(), y.frobenius());
    if add(x, y).frobenius() != add(&fx, &fy)
        || sub(x, y).frobenius() != sub(&fx, &fy)
        || mul(x, y).frobenius() != mul(&fx, &fy)
    {
        return Some("frobenius distribution");
    }
    if add(x, y).wp() != add(&x.wp(), &y.wp()) {
        return Some("wp additivity");
    }
    None
}

/// Ring axioms, Frobenius distribution and additivity of `wp` on `W_m`.
pub fn witt_axiom_sampler(p: u32, m: usize, ring: WittSampleRing, samples: usize, seed: u64) -> Result<OracleReport> {
    let tables = Arc::new(build_tables(p, m)?);
    let mut params = alloc::vec![(String::from("p"), p.to_string()), (String::from("m"), m.to_string())];
    let (mode, failure) = match ring {
        WittSampleRing::Finite { s } => {
            let ctx = make_field(p, s, None)?;
            params.push((String::from("ring"), format!("F_{}", ctx.size())));
            let all = all_vectors(&tables, &ctx);
            let n = all.len() as u64;
            if n.pow(3) <= EXHAUSTIVE_TRIPLES {
                let mut fail = None;
                'outer: for x in &all {
                    for y in &all {
                        for z in &all {
                            if let Some(w) = check_triple(x, y, z) {
                                fail = Some(format!("{w} at {x} {y} {z}"));
                                break 'outer;
                            }
                        }
                    }
                }
                (Mode::Exhaustive, fail)
            } else {
                let mut r = rng(seed);
                let mut pick = || {
                    let c = (0..m).map(|_| random_elem(&mut r, &ctx)).collect();
                    WittVector::new(&tables, c).unwrap()
                };
                let mut fail = None;
                for _ in 0..samples {
                    let (x, y, z) = (pick(), pick(), pick());
                    if let Some(w) = check_triple(&x, &y, &z) {
                        fail = Some(format!("{w} at {x} {y} {z}"));
                        break;
                    }
                }
                (Mode::Sampled, fail)
            }
        }
        WittSampleRing::RationalFunctions { s, deg } => {
            let ctx = make_field(p, s, None)?;
            params.push((String::from("ring"), format!("F_{}(T)", ctx.size())));
            params.push((String::from("deg"), deg.to_string()));
            let mut r = rng(seed);
            let mut pick = || -> WittVector<RatFunc> {
                let c = (0..m).map(|_| random_ratfunc(&mut r, &ctx, deg)).collect();
                WittVector::new(&tables, c).unwrap()
            };
            let mut fail = None;
            for _ in 0..samples {
                let (x, y, z) = (pick(), pick(), pick());
                if let Some(w) = check_triple(&x, &y, &z) {
                    fail = Some(format!("{w} at {x} {y} {z}"));
                    break;
                }
            }
            (Mode::Sampled, fail)
        }
    };
    params.push((String::from("samples"), samples.to_string()));
    Ok(OracleReport {
        claim: String::from("witt-axioms"),
        parameters: params,
        mode,
        seed: (mode == Mode::Sampled).then_some(seed),
        verdict: failure.is_none(),
        witness: failure,
    })
}

/// `t -> t * 1` is a ring isomorphism `Z/p^m -> W_m(F_p)`.
pub fn verify_witt_integers(p: u32, m: usize) -> Result<OracleReport> {
    let tables: Arc<WittTables> = Arc::new(build_tables(p, m)?);
    let k = make_field(p, 1, None)?;
    let pm = (p as u64).pow(m as u32);
    let mut images = Vec::with_capacity(pm as usize);
    let mut acc = WittVector::zero(&tables, &k.one());
    let one = WittVector::one(&tables, &k.one());
    for _ in 0..pm {
        images.push(acc.clone());
        acc = acc.add(&one)?;
    }
    let mut witness = None;
    if !acc.is_zero() {
        witness = Some(format!("{pm} * 1 = {acc}"));
    }
    let distinct: BTreeSet<Vec<u32>> = images.iter().map(|v| v.comps().iter().map(|c| c.code()).collect()).collect();
    if witness.is_none() && distinct.len() as u64 != pm {
        witness = Some(String::from("map is not injective"));
    }
    'outer: for s in 0..pm {
        for t in 0..pm {
            if witness.is_some() {
                break 'outer;
            }
            let (a, b) = (&images[s as usize], &images[t as usize]);
            if a.add(b)? != images[((s + t) % pm) as usize] {
                witness = Some(format!("sum {s} + {t}"));
            } else if a.mul(b)? != images[((s * t) % pm) as usize] {
                witness = Some(format!("product {s} * {t}"));
            }
        }
    }
    Ok(OracleReport {
        claim: String::from("witt-integers"),
        parameters: alloc::vec![(String::from("p"), p.to_string()), (String::from("m"), m.to_string())],
        mode: Mode::Exhaustive,
        seed: None,
        verdict: witness.is_none(),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_small_rings() {
        for p in [2, 3] {
            let r = witt_axiom_sampler(p, 2, WittSampleRing::Finite { s: 1 }, 0, 0).unwrap();
            assert!(r.verdict, "{r:?}");
            assert_eq!(r.mode, Mode::Exhaustive);
        }
        assert!(verify_witt_integers(2, 3).unwrap().verdict);
    }
}
