use std::sync::Arc;

use aspw_core::addpoly::AdditivePoly;
use aspw_core::asext::{reduce_global, ExtensionSpec};
use aspw_core::gf::make_field;
use aspw_core::oracle::{random_ratfunc, rng};
use aspw_core::witt::{
    build_tables, count_cyclic_subextensions, cyclic_subextension, witt_generator_relation, witt_infinity_splitting,
    witt_power_normal_form, witt_reduce, WittExtensionSpec, WittK, WittVector,
};
use aspw_core::{Error, FieldCtx, RatFunc};

fn random_vec(r: &mut aspw_core::oracle::SampleRng, t: &Arc<aspw_core::witt::WittTables>, k: &FieldCtx, deg: usize) -> WittK {
    let c = (0..t.length()).map(|_| random_ratfunc(r, k, deg)).collect();
    WittVector::new(t, c).unwrap()
}

#[test]
fn subextension_count_over_w2_f9() {
    let t = Arc::new(build_tables(3, 2).unwrap());
    let k = make_field(3, 2, None).unwrap();
    assert_eq!(count_cyclic_subextensions(&t, &k), (81 - 9) / (9 - 3));
}

#[test]
fn length_one_matches_scalar_reduction() {
    let t = Arc::new(build_tables(3, 1).unwrap());
    let k = make_field(3, 2, None).unwrap();
    let mut r = rng(11);
    for _ in 0..20 {
        let u = random_ratfunc(&mut r, &k, 4).add(&RatFunc::t(&k).powi(6).unwrap());
        let spec = ExtensionSpec::new(AdditivePoly::x_q_minus_x(&k, 1), u.clone()).unwrap();
        if !spec.is_irreducible() {
            continue;
        }
        let (_, scalar) = reduce_global(&spec).unwrap();
        let w = WittExtensionSpec::new(1, WittVector::new(&t, vec![u]).unwrap()).unwrap();
        let (_, reduced) = witt_reduce(&w).unwrap();
        assert_eq!(reduced.alpha().comps()[0], *scalar.u());
        assert!(reduced.is_reduced());
    }
}

#[test]
fn images_of_wp_q_reduce_to_zero() {
    let t = Arc::new(build_tables(2, 2).unwrap());
    let k = make_field(2, 2, None).unwrap();
    let mut r = rng(5);
    for n in [1, 2] {
        for _ in 0..10 {
            let theta = random_vec(&mut r, &t, &k, 2);
            let alpha = theta.wp_q(n);
            let spec = WittExtensionSpec::new(n, alpha.clone()).unwrap();
            let (log, reduced) = witt_reduce(&spec).unwrap();
            assert!(reduced.alpha().is_zero(), "{}", reduced.alpha());
            assert!(log.replay(&alpha, n).is_zero());
        }
    }
}

#[test]
fn monomial_first_component() {
    for p in [2u32, 3] {
        let t = Arc::new(build_tables(p, 2).unwrap());
        let k = make_field(p, 2, None).unwrap();
        let tt = RatFunc::t(&k);
        let lambda = 1i64;
        let alpha = WittVector::teichmuller(&t, &tt.powi(lambda * p as i64).unwrap());
        // q = p: one shift brings the exponent down to lambda
        let (_, red) = witt_reduce(&WittExtensionSpec::new(1, alpha.clone()).unwrap()).unwrap();
        assert_eq!(red.alpha().comps()[0], tt.powi(lambda).unwrap());
        // q = p^2: degree lambda p is already reduced for shifts
        let spec2 = WittExtensionSpec::new(2, alpha.clone()).unwrap();
        let (log, red2) = witt_reduce(&spec2).unwrap();
        assert!(log.shifts.is_empty());
        assert_eq!(red2.alpha(), &alpha);
        // the generator y^p brings it down to lambda
        let (_, nf) = witt_power_normal_form(&spec2, 1).unwrap();
        assert_eq!(nf.alpha().comps()[0], tt.powi(lambda).unwrap());
    }
}

#[test]
fn cyclic_generator_identity() {
    let t = Arc::new(build_tables(3, 2).unwrap());
    let k = make_field(3, 2, None).unwrap();
    let mut r = rng(3);
    let xi = WittVector::new(&t, vec![k.gen(), k.one()]).unwrap();
    for _ in 0..5 {
        let y = random_vec(&mut r, &t, &k, 2);
        let alpha = y.wp_q(2);
        let c = cyclic_subextension(&xi, &alpha, 2).unwrap();
        assert!(c.full_degree);
        assert_eq!(c.generator_value(&y).wp(), c.rhs);
    }
    let zero_first = WittVector::new(&t, vec![k.zero(), k.one()]).unwrap();
    let one = WittVector::one(&t, &RatFunc::one(&k));
    assert!(!cyclic_subextension(&zero_first, &one, 2).unwrap().full_degree);
    let unit = WittVector::one(&t, &k.one());
    assert_eq!(cyclic_subextension(&unit, &one, 2).unwrap().rhs, one);
}

#[test]
fn generator_relation_identity() {
    let t = Arc::new(build_tables(2, 2).unwrap());
    let k = make_field(2, 2, None).unwrap();
    let w = k.gen();
    let mu = vec![WittVector::one(&t, &k.one()), WittVector::teichmuller(&t, &w)];
    let xi = vec![
        WittVector::new(&t, vec![w.clone(), k.one()]).unwrap(),
        WittVector::new(&t, vec![k.one(), w.clone()]).unwrap(),
    ];
    let mut r = rng(9);
    for _ in 0..5 {
        let y = random_vec(&mut r, &t, &k, 2);
        let d0 = random_vec(&mut r, &t, &k, 2);
        let alpha = y.wp_q(2);
        // z = R(y) + D0 computed directly, beta = wp_q(z)
        let a = aspw_core::witt::solve_witt(&aspw_core::witt::witt_moore_matrix(&mu), &xi).unwrap();
        let mut z = WittVector::zero(&t, &RatFunc::zero(&k));
        for (i, ai) in a.iter().enumerate() {
            z = z.add(&ai.map(RatFunc::constant).mul(&y.frobenius_iter(i as u32)).unwrap()).unwrap();
        }
        z = z.add(&d0).unwrap();
        let beta = z.wp_q(2);
        let rel = witt_generator_relation(&alpha, &beta, &mu, &xi).unwrap();
        assert_eq!(rel.apply(&alpha).add(&rel.d.wp_q(2)).unwrap(), beta);
    }
    let alpha = WittVector::one(&t, &RatFunc::t(&k));
    let bad = WittVector::teichmuller(&t, &RatFunc::t(&k).powi(3).unwrap());
    assert!(matches!(witt_generator_relation(&alpha, &bad, &mu, &xi), Err(Error::IdentityFailure(_))));
}

#[test]
fn infinity_types() {
    let p = 3u32;
    let t = Arc::new(build_tables(p, 2).unwrap());
    let k = make_field(p, 1, None).unwrap();
    let z = RatFunc::zero(&k);
    let c = RatFunc::one(&k);
    let h = RatFunc::t(&k).powi(2).unwrap();
    let v = |a: &RatFunc, b: &RatFunc| WittVector::new(&t, vec![a.clone(), b.clone()]).unwrap();
    assert_eq!(witt_infinity_splitting(&v(&z, &z)).unwrap(), (1, 1, 9));
    assert_eq!(witt_infinity_splitting(&v(&c, &z)).unwrap(), (1, 9, 1));
    assert_eq!(witt_infinity_splitting(&v(&h, &z)).unwrap(), (9, 1, 1));
    assert_eq!(witt_infinity_splitting(&v(&z, &h)).unwrap(), (3, 1, 3));
    assert_eq!(witt_infinity_splitting(&v(&c, &h)).unwrap(), (3, 3, 1));
    let bad = RatFunc::t(&k).powi(3).unwrap();
    assert!(matches!(witt_infinity_splitting(&v(&bad, &z)), Err(Error::NotReduced(_))));
}
