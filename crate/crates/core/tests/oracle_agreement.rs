use aspw_core::addpoly::AdditivePoly;
use aspw_core::asext::{
    generator_relation, place_splitting, reduce_global, subextensions_in, QuotientAlgebra, SplitVerdict,
};
use aspw_core::gf::make_field;
use aspw_core::oracle::{random_spec, rng, splitting_oracle, verify_eq_star};
use aspw_core::{Place, Poly};

#[test]
fn splitting_matches_root_count() {
    let mut r = rng(2024);
    let (mut split, mut inert) = (0, 0);
    for (p, s) in [(2, 2), (3, 2)] {
        let k = make_field(p, s, None).unwrap();
        for i in 0..50 {
            let n = 1 + i % 2;
            let spec = random_spec(&mut r, &k, n, 3);
            let (_, red) = reduce_global(&spec).unwrap();
            let mut places: Vec<Place> = k.elements().map(|c| Place::finite(Poly::linear(&c)).unwrap()).collect();
            places.push(Place::Infinity);
            for pl in places {
                let rep = place_splitting(&red, &pl).unwrap();
                if matches!(rep.verdict, SplitVerdict::Ramified(_)) {
                    continue;
                }
                let count = splitting_oracle(&red, &pl).unwrap();
                let expect = if rep.verdict == SplitVerdict::FullySplit { red.degree() as usize } else { 0 };
                assert_eq!(count, expect, "{pl} in {:?}", red);
                assert!(rep.warnings.is_empty());
                if count == 0 {
                    inert += 1;
                } else {
                    split += 1;
                }
            }
        }
    }
    assert!(split > 50 && inert > 50, "{split} {inert}");
}

#[test]
fn subextension_generators_relate_back() {
    let mut r = rng(77);
    let k = make_field(3, 2, None).unwrap();
    for _ in 0..5 {
        let spec = random_spec(&mut r, &k, 2, 2);
        let qa = QuotientAlgebra::new(&spec);
        for d in subextensions_in(&qa).unwrap() {
            let z = d.generator_element(&qa);
            let rel = generator_relation(&qa, &z, &d.hyperplane.basis).unwrap();
            assert_eq!(rel.rebuild(&qa), z);
            assert!(!rel.moore_det.is_zero());
        }
    }
}

#[test]
fn eq_star_on_non_field_polynomials() {
    let k = make_field(3, 3, None).unwrap();
    let mut r = rng(1);
    for n in 1..=3 {
        let f = aspw_core::oracle::random_additive(&mut r, &k, n);
        let rep = verify_eq_star(&f).unwrap();
        assert!(rep.verdict, "{rep:?}");
    }
    assert!(verify_eq_star(&AdditivePoly::x_q_minus_x(&k, 3)).unwrap().verdict);
}
