//! The degree-27 extension of F_27(T) with a single finite pole at T = -1.

use aspw_core::addpoly::AdditivePoly;
use aspw_core::asext::{
    decomposition_type, place_splitting, ramification_report, reduce_global, subextensions, trace_generator,
    wp_membership, ExtensionSpec, SplitVerdict, SubextBehavior,
};
use aspw_core::gf::make_field;
use aspw_core::{FieldCtx, Place, Poly, RatFunc};

fn field() -> FieldCtx {
    make_field(3, 3, Some(&[1, 2, 0, 1])).unwrap()
}

fn inv_pow(k: &FieldCtx, e: i64) -> RatFunc {
    RatFunc::from_poly(Poly::linear(&k.from_int(-1))).powi(-e).unwrap()
}

fn spec(k: &FieldCtx) -> ExtensionSpec {
    let w = k.gen();
    let t = RatFunc::t(k);
    let poly = t.powi(9).unwrap() + t.powi(3).unwrap() + t + RatFunc::constant(&(&w + &k.one()));
    let u = inv_pow(k, 54) + inv_pow(k, 1) + poly;
    ExtensionSpec::new(AdditivePoly::x_q_minus_x(k, 3), u).unwrap()
}

#[test]
fn generator_cubes() {
    let k = field();
    let w = k.gen();
    assert_eq!(w.pow(3), &w + &k.from_int(2));
    assert!(!wp_membership(&RatFunc::constant(&(&w * &w + w.clone()))).0);
}

#[test]
fn reduction_and_ramification() {
    let k = field();
    let s = spec(&k);
    assert!(s.is_irreducible());
    let (_, reduced) = reduce_global(&s).unwrap();
    assert_eq!(reduced.u().to_string(), "1/(T+1)^2 + 1/(T+1) + T^9+T^3+T+w+1");
    let rep = ramification_report(&s).unwrap();
    let p1 = rep.at(&Place::finite(Poly::linear(&k.from_int(-1))).unwrap()).unwrap();
    assert!(p1.exact);
    assert_eq!(p1.e_bound, 27);
    assert!(rep.infinity.is_some());
}

#[test]
fn trace_generators_reduce_to_expected_forms() {
    let k = field();
    let (_, reduced) = reduce_global(&spec(&k)).unwrap();
    let w = k.gen();
    let w2 = &w * &w;
    let expect = [
        "1/(T+1)^2 + 1/(T+1)",
        "w/(T+1)^2 + w/(T+1) + w^2+w",
        "w^2/(T+1)^2 + w^2/(T+1) + 2*T+w^2+w+2",
    ];
    for (mu, e) in [k.one(), w.clone(), w2].iter().zip(expect) {
        let tg = trace_generator(&reduced, mu).unwrap();
        let sub = ExtensionSpec::new(AdditivePoly::wp(&k), tg.rhs.clone()).unwrap();
        let (_, r) = reduce_global(&sub).unwrap();
        assert_eq!(r.u().to_string(), e);
    }
}

#[test]
fn infinity_in_subextensions_and_full_field() {
    let k = field();
    let (_, reduced) = reduce_global(&spec(&k)).unwrap();
    let dt = decomposition_type(&reduced, &Place::Infinity).unwrap();
    assert_eq!((dt.e, dt.f, dt.g), (3, 3, 3));
    let count = |b| dt.behaviors.iter().filter(|(_, x)| *x == b).count();
    assert_eq!(
        (count(SubextBehavior::Ramified), count(SubextBehavior::Inert), count(SubextBehavior::Split)),
        (9, 3, 1)
    );
    let w = k.gen();
    let behavior_of = |mu| {
        let tg = trace_generator(&reduced, &mu).unwrap();
        dt.behaviors[tg.hyperplane].1
    };
    assert_eq!(behavior_of(k.one()), SubextBehavior::Split);
    assert_eq!(behavior_of(w.clone()), SubextBehavior::Inert);
    assert_eq!(behavior_of(&w * &w), SubextBehavior::Ramified);
    assert!(matches!(place_splitting(&reduced, &Place::Infinity).unwrap().verdict, SplitVerdict::Ramified(_)));
}

#[test]
fn all_subextensions_verify() {
    let k = field();
    let subs = subextensions(&spec(&k)).unwrap();
    assert_eq!(subs.len(), 13);
}
