use std::sync::Arc;

use proptest::prelude::*;

use aspw_core::addpoly::{subspace_poly, subspace_poly_by_composition, wp};
use aspw_core::asext::{is_reduced, reduce_global, wp_membership, QuotientAlgebra};
use aspw_core::gf::make_field;
use aspw_core::oracle::{random_elem, random_poly, random_ratfunc, random_spec, random_subspace_basis, rng};
use aspw_core::upoly::{factor, partial_fractions};
use aspw_core::witt::{build_tables, WittVector};
use aspw_core::FieldCtx;

fn field(i: usize) -> FieldCtx {
    let (p, s) = [(2, 2), (3, 2), (2, 3), (3, 1), (5, 1)][i % 5];
    make_field(p, s, None).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn frobenius_is_additive_and_multiplicative(seed in any::<u64>(), fi in 0usize..5) {
        let k = field(fi);
        let mut r = rng(seed);
        let (a, b) = (random_elem(&mut r, &k), random_elem(&mut r, &k));
        prop_assert_eq!((&a + &b).frobenius_power(1), &a.frobenius_power(1) + &b.frobenius_power(1));
        prop_assert_eq!((&a * &b).frobenius_power(1), &a.frobenius_power(1) * &b.frobenius_power(1));
        prop_assert_eq!(a.frobenius_power(k.degree() as i64), a);
    }

    #[test]
    fn factorization_multiplies_back(seed in any::<u64>(), fi in 0usize..5, deg in 1usize..9) {
        let k = field(fi);
        let mut r = rng(seed);
        let f = random_poly(&mut r, &k, deg);
        prop_assume!(!f.is_zero());
        let fac = factor(&f).unwrap();
        prop_assert_eq!(fac.product(), f);
        for (g, _) in &fac.factors {
            prop_assert!(aspw_core::upoly::is_irreducible(g));
        }
    }

    #[test]
    fn partial_fractions_recombine(seed in any::<u64>(), fi in 0usize..5) {
        let k = field(fi);
        let mut r = rng(seed);
        let u = random_ratfunc(&mut r, &k, 5);
        prop_assert_eq!(partial_fractions(&u).recombine(), u);
    }

    #[test]
    fn wp_images_are_recognized(seed in any::<u64>(), fi in 0usize..5) {
        let k = field(fi);
        let mut r = rng(seed);
        let d = random_ratfunc(&mut r, &k, 3);
        let w = wp(&d);
        let (ok, wit) = wp_membership(&w);
        prop_assert!(ok);
        let wit = wit.unwrap();
        prop_assert_eq!(wp(&wit), w);
        prop_assert!((&wit - &d).is_constant());
    }

    #[test]
    fn reduction_shape_and_replay(seed in any::<u64>(), fi in 0usize..3) {
        let k = field(fi);
        let mut r = rng(seed);
        let n = 1 + (seed % 2) as usize;
        let spec = random_spec(&mut r, &k, n.min(k.degree() as usize), 4);
        let (log, red) = reduce_global(&spec).unwrap();
        prop_assert!(is_reduced(spec.f(), red.u()));
        prop_assert_eq!(&log.replay(spec.f(), spec.u()), red.u());
    }

    #[test]
    fn subspace_polynomials_agree(seed in any::<u64>(), fi in 0usize..5) {
        let k = field(fi);
        let mut r = rng(seed);
        let n = 1 + (seed as usize % k.degree() as usize);
        let v = random_subspace_basis(&mut r, &k, n);
        prop_assert_eq!(subspace_poly(&k, &v).unwrap(), subspace_poly_by_composition(&k, &v).unwrap());
    }

    #[test]
    fn translations_form_a_group(seed in any::<u64>()) {
        let k = field(0);
        let mut r = rng(seed);
        let spec = random_spec(&mut r, &k, 2, 2);
        let qa = QuotientAlgebra::new(&spec);
        let coeffs = (0..4).map(|_| random_ratfunc(&mut r, &k, 2)).collect();
        let z = qa.element(coeffs).unwrap();
        let g = spec.group().elements();
        let (xi, eta) = (&g[(seed % 4) as usize], &g[((seed / 4) % 4) as usize]);
        let lhs = qa.sigma(xi, &qa.sigma(eta, &z).unwrap()).unwrap();
        prop_assert_eq!(lhs, qa.sigma(&(xi + eta), &z).unwrap());
    }

    #[test]
    fn witt_ring_axioms_over_f4(seed in any::<u64>()) {
        let k = field(0);
        let t = Arc::new(build_tables(2, 3).unwrap());
        let mut r = rng(seed);
        let mut pick = || WittVector::new(&t, (0..3).map(|_| random_elem(&mut r, &k)).collect()).unwrap();
        let (x, y, z) = (pick(), pick(), pick());
        prop_assert_eq!(x.mul(&y.add(&z).unwrap()).unwrap(), x.mul(&y).unwrap().add(&x.mul(&z).unwrap()).unwrap());
        prop_assert_eq!(x.mul(&y).unwrap().mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
        prop_assert_eq!(x.add(&y).unwrap().wp(), x.wp().add(&y.wp()).unwrap());
        prop_assert!(x.sub(&x).unwrap().is_zero());
    }
}
