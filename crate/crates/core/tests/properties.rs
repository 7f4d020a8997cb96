use std::sync::OnceLock;

use proptest::prelude::*;
use qloop_core::catalog;
use qloop_core::enumerate::{enumerate_loops, LoopFilter};
use qloop_core::morphisms::{are_isomorphic, are_isotopic_with, IsotopyStrategy, DEFAULT_BUDGET};
use qloop_core::transforms::{
    apply_isomorphism, apply_isotopism, fg_isotope, left_derivative, parastrophe, right_derivative, translation_image,
};
use qloop_core::{FiniteMagma, IsotopismTriple, Permutation, Side};

fn loops() -> &'static [FiniteMagma] {
    static LOOPS: OnceLock<Vec<FiniteMagma>> = OnceLock::new();
    LOOPS.get_or_init(|| {
        let mut v: Vec<FiniteMagma> = (1..=5).flat_map(|n| enumerate_loops(n, LoopFilter::All).unwrap()).collect();
        v.extend(["theta", "theta_star", "S3", "D4", "Q8", "klein", "Z7"].map(|n| catalog::by_name(n).unwrap()));
        v
    })
}

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Permutation::from_images(&v).unwrap())
}

fn triple(n: usize) -> impl Strategy<Value = IsotopismTriple> {
    (perm(n), perm(n), perm(n)).prop_map(|(a, b, c)| IsotopismTriple::new(a, b, c).unwrap())
}

fn a_loop() -> impl Strategy<Value = FiniteMagma> {
    (0..loops().len()).prop_map(|i| loops()[i].clone())
}

/// A quasigroup: a random isotope of a loop, with two further triples.
fn quasigroup_with_triples() -> impl Strategy<Value = (FiniteMagma, IsotopismTriple, IsotopismTriple)> {
    a_loop().prop_flat_map(|m| {
        let n = m.order();
        (Just(m), triple(n), triple(n), triple(n)).prop_map(|(m, t0, s, t)| (apply_isotopism(&m, &t0).unwrap(), s, t))
    })
}

fn loop_with_element() -> impl Strategy<Value = (FiniteMagma, usize, usize)> {
    a_loop().prop_flat_map(|m| {
        let n = m.order();
        (Just(m), 1..=n, 1..=n)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn isotope_of_composite_is_composite_of_isotopes((m, s, t) in quasigroup_with_triples()) {
        let stepwise = apply_isotopism(&apply_isotopism(&m, &s).unwrap(), &t).unwrap();
        prop_assert_eq!(&stepwise, &apply_isotopism(&m, &s.compose(&t).unwrap()).unwrap());
        prop_assert!(s.compose(&t).unwrap().maps(&m, &stepwise));
    }

    #[test]
    fn inverse_triple_undoes_isotope((m, s, _t) in quasigroup_with_triples()) {
        let there = apply_isotopism(&m, &s).unwrap();
        prop_assert!(there.is_latin());
        prop_assert_eq!(apply_isotopism(&there, &s.invert()).unwrap(), m.clone());
        prop_assert!(s.compose(&s.invert()).unwrap().is_identity());
    }

    #[test]
    fn transpose_is_an_involution((m, _s, _t) in quasigroup_with_triples()) {
        prop_assert_eq!(m.transpose().transpose(), m.clone());
        prop_assert_eq!(parastrophe(&m), m.transpose());
        for x in 1..=m.order() {
            prop_assert_eq!(m.transpose().left_translation(x).unwrap(), m.right_translation(x).unwrap());
        }
    }

    #[test]
    fn division_undoes_multiplication((m, _s, _t) in quasigroup_with_triples()) {
        let n = m.order();
        for a in 1..=n {
            for b in 1..=n {
                prop_assert_eq!(m.product(a, m.left_divide(a, b).unwrap()), b);
                prop_assert_eq!(m.product(m.right_divide(a, b).unwrap(), a), b);
            }
        }
    }

    #[test]
    fn derivatives_satisfy_defining_relations((m, a, _b) in loop_with_element()) {
        let left = left_derivative(&m, a).unwrap();
        let right = right_derivative(&m, a).unwrap();
        prop_assert!(left.is_loop() && right.is_loop());
        let n = m.order();
        for x in 1..=n {
            for y in 1..=n {
                // a·(x∘y) = (a·x)·y and (x∗y)·a = x·(y·a)
                prop_assert_eq!(m.product(a, left.product(x, y)), m.product(m.product(a, x), y));
                prop_assert_eq!(m.product(right.product(x, y), a), m.product(x, m.product(y, a)));
            }
        }
    }

    #[test]
    fn principal_isotope_has_identity_fg((m, f, g) in loop_with_element()) {
        let p = fg_isotope(&m, f, g).unwrap();
        prop_assert!(p.is_loop());
        prop_assert_eq!(p.identity(), Some(m.product(f, g)));
        let n = m.order();
        for x in 1..=n {
            for y in 1..=n {
                prop_assert_eq!(p.product(m.product(x, g), m.product(f, y)), m.product(x, y));
            }
        }
    }

    #[test]
    fn translations_transform_under_isotopism((m, s, _t) in quasigroup_with_triples()) {
        let target = apply_isotopism(&m, &s).unwrap();
        for x in 1..=m.order() {
            for side in [Side::Left, Side::Right] {
                let (lhs, rhs) = translation_image(&m, &target, &s, x, side).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn relabelled_copy_is_isomorphic((m, alpha) in a_loop().prop_flat_map(|m| { let n = m.order(); (Just(m), perm(n)) })) {
        let copy = apply_isomorphism(&m, &alpha).unwrap();
        let r = are_isomorphic(&m, &copy);
        prop_assert!(r.is_related());
        let found = r.isomorphism().unwrap();
        prop_assert!(IsotopismTriple::diagonal(found).maps(&m, &copy));
    }

    #[test]
    fn random_isotope_is_found_by_both_strategies((m, s, _t) in quasigroup_with_triples()) {
        let target = apply_isotopism(&m, &s).unwrap();
        for strategy in [IsotopyStrategy::TripleSearch, IsotopyStrategy::PrincipalIsotopes] {
            let r = are_isotopic_with(&m, &target, DEFAULT_BUDGET, strategy).unwrap();
            prop_assert!(r.is_related());
            prop_assert!(r.isotopism().unwrap().maps(&m, &target));
        }
    }

    #[test]
    fn permutation_algebra(p in perm(7), q in perm(7), r in perm(7)) {
        prop_assert_eq!(p.then(&q).then(&r), p.then(&q.then(&r)));
        prop_assert!(p.then(&p.inverse()).is_identity());
        prop_assert_eq!(p.then(&q).inverse(), q.inverse().then(&p.inverse()));
        prop_assert_eq!(Permutation::from_cycles(7, &p.cycles()).unwrap(), p.clone());
        prop_assert_eq!(p.cycle_type().iter().sum::<usize>(), 7);
    }
}

#[test]
fn derivative_relations_on_every_catalog_table() {
    for name in catalog::names() {
        let m = catalog::by_name(&name).unwrap();
        if !m.is_loop() {
            continue;
        }
        for a in 1..=m.order() {
            let left = left_derivative(&m, a).unwrap();
            let right = right_derivative(&m, a).unwrap();
            for x in 1..=m.order() {
                for y in 1..=m.order() {
                    assert_eq!(m.product(a, left.product(x, y)), m.product(m.product(a, x), y), "{name} a={a}");
                    assert_eq!(m.product(right.product(x, y), a), m.product(x, m.product(y, a)), "{name} a={a}");
                }
            }
        }
    }
}

#[test]
fn construction_triples_transform_translations() {
    let cases =
        [(catalog::theta(), catalog::construction1_triple()), (catalog::theta_star(), catalog::construction2_triple())];
    for (source, t) in cases {
        let target = apply_isotopism(&source, &t).unwrap();
        for x in 1..=6 {
            for side in [Side::Left, Side::Right] {
                let (lhs, rhs) = translation_image(&source, &target, &t, x, side).unwrap();
                assert_eq!(lhs, rhs, "x={x} {side:?}");
            }
        }
    }
    // the defective printed table is not the image
    let printed = catalog::otimes_printed();
    assert!(translation_image(&catalog::theta(), &printed, &catalog::construction1_triple(), 1, Side::Left).is_err());
}
