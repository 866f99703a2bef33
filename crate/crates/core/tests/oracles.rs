mod common;

use common::*;
use overring_core::semigroup::{AffineSemigroup, Exp, FracIdeal, MonomialIdeal};
use proptest::prelude::*;

#[test]
fn membership_matches_dp() {
    for (name, s) in corpus() {
        let r = radius_for(&s);
        let dp = DpOracle::for_semigroup(&s, r);
        for z in box_points(s.dim(), -r, r) {
            assert_eq!(s.member(&z), dp.member(&z), "{name}: {z}");
            assert_eq!(s.member_by_enumeration(&z), dp.member(&z), "{name}: {z}");
        }
    }
}

#[test]
fn colon_by_element_matches_brute_force() {
    for (name, s) in corpus() {
        let r = radius_for(&s);
        let dp = DpOracle::for_semigroup(&s, 6 * r);
        let d = [s.zero()];
        for z in s.box_points(r) {
            let c = s.colon_d(z).unwrap();
            assert!(c.completeness.is_certified(), "{name}: {z}");
            let gens = c.value.generators();
            for g in gens {
                assert!(dp.member(g) && dp.member(&(*g + z)), "{name}: {z} -> {g}");
                for h in gens {
                    assert!(g == h || !dp.member(&(*g - *h)), "{name}: {g} ∈ {h} + S");
                }
            }
            let expected = colon_set(&dp, s.dim(), &d, z, r);
            let got: std::collections::BTreeSet<Exp> = generated(&dp, s.dim(), gens, 0, r);
            assert_eq!(got, expected, "{name}: (D:_D {z})");
        }
    }
}

#[test]
fn colon_of_ideals_matches_brute_force() {
    for (name, s) in corpus() {
        let r = radius_for(&s) / 2;
        let dp = DpOracle::for_semigroup(&s, 12 * r);
        for ideal in sample_ideals(&s) {
            for z in s.box_points(r) {
                let c = s.colon_by_element(&ideal, z).unwrap();
                assert!(c.completeness.is_certified());
                let expected = colon_set(&dp, s.dim(), ideal.generators(), z, 2 * r);
                let got = generated(&dp, s.dim(), c.value.generators(), 0, 2 * r);
                assert_eq!(got, expected, "{name}: ({:?} :_D {z})", ideal.generators());
            }
        }
    }
}

#[test]
fn fractional_colon_matches_brute_force() {
    for (name, s) in corpus() {
        let r = radius_for(&s);
        let dp = DpOracle::for_semigroup(&s, 6 * r);
        for j in sample_fractional(&s) {
            let c = s.colon_fractional(&j).unwrap();
            assert!(c.completeness.is_certified());
            let expected = fractional_colon_set(&dp, s.dim(), j.generators(), r);
            let got = generated(&dp, s.dim(), c.value.generators(), -r, r);
            assert_eq!(got, expected, "{name}: (D : {:?})", j.generators());
        }
    }
}

#[test]
fn intersections_match_brute_force() {
    for (name, s) in corpus() {
        let r = radius_for(&s);
        let dp = DpOracle::for_semigroup(&s, 6 * r);
        let ideals = sample_fractional(&s);
        for a in &ideals {
            for b in &ideals {
                let c = s.intersect(a, b).unwrap();
                let got = generated(&dp, s.dim(), c.value.generators(), -r, r);
                let ga = generated(&dp, s.dim(), a.generators(), -r, r);
                let gb = generated(&dp, s.dim(), b.generators(), -r, r);
                let expected: std::collections::BTreeSet<Exp> = ga.intersection(&gb).copied().collect();
                assert_eq!(got, expected, "{name}: {:?} ∩ {:?}", a.generators(), b.generators());
            }
        }
    }
}

#[test]
fn radical_class_matches_definition() {
    for (name, s) in corpus() {
        let r = radius_for(&s) / 2;
        let kmax = 4 * r;
        let dp = DpOracle::for_semigroup(&s, kmax * r);
        let mut ideals = sample_ideals(&s);
        for z in s.box_points(r) {
            ideals.push(s.colon_d(z).unwrap().value);
        }
        ideals.sort();
        ideals.dedup();
        for i in &ideals {
            let class = s.radical_class(i);
            assert_eq!(
                radical_from_class(&s, &dp, &class, r),
                radical_set(&dp, s.dim(), i.generators(), r, kmax),
                "{name}: rad{:?}",
                i.generators()
            );
        }
    }
}

#[test]
fn radical_class_laws() {
    for (name, s) in corpus() {
        let ideals = sample_ideals(&s);
        for i in &ideals {
            // the class determines the radical, which is an intersection of
            // the primes of the class
            let class = s.radical_class(i);
            let minimal = s.minimal_primes(i);
            assert!(minimal.iter().all(|f| class.contains(f)), "{name}");
            for j in &ideals {
                let meet = s.intersect(i, j).unwrap().value;
                let meet = MonomialIdeal::from_frac(&s, meet).unwrap();
                let mut union: Vec<_> = class.clone();
                union.extend(s.radical_class(j));
                union.sort();
                union.dedup();
                let mut got = s.radical_class(&meet);
                got.sort();
                assert_eq!(got, union, "{name}: {:?} ∩ {:?}", i.generators(), j.generators());
            }
        }
    }
}

#[test]
fn v_closure_is_extensive_on_the_box() {
    for (name, s) in corpus() {
        let r = radius_for(&s);
        let dp = DpOracle::for_semigroup(&s, 6 * r);
        for j in sample_fractional(&s) {
            let inner = s.colon_fractional(&j).unwrap().value;
            let outer = s.colon_fractional(&inner).unwrap().value;
            let gj = generated(&dp, s.dim(), j.generators(), -r, r);
            let gv = generated(&dp, s.dim(), outer.generators(), -r, r);
            assert!(gj.is_subset(&gv), "{name}: {:?}", j.generators());
        }
    }
}

#[test]
fn apery_membership_against_enumeration_on_dense_family() {
    let s = AffineSemigroup::planar(&[(3, 1), (1, 3), (2, 2), (5, 0)]).unwrap();
    let dp = DpOracle::for_semigroup(&s, 30);
    for z in box_points(2, -5, 30) {
        assert_eq!(s.member(&z), dp.member(&z), "{z}");
    }
}

fn numerical_gens() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(2i64..14, 2..4).prop_filter("gcd 1", |g| g.iter().fold(0, |a, &b| gcd(a, b)) == 1)
}

fn planar_gens() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((0i64..6, 0i64..6), 1..5).prop_filter("nonzero", |g| g.iter().all(|&(a, b)| a + b > 0))
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn numerical_membership(gens in numerical_gens()) {
        let s = AffineSemigroup::numerical(&gens).unwrap();
        let dp = DpOracle::for_semigroup(&s, 80);
        for t in -5..=80 {
            prop_assert_eq!(s.member(&Exp::d1(t)), dp.member(&Exp::d1(t)));
        }
        prop_assert!(!s.member(&Exp::d1(s.frobenius().unwrap())));
    }

    #[test]
    fn planar_membership(gens in planar_gens()) {
        let s = AffineSemigroup::planar(&gens).unwrap();
        let dp = DpOracle::new(2, &gens.iter().map(|&(a, b)| Exp::d2(a, b)).collect::<Vec<_>>(), 16);
        for z in box_points(2, -2, 16) {
            prop_assert_eq!(s.member(&z), dp.member(&z), "{}", z);
        }
    }

    #[test]
    fn colon_generators_are_sound(gens in planar_gens(), a in -6i64..6, b in -6i64..6) {
        let s = AffineSemigroup::planar(&gens).unwrap();
        let z = Exp::d2(a, b);
        prop_assume!(s.in_group(&z));
        let c = s.colon_d(z).unwrap();
        let reach = c.value.generators().iter().map(Exp::norm).max().unwrap_or(0) + z.norm();
        let dp = DpOracle::for_semigroup(&s, reach.max(20));
        for g in c.value.generators() {
            prop_assert!(dp.member(g) && dp.member(&(*g + z)));
        }
        let expected = colon_set(&dp, 2, &[Exp::d2(0, 0)], z, 10);
        prop_assert_eq!(generated(&dp, 2, c.value.generators(), 0, 10), expected);
    }

    #[test]
    fn fractional_colon_reverses_inclusion(a in 0i64..8, b in 0i64..8, c in 0i64..8) {
        let s = AffineSemigroup::planar(&[(2, 0), (3, 0), (1, 1), (0, 1)]).unwrap();
        let g = [Exp::d2(a, b), Exp::d2(b, c)];
        let big = MonomialIdeal::new(&s, g.iter().copied().filter(|x| s.member(x))).ok();
        prop_assume!(big.is_some());
        let big = FracIdeal::from(big.unwrap());
        let small = FracIdeal::new(&s, big.generators().iter().map(|x| *x + Exp::d2(1, 1))).unwrap();
        prop_assert!(small.is_subset(&s, &big));
        let cb = s.colon_fractional(&big).unwrap().value;
        let cs = s.colon_fractional(&small).unwrap().value;
        prop_assert!(cb.is_subset(&s, &cs));
    }
}
