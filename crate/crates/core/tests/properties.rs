mod common;

use std::collections::BTreeMap;

use maxcurves::curves::{divisor_of_monomial, CurveModel, Divisor, Monomial, PlaceId};
use maxcurves::gf::FieldSpec;
use maxcurves::numsg::{genus_via_apery, NumericalSemigroup};
use maxcurves::verify::{castelnuovo_bound, deduce_epsilon_sequence, padic_admissible, Coverage};
use maxcurves::CastelnuovoBound;
use num_integer::Integer;
use proptest::prelude::*;

fn fields() -> Vec<FieldSpec> {
    [(5, 2), (7, 2), (2, 6), (3, 6)].into_iter().map(|(p, k)| FieldSpec::new(p, k).unwrap()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn nth_roots_match_brute_force(fi in 0usize..4, code in any::<u32>(), n in 1u64..800) {
        let fs = fields();
        let f = &fs[fi];
        let a = f.element(code % f.order()).unwrap();
        let mut brute: Vec<u32> = f.elements().filter(|x| x.pow(n) == a).map(|x| x.code()).collect();
        brute.sort_unstable();
        let mut got: Vec<u32> = f.nth_roots(a, n).iter().map(|x| x.code()).collect();
        got.sort_unstable();
        prop_assert_eq!(&got, &brute);
        prop_assert_eq!(f.count_nth_roots(a, n), brute.len() as u64);
    }

    #[test]
    fn frobenius_is_a_ring_homomorphism(fi in 0usize..4, a in any::<u32>(), b in any::<u32>()) {
        let fs = fields();
        let f = &fs[fi];
        let (a, b) = (f.element(a % f.order()).unwrap(), f.element(b % f.order()).unwrap());
        prop_assert_eq!((a + b).frobenius(), a.frobenius() + b.frobenius());
        prop_assert_eq!((a * b).frobenius(), a.frobenius() * b.frobenius());
        prop_assert_eq!(a.frobenius(), a.pow(f.characteristic() as u64));
    }

    #[test]
    fn sieve_apery_and_reachability_agree(gens in prop::collection::vec(2u64..=60, 2..=5)) {
        prop_assume!(gens.iter().fold(0u64, |g, &x| g.gcd(&x)) == 1);
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        prop_assert_eq!(Some(s.genus()), genus_via_apery(&gens).ok());
        prop_assert_eq!(s.gaps().to_vec(), common::gaps_by_reachability(&gens, 2 * 60 * 60));
    }

    #[test]
    fn adding_a_generator_never_adds_gaps(gens in prop::collection::vec(2u64..=40, 2..=4), extra in 2u64..=40) {
        prop_assume!(gens.iter().fold(0u64, |g, &x| g.gcd(&x)) == 1);
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let mut more = gens.clone();
        more.push(extra);
        let t = NumericalSemigroup::from_generators(&more).unwrap();
        prop_assert!(t.genus() <= s.genus());
        prop_assert!(t.gaps().iter().all(|g| s.gaps().contains(g)));
    }

    #[test]
    fn monomial_divisors_are_additive(i1 in -8i64..8, j1 in -8i64..8, i2 in -8i64..8, j2 in -8i64..8) {
        let curve = CurveModel::gsx49().unwrap();
        let table = curve.divisor_table().unwrap();
        let mono = |i: i64, j: i64| -> Monomial { [("z".to_string(), i), ("t+1".to_string(), j)].into() };
        let d1 = divisor_of_monomial(&table, &mono(i1, j1)).unwrap();
        let d2 = divisor_of_monomial(&table, &mono(i2, j2)).unwrap();
        let sum = divisor_of_monomial(&table, &mono(i1 + i2, j1 + j2)).unwrap();
        prop_assert_eq!(&sum, &(&d1 + &d2));
        prop_assert_eq!(sum.degree(), 0);
    }

    #[test]
    fn bound_is_monotone_in_r(q in 2i64..=64, r in 2i64..=10) {
        prop_assume!(r <= q);
        let a = castelnuovo_bound(q, r).unwrap();
        let b = castelnuovo_bound(q, r + 1).unwrap();
        prop_assert!(b.value() <= a.value());
    }

    #[test]
    fn epsilon_is_stable_under_larger_observations(extra in prop::collection::vec(4u64..=28, 0..6)) {
        let mut obs = vec![7u64, 3];
        obs.extend(extra);
        let d = deduce_epsilon_sequence(&obs, 27, 3, Coverage::AllPlaceClasses).unwrap();
        prop_assert_eq!(d.sequence.orders(), &[0, 1, 3, 27][..]);
    }
}

#[test]
fn hermitian_genus_meets_bound_for_r_two() {
    for q in 2i64..=64 {
        let b: CastelnuovoBound = castelnuovo_bound(q, 2).unwrap();
        assert_eq!(b.value(), (q * (q - 1) / 2).into(), "q = {q}");
    }
}

#[test]
fn oracle_field_agrees_on_sixteenth_powers() {
    let f = FieldSpec::new(7, 2).unwrap();
    let count = f
        .elements()
        .filter(|t| !t.is_zero() && *t != -f.one())
        .filter(|&t| f.count_nth_roots(t * (t + f.one()).pow(6), 16) > 0)
        .count() as u64;
    assert_eq!(count, common::gsx49_sixteenth_power_count());
}

#[test]
fn padic_negative_control() {
    assert!(!padic_admissible(&[0, 1, 3, 7], 7));
    assert!(padic_admissible(&[0, 1, 2, 7], 7));
}

#[test]
fn divisor_of_unknown_symbol_is_an_error() {
    let table = CurveModel::gsx49().unwrap().divisor_table().unwrap();
    let m: Monomial = [("w".to_string(), 1)].into();
    assert!(divisor_of_monomial(&table, &m).is_err());
    let zero: Monomial = BTreeMap::new();
    assert_eq!(divisor_of_monomial(&table, &zero).unwrap(), Divisor::new());
    assert!(CurveModel::gsx49().unwrap().distinguished_place() == Some(PlaceId::named("Pbar_inf")));
}
