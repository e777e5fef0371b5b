use std::sync::OnceLock;

use cliffcox::clifford::{reflect, vector_inner, Multivector, Versor};
use cliffcox::field::{FieldScalar, Rational, Sign};
use cliffcox::induction::{coordinate_inner, spinor_inner, SpinorAs4DVector};
use cliffcox::reptheory::{contragredient_action, left_mult_matrix, spinor_to_so3};
use cliffcox::rootsystem::{family_root_system, Family, RootSystem};
use cliffcox::versorgroup::VersorGroup;
use proptest::prelude::*;

mod common;
use common::*;

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(256)
}

fn binary_icosahedral() -> &'static VersorGroup {
    static G: OnceLock<VersorGroup> = OnceLock::new();
    G.get_or_init(|| spin(Family::H3))
}

fn binary_octahedral() -> &'static VersorGroup {
    static G: OnceLock<VersorGroup> = OnceLock::new();
    G.get_or_init(|| spin(Family::B3))
}

fn h3_roots() -> &'static RootSystem {
    static R: OnceLock<RootSystem> = OnceLock::new();
    R.get_or_init(|| family_root_system(Family::H3).unwrap())
}

/// Sign of `a + b√2` from rational comparisons alone.
fn sign_quadratic(a: &Rational, b: &Rational) -> i32 {
    let (sa, sb) = (a.signum(), b.signum());
    if sa >= 0 && sb >= 0 {
        return (sa + sb).signum();
    }
    if sa <= 0 && sb <= 0 {
        return -1;
    }
    let lhs = a * a;
    let rhs = &(b * b) * &Rational::from_int(2);
    let a_wins = lhs > rhs;
    if a_wins {
        sa
    } else {
        sb
    }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn addition_and_multiplication_commute(x in scalar(), y in scalar()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
    }

    #[test]
    fn field_operations_associate_and_distribute(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
    }

    #[test]
    fn identities_and_negation(x in scalar()) {
        prop_assert_eq!(&x + &FieldScalar::zero(), x.clone());
        prop_assert_eq!(&x * &FieldScalar::one(), x.clone());
        prop_assert!((&x + &(-&x)).is_zero());
        prop_assert_eq!(&x - &x, FieldScalar::zero());
    }

    #[test]
    fn inverse_round_trip(x in nonzero_scalar()) {
        let inv = x.invert().unwrap();
        prop_assert!((&x * &inv).is_one());
        prop_assert_eq!(inv.invert().unwrap(), x.clone());
        prop_assert_eq!(x.div(&x).unwrap(), FieldScalar::one());
    }

    #[test]
    fn zero_has_no_inverse(x in scalar()) {
        let zero = &x - &x;
        prop_assert!(zero.invert().is_err());
        prop_assert!(x.div(&zero).is_err());
    }

    #[test]
    fn galois_maps_are_ring_automorphisms(x in scalar(), y in scalar()) {
        for g in [FieldScalar::galois_sigma, FieldScalar::galois_sqrt2] {
            prop_assert_eq!(g(&(&x * &y)), &g(&x) * &g(&y));
            prop_assert_eq!(g(&(&x + &y)), &g(&x) + &g(&y));
            prop_assert_eq!(g(&g(&x)), x.clone());
        }
    }

    #[test]
    fn norm_is_multiplicative(x in scalar(), y in scalar()) {
        prop_assert_eq!((&x * &y).norm(), &x.norm() * &y.norm());
    }

    #[test]
    fn sign_agrees_with_floating_point(x in scalar()) {
        let f = x.to_f64();
        if f.abs() > 1e-9 {
            prop_assert_eq!(x.sign(), if f > 0.0 { Sign::Positive } else { Sign::Negative });
        }
        prop_assert_eq!(x.is_zero(), x.sign() == Sign::Zero);
    }

    #[test]
    fn sign_of_near_cancellations(k in 1u32..=18, flip in any::<bool>(), t in -3i64..=3) {
        // (1 + √2)^k = p + q√2 and (1 − √2)^k = p − q√2 is tiny.
        let unit = &FieldScalar::one() + &FieldScalar::sqrt2();
        let power = unit.pow(k);
        let c = power.coeffs();
        let (p, q) = (c[0].clone(), if flip { -&c[1] } else { c[1].clone() });
        let p = &p + &Rational::new(t, 1_000_000);
        let x = FieldScalar::new(p.clone(), q.clone(), Rational::zero(), Rational::zero());
        let expected = match sign_quadratic(&p, &q) {
            1 => Sign::Positive,
            -1 => Sign::Negative,
            _ => Sign::Zero,
        };
        prop_assert_eq!(x.sign(), expected);
    }

    #[test]
    fn geometric_product_associates(
        (a, b, c) in (1usize..=4).prop_flat_map(|d| (multivector(d), multivector(d), multivector(d)))
    ) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn reverse_is_an_anti_automorphism(a in multivector(3), b in multivector(3)) {
        prop_assert_eq!((&a * &b).reverse(), &b.reverse() * &a.reverse());
        prop_assert_eq!(a.reverse().reverse(), a.clone());
    }

    #[test]
    fn vectors_square_to_their_norm(v in vector(4)) {
        let sq = &v * &v;
        prop_assert!(sq.is_scalar());
        prop_assert_eq!(sq.scalar_part().clone(), vector_inner(&v, &v).unwrap());
    }

    #[test]
    fn reflection_is_an_isometric_involution(a in nonzero_vector(3), v in vector(3), w in vector(3)) {
        let rv = reflect(&a, &v).unwrap();
        let rw = reflect(&a, &w).unwrap();
        prop_assert_eq!(vector_inner(&rv, &rw).unwrap(), vector_inner(&v, &w).unwrap());
        prop_assert_eq!(reflect(&a, &rv).unwrap(), v.clone());
        prop_assert_eq!(reflect(&a, &a).unwrap(), -&a);
    }

    #[test]
    fn sandwich_composes_reflections(a in nonzero_vector(3), b in nonzero_vector(3), v in vector(3)) {
        let ab = Versor::new(&a * &b).unwrap();
        let composed = reflect(&b, &reflect(&a, &v).unwrap()).unwrap();
        prop_assert_eq!(ab.sandwich(&v).unwrap(), composed);
        let single = Versor::new(a.clone()).unwrap();
        prop_assert_eq!(single.sandwich(&v).unwrap(), reflect(&a, &v).unwrap());
    }

    #[test]
    fn root_reflections_stay_in_the_root_system(i in 0usize..30, j in 0usize..30) {
        let phi = h3_roots();
        let a = Multivector::vector(&phi.roots()[i]);
        let v = Multivector::vector(&phi.roots()[j]);
        let image = reflect(&a, &v).unwrap().vector_coords().unwrap();
        prop_assert!(phi.contains(&image));
    }

    #[test]
    fn rotation_representation_respects_products(g in 0usize..120, h in 0usize..120) {
        let group = binary_icosahedral();
        let (x, y) = (group.element(g), group.element(h));
        let gh = group.element(group.mul(g, h));
        let product = &contragredient_action(x).unwrap() * &contragredient_action(y).unwrap();
        prop_assert_eq!(contragredient_action(gh).unwrap(), product);
        // The R̃xR action reverses the order.
        let reversed = &spinor_to_so3(y).unwrap() * &spinor_to_so3(x).unwrap();
        prop_assert_eq!(spinor_to_so3(gh).unwrap(), reversed);
    }

    #[test]
    fn left_multiplication_respects_products(g in 0usize..48, h in 0usize..48) {
        let group = binary_octahedral();
        let (x, y) = (group.element(g), group.element(h));
        let gh = group.element(group.mul(g, h));
        let product = &left_mult_matrix(x).unwrap() * &left_mult_matrix(y).unwrap();
        prop_assert_eq!(left_mult_matrix(gh).unwrap(), product);
    }

    #[test]
    fn left_multiplication_respects_products_icosahedral(g in 0usize..120, h in 0usize..120) {
        let group = binary_icosahedral();
        let (x, y) = (group.element(g), group.element(h));
        let gh = group.element(group.mul(g, h));
        let product = &left_mult_matrix(x).unwrap() * &left_mult_matrix(y).unwrap();
        prop_assert_eq!(left_mult_matrix(gh).unwrap(), product);
        prop_assert!(left_mult_matrix(x).unwrap().is_orthogonal());
    }

    #[test]
    fn spinor_inner_product_matches_coordinates(r1 in even_spinor(), r2 in even_spinor()) {
        prop_assert_eq!(spinor_inner(&r1, &r2), coordinate_inner(&r1, &r2));
        prop_assert_eq!(spinor_inner(&r1, &r1), r1.norm_squared());
        let back = SpinorAs4DVector::from_spinor(&r1.to_spinor()).unwrap();
        prop_assert_eq!(back, r1);
    }

    #[test]
    fn group_spinors_have_matching_inner_products(g in 0usize..120, h in 0usize..120) {
        let group = binary_icosahedral();
        let r1 = SpinorAs4DVector::from_spinor(group.element(g)).unwrap();
        let r2 = SpinorAs4DVector::from_spinor(group.element(h)).unwrap();
        prop_assert_eq!(spinor_inner(&r1, &r2), coordinate_inner(&r1, &r2));
        prop_assert!(r1.norm_squared().is_one());
    }
}
