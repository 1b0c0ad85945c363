//! Structural invariants of constructed cyclically ordered groups.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use cog_core::{
    check_axioms_finite, check_axioms_std, find_cog_isomorphism, positive_cone_membership,
    Budget, Cog, CogElement, FiniteCog, IrrationalBasis, KAngle, LexVector, StdCog,
};

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn constructed_finite_structures_pass_all_axioms() {
    for n in 1..=12 {
        let g = FiniteCog::cyclic(n).unwrap();
        let report = check_axioms_finite(&g, &Budget::default());
        assert!(report.all_pass(), "Z/{n}: {report:#?}");
    }
}

#[test]
fn lex_products_pass_sampled_axioms() {
    let budget = Budget::with_bound(2);
    for n in [1usize, 2, 3, 4] {
        let g = StdCog::lex_product_finite(&FiniteCog::cyclic(n).unwrap(), 1).unwrap();
        let report = check_axioms_std(&g, &budget);
        assert!(report.all_pass(), "Z/{n} x Q: {report:#?}");
    }
    let irr = StdCog::k_subgroup(vec![KAngle::sqrt2_minus_one()]).unwrap();
    assert!(check_axioms_std(&irr, &Budget::with_bound(5)).all_pass());
}

#[test]
fn inverse_reversal_remark() {
    // R(e,x,y) implies R(e,y⁻¹,x⁻¹)
    for n in 3..=9 {
        let g = FiniteCog::cyclic(n).unwrap();
        let e = g.identity();
        for x in 0..n {
            for y in 0..n {
                if g.r(&e, &x, &y) {
                    assert!(g.r(&e, &g.inv(&y), &g.inv(&x)), "n={n} x={x} y={y}");
                }
            }
        }
    }
    let h = cog_core::h_example();
    let e = h.identity();
    for x in h.elements(&Budget::with_bound(5)) {
        for y in h.elements(&Budget::with_bound(5)) {
            if h.r(&e, &x, &y) {
                assert!(h.r(&e, &h.inv(&y), &h.inv(&x)));
            }
        }
    }
}

#[test]
fn at_most_one_involution_in_valid_structures() {
    for n in 1..=16 {
        let g = FiniteCog::cyclic(n).unwrap();
        assert!(check_axioms_finite(&g, &Budget::default()).all_pass());
        let involutions = (0..n).filter(|&x| x != 0 && g.op(&x, &x) == 0).count();
        assert!(involutions <= 1, "Z/{n} has {involutions} involutions");
    }
}

#[test]
fn torsion_k_subgroup_isomorphic_to_finite_cyclic() {
    // generators 1/2 and 1/3 have common denominator 6
    let g = StdCog::k_subgroup(vec![
        KAngle::rational(ratio(1, 2)),
        KAngle::rational(ratio(1, 3)),
    ])
    .unwrap();
    let (fin, _) = g.try_materialize_finite().unwrap();
    assert_eq!(fin.order(), 6);
    let map = find_cog_isomorphism(&fin, &FiniteCog::cyclic(6).unwrap()).unwrap();
    cog_core::verify_cog_isomorphism(&fin, &FiniteCog::cyclic(6).unwrap(), &map).unwrap();
}

#[test]
fn angle_projection_is_a_homomorphism() {
    let g = cog_core::z3_lex_q_example();
    let elems = g.elements(&Budget::with_bound(3));
    for x in &elems {
        for y in &elems {
            let lhs = g.op(x, y).angle;
            let rhs = x.angle.add(&y.angle);
            assert_eq!(lhs, rhs);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cone_partition_on_random_cyclic(n in 1usize..=20, x in 0usize..20) {
        let g = FiniteCog::cyclic(n).unwrap();
        let x = x % n;
        let in_p = positive_cone_membership(&g, &x);
        let in_pinv = positive_cone_membership(&g, &g.inv(&x));
        prop_assert!(in_p || in_pinv || g.op(&x, &x) == 0);
        if in_p && in_pinv {
            prop_assert_eq!(x, 0);
        }
    }

    #[test]
    fn strictness_never_fires_on_repeats(n in 1usize..=20, a in 0usize..20, b in 0usize..20) {
        let g = FiniteCog::cyclic(n).unwrap();
        let (a, b) = (a % n, b % n);
        prop_assert!(!g.r(&a, &a, &b));
        prop_assert!(!g.r(&a, &b, &a));
        prop_assert!(!g.r(&b, &a, &a));
    }

    #[test]
    fn r5_translation_invariance_sampled(
        n in 3usize..=10,
        tuple in prop::array::uniform5(0usize..10),
    ) {
        let g = FiniteCog::cyclic(n).unwrap();
        let [x, y, z, u, v] = tuple.map(|t| t % n);
        if g.r(&x, &y, &z) {
            let a = g.op(&g.op(&u, &x), &v);
            let b = g.op(&g.op(&u, &y), &v);
            let c = g.op(&g.op(&u, &z), &v);
            prop_assert!(g.r(&a, &b, &c));
        }
    }

    #[test]
    fn std_addition_matches_component_arithmetic(
        k1 in -6i64..=6,
        k2 in -6i64..=6,
    ) {
        let h = cog_core::h_example();
        let gen = h.generators()[0].clone();
        let a = gen.scale(&BigInt::from(k1));
        let b = gen.scale(&BigInt::from(k2));
        let sum = h.op(&a, &b);
        prop_assert!(h.contains(&sum));
        prop_assert_eq!(&sum.angle, &a.angle.add(&b.angle));
        prop_assert_eq!(&sum.linear, &a.linear.add(&b.linear));
    }

    #[test]
    fn k_subgroup_membership_closed_under_ops(k in -8i64..=8) {
        let g = StdCog::k_subgroup(vec![KAngle::sqrt2_minus_one()]).unwrap();
        let x = g.generators()[0].scale(&BigInt::from(k));
        prop_assert!(g.contains(&x));
        prop_assert!(g.contains(&g.inv(&x)));
    }
}

#[test]
fn lex_product_relation_case_derived() {
    // R'((0,0),(0,5),(1/3,−2)) by the c=c'≠c'' and r<r' case
    let g = cog_core::z3_lex_q_example();
    let basis = IrrationalBasis::default_basis();
    let x = CogElement::new(KAngle::zero_in(&basis), LexVector::new(vec![ratio(0, 1)]));
    let y = CogElement::new(KAngle::zero_in(&basis), LexVector::new(vec![ratio(5, 1)]));
    let z = CogElement::new(
        KAngle::rational_in(ratio(1, 3), &basis),
        LexVector::new(vec![ratio(-2, 1)]),
    );
    assert!(g.r(&x, &y, &z));
}
