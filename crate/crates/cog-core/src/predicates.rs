//! Derived predicates: positive cone, c-absolute value, linearity (axioms
//! α and βₙ) and the c-Archimedean property.

use num_bigint::BigInt;
use serde::Serialize;

use crate::{Budget, Cog, CogElement, FiniteCog, StdCog};

/// x ∈ P iff x = e or R(e, x, x²).
pub fn positive_cone_membership<G: Cog>(g: &G, x: &G::Elem) -> bool {
    let e = g.identity();
    *x == e || g.r(&e, x, &g.op(x, x))
}

/// |x|: x if R(x⁻¹,e,x), x⁻¹ if R(x,e,x⁻¹), x when x² = e.
pub fn c_abs<G: Cog>(g: &G, x: &G::Elem) -> G::Elem {
    let e = g.identity();
    let xi = g.inv(x);
    if g.r(&xi, &e, x) {
        return x.clone();
    }
    if g.r(x, &e, &xi) {
        return xi;
    }
    x.clone()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum LinearVerdict<E> {
    Linear {
        certificate: String,
    },
    /// α fails (x² = e, x ≠ e) or βₙ fails (R(e,x,x²) without R(e,x,xⁿ)).
    Nonlinear {
        witness: E,
        axiom: String,
    },
    Unknown {
        bound: u32,
    },
}

fn beta_witness<G: Cog>(g: &G, elems: &[G::Elem], bound: u32) -> Option<(G::Elem, String)> {
    let e = g.identity();
    for x in elems {
        if *x == e {
            continue;
        }
        let sq = g.op(x, x);
        if sq == e {
            return Some((x.clone(), "alpha".to_string()));
        }
        if !g.r(&e, x, &sq) {
            continue;
        }
        let mut pw = sq.clone();
        for n in 3..=bound {
            pw = g.op(&pw, x);
            if !g.r(&e, x, &pw) {
                return Some((x.clone(), format!("beta_{n}")));
            }
        }
    }
    None
}

/// Exact on finite inputs: βₙ up to |G|+1 suffices by pigeonhole on powers.
pub fn is_linear_finite(g: &FiniteCog) -> LinearVerdict<usize> {
    let elems: Vec<usize> = (0..g.order()).collect();
    let bound = g.order() as u32 + 1;
    match beta_witness(g, &elems, bound) {
        Some((witness, axiom)) => LinearVerdict::Nonlinear { witness, axiom },
        None => LinearVerdict::Linear {
            certificate: format!("exhaustive over {} elements, beta_n to n = {bound}", g.order()),
        },
    }
}

/// On 𝕂 ⃗× ℚ^d subgroups linearity is structural: π₁ is representation
/// independent, so G is linear iff every generator has angle 0. A found
/// α/βₙ witness still wins; absent both, the verdict is Unknown.
pub fn is_linear_std(g: &StdCog, budget: &Budget, bound: u32) -> LinearVerdict<CogElement> {
    if g.generators().iter().all(|x| x.angle.is_zero()) {
        return LinearVerdict::Linear {
            certificate: "all generators have angle 0, so the structure lies in the \
                          linearly ordered part {0} x Q^d"
                .to_string(),
        };
    }
    let elems = g.elements(budget);
    match beta_witness(g, &elems, bound) {
        Some((witness, axiom)) => LinearVerdict::Nonlinear { witness, axiom },
        None => LinearVerdict::Unknown { bound },
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ArchimedeanVerdict<E> {
    Yes {
        pairs_checked: usize,
        bound: u32,
    },
    /// R(e, gⁿ, h) holds for every n: g is infinitely small against h.
    No {
        g: E,
        h: E,
        certificate: String,
    },
    Unknown {
        bound: u32,
    },
}

fn archimedean_search<G: Cog, F>(
    g: &G,
    elems: &[G::Elem],
    bound: u32,
    structural_no: F,
) -> ArchimedeanVerdict<G::Elem>
where
    F: Fn(&G::Elem, &G::Elem) -> Option<String>,
{
    let e = g.identity();
    let mut pairs = 0usize;
    let mut unknown = false;
    for a in elems {
        for b in elems {
            pairs += 1;
            let mut pw = e.clone();
            let mut witnessed = false;
            for _ in 1..=bound {
                pw = g.op(&pw, a);
                if !g.r(&e, &pw, b) {
                    witnessed = true;
                    break;
                }
            }
            if witnessed {
                continue;
            }
            if let Some(certificate) = structural_no(a, b) {
                return ArchimedeanVerdict::No {
                    g: a.clone(),
                    h: b.clone(),
                    certificate,
                };
            }
            unknown = true;
        }
    }
    if unknown {
        ArchimedeanVerdict::Unknown { bound }
    } else {
        ArchimedeanVerdict::Yes {
            pairs_checked: pairs,
            bound,
        }
    }
}

/// Finite structures are always c-Archimedean: gⁿ returns to e.
pub fn is_c_archimedean_finite(g: &FiniteCog, bound: u32) -> ArchimedeanVerdict<usize> {
    let elems: Vec<usize> = (0..g.order()).collect();
    let bound = bound.max(g.order() as u32);
    archimedean_search(g, &elems, bound, |_, _| None)
}

pub fn is_c_archimedean_std(
    g: &StdCog,
    budget: &Budget,
    bound: u32,
) -> ArchimedeanVerdict<CogElement> {
    let elems = g.elements(budget);
    archimedean_search(g, &elems, bound, |a, b| {
        // angle(a) = 0 with positive linear part keeps every power in the
        // a-angle class below any nonzero-angle h: R(e, aⁿ, h) for all n.
        if a.angle.is_zero() && a.linear.is_positive() && !b.angle.is_zero() {
            Some(format!(
                "angle({}) = 0 with positive linear part and angle({}) != 0: \
                 R(e, g^n, h) holds for every n",
                g.describe(a),
                g.describe(b)
            ))
        } else {
            None
        }
    })
}

/// Convenience scalar multiple for additive structures.
pub fn multiple<G: Cog>(g: &G, x: &G::Elem, n: i64) -> G::Elem {
    g.pow(x, &BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angle::KAngle;
    use crate::lex::LexVector;
    use num_rational::BigRational;

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn h_structure() -> StdCog {
        let g = CogElement::new(
            KAngle::rational(ratio(1, 3)),
            LexVector::new(vec![ratio(1, 1)]),
        );
        StdCog::new(
            1,
            vec![g],
            crate::IrrationalBasis::default_basis(),
            Budget::default(),
        )
        .unwrap()
    }

    #[test]
    fn cone_in_z3() {
        let g = FiniteCog::cyclic(3).unwrap();
        assert!(positive_cone_membership(&g, &1));
        assert!(!positive_cone_membership(&g, &2));
        assert!(positive_cone_membership(&g, &0));
    }

    #[test]
    fn c_abs_values() {
        let g5 = FiniteCog::cyclic(5).unwrap();
        assert_eq!(c_abs(&g5, &4), 1);
        assert_eq!(c_abs(&g5, &1), 1);
        assert_eq!(c_abs(&g5, &0), 0);
        // order-2 branch
        let g4 = FiniteCog::cyclic(4).unwrap();
        assert_eq!(c_abs(&g4, &2), 2);
    }

    #[test]
    fn cone_partition_finite() {
        // P ∩ P⁻¹ = {e} and G = P ∪ P⁻¹ ∪ {x : x² = e}
        for n in 1..=9 {
            let g = FiniteCog::cyclic(n).unwrap();
            for x in 0..n {
                let in_p = positive_cone_membership(&g, &x);
                let in_pinv = positive_cone_membership(&g, &g.inv(&x));
                if in_p && in_pinv {
                    assert_eq!(x, 0, "P ∩ P⁻¹ must be trivial in Z/{n}");
                }
                assert!(
                    in_p || in_pinv || g.op(&x, &x) == 0,
                    "partition fails at {x} in Z/{n}"
                );
            }
        }
    }

    #[test]
    fn z3_fails_beta3_at_one() {
        let g = FiniteCog::cyclic(3).unwrap();
        match is_linear_finite(&g) {
            LinearVerdict::Nonlinear { witness, axiom } => {
                assert_eq!(witness, 1);
                assert_eq!(axiom, "beta_3");
            }
            v => panic!("expected nonlinear, got {v:?}"),
        }
    }

    #[test]
    fn trivial_group_is_linear() {
        let g = FiniteCog::cyclic(1).unwrap();
        assert!(matches!(is_linear_finite(&g), LinearVerdict::Linear { .. }));
    }

    #[test]
    fn rational_line_is_linear_structurally() {
        let g = StdCog::trivial(0).lex_product(1);
        assert!(matches!(
            is_linear_std(&g, &Budget::default(), 8),
            LinearVerdict::Linear { .. }
        ));
    }

    #[test]
    fn h_is_not_c_archimedean_with_the_expected_pair() {
        let h = h_structure();
        match is_c_archimedean_std(&h, &Budget::default(), 24) {
            ArchimedeanVerdict::No { g, h: hh, .. } => {
                assert!(g.angle.is_zero());
                assert_eq!(g.linear.entries()[0], ratio(3, 1));
                assert_eq!(hh.angle.rational_part(), &ratio(1, 3));
                assert_eq!(hh.linear.entries()[0], ratio(1, 1));
            }
            v => panic!("expected No, got {v:?}"),
        }
    }

    #[test]
    fn finite_is_c_archimedean() {
        let g = FiniteCog::cyclic(6).unwrap();
        assert!(matches!(
            is_c_archimedean_finite(&g, 8),
            ArchimedeanVerdict::Yes { .. }
        ));
    }

    #[test]
    fn irrational_circle_subgroup_is_c_archimedean_within_bound() {
        let g = StdCog::k_subgroup(vec![KAngle::sqrt2_minus_one()]).unwrap();
        assert!(matches!(
            is_c_archimedean_std(&g, &Budget::with_bound(6), 64),
            ArchimedeanVerdict::Yes { .. }
        ));
    }
}
