//! Purity of subgroups: h ∈ H divisible in G must be divisible in H.

use std::collections::BTreeSet;

use cog_core::{Budget, Cog, CogElement, CoreError, FiniteCog, StdCog};
use num_bigint::BigInt;
use serde::Serialize;

use crate::convexity::CheckScope;
use crate::subgroups::{is_subgroup, verify_std_subgroup};

#[derive(Clone, Debug, Serialize)]
pub struct PurityWitness<E> {
    pub h: E,
    pub n: u32,
    pub g: E,
}

#[derive(Clone, Debug, Serialize)]
pub struct PurityVerdict<E> {
    pub pure: bool,
    pub witness: Option<PurityWitness<E>>,
    pub scope: CheckScope,
}

pub fn is_pure_finite(
    g: &FiniteCog,
    h: &BTreeSet<usize>,
    n_bound: u32,
) -> Result<PurityVerdict<usize>, CoreError> {
    if !is_subgroup(g, h) {
        return Err(CoreError::InvalidArgument(
            "candidate set is not a subgroup".into(),
        ));
    }
    for x in 0..g.order() {
        for n in 2..=n_bound {
            let pw = g.pow_i64(&x, n as i64);
            if !h.contains(&pw) {
                continue;
            }
            let divisible_inside = h.iter().any(|&y| g.pow_i64(&y, n as i64) == pw);
            if !divisible_inside {
                return Ok(PurityVerdict {
                    pure: false,
                    witness: Some(PurityWitness { h: pw, n, g: x }),
                    scope: CheckScope::Exhaustive,
                });
            }
        }
    }
    Ok(PurityVerdict {
        pure: true,
        witness: None,
        scope: CheckScope::Exhaustive,
    })
}

/// n-divisibility inside a generated subgroup is a lattice problem: h = n·x
/// has a solution over the generators scaled by n.
pub fn divisible_in_std(sub: &StdCog, h: &CogElement, n: u32) -> Result<bool, CoreError> {
    let scaled: Vec<CogElement> = sub
        .generators()
        .iter()
        .map(|g| g.scale(&BigInt::from(n)))
        .collect();
    let scaled_sub = sub.subgroup(scaled)?;
    Ok(scaled_sub.contains(h))
}

pub fn is_pure_std(
    ambient: &StdCog,
    sub: &StdCog,
    n_bound: u32,
    budget: &Budget,
) -> Result<PurityVerdict<CogElement>, CoreError> {
    verify_std_subgroup(ambient, sub)?;
    for x in ambient.elements(budget) {
        for n in 2..=n_bound {
            let pw = x.scale(&BigInt::from(n));
            if !sub.contains(&pw) {
                continue;
            }
            if !divisible_in_std(sub, &pw, n)? {
                return Ok(PurityVerdict {
                    pure: false,
                    witness: Some(PurityWitness { h: pw, n, g: x }),
                    scope: CheckScope::Sampled {
                        budget: budget.clone(),
                    },
                });
            }
        }
    }
    Ok(PurityVerdict {
        pure: true,
        witness: None,
        scope: CheckScope::Sampled {
            budget: budget.clone(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use cog_core::h_example;
    use num_rational::BigRational;

    #[test]
    fn c_is_not_pure_in_h_at_three() {
        let h = h_example();
        let gen = h.generators()[0].clone();
        let c = h.subgroup(vec![gen.scale(&BigInt::from(3))]).unwrap();
        let verdict = is_pure_std(&h, &c, 4, &Budget::default()).unwrap();
        assert!(!verdict.pure);
        let w = verdict.witness.unwrap();
        assert_eq!(w.n, 3);
        // h = (0,3), g = ±(1/3,1)-class element with g³ = h
        assert!(w.h.angle.is_zero());
        assert_eq!(
            w.h.linear.entries()[0],
            BigRational::from_integer(BigInt::from(3))
        );
        assert_eq!(w.g.scale(&BigInt::from(3)), w.h);
    }

    #[test]
    fn group_is_pure_in_itself() {
        let h = h_example();
        let verdict = is_pure_std(&h, &h, 5, &Budget::with_bound(6)).unwrap();
        assert!(verdict.pure);
        let g = FiniteCog::cyclic(6).unwrap();
        let whole: BTreeSet<usize> = (0..6).collect();
        assert!(is_pure_finite(&g, &whole, 7).unwrap().pure);
    }

    #[test]
    fn divisibility_solver_agrees_with_search() {
        let h = h_example();
        let gen = h.generators()[0].clone();
        let c = h.subgroup(vec![gen.scale(&BigInt::from(3))]).unwrap();
        // (0,3) = 3·(0,1) has no solution inside C = ⟨(0,3)⟩
        assert!(!divisible_in_std(&c, &gen.scale(&BigInt::from(3)), 3).unwrap());
        // but (0,9) = 3·(0,3) does
        assert!(divisible_in_std(&c, &gen.scale(&BigInt::from(9)), 3).unwrap());
    }
}
