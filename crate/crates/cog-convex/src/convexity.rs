//! c-convex subgroup recognition, the linear part G₀, chains and the
//! smallest c-convex subgroup containing an element.

use std::collections::BTreeSet;

use cog_core::{Budget, Cog, CogElement, CoreError, FiniteCog, LinearVerdict, StdCog};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::subgroups::{
    all_subgroups, is_subgroup, std_subgroup_contains, std_subgroup_equal, verify_std_subgroup,
};

#[derive(Clone, Debug, Serialize)]
pub enum CheckScope {
    Exhaustive,
    Sampled { budget: Budget },
}

#[derive(Clone, Debug, Serialize)]
pub enum ConvexCertificate<E> {
    /// A non-unit element of order 2 inside the subgroup.
    Order2Element(E),
    /// h ∈ H with R(h⁻¹,e,h), g ∈ G with R(e,g,h), yet g ∉ H.
    EscapedElement { h: E, g: E },
}

#[derive(Clone, Debug, Serialize)]
pub struct ConvexityVerdict<E> {
    pub c_convex: bool,
    pub certificate: Option<ConvexCertificate<E>>,
    pub scope: CheckScope,
}

/// A proper subgroup is c-convex iff it has no non-unit involution and is a
/// c-convex set; the whole group is c-convex in itself.
pub fn is_c_convex_finite(
    g: &FiniteCog,
    h: &BTreeSet<usize>,
) -> Result<ConvexityVerdict<usize>, CoreError> {
    if !is_subgroup(g, h) {
        return Err(CoreError::InvalidArgument(
            "candidate set is not a subgroup".into(),
        ));
    }
    let scope = CheckScope::Exhaustive;
    if h.len() == g.order() {
        return Ok(ConvexityVerdict {
            c_convex: true,
            certificate: None,
            scope,
        });
    }
    let e = g.identity();
    for &x in h {
        if x != e && g.op(&x, &x) == e {
            return Ok(ConvexityVerdict {
                c_convex: false,
                certificate: Some(ConvexCertificate::Order2Element(x)),
                scope,
            });
        }
    }
    for &x in h {
        if !g.r(&g.inv(&x), &e, &x) {
            continue;
        }
        for y in 0..g.order() {
            if g.r(&e, &y, &x) && !h.contains(&y) {
                return Ok(ConvexityVerdict {
                    c_convex: false,
                    certificate: Some(ConvexCertificate::EscapedElement { h: x, g: y }),
                    scope,
                });
            }
        }
    }
    Ok(ConvexityVerdict {
        c_convex: true,
        certificate: None,
        scope,
    })
}

pub fn is_c_convex_std(
    ambient: &StdCog,
    sub: &StdCog,
    budget: &Budget,
) -> Result<ConvexityVerdict<CogElement>, CoreError> {
    verify_std_subgroup(ambient, sub)?;
    let scope = CheckScope::Sampled {
        budget: budget.clone(),
    };
    if std_subgroup_contains(sub, ambient) {
        return Ok(ConvexityVerdict {
            c_convex: true,
            certificate: None,
            scope,
        });
    }
    // an involution exists iff the torsion order is even
    let torsion = sub.torsion();
    if (&torsion.order % BigInt::from(2)).is_zero() {
        let half = &torsion.order / BigInt::from(2);
        let witness = torsion.generator.scale(&half);
        return Ok(ConvexityVerdict {
            c_convex: false,
            certificate: Some(ConvexCertificate::Order2Element(witness)),
            scope,
        });
    }
    let e = ambient.identity_elem();
    for h in sub.elements(budget) {
        if !ambient.r(&h.neg(), &e, &h) {
            continue;
        }
        for g in ambient.elements(budget) {
            if ambient.r(&e, &g, &h) && !sub.contains(&g) {
                return Ok(ConvexityVerdict {
                    c_convex: false,
                    certificate: Some(ConvexCertificate::EscapedElement { h, g }),
                    scope,
                });
            }
        }
    }
    Ok(ConvexityVerdict {
        c_convex: true,
        certificate: None,
        scope,
    })
}

/// G₀ for a finite nonlinear structure is trivial: every nontrivial
/// subgroup meets the winding.
pub fn linear_part_finite(g: &FiniteCog) -> Result<BTreeSet<usize>, CoreError> {
    if let LinearVerdict::Linear { .. } = cog_core::is_linear_finite(g) {
        return Err(CoreError::NotApplicable(
            "linear structure has no largest proper c-convex subgroup G0".into(),
        ));
    }
    Ok([g.identity()].into_iter().collect())
}

/// G₀ = {x : angle(x) = 0}, as a generated subgroup. Rejects linear inputs
/// (all generators of angle 0), where the theorem's hypothesis fails.
pub fn linear_part_std(g: &StdCog) -> Result<StdCog, CoreError> {
    if g.generators().iter().all(|x| x.angle.is_zero()) {
        return Err(CoreError::NotApplicable(
            "linear structure has no largest proper c-convex subgroup G0".into(),
        ));
    }
    g.subgroup(g.kernel_elements(0))
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainReport {
    /// Sizes of the c-convex subgroups, ascending.
    pub sizes: Vec<usize>,
    pub totally_ordered: bool,
}

/// All c-convex subgroups of a finite structure, sorted by inclusion.
pub fn c_convex_chain(g: &FiniteCog) -> Result<(Vec<BTreeSet<usize>>, ChainReport), CoreError> {
    let mut chain: Vec<BTreeSet<usize>> = Vec::new();
    for sub in all_subgroups(g) {
        if is_c_convex_finite(g, &sub)?.c_convex {
            chain.push(sub);
        }
    }
    chain.sort_by_key(|s| (s.len(), s.iter().copied().collect::<Vec<_>>()));
    let mut totally_ordered = true;
    for i in 0..chain.len() {
        for j in i + 1..chain.len() {
            if !chain[i].is_subset(&chain[j]) && !chain[j].is_subset(&chain[i]) {
                totally_ordered = false;
            }
        }
    }
    let sizes = chain.iter().map(|s| s.len()).collect();
    Ok((chain, ChainReport {
        sizes,
        totally_ordered,
    }))
}

pub fn smallest_c_convex_containing_finite(
    g: &FiniteCog,
    x: usize,
) -> Result<BTreeSet<usize>, CoreError> {
    g.check_element(x)?;
    let (chain, _) = c_convex_chain(g)?;
    let mut acc: Option<BTreeSet<usize>> = None;
    for sub in chain {
        if sub.contains(&x) {
            acc = Some(match acc {
                None => sub,
                Some(prev) => prev.intersection(&sub).copied().collect(),
            });
        }
    }
    let result = acc.expect("the whole group is c-convex and contains x");
    if !is_c_convex_finite(g, &result)?.c_convex {
        return Err(CoreError::PreconditionViolation(
            "intersection of c-convex subgroups is not c-convex".into(),
        ));
    }
    Ok(result)
}

/// The c-convex subgroups of a StdCog enumerable here: the whole group,
/// then the filtration kernels H_j = {x : angle(x) = 0, linear₁..linear_j = 0},
/// descending to the trivial subgroup. Nonlinear structures only.
pub fn convex_filtration_std(g: &StdCog) -> Result<Vec<StdCog>, CoreError> {
    let mut out = vec![g.clone()];
    if g.generators().iter().all(|x| x.angle.is_zero()) {
        // linear structure: convex subgroups of the t.o.g. itself
        for j in 0..=g.dim() {
            let sub = g.subgroup(g.kernel_elements(j))?;
            if !out.iter().any(|s| std_subgroup_equal(s, &sub)) {
                out.push(sub);
            }
        }
        return Ok(out);
    }
    for j in 0..=g.dim() {
        let sub = g.subgroup(g.kernel_elements(j))?;
        if !out.iter().any(|s| std_subgroup_equal(s, &sub)) {
            out.push(sub);
        }
    }
    Ok(out)
}

pub fn smallest_c_convex_containing_std(
    ambient: &StdCog,
    x: &CogElement,
    budget: &Budget,
) -> Result<StdCog, CoreError> {
    ambient.check_element(x)?;
    let family = convex_filtration_std(ambient)?;
    // family[0] is the ambient itself; deeper entries shrink
    let mut best = family[0].clone();
    for sub in &family[1..] {
        if sub.contains(x) && std_subgroup_contains(&best, sub) {
            best = sub.clone();
        }
    }
    // sanity: the result must be c-convex within the enumerated family
    let verdict = is_c_convex_std(ambient, &best, budget)?;
    if !verdict.c_convex {
        return Err(CoreError::PreconditionViolation(
            "selected subgroup fails the c-convexity check".into(),
        ));
    }
    Ok(best)
}

/// gcd-style membership count of order-n subgroups, used by tests.
pub fn order_n_subgroup_count(g: &FiniteCog, n: usize) -> usize {
    all_subgroups(g).into_iter().filter(|s| s.len() == n).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subgroups::subgroup_closure;
    use cog_core::h_example;

    #[test]
    fn order2_subgroup_of_z4_is_not_c_convex() {
        let g = FiniteCog::cyclic(4).unwrap();
        let h = subgroup_closure(&g, &[2]).unwrap();
        let verdict = is_c_convex_finite(&g, &h).unwrap();
        assert!(!verdict.c_convex);
        assert!(matches!(
            verdict.certificate,
            Some(ConvexCertificate::Order2Element(2))
        ));
    }

    #[test]
    fn trivial_subgroup_is_c_convex_in_odd_cyclic() {
        let g = FiniteCog::cyclic(5).unwrap();
        let h: BTreeSet<usize> = [0].into_iter().collect();
        assert!(is_c_convex_finite(&g, &h).unwrap().c_convex);
    }

    #[test]
    fn c_in_h_is_c_convex() {
        let h = h_example();
        let c = h.subgroup(vec![h.generators()[0].scale(&BigInt::from(3))]).unwrap();
        let verdict = is_c_convex_std(&h, &c, &Budget::default()).unwrap();
        assert!(verdict.c_convex, "{verdict:?}");
    }

    #[test]
    fn whole_group_is_c_convex_despite_involution() {
        let g = FiniteCog::cyclic(4).unwrap();
        let whole: BTreeSet<usize> = (0..4).collect();
        assert!(is_c_convex_finite(&g, &whole).unwrap().c_convex);
    }

    #[test]
    fn chains_of_small_cyclics() {
        let (chain5, rep5) = c_convex_chain(&FiniteCog::cyclic(5).unwrap()).unwrap();
        assert_eq!(rep5.sizes, vec![1, 5]);
        assert!(rep5.totally_ordered);
        assert_eq!(chain5.len(), 2);

        // {0,2} is excluded by its involution
        let (_, rep4) = c_convex_chain(&FiniteCog::cyclic(4).unwrap()).unwrap();
        assert_eq!(rep4.sizes, vec![1, 4]);

        let (_, rep1) = c_convex_chain(&FiniteCog::cyclic(1).unwrap()).unwrap();
        assert_eq!(rep1.sizes, vec![1]);
    }

    #[test]
    fn linear_part_of_h_is_generated_by_0_3() {
        let h = h_example();
        let g0 = linear_part_std(&h).unwrap();
        assert_eq!(g0.generators().len(), 1);
        let expected = h.generators()[0].scale(&BigInt::from(3));
        assert!(std_subgroup_equal(
            &g0,
            &h.subgroup(vec![expected]).unwrap()
        ));
    }

    #[test]
    fn linear_part_rejects_linear_input() {
        let line = StdCog::trivial(0).lex_product(1);
        assert!(matches!(
            linear_part_std(&line),
            Err(CoreError::NotApplicable(_))
        ));
        assert!(linear_part_finite(&FiniteCog::cyclic(1).unwrap()).is_err());
        assert_eq!(
            linear_part_finite(&FiniteCog::cyclic(5).unwrap()).unwrap().len(),
            1
        );
    }

    #[test]
    fn smallest_containing_in_h() {
        let h = h_example();
        let g = h.generators()[0].clone();
        // (0,3) generates C, the smallest c-convex subgroup containing it
        let c = smallest_c_convex_containing_std(&h, &g.scale(&BigInt::from(3)), &Budget::default())
            .unwrap();
        assert!(std_subgroup_equal(
            &c,
            &h.subgroup(vec![g.scale(&BigInt::from(3))]).unwrap()
        ));
        // an element of nonzero angle forces the whole group
        let whole = smallest_c_convex_containing_std(&h, &g, &Budget::default()).unwrap();
        assert!(std_subgroup_equal(&whole, &h));
    }

    #[test]
    fn smallest_containing_identity_is_trivial() {
        let g = FiniteCog::cyclic(5).unwrap();
        let s = smallest_c_convex_containing_finite(&g, 0).unwrap();
        assert_eq!(s.len(), 1);
    }
}
