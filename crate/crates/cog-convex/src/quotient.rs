//! Quotients by subgroups with the induced relation of §3: the large order
//! is pushed to cosets by representatives, and the map is a c-homomorphism
//! exactly when the induced relation is again a cyclic order.

use std::collections::BTreeSet;

use cog_core::{
    check_axioms_finite, Budget, Cog, CogElement, CoreError, FiniteCog, StdCog,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::convexity::{is_c_convex_finite, is_c_convex_std};
use crate::subgroups::{is_subgroup, std_subgroup_contains, verify_std_subgroup};

#[derive(Clone, Debug, Serialize)]
pub struct QuotientChecks {
    pub subgroup_c_convex: bool,
    /// The §3 Lemma property: the relation is independent of representatives.
    pub well_defined: bool,
    /// Conditions (2)/(3) of the §3 Remark: the induced relation is a cyclic
    /// order, equivalently the projection is a c-homomorphism.
    pub c_homomorphism: bool,
    pub axioms_pass: bool,
}

#[derive(Clone, Debug)]
pub struct FiniteQuotient {
    pub quotient: FiniteCog,
    /// element -> coset index
    pub map: Vec<usize>,
    /// canonical representative per coset
    pub reps: Vec<usize>,
    pub checks: QuotientChecks,
}

pub fn quotient_finite(
    g: &FiniteCog,
    h: &BTreeSet<usize>,
) -> Result<FiniteQuotient, CoreError> {
    if !is_subgroup(g, h) {
        return Err(CoreError::InvalidArgument(
            "candidate set is not a subgroup".into(),
        ));
    }
    if h.len() == g.order() {
        return Err(CoreError::InvalidArgument(
            "quotient by the whole group is not admitted".into(),
        ));
    }
    for x in 0..g.order() {
        for &s in h.iter() {
            let conj = g.op(&g.op(&x, &s), &g.inv(&x));
            if !h.contains(&conj) {
                return Err(CoreError::PreconditionViolation(format!(
                    "subgroup is not normal: {x} conjugates {s} outside"
                )));
            }
        }
    }
    let n = g.order();
    // cosets with minimal-element representatives
    let mut map = vec![usize::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    let mut members: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if map[x] != usize::MAX {
            continue;
        }
        let coset: Vec<usize> = {
            let mut c: Vec<usize> = h.iter().map(|&s| g.op(&x, &s)).collect();
            c.sort_unstable();
            c.dedup();
            c
        };
        let idx = reps.len();
        for &y in &coset {
            map[y] = idx;
        }
        reps.push(coset[0]);
        members.push(coset);
    }
    let q = reps.len();
    let mul: Vec<Vec<usize>> = (0..q)
        .map(|a| (0..q).map(|b| map[g.op(&reps[a], &reps[b])]).collect())
        .collect();
    // R̄(A,B,C) iff some members satisfy R (distinct cosets make S = R)
    let mut triples: BTreeSet<(usize, usize, usize)> = BTreeSet::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                if a == b || b == c || c == a {
                    continue;
                }
                let holds = members[a].iter().any(|&x| {
                    members[b]
                        .iter()
                        .any(|&y| members[c].iter().any(|&z| g.r(&x, &y, &z)))
                });
                if holds {
                    triples.insert((a, b, c));
                }
            }
        }
    }
    let quotient = FiniteCog::from_table_with_triples(mul, triples)?;
    // representative independence on all congruent triples with R
    let mut well_defined = true;
    'wd: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if !g.r(&x, &y, &z) || map[x] == map[y] || map[y] == map[z] || map[z] == map[x] {
                    continue;
                }
                for &x2 in &members[map[x]] {
                    for &y2 in &members[map[y]] {
                        for &z2 in &members[map[z]] {
                            if !g.r(&x2, &y2, &z2) {
                                well_defined = false;
                                break 'wd;
                            }
                        }
                    }
                }
            }
        }
    }
    let axiom_report = check_axioms_finite(&quotient, &Budget::default());
    let subgroup_c_convex = is_c_convex_finite(g, h)?.c_convex;
    let checks = QuotientChecks {
        subgroup_c_convex,
        well_defined,
        c_homomorphism: axiom_report.all_pass(),
        axioms_pass: axiom_report.all_pass(),
    };
    Ok(FiniteQuotient {
        quotient,
        map,
        reps,
        checks,
    })
}

#[derive(Clone, Debug)]
pub enum StdQuotient {
    /// Quotient by the trivial subgroup.
    Unchanged(StdCog),
    /// Quotient by the full angle kernel G₀: the winding part K(G).
    WindingPart(StdCog),
    /// Finite quotient materialized on canonical window representatives.
    Finite {
        quotient: FiniteCog,
        reps: Vec<CogElement>,
        checks: QuotientChecks,
    },
}

fn is_trivial_subgroup(sub: &StdCog) -> bool {
    sub.generators().iter().all(|g| g.is_identity())
}

/// Canonical representative of x + ⟨c⟩ with the c-leading coordinate
/// reduced into [0, c): the e ≤ g' < z window of the winding construction.
fn window_rep(x: &CogElement, c: &CogElement) -> Option<CogElement> {
    let lead = c.linear.leading_index()?;
    let step = c.linear.entries()[lead].clone();
    if !c.angle.is_zero() || step.is_zero() {
        return None;
    }
    let (c, step) = if step.is_positive() {
        (c.clone(), step)
    } else {
        (c.neg(), -step)
    };
    let value = x.linear.entries()[lead].clone();
    let m = (value / &step).floor().to_integer();
    Some(x.sub(&c.scale(&m)))
}

pub fn quotient_std(
    ambient: &StdCog,
    sub: &StdCog,
    budget: &Budget,
) -> Result<StdQuotient, CoreError> {
    verify_std_subgroup(ambient, sub)?;
    if std_subgroup_contains(sub, ambient) {
        return Err(CoreError::InvalidArgument(
            "quotient by the whole group is not admitted".into(),
        ));
    }
    if is_trivial_subgroup(sub) {
        return Ok(StdQuotient::Unchanged(ambient.clone()));
    }
    // quotient by G₀ is the angle projection; keep it symbolic when the
    // winding part is infinite, otherwise materialize cosets below
    let g0 = ambient.subgroup(ambient.kernel_elements(0))?;
    if crate::subgroups::std_subgroup_equal(sub, &g0)
        && ambient.winding() == cog_core::Winding::Infinite
    {
        let angles = ambient
            .generators()
            .iter()
            .map(|g| g.angle.clone())
            .filter(|a| !a.is_zero())
            .collect();
        return Ok(StdQuotient::WindingPart(StdCog::k_subgroup(angles)?));
    }
    // rank-1 window representatives when the subgroup has one generator
    let rank1 = sub.generators().len() == 1 && !sub.generators()[0].is_identity();
    let sample = ambient.elements(budget);
    let mut reps: Vec<CogElement> = Vec::new();
    let mut members: Vec<Vec<CogElement>> = Vec::new();
    for x in &sample {
        match reps.iter().position(|r| sub.contains(&x.sub(r))) {
            Some(i) => members[i].push(x.clone()),
            None => {
                let rep = if rank1 {
                    window_rep(x, &sub.generators()[0]).unwrap_or_else(|| x.clone())
                } else {
                    x.clone()
                };
                reps.push(rep);
                members.push(vec![x.clone()]);
            }
        }
        if reps.len() > 64 {
            return Err(CoreError::NotApplicable(
                "quotient not recognized as finite within budget".into(),
            ));
        }
    }
    let q = reps.len();
    // closure of representatives under addition
    let mut mul = vec![vec![usize::MAX; q]; q];
    for a in 0..q {
        for b in 0..q {
            let s = reps[a].add(&reps[b]);
            let Some(idx) = reps.iter().position(|r| sub.contains(&s.sub(r))) else {
                return Err(CoreError::NotApplicable(
                    "coset representatives do not close within budget".into(),
                ));
            };
            mul[a][b] = idx;
        }
    }
    let mut triples: BTreeSet<(usize, usize, usize)> = BTreeSet::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                if a == b || b == c || c == a {
                    continue;
                }
                let holds = members[a].iter().any(|x| {
                    members[b]
                        .iter()
                        .any(|y| members[c].iter().any(|z| ambient.r(x, y, z)))
                });
                if holds {
                    triples.insert((a, b, c));
                }
            }
        }
    }
    // representative independence on the sampled members
    let mut well_defined = true;
    'wd: for (a, ma) in members.iter().enumerate() {
        for (b, mb) in members.iter().enumerate() {
            for (c, mc) in members.iter().enumerate() {
                if a == b || b == c || c == a || !triples.contains(&(a, b, c)) {
                    continue;
                }
                for x in ma {
                    for y in mb {
                        for z in mc {
                            if !ambient.r(x, y, z) {
                                well_defined = false;
                                break 'wd;
                            }
                        }
                    }
                }
            }
        }
    }
    let quotient = FiniteCog::from_table_with_triples(mul, triples)?;
    let axiom_report = check_axioms_finite(&quotient, budget);
    let subgroup_c_convex = is_c_convex_std(ambient, sub, budget)?.c_convex;
    let checks = QuotientChecks {
        subgroup_c_convex,
        well_defined,
        c_homomorphism: axiom_report.all_pass(),
        axioms_pass: axiom_report.all_pass(),
    };
    Ok(StdQuotient::Finite {
        quotient,
        reps,
        checks,
    })
}

/// Scalar convenience used by quotient window reduction.
pub fn ratio_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}
