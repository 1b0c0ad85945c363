//! Subgroup enumeration and closure for finite structures, and subgroup
//! helpers for f.g. structures inside 𝕂 ⃗× ℚ^d.

use std::collections::BTreeSet;

use cog_core::{Cog, CoreError, FiniteCog, StdCog};

/// Closure of a generator set inside a finite structure.
pub fn subgroup_closure(g: &FiniteCog, gens: &[usize]) -> Result<BTreeSet<usize>, CoreError> {
    for &x in gens {
        g.check_element(x)?;
    }
    let mut set: BTreeSet<usize> = BTreeSet::new();
    set.insert(g.identity());
    let mut frontier: Vec<usize> = gens.to_vec();
    while let Some(x) = frontier.pop() {
        if set.contains(&x) {
            continue;
        }
        set.insert(x);
        let mut next = BTreeSet::new();
        for &a in &set {
            for &b in &set {
                next.insert(g.op(&a, &b));
            }
            next.insert(g.inv(&a));
        }
        for y in next {
            if !set.contains(&y) {
                frontier.push(y);
            }
        }
    }
    // close once more in case gens was empty of new info
    loop {
        let mut next = set.clone();
        for &a in &set {
            for &b in &set {
                next.insert(g.op(&a, &b));
            }
            next.insert(g.inv(&a));
        }
        if next == set {
            break;
        }
        set = next;
    }
    Ok(set)
}

pub fn is_subgroup(g: &FiniteCog, set: &BTreeSet<usize>) -> bool {
    if !set.contains(&g.identity()) {
        return false;
    }
    set.iter().all(|&a| {
        set.contains(&g.inv(&a)) && set.iter().all(|&b| set.contains(&g.op(&a, &b)))
    })
}

/// All subgroups of a finite structure, by closure-extension search.
pub fn all_subgroups(g: &FiniteCog) -> Vec<BTreeSet<usize>> {
    let trivial: BTreeSet<usize> = [g.identity()].into_iter().collect();
    let mut found: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    found.insert(trivial.clone());
    let mut frontier = vec![trivial];
    while let Some(h) = frontier.pop() {
        for x in 0..g.order() {
            if h.contains(&x) {
                continue;
            }
            let mut gens: Vec<usize> = h.iter().copied().collect();
            gens.push(x);
            let closed = subgroup_closure(g, &gens).expect("elements in range");
            if found.insert(closed.clone()) {
                frontier.push(closed);
            }
        }
    }
    let mut out: Vec<BTreeSet<usize>> = found.into_iter().collect();
    out.sort_by_key(|s| (s.len(), s.iter().copied().collect::<Vec<_>>()));
    out
}

/// Check that every generator of `sub` lies in `ambient`.
pub fn verify_std_subgroup(ambient: &StdCog, sub: &StdCog) -> Result<(), CoreError> {
    for gen in sub.generators() {
        if !ambient.contains(gen) {
            return Err(CoreError::InvalidArgument(format!(
                "subgroup generator {gen} lies outside the ambient structure"
            )));
        }
    }
    Ok(())
}

/// Lattice-level containment of generated subgroups.
pub fn std_subgroup_contains(outer: &StdCog, inner: &StdCog) -> bool {
    inner.generators().iter().all(|g| outer.contains(g))
}

pub fn std_subgroup_equal(a: &StdCog, b: &StdCog) -> bool {
    std_subgroup_contains(a, b) && std_subgroup_contains(b, a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_in_z6() {
        let g = FiniteCog::cyclic(6).unwrap();
        let h = subgroup_closure(&g, &[2]).unwrap();
        assert_eq!(h, [0, 2, 4].into_iter().collect());
        assert!(is_subgroup(&g, &h));
    }

    #[test]
    fn z6_has_four_subgroups() {
        let g = FiniteCog::cyclic(6).unwrap();
        let subs = all_subgroups(&g);
        assert_eq!(subs.len(), 4);
        assert_eq!(subs[0].len(), 1);
        assert_eq!(subs[3].len(), 6);
    }

    #[test]
    fn prime_order_has_two_subgroups() {
        let g = FiniteCog::cyclic(5).unwrap();
        assert_eq!(all_subgroups(&g).len(), 2);
    }
}
