//! The winding construction: quotient of a t.o.g. by a discrete central
//! cofinal ⟨z⟩, cyclically ordered by the representative window e ≤ g' < z.

use cog_core::{Cog, CoreError, FiniteCog};

use crate::{UnwoundElement, UnwoundGroup};

/// Winding validation window for centrality/cofinality sampling.
const CHECK_KS: [i64; 3] = [-1, 0, 1];

/// Wind uw(G) by a positive central z with finite window.
///
/// M = ⟨z⟩ only: generalized winding inputs beyond cyclic subgroups (which
/// the paper obtains from ultrapowers) are rejected by construction.
pub fn wind_unwound<G: Cog>(
    uw: &UnwoundGroup<G>,
    z: &UnwoundElement<G::Elem>,
) -> Result<FiniteCog, CoreError> {
    let e = uw.identity_elem();
    if uw.cmp(&e, z) != std::cmp::Ordering::Less {
        return Err(CoreError::InvalidArgument(
            "winding element must be positive".into(),
        ));
    }
    let carrier = uw.base().carrier().ok_or_else(|| {
        CoreError::InvalidArgument("winding needs a finite base carrier".into())
    })?;
    // centrality on a window sample
    for k in CHECK_KS {
        for g in &carrier {
            let x = UnwoundElement::new(k, g.clone());
            if uw.mul(&x, z) != uw.mul(z, &x) {
                return Err(CoreError::PreconditionViolation(format!(
                    "z = {} is not central: fails against {}",
                    uw.describe(z),
                    uw.describe(&x)
                )));
            }
        }
    }
    // window [e, z)
    let mut window: Vec<UnwoundElement<G::Elem>> = Vec::new();
    for k in 0..=z.k {
        for g in &carrier {
            let x = UnwoundElement::new(k, g.clone());
            if uw.leq(&e, &x) && uw.cmp(&x, z) == std::cmp::Ordering::Less {
                window.push(x);
            }
        }
    }
    window.sort_by(|a, b| uw.cmp(a, b));
    let n = window.len();
    if n == 0 {
        return Err(CoreError::InvalidArgument("empty winding window".into()));
    }
    // every element between some z-power and its successor: the window rep
    // of x is z^-q x; products of window reps land within [e, z^2)
    let index_of = |x: &UnwoundElement<G::Elem>| window.iter().position(|w| w == x);
    let zinv = UnwoundGroup::inv(uw, z);
    let mut mul = vec![vec![0usize; n]; n];
    for (i, a) in window.iter().enumerate() {
        for (j, b) in window.iter().enumerate() {
            let mut y = uw.mul(a, b);
            let mut guard = 0;
            while uw.cmp(&y, z) != std::cmp::Ordering::Less {
                y = uw.mul(&zinv, &y);
                guard += 1;
                if guard > 4 {
                    return Err(CoreError::PreconditionViolation(
                        "window product failed to reduce below z".into(),
                    ));
                }
            }
            let Some(idx) = index_of(&y) else {
                return Err(CoreError::PreconditionViolation(format!(
                    "window is not closed: product {} escapes",
                    uw.describe(&y)
                )));
            };
            mul[i][j] = idx;
        }
    }
    FiniteCog::from_table_with_order(mul, (0..n).collect())
}

/// Wound-round structure associated to (ℤ, ≤) and z: ℤ/zℤ with the
/// standard cyclic order. ℤ is presented as uw(trivial group).
pub fn wind_int(z: i64) -> Result<FiniteCog, CoreError> {
    let trivial = FiniteCog::cyclic(1)?;
    let uw = UnwoundGroup::new(trivial);
    let z_elem = UnwoundElement::new(z, 0usize);
    wind_unwound(&uw, &z_elem)
}

#[cfg(test)]
mod tests {
    use super::*;
    use cog_core::find_cog_isomorphism;

    #[test]
    fn wind_int_three_is_z3() {
        let wound = wind_int(3).unwrap();
        let z3 = FiniteCog::cyclic(3).unwrap();
        assert_eq!(wound.mul_table(), z3.mul_table());
        assert_eq!(wound.relation_triples(), z3.relation_triples());
    }

    #[test]
    fn wind_int_one_is_trivial() {
        let wound = wind_int(1).unwrap();
        assert_eq!(wound.order(), 1);
    }

    #[test]
    fn wind_rejects_nonpositive_z() {
        assert!(wind_int(0).is_err());
        assert!(wind_int(-2).is_err());
    }

    #[test]
    fn wind_unwound_by_z_power_expands() {
        // uw(Z/2) wound by z_G^2 has order 4
        let uw = UnwoundGroup::new(FiniteCog::cyclic(2).unwrap());
        let wound = wind_unwound(&uw, &uw.z_power(2)).unwrap();
        assert_eq!(wound.order(), 4);
        assert!(find_cog_isomorphism(&wound, &FiniteCog::cyclic(4).unwrap()).is_some());
    }
}
