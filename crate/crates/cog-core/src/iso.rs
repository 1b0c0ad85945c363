//! Isomorphism search and verification for finite structures.

use crate::{Cog, FiniteCog};

/// Verify that `map[i]` is a group- and relation-preserving bijection.
pub fn verify_cog_isomorphism(
    a: &FiniteCog,
    b: &FiniteCog,
    map: &[usize],
) -> Result<(), String> {
    let n = a.order();
    if b.order() != n || map.len() != n {
        return Err("carriers have different sizes".into());
    }
    let mut seen = vec![false; n];
    for &img in map {
        if img >= n || seen[img] {
            return Err("map is not a bijection".into());
        }
        seen[img] = true;
    }
    for x in 0..n {
        for y in 0..n {
            if map[a.mul_table()[x][y]] != b.mul_table()[map[x]][map[y]] {
                return Err(format!("product not preserved at ({x},{y})"));
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = a.r(&x, &y, &z);
                let rhs = b.r(&map[x], &map[y], &map[z]);
                if lhs != rhs {
                    return Err(format!("relation not preserved at ({x},{y},{z})"));
                }
            }
        }
    }
    Ok(())
}

/// Search for a c.o.g. isomorphism between finite structures with cyclic
/// carriers (every genuine finite c.o.g. is cyclic).
pub fn find_cog_isomorphism(a: &FiniteCog, b: &FiniteCog) -> Option<Vec<usize>> {
    let n = a.order();
    if b.order() != n {
        return None;
    }
    let gen_a = (0..n).find(|&x| a.element_order(x) == n)?;
    for cand in 0..n {
        if b.element_order(cand) != n {
            continue;
        }
        // extend multiplicatively from the generator image
        let mut map = vec![usize::MAX; n];
        let mut xa = a.identity_index();
        let mut xb = b.identity_index();
        map[xa] = xb;
        for _ in 0..n {
            xa = a.mul_table()[xa][gen_a];
            xb = b.mul_table()[xb][cand];
            map[xa] = xb;
        }
        if verify_cog_isomorphism(a, b, &map).is_ok() {
            return Some(map);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_self_isomorphism() {
        let g = FiniteCog::cyclic(6).unwrap();
        let map = find_cog_isomorphism(&g, &g).unwrap();
        verify_cog_isomorphism(&g, &g, &map).unwrap();
    }

    #[test]
    fn different_orders_do_not_match() {
        let a = FiniteCog::cyclic(4).unwrap();
        let b = FiniteCog::cyclic(5).unwrap();
        assert!(find_cog_isomorphism(&a, &b).is_none());
    }
}
