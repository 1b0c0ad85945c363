//! Finite cyclically ordered structures given by explicit tables.
//!
//! The relation is stored either as positions along a representative cyclic
//! order (the wound-round form of §1.2) or as an explicit triple set, the
//! latter mainly for counterexample fixtures. Triples are materialized for
//! small carriers so exhaustive checks stay cheap.

use std::collections::BTreeSet;

use crate::{Budget, Cog, CoreError};

/// Materialize triples from a representative order up to this order.
const MATERIALIZE_LIMIT: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Relation {
    /// position[i] = rank of element i in the representative window order.
    ByOrder(Vec<usize>),
    Explicit(BTreeSet<(usize, usize, usize)>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteCog {
    n: usize,
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
    relation: Relation,
    /// Cached triple set for carriers up to MATERIALIZE_LIMIT.
    materialized: Option<BTreeSet<(usize, usize, usize)>>,
}

fn ascending_cyclic(a: usize, b: usize, c: usize) -> bool {
    (a < b && b < c) || (b < c && c < a) || (c < a && a < b)
}

fn validate_table(n: usize, mul: &[Vec<usize>]) -> Result<(usize, Vec<usize>), CoreError> {
    if n == 0 {
        return Err(CoreError::InvalidArgument("empty carrier".into()));
    }
    if mul.len() != n || mul.iter().any(|row| row.len() != n) {
        return Err(CoreError::InvalidArgument(
            "multiplication table is not n x n".into(),
        ));
    }
    for row in mul {
        for &entry in row {
            if entry >= n {
                return Err(CoreError::InvalidArgument(format!(
                    "table entry {entry} out of range"
                )));
            }
        }
    }
    // identity
    let mut identity = None;
    'outer: for e in 0..n {
        for x in 0..n {
            if mul[e][x] != x || mul[x][e] != x {
                continue 'outer;
            }
        }
        identity = Some(e);
        break;
    }
    let Some(e) = identity else {
        return Err(CoreError::InvalidArgument("no identity element".into()));
    };
    // associativity
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                    return Err(CoreError::InvalidArgument(format!(
                        "associativity fails at ({a},{b},{c})"
                    )));
                }
            }
        }
    }
    // inverses
    let mut inv = vec![0usize; n];
    for a in 0..n {
        match (0..n).find(|&b| mul[a][b] == e && mul[b][a] == e) {
            Some(b) => inv[a] = b,
            None => {
                return Err(CoreError::InvalidArgument(format!(
                    "element {a} has no inverse"
                )))
            }
        }
    }
    Ok((e, inv))
}

impl FiniteCog {
    /// ℤ/nℤ with its standard cyclic order: R(i,j,k) iff the residues form
    /// an ascending cyclic rotation. For n ≤ 2 the relation is empty.
    pub fn cyclic(n: usize) -> Result<FiniteCog, CoreError> {
        if n == 0 {
            return Err(CoreError::InvalidArgument("n must be positive".into()));
        }
        let mul = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        let inv = (0..n).map(|i| (n - i) % n).collect();
        let mut g = FiniteCog {
            n,
            mul,
            inv,
            relation: Relation::ByOrder((0..n).collect()),
            materialized: None,
        };
        g.materialize();
        Ok(g)
    }

    /// A structure from an explicit table and a representative cyclic order
    /// (a permutation of the carrier starting anywhere; positions induce the
    /// wound-round relation). The identity need not sit first.
    pub fn from_table_with_order(
        mul: Vec<Vec<usize>>,
        order: Vec<usize>,
    ) -> Result<FiniteCog, CoreError> {
        let n = mul.len();
        let (_, inv) = validate_table(n, &mul)?;
        if order.len() != n {
            return Err(CoreError::InvalidArgument(
                "representative order must list every element once".into(),
            ));
        }
        let mut position = vec![usize::MAX; n];
        for (rank, &el) in order.iter().enumerate() {
            if el >= n || position[el] != usize::MAX {
                return Err(CoreError::InvalidArgument(
                    "representative order must list every element once".into(),
                ));
            }
            position[el] = rank;
        }
        let mut g = FiniteCog {
            n,
            mul,
            inv,
            relation: Relation::ByOrder(position),
            materialized: None,
        };
        g.materialize();
        Ok(g)
    }

    /// A fixture with an arbitrary explicit relation; used for exercising
    /// axiom failures.
    pub fn from_table_with_triples(
        mul: Vec<Vec<usize>>,
        triples: BTreeSet<(usize, usize, usize)>,
    ) -> Result<FiniteCog, CoreError> {
        let n = mul.len();
        let (_, inv) = validate_table(n, &mul)?;
        for &(a, b, c) in &triples {
            if a >= n || b >= n || c >= n {
                return Err(CoreError::InvalidArgument("triple out of range".into()));
            }
        }
        Ok(FiniteCog {
            n,
            mul,
            inv,
            relation: Relation::Explicit(triples),
            materialized: None,
        })
    }

    fn materialize(&mut self) {
        if self.n > MATERIALIZE_LIMIT {
            return;
        }
        let mut set = BTreeSet::new();
        for x in 0..self.n {
            for y in 0..self.n {
                for z in 0..self.n {
                    if self.holds(x, y, z) {
                        set.insert((x, y, z));
                    }
                }
            }
        }
        self.materialized = Some(set);
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity_index(&self) -> usize {
        // validated tables always have the identity; cyclic tables use 0
        (0..self.n)
            .find(|&e| (0..self.n).all(|x| self.mul[e][x] == x && self.mul[x][e] == x))
            .expect("validated table has an identity")
    }

    pub fn mul_table(&self) -> &Vec<Vec<usize>> {
        &self.mul
    }

    fn holds(&self, x: usize, y: usize, z: usize) -> bool {
        match &self.relation {
            Relation::ByOrder(pos) => {
                if x == y || y == z || z == x {
                    return false;
                }
                ascending_cyclic(pos[x], pos[y], pos[z])
            }
            Relation::Explicit(set) => set.contains(&(x, y, z)),
        }
    }

    /// All triples in the relation, sorted.
    pub fn relation_triples(&self) -> BTreeSet<(usize, usize, usize)> {
        if let Some(m) = &self.materialized {
            return m.clone();
        }
        match &self.relation {
            Relation::Explicit(set) => set.clone(),
            Relation::ByOrder(_) => {
                let mut set = BTreeSet::new();
                for x in 0..self.n {
                    for y in 0..self.n {
                        for z in 0..self.n {
                            if self.holds(x, y, z) {
                                set.insert((x, y, z));
                            }
                        }
                    }
                }
                set
            }
        }
    }

    /// The representative order positions when the relation came from a
    /// winding order.
    pub fn window_positions(&self) -> Option<&[usize]> {
        match &self.relation {
            Relation::ByOrder(pos) => Some(pos),
            Relation::Explicit(_) => None,
        }
    }

    pub fn element_order(&self, x: usize) -> usize {
        let e = self.identity_index();
        let mut acc = x;
        let mut k = 1;
        while acc != e {
            acc = self.mul[acc][x];
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.mul[a][b] == self.mul[b][a]))
    }

    pub fn check_element(&self, x: usize) -> Result<(), CoreError> {
        if x < self.n {
            Ok(())
        } else {
            Err(CoreError::InvalidElement(format!(
                "index {x} out of range for carrier of order {}",
                self.n
            )))
        }
    }
}

impl Cog for FiniteCog {
    type Elem = usize;

    fn identity(&self) -> usize {
        self.identity_index()
    }

    fn op(&self, a: &usize, b: &usize) -> usize {
        self.mul[*a][*b]
    }

    fn inv(&self, a: &usize) -> usize {
        self.inv[*a]
    }

    fn r(&self, x: &usize, y: &usize, z: &usize) -> bool {
        self.holds(*x, *y, *z)
    }

    fn carrier(&self) -> Option<Vec<usize>> {
        Some((0..self.n).collect())
    }

    fn sample(&self, _budget: &Budget) -> Vec<usize> {
        (0..self.n).collect()
    }

    fn describe(&self, a: &usize) -> String {
        a.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_three_relation() {
        let g = FiniteCog::cyclic(3).unwrap();
        let expected: BTreeSet<_> = [(0, 1, 2), (1, 2, 0), (2, 0, 1)].into_iter().collect();
        assert_eq!(g.relation_triples(), expected);
    }

    #[test]
    fn small_relations_empty() {
        assert!(FiniteCog::cyclic(2).unwrap().relation_triples().is_empty());
        assert!(FiniteCog::cyclic(1).unwrap().relation_triples().is_empty());
        assert!(FiniteCog::cyclic(0).is_err());
    }

    #[test]
    fn cyclic_five_spot_checks() {
        let g = FiniteCog::cyclic(5).unwrap();
        assert!(!g.r(&1, &0, &4));
        assert!(g.r(&4, &0, &1));
        assert!(g.r(&0, &2, &4));
        assert!(!g.r(&1, &1, &3));
    }

    #[test]
    fn rejects_bad_tables() {
        // not associative / no identity
        let bad = vec![vec![1, 0], vec![0, 0]];
        assert!(FiniteCog::from_table_with_order(bad, vec![0, 1]).is_err());
        let g = FiniteCog::cyclic(3).unwrap();
        assert!(FiniteCog::from_table_with_order(g.mul_table().clone(), vec![0, 0, 1]).is_err());
    }

    #[test]
    fn element_orders() {
        let g = FiniteCog::cyclic(6).unwrap();
        assert_eq!(g.element_order(0), 1);
        assert_eq!(g.element_order(1), 6);
        assert_eq!(g.element_order(2), 3);
        assert_eq!(g.element_order(3), 2);
    }
}
