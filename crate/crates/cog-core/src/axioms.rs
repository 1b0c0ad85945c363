//! Checks of the cyclic order axioms R1–R5.
//!
//! Finite structures are checked exhaustively (quintuple compatibility too,
//! up to a size guard); infinite structures are checked over a bounded
//! deterministic sample with seeded random quintuples, and the report
//! records which mode ran.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::{Budget, Cog, CoreError, FiniteCog, StdCog};

/// Exhaustive R5 as long as n^5 stays below this.
const R5_EXHAUSTIVE_LIMIT: u128 = 400_000;
/// Element cap for sampled (infinite-carrier) axiom checks.
const SAMPLED_ELEMENT_CAP: usize = 16;

#[derive(Clone, Debug, Serialize)]
pub enum CheckMode {
    Exhaustive,
    Sampled { budget: Budget },
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomResult {
    pub name: &'static str,
    pub description: &'static str,
    pub pass: bool,
    pub checked: u64,
    /// Offending tuple, as element descriptions.
    pub counterexample: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub mode: CheckMode,
    pub elements_used: usize,
    pub r5_exhaustive: bool,
    pub axioms: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.axioms.iter().all(|a| a.pass)
    }

    pub fn result(&self, name: &str) -> Option<&AxiomResult> {
        self.axioms.iter().find(|a| a.name == name)
    }
}

fn check_on_sample<G: Cog>(
    g: &G,
    elems: &[G::Elem],
    mode: CheckMode,
    r5_exhaustive: bool,
    budget: &Budget,
) -> AxiomReport {
    let n = elems.len();
    let desc = |xs: &[&G::Elem]| xs.iter().map(|x| g.describe(x)).collect::<Vec<_>>();

    let mut r1 = AxiomResult {
        name: "R1",
        description: "strict: R(x,y,z) implies x,y,z pairwise distinct",
        pass: true,
        checked: 0,
        counterexample: None,
    };
    let mut r2 = AxiomResult {
        name: "R2",
        description: "total: pairwise distinct implies R(x,y,z) or R(x,z,y)",
        pass: true,
        checked: 0,
        counterexample: None,
    };
    let mut r3 = AxiomResult {
        name: "R3",
        description: "cyclic: R(x,y,z) implies R(y,z,x)",
        pass: true,
        checked: 0,
        counterexample: None,
    };
    for x in elems {
        for y in elems {
            for z in elems {
                let holds = g.r(x, y, z);
                r1.checked += 1;
                r2.checked += 1;
                r3.checked += 1;
                if holds && (x == y || y == z || z == x) && r1.pass {
                    r1.pass = false;
                    r1.counterexample = Some(desc(&[x, y, z]));
                }
                if x != y && y != z && z != x && !holds && !g.r(x, z, y) && r2.pass {
                    r2.pass = false;
                    r2.counterexample = Some(desc(&[x, y, z]));
                }
                if holds && !g.r(y, z, x) && r3.pass {
                    r3.pass = false;
                    r3.counterexample = Some(desc(&[x, y, z]));
                }
            }
        }
    }

    let mut r4 = AxiomResult {
        name: "R4",
        description: "transitive: R(x,y,z) and R(y,u,z) imply R(x,u,z)",
        pass: true,
        checked: 0,
        counterexample: None,
    };
    'r4: for x in elems {
        for y in elems {
            for z in elems {
                if !g.r(x, y, z) {
                    r4.checked += (n as u64).max(1);
                    continue;
                }
                for u in elems {
                    r4.checked += 1;
                    if g.r(y, u, z) && !g.r(x, u, z) {
                        r4.pass = false;
                        r4.counterexample = Some(desc(&[x, y, z, u]));
                        break 'r4;
                    }
                }
            }
        }
    }

    let mut r5 = AxiomResult {
        name: "R5",
        description: "compatible: R(x,y,z) implies R(uxv,uyv,uzv)",
        pass: true,
        checked: 0,
        counterexample: None,
    };
    if r5_exhaustive {
        'r5: for x in elems {
            for y in elems {
                for z in elems {
                    if !g.r(x, y, z) {
                        r5.checked += (n as u64 * n as u64).max(1);
                        continue;
                    }
                    for u in elems {
                        for v in elems {
                            r5.checked += 1;
                            let (a, b, c) = (
                                g.op(&g.op(u, x), v),
                                g.op(&g.op(u, y), v),
                                g.op(&g.op(u, z), v),
                            );
                            if !g.r(&a, &b, &c) {
                                r5.pass = false;
                                r5.counterexample = Some(desc(&[x, y, z, u, v]));
                                break 'r5;
                            }
                        }
                    }
                }
            }
        }
    } else if n > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
        for _ in 0..budget.samples {
            let pick = |rng: &mut ChaCha8Rng| elems[rng.gen_range(0..n)].clone();
            let (x, y, z, u, v) = (
                pick(&mut rng),
                pick(&mut rng),
                pick(&mut rng),
                pick(&mut rng),
                pick(&mut rng),
            );
            r5.checked += 1;
            if g.r(&x, &y, &z) {
                let (a, b, c) = (
                    g.op(&g.op(&u, &x), &v),
                    g.op(&g.op(&u, &y), &v),
                    g.op(&g.op(&u, &z), &v),
                );
                if !g.r(&a, &b, &c) {
                    r5.pass = false;
                    r5.counterexample = Some(desc(&[&x, &y, &z, &u, &v]));
                    break;
                }
            }
        }
    }

    AxiomReport {
        mode,
        elements_used: n,
        r5_exhaustive,
        axioms: vec![r1, r2, r3, r4, r5],
    }
}

/// Exhaustive check for finite structures.
pub fn check_axioms_finite(g: &FiniteCog, budget: &Budget) -> AxiomReport {
    let elems: Vec<usize> = (0..g.order()).collect();
    let n5 = (g.order() as u128).pow(5);
    check_on_sample(
        g,
        &elems,
        CheckMode::Exhaustive,
        n5 <= R5_EXHAUSTIVE_LIMIT,
        budget,
    )
}

/// Budget-bounded check over a finite sample of an infinite structure.
pub fn check_axioms_std(g: &StdCog, budget: &Budget) -> AxiomReport {
    let mut elems = g.elements(budget);
    elems.truncate(SAMPLED_ELEMENT_CAP.max(4));
    check_on_sample(
        g,
        &elems,
        CheckMode::Sampled {
            budget: budget.clone(),
        },
        false,
        budget,
    )
}

/// eval_R with the element-membership precondition enforced.
pub fn eval_r_finite(g: &FiniteCog, x: usize, y: usize, z: usize) -> Result<bool, CoreError> {
    g.check_element(x)?;
    g.check_element(y)?;
    g.check_element(z)?;
    Ok(g.r(&x, &y, &z))
}

pub fn eval_r_std(
    g: &StdCog,
    x: &crate::CogElement,
    y: &crate::CogElement,
    z: &crate::CogElement,
) -> Result<bool, CoreError> {
    g.check_element(x)?;
    g.check_element(y)?;
    g.check_element(z)?;
    Ok(g.r(x, y, z))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn cyclic_structures_pass() {
        for n in 1..=8 {
            let g = FiniteCog::cyclic(n).unwrap();
            let report = check_axioms_finite(&g, &Budget::default());
            assert!(report.all_pass(), "Z/{n} failed: {report:?}");
            assert!(report.r5_exhaustive);
        }
    }

    #[test]
    fn two_element_relation_vacuous() {
        let g = FiniteCog::cyclic(2).unwrap();
        let report = check_axioms_finite(&g, &Budget::default());
        assert!(report.all_pass());
    }

    #[test]
    fn broken_fixture_fails_r3() {
        let z4 = FiniteCog::cyclic(4).unwrap();
        let triples: BTreeSet<_> = [(0usize, 1usize, 2usize)].into_iter().collect();
        let g = FiniteCog::from_table_with_triples(z4.mul_table().clone(), triples).unwrap();
        let report = check_axioms_finite(&g, &Budget::default());
        assert!(!report.all_pass());
        let r3 = report.result("R3").unwrap();
        assert!(!r3.pass);
        assert_eq!(
            r3.counterexample,
            Some(vec!["0".into(), "1".into(), "2".into()])
        );
    }

    #[test]
    fn eval_r_rejects_foreign_elements() {
        let g = FiniteCog::cyclic(5).unwrap();
        assert!(eval_r_finite(&g, 4, 0, 1).unwrap());
        assert!(!eval_r_finite(&g, 1, 0, 4).unwrap());
        assert!(eval_r_finite(&g, 1, 0, 7).is_err());
    }

    #[test]
    fn sampled_check_on_std() {
        let g = StdCog::lex_product_finite(&FiniteCog::cyclic(3).unwrap(), 1).unwrap();
        let report = check_axioms_std(&g, &Budget::with_bound(2));
        assert!(report.all_pass(), "{report:?}");
        assert!(matches!(report.mode, CheckMode::Sampled { .. }));
    }
}
