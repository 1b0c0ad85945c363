//! Finitely generated Abelian c.o.g. presented inside 𝕂 ⃗× ℚ^d-lex.
//!
//! Elements are integer combinations of the generators, so membership,
//! torsion data and angle-kernel subgroups are exact integer lattice
//! problems; enumeration for sampled checks is budget-bounded.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::angle::{IrrationalBasis, KAngle};
use crate::element::{lex_product_r, CogElement};
use crate::lattice::{self, Matrix};
use crate::lex::LexVector;
use crate::{Budget, Cog, CoreError, FiniteCog};

#[derive(Clone, Debug)]
pub struct StdCog {
    dim: usize,
    basis: IrrationalBasis,
    generators: Vec<CogElement>,
    budget: Budget,
}

/// Isomorphism type of the winding part K(G) = π₁(G).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Winding {
    Finite(BigInt),
    Infinite,
}

/// Torsion subgroup data: T(G) is cyclic for finitely generated G.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionData {
    pub order: BigInt,
    pub generator: CogElement,
}

fn lcm_denominators<'a>(xs: impl Iterator<Item = &'a BigRational>) -> BigInt {
    let mut l = BigInt::one();
    for x in xs {
        l = l.lcm(x.denom());
    }
    l
}

/// Generator of the subgroup of ℚ/ℤ generated by the values a_j / level:
/// returns (subgroup order, combination attaining the generator).
fn cyclic_subgroup_of_q_mod_z(numerators: &[BigInt], level: &BigInt) -> (BigInt, Vec<BigInt>) {
    let mut g = level.clone();
    let mut combo = vec![BigInt::zero(); numerators.len()];
    for (j, a) in numerators.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let ext = g.extended_gcd(a);
        // ext.gcd = ext.x * g + ext.y * a
        for c in combo.iter_mut() {
            *c *= &ext.x;
        }
        combo[j] += &ext.y;
        g = ext.gcd;
    }
    (level / &g, combo)
}

impl StdCog {
    pub fn new(
        dim: usize,
        generators: Vec<CogElement>,
        basis: IrrationalBasis,
        budget: Budget,
    ) -> Result<StdCog, CoreError> {
        for g in &generators {
            if g.angle.basis() != &basis {
                return Err(CoreError::InvalidBasis(
                    "generator uses a different irrational basis".into(),
                ));
            }
            if g.linear.dim() != dim {
                return Err(CoreError::InvalidArgument(format!(
                    "generator has linear dimension {}, structure has {}",
                    g.linear.dim(),
                    dim
                )));
            }
        }
        Ok(StdCog {
            dim,
            basis,
            generators,
            budget,
        })
    }

    pub fn trivial(dim: usize) -> StdCog {
        StdCog {
            dim,
            basis: IrrationalBasis::default_basis(),
            generators: vec![],
            budget: Budget::default(),
        }
    }

    /// Subgroup of 𝕂 generated by the given angles (d = 0).
    pub fn k_subgroup(angles: Vec<KAngle>) -> Result<StdCog, CoreError> {
        let basis = angles
            .first()
            .map(|a| a.basis().clone())
            .unwrap_or_else(IrrationalBasis::default_basis);
        let generators = angles
            .into_iter()
            .map(|a| CogElement::new(a, LexVector::zero(0)))
            .collect();
        StdCog::new(0, generators, basis, Budget::default())
    }

    /// Re-present a finite cyclic structure inside 𝕂 via its window order.
    pub fn from_finite(base: &FiniteCog) -> Result<StdCog, CoreError> {
        let n = base.order();
        let positions = base.window_positions().ok_or_else(|| {
            CoreError::InvalidArgument(
                "finite structure with explicit relation has no canonical embedding".into(),
            )
        })?;
        let e = base.identity_index();
        let rank = |x: usize| (positions[x] + n - positions[e]) % n;
        // the winding rank must be additive for a genuine c.o.g.
        for a in 0..n {
            for b in 0..n {
                if rank(base.mul_table()[a][b]) != (rank(a) + rank(b)) % n {
                    return Err(CoreError::InvalidArgument(
                        "window order is not compatible with the group law".into(),
                    ));
                }
            }
        }
        let gen_angle = KAngle::rational(BigRational::new(BigInt::one(), BigInt::from(n)));
        StdCog::k_subgroup(if n == 1 { vec![] } else { vec![gen_angle] })
    }

    /// C ⃗× ℚ^extra: appends `extra` fresh lex coordinates (less significant
    /// than the existing ones) with unit generators.
    pub fn lex_product(&self, extra: usize) -> StdCog {
        let dim = self.dim + extra;
        let mut generators: Vec<CogElement> = self
            .generators
            .iter()
            .map(|g| {
                let mut entries = g.linear.entries().to_vec();
                entries.extend(std::iter::repeat(BigRational::zero()).take(extra));
                CogElement::new(g.angle.clone(), LexVector::new(entries))
            })
            .collect();
        for i in 0..extra {
            generators.push(CogElement::new(
                KAngle::zero_in(&self.basis),
                LexVector::unit(dim, self.dim + i),
            ));
        }
        StdCog {
            dim,
            basis: self.basis.clone(),
            generators,
            budget: self.budget.clone(),
        }
    }

    pub fn lex_product_finite(base: &FiniteCog, extra: usize) -> Result<StdCog, CoreError> {
        Ok(StdCog::from_finite(base)?.lex_product(extra))
    }

    /// Restrict to the subgroup generated by the given elements (they must
    /// already live in the ambient product).
    pub fn subgroup(&self, generators: Vec<CogElement>) -> Result<StdCog, CoreError> {
        StdCog::new(
            self.dim,
            generators,
            self.basis.clone(),
            self.budget.clone(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> &IrrationalBasis {
        &self.basis
    }

    pub fn generators(&self) -> &[CogElement] {
        &self.generators
    }

    pub fn default_budget(&self) -> &Budget {
        &self.budget
    }

    pub fn set_default_budget(&mut self, budget: Budget) {
        self.budget = budget;
    }

    pub fn identity_elem(&self) -> CogElement {
        CogElement::new(KAngle::zero_in(&self.basis), LexVector::zero(self.dim))
    }

    pub fn combination(&self, coeffs: &[BigInt]) -> CogElement {
        assert_eq!(coeffs.len(), self.generators.len());
        let mut acc = self.identity_elem();
        for (c, g) in coeffs.iter().zip(&self.generators) {
            acc = acc.add(&g.scale(c));
        }
        acc
    }

    /// Integer linear system expressing "x is a combination of the
    /// generators": unknowns are the m coefficients plus one wrap variable
    /// for the rational angle congruence mod 1.
    fn membership_system(&self, x: &CogElement) -> (Matrix, Vec<BigInt>) {
        let m = self.generators.len();
        let b = self.basis.len();
        let mut rows: Matrix = Vec::new();
        let mut rhs: Vec<BigInt> = Vec::new();
        // irrational coefficients, exact over ℤ
        for j in 0..b {
            let mut row: Vec<BigInt> = self
                .generators
                .iter()
                .map(|g| g.angle.coeffs()[j].clone())
                .collect();
            row.push(BigInt::zero());
            rows.push(row);
            rhs.push(x.angle.coeffs()[j].clone());
        }
        // rational angle part mod 1, scaled to a common denominator
        let level = lcm_denominators(
            self.generators
                .iter()
                .map(|g| g.angle.rational_part())
                .chain(std::iter::once(x.angle.rational_part())),
        );
        let scale = |q: &BigRational| (q * BigRational::from_integer(level.clone())).to_integer();
        let mut row: Vec<BigInt> = self
            .generators
            .iter()
            .map(|g| scale(g.angle.rational_part()))
            .collect();
        row.push(level.clone());
        rows.push(row);
        rhs.push(scale(x.angle.rational_part()));
        // linear coordinates
        for j in 0..self.dim {
            let d = lcm_denominators(
                self.generators
                    .iter()
                    .map(|g| &g.linear.entries()[j])
                    .chain(std::iter::once(&x.linear.entries()[j])),
            );
            let scale = |q: &BigRational| (q * BigRational::from_integer(d.clone())).to_integer();
            let mut row: Vec<BigInt> = self
                .generators
                .iter()
                .map(|g| scale(&g.linear.entries()[j]))
                .collect();
            row.push(BigInt::zero());
            rows.push(row);
            rhs.push(scale(&x.linear.entries()[j]));
        }
        let _ = m;
        (rows, rhs)
    }

    /// Exact membership: coefficients expressing x over the generators.
    pub fn member_coords(&self, x: &CogElement) -> Option<Vec<BigInt>> {
        if x.angle.basis() != &self.basis || x.linear.dim() != self.dim {
            return None;
        }
        let (rows, rhs) = self.membership_system(x);
        lattice::solve(&rows, &rhs).map(|mut sol| {
            sol.truncate(self.generators.len());
            sol
        })
    }

    pub fn contains(&self, x: &CogElement) -> bool {
        self.member_coords(x).is_some()
    }

    pub fn check_element(&self, x: &CogElement) -> Result<(), CoreError> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(CoreError::InvalidElement(format!(
                "{x} is not a generator combination"
            )))
        }
    }

    /// Deterministic budget-bounded enumeration: all coefficient vectors in
    /// [-B, B]^m (B shrunk if the box would explode), deduplicated, sorted
    /// nearest-to-identity first by total coefficient weight.
    pub fn elements(&self, budget: &Budget) -> Vec<CogElement> {
        let m = self.generators.len();
        if m == 0 {
            return vec![self.identity_elem()];
        }
        const BOX_LIMIT: f64 = 250_000.0;
        let mut bound = budget.coeff_bound.max(1);
        while m as f64 * ((2 * bound + 1) as f64).powi(m as i32) > BOX_LIMIT && bound > 1 {
            bound -= 1;
        }
        let mut seen: BTreeMap<CogElement, u64> = BTreeMap::new();
        let mut coeffs = vec![-bound; m];
        loop {
            let elem = self.combination(
                &coeffs.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>(),
            );
            let weight: u64 = coeffs.iter().map(|c| c.unsigned_abs()).sum();
            match seen.get(&elem) {
                Some(w) if *w <= weight => {}
                _ => {
                    seen.insert(elem, weight);
                }
            }
            // odometer
            let mut i = 0;
            loop {
                if i == m {
                    // nearest-to-identity first, ties by canonical element order
                    let mut out: Vec<(CogElement, u64)> = seen.into_iter().collect();
                    out.sort_by(|(ea, wa), (eb, wb)| wa.cmp(wb).then_with(|| ea.cmp(eb)));
                    out.truncate(budget.max_elements);
                    return out.into_iter().map(|(e, _)| e).collect();
                }
                if coeffs[i] < bound {
                    coeffs[i] += 1;
                    break;
                }
                coeffs[i] = -bound;
                i += 1;
            }
        }
    }

    /// Whether the generated group is finite (all generators torsion).
    pub fn is_finite_group(&self) -> bool {
        self.generators
            .iter()
            .all(|g| g.angle.is_torsion() && g.linear.is_zero())
    }

    /// Materialize a finite structure: carrier sorted by circle position
    /// (identity first), wound relation, multiplication by position lookup.
    pub fn try_materialize_finite(&self) -> Option<(FiniteCog, Vec<CogElement>)> {
        if !self.is_finite_group() {
            return None;
        }
        // closure of the generators under addition
        let mut elems: Vec<CogElement> = vec![self.identity_elem()];
        loop {
            let mut grew = false;
            let snapshot = elems.clone();
            for g in &self.generators {
                for x in &snapshot {
                    let y = x.add(g);
                    if !elems.contains(&y) {
                        elems.push(y);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
            if elems.len() > 4096 {
                return None;
            }
        }
        elems.sort();
        let n = elems.len();
        let index =
            |x: &CogElement| elems.iter().position(|y| y == x).expect("closed carrier");
        let mul: Vec<Vec<usize>> = elems
            .iter()
            .map(|a| elems.iter().map(|b| index(&a.add(b))).collect())
            .collect();
        let order: Vec<usize> = (0..n).collect();
        let fin = FiniteCog::from_table_with_order(mul, order).ok()?;
        Some((fin, elems))
    }

    // ---- lattice-level invariants ----------------------------------------

    /// Columns are generator coefficient vectors over the irrational basis.
    fn coeff_rows(&self) -> Matrix {
        (0..self.basis.len())
            .map(|j| {
                self.generators
                    .iter()
                    .map(|g| g.angle.coeffs()[j].clone())
                    .collect()
            })
            .collect()
    }

    /// Rows constraining the linear part to zero on the first `prefix`
    /// coordinates (scaled to integers).
    fn linear_rows(&self, prefix: usize) -> Matrix {
        (0..prefix)
            .map(|j| {
                let d = lcm_denominators(self.generators.iter().map(|g| &g.linear.entries()[j]));
                self.generators
                    .iter()
                    .map(|g| {
                        (&g.linear.entries()[j] * BigRational::from_integer(d.clone()))
                            .to_integer()
                    })
                    .collect()
            })
            .collect()
    }

    /// Row forcing the rational angle to vanish mod 1 (with wrap column).
    fn rational_row(&self) -> (Vec<BigInt>, BigInt) {
        let level = lcm_denominators(self.generators.iter().map(|g| g.angle.rational_part()));
        let row = self
            .generators
            .iter()
            .map(|g| {
                (g.angle.rational_part() * BigRational::from_integer(level.clone())).to_integer()
            })
            .collect();
        (row, level)
    }

    /// Generators of {x ∈ G : angle(x) = 0 and linear₁..linear_prefix = 0}.
    /// prefix = 0 gives the angle kernel, i.e. the linear part G₀.
    pub fn kernel_elements(&self, prefix: usize) -> Vec<CogElement> {
        let m = self.generators.len();
        if m == 0 {
            return vec![];
        }
        let mut rows = self.coeff_rows();
        for row in rows.iter_mut() {
            row.push(BigInt::zero());
        }
        let (mut qrow, level) = self.rational_row();
        qrow.push(level);
        rows.push(qrow);
        for mut row in self.linear_rows(prefix) {
            row.push(BigInt::zero());
            rows.push(row);
        }
        let kern = lattice::kernel(&rows);
        let projected: Vec<Vec<BigInt>> = kern
            .into_iter()
            .map(|mut v| {
                v.truncate(m);
                v
            })
            .collect();
        let basis = lattice::lattice_basis(&projected);
        basis
            .into_iter()
            .map(|k| self.combination(&k))
            .filter(|e| !e.is_identity())
            .collect()
    }

    /// The torsion subgroup T(G): elements with zero linear part and torsion
    /// angle. Cyclic since G is finitely generated.
    pub fn torsion(&self) -> TorsionData {
        let m = self.generators.len();
        if m == 0 {
            return TorsionData {
                order: BigInt::one(),
                generator: self.identity_elem(),
            };
        }
        // combinations killing the irrational coefficients and linear part
        let mut rows = self.coeff_rows();
        rows.extend(self.linear_rows(self.dim));
        if rows.is_empty() {
            rows.push(vec![BigInt::zero(); m]);
        }
        let kern = lattice::kernel(&rows);
        if kern.is_empty() {
            return TorsionData {
                order: BigInt::one(),
                generator: self.identity_elem(),
            };
        }
        let level = lcm_denominators(self.generators.iter().map(|g| g.angle.rational_part()));
        let numerators: Vec<BigInt> = kern
            .iter()
            .map(|k| {
                let mut acc = BigRational::zero();
                for (c, g) in k.iter().zip(&self.generators) {
                    acc += g.angle.rational_part() * BigRational::from_integer(c.clone());
                }
                let scaled = (acc * BigRational::from_integer(level.clone())).to_integer();
                scaled.mod_floor(&level)
            })
            .collect();
        let (order, combo) = cyclic_subgroup_of_q_mod_z(&numerators, &level);
        let mut coeffs = vec![BigInt::zero(); m];
        for (c, k) in combo.iter().zip(&kern) {
            for (acc, ki) in coeffs.iter_mut().zip(k) {
                *acc += c * ki;
            }
        }
        TorsionData {
            order,
            generator: self.combination(&coeffs),
        }
    }

    /// Isomorphism type of the winding part K(G).
    pub fn winding(&self) -> Winding {
        let all_torsion = self
            .generators
            .iter()
            .all(|g| g.angle.is_torsion());
        if !all_torsion {
            return Winding::Infinite;
        }
        let level = lcm_denominators(self.generators.iter().map(|g| g.angle.rational_part()));
        let numerators: Vec<BigInt> = self
            .generators
            .iter()
            .map(|g| {
                (g.angle.rational_part() * BigRational::from_integer(level.clone()))
                    .to_integer()
                    .mod_floor(&level)
            })
            .collect();
        let (order, _) = cyclic_subgroup_of_q_mod_z(&numerators, &level);
        Winding::Finite(order)
    }

    /// T(K(G)): order of the torsion part of the winding group, plus an
    /// element of G whose angle generates it.
    pub fn winding_torsion(&self) -> (BigInt, CogElement) {
        let m = self.generators.len();
        if m == 0 {
            return (BigInt::one(), self.identity_elem());
        }
        // combinations whose angle has no irrational component
        let mut rows = self.coeff_rows();
        if rows.is_empty() {
            rows.push(vec![BigInt::zero(); m]);
        }
        let kern = lattice::kernel(&rows);
        if kern.is_empty() {
            return (BigInt::one(), self.identity_elem());
        }
        let level = lcm_denominators(self.generators.iter().map(|g| g.angle.rational_part()));
        let numerators: Vec<BigInt> = kern
            .iter()
            .map(|k| {
                let mut acc = BigRational::zero();
                for (c, g) in k.iter().zip(&self.generators) {
                    acc += g.angle.rational_part() * BigRational::from_integer(c.clone());
                }
                (acc * BigRational::from_integer(level.clone()))
                    .to_integer()
                    .mod_floor(&level)
            })
            .collect();
        let (order, combo) = cyclic_subgroup_of_q_mod_z(&numerators, &level);
        let mut coeffs = vec![BigInt::zero(); m];
        for (c, k) in combo.iter().zip(&kern) {
            for (acc, ki) in coeffs.iter_mut().zip(k) {
                *acc += c * ki;
            }
        }
        (order, self.combination(&coeffs))
    }

    /// Elements x₁..x_m whose angle classes form a basis of the free part
    /// of K(G) (nonzero only when some generator has irrational angle).
    pub fn free_winding_gens(&self) -> Vec<CogElement> {
        let m = self.generators.len();
        if m == 0 || self.basis.is_empty() {
            return vec![];
        }
        let cols: Vec<Vec<BigInt>> = self
            .generators
            .iter()
            .map(|g| g.angle.coeffs().to_vec())
            .collect();
        let image_basis = lattice::lattice_basis(&cols);
        let rows = self.coeff_rows();
        image_basis
            .iter()
            .filter_map(|h| lattice::solve(&rows, h))
            .map(|k| self.combination(&k))
            .collect()
    }
}

impl Cog for StdCog {
    type Elem = CogElement;

    fn identity(&self) -> CogElement {
        self.identity_elem()
    }

    fn op(&self, a: &CogElement, b: &CogElement) -> CogElement {
        a.add(b)
    }

    fn inv(&self, a: &CogElement) -> CogElement {
        a.neg()
    }

    fn r(&self, x: &CogElement, y: &CogElement, z: &CogElement) -> bool {
        lex_product_r(x, y, z)
    }

    fn carrier(&self) -> Option<Vec<CogElement>> {
        None
    }

    fn sample(&self, budget: &Budget) -> Vec<CogElement> {
        self.elements(budget)
    }

    fn describe(&self, a: &CogElement) -> String {
        a.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn h_structure() -> StdCog {
        // H = ⟨(1/3, 1)⟩ inside (ℤ/3ℤ) ⃗× ℚ
        let g = CogElement::new(
            KAngle::rational(ratio(1, 3)),
            LexVector::new(vec![ratio(1, 1)]),
        );
        StdCog::new(
            1,
            vec![g],
            IrrationalBasis::default_basis(),
            Budget::default(),
        )
        .unwrap()
    }

    #[test]
    fn k_subgroup_of_thirds_is_z3() {
        let g = StdCog::k_subgroup(vec![KAngle::rational(ratio(1, 3))]).unwrap();
        let (fin, elems) = g.try_materialize_finite().unwrap();
        assert_eq!(fin.order(), 3);
        assert_eq!(elems.len(), 3);
        let z3 = FiniteCog::cyclic(3).unwrap();
        assert_eq!(fin.relation_triples(), z3.relation_triples());
        assert_eq!(fin.mul_table(), z3.mul_table());
    }

    #[test]
    fn empty_generation_is_trivial() {
        let g = StdCog::k_subgroup(vec![]).unwrap();
        let (fin, _) = g.try_materialize_finite().unwrap();
        assert_eq!(fin.order(), 1);
        assert_eq!(g.elements(&Budget::default()).len(), 1);
    }

    #[test]
    fn sqrt2_generator_is_torsion_free() {
        let g = StdCog::k_subgroup(vec![KAngle::sqrt2_minus_one()]).unwrap();
        assert!(g.try_materialize_finite().is_none());
        let id = g.identity_elem();
        for k in 1..=32i64 {
            assert_ne!(g.generators()[0].scale(&BigInt::from(k)), id, "at k = {k}");
        }
        assert_eq!(g.winding(), Winding::Infinite);
        assert_eq!(g.torsion().order, BigInt::one());
    }

    #[test]
    fn membership_is_exact() {
        let h = h_structure();
        let g = h.generators()[0].clone();
        assert!(h.contains(&g.scale(&BigInt::from(5))));
        assert!(h.contains(&g.scale(&BigInt::from(-7))));
        // (0, 1) is not in H: its membership would need k ≡ 0 mod 3 and k = 1
        let outsider = CogElement::new(
            KAngle::zero(),
            LexVector::new(vec![ratio(1, 1)]),
        );
        assert!(!h.contains(&outsider));
        assert!(h.contains(&CogElement::new(
            KAngle::zero(),
            LexVector::new(vec![ratio(3, 1)]),
        )));
    }

    #[test]
    fn membership_matches_brute_force() {
        let g = StdCog::lex_product_finite(&FiniteCog::cyclic(3).unwrap(), 1).unwrap();
        let sample = g.elements(&Budget::with_bound(3));
        for x in &sample {
            assert!(g.contains(x), "{x} enumerated but not a member");
        }
    }

    #[test]
    fn torsion_of_h_is_trivial_and_of_product_is_z3() {
        let h = h_structure();
        assert_eq!(h.torsion().order, BigInt::one());
        assert_eq!(h.winding(), Winding::Finite(BigInt::from(3)));
        let (wt_order, x0) = h.winding_torsion();
        assert_eq!(wt_order, BigInt::from(3));
        assert!(!x0.angle.is_zero());

        let g = StdCog::lex_product_finite(&FiniteCog::cyclic(3).unwrap(), 1).unwrap();
        let t = g.torsion();
        assert_eq!(t.order, BigInt::from(3));
        assert!(t.generator.linear.is_zero());
        assert_eq!(t.generator.angle.torsion_order(), Some(BigInt::from(3)));
    }

    #[test]
    fn linear_part_kernels() {
        let h = h_structure();
        let g0 = h.kernel_elements(0);
        assert_eq!(g0.len(), 1);
        // G₀ = ⟨(0, 3)⟩
        assert!(g0[0].angle.is_zero());
        let v = g0[0].linear.entries()[0].clone();
        assert!(v == ratio(3, 1) || v == ratio(-3, 1));
        // killing the only coordinate leaves nothing
        assert!(h.kernel_elements(1).is_empty());
    }

    #[test]
    fn enumeration_is_deterministic_and_weight_sorted() {
        let h = h_structure();
        let a = h.elements(&Budget::with_bound(4));
        let b = h.elements(&Budget::with_bound(4));
        assert_eq!(a, b);
        assert_eq!(a.len(), 9);
        assert_eq!(a[0], h.identity_elem());
    }
}
