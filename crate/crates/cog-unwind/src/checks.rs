//! Roundtrip, center and lexicographic-compatibility verifications for the
//! unwinding construction.

use std::cmp::Ordering;

use cog_core::{verify_cog_isomorphism, Cog, CoreError, FiniteCog, StdCog};
use serde::Serialize;

use crate::{unwind, wind_unwound, UnwoundElement, UnwoundGroup};

/// Witness that g ↦ class of (0, g) is an isomorphism G ≅ uw(G)/⟨z_G⟩.
#[derive(Clone, Debug, Serialize)]
pub struct RoundtripWitness {
    /// map[g] = index of (0,g) in the wound carrier.
    pub map: Vec<usize>,
    pub checked_pairs: u64,
    pub checked_triples: u64,
}

/// Remark 2.3(5): (uw(G), ≤_R)/⟨z_G⟩ ≅ (G, R), exhaustively on finite G.
pub fn verify_rieger_roundtrip(g: &FiniteCog) -> Result<RoundtripWitness, CoreError> {
    let uw = unwind(g.clone());
    let z = uw.z();
    let wound = wind_unwound(&uw, &z)?;
    if wound.order() != g.order() {
        return Err(CoreError::PreconditionViolation(format!(
            "wound carrier has order {}, base has {}",
            wound.order(),
            g.order()
        )));
    }
    // locate each class representative (0, g) in the wound window
    let window = uw.window(0, 0).expect("finite carrier");
    let map: Vec<usize> = (0..g.order())
        .map(|x| {
            window
                .iter()
                .position(|w| w.g == x)
                .expect("representative (0,g) in window")
        })
        .collect();
    verify_cog_isomorphism(g, &wound, &map).map_err(CoreError::PreconditionViolation)?;
    let n = g.order() as u64;
    Ok(RoundtripWitness {
        map,
        checked_pairs: n * n,
        checked_triples: n * n * n,
    })
}

/// Remark 2.3(6) for F = ℤ: uw(wind(ℤ, z)) ≅ ℤ with z ↦ z_G, verified
/// exhaustively over the integer window [-window, window].
pub fn verify_unwind_wind_int(z: i64, window: i64) -> Result<(), String> {
    if z <= 0 {
        return Err("z must be positive".into());
    }
    let wound = crate::wind_int(z).map_err(|e| e.to_string())?;
    let uw = unwind(wound);
    // m = qz + r with 0 <= r < z maps to (q, r)
    let embed = |m: i64| {
        let q = m.div_euclid(z);
        let r = m.rem_euclid(z);
        UnwoundElement::new(q, r as usize)
    };
    if embed(z) != uw.z() {
        return Err(format!("z = {z} does not map to z_G"));
    }
    for m1 in -window..=window {
        for m2 in -window..=window {
            let lhs = embed(m1 + m2);
            let rhs = uw.mul(&embed(m1), &embed(m2));
            if lhs != rhs {
                return Err(format!(
                    "product not preserved at ({m1}, {m2}): {:?} vs {:?}",
                    lhs, rhs
                ));
            }
            let ord_z = m1.cmp(&m2);
            let ord_uw = uw.cmp(&embed(m1), &embed(m2));
            if ord_z != ord_uw {
                return Err(format!("order not preserved at ({m1}, {m2})"));
            }
        }
        if uw.mul(&embed(m1), &uw.inv(&embed(m1))) != uw.identity_elem() {
            return Err(format!("inverse fails at {m1}"));
        }
    }
    Ok(())
}

#[derive(Clone, Debug, Serialize)]
pub struct CenterReport {
    pub window: i64,
    pub base_center: Vec<usize>,
    /// (k,g) commutes with every sampled (k',h) iff g is central (2.3(2)).
    pub commutation_matches_center: bool,
    /// Z(uw(G)) window representatives reduce to Z(G) mod ⟨z_G⟩.
    pub quotient_center_matches: bool,
    pub failures: Vec<String>,
}

/// Lemma 2.7 at window scale: Z(uw(G)) = uw(Z(G)).
pub fn uw_center_check(g: &FiniteCog, window: i64) -> CenterReport {
    let n = g.order();
    let base_center: Vec<usize> = (0..n)
        .filter(|&z| (0..n).all(|x| g.op(&z, &x) == g.op(&x, &z)))
        .collect();
    let uw = unwind(g.clone());
    let mut failures = Vec::new();
    let mut commutation_matches_center = true;
    for k in -window..=window {
        for x in 0..n {
            let a = UnwoundElement::new(k, x);
            let mut commutes_with_all = true;
            for k2 in -window..=window {
                for y in 0..n {
                    let b = UnwoundElement::new(k2, y);
                    let ab = uw.mul(&a, &b);
                    let ba = uw.mul(&b, &a);
                    let base_commutes = g.op(&x, &y) == g.op(&y, &x);
                    if (ab == ba) != base_commutes {
                        commutation_matches_center = false;
                        failures.push(format!(
                            "2.3(2) fails: ({k},{x}) vs ({k2},{y})"
                        ));
                    }
                    if ab != ba {
                        commutes_with_all = false;
                    }
                }
            }
            if commutes_with_all != base_center.contains(&x) {
                commutation_matches_center = false;
                failures.push(format!("center mismatch at ({k},{x})"));
            }
        }
    }
    // window reps of Z(uw(G)) are exactly (0, z) for z in Z(G)
    let quotient_center: Vec<usize> = (0..n)
        .filter(|&x| {
            let a = UnwoundElement::new(0, x);
            (0..n).all(|y| {
                let b = UnwoundElement::new(0, y);
                uw.mul(&a, &b) == uw.mul(&b, &a)
            })
        })
        .collect();
    let quotient_center_matches = quotient_center == base_center;
    CenterReport {
        window,
        base_center,
        commutation_matches_center,
        quotient_center_matches,
        failures,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LexCompatReport {
    pub pairs_checked: usize,
    pub product_preserved: bool,
    pub order_preserved: bool,
    pub identity_preserved: bool,
    pub failures: Vec<String>,
}

/// Remark 2.3(7): uw(G ⃗× H) = uw(G) ⃗× H for H = ℚ^extra_dims, checked on
/// sampled elements under the canonical identification
/// (k, (g, h)) ↔ ((k, g), h).
pub fn uw_lex_compat_check(
    base: &FiniteCog,
    extra_dims: usize,
    budget: &cog_core::Budget,
) -> Result<LexCompatReport, CoreError> {
    let n = base.order() as i64;
    let product = StdCog::lex_product_finite(base, extra_dims)?;
    let uw_left = unwind(product.clone());
    let uw_right = unwind(StdCog::from_finite(base)?);

    // decompose a product element into its base rank and lex tail
    let rank_of = |e: &cog_core::CogElement| -> i64 {
        let q = e.angle.rational_part();
        let scaled = q * num_rational::BigRational::from_integer(n.into());
        num_traits::ToPrimitive::to_i64(&scaled.to_integer()).expect("small rank")
    };

    let sample = product.elements(budget);
    let ks = [-2i64, -1, 0, 1, 2];
    let mut pairs = Vec::new();
    for (i, a) in sample.iter().enumerate() {
        for (j, b) in sample.iter().enumerate() {
            let ka = ks[(i + j) % ks.len()];
            let kb = ks[(i * 3 + j) % ks.len()];
            pairs.push((
                UnwoundElement::new(ka, a.clone()),
                UnwoundElement::new(kb, b.clone()),
            ));
        }
    }

    // ((k, g), h) with lexicographic order and componentwise product.
    // The uw window [e, z) wraps the elements (e, h) with h < 0 above the
    // positives, so the canonical identification shifts those by one z.
    type RightElem = (UnwoundElement<cog_core::CogElement>, cog_core::LexVector);
    let ident = |x: &UnwoundElement<cog_core::CogElement>| -> RightElem {
        let rank = rank_of(&x.g);
        let wrapped = rank == 0 && !x.g.linear.is_zero() && !x.g.linear.is_positive();
        let base_angle = cog_core::KAngle::rational_in(
            num_rational::BigRational::new(rank.into(), n.into()),
            product.basis(),
        );
        let base_part = cog_core::CogElement::new(base_angle, cog_core::LexVector::zero(0));
        (
            UnwoundElement::new(if wrapped { x.k + 1 } else { x.k }, base_part),
            x.g.linear.clone(),
        )
    };
    let right_mul = |a: &RightElem, b: &RightElem| -> RightElem {
        (uw_right.mul(&a.0, &b.0), a.1.add(&b.1))
    };
    let right_cmp = |a: &RightElem, b: &RightElem| -> Ordering {
        uw_right.cmp(&a.0, &b.0).then_with(|| a.1.cmp(&b.1))
    };

    let mut report = LexCompatReport {
        pairs_checked: pairs.len(),
        product_preserved: true,
        order_preserved: true,
        identity_preserved: ident(&uw_left.identity_elem())
            == (uw_right.identity_elem(), cog_core::LexVector::zero(extra_dims)),
        failures: Vec::new(),
    };
    for (a, b) in &pairs {
        let lhs = ident(&uw_left.mul(a, b));
        let rhs = right_mul(&ident(a), &ident(b));
        if lhs != rhs {
            report.product_preserved = false;
            report.failures.push(format!(
                "product differs at {} * {}",
                uw_left.describe(a),
                uw_left.describe(b)
            ));
        }
        let ord_left = uw_left.cmp(a, b);
        let ord_right = right_cmp(&ident(a), &ident(b));
        if ord_left != ord_right {
            report.order_preserved = false;
            report.failures.push(format!(
                "order differs at {} vs {}",
                uw_left.describe(a),
                uw_left.describe(b)
            ));
        }
    }
    Ok(report)
}

/// Lemma 2.5(1): an embedding G ↪ G' induces uw(G) ↪ uw(G') on windows,
/// preserving product, order, and z_G ↦ z_{G'}.
pub fn check_substructure_functoriality(
    small: &FiniteCog,
    big: &FiniteCog,
    embed: &[usize],
    window: i64,
) -> Result<(), String> {
    let ns = small.order();
    if embed.len() != ns {
        return Err("embedding map has wrong length".into());
    }
    // relation- and product-preserving injection
    for x in 0..ns {
        for y in 0..ns {
            if embed[small.op(&x, &y)] != big.op(&embed[x], &embed[y]) {
                return Err(format!("not a homomorphism at ({x},{y})"));
            }
            for z in 0..ns {
                if small.r(&x, &y, &z) != big.r(&embed[x], &embed[y], &embed[z]) {
                    return Err(format!("relation not preserved at ({x},{y},{z})"));
                }
            }
        }
    }
    let uw_s = unwind(small.clone());
    let uw_b = unwind(big.clone());
    let lift = |x: &UnwoundElement<usize>| UnwoundElement::new(x.k, embed[x.g]);
    if lift(&uw_s.z()) != uw_b.z() {
        return Err("z_G does not map to z_G'".into());
    }
    for k1 in -window..=window {
        for g1 in 0..ns {
            for k2 in -window..=window {
                for g2 in 0..ns {
                    let a = UnwoundElement::new(k1, g1);
                    let b = UnwoundElement::new(k2, g2);
                    if lift(&uw_s.mul(&a, &b)) != uw_b.mul(&lift(&a), &lift(&b)) {
                        return Err(format!(
                            "uw product not preserved at ({k1},{g1})*({k2},{g2})"
                        ));
                    }
                    if uw_s.cmp(&a, &b) != uw_b.cmp(&lift(&a), &lift(&b)) {
                        return Err(format!(
                            "uw order not preserved at ({k1},{g1}) vs ({k2},{g2})"
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}
