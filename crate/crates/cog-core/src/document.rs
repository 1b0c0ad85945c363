//! Structure description documents.
//!
//! JSON-shaped trees with a `kind` discriminant; rationals travel as reduced
//! "a/b" strings and no serialized value is ever floating point. The exact
//! grammar is documented in the repository README.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::angle::{IrrationalBasis, KAngle};
use crate::element::CogElement;
use crate::lex::LexVector;
use crate::{Budget, CoreError, FiniteCog, StdCog};

pub fn parse_ratio(s: &str) -> Result<BigRational, CoreError> {
    let bad = |_| CoreError::Document(format!("malformed rational {s:?}"));
    match s.split_once('/') {
        Some((num, den)) => {
            let n: BigInt = num.trim().parse().map_err(bad)?;
            let d: BigInt = den.trim().parse().map_err(bad)?;
            if d.is_zero() {
                return Err(CoreError::Document(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = s.trim().parse().map_err(bad)?;
            Ok(BigRational::from_integer(n))
        }
    }
}

pub fn format_ratio(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AngleDoc {
    pub q: String,
    #[serde(default)]
    pub coeffs: Vec<i64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ElementDoc {
    pub angle: AngleDoc,
    #[serde(default)]
    pub linear: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StructureDoc {
    FiniteCyclic {
        n: usize,
    },
    KSubgroup {
        generators: Vec<AngleDoc>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        basis: Option<Vec<u32>>,
    },
    LexProduct {
        base: Box<StructureDoc>,
        extra_dims: usize,
        /// When present, restricts to the subgroup these elements generate.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        generators: Option<Vec<ElementDoc>>,
    },
    FiniteGroup {
        cayley: Vec<Vec<usize>>,
        /// Representative cyclic order inducing the wound relation.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        order: Option<Vec<usize>>,
        /// Explicit relation triples (fixtures).
        #[serde(default, skip_serializing_if = "Option::is_none")]
        relation: Option<Vec<(usize, usize, usize)>>,
    },
}

/// A loaded structure; a bare Cayley table carries no cyclic order and is
/// only usable by the orderability operations.
#[derive(Clone, Debug)]
pub enum LoadedStructure {
    Finite(FiniteCog),
    Std(StdCog),
    RawGroup { cayley: Vec<Vec<usize>> },
}

impl AngleDoc {
    pub fn to_angle(&self, basis: &IrrationalBasis) -> Result<KAngle, CoreError> {
        let q = parse_ratio(&self.q)?;
        let mut coeffs: Vec<BigInt> = self.coeffs.iter().map(|&c| BigInt::from(c)).collect();
        if coeffs.len() > basis.len() {
            return Err(CoreError::Document(format!(
                "angle has {} irrational coefficients, basis has {}",
                coeffs.len(),
                basis.len()
            )));
        }
        coeffs.resize(basis.len(), BigInt::zero());
        KAngle::new(q, coeffs, basis.clone())
    }

    pub fn from_angle(a: &KAngle) -> AngleDoc {
        AngleDoc {
            q: format_ratio(a.rational_part()),
            coeffs: a
                .coeffs()
                .iter()
                .map(|c| {
                    use num_traits::ToPrimitive;
                    c.to_i64().expect("angle coefficient fits i64")
                })
                .collect(),
        }
    }
}

impl ElementDoc {
    pub fn to_element(
        &self,
        basis: &IrrationalBasis,
        dim: usize,
    ) -> Result<CogElement, CoreError> {
        let angle = self.angle.to_angle(basis)?;
        if self.linear.len() != dim {
            return Err(CoreError::Document(format!(
                "element has {} linear coordinates, structure has {dim}",
                self.linear.len()
            )));
        }
        let entries = self
            .linear
            .iter()
            .map(|s| parse_ratio(s))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CogElement::new(angle, LexVector::new(entries)))
    }

    pub fn from_element(e: &CogElement) -> ElementDoc {
        ElementDoc {
            angle: AngleDoc::from_angle(&e.angle),
            linear: e.linear.entries().iter().map(format_ratio).collect(),
        }
    }
}

impl StructureDoc {
    pub fn from_json(text: &str) -> Result<StructureDoc, CoreError> {
        serde_json::from_str(text).map_err(|e| CoreError::Document(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serialization")
    }

    pub fn load(&self) -> Result<LoadedStructure, CoreError> {
        match self {
            StructureDoc::FiniteCyclic { n } => Ok(LoadedStructure::Finite(FiniteCog::cyclic(*n)?)),
            StructureDoc::KSubgroup { generators, basis } => {
                let basis = match basis {
                    Some(r) => IrrationalBasis::new(r.clone())?,
                    None => IrrationalBasis::default_basis(),
                };
                let angles = generators
                    .iter()
                    .map(|a| a.to_angle(&basis))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(LoadedStructure::Std(StdCog::k_subgroup(angles)?))
            }
            StructureDoc::LexProduct {
                base,
                extra_dims,
                generators,
            } => {
                let base = match base.load()? {
                    LoadedStructure::Finite(f) => StdCog::from_finite(&f)?,
                    LoadedStructure::Std(s) => s,
                    LoadedStructure::RawGroup { .. } => {
                        return Err(CoreError::Document(
                            "lex_product base must carry a cyclic order".into(),
                        ))
                    }
                };
                let product = base.lex_product(*extra_dims);
                match generators {
                    None => Ok(LoadedStructure::Std(product)),
                    Some(docs) => {
                        let elems = docs
                            .iter()
                            .map(|d| d.to_element(product.basis(), product.dim()))
                            .collect::<Result<Vec<_>, _>>()?;
                        for e in &elems {
                            if !product.contains(e) {
                                return Err(CoreError::Document(format!(
                                    "generator {e} lies outside the ambient product"
                                )));
                            }
                        }
                        Ok(LoadedStructure::Std(product.subgroup(elems)?))
                    }
                }
            }
            StructureDoc::FiniteGroup {
                cayley,
                order,
                relation,
            } => match (order, relation) {
                (Some(_), Some(_)) => Err(CoreError::Document(
                    "finite_group takes at most one of order/relation".into(),
                )),
                (Some(ord), None) => Ok(LoadedStructure::Finite(
                    FiniteCog::from_table_with_order(cayley.clone(), ord.clone())?,
                )),
                (None, Some(triples)) => {
                    let set: BTreeSet<(usize, usize, usize)> = triples.iter().copied().collect();
                    Ok(LoadedStructure::Finite(FiniteCog::from_table_with_triples(
                        cayley.clone(),
                        set,
                    )?))
                }
                (None, None) => Ok(LoadedStructure::RawGroup {
                    cayley: cayley.clone(),
                }),
            },
        }
    }
}

impl LoadedStructure {
    /// The structure re-serialized in canonical form (used for digests).
    pub fn canonical_doc(&self) -> StructureDoc {
        match self {
            LoadedStructure::Finite(f) => StructureDoc::FiniteGroup {
                cayley: f.mul_table().clone(),
                order: f.window_positions().map(|pos| {
                    let mut order = vec![0usize; pos.len()];
                    for (elem, &p) in pos.iter().enumerate() {
                        order[p] = elem;
                    }
                    order
                }),
                relation: if f.window_positions().is_none() {
                    Some(f.relation_triples().into_iter().collect())
                } else {
                    None
                },
            },
            LoadedStructure::Std(s) => {
                if s.dim() == 0 {
                    StructureDoc::KSubgroup {
                        generators: s
                            .generators()
                            .iter()
                            .map(|g| AngleDoc::from_angle(&g.angle))
                            .collect(),
                        basis: Some(s.basis().radicands().to_vec()),
                    }
                } else {
                    StructureDoc::LexProduct {
                        base: Box::new(StructureDoc::KSubgroup {
                            generators: vec![],
                            basis: Some(s.basis().radicands().to_vec()),
                        }),
                        extra_dims: s.dim(),
                        generators: Some(
                            s.generators().iter().map(ElementDoc::from_element).collect(),
                        ),
                    }
                }
            }
            LoadedStructure::RawGroup { cayley } => StructureDoc::FiniteGroup {
                cayley: cayley.clone(),
                order: None,
                relation: None,
            },
        }
    }

    pub fn summary(&self) -> String {
        match self {
            LoadedStructure::Finite(f) => format!("finite c.o.g. of order {}", f.order()),
            LoadedStructure::Std(s) => format!(
                "f.g. subgroup of K x Q^{} with {} generators",
                s.dim(),
                s.generators().len()
            ),
            LoadedStructure::RawGroup { cayley } => {
                format!("finite group of order {} (no cyclic order)", cayley.len())
            }
        }
    }
}

/// The structure documents used throughout the test suites.
pub fn h_example_doc() -> StructureDoc {
    StructureDoc::LexProduct {
        base: Box::new(StructureDoc::FiniteCyclic { n: 3 }),
        extra_dims: 1,
        generators: Some(vec![ElementDoc {
            angle: AngleDoc {
                q: "1/3".into(),
                coeffs: vec![0, 0],
            },
            linear: vec!["1/1".into()],
        }]),
    }
}

/// H = ⟨(1/3, 1)⟩ inside (ℤ/3ℤ) ⃗× ℚ, the §3 running example.
pub fn h_example() -> StdCog {
    match h_example_doc().load().expect("h example") {
        LoadedStructure::Std(s) => s,
        _ => unreachable!(),
    }
}

/// The c.o. subgroup of 𝕂 generated by the default irrational angle.
pub fn irrational_circle_example() -> StdCog {
    StdCog::k_subgroup(vec![KAngle::sqrt2_minus_one()]).expect("irrational circle subgroup")
}

/// (ℤ/3ℤ) ⃗× ℚ presented on generators (1/3, 0) and (0, 1).
pub fn z3_lex_q_example() -> StdCog {
    StdCog::lex_product_finite(&FiniteCog::cyclic(3).expect("Z/3"), 1).expect("Z/3 x Q")
}

/// Default enumeration budget shared by the examples.
pub fn example_budget() -> Budget {
    Budget::default()
}
