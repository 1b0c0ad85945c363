//! Exact construction and evaluation of cyclically ordered groups.
//!
//! Structures live inside the lexicographic product 𝕂 ⃗× ℚ^d-lex of the
//! unit circle with a lexicographically ordered rational space: finite
//! cyclic orders, finitely generated circle subgroups and their products.
//! Arithmetic is exact throughout (rationals plus certified enclosures for
//! the designated irrational angles), so relation queries, axiom checks and
//! membership are decision procedures, not approximations.

mod angle;
mod axioms;
mod budget;
mod document;
mod element;
mod finite;
mod iso;
pub mod lattice;
mod lex;
mod predicates;
mod std_cog;
mod traits;

use thiserror::Error;

pub use angle::{circle_r, IrrationalBasis, KAngle};
pub use axioms::{
    check_axioms_finite, check_axioms_std, eval_r_finite, eval_r_std, AxiomReport, AxiomResult,
    CheckMode,
};
pub use budget::Budget;
pub use document::{
    example_budget, format_ratio, h_example, h_example_doc, irrational_circle_example,
    parse_ratio, z3_lex_q_example, AngleDoc, ElementDoc, LoadedStructure, StructureDoc,
};
pub use element::{lex_product_r, CogElement};
pub use finite::FiniteCog;
pub use iso::{find_cog_isomorphism, verify_cog_isomorphism};
pub use lex::LexVector;
pub use predicates::{
    c_abs, is_c_archimedean_finite, is_c_archimedean_std, is_linear_finite, is_linear_std,
    multiple, positive_cone_membership, ArchimedeanVerdict, LinearVerdict,
};
pub use std_cog::{StdCog, TorsionData, Winding};
pub use traits::{Cog, IntLine, Tog};

#[derive(Debug, Error)]
pub enum CoreError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid element: {0}")]
    InvalidElement(String),
    #[error("invalid basis: {0}")]
    InvalidBasis(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("document error: {0}")]
    Document(String),
}
