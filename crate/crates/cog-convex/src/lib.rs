//! c-convex subgroup machinery: recognition with certificates, the linear
//! part G₀, inclusion chains, purity, and quotient cyclic orders.

mod convexity;
mod purity;
mod quotient;
mod subgroups;

pub use convexity::{
    c_convex_chain, convex_filtration_std, is_c_convex_finite, is_c_convex_std,
    linear_part_finite, linear_part_std, order_n_subgroup_count,
    smallest_c_convex_containing_finite, smallest_c_convex_containing_std, ChainReport,
    CheckScope, ConvexCertificate, ConvexityVerdict,
};
pub use purity::{divisible_in_std, is_pure_finite, is_pure_std, PurityVerdict, PurityWitness};
pub use quotient::{quotient_finite, quotient_std, FiniteQuotient, QuotientChecks, StdQuotient};
pub use subgroups::{
    all_subgroups, is_subgroup, std_subgroup_contains, std_subgroup_equal, subgroup_closure,
    verify_std_subgroup,
};
