//! Enumeration budgets for bounded checks over infinite structures.
//!
//! Every definite verdict over an infinite carrier either carries a finite
//! witness or records the budget it was sampled under.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Generator coefficients range over [-coeff_bound, coeff_bound].
    pub coeff_bound: i64,
    /// Cap on the enumerated element sample, nearest-to-identity first.
    pub max_elements: usize,
    /// Number of seeded random tuples for sampled compatibility checks.
    pub samples: usize,
    pub seed: u64,
}

impl Budget {
    pub fn with_bound(coeff_bound: i64) -> Self {
        Budget {
            coeff_bound,
            ..Budget::default()
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            coeff_bound: 16,
            max_elements: 128,
            samples: 200,
            seed: 0xC0607,
        }
    }
}
