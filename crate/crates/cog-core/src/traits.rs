//! Structure traits shared across the workbench.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::Budget;

/// A cyclically ordered group presented as an element algebra: group
/// operations plus the ternary relation. Values are immutable; operations
/// never mutate the structure.
pub trait Cog {
    type Elem: Clone + Eq + Ord + fmt::Debug;

    fn identity(&self) -> Self::Elem;
    fn op(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    /// The ternary relation R(x, y, z).
    fn r(&self, x: &Self::Elem, y: &Self::Elem, z: &Self::Elem) -> bool;

    /// The full carrier when it can be listed exactly, None otherwise.
    fn carrier(&self) -> Option<Vec<Self::Elem>>;

    /// Deterministic finite sample for bounded checks; equals the carrier
    /// on finite structures.
    fn sample(&self, budget: &Budget) -> Vec<Self::Elem>;

    fn describe(&self, a: &Self::Elem) -> String;

    fn pow(&self, a: &Self::Elem, n: &BigInt) -> Self::Elem {
        if n.is_negative() {
            return self.pow(&self.inv(a), &-n);
        }
        let mut acc = self.identity();
        let mut base = a.clone();
        let mut k = n.clone();
        let two = BigInt::from(2);
        while k.is_positive() {
            if (&k % &two) == BigInt::from(1) {
                acc = self.op(&acc, &base);
            }
            base = self.op(&base, &base);
            k /= &two;
        }
        acc
    }

    fn pow_i64(&self, a: &Self::Elem, n: i64) -> Self::Elem {
        self.pow(a, &BigInt::from(n))
    }
}

/// A totally ordered group.
pub trait Tog {
    type Elem: Clone + Eq + fmt::Debug;

    fn identity(&self) -> Self::Elem;
    fn op(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn cmp_elems(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering;

    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.cmp_elems(a, b) != Ordering::Greater
    }

    fn is_positive(&self, a: &Self::Elem) -> bool {
        self.cmp_elems(&self.identity(), a) == Ordering::Less
    }

    fn pow_i64(&self, a: &Self::Elem, n: i64) -> Self::Elem {
        if n < 0 {
            return self.pow_i64(&self.inv(a), -n);
        }
        let mut acc = self.identity();
        for _ in 0..n {
            acc = self.op(&acc, a);
        }
        acc
    }
}

/// ℤ with its usual order; also uw(trivial group).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntLine;

impl Tog for IntLine {
    type Elem = i64;

    fn identity(&self) -> i64 {
        0
    }

    fn op(&self, a: &i64, b: &i64) -> i64 {
        a + b
    }

    fn inv(&self, a: &i64) -> i64 {
        -a
    }

    fn cmp_elems(&self, a: &i64, b: &i64) -> Ordering {
        a.cmp(b)
    }
}
