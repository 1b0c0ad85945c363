//! Elements of the ambient lexicographic product 𝕂 ⃗× ℚ^d.
//!
//! Every structure in this workbench lives inside such a product: the angle
//! coordinate is the representation-independent first projection π₁ and the
//! rational vector is the linear coordinate π₂.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;

use crate::angle::{circle_r, KAngle};
use crate::lex::LexVector;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CogElement {
    pub angle: KAngle,
    pub linear: LexVector,
}

impl CogElement {
    pub fn new(angle: KAngle, linear: LexVector) -> Self {
        CogElement { angle, linear }
    }

    pub fn identity_like(&self) -> CogElement {
        CogElement {
            angle: KAngle::zero_in(self.angle.basis()),
            linear: LexVector::zero(self.linear.dim()),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.angle.is_zero() && self.linear.is_zero()
    }

    pub fn add(&self, other: &CogElement) -> CogElement {
        CogElement {
            angle: self.angle.add(&other.angle),
            linear: self.linear.add(&other.linear),
        }
    }

    pub fn neg(&self) -> CogElement {
        CogElement {
            angle: self.angle.neg(),
            linear: self.linear.neg(),
        }
    }

    pub fn sub(&self, other: &CogElement) -> CogElement {
        self.add(&other.neg())
    }

    pub fn scale(&self, n: &BigInt) -> CogElement {
        CogElement {
            angle: self.angle.scale(n),
            linear: self.linear.scale(n),
        }
    }
}

impl PartialOrd for CogElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CogElement {
    /// Deterministic total order: circle position first, then lex vector.
    /// This is the canonical window order e ≤ g' < z used for quotient
    /// representatives, not the cyclic relation itself.
    fn cmp(&self, other: &Self) -> Ordering {
        self.angle
            .position_cmp(&other.angle)
            .then_with(|| self.linear.cmp(&other.linear))
    }
}

impl fmt::Debug for CogElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CogElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.angle, self.linear)
    }
}

/// The five-case lexicographic cyclic order on C ⃗× L specialised to
/// C = 𝕂 and L = ℚ^d-lex.
pub fn lex_product_r(x: &CogElement, y: &CogElement, z: &CogElement) -> bool {
    let c = &x.angle;
    let c1 = &y.angle;
    let c2 = &z.angle;
    let r = &x.linear;
    let r1 = &y.linear;
    let r2 = &z.linear;
    let cc1 = c == c1;
    let c1c2 = c1 == c2;
    let cc2 = c == c2;
    if !cc1 && !c1c2 && !cc2 {
        return circle_r(c, c1, c2);
    }
    if cc1 && !cc2 {
        return r < r1;
    }
    if c1c2 && !cc1 {
        return r1 < r2;
    }
    if cc2 && !cc1 {
        return r2 < r;
    }
    // all angles equal: the linear c.o.g. case
    (r < r1 && r1 < r2) || (r1 < r2 && r2 < r) || (r2 < r && r < r1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn elem(q: (i64, i64), lin: &[(i64, i64)]) -> CogElement {
        CogElement::new(
            KAngle::rational(ratio(q.0, q.1)),
            LexVector::new(lin.iter().map(|&(n, d)| ratio(n, d)).collect()),
        )
    }

    #[test]
    fn five_case_examples() {
        // case c=c'≠c'' with r<r': 0 < 5
        let x = elem((0, 1), &[(0, 1)]);
        let y = elem((0, 1), &[(5, 1)]);
        let z = elem((1, 3), &[(-2, 1)]);
        assert!(lex_product_r(&x, &y, &z));
        // distinct angles fall through to the circle order
        let a = elem((0, 1), &[(7, 1)]);
        let b = elem((1, 3), &[(0, 1)]);
        let c = elem((2, 3), &[(-9, 1)]);
        assert!(lex_product_r(&a, &b, &c));
        assert!(!lex_product_r(&a, &c, &b));
        // all angles equal: plain linear order
        let p = elem((1, 3), &[(1, 1)]);
        let q = elem((1, 3), &[(2, 1)]);
        let s = elem((1, 3), &[(3, 1)]);
        assert!(lex_product_r(&p, &q, &s));
        assert!(lex_product_r(&s, &p, &q));
        assert!(!lex_product_r(&q, &p, &s));
    }

    #[test]
    fn strictness() {
        let x = elem((0, 1), &[(1, 1)]);
        let y = elem((1, 3), &[(0, 1)]);
        assert!(!lex_product_r(&x, &x, &y));
        assert!(!lex_product_r(&x, &y, &x));
        assert!(!lex_product_r(&y, &x, &x));
    }
}
