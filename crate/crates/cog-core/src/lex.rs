//! Lexicographically ordered rational vectors: the t.o.g. component ℚ^d-lex.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Fixed-length rational vector compared lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LexVector(Vec<BigRational>);

impl LexVector {
    pub fn new(entries: Vec<BigRational>) -> Self {
        LexVector(entries)
    }

    pub fn zero(dim: usize) -> Self {
        LexVector(vec![BigRational::zero(); dim])
    }

    /// Standard basis vector e_i.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = vec![BigRational::zero(); dim];
        v[i] = BigRational::from_integer(BigInt::from(1));
        LexVector(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    /// Index of the first nonzero entry; None for the zero vector.
    pub fn leading_index(&self) -> Option<usize> {
        self.0.iter().position(|x| !x.is_zero())
    }

    pub fn is_positive(&self) -> bool {
        match self.leading_index() {
            Some(i) => self.0[i].is_positive(),
            None => false,
        }
    }

    fn check_dim(&self, other: &LexVector) {
        assert_eq!(self.dim(), other.dim(), "mixed lex dimensions");
    }

    pub fn add(&self, other: &LexVector) -> LexVector {
        self.check_dim(other);
        LexVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> LexVector {
        LexVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn sub(&self, other: &LexVector) -> LexVector {
        self.add(&other.neg())
    }

    pub fn scale(&self, n: &BigInt) -> LexVector {
        let n = BigRational::from_integer(n.clone());
        LexVector(self.0.iter().map(|a| a * &n).collect())
    }
}

impl PartialOrd for LexVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LexVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.check_dim(other);
        for (a, b) in self.0.iter().zip(&other.0) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl fmt::Debug for LexVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LexVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}/{}", x.numer(), x.denom())?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn lex_order() {
        let a = LexVector::new(vec![ratio(1, 1), ratio(-5, 1)]);
        let b = LexVector::new(vec![ratio(1, 1), ratio(0, 1)]);
        let c = LexVector::new(vec![ratio(2, 1), ratio(-100, 1)]);
        assert!(a < b);
        assert!(b < c);
        assert!(a < c);
        assert!(LexVector::zero(2) < a);
    }

    #[test]
    fn leading_and_sign() {
        let v = LexVector::new(vec![ratio(0, 1), ratio(-3, 2)]);
        assert_eq!(v.leading_index(), Some(1));
        assert!(!v.is_positive());
        assert!(v.neg().is_positive());
        assert_eq!(LexVector::zero(3).leading_index(), None);
    }
}
