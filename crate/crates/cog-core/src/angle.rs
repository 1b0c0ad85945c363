//! Exact points on the unit circle, measured in turns.
//!
//! A [`KAngle`] represents frac(q + Σ cᵢ·√rᵢ) with q rational and integer
//! coefficients cᵢ over a fixed basis of squarefree radicands. Distinct
//! squarefree roots are rationally independent together with 1, so two
//! angles denote the same circle point iff their normal forms coincide,
//! and comparison of distinct points terminates under enclosure refinement.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;

use crate::CoreError;

/// Refinement guard: normal forms are compared first, so a comparison that
/// still ties at this precision indicates a broken basis invariant.
const MAX_BITS: u32 = 4096;

fn is_squarefree(n: u32) -> bool {
    let mut m = n;
    let mut d = 2u32;
    while d * d <= m {
        if m % (d * d) == 0 {
            return false;
        }
        while m % d == 0 {
            m /= d;
        }
        d += 1;
    }
    true
}

/// Fixed list of squarefree radicands; the designated irrationals are their
/// square roots. Shared by every angle of one structure.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IrrationalBasis(Arc<Vec<u32>>);

static DEFAULT_BASIS: Lazy<IrrationalBasis> =
    Lazy::new(|| IrrationalBasis::new(vec![2, 3]).expect("default basis is valid"));

impl IrrationalBasis {
    /// Radicands must be ≥ 2, squarefree and strictly increasing; this
    /// guarantees {1, √r₁, …, √r_b} is rationally independent.
    pub fn new(radicands: Vec<u32>) -> Result<Self, CoreError> {
        for w in radicands.windows(2) {
            if w[0] >= w[1] {
                return Err(CoreError::InvalidBasis(
                    "radicands must be strictly increasing".into(),
                ));
            }
        }
        for &r in &radicands {
            if r < 2 {
                return Err(CoreError::InvalidBasis(format!("radicand {r} is < 2")));
            }
            if !is_squarefree(r) {
                return Err(CoreError::InvalidBasis(format!(
                    "radicand {r} is not squarefree"
                )));
            }
        }
        Ok(IrrationalBasis(Arc::new(radicands)))
    }

    /// ξ₁ = √2, ξ₂ = √3.
    pub fn default_basis() -> Self {
        DEFAULT_BASIS.clone()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn radicands(&self) -> &[u32] {
        &self.0
    }

    /// Certified dyadic enclosure of √radicand with denominator 2^bits.
    fn sqrt_enclosure(&self, idx: usize, bits: u32) -> (BigRational, BigRational) {
        let r = BigInt::from(self.0[idx]);
        let scale = BigInt::one() << (2 * bits);
        let lo_num = (&r * &scale).sqrt();
        let den = BigInt::one() << bits;
        let lo = BigRational::new(lo_num.clone(), den.clone());
        let hi = BigRational::new(lo_num + BigInt::one(), den);
        (lo, hi)
    }
}

impl fmt::Debug for IrrationalBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IrrationalBasis{:?}", self.0)
    }
}

fn frac(x: &BigRational) -> BigRational {
    x - x.floor()
}

/// A point of 𝕂 in normal form: rational part in [0,1) plus integer
/// multiples of the basis irrationals, everything taken mod 1.
#[derive(Clone)]
pub struct KAngle {
    q: BigRational,
    coeffs: Vec<BigInt>,
    basis: IrrationalBasis,
}

impl KAngle {
    pub fn new(q: BigRational, coeffs: Vec<BigInt>, basis: IrrationalBasis) -> Result<Self, CoreError> {
        if coeffs.len() != basis.len() {
            return Err(CoreError::InvalidBasis(format!(
                "coefficient vector has length {}, basis has length {}",
                coeffs.len(),
                basis.len()
            )));
        }
        Ok(KAngle {
            q: frac(&q),
            coeffs,
            basis,
        })
    }

    /// Torsion angle a/b (mod 1) over the default basis.
    pub fn rational(q: BigRational) -> Self {
        let basis = IrrationalBasis::default_basis();
        let coeffs = vec![BigInt::zero(); basis.len()];
        KAngle { q: frac(&q), coeffs, basis }
    }

    pub fn rational_in(q: BigRational, basis: &IrrationalBasis) -> Self {
        KAngle {
            q: frac(&q),
            coeffs: vec![BigInt::zero(); basis.len()],
            basis: basis.clone(),
        }
    }

    pub fn zero() -> Self {
        Self::rational(BigRational::zero())
    }

    pub fn zero_in(basis: &IrrationalBasis) -> Self {
        Self::rational_in(BigRational::zero(), basis)
    }

    /// frac(√2 − 1), the default irrational generator angle.
    pub fn sqrt2_minus_one() -> Self {
        let basis = IrrationalBasis::default_basis();
        let mut coeffs = vec![BigInt::zero(); basis.len()];
        coeffs[0] = BigInt::one();
        KAngle {
            q: frac(&BigRational::from_integer(BigInt::from(-1))),
            coeffs,
            basis,
        }
    }

    pub fn basis(&self) -> &IrrationalBasis {
        &self.basis
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.q
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.q.is_zero() && self.coeffs.iter().all(|c| c.is_zero())
    }

    /// True when the angle is a torsion point of 𝕂 (all irrational
    /// coefficients vanish).
    pub fn is_torsion(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Order of the point in 𝕌, None for points of infinite order.
    pub fn torsion_order(&self) -> Option<BigInt> {
        if !self.is_torsion() {
            return None;
        }
        Some(self.q.denom().clone())
    }

    fn check_basis(&self, other: &KAngle) {
        assert!(
            self.basis == other.basis,
            "mixed irrational bases: {:?} vs {:?}",
            self.basis,
            other.basis
        );
    }

    pub fn add(&self, other: &KAngle) -> KAngle {
        self.check_basis(other);
        KAngle {
            q: frac(&(&self.q + &other.q)),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
            basis: self.basis.clone(),
        }
    }

    pub fn neg(&self) -> KAngle {
        KAngle {
            q: frac(&(-&self.q)),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            basis: self.basis.clone(),
        }
    }

    pub fn sub(&self, other: &KAngle) -> KAngle {
        self.add(&other.neg())
    }

    pub fn scale(&self, n: &BigInt) -> KAngle {
        KAngle {
            q: frac(&(&self.q * BigRational::from_integer(n.clone()))),
            coeffs: self.coeffs.iter().map(|c| c * n).collect(),
            basis: self.basis.clone(),
        }
    }

    /// Enclosure of the unreduced value q + Σ cᵢ√rᵢ at the given precision.
    fn raw_enclosure(&self, bits: u32) -> (BigRational, BigRational) {
        let mut lo = self.q.clone();
        let mut hi = self.q.clone();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (slo, shi) = self.basis.sqrt_enclosure(i, bits);
            let c = BigRational::from_integer(c.clone());
            if c.is_positive() {
                lo += &c * &slo;
                hi += &c * &shi;
            } else {
                lo += &c * &shi;
                hi += &c * &slo;
            }
        }
        (lo, hi)
    }

    /// Enclosure of the represented point in [0,1); None while the integer
    /// part is still ambiguous at this precision.
    pub fn position_enclosure(&self, bits: u32) -> Option<(BigRational, BigRational)> {
        if self.is_torsion() {
            return Some((self.q.clone(), self.q.clone()));
        }
        let (lo, hi) = self.raw_enclosure(bits);
        let fl = lo.floor();
        if fl == hi.floor() {
            Some((lo - &fl, hi - fl))
        } else {
            None
        }
    }

    /// Total order by position on [0,1). Terminates because distinct normal
    /// forms denote distinct real positions.
    pub fn position_cmp(&self, other: &KAngle) -> Ordering {
        self.check_basis(other);
        if self.q == other.q && self.coeffs == other.coeffs {
            return Ordering::Equal;
        }
        if self.is_torsion() && other.is_torsion() {
            return self.q.cmp(&other.q);
        }
        let mut bits = 32;
        while bits <= MAX_BITS {
            if let (Some((alo, ahi)), Some((blo, bhi))) =
                (self.position_enclosure(bits), other.position_enclosure(bits))
            {
                if ahi < blo {
                    return Ordering::Less;
                }
                if bhi < alo {
                    return Ordering::Greater;
                }
            }
            bits *= 2;
        }
        unreachable!("enclosure refinement failed to separate distinct angles")
    }
}

impl PartialEq for KAngle {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis && self.q == other.q && self.coeffs == other.coeffs
    }
}

impl Eq for KAngle {}

impl PartialOrd for KAngle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for KAngle {
    fn cmp(&self, other: &Self) -> Ordering {
        self.position_cmp(other)
    }
}

impl std::hash::Hash for KAngle {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.q.hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for KAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for KAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.q.numer(), self.q.denom())?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                write!(f, "{:+}√{}", c, self.basis.radicands()[i])?;
            }
        }
        Ok(())
    }
}

/// Ascending cyclic rotation on the circle: the §1.2.1 relation
/// θ < θ' < θ'' up to rotation. False unless all three points are distinct.
pub fn circle_r(x: &KAngle, y: &KAngle, z: &KAngle) -> bool {
    let xy = x.position_cmp(y);
    let yz = y.position_cmp(z);
    let zx = z.position_cmp(x);
    if xy == Ordering::Equal || yz == Ordering::Equal || zx == Ordering::Equal {
        return false;
    }
    // Exactly one of the three comparisons descends on an ascending rotation.
    [xy, yz, zx].iter().filter(|&&o| o == Ordering::Greater).count() == 1
}
