//! The Rieger unwound t.o.g. on ℤ × G.
//!
//! The carrier is never materialized: uw(G) is an element algebra over the
//! base structure, infinite even for finite G.

use std::cmp::Ordering;
use std::fmt;

use cog_core::{Cog, Tog};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UnwoundElement<E> {
    pub k: i64,
    pub g: E,
}

impl<E> UnwoundElement<E> {
    pub fn new(k: i64, g: E) -> Self {
        UnwoundElement { k, g }
    }
}

impl<E: fmt::Debug> fmt::Debug for UnwoundElement<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {:?})", self.k, self.g)
    }
}

#[derive(Clone, Debug)]
pub struct UnwoundGroup<G: Cog> {
    base: G,
}

impl<G: Cog> UnwoundGroup<G> {
    /// The caller is responsible for the base passing the cyclic order
    /// axioms; the group law is partial without R2.
    pub fn new(base: G) -> Self {
        UnwoundGroup { base }
    }

    pub fn base(&self) -> &G {
        &self.base
    }

    /// z_G = (1, e): positive, central and cofinal.
    pub fn z(&self) -> UnwoundElement<G::Elem> {
        UnwoundElement::new(1, self.base.identity())
    }

    pub fn z_power(&self, m: i64) -> UnwoundElement<G::Elem> {
        UnwoundElement::new(m, self.base.identity())
    }

    pub fn identity_elem(&self) -> UnwoundElement<G::Elem> {
        UnwoundElement::new(0, self.base.identity())
    }

    /// The four-case law, completed with the forced (k,g)·(m,e) = (k+m,g).
    pub fn mul(
        &self,
        a: &UnwoundElement<G::Elem>,
        b: &UnwoundElement<G::Elem>,
    ) -> UnwoundElement<G::Elem> {
        let e = self.base.identity();
        let (k, g) = (a.k, &a.g);
        let (m, h) = (b.k, &b.g);
        if *g == e {
            return UnwoundElement::new(k + m, h.clone());
        }
        if *h == e {
            return UnwoundElement::new(k + m, g.clone());
        }
        let gh = self.base.op(g, h);
        if gh == e {
            return UnwoundElement::new(k + m + 1, e);
        }
        if self.base.r(&e, g, &gh) {
            return UnwoundElement::new(k + m, gh);
        }
        if self.base.r(&e, &gh, g) {
            return UnwoundElement::new(k + m + 1, gh);
        }
        panic!("base relation is not total: cannot place the product");
    }

    pub fn inv(&self, a: &UnwoundElement<G::Elem>) -> UnwoundElement<G::Elem> {
        let e = self.base.identity();
        if a.g == e {
            UnwoundElement::new(-a.k, e)
        } else {
            UnwoundElement::new(-a.k - 1, self.base.inv(&a.g))
        }
    }

    /// ≤_R: lexicographic on the integer part, then the window order of G
    /// with e first.
    pub fn cmp(
        &self,
        a: &UnwoundElement<G::Elem>,
        b: &UnwoundElement<G::Elem>,
    ) -> Ordering {
        match a.k.cmp(&b.k) {
            Ordering::Equal => {}
            o => return o,
        }
        if a.g == b.g {
            return Ordering::Equal;
        }
        let e = self.base.identity();
        if a.g == e {
            return Ordering::Less;
        }
        if b.g == e {
            return Ordering::Greater;
        }
        if self.base.r(&e, &a.g, &b.g) {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    pub fn leq(&self, a: &UnwoundElement<G::Elem>, b: &UnwoundElement<G::Elem>) -> bool {
        self.cmp(a, b) != Ordering::Greater
    }

    pub fn describe(&self, a: &UnwoundElement<G::Elem>) -> String {
        format!("({}, {})", a.k, self.base.describe(&a.g))
    }

    /// Window elements (k, g) for k in [lo, hi] over the finite carrier.
    pub fn window(&self, lo: i64, hi: i64) -> Option<Vec<UnwoundElement<G::Elem>>> {
        let carrier = self.base.carrier()?;
        let mut out = Vec::new();
        for k in lo..=hi {
            for g in &carrier {
                out.push(UnwoundElement::new(k, g.clone()));
            }
        }
        out.sort_by(|a, b| self.cmp(a, b));
        Some(out)
    }
}

impl<G: Cog> Tog for UnwoundGroup<G> {
    type Elem = UnwoundElement<G::Elem>;

    fn identity(&self) -> Self::Elem {
        self.identity_elem()
    }

    fn op(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, b)
    }

    fn inv(&self, a: &Self::Elem) -> Self::Elem {
        UnwoundGroup::inv(self, a)
    }

    fn cmp_elems(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering {
        UnwoundGroup::cmp(self, a, b)
    }
}

/// unwind(G): bundle uw_mul, uw_inv, uw_leq and z_G over the base.
pub fn unwind<G: Cog>(base: G) -> UnwoundGroup<G> {
    UnwoundGroup::new(base)
}
