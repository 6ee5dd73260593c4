//! Ring abstractions shared by fields, chain rings and the code machinery.
//!
//! Rings here carry their parameters at runtime (the modulus, `p`, `e`, ...),
//! so arithmetic goes through a ring context value rather than operator
//! overloading on the elements themselves.

use std::cmp::Ordering;
use std::fmt::Debug;
use std::hash::Hash;

use crate::ffield::{Field, FieldElem};

/// A finite commutative ring with identity.
pub trait Ring: Clone + Debug + Send + Sync {
    type Elem: Copy + Eq + Hash + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn neg(&self, a: Self::Elem) -> Self::Elem;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    /// Image of the integer `k` under `Z -> R`.
    fn from_int(&self, k: i64) -> Self::Elem;
    fn is_unit(&self, a: Self::Elem) -> bool;
    fn inv(&self, a: Self::Elem) -> Option<Self::Elem>;

    /// Number of elements.
    fn size(&self) -> u64;
    /// Bijection `R -> [0, size)`.
    fn index_of(&self, a: Self::Elem) -> u64;
    fn elem_at(&self, index: u64) -> Self::Elem;

    /// Canonical total order: lexicographic on ascending coordinates.
    fn cmp_elems(&self, a: Self::Elem, b: Self::Elem) -> Ordering;
    fn fmt_elem(&self, a: Self::Elem) -> String;
    fn elem_json(&self, a: Self::Elem) -> serde_json::Value;
    /// Textual descriptor, e.g. `Z:5^2`.
    fn descriptor(&self) -> String;
    /// Additive order of `1`.
    fn characteristic(&self) -> u64;
    /// `k` in `[0, characteristic)` when `a` is the image of the integer `k`.
    fn as_int(&self, a: Self::Elem) -> Option<u64>;

    fn sub(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem {
        self.add(a, self.neg(b))
    }

    fn is_zero(&self, a: Self::Elem) -> bool {
        a == self.zero()
    }

    fn is_one(&self, a: Self::Elem) -> bool {
        a == self.one()
    }

    fn pow(&self, a: Self::Elem, mut k: u64) -> Self::Elem {
        let mut base = a;
        let mut acc = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    fn elements(&self) -> Vec<Self::Elem> {
        (0..self.size()).map(|i| self.elem_at(i)).collect()
    }

    fn units(&self) -> Vec<Self::Elem> {
        self.elements()
            .into_iter()
            .filter(|&a| self.is_unit(a))
            .collect()
    }
}

/// A finite chain ring: local, with principal maximal ideal `<gamma>`,
/// nilpotency index `e` and residue field `K = R/<gamma>`.
///
/// Finite fields are chain rings with `e = 1` and `gamma = 0`.
pub trait FiniteChainRing: Ring {
    fn residue_field(&self) -> &Field;
    /// The reduction map `R -> K`.
    fn mu(&self, a: Self::Elem) -> FieldElem;
    /// Canonical section `K -> R` (coordinate-wise lift, not multiplicative).
    fn lift_residue(&self, a: FieldElem) -> Self::Elem;
    /// Nilpotency index `e` of `gamma`.
    fn nilpotency(&self) -> u32;
    fn gamma_pow(&self, v: u32) -> Self::Elem;
    /// `gamma`-adic valuation; `valuation(0) = e`.
    fn valuation(&self, a: Self::Elem) -> u32;
    /// Some `b` with `b * gamma^v = a`. Requires `valuation(a) >= v`.
    fn div_gamma_pow(&self, a: Self::Elem, v: u32) -> Self::Elem;
    /// Canonical representative of `a` modulo `<gamma^v>`.
    fn residue_rep(&self, a: Self::Elem, v: u32) -> Self::Elem;

    fn characteristic_prime(&self) -> u64 {
        self.residue_field().p()
    }

    /// `q = |K|`.
    fn residue_size(&self) -> u64 {
        self.residue_field().q()
    }

    fn gamma(&self) -> Self::Elem {
        self.gamma_pow(1)
    }

    /// Size of `<gamma^v>`, which is `q^(e - v)`.
    fn ideal_size(&self, v: u32) -> u64 {
        let e = self.nilpotency();
        self.residue_size().pow(e.saturating_sub(v))
    }
}
