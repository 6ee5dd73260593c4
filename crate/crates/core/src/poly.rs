//! Dense univariate polynomials over a [`Ring`].

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::ffield::{Field, FieldElem};
use crate::ring::{FiniteChainRing, Ring};

/// Polynomial with ascending coefficients; the highest stored coefficient is
/// nonzero unless the polynomial is zero (empty vector).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E: Copy> Poly<E> {
    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<E> {
        self.coeffs.last().copied()
    }

    pub fn coeff(&self, i: usize) -> Option<E> {
        self.coeffs.get(i).copied()
    }
}

/// Polynomial arithmetic over a fixed coefficient ring.
#[derive(Clone, Debug)]
pub struct PolyRing<R: Ring> {
    base: R,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(base: R) -> Self {
        PolyRing { base }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn from_coeffs(&self, mut coeffs: Vec<R::Elem>) -> Poly<R::Elem> {
        while let Some(&c) = coeffs.last() {
            if self.base.is_zero(c) {
                coeffs.pop();
            } else {
                break;
            }
        }
        Poly { coeffs }
    }

    pub fn from_ints(&self, coeffs: &[i64]) -> Poly<R::Elem> {
        self.from_coeffs(coeffs.iter().map(|&c| self.base.from_int(c)).collect())
    }

    pub fn zero(&self) -> Poly<R::Elem> {
        Poly { coeffs: Vec::new() }
    }

    pub fn one(&self) -> Poly<R::Elem> {
        self.constant(self.base.one())
    }

    pub fn constant(&self, c: R::Elem) -> Poly<R::Elem> {
        self.from_coeffs(vec![c])
    }

    pub fn x(&self) -> Poly<R::Elem> {
        self.monomial(self.base.one(), 1)
    }

    pub fn monomial(&self, c: R::Elem, k: usize) -> Poly<R::Elem> {
        let mut v = vec![self.base.zero(); k + 1];
        v[k] = c;
        self.from_coeffs(v)
    }

    /// `x^n - c`.
    pub fn binomial(&self, n: usize, c: R::Elem) -> Poly<R::Elem> {
        let mut v = vec![self.base.zero(); n + 1];
        v[n] = self.base.one();
        v[0] = self.base.sub(v[0], c);
        self.from_coeffs(v)
    }

    pub fn add(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Poly<R::Elem> {
        let n = a.coeffs.len().max(b.coeffs.len());
        let z = self.base.zero();
        self.from_coeffs(
            (0..n)
                .map(|i| {
                    let x = a.coeffs.get(i).copied().unwrap_or(z);
                    let y = b.coeffs.get(i).copied().unwrap_or(z);
                    self.base.add(x, y)
                })
                .collect(),
        )
    }

    pub fn neg(&self, a: &Poly<R::Elem>) -> Poly<R::Elem> {
        Poly {
            coeffs: a.coeffs.iter().map(|&c| self.base.neg(c)).collect(),
        }
    }

    pub fn sub(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Poly<R::Elem> {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Poly<R::Elem> {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let mut out = vec![self.base.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                out[i + j] = self.base.add(out[i + j], self.base.mul(x, y));
            }
        }
        self.from_coeffs(out)
    }

    pub fn scale(&self, c: R::Elem, a: &Poly<R::Elem>) -> Poly<R::Elem> {
        self.from_coeffs(a.coeffs.iter().map(|&x| self.base.mul(c, x)).collect())
    }

    pub fn pow(&self, a: &Poly<R::Elem>, mut k: u64) -> Poly<R::Elem> {
        let mut acc = self.one();
        let mut base = a.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn is_monic(&self, a: &Poly<R::Elem>) -> bool {
        a.leading().is_some_and(|c| self.base.is_one(c))
    }

    /// `a / lc(a)`; fails when the leading coefficient is not a unit.
    pub fn monic(&self, a: &Poly<R::Elem>) -> Result<Poly<R::Elem>> {
        let lc = a.leading().ok_or(Error::NonMonic)?;
        let inv = self.base.inv(lc).ok_or(Error::NonMonic)?;
        Ok(self.scale(inv, a))
    }

    /// Division with remainder by a divisor whose leading coefficient is a
    /// unit.
    pub fn divmod(
        &self,
        a: &Poly<R::Elem>,
        b: &Poly<R::Elem>,
    ) -> Result<(Poly<R::Elem>, Poly<R::Elem>)> {
        let lc = b.leading().ok_or(Error::NonMonic)?;
        let lc_inv = self.base.inv(lc).ok_or(Error::NonMonic)?;
        let db = b.coeffs.len() - 1;
        let mut rem = a.coeffs.clone();
        if rem.len() <= db {
            return Ok((self.zero(), self.from_coeffs(rem)));
        }
        let mut quo = vec![self.base.zero(); rem.len() - db];
        for k in (db..rem.len()).rev() {
            let c = self.base.mul(rem[k], lc_inv);
            if self.base.is_zero(c) {
                continue;
            }
            quo[k - db] = c;
            for (i, &bi) in b.coeffs.iter().enumerate() {
                let idx = k - db + i;
                rem[idx] = self.base.sub(rem[idx], self.base.mul(c, bi));
            }
        }
        rem.truncate(db);
        Ok((self.from_coeffs(quo), self.from_coeffs(rem)))
    }

    pub fn rem(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Result<Poly<R::Elem>> {
        Ok(self.divmod(a, b)?.1)
    }

    /// Monic greatest common divisor. Every leading coefficient met by the
    /// Euclidean algorithm must be a unit, which always holds over a field.
    pub fn gcd(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Result<Poly<R::Elem>> {
        Ok(self.ext_gcd(a, b)?.0)
    }

    /// `(g, s, t)` with `g = s a + t b` and `g` monic (or zero when both inputs
    /// are zero).
    #[allow(clippy::type_complexity)]
    pub fn ext_gcd(
        &self,
        a: &Poly<R::Elem>,
        b: &Poly<R::Elem>,
    ) -> Result<(Poly<R::Elem>, Poly<R::Elem>, Poly<R::Elem>)> {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.one(), self.zero());
        let (mut t0, mut t1) = (self.zero(), self.one());
        while !r1.is_zero() {
            let (q, r) = self.divmod(&r0, &r1)?;
            let s2 = self.sub(&s0, &self.mul(&q, &s1));
            let t2 = self.sub(&t0, &self.mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        if r0.is_zero() {
            return Ok((r0, s0, t0));
        }
        let inv = self
            .base
            .inv(r0.leading().expect("nonzero"))
            .ok_or(Error::NonMonic)?;
        Ok((
            self.scale(inv, &r0),
            self.scale(inv, &s0),
            self.scale(inv, &t0),
        ))
    }

    pub fn eval(&self, f: &Poly<R::Elem>, a: R::Elem) -> R::Elem {
        f.coeffs.iter().rev().fold(self.base.zero(), |acc, &c| {
            self.base.add(self.base.mul(acc, a), c)
        })
    }

    /// `f(c x)`: coefficient `i` is multiplied by `c^i`. `c` must be a unit.
    pub fn substitute_scale(&self, f: &Poly<R::Elem>, c: R::Elem) -> Result<Poly<R::Elem>> {
        if !self.base.is_unit(c) {
            return Err(Error::NonUnit);
        }
        let mut ci = self.base.one();
        let mut out = Vec::with_capacity(f.coeffs.len());
        for &a in &f.coeffs {
            out.push(self.base.mul(a, ci));
            ci = self.base.mul(ci, c);
        }
        Ok(self.from_coeffs(out))
    }

    /// `f(a x + b)`.
    pub fn compose_affine(&self, f: &Poly<R::Elem>, a: R::Elem, b: R::Elem) -> Poly<R::Elem> {
        let lin = self.from_coeffs(vec![b, a]);
        f.coeffs.iter().rev().fold(self.zero(), |acc, &c| {
            self.add(&self.mul(&acc, &lin), &self.constant(c))
        })
    }

    /// Canonical order: by degree, then lexicographically on ascending
    /// coefficients.
    pub fn cmp(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Ordering {
        a.coeffs.len().cmp(&b.coeffs.len()).then_with(|| {
            for (&x, &y) in a.coeffs.iter().zip(&b.coeffs) {
                let o = self.base.cmp_elems(x, y);
                if o != Ordering::Equal {
                    return o;
                }
            }
            Ordering::Equal
        })
    }

    /// `(negative, term)` pairs from the top degree down. With `signed`,
    /// integer coefficients above half the characteristic print as negatives.
    fn terms(&self, f: &Poly<R::Elem>, signed: bool) -> Vec<(bool, String)> {
        let ch = self.base.characteristic();
        let mut out = Vec::new();
        for (k, &c) in f.coeffs.iter().enumerate().rev() {
            if self.base.is_zero(c) {
                continue;
            }
            let (neg, c) = match self.base.as_int(c) {
                Some(v) if signed && 2 * v > ch => (true, self.base.neg(c)),
                _ => (false, c),
            };
            let coef = if k > 0 && self.base.is_one(c) {
                String::new()
            } else {
                self.base.fmt_elem(c)
            };
            out.push((
                neg,
                match k {
                    0 => coef,
                    1 => format!("{coef}x"),
                    _ => format!("{coef}x^{k}"),
                },
            ));
        }
        out
    }

    fn join_terms(terms: Vec<(bool, String)>, plus: &str, minus: &str) -> String {
        let mut s = String::new();
        for (i, (neg, t)) in terms.into_iter().enumerate() {
            match (i, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(minus),
                (_, false) => s.push_str(plus),
            }
            s.push_str(&t);
        }
        s
    }

    /// Human form, e.g. `x^6 + x^3 + 1`.
    pub fn fmt(&self, f: &Poly<R::Elem>) -> String {
        if f.is_zero() {
            return "0".into();
        }
        Self::join_terms(self.terms(f, false), " + ", " - ")
    }

    /// Compact human form, e.g. `x^6+x^3+1`.
    pub fn fmt_compact(&self, f: &Poly<R::Elem>) -> String {
        if f.is_zero() {
            return "0".into();
        }
        Self::join_terms(self.terms(f, false), "+", "-")
    }

    /// Compact form with integer coefficients in the symmetric range, e.g.
    /// `x^4-x^3+x^2-x+1`.
    pub fn fmt_signed(&self, f: &Poly<R::Elem>) -> String {
        if f.is_zero() {
            return "0".into();
        }
        Self::join_terms(self.terms(f, true), "+", "-")
    }

    /// Ascending coefficient list.
    pub fn to_json(&self, f: &Poly<R::Elem>) -> serde_json::Value {
        serde_json::Value::Array(f.coeffs.iter().map(|&c| self.base.elem_json(c)).collect())
    }
}

impl<R: FiniteChainRing> PolyRing<R> {
    /// Coefficient-wise `mu`.
    pub fn reduce(&self, f: &Poly<R::Elem>) -> Poly<FieldElem> {
        PolyRing::new(self.base.residue_field().clone())
            .from_coeffs(f.coeffs.iter().map(|&c| self.base.mu(c)).collect())
    }

    /// Coefficient-wise canonical lift of a residue polynomial.
    pub fn lift(&self, f: &Poly<FieldElem>) -> Poly<R::Elem> {
        self.from_coeffs(
            f.coeffs
                .iter()
                .map(|&c| self.base.lift_residue(c))
                .collect(),
        )
    }

    pub fn residue_ring(&self) -> PolyRing<Field> {
        PolyRing::new(self.base.residue_field().clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chainring::ChainRing;
    use crate::ffield::make_field;

    #[test]
    fn char_two_square() {
        let pr = PolyRing::new(make_field(2, 1).unwrap());
        let x1 = pr.from_ints(&[1, 1]);
        assert_eq!(pr.mul(&x1, &x1), pr.from_ints(&[1, 0, 1]));
    }

    #[test]
    fn division_over_z25() {
        let pr = PolyRing::new(ChainRing::integers_mod(5, 2).unwrap());
        let x9 = pr.from_ints(&[-1, 0, 0, 0, 0, 0, 0, 0, 0, 1]);
        let (q, r) = pr.divmod(&x9, &pr.from_ints(&[-1, 1])).unwrap();
        assert!(r.is_zero());
        let expected = pr.mul(
            &pr.from_ints(&[1, 1, 1]),
            &pr.from_ints(&[1, 0, 0, 1, 0, 0, 1]),
        );
        assert_eq!(q, expected);
        // 5x + 1 has a non-unit leading coefficient.
        assert_eq!(pr.divmod(&x9, &pr.from_ints(&[1, 5])), Err(Error::NonMonic));
    }

    #[test]
    fn gcd_over_f5() {
        let pr = PolyRing::new(make_field(5, 1).unwrap());
        let g = pr
            .gcd(&pr.from_ints(&[-1, 0, 1]), &pr.from_ints(&[-1, 1]))
            .unwrap();
        assert_eq!(g, pr.from_ints(&[-1, 1]));
        let a = pr.from_ints(&[1, 2, 3, 1]);
        let b = pr.from_ints(&[4, 0, 1]);
        let (g, s, t) = pr.ext_gcd(&a, &b).unwrap();
        assert_eq!(pr.add(&pr.mul(&s, &a), &pr.mul(&t, &b)), g);
    }

    #[test]
    fn substitution_and_printing() {
        let pr = PolyRing::new(ChainRing::integers_mod(5, 2).unwrap());
        let m1 = pr.base().from_int(-1);
        let f = pr.from_ints(&[-1, 1]);
        assert_eq!(
            pr.substitute_scale(&f, m1).unwrap(),
            pr.from_ints(&[-1, -1])
        );
        let g = pr.from_ints(&[1, 1, 1]);
        assert_eq!(
            pr.substitute_scale(&g, m1).unwrap(),
            pr.from_ints(&[1, -1, 1])
        );
        assert_eq!(
            pr.substitute_scale(&g, pr.base().from_int(5)),
            Err(Error::NonUnit)
        );
        assert_eq!(
            pr.fmt(&pr.from_ints(&[1, 0, 0, 1, 0, 0, 1])),
            "x^6 + x^3 + 1"
        );
        assert_eq!(pr.fmt_compact(&pr.from_ints(&[24, 1])), "x+24");
        assert_eq!(pr.fmt(&pr.from_ints(&[0, 3, 2])), "2x^2 + 3x");
    }

    #[test]
    fn affine_composition() {
        let pr = PolyRing::new(make_field(7, 1).unwrap());
        let f = pr.from_ints(&[3, 1, 2]);
        let a = pr.base().from_int(3);
        let b = pr.base().from_int(5);
        let g = pr.compose_affine(&f, a, b);
        for t in 0..7 {
            let t = pr.base().from_int(t);
            let at_b = pr.base().add(pr.base().mul(a, t), b);
            assert_eq!(pr.eval(&g, t), pr.eval(&f, at_b));
        }
    }
}
