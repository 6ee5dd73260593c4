//! Finite fields `F_{p^r}` in a polynomial basis.
//!
//! A field is fixed by its canonical modulus (the lexicographically smallest
//! monic irreducible of degree `r` over `F_p`, coefficients compared from the
//! constant term upward) and its canonical primitive element (the generator of
//! `F_q^*` with the smallest coordinate tuple in the same order). Discrete
//! logarithms come from a precomputed exp/log table.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::ring::{FiniteChainRing, Ring};

/// Default bound on `q = p^r` for table-backed fields.
pub const DEFAULT_FIELD_CAP: u64 = 1 << 16;

/// Element of `F_{p^r}`, packed as `sum c_i p^i` over its polynomial-basis
/// coordinates `c_0, ..., c_{r-1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct FieldElem(pub(crate) u32);

impl FieldElem {
    /// Packed integer value; equal to the element itself in a prime field.
    pub fn packed(self) -> u32 {
        self.0
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn inv_mod(a: i128, m: i128) -> Option<i128> {
    let g = a.mod_floor(&m).extended_gcd(&m);
    if g.gcd != 1 {
        return None;
    }
    Some(g.x.mod_floor(&m))
}

// Dense polynomials over F_p as ascending `u64` coefficient vectors. Used only
// while the field tables are being built.
mod fp {
    pub fn trim(a: &mut Vec<u64>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    pub fn pow_mod(mut b: u64, mut k: u64, p: u64) -> u64 {
        let mut acc = 1 % p;
        b %= p;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            k >>= 1;
        }
        acc
    }

    pub fn rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
        let mut a = a.to_vec();
        trim(&mut a);
        let df = f.len() - 1;
        let lc_inv = pow_mod(f[df], p - 2, p);
        while a.len() > df {
            let top = a.len() - 1;
            let c = a[top] * lc_inv % p;
            if c != 0 {
                for (i, &fi) in f.iter().enumerate() {
                    let idx = top - df + i;
                    a[idx] = (a[idx] + (p - c) * fi % p) % p;
                }
            }
            trim(&mut a);
        }
        a
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + ai * bj) % p;
            }
        }
        trim(&mut out);
        out
    }

    pub fn mul_mod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
        rem(&mul(a, b, p), f, p)
    }

    pub fn pow_poly_mod(base: &[u64], mut k: u64, f: &[u64], p: u64) -> Vec<u64> {
        let mut acc = vec![1u64];
        let mut b = rem(base, f, p);
        while k > 0 {
            if k & 1 == 1 {
                acc = mul_mod(&acc, &b, f, p);
            }
            b = mul_mod(&b, &b, f, p);
            k >>= 1;
        }
        rem(&acc, f, p)
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let n = a.len().max(b.len());
        let mut out: Vec<u64> = (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect();
        trim(&mut out);
        out
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    /// Rabin's irreducibility test for a monic `f` of degree `r >= 1`.
    pub fn is_irreducible(f: &[u64], p: u64) -> bool {
        let r = (f.len() - 1) as u64;
        if r == 1 {
            return true;
        }
        let x = vec![0u64, 1];
        let frob = |k: u64| {
            let mut h = x.clone();
            for _ in 0..k {
                h = pow_poly_mod(&h, p, f, p);
            }
            h
        };
        if rem(&frob(r), f, p) != rem(&x, f, p) {
            return false;
        }
        for l in super::prime_factors(r) {
            let h = sub(&frob(r / l), &x, p);
            if gcd(&h, f, p).len() != 1 {
                return false;
            }
        }
        true
    }
}

/// Canonical modulus of `F_{p^r}`: smallest monic irreducible of degree `r`
/// with coefficient tuples `(c_0, ..., c_{r-1})` compared lexicographically.
/// Returned ascending and monic.
pub fn canonical_modulus(p: u64, r: u32) -> Vec<u64> {
    let count = p.pow(r);
    for k in 0..count {
        let mut f = lex_tuple(k, p, r);
        f.push(1);
        if r > 1 && f[0] == 0 {
            continue;
        }
        if fp::is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists")
}

// The k-th coordinate tuple of length r in lexicographic order, c_0 most
// significant.
fn lex_tuple(mut k: u64, p: u64, r: u32) -> Vec<u64> {
    let mut t = vec![0u64; r as usize];
    for i in (0..r as usize).rev() {
        t[i] = k % p;
        k /= p;
    }
    t
}

#[derive(Debug)]
struct FieldInner {
    p: u64,
    r: u32,
    q: u64,
    modulus: Vec<u64>,
    generator: FieldElem,
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// The finite field `F_{p^r}` with its canonical modulus and primitive element.
#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field(F_{}^{})", self.0.p, self.0.r)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.p == other.0.p && self.0.r == other.0.r
    }
}

impl Eq for Field {}

/// Builds `F_{p^r}` under the default size cap.
pub fn make_field(p: u64, r: u32) -> Result<Field> {
    Field::with_cap(p, r, DEFAULT_FIELD_CAP)
}

impl Field {
    pub fn with_cap(p: u64, r: u32, cap: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if r == 0 {
            return Err(Error::InvalidParameter(
                "extension degree must be >= 1".into(),
            ));
        }
        let q = (p as u128).checked_pow(r).unwrap_or(u128::MAX);
        if q > cap as u128 || q > u32::MAX as u128 {
            return Err(Error::cap(format!("field F_{p}^{r}"), q, cap as u128));
        }
        let q = q as u64;
        let modulus = canonical_modulus(p, r);
        let order = q - 1;
        let factors = prime_factors(order);

        let mut generator = None;
        for k in 1..q {
            let t = lex_tuple(k, p, r);
            let mut poly = t.clone();
            fp::trim(&mut poly);
            let is_gen = factors
                .iter()
                .all(|&l| fp::pow_poly_mod(&poly, order / l, &modulus, p) != vec![1u64]);
            if is_gen {
                generator = Some(t);
                break;
            }
        }
        let gen = generator.expect("F_q^* is cyclic");

        // Columns of multiplication by g in the polynomial basis.
        let cols: Vec<Vec<u64>> = (0..r as usize)
            .map(|i| {
                let mut xi = vec![0u64; i + 1];
                xi[i] = 1;
                let mut c = fp::mul_mod(&gen, &xi, &modulus, p);
                c.resize(r as usize, 0);
                c
            })
            .collect();
        let pack = |d: &[u64]| -> u32 { d.iter().rev().fold(0u64, |acc, &c| acc * p + c) as u32 };
        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![0u32; q as usize];
        let mut cur = vec![0u64; r as usize];
        cur[0] = 1;
        for i in 0..order {
            let packed = pack(&cur);
            exp.push(packed);
            log[packed as usize] = i as u32;
            let mut next = vec![0u64; r as usize];
            for (ci, col) in cur.iter().zip(&cols) {
                if *ci == 0 {
                    continue;
                }
                for (n, &c) in next.iter_mut().zip(col) {
                    *n = (*n + ci * c) % p;
                }
            }
            cur = next;
        }
        let generator = FieldElem(pack(&gen));
        Ok(Field(Arc::new(FieldInner {
            p,
            r,
            q,
            modulus,
            generator,
            exp,
            log,
        })))
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn r(&self) -> u32 {
        self.0.r
    }

    pub fn q(&self) -> u64 {
        self.0.q
    }

    /// Monic modulus, ascending coefficients in `[0, p)`.
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    /// The canonical primitive element `g`.
    pub fn generator(&self) -> FieldElem {
        self.0.generator
    }

    pub fn coords(&self, a: FieldElem) -> Vec<u64> {
        let mut v = a.0 as u64;
        (0..self.0.r)
            .map(|_| {
                let c = v % self.0.p;
                v /= self.0.p;
                c
            })
            .collect()
    }

    /// Element with the given polynomial-basis coordinates (reduced mod `p`).
    pub fn from_coords(&self, coords: &[i64]) -> Result<FieldElem> {
        if coords.len() > self.0.r as usize {
            return Err(Error::InvalidParameter(format!(
                "{} coordinates given for a degree-{} field",
                coords.len(),
                self.0.r
            )));
        }
        let p = self.0.p as i64;
        let v = coords
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * self.0.p + c.rem_euclid(p) as u64);
        Ok(FieldElem(v as u32))
    }

    /// `g^k`.
    pub fn gen_pow(&self, k: i64) -> FieldElem {
        let order = (self.0.q - 1) as i64;
        FieldElem(self.0.exp[k.rem_euclid(order) as usize])
    }

    /// The `i` with `g^i = a`, in `[0, q-1)`.
    pub fn discrete_log(&self, a: FieldElem) -> Result<u64> {
        if a.0 == 0 {
            return Err(Error::ZeroLog);
        }
        Ok(self.0.log[a.0 as usize] as u64)
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: FieldElem) -> Result<u64> {
        let i = self.discrete_log(a)?;
        let m = self.0.q - 1;
        Ok(m / i.gcd(&m))
    }

    /// The canonical `n`-th root of `lambda`: the root `g^j` with the smallest
    /// `j`, or `None` when `gcd(n, q-1)` does not divide `log(lambda)`.
    pub fn nth_root(&self, lambda: FieldElem, n: u64) -> Result<Option<FieldElem>> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "root index must be positive".into(),
            ));
        }
        let i = self.discrete_log(lambda)? as i128;
        let m = (self.0.q - 1) as i128;
        let d = (n as i128).gcd(&m);
        if i % d != 0 {
            return Ok(None);
        }
        let md = m / d;
        let j = if md == 1 {
            0
        } else {
            let inv = inv_mod((n as i128 / d) % md, md).expect("n/d is coprime to m/d");
            ((i / d) % md * inv).rem_euclid(md)
        };
        Ok(Some(self.gen_pow(j as i64)))
    }

    /// Canonical square root of `-1` (the smaller of the two), if one exists.
    pub fn sqrt_minus_one(&self) -> Result<Option<FieldElem>> {
        if self.0.p == 2 {
            return Err(Error::InvalidParameter(
                "square roots of -1 are only considered in odd characteristic".into(),
            ));
        }
        let m = self.0.q - 1;
        if !m.is_multiple_of(4) {
            return Ok(None);
        }
        let z = self.gen_pow((m / 4) as i64);
        let w = self.neg(z);
        Ok(Some(match self.cmp_elems(z, w) {
            Ordering::Greater => w,
            _ => z,
        }))
    }

    fn digits_binop(&self, a: u32, b: u32, f: impl Fn(u64, u64) -> u64) -> u32 {
        let p = self.0.p;
        let (mut a, mut b) = (a as u64, b as u64);
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.0.r {
            out += f(a % p, b % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out as u32
    }
}

/// Whether `-1` is a square in `F_{p^r}`: `p = 1 (mod 4)`, or `p = 3 (mod 4)`
/// with `r` even.
pub fn minus_one_is_square(p: u64, r: u32) -> Result<bool> {
    if p == 2 {
        return Err(Error::InvalidParameter(
            "characteristic 2 is excluded (-1 = 1)".into(),
        ));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(p % 4 == 1 || r.is_multiple_of(2))
}

impl Ring for Field {
    type Elem = FieldElem;

    fn zero(&self) -> FieldElem {
        FieldElem(0)
    }

    fn one(&self) -> FieldElem {
        FieldElem(1)
    }

    fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let p = self.0.p;
        if self.0.r == 1 {
            FieldElem(((a.0 as u64 + b.0 as u64) % p) as u32)
        } else if p == 2 {
            FieldElem(a.0 ^ b.0)
        } else {
            FieldElem(self.digits_binop(a.0, b.0, |x, y| (x + y) % p))
        }
    }

    fn neg(&self, a: FieldElem) -> FieldElem {
        let p = self.0.p;
        if p == 2 {
            a
        } else if self.0.r == 1 {
            FieldElem(((p - a.0 as u64) % p) as u32)
        } else {
            FieldElem(self.digits_binop(a.0, 0, |x, _| (p - x) % p))
        }
    }

    fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let p = self.0.p;
        if self.0.r == 1 {
            FieldElem(((a.0 as u64 + p - b.0 as u64) % p) as u32)
        } else if p == 2 {
            FieldElem(a.0 ^ b.0)
        } else {
            FieldElem(self.digits_binop(a.0, b.0, |x, y| (x + p - y) % p))
        }
    }

    fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.0 == 0 || b.0 == 0 {
            return FieldElem(0);
        }
        let m = self.0.q - 1;
        let i = self.0.log[a.0 as usize] as u64 + self.0.log[b.0 as usize] as u64;
        FieldElem(self.0.exp[(i % m) as usize])
    }

    fn pow(&self, a: FieldElem, k: u64) -> FieldElem {
        if k == 0 {
            return FieldElem(1);
        }
        if a.0 == 0 {
            return FieldElem(0);
        }
        let m = self.0.q - 1;
        let i = (self.0.log[a.0 as usize] as u128 * k as u128 % m as u128) as usize;
        FieldElem(self.0.exp[i])
    }

    fn from_int(&self, k: i64) -> FieldElem {
        FieldElem(k.rem_euclid(self.0.p as i64) as u32)
    }

    fn is_unit(&self, a: FieldElem) -> bool {
        a.0 != 0
    }

    fn inv(&self, a: FieldElem) -> Option<FieldElem> {
        if a.0 == 0 {
            return None;
        }
        let m = self.0.q - 1;
        let i = self.0.log[a.0 as usize] as u64;
        Some(FieldElem(self.0.exp[((m - i) % m) as usize]))
    }

    fn size(&self) -> u64 {
        self.0.q
    }

    fn index_of(&self, a: FieldElem) -> u64 {
        a.0 as u64
    }

    fn elem_at(&self, index: u64) -> FieldElem {
        FieldElem(index as u32)
    }

    fn cmp_elems(&self, a: FieldElem, b: FieldElem) -> Ordering {
        if self.0.r == 1 {
            return a.0.cmp(&b.0);
        }
        self.coords(a).cmp(&self.coords(b))
    }

    fn fmt_elem(&self, a: FieldElem) -> String {
        if let Some(k) = self.as_int(a) {
            k.to_string()
        } else {
            let c: Vec<String> = self.coords(a).iter().map(|c| c.to_string()).collect();
            format!("[{}]", c.join(","))
        }
    }

    fn elem_json(&self, a: FieldElem) -> serde_json::Value {
        if self.0.r == 1 {
            serde_json::json!(a.0)
        } else {
            serde_json::json!(self.coords(a))
        }
    }

    fn descriptor(&self) -> String {
        format!("Fq:{}^{}", self.0.p, self.0.r)
    }

    fn characteristic(&self) -> u64 {
        self.0.p
    }

    fn as_int(&self, a: FieldElem) -> Option<u64> {
        ((a.0 as u64) < self.0.p).then_some(a.0 as u64)
    }
}

impl FiniteChainRing for Field {
    fn residue_field(&self) -> &Field {
        self
    }

    fn mu(&self, a: FieldElem) -> FieldElem {
        a
    }

    fn lift_residue(&self, a: FieldElem) -> FieldElem {
        a
    }

    fn nilpotency(&self) -> u32 {
        1
    }

    fn gamma_pow(&self, v: u32) -> FieldElem {
        if v == 0 {
            self.one()
        } else {
            self.zero()
        }
    }

    fn valuation(&self, a: FieldElem) -> u32 {
        if a.0 == 0 {
            1
        } else {
            0
        }
    }

    fn div_gamma_pow(&self, a: FieldElem, v: u32) -> FieldElem {
        if v == 0 {
            a
        } else {
            self.zero()
        }
    }

    fn residue_rep(&self, a: FieldElem, v: u32) -> FieldElem {
        if v == 0 {
            self.zero()
        } else {
            a
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Trial division by every monic polynomial of degree <= r/2.
    fn irreducible_by_trial_division(f: &[u64], p: u64) -> bool {
        let r = f.len() as u32 - 1;
        for d in 1..=r / 2 {
            for k in 0..p.pow(d) {
                let mut g = lex_tuple(k, p, d);
                g.push(1);
                if fp::rem(f, &g, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn cardinality_and_generators() {
        let f = make_field(3, 3).unwrap();
        assert_eq!(f.q(), 27);
        let f5 = make_field(5, 1).unwrap();
        assert_eq!(f5.generator(), FieldElem(2));
        // ord(2) = 4 by direct powers.
        let powers: Vec<u32> = (1..=4).map(|k| f5.pow(FieldElem(2), k).0).collect();
        assert_eq!(powers, vec![2, 4, 3, 1]);
    }

    #[test]
    fn canonical_modulus_matches_exhaustive_search() {
        for &(p, r) in &[
            (2u64, 4u32),
            (2, 2),
            (2, 3),
            (3, 2),
            (3, 3),
            (5, 2),
            (2, 6),
            (7, 2),
        ] {
            let mut first = None;
            for k in 0..p.pow(r) {
                let mut f = lex_tuple(k, p, r);
                f.push(1);
                if irreducible_by_trial_division(&f, p) {
                    first = Some(f);
                    break;
                }
            }
            assert_eq!(canonical_modulus(p, r), first.unwrap(), "p={p} r={r}");
        }
        // 1 + x^3 + x^4 precedes 1 + x + x^4 in this order.
        assert_eq!(canonical_modulus(2, 4), vec![1, 0, 0, 1, 1]);
    }

    #[test]
    fn discrete_logs_in_f5() {
        let f = make_field(5, 1).unwrap();
        assert_eq!(f.discrete_log(FieldElem(1)).unwrap(), 0);
        assert_eq!(f.discrete_log(FieldElem(2)).unwrap(), 1);
        assert_eq!(f.discrete_log(FieldElem(4)).unwrap(), 2);
        assert_eq!(f.discrete_log(FieldElem(0)), Err(Error::ZeroLog));
    }

    #[test]
    fn generator_has_full_order() {
        for &(p, r) in &[
            (2u64, 1u32),
            (2, 5),
            (3, 3),
            (5, 2),
            (7, 1),
            (13, 1),
            (2, 6),
        ] {
            let f = make_field(p, r).unwrap();
            let g = f.generator();
            let mut x = f.one();
            for k in 1..f.q() {
                x = f.mul(x, g);
                assert_eq!(x == f.one(), k == f.q() - 1, "p={p} r={r} k={k}");
            }
        }
    }

    #[test]
    fn nth_root_examples() {
        let f27 = make_field(3, 3).unwrap();
        let lam = f27.gen_pow(2);
        let d = f27.nth_root(lam, 90).unwrap().unwrap();
        assert_eq!(f27.pow(d, 90), lam);
        assert_eq!(f27.nth_root(f27.one(), 7).unwrap(), Some(f27.one()));
        let f5 = make_field(5, 1).unwrap();
        assert_eq!(f5.nth_root(FieldElem(2), 2).unwrap(), None);
        assert!(f5.nth_root(FieldElem(0), 2).is_err());
    }

    #[test]
    fn minus_one_squares() {
        assert!(minus_one_is_square(13, 1).unwrap());
        assert!(minus_one_is_square(3, 2).unwrap());
        assert!(!minus_one_is_square(3, 1).unwrap());
        assert!(minus_one_is_square(2, 1).is_err());
        let f5 = make_field(5, 1).unwrap();
        assert_eq!(f5.sqrt_minus_one().unwrap(), Some(FieldElem(2)));
        let f13 = make_field(13, 1).unwrap();
        assert_eq!(f13.sqrt_minus_one().unwrap(), Some(FieldElem(5)));
        let f7 = make_field(7, 1).unwrap();
        assert_eq!(f7.sqrt_minus_one().unwrap(), None);
        assert!(make_field(2, 3).unwrap().sqrt_minus_one().is_err());
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(make_field(4, 1).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(make_field(2, 17), Err(Error::CapExceeded { .. })));
        assert!(Field::with_cap(2, 17, 1 << 17).is_ok());
    }

    #[test]
    fn serialization_forms() {
        let f27 = make_field(3, 3).unwrap();
        let a = f27.from_coords(&[2, 0, 1]).unwrap();
        assert_eq!(f27.fmt_elem(a), "[2,0,1]");
        assert_eq!(f27.elem_json(a), serde_json::json!([2, 0, 1]));
        let f5 = make_field(5, 1).unwrap();
        assert_eq!(f5.elem_json(FieldElem(3)), serde_json::json!(3));
    }
}
