//! Finite chain rings: Galois rings `GR(p^e, r)` (maximal ideal `<p>`) and
//! truncated polynomial rings `F_{p^r}[u]/(u^e)` (maximal ideal `<u>`).

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::ffield::{Field, FieldElem, DEFAULT_FIELD_CAP};
use crate::ring::{FiniteChainRing, Ring};

/// Maximum number of stored coordinates (`r` for Galois rings, `e` for
/// `F_q[u]/(u^e)`).
pub const MAX_COORDS: usize = 20;

/// Default bound on `|R|`.
pub const DEFAULT_RING_CAP: u64 = 1 << 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `GR(p^e, r) = Z_{p^e}[x]/(f)`, `gamma = p`.
    Galois,
    /// `F_{p^r}[u]/(u^e)`, `gamma = u`.
    UAdic,
}

/// Element of a [`ChainRing`]: `Z_{p^e}` coordinates against the modulus basis
/// (Galois family) or packed `F_{p^r}` coefficients of `1, u, ..., u^{e-1}`.
/// Unused trailing slots are zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct RingElem {
    pub(crate) c: [u32; MAX_COORDS],
}

impl RingElem {
    const ZERO: RingElem = RingElem { c: [0; MAX_COORDS] };

    fn basis(i: usize, value: u32) -> RingElem {
        let mut e = RingElem::ZERO;
        e.c[i] = value;
        e
    }
}

struct Inner {
    family: Family,
    p: u64,
    e: u32,
    r: u32,
    /// `p^e` (Galois family only).
    pe: u64,
    residue: Field,
    /// Monic modulus over `Z_{p^e}`, ascending (Galois family only).
    modulus: Vec<u64>,
    len: usize,
    size: u64,
    /// Primitive `(p^r - 1)`-th root of unity (Galois family only).
    xi: RingElem,
}

/// A finite chain ring from one of the two supported families.
#[derive(Clone)]
pub struct ChainRing(Arc<Inner>);

impl fmt::Debug for ChainRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChainRing({})", self.descriptor())
    }
}

impl PartialEq for ChainRing {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = (&self.0, &other.0);
        a.family == b.family && a.p == b.p && a.e == b.e && a.r == b.r
    }
}

impl Eq for ChainRing {}

/// Builds a chain ring under the default caps.
pub fn make_chain_ring(family: Family, p: u64, e: u32, r: u32) -> Result<ChainRing> {
    ChainRing::with_caps(family, p, e, r, DEFAULT_FIELD_CAP, DEFAULT_RING_CAP)
}

impl ChainRing {
    pub fn galois(p: u64, e: u32, r: u32) -> Result<ChainRing> {
        make_chain_ring(Family::Galois, p, e, r)
    }

    pub fn u_adic(p: u64, r: u32, e: u32) -> Result<ChainRing> {
        make_chain_ring(Family::UAdic, p, e, r)
    }

    /// `Z_{p^e}`.
    pub fn integers_mod(p: u64, e: u32) -> Result<ChainRing> {
        make_chain_ring(Family::Galois, p, e, 1)
    }

    pub fn with_caps(
        family: Family,
        p: u64,
        e: u32,
        r: u32,
        field_cap: u64,
        ring_cap: u64,
    ) -> Result<ChainRing> {
        if e == 0 {
            return Err(Error::InvalidParameter(
                "nilpotency index must be >= 1".into(),
            ));
        }
        let residue = Field::with_cap(p, r, field_cap)?;
        let size = (p as u128)
            .checked_pow(e * r)
            .filter(|&s| s <= u64::MAX as u128)
            .unwrap_or(u128::MAX);
        if size > ring_cap as u128 {
            return Err(Error::cap("chain ring", size, ring_cap as u128));
        }
        let len = match family {
            Family::Galois => r as usize,
            Family::UAdic => e as usize,
        };
        if len > MAX_COORDS {
            return Err(Error::InvalidParameter(format!(
                "at most {MAX_COORDS} coordinates are supported, {len} requested"
            )));
        }
        let pe = match family {
            Family::Galois => {
                let pe = (p as u128).pow(e);
                if pe > u32::MAX as u128 {
                    return Err(Error::cap("p^e", pe, u32::MAX as u128));
                }
                pe as u64
            }
            Family::UAdic => 0,
        };
        let mut inner = Inner {
            family,
            p,
            e,
            r,
            pe,
            residue: residue.clone(),
            modulus: Vec::new(),
            len,
            size: size as u64,
            xi: RingElem::ZERO,
        };
        if family == Family::Galois {
            // Start from the coordinate lift of the residue modulus, then replace
            // it by the minimal polynomial of the Teichmüller lift of its root,
            // which divides x^{p^r - 1} - 1.
            inner.modulus = residue.modulus().to_vec();
            if r > 1 {
                let tmp = ChainRing(Arc::new(Inner {
                    modulus: inner.modulus.clone(),
                    residue: residue.clone(),
                    ..inner
                }));
                let theta = tmp.frobenius_lift(RingElem::basis(1, 1));
                let mut f = vec![tmp.one()];
                let mut root = theta;
                for _ in 0..r {
                    // f *= (y - root)
                    let mut next = vec![tmp.zero(); f.len() + 1];
                    for (i, &c) in f.iter().enumerate() {
                        next[i + 1] = tmp.add(next[i + 1], c);
                        next[i] = tmp.sub(next[i], tmp.mul(c, root));
                    }
                    f = next;
                    root = tmp.pow(root, p);
                }
                if f.iter().any(|c| c.c[1..].iter().any(|&x| x != 0)) {
                    return Err(Error::Internal(
                        "Teichmüller minimal polynomial has non-scalar coefficients".into(),
                    ));
                }
                inner = Inner {
                    modulus: f.iter().map(|c| c.c[0] as u64).collect(),
                    residue: residue.clone(),
                    ..Arc::try_unwrap(tmp.0)
                        .ok()
                        .expect("temporary ring is unshared")
                };
            }
            let ring = ChainRing(Arc::new(inner));
            let xi = ring.teichmuller_of(residue.generator());
            let mut inner = Arc::try_unwrap(ring.0).ok().expect("ring is unshared");
            inner.xi = xi;
            return Ok(ChainRing(Arc::new(inner)));
        }
        Ok(ChainRing(Arc::new(inner)))
    }

    pub fn family(&self) -> Family {
        self.0.family
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn e(&self) -> u32 {
        self.0.e
    }

    pub fn r(&self) -> u32 {
        self.0.r
    }

    /// Number of stored coordinates.
    pub fn rank(&self) -> usize {
        self.0.len
    }

    /// Monic modulus over `Z_{p^e}` (Galois family); empty otherwise.
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn coords(&self, a: RingElem) -> Vec<u64> {
        a.c[..self.0.len].iter().map(|&c| c as u64).collect()
    }

    /// Element from coordinates: integers mod `p^e` (Galois) or field
    /// elements (u-adic).
    pub fn from_coords(&self, coords: &[i64]) -> Result<RingElem> {
        if coords.len() > self.0.len {
            return Err(Error::InvalidParameter(format!(
                "{} coordinates given, ring has {}",
                coords.len(),
                self.0.len
            )));
        }
        let mut out = RingElem::ZERO;
        for (slot, &c) in out.c.iter_mut().zip(coords) {
            *slot = match self.0.family {
                Family::Galois => c.rem_euclid(self.0.pe as i64) as u32,
                Family::UAdic => c.rem_euclid(self.0.p as i64) as u32,
            };
        }
        Ok(out)
    }

    /// Element from u-adic field coefficients.
    pub fn from_field_coeffs(&self, coeffs: &[FieldElem]) -> Result<RingElem> {
        if self.0.family != Family::UAdic || coeffs.len() > self.0.len {
            return Err(Error::InvalidParameter(
                "field coefficients only describe elements of F_q[u]/(u^e)".into(),
            ));
        }
        let mut out = RingElem::ZERO;
        for (slot, c) in out.c.iter_mut().zip(coeffs) {
            *slot = c.0;
        }
        Ok(out)
    }

    fn require_galois(&self) -> Result<()> {
        match self.0.family {
            Family::Galois => Ok(()),
            Family::UAdic => Err(Error::InvalidParameter(
                "Teichmüller digits are only defined for Galois rings".into(),
            )),
        }
    }

    // a^(q^(e-1)), computed as r(e-1) successive p-th powers.
    fn frobenius_lift(&self, a: RingElem) -> RingElem {
        let mut x = a;
        for _ in 0..(self.0.r * (self.0.e - 1)) {
            x = self.pow(x, self.0.p);
        }
        x
    }

    /// Teichmüller representative of a residue: the unique `t` with
    /// `mu(t) = a` and `t^q = t`.
    pub fn teichmuller_of(&self, a: FieldElem) -> RingElem {
        self.frobenius_lift(self.lift_residue(a))
    }

    /// Primitive element `xi` of a Galois ring (order `p^r - 1`).
    pub fn primitive_element(&self) -> Result<RingElem> {
        self.require_galois()?;
        Ok(self.0.xi)
    }

    /// The Teichmüller set `{0, 1, xi, ..., xi^{p^r - 2}}` in that order.
    pub fn teichmuller(&self) -> Result<Vec<RingElem>> {
        self.require_galois()?;
        let q = self.0.residue.q();
        let mut out = Vec::with_capacity(q as usize);
        out.push(self.zero());
        let mut t = self.one();
        for _ in 0..q - 1 {
            out.push(t);
            t = self.mul(t, self.0.xi);
        }
        Ok(out)
    }

    /// Digits `a_0, ..., a_{e-1}` in the Teichmüller set with
    /// `a = sum a_i p^i`.
    pub fn p_adic_repr(&self, a: RingElem) -> Result<PAdicRepr> {
        self.require_galois()?;
        let mut digits = Vec::with_capacity(self.0.e as usize);
        let mut rest = a;
        for _ in 0..self.0.e {
            let d = self.teichmuller_of(self.mu(rest));
            digits.push(d);
            let diff = self.sub(rest, d);
            rest = self.div_gamma_pow(diff, 1);
        }
        Ok(PAdicRepr { digits })
    }

    pub fn from_p_adic(&self, repr: &PAdicRepr) -> RingElem {
        let p = self.gamma();
        repr.digits
            .iter()
            .rev()
            .fold(self.zero(), |acc, &d| self.add(self.mul(acc, p), d))
    }

    /// Teichmüller exponents of the digits (`-1` encodes the zero digit).
    pub fn p_adic_exponents(&self, repr: &PAdicRepr) -> Vec<i64> {
        repr.digits
            .iter()
            .map(|&d| match self.0.residue.discrete_log(self.mu(d)) {
                Ok(k) => k as i64,
                Err(_) => -1,
            })
            .collect()
    }

    fn galois_mul(&self, a: RingElem, b: RingElem) -> RingElem {
        let pe = self.0.pe;
        let r = self.0.len;
        if r == 1 {
            return RingElem::basis(0, (a.c[0] as u64 * b.c[0] as u64 % pe) as u32);
        }
        let mut t = [0u64; 2 * MAX_COORDS];
        for i in 0..r {
            let ai = a.c[i] as u64;
            if ai == 0 {
                continue;
            }
            for j in 0..r {
                t[i + j] = (t[i + j] + ai * b.c[j] as u64 % pe) % pe;
            }
        }
        let f = &self.0.modulus;
        for k in (r..2 * r - 1).rev() {
            let c = t[k];
            if c == 0 {
                continue;
            }
            t[k] = 0;
            let neg = pe - c;
            for i in 0..r {
                t[k - r + i] = (t[k - r + i] + neg * f[i] % pe) % pe;
            }
        }
        let mut out = RingElem::ZERO;
        for i in 0..r {
            out.c[i] = t[i] as u32;
        }
        out
    }

    fn uadic_mul(&self, a: RingElem, b: RingElem) -> RingElem {
        let k = &self.0.residue;
        let e = self.0.len;
        let mut out = RingElem::ZERO;
        for i in 0..e {
            if a.c[i] == 0 {
                continue;
            }
            for j in 0..e - i {
                let prod = k.mul(FieldElem(a.c[i]), FieldElem(b.c[j]));
                out.c[i + j] = k.add(FieldElem(out.c[i + j]), prod).0;
            }
        }
        out
    }
}

/// `p`-adic representation of a Galois-ring element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PAdicRepr {
    pub digits: Vec<RingElem>,
}

impl Ring for ChainRing {
    type Elem = RingElem;

    fn zero(&self) -> RingElem {
        RingElem::ZERO
    }

    fn one(&self) -> RingElem {
        RingElem::basis(0, 1)
    }

    fn add(&self, a: RingElem, b: RingElem) -> RingElem {
        let mut out = RingElem::ZERO;
        match self.0.family {
            Family::Galois => {
                let pe = self.0.pe;
                for i in 0..self.0.len {
                    out.c[i] = ((a.c[i] as u64 + b.c[i] as u64) % pe) as u32;
                }
            }
            Family::UAdic => {
                let k = &self.0.residue;
                for i in 0..self.0.len {
                    out.c[i] = k.add(FieldElem(a.c[i]), FieldElem(b.c[i])).0;
                }
            }
        }
        out
    }

    fn neg(&self, a: RingElem) -> RingElem {
        let mut out = RingElem::ZERO;
        match self.0.family {
            Family::Galois => {
                let pe = self.0.pe;
                for i in 0..self.0.len {
                    out.c[i] = ((pe - a.c[i] as u64) % pe) as u32;
                }
            }
            Family::UAdic => {
                let k = &self.0.residue;
                for i in 0..self.0.len {
                    out.c[i] = k.neg(FieldElem(a.c[i])).0;
                }
            }
        }
        out
    }

    fn mul(&self, a: RingElem, b: RingElem) -> RingElem {
        match self.0.family {
            Family::Galois => self.galois_mul(a, b),
            Family::UAdic => self.uadic_mul(a, b),
        }
    }

    fn from_int(&self, k: i64) -> RingElem {
        match self.0.family {
            Family::Galois => RingElem::basis(0, k.rem_euclid(self.0.pe as i64) as u32),
            Family::UAdic => RingElem::basis(0, k.rem_euclid(self.0.p as i64) as u32),
        }
    }

    fn is_unit(&self, a: RingElem) -> bool {
        self.mu(a).0 != 0
    }

    fn inv(&self, a: RingElem) -> Option<RingElem> {
        let k = &self.0.residue;
        let r0 = k.inv(self.mu(a))?;
        // Newton: b <- b (2 - a b), doubling gamma-adic precision each step.
        let mut b = self.lift_residue(r0);
        let two = self.from_int(2);
        for _ in 0..64 {
            let ab = self.mul(a, b);
            if ab == self.one() {
                return Some(b);
            }
            b = self.mul(b, self.sub(two, ab));
        }
        None
    }

    fn size(&self) -> u64 {
        self.0.size
    }

    fn index_of(&self, a: RingElem) -> u64 {
        let base = match self.0.family {
            Family::Galois => self.0.pe,
            Family::UAdic => self.0.residue.q(),
        };
        a.c[..self.0.len]
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * base + c as u64)
    }

    fn elem_at(&self, mut index: u64) -> RingElem {
        let base = match self.0.family {
            Family::Galois => self.0.pe,
            Family::UAdic => self.0.residue.q(),
        };
        let mut out = RingElem::ZERO;
        for slot in out.c[..self.0.len].iter_mut() {
            *slot = (index % base) as u32;
            index /= base;
        }
        out
    }

    fn cmp_elems(&self, a: RingElem, b: RingElem) -> Ordering {
        match self.0.family {
            Family::Galois => a.c[..self.0.len].cmp(&b.c[..self.0.len]),
            Family::UAdic => {
                let k = &self.0.residue;
                for i in 0..self.0.len {
                    let o = k.cmp_elems(FieldElem(a.c[i]), FieldElem(b.c[i]));
                    if o != Ordering::Equal {
                        return o;
                    }
                }
                Ordering::Equal
            }
        }
    }

    fn fmt_elem(&self, a: RingElem) -> String {
        if let Some(k) = self.as_int(a) {
            return k.to_string();
        }
        match self.0.family {
            Family::Galois if self.0.len == 1 => a.c[0].to_string(),
            Family::Galois => {
                let c: Vec<String> = self.coords(a).iter().map(|c| c.to_string()).collect();
                format!("[{}]", c.join(","))
            }
            Family::UAdic => {
                let k = &self.0.residue;
                let c: Vec<String> = a.c[..self.0.len]
                    .iter()
                    .map(|&c| k.fmt_elem(FieldElem(c)))
                    .collect();
                format!("[{}]", c.join(","))
            }
        }
    }

    fn elem_json(&self, a: RingElem) -> serde_json::Value {
        match self.0.family {
            Family::Galois if self.0.len == 1 => serde_json::json!(a.c[0]),
            Family::Galois => serde_json::json!(self.coords(a)),
            Family::UAdic => {
                let k = &self.0.residue;
                serde_json::Value::Array(
                    a.c[..self.0.len]
                        .iter()
                        .map(|&c| k.elem_json(FieldElem(c)))
                        .collect(),
                )
            }
        }
    }

    fn descriptor(&self) -> String {
        let i = &self.0;
        match i.family {
            Family::Galois if i.r == 1 => format!("Z:{}^{}", i.p, i.e),
            Family::Galois => format!("GR:{}^{}:{}", i.p, i.e, i.r),
            Family::UAdic => format!("U:{}^{}:{}", i.p, i.r, i.e),
        }
    }

    fn characteristic(&self) -> u64 {
        match self.0.family {
            Family::Galois => self.0.pe,
            Family::UAdic => self.0.p,
        }
    }

    fn as_int(&self, a: RingElem) -> Option<u64> {
        if a.c[1..self.0.len].iter().any(|&c| c != 0) {
            return None;
        }
        let k = a.c[0] as u64;
        (k < self.characteristic()).then_some(k)
    }
}

impl FiniteChainRing for ChainRing {
    fn residue_field(&self) -> &Field {
        &self.0.residue
    }

    fn mu(&self, a: RingElem) -> FieldElem {
        match self.0.family {
            Family::Galois => {
                let p = self.0.p;
                let v = a.c[..self.0.len]
                    .iter()
                    .rev()
                    .fold(0u64, |acc, &c| acc * p + c as u64 % p);
                FieldElem(v as u32)
            }
            Family::UAdic => FieldElem(a.c[0]),
        }
    }

    fn lift_residue(&self, a: FieldElem) -> RingElem {
        match self.0.family {
            Family::Galois => {
                let mut out = RingElem::ZERO;
                for (slot, c) in out.c.iter_mut().zip(self.0.residue.coords(a)) {
                    *slot = c as u32;
                }
                out
            }
            Family::UAdic => RingElem::basis(0, a.0),
        }
    }

    fn nilpotency(&self) -> u32 {
        self.0.e
    }

    fn gamma_pow(&self, v: u32) -> RingElem {
        if v >= self.0.e {
            return RingElem::ZERO;
        }
        match self.0.family {
            Family::Galois => RingElem::basis(0, self.0.p.pow(v) as u32),
            Family::UAdic => RingElem::basis(v as usize, 1),
        }
    }

    fn valuation(&self, a: RingElem) -> u32 {
        let e = self.0.e;
        match self.0.family {
            Family::Galois => {
                let p = self.0.p as u32;
                a.c[..self.0.len]
                    .iter()
                    .filter(|&&c| c != 0)
                    .map(|&c| {
                        let mut c = c;
                        let mut v = 0;
                        while c % p == 0 {
                            c /= p;
                            v += 1;
                        }
                        v
                    })
                    .min()
                    .unwrap_or(e)
            }
            Family::UAdic => a.c[..self.0.len]
                .iter()
                .position(|&c| c != 0)
                .map_or(e, |i| i as u32),
        }
    }

    fn div_gamma_pow(&self, a: RingElem, v: u32) -> RingElem {
        let mut out = RingElem::ZERO;
        match self.0.family {
            Family::Galois => {
                let pv = self.0.p.pow(v.min(self.0.e)) as u32;
                for i in 0..self.0.len {
                    out.c[i] = a.c[i] / pv;
                }
            }
            Family::UAdic => {
                let v = v as usize;
                for i in v..self.0.len {
                    out.c[i - v] = a.c[i];
                }
            }
        }
        out
    }

    fn residue_rep(&self, a: RingElem, v: u32) -> RingElem {
        let mut out = RingElem::ZERO;
        match self.0.family {
            Family::Galois => {
                let pv = self.0.p.pow(v.min(self.0.e)) as u32;
                for i in 0..self.0.len {
                    out.c[i] = a.c[i] % pv;
                }
            }
            Family::UAdic => {
                let v = (v as usize).min(self.0.len);
                out.c[..v].copy_from_slice(&a.c[..v]);
            }
        }
        out
    }
}

/// An `n`-th root of the unit `lambda`, obtained by Newton iteration
/// `x <- x - (x^n - lambda) / (n x^{n-1})` from the lift of the canonical
/// residue root. `None` when the residue field has no `n`-th root of
/// `mu(lambda)`.
pub fn lift_nth_root<R: FiniteChainRing>(
    ring: &R,
    lambda: R::Elem,
    n: u64,
) -> Result<Option<R::Elem>> {
    let p = ring.characteristic_prime();
    if n == 0 {
        return Err(Error::InvalidParameter(
            "root index must be positive".into(),
        ));
    }
    if n.is_multiple_of(p) {
        return Err(Error::Inapplicable(format!(
            "root lifting needs gcd(n, p) = 1, got n = {n}, p = {p}"
        )));
    }
    if !ring.is_unit(lambda) {
        return Err(Error::NonUnit);
    }
    let Some(root) = ring.residue_field().nth_root(ring.mu(lambda), n)? else {
        return Ok(None);
    };
    let n_elem = ring.from_int((n % ring.size().max(p)) as i64);
    let mut x = ring.lift_residue(root);
    for _ in 0..64 {
        let xn1 = ring.pow(x, n - 1);
        let xn = ring.mul(xn1, x);
        if xn == lambda {
            return Ok(Some(x));
        }
        let deriv = ring.mul(n_elem, xn1);
        let step = ring.mul(ring.sub(xn, lambda), ring.inv(deriv).ok_or(Error::NonUnit)?);
        x = ring.sub(x, step);
    }
    Err(Error::Internal(
        "Newton root lifting did not converge".into(),
    ))
}

/// Normalized homogeneous weight: `0` at zero, `q^{e-1}` on the minimal
/// ideal `<gamma^{e-1}>`, `(q-1) q^{e-2}` elsewhere; Hamming weight when
/// `e = 1`.
pub fn hom_weight<R: FiniteChainRing>(ring: &R, a: R::Elem) -> Ratio<u64> {
    if ring.is_zero(a) {
        return Ratio::from_integer(0);
    }
    let e = ring.nilpotency();
    if e == 1 {
        return Ratio::from_integer(1);
    }
    let q = ring.residue_size();
    if ring.valuation(a) == e - 1 {
        Ratio::from_integer(q.pow(e - 1))
    } else {
        Ratio::from_integer((q - 1) * q.pow(e - 2))
    }
}

/// `|ker(R^* -> K^*)| = |R^*| / (q - 1) = q^{e-1}`.
pub fn kernel_mu_star_order<R: FiniteChainRing>(ring: &R) -> u64 {
    ring.residue_size().pow(ring.nilpotency() - 1)
}
