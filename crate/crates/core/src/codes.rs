//! Constacyclic codes as ideals of `R[x]/(x^n - lambda)`.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigUint;
use num_rational::Ratio;

use crate::chainring::{hom_weight, lift_nth_root};
use crate::error::{Error, Result};
use crate::linalg::{howell_form, Howell};
use crate::poly::{Poly, PolyRing};
use crate::ring::FiniteChainRing;

/// Default bound on exhaustive enumerations.
pub const DEFAULT_ENUM_CAP: u64 = 1 << 20;

/// The ring `R[x]/(x^n - lambda)`; elements are coefficient vectors of
/// length `n`.
#[derive(Clone, Debug)]
pub struct QuotientRing<R: FiniteChainRing> {
    ring: R,
    n: usize,
    lambda: R::Elem,
}

impl<R: FiniteChainRing> QuotientRing<R> {
    pub fn new(ring: R, n: usize, lambda: R::Elem) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("length must be positive".into()));
        }
        if !ring.is_unit(lambda) {
            return Err(Error::NonUnit);
        }
        Ok(QuotientRing { ring, n, lambda })
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> R::Elem {
        self.lambda
    }

    pub fn poly_ring(&self) -> PolyRing<R> {
        PolyRing::new(self.ring.clone())
    }

    pub fn zero(&self) -> Vec<R::Elem> {
        vec![self.ring.zero(); self.n]
    }

    pub fn one(&self) -> Vec<R::Elem> {
        self.monomial(self.ring.one(), 0)
    }

    /// `c x^k`, reduced.
    pub fn monomial(&self, c: R::Elem, k: usize) -> Vec<R::Elem> {
        let mut w = self.zero();
        let wraps = (k / self.n) as u64;
        w[k % self.n] = self.ring.mul(c, self.ring.pow(self.lambda, wraps));
        w
    }

    /// Reduction of a polynomial modulo `x^n - lambda`.
    pub fn from_poly(&self, f: &Poly<R::Elem>) -> Vec<R::Elem> {
        let mut c = f.coeffs().to_vec();
        for k in (self.n..c.len()).rev() {
            let t = self.ring.mul(self.lambda, c[k]);
            c[k - self.n] = self.ring.add(c[k - self.n], t);
        }
        c.resize(self.n, self.ring.zero());
        c
    }

    pub fn to_poly(&self, w: &[R::Elem]) -> Poly<R::Elem> {
        self.poly_ring().from_coeffs(w.to_vec())
    }

    pub fn add(&self, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| self.ring.add(x, y))
            .collect()
    }

    pub fn sub(&self, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| self.ring.sub(x, y))
            .collect()
    }

    pub fn scale(&self, c: R::Elem, a: &[R::Elem]) -> Vec<R::Elem> {
        a.iter().map(|&x| self.ring.mul(c, x)).collect()
    }

    pub fn mul(&self, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
        let n = self.n;
        let ring = &self.ring;
        let mut lo = vec![ring.zero(); n];
        let mut hi = vec![ring.zero(); n];
        for (i, &x) in a.iter().enumerate() {
            if ring.is_zero(x) {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                let t = ring.mul(x, y);
                if i + j < n {
                    lo[i + j] = ring.add(lo[i + j], t);
                } else {
                    hi[i + j - n] = ring.add(hi[i + j - n], t);
                }
            }
        }
        for (l, h) in lo.iter_mut().zip(hi) {
            *l = ring.add(*l, ring.mul(self.lambda, h));
        }
        lo
    }

    pub fn pow(&self, a: &[R::Elem], mut k: u64) -> Vec<R::Elem> {
        let mut acc = self.one();
        let mut base = a.to_vec();
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

    /// `(lambda c_{n-1}, c_0, ..., c_{n-2})`, i.e. multiplication by `x`.
    pub fn shift(&self, c: &[R::Elem]) -> Vec<R::Elem> {
        let mut out = Vec::with_capacity(self.n);
        out.push(self.ring.mul(self.lambda, c[self.n - 1]));
        out.extend_from_slice(&c[..self.n - 1]);
        out
    }

    /// `|R|^n`, when it fits in a `u64`.
    pub fn size(&self) -> Option<u64> {
        self.ring.size().checked_pow(self.n as u32)
    }

    pub fn index_of(&self, w: &[R::Elem]) -> u64 {
        let s = self.ring.size();
        w.iter()
            .rev()
            .fold(0, |acc, &c| acc * s + self.ring.index_of(c))
    }

    pub fn elem_at(&self, mut index: u64) -> Vec<R::Elem> {
        let s = self.ring.size();
        (0..self.n)
            .map(|_| {
                let c = self.ring.elem_at(index % s);
                index /= s;
                c
            })
            .collect()
    }

    pub fn hamming_weight(&self, w: &[R::Elem]) -> usize {
        w.iter().filter(|&&c| !self.ring.is_zero(c)).count()
    }

    pub fn descriptor(&self) -> String {
        let pr = self.poly_ring();
        format!(
            "{}[x]/({})",
            self.ring.descriptor(),
            pr.fmt_signed(&pr.binomial(self.n, self.lambda))
        )
    }
}

/// Whether the `R`-span of `words` is closed under the constacyclic shift.
pub fn is_constacyclic_closed<R: FiniteChainRing>(
    q: &QuotientRing<R>,
    words: &[Vec<R::Elem>],
) -> bool {
    let span = howell_form(q.ring(), words, q.n());
    span.rows()
        .iter()
        .all(|w| span.contains(q.ring(), &q.shift(w)))
}

/// A code given by generators, stored with its canonical generator matrix.
#[derive(Clone, Debug)]
pub struct ConstaCode<R: FiniteChainRing> {
    ambient: QuotientRing<R>,
    generators: Vec<Vec<R::Elem>>,
    matrix: Howell<R::Elem>,
}

/// The ideal generated by `gens`: the span of all `x^j g`.
pub fn code_from_generators<R: FiniteChainRing>(
    q: &QuotientRing<R>,
    gens: &[Vec<R::Elem>],
) -> ConstaCode<R> {
    let mut rows = Vec::with_capacity(gens.len() * q.n());
    for g in gens {
        let mut w = g.clone();
        for _ in 0..q.n() {
            let next = q.shift(&w);
            rows.push(w);
            w = next;
        }
    }
    let matrix = howell_form(q.ring(), &rows, q.n());
    ConstaCode {
        ambient: q.clone(),
        generators: gens.to_vec(),
        matrix,
    }
}

/// Which weight a weight enumerator counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightKind {
    Hamming,
    Homogeneous,
}

impl<R: FiniteChainRing> ConstaCode<R> {
    pub fn ambient(&self) -> &QuotientRing<R> {
        &self.ambient
    }

    pub fn generators(&self) -> &[Vec<R::Elem>] {
        &self.generators
    }

    pub fn canonical_matrix(&self) -> &Howell<R::Elem> {
        &self.matrix
    }

    pub fn cardinality(&self) -> BigUint {
        self.matrix.cardinality(self.ambient.ring())
    }

    /// `log_q |C|` with `q` the residue field size.
    pub fn log_q_cardinality(&self) -> u64 {
        self.matrix.log_q_size(self.ambient.ring().nilpotency())
    }

    pub fn contains(&self, w: &[R::Elem]) -> bool {
        self.matrix.contains(self.ambient.ring(), w)
    }

    /// Whether `self` is a subset of `other`.
    pub fn is_subcode_of(&self, other: &ConstaCode<R>) -> bool {
        self.matrix.rows().iter().all(|w| other.contains(w))
    }

    pub fn same_code(&self, other: &ConstaCode<R>) -> bool {
        self.matrix == other.matrix
    }

    pub fn is_shift_closed(&self) -> bool {
        self.matrix
            .rows()
            .iter()
            .all(|w| self.contains(&self.ambient.shift(w)))
    }

    /// `C + D`.
    pub fn sum(&self, other: &ConstaCode<R>) -> ConstaCode<R> {
        let mut rows = self.matrix.rows().to_vec();
        rows.extend_from_slice(other.matrix.rows());
        let mut generators = self.generators.clone();
        generators.extend_from_slice(&other.generators);
        ConstaCode {
            ambient: self.ambient.clone(),
            generators,
            matrix: howell_form(self.ambient.ring(), &rows, self.ambient.n()),
        }
    }

    pub fn codewords(&self, cap: u64) -> Result<Vec<Vec<R::Elem>>> {
        self.matrix.enumerate(self.ambient.ring(), cap)
    }

    /// Number of codewords of each weight, indexed by weight. Homogeneous
    /// weights use the normalized weight, whose values are integers.
    pub fn weight_enumerator(&self, kind: WeightKind, cap: u64) -> Result<Vec<u64>> {
        let ring = self.ambient.ring();
        let mut dist: Vec<u64> = Vec::new();
        for w in self.codewords(cap)? {
            let wt = match kind {
                WeightKind::Hamming => self.ambient.hamming_weight(&w),
                WeightKind::Homogeneous => {
                    let total: Ratio<u64> = w.iter().map(|&c| hom_weight(ring, c)).sum();
                    total.to_integer() as usize
                }
            };
            if dist.len() <= wt {
                dist.resize(wt + 1, 0);
            }
            dist[wt] += 1;
        }
        Ok(dist)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let ring = self.ambient.ring();
        serde_json::json!({
            "ring": ring.descriptor(),
            "n": self.ambient.n(),
            "lambda": ring.elem_json(self.ambient.lambda()),
            "canonical_matrix": self.matrix.rows().iter().map(|row| {
                row.iter().map(|&c| ring.elem_json(c)).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
            "cardinality": self.cardinality().to_string(),
        })
    }
}

/// An `n`-th root of the unit `lambda`: the canonical field root when `e = 1`,
/// the Newton lift otherwise.
pub fn unit_nth_root<R: FiniteChainRing>(
    ring: &R,
    lambda: R::Elem,
    n: u64,
) -> Result<Option<R::Elem>> {
    if ring.nilpotency() == 1 {
        if !ring.is_unit(lambda) {
            return Err(Error::NonUnit);
        }
        let root = ring.residue_field().nth_root(ring.mu(lambda), n)?;
        return Ok(root.map(|r| ring.lift_residue(r)));
    }
    lift_nth_root(ring, lambda, n)
}

/// The isomorphism `f(x) -> f(delta^{-1} x)` from `R[x]/(x^n - lambda_1)` onto
/// `R[x]/(x^n - lambda_1 delta^n)`.
#[derive(Clone, Debug)]
pub struct EquivMap<R: FiniteChainRing> {
    source: QuotientRing<R>,
    target: QuotientRing<R>,
    delta: R::Elem,
    inv_powers: Vec<R::Elem>,
    powers: Vec<R::Elem>,
}

impl<R: FiniteChainRing> EquivMap<R> {
    pub fn new(source: &QuotientRing<R>, delta: R::Elem) -> Result<Self> {
        let ring = source.ring();
        let dinv = ring.inv(delta).ok_or(Error::NonUnit)?;
        let n = source.n();
        let lambda2 = ring.mul(source.lambda(), ring.pow(delta, n as u64));
        let target = QuotientRing::new(ring.clone(), n, lambda2)?;
        let mut powers = Vec::with_capacity(n);
        let mut inv_powers = Vec::with_capacity(n);
        let (mut a, mut b) = (ring.one(), ring.one());
        for _ in 0..n {
            powers.push(a);
            inv_powers.push(b);
            a = ring.mul(a, delta);
            b = ring.mul(b, dinv);
        }
        Ok(EquivMap {
            source: source.clone(),
            target,
            delta,
            inv_powers,
            powers,
        })
    }

    /// The map from `R[x]/(x^n - 1)` onto `R[x]/(x^n - lambda)` for an
    /// `n`-th root `delta` of `lambda`; `Inapplicable` when none exists.
    pub fn to_constacyclic(ring: &R, n: usize, lambda: R::Elem) -> Result<Self> {
        let delta = unit_nth_root(ring, lambda, n as u64)?.ok_or_else(|| {
            Error::Inapplicable(format!("{} has no {n}-th root", ring.fmt_elem(lambda)))
        })?;
        EquivMap::new(&QuotientRing::new(ring.clone(), n, ring.one())?, delta)
    }

    pub fn source(&self) -> &QuotientRing<R> {
        &self.source
    }

    pub fn target(&self) -> &QuotientRing<R> {
        &self.target
    }

    pub fn delta(&self) -> R::Elem {
        self.delta
    }

    pub fn apply(&self, f: &[R::Elem]) -> Vec<R::Elem> {
        let ring = self.source.ring();
        f.iter()
            .zip(&self.inv_powers)
            .map(|(&c, &d)| ring.mul(c, d))
            .collect()
    }

    pub fn apply_inverse(&self, g: &[R::Elem]) -> Vec<R::Elem> {
        let ring = self.source.ring();
        g.iter()
            .zip(&self.powers)
            .map(|(&c, &d)| ring.mul(c, d))
            .collect()
    }

    pub fn image(&self, code: &ConstaCode<R>) -> ConstaCode<R> {
        let gens: Vec<_> = code.generators().iter().map(|g| self.apply(g)).collect();
        code_from_generators(&self.target, &gens)
    }
}

/// Which quotient `crt_split` decomposes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CrtVariant {
    Cyclic,
    Negacyclic,
}

/// `R[x]/(x^{2m} - nu^2) = R[x]/(x^m - nu) + R[x]/(x^m + nu)` for odd `m` and
/// `2` a unit, with `nu = 1` (cyclic) or `nu^2 = -1` (negacyclic).
#[derive(Clone, Debug)]
pub struct CrtSplit<R: FiniteChainRing> {
    whole: QuotientRing<R>,
    first: QuotientRing<R>,
    second: QuotientRing<R>,
    nu: R::Elem,
    half: R::Elem,
    half_nu_inv: R::Elem,
}

pub fn crt_split<R: FiniteChainRing>(
    ring: &R,
    m: usize,
    variant: CrtVariant,
) -> Result<CrtSplit<R>> {
    let p = ring.characteristic_prime();
    if p == 2 {
        return Err(Error::Inapplicable(
            "splitting needs 2 to be a unit (p odd)".into(),
        ));
    }
    if m.is_multiple_of(2) {
        return Err(Error::Inapplicable(format!(
            "splitting needs odd m, got {m}"
        )));
    }
    let nu = match variant {
        CrtVariant::Cyclic => ring.one(),
        CrtVariant::Negacyclic => unit_nth_root(ring, ring.from_int(-1), 2)?
            .ok_or_else(|| Error::Inapplicable("-1 is not a square in the ring".into()))?,
    };
    let two_inv = ring.inv(ring.from_int(2)).ok_or(Error::NonUnit)?;
    let nu_inv = ring.inv(nu).ok_or(Error::NonUnit)?;
    Ok(CrtSplit {
        whole: QuotientRing::new(ring.clone(), 2 * m, ring.mul(nu, nu))?,
        first: QuotientRing::new(ring.clone(), m, nu)?,
        second: QuotientRing::new(ring.clone(), m, ring.neg(nu))?,
        nu,
        half: two_inv,
        half_nu_inv: ring.mul(two_inv, nu_inv),
    })
}

impl<R: FiniteChainRing> CrtSplit<R> {
    pub fn whole(&self) -> &QuotientRing<R> {
        &self.whole
    }

    pub fn components(&self) -> (&QuotientRing<R>, &QuotientRing<R>) {
        (&self.first, &self.second)
    }

    pub fn nu(&self) -> R::Elem {
        self.nu
    }

    /// `f -> (f mod x^m - nu, f mod x^m + nu)`.
    pub fn forward(&self, f: &[R::Elem]) -> (Vec<R::Elem>, Vec<R::Elem>) {
        let ring = self.whole.ring();
        let m = self.first.n();
        let (lo, hi) = f.split_at(m);
        let a = lo
            .iter()
            .zip(hi)
            .map(|(&l, &h)| ring.add(l, ring.mul(self.nu, h)))
            .collect();
        let b = lo
            .iter()
            .zip(hi)
            .map(|(&l, &h)| ring.sub(l, ring.mul(self.nu, h)))
            .collect();
        (a, b)
    }

    /// `(a, b) -> e_1 a + e_2 b`.
    pub fn backward(&self, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
        let ring = self.whole.ring();
        let lo = a
            .iter()
            .zip(b)
            .map(|(&x, &y)| ring.mul(self.half, ring.add(x, y)));
        let hi = a
            .iter()
            .zip(b)
            .map(|(&x, &y)| ring.mul(self.half_nu_inv, ring.sub(x, y)));
        lo.chain(hi).collect()
    }

    /// `e_1 = (x^m + nu) / (2 nu)` and `e_2 = -(x^m - nu) / (2 nu)`.
    pub fn idempotents(&self) -> (Vec<R::Elem>, Vec<R::Elem>) {
        let one = self.first.one();
        let zero = self.first.zero();
        (self.backward(&one, &zero), self.backward(&zero, &one))
    }
}

/// Principal ideals of one representative per orbit of `Q` under
/// multiplication by `x` and by scalar units, plus each element's orbit.
pub struct PrincipalOrbits<R: FiniteChainRing> {
    pub representatives: Vec<(u64, ConstaCode<R>)>,
    pub orbit_of: Vec<u32>,
}

pub fn principal_orbits<R: FiniteChainRing>(
    q: &QuotientRing<R>,
    cap: u64,
) -> Result<PrincipalOrbits<R>> {
    let size = q.size().filter(|&s| s <= cap).ok_or_else(|| {
        let s = (q.ring().size() as u128)
            .checked_pow(q.n() as u32)
            .unwrap_or(u128::MAX);
        Error::cap("quotient ring enumeration", s, cap as u128)
    })?;
    let units = q.ring().units();
    let mut orbit_of = vec![u32::MAX; size as usize];
    let mut representatives = Vec::new();
    for idx in 0..size {
        if orbit_of[idx as usize] != u32::MAX {
            continue;
        }
        let id = representatives.len() as u32;
        let f = q.elem_at(idx);
        for &u in &units {
            let mut w = q.scale(u, &f);
            for _ in 0..q.n() {
                orbit_of[q.index_of(&w) as usize] = id;
                w = q.shift(&w);
            }
        }
        representatives.push((idx, code_from_generators(q, &[f])));
    }
    Ok(PrincipalOrbits {
        representatives,
        orbit_of,
    })
}

/// Every ideal of `Q`, largest first.
pub fn enumerate_all_ideals<R: FiniteChainRing>(
    q: &QuotientRing<R>,
    cap: u64,
) -> Result<Vec<ConstaCode<R>>> {
    Ok(ideals_from_orbits(q, principal_orbits(q, cap)?))
}

/// Every ideal of `Q`, largest first, as sums of the principal ideals in `orbits`.
pub fn ideals_from_orbits<R: FiniteChainRing>(
    q: &QuotientRing<R>,
    orbits: PrincipalOrbits<R>,
) -> Vec<ConstaCode<R>> {
    let mut seen: HashSet<Howell<R::Elem>> = HashSet::new();
    let mut ideals: Vec<ConstaCode<R>> = Vec::new();
    for (_, code) in orbits.representatives {
        if seen.insert(code.canonical_matrix().clone()) {
            ideals.push(code);
        }
    }
    let mut start = 0;
    while start < ideals.len() {
        let end = ideals.len();
        for i in 0..end {
            for j in start.max(i + 1)..end {
                let s = ideals[i].sum(&ideals[j]);
                if seen.insert(s.canonical_matrix().clone()) {
                    ideals.push(s);
                }
            }
        }
        start = end;
    }
    sort_codes(q, &mut ideals);
    ideals
}

fn sort_codes<R: FiniteChainRing>(q: &QuotientRing<R>, codes: &mut [ConstaCode<R>]) {
    let key = |c: &ConstaCode<R>| {
        let rows: Vec<u64> = c
            .canonical_matrix()
            .rows()
            .iter()
            .map(|r| q.index_of(r))
            .collect();
        (std::cmp::Reverse(c.log_q_cardinality()), rows)
    };
    let mut keyed: BTreeMap<_, ConstaCode<R>> = BTreeMap::new();
    for c in codes.iter() {
        keyed.insert(key(c), c.clone());
    }
    for (slot, (_, c)) in codes.iter_mut().zip(keyed) {
        *slot = c;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chainring::ChainRing;
    use crate::ffield::make_field;
    use crate::ring::Ring;

    #[test]
    fn shifts() {
        let f7 = make_field(7, 1).unwrap();
        let q = QuotientRing::new(f7.clone(), 3, f7.one()).unwrap();
        let w: Vec<_> = [1, 2, 3].iter().map(|&k| f7.from_int(k)).collect();
        let s: Vec<_> = [3, 1, 2].iter().map(|&k| f7.from_int(k)).collect();
        assert_eq!(q.shift(&w), s);
        assert_eq!(q.shift(&w), q.mul(&q.monomial(f7.one(), 1), &w));

        let z25 = ChainRing::integers_mod(5, 2).unwrap();
        let q = QuotientRing::new(z25.clone(), 2, z25.from_int(-1)).unwrap();
        let c = vec![z25.from_int(4), z25.from_int(9)];
        assert_eq!(q.shift(&c), vec![z25.from_int(-9), z25.from_int(4)]);

        let z4 = ChainRing::integers_mod(2, 2).unwrap();
        let q = QuotientRing::new(z4.clone(), 2, z4.from_int(3)).unwrap();
        let c = vec![z4.from_int(1), z4.from_int(2)];
        assert_eq!(q.shift(&c), vec![z4.from_int(2), z4.from_int(1)]);
    }

    #[test]
    fn closure_and_generators() {
        let f5 = make_field(5, 1).unwrap();
        let q = QuotientRing::new(f5.clone(), 2, f5.one()).unwrap();
        assert!(!is_constacyclic_closed(&q, &[vec![f5.one(), f5.zero()]]));
        assert!(is_constacyclic_closed(&q, &[vec![f5.one(), f5.one()]]));
        let zero = code_from_generators(&q, &[q.zero()]);
        assert_eq!(zero.cardinality(), BigUint::from(1u32));
        let whole = code_from_generators(&q, &[q.one()]);
        assert_eq!(whole.cardinality(), BigUint::from(25u32));
    }

    #[test]
    fn equivalence_map() {
        let f5 = make_field(5, 1).unwrap();
        let src = QuotientRing::new(f5.clone(), 3, f5.one()).unwrap();
        let psi = EquivMap::new(&src, f5.from_int(3)).unwrap();
        assert_eq!(psi.target().lambda(), f5.from_int(2));
        let x_minus_1 = vec![f5.from_int(-1), f5.one(), f5.zero()];
        assert_eq!(
            psi.apply(&x_minus_1),
            vec![f5.from_int(-1), f5.from_int(2), f5.zero()]
        );
        assert_eq!(psi.apply(&src.one()), src.one());
        let a = vec![f5.from_int(1), f5.from_int(4), f5.from_int(2)];
        let b = vec![f5.from_int(3), f5.from_int(0), f5.from_int(1)];
        assert_eq!(
            psi.apply(&src.mul(&a, &b)),
            psi.target().mul(&psi.apply(&a), &psi.apply(&b))
        );
        assert_eq!(psi.apply_inverse(&psi.apply(&a)), a);
    }

    #[test]
    fn weight_enumerators() {
        let f2 = make_field(2, 1).unwrap();
        let q = QuotientRing::new(f2.clone(), 2, f2.one()).unwrap();
        let whole = code_from_generators(&q, &[q.one()]);
        assert_eq!(
            whole.weight_enumerator(WeightKind::Hamming, 16).unwrap(),
            vec![1, 2, 1]
        );
        let zero = code_from_generators(&q, &[q.zero()]);
        assert_eq!(
            zero.weight_enumerator(WeightKind::Hamming, 16).unwrap(),
            vec![1]
        );
    }

    #[test]
    fn crt_identities() {
        let z25 = ChainRing::integers_mod(5, 2).unwrap();
        for variant in [CrtVariant::Cyclic, CrtVariant::Negacyclic] {
            let split = crt_split(&z25, 9, variant).unwrap();
            let w = split.whole();
            let (e1, e2) = split.idempotents();
            assert_eq!(w.add(&e1, &e2), w.one());
            assert_eq!(w.mul(&e1, &e2), w.zero());
            assert_eq!(w.mul(&e1, &e1), e1);
        }
        let z27 = ChainRing::integers_mod(3, 3).unwrap();
        assert!(matches!(
            crt_split(&z27, 3, CrtVariant::Negacyclic),
            Err(Error::Inapplicable(_))
        ));
        let z4 = ChainRing::integers_mod(2, 2).unwrap();
        assert!(matches!(
            crt_split(&z4, 3, CrtVariant::Cyclic),
            Err(Error::Inapplicable(_))
        ));
    }

    #[test]
    fn small_ideal_lattices() {
        let z4 = ChainRing::integers_mod(2, 2).unwrap();
        let q = QuotientRing::new(z4.clone(), 2, z4.from_int(-1)).unwrap();
        let ideals = enumerate_all_ideals(&q, 1 << 10).unwrap();
        let sizes: Vec<u64> = ideals.iter().map(|c| 1 << c.log_q_cardinality()).collect();
        assert_eq!(sizes, vec![16, 8, 4, 2, 1]);

        // x^2 + x + 1 is irreducible over F_2.
        let f2 = make_field(2, 1).unwrap();
        let pr = PolyRing::new(f2.clone());
        let q = QuotientRing::new(f2.clone(), 3, f2.one()).unwrap();
        let ideals = enumerate_all_ideals(&q, 1 << 10).unwrap();
        assert_eq!(ideals.len(), 4);
        let field_part = code_from_generators(&q, &[q.from_poly(&pr.from_ints(&[1, 1]))]);
        assert_eq!(field_part.cardinality(), BigUint::from(4u32));
    }
}
