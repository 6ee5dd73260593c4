//! Exhaustive checks of the ideal structure of `R[x]/(x^{p^s} - lambda)` over
//! small Galois rings. Elements are handled as indices into addition and
//! multiplication tables so that quotients with `2^20` elements stay cheap.

use num_bigint::BigUint;

use crate::chainquot::ChainQuotient;
use crate::chainring::{ChainRing, Family, RingElem};
use crate::codes::{code_from_generators, ideals_from_orbits, PrincipalOrbits};
use crate::error::{Error, Result};
use crate::ffield::is_prime;
use crate::ring::{FiniteChainRing, Ring};

/// Largest ring for which [`Tables`] are built.
pub const MAX_TABLE_RING: u64 = 1 << 11;

/// Addition and multiplication tables of a small ring, by element index.
pub struct Tables {
    size: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    zero: u16,
    one: u16,
}

impl Tables {
    pub fn new<R: Ring>(ring: &R) -> Result<Self> {
        let size = ring.size();
        if size > MAX_TABLE_RING {
            return Err(Error::cap(
                "ring tables",
                size as u128,
                MAX_TABLE_RING as u128,
            ));
        }
        let elems = ring.elements();
        let n = size as usize;
        let mut add = vec![0u16; n * n];
        let mut mul = vec![0u16; n * n];
        for (i, &a) in elems.iter().enumerate() {
            for (j, &b) in elems.iter().enumerate().skip(i) {
                let s = ring.index_of(ring.add(a, b)) as u16;
                let m = ring.index_of(ring.mul(a, b)) as u16;
                add[i * n + j] = s;
                add[j * n + i] = s;
                mul[i * n + j] = m;
                mul[j * n + i] = m;
            }
        }
        Ok(Tables {
            size: n,
            add,
            mul,
            zero: ring.index_of(ring.zero()) as u16,
            one: ring.index_of(ring.one()) as u16,
        })
    }

    #[inline]
    fn add(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize * self.size + b as usize]
    }

    #[inline]
    fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.size + b as usize]
    }

    fn neg(&self, a: u16) -> u16 {
        (0..self.size as u16)
            .find(|&b| self.add(a, b) == self.zero)
            .expect("additive inverse")
    }

    fn inv(&self, a: u16) -> Option<u16> {
        (0..self.size as u16).find(|&b| self.mul(a, b) == self.one)
    }
}

/// `T[x]/(x^n - lambda)` on digit vectors, indexed in base `|T|`.
struct TableQuotient<'a> {
    t: &'a Tables,
    n: usize,
    lambda: u16,
}

impl TableQuotient<'_> {
    fn size(&self) -> u64 {
        (self.t.size as u64).pow(self.n as u32)
    }

    fn decode(&self, mut idx: u64, out: &mut [u16]) {
        let b = self.t.size as u64;
        for d in out.iter_mut() {
            *d = (idx % b) as u16;
            idx /= b;
        }
    }

    fn encode(&self, digits: &[u16]) -> u64 {
        let b = self.t.size as u64;
        digits.iter().rev().fold(0, |acc, &d| acc * b + d as u64)
    }

    fn mul(&self, a: &[u16], b: &[u16], out: &mut [u16]) {
        let t = self.t;
        out.fill(t.zero);
        for (i, &ai) in a.iter().enumerate() {
            if ai == t.zero {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == t.zero {
                    continue;
                }
                let mut prod = t.mul(ai, bj);
                let mut k = i + j;
                if k >= self.n {
                    k -= self.n;
                    prod = t.mul(self.lambda, prod);
                }
                out[k] = t.add(out[k], prod);
            }
        }
    }
}

/// Whether each `g` in `K[x]/(x^n - lambda)` is a unit, by the rank of its
/// multiplication matrix over the field `K`.
fn residue_units(k: &Tables, n: usize, lambda: u16) -> Vec<bool> {
    let kq = TableQuotient { t: k, n, lambda };
    let neg: Vec<u16> = (0..k.size as u16).map(|a| k.neg(a)).collect();
    let inv: Vec<u16> = (0..k.size as u16)
        .map(|a| k.inv(a).unwrap_or(k.zero))
        .collect();
    let mut out = vec![false; kq.size() as usize];
    let mut m = vec![k.zero; n * n];
    let mut g = vec![k.zero; n];
    for (idx, slot) in out.iter_mut().enumerate() {
        kq.decode(idx as u64, &mut g);
        // Row j is x^j g.
        m[..n].copy_from_slice(&g);
        for j in 1..n {
            let (prev, cur) = m.split_at_mut(j * n);
            let prev = &prev[(j - 1) * n..];
            cur[0] = k.mul(lambda, prev[n - 1]);
            cur[1..n].copy_from_slice(&prev[..n - 1]);
        }
        let mut rank = 0;
        for col in 0..n {
            let Some(pr) = (rank..n).find(|&r| m[r * n + col] != k.zero) else {
                continue;
            };
            for c in 0..n {
                m.swap(rank * n + c, pr * n + c);
            }
            let pinv = inv[m[rank * n + col] as usize];
            for r in rank + 1..n {
                let f = k.mul(m[r * n + col], pinv);
                if f == k.zero {
                    continue;
                }
                let nf = neg[f as usize];
                for c in col..n {
                    m[r * n + c] = k.add(m[r * n + c], k.mul(nf, m[rank * n + c]));
                }
            }
            rank += 1;
        }
        *slot = rank == n;
    }
    out
}

/// Outcome of the exhaustive check of one quotient.
#[derive(Clone, Debug, Default)]
pub struct QuotientReport {
    pub elements: u64,
    pub ideals: u64,
    pub expected_ideals: u64,
    pub ideals_are_pi_powers: bool,
    pub chain_strict: bool,
    pub cardinalities_ok: bool,
    pub rho_ok: bool,
    pub nilpotency_ok: bool,
    /// Elements where `f(alpha_0)` being a unit disagrees with invertibility.
    pub unit_mismatches: u64,
    /// Sampled elements where the library unit test or `pi`-expansion
    /// disagrees with the table computation.
    pub library_mismatches: u64,
    /// Disagreements between rank-based and exhaustive invertibility
    /// (only run for at most 4096 elements).
    pub oracle_mismatches: u64,
}

impl QuotientReport {
    pub fn passed(&self) -> bool {
        self.ideals == self.expected_ideals
            && self.ideals_are_pi_powers
            && self.chain_strict
            && self.cardinalities_ok
            && self.rho_ok
            && self.nilpotency_ok
            && self.unit_mismatches == 0
            && self.library_mismatches == 0
            && self.oracle_mismatches == 0
    }
}

/// Tables of a Galois ring and its residue field, reusable across `alpha`.
pub struct RingTables {
    ring: ChainRing,
    r: Tables,
    k: Tables,
    /// Residue-field index of `mu(a)` for each ring index `a`.
    mu: Vec<u16>,
}

impl RingTables {
    pub fn new(ring: &ChainRing) -> Result<Self> {
        let field = ring.residue_field();
        let mu = (0..ring.size())
            .map(|i| field.index_of(ring.mu(ring.elem_at(i))) as u16)
            .collect();
        Ok(RingTables {
            ring: ring.clone(),
            r: Tables::new(ring)?,
            k: Tables::new(field)?,
            mu,
        })
    }
}

/// Exhaustive check of `cq`: invertibility of every element, all ideals as
/// sums of principal ideals, and the chain `<pi^i>`.
pub fn check_quotient(tables: &RingTables, cq: &ChainQuotient, cap: u64) -> Result<QuotientReport> {
    let ring = &tables.ring;
    if cq.ring() != ring {
        return Err(Error::InvalidParameter(
            "tables belong to another ring".into(),
        ));
    }
    let q = cq.quotient();
    let n = q.n();
    let lam = ring.index_of(q.lambda()) as u16;
    let tq = TableQuotient {
        t: &tables.r,
        n,
        lambda: lam,
    };
    let size = tq.size();
    if size > cap {
        return Err(Error::cap(
            "quotient ring enumeration",
            size as u128,
            cap as u128,
        ));
    }
    let kz = tables.k.zero;
    let kq_size = tables.k.size as u64;
    let res_units = residue_units(&tables.k, n, tables.mu[lam as usize]);
    let residue_index = |digits: &[u16]| {
        digits
            .iter()
            .rev()
            .fold(0u64, |acc, &d| acc * kq_size + tables.mu[d as usize] as u64)
    };

    let mut report = QuotientReport {
        elements: size,
        expected_ideals: cq.chain_length() + 1,
        ..Default::default()
    };
    let mut is_unit = vec![false; size as usize];
    let mut units: Vec<u16> = Vec::new();
    let mut f = vec![0u16; n];
    let a0 = ring.index_of(cq.alpha0()) as u16;
    let t = &tables.r;
    let stride = (size / 512).max(1);
    for idx in 0..size {
        tq.decode(idx, &mut f);
        let u = res_units[residue_index(&f) as usize];
        is_unit[idx as usize] = u;
        if u {
            units.extend_from_slice(&f);
        }
        let value = f
            .iter()
            .rev()
            .fold(t.zero, |acc, &c| t.add(t.mul(acc, a0), c));
        let criterion = tables.mu[value as usize] != kz;
        if criterion != u {
            report.unit_mismatches += 1;
        }
        if idx % stride == 0 {
            let w: Vec<RingElem> = f.iter().map(|&d| ring.elem_at(d as u64)).collect();
            let lib_a0 = cq.to_pi_basis(&w)[0];
            if cq.is_unit(&w) != criterion || ring.index_of(lib_a0) != value as u64 {
                report.library_mismatches += 1;
            }
        }
    }

    if size <= 4096 {
        let one = tq.encode(&{
            let mut o = vec![t.zero; n];
            o[0] = t.one;
            o
        });
        let mut g = vec![0u16; n];
        let mut prod = vec![0u16; n];
        for idx in 0..size {
            tq.decode(idx, &mut f);
            let found = (0..size).any(|j| {
                tq.decode(j, &mut g);
                tq.mul(&f, &g, &mut prod);
                tq.encode(&prod) == one
            });
            if found != is_unit[idx as usize] {
                report.oracle_mismatches += 1;
            }
        }
    }

    // Principal ideals correspond to orbits under the unit group.
    let mut orbit_of = vec![u32::MAX; size as usize];
    let mut representatives = Vec::new();
    let mut prod = vec![0u16; n];
    for idx in 0..size {
        if orbit_of[idx as usize] != u32::MAX {
            continue;
        }
        let id = representatives.len() as u32;
        tq.decode(idx, &mut f);
        for u in units.chunks_exact(n) {
            tq.mul(&f, u, &mut prod);
            orbit_of[tq.encode(&prod) as usize] = id;
        }
        orbit_of[idx as usize] = id;
        let w: Vec<RingElem> = f.iter().map(|&d| ring.elem_at(d as u64)).collect();
        representatives.push((idx, code_from_generators(q, &[w])));
    }
    let ideals = ideals_from_orbits(
        q,
        PrincipalOrbits {
            representatives,
            orbit_of,
        },
    );
    report.ideals = ideals.len() as u64;

    let chain = cq.chain_length();
    let mut chain_codes = Vec::new();
    for i in 0..=chain {
        chain_codes.push(cq.chain_code(i)?);
    }
    report.ideals_are_pi_powers = ideals
        .iter()
        .all(|c| chain_codes.iter().any(|d| d.same_code(c)));
    report.chain_strict = chain_codes
        .windows(2)
        .all(|w| w[1].is_subcode_of(&w[0]) && !w[0].same_code(&w[1]));
    report.cardinalities_ok = chain_codes
        .iter()
        .enumerate()
        .all(|(i, c)| c.cardinality() == cq.expected_cardinality(i as u64));

    let p_elem = ring.from_int(ring.p() as i64);
    let rho = cq.rho();
    let rho_digits: Vec<u16> = rho.iter().map(|&c| ring.index_of(c) as u16).collect();
    report.rho_ok = q.scale(p_elem, rho) == cq.pi_power(cq.length() as u64)
        && is_unit[tq.encode(&rho_digits) as usize];

    let zero = q.zero();
    report.nilpotency_ok = cq.nilpotency_index() == chain
        && cq.pi_power(chain) == zero
        && cq.pi_power(chain - 1) != zero;
    Ok(report)
}

/// `(p, e, r, s)` for Galois rings with `p^{r e p^s} <= limit` when `s >= 1`,
/// and `p^{r e} <= limit_s0` when `s = 0`.
pub fn sweep_parameters(limit: u64, limit_s0: u64) -> Vec<(u64, u32, u32, u32)> {
    let mut out = Vec::new();
    let fits = |p: u64, bits: u64, bound: u64| {
        u32::try_from(bits)
            .ok()
            .and_then(|b| p.checked_pow(b))
            .is_some_and(|v| v <= bound)
    };
    for p in 2..=limit.max(limit_s0) {
        if !is_prime(p) {
            continue;
        }
        let mut s = 0u32;
        loop {
            let Some(ps) = p.checked_pow(s) else { break };
            let bound = if s == 0 { limit_s0 } else { limit };
            if !fits(p, ps, bound) {
                break;
            }
            for e in 1..=20u32 {
                for r in 1..=20u32 {
                    if fits(p, (r * e) as u64 * ps, bound) {
                        out.push((p, e, r, s));
                    }
                }
            }
            s += 1;
        }
    }
    out
}

/// Every unit `alpha`, paired with whether some unit `d` has `d^{p^s} = alpha`.
pub fn alphas_with_roots(ring: &ChainRing, ps: u64) -> Vec<(RingElem, bool)> {
    let units = ring.units();
    let mut hit = vec![false; ring.size() as usize];
    for &d in &units {
        hit[ring.index_of(ring.pow(d, ps)) as usize] = true;
    }
    units
        .into_iter()
        .map(|a| (a, hit[ring.index_of(a) as usize]))
        .collect()
}

pub fn galois_ring(p: u64, e: u32, r: u32) -> Result<ChainRing> {
    ChainRing::with_caps(Family::Galois, p, e, r, 1 << 20, 1 << 20)
}

/// `p^{r (e p^s - i)}` as an independent count of `|<pi^i>|`.
pub fn chain_ideal_size(p: u64, e: u32, r: u32, s: u32, i: u64) -> BigUint {
    let total = e as u64 * p.pow(s);
    BigUint::from(p).pow((r as u64 * (total - i)) as u32)
}
