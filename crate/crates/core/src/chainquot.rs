//! The rings `R[x]/(x^{p^s} - (alpha + beta p))` over a Galois ring `R`,
//! which are chain rings with maximal ideal `<pi>`, `pi = alpha_0^{-1} x - 1`.

use num_bigint::BigUint;

use crate::chainring::{ChainRing, Family, RingElem};
use crate::codes::{code_from_generators, ConstaCode, QuotientRing};
use crate::error::{Error, Result};
use crate::ffield::inv_mod;
use crate::ring::{FiniteChainRing, Ring};

/// Default bound on the search for a `p^s`-th root inside `1 + pR`.
pub const DEFAULT_ROOT_SEARCH_CAP: u64 = 1 << 20;

#[derive(Clone, Debug)]
pub struct ChainQuotient {
    quotient: QuotientRing<ChainRing>,
    s: u32,
    alpha: RingElem,
    beta: RingElem,
    alpha0: RingElem,
    pi: Vec<RingElem>,
    rho: Vec<RingElem>,
    nilpotency: u64,
}

/// Some `a0` with `a0^{p^s} = alpha`: the Teichmuller part is solved
/// exactly, the `1 + pR` part by exhaustive search.
pub fn pth_power_root(
    ring: &ChainRing,
    alpha: RingElem,
    s: u32,
    cap: u64,
) -> Result<Option<RingElem>> {
    if !ring.is_unit(alpha) {
        return Err(Error::NonUnit);
    }
    let p = ring.p();
    let ps = p.pow(s);
    let field = ring.residue_field();
    let qm1 = field.q() - 1;
    let k = inv_mod((ps % qm1) as i128, qm1 as i128).unwrap_or(0) as u64;
    let abar = ring.mu(alpha);
    let t = ring.teichmuller_of(abar);
    let t0 = ring.teichmuller_of(field.pow(abar, k));
    let target = ring.mul(alpha, ring.inv(t).ok_or(Error::NonUnit)?);
    // 1 + pR is {1 + p y}; enumerate y modulo p^{e-1}.
    let e = ring.e();
    let count = ring.ideal_size(1);
    if count > cap {
        return Err(Error::cap(
            "one-unit root search",
            count as u128,
            cap as u128,
        ));
    }
    let gamma = ring.gamma();
    let mut seen = 0u64;
    for idx in 0..ring.size() {
        let y = ring.elem_at(idx);
        if ring.residue_rep(y, e - 1) != y {
            continue;
        }
        seen += 1;
        let w = ring.add(ring.one(), ring.mul(gamma, y));
        if ring.pow(w, ps) == target {
            return Ok(Some(ring.mul(t0, w)));
        }
        if seen == count {
            break;
        }
    }
    Ok(None)
}

impl ChainQuotient {
    pub fn build(ring: &ChainRing, s: u32, alpha: RingElem, beta: RingElem) -> Result<Self> {
        Self::build_capped(ring, s, alpha, beta, DEFAULT_ROOT_SEARCH_CAP)
    }

    pub fn build_capped(
        ring: &ChainRing,
        s: u32,
        alpha: RingElem,
        beta: RingElem,
        cap: u64,
    ) -> Result<Self> {
        if ring.family() != Family::Galois {
            return Err(Error::InvalidParameter("a Galois ring is required".into()));
        }
        if !ring.is_unit(alpha) || !ring.is_unit(beta) {
            return Err(Error::NonUnit);
        }
        let p = ring.p();
        let n = p
            .checked_pow(s)
            .filter(|&n| n <= u32::MAX as u64)
            .ok_or_else(|| Error::InvalidParameter(format!("length {p}^{s} too large")))?
            as usize;
        let alpha0 = pth_power_root(ring, alpha, s, cap)?.ok_or_else(|| {
            Error::Inapplicable(format!(
                "{} has no {p}^{s}-th root in {}",
                ring.fmt_elem(alpha),
                ring.descriptor()
            ))
        })?;
        let lambda = ring.add(alpha, ring.mul(ring.from_int(p as i64), beta));
        let quotient = QuotientRing::new(ring.clone(), n, lambda)?;
        let a0inv = ring.inv(alpha0).ok_or(Error::NonUnit)?;
        let mut pi = quotient.monomial(a0inv, 1);
        pi[0] = ring.sub(pi[0], ring.one());

        let pi_ps = quotient.pow(&pi, n as u64);
        let rho = if ring.e() == 1 {
            let mut r = quotient.zero();
            r[0] = ring.mul(ring.inv(alpha).ok_or(Error::NonUnit)?, beta);
            r
        } else {
            if pi_ps.iter().any(|&c| ring.valuation(c) == 0) {
                return Err(Error::Internal("pi^(p^s) is not divisible by p".into()));
            }
            pi_ps.iter().map(|&c| ring.div_gamma_pow(c, 1)).collect()
        };

        let mut nilpotency = 0u64;
        let mut power = quotient.one();
        let bound = ring.e() as u64 * n as u64;
        while power.iter().any(|&c| !ring.is_zero(c)) {
            if nilpotency > bound {
                break;
            }
            power = quotient.mul(&power, &pi);
            nilpotency += 1;
        }

        Ok(ChainQuotient {
            quotient,
            s,
            alpha,
            beta,
            alpha0,
            pi,
            rho,
            nilpotency,
        })
    }

    pub fn quotient(&self) -> &QuotientRing<ChainRing> {
        &self.quotient
    }

    pub fn ring(&self) -> &ChainRing {
        self.quotient.ring()
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn length(&self) -> usize {
        self.quotient.n()
    }

    pub fn alpha(&self) -> RingElem {
        self.alpha
    }

    pub fn beta(&self) -> RingElem {
        self.beta
    }

    pub fn alpha0(&self) -> RingElem {
        self.alpha0
    }

    pub fn pi(&self) -> &[RingElem] {
        &self.pi
    }

    /// `rho` with `pi^{p^s} = p rho`.
    pub fn rho(&self) -> &[RingElem] {
        &self.rho
    }

    /// Smallest `k` with `pi^k = 0` (at most `e p^s + 1` is searched).
    pub fn nilpotency_index(&self) -> u64 {
        self.nilpotency
    }

    /// `e p^s`, the number of nonzero proper ideals plus one.
    pub fn chain_length(&self) -> u64 {
        self.ring().e() as u64 * self.length() as u64
    }

    /// Coefficients `a_i` with `f = sum a_i pi^i`, using `x = alpha_0 (pi + 1)`.
    pub fn to_pi_basis(&self, f: &[RingElem]) -> Vec<RingElem> {
        let ring = self.ring();
        let n = self.length();
        let mut out = vec![ring.zero(); n];
        // binom[i] = C(k, i) as ring elements, updated row by row.
        let mut binom = vec![ring.zero(); n];
        binom[0] = ring.one();
        let mut a0k = ring.one();
        for (k, &fk) in f.iter().enumerate() {
            if k > 0 {
                for i in (1..=k).rev() {
                    binom[i] = ring.add(binom[i], binom[i - 1]);
                }
            }
            let c = ring.mul(fk, a0k);
            if !ring.is_zero(c) {
                for i in 0..=k {
                    out[i] = ring.add(out[i], ring.mul(c, binom[i]));
                }
            }
            a0k = ring.mul(a0k, self.alpha0);
        }
        out
    }

    /// Unit test through the constant term `a_0 = f(alpha_0)` of the
    /// `pi`-adic expansion.
    pub fn is_unit(&self, f: &[RingElem]) -> bool {
        let ring = self.ring();
        let a0 = f.iter().rev().fold(ring.zero(), |acc, &c| {
            ring.add(ring.mul(acc, self.alpha0), c)
        });
        ring.is_unit(a0)
    }

    pub fn pi_power(&self, i: u64) -> Vec<RingElem> {
        self.quotient.pow(&self.pi, i)
    }

    /// `C_i = <pi^i>`.
    pub fn chain_code(&self, i: u64) -> Result<ConstaCode<ChainRing>> {
        let max = self.chain_length();
        if i > max {
            return Err(Error::OutOfRange { index: i, max });
        }
        Ok(code_from_generators(&self.quotient, &[self.pi_power(i)]))
    }

    /// `p^{r (e p^s - i)}`.
    pub fn expected_cardinality(&self, i: u64) -> BigUint {
        let ring = self.ring();
        BigUint::from(ring.p()).pow((ring.r() as u64 * (self.chain_length() - i)) as u32)
    }
}
