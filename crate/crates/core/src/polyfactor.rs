//! Factorization of `x^n - 1` and `x^n - lambda` over finite fields via
//! cyclotomic cosets, and Hensel lifting of coprime factorizations to chain
//! rings.

use crate::error::{Error, Result};
use crate::ffield::{prime_factors, Field, FieldElem};
use crate::poly::{Poly, PolyRing};
use crate::ring::{FiniteChainRing, Ring};

/// `unit * prod(f^m)`, factors monic and canonically sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization<E> {
    pub unit: E,
    pub factors: Vec<(Poly<E>, u64)>,
}

impl<E: Copy> Factorization<E> {
    pub fn expand<R: Ring<Elem = E>>(&self, pr: &PolyRing<R>) -> Poly<E> {
        self.factors
            .iter()
            .fold(pr.constant(self.unit), |acc, (f, m)| {
                pr.mul(&acc, &pr.pow(f, *m))
            })
    }

    /// Factors with multiplicity, e.g. `(x+24)(x^2+x+1)^9`; a non-identity
    /// unit is printed first.
    pub fn fmt_compact<R: Ring<Elem = E>>(&self, pr: &PolyRing<R>) -> String {
        self.fmt_with(pr, |f| pr.fmt_compact(f))
    }

    /// As [`Factorization::fmt_compact`] with signed integer coefficients,
    /// e.g. `(x-1)^9(x+1)^9`.
    pub fn fmt_signed<R: Ring<Elem = E>>(&self, pr: &PolyRing<R>) -> String {
        self.fmt_with(pr, |f| pr.fmt_signed(f))
    }

    fn fmt_with<R: Ring<Elem = E>>(
        &self,
        pr: &PolyRing<R>,
        fmt: impl Fn(&Poly<E>) -> String,
    ) -> String {
        let mut s = String::new();
        if !pr.base().is_one(self.unit) {
            s.push_str(&pr.base().fmt_elem(self.unit));
        }
        for (f, m) in &self.factors {
            s.push('(');
            s.push_str(&fmt(f));
            s.push(')');
            if *m > 1 {
                s.push_str(&format!("^{m}"));
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }

    pub fn to_json<R: Ring<Elem = E>>(&self, pr: &PolyRing<R>) -> serde_json::Value {
        serde_json::json!({
            "unit": pr.base().elem_json(self.unit),
            "factors": self.factors.iter().map(|(f, m)| serde_json::json!({
                "poly": pr.to_json(f),
                "mult": m,
            })).collect::<Vec<_>>(),
        })
    }
}

fn sort_factors<R: Ring>(pr: &PolyRing<R>, factors: &mut [(Poly<R::Elem>, u64)]) {
    factors.sort_by(|a, b| pr.cmp(&a.0, &b.0).then(a.1.cmp(&b.1)));
}

/// Multiplicative order of `q` modulo `m` (`gcd(q, m) = 1`).
pub fn multiplicative_order(q: u64, m: u64) -> u64 {
    if m == 1 {
        return 1;
    }
    let qm = (q % m) as u128;
    let mut x = qm;
    let mut k = 1;
    while x != 1 {
        x = x * qm % m as u128;
        k += 1;
    }
    k
}

/// The `q`-cyclotomic cosets modulo `m`, ordered by their least element.
pub fn cyclotomic_cosets(q: u64, m: u64) -> Vec<Vec<u64>> {
    let mut seen = vec![false; m as usize];
    let mut out = Vec::new();
    for a in 0..m {
        if seen[a as usize] {
            continue;
        }
        let mut coset = Vec::new();
        let mut x = a;
        while !seen[x as usize] {
            seen[x as usize] = true;
            coset.push(x);
            x = ((x as u128 * q as u128) % m as u128) as u64;
        }
        out.push(coset);
    }
    out
}

/// Arithmetic in `F_q[y]/(h)`.
struct Extension {
    pr: PolyRing<Field>,
    h: Poly<FieldElem>,
}

impl Extension {
    fn mul(&self, a: &Poly<FieldElem>, b: &Poly<FieldElem>) -> Poly<FieldElem> {
        self.pr
            .rem(&self.pr.mul(a, b), &self.h)
            .expect("monic modulus")
    }

    fn pow(&self, a: &Poly<FieldElem>, mut k: u128) -> Poly<FieldElem> {
        let mut acc = self.pr.one();
        let mut base = self.pr.rem(a, &self.h).expect("monic modulus");
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
}

/// Irreducibility over `F_q` by Rabin's test.
fn is_irreducible_over(pr: &PolyRing<Field>, h: &Poly<FieldElem>) -> bool {
    let k = h.degree().unwrap_or(0) as u64;
    if k <= 1 {
        return k == 1;
    }
    let q = pr.base().q() as u128;
    let ext = Extension {
        pr: pr.clone(),
        h: h.clone(),
    };
    let x = pr.x();
    let frob =
        |a: &Poly<FieldElem>, times: u64| (0..times).fold(a.clone(), |acc, _| ext.pow(&acc, q));
    if frob(&x, k) != pr.rem(&x, h).expect("monic") {
        return false;
    }
    prime_factors(k).into_iter().all(|l| {
        let d = pr.sub(&frob(&x, k / l), &x);
        pr.gcd(&d, h)
            .map(|g| g.degree() == Some(0))
            .unwrap_or(false)
    })
}

/// The field elements in canonical (coordinate-lex) order.
fn sorted_elements(f: &Field) -> Vec<FieldElem> {
    let mut v = f.elements();
    v.sort_by(|&a, &b| f.cmp_elems(a, b));
    v
}

/// Smallest monic irreducible of degree `k` over `F_q`, coefficient tuples
/// compared from the constant term.
fn canonical_irreducible(f: &Field, k: usize) -> Result<Poly<FieldElem>> {
    let pr = PolyRing::new(f.clone());
    let elems = sorted_elements(f);
    let q = elems.len() as u128;
    let total = q.checked_pow(k as u32).unwrap_or(u128::MAX);
    // The constant term is the leading digit; skip the candidates where it is 0.
    let start = if k > 1 {
        q.checked_pow(k as u32 - 1).unwrap_or(u128::MAX)
    } else {
        0
    };
    for idx in start..total {
        let mut digits = vec![f.zero(); k + 1];
        let mut t = idx;
        for i in (0..k).rev() {
            digits[i] = elems[(t % q) as usize];
            t /= q;
        }
        digits[k] = f.one();
        let h = pr.from_coeffs(digits);
        if is_irreducible_over(&pr, &h) {
            return Ok(h);
        }
    }
    Err(Error::Internal(format!("no irreducible of degree {k}")))
}

/// Splitting data for `x^m - 1`: the extension containing a primitive `m`-th
/// root of unity `zeta`.
fn root_of_unity(f: &Field, m: u64, cap: u128) -> Result<(Extension, Poly<FieldElem>)> {
    let q = f.q();
    let k = multiplicative_order(q, m);
    let qk = (q as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if qk > cap {
        return Err(Error::cap(format!("splitting field F_{q}^{k}"), qk, cap));
    }
    let pr = PolyRing::new(f.clone());
    let h = canonical_irreducible(f, k as usize)?;
    let ext = Extension { pr: pr.clone(), h };
    let cofactor = (qk - 1) / m as u128;
    let primes = prime_factors(m);
    let elems: Vec<FieldElem> = (0..q).map(|i| f.elem_at(i)).collect();
    for idx in 1..qk {
        let mut coeffs = Vec::with_capacity(k as usize);
        let mut t = idx;
        for _ in 0..k {
            coeffs.push(elems[(t % q as u128) as usize]);
            t /= q as u128;
        }
        let z = ext.pow(&pr.from_coeffs(coeffs), cofactor);
        if primes
            .iter()
            .all(|&l| ext.pow(&z, (m / l) as u128) != pr.one())
        {
            return Ok((ext, z));
        }
    }
    Err(Error::Internal(format!(
        "no primitive {m}-th root of unity"
    )))
}

/// Default bound on the size of the splitting field searched for roots of
/// unity.
pub const DEFAULT_SPLITTING_CAP: u128 = 1 << 40;

/// Factorization of `x^n - 1` over `F_q`: with `n = m p^s`, the minimal
/// polynomials of the `m`-th roots of unity, each with multiplicity `p^s`.
pub fn factor_xn_minus_one_field(f: &Field, n: u64) -> Result<Factorization<FieldElem>> {
    factor_xn_minus_one_field_capped(f, n, DEFAULT_SPLITTING_CAP)
}

pub fn factor_xn_minus_one_field_capped(
    f: &Field,
    n: u64,
    cap: u128,
) -> Result<Factorization<FieldElem>> {
    if n == 0 {
        return Err(Error::InvalidParameter("length must be positive".into()));
    }
    let p = f.p();
    let (mut m, mut ps) = (n, 1u64);
    while m % p == 0 {
        m /= p;
        ps *= p;
    }
    let pr = PolyRing::new(f.clone());
    let mut factors = Vec::new();
    if m == 1 {
        factors.push((pr.from_ints(&[-1, 1]), ps));
    } else {
        let (ext, zeta) = root_of_unity(f, m, cap)?;
        // Polynomials in X with coefficients in the extension.
        for coset in cyclotomic_cosets(f.q(), m) {
            let mut acc: Vec<Poly<FieldElem>> = vec![pr.one()];
            for &j in &coset {
                let root = ext.pow(&zeta, j as u128);
                let mut next = vec![pr.zero(); acc.len() + 1];
                for (i, c) in acc.iter().enumerate() {
                    next[i + 1] = pr.add(&next[i + 1], c);
                    next[i] = pr.sub(&next[i], &ext.mul(c, &root));
                }
                acc = next;
            }
            let mut coeffs = Vec::with_capacity(acc.len());
            for c in acc {
                match c.degree() {
                    None => coeffs.push(f.zero()),
                    Some(0) => coeffs.push(c.coeffs()[0]),
                    Some(_) => {
                        return Err(Error::Internal(
                            "minimal polynomial not defined over the base field".into(),
                        ))
                    }
                }
            }
            factors.push((pr.from_coeffs(coeffs), ps));
        }
    }
    sort_factors(&pr, &mut factors);
    Ok(Factorization {
        unit: f.one(),
        factors,
    })
}

/// `x^n - lambda = lambda * prod f_i(delta^{-1} x)` for `delta^n = lambda`,
/// with each transported factor rescaled to be monic.
pub fn transport_factorization<R: Ring>(
    pr: &PolyRing<R>,
    base: &Factorization<R::Elem>,
    delta: R::Elem,
) -> Result<Factorization<R::Elem>> {
    let ring = pr.base();
    let dinv = ring.inv(delta).ok_or(Error::NonUnit)?;
    let n: u64 = base
        .factors
        .iter()
        .map(|(f, m)| f.degree().unwrap_or(0) as u64 * m)
        .sum();
    let mut unit = ring.mul(base.unit, ring.pow(delta, n));
    let mut factors = Vec::with_capacity(base.factors.len());
    for (f, m) in &base.factors {
        let g = pr.substitute_scale(f, dinv)?;
        let lc = g.leading().ok_or(Error::NonMonic)?;
        let monic = pr.monic(&g)?;
        unit = ring.mul(unit, ring.pow(lc, *m));
        factors.push((monic, *m));
    }
    sort_factors(pr, &mut factors);
    Ok(Factorization { unit, factors })
}

/// Factorization of `x^n - lambda` over `F_q` by transport from `x^n - 1`.
/// Reports [`Error::Inapplicable`] when `lambda` has no `n`-th root.
pub fn factor_xn_minus_lambda_field(
    f: &Field,
    n: u64,
    lambda: FieldElem,
) -> Result<Factorization<FieldElem>> {
    factor_xn_minus_lambda_field_capped(f, n, lambda, DEFAULT_SPLITTING_CAP)
}

pub fn factor_xn_minus_lambda_field_capped(
    f: &Field,
    n: u64,
    lambda: FieldElem,
    cap: u128,
) -> Result<Factorization<FieldElem>> {
    if f.is_zero(lambda) {
        return Err(Error::NonUnit);
    }
    let delta = f.nth_root(lambda, n)?.ok_or_else(|| {
        Error::Inapplicable(format!(
            "{} has no {n}-th root in F_{}",
            f.fmt_elem(lambda),
            f.q()
        ))
    })?;
    let base = factor_xn_minus_one_field_capped(f, n, cap)?;
    transport_factorization(&PolyRing::new(f.clone()), &base, delta)
}

/// Lift `target = g h` from `mu(g) = g_bar`, `mu(h) = h_bar`, with `h_bar`
/// monic and coprime to `g_bar`, by quadratic Hensel steps.
pub fn hensel_lift_pair<R: FiniteChainRing>(
    pr: &PolyRing<R>,
    target: &Poly<R::Elem>,
    g_bar: &Poly<FieldElem>,
    h_bar: &Poly<FieldElem>,
) -> Result<(Poly<R::Elem>, Poly<R::Elem>)> {
    let kr = pr.residue_ring();
    let (d, s_bar, t_bar) = kr.ext_gcd(g_bar, h_bar)?;
    if d != kr.one() {
        return Err(Error::Inapplicable(
            "residue factors are not coprime".into(),
        ));
    }
    let (mut g, mut h) = (pr.lift(g_bar), pr.lift(h_bar));
    let (mut s, mut t) = (pr.lift(&s_bar), pr.lift(&t_bar));
    let one = pr.one();
    let steps = 64 - (pr.base().nilpotency() as u64).leading_zeros() + 1;
    for _ in 0..=steps {
        let err = pr.sub(target, &pr.mul(&g, &h));
        if err.is_zero() {
            break;
        }
        let (q, r) = pr.divmod(&pr.mul(&s, &err), &h)?;
        let g1 = pr.add(&pr.add(&g, &pr.mul(&t, &err)), &pr.mul(&q, &g));
        let h1 = pr.add(&h, &r);
        let b = pr.sub(&pr.add(&pr.mul(&s, &g1), &pr.mul(&t, &h1)), &one);
        let (c, dd) = pr.divmod(&pr.mul(&s, &b), &h1)?;
        s = pr.sub(&s, &dd);
        t = pr.sub(&pr.sub(&t, &pr.mul(&t, &b)), &pr.mul(&c, &g1));
        g = g1;
        h = h1;
    }
    if pr.mul(&g, &h) != *target {
        return Err(Error::Internal("Hensel lifting did not converge".into()));
    }
    Ok((g, h))
}

/// Lift the squarefree factorization of `x^n - mu(lambda)` over the residue
/// field to a factorization of `x^n - lambda` into monic, pairwise coprime,
/// basic irreducible factors over `R`.
pub fn hensel_lift_factorization<R: FiniteChainRing>(
    ring: &R,
    field_factors: &Factorization<FieldElem>,
    n: u64,
    lambda: R::Elem,
) -> Result<Factorization<R::Elem>> {
    let p = ring.characteristic_prime();
    if n.is_multiple_of(p) || field_factors.factors.iter().any(|(_, m)| *m != 1) {
        return Err(Error::Inapplicable(format!(
            "lifting needs gcd(n, p) = 1, got n = {n}, p = {p}"
        )));
    }
    if !ring.is_unit(lambda) {
        return Err(Error::NonUnit);
    }
    let pr = PolyRing::new(ring.clone());
    let kr = pr.residue_ring();
    let target = pr.binomial(n as usize, lambda);
    if field_factors.expand(&kr) != pr.reduce(&target) {
        return Err(Error::InvalidParameter(
            "residue factorization does not match x^n - mu(lambda)".into(),
        ));
    }
    let fs: Vec<&Poly<FieldElem>> = field_factors.factors.iter().map(|(f, _)| f).collect();
    let mut lifted = Vec::with_capacity(fs.len());
    let mut rest = target;
    for i in 0..fs.len().saturating_sub(1) {
        let tail = fs[i + 1..].iter().fold(kr.one(), |acc, f| kr.mul(&acc, f));
        let (g, h) = hensel_lift_pair(&pr, &rest, fs[i], &tail)?;
        lifted.push((g, 1));
        rest = h;
    }
    if !fs.is_empty() {
        lifted.push((rest, 1));
    }
    sort_factors(&pr, &mut lifted);
    Ok(Factorization {
        unit: ring.one(),
        factors: lifted,
    })
}

/// Factorization of `x^n - lambda` over a chain ring: residue factorization
/// by transport, then Hensel lifting when `e > 1`.
pub fn factor_xn_minus_lambda<R: FiniteChainRing>(
    ring: &R,
    n: u64,
    lambda: R::Elem,
) -> Result<Factorization<R::Elem>> {
    factor_xn_minus_lambda_capped(ring, n, lambda, DEFAULT_SPLITTING_CAP)
}

pub fn factor_xn_minus_lambda_capped<R: FiniteChainRing>(
    ring: &R,
    n: u64,
    lambda: R::Elem,
    cap: u128,
) -> Result<Factorization<R::Elem>> {
    if !ring.is_unit(lambda) {
        return Err(Error::NonUnit);
    }
    let field = ring.residue_field();
    let residue = factor_xn_minus_lambda_field_capped(field, n, ring.mu(lambda), cap)?;
    if ring.nilpotency() == 1 {
        let pr = PolyRing::new(ring.clone());
        return Ok(Factorization {
            unit: ring.lift_residue(residue.unit),
            factors: residue
                .factors
                .iter()
                .map(|(f, m)| (pr.lift(f), *m))
                .collect(),
        });
    }
    hensel_lift_factorization(ring, &residue, n, lambda)
}

/// Whether the monic polynomials generate the unit ideal pairwise, decided
/// on their residues.
pub fn pairwise_coprime<R: FiniteChainRing>(ring: &R, fs: &[Poly<R::Elem>]) -> Result<bool> {
    let pr = PolyRing::new(ring.clone());
    if fs.iter().any(|f| !pr.is_monic(f)) {
        return Err(Error::NonMonic);
    }
    let kr = pr.residue_ring();
    let res: Vec<_> = fs.iter().map(|f| pr.reduce(f)).collect();
    for i in 0..res.len() {
        for j in i + 1..res.len() {
            if kr.gcd(&res[i], &res[j])? != kr.one() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
