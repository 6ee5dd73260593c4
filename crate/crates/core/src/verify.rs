//! Named verification suites: each claim is checked against brute-force
//! search or exhaustive enumeration and reported with a counterexample on
//! failure.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chainquot::ChainQuotient;
use crate::chainring::{hom_weight, kernel_mu_star_order, lift_nth_root, ChainRing, Family};
use crate::codes::{
    code_from_generators, crt_split, enumerate_all_ideals, is_constacyclic_closed, unit_nth_root,
    ConstaCode, CrtVariant, EquivMap, QuotientRing, WeightKind, DEFAULT_ENUM_CAP,
};
use crate::error::{Error, Result};
use crate::ffield::{is_prime, make_field, minus_one_is_square, Field};
use crate::poly::PolyRing;
use crate::polyfactor::{factor_xn_minus_lambda, factor_xn_minus_one_field, Factorization};
use crate::ring::{FiniteChainRing, Ring};
use crate::sweep::{
    alphas_with_roots, chain_ideal_size, check_quotient, galois_ring, sweep_parameters, RingTables,
};

pub const SUITES: &[&str] = &[
    "lemma3.1",
    "prop4.2",
    "isometry",
    "crt",
    "section5",
    "examples",
    "homweight",
];

#[derive(Clone, Debug, Serialize)]
pub struct ClaimReport {
    pub claim: String,
    pub checked: u64,
    pub failures: u64,
    pub counterexample: Option<String>,
}

impl ClaimReport {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.checked > 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub claims: Vec<ClaimReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(ClaimReport::passed)
    }
}

struct Tally {
    claim: String,
    checked: u64,
    failures: u64,
    counterexample: Option<String>,
}

impl Tally {
    fn new(claim: &str) -> Self {
        Tally {
            claim: claim.into(),
            checked: 0,
            failures: 0,
            counterexample: None,
        }
    }

    fn check(&mut self, ok: bool, ctx: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(ctx());
            }
        }
    }

    fn error(&mut self, err: &Error, ctx: impl FnOnce() -> String) {
        self.check(false, || format!("{}: {err}", ctx()));
    }

    fn finish(self) -> ClaimReport {
        ClaimReport {
            claim: self.claim,
            checked: self.checked,
            failures: self.failures,
            counterexample: self.counterexample,
        }
    }
}

/// Runs one suite, or every suite for `"all"`.
pub fn run_suite(name: &str) -> Result<Vec<SuiteReport>> {
    let run = |s: &str| -> SuiteReport {
        let claims = match s {
            "lemma3.1" => lemma31(),
            "prop4.2" => prop42(),
            "isometry" => isometry(),
            "crt" => crt(),
            "section5" => section5(),
            "examples" => examples(),
            "homweight" => homweight(),
            _ => unreachable!(),
        };
        SuiteReport {
            suite: s.into(),
            claims,
        }
    };
    if name == "all" {
        return Ok(SUITES.iter().map(|s| run(s)).collect());
    }
    if SUITES.contains(&name) {
        return Ok(vec![run(name)]);
    }
    Err(Error::InvalidParameter(format!(
        "unknown suite {name:?}; expected one of {} or all",
        SUITES.join(", ")
    )))
}

/// Prime powers `p^r` (all `r >= 1`) up to `limit`, with the split `(p, r)`.
pub fn prime_powers(limit: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    for p in 2..=limit {
        if !is_prime(p) {
            continue;
        }
        let mut r = 1;
        while p.pow(r) <= limit {
            out.push((p, r));
            r += 1;
        }
    }
    out.sort_by_key(|&(p, r)| p.pow(r));
    out
}

/// Field sizes covered by the root-existence comparison.
pub const ROOT_FIELD_SIZES: &[u64] = &[2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64];

fn split_prime_power(q: u64) -> (u64, u32) {
    prime_powers(q)
        .into_iter()
        .find(|&(p, r)| p.pow(r) == q)
        .expect("prime power")
}

/// Bitmap of the `n`-th powers of the units of `ring`, indexed by element.
fn nth_powers<R: Ring>(ring: &R, units: &[R::Elem], n: u64) -> Vec<bool> {
    let mut hit = vec![false; ring.size() as usize];
    for &x in units {
        hit[ring.index_of(ring.pow(x, n)) as usize] = true;
    }
    hit
}

fn lemma31() -> Vec<ClaimReport> {
    let mut existence =
        Tally::new("nth_root exists iff brute force finds an n-th root (q <= 64, n <= 24)");
    let mut gcd_rule = Tally::new("root exists iff gcd(n, q-1) divides the discrete log");
    let mut order = Tally::new("canonical generator has order exactly q-1");
    for &q in ROOT_FIELD_SIZES {
        let (p, r) = split_prime_power(q);
        let f = make_field(p, r).expect("field");
        let units = f.units();
        let g = f.generator();
        let mut ok = f.pow(g, q - 1) == f.one();
        for (_, k) in prime_factor_pairs(q - 1) {
            ok &= f.pow(g, (q - 1) / k) != f.one();
        }
        order.check(ok, || format!("F_{q}: generator order"));
        for n in 1..=24u64 {
            let powers = nth_powers(&f, &units, n);
            for &lam in &units {
                let brute = powers[f.index_of(lam) as usize];
                let got = f.nth_root(lam, n);
                match got {
                    Ok(root) => {
                        existence.check(
                            root.is_some() == brute && root.is_none_or(|d| f.pow(d, n) == lam),
                            || {
                                format!(
                                    "F_{q}, n = {n}, lambda = {}: root {:?}, brute {brute}",
                                    f.fmt_elem(lam),
                                    root.map(|d| f.fmt_elem(d))
                                )
                            },
                        );
                    }
                    Err(e) => existence.error(&e, || format!("F_{q}, n = {n}")),
                }
                let i = f.discrete_log(lam).expect("unit");
                gcd_rule.check(i.is_multiple_of(n.gcd(&(q - 1))) == brute, || {
                    format!("F_{q}, n = {n}, log = {i}")
                });
            }
        }
    }

    let mut squares = Tally::new("sqrt_minus_one exists iff minus_one_is_square (odd q <= 121)");
    let mut oddly_even =
        Tally::new("x^(2m) = -1 solvable iff -1 is a square (odd q <= 121, odd m <= 11)");
    for (p, r) in prime_powers(121) {
        if p == 2 {
            continue;
        }
        let f = make_field(p, r).expect("field");
        let rule = minus_one_is_square(p, r).expect("odd p");
        let root = f.sqrt_minus_one().expect("odd p");
        let m1 = f.from_int(-1);
        squares.check(
            root.is_some() == rule && root.is_none_or(|x| f.mul(x, x) == m1),
            || {
                format!(
                    "F_{}: sqrt {:?}, rule {rule}",
                    f.q(),
                    root.map(|x| f.fmt_elem(x))
                )
            },
        );
        let units = f.units();
        for m in (1..=11u64).step_by(2) {
            let brute = units.iter().any(|&x| f.pow(x, 2 * m) == m1);
            oddly_even.check(brute == rule, || format!("F_{}, m = {m}", f.q()));
        }
    }

    let mut coprime =
        Tally::new("gcd(n, q-1) = 1 gives an n-th root of every unit (q <= 27, n <= 20)");
    let mut pm_odd = Tally::new(
        "an m-th root of lambda gives m p^s-th roots of lambda and -lambda (odd q <= 27)",
    );
    let mut pm_even =
        Tally::new("q = 1 mod 4 and lambda = b^(2m) give 2m p^s-th roots of lambda and -lambda");
    for (p, r) in prime_powers(27) {
        let f = make_field(p, r).expect("field");
        let q = f.q();
        let units = f.units();
        for n in 1..=20u64 {
            if n.gcd(&(q - 1)) != 1 {
                continue;
            }
            for &lam in &units {
                let root = f.nth_root(lam, n).ok().flatten();
                coprime.check(root.is_some(), || {
                    format!("F_{q}, n = {n}, lambda = {}", f.fmt_elem(lam))
                });
            }
        }
        if p == 2 {
            continue;
        }
        for m in (1..=9u64).step_by(2) {
            if m % p == 0 {
                continue;
            }
            for s in 0..=2u32 {
                let len = m * p.pow(s);
                if len > 80 {
                    continue;
                }
                for &d in &units {
                    let lam = f.pow(d, m);
                    for l in [lam, f.neg(lam)] {
                        let ok = f.nth_root(l, len).ok().flatten().is_some();
                        pm_odd.check(ok, || {
                            format!("F_{q}, m = {m}, s = {s}, lambda = {}", f.fmt_elem(l))
                        });
                    }
                    if q % 4 == 1 {
                        let lam2 = f.pow(d, 2 * m);
                        for l in [lam2, f.neg(lam2)] {
                            let ok = f.nth_root(l, 2 * len).ok().flatten().is_some();
                            pm_even.check(ok, || {
                                format!("F_{q}, m = {m}, s = {s}, lambda = {}", f.fmt_elem(l))
                            });
                        }
                    }
                }
            }
        }
    }
    vec![
        existence.finish(),
        gcd_rule.finish(),
        order.finish(),
        squares.finish(),
        oddly_even.finish(),
        coprime.finish(),
        pm_odd.finish(),
        pm_even.finish(),
    ]
}

fn prime_factor_pairs(n: u64) -> Vec<(u64, u64)> {
    crate::ffield::prime_factors(n)
        .into_iter()
        .map(|p| (p, p))
        .collect()
}

/// Chain rings covered by the root-lifting comparison.
pub fn root_lifting_rings() -> Vec<ChainRing> {
    vec![
        ChainRing::integers_mod(2, 2).unwrap(),
        ChainRing::integers_mod(2, 3).unwrap(),
        ChainRing::integers_mod(3, 2).unwrap(),
        ChainRing::integers_mod(5, 2).unwrap(),
        ChainRing::integers_mod(3, 3).unwrap(),
        ChainRing::galois(2, 2, 2).unwrap(),
        ChainRing::galois(3, 2, 2).unwrap(),
        ChainRing::u_adic(3, 1, 2).unwrap(),
    ]
}

fn prop42() -> Vec<ClaimReport> {
    let mut lift = Tally::new("lift_nth_root succeeds iff brute force over R^* finds a root");
    let mut residue = Tally::new("root in R exists iff a root of mu(lambda) exists in K");
    let mut exact = Tally::new("returned roots satisfy d^n = lambda exactly");
    let mut kernel = Tally::new("ker(R^* -> K^*) has order q^(e-1), a power of p");
    let mut one_units = Tally::new("lambda in 1 + <gamma> has an n-th root when gcd(n, q) = 1");
    let mut negacyclic = Tally::new("-1 is a square in R iff p = 1 mod 4 or r even (p odd)");
    for ring in root_lifting_rings() {
        let p = ring.p();
        let units = ring.units();
        let desc = ring.descriptor();
        let kernel_brute = units
            .iter()
            .filter(|&&u| ring.mu(u) == ring.residue_field().one())
            .count() as u64;
        let expected = kernel_mu_star_order(&ring);
        let mut pp = expected;
        while pp % p == 0 {
            pp /= p;
        }
        kernel.check(kernel_brute == expected && pp == 1, || {
            format!("{desc}: {kernel_brute} vs {expected}")
        });
        for n in 1..=12u64 {
            if n % p == 0 {
                continue;
            }
            let powers = nth_powers(&ring, &units, n);
            let field = ring.residue_field();
            for &lam in &units {
                let brute = powers[ring.index_of(lam) as usize];
                match lift_nth_root(&ring, lam, n) {
                    Ok(root) => {
                        lift.check(root.is_some() == brute, || {
                            format!("{desc}, n = {n}, lambda = {}", ring.fmt_elem(lam))
                        });
                        if let Some(d) = root {
                            exact.check(ring.pow(d, n) == lam, || {
                                format!("{desc}, n = {n}, lambda = {}", ring.fmt_elem(lam))
                            });
                        }
                    }
                    Err(e) => lift.error(&e, || format!("{desc}, n = {n}")),
                }
                let field_root = field.nth_root(ring.mu(lam), n).ok().flatten();
                residue.check(field_root.is_some() == brute, || {
                    format!("{desc}, n = {n}, lambda = {}", ring.fmt_elem(lam))
                });
                if ring.mu(lam) == field.one() && n.gcd(&field.q()) == 1 {
                    let ok = lift_nth_root(&ring, lam, n).ok().flatten().is_some();
                    one_units.check(ok, || {
                        format!("{desc}, n = {n}, lambda = {}", ring.fmt_elem(lam))
                    });
                }
            }
        }
        if p != 2 {
            let m1 = ring.from_int(-1);
            let brute = units.iter().any(|&x| ring.mul(x, x) == m1);
            let rule = p % 4 == 1 || ring.r() % 2 == 0;
            let lifted = lift_nth_root(&ring, m1, 2).ok().flatten();
            negacyclic.check(brute == rule && lifted.is_some() == rule, || {
                format!("{desc}: brute {brute}, rule {rule}")
            });
        }
    }
    vec![
        lift.finish(),
        residue.finish(),
        exact.finish(),
        kernel.finish(),
        one_units.finish(),
        negacyclic.finish(),
    ]
}

struct IsometryTallies {
    instances: Tally,
    hom: Tally,
    bijective: Tally,
    hamming: Tally,
    ideals: Tally,
    enumerators: Tally,
}

fn isometry_instance<R: FiniteChainRing>(
    ring: &R,
    n: usize,
    delta: R::Elem,
    rng: &mut ChaCha8Rng,
    t: &mut IsometryTallies,
) {
    let desc = format!(
        "{} n = {n} delta = {}",
        ring.descriptor(),
        ring.fmt_elem(delta)
    );
    let src = QuotientRing::new(ring.clone(), n, ring.one()).expect("unit");
    let ideals = match enumerate_all_ideals(&src, 1 << 16) {
        Ok(ideals) if ideals.len() >= 5 => ideals,
        Ok(_) => return,
        Err(e) => return t.instances.error(&e, || desc.clone()),
    };
    let psi = match EquivMap::new(&src, delta) {
        Ok(m) => m,
        Err(e) => return t.instances.error(&e, || desc.clone()),
    };
    let dst = psi.target();
    let size = src.size().expect("small quotient");
    t.instances
        .check(dst.lambda() == ring.pow(delta, n as u64), || desc.clone());
    let mut ok = psi.apply(&src.one()) == dst.one();
    for _ in 0..1000 {
        let f = src.elem_at(rng.gen_range(0..size));
        let g = src.elem_at(rng.gen_range(0..size));
        ok &= psi.apply(&src.add(&f, &g)) == dst.add(&psi.apply(&f), &psi.apply(&g));
        ok &= psi.apply(&src.mul(&f, &g)) == dst.mul(&psi.apply(&f), &psi.apply(&g));
    }
    t.hom.check(ok, || desc.clone());

    let mut hit = vec![false; size as usize];
    let mut bij = true;
    let mut ham = true;
    for idx in 0..size {
        let f = src.elem_at(idx);
        let img = psi.apply(&f);
        let j = dst.index_of(&img) as usize;
        bij &= !hit[j] && psi.apply_inverse(&img) == f;
        hit[j] = true;
        ham &= src.hamming_weight(&f) == dst.hamming_weight(&img);
    }
    t.bijective.check(bij, || desc.clone());
    t.hamming.check(ham, || desc.clone());

    let step = ideals.len().div_ceil(8);
    let codes: Vec<&ConstaCode<R>> = ideals.iter().step_by(step).collect();
    // A submodule that is not an ideal must not become one.
    t.ideals.check(
        !is_constacyclic_closed(&src, &[src.one()])
            && !is_constacyclic_closed(dst, &[psi.apply(&src.one())]),
        || desc.clone(),
    );
    t.ideals.check(codes.len() >= 5, || {
        format!("{desc}: only {} distinct ideals", codes.len())
    });
    for &c in &codes {
        let img = psi.image(c);
        t.ideals.check(
            c.is_shift_closed() && img.is_shift_closed() && img.cardinality() == c.cardinality(),
            || desc.clone(),
        );
        let both = |code: &ConstaCode<R>| {
            (
                code.weight_enumerator(WeightKind::Hamming, DEFAULT_ENUM_CAP),
                code.weight_enumerator(WeightKind::Homogeneous, DEFAULT_ENUM_CAP),
            )
        };
        let (a, b) = (both(c), both(&img));
        t.enumerators
            .check(a.0.is_ok() && a.0 == b.0 && a.1 == b.1, || {
                format!("{desc}: {:?} vs {:?}", a.0, b.0)
            });
    }
}

/// `(ring, n)` pairs with `|R|^n <= 2^16`, `n >= 2`, and a few unit
/// `delta` choices each.
fn isometry_on<R: FiniteChainRing>(ring: &R, rng: &mut ChaCha8Rng, t: &mut IsometryTallies) {
    let units = ring.units();
    let mut n = 2usize;
    while (ring.size() as u128).pow(n as u32) <= 1 << 16 {
        let picks = [units.len() - 1, units.len() / 2, 1.min(units.len() - 1)];
        let mut used = HashSet::new();
        for &k in &picks {
            if used.insert(k) {
                isometry_instance(ring, n, units[k], rng, t);
            }
        }
        n += 1;
    }
}

fn isometry() -> Vec<ClaimReport> {
    let mut t = IsometryTallies {
        instances: Tally::new("psi maps R[x]/(x^n - 1) onto R[x]/(x^n - delta^n)"),
        hom: Tally::new("psi is additive and multiplicative on 1000 random pairs"),
        bijective: Tally::new("psi is bijective with inverse f(x) -> f(delta x)"),
        hamming: Tally::new("psi preserves Hamming weight of every element"),
        ideals: Tally::new("psi maps ideals to ideals of the same size, non-ideals to non-ideals"),
        enumerators: Tally::new("psi preserves Hamming and homogeneous weight enumerators"),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(0x1503);
    for (p, r) in [
        (2, 1),
        (3, 1),
        (2, 2),
        (5, 1),
        (7, 1),
        (2, 3),
        (3, 2),
        (11, 1),
        (13, 1),
        (2, 4),
    ] {
        isometry_on(&make_field(p, r).unwrap(), &mut rng, &mut t);
    }
    for ring in [
        ChainRing::integers_mod(2, 2).unwrap(),
        ChainRing::integers_mod(2, 3).unwrap(),
        ChainRing::integers_mod(3, 2).unwrap(),
        ChainRing::integers_mod(5, 2).unwrap(),
        ChainRing::galois(2, 2, 2).unwrap(),
        ChainRing::u_adic(2, 1, 2).unwrap(),
        ChainRing::u_adic(3, 1, 2).unwrap(),
        ChainRing::u_adic(2, 2, 2).unwrap(),
    ] {
        isometry_on(&ring, &mut rng, &mut t);
    }
    let mut count = Tally::new("at least 50 instances, each with at least 5 ideals");
    count.check(t.instances.checked >= 50, || {
        format!("{} instances", t.instances.checked)
    });
    vec![
        count.finish(),
        t.instances.finish(),
        t.hom.finish(),
        t.bijective.finish(),
        t.hamming.finish(),
        t.ideals.finish(),
        t.enumerators.finish(),
    ]
}

fn crt() -> Vec<ClaimReport> {
    let mut idem = Tally::new("e1 + e2 = 1, e1 e2 = 0, e1^2 = e1, e2^2 = e2");
    let mut round = Tally::new(
        "backward(forward(f)) = f and forward(backward(a, b)) = (a, b) on 1000 random elements",
    );
    let mut mult = Tally::new("forward is multiplicative component-wise");
    let mut nega = Tally::new(
        "negacyclic split applies iff nu0^2 = -1 has a solution (p = 1 mod 4 or r even)",
    );
    let mut rng = ChaCha8Rng::seed_from_u64(0x48);
    for (p, e) in [(3u64, 2u32), (5, 2), (3, 3)] {
        let ring = ChainRing::integers_mod(p, e).unwrap();
        let size = ring.size();
        for m in [3usize, 5, 9] {
            for variant in [CrtVariant::Cyclic, CrtVariant::Negacyclic] {
                let ctx = format!("{} m = {m} {variant:?}", ring.descriptor());
                let split = match crt_split(&ring, m, variant) {
                    Ok(s) => s,
                    Err(Error::Inapplicable(_)) if variant == CrtVariant::Negacyclic => {
                        let rule = p % 4 == 1;
                        let brute = ring
                            .units()
                            .iter()
                            .any(|&x| ring.mul(x, x) == ring.from_int(-1));
                        nega.check(!rule && !brute, || ctx.clone());
                        continue;
                    }
                    Err(e) => {
                        idem.error(&e, || ctx.clone());
                        continue;
                    }
                };
                if variant == CrtVariant::Negacyclic {
                    let nu = split.nu();
                    nega.check(p % 4 == 1 && ring.mul(nu, nu) == ring.from_int(-1), || {
                        ctx.clone()
                    });
                }
                let w = split.whole();
                let (c1, c2) = split.components();
                let (e1, e2) = split.idempotents();
                idem.check(
                    w.add(&e1, &e2) == w.one()
                        && w.mul(&e1, &e2) == w.zero()
                        && w.mul(&e1, &e1) == e1
                        && w.mul(&e2, &e2) == e2,
                    || ctx.clone(),
                );
                let rand_word = |rng: &mut ChaCha8Rng, len: usize| -> Vec<_> {
                    (0..len)
                        .map(|_| ring.elem_at(rng.gen_range(0..size)))
                        .collect()
                };
                let mut ok_round = true;
                let mut ok_mult = true;
                for _ in 0..1000 {
                    let f = rand_word(&mut rng, 2 * m);
                    let g = rand_word(&mut rng, 2 * m);
                    let (a, b) = split.forward(&f);
                    ok_round &= split.backward(&a, &b) == f;
                    let (a2, b2) = (rand_word(&mut rng, m), rand_word(&mut rng, m));
                    ok_round &= split.forward(&split.backward(&a2, &b2)) == (a2, b2);
                    let (ga, gb) = split.forward(&g);
                    let (fa, fb) = split.forward(&w.mul(&f, &g));
                    ok_mult &= fa == c1.mul(&a, &ga) && fb == c2.mul(&b, &gb);
                }
                round.check(ok_round, || ctx.clone());
                mult.check(ok_mult, || ctx.clone());
            }
        }
    }
    vec![idem.finish(), round.finish(), mult.finish(), nega.finish()]
}

/// Bound on `|R[x]/(x^{p^s} - lambda)|` in the chain-structure sweep.
pub const SWEEP_LIMIT: u64 = 1 << 20;
/// Bound on `|R|` for the `s = 0` part of the sweep, where the quotient is
/// `R` itself.
pub const SWEEP_LIMIT_S0: u64 = 1 << 10;

fn section5() -> Vec<ClaimReport> {
    section5_with(SWEEP_LIMIT, SWEEP_LIMIT_S0)
}

/// Chain-structure claims for every Galois ring in the given bounds and every
/// unit `alpha` (with `beta = 1`).
pub fn section5_with(limit: u64, limit_s0: u64) -> Vec<ClaimReport> {
    let mut build = Tally::new("alpha_0 found exactly when a p^s-th root exists (brute force)");
    let mut count = Tally::new("exactly 1 + e p^s ideals (exhaustive enumeration)");
    let mut powers = Tally::new("every ideal is <pi^i>, strictly decreasing chain");
    let mut sizes = Tally::new("|C_i| = p^(r (e p^s - i))");
    let mut rho = Tally::new("pi^(p^s) = p rho with rho a unit");
    let mut nil = Tally::new("nilpotency index of pi is e p^s");
    let mut units = Tally::new("unit iff f(alpha_0) is a unit, on every element");
    for (p, e, r, s) in sweep_parameters(limit, limit_s0) {
        let ring = match galois_ring(p, e, r) {
            Ok(ring) => ring,
            Err(err) => {
                build.error(&err, || format!("GR({p}^{e},{r})"));
                continue;
            }
        };
        let tables = match RingTables::new(&ring) {
            Ok(t) => t,
            Err(err) => {
                build.error(&err, || format!("GR({p}^{e},{r})"));
                continue;
            }
        };
        for (alpha, has_root) in alphas_with_roots(&ring, p.pow(s)) {
            let ctx = || format!("GR({p}^{e},{r}) s = {s} alpha = {}", ring.fmt_elem(alpha));
            let cq = ChainQuotient::build(&ring, s, alpha, ring.one());
            build.check(
                matches!(
                    (&cq, has_root),
                    (Ok(_), true) | (Err(Error::Inapplicable(_)), false)
                ),
                ctx,
            );
            let Ok(cq) = cq else { continue };
            match check_quotient(&tables, &cq, limit.max(limit_s0)) {
                Ok(o) => {
                    count.check(o.ideals == o.expected_ideals, || {
                        format!("{}: {} ideals", ctx(), o.ideals)
                    });
                    powers.check(o.ideals_are_pi_powers && o.chain_strict, ctx);
                    sizes.check(
                        o.cardinalities_ok
                            && cq
                                .chain_code(1)
                                .is_ok_and(|c| c.cardinality() == chain_ideal_size(p, e, r, s, 1)),
                        ctx,
                    );
                    rho.check(o.rho_ok, ctx);
                    nil.check(o.nilpotency_ok, ctx);
                    units.check(
                        o.unit_mismatches == 0
                            && o.library_mismatches == 0
                            && o.oracle_mismatches == 0,
                        || format!("{}: {o:?}", ctx()),
                    );
                }
                Err(err) => count.error(&err, ctx),
            }
        }
    }
    vec![
        build.finish(),
        count.finish(),
        powers.finish(),
        sizes.finish(),
        rho.finish(),
        nil.finish(),
        units.finish(),
    ]
}

fn factor_multiset<R: Ring>(pr: &PolyRing<R>, fac: &Factorization<R::Elem>) -> Vec<String> {
    let mut v: Vec<String> = fac
        .factors
        .iter()
        .map(|(f, m)| format!("({})^{m}", pr.fmt_compact(f)))
        .collect();
    v.sort();
    v
}

/// The four factors of `x^90 - 1` over `F_27`, each to the ninth power.
pub fn expected_x90_factors(f: &Field) -> Vec<(crate::poly::Poly<crate::ffield::FieldElem>, u64)> {
    let pr = PolyRing::new(f.clone());
    vec![
        (pr.from_ints(&[-1, 1]), 9),
        (pr.from_ints(&[1, 1, 1, 1, 1]), 9),
        (pr.from_ints(&[1, 1]), 9),
        (pr.from_ints(&[1, -1, 1, -1, 1]), 9),
    ]
}

fn examples() -> Vec<ClaimReport> {
    let mut ex38 =
        Tally::new("x^90 - 1 over F_27 = (x-1)^9 (x^4+x^3+x^2+x+1)^9 (x+1)^9 (x^4-x^3+x^2-x+1)^9");
    let mut table = Tally::new(
        "x^90 - lambda, lambda = g^(2i): factors are f_k(delta^-1 x) made monic, product exact",
    );
    let mut ex49 =
        Tally::new("x^9 - 1 over Z_25 = (x+24)(x^2+x+1)(x^6+x^3+1), 7^2 = -1, codes shift-closed");
    let mut ex56 = Tally::new("Z_9, s = 3, alpha = 8: 55 ideals <(-x-1)^i> with |C_i| = 3^(54-i)");
    let mut down = Tally::new("Z_9[x]/(x^3 - 2): exhaustive ideals are <(-x-1)^i>, i <= 6");

    let f27 = make_field(3, 3).unwrap();
    let pr = PolyRing::new(f27.clone());
    match factor_xn_minus_one_field(&f27, 90) {
        Ok(fac) => {
            let expected = Factorization {
                unit: f27.one(),
                factors: expected_x90_factors(&f27),
            };
            ex38.check(
                factor_multiset(&pr, &fac) == factor_multiset(&pr, &expected)
                    && fac.expand(&pr) == pr.binomial(90, f27.one()),
                || fac.fmt_compact(&pr),
            );
            let base: Vec<_> = expected.factors.iter().map(|(f, _)| f.clone()).collect();
            let g = f27.generator();
            for i in 1..=13i64 {
                let lam = f27.gen_pow(2 * i);
                let ours = match crate::polyfactor::factor_xn_minus_lambda_field(&f27, 90, lam) {
                    Ok(f) => f,
                    Err(e) => {
                        table.error(&e, || format!("i = {i}"));
                        continue;
                    }
                };
                for delta in [
                    f27.nth_root(lam, 90).unwrap().unwrap(),
                    f27.pow(g, 11 * i as u64),
                ] {
                    let dinv = f27.inv(delta).unwrap();
                    let mut transported: Vec<_> = base
                        .iter()
                        .map(|f| (pr.monic(&pr.substitute_scale(f, dinv).unwrap()).unwrap(), 9))
                        .collect();
                    transported.sort_by(|a, b| pr.cmp(&a.0, &b.0));
                    let ok = f27.pow(delta, 90) == lam
                        && ours.factors == transported
                        && ours.expand(&pr) == pr.binomial(90, lam);
                    table.check(ok, || format!("i = {i}: {}", ours.fmt_compact(&pr)));
                }
            }
        }
        Err(e) => ex38.error(&e, String::new),
    }

    ex49_checks(&mut ex49);

    let z9 = ChainRing::integers_mod(3, 2).unwrap();
    match ChainQuotient::build(&z9, 3, z9.from_int(8), z9.one()) {
        Ok(cq) => {
            let mut minus_x_minus_1 = cq.quotient().zero();
            minus_x_minus_1[0] = z9.from_int(-1);
            minus_x_minus_1[1] = z9.from_int(-1);
            ex56.check(
                cq.alpha0() == z9.from_int(8) && cq.pi() == &minus_x_minus_1[..],
                || format!("alpha0 = {}", z9.fmt_elem(cq.alpha0())),
            );
            ex56.check(cq.chain_length() + 1 == 55, || {
                format!("{} ideals", cq.chain_length() + 1)
            });
            for i in 0..=54u64 {
                let ok = cq
                    .chain_code(i)
                    .map(|c| c.cardinality() == BigUint::from(3u32).pow(54 - i as u32))
                    .unwrap_or(false);
                ex56.check(ok, || format!("i = {i}"));
            }
        }
        Err(e) => ex56.error(&e, String::new),
    }
    match ChainQuotient::build(&z9, 1, z9.from_int(8), z9.one()) {
        Ok(cq) => {
            match RingTables::new(&z9).and_then(|t| check_quotient(&t, &cq, DEFAULT_ENUM_CAP)) {
                Ok(o) => down.check(o.passed() && o.ideals == 7, || format!("{o:?}")),
                Err(e) => down.error(&e, String::new),
            }
        }
        Err(e) => down.error(&e, String::new),
    }
    vec![
        ex38.finish(),
        table.finish(),
        ex49.finish(),
        ex56.finish(),
        down.finish(),
    ]
}

/// The codes of the length-18 example over `Z_25`: factors `f_0, f_1, f_2`
/// of `x^9 - 1`, `C_1 = <f_0 f_2, 5 f_0 f_1>`, `C_2 = <f_0 f_1, 5 f_1 f_2>`.
pub struct Example49 {
    pub ring: ChainRing,
    pub factors: Factorization<crate::chainring::RingElem>,
    pub c1: ConstaCode<ChainRing>,
    pub c2: ConstaCode<ChainRing>,
    pub nu0: crate::chainring::RingElem,
}

pub fn example49() -> Result<Example49> {
    let ring = ChainRing::integers_mod(5, 2)?;
    let factors = factor_xn_minus_lambda(&ring, 9, ring.one())?;
    let pr = PolyRing::new(ring.clone());
    let q = QuotientRing::new(ring.clone(), 9, ring.one())?;
    let f: Vec<_> = factors.factors.iter().map(|(f, _)| f.clone()).collect();
    let five = ring.from_int(5);
    let g = |a: usize, b: usize| q.from_poly(&pr.mul(&f[a], &f[b]));
    let c1 = code_from_generators(&q, &[g(0, 2), q.scale(five, &g(0, 1))]);
    let c2 = code_from_generators(&q, &[g(0, 1), q.scale(five, &g(1, 2))]);
    let nu0 = lift_nth_root(&ring, ring.from_int(-1), 2)?
        .ok_or_else(|| Error::Inapplicable("-1 is not a square".into()))?;
    Ok(Example49 {
        ring,
        factors,
        c1,
        c2,
        nu0,
    })
}

fn ex49_checks(t: &mut Tally) {
    let ex = match example49() {
        Ok(ex) => ex,
        Err(e) => return t.error(&e, String::new),
    };
    let ring = &ex.ring;
    let pr = PolyRing::new(ring.clone());
    t.check(
        ex.factors.fmt_compact(&pr) == "(x+24)(x^2+x+1)(x^6+x^3+1)",
        || ex.factors.fmt_compact(&pr),
    );
    t.check(ex.nu0 == ring.from_int(7), || ring.fmt_elem(ex.nu0));
    t.check(ex.c1.is_shift_closed() && ex.c2.is_shift_closed(), || {
        "C_1, C_2".into()
    });
    // Images under f(x) -> f(-+7 x) live in R[x]/(x^9 -+ 7).
    for delta in [ring.from_int(7), ring.from_int(-7)] {
        let psi = match EquivMap::new(ex.c1.ambient(), ring.inv(delta).unwrap()) {
            Ok(m) => m,
            Err(e) => return t.error(&e, String::new),
        };
        let (i1, i2) = (psi.image(&ex.c1), psi.image(&ex.c2));
        t.check(
            i1.is_shift_closed()
                && i2.is_shift_closed()
                && i1.cardinality() == ex.c1.cardinality()
                && i2.cardinality() == ex.c2.cardinality(),
            || format!("delta^-1 = {}", ring.fmt_elem(delta)),
        );
    }
    // The direct sums assemble into a cyclic and a negacyclic code of length 18.
    for variant in [CrtVariant::Cyclic, CrtVariant::Negacyclic] {
        let split = match crt_split(ring, 9, variant) {
            Ok(s) => s,
            Err(e) => return t.error(&e, String::new),
        };
        let (a, b) = split.components();
        let to_a = EquivMap::new(
            ex.c1.ambient(),
            unit_nth_root(ring, a.lambda(), 9).unwrap().unwrap(),
        )
        .unwrap();
        let to_b = EquivMap::new(
            ex.c2.ambient(),
            unit_nth_root(ring, b.lambda(), 9).unwrap().unwrap(),
        )
        .unwrap();
        let (ca, cb) = (to_a.image(&ex.c1), to_b.image(&ex.c2));
        let zero_a = a.zero();
        let zero_b = b.zero();
        let mut gens: Vec<_> = ca
            .generators()
            .iter()
            .map(|g| split.backward(g, &zero_b))
            .collect();
        gens.extend(cb.generators().iter().map(|g| split.backward(&zero_a, g)));
        let sum = code_from_generators(split.whole(), &gens);
        t.check(
            sum.is_shift_closed() && sum.cardinality() == ca.cardinality() * cb.cardinality(),
            || format!("{variant:?} direct sum"),
        );
    }
}

/// Every Galois and `u`-adic chain ring with `|R| <= limit`.
pub fn small_chain_rings(limit: u64) -> Vec<ChainRing> {
    let mut out = Vec::new();
    for (p, _) in prime_powers(limit).into_iter().filter(|&(_, r)| r == 1) {
        for e in 1..=20u32 {
            for r in 1..=20u32 {
                let Some(size) = p.checked_pow(e * r) else {
                    continue;
                };
                if size > limit {
                    continue;
                }
                out.push(ChainRing::with_caps(Family::Galois, p, e, r, limit, limit).unwrap());
                if e > 1 {
                    out.push(ChainRing::with_caps(Family::UAdic, p, e, r, limit, limit).unwrap());
                }
            }
        }
    }
    out
}

fn homweight() -> Vec<ClaimReport> {
    let mut unit_inv = Tally::new("w(u a) = w(a) for all units u and elements a");
    let mut ideal_avg =
        Tally::new("sum of w over each nonzero ideal is one constant times its size");
    for ring in small_chain_rings(1 << 10) {
        let (a, b) = homweight_check(&ring);
        unit_inv.check(a, || ring.descriptor());
        ideal_avg.check(b, || ring.descriptor());
    }
    vec![unit_inv.finish(), ideal_avg.finish()]
}

/// `(axiom (i), axiom (ii))` for the normalized homogeneous weight.
pub fn homweight_check<R: FiniteChainRing>(ring: &R) -> (bool, bool) {
    let elems = ring.elements();
    let units = ring.units();
    let ok_i = elems.iter().all(|&a| {
        let w = hom_weight(ring, a);
        units.iter().all(|&u| hom_weight(ring, ring.mul(u, a)) == w)
    });
    let e = ring.nilpotency();
    let mut xi: Option<Ratio<u64>> = None;
    let mut ok_ii = true;
    for i in 0..e {
        let members: Vec<_> = elems.iter().filter(|&&a| ring.valuation(a) >= i).collect();
        let total: Ratio<u64> = members.iter().map(|&&a| hom_weight(ring, a)).sum();
        let avg = total / Ratio::from_integer(members.len() as u64);
        ok_ii &= members.len() as u64 == ring.ideal_size(i);
        match xi {
            None => xi = Some(avg),
            Some(x) => ok_ii &= x == avg,
        }
    }
    (ok_i, ok_ii)
}
