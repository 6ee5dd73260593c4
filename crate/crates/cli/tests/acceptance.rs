//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Expected values come from brute-force searches written
//! here, independent of the library algorithms under test.

use std::collections::HashSet;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use constacyclic::chainring::{hom_weight, lift_nth_root};
use constacyclic::codes::{crt_split, is_constacyclic_closed};
use constacyclic::ffield::make_field;
use constacyclic::polyfactor::factor_xn_minus_lambda;
use constacyclic::verify::{
    example49, run_suite, section5_with, ClaimReport, SWEEP_LIMIT, SWEEP_LIMIT_S0,
};
use constacyclic::{
    ChainQuotient, ChainRing, CrtVariant, EquivMap, Family, Field, FieldElem, FiniteChainRing,
    Poly, PolyRing, QuotientRing, Ring,
};

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_constacyclic"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    )
}

/// Polynomial over `F_27` from the JSON coefficient list of the CLI.
fn field_poly(f: &Field, v: &Value) -> Poly<FieldElem> {
    let coeffs = v
        .as_array()
        .expect("coefficient list")
        .iter()
        .map(|c| match c {
            Value::Number(k) => f.from_int(k.as_i64().unwrap()),
            Value::Array(xs) => {
                let ints: Vec<i64> = xs.iter().map(|x| x.as_i64().unwrap()).collect();
                f.from_coords(&ints).unwrap()
            }
            _ => panic!("unexpected coefficient {c}"),
        })
        .collect();
    PolyRing::new(f.clone()).from_coeffs(coeffs)
}

/// Whether `f` has no monic factor of degree `1..=deg/2`, by trial division
/// against every monic polynomial of those degrees.
fn irreducible_by_trial_division<R: Ring>(pr: &PolyRing<R>, f: &Poly<R::Elem>) -> bool {
    let ring = pr.base();
    let d = f.degree().unwrap();
    let q = ring.size();
    for k in 1..=d / 2 {
        for idx in 0..q.pow(k as u32) {
            let mut coeffs: Vec<R::Elem> = (0..k)
                .map(|i| ring.elem_at((idx / q.pow(i as u32)) % q))
                .collect();
            coeffs.push(ring.one());
            let g = pr.from_coeffs(coeffs);
            if pr.rem(f, &g).unwrap().is_zero() {
                return false;
            }
        }
    }
    true
}

fn criterion1() -> Outcome {
    let (code, text) = run_cli(&[
        "factor", "--ring", "Fq:3^3", "--n", "90", "--lambda", "1", "--signed",
    ]);
    let line = text.lines().nth(1).unwrap_or("").to_string();
    let mut emitted: Vec<&str> = line.split_inclusive("^9").collect();
    emitted.sort();
    let mut expected = vec![
        "(x-1)^9",
        "(x^4+x^3+x^2+x+1)^9",
        "(x+1)^9",
        "(x^4-x^3+x^2-x+1)^9",
    ];
    expected.sort();
    if code != 0 || emitted != expected {
        return outcome(false, format!("emitted {line:?}"));
    }

    let f = make_field(3, 3).unwrap();
    let pr = PolyRing::new(f.clone());
    let (_, json) = run_cli(&[
        "factor", "--ring", "Fq:3^3", "--n", "90", "--lambda", "1", "--json",
    ]);
    let json: Value = serde_json::from_str(&json).unwrap();
    let base: Vec<Poly<FieldElem>> = json["factors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| field_poly(&f, &x["poly"]))
        .collect();
    let product = base
        .iter()
        .fold(pr.one(), |acc, g| pr.mul(&acc, &pr.pow(g, 9)));
    if product != pr.binomial(90, f.one())
        || !base.iter().all(|g| irreducible_by_trial_division(&pr, g))
    {
        return outcome(false, "x^90 - 1 reconstruction or irreducibility failed");
    }

    // Table rows: lambda = g^(2i), delta = g^(11 i); 11 * 90 = 2 mod 26.
    for i in 1..=13i64 {
        let lambda = f.gen_pow(2 * i);
        let delta = f.gen_pow(11 * i);
        if f.pow(delta, 90) != lambda {
            return outcome(false, format!("g^(11*{i}) is not a 90th root"));
        }
        let lam_text = format!("g^{}", 2 * i);
        let (code, out) = run_cli(&[
            "factor", "--ring", "Fq:3^3", "--n", "90", "--lambda", &lam_text, "--json",
        ]);
        if code != 0 {
            return outcome(false, format!("factor failed for {lam_text}"));
        }
        let out: Value = serde_json::from_str(&out).unwrap();
        let got: HashSet<Vec<FieldElem>> = out["factors"]
            .as_array()
            .unwrap()
            .iter()
            .map(|x| field_poly(&f, &x["poly"]).into_coeffs())
            .collect();
        let dinv = f.inv(delta).unwrap();
        let want: HashSet<Vec<FieldElem>> = base
            .iter()
            .map(|g| {
                // g(delta^{-1} x) scaled to be monic, computed coefficient-wise.
                let d = g.degree().unwrap();
                let coeffs: Vec<FieldElem> = (0..=d)
                    .map(|k| f.mul(g.coeff(k).unwrap(), f.pow(dinv, k as u64)))
                    .collect();
                let lead_inv = f.inv(coeffs[d]).unwrap();
                coeffs.into_iter().map(|c| f.mul(c, lead_inv)).collect()
            })
            .collect();
        let product = got.iter().fold(pr.one(), |acc, c| {
            pr.mul(&acc, &pr.pow(&pr.from_coeffs(c.clone()), 9))
        });
        if got != want || product != pr.binomial(90, lambda) {
            return outcome(false, format!("table row i = {i} differs"));
        }
    }
    outcome(
        true,
        "x^90 - 1 over F_27 exact; 13 table rows match f_k(delta^-1 x) with exact products",
    )
}

fn criterion2() -> Outcome {
    let (code, text) = run_cli(&["factor", "--ring", "Z:5^2", "--n", "9", "--lambda", "1"]);
    if code != 0 || text.lines().nth(1) != Some("(x+24)(x^2+x+1)(x^6+x^3+1)") {
        return outcome(false, format!("factor emitted {text:?}"));
    }
    let z25 = ChainRing::integers_mod(5, 2).unwrap();
    let pr = PolyRing::new(z25.clone());
    let fac = factor_xn_minus_lambda(&z25, 9, z25.one()).unwrap();
    let product = fac
        .factors
        .iter()
        .fold(pr.one(), |acc, (g, _)| pr.mul(&acc, g));
    let f5 = make_field(5, 1).unwrap();
    let kr = PolyRing::new(f5.clone());
    let residues_irreducible = fac
        .factors
        .iter()
        .all(|(g, _)| irreducible_by_trial_division(&kr, &pr.reduce(g)));
    if product != pr.binomial(9, z25.one()) || !residues_irreducible {
        return outcome(
            false,
            "factors do not multiply to x^9 - 1 or are reducible mod 5",
        );
    }
    let root = lift_nth_root(&z25, z25.from_int(24), 2).unwrap();
    let (_, cli_root) = run_cli(&["root", "--ring", "Z:5^2", "--n", "2", "--lambda", "24"]);
    if root != Some(z25.from_int(7)) || cli_root.trim() != "7" {
        return outcome(
            false,
            format!("lift_nth_root(Z_25, 24, 2) = {root:?}, cli {cli_root:?}"),
        );
    }

    let first = example49().unwrap();
    let again = example49().unwrap();
    let mut closed = true;
    let mut stable =
        first.c1.to_json() == again.c1.to_json() && first.c2.to_json() == again.c2.to_json();
    for (code, other) in [(&first.c1, &again.c1), (&first.c2, &again.c2)] {
        let q = code.ambient();
        let rows = code.canonical_matrix().rows();
        closed &= is_constacyclic_closed(q, rows);
        // Reversed generator order must give the same canonical matrix.
        let mut gens = code.generators().to_vec();
        gens.reverse();
        stable &= constacyclic::codes::code_from_generators(q, &gens).canonical_matrix()
            == other.canonical_matrix();
        for nu in [7, -7] {
            let psi = EquivMap::new(q, z25.inv(z25.from_int(nu)).unwrap()).unwrap();
            let img = psi.image(code);
            let words: Vec<_> = rows.iter().map(|w| psi.apply(w)).collect();
            closed &= is_constacyclic_closed(psi.target(), &words);
            closed &= psi.target().lambda() == z25.from_int(-nu);
            stable &= psi.image(other).canonical_matrix() == img.canonical_matrix();
        }
    }
    // C_1 + C_2 mapped into R[x]/(x^18 + 1) through the nu0 = 7 splitting.
    let split = crt_split(&z25, 9, CrtVariant::Negacyclic).unwrap();
    let (a, b) = split.components();
    let nu0 = z25.from_int(7);
    closed &= z25.mul(nu0, nu0) == z25.from_int(-1);
    let to_a = EquivMap::new(first.c1.ambient(), root_of(&z25, a.lambda(), 9)).unwrap();
    let to_b = EquivMap::new(first.c2.ambient(), root_of(&z25, b.lambda(), 9)).unwrap();
    let mut words: Vec<_> = first
        .c1
        .canonical_matrix()
        .rows()
        .iter()
        .map(|w| split.backward(&to_a.apply(w), &b.zero()))
        .collect();
    words.extend(
        first
            .c2
            .canonical_matrix()
            .rows()
            .iter()
            .map(|w| split.backward(&a.zero(), &to_b.apply(w))),
    );
    closed &=
        split.whole().lambda() == z25.from_int(-1) && is_constacyclic_closed(split.whole(), &words);
    outcome(
        closed && stable,
        format!("factorization exact, root 7, codes shift-closed {closed}, canonical matrices stable {stable}"),
    )
}

/// The smallest `d` with `d^n = lambda`, by exhaustive search.
fn root_of(ring: &ChainRing, lambda: constacyclic::RingElem, n: u64) -> constacyclic::RingElem {
    ring.elements()
        .into_iter()
        .find(|&d| ring.pow(d, n) == lambda)
        .expect("root exists")
}

/// Every ideal of `q`, as sorted lists of element indices, by closing the
/// principal ideals `{g f}` under sums.
fn ideals_by_brute_force<R: FiniteChainRing>(q: &QuotientRing<R>) -> HashSet<Vec<u64>> {
    let size = q.size().unwrap();
    let elems: Vec<_> = (0..size).map(|i| q.elem_at(i)).collect();
    let mut ideals: HashSet<Vec<u64>> = HashSet::new();
    for f in &elems {
        let mut set: Vec<u64> = elems.iter().map(|g| q.index_of(&q.mul(g, f))).collect();
        set.sort_unstable();
        set.dedup();
        ideals.insert(set);
    }
    loop {
        let list: Vec<Vec<u64>> = ideals.iter().cloned().collect();
        let before = ideals.len();
        for a in &list {
            for b in &list {
                let mut sum: Vec<u64> = a
                    .iter()
                    .flat_map(|&i| b.iter().map(move |&j| (i, j)))
                    .map(|(i, j)| q.index_of(&q.add(&elems[i as usize], &elems[j as usize])))
                    .collect();
                sum.sort_unstable();
                sum.dedup();
                ideals.insert(sum);
            }
        }
        if ideals.len() == before {
            return ideals;
        }
    }
}

fn criterion3() -> Outcome {
    let args = [
        "chaincodes",
        "--p",
        "3",
        "--e",
        "2",
        "--r",
        "1",
        "--s",
        "3",
        "--alpha",
        "8",
        "--beta",
        "1",
    ];
    let (code, out) = run_cli(&[&args[..], &["--json"]].concat());
    if code != 0 {
        return outcome(false, "chaincodes failed");
    }
    let json: Value = serde_json::from_str(&out).unwrap();
    let rows = json["ideals"].as_array().unwrap();
    let sizes_ok = rows.len() == 55
        && rows.iter().enumerate().all(|(i, row)| {
            row["cardinality"].as_str() == Some(&3u128.pow(54 - i as u32).to_string())
        });
    let (_, human) = run_cli(&args);
    let human_rows = human
        .lines()
        .filter(|l| l.starts_with(char::is_numeric))
        .count();

    // Downscale: Z_9[x]/(x^3 - 2), 729 elements.
    let z9 = ChainRing::integers_mod(3, 2).unwrap();
    let cq = ChainQuotient::build(&z9, 1, z9.from_int(8), z9.one()).unwrap();
    let q = cq.quotient();
    let brute = ideals_by_brute_force(q);
    let mut minus_x_minus_1 = q.zero();
    minus_x_minus_1[0] = z9.from_int(-1);
    minus_x_minus_1[1] = z9.from_int(-1);
    let size = q.size().unwrap();
    let powers: HashSet<Vec<u64>> = (0..=6)
        .map(|i| {
            let g = q.pow(&minus_x_minus_1, i);
            let mut set: Vec<u64> = (0..size)
                .map(|j| q.index_of(&q.mul(&q.elem_at(j), &g)))
                .collect();
            set.sort_unstable();
            set.dedup();
            set
        })
        .collect();
    let ok = sizes_ok && human_rows == 55 && brute == powers && powers.len() == 7;
    outcome(
        ok,
        format!(
            "{} rows with |C_i| = 3^(54-i): {sizes_ok}; x^3 - 2 over Z_9 has {} ideals, equal to <(-x-1)^i>: {}",
            rows.len(),
            brute.len(),
            brute == powers
        ),
    )
}

const ROOT_FIELDS: [(u64, u32); 15] = [
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
    (5, 2),
    (3, 3),
    (2, 5),
    (7, 2),
    (2, 6),
];

/// Indices of all `n`-th powers of units, by repeated multiplication.
fn nth_powers_brute<R: Ring>(ring: &R, n: u64) -> Vec<bool> {
    let mut hit = vec![false; ring.size() as usize];
    for x in ring.elements().into_iter().filter(|&x| ring.is_unit(x)) {
        let mut y = ring.one();
        for _ in 0..n {
            y = ring.mul(y, x);
        }
        hit[ring.index_of(y) as usize] = true;
    }
    hit
}

fn criterion4() -> Outcome {
    let mut checked = 0u64;
    let mut bad = Vec::new();
    for (p, r) in ROOT_FIELDS {
        let f = make_field(p, r).unwrap();
        for n in 1..=24u64 {
            let brute = nth_powers_brute(&f, n);
            for lam in f.elements().into_iter().filter(|&x| !f.is_zero(x)) {
                checked += 1;
                let got = f.nth_root(lam, n).unwrap();
                let ok = match got {
                    Some(d) => brute[f.index_of(lam) as usize] && f.pow(d, n) == lam,
                    None => !brute[f.index_of(lam) as usize],
                };
                if !ok {
                    bad.push(format!("F_{} n = {n} lambda = {}", f.q(), f.fmt_elem(lam)));
                }
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "{checked} (q, n, lambda) triples, {} discrepancies {:?}",
            bad.len(),
            bad.first()
        ),
    )
}

fn criterion5() -> Outcome {
    let rings = [
        ChainRing::integers_mod(2, 2).unwrap(),
        ChainRing::integers_mod(2, 3).unwrap(),
        ChainRing::integers_mod(3, 2).unwrap(),
        ChainRing::integers_mod(5, 2).unwrap(),
        ChainRing::integers_mod(3, 3).unwrap(),
        ChainRing::galois(2, 2, 2).unwrap(),
        ChainRing::galois(3, 2, 2).unwrap(),
        ChainRing::u_adic(3, 1, 2).unwrap(),
    ];
    let mut checked = 0u64;
    let mut bad = Vec::new();
    for ring in &rings {
        let k = ring.residue_field();
        for n in (1..=12u64).filter(|n| n % ring.p() != 0) {
            let brute = nth_powers_brute(ring, n);
            let brute_k = nth_powers_brute(k, n);
            for lam in ring.units() {
                checked += 1;
                let in_r = brute[ring.index_of(lam) as usize];
                let in_k = brute_k[k.index_of(ring.mu(lam)) as usize];
                let ok = match lift_nth_root(ring, lam, n).unwrap() {
                    Some(d) => in_r && in_k && ring.pow(d, n) == lam,
                    None => !in_r && !in_k,
                };
                if !ok {
                    bad.push(format!(
                        "{} n = {n} lambda = {}",
                        ring.descriptor(),
                        ring.fmt_elem(lam)
                    ));
                }
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "{checked} (R, n, lambda) triples, {} discrepancies {:?}",
            bad.len(),
            bad.first()
        ),
    )
}

fn summarize(reports: &[ClaimReport]) -> (bool, String) {
    let ok = reports.iter().all(ClaimReport::passed);
    let checked: u64 = reports.iter().map(|c| c.checked).sum();
    let failed: Vec<&str> = reports
        .iter()
        .filter(|c| !c.passed())
        .map(|c| c.claim.as_str())
        .collect();
    (
        ok,
        format!(
            "{} claims, {checked} checks, failing: {failed:?}",
            reports.len()
        ),
    )
}

/// Weight distribution of every element of `q` under the Hamming weight.
fn hamming_distribution<R: FiniteChainRing>(
    q: &QuotientRing<R>,
    words: &[Vec<R::Elem>],
) -> Vec<u64> {
    let mut out = vec![0u64; q.n() + 1];
    for w in words {
        out[w.iter().filter(|&&c| !q.ring().is_zero(c)).count()] += 1;
    }
    out
}

fn criterion6() -> Outcome {
    let suite = run_suite("isometry").unwrap();
    let (ok, detail) = summarize(&suite[0].claims);
    let instances = suite[0].claims[1].checked;

    // Independent spot check: Z_9, n = 3, delta = 2, every ideal found by
    // brute force keeps its Hamming distribution under f(x) -> f(x / delta).
    let z9 = ChainRing::integers_mod(3, 2).unwrap();
    let src = QuotientRing::new(z9.clone(), 3, z9.one()).unwrap();
    let psi = EquivMap::new(&src, z9.from_int(2)).unwrap();
    let mut spot = true;
    let ideals = ideals_by_brute_force(&src);
    for ideal in &ideals {
        let words: Vec<_> = ideal.iter().map(|&i| src.elem_at(i)).collect();
        let images: Vec<_> = words.iter().map(|w| psi.apply(w)).collect();
        let img_set: HashSet<u64> = images.iter().map(|w| psi.target().index_of(w)).collect();
        let closed = images
            .iter()
            .all(|w| img_set.contains(&psi.target().index_of(&psi.target().shift(w))));
        spot &= closed
            && hamming_distribution(&src, &words) == hamming_distribution(psi.target(), &images);
    }
    outcome(
        ok && instances >= 50 && spot && ideals.len() >= 5,
        format!(
            "{instances} instances; {detail}; brute-force spot check over {} ideals: {spot}",
            ideals.len()
        ),
    )
}

fn criterion7() -> Outcome {
    let (ok, detail) = summarize(&section5_with(SWEEP_LIMIT, SWEEP_LIMIT_S0));
    // Independent cross-check on quotients of at most 729 elements.
    let mut cross = 0;
    let mut cross_ok = true;
    for (p, e, s) in [
        (2u64, 2u32, 1u32),
        (2, 3, 1),
        (3, 2, 1),
        (2, 2, 2),
        (2, 1, 3),
        (5, 1, 1),
        (3, 1, 1),
    ] {
        let ring = ChainRing::integers_mod(p, e).unwrap();
        for alpha in ring.units() {
            let Ok(cq) = ChainQuotient::build(&ring, s, alpha, ring.one()) else {
                continue;
            };
            if cq.quotient().size().unwrap() > 729 {
                continue;
            }
            cross += 1;
            let q = cq.quotient();
            let ideals = ideals_by_brute_force(q);
            let size = q.size().unwrap();
            let one = q.index_of(&q.one());
            let units: Vec<bool> = (0..size)
                .map(|i| {
                    let f = q.elem_at(i);
                    (0..size).any(|j| q.index_of(&q.mul(&f, &q.elem_at(j))) == one)
                })
                .collect();
            cross_ok &= ideals.len() as u64 == 1 + e as u64 * p.pow(s)
                && (0..size).all(|i| cq.is_unit(&q.elem_at(i)) == units[i as usize]);
        }
    }
    outcome(
        ok && cross_ok && cross > 0,
        format!("{detail}; brute-force cross-check on {cross} quotients: {cross_ok}"),
    )
}

fn criterion8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut notes = Vec::new();
    let mut ok = true;
    for (p, e) in [(3u64, 2u32), (5, 2), (3, 3)] {
        let ring = ChainRing::integers_mod(p, e).unwrap();
        let has_i = ring
            .units()
            .iter()
            .any(|&x| ring.mul(x, x) == ring.from_int(-1));
        ok &= has_i == (p % 4 == 1);
        for m in [3usize, 5, 9] {
            for variant in [CrtVariant::Cyclic, CrtVariant::Negacyclic] {
                let split = match crt_split(&ring, m, variant) {
                    Ok(s) => s,
                    Err(constacyclic::Error::Inapplicable(_)) => {
                        ok &= variant == CrtVariant::Negacyclic && !has_i;
                        continue;
                    }
                    Err(err) => {
                        notes.push(format!("{err}"));
                        ok = false;
                        continue;
                    }
                };
                ok &= variant == CrtVariant::Cyclic || has_i;
                let w = split.whole();
                let half = ring.inv(ring.from_int(2)).unwrap();
                // e1 = (x^m + 1)/2 and e2 = -(x^m - 1)/2 in the cyclic case.
                let (e1, e2) = split.idempotents();
                ok &= w.add(&e1, &e2) == w.one()
                    && w.mul(&e1, &e2) == w.zero()
                    && w.mul(&e1, &e1) == e1
                    && w.mul(&e2, &e2) == e2;
                if variant == CrtVariant::Cyclic {
                    let mut expect = w.zero();
                    expect[0] = half;
                    expect[m] = half;
                    ok &= e1 == expect;
                }
                for _ in 0..1000 {
                    let f: Vec<_> = (0..2 * m)
                        .map(|_| ring.elem_at(rng.gen_range(0..ring.size())))
                        .collect();
                    let (a, b) = split.forward(&f);
                    ok &= split.backward(&a, &b) == f;
                    let (c1, c2) = split.components();
                    let a2: Vec<_> = (0..m)
                        .map(|_| ring.elem_at(rng.gen_range(0..ring.size())))
                        .collect();
                    let b2: Vec<_> = (0..m)
                        .map(|_| ring.elem_at(rng.gen_range(0..ring.size())))
                        .collect();
                    ok &= split.forward(&split.backward(&a2, &b2)) == (a2.clone(), b2.clone());
                    ok &= c1.n() == m && c2.n() == m;
                }
            }
        }
    }
    outcome(
        ok,
        format!("Z_9, Z_25, Z_27 with m in {{3, 5, 9}}; negacyclic iff p = 1 mod 4 {notes:?}"),
    )
}

fn criterion9() -> Outcome {
    let mut rings = 0;
    let mut bad = Vec::new();
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        for e in 1..=10u32 {
            for r in 1..=10u32 {
                if p.checked_pow(e * r).is_none_or(|s| s > 1 << 10) {
                    continue;
                }
                let mut fams = vec![Family::Galois];
                if e > 1 {
                    fams.push(Family::UAdic);
                }
                for fam in fams {
                    let ring = ChainRing::with_caps(fam, p, e, r, 1 << 10, 1 << 10).unwrap();
                    rings += 1;
                    if !hom_weight_axioms(&ring) {
                        bad.push(ring.descriptor());
                    }
                }
            }
        }
    }
    // Primes above 31 only give fields, where the weight is Hamming weight.
    for p in (37..=1021u64).filter(|&p| (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)) {
        let f = make_field(p, 1).unwrap();
        rings += 1;
        if !hom_weight_axioms(&f) {
            bad.push(f.descriptor());
        }
    }
    outcome(
        bad.is_empty(),
        format!("{rings} chain rings with |R| <= 2^10, failures {bad:?}"),
    )
}

/// Axiom (i) on every (unit, element) pair; axiom (ii) with one average
/// over every nonzero ideal, ideals found as principal ideals `{r a}`.
fn hom_weight_axioms<R: FiniteChainRing>(ring: &R) -> bool {
    let elems = ring.elements();
    let units: Vec<_> = elems.iter().copied().filter(|&u| ring.is_unit(u)).collect();
    let w: Vec<_> = elems.iter().map(|&a| hom_weight(ring, a)).collect();
    for (i, &a) in elems.iter().enumerate() {
        if units
            .iter()
            .any(|&u| w[ring.index_of(ring.mul(u, a)) as usize] != w[i])
        {
            return false;
        }
    }
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut average = None;
    for &a in elems.iter().filter(|&&a| !ring.is_zero(a)) {
        let mut ideal: Vec<u64> = elems
            .iter()
            .map(|&r| ring.index_of(ring.mul(r, a)))
            .collect();
        ideal.sort_unstable();
        ideal.dedup();
        if !seen.insert(ideal.clone()) {
            continue;
        }
        let total = ideal
            .iter()
            .fold(num_rational::Ratio::from_integer(0u64), |acc, &i| {
                acc + w[i as usize]
            });
        let avg = total / num_rational::Ratio::from_integer(ideal.len() as u64);
        if *average.get_or_insert(avg) != avg {
            return false;
        }
    }
    true
}

type Criterion = (&'static str, Option<Duration>, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        (
            "x^90 - 1 over F_27 and the 13 table rows",
            Some(Duration::from_secs(1)),
            criterion1,
        ),
        (
            "x^9 - 1 over Z_25, root 7, shift-closed codes",
            Some(Duration::from_secs(5)),
            criterion2,
        ),
        (
            "55 chain ideals over Z_9, downscale exhaustive",
            Some(Duration::from_secs(10)),
            criterion3,
        ),
        (
            "field n-th roots vs brute force",
            Some(Duration::from_secs(60)),
            criterion4,
        ),
        (
            "lifted n-th roots vs brute force",
            Some(Duration::from_secs(120)),
            criterion5,
        ),
        ("isometry suite", None, criterion6),
        ("chain structure sweep", None, criterion7),
        ("CRT split", None, criterion8),
        ("homogeneous weight axioms", None, criterion9),
    ];
    let only: Option<usize> = std::env::var("ACCEPTANCE_ONLY")
        .ok()
        .and_then(|v| v.parse().ok());
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.into_iter().enumerate() {
        let n = i + 1;
        if only.is_some_and(|k| k != n) {
            continue;
        }
        let start = Instant::now();
        let out = run();
        let elapsed = start.elapsed();
        let in_time = limit.is_none_or(|l| elapsed <= l);
        let ok = out.ok && in_time;
        if !ok {
            failed += 1;
        }
        let limit_text = limit.map_or(String::new(), |l| format!(", limit {} s", l.as_secs()));
        println!(
            "criterion {n} [{}] {name}: {} ({:.2} s{limit_text})",
            if ok { "PASS" } else { "FAIL" },
            out.detail,
            elapsed.as_secs_f64()
        );
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
