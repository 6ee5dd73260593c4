use std::collections::HashSet;

use proptest::prelude::*;

use constacyclic::codes::{code_from_generators, unit_nth_root};
use constacyclic::ffield::make_field;
use constacyclic::linalg::howell_form;
use constacyclic::polyfactor::{factor_xn_minus_lambda, factor_xn_minus_lambda_field};
use constacyclic::{ChainRing, EquivMap, PolyRing, QuotientRing, Ring};

fn z4() -> ChainRing {
    ChainRing::integers_mod(2, 2).unwrap()
}

/// All `Z_4`-combinations of `rows`, as element indices.
fn span_brute(
    ring: &ChainRing,
    rows: &[Vec<constacyclic::RingElem>],
    n: usize,
) -> HashSet<Vec<u64>> {
    let mut out = HashSet::new();
    let size = ring.size();
    for idx in 0..size.pow(rows.len() as u32) {
        let mut w = vec![ring.zero(); n];
        for (k, row) in rows.iter().enumerate() {
            let c = ring.elem_at((idx / size.pow(k as u32)) % size);
            for (x, &y) in w.iter_mut().zip(row) {
                *x = ring.add(*x, ring.mul(c, y));
            }
        }
        out.insert(w.iter().map(|&x| ring.index_of(x)).collect());
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn howell_form_spans_the_input(entries in prop::collection::vec(0i64..4, 9)) {
        let ring = z4();
        let rows: Vec<Vec<_>> = entries.chunks(3).map(|c| c.iter().map(|&x| ring.from_int(x)).collect()).collect();
        let h = howell_form(&ring, &rows, 3);
        prop_assert_eq!(span_brute(&ring, &rows, 3), span_brute(&ring, h.rows(), 3));
        let size = h.cardinality(&ring);
        prop_assert_eq!(size, span_brute(&ring, &rows, 3).len().into());
    }

    #[test]
    fn howell_form_is_canonical(entries in prop::collection::vec(0i64..4, 9), perm in 0usize..6) {
        let ring = z4();
        let mut rows: Vec<Vec<_>> = entries.chunks(3).map(|c| c.iter().map(|&x| ring.from_int(x)).collect()).collect();
        let a = howell_form(&ring, &rows, 3);
        rows.rotate_left(perm % 3);
        if perm >= 3 {
            rows.reverse();
        }
        prop_assert_eq!(a, howell_form(&ring, &rows, 3));
    }

    #[test]
    fn field_factorization_multiplies_back(n in 1u64..40, k in 0i64..26) {
        let f = make_field(3, 3).unwrap();
        let lambda = f.gen_pow(k);
        prop_assume!(f.nth_root(lambda, n).unwrap().is_some());
        let fac = match factor_xn_minus_lambda_field(&f, n, lambda) {
            Err(constacyclic::Error::CapExceeded { .. }) => return Ok(()),
            other => other.unwrap(),
        };
        let pr = PolyRing::new(f.clone());
        let product = fac.factors.iter().fold(pr.one(), |acc, (g, m)| pr.mul(&acc, &pr.pow(g, *m)));
        prop_assert_eq!(product, pr.binomial(n as usize, lambda));
    }

    #[test]
    fn chain_factorization_multiplies_back(n in 1u64..20, lam in 0i64..25) {
        let ring = ChainRing::integers_mod(5, 2).unwrap();
        let lambda = ring.from_int(lam);
        prop_assume!(ring.is_unit(lambda) && n % 5 != 0);
        prop_assume!(unit_nth_root(&ring, lambda, n).unwrap().is_some());
        let fac = factor_xn_minus_lambda(&ring, n, lambda).unwrap();
        let pr = PolyRing::new(ring.clone());
        let product = fac.factors.iter().fold(pr.one(), |acc, (g, m)| pr.mul(&acc, &pr.pow(g, *m)));
        prop_assert_eq!(product, pr.binomial(n as usize, lambda));
    }

    #[test]
    fn psi_is_a_ring_isomorphism(a in prop::collection::vec(0i64..9, 4), b in prop::collection::vec(0i64..9, 4), d in 1i64..9) {
        let ring = ChainRing::integers_mod(3, 2).unwrap();
        let delta = ring.from_int(d);
        prop_assume!(ring.is_unit(delta));
        let q = QuotientRing::new(ring.clone(), 4, ring.one()).unwrap();
        let psi = EquivMap::new(&q, delta).unwrap();
        let a: Vec<_> = a.iter().map(|&x| ring.from_int(x)).collect();
        let b: Vec<_> = b.iter().map(|&x| ring.from_int(x)).collect();
        let t = psi.target();
        prop_assert_eq!(psi.apply(&q.mul(&a, &b)), t.mul(&psi.apply(&a), &psi.apply(&b)));
        prop_assert_eq!(psi.apply(&q.add(&a, &b)), t.add(&psi.apply(&a), &psi.apply(&b)));
        prop_assert_eq!(psi.apply_inverse(&psi.apply(&a)), a);
    }

    #[test]
    fn transported_codes_keep_their_size(g in prop::collection::vec(0i64..25, 3), lam in 1i64..25) {
        let ring = ChainRing::integers_mod(5, 2).unwrap();
        let lambda = ring.from_int(lam);
        prop_assume!(ring.is_unit(lambda));
        let q = QuotientRing::new(ring.clone(), 3, ring.one()).unwrap();
        let Some(delta) = unit_nth_root(&ring, lambda, 3).unwrap() else { return Ok(()) };
        let psi = EquivMap::new(&q, delta).unwrap();
        prop_assert_eq!(psi.target().lambda(), lambda);
        let code = code_from_generators(&q, &[g.iter().map(|&x| ring.from_int(x)).collect()]);
        let image = psi.image(&code);
        prop_assert!(image.is_shift_closed());
        prop_assert_eq!(image.cardinality(), code.cardinality());
    }
}
