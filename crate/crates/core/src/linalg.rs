//! Row reduction of matrices over finite chain rings to Howell form, which
//! gives each submodule of `R^n` a unique generator matrix.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::ring::FiniteChainRing;

/// A submodule of `R^ncols` in Howell form.
///
/// Row `i` has its first nonzero entry `gamma^{v_i}` in column `c_i`
/// (`c_i` strictly increasing); entries above a pivot are reduced modulo
/// `<gamma^{v_i}>`; and any element of the span vanishing in the first `c`
/// columns is a combination of the rows with pivot column at least `c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Howell<E> {
    ncols: usize,
    rows: Vec<Vec<E>>,
    pivots: Vec<(usize, u32)>,
}

impl<E: Copy + Eq> Howell<E> {
    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<E>] {
        &self.rows
    }

    /// `(column, gamma-valuation)` of each pivot.
    pub fn pivots(&self) -> &[(usize, u32)] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }
}

fn axpy<R: FiniteChainRing>(ring: &R, dst: &mut [R::Elem], c: R::Elem, src: &[R::Elem]) {
    if ring.is_zero(c) {
        return;
    }
    for (d, &s) in dst.iter_mut().zip(src) {
        *d = ring.sub(*d, ring.mul(c, s));
    }
}

/// Howell form of the row span of `gens` (each of length `ncols`).
pub fn howell_form<R: FiniteChainRing>(
    ring: &R,
    gens: &[Vec<R::Elem>],
    ncols: usize,
) -> Howell<R::Elem> {
    let e = ring.nilpotency();
    let mut pool: Vec<Vec<R::Elem>> = gens
        .iter()
        .filter(|g| g.iter().any(|&c| !ring.is_zero(c)))
        .cloned()
        .collect();
    let mut rows = Vec::new();
    let mut pivots = Vec::new();
    for col in 0..ncols {
        let best = pool
            .iter()
            .enumerate()
            .filter(|(_, row)| !ring.is_zero(row[col]))
            .min_by_key(|(i, row)| (ring.valuation(row[col]), *i))
            .map(|(i, _)| i);
        let Some(bi) = best else { continue };
        let mut piv = pool.swap_remove(bi);
        let v = ring.valuation(piv[col]);
        let unit = ring.div_gamma_pow(piv[col], v);
        let uinv = ring.inv(unit).expect("unit part of a pivot");
        for c in piv.iter_mut() {
            *c = ring.mul(uinv, *c);
        }
        for row in pool.iter_mut() {
            if !ring.is_zero(row[col]) {
                let t = ring.div_gamma_pow(row[col], v);
                axpy(ring, row, t, &piv);
            }
        }
        if v > 0 {
            let g = ring.gamma_pow(e - v);
            let extra: Vec<_> = piv.iter().map(|&c| ring.mul(g, c)).collect();
            pool.push(extra);
        }
        pool.retain(|row| row.iter().any(|&c| !ring.is_zero(c)));
        rows.push(piv);
        pivots.push((col, v));
    }
    for i in 0..rows.len() {
        let (col, v) = pivots[i];
        let (head, tail) = rows.split_at_mut(i);
        let piv = &tail[0];
        for row in head.iter_mut() {
            let b = row[col];
            let r = ring.residue_rep(b, v);
            if b != r {
                let t = ring.div_gamma_pow(ring.sub(b, r), v);
                axpy(ring, row, t, piv);
            }
        }
    }
    Howell {
        ncols,
        rows,
        pivots,
    }
}

impl<E: Copy + Eq> Howell<E> {
    /// Whether `w` lies in the span.
    pub fn contains<R: FiniteChainRing<Elem = E>>(&self, ring: &R, w: &[E]) -> bool {
        let mut w = w.to_vec();
        for (row, &(col, v)) in self.rows.iter().zip(&self.pivots) {
            if w[..col].iter().any(|&c| !ring.is_zero(c)) {
                return false;
            }
            let b = w[col];
            if ring.is_zero(b) {
                continue;
            }
            if ring.valuation(b) < v {
                return false;
            }
            let t = ring.div_gamma_pow(b, v);
            axpy(ring, &mut w, t, row);
        }
        w.iter().all(|&c| ring.is_zero(c))
    }

    /// `log_q |span|`, i.e. the sum of `e - v_i`.
    pub fn log_q_size(&self, e: u32) -> u64 {
        self.pivots.iter().map(|&(_, v)| (e - v) as u64).sum()
    }

    pub fn cardinality<R: FiniteChainRing<Elem = E>>(&self, ring: &R) -> BigUint {
        BigUint::from(ring.residue_size()).pow(self.log_q_size(ring.nilpotency()) as u32)
    }

    /// Every element of the span, each listed once.
    pub fn enumerate<R: FiniteChainRing<Elem = E>>(
        &self,
        ring: &R,
        cap: u64,
    ) -> Result<Vec<Vec<E>>> {
        let size = self.cardinality(ring);
        if size > BigUint::from(cap) {
            let s = u128::try_from(&size).unwrap_or(u128::MAX);
            return Err(Error::cap("code enumeration", s, cap as u128));
        }
        let e = ring.nilpotency();
        let all = ring.elements();
        let coeff_sets: Vec<Vec<E>> = self
            .pivots
            .iter()
            .map(|&(_, v)| {
                all.iter()
                    .copied()
                    .filter(|&a| ring.residue_rep(a, e - v) == a)
                    .collect()
            })
            .collect();
        let mut out = vec![vec![ring.zero(); self.ncols]];
        for (row, coeffs) in self.rows.iter().zip(&coeff_sets) {
            let mut next = Vec::with_capacity(out.len() * coeffs.len());
            for w in &out {
                for &c in coeffs {
                    let mut x = w.clone();
                    for (xi, &ri) in x.iter_mut().zip(row) {
                        *xi = ring.add(*xi, ring.mul(c, ri));
                    }
                    next.push(x);
                }
            }
            out = next;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chainring::ChainRing;
    use crate::ring::Ring;
    use std::collections::HashSet;

    fn span_by_brute_force(ring: &ChainRing, gens: &[Vec<crate::chainring::RingElem>]) -> usize {
        let n = gens[0].len();
        let mut set = HashSet::new();
        set.insert(vec![ring.zero(); n]);
        loop {
            let before = set.len();
            let cur: Vec<_> = set.iter().cloned().collect();
            for w in &cur {
                for g in gens {
                    let s: Vec<_> = w.iter().zip(g).map(|(&a, &b)| ring.add(a, b)).collect();
                    set.insert(s);
                }
            }
            if set.len() == before {
                return set.len();
            }
        }
    }

    #[test]
    fn z4_span_sizes_match_closure() {
        let z4 = ChainRing::integers_mod(2, 2).unwrap();
        let i = |k| z4.from_int(k);
        let gens = vec![
            vec![i(2), i(1), i(0)],
            vec![i(2), i(3), i(2)],
            vec![i(0), i(2), i(2)],
        ];
        let h = howell_form(&z4, &gens, 3);
        assert_eq!(
            h.cardinality(&z4),
            BigUint::from(span_by_brute_force(&z4, &gens) as u64)
        );
        let words = h.enumerate(&z4, 1 << 10).unwrap();
        assert_eq!(words.len() as u64, 1u64 << h.log_q_size(2));
        assert!(words.iter().all(|w| h.contains(&z4, w)));
    }

    #[test]
    fn canonical_under_generator_changes() {
        let z9 = ChainRing::integers_mod(3, 2).unwrap();
        let i = |k| z9.from_int(k);
        let a = vec![vec![i(3), i(6)], vec![i(1), i(4)]];
        let b = vec![vec![i(2), i(8)], vec![i(4), i(7)], vec![i(0), i(3)]];
        assert_eq!(howell_form(&z9, &a, 2), howell_form(&z9, &b, 2));
        // The row (3, 0) needs a second pivot row of valuation 1.
        let c = vec![vec![i(3), i(0)]];
        let h = howell_form(&z9, &c, 2);
        assert_eq!(h.cardinality(&z9), BigUint::from(3u32));
        assert!(!h.contains(&z9, &[i(1), i(0)]));
        assert!(h.contains(&z9, &[i(6), i(0)]));
    }
}
