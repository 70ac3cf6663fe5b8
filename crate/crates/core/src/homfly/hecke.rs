//! Hecke-algebra evaluation of the HOMFLY polynomial.
//!
//! Generators satisfy `σ_i^2 = vz σ_i + v^2`, which is the skein relation
//! `P(L+) = vz P(L0) + v^2 P(L-)` read inside the algebra. The trace is
//! normalized so that both Markov stabilizations preserve it and adding a
//! free strand multiplies by `δ = (v^-1 - v) z^-1`:
//!
//! * `Tr_n(x σ_{n-1}^{±1}) = Tr_{n-1}(x)` for `x` on `n - 1` strands,
//! * `Tr_n(x) = δ Tr_{n-1}(x)` for `x` on `n - 1` strands,
//! * `Tr_1(1) = 1`.
//!
//! Elements are expanded in the standard basis `T_w`, `w ∈ S_n`, and the
//! trace of a basis element is reduced to `n - 1` strands through the coset
//! factorization `w = u · s_{n-2} ⋯ s_k`.

use std::collections::HashMap;

use crate::algebra::LaurentPoly2;

/// One-line notation, 0-based.
type Perm = Vec<u8>;

/// `δ = (v^-1 - v) z^-1`, the factor for one extra split unknot.
pub fn delta() -> LaurentPoly2 {
    LaurentPoly2::from_terms([(1, -1, -1), (-1, 1, -1)])
}

#[derive(Debug, Clone)]
pub(crate) struct HeckeElement {
    terms: HashMap<Perm, LaurentPoly2>,
}

impl HeckeElement {
    pub fn identity(n: usize) -> Self {
        let mut terms = HashMap::new();
        terms.insert((0..n as u8).collect(), LaurentPoly2::one());
        Self { terms }
    }

    fn accumulate(terms: &mut HashMap<Perm, LaurentPoly2>, w: Perm, c: &LaurentPoly2, neg: bool, a: i32, b: i32) {
        let slot = terms.entry(w).or_default();
        slot.add_shifted(c, neg, a, b);
    }

    /// Right multiplication by the letter `g` (`σ_{|g|}^{sign g}`).
    pub fn mul_letter(&mut self, g: i32) {
        let i = g.unsigned_abs() as usize - 1;
        let mut out: HashMap<Perm, LaurentPoly2> = HashMap::with_capacity(self.terms.len() * 2);
        for (w, c) in self.terms.drain() {
            let mut ws = w.clone();
            ws.swap(i, i + 1);
            let ascent = w[i] < w[i + 1];
            match (ascent, g > 0) {
                // T_w σ = T_{ws}
                (true, true) => Self::accumulate(&mut out, ws, &c, false, 0, 0),
                // σ^-1 = v^-2 σ - v^-1 z
                (true, false) => {
                    Self::accumulate(&mut out, ws, &c, false, -2, 0);
                    Self::accumulate(&mut out, w, &c, true, -1, 1);
                }
                // T_w σ = vz T_w + v^2 T_{ws}
                (false, true) => {
                    Self::accumulate(&mut out, ws, &c, false, 2, 0);
                    Self::accumulate(&mut out, w, &c, false, 1, 1);
                }
                // T_w σ^-1 = T_{ws}
                (false, false) => Self::accumulate(&mut out, ws, &c, false, 0, 0),
            }
        }
        out.retain(|_, c| !c.is_zero());
        self.terms = out;
    }

    #[cfg(test)]
    pub fn support_len(&self) -> usize {
        self.terms.len()
    }
}

/// Left multiplication of a basis element by `σ_i` (0-based `i`).
fn left_mul_generator(elem: HashMap<Perm, LaurentPoly2>, i: usize) -> HashMap<Perm, LaurentPoly2> {
    let mut out: HashMap<Perm, LaurentPoly2> = HashMap::with_capacity(elem.len() * 2);
    let (lo, hi) = (i as u8, i as u8 + 1);
    for (w, c) in elem {
        let pos_lo = w.iter().position(|&x| x == lo).unwrap();
        let pos_hi = w.iter().position(|&x| x == hi).unwrap();
        let mut sw = w.clone();
        sw.swap(pos_lo, pos_hi);
        if pos_lo < pos_hi {
            HeckeElement::accumulate(&mut out, sw, &c, false, 0, 0);
        } else {
            HeckeElement::accumulate(&mut out, sw, &c, false, 2, 0);
            HeckeElement::accumulate(&mut out, w, &c, false, 1, 1);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Memoized trace of basis elements. Values depend only on the permutation,
/// so one table can serve any number of evaluations.
#[derive(Debug, Default)]
pub(crate) struct TraceTable {
    memo: HashMap<Perm, LaurentPoly2>,
}

impl TraceTable {
    pub fn trace(&mut self, elem: &HeckeElement) -> LaurentPoly2 {
        let mut total = LaurentPoly2::zero();
        for (w, c) in &elem.terms {
            let t = self.basis_trace(w);
            total += &(c * &t);
        }
        total
    }

    fn basis_trace(&mut self, w: &[u8]) -> LaurentPoly2 {
        if let Some(t) = self.memo.get(w) {
            return t.clone();
        }
        let n = w.len();
        let value = if n <= 1 {
            LaurentPoly2::one()
        } else if w[n - 1] as usize == n - 1 {
            &delta() * &self.basis_trace(&w[..n - 1])
        } else {
            let k = w.iter().position(|&x| x as usize == n - 1).unwrap();
            // u = w · s_k s_{k+1} ⋯ s_{n-2} moves the top value to the end;
            // restricted to n - 1 strands it is w with that value deleted
            let mut u: Perm = w.to_vec();
            u.remove(k);
            // Tr_n(T_u σ_{n-2} C) = Tr_{n-1}(C T_u), C = σ_{n-3} ⋯ σ_k
            let mut elem: HashMap<Perm, LaurentPoly2> = HashMap::new();
            elem.insert(u, LaurentPoly2::one());
            for i in k..n.saturating_sub(2) {
                elem = left_mul_generator(elem, i);
            }
            let mut total = LaurentPoly2::zero();
            for (x, c) in &elem {
                let t = self.basis_trace(x);
                total += &(c * &t);
            }
            total
        };
        self.memo.insert(w.to_vec(), value.clone());
        value
    }
}

/// Trace of the braid word `letters` on `n` strands, no reductions applied.
pub(crate) fn hecke_trace(n: usize, letters: &[i32], table: &mut TraceTable) -> LaurentPoly2 {
    let mut elem = HeckeElement::identity(n);
    for &g in letters {
        elem.mul_letter(g);
    }
    table.trace(&elem)
}
