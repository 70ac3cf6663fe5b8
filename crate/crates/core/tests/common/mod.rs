#![allow(dead_code)]

use std::collections::BTreeMap;

use cbord_core::algebra::LaurentPoly2;
use cbord_core::braid::{Band, BraidWord, QuasipositiveWord};
use cbord_core::plumbing::PlumbingTree;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use rand::Rng;

pub fn braid(s: &str) -> BraidWord {
    s.parse().unwrap()
}

pub fn tree(s: &str) -> PlumbingTree {
    s.parse().unwrap()
}

/// Braids on 2..=max_strands strands with up to `max_len` letters.
pub fn arb_braid(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |n| {
        let letter = (1..n as i32, any::<bool>()).prop_map(|(g, neg)| if neg { -g } else { g });
        prop::collection::vec(letter, 0..=max_len)
            .prop_map(move |letters| BraidWord::new(n, letters).unwrap())
    })
}

pub fn random_braid(rng: &mut impl Rng, max_strands: usize, max_len: usize) -> BraidWord {
    let n = rng.gen_range(2..=max_strands);
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.5) { g } else { -g }
        })
        .collect();
    BraidWord::new(n, letters).unwrap()
}

pub fn arb_quasipositive(max_strands: usize, max_bands: usize) -> impl Strategy<Value = QuasipositiveWord> {
    (2..=max_strands).prop_flat_map(move |n| {
        let letter = (1..n as i32, any::<bool>()).prop_map(|(g, neg)| if neg { -g } else { g });
        let band = (prop::collection::vec(letter, 0..=2), 1..n)
            .prop_map(|(conjugator, generator)| Band { conjugator, generator });
        prop::collection::vec(band, 0..=max_bands)
            .prop_map(move |bands| QuasipositiveWord::new(n, bands).unwrap())
    })
}

/// Random trees with even nonzero weights in `[-2*max_twist, 2*max_twist]`.
pub fn arb_tree(max_vertices: usize, max_twist: i64) -> impl Strategy<Value = PlumbingTree> {
    (1..=max_vertices).prop_flat_map(move |m| {
        let twist = (1..=max_twist, any::<bool>()).prop_map(|(n, neg)| if neg { -2 * n } else { 2 * n });
        let weights = prop::collection::vec(twist, m);
        let parents = (1..m.max(2)).map(|v| 0..v).collect::<Vec<_>>();
        (weights, parents).prop_map(move |(weights, parents)| {
            let parent = std::iter::once(None)
                .chain(parents.into_iter().take(m - 1).map(Some))
                .collect();
            PlumbingTree::from_parents(weights, parent).unwrap()
        })
    })
}

/// Maximum matching size of a tree, greedy from the leaves.
pub fn tree_matching(t: &PlumbingTree) -> usize {
    let mut matched = vec![false; t.len()];
    let mut size = 0;
    // preorder ids: children have larger ids than parents
    for v in (0..t.len()).rev() {
        if let Some(u) = t.parent(v) {
            if !matched[v] && !matched[u] {
                matched[v] = true;
                matched[u] = true;
                size += 1;
            }
        }
    }
    size
}

/// Single vertex of weight `-2m` as a quasipositive braid on `m + 1` strands.
pub fn negative_vertex_braid(m: usize) -> BraidWord {
    let n = m + 1;
    let mut bands: Vec<Band> = (1..=m).rev().map(Band::plain).collect();
    bands.push(Band::connecting(n, 1, n).unwrap());
    QuasipositiveWord::new(n, bands).unwrap().expand()
}

/// `P_m = vz + v^2 P_{m-1}` with `P_0` the 2-component unlink.
pub fn negative_vertex_recursion(m: usize) -> LaurentPoly2 {
    let mut p = &LaurentPoly2::monomial(1, -1, -1) - &LaurentPoly2::monomial(1, 1, -1);
    for _ in 0..m {
        p = &(&LaurentPoly2::v() * &LaurentPoly2::z()) + &(&p * &LaurentPoly2::monomial(1, 2, 0));
    }
    p
}

/// Integer Laurent polynomials in one variable `A`, kept independent of the
/// crate's own algebra.
pub type APoly = BTreeMap<i32, i128>;

fn a_mul(x: &APoly, y: &APoly) -> APoly {
    let mut out = APoly::new();
    for (ea, ca) in x {
        for (eb, cb) in y {
            *out.entry(ea + eb).or_default() += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn a_add(x: &mut APoly, y: &APoly) {
    for (e, c) in y {
        *x.entry(*e).or_default() += c;
    }
    x.retain(|_, c| *c != 0);
}

fn a_pow(x: &APoly, k: usize) -> APoly {
    (0..k).fold(APoly::from([(0, 1)]), |acc, _| a_mul(&acc, x))
}

fn a_mono(c: i128, e: i32) -> APoly {
    APoly::from([(e, c)])
}

fn union(x: usize, y: usize, parent: &mut [usize]) {
    let (rx, ry) = (find(parent, x), find(parent, y));
    parent[rx] = ry;
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Kauffman bracket of the closed braid diagram by a full state sum.
///
/// Point `(j, t)` is strand position `j` just below letter `t`; level `len`
/// wraps around to level 0. The A-smoothing of a positive `σ_i` keeps its
/// two strands vertical.
pub fn kauffman_bracket(b: &BraidWord) -> APoly {
    let n = b.strands();
    let letters = b.letters();
    let c = letters.len();
    let levels = c.max(1);
    let id = |j: usize, t: usize| j + n * (t % levels);
    let delta = APoly::from([(2, -1), (-2, -1)]);
    let mut total = APoly::new();
    for state in 0..(1u64 << c) {
        let mut parent: Vec<usize> = (0..n * levels).collect();
        let mut a_count = 0i32;
        for (t, &g) in letters.iter().enumerate() {
            let i = g.unsigned_abs() as usize;
            for j in 0..n {
                if j + 1 != i && j != i {
                    union(id(j, t), id(j, t + 1), &mut parent);
                }
            }
            let a_smoothing = state >> t & 1 == 0;
            a_count += if a_smoothing { 1 } else { -1 };
            let horizontal = a_smoothing != (g > 0);
            if horizontal {
                union(id(i - 1, t), id(i, t), &mut parent);
                union(id(i - 1, t + 1), id(i, t + 1), &mut parent);
            } else {
                union(id(i - 1, t), id(i - 1, t + 1), &mut parent);
                union(id(i, t), id(i, t + 1), &mut parent);
            }
        }
        let loops = (0..n * levels).filter(|&x| find(&mut parent, x) == x).count();
        let term = a_mul(&a_mono(1, a_count), &a_pow(&delta, loops - 1));
        a_add(&mut total, &term);
    }
    total
}

/// `z^(r-1) V(t)` at `t = A^-4`, `z = A^-2 - A^2`, from the bracket.
pub fn jones_times_z(b: &BraidWord) -> APoly {
    let w = b.writhe() as i32;
    let sign = if w.rem_euclid(2) == 0 { 1 } else { -1 };
    let framing = a_mono(sign, -3 * w);
    let z = APoly::from([(-2, 1), (2, -1)]);
    let r = b.components();
    a_mul(&a_mul(&framing, &kauffman_bracket(b)), &a_pow(&z, r - 1))
}

/// `z^(r-1) P(v = A^-4, z = A^-2 - A^2)` for a HOMFLY polynomial whose
/// z-exponents are at least `-(r - 1)`.
pub fn homfly_at_jones(p: &LaurentPoly2, r: usize) -> APoly {
    let z = APoly::from([(-2, 1), (2, -1)]);
    let mut out = APoly::new();
    for (a, b, c) in p.terms() {
        let zexp = b + r as i32 - 1;
        assert!(zexp >= 0, "z-exponent {b} below -(r-1)");
        let term = a_mul(&a_mono(c.to_i128().unwrap(), -4 * a), &a_pow(&z, zexp as usize));
        a_add(&mut out, &term);
    }
    out
}
