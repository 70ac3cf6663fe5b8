//! Boundary count of the abstract plumbing surface.
//!
//! The surface deformation retracts onto a ribbon graph: one vertex per
//! plumbing square (tree edge) and, for each tree vertex, its band core cut
//! into arcs by the squares on it. Squares sit along each core in planar
//! order (parent square first) and all on the same side, so at a square
//! joining parent `u` to child `c` the cyclic order of arc ends is
//! `u_out, c_out, u_in, c_in`. Twisting does not change the abstract
//! surface, so weights play no role. Boundary circles are the faces, i.e.
//! the cycles of `σ ∘ α` on arc ends.

use super::PlumbingTree;

pub(crate) fn boundary_components(tree: &PlumbingTree) -> usize {
    let m = tree.len();
    if m == 1 {
        // a single annulus
        return 2;
    }
    // point of the edge ending at child c is c - 1
    let point = |c: usize| c - 1;
    // rotation[pt] = [u_out, c_out, u_in, c_in] as dart ids
    let mut rotation = vec![[usize::MAX; 4]; m - 1];
    let mut arcs = 0;
    for x in 0..m {
        let mut pts: Vec<(usize, bool)> = Vec::new();
        if tree.parent(x).is_some() {
            pts.push((point(x), false));
        }
        pts.extend(tree.children(x).iter().map(|&c| (point(c), true)));
        let d = pts.len();
        for j in 0..d {
            let (from, from_is_parent_side) = pts[j];
            let (to, to_is_parent_side) = pts[(j + 1) % d];
            let tail = 2 * arcs;
            let head = 2 * arcs + 1;
            arcs += 1;
            rotation[from][if from_is_parent_side { 0 } else { 1 }] = tail;
            rotation[to][if to_is_parent_side { 2 } else { 3 }] = head;
        }
    }
    let darts = 2 * arcs;
    let mut sigma = vec![0; darts];
    for slots in &rotation {
        for k in 0..4 {
            sigma[slots[k]] = slots[(k + 1) % 4];
        }
    }
    let mut seen = vec![false; darts];
    let mut faces = 0;
    for start in 0..darts {
        if seen[start] {
            continue;
        }
        faces += 1;
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            d = sigma[d ^ 1];
        }
    }
    faces
}
