//! Even planar weighted trees and the arborescent links they define.
//!
//! A vertex of weight `2n` stands for an unknotted annulus `A(0; n)` with
//! `n` full twists, and each edge plumbs two annuli together. With this
//! convention `A(0; -1)` bounds the positive Hopf link, so trees with only
//! negative weights sit on the quasipositive side.
//!
//! ```
//! use cbord_core::plumbing::{boundary_components, mp_ord_v, PlumbingTree};
//!
//! let trefoil: PlumbingTree = "(-2 (-2))".parse().unwrap();
//! assert_eq!(mp_ord_v(&trefoil).unwrap(), 2);
//! assert_eq!(boundary_components(&trefoil), 1);
//! ```

mod surface;
mod tree;

use std::fmt;

use num_rational::Rational64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::obstruction::{Certificate, Draft, Quantity, Rule};
use crate::seifert::{SeifertMatrix, SeifertSource};

pub use tree::PlumbingTree;

/// A connected piece of the tree after deleting mixed-sign edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subtree {
    pub tree: PlumbingTree,
    /// Ids of the members in the original tree, in the subtree's preorder.
    pub vertices: Vec<usize>,
    pub positive: bool,
}

/// The canonical uniform decomposition. Positive subtrees come first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniformDecomposition {
    pub subtrees: Vec<Subtree>,
    /// Number of positive subtrees.
    pub s: usize,
    /// Number of negative-weight vertices.
    pub p: usize,
    /// Number of positive-weight vertices.
    pub q: usize,
}

impl UniformDecomposition {
    pub fn k(&self) -> usize {
        self.subtrees.len()
    }
}

fn reject_zero_weights(t: &PlumbingTree) -> Result<()> {
    match t.weights().iter().position(|&w| w == 0) {
        Some(vertex) => Err(Error::ZeroWeight { vertex }),
        None => Ok(()),
    }
}

fn same_side(t: &PlumbingTree, a: usize, b: usize) -> bool {
    t.weight(a).signum() == t.weight(b).signum()
}

pub fn uniform_decomposition(t: &PlumbingTree) -> Result<UniformDecomposition> {
    reject_zero_weights(t)?;
    let mut subtrees = Vec::new();
    // a vertex roots a subtree iff its parent edge is deleted
    for root in 0..t.len() {
        if t.parent(root).is_some_and(|p| same_side(t, p, root)) {
            continue;
        }
        let mut vertices = Vec::new();
        let mut parents = Vec::new();
        let mut stack = vec![(root, None)];
        while let Some((v, parent)) = stack.pop() {
            let id = vertices.len();
            vertices.push(v);
            parents.push(parent);
            for &c in t.children(v).iter().rev() {
                if same_side(t, v, c) {
                    stack.push((c, Some(id)));
                }
            }
        }
        let weights = vertices.iter().map(|&v| t.weight(v)).collect();
        subtrees.push(Subtree {
            tree: PlumbingTree::from_parents(weights, parents)?,
            vertices,
            positive: t.weight(root) > 0,
        });
    }
    // stable: keeps root order within each sign
    subtrees.sort_by_key(|s| !s.positive);
    let p = t.weights().iter().filter(|&&w| w < 0).count();
    Ok(UniformDecomposition {
        s: subtrees.iter().filter(|s| s.positive).count(),
        subtrees,
        p,
        q: t.len() - p,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExcessFailure {
    /// `n(e) = 0`.
    ZeroWeight,
    /// `|n(e)| < v(e) - 1` with the valence taken inside the subtree.
    TooFewTwists,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexDiagnostic {
    pub vertex: usize,
    pub twists: i64,
    pub valence: usize,
    pub failure: ExcessFailure,
}

impl fmt::Display for VertexDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.failure {
            ExcessFailure::ZeroWeight => write!(f, "vertex {}: weight 0", self.vertex),
            ExcessFailure::TooFewTwists => write!(
                f,
                "vertex {}: |n| = {} < v - 1 = {}",
                self.vertex,
                self.twists.abs(),
                self.valence - 1
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExcessivenessReport {
    pub strongly_excessive: bool,
    pub failures: Vec<VertexDiagnostic>,
}

/// Checks `n(e) != 0` and `|n(e)| >= v(e) - 1` on the canonical uniform
/// decomposition. Deleting the mixed-sign edges is forced once no weight is
/// zero, so checking the canonical decomposition decides the existential
/// form of the definition.
pub fn is_strongly_excessive(t: &PlumbingTree) -> ExcessivenessReport {
    let failures: Vec<VertexDiagnostic> = (0..t.len())
        .filter_map(|v| {
            let twists = t.twists(v);
            let valence = t.neighbors(v).filter(|&u| same_side(t, u, v)).count();
            let failure = if twists == 0 {
                ExcessFailure::ZeroWeight
            } else if (twists.unsigned_abs() as usize) + 1 < valence {
                ExcessFailure::TooFewTwists
            } else {
                return None;
            };
            Some(VertexDiagnostic {
                vertex: v,
                twists,
                valence,
                failure,
            })
        })
        .collect();
    ExcessivenessReport {
        strongly_excessive: failures.is_empty(),
        failures,
    }
}

fn require_strongly_excessive(t: &PlumbingTree) -> Result<()> {
    reject_zero_weights(t)?;
    let report = is_strongly_excessive(t);
    if report.strongly_excessive {
        Ok(())
    } else {
        Err(Error::NotStronglyExcessive {
            failing: report.failures.iter().map(|d| d.vertex).collect(),
        })
    }
}

/// `Σ n(e)` over positive-weight vertices.
fn positive_twists(t: &PlumbingTree) -> i64 {
    (0..t.len()).map(|v| t.twists(v)).filter(|&n| n > 0).sum()
}

/// `ord_v P_L = p + q - 2 Σ_{n_i > 0} n_i - 2s` for strongly excessive
/// trees.
pub fn mp_ord_v(t: &PlumbingTree) -> Result<i64> {
    require_strongly_excessive(t)?;
    let d = uniform_decomposition(t)?;
    Ok((d.p + d.q) as i64 - 2 * positive_twists(t) - 2 * d.s as i64)
}

/// Number of boundary circles of the plumbing surface.
pub fn boundary_components(t: &PlumbingTree) -> usize {
    surface::boundary_components(t)
}

/// `M(L) >= (r - 1 + p - q) / 2`. The value is not clamped at zero.
pub fn genus_lower_bound(t: &PlumbingTree) -> Result<Rational64> {
    let d = uniform_decomposition(t)?;
    let r = boundary_components(t) as i64;
    Ok(Rational64::new(r - 1 + d.p as i64 - d.q as i64, 2))
}

/// Seifert matrix of the plumbing surface: `n(e)` on the diagonal and a 1
/// from each parent to each child.
pub fn tree_seifert_matrix(t: &PlumbingTree) -> SeifertMatrix {
    let m = t.len();
    let mut v = vec![vec![0i64; m]; m];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = t.twists(i);
    }
    for (p, c) in t.edges() {
        v[p][c] = 1;
    }
    SeifertMatrix::new(v, SeifertSource::Tree(t.to_string()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpcDecision {
    /// True iff every weight is negative.
    pub is_spc: bool,
    pub certificate: Certificate,
}

/// Decides whether the arborescent link of a strongly excessive tree is an
/// spc-C-boundary. The answer is yes exactly when all weights are negative.
/// The certificate records the valuation argument for the negative answer.
pub fn is_spc_cboundary(t: &PlumbingTree) -> Result<SpcDecision> {
    require_strongly_excessive(t)?;
    let d = uniform_decomposition(t)?;
    let (p, q, s) = (d.p as i64, d.q as i64, d.s as i64);
    let sum = positive_twists(t);
    let ord_v = p + q - 2 * sum - 2 * s;
    let r = boundary_components(t) as i64;
    let m_lb = genus_lower_bound(t)?;
    let bound = p - q;
    let gap = 2 * q - 2 * sum - 2 * s;
    let all_negative = q == 0;
    let obstructed = ord_v < bound;
    debug_assert_eq!(obstructed, !all_negative);

    let mut c = Draft::new(Rule::Prop36);
    c.input("tree", Quantity::Text(t.to_string()))
        .assume("L is the boundary of the plumbing surface of the tree")
        .assume("links of all-negative strongly excessive trees are strongly quasipositive, hence spc-C-boundaries")
        .compute("k", Quantity::Integer(d.k() as i64))
        .compute("s", Quantity::Integer(s))
        .compute("p", Quantity::Integer(p))
        .compute("q", Quantity::Integer(q))
        .compute("sum_positive_n", Quantity::Integer(sum))
        .compute("ord_v", Quantity::Integer(ord_v))
        .compute("r", Quantity::Integer(r))
        .compute("genus_lower_bound", Quantity::Rational(m_lb))
        .compute("bound", Quantity::Integer(bound))
        .compute("gap", Quantity::Integer(gap))
        .line(format!("uniform decomposition: k = {}, s = {s}, p = {p}, q = {q}", d.k()))
        .line(format!(
            "ord_v = p + q - 2 Σ n_i - 2s = {p} + {q} - 2*{sum} - 2*{s} = {ord_v}"
        ))
        .line(format!("M(L) >= (r - 1 + p - q)/2 = ({r} - 1 + {p} - {q})/2 = {m_lb}"))
        .line(format!("an spc-C-boundary has ord_v >= 1 - r + 2M(L) >= p - q = {bound}"));
    if obstructed {
        c.line(format!(
            "ord_v = {ord_v} < {bound}, i.e. 2q - 2 Σ n_i - 2s = {gap} < 0: not an spc-C-boundary"
        ));
    } else {
        c.line(format!("ord_v = {ord_v} >= {bound}; all weights negative: strongly quasipositive"));
    }
    Ok(SpcDecision {
        is_spc: all_negative,
        certificate: c.finish(obstructed),
    })
}

pub(crate) fn prop36_from_certificate(c: &Certificate) -> Result<Certificate> {
    let tree: PlumbingTree = c.text("tree")?.parse()?;
    Ok(is_spc_cboundary(&tree)?.certificate)
}
