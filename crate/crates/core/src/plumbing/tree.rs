use std::fmt;
use std::str::FromStr;

use crate::algebra::text::Cursor;
use crate::error::{Error, Result};

/// A planar tree with even weights `2n(e)`.
///
/// Vertices are numbered in preorder of the text form, so the root is `0`
/// and each child list is in planar order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlumbingTree {
    weights: Vec<i64>,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
}

impl PlumbingTree {
    /// Builds a tree from weights and parents. `parent[0]` must be `None`
    /// and every other parent must precede its child.
    pub fn from_parents(weights: Vec<i64>, parent: Vec<Option<usize>>) -> Result<Self> {
        if weights.is_empty() || weights.len() != parent.len() {
            return Err(Error::InvalidArgument(
                "a tree needs one parent slot per vertex and at least one vertex".into(),
            ));
        }
        let mut children = vec![Vec::new(); weights.len()];
        for (v, p) in parent.iter().enumerate() {
            match (v, p) {
                (0, None) => {}
                (v, Some(p)) if v > 0 && *p < v => children[*p].push(v),
                _ => {
                    return Err(Error::InvalidArgument(format!(
                        "vertex {v} has an invalid parent {p:?}"
                    )))
                }
            }
        }
        for (v, &w) in weights.iter().enumerate() {
            if w % 2 != 0 {
                return Err(Error::OddWeight { vertex: v, weight: w });
            }
        }
        let tree = Self {
            weights,
            parent,
            children,
        };
        // renumber so ids follow preorder
        Ok(tree.preordered())
    }

    /// The linear tree `(w0 (w1 (w2 ...)))`.
    pub fn chain(weights: &[i64]) -> Result<Self> {
        let parent = (0..weights.len()).map(|i| i.checked_sub(1)).collect();
        Self::from_parents(weights.to_vec(), parent)
    }

    fn preordered(self) -> Self {
        let mut order = Vec::with_capacity(self.weights.len());
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            order.push(v);
            stack.extend(self.children[v].iter().rev());
        }
        let mut new_id = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            new_id[v] = i;
        }
        let weights = order.iter().map(|&v| self.weights[v]).collect();
        let parent = order.iter().map(|&v| self.parent[v].map(|p| new_id[p])).collect();
        let children = order
            .iter()
            .map(|&v| self.children[v].iter().map(|&c| new_id[c]).collect())
            .collect();
        Self {
            weights,
            parent,
            children,
        }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    /// Always false: a tree has at least one vertex.
    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn weight(&self, v: usize) -> i64 {
        self.weights[v]
    }

    /// Half the weight: the number of full twists `n(e)`.
    pub fn twists(&self, v: usize) -> i64 {
        self.weights[v] / 2
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    /// Edges as `(parent, child)`, ordered by child.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.len()).map(|c| (self.parent[c].expect("non-root vertex has a parent"), c))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.parent[v].into_iter().chain(self.children[v].iter().copied())
    }

    pub fn valence(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }
}

impl fmt::Display for PlumbingTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // iterative so deep chains cannot overflow the stack
        enum Step {
            Open(usize),
            Close,
        }
        let mut stack = vec![Step::Open(0)];
        let mut first = true;
        while let Some(step) = stack.pop() {
            match step {
                Step::Open(v) => {
                    if !first {
                        f.write_str(" ")?;
                    }
                    first = false;
                    write!(f, "({}", self.weights[v])?;
                    stack.push(Step::Close);
                    stack.extend(self.children[v].iter().rev().map(|&c| Step::Open(c)));
                }
                Step::Close => f.write_str(")")?,
            }
        }
        Ok(())
    }
}

impl FromStr for PlumbingTree {
    type Err = Error;

    /// Grammar: `tree := '(' weight tree* ')'` with even integer weights.
    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let mut weights = Vec::new();
        let mut parent = Vec::new();
        let mut open: Vec<usize> = Vec::new();
        cur.expect('(')?;
        loop {
            // just consumed '(' for a new vertex
            let pos = cur.position();
            if !cur.starts_int() {
                return Err(Error::Parse {
                    message: "expected an integer weight".into(),
                    position: pos,
                });
            }
            let w = cur.int()?;
            let v = weights.len();
            if w % 2 != 0 {
                return Err(Error::OddWeight { vertex: v, weight: w });
            }
            weights.push(w);
            parent.push(open.last().copied());
            open.push(v);
            loop {
                if cur.eat('(') {
                    break;
                }
                cur.expect(')')?;
                open.pop();
                if open.is_empty() {
                    cur.expect_end()?;
                    return Self::from_parents(weights, parent);
                }
            }
        }
    }
}
