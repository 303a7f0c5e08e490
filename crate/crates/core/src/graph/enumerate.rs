//! Exhaustive labeled enumeration: every simple graph on `n` vertices by
//! upper-triangle bit mask, and every labeled tree by Prüfer sequence.

use super::Graph;
use crate::error::{Error, Result};
use std::ops::Range;

pub const MAX_ENUM_ORDER: usize = 7;
pub const MAX_TREE_ORDER: usize = 9;

/// Number of vertex pairs, `n(n-1)/2`.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// The graph whose edge set is given by `mask`: bit `k` selects the `k`-th
/// pair in lexicographic order `(0,1), (0,2), ..., (0,n-1), (1,2), ...`.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::with_capacity(mask.count_ones() as usize);
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> k & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::new(n, edges).expect("mask pairs are valid edges")
}

/// Iterator over all labeled graphs of one order. Masks can be restricted
/// to a sub-range so that disjoint workers cover the whole space.
#[derive(Debug, Clone)]
pub struct LabeledGraphs {
    n: usize,
    masks: Range<u64>,
}

impl LabeledGraphs {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Total number of graphs of this order, `2^(n(n-1)/2)`.
    pub fn total(&self) -> u64 {
        1 << pair_count(self.n)
    }

    /// Restricts to masks in `range` (clamped to the valid space).
    pub fn range(mut self, range: Range<u64>) -> Self {
        let total = self.total();
        self.masks = range.start.min(total)..range.end.min(total);
        self
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        self.masks.next().map(|m| graph_from_mask(self.n, m))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.masks.size_hint()
    }
}

impl ExactSizeIterator for LabeledGraphs {}

pub fn enumerate_labeled_graphs(n: usize) -> Result<LabeledGraphs> {
    if !(1..=MAX_ENUM_ORDER).contains(&n) {
        return Err(Error::OutOfRange {
            what: "enumeration order",
            value: n.to_string(),
            range: "1..=7",
        });
    }
    Ok(LabeledGraphs {
        n,
        masks: 0..1 << pair_count(n),
    })
}

/// Decodes a Prüfer sequence over `0..n` (length `n - 2`) into its tree.
pub fn prufer_decode(n: usize, seq: &[usize]) -> Result<Graph> {
    if n < 2 || seq.len() != n - 2 {
        return Err(Error::InvalidParameter(format!(
            "Prüfer sequence of length {} does not describe a tree on {n} vertices",
            seq.len()
        )));
    }
    if let Some(&bad) = seq.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: bad, n });
    }
    let mut remaining = vec![1usize; n];
    for &v in seq {
        remaining[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n)
            .find(|&u| remaining[u] == 1)
            .expect("a leaf exists while the sequence is non-empty");
        edges.push((leaf, v));
        remaining[leaf] = 0;
        remaining[v] -= 1;
    }
    let last: Vec<usize> = (0..n).filter(|&u| remaining[u] == 1).collect();
    edges.push((last[0], last[1]));
    Graph::new(n, edges)
}

/// Iterator over all `n^(n-2)` labeled trees, in lexicographic order of
/// their Prüfer sequences.
#[derive(Debug, Clone)]
pub struct LabeledTrees {
    n: usize,
    seq: Vec<usize>,
    left: usize,
}

impl LabeledTrees {
    pub fn order(&self) -> usize {
        self.n
    }
}

impl Iterator for LabeledTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.left == 0 {
            return None;
        }
        let tree = prufer_decode(self.n, &self.seq).expect("sequence in range");
        self.left -= 1;
        for digit in self.seq.iter_mut().rev() {
            *digit += 1;
            if *digit < self.n {
                break;
            }
            *digit = 0;
        }
        Some(tree)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.left, Some(self.left))
    }
}

impl ExactSizeIterator for LabeledTrees {}

pub fn enumerate_labeled_trees(n: usize) -> Result<LabeledTrees> {
    if !(2..=MAX_TREE_ORDER).contains(&n) {
        return Err(Error::OutOfRange {
            what: "tree order",
            value: n.to_string(),
            range: "2..=9",
        });
    }
    Ok(LabeledTrees {
        n,
        seq: vec![0; n - 2],
        left: n.pow(n as u32 - 2),
    })
}
