//! Simple undirected graphs, orientations of them, and the ways to obtain
//! them: text and graph6 parsers, deterministic families, seeded random
//! graphs and exhaustive enumerators.
//!
//! Vertices are `0..n`. Edges are stored as `(u, v)` with `u < v`, sorted
//! lexicographically; that order is also the column order of incidence
//! matrices.

mod distance;
mod enumerate;
mod generate;
mod graph6;
mod parse;

pub use distance::{distances, DistanceTable};
pub use enumerate::{
    enumerate_labeled_graphs, enumerate_labeled_trees, graph_from_mask, pair_count, prufer_decode,
    LabeledGraphs, LabeledTrees, MAX_ENUM_ORDER, MAX_TREE_ORDER,
};
pub use generate::{make_family, random_gnp, random_orientation, Family};
pub use graph6::{encode_graph6, parse_graph6};
pub use parse::{parse_arc_list, parse_edge_list};

use crate::error::{Error, Result};
use std::collections::VecDeque;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    degrees: Vec<usize>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Pairs may come in either order and
    /// may repeat; loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange {
                what: "vertex count",
                value: "0".into(),
                range: ">= 1",
            });
        }
        let mut list = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::LoopEdge(a));
            }
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        list.dedup();
        let mut degrees = vec![0; n];
        for &(u, v) in &list {
            degrees[u] += 1;
            degrees[v] += 1;
        }
        Ok(Graph {
            n,
            edges: list,
            degrees,
        })
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Graph::new(n, std::iter::empty())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.degrees.iter().copied().min().unwrap_or(0)
    }

    /// Number of non-isolated vertices.
    pub fn non_isolated(&self) -> usize {
        self.degrees.iter().filter(|&&d| d > 0).count()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    pub fn is_regular(&self) -> bool {
        self.degrees.windows(2).all(|w| w[0] == w[1])
    }

    pub fn is_complete(&self) -> bool {
        self.size() == self.n * (self.n - 1) / 2
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }
}

/// graph6 for orders below 63; larger graphs print as `n=<n>:u-v,...`.
impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n < 63 {
            return f.write_str(&encode_graph6(self));
        }
        write!(f, "n={}:", self.n)?;
        for (k, (u, v)) in self.edges.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{u}-{v}")?;
        }
        Ok(())
    }
}

/// A graph together with one direction for each of its edges.
///
/// `arcs()[k]` is the orientation of `underlying().edges()[k]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrientedGraph {
    underlying: Graph,
    arcs: Vec<(usize, usize)>,
}

impl OrientedGraph {
    /// Orients `g` by `forward[k]`: true keeps `edges()[k]` as `u -> v`
    /// (`u < v`), false reverses it.
    pub fn from_directions(g: Graph, forward: &[bool]) -> Result<Self> {
        if forward.len() != g.size() {
            return Err(Error::InvalidParameter(format!(
                "{} directions given for {} edges",
                forward.len(),
                g.size()
            )));
        }
        let arcs = g
            .edges()
            .iter()
            .zip(forward)
            .map(|(&(u, v), &fwd)| if fwd { (u, v) } else { (v, u) })
            .collect();
        Ok(OrientedGraph {
            underlying: g,
            arcs,
        })
    }

    /// Every edge directed from its smaller to its larger endpoint.
    pub fn canonical(g: Graph) -> Self {
        let arcs = g.edges().to_vec();
        OrientedGraph {
            underlying: g,
            arcs,
        }
    }

    /// Builds an orientation from arcs `tail -> head`. Repeated arcs are
    /// merged; an arc given in both directions is an error.
    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let arcs: Vec<(usize, usize)> = arcs.into_iter().collect();
        let g = Graph::new(n, arcs.iter().copied())?;
        let mut forward: Vec<Option<bool>> = vec![None; g.size()];
        for &(t, h) in &arcs {
            let k = g
                .edges()
                .binary_search(&(t.min(h), t.max(h)))
                .expect("edge present by construction");
            let fwd = t < h;
            match forward[k] {
                Some(prev) if prev != fwd => return Err(Error::ContradictoryArcs(t, h)),
                _ => forward[k] = Some(fwd),
            }
        }
        let forward: Vec<bool> = forward.into_iter().map(|f| f.unwrap_or(true)).collect();
        OrientedGraph::from_directions(g, &forward)
    }

    pub fn underlying(&self) -> &Graph {
        &self.underlying
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// True where the arc runs from the smaller endpoint to the larger.
    pub fn directions(&self) -> Vec<bool> {
        self.arcs.iter().map(|&(t, h)| t < h).collect()
    }
}

impl fmt::Display for OrientedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ", self.underlying)?;
        if self.arcs.is_empty() {
            return f.write_str("-");
        }
        for (k, (t, h)) in self.arcs.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}>{h}")?;
        }
        Ok(())
    }
}

/// Either a plain graph or an oriented one; matrix constructors accept both.
pub trait GraphInput {
    fn graph(&self) -> &Graph;
    fn orientation(&self) -> Option<&OrientedGraph>;
}

impl GraphInput for Graph {
    fn graph(&self) -> &Graph {
        self
    }
    fn orientation(&self) -> Option<&OrientedGraph> {
        None
    }
}

impl GraphInput for OrientedGraph {
    fn graph(&self) -> &Graph {
        &self.underlying
    }
    fn orientation(&self) -> Option<&OrientedGraph> {
        Some(self)
    }
}

impl<T: GraphInput + ?Sized> GraphInput for &T {
    fn graph(&self) -> &Graph {
        (**self).graph()
    }
    fn orientation(&self) -> Option<&OrientedGraph> {
        (**self).orientation()
    }
}
