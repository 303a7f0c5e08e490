use super::Graph;
use crate::error::{Error, Result};
use std::collections::VecDeque;

/// All-pairs shortest-path lengths of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    d: Vec<u32>,
}

impl DistanceTable {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.d[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.d[i * self.n..(i + 1) * self.n]
    }

    /// Distances `d(i, j)` for `i < j`, in row order.
    pub fn upper_pairs(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.n).flat_map(move |i| (i + 1..self.n).map(move |j| self.get(i, j)))
    }

    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }
}

/// Breadth-first search from every vertex.
pub fn distances(g: &Graph) -> Result<DistanceTable> {
    let n = g.order();
    let adj = g.adjacency_lists();
    let mut d = vec![u32::MAX; n * n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        row[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if row[w] == u32::MAX {
                    row[w] = row[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if row.contains(&u32::MAX) {
            return Err(Error::DisconnectedGraph);
        }
    }
    Ok(DistanceTable { n, d })
}
