use super::{Graph, OrientedGraph};
use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Complete,
    Path,
    /// Vertex 0 is the centre.
    Star,
    Cycle,
    /// Edges `(0,1), (2,3), ...`; needs even order.
    Matching,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "complete" => Ok(Family::Complete),
            "path" => Ok(Family::Path),
            "star" => Ok(Family::Star),
            "cycle" => Ok(Family::Cycle),
            "matching" => Ok(Family::Matching),
            _ => Err(Error::InvalidParameter(format!("unknown family {s:?}"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Complete => "complete",
            Family::Path => "path",
            Family::Star => "star",
            Family::Cycle => "cycle",
            Family::Matching => "matching",
        })
    }
}

pub fn make_family(kind: Family, n: usize) -> Result<Graph> {
    let bad = |range: &'static str| Error::OutOfRange {
        what: "family order",
        value: n.to_string(),
        range,
    };
    let edges: Vec<(usize, usize)> = match kind {
        Family::Complete => (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect(),
        Family::Path => (1..n).map(|v| (v - 1, v)).collect(),
        Family::Star => (1..n).map(|v| (0, v)).collect(),
        Family::Cycle => {
            if n < 3 {
                return Err(bad(">= 3"));
            }
            (1..n).map(|v| (v - 1, v)).chain([(0, n - 1)]).collect()
        }
        Family::Matching => {
            if n == 0 || n % 2 == 1 {
                return Err(bad("even, >= 2"));
            }
            (0..n / 2).map(|k| (2 * k, 2 * k + 1)).collect()
        }
    };
    if n == 0 {
        return Err(bad(">= 1"));
    }
    Graph::new(n, edges)
}

/// Erdős–Rényi `G(n, p)`; pairs are visited in lexicographic order, so the
/// result depends only on `(n, p, seed)`.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::OutOfRange {
            what: "edge probability",
            value: p.to_string(),
            range: "[0, 1]",
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

/// Orients every edge of `g` by a fair coin flip.
pub fn random_orientation(g: &Graph, seed: u64) -> OrientedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let forward: Vec<bool> = (0..g.size()).map(|_| rng.random_bool(0.5)).collect();
    OrientedGraph::from_directions(g.clone(), &forward).expect("one direction per edge")
}
