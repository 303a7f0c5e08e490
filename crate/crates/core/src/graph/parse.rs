use super::{Graph, OrientedGraph};
use crate::error::{Error, Result};

/// Pairs and the declared order from the shared line grammar: `u v` per
/// line, an optional `n <count>` header, blank lines and `#` comments
/// ignored.
struct PairList {
    declared: usize,
    pairs: Vec<(usize, usize)>,
}

fn parse_index(token: &str, line: usize) -> Result<usize> {
    if let Some(rest) = token.strip_prefix('-') {
        if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::NegativeIndex {
                line,
                token: token.to_string(),
            });
        }
    }
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::MalformedToken {
            line,
            token: token.to_string(),
        });
    }
    token.parse().map_err(|_| Error::MalformedToken {
        line,
        token: token.to_string(),
    })
}

fn parse_pairs(text: &str) -> Result<PairList> {
    let mut declared = 0;
    let mut pairs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            ["n", count] => declared = declared.max(parse_index(count, line)?),
            [a, b] => pairs.push((parse_index(a, line)?, parse_index(b, line)?)),
            _ => {
                return Err(Error::MalformedToken {
                    line,
                    token: content.to_string(),
                })
            }
        }
    }
    for &(u, v) in &pairs {
        if u == v {
            return Err(Error::LoopEdge(u));
        }
    }
    Ok(PairList { declared, pairs })
}

impl PairList {
    /// `max(header, 1 + largest index)`, never below one vertex.
    fn order(&self) -> usize {
        let from_pairs = self
            .pairs
            .iter()
            .map(|&(u, v)| u.max(v) + 1)
            .max()
            .unwrap_or(0);
        self.declared.max(from_pairs).max(1)
    }
}

/// Parses an undirected edge list. Duplicate edges (in either direction)
/// collapse to one. Empty input yields the single-vertex graph.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let list = parse_pairs(text)?;
    Graph::new(list.order(), list.pairs)
}

/// Parses an arc list: `u v` means `u -> v`. Giving both `u v` and `v u`
/// is an error.
pub fn parse_arc_list(text: &str) -> Result<OrientedGraph> {
    let list = parse_pairs(text)?;
    OrientedGraph::from_arcs(list.order(), list.pairs)
}
