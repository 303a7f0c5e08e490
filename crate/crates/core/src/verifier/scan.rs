//! Exhaustive extremal scans of `I1` over trees or all labeled graphs.

use super::TIE_TOL;
use crate::entropy::{entropy_i1, probabilities_from_spectrum};
use crate::error::{Error, Result};
use crate::graph::{
    enumerate_labeled_graphs, enumerate_labeled_trees, random_orientation, Graph, OrientedGraph,
    MAX_ENUM_ORDER, MAX_TREE_ORDER,
};
use crate::report::{format_real, ser_real, to_csv};
use crate::zoo::{spectrum, MatrixKind};
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// Members evaluated per parallel batch.
const CHUNK: usize = 1 << 15;
/// Witnesses written out per extremum; the full lists stay in memory.
const LISTED_WITNESSES: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanFamily {
    /// Labeled trees, via Prüfer sequences.
    Trees,
    /// Labeled trees, each with a seeded random orientation.
    OrientedTrees,
    /// All labeled graphs.
    AllGraphs,
}

impl FromStr for ScanFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trees" => Ok(ScanFamily::Trees),
            "oriented-trees" => Ok(ScanFamily::OrientedTrees),
            "all-graphs" => Ok(ScanFamily::AllGraphs),
            other => Err(Error::InvalidParameter(format!(
                "unknown scan family {other:?} (expected trees, oriented-trees or all-graphs)"
            ))),
        }
    }
}

impl fmt::Display for ScanFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScanFamily::Trees => "trees",
            ScanFamily::OrientedTrees => "oriented-trees",
            ScanFamily::AllGraphs => "all-graphs",
        })
    }
}

impl Serialize for ScanFamily {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Members whose values agree within the tie tolerance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankGroup {
    #[serde(serialize_with = "ser_real")]
    pub value: f64,
    pub count: u64,
    /// First member of the group in enumeration order.
    pub example: String,
}

/// One extremum with every member attaining it.
#[derive(Debug, Clone, PartialEq)]
pub struct Extremum {
    pub value: f64,
    pub witnesses: Vec<Graph>,
    /// Orientation used per witness, for oriented families.
    pub oriented: Vec<OrientedGraph>,
}

impl Serialize for Extremum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let listed: Vec<String> = if self.oriented.is_empty() {
            self.witnesses
                .iter()
                .take(LISTED_WITNESSES)
                .map(|g| g.to_string())
                .collect()
        } else {
            self.oriented
                .iter()
                .take(LISTED_WITNESSES)
                .map(|o| o.to_string())
                .collect()
        };
        let mut st = s.serialize_struct("Extremum", 3)?;
        st.serialize_field("value", &crate::report::round15(self.value))?;
        st.serialize_field("count", &self.witnesses.len())?;
        st.serialize_field("witnesses", &listed)?;
        st.end()
    }
}

/// Result of an extremal scan. `ranking` lists the tie groups in
/// ascending order of value.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremalReport {
    pub family: ScanFamily,
    pub order: usize,
    pub measure: String,
    pub members: u64,
    /// Members on which the measure is undefined.
    pub skipped: u64,
    pub min: Extremum,
    pub max: Extremum,
    pub ranking: Vec<RankGroup>,
    #[serde(skip)]
    pub values: Vec<f64>,
}

impl ExtremalReport {
    /// The ranking as CSV rows.
    pub fn to_csv(&self) -> String {
        to_csv(
            &["rank", "value", "count", "example"],
            self.ranking.iter().enumerate().map(|(k, g)| {
                vec![
                    (k + 1).to_string(),
                    format_real(g.value),
                    g.count.to_string(),
                    g.example.clone(),
                ]
            }),
        )
    }
}

/// Seed of the random orientation of member `index`.
pub fn member_seed(seed: u64, index: u64) -> u64 {
    seed.wrapping_add(index)
}

fn family_members(family: ScanFamily, n: usize) -> Result<Box<dyn Iterator<Item = Graph>>> {
    Ok(match family {
        ScanFamily::Trees | ScanFamily::OrientedTrees => {
            if n == 1 {
                Box::new(std::iter::once(Graph::empty(1)?))
            } else {
                Box::new(enumerate_labeled_trees(n)?)
            }
        }
        ScanFamily::AllGraphs => Box::new(enumerate_labeled_graphs(n)?),
    })
}

fn check_order(family: ScanFamily, n: usize) -> Result<()> {
    let (max, range) = match family {
        ScanFamily::AllGraphs => (MAX_ENUM_ORDER, "1..=7"),
        _ => (MAX_TREE_ORDER, "1..=9"),
    };
    if n == 0 || n > max {
        return Err(Error::OutOfRange {
            what: "scan order",
            value: n.to_string(),
            range,
        });
    }
    Ok(())
}

/// The input a member is evaluated on: its seeded orientation for oriented
/// families, the canonical one for skew kinds otherwise.
fn member_input(
    family: ScanFamily,
    kind: MatrixKind,
    g: &Graph,
    seed: u64,
    index: u64,
) -> Option<OrientedGraph> {
    match family {
        ScanFamily::OrientedTrees => Some(random_orientation(g, member_seed(seed, index))),
        _ if kind.needs_orientation() => Some(OrientedGraph::canonical(g.clone())),
        _ => None,
    }
}

fn i1_of(kind: MatrixKind, g: &Graph, o: Option<&OrientedGraph>) -> Result<f64> {
    let s = match o {
        Some(o) => spectrum(kind, o)?,
        None => spectrum(kind, g)?,
    };
    Ok(entropy_i1(&probabilities_from_spectrum(&s)?))
}

/// Evaluates `I1` of `kind` on every member of the family, in parallel on
/// the current rayon pool, and reports the extremes with all their
/// witnesses and the full tie-grouped ranking. Members where the measure
/// is undefined are counted as skipped.
pub fn scan_extremal(
    family: ScanFamily,
    n: usize,
    kind: MatrixKind,
    seed: u64,
) -> Result<ExtremalReport> {
    check_order(family, n)?;
    let mut values: Vec<f64> = Vec::new();
    let mut members = family_members(family, n)?;
    loop {
        let start = values.len() as u64;
        let chunk: Vec<Graph> = members.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            break;
        }
        let batch: Vec<Result<f64>> = chunk
            .par_iter()
            .enumerate()
            .map(|(k, g)| {
                let o = member_input(family, kind, g, seed, start + k as u64);
                i1_of(kind, g, o.as_ref())
            })
            .collect();
        for r in batch {
            match r {
                Ok(v) => values.push(v),
                Err(Error::NoConvergence(s)) => return Err(Error::NoConvergence(s)),
                Err(Error::NegativeEigenvalue(v)) => return Err(Error::NegativeEigenvalue(v)),
                Err(_) => values.push(f64::NAN),
            }
        }
        log::debug!("scan {family} n={n}: {} members evaluated", values.len());
    }

    let mut order: Vec<(f64, usize)> = values
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_nan())
        .map(|(k, &v)| (v, k))
        .collect();
    let skipped = (values.len() - order.len()) as u64;
    if order.is_empty() {
        return Err(Error::InvalidParameter(format!(
            "I1 of {kind} is undefined on every member of {family} at n = {n}"
        )));
    }
    order.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));

    let mut groups: Vec<(f64, u64, usize)> = Vec::new();
    for &(v, k) in &order {
        match groups.last_mut() {
            Some(g) if v - g.0 <= TIE_TOL => {
                g.1 += 1;
                g.2 = g.2.min(k);
            }
            _ => groups.push((v, 1, k)),
        }
    }
    let lo = order[0].0;
    let hi = order[order.len() - 1].0;

    // Second pass: collect witnesses and group examples by index.
    let mut examples: Vec<(usize, usize)> =
        groups.iter().enumerate().map(|(gi, g)| (g.2, gi)).collect();
    examples.sort_unstable();
    let mut example_text = vec![String::new(); groups.len()];
    let mut min = Extremum {
        value: lo,
        witnesses: Vec::new(),
        oriented: Vec::new(),
    };
    let mut max = Extremum {
        value: hi,
        witnesses: Vec::new(),
        oriented: Vec::new(),
    };
    let mut next_example = 0;
    for (k, g) in family_members(family, n)?.enumerate() {
        let v = values[k];
        let is_min = v - lo <= TIE_TOL;
        let is_max = hi - v <= TIE_TOL;
        let wants_example = next_example < examples.len() && examples[next_example].0 == k;
        if !(is_min || is_max || wants_example) {
            continue;
        }
        let o = match family {
            ScanFamily::OrientedTrees => member_input(family, kind, &g, seed, k as u64),
            _ => None,
        };
        if wants_example {
            example_text[examples[next_example].1] = match &o {
                Some(o) => o.to_string(),
                None => g.to_string(),
            };
            next_example += 1;
        }
        for (hit, ext) in [(is_min, &mut min), (is_max, &mut max)] {
            if hit {
                if let Some(o) = &o {
                    ext.oriented.push(o.clone());
                }
                ext.witnesses.push(g.clone());
            }
        }
    }
    let ranking = groups
        .iter()
        .zip(example_text)
        .map(|(&(value, count, _), example)| RankGroup {
            value,
            count,
            example,
        })
        .collect();

    Ok(ExtremalReport {
        family,
        order: n,
        measure: format!("I1:{kind}"),
        members: values.len() as u64,
        skipped,
        min,
        max,
        ranking,
        values,
    })
}

/// Largest spread `max - min` of `I1` of a skew kind across `count` seeded
/// random orientations of each labeled tree of order `n`.
pub fn orientation_spread(n: usize, kind: MatrixKind, count: usize, seed: u64) -> Result<f64> {
    check_order(ScanFamily::Trees, n)?;
    if !kind.needs_orientation() {
        return Err(Error::InvalidParameter(format!(
            "{kind} does not depend on orientation"
        )));
    }
    let trees: Vec<Graph> = family_members(ScanFamily::Trees, n)?.collect();
    let spreads: Vec<Result<f64>> = trees
        .par_iter()
        .enumerate()
        .map(|(k, g)| {
            let mut lo = f64::INFINITY;
            let mut hi = f64::NEG_INFINITY;
            for j in 0..count {
                let s = member_seed(seed, (k * count + j) as u64);
                let v = i1_of(kind, g, Some(&random_orientation(g, s)))?;
                lo = lo.min(v);
                hi = hi.max(v);
            }
            Ok(hi - lo)
        })
        .collect();
    spreads
        .into_iter()
        .try_fold(0.0f64, |acc, s| Ok(acc.max(s?)))
}
