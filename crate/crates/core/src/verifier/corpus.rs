use super::scan::member_seed;
use super::{
    check_bounds, check_equalities, check_trace_identities, ClaimResult, ClaimStatus,
    EqualityConfig, ABS_TOL, EQUALITY_BAND, REL_TOL, TRACE_TOL,
};
use crate::entropy::{check_alpha, LogBase};
use crate::error::{Error, Result};
use crate::graph::{
    enumerate_labeled_graphs, enumerate_labeled_trees, random_gnp, Graph, GraphInput,
    OrientedGraph, MAX_ENUM_ORDER, MAX_TREE_ORDER,
};
use crate::report::{format_real, ser_real, ser_reals, to_csv};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

/// Members checked per parallel batch; one log line is written per batch.
const CHUNK: usize = 4096;

/// A graph, optionally carrying its own orientation.
#[derive(Debug, Clone, PartialEq)]
pub enum Member {
    Plain(Graph),
    Oriented(OrientedGraph),
}

impl GraphInput for Member {
    fn graph(&self) -> &Graph {
        match self {
            Member::Plain(g) => g,
            Member::Oriented(o) => o.underlying(),
        }
    }
    fn orientation(&self) -> Option<&OrientedGraph> {
        match self {
            Member::Plain(_) => None,
            Member::Oriented(o) => Some(o),
        }
    }
}

impl fmt::Display for Member {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Member::Plain(g) => g.fmt(f),
            Member::Oriented(o) => o.fmt(f),
        }
    }
}

/// A set of graphs to verify, in a fixed enumeration order.
#[derive(Debug, Clone, PartialEq)]
pub enum Corpus {
    /// Every labeled graph of order `1..=max_order` (`all:<n>`).
    All { max_order: usize },
    /// Every labeled tree of order `n` (`trees:<n>`).
    Trees { n: usize },
    /// `count` G(n, p) graphs with seeds `seed, seed + 1, ...`. With a
    /// range of orders, member `k` has order `min + k mod (max - min + 1)`
    /// (`gnp:<n>,<p>,<count>` or `gnp:<min>-<max>,<p>,<count>`).
    Gnp {
        min_n: usize,
        max_n: usize,
        p: f64,
        count: usize,
    },
    /// Graphs given directly.
    Explicit { label: String, members: Vec<Member> },
}

impl Corpus {
    pub fn len(&self) -> u64 {
        match self {
            Corpus::All { max_order } => (1..=*max_order).map(|n| 1u64 << (n * (n - 1) / 2)).sum(),
            Corpus::Trees { n } => {
                if *n <= 2 {
                    1
                } else {
                    (*n as u64).pow(*n as u32 - 2)
                }
            }
            Corpus::Gnp { count, .. } => *count as u64,
            Corpus::Explicit { members, .. } => members.len() as u64,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn validate(&self) -> Result<()> {
        let bad = |what, value: String, range| Err(Error::OutOfRange { what, value, range });
        match *self {
            Corpus::All { max_order } if max_order == 0 || max_order > MAX_ENUM_ORDER => {
                bad("corpus order", max_order.to_string(), "1..=7")
            }
            Corpus::Trees { n } if !(2..=MAX_TREE_ORDER).contains(&n) => {
                bad("tree order", n.to_string(), "2..=9")
            }
            Corpus::Gnp {
                min_n, max_n, p, ..
            } => {
                if min_n == 0 || min_n > max_n || max_n >= 63 {
                    bad(
                        "gnp order",
                        format!("{min_n}-{max_n}"),
                        "1..=62, min <= max",
                    )
                } else if !(0.0..=1.0).contains(&p) {
                    bad("edge probability", p.to_string(), "[0, 1]")
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    /// Members in enumeration order. `seed` drives the random corpora.
    pub fn members(&self, seed: u64) -> Result<Box<dyn Iterator<Item = Member> + '_>> {
        self.validate()?;
        Ok(match self {
            Corpus::All { max_order } => {
                let mut parts = Vec::new();
                for n in 1..=*max_order {
                    parts.push(enumerate_labeled_graphs(n)?);
                }
                Box::new(parts.into_iter().flatten().map(Member::Plain))
            }
            Corpus::Trees { n } => Box::new(enumerate_labeled_trees(*n)?.map(Member::Plain)),
            &Corpus::Gnp {
                min_n,
                max_n,
                p,
                count,
            } => Box::new((0..count).map(move |k| {
                let n = min_n + k % (max_n - min_n + 1);
                let g = random_gnp(n, p, member_seed(seed, k as u64))
                    .expect("order and probability validated");
                Member::Plain(g)
            })),
            Corpus::Explicit { members, .. } => Box::new(members.iter().cloned()),
        })
    }
}

impl FromStr for Corpus {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || {
            Error::InvalidParameter(format!(
                "bad corpus {s:?}: expected all:<n>, trees:<n> or gnp:<n>,<p>,<count>"
            ))
        };
        let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
        let int = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        let corpus = match kind {
            "all" => Corpus::All {
                max_order: int(rest)?,
            },
            "trees" => Corpus::Trees { n: int(rest)? },
            "gnp" => {
                let parts: Vec<&str> = rest.split(',').collect();
                let [orders, p, count] = parts[..] else {
                    return Err(bad());
                };
                let (min_n, max_n) = match orders.split_once('-') {
                    Some((a, b)) => (int(a)?, int(b)?),
                    None => (int(orders)?, int(orders)?),
                };
                let p = p.trim().parse::<f64>().map_err(|_| bad())?;
                Corpus::Gnp {
                    min_n,
                    max_n,
                    p,
                    count: int(count)?,
                }
            }
            _ => return Err(bad()),
        };
        corpus.validate()?;
        Ok(corpus)
    }
}

impl fmt::Display for Corpus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Corpus::All { max_order } => write!(f, "all:{max_order}"),
            Corpus::Trees { n } => write!(f, "trees:{n}"),
            Corpus::Gnp {
                min_n,
                max_n,
                p,
                count,
            } if min_n == max_n => write!(f, "gnp:{min_n},{p},{count}"),
            Corpus::Gnp {
                min_n,
                max_n,
                p,
                count,
            } => write!(f, "gnp:{min_n}-{max_n},{p},{count}"),
            Corpus::Explicit { label, .. } => f.write_str(label),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationConfig {
    pub alphas: Vec<f64>,
    pub betas: Vec<f64>,
    /// Base seed. Member `k` uses `seed + k` for its random orientation
    /// and, in G(n, p) corpora, for the graph itself.
    pub seed: u64,
    pub log_base: LogBase,
    pub equalities: bool,
    pub traces: bool,
    pub bounds: bool,
    /// List every claim, not only failures.
    pub include_passing: bool,
}

impl Default for VerificationConfig {
    fn default() -> Self {
        let eq = EqualityConfig::default();
        VerificationConfig {
            alphas: eq.alphas,
            betas: eq.betas,
            seed: 0,
            log_base: eq.log_base,
            equalities: true,
            traces: true,
            bounds: true,
            include_passing: false,
        }
    }
}

impl VerificationConfig {
    fn suites(&self) -> Vec<&'static str> {
        let mut v = Vec::new();
        if self.equalities {
            v.push("equalities");
        }
        if self.traces {
            v.push("traces");
        }
        if self.bounds {
            v.push("bounds");
        }
        v
    }
}

/// Every claim of the selected suites on one member.
pub fn check_member<G: GraphInput>(
    input: &G,
    cfg: &VerificationConfig,
    seed: u64,
) -> Vec<ClaimResult> {
    let eq = EqualityConfig {
        alphas: cfg.alphas.clone(),
        betas: cfg.betas.clone(),
        orientation_seed: seed,
        log_base: cfg.log_base,
    };
    let mut out = Vec::new();
    if cfg.equalities {
        out.extend(check_equalities(input, &eq));
    }
    if cfg.traces {
        out.extend(check_trace_identities(input, &eq));
    }
    if cfg.bounds {
        out.extend(check_bounds(input, seed));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorpusInfo {
    pub spec: String,
    pub members: u64,
    #[serde(serialize_with = "ser_reals")]
    pub alphas: Vec<f64>,
    #[serde(serialize_with = "ser_reals")]
    pub betas: Vec<f64>,
    pub seed: u64,
    pub log_base: String,
    pub suites: Vec<&'static str>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ToleranceInfo {
    #[serde(serialize_with = "ser_real")]
    pub absolute: f64,
    #[serde(serialize_with = "ser_real")]
    pub relative: f64,
    #[serde(serialize_with = "ser_real")]
    pub equality_band: f64,
    #[serde(serialize_with = "ser_real")]
    pub trace_relative: f64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub pass: u64,
    pub fail: u64,
    pub not_applicable: u64,
    pub equality_attained: u64,
}

impl Tally {
    fn add(&mut self, s: ClaimStatus) {
        match s {
            ClaimStatus::Pass => self.pass += 1,
            ClaimStatus::Fail => self.fail += 1,
            ClaimStatus::NotApplicable => self.not_applicable += 1,
            ClaimStatus::EqualityAttained => self.equality_attained += 1,
        }
    }

    pub fn total(&self) -> u64 {
        self.pass + self.fail + self.not_applicable + self.equality_attained
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub evaluations: u64,
    #[serde(flatten)]
    pub totals: Tally,
    /// Per claim id, in id order.
    pub by_claim: BTreeMap<String, Tally>,
}

/// Outcome of a corpus run. Runtime is kept out of the serialized form so
/// that reports stay byte-identical between runs.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub corpus: CorpusInfo,
    pub tolerance: ToleranceInfo,
    pub claims: Vec<ClaimResult>,
    pub summary: Summary,
    #[serde(skip)]
    pub runtime: Duration,
}

impl VerificationReport {
    pub fn failures(&self) -> u64 {
        self.summary.totals.fail
    }

    /// Claim rows as CSV; the witness column holds `name=value` pairs
    /// separated by `;`.
    pub fn to_csv(&self) -> String {
        to_csv(
            &["id", "graph", "status", "residual", "witness"],
            self.claims.iter().map(|c| {
                let witness: Vec<String> = c
                    .witness
                    .iter()
                    .map(|(k, v)| format!("{k}={}", format_real(*v)))
                    .collect();
                vec![
                    c.id.clone(),
                    c.graph.clone(),
                    c.status.to_string(),
                    format_real(c.residual),
                    witness.join(";"),
                ]
            }),
        )
    }
}

/// Runs the selected suites over every member of `corpus` on the current
/// rayon pool. Results are merged in enumeration order, so the report does
/// not depend on the number of workers.
pub fn run_verification(corpus: &Corpus, cfg: &VerificationConfig) -> Result<VerificationReport> {
    for &a in &cfg.alphas {
        check_alpha(a)?;
    }
    let started = Instant::now();
    let mut claims = Vec::new();
    let mut totals = Tally::default();
    let mut by_claim: BTreeMap<String, Tally> = BTreeMap::new();
    let mut members = corpus.members(cfg.seed)?;
    let mut done = 0u64;
    loop {
        let chunk: Vec<Member> = members.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            break;
        }
        let results: Vec<Vec<ClaimResult>> = chunk
            .par_iter()
            .enumerate()
            .map(|(k, m)| check_member(m, cfg, member_seed(cfg.seed, done + k as u64)))
            .collect();
        for claim in results.into_iter().flatten() {
            totals.add(claim.status);
            match by_claim.get_mut(&claim.id) {
                Some(t) => t.add(claim.status),
                None => {
                    let mut t = Tally::default();
                    t.add(claim.status);
                    by_claim.insert(claim.id.clone(), t);
                }
            }
            if cfg.include_passing || claim.is_failure() {
                claims.push(claim);
            }
        }
        done += chunk.len() as u64;
        log::info!(
            "{corpus}: {done}/{} members checked, {} failures so far",
            corpus.len(),
            totals.fail
        );
    }
    let runtime = started.elapsed();
    log::info!("{corpus}: finished in {:.2?}", runtime);
    Ok(VerificationReport {
        corpus: CorpusInfo {
            spec: corpus.to_string(),
            members: done,
            alphas: cfg.alphas.clone(),
            betas: cfg.betas.clone(),
            seed: cfg.seed,
            log_base: cfg.log_base.to_string(),
            suites: cfg.suites(),
        },
        tolerance: ToleranceInfo {
            absolute: ABS_TOL,
            relative: REL_TOL,
            equality_band: EQUALITY_BAND,
            trace_relative: TRACE_TOL,
        },
        claims,
        summary: Summary {
            evaluations: totals.total(),
            totals,
            by_claim,
        },
        runtime,
    })
}
