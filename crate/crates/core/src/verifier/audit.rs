//! Empirical audit of the implicit inequalities between `I1`, `I2_α` and
//! `I3_α`. Nothing here fails a run: each claim is classified per vector
//! and per `α`, and the margins are recorded.

use crate::entropy::{
    check_alpha, entropy_i1, entropy_i2, entropy_i3, probabilities_from_spectrum, LogBase,
    ProbabilityVector,
};
use crate::error::{Error, Result};
use crate::graph::{enumerate_labeled_graphs, OrientedGraph, MAX_ENUM_ORDER};
use crate::report::{format_real, ser_real, to_csv};
use crate::zoo::{spectrum, MatrixKind};
use serde::Serialize;
use std::f64::consts::LN_2;
use std::fmt;

/// Relative width of the band in which a strict claim counts as tight.
pub const AUDIT_EQUALITY_TOL: f64 = 1e-12;
/// Violation examples kept per claim and `α` in corpus audits.
pub const EXAMPLES_PER_CLAIM: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AuditStatus {
    Holds,
    HoldsWithEquality,
    Violated,
    NotApplicable,
}

impl fmt::Display for AuditStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AuditStatus::Holds => "holds",
            AuditStatus::HoldsWithEquality => "holds-with-equality",
            AuditStatus::Violated => "violated",
            AuditStatus::NotApplicable => "not-applicable",
        })
    }
}

/// One claim at one `α` on one vector. `margin` is positive when the
/// strict inequality holds and negative by the amount it is violated.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditResult {
    pub id: &'static str,
    pub vector: String,
    #[serde(serialize_with = "ser_real")]
    pub alpha: f64,
    pub status: AuditStatus,
    #[serde(serialize_with = "ser_real")]
    pub lhs: f64,
    #[serde(serialize_with = "ser_real")]
    pub rhs: f64,
    #[serde(serialize_with = "ser_real")]
    pub margin: f64,
}

/// The claims, the `α` range each is stated for, and how to form its two
/// sides from `(I1, I2, I3)`. Every claim reads `lhs > rhs`.
struct Claim {
    id: &'static str,
    applies: fn(f64) -> bool,
    sides: fn(f64, f64, f64, f64) -> (f64, f64),
}

fn c(alpha: f64) -> f64 {
    1.0 - (1.0 - alpha).exp2()
}

const CLAIMS: [Claim; 7] = [
    Claim {
        id: "thm10.i.a",
        applies: |a| a < 1.0,
        // I2 < I3 ln2, written as I3 ln2 > I2
        sides: |_, i2, i3, _| (i3 * LN_2, i2),
    },
    Claim {
        id: "thm10.i.b",
        applies: |a| a > 1.0,
        sides: |_, i2, i3, a| (i2, c(a) * LN_2 / (a - 1.0) * i3),
    },
    Claim {
        id: "thm10.ii.a",
        applies: |a| !(1.0..2.0).contains(&a),
        sides: |i1, _, i3, _| (i3, i1),
    },
    Claim {
        id: "thm10.ii.b",
        applies: |a| a > 1.0 && a < 2.0,
        sides: |i1, _, i3, a| (i1, c(a) * i3),
    },
    Claim {
        id: "thm10.iii.a",
        applies: |a| a >= 2.0,
        sides: |i1, i2, _, a| (i2, c(a) * LN_2 / (a - 1.0) * i1),
    },
    Claim {
        id: "thm10.iii.b",
        applies: |a| a > 1.0 && a < 2.0,
        sides: |i1, i2, _, a| (i2, c(a) * c(a) * LN_2 / (a - 1.0) * i1),
    },
    Claim {
        id: "thm10.iii.c",
        applies: |a| a < 1.0,
        sides: |i1, i2, _, _| (i2, i1),
    },
];

/// Claim ids in report order.
pub fn audit_claim_ids() -> impl Iterator<Item = &'static str> {
    CLAIMS.iter().map(|c| c.id)
}

fn describe(p: &ProbabilityVector) -> String {
    let parts: Vec<String> = p.probabilities().iter().map(|&x| format_real(x)).collect();
    format!("p=({})", parts.join(","))
}

/// Evaluates every claim at every `α` of the grid on `p`, with logarithms
/// in `base`. Claims outside their stated `α` range are reported as not
/// applicable.
pub fn audit_theorem10(
    p: &ProbabilityVector,
    alphas: &[f64],
    base: LogBase,
) -> Result<Vec<AuditResult>> {
    audit_with_label(p, &describe(p), alphas, base)
}

fn audit_with_label(
    p: &ProbabilityVector,
    label: &str,
    alphas: &[f64],
    base: LogBase,
) -> Result<Vec<AuditResult>> {
    let p = p.clone().with_log_base(base);
    let i1 = entropy_i1(&p);
    let mut out = Vec::with_capacity(alphas.len() * CLAIMS.len());
    for &alpha in alphas {
        check_alpha(alpha)?;
        let i2 = entropy_i2(&p, alpha)?;
        let i3 = entropy_i3(&p, alpha)?;
        for claim in &CLAIMS {
            let (lhs, rhs) = (claim.sides)(i1, i2, i3, alpha);
            let margin = lhs - rhs;
            let status = if !(claim.applies)(alpha) {
                AuditStatus::NotApplicable
            } else if margin.abs() <= AUDIT_EQUALITY_TOL * 1f64.max(lhs.abs()).max(rhs.abs()) {
                AuditStatus::HoldsWithEquality
            } else if margin > 0.0 {
                AuditStatus::Holds
            } else {
                AuditStatus::Violated
            };
            out.push(AuditResult {
                id: claim.id,
                vector: label.to_string(),
                alpha,
                status,
                lhs,
                rhs,
                margin,
            });
        }
    }
    Ok(out)
}

/// Counts for one claim at one `α`.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct AuditTally {
    pub claim: &'static str,
    #[serde(serialize_with = "ser_real")]
    pub alpha: f64,
    pub holds: u64,
    pub holds_with_equality: u64,
    pub violated: u64,
    pub not_applicable: u64,
    /// Smallest margin among applicable evaluations.
    #[serde(serialize_with = "ser_real")]
    pub worst_margin: f64,
}

/// Aggregated audit over a set of probability vectors.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditReport {
    pub source: String,
    pub log_base: String,
    pub vectors: u64,
    pub summary: Vec<AuditTally>,
    /// Every result for explicit vectors; a few violations per claim and
    /// `α` for corpus audits.
    pub results: Vec<AuditResult>,
}

impl AuditReport {
    pub fn new(source: impl Into<String>, base: LogBase, alphas: &[f64]) -> Self {
        let summary = alphas
            .iter()
            .flat_map(|&alpha| {
                CLAIMS.iter().map(move |c| AuditTally {
                    claim: c.id,
                    alpha,
                    worst_margin: f64::INFINITY,
                    ..AuditTally::default()
                })
            })
            .collect();
        AuditReport {
            source: source.into(),
            log_base: base.to_string(),
            vectors: 0,
            summary,
            results: Vec::new(),
        }
    }

    /// Adds the results of one vector. With `keep_all` every result is
    /// listed; otherwise only the first few violations per claim and `α`.
    pub fn add(&mut self, results: Vec<AuditResult>, keep_all: bool) {
        self.vectors += 1;
        for r in results {
            let tally = self
                .summary
                .iter_mut()
                .find(|t| t.claim == r.id && t.alpha == r.alpha)
                .expect("results come from the same grid");
            match r.status {
                AuditStatus::Holds => tally.holds += 1,
                AuditStatus::HoldsWithEquality => tally.holds_with_equality += 1,
                AuditStatus::Violated => tally.violated += 1,
                AuditStatus::NotApplicable => tally.not_applicable += 1,
            }
            if r.status != AuditStatus::NotApplicable {
                tally.worst_margin = tally.worst_margin.min(r.margin);
            }
            let keep = keep_all
                || (r.status == AuditStatus::Violated
                    && tally.violated <= EXAMPLES_PER_CLAIM as u64);
            if keep {
                self.results.push(r);
            }
        }
    }

    pub fn violations(&self) -> u64 {
        self.summary.iter().map(|t| t.violated).sum()
    }

    /// The result rows as CSV.
    pub fn to_csv(&self) -> String {
        to_csv(
            &["id", "vector", "alpha", "status", "lhs", "rhs", "margin"],
            self.results.iter().map(|r| {
                vec![
                    r.id.to_string(),
                    r.vector.clone(),
                    format_real(r.alpha),
                    r.status.to_string(),
                    format_real(r.lhs),
                    format_real(r.rhs),
                    format_real(r.margin),
                ]
            }),
        )
    }
}

/// Audits explicit probability vectors, listing every result.
pub fn audit_vectors(
    vectors: &[ProbabilityVector],
    alphas: &[f64],
    base: LogBase,
) -> Result<AuditReport> {
    let mut report = AuditReport::new("explicit", base, alphas);
    for p in vectors {
        report.add(audit_theorem10(p, alphas, base)?, true);
    }
    Ok(report)
}

/// Audits the spectral distributions of every matrix kind over all labeled
/// graphs of order `1..=max_order`. Skew kinds use the canonical
/// orientation; graphs where a kind has no distribution are skipped for
/// that kind.
pub fn audit_corpus(max_order: usize, alphas: &[f64], base: LogBase) -> Result<AuditReport> {
    if max_order == 0 || max_order > MAX_ENUM_ORDER {
        return Err(Error::OutOfRange {
            what: "audit corpus order",
            value: max_order.to_string(),
            range: "1..=7",
        });
    }
    for &a in alphas {
        check_alpha(a)?;
    }
    let mut report = AuditReport::new(format!("spectra:all:{max_order}"), base, alphas);
    for n in 1..=max_order {
        for g in enumerate_labeled_graphs(n)? {
            let oriented = OrientedGraph::canonical(g.clone());
            for kind in MatrixKind::ALL {
                let (s, label) = if kind.needs_orientation() {
                    (spectrum(kind, &oriented), format!("{kind} {oriented}"))
                } else {
                    (spectrum(kind, &g), format!("{kind} {g}"))
                };
                let Ok(p) = s.and_then(|s| probabilities_from_spectrum(&s)) else {
                    continue;
                };
                report.add(audit_with_label(&p, &label, alphas, base)?, false);
            }
        }
    }
    Ok(report)
}
