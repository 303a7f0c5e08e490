//! Machine checks of the entropy identities, the bounds derived from them,
//! the implicit inequalities between the three entropies, and extremal
//! behaviour over trees.
//!
//! Every check produces [`ClaimResult`] records; corpus runs aggregate
//! them into a [`VerificationReport`].

mod audit;
mod bounds;
mod corpus;
mod equalities;
mod scan;

pub use audit::{
    audit_claim_ids, audit_corpus, audit_theorem10, audit_vectors, AuditReport, AuditResult,
    AuditStatus, AuditTally,
};
pub use bounds::check_bounds;
pub use corpus::{
    check_member, run_verification, Corpus, CorpusInfo, Member, Summary, Tally, ToleranceInfo,
    VerificationConfig, VerificationReport,
};
pub use equalities::{check_equalities, check_trace_identities, EqualityConfig};
pub use scan::{
    member_seed, orientation_spread, scan_extremal, ExtremalReport, Extremum, RankGroup, ScanFamily,
};

use crate::report::{ser_real, ser_witness};
use serde::Serialize;
use std::fmt;

/// Absolute part of the dual comparison tolerance.
pub const ABS_TOL: f64 = 1e-9;
/// Relative part of the dual comparison tolerance.
pub const REL_TOL: f64 = 1e-8;
/// Width of the band inside which an inequality counts as attained with
/// equality.
pub const EQUALITY_BAND: f64 = 1e-8;
/// Relative tolerance of the trace identities.
pub const TRACE_TOL: f64 = 1e-9;
/// Values this close count as the same extremum.
pub const TIE_TOL: f64 = 1e-9;

/// `|a - b| <= 1e-9 + 1e-8 max(|a|, |b|)`.
pub fn tolerance(a: f64, b: f64) -> f64 {
    ABS_TOL + REL_TOL * a.abs().max(b.abs())
}

pub fn approx_eq(a: f64, b: f64) -> bool {
    (a - b).abs() <= tolerance(a, b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimStatus {
    Pass,
    Fail,
    NotApplicable,
    EqualityAttained,
}

impl ClaimStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ClaimStatus::Pass => "pass",
            ClaimStatus::Fail => "fail",
            ClaimStatus::NotApplicable => "not-applicable",
            ClaimStatus::EqualityAttained => "equality-attained",
        }
    }
}

impl fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of one claim on one graph.
///
/// `residual` is the amount by which the claim is violated: `|a - b|` for
/// equalities, `lhs - rhs` for `lhs <= rhs` (so negative means slack).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimResult {
    pub id: String,
    pub graph: String,
    pub status: ClaimStatus,
    #[serde(serialize_with = "ser_real")]
    pub residual: f64,
    #[serde(serialize_with = "ser_witness")]
    pub witness: Vec<(String, f64)>,
}

impl ClaimResult {
    pub fn not_applicable(id: impl Into<String>, graph: &str, reason: &str) -> Self {
        ClaimResult {
            id: id.into(),
            graph: graph.to_string(),
            status: ClaimStatus::NotApplicable,
            residual: 0.0,
            witness: vec![(format!("reason: {reason}"), f64::NAN)],
        }
    }

    /// Two routes to the same quantity must agree under the dual tolerance.
    pub fn equality(id: impl Into<String>, graph: &str, lhs: f64, rhs: f64) -> Self {
        let residual = (lhs - rhs).abs();
        let ok = residual <= tolerance(lhs, rhs);
        ClaimResult {
            id: id.into(),
            graph: graph.to_string(),
            status: if ok {
                ClaimStatus::Pass
            } else {
                ClaimStatus::Fail
            },
            residual: if residual.is_nan() {
                f64::INFINITY
            } else {
                residual
            },
            witness: vec![("lhs".into(), lhs), ("rhs".into(), rhs)],
        }
    }

    /// `lhs <= rhs`, with an equality band.
    pub fn at_most(id: impl Into<String>, graph: &str, lhs: f64, rhs: f64) -> Self {
        Self::inequality(id.into(), graph, lhs, rhs, lhs - rhs)
    }

    /// `lhs >= rhs`, with an equality band.
    pub fn at_least(id: impl Into<String>, graph: &str, lhs: f64, rhs: f64) -> Self {
        Self::inequality(id.into(), graph, lhs, rhs, rhs - lhs)
    }

    fn inequality(id: String, graph: &str, lhs: f64, rhs: f64, excess: f64) -> Self {
        let status = if excess.is_nan() || excess > tolerance(lhs, rhs) {
            ClaimStatus::Fail
        } else if excess.abs() <= EQUALITY_BAND {
            ClaimStatus::EqualityAttained
        } else {
            ClaimStatus::Pass
        };
        ClaimResult {
            id,
            graph: graph.to_string(),
            status,
            residual: excess,
            witness: vec![("lhs".into(), lhs), ("rhs".into(), rhs)],
        }
    }

    /// A structural condition must hold exactly when the bound is attained.
    pub fn characterization(
        id: impl Into<String>,
        graph: &str,
        structural: bool,
        value: f64,
        bound: f64,
    ) -> Self {
        let gap = (value - bound).abs();
        let attained = gap <= EQUALITY_BAND;
        let status = match (structural, attained) {
            (true, true) => ClaimStatus::EqualityAttained,
            (false, false) => ClaimStatus::Pass,
            _ => ClaimStatus::Fail,
        };
        ClaimResult {
            id: id.into(),
            graph: graph.to_string(),
            status,
            residual: gap,
            witness: vec![
                ("value".into(), value),
                ("bound".into(), bound),
                ("structural".into(), f64::from(u8::from(structural))),
            ],
        }
    }

    /// A numerical failure while evaluating the claim.
    pub fn error(id: impl Into<String>, graph: &str, err: &crate::Error) -> Self {
        ClaimResult {
            id: id.into(),
            graph: graph.to_string(),
            status: ClaimStatus::Fail,
            residual: f64::INFINITY,
            witness: vec![(format!("error: {err}"), f64::NAN)],
        }
    }

    pub fn is_failure(&self) -> bool {
        self.status == ClaimStatus::Fail
    }
}
