use super::corpus::Member;
use super::{ClaimResult, ClaimStatus, TRACE_TOL};
use crate::entropy::{
    entropy_i1, entropy_i2, entropy_i3, probabilities_from_spectrum, ClosedForm, LogBase,
};
use crate::error::{Error, Result};
use crate::graph::{random_orientation, GraphInput, OrientedGraph};
use crate::measures::{distance_moments, first_zagreb, general_randic_index};
use crate::zoo::{spectrum, MatrixKind};

/// Parameters shared by the equality and trace checks.
#[derive(Debug, Clone, PartialEq)]
pub struct EqualityConfig {
    pub alphas: Vec<f64>,
    /// Exponents for the general Randić matrix.
    pub betas: Vec<f64>,
    /// Seed of the random orientation used next to the canonical one.
    pub orientation_seed: u64,
    pub log_base: LogBase,
}

impl Default for EqualityConfig {
    fn default() -> Self {
        EqualityConfig {
            alphas: vec![0.5, 2.0, 3.0],
            betas: vec![-1.0, -0.5, 1.0],
            orientation_seed: 0,
            log_base: LogBase::TWO,
        }
    }
}

/// Errors that mean "the identity does not apply to this graph".
fn is_hypothesis_error(e: &Error) -> bool {
    matches!(
        e,
        Error::EmptyEdgeSet(_)
            | Error::Hypothesis(_)
            | Error::ZeroSpectrum
            | Error::DisconnectedGraph
    )
}

/// The supplied orientation, or else the canonical one and a seeded random
/// one (once, if they coincide).
pub(super) fn orientations<G: GraphInput>(input: &G, seed: u64) -> Vec<OrientedGraph> {
    match input.orientation() {
        Some(o) => vec![o.clone()],
        None => {
            let g = input.graph();
            let canonical = OrientedGraph::canonical(g.clone());
            let random = random_orientation(g, seed);
            if random == canonical {
                vec![canonical]
            } else {
                vec![canonical, random]
            }
        }
    }
}

/// The matrix kinds checked for one graph, each paired with the input it is
/// evaluated on. Skew kinds get the canonical and a seeded random
/// orientation unless the caller supplied an orientation.
fn evaluation_plan<G: GraphInput>(input: &G, cfg: &EqualityConfig) -> Vec<(MatrixKind, Member)> {
    let g = input.graph();
    let orientations = orientations(input, cfg.orientation_seed);
    let mut plan = Vec::new();
    let plain = || Member::Plain(g.clone());
    for kind in [
        MatrixKind::SignlessLaplacian,
        MatrixKind::NormalizedLaplacian,
        MatrixKind::NormalizedSignlessLaplacian,
        MatrixKind::Incidence,
        MatrixKind::Distance,
    ] {
        plan.push((kind, plain()));
    }
    for o in &orientations {
        plan.push((MatrixKind::SkewAdjacency, Member::Oriented(o.clone())));
    }
    plan.push((MatrixKind::RandicAdjacency, plain()));
    plan.push((MatrixKind::RandicIncidence, plain()));
    for &beta in &cfg.betas {
        plan.push((MatrixKind::GeneralRandic(beta), plain()));
    }
    for o in &orientations {
        plan.push((MatrixKind::SkewRandic, Member::Oriented(o.clone())));
    }
    plan
}

/// Compares, for every matrix kind, the entropies computed from the
/// spectrum against the index formulas: `I1` and `I2_α`, `I3_α` for every
/// `α` in the config. Claim ids look like `thm1/q/I2@0.5`.
pub fn check_equalities<G: GraphInput>(input: &G, cfg: &EqualityConfig) -> Vec<ClaimResult> {
    let mut out = Vec::new();
    for (kind, inp) in evaluation_plan(input, cfg) {
        let graph = inp.to_string();
        let prefix = format!("thm{}/{}", kind.theorem(), kind);
        let mut ids = vec![format!("{prefix}/I1")];
        for &a in &cfg.alphas {
            ids.push(format!("{prefix}/I2@{a}"));
            ids.push(format!("{prefix}/I3@{a}"));
        }
        match equality_values(kind, &inp, cfg) {
            Ok(pairs) => {
                for (id, (lhs, rhs)) in ids.into_iter().zip(pairs) {
                    out.push(match (lhs, rhs) {
                        (Ok(l), Ok(r)) => ClaimResult::equality(id, &graph, l, r),
                        (Err(e), _) | (_, Err(e)) => ClaimResult::error(id, &graph, &e),
                    });
                }
            }
            Err(e) if is_hypothesis_error(&e) => {
                let reason = e.to_string();
                out.extend(
                    ids.into_iter()
                        .map(|id| ClaimResult::not_applicable(id, &graph, &reason)),
                );
            }
            Err(e) => out.extend(ids.into_iter().map(|id| ClaimResult::error(id, &graph, &e))),
        }
    }
    out
}

type Pair = (Result<f64>, Result<f64>);

/// `(spectral, closed form)` for I1 then each α's I2 and I3.
fn equality_values<G: GraphInput>(
    kind: MatrixKind,
    input: &G,
    cfg: &EqualityConfig,
) -> Result<Vec<Pair>> {
    let cf = ClosedForm::evaluate(kind, input, cfg.log_base)?;
    let p = probabilities_from_spectrum(cf.spectrum())?.with_log_base(cfg.log_base);
    let mut v: Vec<Pair> = vec![(Ok(entropy_i1(&p)), Ok(cf.i1()))];
    for &a in &cfg.alphas {
        v.push((entropy_i2(&p, a), cf.i2(a)));
        v.push((entropy_i3(&p, a), cf.i3(a)));
    }
    Ok(v)
}

fn trace_claim(id: String, graph: &str, lhs: f64, rhs: f64) -> ClaimResult {
    let residual = (lhs - rhs).abs();
    let ok = residual <= TRACE_TOL * 1f64.max(lhs.abs()).max(rhs.abs());
    ClaimResult {
        id,
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
        witness: vec![("spectral".into(), lhs), ("index".into(), rhs)],
    }
}

/// Power-sum identities of each spectrum: `Σ q_i = 2m`,
/// `Σ q_i² = M1 + 2m`, `Σ μ_i = r` and `Σ μ_i² = r + 2R_{-1}` for both
/// normalized Laplacians, `Σ σ_i² = 2m` and `r` for the incidence kinds,
/// `Σ μ_i² = 4W_2` for distances, `Σ|λ_i|² = 2m` for skew adjacency,
/// `2R_{-1}` for both Randić kinds and `2R_{2β}` for the general one.
pub fn check_trace_identities<G: GraphInput>(input: &G, cfg: &EqualityConfig) -> Vec<ClaimResult> {
    let g = input.graph();
    let m = g.size() as f64;
    let r = g.non_isolated() as f64;
    let r_minus1 = general_randic_index(g, -1.0);
    let w2 = distance_moments(g).map(|d| 4.0 * d.moment(2.0));

    let mut out = Vec::new();
    for (kind, inp) in evaluation_plan(input, cfg) {
        let graph = inp.to_string();
        let mut expect: Vec<(&str, Result<f64>, bool)> = Vec::new();
        match kind {
            MatrixKind::SignlessLaplacian => {
                expect.push(("sum", Ok(2.0 * m), false));
                expect.push(("squares", Ok(first_zagreb(g) + 2.0 * m), true));
            }
            MatrixKind::NormalizedLaplacian | MatrixKind::NormalizedSignlessLaplacian => {
                expect.push(("sum", Ok(r), false));
                expect.push(("squares", Ok(r + 2.0 * r_minus1), true));
            }
            MatrixKind::Incidence | MatrixKind::SkewAdjacency => {
                expect.push(("squares", Ok(2.0 * m), true));
            }
            MatrixKind::Distance => {
                expect.push(("sum", w2.clone().map(|_| 0.0), false));
                expect.push(("squares", w2.clone(), true));
            }
            MatrixKind::RandicAdjacency | MatrixKind::SkewRandic => {
                expect.push(("squares", Ok(2.0 * r_minus1), true));
            }
            MatrixKind::RandicIncidence => expect.push(("squares", Ok(r), true)),
            MatrixKind::GeneralRandic(beta) => {
                expect.push((
                    "squares",
                    Ok(2.0 * general_randic_index(g, 2.0 * beta)),
                    true,
                ));
            }
        }
        let spec = spectrum(kind, &inp);
        for (what, rhs, squares) in expect {
            let id = format!("trace/{kind}/{what}");
            let claim = match (&spec, &rhs) {
                (Ok(s), Ok(rhs)) => {
                    let lhs = if squares { s.sum_of_squares() } else { s.sum() };
                    trace_claim(id, &graph, lhs, *rhs)
                }
                (Err(e), _) | (_, Err(e)) if is_hypothesis_error(e) => {
                    ClaimResult::not_applicable(id, &graph, &e.to_string())
                }
                (Err(e), _) | (_, Err(e)) => ClaimResult::error(id, &graph, e),
            };
            out.push(claim);
        }
    }
    out
}
