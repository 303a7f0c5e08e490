//! Probability vectors attached to a graph and the three generalized
//! entropies built on them:
//!
//! | name | formula |
//! |------|---------|
//! | `I1` | `1 - Σ p_i²` |
//! | `I2_α` | `log(Σ p_i^α) / (1 - α)` (Rényi type) |
//! | `I3_α` | `(Σ p_i^α - 1) / (2^(1-α) - 1)` (Daróczy type) |
//!
//! plus the Shannon entropy of a vertex information functional.
//!
//! [`ClosedForm`] evaluates the same three quantities from graph invariants
//! (Zagreb and Randić indices, distance moments, energies) instead of from
//! the normalized spectrum.

use crate::error::{Error, Result};
use crate::graph::GraphInput;
use crate::measures::{distance_moments, first_zagreb, general_randic_index};
use crate::spectra::{spectral_moment, Spectrum};
use crate::zoo::{spectrum, MatrixKind};
use std::fmt;
use std::str::FromStr;

/// Probability vectors must sum to one within this.
pub const SUM_TOL: f64 = 1e-12;

/// Base of the logarithm used by `I2` and the Shannon entropy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogBase(f64);

impl LogBase {
    pub const TWO: LogBase = LogBase(2.0);
    pub const E: LogBase = LogBase(std::f64::consts::E);

    pub fn new(base: f64) -> Result<Self> {
        if base.is_finite() && base > 0.0 && base != 1.0 {
            Ok(LogBase(base))
        } else {
            Err(Error::InvalidLogBase(base))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn log(self, x: f64) -> f64 {
        if self.0 == 2.0 {
            x.log2()
        } else if self == LogBase::E {
            x.ln()
        } else {
            x.ln() / self.0.ln()
        }
    }
}

impl Default for LogBase {
    fn default() -> Self {
        LogBase::TWO
    }
}

impl FromStr for LogBase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "e" => Ok(LogBase::E),
            "2" => Ok(LogBase::TWO),
            _ => {
                let b: f64 = s
                    .parse()
                    .map_err(|_| Error::InvalidParameter(format!("log base {s:?}")))?;
                LogBase::new(b)
            }
        }
    }
}

impl fmt::Display for LogBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == LogBase::E {
            f.write_str("e")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Origin {
    Spectral(Option<MatrixKind>),
    Functional(String),
    Explicit,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityVector {
    p: Vec<f64>,
    origin: Origin,
    log_base: LogBase,
}

impl ProbabilityVector {
    /// Wraps an already normalized vector.
    pub fn new(p: Vec<f64>, log_base: LogBase) -> Result<Self> {
        if p.is_empty() {
            return Err(Error::InvalidParameter("empty probability vector".into()));
        }
        if p.iter().any(|x| !x.is_finite() || *x < 0.0) {
            return Err(Error::InvalidParameter(
                "probabilities must be finite and nonnegative".into(),
            ));
        }
        let total: f64 = p.iter().sum();
        if (total - 1.0).abs() > SUM_TOL {
            return Err(Error::InvalidParameter(format!(
                "probabilities sum to {total}, not 1"
            )));
        }
        Ok(ProbabilityVector {
            p,
            origin: Origin::Explicit,
            log_base,
        })
    }

    /// Normalizes nonnegative weights, `p_i = w_i / Σ w_j`.
    pub fn from_weights(weights: &[f64], origin: Origin) -> Result<Self> {
        if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(Error::InvalidParameter(
                "weights must be finite and nonnegative".into(),
            ));
        }
        let total: f64 = weights.iter().sum();
        if total <= 0.0 {
            return Err(Error::AllZeroWeights);
        }
        Ok(ProbabilityVector {
            p: weights.iter().map(|w| w / total).collect(),
            origin,
            log_base: LogBase::default(),
        })
    }

    pub fn with_log_base(mut self, base: LogBase) -> Self {
        self.log_base = base;
        self
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.p
    }

    pub fn origin(&self) -> &Origin {
        &self.origin
    }

    pub fn log_base(&self) -> LogBase {
        self.log_base
    }

    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }

    fn power_sum(&self, alpha: f64) -> f64 {
        self.p
            .iter()
            .map(|&x| if x == 0.0 { 0.0 } else { x.powf(alpha) })
            .sum()
    }
}

/// `p_i = |μ_i| / Σ|μ_j|`, in spectrum order.
pub fn probabilities_from_spectrum(s: &Spectrum) -> Result<ProbabilityVector> {
    let abs: Vec<f64> = s.values().iter().map(|v| v.abs()).collect();
    ProbabilityVector::from_weights(&abs, Origin::Spectral(s.source())).map_err(|e| match e {
        Error::AllZeroWeights => Error::ZeroSpectrum,
        other => other,
    })
}

/// `α` must lie in `(0, 1) ∪ (1, ∞)`.
pub fn check_alpha(alpha: f64) -> Result<()> {
    if alpha.is_nan() || alpha <= 0.0 {
        Err(Error::AlphaNonPositive(alpha))
    } else if alpha == 1.0 {
        Err(Error::AlphaOne)
    } else if !alpha.is_finite() {
        Err(Error::InvalidParameter(format!("alpha = {alpha}")))
    } else {
        Ok(())
    }
}

/// Rényi-type entropy of an already formed ratio `Σ p_i^α`.
fn renyi_from_power_sum(power_sum: f64, alpha: f64, base: LogBase) -> f64 {
    base.log(power_sum) / (1.0 - alpha)
}

/// Daróczy-type entropy of an already formed ratio `Σ p_i^α`.
fn daroczy_from_power_sum(power_sum: f64, alpha: f64) -> f64 {
    (power_sum - 1.0) / ((1.0 - alpha).exp2() - 1.0)
}

/// `I1 = Σ p_i (1 - p_i) = 1 - Σ p_i²`.
pub fn entropy_i1(p: &ProbabilityVector) -> f64 {
    1.0 - p.p.iter().map(|x| x * x).sum::<f64>()
}

pub fn entropy_i2(p: &ProbabilityVector, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    Ok(renyi_from_power_sum(p.power_sum(alpha), alpha, p.log_base))
}

pub fn entropy_i3(p: &ProbabilityVector, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    Ok(daroczy_from_power_sum(p.power_sum(alpha), alpha))
}

/// Shannon entropy in the vector's log base, `0 log 0 = 0`.
pub fn shannon(p: &ProbabilityVector) -> f64 {
    -p.p.iter()
        .filter(|&&x| x > 0.0)
        .map(|&x| x * p.log_base.log(x))
        .sum::<f64>()
}

/// Shannon entropy (bits) of a vertex information functional.
pub fn functional_entropy(weights: &[f64]) -> Result<f64> {
    let p = ProbabilityVector::from_weights(weights, Origin::Functional("custom".into()))?;
    Ok(shannon(&p))
}

/// Index-based evaluation of the three entropies of one matrix kind.
///
/// `I1` comes from the kind's invariant formula; `I2_α` and `I3_α` use the
/// moment `M*_α = Σ|μ_i|^α` divided by `T^α`, where `T` is `2m` for the
/// signless Laplacian, `n` for the normalized Laplacians, and the kind's
/// energy otherwise.
#[derive(Debug, Clone)]
pub struct ClosedForm {
    kind: MatrixKind,
    i1: f64,
    trace_sum: f64,
    spectrum: Spectrum,
    base: LogBase,
}

impl ClosedForm {
    pub fn evaluate<G: GraphInput>(kind: MatrixKind, input: &G, base: LogBase) -> Result<Self> {
        let g = input.graph();
        let n = g.order() as f64;
        let m = g.size() as f64;
        let r = g.non_isolated() as f64;
        if g.size() == 0
            && matches!(
                kind,
                MatrixKind::SignlessLaplacian | MatrixKind::Incidence | MatrixKind::SkewAdjacency
            )
        {
            return Err(Error::EmptyEdgeSet(kind.to_string()));
        }
        if matches!(
            kind,
            MatrixKind::NormalizedLaplacian | MatrixKind::NormalizedSignlessLaplacian
        ) && g.non_isolated() != g.order()
        {
            return Err(Error::Hypothesis(format!(
                "{kind} trace identity needs no isolated vertices ({} of {} are)",
                g.order() - g.non_isolated(),
                g.order()
            )));
        }
        let spectrum = spectrum(kind, input)?;
        let e = spectrum.energy();
        if e == 0.0 {
            return Err(Error::ZeroSpectrum);
        }
        let (i1, trace_sum) = match kind {
            MatrixKind::SignlessLaplacian => {
                (1.0 - (first_zagreb(g) + 2.0 * m) / (4.0 * m * m), 2.0 * m)
            }
            MatrixKind::NormalizedLaplacian | MatrixKind::NormalizedSignlessLaplacian => {
                (1.0 - (n + 2.0 * general_randic_index(g, -1.0)) / (n * n), n)
            }
            MatrixKind::Incidence | MatrixKind::SkewAdjacency => (1.0 - 2.0 * m / (e * e), e),
            MatrixKind::Distance => {
                let dm = distance_moments(g)?;
                let w2 = 2.0 * dm.hyper_wiener() - dm.wiener();
                (1.0 - 4.0 * w2 / (e * e), e)
            }
            MatrixKind::RandicAdjacency | MatrixKind::SkewRandic => {
                (1.0 - 2.0 * general_randic_index(g, -1.0) / (e * e), e)
            }
            MatrixKind::RandicIncidence => (1.0 - r / (e * e), e),
            MatrixKind::GeneralRandic(beta) => {
                (1.0 - 2.0 * general_randic_index(g, 2.0 * beta) / (e * e), e)
            }
        };
        Ok(ClosedForm {
            kind,
            i1,
            trace_sum,
            spectrum,
            base,
        })
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    pub fn i1(&self) -> f64 {
        self.i1
    }

    /// `T`: `2m`, `n`, or the energy, depending on the kind.
    pub fn trace_sum(&self) -> f64 {
        self.trace_sum
    }

    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }

    fn ratio(&self, alpha: f64) -> Result<f64> {
        check_alpha(alpha)?;
        Ok(spectral_moment(&self.spectrum, alpha)? / self.trace_sum.powf(alpha))
    }

    pub fn i2(&self, alpha: f64) -> Result<f64> {
        Ok(renyi_from_power_sum(self.ratio(alpha)?, alpha, self.base))
    }

    pub fn i3(&self, alpha: f64) -> Result<f64> {
        Ok(daroczy_from_power_sum(self.ratio(alpha)?, alpha))
    }
}

/// `(I1, I2_α, I3_α)` of `kind` from graph invariants.
pub fn closed_form<G: GraphInput>(
    kind: MatrixKind,
    input: &G,
    alpha: f64,
    base: LogBase,
) -> Result<(f64, f64, f64)> {
    check_alpha(alpha)?;
    let cf = ClosedForm::evaluate(kind, input, base)?;
    Ok((cf.i1(), cf.i2(alpha)?, cf.i3(alpha)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, Family, Graph};
    use crate::spectra::SpectrumKind;

    fn pv(p: &[f64]) -> ProbabilityVector {
        ProbabilityVector::new(p.to_vec(), LogBase::TWO).unwrap()
    }

    fn uniform(n: usize) -> ProbabilityVector {
        ProbabilityVector::from_weights(&vec![1.0; n], Origin::Explicit).unwrap()
    }

    fn q_k3_probs() -> ProbabilityVector {
        let s = Spectrum::new(vec![4.0, 1.0, 1.0], SpectrumKind::Eigenvalues);
        probabilities_from_spectrum(&s).unwrap()
    }

    #[test]
    fn spectrum_normalization() {
        let p = q_k3_probs();
        let expect = [2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0];
        for (a, b) in p.probabilities().iter().zip(expect) {
            assert!((a - b).abs() < 1e-15);
        }
        let one = Spectrum::new(vec![-3.0], SpectrumKind::Eigenvalues);
        assert_eq!(
            probabilities_from_spectrum(&one).unwrap().probabilities(),
            &[1.0]
        );
        let zero = Spectrum::new(vec![0.0; 3], SpectrumKind::Eigenvalues);
        assert_eq!(probabilities_from_spectrum(&zero), Err(Error::ZeroSpectrum));
    }

    #[test]
    fn first_entropy() {
        for n in 1..8 {
            let v = entropy_i1(&uniform(n));
            assert!((v - (1.0 - 1.0 / n as f64)).abs() < 1e-15);
        }
        assert_eq!(entropy_i1(&pv(&[1.0])), 0.0);
        assert!((entropy_i1(&q_k3_probs()) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn renyi_type() {
        for n in 1..7 {
            for alpha in [0.5, 2.0, 3.0, 7.5] {
                let v = entropy_i2(&uniform(n), alpha).unwrap();
                assert!((v - (n as f64).log2()).abs() < 1e-13);
            }
        }
        assert!((entropy_i2(&q_k3_probs(), 2.0).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(entropy_i2(&uniform(2), 1.0), Err(Error::AlphaOne));
        assert_eq!(
            entropy_i2(&uniform(2), -2.0),
            Err(Error::AlphaNonPositive(-2.0))
        );
    }

    #[test]
    fn daroczy_type() {
        for alpha in [0.25, 0.5, 2.0, 3.0] {
            assert!((entropy_i3(&uniform(2), alpha).unwrap() - 1.0).abs() < 1e-14);
            assert_eq!(entropy_i3(&pv(&[1.0]), alpha).unwrap(), 0.0);
        }
        assert!((entropy_i3(&q_k3_probs(), 2.0).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(entropy_i3(&uniform(3), 1.0), Err(Error::AlphaOne));
    }

    #[test]
    fn functional() {
        let k5 = make_family(Family::Complete, 5).unwrap();
        let deg: Vec<f64> = k5.degrees().iter().map(|&d| d as f64).collect();
        assert!((functional_entropy(&deg).unwrap() - 5f64.log2()).abs() < 1e-14);
        assert_eq!(functional_entropy(&[1.0, 0.0]).unwrap(), 0.0);
        let s4 = make_family(Family::Star, 4).unwrap();
        let deg: Vec<f64> = s4.degrees().iter().map(|&d| d as f64).collect();
        let h = 0.5 + 0.5 * 6f64.log2();
        assert!((functional_entropy(&deg).unwrap() - h).abs() < 1e-14);
        assert!((h - 1.7925).abs() < 1e-4);
        assert_eq!(functional_entropy(&[0.0, 0.0]), Err(Error::AllZeroWeights));
    }

    #[test]
    fn log_bases() {
        assert_eq!("e".parse::<LogBase>().unwrap(), LogBase::E);
        assert_eq!("10".parse::<LogBase>().unwrap().value(), 10.0);
        assert!("1".parse::<LogBase>().is_err());
        assert!("-2".parse::<LogBase>().is_err());
        assert!("two".parse::<LogBase>().is_err());
        let p = uniform(4).with_log_base(LogBase::E);
        assert!((entropy_i2(&p, 2.0).unwrap() - 4f64.ln()).abs() < 1e-14);
    }

    #[test]
    fn vector_validation() {
        assert!(ProbabilityVector::new(vec![], LogBase::TWO).is_err());
        assert!(ProbabilityVector::new(vec![0.5, 0.6], LogBase::TWO).is_err());
        assert!(ProbabilityVector::new(vec![1.5, -0.5], LogBase::TWO).is_err());
        assert!(ProbabilityVector::from_weights(&[1.0, -1.0], Origin::Explicit).is_err());
    }

    #[test]
    fn closed_form_examples() {
        let k3 = make_family(Family::Complete, 3).unwrap();
        let (i1, i2, i3) =
            closed_form(MatrixKind::SignlessLaplacian, &k3, 2.0, LogBase::TWO).unwrap();
        assert!((i1 - 0.5).abs() < 1e-15);
        assert!((i2 - 1.0).abs() < 1e-14);
        assert!((i3 - 1.0).abs() < 1e-14);

        let s4 = make_family(Family::Star, 4).unwrap();
        for alpha in [0.5, 2.0] {
            let (i1, _, _) =
                closed_form(MatrixKind::NormalizedLaplacian, &s4, alpha, LogBase::TWO).unwrap();
            assert!((i1 - 0.625).abs() < 1e-15);
        }

        let p3 = make_family(Family::Path, 3).unwrap();
        let (i1, _, _) = closed_form(MatrixKind::Distance, &p3, 3.0, LogBase::TWO).unwrap();
        let expect = 1.0 - 3.0 / (4.0 + 2.0 * 3f64.sqrt());
        assert!((i1 - expect).abs() < 1e-12);
    }

    #[test]
    fn closed_form_hypotheses() {
        let e3 = Graph::empty(3).unwrap();
        assert!(matches!(
            closed_form(MatrixKind::SignlessLaplacian, &e3, 2.0, LogBase::TWO),
            Err(Error::EmptyEdgeSet(_))
        ));
        assert!(matches!(
            closed_form(MatrixKind::RandicAdjacency, &e3, 2.0, LogBase::TWO),
            Err(Error::ZeroSpectrum)
        ));
        let k2_k1 = Graph::new(3, [(0, 1)]).unwrap();
        assert!(matches!(
            closed_form(MatrixKind::NormalizedLaplacian, &k2_k1, 2.0, LogBase::TWO),
            Err(Error::Hypothesis(_))
        ));
        let k3 = make_family(Family::Complete, 3).unwrap();
        assert_eq!(
            closed_form(MatrixKind::SignlessLaplacian, &k3, 1.0, LogBase::TWO),
            Err(Error::AlphaOne)
        );
    }
}
