//! Deterministic report output.
//!
//! Every real number leaving the crate through a report is rounded to 15
//! significant digits before serialization, so identical inputs produce
//! byte-identical JSON and CSV regardless of platform or worker count.
//! Non-finite values serialize as `null` (JSON) or an empty field (CSV).

use crate::entropy::{entropy_i1, entropy_i2, entropy_i3, probabilities_from_spectrum, LogBase};
use crate::error::Result;
use crate::graph::GraphInput;
use crate::measures::{distance_moments, first_zagreb, general_randic_index};
use crate::zoo::{spectrum, MatrixKind};
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

/// Rounds to 15 significant digits. Negative zero becomes zero and
/// non-finite values become `None`.
pub fn round15(x: f64) -> Option<f64> {
    if !x.is_finite() {
        return None;
    }
    let r: f64 = format!("{x:.14e}").parse().expect("formatted float parses");
    Some(if r == 0.0 { 0.0 } else { r })
}

/// Text form used in CSV cells.
pub fn format_real(x: f64) -> String {
    round15(x).map(|r| r.to_string()).unwrap_or_default()
}

pub fn ser_real<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    round15(*x).serialize(s)
}

pub fn ser_opt_real<S: Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    x.and_then(round15).serialize(s)
}

pub fn ser_reals<S: Serializer>(xs: &[f64], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for &x in xs {
        seq.serialize_element(&round15(x))?;
    }
    seq.end()
}

/// Serializes `(name, value)` pairs as a JSON object, in the given order.
pub fn ser_witness<S: Serializer>(w: &[(String, f64)], s: S) -> Result<S::Ok, S::Error> {
    let mut map = s.serialize_map(Some(w.len()))?;
    for (k, v) in w {
        map.serialize_entry(k, &round15(*v))?;
    }
    map.end()
}

/// Writes a value as pretty JSON followed by a newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types always serialize");
    s.push('\n');
    s
}

/// Writes rows as RFC 4180 CSV.
pub fn to_csv<I, R>(header: &[&str], rows: I) -> String
where
    I: IntoIterator<Item = R>,
    R: IntoIterator<Item = String>,
{
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::CRLF)
        .from_writer(Vec::new());
    w.write_record(header).expect("writing to memory");
    for row in rows {
        w.write_record(row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv of utf-8 is utf-8")
}

/// Invariants of the graph itself.
#[derive(Debug, Clone, Serialize)]
pub struct GraphIndices {
    pub order: usize,
    pub size: usize,
    pub non_isolated: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    #[serde(serialize_with = "ser_real")]
    pub first_zagreb: f64,
    /// `R_{-1}`.
    #[serde(serialize_with = "ser_real")]
    pub randic_index: f64,
    /// Halved convention; `None` for disconnected graphs.
    #[serde(serialize_with = "ser_opt_real")]
    pub wiener: Option<f64>,
    #[serde(serialize_with = "ser_opt_real")]
    pub hyper_wiener: Option<f64>,
    #[serde(serialize_with = "ser_opt_real")]
    pub w2: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AlphaEntropies {
    #[serde(serialize_with = "ser_real")]
    pub alpha: f64,
    #[serde(rename = "I2", serialize_with = "ser_real")]
    pub i2: f64,
    #[serde(rename = "I3", serialize_with = "ser_real")]
    pub i3: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct KindMeasures {
    pub matrix: String,
    #[serde(serialize_with = "ser_reals")]
    pub spectrum: Vec<f64>,
    #[serde(serialize_with = "ser_real")]
    pub energy: f64,
    #[serde(rename = "I1", serialize_with = "ser_real")]
    pub i1: f64,
    pub entropies: Vec<AlphaEntropies>,
}

/// A kind whose spectrum or entropy is undefined for this graph.
#[derive(Debug, Clone, Serialize)]
pub struct KindError {
    pub matrix: String,
    pub error: String,
}

/// Everything `compute` reports for one graph.
#[derive(Debug, Clone, Serialize)]
pub struct MeasureReport {
    pub graph: String,
    pub log_base: String,
    pub indices: GraphIndices,
    pub matrices: Vec<KindMeasures>,
    pub unavailable: Vec<KindError>,
}

/// Spectrum, energy and the three entropies of one kind, through the
/// spectral definition `p_i = |μ_i| / Σ|μ_j|`.
pub fn kind_measures<G: GraphInput>(
    kind: MatrixKind,
    input: &G,
    alphas: &[f64],
    base: LogBase,
) -> Result<KindMeasures> {
    let s = spectrum(kind, input)?;
    let p = probabilities_from_spectrum(&s)?.with_log_base(base);
    let entropies = alphas
        .iter()
        .map(|&alpha| {
            Ok(AlphaEntropies {
                alpha,
                i2: entropy_i2(&p, alpha)?,
                i3: entropy_i3(&p, alpha)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(KindMeasures {
        matrix: kind.to_string(),
        energy: s.energy(),
        i1: entropy_i1(&p),
        spectrum: s.values().to_vec(),
        entropies,
    })
}

pub fn graph_indices<G: GraphInput>(input: &G) -> GraphIndices {
    let g = input.graph();
    let dm = distance_moments(g).ok();
    GraphIndices {
        order: g.order(),
        size: g.size(),
        non_isolated: g.non_isolated(),
        min_degree: g.min_degree(),
        max_degree: g.max_degree(),
        first_zagreb: first_zagreb(g),
        randic_index: general_randic_index(g, -1.0),
        wiener: dm.as_ref().map(|d| d.wiener()),
        hyper_wiener: dm.as_ref().map(|d| d.hyper_wiener()),
        w2: dm.as_ref().map(|d| d.moment(2.0)),
    }
}

/// Builds a [`MeasureReport`]. Kinds that fail are listed under
/// `unavailable` with the error text; the caller decides whether that is
/// fatal.
pub fn measure_report<G: GraphInput + std::fmt::Display>(
    input: &G,
    kinds: &[MatrixKind],
    alphas: &[f64],
    base: LogBase,
) -> Result<MeasureReport> {
    for &a in alphas {
        crate::entropy::check_alpha(a)?;
    }
    let mut matrices = Vec::new();
    let mut unavailable = Vec::new();
    for &kind in kinds {
        match kind_measures(kind, input, alphas, base) {
            Ok(k) => matrices.push(k),
            Err(e) => unavailable.push(KindError {
                matrix: kind.to_string(),
                error: e.to_string(),
            }),
        }
    }
    Ok(MeasureReport {
        graph: input.to_string(),
        log_base: base.to_string(),
        indices: graph_indices(input),
        matrices,
        unavailable,
    })
}

impl MeasureReport {
    /// One row per (matrix, α) with the entropies; `I1` repeats per row.
    pub fn to_csv(&self) -> String {
        let mut rows = Vec::new();
        for k in &self.matrices {
            if k.entropies.is_empty() {
                rows.push(vec![
                    self.graph.clone(),
                    k.matrix.clone(),
                    format_real(k.energy),
                    format_real(k.i1),
                    String::new(),
                    String::new(),
                    String::new(),
                ]);
            }
            for e in &k.entropies {
                rows.push(vec![
                    self.graph.clone(),
                    k.matrix.clone(),
                    format_real(k.energy),
                    format_real(k.i1),
                    format_real(e.alpha),
                    format_real(e.i2),
                    format_real(e.i3),
                ]);
            }
        }
        to_csv(
            &["graph", "matrix", "energy", "I1", "alpha", "I2", "I3"],
            rows,
        )
    }
}
