//! Degree- and distance-based topological indices, and graph energies.
//!
//! Distance moments use a halved convention: `W_k = ½ Σ_{i<j} d_ij^k`, so
//! `W = W_1` here is half of the Wiener index as it is usually defined.
//! With this convention `Σ μ_i² = 4 W_2` for the distance eigenvalues.

use crate::error::Result;
use crate::graph::{distances, Graph, GraphInput};
use crate::zoo::{spectrum, MatrixKind};

/// `M1 = Σ d_i²`.
pub fn first_zagreb(g: &Graph) -> f64 {
    g.degrees().iter().map(|&d| (d * d) as f64).sum()
}

/// `R_β = Σ_{uv ∈ E} (d_u d_v)^β`.
pub fn general_randic_index(g: &Graph, beta: f64) -> f64 {
    g.edges()
        .iter()
        .map(|&(u, v)| ((g.degree(u) * g.degree(v)) as f64).powf(beta))
        .sum()
}

/// Histogram of pairwise distances of a connected graph, from which every
/// distance moment follows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMoments {
    /// `counts[d]` = number of unordered pairs at distance `d`.
    counts: Vec<u64>,
}

impl DistanceMoments {
    /// `W_k = ½ Σ_{i<j} d_ij^k`.
    pub fn moment(&self, k: f64) -> f64 {
        0.5 * self
            .counts
            .iter()
            .enumerate()
            .skip(1)
            .map(|(d, &c)| c as f64 * (d as f64).powf(k))
            .sum::<f64>()
    }

    pub fn wiener(&self) -> f64 {
        self.moment(1.0)
    }

    /// `WW = ½ (W_2 + W_1)`.
    pub fn hyper_wiener(&self) -> f64 {
        0.5 * (self.moment(2.0) + self.moment(1.0))
    }

    pub fn pair_counts(&self) -> &[u64] {
        &self.counts
    }
}

pub fn distance_moments(g: &Graph) -> Result<DistanceMoments> {
    let table = distances(g)?;
    let mut counts = vec![0u64; table.diameter() as usize + 1];
    for d in table.upper_pairs() {
        counts[d as usize] += 1;
    }
    Ok(DistanceMoments { counts })
}

/// Energy of `kind`: the sum of its absolute spectral values. For the
/// incidence matrix this is `Σ √q_i` over the signless Laplacian spectrum.
pub fn energy<G: GraphInput>(kind: MatrixKind, g: &G) -> Result<f64> {
    Ok(spectrum(kind, g)?.energy())
}
