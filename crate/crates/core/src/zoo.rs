//! The graph matrices whose spectra feed the entropy identities.
//!
//! `D^(-1/2)` is taken entrywise with the convention that an isolated
//! vertex (degree 0) gets a zero diagonal entry, so isolated vertices
//! contribute zero rows and columns to every normalized or Randić-type
//! matrix.

use crate::error::{Error, Result};
use crate::graph::{distances, Graph, GraphInput, OrientedGraph};
use crate::matrix::DenseMatrix;
use crate::spectra::{singular_values, skew_absolute_eigenvalues, symmetric_eigenvalues, Spectrum};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MatrixKind {
    /// `Q = D + A`
    SignlessLaplacian,
    /// `D^(-1/2) (D - A) D^(-1/2)`
    NormalizedLaplacian,
    /// `D^(-1/2) (D + A) D^(-1/2)`
    NormalizedSignlessLaplacian,
    /// `n x m` vertex-edge incidence, 0/1
    Incidence,
    /// shortest-path distances (connected graphs only)
    Distance,
    /// `±1` per arc direction
    SkewAdjacency,
    /// `(d_i d_j)^(-1/2)` on edges
    RandicAdjacency,
    /// `D^(-1/2) I`
    RandicIncidence,
    /// `(d_i d_j)^β` on edges, i.e. `D^β A D^β`
    GeneralRandic(f64),
    /// `±(d_i d_j)^(-1/2)` per arc direction
    SkewRandic,
}

impl MatrixKind {
    /// One representative per family, with the general Randić matrix at
    /// `β = 1`.
    pub const ALL: [MatrixKind; 10] = [
        MatrixKind::SignlessLaplacian,
        MatrixKind::NormalizedLaplacian,
        MatrixKind::NormalizedSignlessLaplacian,
        MatrixKind::Incidence,
        MatrixKind::Distance,
        MatrixKind::SkewAdjacency,
        MatrixKind::RandicAdjacency,
        MatrixKind::RandicIncidence,
        MatrixKind::GeneralRandic(1.0),
        MatrixKind::SkewRandic,
    ];

    pub fn needs_orientation(self) -> bool {
        matches!(self, MatrixKind::SkewAdjacency | MatrixKind::SkewRandic)
    }

    pub fn is_incidence(self) -> bool {
        matches!(self, MatrixKind::Incidence | MatrixKind::RandicIncidence)
    }

    /// The identity that relates this kind's first entropy to graph
    /// invariants (1 through 9).
    pub fn theorem(self) -> u8 {
        match self {
            MatrixKind::SignlessLaplacian => 1,
            MatrixKind::NormalizedLaplacian | MatrixKind::NormalizedSignlessLaplacian => 2,
            MatrixKind::Incidence => 3,
            MatrixKind::Distance => 4,
            MatrixKind::SkewAdjacency => 5,
            MatrixKind::RandicAdjacency => 6,
            MatrixKind::RandicIncidence => 7,
            MatrixKind::GeneralRandic(_) => 8,
            MatrixKind::SkewRandic => 9,
        }
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixKind::SignlessLaplacian => f.write_str("q"),
            MatrixKind::NormalizedLaplacian => f.write_str("norm-l"),
            MatrixKind::NormalizedSignlessLaplacian => f.write_str("norm-q"),
            MatrixKind::Incidence => f.write_str("incidence"),
            MatrixKind::Distance => f.write_str("distance"),
            MatrixKind::SkewAdjacency => f.write_str("skew"),
            MatrixKind::RandicAdjacency => f.write_str("randic"),
            MatrixKind::RandicIncidence => f.write_str("randic-incidence"),
            MatrixKind::GeneralRandic(beta) => write!(f, "general-randic:{beta}"),
            MatrixKind::SkewRandic => f.write_str("skew-randic"),
        }
    }
}

impl FromStr for MatrixKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let kind = match s {
            "q" => MatrixKind::SignlessLaplacian,
            "norm-l" => MatrixKind::NormalizedLaplacian,
            "norm-q" => MatrixKind::NormalizedSignlessLaplacian,
            "incidence" => MatrixKind::Incidence,
            "distance" => MatrixKind::Distance,
            "skew" => MatrixKind::SkewAdjacency,
            "randic" => MatrixKind::RandicAdjacency,
            "randic-incidence" => MatrixKind::RandicIncidence,
            "skew-randic" => MatrixKind::SkewRandic,
            _ => {
                let beta = s
                    .strip_prefix("general-randic:")
                    .and_then(|b| b.parse::<f64>().ok())
                    .filter(|b| b.is_finite())
                    .ok_or_else(|| Error::UnknownKind(s.to_string()))?;
                MatrixKind::GeneralRandic(beta)
            }
        };
        Ok(kind)
    }
}

fn inv_sqrt_degrees(g: &Graph) -> Vec<f64> {
    g.degrees()
        .iter()
        .map(|&d| if d == 0 { 0.0 } else { 1.0 / (d as f64).sqrt() })
        .collect()
}

fn edge_weight(g: &Graph, u: usize, v: usize, beta: f64) -> f64 {
    ((g.degree(u) * g.degree(v)) as f64).powf(beta)
}

fn symmetric_from_edges(
    g: &Graph,
    diag: &[f64],
    weight: impl Fn(usize, usize) -> f64,
) -> DenseMatrix {
    let mut m = DenseMatrix::from_diagonal(diag);
    for &(u, v) in g.edges() {
        let w = weight(u, v);
        m[(u, v)] = w;
        m[(v, u)] = w;
    }
    m
}

fn skew_from_arcs(og: &OrientedGraph, weight: impl Fn(usize, usize) -> f64) -> DenseMatrix {
    let n = og.underlying().order();
    let mut m = DenseMatrix::zeros(n, n);
    for &(t, h) in og.arcs() {
        let w = weight(t, h);
        m[(t, h)] = w;
        m[(h, t)] = -w;
    }
    m
}

fn incidence(g: &Graph, row_scale: &[f64]) -> DenseMatrix {
    let mut m = DenseMatrix::zeros(g.order(), g.size());
    for (k, &(u, v)) in g.edges().iter().enumerate() {
        m[(u, k)] = row_scale[u];
        m[(v, k)] = row_scale[v];
    }
    m
}

/// Builds the matrix of `kind` for `input`. Skew kinds need an oriented
/// graph; the distance matrix needs a connected one; incidence kinds need
/// at least one edge.
pub fn build<G: GraphInput>(kind: MatrixKind, input: &G) -> Result<DenseMatrix> {
    let g = input.graph();
    let n = g.order();
    let deg: Vec<f64> = g.degrees().iter().map(|&d| d as f64).collect();
    let m = match kind {
        MatrixKind::SignlessLaplacian => symmetric_from_edges(g, &deg, |_, _| 1.0),
        MatrixKind::NormalizedLaplacian | MatrixKind::NormalizedSignlessLaplacian => {
            let s = inv_sqrt_degrees(g);
            let sign = if kind == MatrixKind::NormalizedLaplacian {
                -1.0
            } else {
                1.0
            };
            let diag: Vec<f64> = deg
                .iter()
                .map(|&d| if d > 0.0 { 1.0 } else { 0.0 })
                .collect();
            symmetric_from_edges(g, &diag, |u, v| sign * s[u] * s[v])
        }
        MatrixKind::Incidence | MatrixKind::RandicIncidence => {
            if g.size() == 0 {
                return Err(Error::EmptyEdgeSet(kind.to_string()));
            }
            let scale = if kind == MatrixKind::Incidence {
                vec![1.0; n]
            } else {
                inv_sqrt_degrees(g)
            };
            incidence(g, &scale)
        }
        MatrixKind::Distance => {
            let table = distances(g)?;
            let mut m = DenseMatrix::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    m[(i, j)] = f64::from(table.get(i, j));
                }
            }
            m
        }
        MatrixKind::RandicAdjacency => {
            symmetric_from_edges(g, &vec![0.0; n], |u, v| edge_weight(g, u, v, -0.5))
        }
        MatrixKind::GeneralRandic(beta) => {
            symmetric_from_edges(g, &vec![0.0; n], |u, v| edge_weight(g, u, v, beta))
        }
        MatrixKind::SkewAdjacency | MatrixKind::SkewRandic => {
            let og = input
                .orientation()
                .ok_or_else(|| Error::NotOriented(kind.to_string()))?;
            if kind == MatrixKind::SkewAdjacency {
                skew_from_arcs(og, |_, _| 1.0)
            } else {
                skew_from_arcs(og, |t, h| edge_weight(g, t, h, -0.5))
            }
        }
    };
    Ok(m)
}

/// The spectrum each identity is stated for: eigenvalues for symmetric
/// kinds, singular values (padded to `n`) for incidence kinds, `|λ|` for
/// skew kinds.
pub fn spectrum<G: GraphInput>(kind: MatrixKind, input: &G) -> Result<Spectrum> {
    let m = build(kind, input)?;
    let s = if kind.is_incidence() {
        singular_values(&m, input.graph().order())?
    } else if kind.needs_orientation() {
        skew_absolute_eigenvalues(&m)?
    } else {
        symmetric_eigenvalues(&m)?
    };
    Ok(s.with_source(kind))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, Family};

    fn k3() -> Graph {
        make_family(Family::Complete, 3).unwrap()
    }

    #[test]
    fn signless_laplacian_of_triangle() {
        let q = build(MatrixKind::SignlessLaplacian, &k3()).unwrap();
        let expect =
            DenseMatrix::from_rows(&[[2.0, 1.0, 1.0], [1.0, 2.0, 1.0], [1.0, 1.0, 2.0]]).unwrap();
        assert_eq!(q, expect);
    }

    #[test]
    fn general_randic_zero_is_adjacency() {
        let g = make_family(Family::Star, 5).unwrap();
        let r0 = build(MatrixKind::GeneralRandic(0.0), &g).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(r0[(i, j)], if g.has_edge(i, j) { 1.0 } else { 0.0 });
            }
        }
    }

    #[test]
    fn general_randic_minus_half_is_randic() {
        let g = Graph::new(5, [(0, 1), (1, 2), (1, 3), (3, 4), (2, 3)]).unwrap();
        assert_eq!(
            build(MatrixKind::GeneralRandic(-0.5), &g).unwrap(),
            build(MatrixKind::RandicAdjacency, &g).unwrap()
        );
    }

    #[test]
    fn randic_incidence_of_p3() {
        let p3 = make_family(Family::Path, 3).unwrap();
        let m = build(MatrixKind::RandicIncidence, &p3).unwrap();
        let h = 1.0 / 2f64.sqrt();
        assert_eq!(m.row(0), &[1.0, 0.0]);
        assert_eq!(m.row(1), &[h, h]);
        assert_eq!(m.row(2), &[0.0, 1.0]);
    }

    #[test]
    fn isolated_vertices_give_zero_rows() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        let l = build(MatrixKind::NormalizedLaplacian, &g).unwrap();
        assert_eq!(l.row(2), &[0.0, 0.0, 0.0]);
        assert_eq!(l.trace(), 2.0);
        let r = build(MatrixKind::RandicIncidence, &g).unwrap();
        assert_eq!(r.row(2), &[0.0]);
    }

    #[test]
    fn skew_signs_follow_arcs() {
        let og = OrientedGraph::from_arcs(3, [(1, 0), (1, 2)]).unwrap();
        let s = build(MatrixKind::SkewAdjacency, &og).unwrap();
        assert_eq!(s[(1, 0)], 1.0);
        assert_eq!(s[(0, 1)], -1.0);
        assert_eq!(s[(1, 2)], 1.0);
        let rs = build(MatrixKind::SkewRandic, &og).unwrap();
        assert!((rs[(1, 0)] - 1.0 / 2f64.sqrt()).abs() < 1e-15);
        assert!(rs.check_skew(0.0).is_ok());
    }

    #[test]
    fn precondition_errors() {
        let e3 = Graph::empty(3).unwrap();
        assert!(matches!(
            build(MatrixKind::Incidence, &e3),
            Err(Error::EmptyEdgeSet(_))
        ));
        assert!(matches!(
            build(MatrixKind::Distance, &e3),
            Err(Error::DisconnectedGraph)
        ));
        assert!(matches!(
            build(MatrixKind::SkewAdjacency, &k3()),
            Err(Error::NotOriented(_))
        ));
    }

    #[test]
    fn kind_names_round_trip() {
        for kind in MatrixKind::ALL {
            assert_eq!(kind.to_string().parse::<MatrixKind>().unwrap(), kind);
        }
        assert_eq!(
            "general-randic:-0.5".parse::<MatrixKind>().unwrap(),
            MatrixKind::GeneralRandic(-0.5)
        );
        assert!("general-randic:x".parse::<MatrixKind>().is_err());
        assert!("laplacian".parse::<MatrixKind>().is_err());
    }

    #[test]
    fn incidence_columns_in_edge_order() {
        let g = Graph::new(4, [(2, 3), (0, 1), (1, 3)]).unwrap();
        let i = build(MatrixKind::Incidence, &g).unwrap();
        // columns: (0,1), (1,3), (2,3)
        assert_eq!(i.row(1), &[1.0, 1.0, 0.0]);
        assert_eq!(i.row(3), &[0.0, 1.0, 1.0]);
        let q = build(MatrixKind::SignlessLaplacian, &g).unwrap();
        assert_eq!(i.gram(), q);
    }
}
