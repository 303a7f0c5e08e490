//! Graph spectra, energies, topological indices and generalized graph
//! entropies, with an exhaustive verifier for the identities and bounds
//! that tie them together.
//!
//! The pieces, bottom up:
//!
//! - [`graph`]: graphs, orientations, parsers, generators, enumerators
//! - [`matrix`], [`spectra`]: dense matrices and a Jacobi eigensolver
//! - [`zoo`]: the graph matrix families
//! - [`measures`]: Zagreb, Randić and distance indices, energies
//! - [`entropy`]: probability vectors and the generalized entropies
//! - [`verifier`]: claim checks over corpora, extremal scans, reports

pub mod entropy;
pub mod error;
pub mod graph;
pub mod matrix;
pub mod measures;
pub mod report;
pub mod spectra;
pub mod verifier;
pub mod zoo;

pub use error::{Error, Result};
pub use graph::{Graph, OrientedGraph};
pub use matrix::DenseMatrix;
pub use spectra::Spectrum;
pub use zoo::MatrixKind;
