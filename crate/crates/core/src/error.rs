use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("line {line}: malformed token {token:?}")]
    MalformedToken { line: usize, token: String },

    #[error("line {line}: negative vertex index {token:?}")]
    NegativeIndex { line: usize, token: String },

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("arcs {0}->{1} and {1}->{0} both present")]
    ContradictoryArcs(usize, usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph6: byte {byte:#04x} at offset {offset} is outside 63..=126")]
    ByteOutOfRange { byte: u8, offset: usize },

    #[error("graph6: expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },

    #[error("graph6: {0} unexpected trailing bytes")]
    TrailingBytes(usize),

    #[error("graph6: order {0} not supported (n must be below 63)")]
    UnsupportedOrder(usize),

    #[error("graph is disconnected")]
    DisconnectedGraph,

    #[error("{what} = {value} outside supported range {range}")]
    OutOfRange {
        what: &'static str,
        value: String,
        range: &'static str,
    },

    #[error("matrix is not symmetric: |a[{i}][{j}] - a[{j}][{i}]| = {gap:e}")]
    NonSymmetric { i: usize, j: usize, gap: f64 },

    #[error("matrix is not skew-symmetric: |a[{i}][{j}] + a[{j}][{i}]| = {gap:e}")]
    NonSkew { i: usize, j: usize, gap: f64 },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix contains a non-finite entry")]
    NonFinite,

    #[error("Jacobi iteration did not converge within {0} sweeps")]
    NoConvergence(usize),

    #[error("eigenvalue {0:e} of a positive semidefinite matrix is below the clamp threshold")]
    NegativeEigenvalue(f64),

    #[error("matrix kind {0} requires an oriented graph")]
    NotOriented(String),

    #[error("matrix kind {0} requires at least one edge")]
    EmptyEdgeSet(String),

    #[error("spectrum is identically zero; entropy is undefined")]
    ZeroSpectrum,

    #[error("weights sum to zero")]
    AllZeroWeights,

    #[error("alpha = 1 is excluded")]
    AlphaOne,

    #[error("alpha must be positive, got {0}")]
    AlphaNonPositive(f64),

    #[error("invalid logarithm base {0}")]
    InvalidLogBase(f64),

    #[error("theorem hypothesis not met: {0}")]
    Hypothesis(String),

    #[error("unknown matrix kind {0:?}")]
    UnknownKind(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
