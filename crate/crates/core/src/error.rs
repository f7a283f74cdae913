//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("adjacency matrix has a diagonal arc at vertex {0}")]
    DiagonalArc(usize),
    #[error("vertex pair ({0},{1}) has {2} arcs; a tournament needs exactly one")]
    NotComplete(usize, usize, usize),
    #[error("adjacency matrix is not square")]
    NotSquare,
    #[error("ordering is not a permutation of the vertex set")]
    BadOrdering,
    #[error("vertex {0} out of range for a tournament on {1} vertices")]
    OutOfRange(usize, usize),
    #[error("tournament is not transitive (contains a cyclic triangle)")]
    NotTransitive,
    #[error("instance too large: {0} vertices exceeds the limit of {1}")]
    TooLarge(usize, usize),
    #[error("pattern on {0} vertices exceeds the detection limit of {1}")]
    PatternTooLarge(usize, usize),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("set is not homogeneous")]
    NotHomogeneous,
    #[error("set is trivial (size <= 1 or the whole vertex set)")]
    TrivialSet,
    #[error("tournament is not in the requested class: {0}")]
    NotInClass(String),
    #[error("no polynomial class applies and the instance is too large for the oracle")]
    Unsupported,
    #[error("tournament is transitive; no cyclic triangle to seed the partition")]
    NoTriangle,
    #[error("tri-partition is invalid: {0}")]
    InvalidPartition(String),
    #[error("labeling does not satisfy the arc rule: {0}")]
    BadLabeling(String),
    #[error("negative weight at vertex {0}")]
    NegativeWeight(usize),
    #[error("weight count {0} does not match vertex count {1}")]
    WeightCount(usize, usize),
    #[error("reduction identity violated: mis={mis} offset={offset} tau={tau}")]
    IdentityViolation { mis: usize, offset: usize, tau: usize },
    #[error("reduction freeness violated: {0}")]
    FreenessViolation(String),
    #[error("graph has a loop at vertex {0}")]
    GraphLoop(usize),
    #[error("duplicate edge {{{0},{1}}}")]
    DuplicateEdge(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
