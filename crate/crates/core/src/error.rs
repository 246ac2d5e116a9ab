use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank index {index} out of range for rank {rank}")]
    RankOutOfRange { index: usize, rank: usize },
    #[error("word letter {letter} out of range for rank {rank}")]
    LetterOutOfRange { letter: usize, rank: usize },
    #[error("flag {flag} out of range ({n_flags} flags)")]
    FlagOutOfRange { flag: usize, n_flags: usize },
    #[error("flag graph is not connected")]
    Disconnected,
    #[error("malformed flag graph: {0}")]
    MalformedGraph(String),
    #[error("face {face} is degenerate: {reason}")]
    DegenerateFace { face: usize, reason: String },
    #[error("non-manifold edge {{{u}, {w}}}: appears in {count} face(s), expected 2")]
    NonManifoldEdge { u: usize, w: usize, count: usize },
    #[error("faces do not form a connected surface")]
    DisconnectedSpec,
    #[error("expected {expected} flags, built {got}")]
    FlagCountMismatch { expected: usize, got: usize },
    #[error("flag graph is not orientable")]
    NonOrientable,
    #[error("lattice basis is degenerate (determinant 0)")]
    DegenerateBasis,
    #[error("quotient is not polytopal: {0}")]
    NonPolytopal(String),
    #[error("permutation degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid word: {0}")]
    InvalidWord(String),
}

pub type Result<T> = std::result::Result<T, Error>;
