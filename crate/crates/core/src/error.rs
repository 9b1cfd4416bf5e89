use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid Lie type: {0}")]
    InvalidLieType(String),
    #[error("label length {got} does not match rank {want}")]
    RankMismatch { got: usize, want: usize },
    #[error("simple-root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("weight is not dominant: {0:?}")]
    NotDominant(Vec<i64>),
    #[error("orbit size exceeds cap {cap}")]
    OrbitCapExceeded { cap: usize },
    #[error("negative level {0}")]
    NegativeLevel(i64),
    #[error("weight outside the level-{level:?} alcove: {labels:?}")]
    OutsideAlcove { labels: Vec<i64>, level: Vec<i64> },
    #[error("character table would exceed the memory budget of {budget} entries (needed more at grade {grade}); raise RunConfig::max_character_entries")]
    CharacterBudget { budget: usize, grade: usize },
    #[error("alcove size {size} exceeds configured bound {bound}")]
    AlcoveTooLarge { size: usize, bound: usize },
    #[error("deleting node {node} does not leave a semisimple root subsystem")]
    BadNodeDeletion { node: usize },
    #[error("kept nodes do not form a diagram of type {0}")]
    DiagramMismatch(String),
    #[error("Dynkin index is not a positive integer (got {0}); embedding data is corrupt")]
    NonIntegerIndex(String),
    #[error("embedding is not conformal at level {0:?}")]
    NotConformal(Vec<i64>),
    #[error("negative residual multiplicity {mult} at weight {labels:?}; restriction data is corrupt or the embedding is not conformal")]
    NegativeResidue { labels: Vec<i64>, mult: i64 },
    #[error("residual weight {labels:?} is not dominant; restriction data is corrupt")]
    ResidueNotDominant { labels: Vec<i64> },
    #[error("branching shift {shift} disagrees with trace-anomaly difference {expected}")]
    ShiftMismatch { shift: u64, expected: String },
    #[error("branched weight {labels:?} lies outside the level-{level:?} alcove of the subalgebra")]
    BranchOutsideAlcove { labels: Vec<i64>, level: Vec<i64> },
    #[error("S-matrix fails {what} by {deviation:.3e} (tolerance {tol:.1e}); try a higher precision mode")]
    SMatrixNumeric { what: &'static str, deviation: f64, tol: f64 },
    #[error("Verlinde sum {value} is not within {tol} of an integer")]
    NonIntegerDimension { value: String, tol: f64 },
    #[error("unknown embedding spec '{0}'")]
    UnknownEmbedding(String),
    #[error("unknown strange-duality pair '{0}'")]
    UnknownPair(String),
    #[error("subgroup is not isotropic: pairing of {0:?} and {1:?} is non-trivial")]
    NotIsotropic(Vec<u64>, Vec<u64>),
    #[error("phases do not define a homomorphism on the subgroup")]
    LiftNotHomomorphism,
    #[error("tensor is not invariant under the lifted action")]
    SigmaNotInvariant,
    #[error("projector trace {0} is not a non-negative integer")]
    NonIntegerTrace(String),
    #[error("invalid data file: {0}")]
    InvalidData(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
