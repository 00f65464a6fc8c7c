use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid type: {0}")]
    InvalidType(String),
    #[error("invalid lattice: {0}")]
    InvalidLattice(String),
    #[error("wild ramification: characteristic {p} divides twist order {e}")]
    WildRamification { p: u64, e: u32 },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("echelonnage table mismatch for {0}")]
    TableMismatch(String),
    #[error("not comparable in the dominance order")]
    NotComparable,
    #[error("classes belong to different groups")]
    MixedGroups,
    #[error("enumeration cap exceeded ({0})")]
    CapExceeded(String),
    #[error("coweight is not dominant")]
    NotDominant,
    #[error("wrong type: {0}")]
    WrongType(String),
    #[error("no isogeny or product relation between the groups")]
    NoRelation,
    #[error("rank {0} exceeds the supported bound for affine Weyl computations")]
    RankCap(usize),
    #[error("length {0} exceeds the configured cap")]
    LengthCap(usize),
    #[error("element does not stabilize the facet")]
    NotStabilizing,
    #[error("unsupported level: {0}")]
    UnsupportedLevel(String),
    #[error("not realizable: {0}")]
    NotRealizable(String),
    #[error("not absolutely almost simple: {0}")]
    NotAlmostSimple(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CapExceeded(_) | Error::RankCap(_) | Error::LengthCap(_) => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
