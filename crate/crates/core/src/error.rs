use thiserror::Error;

/// Errors raised by the algebra kernel and everything built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomials live over different variable tables")]
    TableMismatch,
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("variable `{0}` must have weight >= 1")]
    ZeroWeight(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable `{name}` has weight {left} in one table and {right} in the other")]
    WeightConflict { name: String, left: u32, right: u32 },
    #[error("relation #{0} is not homogeneous")]
    InhomogeneousRelation(usize),
    #[error("relation #{0} is zero")]
    ZeroRelation(usize),
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("expected an element of degree {expected}, got degree {found}")]
    WrongDegree { expected: u32, found: u32 },
    #[error("degree-{degree} piece has dimension {dim}; a one-dimensional top piece is required")]
    TopNotOneDimensional { degree: u32, dim: usize },
    #[error("rank-{rank} bundle has nonzero c_{degree}")]
    ExcessChernClass { rank: u32, degree: u32 },
    #[error("sub-bundle rank {sub} exceeds total rank {total}")]
    RankUnderflow { sub: u32, total: u32 },
    #[error("exterior power {k} out of range for rank {rank}")]
    WedgeOutOfRange { k: u32, rank: u32 },
    #[error("guard exceeded: {0}")]
    Guard(String),
    #[error("inconsistent linear system: {0}")]
    Inconsistent(String),
    #[error("classes live on different Hirzebruch surfaces F_{0} and F_{1}")]
    SurfaceMismatch(u32, u32),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
