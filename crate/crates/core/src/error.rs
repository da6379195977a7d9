use num_bigint::BigInt;
use thiserror::Error;

use crate::lattice::IntVec2;

#[derive(Debug, Error)]
pub enum Error {
    #[error("negative radicand")]
    NegativeRadicand,
    #[error("zero vector has no primitive representative")]
    ZeroVector,
    #[error("incompatible extensions: sqrt({0}) and sqrt({1})")]
    IncompatibleExtensions(BigInt, BigInt),
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("cone not pointed")]
    ConeNotPointed,
    #[error("degenerate interval")]
    DegenerateInterval,
    #[error("not a member")]
    NotMember,
    #[error("{0} is not a minimal generator; removal is not a semigroup")]
    NotMinimalGenerator(IntVec2),
    #[error("A is not removable (F minus A is not a semigroup); stuck at {0:?}")]
    NotRemovable(Vec<IntVec2>),
    #[error("{0} is not a positive multiple of the ray generator {1}")]
    NotRayMultiple(IntVec2, IntVec2),
    #[error("not finitely generated: {0}")]
    NotFinitelyGenerated(String),
    #[error("invalid body: {0}")]
    InvalidBody(String),
    #[error("ray outside body")]
    RayOutsideBody,
    #[error("height undefined for chord rays")]
    HeightUndefined,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors caused by malformed input text rather than by the math.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_) | Error::Io(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
