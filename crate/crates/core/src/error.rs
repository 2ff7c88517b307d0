use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown Cartan type `{0}`")]
    UnknownType(String),
    #[error("rank {rank} out of range for type {family}")]
    RankOutOfRange { family: String, rank: usize },
    #[error("invalid Cartan matrix: {0}")]
    InvalidGcm(String),
    #[error("Cartan matrix is not symmetrizable")]
    NotSymmetrizable,
    #[error("root system is not of finite type")]
    NonFinite,
    #[error("root system is not irreducible")]
    NotIrreducible,
    #[error("simple index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("elements belong to different Weyl groups")]
    GroupMismatch,
    #[error("{0} is not below {1} in the Bruhat order")]
    NotBelow(String, String),
    #[error("word {0} is not reduced")]
    NotReduced(String),
    #[error("length {0} exceeds the cap of {1}")]
    LengthCap(usize, usize),
    #[error("variable count mismatch: {0} vs {1}")]
    NvarsMismatch(usize, usize),
    #[error("zero weight")]
    ZeroWeight,
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at the evaluation point")]
    VanishingDenominator,
    #[error("mask length {0} does not match word length {1}")]
    MaskLength(usize, usize),
    #[error("numerator is not constant at {0}")]
    NonConstant(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
