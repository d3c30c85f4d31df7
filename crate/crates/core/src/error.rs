use thiserror::Error;

use crate::family::Violation;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid weights (n={n}, m={m}, k={k}): {reason}")]
    InvalidWeights { n: i64, m: i64, k: i64, reason: String },

    #[error("alpha {0} is outside [0, 1]")]
    AlphaOutOfRange(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("ambient weight vectors differ: {0} vs {1}")]
    AmbientMismatch(String, String),

    #[error("unsupported coefficient for this map: {0}")]
    UnsupportedCoefficient(String),

    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),

    #[error("operation needs a concrete family")]
    ConcreteOnly,

    #[error("concrete and telescoped F-values disagree at level {level}: {detail}")]
    ConcreteAbstractMismatch { level: usize, detail: String },

    #[error("psi_tau coefficients are not all equal; per-section degrees are not tracked")]
    UnequalTauCoefficients,

    #[error("invalid coefficients: {0}")]
    InvalidCoefficients(String),

    #[error("class is not of the boundary-functorial shape a*psi_sigma + b*delta_s + c*(psi_tau - delta): {0}")]
    ShapeNotFunctorial(String),

    #[error("no positivity case applies to (n={n}, m={m}, k={k})")]
    NoCaseApplies { n: u32, m: u32, k: u32 },

    #[error("c = {c} is outside the certified range {range}")]
    COutOfInterval { c: String, range: String },

    #[error("invalid family: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    InvalidFamily(Vec<Violation>),

    #[error("level {level} out of range 0..={max}")]
    LevelOutOfRange { level: usize, max: usize },

    #[error("underdetermined: {0}")]
    Underdetermined(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
