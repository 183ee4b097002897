//! Exact computations in Hecke algebras with unequal parameters over the
//! rank-2 affine Weyl groups, and a verification harness that checks
//! transcribed expansion ladders, congruences modulo the negative-degree
//! part, Condition-I5 tables, a-function values and cell partitions against
//! the engine, regime by regime.

pub mod cells;
pub mod coxeter;
pub mod hecke;
pub mod laurent;
pub mod plane;
pub mod quad;
pub mod suites;
pub mod tables;

use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum Error {
    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),
    #[error("generators s{0} and s{1} are conjugate (odd bond) but carry different weights")]
    OddBondWeightMismatch(usize, usize),
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("ball cap of {0} elements exceeded")]
    BallCap(usize),
    #[error("element outside the enumerated ball (radius too small): {0}")]
    NotInBall(String),
    #[error("no affine realization for this Coxeter matrix")]
    NoAffineRealization,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown regime id {0:?}")]
    UnknownRegime(String),
    #[error("symbol resolution failed: {0}")]
    Symbol(String),
    #[error("dataset error: {0}")]
    Dataset(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
