use thiserror::Error;

use crate::ring::RingDesc;

/// Errors produced by the arithmetic, search and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: RingDesc, right: RingDesc },

    #[error("matrix is not unimodular (det = {det})")]
    NotUnimodular { det: String },

    #[error("elementary move with t = 0")]
    InvalidMove,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("ring {ring} is out of scope: {reason}")]
    OutOfScopeRing { ring: RingDesc, reason: String },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
