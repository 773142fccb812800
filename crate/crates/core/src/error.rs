use thiserror::Error;

use crate::linalg::LinalgError;
use crate::scalar::{FieldSpec, ScalarError};

/// Every failure the library reports. Mathematical findings (a failed
/// axiom, a missing certificate) and input problems share one type;
/// [`Error::is_input_error`] tells them apart.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),

    #[error("not associative at ({i}, {j}, {l})")]
    NotAssociative { i: String, j: String, l: String },
    #[error("unit law fails at {0}")]
    BadUnit(String),
    #[error("duplicate basis label {0}")]
    DuplicateLabel(String),
    #[error("unknown basis label {0}")]
    UnknownLabel(String),
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: FieldSpec, found: FieldSpec },
    #[error("carrier mismatch: {0}")]
    CarrierMismatch(String),
    #[error("not a trace: tau({i}*{j}) != tau({j}*{i})")]
    NotATrace { i: String, j: String },
    #[error("not a derivation: Leibniz rule fails at ({i}, {j})")]
    NotADerivation { i: String, j: String },
    #[error("rewriting fuel {fuel} exhausted while reducing {word}")]
    FuelExhausted { fuel: usize, word: String },

    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("not a groupoid: {0}")]
    NotAGroupoid(String),
    #[error("not an action: alpha({0}) is not a unital automorphism")]
    NotAnAction(String),
    #[error("not a homomorphism: alpha({g}) alpha({h}) != alpha({g}{h})")]
    NotAHomomorphism { g: String, h: String },
    #[error("{p} and {q} are not coprime")]
    NotCoprime { p: i64, q: i64 },
    #[error("not a Hochschild 2-cocycle: associativity of the extension fails at ({a}, {b}, {c})")]
    NotACocycle { a: String, b: String, c: String },

    #[error("degree {degree} needs {size} columns, above the size cap {cap}")]
    DegreeTooLarge { degree: usize, size: usize, cap: usize },
    #[error("methods disagree: {0}")]
    MethodDisagreement(String),
    #[error("element is not invertible")]
    NotInvertible,
    #[error("derivations not closed under bracket: [{i}, {j}] leaves the span")]
    NotClosedUnderBracket { i: usize, j: usize },

    #[error("not cyclic at {0:?}")]
    NotCyclic(Vec<String>),
    #[error("not closed (b phi != 0) at {0:?}")]
    NotClosed(Vec<String>),
    #[error("required certificate is missing")]
    NoCertificate,
    #[error("matrix is not idempotent")]
    NotIdempotent,
    #[error("cochain has not been verified cyclic")]
    NotVerified,
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("group cocycle not normalized at {0:?}")]
    NotNormalized(Vec<String>),
    #[error("group cocycle identity fails at {0:?}")]
    NotAGroupCocycle(Vec<String>),
    #[error("trace not invariant: tau(D({0})) != 0")]
    NotInvariant(String),

    #[error("unknown gallery entry {0}")]
    UnknownEntry(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    /// Malformed or unusable input, as opposed to a failed mathematical check.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Scalar(ScalarError::Parse { .. } | ScalarError::InvalidField(_))
                | Error::Linalg(LinalgError::ShapeMismatch(_))
                | Error::DuplicateLabel(_)
                | Error::UnknownLabel(_)
                | Error::UnknownEntry(_)
                | Error::Parse(_)
                | Error::Invalid(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
