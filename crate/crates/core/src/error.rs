use thiserror::Error;

use crate::approx::NoApproxWitness;
use crate::comma::YExactWitness;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("characteristic {0} is neither 0 nor prime")]
    InvalidField(u64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid document: {0}")]
    Invalid(String),
    #[error("unknown name: {0}")]
    Unresolved(String),
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("objects live over different algebras")]
    AlgebraMismatch,
    #[error("path algebra is not finite dimensional (no termination below length {0})")]
    NotFiniteDimensional(usize),
    #[error("operation needs a finite field")]
    FieldNotFinite,
    #[error("decomposition budget exceeded after {0} trials")]
    DecompositionBudgetExceeded(usize),
    #[error("enumeration budget exceeded: {0}")]
    EnumerationBudgetExceeded(String),
    #[error("isomorphism undecided after {0} trials")]
    IsoUndecided(usize),
    #[error("not triangular: {0}")]
    NotTriangular(String),
    #[error("extension closure did not stabilize within {0} rounds")]
    ClosureBudgetExceeded(usize),
    #[error("iteration cap {0} exceeded before stabilizing")]
    IterationCapExceeded(usize),
    #[error("no special precover: {0}")]
    NoSpecialPrecover(Box<NoApproxWitness>),
    #[error("no special preenvelope: {0}")]
    NoSpecialPreenvelope(Box<NoApproxWitness>),
    #[error("functor is not exact on the class: {0}")]
    PreconditionYExact(Box<YExactWitness>),
    #[error("functor is not compatible: {0}")]
    NotCompatible(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// Process exit code used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NoSpecialPrecover(_) | Error::NoSpecialPreenvelope(_) => 1,
            Error::PreconditionYExact(_)
            | Error::NotCompatible(_)
            | Error::Precondition(_)
            | Error::NotTriangular(_)
            | Error::FieldNotFinite
            | Error::AlgebraMismatch
            | Error::Unsupported(_) => 2,
            Error::DecompositionBudgetExceeded(_)
            | Error::EnumerationBudgetExceeded(_)
            | Error::IsoUndecided(_)
            | Error::ClosureBudgetExceeded(_)
            | Error::IterationCapExceeded(_)
            | Error::NotFiniteDimensional(_) => 3,
            Error::InvalidField(_)
            | Error::Parse(_)
            | Error::Invalid(_)
            | Error::Unresolved(_)
            | Error::Shape(_)
            | Error::Io { .. } => 4,
        }
    }
}
