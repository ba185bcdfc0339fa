use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("sublattice not invariant: {0}")]
    SublatticeNotInvariant(String),

    #[error("not a Lie algebra endomorphism: bracket of basis pair ({0}, {1}) is not preserved")]
    NotEndomorphism(usize, usize),

    #[error("lattice not preserved: image of lattice generator {index} {reason}")]
    LatticeNotPreserved { index: usize, reason: String },

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("hypothesis not met ({citation}): {reason}")]
    HypothesisNotMet { citation: String, reason: String },

    #[error("theorem violation ({citation}): {reason}")]
    TheoremViolation { citation: String, reason: String },

    #[error("precision exhausted: certified error {achieved:e} exceeds budget {requested:e}")]
    Precision { achieved: f64, requested: f64 },

    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("stage `{stage}` failed: {source}")]
    Stage {
        stage: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn at_stage(self, stage: &str) -> Error {
        Error::Stage {
            stage: stage.to_string(),
            source: Box::new(self),
        }
    }

    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Error {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }

    /// Innermost error, looking through stage wrappers.
    pub fn root(&self) -> &Error {
        match self {
            Error::Stage { source, .. } => source.root(),
            e => e,
        }
    }
}
