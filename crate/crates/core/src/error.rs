use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("range error: {0}")]
    Range(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("{rule} not applicable: {hypothesis}")]
    NotApplicable { rule: String, hypothesis: String },
    #[error("dimension mismatch: expected V({expected}), got V({actual})")]
    Dimension { expected: usize, actual: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("unknown {kind}: {name}")]
    Unknown { kind: &'static str, name: String },
}

impl Error {
    pub(crate) fn range(msg: impl Into<String>) -> Self {
        Error::Range(msg.into())
    }

    pub(crate) fn not_applicable(rule: impl Into<String>, hypothesis: impl Into<String>) -> Self {
        Error::NotApplicable { rule: rule.into(), hypothesis: hypothesis.into() }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
