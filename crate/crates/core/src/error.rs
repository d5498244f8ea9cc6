use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty polynomial text")]
    EmptyInput,
    #[error("malformed coefficient `{0}`")]
    MalformedToken(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("interval endpoint {0} is a root")]
    EndpointRoot(String),
    #[error("need {needed} Laurent coefficients, have {have}")]
    InsufficientCoefficients { needed: usize, have: usize },
    #[error("no Stieltjes expansion: degree pattern breaks at step {step}")]
    NoStieltjesExpansion { step: usize },
    #[error("minor formula undefined: Hurwitz minor {index} vanishes")]
    FormulaUndefined { index: usize },
    #[error("indeterminate: {0}")]
    Indeterminate(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
