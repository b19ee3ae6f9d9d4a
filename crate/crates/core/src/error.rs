use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown alternative `{0}`")]
    UnknownAlternative(String),
    #[error("invalid alternative label `{0}`")]
    InvalidLabel(String),
    #[error("duplicate alternative `{0}`")]
    DuplicateAlternative(String),
    #[error("invalid ballot: {0}")]
    InvalidBallot(String),
    #[error("invalid profile: {0}")]
    InvalidProfile(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("alternative sets differ")]
    AlternativeMismatch,
    #[error("scale factor must be positive")]
    ZeroScale,
    #[error("invalid margin matrix: {0}")]
    InvalidMargins(String),
    #[error("invalid ordinal margin graph: {0}")]
    InvalidGraph(String),
    #[error("{method}: Profile required")]
    ProfileRequired { method: &'static str },
    #[error("{0}: empty intersection")]
    EmptyIntersection(&'static str),
    #[error("ranked pairs tie explosion: {linearizations} linearizations exceed cap {cap}")]
    TieExplosion { linearizations: u128, cap: u128 },
    #[error("unknown method `{token}`; valid methods: {valid}")]
    UnknownMethod { token: String, valid: String },
    #[error("vertex count {0} outside supported range 2..=5")]
    UnsupportedSize(usize),
    #[error("parity violation: off-diagonal margins must share one parity")]
    ParityViolation,
    #[error("margin assignment must be positive and strictly increasing in rank")]
    NonMonotoneAssignment,
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("empty sample")]
    EmptySample,
    #[error("fixture verification failed: {0}")]
    Fixture(String),
    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
