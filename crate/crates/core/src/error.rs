use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    #[error("elements live in different algebras")]
    AlgebraMismatch,
    #[error("morphism targets differ")]
    TargetMismatch,
    #[error("degree mismatch for {what}: expected {expected}, found {found}")]
    DegreeMismatch { what: String, expected: u32, found: u32 },
    #[error("{0} is not homogeneous")]
    NotHomogeneous(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("missing image for generator `{0}`")]
    MissingImage(String),
    #[error("d^2 != 0 on generator `{0}`")]
    DifferentialNotSquareZero(String),
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    #[error("{0}")]
    InvalidDiagram(String),
    #[error("odd-degree class cannot be part of a regular sequence (degree {0})")]
    OddDegreeClass(u32),
    #[error("class degree {0} is not a positive even degree")]
    NonPositiveDegree(u32),
    #[error("fiber not in catalog: {0}")]
    UnknownFiber(String),
    #[error("not an orbifold input: {0}")]
    NotOrbifold(String),
    #[error("fiber annotation `{annotated}` disagrees with computed type `{computed}`")]
    InconsistentFiber { annotated: String, computed: String },
    #[error("Weyl order {numerator} is not divisible by {denominator}")]
    WeylNotDivisible { numerator: u64, denominator: u64 },
    #[error("{field}: {source}")]
    Field { field: String, source: Box<Error> },
}

impl Error {
    pub fn in_field(self, field: impl Into<String>) -> Self {
        Error::Field { field: field.into(), source: Box::new(self) }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        let full = e.to_string();
        let suffix = format!(" at line {} column {}", e.line(), e.column());
        let message = full.strip_suffix(&suffix).unwrap_or(&full).to_string();
        Error::Json { line: e.line(), column: e.column(), message }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
