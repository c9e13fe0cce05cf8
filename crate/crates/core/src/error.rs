use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} exceeds 2^31 - 1")]
    ModulusTooLarge(u64),
    #[error("F_{p} has no root of unity of order exactly {a_bar}: {a_bar} does not divide {p} - 1")]
    NoSuchRoot { a_bar: u64, p: u64 },
    #[error("{q} does not have multiplicative order {a_bar} in F_{p}")]
    NotPrimitiveRoot { q: u64, a_bar: u64, p: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("operands belong to different algebras")]
    SpecMismatch,
    #[error("expected {expected} coordinates, got {got}")]
    WrongArity { expected: usize, got: usize },
    #[error("lambda must be nonzero")]
    ZeroLambda,
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),
    #[error("varieties live in different ambient spaces")]
    AmbientMismatch,
    #[error("need at least {needed} Betti numbers, got {got}")]
    InsufficientData { needed: usize, got: usize },
    #[error("precondition violated: {clause}")]
    PreconditionViolated { clause: String },
    #[error("field unsuitable: {0}")]
    FieldUnsuitable(String),
    #[error("malformed data: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
