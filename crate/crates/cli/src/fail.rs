use serde::Serialize;

/// A diagnostic together with its exit code.
#[derive(Debug, Serialize)]
pub struct Failure {
    #[serde(skip)]
    pub exit_code: i32,
    pub error: &'static str,
    pub message: String,
}

impl Failure {
    pub fn invalid(error: &'static str, message: impl Into<String>) -> Self {
        Self { exit_code: 2, error, message: message.into() }
    }

    pub fn computation(error: &'static str, message: impl Into<String>) -> Self {
        Self { exit_code: 1, error, message: message.into() }
    }
}

impl From<qci::Error> for Failure {
    fn from(e: qci::Error) -> Self {
        use qci::Error as E;
        let kind = match &e {
            E::NotPrime(_) => "NotPrime",
            E::ModulusTooLarge(_) => "ModulusTooLarge",
            E::NoSuchRoot { .. } => "FieldUnsuitable",
            E::NotPrimitiveRoot { .. } => "NotPrimitiveRoot",
            E::InvalidParameter(_) => "InvalidParameter",
            E::WrongArity { .. } => "WrongArity",
            E::ZeroLambda => "ZeroLambda",
            E::InvalidModule(_) => "InvalidModule",
            E::InvalidAutomorphism(_) => "InvalidAutomorphism",
            E::InsufficientData { .. } => "InsufficientData",
            E::PreconditionViolated { .. } => "PreconditionViolated",
            E::FieldUnsuitable(_) => "FieldUnsuitable",
            E::Malformed(_) => "Malformed",
            E::DivisionByZero => return Self::computation("DivisionByZero", e.to_string()),
            E::SpecMismatch => return Self::computation("SpecMismatch", e.to_string()),
            E::AmbientMismatch => return Self::computation("AmbientMismatch", e.to_string()),
        };
        Self::invalid(kind, e.to_string())
    }
}
