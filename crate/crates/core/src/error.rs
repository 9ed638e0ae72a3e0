use thiserror::Error;

/// Every failure the kernel can report. Each variant has a stable
/// machine-readable code (see [`AlgError::code`]) used by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("minimal polynomial is reducible: {0}")]
    ReduciblePolynomial(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("structure constants are not associative at basis triple ({0}, {1}, {2})")]
    NonAssociative(usize, usize, usize),
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("subspace is not a two-sided ideal: {0}")]
    NotIdeal(String),
    #[error("subspace is not closed under multiplication: {0}")]
    NotASubalgebra(String),
    #[error("the field is not supported by this analysis: {0}")]
    UnsupportedField(String),
    #[error("algebra is not semisimple")]
    NotSemisimple,
    #[error("component is not split over the base field")]
    NotSplit,
    #[error("component is not simple")]
    NotSimple,
    #[error("algebra is not matricial: {0}")]
    NotMatricial(String),
    #[error("element is not regular (x z x = x has no solution)")]
    NotRegularElement,
    #[error("linear system infeasible: {0}")]
    InfeasibleSystem(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("element is not a unit")]
    NotAUnit,
    #[error("subalgebra is not a complement of the ideal: {0}")]
    NotASplitting(String),
    #[error("subalgebra and ideal are not complementary: {0}")]
    NotAComplement(String),
    #[error("algebra has no identity element")]
    NotUnital,
    #[error("T^op (x) T has nonzero radical: the subalgebra is not separable")]
    NotSeparable,
    #[error("certificate missing: {0}")]
    CertificateMissing(String),
    #[error("unsupported parameters: {0}")]
    UnsupportedParameters(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl AlgError {
    pub fn code(&self) -> &'static str {
        use AlgError::*;
        match self {
            NotPrime(_) => "NotPrime",
            ReduciblePolynomial(_) => "ReduciblePolynomial",
            Unsupported(_) => "Unsupported",
            DivisionByZero => "DivisionByZero",
            FieldMismatch(_) => "FieldMismatch",
            DimensionMismatch(_) => "DimensionMismatch",
            Parse(_) => "ParseError",
            NonAssociative(..) => "NonAssociative",
            NotIdempotent => "NotIdempotent",
            NotIdeal(_) => "NotIdeal",
            NotASubalgebra(_) => "NotASubalgebra",
            UnsupportedField(_) => "UnsupportedField",
            NotSemisimple => "NotSemisimple",
            NotSplit => "NotSplit",
            NotSimple => "NotSimple",
            NotMatricial(_) => "NotMatricial",
            NotRegularElement => "NotRegularElement",
            InfeasibleSystem(_) => "InfeasibleSystem",
            PreconditionFailed(_) => "PreconditionFailed",
            NotAUnit => "NotAUnit",
            NotASplitting(_) => "NotASplitting",
            NotAComplement(_) => "NotAComplement",
            NotUnital => "NotUnital",
            NotSeparable => "NotSeparable",
            CertificateMissing(_) => "CertificateMissing",
            UnsupportedParameters(_) => "UnsupportedParameters",
            Invariant(_) => "InvariantViolated",
        }
    }
}

pub type Result<T> = std::result::Result<T, AlgError>;

/// Shorthand for returning an internal invariant failure.
macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err($crate::error::AlgError::Invariant(format!($($arg)+)));
        }
    };
}
pub(crate) use ensure;
