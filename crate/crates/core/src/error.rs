use alloc::string::String;

/// Errors raised by the algebra core.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("scalars belong to different fields")]
    FieldMismatch,
    #[error("operation requires a finite field")]
    InfiniteField,
    #[error("modulus {0} is not prime")]
    NonPrimeModulus(u64),
    #[error("modulus {0} exceeds the supported range (< 2^32)")]
    ModulusTooLarge(u64),
    #[error("invalid scalar literal `{0}`")]
    InvalidScalar(String),
    #[error("invalid generator set: {0}")]
    InvalidGenerators(String),
    #[error("polynomial uses generators outside the generator set")]
    GeneratorSetMismatch,
    #[error("subspaces live in ambient spaces of different dimension ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("invalid skew matrix: {0}")]
    InvalidSkewMatrix(String),
    #[error("relation is not homogeneous")]
    InhomogeneousRelation,
    #[error("relation has degree 0")]
    ConstantRelation,
    #[error("elements to eliminate are linearly dependent")]
    DependentElements,
    #[error("elements to eliminate must be homogeneous of degree 1 in weight-1 generators")]
    NotDegreeOne,
    #[error("relation of degree {relation} exceeds truncation degree {truncation}")]
    TruncationTooSmall { relation: u32, truncation: u32 },
    #[error("degree {degree} exceeds truncation degree {truncation}")]
    DegreeExceedsTruncation { degree: u32, truncation: u32 },
    #[error("point is not a character of the algebra")]
    NotACharacter,
    #[error("search space of {required} candidates exceeds budget {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("bracket letter index coincides with the distinguished generator")]
    DistinguishedIndexClash,
    #[error("input polynomial is not homogeneous")]
    InhomogeneousInput,
    #[error("bracket machinery requires every generator to have degree 1")]
    NonUnitWeight,
    #[error("decomposition is zero")]
    ZeroDecomposition,
    #[error("element is not homogeneous")]
    NotHomogeneous,
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
