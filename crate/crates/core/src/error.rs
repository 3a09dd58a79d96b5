use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Every failure the engine can report.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    // numeric kernel
    #[error("matrix is not Hermitian (asymmetry {0:e})")]
    NotHermitian(f64),
    #[error("Jacobi iteration did not converge after {0} sweeps")]
    NoConvergence(usize),
    #[error("matrix is singular (pivot {0:e})")]
    Singular(f64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid tolerance: {0}")]
    InvalidTolerance(String),

    // groups
    #[error("group order must be at least 1")]
    EmptyGroup,
    #[error("group of order {order} exceeds the limit {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("unknown catalog group '{0}'")]
    UnknownName(String),
    #[error("map is not a homomorphism: {0}")]
    NotHom(String),
    #[error("action is not a homomorphism into automorphisms: {0}")]
    ActionNotHom(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("element {0} is not central")]
    NotCentral(String),
    #[error("order mismatch: {0}")]
    OrderMismatch(String),
    #[error("projection is not surjective")]
    NotSurjective,
    #[error("element index {0} out of range")]
    NoSuchElement(usize),
    #[error("invalid section: {0}")]
    InvalidSection(String),

    // representations
    #[error("class algebra split was degenerate after {0} attempts")]
    DegenerateSplit(usize),
    #[error("isotypic split failed for character {0}")]
    SplitFailed(usize),
    #[error("no invertible intertwiner found")]
    IntertwinerFailed,

    // cocycles
    #[error("cocycle value is not a scalar multiple (residual {0:e})")]
    NonScalarResidual(f64),
    #[error("automorphism does not stabilize the representation")]
    NotStabilized,
    #[error("elements do not commute")]
    NotCommuting,
    #[error("invalid surface datum: {0}")]
    InvalidSurfaceDatum(String),
    #[error("stabilizer is not the whole quotient")]
    StabilizerNotFull,

    // census
    #[error("formula result {0} is not an integer")]
    NonIntegerResult(f64),
    #[error("kernel is not isomorphic to Q8")]
    KernelNotQ8,
    #[error("kernel is not an extraspecial 2-group")]
    NotExtraspecial,
    #[error("kernel is not one of S3, D4, A4")]
    KernelUnknown,
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}
