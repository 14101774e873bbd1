use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed cycle notation at byte {pos}: {msg}")]
    Malformed { pos: usize, msg: String },
    #[error("point {point} repeated in cycle list")]
    RepeatedPoint { point: usize },
    #[error("point {point} outside 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("empty generating set")]
    EmptyGenerators,
    #[error("{0} is not an odd prime")]
    NotOddPrime(usize),
    #[error("group of order {sub} is not a subgroup of the ambient group of order {ambient}")]
    NotSubgroup { sub: usize, ambient: usize },
    #[error("branch count {0} is odd: a product of an odd number of reflections is never 1")]
    OddBranchCount(usize),
    #[error("cycle type {0:?} is not a partition of {1}")]
    BadPartition(Vec<usize>, usize),
    #[error("ramification data has odd total contribution; no integer genus exists")]
    GenusParity,
    #[error("negative genus from ramification data")]
    NegativeGenus,
    #[error("branch count mismatch between the two factors: {0} vs {1}")]
    BranchMismatch(usize, usize),
    #[error("fiber product is disconnected; the inputs are degenerate")]
    DisconnectedProduct,
    #[error("dihedral profile violated: point {point} is fixed by {count} reflections")]
    ProfileViolation { point: usize, count: usize },
    #[error("exhaustive enumeration supported only for p <= {max}, got {got}")]
    DegreeTooLarge { got: usize, max: usize },
    #[error("gcd of (0, 0) is undefined")]
    GcdBothZero,
    #[error("Euclidean division step exhausted its search box; this indicates a bug")]
    DivisionStepExhausted,
    #[error("matrix is not idempotent")]
    NotIdempotent,
    #[error("idempotent is trivial (0 or 1)")]
    TrivialIdempotent,
    #[error("eigenmodule basis has non-unit determinant; this indicates a bug")]
    NonUnitBasis,
    #[error("enumeration budget exceeded: {needed} tuples > budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;
