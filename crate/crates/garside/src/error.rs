use thiserror::Error;

/// Errors raised across the library.
///
/// Several variants are meaningful negative answers rather than failures
/// (`NotPositive`, `NotConjugate`, `NotFound`); callers match on them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported Coxeter type `{0}`")]
    UnsupportedType(String),
    #[error("operands come from different Coxeter systems ({0} and {1})")]
    MixedSystems(String, String),
    #[error("generator index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("group has more than {0} elements")]
    GroupTooLarge(usize),
    #[error("Poincare polynomial does not factor into q-integers")]
    FactorizationFailed,
    #[error("braid is not positive")]
    NotPositive,
    #[error("braid is not a root of the full twist")]
    NotARoot,
    #[error("enumeration exceeds the bound of {0} braids")]
    EnumerationTooLarge(usize),
    #[error("search exceeded the budget of {0} states")]
    StateBudgetExceeded(usize),
    #[error("no morphism found")]
    NotFound,
    #[error("chain broken at step {0}: conjugator does not left-divide")]
    ChainBroken(usize),
    #[error("budget of {0} exceeded")]
    BudgetExceeded(usize),
    #[error("braids are not conjugate")]
    NotConjugate,
    #[error("support criterion and trace criterion disagree for {0}")]
    CriterionMismatch(String),
    #[error("hypothesis not met: {0}")]
    HypothesesNotMet(String),
    #[error("found {0} cuspidal classes in type A, expected exactly one")]
    NonCuspidalSpan(usize),
    #[error("invalid diagram automorphism: {0}")]
    InvalidAutomorphism(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
