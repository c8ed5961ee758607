use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no generators given")]
    EmptyGenerators,
    #[error("generator {0} is not positive")]
    NonPositiveGenerator(i64),
    #[error("generators have gcd {0}")]
    GcdNotOne(i64),
    #[error("{0} is not a nonzero element of the semigroup")]
    NotAMember(i64),
    #[error("ideals live over different semigroups")]
    BaseMismatch,
    #[error("ideal must contain the ring and lie inside the nonnegative integers")]
    NotUnitary,
    #[error("the submodule is not contained in the module")]
    NotContained,
    #[error("the ideal does not annihilate the quotient")]
    DoesNotAnnihilate,
    #[error("not an m-primary ideal of the ring")]
    NotMPrimary,
    #[error("not a proper nonzero ideal of the ring")]
    NotProperIdeal,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("consistency check `{check}` failed: {detail}")]
    ConsistencyFailure { check: String, detail: String },
    #[error("expected exactly three minimal generators, found {0}")]
    NotThreeGenerated(usize),
    #[error("the semigroup is symmetric")]
    SymmetricInput,
    #[error("{multiple}*{generator} has {count} representations by the other generators")]
    NonUniqueRepresentation {
        generator: i64,
        multiple: i64,
        count: usize,
    },
    #[error("parameters out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("the semigroup is the whole of the nonnegative integers")]
    Trivial,
    #[error("no Gorenstein ring reached within {0} steps")]
    StepCapExceeded(usize),
}

impl Error {
    pub(crate) fn consistency(check: &str, detail: impl Into<String>) -> Self {
        Error::ConsistencyFailure {
            check: check.to_string(),
            detail: detail.into(),
        }
    }

    /// True for errors that come from bad user input rather than from a
    /// broken internal invariant.
    pub fn is_input_error(&self) -> bool {
        !matches!(
            self,
            Error::ConsistencyFailure { .. }
                | Error::NonUniqueRepresentation { .. }
                | Error::StepCapExceeded(_)
        )
    }
}
