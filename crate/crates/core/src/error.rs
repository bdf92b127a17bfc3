use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient mismatch: expected {expected} variables, found {found}")]
    AmbientMismatch { expected: usize, found: usize },

    #[error("too many variables: {0} (at most {max} supported)", max = crate::monomial::MAX_VARS)]
    TooManyVariables(usize),

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("colon by the zero ideal is undefined")]
    ColonByZero,

    #[error("ideal does not have finite colength")]
    InfiniteColength,

    #[error("length cap exceeded: more than {cap} standard monomials")]
    LengthCapExceeded { cap: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("the ring is zero (defining ideal is the unit ideal)")]
    ZeroRing,

    #[error("element is zero in the ring")]
    ZeroElement,

    #[error("not a system of parameters: {0}")]
    NotParameterSystem(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("search exhausted: {0}")]
    SearchExhausted(String),

    #[error("prime {prime} too small for an algebra of dimension {dim}")]
    PrimeTooSmall { prime: u64, dim: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("endomorphism does not commute with the module action")]
    NotInCommutant,

    #[error("algebra is not commutative")]
    NonCommutative,

    #[error("cap exceeded: {0}")]
    CapExceeded(String),

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Internal errors indicate a defect; everything else is a rejected input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}
