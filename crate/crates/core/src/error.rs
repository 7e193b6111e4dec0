use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("term at q-exponent {n24}/24 lies at or beyond the truncation {trunc24}/24")]
    BeyondTruncation { n24: i64, trunc24: i64 },

    #[error(
        "bidegree mismatch: (weight2 {}, index2 {}) vs (weight2 {}, index2 {})",
        left.0, left.1, right.0, right.1
    )]
    BidegreeMismatch { left: (i64, i64), right: (i64, i64) },

    #[error("division by the zero series")]
    ZeroDivisor,

    #[error("divisor's lowest q-slice is not a single monomial")]
    NonMonomialDivisor,

    #[error("operator acts on pure q-series only, got index2 = {0}")]
    NonzeroIndex(i64),

    #[error("heat operator needs a positive index")]
    ZeroIndex,

    #[error("unknown form `{0}`")]
    UnknownForm(String),

    #[error("unknown ledger equation `{0}`")]
    UnknownEquation(String),

    #[error("Eisenstein series of weight {0} is not built in (use E4/E6 monomials)")]
    UnsupportedEisenstein(u32),

    #[error("theta dilation {0} is not supported (expected 1, 2 or 3)")]
    UnsupportedDilation(u32),

    #[error("truncation {got}/24 is below the required {need}/24")]
    InsufficientTruncation { need: i64, got: i64 },

    #[error("coordinates are only defined for modular (non-quasi) series")]
    QuasiModular,

    #[error("series is not in the span of the structure-theorem basis")]
    NotInSpan,

    #[error("truncation too small to determine coordinates uniquely")]
    Underdetermined,

    #[error("inconsistent Hodge data: {0}")]
    InconsistentHodgeData(String),

    #[error("elliptic genus: {0}")]
    UnsupportedGenusInput(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
