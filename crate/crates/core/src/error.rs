use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("undefined resultant")]
    UndefinedResultant,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("not t-adically regular")]
    NotTAdicallyRegular,
    #[error("irregular at origin: denominator vanishes at t = x = 0")]
    IrregularAtOrigin,
    #[error("degree {degree} in {var} exceeds the cap {cap}")]
    DegreeCap {
        var: &'static str,
        degree: usize,
        cap: usize,
    },
    #[error("invalid q parameter {0}: need q != 0 and |q| != 1")]
    InvalidQ(String),
    #[error("operator kinds differ")]
    KindMismatch,
    #[error("division by the zero operator")]
    ZeroOperator,
    #[error("classify requires irreducible factor")]
    ReducibleFactor,
    #[error("polynomial is not squarefree in {0}")]
    NotSquarefree(&'static str),
    #[error("no telescoper exists")]
    NoTelescoper { obstructions: Vec<String> },
    #[error("order bound exceeded: max order {max_order}, required bound {bound}")]
    OrderBoundExceeded { max_order: usize, bound: usize },
    #[error("characterization requires algebraic solutions; use witness_for_operator instead")]
    NeedsAlgebraicSolutions,
    #[error("no rational solution found")]
    NoRationalSolution,
    #[error("truncation too short: {have} coefficients, need at least {need}")]
    TruncationTooShort { have: usize, need: usize },
    #[error("word length {n} over the enumeration cap {cap}")]
    WordLengthCap { n: usize, cap: usize },
    #[error("{0}")]
    InvalidInput(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
