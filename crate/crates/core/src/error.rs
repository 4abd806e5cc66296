use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rows {0:?} are not weakly decreasing")]
    NotAPartition(Vec<u32>),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("weight {0} is not in the weight lattice of its type")]
    NotInLattice(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("independent computations disagree: {0}")]
    Mismatch(String),
    #[error("spectral sequence may not degenerate: {0}")]
    Indeterminate(String),
    #[error("counterexample: {0}")]
    Counterexample(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err($crate::error::Error::Precondition(format!($($arg)+)));
        }
    };
}
pub(crate) use ensure;
