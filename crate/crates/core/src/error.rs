use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Dynkin type: {0}")]
    InvalidType(String),
    #[error("not a root of {ty}: {coeffs:?}")]
    NotARoot { ty: String, coeffs: Vec<i64> },
    #[error("simple root a{index} has coefficient {coeff} in the highest root of {ty}; only coefficient 1 gives an abelian unipotent radical")]
    NotAbelian { ty: String, index: usize, coeff: i64 },
    #[error("index out of range: {0}")]
    Index(String),
    #[error("dimension mismatch: {0} vs {1}")]
    Dimension(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("non-integer eigenvalue of ad(h) on basis element {0}")]
    NonIntegral(usize),
    #[error("catalog: {0}")]
    Catalog(String),
    #[error("invalid spherical system: {0}")]
    System(String),
    #[error("color {0} is not positive")]
    NotPositive(String),
    #[error("missing data (catalog gap): {0}")]
    Gap(String),
}

pub type Result<T> = std::result::Result<T, Error>;
