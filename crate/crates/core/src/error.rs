use thiserror::Error;

use crate::exactla::Field;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: Field, right: Field },
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),
    #[error("denominator is not invertible in {0}")]
    NotInvertible(Field),
    #[error("algebra has no unit element")]
    NotUnital,
    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,
    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),
    #[error("unsupported characteristic {0} for this constructor")]
    BadCharacteristic(u64),
    #[error("ideal is not H-stable")]
    NotHStable,
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("idempotent is not a left identity on the right ideal it generates")]
    NotRightIdealUnit,
    #[error("invalid subgroup: {0}")]
    BadSubgroup(String),
    #[error("characteristic {characteristic} divides subgroup order {order}")]
    CharDividesOrder { characteristic: u64, order: usize },
    #[error(
        "radical of a {dim}-dimensional algebra over {field} is out of reach: \
         characteristic <= dimension and brute force is capped at dim {dim_cap}, field size {field_cap}"
    )]
    UnsupportedCharacteristic {
        field: Field,
        dim: usize,
        dim_cap: usize,
        field_cap: u64,
    },
    #[error("operation needs a finite field, got {0}")]
    FieldNotFinite(Field),
    #[error("dimension {dim} exceeds enumeration cap {cap}")]
    DimensionTooLarge { dim: usize, cap: usize },
    #[error("axiom violation: {0}")]
    AxiomViolation(String),
    #[error("not a module: {0}")]
    NotAModule(String),
    #[error("zero module")]
    ZeroModule,
    #[error("enumeration exceeded {0} subspaces")]
    EnumerationLimit(usize),
}
