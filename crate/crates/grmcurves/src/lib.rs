//! Generalized Reed-Muller codes and Artin-Schreier curves over small finite
//! fields, in exact arithmetic.
//!
//! The crate works with a tower `F_p ⊂ F_q ⊂ F_{q^m}` (with `q = p^e`) and
//! provides:
//!
//! * [`field`] — exact tower arithmetic: traces, Frobenius, subfield
//!   embeddings, trace-zero subspaces and trace-dual bases;
//! * [`grm`] — generalized Reed-Muller codes `R_q(s, m)` via the evaluation
//!   map, word weights and subcode support weights;
//! * [`hierarchy`] — an explicit minimum-weight-subcode construction,
//!   the closed-form generalized Hamming weight `d_r`, and brute-force
//!   oracles;
//! * [`trace`] — trace forms `x ↦ Tr(R(x)) + c` and their canonicalization
//!   (cyclotomic reduction, trace-null term dropping, Artin-Schreier degree
//!   reduction);
//! * [`curve`] — Artin-Schreier curves `y^q − y = R(x)`, exhaustive point
//!   counting, genus, Hasse-Weil bounds and fibre products;
//! * [`families`] — explicit families of maximal curves and quotient-curve
//!   invariants;
//! * [`verify`] — a one-shot suite reproducing every numeric claim the
//!   constructions above are calibrated against.
//!
//! Everything is exact: no floating point, no probabilistic tests. Field
//! sizes are capped (default `2^20` elements) so exhaustive verification
//! loops stay cheap.

pub mod curve;
pub mod families;
pub mod field;
pub mod grm;
pub mod hierarchy;
pub mod trace;
pub mod verify;

pub use curve::{ArtinSchreierCurve, CurveReport, FibreProduct};
pub use field::{AlphaOrder, FieldElement, FieldTower, Subfield};
pub use grm::{Codeword, ReducedMultiPoly, SubcodeBasis};
pub use hierarchy::ExponentTuple;
pub use trace::TraceForm;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field size {size} exceeds the enumeration cap {cap}")]
    SizeCapExceeded { size: u128, cap: u128 },
    #[error("degree {degree} does not define a subfield of a degree-{top} extension")]
    InvalidSubfield { degree: usize, top: usize },
    #[error("elements do not form a basis")]
    NotABasis,
    #[error("basis words are linearly dependent")]
    DependentBasis,
    #[error("invalid parameter: {0}")]
    BadParameter(String),
    #[error("rank {r} exceeds the {count} available elements")]
    RankTooLarge { r: usize, count: usize },
    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("polynomial degree {degree} is divisible by the characteristic {p}")]
    DegreeNotCoprime { degree: u64, p: u64 },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
