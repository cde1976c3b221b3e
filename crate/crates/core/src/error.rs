use thiserror::Error;

use crate::operator::OperatorViolation;
use crate::topology::ViolationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("universe must be nonempty")]
    EmptyUniverse,
    #[error("parameter set must be nonempty")]
    EmptyParameters,
    #[error("duplicate symbol `{0}`")]
    DuplicateSymbol(String),
    #[error("universe has {0} elements, at most 64 are supported")]
    UniverseTooLarge(usize),
    #[error("{0} not in universe")]
    NotInUniverse(String),
    #[error("{0} is not a parameter")]
    UnknownParameter(String),
    #[error("operands live over different contexts")]
    ContextMismatch,
    #[error("grade {0} lies outside [0, 1]")]
    GradeOutOfRange(String),
    #[error("point grade must be positive")]
    ZeroAlpha,
    #[error("family must be nonempty")]
    EmptyFamily,
    #[error("expected {expected} parameter entries, found {found}")]
    ParameterCount { expected: usize, found: usize },
    #[error("element index {index} out of range for a universe of {size}")]
    ElementOutOfRange { index: usize, size: usize },
    #[error("map is not total: {0}")]
    InvalidMap(String),
    #[error("operation requires a nonempty FP-soft set")]
    EmptySet,
    #[error("FP-soft set has grade 0 with a nonempty approximation at parameter #{0}")]
    NotNormalized(usize),
    #[error("resolution must be positive")]
    ZeroResolution,
    #[error("carrier of {size} sets exceeds the bound of {bound}")]
    CarrierTooLarge { size: u128, bound: u128 },
    #[error("family of {size} members exceeds the exhaustive cap of {cap}")]
    FamilyTooLarge { size: usize, cap: usize },
    #[error("set is not on the resolution-{0} grade lattice")]
    OffLattice(u32),
    #[error("base member #{0} is not open")]
    NotOpen(usize),
    #[error("{0}")]
    Violation(ViolationReport),
    #[error("{0}")]
    OperatorAxiom(OperatorViolation),
    #[error("induced topology does not reproduce the operator at lattice set #{0}")]
    OperatorMismatch(usize),
    #[error("no {kind} named `{name}`")]
    UnknownName { kind: &'static str, name: String },
    #[error("unknown law `{0}`")]
    UnknownLaw(String),
}
