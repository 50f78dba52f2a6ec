use thiserror::Error;

use crate::verdict::Verdict;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TableError {
    #[error("chain must contain at least one element")]
    EmptyChain,
    #[error("duplicate symbol `{0}`")]
    DuplicateSymbol(String),
    #[error("symbol `{0}` is reserved for the empty-tuple marker")]
    ReservedSymbol(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("tuple of length {len} exceeds max arity {max}")]
    ArityExceeded { len: usize, max: usize },
    #[error("max arity must be at least 1")]
    ZeroArity,
    #[error("entries not total at arity {arity}")]
    EntriesNotTotal { arity: usize },
    #[error("duplicate entry for arguments {args:?}")]
    DuplicateEntry { args: Vec<String> },
    #[error("value `{0}` is not in the codomain")]
    ValueOutOfCodomain(String),
    #[error("grid values must be strictly increasing")]
    GridNotIncreasing,
    #[error("input {value} lies outside the interval {interval}")]
    OutOfInterval { value: f64, interval: String },
    #[error("generated functions are not defined on the empty tuple")]
    EmptyTuple,
    #[error("evaluation produced a non-finite value at {args:?}")]
    NonFinite { args: Vec<f64> },
    #[error("binary table has {got} values, expected {expected}")]
    BinaryTableSize { got: usize, expected: usize },
    #[error("map does not cover symbol `{0}`")]
    MapNotTotal(String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CheckError {
    #[error("function is not an operation: codomain symbol `{0}` is not a domain element")]
    NotAnOperation(String),
    #[error("form {form} requires default value ε")]
    DefaultNotEpsilon { form: &'static str },
    #[error("codomain is not ordered: tuple {args:?} maps to ε")]
    CodomainNotOrdered { args: Vec<String> },
    #[error("unknown property `{0}`")]
    UnknownProperty(String),
    #[error("property selection is empty")]
    EmptySelection,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuasiInverseError {
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),
    #[error("invalid pin ({y} ↦ {x}): {reason}")]
    InvalidPin { y: String, x: String, reason: String },
    #[error(transparent)]
    Table(#[from] TableError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FactorizeError {
    #[error("precondition violated: {} does not hold", .0.property)]
    PreconditionViolated(Box<Verdict>),
    #[error("internal verification failed: {0}")]
    VerificationFailed(String),
    #[error("condition ({condition}) failed: {detail}")]
    ConditionFailed {
        condition: &'static str,
        detail: String,
    },
    #[error("H2 is not associative: {0}")]
    H2NotAssociative(String),
    #[error("F1 is not one-to-one: {0}")]
    F1NotOneToOne(String),
    #[error("g is not a quasi-inverse of F1: {0}")]
    GNotQuasiInverse(String),
    #[error(transparent)]
    Table(#[from] TableError),
    #[error(transparent)]
    Check(#[from] CheckError),
    #[error(transparent)]
    QuasiInverse(#[from] QuasiInverseError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FamilyError {
    #[error("{map} is not strictly monotone on the grid near {at}")]
    NotStrictlyMonotone { map: String, at: f64 },
    #[error("interval J is not of an admissible form: {0}")]
    JFormInvalid(String),
    #[error("phi(b) = {value}, expected 0")]
    PhiEndpointViolated { value: f64 },
    #[error("invalid parameters: {0}")]
    ParamsInvalid(String),
    #[error("relabel range is not convex in the codomain order: {0}")]
    RangeNotConvex(String),
    #[error("grid is not closed under the operation: {op}({x}, {y}) = {value}")]
    GridNotClosed {
        op: String,
        x: f64,
        y: f64,
        value: f64,
    },
    #[error("axiom `{axiom}` failed: {witness}")]
    AxiomFailed {
        axiom: &'static str,
        witness: String,
    },
    #[error("unknown catalog operation `{0}`")]
    UnknownOperation(String),
    #[error(transparent)]
    Table(#[from] TableError),
    #[error(transparent)]
    Factorize(#[from] FactorizeError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EnumerateError {
    #[error("chain size {chain_size} with max arity {max_arity} exceeds the limits (chain ≤ 3, arity ≤ 4); pass force to override")]
    LimitsExceeded { chain_size: usize, max_arity: usize },
    #[error("universe has {candidates} candidates, more than the cap of {cap}; pass force to override")]
    UniverseTooLarge { candidates: String, cap: u64 },
    #[error(transparent)]
    Table(#[from] TableError),
}
