//! Finite, truncated models of variadic functions `F: X* → Y` with
//! exhaustive checkers for associativity, preassociativity and the
//! idempotence and order notions around them.

pub mod chain;
pub mod checks;
pub mod error;
pub mod factorize;
pub mod families;
pub mod generated;
pub mod quasi_inverse;
pub mod real;
pub mod space;
pub mod table;
pub mod universe;
pub mod verdict;

pub use chain::{Chain, TupleKey, EPSILON};
pub use error::{
    CheckError, EnumerateError, FactorizeError, FamilyError, QuasiInverseError, TableError,
};
pub use quasi_inverse::{canonical_quasi_inverse, is_quasi_inverse, right_inverses, FiniteMap};
pub use table::{BinaryTable, TableFn, Value};
pub use verdict::{Property, PropertySelection, Verdict, Witness};
pub use factorize::{build_from_f1_h2, extend_unary_binary, factorize, recursive_eval, Factorization};
pub use families::{
    lift_tnorm, make_ling, make_median_family, make_quasi_sum, make_variadic_seed, seed_table,
    variadic_seed, MedianParams, SeedKind,
};
pub use generated::{eval_generated, tabulate, BinaryOp, GeneratedFn, Interval, RealMap};
pub use universe::{associative_operations, enumerate, sweep, Candidates, EnumerateRequest, Universe};
