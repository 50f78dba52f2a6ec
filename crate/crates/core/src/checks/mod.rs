//! Exhaustive property checkers over truncated tables.
//!
//! Every quantifier ranges over tuples whose total length, including
//! tuples produced by substituting a value back in, stays within the
//! table's max arity. Each checker returns a [`Verdict`] whose witness is
//! the smallest counterexample under (total length, symbols, split).

mod assoc;
mod idempotence;
mod order;
mod preassoc;
mod standard;

use std::collections::BTreeMap;

pub use assoc::{check_associative, check_associative_binary, AssocForm};
pub use idempotence::{
    check_binary_diagonal_fixed, check_idempotence_suite, check_idempotent,
    check_range_idempotent, check_replication_invariant, check_replication_preinvariant,
    check_unarily_idempotent, check_unarily_quasi_range_idempotent,
    check_unarily_range_idempotent, check_unary_part_idempotent,
};
pub use order::{
    check_convex_sections, check_monotone, check_order_properties, check_symmetric, Direction,
};
pub use preassoc::{check_preassociative, PreassocForm};
pub use standard::{check_epsilon_standard, check_standard};

use crate::error::CheckError;
use crate::table::{TableFn, Value};
use crate::verdict::{Property, PropertySelection, Verdict};

pub(crate) fn require_operation(f: &TableFn) -> Result<(), CheckError> {
    match f.non_operation_symbol() {
        None => Ok(()),
        Some(s) => Err(CheckError::NotAnOperation(s.to_string())),
    }
}

/// Tuple produced by substituting a value into argument position:
/// ε contributes nothing, a domain element contributes itself.
#[inline]
pub(crate) fn substituted(f: &TableFn, v: Value) -> Option<u32> {
    if v.is_epsilon() {
        None
    } else {
        Some(f.domain_of(v).expect("operation values are domain elements"))
    }
}

/// Decide a single property.
pub fn check_property(f: &TableFn, property: Property) -> Result<Verdict, CheckError> {
    match property {
        Property::Standard => Ok(check_standard(f)),
        Property::EpsilonStandard => Ok(check_epsilon_standard(f)),
        Property::AssociativeA1 => check_associative(f, AssocForm::A1),
        Property::AssociativeA2 => check_associative(f, AssocForm::A2),
        Property::AssociativeA3 => check_associative(f, AssocForm::A3),
        Property::PreassociativeP1 => Ok(check_preassociative(f, PreassocForm::P1)),
        Property::PreassociativeP2 => Ok(check_preassociative(f, PreassocForm::P2)),
        Property::UnarilyIdempotent => check_unarily_idempotent(f),
        Property::UnarilyRangeIdempotent => check_unarily_range_idempotent(f),
        Property::UnarilyQuasiRangeIdempotent => Ok(check_unarily_quasi_range_idempotent(f)),
        Property::RangeIdempotent => check_range_idempotent(f),
        Property::Idempotent => check_idempotent(f),
        Property::ReplicationInvariant => Ok(check_replication_invariant(f)),
        Property::ReplicationPreinvariant => Ok(check_replication_preinvariant(f)),
        Property::Nondecreasing => check_monotone(f, Direction::Nondecreasing),
        Property::Nonincreasing => check_monotone(f, Direction::Nonincreasing),
        Property::Symmetric => check_symmetric(f),
        Property::ConvexSections => check_convex_sections(f),
        Property::UnaryPartIdempotent => check_unary_part_idempotent(f),
        Property::BinaryDiagonalFixed => check_binary_diagonal_fixed(f),
        Property::AssociativeBinary => check_associative_binary(f),
    }
}

/// Decide every selected property, in selection order.
pub fn check_selection(
    f: &TableFn,
    selection: &PropertySelection,
) -> BTreeMap<Property, Result<Verdict, CheckError>> {
    selection.iter().map(|p| (p, check_property(f, p))).collect()
}

/// Convenience: does the property hold (errors count as "does not hold")?
pub fn holds(f: &TableFn, property: Property) -> bool {
    check_property(f, property).is_ok_and(|v| v.holds)
}
