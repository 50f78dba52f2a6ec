//! Outcomes of property checks.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::chain::TupleKey;
use crate::error::CheckError;
use crate::table::{TableFn, Value};

/// Every property the checkers can decide.
///
/// The first eighteen variants form the selectable list; the remaining
/// ones are auxiliary conditions used by the structure theorems.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Property {
    #[serde(rename = "standard")]
    Standard,
    #[serde(rename = "epsilon_standard")]
    EpsilonStandard,
    #[serde(rename = "associative_A1")]
    AssociativeA1,
    #[serde(rename = "associative_A2")]
    AssociativeA2,
    #[serde(rename = "associative_A3")]
    AssociativeA3,
    #[serde(rename = "preassociative_P1")]
    PreassociativeP1,
    #[serde(rename = "preassociative_P2")]
    PreassociativeP2,
    #[serde(rename = "unarily_idempotent")]
    UnarilyIdempotent,
    #[serde(rename = "unarily_range_idempotent")]
    UnarilyRangeIdempotent,
    #[serde(rename = "unarily_quasi_range_idempotent")]
    UnarilyQuasiRangeIdempotent,
    #[serde(rename = "range_idempotent")]
    RangeIdempotent,
    #[serde(rename = "idempotent")]
    Idempotent,
    #[serde(rename = "replication_invariant")]
    ReplicationInvariant,
    #[serde(rename = "replication_preinvariant")]
    ReplicationPreinvariant,
    #[serde(rename = "nondecreasing")]
    Nondecreasing,
    #[serde(rename = "nonincreasing")]
    Nonincreasing,
    #[serde(rename = "symmetric")]
    Symmetric,
    #[serde(rename = "convex_sections")]
    ConvexSections,
    /// `F₁∘F₁ = F₁`.
    #[serde(rename = "unary_part_idempotent")]
    UnaryPartIdempotent,
    /// `F(F(x),F(x)) = F(x)` for every `x ∈ X`.
    #[serde(rename = "binary_diagonal_fixed")]
    BinaryDiagonalFixed,
    /// The binary part is associative (triple loop).
    #[serde(rename = "associative_binary")]
    AssociativeBinary,
}

impl Property {
    pub const SELECTABLE: [Property; 18] = [
        Property::Standard,
        Property::EpsilonStandard,
        Property::AssociativeA1,
        Property::AssociativeA2,
        Property::AssociativeA3,
        Property::PreassociativeP1,
        Property::PreassociativeP2,
        Property::UnarilyIdempotent,
        Property::UnarilyRangeIdempotent,
        Property::UnarilyQuasiRangeIdempotent,
        Property::RangeIdempotent,
        Property::Idempotent,
        Property::ReplicationInvariant,
        Property::ReplicationPreinvariant,
        Property::Nondecreasing,
        Property::Nonincreasing,
        Property::Symmetric,
        Property::ConvexSections,
    ];

    pub const AUXILIARY: [Property; 3] = [
        Property::UnaryPartIdempotent,
        Property::BinaryDiagonalFixed,
        Property::AssociativeBinary,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Standard => "standard",
            Property::EpsilonStandard => "epsilon_standard",
            Property::AssociativeA1 => "associative_A1",
            Property::AssociativeA2 => "associative_A2",
            Property::AssociativeA3 => "associative_A3",
            Property::PreassociativeP1 => "preassociative_P1",
            Property::PreassociativeP2 => "preassociative_P2",
            Property::UnarilyIdempotent => "unarily_idempotent",
            Property::UnarilyRangeIdempotent => "unarily_range_idempotent",
            Property::UnarilyQuasiRangeIdempotent => "unarily_quasi_range_idempotent",
            Property::RangeIdempotent => "range_idempotent",
            Property::Idempotent => "idempotent",
            Property::ReplicationInvariant => "replication_invariant",
            Property::ReplicationPreinvariant => "replication_preinvariant",
            Property::Nondecreasing => "nondecreasing",
            Property::Nonincreasing => "nonincreasing",
            Property::Symmetric => "symmetric",
            Property::ConvexSections => "convex_sections",
            Property::UnaryPartIdempotent => "unary_part_idempotent",
            Property::BinaryDiagonalFixed => "binary_diagonal_fixed",
            Property::AssociativeBinary => "associative_binary",
        }
    }

    /// True for properties whose definition compares values with domain
    /// elements or substitutes values back into tuples.
    pub fn needs_operation(self) -> bool {
        matches!(
            self,
            Property::AssociativeA1
                | Property::AssociativeA2
                | Property::AssociativeA3
                | Property::UnarilyIdempotent
                | Property::UnarilyRangeIdempotent
                | Property::RangeIdempotent
                | Property::Idempotent
                | Property::UnaryPartIdempotent
                | Property::BinaryDiagonalFixed
                | Property::AssociativeBinary
        )
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = CheckError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Property::SELECTABLE
            .iter()
            .chain(Property::AUXILIARY.iter())
            .copied()
            .find(|p| p.name() == s)
            .ok_or_else(|| CheckError::UnknownProperty(s.to_string()))
    }
}

/// A nonempty set of selectable properties.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertySelection(BTreeSet<Property>);

impl PropertySelection {
    pub fn new(props: impl IntoIterator<Item = Property>) -> Result<Self, CheckError> {
        let set: BTreeSet<Property> = props.into_iter().collect();
        if set.is_empty() {
            return Err(CheckError::EmptySelection);
        }
        if let Some(p) = set.iter().find(|p| !Property::SELECTABLE.contains(p)) {
            return Err(CheckError::UnknownProperty(p.name().to_string()));
        }
        Ok(PropertySelection(set))
    }

    pub fn all() -> Self {
        PropertySelection(Property::SELECTABLE.into_iter().collect())
    }

    pub fn iter(&self) -> impl Iterator<Item = Property> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, p: Property) -> bool {
        self.0.contains(&p)
    }
}

impl FromStr for PropertySelection {
    type Err = CheckError;

    /// Comma-separated property names.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let props = s
            .split(',')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<Property>, _>>()?;
        PropertySelection::new(props)
    }
}

/// One named tuple of a counterexample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessPart {
    pub name: String,
    pub tuple: Vec<String>,
}

/// A counterexample: the tuples involved and the values that disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub parts: Vec<WitnessPart>,
    pub values: Vec<(String, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip)]
    key: WitnessKey,
}

/// Ordering key: total length, then the concatenated symbols (chain
/// positions), then the split lengths.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct WitnessKey {
    total: usize,
    symbols: Vec<u32>,
    splits: Vec<usize>,
}

impl Witness {
    /// Start a witness from named tuples; the ordering key is derived from
    /// them.
    pub fn new(f: &TableFn, parts: &[(&str, &TupleKey)]) -> Self {
        let mut key = WitnessKey::default();
        for (_, t) in parts {
            key.total += t.len();
            key.symbols.extend_from_slice(t.items());
            key.splits.push(t.len());
        }
        Witness {
            parts: parts
                .iter()
                .map(|(name, t)| WitnessPart {
                    name: (*name).to_string(),
                    tuple: f.domain().render(t),
                })
                .collect(),
            values: Vec::new(),
            note: None,
            key,
        }
    }

    pub fn value(mut self, label: impl Into<String>, rendered: impl Into<String>) -> Self {
        self.values.push((label.into(), rendered.into()));
        self
    }

    pub fn value_of(self, f: &TableFn, label: impl Into<String>, v: Value) -> Self {
        let r = f.render(v).to_string();
        self.value(label, r)
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn part(&self, name: &str) -> Option<&[String]> {
        self.parts
            .iter()
            .find(|p| p.name == name)
            .map(|p| p.tuple.as_slice())
    }

    pub fn cmp_key(&self, other: &Witness) -> Ordering {
        self.key.cmp(&other.key)
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .parts
            .iter()
            .map(|p| format!("{}=({})", p.name, p.tuple.join(",")))
            .collect();
        let values: Vec<String> = self
            .values
            .iter()
            .map(|(l, v)| format!("{l}={v}"))
            .collect();
        write!(f, "{}", parts.join(" "))?;
        if !values.is_empty() {
            write!(f, "; {}", values.join(", "))?;
        }
        if let Some(n) = &self.note {
            write!(f, " [{n}]")?;
        }
        Ok(())
    }
}

/// Outcome of one property check at a fixed truncation arity.
///
/// `cases_checked` counts the quantifier instances that were evaluated
/// before the verdict was settled.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub property: Property,
    pub holds: bool,
    pub cases_checked: u64,
    pub witness: Option<Witness>,
    pub max_arity: usize,
}

impl Verdict {
    pub fn pass(property: Property, cases_checked: u64, max_arity: usize) -> Self {
        Verdict {
            property,
            holds: true,
            cases_checked,
            witness: None,
            max_arity,
        }
    }

    pub fn fail(property: Property, cases_checked: u64, max_arity: usize, witness: Witness) -> Self {
        Verdict {
            property,
            holds: false,
            cases_checked,
            witness: Some(witness),
            max_arity,
        }
    }

    pub(crate) fn from_search(
        property: Property,
        cases_checked: u64,
        max_arity: usize,
        witness: Option<Witness>,
    ) -> Self {
        match witness {
            None => Verdict::pass(property, cases_checked, max_arity),
            Some(w) => Verdict::fail(property, cases_checked, max_arity, w),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<32} {:<5} cases={:<8} N={}",
            self.property.name(),
            if self.holds { "holds" } else { "FAILS" },
            self.cases_checked,
            self.max_arity
        )?;
        if let Some(w) = &self.witness {
            write!(f, "  witness: {w}")?;
        }
        Ok(())
    }
}

/// Keeps the smallest witness seen so far.
#[derive(Default)]
pub(crate) struct MinWitness(Option<Witness>);

impl MinWitness {
    pub fn offer(&mut self, w: Witness) {
        match &self.0 {
            Some(cur) if cur.cmp_key(&w) != Ordering::Greater => {}
            _ => self.0 = Some(w),
        }
    }

    pub fn into_inner(self) -> Option<Witness> {
        self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn property_names_roundtrip() {
        for p in Property::SELECTABLE.iter().chain(Property::AUXILIARY.iter()) {
            assert_eq!(p.name().parse::<Property>().unwrap(), *p);
            assert_eq!(
                serde_json::to_string(p).unwrap(),
                format!("\"{}\"", p.name())
            );
        }
    }

    #[test]
    fn selection_parsing() {
        let s: PropertySelection = "standard, preassociative_P1".parse().unwrap();
        assert!(s.contains(Property::Standard));
        assert!(s.contains(Property::PreassociativeP1));
        assert!(matches!("".parse::<PropertySelection>(), Err(CheckError::EmptySelection)));
        assert!(matches!(
            "bogus".parse::<PropertySelection>(),
            Err(CheckError::UnknownProperty(_))
        ));
        assert!("associative_binary".parse::<PropertySelection>().is_err());
    }
}
