//! Truncated variadic functions stored as total tables.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::chain::{Chain, TupleKey, EPSILON};
use crate::error::TableError;
use crate::quasi_inverse::FiniteMap;
use crate::space::TupleSpace;

/// A function value: an index into the codomain, or the ε marker.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Value(u32);

impl Value {
    pub const EPSILON: Value = Value(u32::MAX);

    pub fn sym(index: usize) -> Value {
        debug_assert!(index < u32::MAX as usize);
        Value(index as u32)
    }

    pub fn is_epsilon(self) -> bool {
        self == Value::EPSILON
    }

    pub fn index(self) -> Option<usize> {
        (!self.is_epsilon()).then_some(self.0 as usize)
    }
}

impl fmt::Debug for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index() {
            Some(i) => write!(f, "#{i}"),
            None => f.write_str(EPSILON),
        }
    }
}

fn validate_codomain(codomain: &[String]) -> Result<(), TableError> {
    let mut seen = std::collections::HashSet::with_capacity(codomain.len());
    for s in codomain {
        if s == EPSILON {
            return Err(TableError::ReservedSymbol(s.clone()));
        }
        if !seen.insert(s.as_str()) {
            return Err(TableError::DuplicateSymbol(s.clone()));
        }
    }
    Ok(())
}

/// A variadic function truncated at `max_arity`: total on all tuples of
/// length `1..=max_arity`, plus a default value for ε.
#[derive(Clone)]
pub struct TableFn {
    domain: Chain,
    codomain: Arc<Vec<String>>,
    max_arity: usize,
    space: Arc<TupleSpace>,
    values: Vec<Value>,
    to_domain: Arc<Vec<Option<u32>>>,
}

impl TableFn {
    /// Build from a dense value vector in tuple-index order (`values[0]` is
    /// the default).
    pub fn new(
        domain: Chain,
        codomain: Vec<String>,
        max_arity: usize,
        values: Vec<Value>,
    ) -> Result<Self, TableError> {
        if max_arity == 0 {
            return Err(TableError::ZeroArity);
        }
        validate_codomain(&codomain)?;
        let space = TupleSpace::new(domain.len(), max_arity);
        if values.len() != space.total() {
            let first_missing = (1..=max_arity)
                .find(|&n| space.indices_of_len(n).end > values.len())
                .unwrap_or(max_arity);
            return Err(TableError::EntriesNotTotal {
                arity: first_missing,
            });
        }
        if let Some(v) = values
            .iter()
            .find(|v| v.index().is_some_and(|i| i >= codomain.len()))
        {
            return Err(TableError::ValueOutOfCodomain(format!("{v:?}")));
        }
        let to_domain = codomain
            .iter()
            .map(|s| domain.index_of(s).ok())
            .collect();
        Ok(TableFn {
            domain,
            codomain: Arc::new(codomain),
            max_arity,
            space: Arc::new(space),
            values,
            to_domain: Arc::new(to_domain),
        })
    }

    /// Tabulate `f` over every nonempty tuple up to `max_arity`.
    pub fn from_fn(
        domain: Chain,
        codomain: Vec<String>,
        max_arity: usize,
        default: Value,
        mut f: impl FnMut(&TupleKey) -> Value,
    ) -> Result<Self, TableError> {
        if max_arity == 0 {
            return Err(TableError::ZeroArity);
        }
        let space = TupleSpace::new(domain.len(), max_arity);
        let mut values = Vec::with_capacity(space.total());
        values.push(default);
        for idx in space.nonempty() {
            values.push(f(&space.tuple(idx)));
        }
        TableFn::new(domain, codomain, max_arity, values)
    }

    /// An ε-standard-shaped operation: codomain is the domain, default is
    /// ε, and `f` returns chain positions.
    pub fn operation(
        domain: Chain,
        max_arity: usize,
        mut f: impl FnMut(&[u32]) -> u32,
    ) -> Result<Self, TableError> {
        let codomain = domain.elements().to_vec();
        TableFn::from_fn(domain, codomain, max_arity, Value::EPSILON, |t| {
            Value::sym(f(t.items()) as usize)
        })
    }

    /// Build from symbolic entries, checking totality and duplicates.
    pub fn from_entries<I, A, S>(
        domain: Chain,
        codomain: Vec<String>,
        max_arity: usize,
        default: &str,
        entries: I,
    ) -> Result<Self, TableError>
    where
        I: IntoIterator<Item = (A, S)>,
        A: AsRef<[String]>,
        S: AsRef<str>,
    {
        if max_arity == 0 {
            return Err(TableError::ZeroArity);
        }
        validate_codomain(&codomain)?;
        let cod_index: HashMap<&str, usize> = codomain
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let resolve = |s: &str| -> Result<Value, TableError> {
            if s == EPSILON {
                Ok(Value::EPSILON)
            } else {
                cod_index
                    .get(s)
                    .map(|&i| Value::sym(i))
                    .ok_or_else(|| TableError::ValueOutOfCodomain(s.to_string()))
            }
        };
        let space = TupleSpace::new(domain.len(), max_arity);
        let mut values: Vec<Option<Value>> = vec![None; space.total()];
        values[0] = Some(resolve(default)?);
        for (args, value) in entries {
            let args = args.as_ref();
            if args.is_empty() {
                return Err(TableError::DuplicateEntry { args: Vec::new() });
            }
            let key = domain.tuple(args)?;
            let idx = space.index(key.items()).ok_or(TableError::ArityExceeded {
                len: args.len(),
                max: max_arity,
            })?;
            if values[idx].is_some() {
                return Err(TableError::DuplicateEntry {
                    args: args.to_vec(),
                });
            }
            values[idx] = Some(resolve(value.as_ref())?);
        }
        if let Some(idx) = values.iter().position(Option::is_none) {
            return Err(TableError::EntriesNotTotal {
                arity: space.len_of(idx),
            });
        }
        let values = values.into_iter().map(Option::unwrap).collect();
        TableFn::new(domain, codomain, max_arity, values)
    }

    pub fn domain(&self) -> &Chain {
        &self.domain
    }

    pub fn codomain(&self) -> &[String] {
        &self.codomain
    }

    pub fn max_arity(&self) -> usize {
        self.max_arity
    }

    pub fn space(&self) -> &TupleSpace {
        &self.space
    }

    /// Dense values in tuple-index order; index 0 is the default.
    pub fn values(&self) -> &[Value] {
        &self.values
    }

    pub fn default_value(&self) -> Value {
        self.values[0]
    }

    #[inline]
    pub fn at(&self, idx: usize) -> Value {
        self.values[idx]
    }

    pub fn eval(&self, x: &TupleKey) -> Result<Value, TableError> {
        if x.len() > self.max_arity {
            return Err(TableError::ArityExceeded {
                len: x.len(),
                max: self.max_arity,
            });
        }
        if let Some(&bad) = x.items().iter().find(|&&s| s as usize >= self.domain.len()) {
            return Err(TableError::UnknownSymbol(format!("#{bad}")));
        }
        Ok(self.values[self.space.index(x.items()).expect("length checked")])
    }

    pub fn eval_symbols<S: AsRef<str>>(&self, x: &[S]) -> Result<&str, TableError> {
        let key = self.domain.tuple(x)?;
        self.eval(&key).map(|v| self.render(v))
    }

    pub fn render(&self, v: Value) -> &str {
        match v.index() {
            Some(i) => &self.codomain[i],
            None => EPSILON,
        }
    }

    pub fn value_of_symbol(&self, s: &str) -> Result<Value, TableError> {
        if s == EPSILON {
            return Ok(Value::EPSILON);
        }
        self.codomain
            .iter()
            .position(|c| c == s)
            .map(Value::sym)
            .ok_or_else(|| TableError::ValueOutOfCodomain(s.to_string()))
    }

    /// True when every codomain symbol is a domain element.
    pub fn is_operation(&self) -> bool {
        self.to_domain.iter().all(Option::is_some)
    }

    /// First codomain symbol that is not a domain element.
    pub fn non_operation_symbol(&self) -> Option<&str> {
        self.to_domain
            .iter()
            .position(Option::is_none)
            .map(|i| self.codomain[i].as_str())
    }

    /// Chain position of a value, for codomain symbols that are domain
    /// elements.
    #[inline]
    pub fn domain_of(&self, v: Value) -> Option<u32> {
        v.index().and_then(|i| self.to_domain[i])
    }

    /// True when no nonempty tuple takes the default value.
    pub fn is_standard(&self) -> bool {
        let d = self.default_value();
        self.values[1..].iter().all(|&v| v != d)
    }

    /// Default is ε, the function is an operation, and it is standard.
    pub fn is_epsilon_standard(&self) -> bool {
        self.default_value().is_epsilon() && self.is_operation() && self.is_standard()
    }

    /// `(ran F₁, ran F♭)`.
    pub fn ranges(&self) -> (BTreeSet<Value>, BTreeSet<Value>) {
        let unary: BTreeSet<Value> = self
            .space
            .indices_of_len(1)
            .map(|i| self.values[i])
            .collect();
        let flat: BTreeSet<Value> = self.space.nonempty().map(|i| self.values[i]).collect();
        (unary, flat)
    }

    /// The unary part as a map from the domain to the codomain (with ε
    /// appended to the codomain only if some unary value is ε).
    pub fn unary_map(&self) -> FiniteMap {
        let mut codomain = self.codomain.as_ref().clone();
        let unary: Vec<Value> = self
            .space
            .indices_of_len(1)
            .map(|i| self.values[i])
            .collect();
        if unary.iter().any(|v| v.is_epsilon()) {
            codomain.push(EPSILON.to_string());
        }
        let eps_index = self.codomain.len();
        let graph = unary
            .iter()
            .map(|v| v.index().unwrap_or(eps_index))
            .collect();
        FiniteMap::new(self.domain.elements().to_vec(), codomain, graph)
            .expect("unary part is total")
    }

    /// The binary part (requires `max_arity >= 2` and no ε values).
    pub fn binary_part(&self) -> Option<BinaryTable> {
        if self.max_arity < 2 {
            return None;
        }
        let values: Option<Vec<u32>> = self
            .space
            .indices_of_len(2)
            .map(|i| self.values[i].index().map(|v| v as u32))
            .collect();
        BinaryTable::new(self.domain.clone(), self.codomain.as_ref().clone(), values?).ok()
    }

    /// Restriction to tuples of length at most `max_arity`.
    pub fn truncate(&self, max_arity: usize) -> Result<TableFn, TableError> {
        if max_arity == 0 {
            return Err(TableError::ZeroArity);
        }
        if max_arity >= self.max_arity {
            return Ok(self.clone());
        }
        let space = TupleSpace::new(self.domain.len(), max_arity);
        TableFn::new(
            self.domain.clone(),
            self.codomain.as_ref().clone(),
            max_arity,
            self.values[..space.total()].to_vec(),
        )
    }

    /// `H♭ = g ∘ F♭` with the given default (a symbol of `g`'s codomain, or
    /// `None` for ε).
    pub fn compose_left(&self, g: &FiniteMap, default: Option<&str>) -> Result<TableFn, TableError> {
        let mut map = Vec::with_capacity(self.codomain.len());
        for s in self.codomain.iter() {
            map.push(g.index_in_domain(s).map(|i| g.graph()[i]));
        }
        let mut values = Vec::with_capacity(self.values.len());
        values.push(match default {
            None => Value::EPSILON,
            Some(s) => Value::sym(g.index_in_codomain(s).ok_or_else(|| {
                TableError::ValueOutOfCodomain(s.to_string())
            })?),
        });
        for idx in self.space.nonempty() {
            let v = self.values[idx];
            let image = v
                .index()
                .and_then(|i| map[i])
                .ok_or_else(|| TableError::MapNotTotal(self.render(v).to_string()))?;
            values.push(Value::sym(image));
        }
        TableFn::new(
            self.domain.clone(),
            g.codomain().to_vec(),
            self.max_arity,
            values,
        )
    }

    /// `H_n = F_n ∘ (g, …, g)` over the new domain `dom(g)`, with the given
    /// default (a codomain symbol of `F`, or `None` for ε).
    pub fn compose_right(&self, g: &FiniteMap, default: Option<&str>) -> Result<TableFn, TableError> {
        let domain = Chain::new(g.domain().iter().cloned())?;
        let inner: Vec<u32> = g
            .graph()
            .iter()
            .map(|&j| self.domain.index_of(&g.codomain()[j]))
            .collect::<Result<_, _>>()?;
        let default = match default {
            None => Value::EPSILON,
            Some(s) => self.value_of_symbol(s)?,
        };
        let space = &self.space;
        TableFn::from_fn(
            domain,
            self.codomain.as_ref().clone(),
            self.max_arity,
            default,
            |t| {
                let mapped: Vec<u32> = t.items().iter().map(|&s| inner[s as usize]).collect();
                self.values[space.index(&mapped).expect("same arity")]
            },
        )
    }
}

impl PartialEq for TableFn {
    fn eq(&self, other: &Self) -> bool {
        self.domain == other.domain
            && self.codomain == other.codomain
            && self.max_arity == other.max_arity
            && self.values == other.values
    }
}

impl Eq for TableFn {}

impl fmt::Debug for TableFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        m.entry(&"()", &self.render(self.default_value()));
        for idx in self.space.nonempty().take(64) {
            m.entry(
                &self.domain.render(&self.space.tuple(idx)).join(","),
                &self.render(self.values[idx]),
            );
        }
        m.finish()
    }
}

/// A binary function `X² → Y` stored row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinaryTable {
    domain: Chain,
    codomain: Vec<String>,
    values: Vec<u32>,
    to_domain: Vec<Option<u32>>,
}

impl BinaryTable {
    pub fn new(domain: Chain, codomain: Vec<String>, values: Vec<u32>) -> Result<Self, TableError> {
        validate_codomain(&codomain)?;
        let m = domain.len();
        if values.len() != m * m {
            return Err(TableError::BinaryTableSize {
                got: values.len(),
                expected: m * m,
            });
        }
        if let Some(&v) = values.iter().find(|&&v| v as usize >= codomain.len()) {
            return Err(TableError::ValueOutOfCodomain(format!("#{v}")));
        }
        let to_domain = codomain.iter().map(|s| domain.index_of(s).ok()).collect();
        Ok(BinaryTable {
            domain,
            codomain,
            values,
            to_domain,
        })
    }

    /// An operation on the chain given by `f` on chain positions.
    pub fn operation(domain: Chain, f: impl Fn(u32, u32) -> u32) -> Result<Self, TableError> {
        let m = domain.len() as u32;
        let values = (0..m)
            .flat_map(|x| (0..m).map(move |y| (x, y)))
            .map(|(x, y)| f(x, y))
            .collect();
        let codomain = domain.elements().to_vec();
        BinaryTable::new(domain, codomain, values)
    }

    pub fn domain(&self) -> &Chain {
        &self.domain
    }

    pub fn codomain(&self) -> &[String] {
        &self.codomain
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// Codomain index of `F₂(x, y)`.
    #[inline]
    pub fn get(&self, x: u32, y: u32) -> u32 {
        self.values[x as usize * self.domain.len() + y as usize]
    }

    pub fn is_operation(&self) -> bool {
        self.to_domain.iter().all(Option::is_some)
    }

    /// Chain position of `F₂(x, y)`; the table must be an operation.
    #[inline]
    pub fn op(&self, x: u32, y: u32) -> u32 {
        self.to_domain[self.get(x, y) as usize].expect("binary table is an operation")
    }

    /// First triple (in lexicographic order) violating
    /// `F₂(F₂(x,y),z) = F₂(x,F₂(y,z))`, by direct enumeration.
    pub fn associativity_witness(&self) -> Option<(u32, u32, u32)> {
        assert!(self.is_operation(), "associativity needs an operation");
        let m = self.domain.len() as u32;
        for x in 0..m {
            for y in 0..m {
                for z in 0..m {
                    if self.op(self.op(x, y), z) != self.op(x, self.op(y, z)) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_witness().is_none()
    }

    pub fn render(&self, v: u32) -> &str {
        &self.codomain[v as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn min_ext(m: usize, n: usize) -> TableFn {
        TableFn::operation(Chain::numeric(m).unwrap(), n, |t| *t.iter().min().unwrap()).unwrap()
    }

    #[test]
    fn eval_examples() {
        let first = TableFn::operation(Chain::numeric(2).unwrap(), 3, |t| t[0]).unwrap();
        assert_eq!(first.eval_symbols(&["0", "1", "1"]).unwrap(), "0");
        assert_eq!(first.eval(&TupleKey::empty()).unwrap(), Value::EPSILON);
        let min = min_ext(3, 3);
        assert_eq!(min.eval_symbols(&["2", "0", "1"]).unwrap(), "0");
    }

    #[test]
    fn eval_errors() {
        let min = min_ext(3, 3);
        assert!(matches!(
            min.eval_symbols(&["0", "0", "0", "0"]),
            Err(TableError::ArityExceeded { len: 4, max: 3 })
        ));
        assert!(matches!(
            min.eval_symbols(&["7"]),
            Err(TableError::UnknownSymbol(_))
        ));
        assert!(matches!(
            min.eval(&TupleKey(vec![5])),
            Err(TableError::UnknownSymbol(_))
        ));
    }

    #[test]
    fn concatenation_with_epsilon_is_neutral() {
        let min = min_ext(3, 3);
        let x = TupleKey(vec![2, 1]);
        let e = TupleKey::empty();
        assert_eq!(min.eval(&e.concat(&x)), min.eval(&x));
        assert_eq!(min.eval(&x.concat(&e)), min.eval(&x));
    }

    #[test]
    fn ranges_examples() {
        let chain = Chain::numeric(2).unwrap();
        let len = TableFn::from_fn(
            chain,
            vec!["0".into(), "1".into(), "2".into(), "3".into()],
            3,
            Value::sym(0),
            |t| Value::sym(t.len()),
        )
        .unwrap();
        let (u, f) = len.ranges();
        assert_eq!(u.iter().map(|&v| len.render(v)).collect::<Vec<_>>(), ["1"]);
        assert_eq!(
            f.iter().map(|&v| len.render(v)).collect::<Vec<_>>(),
            ["1", "2", "3"]
        );

        let min = min_ext(3, 3);
        let (u, f) = min.ranges();
        assert_eq!(u, f);
        assert_eq!(u.len(), 3);

        let constant =
            TableFn::from_fn(Chain::numeric(3).unwrap(), vec!["c".into()], 2, Value::EPSILON, |_| {
                Value::sym(0)
            })
            .unwrap();
        let (u, f) = constant.ranges();
        assert_eq!(u, f);
        assert_eq!(u.into_iter().collect::<Vec<_>>(), [Value::sym(0)]);
    }

    #[test]
    fn from_entries_reports_missing_arity() {
        let chain = Chain::numeric(2).unwrap();
        let entries = vec![
            (vec!["0".to_string()], "0"),
            (vec!["1".to_string()], "1"),
            (vec!["0".to_string(), "0".to_string()], "0"),
        ];
        let err = TableFn::from_entries(chain, vec!["0".into(), "1".into()], 2, EPSILON, entries)
            .unwrap_err();
        assert_eq!(err, TableError::EntriesNotTotal { arity: 2 });
        assert_eq!(err.to_string(), "entries not total at arity 2");
    }

    #[test]
    fn from_entries_rejects_duplicates_and_unknown_values() {
        let chain = Chain::numeric(1).unwrap();
        let dup = vec![(vec!["0".to_string()], "0"), (vec!["0".to_string()], "0")];
        assert!(matches!(
            TableFn::from_entries(chain.clone(), vec!["0".into()], 1, EPSILON, dup),
            Err(TableError::DuplicateEntry { .. })
        ));
        let bad = vec![(vec!["0".to_string()], "9")];
        assert!(matches!(
            TableFn::from_entries(chain, vec!["0".into()], 1, EPSILON, bad),
            Err(TableError::ValueOutOfCodomain(_))
        ));
    }

    #[test]
    fn standardness_flags() {
        let min = min_ext(2, 3);
        assert!(min.is_standard());
        assert!(min.is_epsilon_standard());
        let chain = Chain::new(["a", "b"]).unwrap();
        let remark = TableFn::from_fn(
            chain.clone(),
            chain.elements().to_vec(),
            2,
            Value::sym(0),
            |t| Value::sym(t.items()[0] as usize),
        )
        .unwrap();
        assert!(remark.is_operation());
        assert!(!remark.is_standard());
        assert!(!remark.is_epsilon_standard());
    }

    #[test]
    fn truncate_keeps_prefix() {
        let min = min_ext(3, 4);
        let t = min.truncate(2).unwrap();
        assert_eq!(t, min_ext(3, 2));
    }

    #[test]
    fn binary_table_associativity() {
        let chain = Chain::numeric(3).unwrap();
        let sub = BinaryTable::operation(chain.clone(), |x, y| (x + 3 - y) % 3).unwrap();
        assert_eq!(sub.associativity_witness(), Some((0, 0, 1)));
        let min = BinaryTable::operation(chain, |x, y| x.min(y)).unwrap();
        assert!(min.is_associative());
    }
}
