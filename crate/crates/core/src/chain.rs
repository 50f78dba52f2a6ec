//! Finite chains: totally ordered symbol sets used as function domains.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::TableError;

/// Marker used for the empty tuple when it appears as a value.
pub const EPSILON: &str = "ε";

/// A finite, totally ordered set of distinct symbols.
///
/// The listing order is the order of the chain. Elements are addressed
/// internally by their position, so `0` is the bottom and `len() - 1`
/// the top.
#[derive(Clone)]
pub struct Chain {
    inner: Arc<ChainInner>,
}

struct ChainInner {
    name: Option<String>,
    elements: Vec<String>,
    index: HashMap<String, u32>,
}

impl Chain {
    pub fn new<I, S>(elements: I) -> Result<Self, TableError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let elements: Vec<String> = elements.into_iter().map(Into::into).collect();
        if elements.is_empty() {
            return Err(TableError::EmptyChain);
        }
        let mut index = HashMap::with_capacity(elements.len());
        for (i, s) in elements.iter().enumerate() {
            if s == EPSILON {
                return Err(TableError::ReservedSymbol(s.clone()));
            }
            if index.insert(s.clone(), i as u32).is_some() {
                return Err(TableError::DuplicateSymbol(s.clone()));
            }
        }
        Ok(Chain {
            inner: Arc::new(ChainInner {
                name: None,
                elements,
                index,
            }),
        })
    }

    /// The chain `0 < 1 < ... < size-1`.
    pub fn numeric(size: usize) -> Result<Self, TableError> {
        Chain::new((0..size).map(|i| i.to_string()))
    }

    /// Chain of canonically rendered reals; the grid must be strictly
    /// increasing after rendering.
    pub fn from_grid(grid: &[f64]) -> Result<Self, TableError> {
        for w in grid.windows(2) {
            if w[0].partial_cmp(&w[1]) != Some(std::cmp::Ordering::Less) {
                return Err(TableError::GridNotIncreasing);
            }
        }
        Chain::new(grid.iter().map(|&v| crate::real::render_real(v)))
    }

    pub fn with_name(self, name: impl Into<String>) -> Self {
        let inner = &self.inner;
        Chain {
            inner: Arc::new(ChainInner {
                name: Some(name.into()),
                elements: inner.elements.clone(),
                index: inner.index.clone(),
            }),
        }
    }

    pub fn name(&self) -> Option<&str> {
        self.inner.name.as_deref()
    }

    pub fn len(&self) -> usize {
        self.inner.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> &[String] {
        &self.inner.elements
    }

    pub fn symbol(&self, i: u32) -> &str {
        &self.inner.elements[i as usize]
    }

    pub fn index_of(&self, symbol: &str) -> Result<u32, TableError> {
        self.inner
            .index
            .get(symbol)
            .copied()
            .ok_or_else(|| TableError::UnknownSymbol(symbol.to_string()))
    }

    pub fn contains(&self, symbol: &str) -> bool {
        self.inner.index.contains_key(symbol)
    }

    pub fn bottom(&self) -> u32 {
        0
    }

    pub fn top(&self) -> u32 {
        self.len() as u32 - 1
    }

    pub fn meet(&self, x: u32, y: u32) -> u32 {
        x.min(y)
    }

    pub fn join(&self, x: u32, y: u32) -> u32 {
        x.max(y)
    }

    /// Ternary median `(x∨y)∧(y∨z)∧(z∨x)`.
    pub fn median(&self, x: u32, y: u32, z: u32) -> u32 {
        median3(x, y, z)
    }

    /// Build a tuple from symbols, rejecting symbols outside the chain.
    pub fn tuple<S: AsRef<str>>(&self, symbols: &[S]) -> Result<TupleKey, TableError> {
        symbols
            .iter()
            .map(|s| self.index_of(s.as_ref()))
            .collect::<Result<Vec<_>, _>>()
            .map(TupleKey)
    }

    pub fn render(&self, tuple: &TupleKey) -> Vec<String> {
        tuple.0.iter().map(|&i| self.symbol(i).to_string()).collect()
    }

    pub(crate) fn same_as(&self, other: &Chain) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.elements() == other.elements()
    }
}

pub(crate) fn median3<T: Ord + Copy>(x: T, y: T, z: T) -> T {
    x.max(y).min(y.max(z)).min(z.max(x))
}

impl PartialEq for Chain {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Chain {}

impl fmt::Debug for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Chain")
            .field("name", &self.inner.name)
            .field("elements", &self.inner.elements)
            .finish()
    }
}

/// A finite tuple of chain elements (by position); the empty tuple is ε.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TupleKey(pub Vec<u32>);

impl TupleKey {
    pub fn empty() -> Self {
        TupleKey(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn items(&self) -> &[u32] {
        &self.0
    }

    pub fn concat(&self, other: &TupleKey) -> TupleKey {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        TupleKey(v)
    }

    /// `k·x`: the tuple repeated `k` times.
    pub fn replicate(&self, k: usize) -> TupleKey {
        TupleKey(self.0.repeat(k))
    }
}

impl From<Vec<u32>> for TupleKey {
    fn from(v: Vec<u32>) -> Self {
        TupleKey(v)
    }
}
