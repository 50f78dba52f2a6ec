//! Quasi-inverses and right-inverses of finite functions.
//!
//! On finite sets every function has a quasi-inverse, and the ones whose
//! domain is exactly `ran(f)` (right-inverses) can be listed explicitly:
//! pick one preimage for every attained value.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{QuasiInverseError, TableError};

/// A total map between two finite, ordered symbol sets.
#[derive(Clone)]
pub struct FiniteMap {
    domain: Vec<String>,
    codomain: Vec<String>,
    graph: Vec<usize>,
    dom_index: HashMap<String, usize>,
    cod_index: HashMap<String, usize>,
}

fn index_symbols(symbols: &[String]) -> Result<HashMap<String, usize>, TableError> {
    let mut index = HashMap::with_capacity(symbols.len());
    for (i, s) in symbols.iter().enumerate() {
        if index.insert(s.clone(), i).is_some() {
            return Err(TableError::DuplicateSymbol(s.clone()));
        }
    }
    Ok(index)
}

impl FiniteMap {
    /// `graph[i]` is the codomain index of the image of `domain[i]`.
    pub fn new(
        domain: Vec<String>,
        codomain: Vec<String>,
        graph: Vec<usize>,
    ) -> Result<Self, TableError> {
        let dom_index = index_symbols(&domain)?;
        let cod_index = index_symbols(&codomain)?;
        if graph.len() != domain.len() {
            let missing = domain.get(graph.len()).cloned().unwrap_or_default();
            return Err(TableError::MapNotTotal(missing));
        }
        if let Some(&j) = graph.iter().find(|&&j| j >= codomain.len()) {
            return Err(TableError::ValueOutOfCodomain(format!("#{j}")));
        }
        Ok(FiniteMap {
            domain,
            codomain,
            graph,
            dom_index,
            cod_index,
        })
    }

    /// Build from `(x, f(x))` pairs; every domain symbol must appear once.
    pub fn from_pairs<S: AsRef<str>>(
        domain: &[S],
        codomain: &[S],
        pairs: &[(S, S)],
    ) -> Result<Self, TableError> {
        let domain: Vec<String> = domain.iter().map(|s| s.as_ref().to_string()).collect();
        let codomain: Vec<String> = codomain.iter().map(|s| s.as_ref().to_string()).collect();
        let cod_index = index_symbols(&codomain)?;
        let dom_index = index_symbols(&domain)?;
        let mut graph = vec![usize::MAX; domain.len()];
        for (x, y) in pairs {
            let i = *dom_index
                .get(x.as_ref())
                .ok_or_else(|| TableError::UnknownSymbol(x.as_ref().to_string()))?;
            let j = *cod_index
                .get(y.as_ref())
                .ok_or_else(|| TableError::ValueOutOfCodomain(y.as_ref().to_string()))?;
            if graph[i] != usize::MAX {
                return Err(TableError::DuplicateEntry {
                    args: vec![x.as_ref().to_string()],
                });
            }
            graph[i] = j;
        }
        if let Some(i) = graph.iter().position(|&j| j == usize::MAX) {
            return Err(TableError::MapNotTotal(domain[i].clone()));
        }
        FiniteMap::new(domain, codomain, graph)
    }

    pub fn identity(symbols: &[String]) -> Result<Self, TableError> {
        FiniteMap::new(symbols.to_vec(), symbols.to_vec(), (0..symbols.len()).collect())
    }

    pub fn domain(&self) -> &[String] {
        &self.domain
    }

    pub fn codomain(&self) -> &[String] {
        &self.codomain
    }

    pub fn graph(&self) -> &[usize] {
        &self.graph
    }

    pub fn index_in_domain(&self, s: &str) -> Option<usize> {
        self.dom_index.get(s).copied()
    }

    pub fn index_in_codomain(&self, s: &str) -> Option<usize> {
        self.cod_index.get(s).copied()
    }

    pub fn apply(&self, x: &str) -> Option<&str> {
        self.index_in_domain(x)
            .map(|i| self.codomain[self.graph[i]].as_str())
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&str, &str)> {
        self.domain
            .iter()
            .zip(&self.graph)
            .map(|(x, &j)| (x.as_str(), self.codomain[j].as_str()))
    }

    /// Attained values, in codomain order.
    pub fn range(&self) -> Vec<String> {
        self.range_indices()
            .into_iter()
            .map(|j| self.codomain[j].clone())
            .collect()
    }

    fn range_indices(&self) -> BTreeSet<usize> {
        self.graph.iter().copied().collect()
    }

    /// Domain indices mapped to codomain index `j`, in domain order.
    pub fn preimage(&self, j: usize) -> Vec<usize> {
        (0..self.domain.len()).filter(|&i| self.graph[i] == j).collect()
    }

    /// First pair of distinct domain symbols with the same image.
    pub fn injectivity_witness(&self) -> Option<(&str, &str)> {
        let mut seen: HashMap<usize, usize> = HashMap::new();
        for (i, &j) in self.graph.iter().enumerate() {
            if let Some(&prev) = seen.get(&j) {
                return Some((&self.domain[prev], &self.domain[i]));
            }
            seen.insert(j, i);
        }
        None
    }

    pub fn is_injective(&self) -> bool {
        self.injectivity_witness().is_none()
    }

    /// Restriction to the given domain symbols (kept in this map's domain
    /// order).
    pub fn restrict<S: AsRef<str>>(&self, subset: &[S]) -> Result<FiniteMap, TableError> {
        let keep: BTreeSet<usize> = subset
            .iter()
            .map(|s| {
                self.index_in_domain(s.as_ref())
                    .ok_or_else(|| TableError::UnknownSymbol(s.as_ref().to_string()))
            })
            .collect::<Result<_, _>>()?;
        let domain = keep.iter().map(|&i| self.domain[i].clone()).collect();
        let graph = keep.iter().map(|&i| self.graph[i]).collect();
        FiniteMap::new(domain, self.codomain.clone(), graph)
    }

    /// `self ∘ other`; `other`'s values must lie in this map's domain.
    pub fn compose(&self, other: &FiniteMap) -> Result<FiniteMap, TableError> {
        let graph = other
            .graph
            .iter()
            .map(|&j| {
                let s = &other.codomain[j];
                self.index_in_domain(s)
                    .map(|i| self.graph[i])
                    .ok_or_else(|| TableError::MapNotTotal(s.clone()))
            })
            .collect::<Result<_, _>>()?;
        FiniteMap::new(other.domain.clone(), self.codomain.clone(), graph)
    }
}

impl PartialEq for FiniteMap {
    fn eq(&self, other: &Self) -> bool {
        self.domain == other.domain && self.codomain == other.codomain && self.graph == other.graph
    }
}

impl Eq for FiniteMap {}

impl fmt::Debug for FiniteMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.pairs()).finish()
    }
}

/// Why a candidate fails to be a quasi-inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuasiInverseFailure {
    /// `f(g(y)) ≠ y` for this attained value `y` of `f`.
    NotRightInverse { y: String, g_y: String, f_g_y: String },
    /// `g(y)` is attained by `g` but not on `ran(f)`.
    RangeNotAttained { value: String },
}

impl fmt::Display for QuasiInverseFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuasiInverseFailure::NotRightInverse { y, g_y, f_g_y } => {
                write!(f, "f(g({y})) = f({g_y}) = {f_g_y} ≠ {y}")
            }
            QuasiInverseFailure::RangeNotAttained { value } => {
                write!(f, "{value} ∈ ran(g) is not attained on ran(f)")
            }
        }
    }
}

/// Check `f∘g|ran(f) = id|ran(f)` and `ran(g|ran(f)) = ran(g)`.
///
/// Returns `Ok(None)` when `g` is a quasi-inverse of `f` and
/// `Ok(Some(failure))` otherwise; `Err` when `ran(g) ⊄ dom(f)` or
/// `ran(f) ⊄ dom(g)`.
pub fn is_quasi_inverse(
    f: &FiniteMap,
    g: &FiniteMap,
) -> Result<Option<QuasiInverseFailure>, QuasiInverseError> {
    let ran_f = f.range();
    let ran_g = g.range();
    if let Some(y) = ran_f.iter().find(|y| g.index_in_domain(y).is_none()) {
        return Err(QuasiInverseError::DomainMismatch(format!(
            "{y} ∈ ran(f) is not in dom(g)"
        )));
    }
    if let Some(x) = ran_g.iter().find(|x| f.index_in_domain(x).is_none()) {
        return Err(QuasiInverseError::DomainMismatch(format!(
            "{x} ∈ ran(g) is not in dom(f)"
        )));
    }
    for y in &ran_f {
        let g_y = g.apply(y).expect("checked above");
        let f_g_y = f.apply(g_y).expect("checked above");
        if f_g_y != y {
            return Ok(Some(QuasiInverseFailure::NotRightInverse {
                y: y.clone(),
                g_y: g_y.to_string(),
                f_g_y: f_g_y.to_string(),
            }));
        }
    }
    let on_range: BTreeSet<&str> = ran_f.iter().map(|y| g.apply(y).unwrap()).collect();
    if let Some(value) = ran_g.iter().find(|x| !on_range.contains(x.as_str())) {
        return Ok(Some(QuasiInverseFailure::RangeNotAttained {
            value: value.clone(),
        }));
    }
    Ok(None)
}

/// All maps `g: ran(f) → dom(f)` with `g(y) ∈ f⁻¹{y}`, in lexicographic
/// order of their graphs (by domain order of the chosen preimages).
pub fn right_inverses(f: &FiniteMap) -> Vec<FiniteMap> {
    let range: Vec<usize> = f.range_indices().into_iter().collect();
    let choices: Vec<Vec<usize>> = range.iter().map(|&j| f.preimage(j)).collect();
    let domain: Vec<String> = range.iter().map(|&j| f.codomain[j].clone()).collect();
    let total: usize = choices.iter().map(Vec::len).product();
    let mut out = Vec::with_capacity(total);
    let mut cursor = vec![0usize; choices.len()];
    loop {
        let graph = cursor
            .iter()
            .zip(&choices)
            .map(|(&c, opts)| opts[c])
            .collect();
        out.push(
            FiniteMap::new(domain.clone(), f.domain.clone(), graph).expect("valid right-inverse"),
        );
        // odometer, last position fastest
        let mut pos = cursor.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            cursor[pos] += 1;
            if cursor[pos] < choices[pos].len() {
                break;
            }
            cursor[pos] = 0;
        }
    }
}

/// The right-inverse choosing the pinned preimage where given and the
/// smallest preimage (domain order) elsewhere.
pub fn canonical_quasi_inverse<S: AsRef<str>>(
    f: &FiniteMap,
    pins: &[(S, S)],
) -> Result<FiniteMap, QuasiInverseError> {
    let mut pinned: HashMap<usize, usize> = HashMap::new();
    for (y, x) in pins {
        let (y, x) = (y.as_ref(), x.as_ref());
        let invalid = |reason: &str| QuasiInverseError::InvalidPin {
            y: y.to_string(),
            x: x.to_string(),
            reason: reason.to_string(),
        };
        let xi = f
            .index_in_domain(x)
            .ok_or_else(|| invalid("x is not in dom(f)"))?;
        let yj = f
            .index_in_codomain(y)
            .ok_or_else(|| invalid("y is not in the codomain of f"))?;
        if f.graph[xi] != yj {
            return Err(invalid("f(x) ≠ y"));
        }
        if pinned.insert(yj, xi).is_some() {
            return Err(invalid("y is pinned more than once"));
        }
    }
    let range: Vec<usize> = f.range_indices().into_iter().collect();
    let domain = range.iter().map(|&j| f.codomain[j].clone()).collect();
    let graph = range
        .iter()
        .map(|&j| pinned.get(&j).copied().unwrap_or_else(|| f.preimage(j)[0]))
        .collect();
    Ok(FiniteMap::new(domain, f.domain.clone(), graph)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn map(domain: &[&str], codomain: &[&str], pairs: &[(&str, &str)]) -> FiniteMap {
        FiniteMap::from_pairs(domain, codomain, pairs).unwrap()
    }

    fn collapse() -> FiniteMap {
        map(&["1", "2", "3"], &["1", "2"], &[("1", "1"), ("2", "1"), ("3", "2")])
    }

    #[test]
    fn identity_is_its_own_quasi_inverse() {
        let id = map(&["1", "2", "3"], &["1", "2", "3"], &[("1", "1"), ("2", "2"), ("3", "3")]);
        assert_eq!(is_quasi_inverse(&id, &id).unwrap(), None);
    }

    #[test]
    fn quasi_inverse_examples() {
        let f = collapse();
        let g = map(&["1", "2"], &["1", "2", "3"], &[("1", "2"), ("2", "3")]);
        assert_eq!(is_quasi_inverse(&f, &g).unwrap(), None);
        let bad = map(&["1", "2"], &["1", "2", "3"], &[("1", "3"), ("2", "3")]);
        assert_eq!(
            is_quasi_inverse(&f, &bad).unwrap(),
            Some(QuasiInverseFailure::NotRightInverse {
                y: "1".into(),
                g_y: "3".into(),
                f_g_y: "2".into()
            })
        );
    }

    #[test]
    fn range_condition_is_checked() {
        // g defined beyond ran(f) with an extra value not reached on ran(f)
        let f = map(&["a", "b"], &["p", "q"], &[("a", "p"), ("b", "p")]);
        let g = map(&["p", "q"], &["a", "b"], &[("p", "a"), ("q", "b")]);
        assert_eq!(
            is_quasi_inverse(&f, &g).unwrap(),
            Some(QuasiInverseFailure::RangeNotAttained { value: "b".into() })
        );
    }

    #[test]
    fn domain_mismatch_is_an_error() {
        let f = collapse();
        let g = map(&["1"], &["1", "2", "3"], &[("1", "1")]);
        assert!(matches!(
            is_quasi_inverse(&f, &g),
            Err(QuasiInverseError::DomainMismatch(_))
        ));
    }

    #[test]
    fn right_inverse_examples() {
        let all = right_inverses(&collapse());
        assert_eq!(all.len(), 2);
        assert_eq!(all[0], map(&["1", "2"], &["1", "2", "3"], &[("1", "1"), ("2", "3")]));
        assert_eq!(all[1], map(&["1", "2"], &["1", "2", "3"], &[("1", "2"), ("2", "3")]));

        let bij = map(&["1", "2", "3"], &["a", "b", "c"], &[("1", "b"), ("2", "c"), ("3", "a")]);
        let inv = right_inverses(&bij);
        assert_eq!(inv.len(), 1);
        assert_eq!(inv[0].apply("b"), Some("1"));
        assert_eq!(inv[0].apply("a"), Some("3"));

        let constant = map(&["1", "2", "3"], &["k"], &[("1", "k"), ("2", "k"), ("3", "k")]);
        assert_eq!(right_inverses(&constant).len(), 3);
    }

    #[test]
    fn canonical_selection_and_pins() {
        let f = collapse();
        let g = canonical_quasi_inverse::<&str>(&f, &[]).unwrap();
        assert_eq!(g, map(&["1", "2"], &["1", "2", "3"], &[("1", "1"), ("2", "3")]));
        let g = canonical_quasi_inverse(&f, &[("1", "2")]).unwrap();
        assert_eq!(g, map(&["1", "2"], &["1", "2", "3"], &[("1", "2"), ("2", "3")]));
        assert!(matches!(
            canonical_quasi_inverse(&f, &[("1", "3")]),
            Err(QuasiInverseError::InvalidPin { .. })
        ));
        assert!(matches!(
            canonical_quasi_inverse(&f, &[("1", "1"), ("1", "2")]),
            Err(QuasiInverseError::InvalidPin { .. })
        ));
    }

    #[test]
    fn pinned_median_unary_part() {
        // med(1, x, 2) on the chain 0 < 1 < 2 < 3
        let f = map(
            &["0", "1", "2", "3"],
            &["0", "1", "2", "3"],
            &[("0", "1"), ("1", "1"), ("2", "2"), ("3", "2")],
        );
        assert_eq!(f.preimage(1), vec![0, 1]);
        assert_eq!(f.preimage(2), vec![2, 3]);
        let g = canonical_quasi_inverse(&f, &[("1", "1"), ("2", "2")]).unwrap();
        assert_eq!(g.apply("1"), Some("1"));
        assert_eq!(g.apply("2"), Some("2"));
        assert_eq!(is_quasi_inverse(&f, &g).unwrap(), None);
    }

    #[test]
    fn restrict_and_compose() {
        let f = collapse();
        let g = canonical_quasi_inverse::<&str>(&f, &[]).unwrap();
        let fg = f.compose(&g).unwrap();
        assert_eq!(fg.pairs().collect::<Vec<_>>(), vec![("1", "1"), ("2", "2")]);
        let r = f.restrict(&["3", "1"]).unwrap();
        assert_eq!(r.domain(), &["1", "3"]);
        assert!(r.is_injective());
        assert_eq!(f.injectivity_witness(), Some(("1", "2")));
    }
}
