//! Exhaustive enumeration of small universes of truncated functions.

use rayon::prelude::*;

use crate::chain::Chain;
use crate::checks::check_property;
use crate::error::{EnumerateError, TableError};
use crate::factorize::fold_operation;
use crate::space::TupleSpace;
use crate::table::{BinaryTable, TableFn, Value};
use crate::verdict::Property;

/// Default cap on brute-force candidate counts.
pub const CANDIDATE_CAP: u64 = 1 << 24;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Universe {
    /// Default ε, every nonempty tuple mapped into the chain.
    EpsilonStandard,
    /// Default in `{ε} ∪ X`, every nonempty tuple mapped into the chain.
    All,
}

/// Every table of a universe, addressable by a dense index. Index order
/// is lexicographic in the value vector (default first, then tuples in
/// index order), with ε before every chain element.
#[derive(Clone, Debug)]
pub struct Candidates {
    chain: Chain,
    max_arity: usize,
    universe: Universe,
    slots: usize,
}

impl Candidates {
    pub fn new(chain: Chain, max_arity: usize, universe: Universe) -> Result<Self, TableError> {
        if max_arity == 0 {
            return Err(TableError::ZeroArity);
        }
        let slots = TupleSpace::new(chain.len(), max_arity).total() - 1;
        Ok(Candidates {
            chain,
            max_arity,
            universe,
            slots,
        })
    }

    pub fn chain(&self) -> &Chain {
        &self.chain
    }

    fn default_radix(&self) -> u64 {
        match self.universe {
            Universe::EpsilonStandard => 1,
            Universe::All => self.chain.len() as u64 + 1,
        }
    }

    /// Number of candidates, or `None` if it overflows `u64`.
    pub fn len(&self) -> Option<u64> {
        let m = self.chain.len() as u64;
        let mut total = self.default_radix();
        for _ in 0..self.slots {
            total = total.checked_mul(m)?;
        }
        Some(total)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The candidate count as a decimal string, even when it overflows.
    pub fn len_display(&self) -> String {
        match self.len() {
            Some(n) => n.to_string(),
            None => format!(
                "{}·{}^{}",
                self.default_radix(),
                self.chain.len(),
                self.slots
            ),
        }
    }

    fn build(&self, values: Vec<Value>) -> TableFn {
        TableFn::new(
            self.chain.clone(),
            self.chain.elements().to_vec(),
            self.max_arity,
            values,
        )
        .expect("candidate table")
    }

    /// The `i`-th candidate.
    pub fn get(&self, mut i: u64) -> TableFn {
        let m = self.chain.len() as u64;
        let mut values = vec![Value::EPSILON; self.slots + 1];
        for slot in (1..=self.slots).rev() {
            values[slot] = Value::sym((i % m) as usize);
            i /= m;
        }
        values[0] = match i {
            0 => Value::EPSILON,
            d => Value::sym(d as usize - 1),
        };
        self.build(values)
    }

    /// All candidates in index order.
    pub fn iter(&self) -> impl Iterator<Item = TableFn> + '_ {
        let m = self.chain.len() as u32;
        let radix = self.default_radix() as u32;
        let mut digits: Option<Vec<u32>> = Some(vec![0; self.slots + 1]);
        std::iter::from_fn(move || {
            let d = digits.as_mut()?;
            let values = d
                .iter()
                .enumerate()
                .map(|(slot, &x)| match (slot, x) {
                    (0, 0) => Value::EPSILON,
                    (0, x) => Value::sym(x as usize - 1),
                    (_, x) => Value::sym(x as usize),
                })
                .collect();
            let out = self.build(values);
            // odometer, last slot fastest
            let mut slot = d.len();
            loop {
                if slot == 0 {
                    digits = None;
                    break;
                }
                slot -= 1;
                let r = if slot == 0 { radix } else { m };
                d[slot] += 1;
                if d[slot] < r {
                    break;
                }
                d[slot] = 0;
            }
            Some(out)
        })
    }
}

/// Apply `f` to every candidate, in index order. The parallel path
/// returns exactly the sequential result.
pub fn sweep<R, F>(candidates: &Candidates, parallel: bool, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(&TableFn) -> R + Sync + Send,
{
    if parallel {
        let n = candidates.len().expect("sweepable universe");
        (0..n)
            .into_par_iter()
            .map(|i| f(&candidates.get(i)))
            .collect()
    } else {
        candidates.iter().map(|t| f(&t)).collect()
    }
}

/// All `m^(m²)` binary tables on the chain, values in the chain.
pub fn all_binary_tables(chain: &Chain) -> Vec<BinaryTable> {
    let m = chain.len();
    let cells = m * m;
    let count = m.pow(cells as u32);
    (0..count)
        .map(|mut code| {
            let mut values = vec![0u32; cells];
            for cell in (0..cells).rev() {
                values[cell] = (code % m) as u32;
                code /= m;
            }
            BinaryTable::new(chain.clone(), chain.elements().to_vec(), values).expect("binary table")
        })
        .collect()
}

fn decode(mut code: usize, m: usize, len: usize) -> Vec<u32> {
    let mut out = vec![0u32; len];
    for slot in (0..len).rev() {
        out[slot] = (code % m) as u32;
        code /= m;
    }
    out
}

/// Every associative ε-standard operation on the chain truncated at
/// `max_arity`, sorted by value vector.
///
/// Such an operation is fixed by `(F₁, F₂)`: `F₁` and `F₂` absorb `F₁`
/// on both sides, `F₁∘F₂ = F₂`, `F₂` is associative once three
/// arguments fit, and longer arities fold `F₂` left.
pub fn associative_operations(chain: &Chain, max_arity: usize) -> Vec<TableFn> {
    let m = chain.len();
    let mut out = Vec::new();
    for c1 in 0..m.pow(m as u32) {
        let f1 = decode(c1, m, m);
        if (0..m).any(|x| f1[f1[x] as usize] != f1[x]) {
            continue;
        }
        if max_arity == 1 {
            out.push(fold_operation(chain, 1, &f1, |_, _| 0));
            continue;
        }
        for c2 in 0..m.pow((m * m) as u32) {
            let f2 = decode(c2, m, m * m);
            let op = |x: u32, y: u32| f2[x as usize * m + y as usize];
            let ok = (0..m as u32).all(|x| {
                (0..m as u32).all(|y| {
                    let v = op(x, y);
                    f1[v as usize] == v
                        && op(f1[x as usize], y) == v
                        && op(x, f1[y as usize]) == v
                })
            });
            if !ok {
                continue;
            }
            if max_arity >= 3 {
                let assoc = (0..m as u32).all(|x| {
                    (0..m as u32)
                        .all(|y| (0..m as u32).all(|z| op(op(x, y), z) == op(x, op(y, z))))
                });
                if !assoc {
                    continue;
                }
            }
            out.push(fold_operation(chain, max_arity, &f1, op));
        }
    }
    out.sort_by(|a, b| a.values().cmp(b.values()));
    out
}

/// What to enumerate and how far.
#[derive(Clone, Debug)]
pub struct EnumerateRequest {
    pub chain_size: usize,
    pub max_arity: usize,
    /// Every listed property must hold; empty keeps everything.
    pub filter: Vec<Property>,
    pub force: bool,
}

impl EnumerateRequest {
    /// ε-standard operations unless the filter names a property that is
    /// meaningful for functions that are not operations.
    pub fn universe(&self) -> Universe {
        if self.filter.iter().any(|p| !p.needs_operation()) {
            Universe::All
        } else {
            Universe::EpsilonStandard
        }
    }
}

fn passes(t: &TableFn, filter: &[Property]) -> bool {
    filter
        .iter()
        .all(|&p| check_property(t, p).is_ok_and(|v| v.holds))
}

/// Deterministic, duplicate-free enumeration of the filtered universe.
pub fn enumerate(req: &EnumerateRequest) -> Result<Vec<TableFn>, EnumerateError> {
    if !req.force && (req.chain_size > 3 || req.max_arity > 4) {
        return Err(EnumerateError::LimitsExceeded {
            chain_size: req.chain_size,
            max_arity: req.max_arity,
        });
    }
    let chain = Chain::numeric(req.chain_size)?;
    let universe = req.universe();
    let assoc = req.filter.iter().any(|p| {
        matches!(
            p,
            Property::AssociativeA1 | Property::AssociativeA2 | Property::AssociativeA3
        )
    });
    if universe == Universe::EpsilonStandard && assoc {
        if req.max_arity == 0 {
            return Err(TableError::ZeroArity.into());
        }
        return Ok(associative_operations(&chain, req.max_arity)
            .into_iter()
            .filter(|t| passes(t, &req.filter))
            .collect());
    }
    let candidates = Candidates::new(chain, req.max_arity, universe)?;
    if !req.force && candidates.len().is_none_or(|n| n > CANDIDATE_CAP) {
        return Err(EnumerateError::UniverseTooLarge {
            candidates: candidates.len_display(),
            cap: CANDIDATE_CAP,
        });
    }
    Ok(candidates
        .iter()
        .filter(|t| passes(t, &req.filter))
        .collect())
}
