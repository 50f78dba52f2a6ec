use std::collections::BTreeMap;

use crate::error::CheckError;
use crate::table::{TableFn, Value};
use crate::verdict::{MinWitness, Property, Verdict, Witness};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Nondecreasing,
    Nonincreasing,
}

impl Direction {
    fn property(self) -> Property {
        match self {
            Direction::Nondecreasing => Property::Nondecreasing,
            Direction::Nonincreasing => Property::Nonincreasing,
        }
    }
}

/// Position of every nonempty tuple's value in the codomain order: chain
/// order for operations, declared codomain order otherwise.
fn ranks(f: &TableFn) -> Result<Vec<u32>, CheckError> {
    let space = f.space();
    let op = f.is_operation();
    let mut out = vec![0; space.total()];
    for idx in space.nonempty() {
        let v = f.at(idx);
        let Some(i) = v.index() else {
            return Err(CheckError::CodomainNotOrdered {
                args: f.domain().render(&space.tuple(idx)),
            });
        };
        out[idx] = if op { f.domain_of(v).expect("operation") } else { i as u32 };
    }
    Ok(out)
}

fn rank_symbol(f: &TableFn, rank: u32) -> String {
    if f.is_operation() {
        f.domain().symbol(rank).to_string()
    } else {
        f.render(Value::sym(rank as usize)).to_string()
    }
}

/// Monotone in each argument, comparing adjacent chain elements.
pub fn check_monotone(f: &TableFn, direction: Direction) -> Result<Verdict, CheckError> {
    let rank = ranks(f)?;
    let space = f.space();
    let n = f.max_arity();
    let top = f.domain().len() as u32 - 1;
    let mut cases = 0u64;
    let mut best = MinWitness::default();
    let mut items = Vec::with_capacity(n);
    for idx in space.nonempty() {
        items.clear();
        items.extend_from_slice(space.tuple(idx).items());
        for pos in 0..items.len() {
            if items[pos] == top {
                continue;
            }
            items[pos] += 1;
            let up = space.index(&items).expect("same length");
            items[pos] -= 1;
            cases += 1;
            let ok = match direction {
                Direction::Nondecreasing => rank[idx] <= rank[up],
                Direction::Nonincreasing => rank[idx] >= rank[up],
            };
            if !ok {
                best.offer(
                    Witness::new(f, &[("x", &space.tuple(idx)), ("x'", &space.tuple(up))])
                        .value("position", (pos + 1).to_string())
                        .value_of(f, "F(x)", f.at(idx))
                        .value_of(f, "F(x')", f.at(up)),
                );
            }
        }
    }
    Ok(Verdict::from_search(direction.property(), cases, n, best.into_inner()))
}

/// Invariant under permutations: `F(x) = F(sorted x)`.
pub fn check_symmetric(f: &TableFn) -> Result<Verdict, CheckError> {
    let space = f.space();
    let n = f.max_arity();
    let mut cases = 0u64;
    for idx in space.nonempty() {
        let t = space.tuple(idx);
        let mut sorted = t.items().to_vec();
        sorted.sort_unstable();
        if sorted == t.items() {
            continue;
        }
        cases += 1;
        let s = space.index(&sorted).expect("same length");
        if f.at(s) != f.at(idx) {
            let w = Witness::new(f, &[("x", &t), ("sorted", &space.tuple(s))])
                .value_of(f, "F(x)", f.at(idx))
                .value_of(f, "F(sorted)", f.at(s));
            return Ok(Verdict::fail(Property::Symmetric, cases, n, w));
        }
    }
    Ok(Verdict::pass(Property::Symmetric, cases, n))
}

/// Every one-argument section `s ↦ F(y, s, z)` has an order-interval image.
pub fn check_convex_sections(f: &TableFn) -> Result<Verdict, CheckError> {
    let rank = ranks(f)?;
    let space = f.space();
    let n = f.max_arity();
    let m = f.domain().len() as u32;
    let width = if f.is_operation() { m as usize } else { f.codomain().len() };
    let mut cases = 0u64;
    let mut seen = vec![false; width];
    for len in 1..=n {
        for ly in 0..len {
            let lz = len - 1 - ly;
            for y in space.indices_of_len(ly) {
                for z in space.indices_of_len(lz) {
                    cases += 1;
                    seen.iter_mut().for_each(|b| *b = false);
                    for s in 0..m {
                        let idx = space.concat_around(y, s, z).expect("fits");
                        seen[rank[idx] as usize] = true;
                    }
                    let lo = seen.iter().position(|&b| b).expect("nonempty image");
                    let hi = seen.iter().rposition(|&b| b).expect("nonempty image");
                    if let Some(gap) = (lo..=hi).find(|&r| !seen[r]) {
                        let w = Witness::new(f, &[("y", &space.tuple(y)), ("z", &space.tuple(z))])
                            .value("position", (ly + 1).to_string())
                            .value("missing", rank_symbol(f, gap as u32))
                            .note("image of the section is not an interval");
                        return Ok(Verdict::fail(Property::ConvexSections, cases, n, w));
                    }
                }
            }
        }
    }
    Ok(Verdict::pass(Property::ConvexSections, cases, n))
}

/// Nondecreasing, nonincreasing, symmetric, convex sections.
pub fn check_order_properties(f: &TableFn) -> BTreeMap<Property, Result<Verdict, CheckError>> {
    let mut out = BTreeMap::new();
    out.insert(Property::Nondecreasing, check_monotone(f, Direction::Nondecreasing));
    out.insert(Property::Nonincreasing, check_monotone(f, Direction::Nonincreasing));
    out.insert(Property::Symmetric, check_symmetric(f));
    out.insert(Property::ConvexSections, check_convex_sections(f));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::Chain;

    fn min_ext(m: usize, n: usize) -> TableFn {
        TableFn::operation(Chain::numeric(m).unwrap(), n, |t| *t.iter().min().unwrap()).unwrap()
    }

    fn holds(r: &Result<Verdict, CheckError>) -> bool {
        r.as_ref().unwrap().holds
    }

    #[test]
    fn min_extension_order_properties() {
        let all = check_order_properties(&min_ext(3, 3));
        assert!(holds(&all[&Property::Nondecreasing]));
        assert!(!holds(&all[&Property::Nonincreasing]));
        assert!(holds(&all[&Property::Symmetric]));
        assert!(holds(&all[&Property::ConvexSections]));
    }

    #[test]
    fn xor_is_not_nondecreasing() {
        let f = TableFn::operation(Chain::numeric(2).unwrap(), 2, |t| {
            t.iter().fold(0, |a, &b| a ^ b)
        })
        .unwrap();
        let v = check_monotone(&f, Direction::Nondecreasing).unwrap();
        let w = v.witness.unwrap();
        assert_eq!(w.part("x").unwrap(), &["0", "1"]);
        assert_eq!(w.part("x'").unwrap(), &["1", "1"]);
        assert_eq!(w.values[0], ("position".to_string(), "1".to_string()));
        assert!(holds(&check_symmetric(&f)));
    }

    #[test]
    fn projection_is_not_symmetric() {
        let f = TableFn::operation(Chain::numeric(2).unwrap(), 2, |t| t[t.len() - 1]).unwrap();
        let v = check_symmetric(&f).unwrap();
        assert_eq!(v.witness.unwrap().part("x").unwrap(), &["1", "0"]);
    }

    #[test]
    fn gap_in_a_section() {
        // F₁ maps 0 ↦ 0, 1 ↦ 2 on a 3-chain: section image {0,2,?}
        let f = TableFn::operation(Chain::numeric(3).unwrap(), 1, |t| if t[0] == 2 { 2 } else { 2 * t[0] })
            .unwrap();
        let v = check_convex_sections(&f).unwrap();
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert_eq!(w.values[1], ("missing".to_string(), "1".to_string()));
    }

    #[test]
    fn epsilon_value_is_not_ordered() {
        let chain = Chain::numeric(2).unwrap();
        let f = TableFn::from_fn(chain.clone(), chain.elements().to_vec(), 1, Value::EPSILON, |t| {
            if t.items()[0] == 0 {
                Value::EPSILON
            } else {
                Value::sym(0)
            }
        })
        .unwrap();
        assert!(matches!(
            check_monotone(&f, Direction::Nondecreasing),
            Err(CheckError::CodomainNotOrdered { .. })
        ));
    }
}
