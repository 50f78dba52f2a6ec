use std::collections::HashMap;

use crate::table::{TableFn, Value};
use crate::verdict::{MinWitness, Property, Verdict, Witness};

/// The two equivalent phrasings of preassociativity.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum PreassocForm {
    /// `F(y) = F(y') ⇒ F(x,y,z) = F(x,y',z)`.
    P1,
    /// `F(x) = F(x') ∧ F(y) = F(y') ⇒ F(x,y) = F(x',y')`.
    P2,
}

impl PreassocForm {
    pub fn property(self) -> Property {
        match self {
            PreassocForm::P1 => Property::PreassociativeP1,
            PreassocForm::P2 => Property::PreassociativeP2,
        }
    }
}

pub fn check_preassociative(f: &TableFn, form: PreassocForm) -> Verdict {
    match form {
        PreassocForm::P1 => check_p1(f),
        PreassocForm::P2 => check_p2(f),
    }
}

/// Tuples (ε included) grouped by value; members in index order.
pub(crate) fn value_classes(f: &TableFn) -> Vec<Vec<usize>> {
    let mut slots: HashMap<Value, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for idx in 0..f.space().total() {
        let slot = *slots.entry(f.at(idx)).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[slot].push(idx);
    }
    classes
}

/// Calls `visit(x, z)` for every nontrivial context around a block of
/// length `inner` (at least one of `x`, `z` nonempty).
fn for_each_context(f: &TableFn, inner: usize, mut visit: impl FnMut(usize, usize) -> bool) {
    let space = f.space();
    let room = f.max_arity() - inner;
    for lx in 0..=room {
        for lz in 0..=room - lx {
            if lx + lz == 0 {
                continue;
            }
            for x in space.indices_of_len(lx) {
                for z in space.indices_of_len(lz) {
                    if !visit(x, z) {
                        return;
                    }
                }
            }
        }
    }
}

fn check_p1(f: &TableFn) -> Verdict {
    let space = f.space();
    let n = f.max_arity();
    let classes = value_classes(f);

    // Each member against the shortest member of its class; any pair of
    // members is then related through the representative.
    let mut cases = 0u64;
    let mut violated = false;
    'classes: for class in &classes {
        let rep = class[0];
        for &y in &class[1..] {
            let mut ok = true;
            for_each_context(f, space.len_of(y), |x, z| {
                cases += 1;
                let a = space.concat(&[x, y, z]).expect("fits");
                let b = space.concat(&[x, rep, z]).expect("fits");
                ok = f.at(a) == f.at(b);
                ok
            });
            if !ok {
                violated = true;
                break 'classes;
            }
        }
    }
    if !violated {
        return Verdict::pass(Property::PreassociativeP1, cases, n);
    }

    // Smallest witness over all pairs within each class.
    let mut cases = 0u64;
    let mut best = MinWitness::default();
    for class in &classes {
        for (i, &y_ref) in class.iter().enumerate() {
            for &y in &class[i + 1..] {
                for_each_context(f, space.len_of(y), |x, z| {
                    cases += 1;
                    let a = space.concat(&[x, y, z]).expect("fits");
                    let b = space.concat(&[x, y_ref, z]).expect("fits");
                    if f.at(a) != f.at(b) {
                        let (tx, ty, ty2, tz) = (
                            space.tuple(x),
                            space.tuple(y),
                            space.tuple(y_ref),
                            space.tuple(z),
                        );
                        best.offer(
                            Witness::new(f, &[("x", &tx), ("y", &ty), ("y'", &ty2), ("z", &tz)])
                                .value_of(f, "F(y)=F(y')", f.at(y))
                                .value_of(f, "F(x,y,z)", f.at(a))
                                .value_of(f, "F(x,y',z)", f.at(b)),
                        );
                    }
                    true
                });
            }
        }
    }
    Verdict::from_search(Property::PreassociativeP1, cases, n, best.into_inner())
}

/// `(x, y, F(x,y))` by tuple index.
type Pair = (usize, usize, Value);

fn check_p2(f: &TableFn) -> Verdict {
    let space = f.space();
    let n = f.max_arity();
    // bucket every (x, y) with |x|+|y| <= N by (F(x), F(y))
    let mut buckets: HashMap<(Value, Value), Vec<Pair>> = HashMap::new();
    let mut cases = 0u64;
    let mut violated = false;
    for x in 0..space.total() {
        let room = n - space.len_of(x);
        for ly in 0..=room {
            for y in space.indices_of_len(ly) {
                cases += 1;
                let xy = space.concat(&[x, y]).expect("fits");
                let members = buckets.entry((f.at(x), f.at(y))).or_default();
                if let Some(&(_, _, v)) = members.first() {
                    violated |= v != f.at(xy);
                }
                members.push((x, y, f.at(xy)));
            }
        }
    }
    if !violated {
        return Verdict::pass(Property::PreassociativeP2, cases, n);
    }
    let mut best = MinWitness::default();
    let mut keys: Vec<_> = buckets.keys().copied().collect();
    keys.sort();
    for key in keys {
        let members = &buckets[&key];
        for &(x, y, v) in members {
            for &(x2, y2, v2) in members {
                if v == v2 {
                    continue;
                }
                cases += 1;
                let (tx, ty, tx2, ty2) = (
                    space.tuple(x),
                    space.tuple(y),
                    space.tuple(x2),
                    space.tuple(y2),
                );
                best.offer(
                    Witness::new(f, &[("x", &tx), ("y", &ty), ("x'", &tx2), ("y'", &ty2)])
                        .value_of(f, "F(x)=F(x')", key.0)
                        .value_of(f, "F(y)=F(y')", key.1)
                        .value_of(f, "F(x,y)", v)
                        .value_of(f, "F(x',y')", v2),
                );
            }
        }
    }
    Verdict::from_search(Property::PreassociativeP2, cases, n, best.into_inner())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::Chain;

    fn length_fn(m: usize, n: usize) -> TableFn {
        let codomain = (0..=n).map(|i| i.to_string()).collect();
        TableFn::from_fn(Chain::numeric(m).unwrap(), codomain, n, Value::sym(0), |t| {
            Value::sym(t.len())
        })
        .unwrap()
    }

    fn remark_function(n: usize) -> TableFn {
        let chain = Chain::new(["a", "b"]).unwrap();
        TableFn::from_fn(chain.clone(), chain.elements().to_vec(), n, Value::sym(0), |t| {
            Value::sym(t.items()[0] as usize)
        })
        .unwrap()
    }

    #[test]
    fn length_function_is_preassociative() {
        let f = length_fn(2, 3);
        assert!(check_preassociative(&f, PreassocForm::P1).holds);
        assert!(check_preassociative(&f, PreassocForm::P2).holds);
    }

    #[test]
    fn injective_image_of_sum_is_preassociative() {
        // F_n(x) = f(Σxᵢ) with f one-to-one; symbols are the sums relabelled
        let n = 3;
        let codomain: Vec<String> = (0..=n).map(|s| format!("s{}", 10 + 3 * s)).collect();
        let f = TableFn::from_fn(Chain::numeric(2).unwrap(), codomain, n, Value::EPSILON, |t| {
            Value::sym(t.items().iter().sum::<u32>() as usize)
        })
        .unwrap();
        assert!(check_preassociative(&f, PreassocForm::P1).holds);
        assert!(check_preassociative(&f, PreassocForm::P2).holds);
    }

    #[test]
    fn remark_function_fails_with_pinned_witness() {
        let f = remark_function(2);
        let v = check_preassociative(&f, PreassocForm::P1);
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert_eq!(w.part("x").unwrap(), &[] as &[String]);
        assert_eq!(w.part("y").unwrap(), &["a"]);
        assert_eq!(w.part("y'").unwrap(), &[] as &[String]);
        assert_eq!(w.part("z").unwrap(), &["b"]);
        assert_eq!(
            w.values,
            vec![
                ("F(y)=F(y')".to_string(), "a".to_string()),
                ("F(x,y,z)".to_string(), "a".to_string()),
                ("F(x,y',z)".to_string(), "b".to_string()),
            ]
        );
        assert!(!check_preassociative(&f, PreassocForm::P2).holds);
    }

    #[test]
    fn classes_cover_every_tuple_once() {
        let f = length_fn(3, 3);
        let classes = value_classes(&f);
        let total: usize = classes.iter().map(Vec::len).sum();
        assert_eq!(total, f.space().total());
        assert_eq!(classes.len(), 4);
    }
}
