use crate::chain::TupleKey;
use crate::error::CheckError;
use crate::table::TableFn;
use crate::verdict::{Property, Verdict, Witness};

use super::{require_operation, substituted};

/// The three equivalent phrasings of associativity.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum AssocForm {
    /// `F(x,y,z) = F(x,F(y),z)`.
    A1,
    /// `F(x,F(y),z)` depends only on the concatenation `(x,y,z)`.
    A2,
    /// `F(x,y) = F(F(x),F(y))`.
    A3,
}

impl AssocForm {
    pub fn property(self) -> Property {
        match self {
            AssocForm::A1 => Property::AssociativeA1,
            AssocForm::A2 => Property::AssociativeA2,
            AssocForm::A3 => Property::AssociativeA3,
        }
    }
}

pub fn check_associative(f: &TableFn, form: AssocForm) -> Result<Verdict, CheckError> {
    require_operation(f)?;
    match form {
        AssocForm::A1 => Ok(check_a1(f)),
        AssocForm::A2 | AssocForm::A3 => {
            if !f.default_value().is_epsilon() {
                return Err(CheckError::DefaultNotEpsilon {
                    form: if form == AssocForm::A2 { "A2" } else { "A3" },
                });
            }
            Ok(if form == AssocForm::A2 {
                check_a2(f)
            } else {
                check_a3(f)
            })
        }
    }
}

/// Split `w = (x, y, z)` given by lengths; returns tuple indices.
struct Split {
    x: usize,
    y: usize,
    z: usize,
}

fn split3(f: &TableFn, len: usize, code: usize, lx: usize, ly: usize) -> Split {
    let space = f.space();
    let m = space.base();
    let lz = len - lx - ly;
    let pz = m.pow(lz as u32);
    let py = m.pow(ly as u32);
    Split {
        x: space.index_of_code(lx, code / (py * pz)),
        y: space.index_of_code(ly, (code / pz) % py),
        z: space.index_of_code(lz, code % pz),
    }
}

fn tuples(f: &TableFn, s: &Split) -> (TupleKey, TupleKey, TupleKey) {
    let space = f.space();
    (space.tuple(s.x), space.tuple(s.y), space.tuple(s.z))
}

/// Index of `(x, v, z)` where `v` is a value substituted as a tuple.
fn with_substitute(f: &TableFn, x: usize, v: Option<u32>, z: usize) -> Option<usize> {
    let space = f.space();
    match v {
        None => space.concat(&[x, z]),
        Some(s) => space.concat_around(x, s, z),
    }
}

fn check_a1(f: &TableFn) -> Verdict {
    let space = f.space();
    let n = f.max_arity();
    let mut cases = 0u64;
    let mut witness = None;
    // (total length, concatenation, split) order
    for len in 0..=n {
        for code in 0..space.count(len) {
            let w = space.index_of_code(len, code);
            for lx in 0..=len {
                for ly in 0..=len - lx {
                    let s = split3(f, len, code, lx, ly);
                    let inner = f.at(s.y);
                    if ly > 0 && inner.is_epsilon() {
                        cases += 1;
                        if witness.is_none() {
                            let (x, y, z) = tuples(f, &s);
                            witness = Some(
                                Witness::new(f, &[("x", &x), ("y", &y), ("z", &z)])
                                    .value_of(f, "F(y)", inner)
                                    .note("F(y) = ε for nonempty y: not ε-standard"),
                            );
                        }
                        continue;
                    }
                    let Some(sub) = with_substitute(f, s.x, substituted(f, inner), s.z) else {
                        continue;
                    };
                    cases += 1;
                    if f.at(w) != f.at(sub) && witness.is_none() {
                        let (x, y, z) = tuples(f, &s);
                        witness = Some(
                            Witness::new(f, &[("x", &x), ("y", &y), ("z", &z)])
                                .value_of(f, "F(x,y,z)", f.at(w))
                                .value_of(f, "F(y)", inner)
                                .value_of(f, "F(x,F(y),z)", f.at(sub)),
                        );
                    }
                }
            }
        }
    }
    Verdict::from_search(Property::AssociativeA1, cases, n, witness)
}

fn check_a2(f: &TableFn) -> Verdict {
    let space = f.space();
    let n = f.max_arity();
    let mut cases = 0u64;
    let mut witness = None;
    for len in 1..=n {
        for code in 0..space.count(len) {
            let w = space.index_of_code(len, code);
            // reference decomposition (ε, ε, w) evaluates to F(w)
            let reference = f.at(w);
            for lx in 0..=len {
                for ly in 1..=len - lx {
                    let s = split3(f, len, code, lx, ly);
                    let Some(sub) = with_substitute(f, s.x, substituted(f, f.at(s.y)), s.z) else {
                        continue;
                    };
                    cases += 1;
                    if f.at(sub) != reference && witness.is_none() {
                        let (x, y, z) = tuples(f, &s);
                        witness = Some(
                            Witness::new(f, &[("x", &x), ("y", &y), ("z", &z)])
                                .value_of(f, "F(x,F(y),z)", f.at(sub))
                                .value_of(f, "F(x',F(y'),z')", reference)
                                .note("(x',y',z') = (ε, ε, x·y·z)"),
                        );
                    }
                }
            }
        }
    }
    Verdict::from_search(Property::AssociativeA2, cases, n, witness)
}

fn check_a3(f: &TableFn) -> Verdict {
    let space = f.space();
    let n = f.max_arity();
    let mut cases = 0u64;
    let mut witness = None;
    for len in 0..=n {
        for code in 0..space.count(len) {
            let w = space.index_of_code(len, code);
            for lx in 0..=len {
                let s = split3(f, len, code, lx, len - lx);
                let mut reduced = Vec::with_capacity(2);
                reduced.extend(substituted(f, f.at(s.x)));
                reduced.extend(substituted(f, f.at(s.y)));
                let Some(sub) = space.index(&reduced) else {
                    continue;
                };
                cases += 1;
                if f.at(w) != f.at(sub) && witness.is_none() {
                    let (x, y, _) = tuples(f, &s);
                    witness = Some(
                        Witness::new(f, &[("x", &x), ("y", &y)])
                            .value_of(f, "F(x,y)", f.at(w))
                            .value_of(f, "F(x)", f.at(s.x))
                            .value_of(f, "F(y)", f.at(s.y))
                            .value_of(f, "F(F(x),F(y))", f.at(sub)),
                    );
                }
            }
        }
    }
    Verdict::from_search(Property::AssociativeA3, cases, n, witness)
}

/// `F₂(F₂(x,y),z) = F₂(x,F₂(y,z))` by triple enumeration.
pub fn check_associative_binary(f: &TableFn) -> Result<Verdict, CheckError> {
    require_operation(f)?;
    let n = f.max_arity();
    if n < 2 {
        return Ok(Verdict::pass(Property::AssociativeBinary, 0, n));
    }
    let space = f.space();
    let m = f.domain().len() as u32;
    let op = |a: u32, b: u32| f.at(space.index(&[a, b]).expect("arity 2 available"));
    let mut cases = 0u64;
    for x in 0..m {
        for y in 0..m {
            for z in 0..m {
                cases += 1;
                let (xy, yz) = (op(x, y), op(y, z));
                let left = substituted(f, xy).map(|a| op(a, z));
                let right = substituted(f, yz).map(|b| op(x, b));
                if left.is_none() || left != right {
                    let t = |v: u32| TupleKey(vec![v]);
                    let mut w = Witness::new(f, &[("x", &t(x)), ("y", &t(y)), ("z", &t(z))])
                        .value_of(f, "F₂(x,y)", xy)
                        .value_of(f, "F₂(y,z)", yz);
                    w = match (left, right) {
                        (Some(l), Some(r)) => w
                            .value_of(f, "F₂(F₂(x,y),z)", l)
                            .value_of(f, "F₂(x,F₂(y,z))", r),
                        _ => w.note("binary part takes the value ε"),
                    };
                    return Ok(Verdict::fail(Property::AssociativeBinary, cases, n, w));
                }
            }
        }
    }
    Ok(Verdict::pass(Property::AssociativeBinary, cases, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::Chain;
    use crate::table::Value;

    fn min_ext(m: usize, n: usize) -> TableFn {
        TableFn::operation(Chain::numeric(m).unwrap(), n, |t| *t.iter().min().unwrap()).unwrap()
    }

    fn all_forms(f: &TableFn) -> [bool; 3] {
        [AssocForm::A1, AssocForm::A2, AssocForm::A3].map(|form| {
            check_associative(f, form).unwrap().holds
        })
    }

    #[test]
    fn min_extension_is_associative() {
        assert_eq!(all_forms(&min_ext(3, 4)), [true; 3]);
    }

    #[test]
    fn first_element_operation_is_associative() {
        let f = TableFn::operation(Chain::numeric(2).unwrap(), 3, |t| t[0]).unwrap();
        assert_eq!(all_forms(&f), [true; 3]);
    }

    #[test]
    fn xor_with_complement_unary_part_fails() {
        // F₁(x) = 1 - x, F_n = XOR fold for n >= 2
        let f = TableFn::operation(Chain::numeric(2).unwrap(), 3, |t| {
            if t.len() == 1 {
                1 - t[0]
            } else {
                t.iter().fold(0, |a, &b| a ^ b)
            }
        })
        .unwrap();
        let v = check_associative(&f, AssocForm::A1).unwrap();
        assert!(!v.holds);
        let w = v.witness.unwrap();
        // smallest violation: x = ε, y = (0), z = ε gives F(0)=1 vs F(F(0)) = F(1) = 0
        assert_eq!(w.part("x").unwrap(), &[] as &[String]);
        assert_eq!(w.part("y").unwrap(), &["0"]);
        assert_eq!(w.part("z").unwrap(), &[] as &[String]);
        assert_eq!(all_forms(&f), [false; 3]);
    }

    #[test]
    fn epsilon_substitution_is_reported() {
        let chain = Chain::numeric(2).unwrap();
        let f = TableFn::from_fn(chain.clone(), chain.elements().to_vec(), 2, Value::EPSILON, |t| {
            // first element, except (1,0) ↦ ε
            if t.items() == [1, 0] {
                Value::EPSILON
            } else {
                Value::sym(t.items()[0] as usize)
            }
        })
        .unwrap();
        let v = check_associative(&f, AssocForm::A1).unwrap();
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert!(w.note.as_deref().unwrap().contains("not ε-standard"));
        assert_eq!(w.part("y").unwrap(), &["1", "0"]);
    }

    #[test]
    fn non_operation_and_default_errors() {
        let len = TableFn::from_fn(
            Chain::numeric(2).unwrap(),
            vec!["1".into(), "2".into()],
            2,
            Value::EPSILON,
            |t| Value::sym(t.len() - 1),
        )
        .unwrap();
        assert!(matches!(
            check_associative(&len, AssocForm::A1),
            Err(CheckError::NotAnOperation(_))
        ));
        let chain = Chain::numeric(2).unwrap();
        let with_default =
            TableFn::from_fn(chain.clone(), chain.elements().to_vec(), 2, Value::sym(0), |t| {
                Value::sym(t.items()[0] as usize)
            })
            .unwrap();
        assert!(check_associative(&with_default, AssocForm::A1).is_ok());
        assert!(matches!(
            check_associative(&with_default, AssocForm::A2),
            Err(CheckError::DefaultNotEpsilon { form: "A2" })
        ));
    }

    #[test]
    fn binary_associativity_triple_loop() {
        let chain = Chain::numeric(3).unwrap();
        let sub = TableFn::operation(chain, 2, |t| {
            if t.len() == 1 {
                t[0]
            } else {
                (t[0] + 3 - t[1]) % 3
            }
        })
        .unwrap();
        let v = check_associative_binary(&sub).unwrap();
        assert!(!v.holds);
        assert!(check_associative_binary(&min_ext(3, 2)).unwrap().holds);
    }
}
