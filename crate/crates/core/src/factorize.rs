//! Factorization of preassociative functions through associative
//! operations, and the constructions running the other way.

use crate::chain::{Chain, TupleKey};
use crate::checks::{
    check_associative, check_preassociative, check_standard,
    check_unarily_quasi_range_idempotent, AssocForm, PreassocForm,
};
use crate::error::FactorizeError;
use crate::quasi_inverse::{canonical_quasi_inverse, is_quasi_inverse, FiniteMap};
use crate::space::TupleSpace;
use crate::table::{BinaryTable, TableFn, Value};

/// `F♭ = f ∘ H♭` with `H♭ = g ∘ F♭`.
#[derive(Clone, Debug)]
pub struct Factorization {
    /// The chosen quasi-inverse of `F₁`, defined on `ran(F₁)`.
    pub g: FiniteMap,
    /// The associative ε-standard operation.
    pub h: TableFn,
    /// `F₁` restricted to `ran(H♭)`.
    pub f: FiniteMap,
    pub f1_injective: bool,
    pub h1_injective: bool,
    pub h1_identity: bool,
}

impl Factorization {
    /// The three flags agree whenever the factorization is valid.
    pub fn triad_agrees(&self) -> bool {
        self.f1_injective == self.h1_injective && self.h1_injective == self.h1_identity
    }
}

/// Factor a standard, preassociative, unarily quasi-range-idempotent `F`.
/// `pins` are `(y, x)` choices for the quasi-inverse of `F₁`.
pub fn factorize<S: AsRef<str>>(
    f_in: &TableFn,
    pins: &[(S, S)],
) -> Result<Factorization, FactorizeError> {
    for verdict in [
        check_standard(f_in),
        check_preassociative(f_in, PreassocForm::P1),
        check_unarily_quasi_range_idempotent(f_in),
    ] {
        if !verdict.holds {
            return Err(FactorizeError::PreconditionViolated(Box::new(verdict)));
        }
    }
    let f1 = f_in.unary_map();
    let g = canonical_quasi_inverse(&f1, pins)?;
    let h = f_in.compose_left(&g, None)?;

    let space = h.space();
    let mut ran_h: Vec<u32> = space
        .nonempty()
        .map(|i| h.domain_of(h.at(i)).expect("H is an operation"))
        .collect();
    ran_h.sort_unstable();
    ran_h.dedup();
    let ran_symbols: Vec<&str> = ran_h.iter().map(|&s| h.domain().symbol(s)).collect();
    let f = f1.restrict(&ran_symbols)?;

    verify(f_in, &h, &f)?;
    let h1: Vec<Value> = space.indices_of_len(1).map(|i| h.at(i)).collect();
    let h1_identity = h1
        .iter()
        .enumerate()
        .all(|(s, &v)| h.domain_of(v) == Some(s as u32));
    let mut distinct = h1.clone();
    distinct.sort();
    distinct.dedup();
    Ok(Factorization {
        f1_injective: f1.is_injective(),
        h1_injective: distinct.len() == h1.len(),
        h1_identity,
        g,
        h,
        f,
    })
}

fn verify(f_in: &TableFn, h: &TableFn, f: &FiniteMap) -> Result<(), FactorizeError> {
    let fail = |msg: String| Err(FactorizeError::VerificationFailed(msg));
    if let Some((a, b)) = f.injectivity_witness() {
        return fail(format!("f({a}) = f({b})"));
    }
    let space = h.space();
    for idx in space.nonempty() {
        let hv = h.render(h.at(idx));
        let expected = f_in.render(f_in.at(idx));
        if f.apply(hv) != Some(expected) {
            let args = h.domain().render(&space.tuple(idx)).join(",");
            return fail(format!("f(H({args})) ≠ F({args}) = {expected}"));
        }
    }
    let a1 = check_associative(h, AssocForm::A1)?;
    if let Some(w) = a1.witness {
        return fail(format!("H is not associative: {w}"));
    }
    Ok(())
}

/// Chain positions of a unary map whose values are chain elements.
fn unary_positions(chain: &Chain, f1: &FiniteMap) -> Result<Vec<u32>, FactorizeError> {
    chain
        .elements()
        .iter()
        .map(|x| {
            let y = f1
                .apply(x)
                .ok_or_else(|| crate::error::TableError::MapNotTotal(x.clone()))?;
            Ok(chain.index_of(y)?)
        })
        .collect()
}

/// The Eq (1.2)-style right fold: `G₁ = f1`, `G_n = G₂(G_{n-1}, x_n)`.
/// No conditions are checked.
pub(crate) fn fold_operation(chain: &Chain, n: usize, f1: &[u32], f2: impl Fn(u32, u32) -> u32) -> TableFn {
    let space = TupleSpace::new(chain.len(), n);
    let m = chain.len();
    let mut vals: Vec<u32> = vec![0; space.total()];
    for len in 1..=n {
        for code in 0..space.count(len) {
            let idx = space.index_of_code(len, code);
            let last = (code % m) as u32;
            vals[idx] = if len == 1 {
                f1[last as usize]
            } else if len == 2 {
                f2((code / m) as u32, last)
            } else {
                f2(vals[space.index_of_code(len - 1, code / m)], last)
            };
        }
    }
    let mut values = Vec::with_capacity(vals.len());
    values.push(Value::EPSILON);
    values.extend(vals[1..].iter().map(|&v| Value::sym(v as usize)));
    TableFn::new(chain.clone(), chain.elements().to_vec(), n, values).expect("operation table")
}

/// Checks the three conditions on `(F₁, F₂)` and returns the unique
/// associative ε-standard extension at arity `n`.
pub fn extend_unary_binary(
    f1: &FiniteMap,
    f2: &BinaryTable,
    n: usize,
) -> Result<TableFn, FactorizeError> {
    if !f2.is_operation() {
        return Err(FactorizeError::ConditionFailed {
            condition: "iii",
            detail: "F₂ is not an operation on the chain".into(),
        });
    }
    let chain = f2.domain().clone();
    let u = unary_positions(&chain, f1)?;
    let m = chain.len() as u32;
    let sym = |s: u32| chain.symbol(s).to_string();
    for x in 0..m {
        if u[u[x as usize] as usize] != u[x as usize] {
            return Err(FactorizeError::ConditionFailed {
                condition: "i",
                detail: format!(
                    "F₁(F₁({})) = {} ≠ {} = F₁({})",
                    sym(x),
                    sym(u[u[x as usize] as usize]),
                    sym(u[x as usize]),
                    sym(x)
                ),
            });
        }
    }
    for x in 0..m {
        for y in 0..m {
            let v = f2.op(x, y);
            if u[v as usize] != v {
                return Err(FactorizeError::ConditionFailed {
                    condition: "i",
                    detail: format!("F₁(F₂({},{})) ≠ F₂({},{})", sym(x), sym(y), sym(x), sym(y)),
                });
            }
            if f2.op(u[x as usize], y) != v || f2.op(x, u[y as usize]) != v {
                return Err(FactorizeError::ConditionFailed {
                    condition: "ii",
                    detail: format!(
                        "F₂({x},{y}) differs from F₂(F₁({x}),{y}) or F₂({x},F₁({y}))",
                        x = sym(x),
                        y = sym(y)
                    ),
                });
            }
        }
    }
    if let Some((x, y, z)) = f2.associativity_witness() {
        return Err(FactorizeError::ConditionFailed {
            condition: "iii",
            detail: format!("F₂ not associative at ({},{},{})", sym(x), sym(y), sym(z)),
        });
    }
    let g = fold_operation(&chain, n, &u, |a, b| f2.op(a, b));
    let a1 = check_associative(&g, AssocForm::A1)?;
    if let Some(w) = a1.witness {
        return Err(FactorizeError::VerificationFailed(format!(
            "extension is not associative: {w}"
        )));
    }
    Ok(g)
}

/// `G♭ = F₁ ∘ H♭` where `H` extends `(id, H₂)`; `G(ε) = ε`.
pub fn build_from_f1_h2(
    f1: &FiniteMap,
    h2: &BinaryTable,
    n: usize,
) -> Result<TableFn, FactorizeError> {
    if let Some((a, b)) = f1.injectivity_witness() {
        return Err(FactorizeError::F1NotOneToOne(format!("F₁({a}) = F₁({b})")));
    }
    if !h2.is_operation() {
        return Err(FactorizeError::H2NotAssociative(
            "H₂ is not an operation on the chain".into(),
        ));
    }
    let chain = h2.domain();
    if let Some((x, y, z)) = h2.associativity_witness() {
        let s = |v: u32| chain.symbol(v);
        return Err(FactorizeError::H2NotAssociative(format!(
            "H₂(H₂({x},{y}),{z}) = {} ≠ {} = H₂({x},H₂({y},{z}))",
            s(h2.op(h2.op(x, y), z)),
            s(h2.op(x, h2.op(y, z))),
            x = s(x),
            y = s(y),
            z = s(z)
        )));
    }
    let id = FiniteMap::identity(chain.elements())?;
    let h = extend_unary_binary(&id, h2, n)?;
    Ok(h.compose_left(f1, None)?)
}

/// `F_n(x) = F₂((g∘F_{n-1})(x₁..x_{n-1}), x_n)`, starting from `F₁`.
pub fn recursive_eval(
    f1: &FiniteMap,
    f2: &BinaryTable,
    g: &FiniteMap,
    x: &TupleKey,
) -> Result<String, FactorizeError> {
    if let Some(failure) = is_quasi_inverse(f1, g)? {
        return Err(FactorizeError::GNotQuasiInverse(failure.to_string()));
    }
    let chain = f2.domain();
    let Some((&first, rest)) = x.items().split_first() else {
        return Err(crate::error::TableError::EmptyTuple.into());
    };
    let mut v = f1
        .apply(chain.symbol(first))
        .ok_or_else(|| crate::error::TableError::UnknownSymbol(chain.symbol(first).into()))?
        .to_string();
    for &xi in rest {
        let back = g.apply(&v).ok_or_else(|| {
            FactorizeError::GNotQuasiInverse(format!("{v} is not in the domain of g"))
        })?;
        let b = chain.index_of(back)?;
        v = f2.render(f2.get(b, xi)).to_string();
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checks::{check_preassociative, holds};
    use crate::verdict::Property;

    fn chain3() -> Chain {
        Chain::numeric(3).unwrap()
    }

    fn min_ext(n: usize) -> TableFn {
        TableFn::operation(chain3(), n, |t| *t.iter().min().unwrap()).unwrap()
    }

    fn sigma() -> FiniteMap {
        FiniteMap::from_pairs(
            &["0", "1", "2"],
            &["0", "1", "2"],
            &[("0", "1"), ("1", "2"), ("2", "0")],
        )
        .unwrap()
    }

    fn min_table() -> BinaryTable {
        BinaryTable::operation(chain3(), |x, y| x.min(y)).unwrap()
    }

    const NO_PINS: &[(&str, &str)] = &[];

    #[test]
    fn relabelled_min_factors_through_min() {
        let f_in = min_ext(3).compose_left(&sigma(), None).unwrap();
        let fac = factorize(&f_in, NO_PINS).unwrap();
        assert_eq!(fac.h, min_ext(3));
        assert_eq!(fac.f, sigma());
        assert!(fac.f1_injective && fac.h1_identity && fac.triad_agrees());
    }

    #[test]
    fn associative_input_is_a_fixed_point() {
        let fac = factorize(&min_ext(3), NO_PINS).unwrap();
        assert_eq!(fac.h, min_ext(3));
        assert_eq!(fac.f, FiniteMap::identity(chain3().elements()).unwrap());
    }

    #[test]
    fn length_function_is_rejected() {
        let f = TableFn::from_fn(
            Chain::numeric(2).unwrap(),
            vec!["0".into(), "1".into(), "2".into(), "3".into()],
            3,
            Value::sym(0),
            |t| Value::sym(t.len()),
        )
        .unwrap();
        match factorize(&f, NO_PINS) {
            Err(FactorizeError::PreconditionViolated(v)) => {
                assert_eq!(v.property, Property::UnarilyQuasiRangeIdempotent)
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn non_injective_unary_part_triad() {
        // F = clamp of min into [1,2]: F₁ = med(1,x,2), not one-to-one
        let chain = Chain::numeric(4).unwrap();
        let f = TableFn::operation(chain, 3, |t| (*t.iter().min().unwrap()).clamp(1, 2)).unwrap();
        let fac = factorize(&f, &[("1", "1"), ("2", "2")]).unwrap();
        assert!(!fac.f1_injective && !fac.h1_injective && !fac.h1_identity);
        assert_eq!(fac.g.apply("1"), Some("1"));
        assert_eq!(fac.g.apply("2"), Some("2"));
        let smallest = factorize(&f, NO_PINS).unwrap();
        assert_eq!(smallest.g.apply("1"), Some("0"));
        assert_eq!(smallest.g.apply("2"), Some("2"));
    }

    #[test]
    fn extension_examples() {
        let id = FiniteMap::identity(chain3().elements()).unwrap();
        assert_eq!(extend_unary_binary(&id, &min_table(), 4).unwrap(), min_ext(4));

        let two = Chain::numeric(2).unwrap();
        let xor = BinaryTable::operation(two.clone(), |x, y| x ^ y).unwrap();
        let id2 = FiniteMap::identity(two.elements()).unwrap();
        let g = extend_unary_binary(&id2, &xor, 4).unwrap();
        assert!(holds(&g, Property::AssociativeA1));

        let flip = FiniteMap::from_pairs(&["0", "1"], &["0", "1"], &[("0", "1"), ("1", "0")])
            .unwrap();
        let min2 = BinaryTable::operation(two, |x, y| x.min(y)).unwrap();
        assert!(matches!(
            extend_unary_binary(&flip, &min2, 3),
            Err(FactorizeError::ConditionFailed { condition: "i", .. })
        ));
    }

    #[test]
    fn build_and_round_trip() {
        let g = build_from_f1_h2(&sigma(), &min_table(), 3).unwrap();
        assert!(check_preassociative(&g, PreassocForm::P1).holds);
        assert!(check_unarily_quasi_range_idempotent(&g).holds);
        let fac = factorize(&g, NO_PINS).unwrap();
        assert_eq!(fac.h, min_ext(3));

        let id = FiniteMap::identity(chain3().elements()).unwrap();
        assert_eq!(build_from_f1_h2(&id, &min_table(), 3).unwrap(), min_ext(3));

        let sub = BinaryTable::operation(chain3(), |x, y| (x + 3 - y) % 3).unwrap();
        assert!(matches!(
            build_from_f1_h2(&sigma(), &sub, 3),
            Err(FactorizeError::H2NotAssociative(_))
        ));
    }

    #[test]
    fn recursive_evaluation_matches_table() {
        let f_in = min_ext(3).compose_left(&sigma(), None).unwrap();
        let f1 = f_in.unary_map();
        let f2 = f_in.binary_part().unwrap();
        let g = canonical_quasi_inverse(&f1, NO_PINS).unwrap();
        let space = f_in.space();
        for idx in space.nonempty() {
            let x = space.tuple(idx);
            assert_eq!(
                recursive_eval(&f1, &f2, &g, &x).unwrap(),
                f_in.render(f_in.at(idx))
            );
        }
        let x = chain3().tuple(&["2", "0", "1"]).unwrap();
        assert_eq!(recursive_eval(&f1, &f2, &g, &x).unwrap(), "1");
        let bad = FiniteMap::from_pairs(
            &["0", "1", "2"],
            &["0", "1", "2"],
            &[("0", "0"), ("1", "1"), ("2", "2")],
        )
        .unwrap();
        assert!(matches!(
            recursive_eval(&f1, &f2, &bad, &x),
            Err(FactorizeError::GNotQuasiInverse(_))
        ));
    }

    #[test]
    fn remark_function_is_not_factorable() {
        let chain = Chain::new(["a", "b"]).unwrap();
        let f = TableFn::from_fn(chain.clone(), chain.elements().to_vec(), 2, Value::sym(0), |t| {
            Value::sym(t.items()[0] as usize)
        })
        .unwrap();
        assert!(!check_preassociative(&f, PreassocForm::P1).holds);
        assert!(matches!(
            factorize(&f, NO_PINS),
            Err(FactorizeError::PreconditionViolated(_))
        ));
    }
}
