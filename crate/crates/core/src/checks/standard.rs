use crate::chain::TupleKey;
use crate::table::TableFn;
use crate::verdict::{Property, Verdict, Witness};

/// `F(x) = F(ε)` only for `x = ε`.
pub fn check_standard(f: &TableFn) -> Verdict {
    let space = f.space();
    let default = f.default_value();
    let mut cases = 0u64;
    for idx in space.nonempty() {
        cases += 1;
        if f.at(idx) == default {
            let x = space.tuple(idx);
            let w = Witness::new(f, &[("x", &x)])
                .value_of(f, "F(x)", f.at(idx))
                .value_of(f, "F(ε)", default);
            return Verdict::fail(Property::Standard, cases, f.max_arity(), w);
        }
    }
    Verdict::pass(Property::Standard, cases, f.max_arity())
}

/// Standard, default ε, and an operation into `X ∪ {ε}`.
pub fn check_epsilon_standard(f: &TableFn) -> Verdict {
    let n = f.max_arity();
    let default = f.default_value();
    if !default.is_epsilon() {
        let w = Witness::new(f, &[("x", &TupleKey::empty())])
            .value_of(f, "F(ε)", default)
            .note("default value is not ε");
        return Verdict::fail(Property::EpsilonStandard, 1, n, w);
    }
    let standard = check_standard(f);
    let mut cases = standard.cases_checked + 1;
    if let Some(w) = standard.witness {
        return Verdict::fail(Property::EpsilonStandard, cases, n, w);
    }
    if let Some(sym) = f.non_operation_symbol() {
        let space = f.space();
        for idx in space.nonempty() {
            cases += 1;
            let v = f.at(idx);
            if !v.is_epsilon() && f.domain_of(v).is_none() {
                let w = Witness::new(f, &[("x", &space.tuple(idx))])
                    .value_of(f, "F(x)", v)
                    .note("value is not a domain element");
                return Verdict::fail(Property::EpsilonStandard, cases, n, w);
            }
        }
        let w = Witness::new(f, &[("x", &TupleKey::empty())])
            .note(format!("codomain symbol `{sym}` is not a domain element"));
        return Verdict::fail(Property::EpsilonStandard, cases, n, w);
    }
    Verdict::pass(Property::EpsilonStandard, cases, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::Chain;
    use crate::table::Value;

    fn length_fn(m: usize, n: usize) -> TableFn {
        let codomain = (0..=n).map(|i| i.to_string()).collect();
        TableFn::from_fn(Chain::numeric(m).unwrap(), codomain, n, Value::sym(0), |t| {
            Value::sym(t.len())
        })
        .unwrap()
    }

    #[test]
    fn length_function_is_standard() {
        let v = check_standard(&length_fn(2, 3));
        assert!(v.holds);
        assert_eq!(v.cases_checked, 14);
        assert_eq!(v.max_arity, 3);
    }

    #[test]
    fn remark_function_is_not_standard() {
        let chain = Chain::new(["a", "b"]).unwrap();
        let f = TableFn::from_fn(chain.clone(), chain.elements().to_vec(), 3, Value::sym(0), |t| {
            Value::sym(t.items()[0] as usize)
        })
        .unwrap();
        let v = check_standard(&f);
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert_eq!(w.part("x").unwrap(), &["a"]);
        assert!(!check_epsilon_standard(&f).holds);
    }

    #[test]
    fn constant_with_default_equal_fails_on_shortest_tuple() {
        let f = TableFn::from_fn(Chain::numeric(2).unwrap(), vec!["c".into()], 2, Value::sym(0), |_| {
            Value::sym(0)
        })
        .unwrap();
        let v = check_standard(&f);
        assert_eq!(v.witness.unwrap().part("x").unwrap(), &["0"]);
        assert_eq!(v.cases_checked, 1);
    }

    #[test]
    fn epsilon_standard_needs_operation_values() {
        // standard, default ε, but values are lengths
        let f = TableFn::from_fn(
            Chain::numeric(2).unwrap(),
            vec!["1".into(), "2".into()],
            2,
            Value::EPSILON,
            |t| Value::sym(t.len() - 1),
        )
        .unwrap();
        assert!(check_standard(&f).holds);
        let v = check_epsilon_standard(&f);
        assert!(!v.holds);
        assert_eq!(v.witness.unwrap().part("x").unwrap(), &["0", "0"]);
        let min = TableFn::operation(Chain::numeric(2).unwrap(), 2, |t| *t.iter().min().unwrap())
            .unwrap();
        assert!(check_epsilon_standard(&min).holds);
    }
}
