use std::collections::BTreeMap;

use crate::chain::TupleKey;
use crate::error::CheckError;
use crate::table::{TableFn, Value};
use crate::verdict::{MinWitness, Property, Verdict, Witness};

use super::preassoc::value_classes;
use super::{require_operation, substituted};

/// `F(v)` where the value `v` is read back as a tuple (ε as the empty one).
fn reapply(f: &TableFn, v: Value) -> Value {
    let space = f.space();
    match substituted(f, v) {
        None => f.default_value(),
        Some(s) => f.at(space.singleton(s)),
    }
}

/// `F(k·v)`, or `None` when it does not fit.
fn reapply_k(f: &TableFn, v: Value, k: usize) -> Option<Value> {
    let space = f.space();
    match substituted(f, v) {
        None => Some(f.default_value()),
        Some(s) => space.replicate(space.singleton(s), k).map(|i| f.at(i)),
    }
}

fn single(s: u32) -> TupleKey {
    TupleKey(vec![s])
}

/// `F₁ = id`.
pub fn check_unarily_idempotent(f: &TableFn) -> Result<Verdict, CheckError> {
    require_operation(f)?;
    let space = f.space();
    let n = f.max_arity();
    let mut cases = 0u64;
    if n == 0 {
        return Ok(Verdict::pass(Property::UnarilyIdempotent, 0, n));
    }
    for s in 0..f.domain().len() as u32 {
        cases += 1;
        let v = f.at(space.singleton(s));
        if substituted(f, v) != Some(s) {
            let w = Witness::new(f, &[("x", &single(s))]).value_of(f, "F(x)", v);
            return Ok(Verdict::fail(Property::UnarilyIdempotent, cases, n, w));
        }
    }
    Ok(Verdict::pass(Property::UnarilyIdempotent, cases, n))
}

/// `F₁∘F♭ = F♭` on every nonempty tuple.
pub fn check_unarily_range_idempotent(f: &TableFn) -> Result<Verdict, CheckError> {
    require_operation(f)?;
    let space = f.space();
    let n = f.max_arity();
    let mut cases = 0u64;
    for idx in space.nonempty() {
        cases += 1;
        let v = f.at(idx);
        let again = reapply(f, v);
        if again != v {
            let w = Witness::new(f, &[("x", &space.tuple(idx))])
                .value_of(f, "F(x)", v)
                .value_of(f, "F(F(x))", again);
            return Ok(Verdict::fail(Property::UnarilyRangeIdempotent, cases, n, w));
        }
    }
    Ok(Verdict::pass(Property::UnarilyRangeIdempotent, cases, n))
}

/// `ran F₁ = ran F♭`; the witness is the shortest tuple whose value the
/// unary part never takes.
pub fn check_unarily_quasi_range_idempotent(f: &TableFn) -> Verdict {
    let space = f.space();
    let n = f.max_arity();
    let unary: std::collections::BTreeSet<Value> = if n >= 1 {
        space.indices_of_len(1).map(|i| f.at(i)).collect()
    } else {
        Default::default()
    };
    let mut cases = 0u64;
    for idx in space.nonempty() {
        cases += 1;
        let v = f.at(idx);
        if !unary.contains(&v) {
            let w = Witness::new(f, &[("x", &space.tuple(idx))])
                .value_of(f, "F(x)", v)
                .note("value not in the range of the unary part");
            return Verdict::fail(Property::UnarilyQuasiRangeIdempotent, cases, n, w);
        }
    }
    Verdict::pass(Property::UnarilyQuasiRangeIdempotent, cases, n)
}

/// `F(k·F(x)) = F(x)` for every nonempty `x` and `1 ≤ k ≤ N`.
pub fn check_range_idempotent(f: &TableFn) -> Result<Verdict, CheckError> {
    require_operation(f)?;
    let space = f.space();
    let n = f.max_arity();
    let mut cases = 0u64;
    for idx in space.nonempty() {
        let v = f.at(idx);
        for k in 1..=n {
            let Some(again) = reapply_k(f, v, k) else {
                break;
            };
            cases += 1;
            if again != v {
                let w = Witness::new(f, &[("x", &space.tuple(idx))])
                    .value("k", k.to_string())
                    .value_of(f, "F(x)", v)
                    .value_of(f, "F(k·F(x))", again);
                return Ok(Verdict::fail(Property::RangeIdempotent, cases, n, w));
            }
        }
    }
    Ok(Verdict::pass(Property::RangeIdempotent, cases, n))
}

/// `F_n(x,…,x) = x` for every element and arity.
pub fn check_idempotent(f: &TableFn) -> Result<Verdict, CheckError> {
    require_operation(f)?;
    let space = f.space();
    let n = f.max_arity();
    let mut cases = 0u64;
    for k in 1..=n {
        for s in 0..f.domain().len() as u32 {
            cases += 1;
            let idx = space.replicate(space.singleton(s), k).expect("k ≤ N");
            let v = f.at(idx);
            if substituted(f, v) != Some(s) {
                let w = Witness::new(f, &[("x", &space.tuple(idx))]).value_of(f, "F(x)", v);
                return Ok(Verdict::fail(Property::Idempotent, cases, n, w));
            }
        }
    }
    Ok(Verdict::pass(Property::Idempotent, cases, n))
}

/// `F(k·x) = F(x)` for every nonempty `x` and `k ≥ 2` with `k|x| ≤ N`.
pub fn check_replication_invariant(f: &TableFn) -> Verdict {
    let space = f.space();
    let n = f.max_arity();
    let mut cases = 0u64;
    let mut best = MinWitness::default();
    for idx in space.nonempty() {
        for k in 2.. {
            let Some(rep) = space.replicate(idx, k) else {
                break;
            };
            cases += 1;
            if f.at(rep) != f.at(idx) {
                best.offer(
                    Witness::new(f, &[("x", &space.tuple(idx))])
                        .value("k", k.to_string())
                        .value_of(f, "F(x)", f.at(idx))
                        .value_of(f, "F(k·x)", f.at(rep)),
                );
            }
        }
    }
    Verdict::from_search(Property::ReplicationInvariant, cases, n, best.into_inner())
}

/// `F(x) = F(y) ⇒ F(k·x) = F(k·y)` whenever both replications fit.
pub fn check_replication_preinvariant(f: &TableFn) -> Verdict {
    let space = f.space();
    let n = f.max_arity();
    let classes = value_classes(f);

    // against the shortest member; its replications fit whenever the
    // other member's do
    let mut cases = 0u64;
    let mut violated = false;
    'outer: for class in &classes {
        let rep = class[0];
        for &y in &class[1..] {
            for k in 2.. {
                let Some(ky) = space.replicate(y, k) else {
                    break;
                };
                let kr = space.replicate(rep, k).expect("shorter member fits");
                cases += 1;
                if f.at(ky) != f.at(kr) {
                    violated = true;
                    break 'outer;
                }
            }
        }
    }
    if !violated {
        return Verdict::pass(Property::ReplicationPreinvariant, cases, n);
    }
    let mut cases = 0u64;
    let mut best = MinWitness::default();
    for class in &classes {
        for (i, &x) in class.iter().enumerate() {
            for &y in &class[i + 1..] {
                for k in 2.. {
                    let Some(ky) = space.replicate(y, k) else {
                        break;
                    };
                    let kx = space.replicate(x, k).expect("earlier member fits");
                    cases += 1;
                    if f.at(kx) != f.at(ky) {
                        best.offer(
                            Witness::new(f, &[("x", &space.tuple(x)), ("y", &space.tuple(y))])
                                .value("k", k.to_string())
                                .value_of(f, "F(x)=F(y)", f.at(x))
                                .value_of(f, "F(k·x)", f.at(kx))
                                .value_of(f, "F(k·y)", f.at(ky)),
                        );
                    }
                }
            }
        }
    }
    Verdict::from_search(Property::ReplicationPreinvariant, cases, n, best.into_inner())
}

/// `F₁∘F₁ = F₁`.
pub fn check_unary_part_idempotent(f: &TableFn) -> Result<Verdict, CheckError> {
    require_operation(f)?;
    let space = f.space();
    let n = f.max_arity();
    let mut cases = 0u64;
    if n == 0 {
        return Ok(Verdict::pass(Property::UnaryPartIdempotent, 0, n));
    }
    for s in 0..f.domain().len() as u32 {
        cases += 1;
        let v = f.at(space.singleton(s));
        let again = reapply(f, v);
        if again != v {
            let w = Witness::new(f, &[("x", &single(s))])
                .value_of(f, "F₁(x)", v)
                .value_of(f, "F₁(F₁(x))", again);
            return Ok(Verdict::fail(Property::UnaryPartIdempotent, cases, n, w));
        }
    }
    Ok(Verdict::pass(Property::UnaryPartIdempotent, cases, n))
}

/// `F(F(x),F(x)) = F(x)` for every element.
pub fn check_binary_diagonal_fixed(f: &TableFn) -> Result<Verdict, CheckError> {
    require_operation(f)?;
    let space = f.space();
    let n = f.max_arity();
    let mut cases = 0u64;
    if n < 2 {
        return Ok(Verdict::pass(Property::BinaryDiagonalFixed, 0, n));
    }
    for s in 0..f.domain().len() as u32 {
        cases += 1;
        let v = f.at(space.singleton(s));
        let again = reapply_k(f, v, 2).expect("N ≥ 2");
        if again != v {
            let w = Witness::new(f, &[("x", &single(s))])
                .value_of(f, "F(x)", v)
                .value_of(f, "F(F(x),F(x))", again);
            return Ok(Verdict::fail(Property::BinaryDiagonalFixed, cases, n, w));
        }
    }
    Ok(Verdict::pass(Property::BinaryDiagonalFixed, cases, n))
}

/// The seven idempotence-family verdicts.
pub fn check_idempotence_suite(f: &TableFn) -> BTreeMap<Property, Result<Verdict, CheckError>> {
    let mut out = BTreeMap::new();
    out.insert(Property::UnarilyIdempotent, check_unarily_idempotent(f));
    out.insert(Property::UnarilyRangeIdempotent, check_unarily_range_idempotent(f));
    out.insert(
        Property::UnarilyQuasiRangeIdempotent,
        Ok(check_unarily_quasi_range_idempotent(f)),
    );
    out.insert(Property::RangeIdempotent, check_range_idempotent(f));
    out.insert(Property::Idempotent, check_idempotent(f));
    out.insert(Property::ReplicationInvariant, Ok(check_replication_invariant(f)));
    out.insert(Property::ReplicationPreinvariant, Ok(check_replication_preinvariant(f)));
    out
}
