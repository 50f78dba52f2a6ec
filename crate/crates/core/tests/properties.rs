use proptest::prelude::*;

use preassoc::generated::{eval_generated, tabulate, GeneratedFn, Interval, RealMap};
use preassoc::families::make_quasi_sum;
use preassoc::real::render_real;
use preassoc::{
    canonical_quasi_inverse, is_quasi_inverse, right_inverses, Chain, FiniteMap, TableFn,
    TupleKey, Value,
};

fn arb_table() -> impl Strategy<Value = TableFn> {
    (1usize..=3, 1usize..=3, 1usize..=3).prop_flat_map(|(m, k, n)| {
        let total: usize = (1..=n).map(|l| m.pow(l as u32)).sum();
        (
            prop::collection::vec(0..k, total),
            prop::option::of(0..k),
        )
            .prop_map(move |(vals, default)| {
                let codomain = (0..k).map(|i| format!("y{i}")).collect();
                let mut values = vec![default.map_or(Value::EPSILON, Value::sym)];
                values.extend(vals.into_iter().map(Value::sym));
                TableFn::new(Chain::numeric(m).unwrap(), codomain, n, values).unwrap()
            })
    })
}

fn arb_map() -> impl Strategy<Value = FiniteMap> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(a, b)| {
        prop::collection::vec(0..b, a).prop_map(move |graph| {
            let dom = (0..a).map(|i| format!("x{i}")).collect();
            let cod = (0..b).map(|i| format!("y{i}")).collect();
            FiniteMap::new(dom, cod, graph).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn concatenation_with_empty_is_neutral(f in arb_table(), pick in any::<prop::sample::Index>()) {
        let idx = 1 + pick.index(f.space().total() - 1);
        let x = f.space().tuple(idx);
        let e = TupleKey::empty();
        prop_assert_eq!(f.eval(&e.concat(&x)).unwrap(), f.eval(&x).unwrap());
        prop_assert_eq!(f.eval(&x.concat(&e)).unwrap(), f.eval(&x).unwrap());
    }

    #[test]
    fn unary_range_is_within_full_range(f in arb_table()) {
        let (r1, rflat) = f.ranges();
        prop_assert!(r1.is_subset(&rflat));
    }

    #[test]
    fn truncation_keeps_lower_arities(f in arb_table()) {
        let t = f.truncate(1).unwrap();
        for idx in t.space().nonempty() {
            prop_assert_eq!(t.at(idx), f.at(idx));
        }
    }

    #[test]
    fn canonical_quasi_inverse_is_a_quasi_inverse(f in arb_map()) {
        let g = canonical_quasi_inverse::<&str>(&f, &[]).unwrap();
        prop_assert!(is_quasi_inverse(&f, &g).unwrap().is_none());
        prop_assert!(right_inverses(&f).contains(&g));
    }

    #[test]
    fn restriction_to_the_range_stays_a_quasi_inverse(
        f in arb_map(),
        choice in any::<prop::sample::Index>(),
        fill in prop::collection::vec(any::<prop::sample::Index>(), 4),
    ) {
        // extend a right-inverse to the whole codomain with values it already takes
        let rs = right_inverses(&f);
        let r = &rs[choice.index(rs.len())];
        let taken: Vec<usize> = r.graph().to_vec();
        let graph: Vec<usize> = f
            .codomain()
            .iter()
            .enumerate()
            .map(|(j, y)| match r.index_in_domain(y) {
                Some(i) => r.graph()[i],
                None => taken[fill[j].index(taken.len())],
            })
            .collect();
        let g = FiniteMap::new(f.codomain().to_vec(), f.domain().to_vec(), graph).unwrap();
        prop_assert!(is_quasi_inverse(&f, &g).unwrap().is_none());
        let restricted = g.restrict(&f.range()).unwrap();
        prop_assert!(is_quasi_inverse(&f, &restricted).unwrap().is_none());
        prop_assert!(is_quasi_inverse(&g, &f).unwrap().is_none());
    }

    #[test]
    fn tabulation_matches_evaluation(
        raw in prop::collection::btree_set(1u32..40, 1..5),
        n in 1usize..=3,
    ) {
        let grid: Vec<f64> = raw.iter().map(|&k| k as f64 / 40.0).collect();
        let g: GeneratedFn = make_quasi_sum(
            RealMap::Ln,
            RealMap::Exp,
            Interval::left_open(0.0, 1.0),
            Interval::left_open(f64::NEG_INFINITY, 0.0),
            &grid,
        )
        .unwrap();
        let t = tabulate(&g, &grid, n, None).unwrap();
        for idx in t.space().nonempty() {
            let x: Vec<f64> = t.space().tuple(idx).items().iter().map(|&i| grid[i as usize]).collect();
            let v = eval_generated(&g, &x).unwrap();
            let sym = t.render(t.at(idx));
            let canonical = render_real(v);
            prop_assert!(
                sym == canonical || sym.parse::<f64>().is_ok_and(|s| preassoc::real::approx_eq(s, v)),
                "{} vs {}", sym, canonical
            );
        }
    }
}
