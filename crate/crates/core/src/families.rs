//! Constructors for quasi-sums, Ling-type functions, variadic
//! t-norms/t-conorms/uninorms and the median family on a chain.

use std::collections::BTreeSet;

use crate::chain::Chain;
use crate::checks::{check_preassociative, PreassocForm};
use crate::error::FamilyError;
use crate::factorize::fold_operation;
use crate::generated::{
    eval_generated, tabulate, BinaryOp, Family, GenParams, GeneratedFn, Interval, RealMap,
};
use crate::quasi_inverse::FiniteMap;
use crate::real::{approx_eq, render_real, ValueClusters};
use crate::space::TupleSpace;
use crate::table::{BinaryTable, TableFn};
use crate::verdict::Verdict;

fn sorted_unique(mut v: Vec<f64>) -> Vec<f64> {
    v.retain(|x| x.is_finite());
    v.sort_by(f64::total_cmp);
    v.dedup_by(|a, b| approx_eq(*a, *b));
    v
}

fn check_grid(grid: &[f64], interval: &Interval) -> Result<(), FamilyError> {
    if let Some(&x) = grid.iter().find(|&&x| !interval.contains(x)) {
        return Err(FamilyError::ParamsInvalid(format!(
            "grid point {} lies outside {interval}",
            render_real(x)
        )));
    }
    Ok(())
}

fn strict_direction(map: &RealMap, name: &str, points: &[f64]) -> Result<Option<bool>, FamilyError> {
    map.direction_on(points)
        .map_err(|at| FamilyError::NotStrictlyMonotone {
            map: format!("{name} = {map}"),
            at,
        })
}

/// `F_n(x) = ψ(φ(x₁) + … + φ(x_n))`, validated on `grid`.
pub fn make_quasi_sum(
    phi: RealMap,
    psi: RealMap,
    interval: Interval,
    j: Interval,
    grid: &[f64],
) -> Result<GeneratedFn, FamilyError> {
    check_grid(grid, &interval)?;
    let points = sorted_unique(grid.to_vec());
    strict_direction(&phi, "phi", &points)?;
    if !j.is_generator_range() {
        return Err(FamilyError::JFormInvalid(j.to_string()));
    }
    let images: Vec<f64> = points.iter().map(|&x| phi.apply(x)).collect();
    if let Some(&y) = images.iter().find(|&&y| !j.contains(y)) {
        return Err(FamilyError::JFormInvalid(format!(
            "phi takes the value {} outside {j}",
            render_real(y)
        )));
    }
    let mut samples = images.clone();
    for &p in &images {
        for &q in &images {
            samples.push(p + q);
        }
    }
    strict_direction(&psi, "psi", &sorted_unique(samples))?;
    Ok(GeneratedFn {
        family: Family::QuasiSum,
        interval,
        phi,
        psi,
        params: GenParams::default(),
        op: None,
    })
}

/// `F_n(x) = ψ(min{φ(x₁) + … + φ(x_n), φ(a)})` on `[a, b]`.
pub fn make_ling(
    phi: RealMap,
    psi: RealMap,
    a: f64,
    b: f64,
    grid: &[f64],
) -> Result<GeneratedFn, FamilyError> {
    if a >= b {
        return Err(FamilyError::ParamsInvalid(format!("need a < b, got a={a}, b={b}")));
    }
    let interval = Interval::closed(a, b);
    check_grid(grid, &interval)?;
    let mut pts = grid.to_vec();
    pts.extend([a, b]);
    let points = sorted_unique(pts);
    if strict_direction(&phi, "phi", &points)? == Some(true) {
        return Err(FamilyError::NotStrictlyMonotone {
            map: format!("phi = {phi} (must be decreasing)"),
            at: a,
        });
    }
    let at_b = phi.apply(b);
    if !approx_eq(at_b, 0.0) {
        return Err(FamilyError::PhiEndpointViolated { value: at_b });
    }
    let cap = phi.apply(a);
    let images: Vec<f64> = points.iter().map(|&x| phi.apply(x)).collect();
    let mut samples = images.clone();
    for &p in &images {
        for &q in &images {
            samples.push((p + q).min(cap));
        }
    }
    strict_direction(&psi, "psi", &sorted_unique(samples))?;
    Ok(GeneratedFn {
        family: Family::Ling,
        interval,
        phi,
        psi,
        params: GenParams {
            a: Some(a),
            b: Some(b),
            ..GenParams::default()
        },
        op: None,
    })
}

/// Outcome of an identity sampled on grid tuples.
#[derive(Clone, Debug, PartialEq)]
pub struct SampledCheck {
    pub holds: bool,
    pub cases: u64,
    pub witness: Option<String>,
}

/// The two-equality preassociativity law on the tabulated grid symbols.
pub fn sampled_preassociative(
    g: &GeneratedFn,
    grid: &[f64],
    max_arity: usize,
) -> Result<Verdict, FamilyError> {
    let t = tabulate(g, grid, max_arity, None)?;
    Ok(check_preassociative(&t, PreassocForm::P2))
}

/// `F(x,y) = F(F(x),F(y))` on grid tuples with `|x| + |y| ≤ max_arity`.
pub fn sampled_associative(
    g: &GeneratedFn,
    grid: &[f64],
    max_arity: usize,
) -> Result<SampledCheck, FamilyError> {
    let space = TupleSpace::new(grid.len(), max_arity);
    let args = |idx: usize| -> Vec<f64> {
        space.tuple(idx).items().iter().map(|&s| grid[s as usize]).collect()
    };
    let mut cases = 0u64;
    for x in space.nonempty() {
        let ax = args(x);
        let fx = eval_generated(g, &ax)?;
        for ly in 1..=max_arity - space.len_of(x) {
            for y in space.indices_of_len(ly) {
                cases += 1;
                let ay = args(y);
                let fy = eval_generated(g, &ay)?;
                let joint: Vec<f64> = ax.iter().chain(&ay).copied().collect();
                let fxy = eval_generated(g, &joint)?;
                let show = |v: &[f64]| v.iter().map(|&t| render_real(t)).collect::<Vec<_>>().join(",");
                let witness = match eval_generated(g, &[fx, fy]) {
                    Ok(again) if approx_eq(again, fxy) => continue,
                    Ok(again) => format!(
                        "x=({}) y=({}): F(x,y)={} but F(F(x),F(y))={}",
                        show(&ax),
                        show(&ay),
                        render_real(fxy),
                        render_real(again)
                    ),
                    Err(e) => format!("x=({}) y=({}): F(F(x),F(y)) undefined: {e}", show(&ax), show(&ay)),
                };
                return Ok(SampledCheck {
                    holds: false,
                    cases,
                    witness: Some(witness),
                });
            }
        }
    }
    Ok(SampledCheck {
        holds: true,
        cases,
        witness: None,
    })
}

/// Tabulate a catalog operation on a grid, requiring closure.
pub fn seed_table(op: BinaryOp, grid: &[f64]) -> Result<BinaryTable, FamilyError> {
    let chain = Chain::from_grid(grid)?;
    let clusters = ValueClusters::new(grid.iter().copied());
    let m = grid.len();
    let mut values = Vec::with_capacity(m * m);
    for &x in grid {
        for &y in grid {
            let v = op.apply(x, y);
            let i = clusters.find(v).ok_or(FamilyError::GridNotClosed {
                op: op.name(),
                x,
                y,
                value: v,
            })?;
            values.push(i as u32);
        }
    }
    Ok(BinaryTable::new(chain.clone(), chain.elements().to_vec(), values)?)
}

/// Which neutral element a seed must have.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeedKind {
    Tnorm,
    Tconorm,
    /// Uninorm with the given neutral symbol (strictly inside the chain).
    Uninorm(String),
}

impl SeedKind {
    pub fn for_op(op: BinaryOp) -> SeedKind {
        match op {
            BinaryOp::Min | BinaryOp::Product | BinaryOp::Lukasiewicz | BinaryOp::Drastic => {
                SeedKind::Tnorm
            }
            BinaryOp::Max | BinaryOp::ProbabilisticSum | BinaryOp::BoundedSum => SeedKind::Tconorm,
            BinaryOp::UninormMin(e) | BinaryOp::UninormMax(e) => SeedKind::Uninorm(render_real(e)),
        }
    }
}

/// Validate the seed axioms on the table and return its unique
/// ε-standard associative extension with `F₁ = id`.
pub fn make_variadic_seed(
    kind: &SeedKind,
    table: &BinaryTable,
    max_arity: usize,
) -> Result<TableFn, FamilyError> {
    if !table.is_operation() {
        return Err(FamilyError::AxiomFailed {
            axiom: "closure",
            witness: "some value is not a carrier element".into(),
        });
    }
    let chain = table.domain();
    let m = chain.len() as u32;
    let s = |v: u32| chain.symbol(v).to_string();
    let neutral = match kind {
        SeedKind::Tnorm => chain.top(),
        SeedKind::Tconorm => chain.bottom(),
        SeedKind::Uninorm(e) => {
            let i = chain.index_of(e)?;
            if i == chain.bottom() || i == chain.top() {
                return Err(FamilyError::ParamsInvalid(format!(
                    "uninorm neutral element {e} must be interior"
                )));
            }
            i
        }
    };
    for x in 0..m {
        if table.op(neutral, x) != x {
            return Err(FamilyError::AxiomFailed {
                axiom: "neutral element",
                witness: format!("F₂({},{}) = {}", s(neutral), s(x), s(table.op(neutral, x))),
            });
        }
        for y in 0..m {
            if table.op(x, y) != table.op(y, x) {
                return Err(FamilyError::AxiomFailed {
                    axiom: "symmetric",
                    witness: format!("F₂({x},{y}) ≠ F₂({y},{x})", x = s(x), y = s(y)),
                });
            }
            if x + 1 < m && table.op(x, y) > table.op(x + 1, y) {
                return Err(FamilyError::AxiomFailed {
                    axiom: "nondecreasing",
                    witness: format!("F₂({},{}) > F₂({},{})", s(x), s(y), s(x + 1), s(y)),
                });
            }
        }
    }
    if let Some((x, y, z)) = table.associativity_witness() {
        return Err(FamilyError::AxiomFailed {
            axiom: "associative",
            witness: format!("({},{},{})", s(x), s(y), s(z)),
        });
    }
    let id: Vec<u32> = (0..m).collect();
    Ok(fold_operation(chain, max_arity, &id, |a, b| table.op(a, b)))
}

/// Catalog shortcut: tabulate `op` on `grid` and extend it.
pub fn variadic_seed(op: BinaryOp, grid: &[f64], max_arity: usize) -> Result<TableFn, FamilyError> {
    let table = seed_table(op, grid)?;
    make_variadic_seed(&SeedKind::for_op(op), &table, max_arity)
}

/// `F♭ = f ∘ seed♭` for a strictly monotone real `f`.
pub fn lift_tnorm(f: &RealMap, seed: &TableFn) -> Result<TableFn, FamilyError> {
    let carrier: Vec<f64> = seed
        .domain()
        .elements()
        .iter()
        .map(|s| {
            s.parse::<f64>()
                .map_err(|_| FamilyError::ParamsInvalid(format!("carrier symbol `{s}` is not numeric")))
        })
        .collect::<Result<_, _>>()?;
    let direction = strict_direction(f, "f", &carrier)?;
    let images: Vec<f64> = carrier.iter().map(|&x| f.apply(x)).collect();
    // codomain in numeric order
    let mut order: Vec<usize> = (0..images.len()).collect();
    if direction == Some(false) {
        order.reverse();
    }
    let codomain: Vec<String> = order.iter().map(|&i| render_real(images[i])).collect();
    if codomain.iter().collect::<BTreeSet<_>>().len() != codomain.len() {
        return Err(FamilyError::NotStrictlyMonotone {
            map: format!("f = {f} (images collide after rendering)"),
            at: carrier[0],
        });
    }
    let mut graph = vec![0; images.len()];
    for (pos, &i) in order.iter().enumerate() {
        graph[i] = pos;
    }
    let map = FiniteMap::new(seed.domain().elements().to_vec(), codomain, graph)?;
    Ok(seed.compose_left(&map, None)?)
}

/// Chain positions `a ≤ c∧d`, `c∨d ≤ b`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MedianParams {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
}

impl MedianParams {
    pub fn new(a: u32, b: u32, c: u32, d: u32) -> Result<Self, FamilyError> {
        if a > c.min(d) || c.max(d) > b {
            return Err(FamilyError::ParamsInvalid(format!(
                "need a ≤ c∧d and c∨d ≤ b, got a={a}, b={b}, c={c}, d={d}"
            )));
        }
        Ok(MedianParams { a, b, c, d })
    }

    pub fn from_symbols(chain: &Chain, a: &str, b: &str, c: &str, d: &str) -> Result<Self, FamilyError> {
        let [a, b, c, d] = [a, b, c, d].map(|s| chain.index_of(s));
        let (a, b, c, d) = (a?, b?, c?, d?);
        if a > b {
            return Err(FamilyError::ParamsInvalid(format!(
                "need a ≤ b, got a={}, b={}",
                chain.symbol(a),
                chain.symbol(b)
            )));
        }
        MedianParams::new(a, b, c, d).map_err(|_| {
            FamilyError::ParamsInvalid(format!(
                "need a ≤ c∧d and c∨d ≤ b, got a={}, b={}, c={}, d={}",
                chain.symbol(a),
                chain.symbol(b),
                chain.symbol(c),
                chain.symbol(d)
            ))
        })
    }

    /// Every valid tuple on a chain of `m` elements, in lexicographic
    /// `(a, b, c, d)` order.
    pub fn all(m: u32) -> Vec<MedianParams> {
        let mut out = Vec::new();
        for a in 0..m {
            for b in a..m {
                for c in a..=b {
                    for d in a..=b {
                        out.push(MedianParams { a, b, c, d });
                    }
                }
            }
        }
        out
    }

    /// The formula on chain positions.
    pub fn eval(&self, x: &[u32]) -> u32 {
        let med = crate::chain::median3;
        let lo = *x.iter().min().expect("nonempty");
        let hi = *x.iter().max().expect("nonempty");
        let inner = self
            .c
            .min(x[0])
            .max(med(lo, self.c.min(self.d), hi))
            .max(self.d.min(x[x.len() - 1]));
        med(self.a, inner, self.b)
    }
}

/// The median operation, optionally relabelled by a strictly increasing
/// `f` whose range on `[a, b]` is gap-free in `f`'s codomain order.
pub fn make_median_family(
    params: MedianParams,
    chain: &Chain,
    max_arity: usize,
    f: Option<&FiniteMap>,
) -> Result<TableFn, FamilyError> {
    let m = chain.len() as u32;
    if params.b >= m {
        return Err(FamilyError::ParamsInvalid(format!(
            "parameter b = {} outside a chain of {m} elements",
            params.b
        )));
    }
    let h = TableFn::operation(chain.clone(), max_arity, |t| params.eval(t))?;
    let Some(f) = f else {
        return Ok(h);
    };
    let mut prev: Option<usize> = None;
    for x in params.a..=params.b {
        let sym = chain.symbol(x);
        let y = f
            .index_in_domain(sym)
            .map(|i| f.graph()[i])
            .ok_or_else(|| FamilyError::ParamsInvalid(format!("f is undefined at {sym}")))?;
        if let Some(p) = prev {
            if y <= p {
                return Err(FamilyError::ParamsInvalid(format!(
                    "f is not strictly increasing at {sym}"
                )));
            }
            if y != p + 1 {
                return Err(FamilyError::RangeNotConvex(format!(
                    "{} is skipped between f({}) and f({sym})",
                    f.codomain()[p + 1],
                    chain.symbol(x - 1)
                )));
            }
        }
        prev = Some(y);
    }
    Ok(h.compose_left(f, None)?)
}

/// Median family on a real carrier, as a generated function.
pub fn median_generated(a: f64, b: f64, c: f64, d: f64, interval: Interval) -> Result<GeneratedFn, FamilyError> {
    if a > c.min(d) || c.max(d) > b {
        return Err(FamilyError::ParamsInvalid(format!(
            "need a ≤ c∧d and c∨d ≤ b, got a={a}, b={b}, c={c}, d={d}"
        )));
    }
    Ok(GeneratedFn {
        family: Family::MedianChain,
        interval,
        phi: RealMap::Id,
        psi: RealMap::Id,
        params: GenParams {
            a: Some(a),
            b: Some(b),
            c: Some(c),
            d: Some(d),
            e: None,
        },
        op: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checks::{check_property, holds, check_unarily_quasi_range_idempotent};
    use crate::verdict::Property;

    const GRID5: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 1.0];

    #[test]
    fn quasi_sum_examples() {
        let g = make_quasi_sum(
            RealMap::Ln,
            RealMap::Exp,
            Interval::left_open(0.0, 1.0),
            Interval::left_open(f64::NEG_INFINITY, 0.0),
            &[0.2, 0.4, 0.6, 0.8, 1.0],
        )
        .unwrap();
        assert!((eval_generated(&g, &[0.5, 0.5]).unwrap() - 0.25).abs() < 1e-15);

        let cube = make_quasi_sum(
            RealMap::Id,
            RealMap::Pow(3.0),
            Interval::reals(),
            Interval::reals(),
            &[1.0, 2.0, 3.0],
        )
        .unwrap();
        assert_eq!(eval_generated(&cube, &[1.0, 2.0]).unwrap(), 27.0);
        assert!(sampled_preassociative(&cube, &[1.0, 2.0, 3.0], 3).unwrap().holds);
        let a3 = sampled_associative(&cube, &[1.0, 2.0, 3.0], 3).unwrap();
        assert!(!a3.holds);
        assert!(a3.witness.unwrap().starts_with("x=(1) y=(2)"));

        let sum = make_quasi_sum(RealMap::Id, RealMap::Id, Interval::reals(), Interval::reals(), &[1.0, 2.0])
            .unwrap();
        assert_eq!(eval_generated(&sum, &[1.0, 2.0, 2.0]).unwrap(), 5.0);
        assert!(sampled_associative(&sum, &[1.0, 2.0], 3).unwrap().holds);
    }

    #[test]
    fn quasi_sum_validation() {
        assert!(matches!(
            make_quasi_sum(RealMap::Pow(2.0), RealMap::Id, Interval::reals(), Interval::reals(), &[-1.0, 0.0, 1.0]),
            Err(FamilyError::NotStrictlyMonotone { .. })
        ));
        assert!(matches!(
            make_quasi_sum(RealMap::Id, RealMap::Id, Interval::unit(), Interval::unit(), &[0.0, 1.0]),
            Err(FamilyError::JFormInvalid(_))
        ));
    }

    fn lukasiewicz_ling() -> GeneratedFn {
        make_ling(RealMap::OneMinus, RealMap::OneMinus, 0.0, 1.0, &GRID5).unwrap()
    }

    #[test]
    fn ling_examples() {
        let g = lukasiewicz_ling();
        assert!((eval_generated(&g, &[0.7, 0.7]).unwrap() - 0.4).abs() < 1e-12);
        for &x in &GRID5 {
            let unary = eval_generated(&g, &[x]).unwrap();
            assert!((eval_generated(&g, &[1.0, x]).unwrap() - unary).abs() < 1e-12);
        }
        for i in 1..=10 {
            let x = i as f64 / 11.0;
            assert!(eval_generated(&g, &[x, x]).unwrap() < eval_generated(&g, &[x]).unwrap());
        }
        assert!(matches!(
            make_ling(RealMap::OneMinus, RealMap::OneMinus, 0.0, 0.5, &[0.0, 0.5]),
            Err(FamilyError::PhiEndpointViolated { .. })
        ));
        assert!(matches!(
            make_ling(RealMap::Id, RealMap::Id, 0.0, 1.0, &GRID5),
            Err(FamilyError::NotStrictlyMonotone { .. })
        ));
    }

    #[test]
    fn lukasiewicz_seed() {
        let t = variadic_seed(BinaryOp::Lukasiewicz, &GRID5, 3).unwrap();
        assert_eq!(t.eval_symbols(&["0.75", "0.75", "0.75"]).unwrap(), "0.25");
        for x in GRID5 {
            let s = render_real(x);
            assert_eq!(t.eval_symbols(&["1", s.as_str()]).unwrap(), s);
        }
        assert!(holds(&t, Property::AssociativeA1));
    }

    #[test]
    fn drastic_seed_is_associative() {
        let t = variadic_seed(BinaryOp::Drastic, &[0.0, 0.5, 1.0], 3).unwrap();
        assert!(check_property(&t, Property::AssociativeA1).unwrap().holds);
    }

    #[test]
    fn catalog_seeds_and_closure() {
        for name in BinaryOp::TNORMS.iter().chain(&BinaryOp::TCONORMS) {
            let op = BinaryOp::from_name(name, None).unwrap();
            let grid: &[f64] = if matches!(op, BinaryOp::Product | BinaryOp::ProbabilisticSum) {
                &[0.0, 1.0]
            } else {
                &GRID5
            };
            let t = variadic_seed(op, grid, 3).unwrap();
            assert!(holds(&t, Property::AssociativeA1), "{name}");
            assert!(holds(&t, Property::Symmetric), "{name}");
        }
        assert!(matches!(
            seed_table(BinaryOp::Product, &GRID5),
            Err(FamilyError::GridNotClosed { .. })
        ));
        let u = variadic_seed(BinaryOp::UninormMin(0.5), &GRID5, 3).unwrap();
        assert!(holds(&u, Property::AssociativeA1));
        let bad = seed_table(BinaryOp::Min, &GRID5).unwrap();
        assert!(matches!(
            make_variadic_seed(&SeedKind::Tconorm, &bad, 2),
            Err(FamilyError::AxiomFailed { axiom: "neutral element", .. })
        ));
    }

    #[test]
    fn lifts() {
        let seed = variadic_seed(BinaryOp::Min, &GRID5, 3).unwrap();
        assert_eq!(lift_tnorm(&RealMap::Id, &seed).unwrap(), seed);
        let neg = lift_tnorm(&RealMap::Neg, &seed).unwrap();
        assert!(holds(&neg, Property::Nonincreasing));
        assert!(holds(&neg, Property::Symmetric));
        assert!(check_preassociative(&neg, PreassocForm::P1).holds);
        assert!(check_unarily_quasi_range_idempotent(&neg).holds);
        assert_eq!(neg.eval_symbols(&["1", "0.25"]).unwrap(), "-0.25");
        assert_eq!(neg.eval_symbols(&["0.25"]).unwrap(), "-0.25");
        assert!(matches!(
            lift_tnorm(&RealMap::Pow(2.0), &variadic_seed(BinaryOp::Min, &[-1.0, 0.0, 1.0], 2).unwrap()),
            Err(FamilyError::NotStrictlyMonotone { .. }) | Err(FamilyError::AxiomFailed { .. })
        ));
    }

    #[test]
    fn median_examples() {
        let chain = Chain::numeric(4).unwrap();
        let p = MedianParams::new(0, 3, 1, 1).unwrap();
        let h = make_median_family(p, &chain, 3, None).unwrap();
        assert_eq!(h.eval_symbols(&["2", "3"]).unwrap(), "2");
        let p2 = MedianParams::new(0, 3, 1, 1).unwrap();
        let h2 = make_median_family(p2, &chain, 2, None).unwrap();
        assert_eq!(h2.eval_symbols(&["2", "3"]).unwrap(), "2");

        let constant = make_median_family(MedianParams::new(2, 2, 2, 2).unwrap(), &chain, 3, None).unwrap();
        for idx in constant.space().nonempty() {
            assert_eq!(constant.render(constant.at(idx)), "2");
        }

        let asym = make_median_family(MedianParams::new(0, 3, 1, 2).unwrap(), &chain, 3, None).unwrap();
        assert!(holds(&asym, Property::Nondecreasing));
        assert!(holds(&asym, Property::ConvexSections));
        assert!(!holds(&asym, Property::Symmetric));
        assert!(holds(&h, Property::Symmetric));

        assert!(MedianParams::from_symbols(&chain, "2", "1", "1", "1").is_err());
    }

    #[test]
    fn median_relabel() {
        let chain = Chain::numeric(4).unwrap();
        let p = MedianParams::new(1, 2, 1, 2).unwrap();
        let f = FiniteMap::from_pairs(
            &["0", "1", "2", "3"],
            &["p", "q", "r", "s"],
            &[("0", "p"), ("1", "q"), ("2", "r"), ("3", "s")],
        )
        .unwrap();
        let lifted = make_median_family(p, &chain, 3, Some(&f)).unwrap();
        assert!(check_preassociative(&lifted, PreassocForm::P1).holds);
        let gap = FiniteMap::from_pairs(
            &["0", "1", "2", "3"],
            &["p", "q", "r", "s"],
            &[("0", "p"), ("1", "p"), ("2", "r"), ("3", "s")],
        )
        .unwrap();
        assert!(matches!(
            make_median_family(p, &chain, 3, Some(&gap)),
            Err(FamilyError::RangeNotConvex(_))
        ));
    }

    #[test]
    fn real_median_matches_chain_median() {
        let chain = Chain::numeric(4).unwrap();
        let grid = [0.0, 1.0, 2.0, 3.0];
        let g = median_generated(0.0, 3.0, 1.0, 2.0, Interval::closed(0.0, 3.0)).unwrap();
        let t = tabulate(&g, &grid, 3, None).unwrap();
        let h = make_median_family(MedianParams::new(0, 3, 1, 2).unwrap(), &chain, 3, None).unwrap();
        assert_eq!(t.values(), h.values());
    }
}
