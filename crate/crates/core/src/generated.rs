//! Variadic functions on real intervals given by generators, and their
//! tabulation on finite grids.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::chain::Chain;
use crate::error::TableError;
use crate::real::{approx_eq, render_real, ValueClusters};
use crate::table::{TableFn, Value};

/// A unary real map.
#[derive(Clone)]
pub enum RealMap {
    Id,
    Ln,
    Exp,
    Neg,
    /// `1 − x`.
    OneMinus,
    /// `−ln x`.
    NegLn,
    /// `scale·x + offset`.
    Affine { scale: f64, offset: f64 },
    /// `x^p`.
    Pow(f64),
    Custom {
        name: String,
        f: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    },
}

impl RealMap {
    pub fn custom(name: impl Into<String>, f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        RealMap::Custom {
            name: name.into(),
            f: Arc::new(f),
        }
    }

    pub fn apply(&self, x: f64) -> f64 {
        match self {
            RealMap::Id => x,
            RealMap::Ln => x.ln(),
            RealMap::Exp => x.exp(),
            RealMap::Neg => -x,
            RealMap::OneMinus => 1.0 - x,
            RealMap::NegLn => -x.ln(),
            RealMap::Affine { scale, offset } => scale * x + offset,
            RealMap::Pow(p) => x.powf(*p),
            RealMap::Custom { f, .. } => f(x),
        }
    }

    /// `Some(true)` if strictly increasing on the sorted points,
    /// `Some(false)` if strictly decreasing, `None` otherwise (or if a value
    /// is not finite). The returned point is where monotonicity breaks.
    pub fn direction_on(&self, sorted: &[f64]) -> Result<Option<bool>, f64> {
        let ys: Vec<f64> = sorted.iter().map(|&x| self.apply(x)).collect();
        if let Some(i) = ys.iter().position(|y| !y.is_finite()) {
            return Err(sorted[i]);
        }
        if ys.len() < 2 {
            return Ok(None);
        }
        let up = ys[1] > ys[0];
        for (i, w) in ys.windows(2).enumerate() {
            let strict = if up { w[1] > w[0] } else { w[1] < w[0] };
            if !strict || approx_eq(w[0], w[1]) {
                return Err(sorted[i + 1]);
            }
        }
        Ok(Some(up))
    }
}

impl fmt::Display for RealMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealMap::Id => f.write_str("id"),
            RealMap::Ln => f.write_str("ln"),
            RealMap::Exp => f.write_str("exp"),
            RealMap::Neg => f.write_str("neg"),
            RealMap::OneMinus => f.write_str("one_minus"),
            RealMap::NegLn => f.write_str("neg_ln"),
            RealMap::Affine { scale, offset } => write!(f, "affine:{scale}:{offset}"),
            RealMap::Pow(p) => write!(f, "pow:{p}"),
            RealMap::Custom { name, .. } => f.write_str(name),
        }
    }
}

impl fmt::Debug for RealMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for RealMap {
    type Err = String;

    /// `id`, `ln`, `exp`, `neg`, `one_minus`, `neg_ln`, `affine:S:O`, `pow:P`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| t.parse::<f64>().map_err(|e| format!("bad number `{t}`: {e}"));
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            ["id"] => Ok(RealMap::Id),
            ["ln"] => Ok(RealMap::Ln),
            ["exp"] => Ok(RealMap::Exp),
            ["neg"] => Ok(RealMap::Neg),
            ["one_minus"] => Ok(RealMap::OneMinus),
            ["neg_ln"] => Ok(RealMap::NegLn),
            ["affine", a, b] => Ok(RealMap::Affine {
                scale: num(a)?,
                offset: num(b)?,
            }),
            ["pow", p] => Ok(RealMap::Pow(num(p)?)),
            _ => Err(format!("unknown map `{s}`")),
        }
    }
}

/// A real interval with open/closed ends (infinite ends are open).
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl Interval {
    pub fn closed(lo: f64, hi: f64) -> Self {
        Interval {
            lo,
            hi,
            lo_closed: lo.is_finite(),
            hi_closed: hi.is_finite(),
        }
    }

    pub fn open(lo: f64, hi: f64) -> Self {
        Interval {
            lo,
            hi,
            lo_closed: false,
            hi_closed: false,
        }
    }

    pub fn left_open(lo: f64, hi: f64) -> Self {
        Interval {
            lo_closed: false,
            ..Interval::closed(lo, hi)
        }
    }

    pub fn right_open(lo: f64, hi: f64) -> Self {
        Interval {
            hi_closed: false,
            ..Interval::closed(lo, hi)
        }
    }

    pub fn reals() -> Self {
        Interval::open(f64::NEG_INFINITY, f64::INFINITY)
    }

    pub fn unit() -> Self {
        Interval::closed(0.0, 1.0)
    }

    pub fn contains(&self, x: f64) -> bool {
        let above = if self.lo_closed { x >= self.lo } else { x > self.lo };
        let below = if self.hi_closed { x <= self.hi } else { x < self.hi };
        above && below
    }

    /// Admissible target of an additive generator: unbounded on at least
    /// one side and containing 0 on that side's finite end.
    pub fn is_generator_range(&self) -> bool {
        let lo_inf = self.lo == f64::NEG_INFINITY;
        let hi_inf = self.hi == f64::INFINITY;
        (lo_inf && hi_inf) || (lo_inf && self.hi <= 0.0) || (hi_inf && self.lo >= 0.0)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let end = |v: f64| {
            if v.is_infinite() {
                if v > 0.0 { "∞".to_string() } else { "-∞".to_string() }
            } else {
                render_real(v)
            }
        };
        write!(
            f,
            "{}{},{}{}",
            if self.lo_closed { "[" } else { "]" },
            end(self.lo),
            end(self.hi),
            if self.hi_closed { "]" } else { "[" }
        )
    }
}

/// Catalog binary operations on `[0,1]`.
#[derive(Copy, Clone, Debug, PartialEq)]
pub enum BinaryOp {
    Min,
    Product,
    Lukasiewicz,
    Drastic,
    Max,
    ProbabilisticSum,
    BoundedSum,
    /// Uninorm with neutral `e`: max on `[e,1]²`, min elsewhere.
    UninormMin(f64),
    /// Uninorm with neutral `e`: min on `[0,e]²`, max elsewhere.
    UninormMax(f64),
}

impl BinaryOp {
    pub const TNORMS: [&'static str; 4] = ["min", "product", "lukasiewicz", "drastic"];
    pub const TCONORMS: [&'static str; 3] = ["max", "probabilistic_sum", "bounded_sum"];

    /// Catalog lookup; uninorms take `e` from the argument.
    pub fn from_name(name: &str, e: Option<f64>) -> Option<Self> {
        Some(match name.replace('-', "_").as_str() {
            "min" => BinaryOp::Min,
            "product" => BinaryOp::Product,
            "lukasiewicz" => BinaryOp::Lukasiewicz,
            "drastic" => BinaryOp::Drastic,
            "max" => BinaryOp::Max,
            "probabilistic_sum" => BinaryOp::ProbabilisticSum,
            "bounded_sum" => BinaryOp::BoundedSum,
            "umin" | "uninorm_min" => BinaryOp::UninormMin(e?),
            "umax" | "uninorm_max" => BinaryOp::UninormMax(e?),
            _ => return None,
        })
    }

    pub fn name(&self) -> String {
        match self {
            BinaryOp::Min => "min".into(),
            BinaryOp::Product => "product".into(),
            BinaryOp::Lukasiewicz => "lukasiewicz".into(),
            BinaryOp::Drastic => "drastic".into(),
            BinaryOp::Max => "max".into(),
            BinaryOp::ProbabilisticSum => "probabilistic_sum".into(),
            BinaryOp::BoundedSum => "bounded_sum".into(),
            BinaryOp::UninormMin(e) => format!("umin({})", render_real(*e)),
            BinaryOp::UninormMax(e) => format!("umax({})", render_real(*e)),
        }
    }

    pub fn apply(&self, x: f64, y: f64) -> f64 {
        match *self {
            BinaryOp::Min => x.min(y),
            BinaryOp::Product => x * y,
            BinaryOp::Lukasiewicz => (x + y - 1.0).max(0.0),
            BinaryOp::Drastic => {
                if x == 1.0 {
                    y
                } else if y == 1.0 {
                    x
                } else {
                    0.0
                }
            }
            BinaryOp::Max => x.max(y),
            BinaryOp::ProbabilisticSum => x + y - x * y,
            BinaryOp::BoundedSum => (x + y).min(1.0),
            BinaryOp::UninormMin(e) => {
                if x >= e && y >= e {
                    x.max(y)
                } else {
                    x.min(y)
                }
            }
            BinaryOp::UninormMax(e) => {
                if x <= e && y <= e {
                    x.min(y)
                } else {
                    x.max(y)
                }
            }
        }
    }

    /// The neutral element of the operation.
    pub fn neutral(&self) -> f64 {
        match *self {
            BinaryOp::Min | BinaryOp::Product | BinaryOp::Lukasiewicz | BinaryOp::Drastic => 1.0,
            BinaryOp::Max | BinaryOp::ProbabilisticSum | BinaryOp::BoundedSum => 0.0,
            BinaryOp::UninormMin(e) | BinaryOp::UninormMax(e) => e,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Family {
    QuasiSum,
    Ling,
    VariadicTnorm,
    VariadicTconorm,
    VariadicUninorm,
    MedianChain,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::QuasiSum => "quasi_sum",
            Family::Ling => "ling",
            Family::VariadicTnorm => "variadic_tnorm",
            Family::VariadicTconorm => "variadic_tconorm",
            Family::VariadicUninorm => "variadic_uninorm",
            Family::MedianChain => "median_chain",
        }
    }
}

/// Real parameters of a family; unused ones are `None`.
#[derive(Copy, Clone, Debug, Default, PartialEq)]
pub struct GenParams {
    pub a: Option<f64>,
    pub b: Option<f64>,
    pub c: Option<f64>,
    pub d: Option<f64>,
    pub e: Option<f64>,
}

/// A variadic function on a real interval given by generators.
#[derive(Clone, Debug)]
pub struct GeneratedFn {
    pub family: Family,
    pub interval: Interval,
    pub phi: RealMap,
    pub psi: RealMap,
    pub params: GenParams,
    pub op: Option<BinaryOp>,
}

impl GeneratedFn {
    /// The fold of a catalog operation with `F₁ = id`.
    pub fn fold(op: BinaryOp) -> Self {
        let family = match op {
            BinaryOp::Min | BinaryOp::Product | BinaryOp::Lukasiewicz | BinaryOp::Drastic => {
                Family::VariadicTnorm
            }
            BinaryOp::Max | BinaryOp::ProbabilisticSum | BinaryOp::BoundedSum => {
                Family::VariadicTconorm
            }
            BinaryOp::UninormMin(_) | BinaryOp::UninormMax(_) => Family::VariadicUninorm,
        };
        GeneratedFn {
            family,
            interval: Interval::unit(),
            phi: RealMap::Id,
            psi: RealMap::Id,
            params: GenParams {
                e: Some(op.neutral()),
                ..GenParams::default()
            },
            op: Some(op),
        }
    }
}

fn param(p: Option<f64>, name: &str) -> f64 {
    p.unwrap_or_else(|| panic!("family parameter `{name}` is missing"))
}

/// The real median formula `med(a, (c∧x₁) ∨ med(⋀x, c∧d, ⋁x) ∨ (d∧x_n), b)`.
pub fn median_formula(x: &[f64], a: f64, b: f64, c: f64, d: f64) -> f64 {
    let med = |p: f64, q: f64, r: f64| p.max(q).min(p.min(q).max(r));
    let lo = x.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = x.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let inner = c
        .min(x[0])
        .max(med(lo, c.min(d), hi))
        .max(d.min(x[x.len() - 1]));
    med(a, inner, b)
}

/// Evaluate the family formula at a nonempty tuple.
pub fn eval_generated(g: &GeneratedFn, x: &[f64]) -> Result<f64, TableError> {
    if x.is_empty() {
        return Err(TableError::EmptyTuple);
    }
    if let Some(&v) = x.iter().find(|&&v| !g.interval.contains(v)) {
        return Err(TableError::OutOfInterval {
            value: v,
            interval: g.interval.to_string(),
        });
    }
    let sum = || x.iter().map(|&v| g.phi.apply(v)).sum::<f64>();
    let y = match g.family {
        Family::QuasiSum => g.psi.apply(sum()),
        Family::Ling => {
            let cap = g.phi.apply(param(g.params.a, "a"));
            g.psi.apply(sum().min(cap))
        }
        Family::VariadicTnorm | Family::VariadicTconorm | Family::VariadicUninorm => {
            let op = g.op.expect("fold families carry an operation");
            x[1..].iter().fold(x[0], |acc, &v| op.apply(acc, v))
        }
        Family::MedianChain => median_formula(
            x,
            param(g.params.a, "a"),
            param(g.params.b, "b"),
            param(g.params.c, "c"),
            param(g.params.d, "d"),
        ),
    };
    if !y.is_finite() {
        return Err(TableError::NonFinite { args: x.to_vec() });
    }
    Ok(y)
}

/// Tabulate on every tuple over `grid` up to `max_arity`. Observed values
/// are clustered within tolerance and sorted; a value matching a grid point
/// takes that point's symbol, so grid-closed families become operations.
/// `default = None` sets `F(ε) = ε`.
pub fn tabulate(
    g: &GeneratedFn,
    grid: &[f64],
    max_arity: usize,
    default: Option<&str>,
) -> Result<TableFn, TableError> {
    let chain = Chain::from_grid(grid)?;
    tabulate_on(&chain, grid, max_arity, default, |x| eval_generated(g, x))
}

pub(crate) fn tabulate_on(
    chain: &Chain,
    grid: &[f64],
    max_arity: usize,
    default: Option<&str>,
    mut eval: impl FnMut(&[f64]) -> Result<f64, TableError>,
) -> Result<TableFn, TableError> {
    if max_arity == 0 {
        return Err(TableError::ZeroArity);
    }
    let space = crate::space::TupleSpace::new(grid.len(), max_arity);
    let mut raw = Vec::with_capacity(space.total());
    raw.push(f64::NAN);
    let mut args = Vec::with_capacity(max_arity);
    for idx in space.nonempty() {
        args.clear();
        args.extend(space.tuple(idx).items().iter().map(|&s| grid[s as usize]));
        raw.push(eval(&args)?);
    }
    let clusters = ValueClusters::new(raw[1..].iter().copied());
    let grid_clusters = ValueClusters::new(grid.iter().copied());
    let mut codomain: Vec<String> = clusters
        .representatives()
        .iter()
        .map(|&v| match grid_clusters.find(v) {
            Some(i) => chain.symbol(i as u32).to_string(),
            None => render_real(v),
        })
        .collect();
    dedup_symbols(&mut codomain);
    let mut values = Vec::with_capacity(raw.len());
    values.push(match default {
        None => Value::EPSILON,
        Some(s) => match codomain.iter().position(|c| c == s) {
            Some(i) => Value::sym(i),
            None => {
                codomain.push(s.to_string());
                Value::sym(codomain.len() - 1)
            }
        },
    });
    for &v in &raw[1..] {
        values.push(Value::sym(clusters.find(v).expect("clustered")));
    }
    TableFn::new(chain.clone(), codomain, max_arity, values)
}

/// Distinct clusters can render alike at twelve digits; disambiguate.
fn dedup_symbols(symbols: &mut [String]) {
    for i in 1..symbols.len() {
        let base = symbols[i].clone();
        let mut k = 1;
        while symbols[..i].contains(&symbols[i]) {
            symbols[i] = format!("{base}~{k}");
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quasi_sum(phi: RealMap, psi: RealMap, interval: Interval) -> GeneratedFn {
        GeneratedFn {
            family: Family::QuasiSum,
            interval,
            phi,
            psi,
            params: GenParams::default(),
            op: None,
        }
    }

    #[test]
    fn product_through_logarithms() {
        let g = quasi_sum(RealMap::Ln, RealMap::Exp, Interval::left_open(0.0, 1.0));
        assert!((eval_generated(&g, &[0.5, 0.5]).unwrap() - 0.25).abs() < 1e-15);
        assert!(matches!(
            eval_generated(&g, &[0.0]),
            Err(TableError::OutOfInterval { .. })
        ));
        assert_eq!(eval_generated(&g, &[]), Err(TableError::EmptyTuple));
    }

    #[test]
    fn unary_case_is_psi_of_phi() {
        let g = quasi_sum(RealMap::Id, RealMap::Pow(3.0), Interval::reals());
        for i in 0..10 {
            let x = i as f64 * 0.3 - 1.0;
            assert_eq!(eval_generated(&g, &[x]).unwrap(), x.powf(3.0));
        }
        assert_eq!(eval_generated(&g, &[1.0, 2.0]).unwrap(), 27.0);
    }

    #[test]
    fn ling_matches_lukasiewicz() {
        let g = GeneratedFn {
            family: Family::Ling,
            interval: Interval::unit(),
            phi: RealMap::OneMinus,
            psi: RealMap::OneMinus,
            params: GenParams {
                a: Some(0.0),
                b: Some(1.0),
                ..GenParams::default()
            },
            op: None,
        };
        assert!((eval_generated(&g, &[0.7, 0.7]).unwrap() - 0.4).abs() < 1e-12);
    }

    #[test]
    fn tabulated_min_fold_is_an_operation() {
        let g = GeneratedFn::fold(BinaryOp::Min);
        let t = tabulate(&g, &[0.0, 1.0], 3, None).unwrap();
        assert_eq!(t.space().total() - 1, 14);
        assert!(t.is_operation());
        assert!(t.default_value().is_epsilon());
    }

    #[test]
    fn tabulated_values_are_sorted_and_clustered() {
        let g = quasi_sum(RealMap::Id, RealMap::Id, Interval::reals());
        let t = tabulate(&g, &[0.1, 0.2], 2, Some("zero")).unwrap();
        assert_eq!(t.codomain(), &["0.1", "0.2", "0.3", "0.4", "zero"]);
        // 0.1 + 0.2 and 0.2 + 0.1 land in the same cluster as 0.3
        assert_eq!(t.eval_symbols(&["0.1", "0.2"]).unwrap(), "0.3");
        assert_eq!(t.eval_symbols(&["0.2", "0.1"]).unwrap(), "0.3");
    }

    #[test]
    fn median_formula_examples() {
        assert_eq!(median_formula(&[2.0, 3.0], 0.0, 3.0, 1.0, 1.0), 2.0);
        assert_eq!(median_formula(&[0.0, 3.0, 1.0], 2.0, 2.0, 2.0, 2.0), 2.0);
    }

    #[test]
    fn map_parsing_and_monotonicity() {
        let m: RealMap = "affine:2:-1".parse().unwrap();
        assert_eq!(m.apply(3.0), 5.0);
        assert_eq!("pow:2".parse::<RealMap>().unwrap().apply(3.0), 9.0);
        assert!("sin".parse::<RealMap>().is_err());
        assert_eq!(RealMap::Ln.direction_on(&[0.5, 1.0]), Ok(Some(true)));
        assert_eq!(RealMap::OneMinus.direction_on(&[0.0, 1.0]), Ok(Some(false)));
        assert_eq!(RealMap::Pow(2.0).direction_on(&[-1.0, 0.0, 1.0]), Err(1.0));
    }

    #[test]
    fn generator_ranges() {
        assert!(Interval::left_open(f64::NEG_INFINITY, 0.0).is_generator_range());
        assert!(Interval::reals().is_generator_range());
        assert!(!Interval::closed(0.0, 1.0).is_generator_range());
        assert!(Interval::closed(1.0, f64::INFINITY).is_generator_range());
        assert_eq!(Interval::left_open(0.0, 1.0).to_string(), "]0,1]");
    }
}
