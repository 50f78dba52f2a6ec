//! Canonical rendering and tolerant comparison of real values.

/// Relative tolerance under which two reals are the same symbol.
pub const REL_TOL: f64 = 1e-9;
/// Absolute tolerance under which two reals are the same symbol.
pub const ABS_TOL: f64 = 1e-12;

/// Significant digits used when rendering reals as symbols.
pub const SIGNIFICANT_DIGITS: usize = 12;

pub fn approx_eq(a: f64, b: f64) -> bool {
    let d = (a - b).abs();
    d <= ABS_TOL || d <= REL_TOL * a.abs().max(b.abs())
}

/// Render `v` with 12 significant digits, trailing zeros removed.
///
/// Positional notation is used for decimal exponents in `-6..15`,
/// scientific notation otherwise.
pub fn render_real(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let digits = digits.trim_end_matches('0');
    let digits = if digits.is_empty() { "0" } else { digits };
    let sign = if negative { "-" } else { "" };

    if !(-6..15).contains(&exp) {
        let (head, tail) = digits.split_at(1);
        return if tail.is_empty() {
            format!("{sign}{head}e{exp}")
        } else {
            format!("{sign}{head}.{tail}e{exp}")
        };
    }
    let point = exp + 1;
    let body = if point <= 0 {
        format!("0.{}{}", "0".repeat((-point) as usize), digits)
    } else if point as usize >= digits.len() {
        format!("{}{}", digits, "0".repeat(point as usize - digits.len()))
    } else {
        let (int, frac) = digits.split_at(point as usize);
        format!("{int}.{frac}")
    };
    format!("{sign}{body}")
}

/// Reals grouped into tolerance clusters, sorted ascending.
///
/// A value joins the current cluster when it is within tolerance of the
/// cluster's representative (its smallest member).
#[derive(Clone, Debug)]
pub struct ValueClusters {
    reps: Vec<f64>,
}

impl ValueClusters {
    pub fn new(values: impl IntoIterator<Item = f64>) -> Self {
        let mut sorted: Vec<f64> = values.into_iter().collect();
        sorted.sort_by(f64::total_cmp);
        let mut reps: Vec<f64> = Vec::new();
        for v in sorted {
            match reps.last() {
                Some(&r) if approx_eq(r, v) => {}
                _ => reps.push(v),
            }
        }
        ValueClusters { reps }
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn representatives(&self) -> &[f64] {
        &self.reps
    }

    /// Cluster index of `v`, if some representative is within tolerance.
    pub fn find(&self, v: f64) -> Option<usize> {
        let pos = self.reps.partition_point(|&r| r < v);
        let candidates = [pos.checked_sub(1), Some(pos)];
        candidates
            .into_iter()
            .flatten()
            .filter(|&i| i < self.reps.len() && approx_eq(self.reps[i], v))
            .min_by(|&i, &j| {
                (self.reps[i] - v)
                    .abs()
                    .total_cmp(&(self.reps[j] - v).abs())
            })
    }

    pub fn symbols(&self) -> Vec<String> {
        self.reps.iter().map(|&v| render_real(v)).collect()
    }
}
