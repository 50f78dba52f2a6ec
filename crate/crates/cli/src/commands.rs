use std::collections::BTreeSet;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};

use preassoc::checks::check_property;
use preassoc::families::{
    lift_tnorm, make_ling, make_median_family, make_quasi_sum, variadic_seed, MedianParams,
};
use preassoc::generated::{tabulate, BinaryOp, Interval, RealMap};
use preassoc::universe::{enumerate, EnumerateRequest};
use preassoc::{factorize, Chain, FactorizeError, Property, TableFn};

use crate::format::{parse, serialize, serialize_line};
use crate::report::{FactorizationRecord, PropertyRecord, ReportFile};
use crate::{CliError, EXIT_FAILED, EXIT_OK};

/// Flags shared by every command.
#[derive(Clone, Debug, Default)]
pub struct Global {
    pub json: bool,
    pub max_arity: Option<usize>,
    pub quiet: bool,
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    }
}

pub fn load(path: &Path) -> Result<TableFn, CliError> {
    let text = std::fs::read_to_string(path).map_err(io_err(path))?;
    parse(&text)
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(io_err(path))
}

fn stdout_err(e: std::io::Error) -> CliError {
    CliError::Io {
        path: PathBuf::from("<stdout>"),
        source: e,
    }
}

fn load_truncated(path: &Path, g: &Global) -> Result<TableFn, CliError> {
    let f = load(path)?;
    match g.max_arity {
        None => Ok(f),
        Some(n) if n <= f.max_arity() && n > 0 => Ok(f.truncate(n).expect("checked arity")),
        Some(n) => Err(CliError::Usage(format!(
            "--max-arity {n} must be between 1 and the file's max arity {}",
            f.max_arity()
        ))),
    }
}

/// Property names, plus the aliases `assoc`/`associative` and
/// `preassoc`/`preassociative`.
pub fn parse_properties<S: AsRef<str>>(names: &[S]) -> Result<Vec<Property>, CliError> {
    let mut out = Vec::new();
    for name in names.iter().flat_map(|s| s.as_ref().split(',')).map(str::trim) {
        if name.is_empty() {
            continue;
        }
        let p = match name {
            "assoc" | "associative" => Property::AssociativeA1,
            "preassoc" | "preassociative" => Property::PreassociativeP1,
            other => other
                .parse()
                .map_err(|e: preassoc::CheckError| CliError::Usage(e.to_string()))?,
        };
        if !out.contains(&p) {
            out.push(p);
        }
    }
    Ok(out)
}

fn print_record(out: &mut dyn Write, r: &PropertyRecord) -> std::io::Result<()> {
    let status = match (&r.error, r.holds) {
        (Some(_), _) => "n/a",
        (None, true) => "holds",
        (None, false) => "FAILS",
    };
    writeln!(out, "{:<32} {status:<6} cases={}", r.property.name(), r.cases_checked)?;
    if let Some(w) = &r.witness {
        writeln!(out, "    witness: {w}")?;
    }
    if let Some(e) = &r.error {
        writeln!(out, "    {e}")?;
    }
    Ok(())
}

fn run_suite(f: &TableFn, props: &[Property]) -> Vec<PropertyRecord> {
    props
        .iter()
        .map(|&p| PropertyRecord::new(p, f.max_arity(), &check_property(f, p)))
        .collect()
}

/// Run the selected checkers; exit 0 iff every one holds.
pub fn cmd_check(
    path: &Path,
    props: &[Property],
    g: &Global,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    let f = load_truncated(path, g)?;
    let props: Vec<Property> = if props.is_empty() {
        Property::SELECTABLE.to_vec()
    } else {
        props.to_vec()
    };
    let mut report = ReportFile::new(&f);
    report.results = run_suite(&f, &props);
    if g.json {
        out.write_all(report.to_json().as_bytes()).map_err(stdout_err)?;
    } else if !g.quiet {
        writeln!(out, "function {} (max arity {})", report.function.digest, f.max_arity())
            .map_err(stdout_err)?;
        for r in &report.results {
            print_record(out, r).map_err(stdout_err)?;
        }
    }
    Ok(if report.results.iter().all(|r| r.holds) {
        EXIT_OK
    } else {
        EXIT_FAILED
    })
}

/// Factor `F♭ = f ∘ H♭`; writes `H` and a report.
pub fn cmd_factorize(
    path: &Path,
    out_h: Option<&Path>,
    out_report: Option<&Path>,
    pins: &[(String, String)],
    g: &Global,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    let f = load_truncated(path, g)?;
    let mut report = ReportFile::new(&f);
    let code = match factorize(&f, pins) {
        Ok(fact) => {
            let h_text = serialize(&fact.h);
            match out_h {
                Some(p) => write_file(p, &h_text)?,
                None if !g.json => out.write_all(h_text.as_bytes()).map_err(stdout_err)?,
                None => {}
            }
            report.factorization = Some(FactorizationRecord::success(&fact));
            if !g.quiet && !g.json && out_h.is_some() {
                writeln!(out, "factorized: f = {:?}, g = {:?}", fact.f, fact.g).map_err(stdout_err)?;
            }
            EXIT_OK
        }
        Err(FactorizeError::PreconditionViolated(v)) => {
            if !g.quiet && !g.json {
                writeln!(out, "precondition failed: {}", v.property.name()).map_err(stdout_err)?;
                if let Some(w) = &v.witness {
                    writeln!(out, "    witness: {w}").map_err(stdout_err)?;
                }
            }
            report.factorization = Some(FactorizationRecord::failure(
                Some(&v),
                FactorizeError::PreconditionViolated(v.clone()).to_string(),
            ));
            EXIT_FAILED
        }
        Err(FactorizeError::QuasiInverse(e)) => return Err(e.into()),
        Err(e @ FactorizeError::Table(_)) => return Err(e.into()),
        Err(e) => {
            if !g.quiet && !g.json {
                writeln!(out, "factorization failed: {e}").map_err(stdout_err)?;
            }
            report.factorization = Some(FactorizationRecord::failure(None, e.to_string()));
            EXIT_FAILED
        }
    };
    if let Some(p) = out_report {
        write_file(p, &report.to_json())?;
    }
    if g.json {
        out.write_all(report.to_json().as_bytes()).map_err(stdout_err)?;
    }
    Ok(code)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    Median,
    Tnorm,
    Tconorm,
    Uninorm,
    QuasiSum,
    Ling,
}

/// Family descriptor flags for `generate`.
#[derive(Clone, Debug, Default, Args)]
pub struct GenerateArgs {
    #[arg(long, value_enum)]
    pub family: Option<FamilyKind>,
    /// Chain symbols in increasing order (median).
    #[arg(long, value_delimiter = ',')]
    pub chain: Vec<String>,
    /// Chain 0..n-1 when --chain is not given (median).
    #[arg(long)]
    pub chain_size: Option<usize>,
    /// Real grid points in increasing order.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub grid: Vec<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<String>,
    /// Catalog operation name.
    #[arg(long)]
    pub name: Option<String>,
    /// Uninorm neutral element.
    #[arg(long, allow_hyphen_values = true)]
    pub e: Option<f64>,
    #[arg(long)]
    pub phi: Option<String>,
    #[arg(long)]
    pub psi: Option<String>,
    /// Strictly monotone relabel applied to a catalog seed.
    #[arg(long)]
    pub lift: Option<String>,
    /// Domain interval of a quasi-sum, e.g. `]0,1]`.
    #[arg(long, allow_hyphen_values = true)]
    pub interval: Option<String>,
    /// Range interval of phi for a quasi-sum.
    #[arg(long, allow_hyphen_values = true)]
    pub j: Option<String>,
}

/// `[lo,hi]`, `]lo,hi]`, `[lo,hi[`, `]lo,hi[`; `inf`/`-inf` allowed.
pub fn parse_interval(s: &str) -> Result<Interval, CliError> {
    let bad = || CliError::Usage(format!("bad interval `{s}`"));
    let s = s.trim();
    let mut chars = s.chars();
    let open = chars.next().ok_or_else(bad)?;
    let close = chars.next_back().ok_or_else(bad)?;
    let (lo, hi) = chars.as_str().split_once(',').ok_or_else(bad)?;
    let num = |t: &str| t.trim().parse::<f64>().map_err(|_| bad());
    let (lo, hi) = (num(lo)?, num(hi)?);
    let lo_closed = match open {
        '[' => true,
        ']' | '(' => false,
        _ => return Err(bad()),
    };
    let hi_closed = match close {
        ']' => true,
        '[' | ')' => false,
        _ => return Err(bad()),
    };
    Ok(Interval {
        lo,
        hi,
        lo_closed: lo_closed && lo.is_finite(),
        hi_closed: hi_closed && hi.is_finite(),
    })
}

fn map_arg(flag: &str, v: &Option<String>) -> Result<RealMap, CliError> {
    let s = v
        .as_deref()
        .ok_or_else(|| CliError::Usage(format!("--{flag} is required")))?;
    s.parse().map_err(CliError::Usage)
}

fn num_arg(flag: &str, v: &Option<String>) -> Result<f64, CliError> {
    let s = v
        .as_deref()
        .ok_or_else(|| CliError::Usage(format!("--{flag} is required")))?;
    s.parse()
        .map_err(|_| CliError::Usage(format!("--{flag}: `{s}` is not a number")))
}

fn need_grid(args: &GenerateArgs) -> Result<&[f64], CliError> {
    if args.grid.is_empty() {
        return Err(CliError::Usage("--grid is required".into()));
    }
    Ok(&args.grid)
}

/// Build the family's table and the property suite that defines it.
pub fn build_family(args: &GenerateArgs, max_arity: usize) -> Result<(TableFn, Vec<Property>), CliError> {
    let family = args
        .family
        .ok_or_else(|| CliError::Usage("--family is required".into()))?;
    match family {
        FamilyKind::Median => {
            let chain = match (&args.chain[..], args.chain_size) {
                ([], Some(n)) => Chain::numeric(n),
                ([], None) => return Err(CliError::Usage("--chain or --chain-size is required".into())),
                (symbols, _) => Chain::new(symbols.iter().cloned()),
            }
            .map_err(|e| CliError::Invalid {
                field: "chain".into(),
                message: e.to_string(),
            })?;
            let sym = |flag: &str, v: &Option<String>| -> Result<String, CliError> {
                v.clone()
                    .ok_or_else(|| CliError::Usage(format!("--{flag} is required")))
            };
            let params = MedianParams::from_symbols(
                &chain,
                &sym("a", &args.a)?,
                &sym("b", &args.b)?,
                &sym("c", &args.c)?,
                &sym("d", &args.d)?,
            )?;
            let t = make_median_family(params, &chain, max_arity, None)?;
            Ok((
                t,
                vec![
                    Property::AssociativeA1,
                    Property::RangeIdempotent,
                    Property::Nondecreasing,
                    Property::ConvexSections,
                ],
            ))
        }
        FamilyKind::Tnorm | FamilyKind::Tconorm | FamilyKind::Uninorm => {
            let name = args
                .name
                .as_deref()
                .ok_or_else(|| CliError::Usage("--name is required".into()))?;
            let op = BinaryOp::from_name(name, args.e)
                .ok_or_else(|| CliError::Usage(format!("unknown operation `{name}` (uninorms need --e)")))?;
            let kind_ok = match family {
                FamilyKind::Tnorm => BinaryOp::TNORMS.contains(&op.name().as_str()),
                FamilyKind::Tconorm => BinaryOp::TCONORMS.contains(&op.name().as_str()),
                _ => matches!(op, BinaryOp::UninormMin(_) | BinaryOp::UninormMax(_)),
            };
            if !kind_ok {
                return Err(CliError::Usage(format!("`{name}` is not in the {family:?} catalog")));
            }
            let seed = variadic_seed(op, need_grid(args)?, max_arity)?;
            match &args.lift {
                None => Ok((
                    seed,
                    vec![Property::AssociativeA1, Property::Symmetric, Property::Nondecreasing],
                )),
                Some(m) => {
                    let f: RealMap = m.parse().map_err(CliError::Usage)?;
                    Ok((
                        lift_tnorm(&f, &seed)?,
                        vec![
                            Property::PreassociativeP1,
                            Property::UnarilyQuasiRangeIdempotent,
                            Property::Symmetric,
                        ],
                    ))
                }
            }
        }
        FamilyKind::QuasiSum => {
            let grid = need_grid(args)?;
            let interval = match &args.interval {
                Some(s) => parse_interval(s)?,
                None => Interval::reals(),
            };
            let j = match &args.j {
                Some(s) => parse_interval(s)?,
                None => Interval::reals(),
            };
            let g = make_quasi_sum(map_arg("phi", &args.phi)?, map_arg("psi", &args.psi)?, interval, j, grid)?;
            let t = tabulate(&g, grid, max_arity, None).map_err(preassoc::FamilyError::from)?;
            Ok((t, vec![Property::PreassociativeP1, Property::PreassociativeP2]))
        }
        FamilyKind::Ling => {
            let grid = need_grid(args)?;
            let g = make_ling(
                map_arg("phi", &args.phi)?,
                map_arg("psi", &args.psi)?,
                num_arg("a", &args.a)?,
                num_arg("b", &args.b)?,
                grid,
            )?;
            let t = tabulate(&g, grid, max_arity, None).map_err(preassoc::FamilyError::from)?;
            Ok((t, vec![Property::PreassociativeP1, Property::PreassociativeP2]))
        }
    }
}

/// Tabulate a family, write it, and re-run its defining suite.
pub fn cmd_generate(
    args: &GenerateArgs,
    out_path: Option<&Path>,
    g: &Global,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    let max_arity = g.max_arity.unwrap_or(3);
    if max_arity == 0 {
        return Err(CliError::Usage("--max-arity must be at least 1".into()));
    }
    let (t, suite) = build_family(args, max_arity)?;
    let text = serialize(&t);
    // re-read what is written so the suite runs on the file contents
    let written = parse(&text)?;
    let mut report = ReportFile::new(&written);
    report.results = run_suite(&written, &suite);
    match out_path {
        Some(p) => write_file(p, &text)?,
        None if !g.json => out.write_all(text.as_bytes()).map_err(stdout_err)?,
        None => {}
    }
    if g.json {
        out.write_all(report.to_json().as_bytes()).map_err(stdout_err)?;
    } else if !g.quiet && out_path.is_some() {
        for r in &report.results {
            print_record(out, r).map_err(stdout_err)?;
        }
    }
    Ok(if report.results.iter().all(|r| r.holds) {
        EXIT_OK
    } else {
        EXIT_FAILED
    })
}

/// Enumerate the filtered universe as JSON lines.
pub fn cmd_enumerate(
    chain_size: usize,
    filter: &[Property],
    force: bool,
    out_path: Option<&Path>,
    g: &Global,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<u8, CliError> {
    let req = EnumerateRequest {
        chain_size,
        max_arity: g.max_arity.unwrap_or(3),
        filter: filter.to_vec(),
        force,
    };
    let found = enumerate(&req)?;
    let mut lines = String::new();
    for t in &found {
        lines.push_str(&serialize_line(t));
        lines.push('\n');
    }
    let mut summary = format!("{} functions", found.len());
    if filter.contains(&Property::AssociativeBinary) {
        let distinct: BTreeSet<Vec<u32>> = found
            .iter()
            .filter_map(|t| t.binary_part().map(|b| b.values().to_vec()))
            .collect();
        summary.push_str(&format!(", {} distinct binary tables", distinct.len()));
    }
    match out_path {
        Some(p) => {
            write_file(p, &lines)?;
            if !g.quiet {
                writeln!(out, "{summary}").map_err(stdout_err)?;
            }
        }
        None => {
            out.write_all(lines.as_bytes()).map_err(stdout_err)?;
            if !g.quiet {
                let _ = writeln!(err, "{summary}");
            }
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aliases() {
        assert_eq!(
            parse_properties(&["assoc,preassoc", "standard"]).unwrap(),
            vec![Property::AssociativeA1, Property::PreassociativeP1, Property::Standard]
        );
        assert!(parse_properties(&["bogus"]).is_err());
        assert_eq!(
            parse_properties(&["associative_binary"]).unwrap(),
            vec![Property::AssociativeBinary]
        );
    }

    #[test]
    fn intervals() {
        let i = parse_interval("]0,1]").unwrap();
        assert!(!i.contains(0.0) && i.contains(1.0));
        let r = parse_interval("]-inf,0]").unwrap();
        assert!(r.contains(-5.0) && !r.lo_closed);
        assert!(parse_interval("0,1").is_err());
    }

    #[test]
    fn median_family_suite_holds() {
        let args = GenerateArgs {
            family: Some(FamilyKind::Median),
            chain: ["0", "1", "2", "3"].map(String::from).to_vec(),
            a: Some("0".into()),
            b: Some("3".into()),
            c: Some("1".into()),
            d: Some("1".into()),
            ..GenerateArgs::default()
        };
        let (t, suite) = build_family(&args, 3).unwrap();
        assert!(suite.iter().all(|&p| check_property(&t, p).unwrap().holds));
    }
}
