//! The `zx` command runner: argument model, zero-source resolution, and the
//! tables each subcommand writes.
//!
//! Exit statuses are part of the contract: 0 success, 2 parse, 3 range or
//! domain, 4 configuration, 1 anything else (I/O, integrity).

use crate::error::{Error, Result};
use crate::explicit::{
    antisymmetric_h, cut_plane_identity, default_cut_plane_grid, default_strip_grid,
    mangoldt_estimate, strip_identity, IdentityKind, IdentityReport,
};
use crate::mangoldt::sieve_mangoldt;
use crate::output::{write_svg, Cell, Series, Table};
use crate::spectrum::{
    detect_cusps, nearest_zeros, scan, uniform_grid, SpectrumConfig, SpectrumSeries,
};
use crate::zeros::{find_zeros, load_zeros, smooth_count, ZeroTable};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

/// Environment variable naming the fixture directory.
pub const FIXTURES_ENV: &str = "ZX_FIXTURES";
/// Zero table looked up in the fixture directory.
pub const FIXTURE_FILE: &str = "first100.txt";
/// Height at which 10000 zeros lie below `T`.
pub const TEN_THOUSAND_ZERO_HEIGHT: f64 = 9877.782654004;

#[derive(Debug, Parser)]
#[command(
    name = "zx",
    version,
    about = "Von Mangoldt function from the zeros of zeta"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate Λ(n) and ψ(n) up to a limit.
    Sieve {
        #[arg(long, default_value_t = 100)]
        limit: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compute or ingest a zero table and write it in the zero-table format.
    Zeros {
        /// Find the zeros up to --height (the default without --ingest).
        #[arg(long, conflicts_with = "ingest")]
        compute: bool,
        #[arg(long, required_unless_present = "ingest")]
        height: Option<f64>,
        /// Read and re-emit an existing zero table.
        #[arg(long)]
        ingest: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Estimate Λ(t) over a t-range from the zeros below T.
    Estimate {
        #[command(flatten)]
        range: RangeArgs,
        #[arg(long = "T", default_value_t = TEN_THOUSAND_ZERO_HEIGHT)]
        height: f64,
        #[command(flatten)]
        zeros: ZeroArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// The estimate over a t-range at several truncation heights.
    Sweep {
        #[command(flatten)]
        range: RangeArgs,
        /// Comma-separated truncation heights.
        #[arg(long, value_delimiter = ',', default_values_t = [100.0, 1000.0, TEN_THOUSAND_ZERO_HEIGHT])]
        heights: Vec<f64>,
        #[command(flatten)]
        zeros: ZeroArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Residuals of the cut-plane and strip identities on sample grids.
    Identity {
        /// Prime-series cutoff N.
        #[arg(long, default_value_t = 100_000)]
        terms: usize,
        /// Height of the zero table used (computed unless --zeros is given).
        #[arg(long, default_value_t = TEN_THOUSAND_ZERO_HEIGHT + 0.01)]
        height: f64,
        /// Cut-plane points `re,im`, replacing the default grid.
        #[arg(long = "z", value_parser = parse_complex, allow_hyphen_values = true)]
        points: Vec<Complex64>,
        /// Strip points `re,im`, replacing the default grid.
        #[arg(long = "strip-z", value_parser = parse_complex, allow_hyphen_values = true)]
        strip_points: Vec<Complex64>,
        #[command(flatten)]
        zeros: ZeroArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample Φ₁ and Φ₂ and report their cusps against the zeros.
    Spectrum {
        #[arg(long, default_value_t = 3.0)]
        t_from: f64,
        #[arg(long, default_value_t = 50.0)]
        t_to: f64,
        #[arg(long, default_value_t = 0.005)]
        t_step: f64,
        /// Prime-power cutoff.
        #[arg(long = "T", default_value_t = crate::spectrum::DEFAULT_CUTOFF)]
        cutoff: usize,
        #[arg(long, default_value_t = crate::spectrum::DEFAULT_SQRT_COEFFICIENT)]
        c_spec: f64,
        /// Where the cusp table goes; defaults to `<out>.cusps.csv`.
        #[arg(long)]
        cusps_out: Option<PathBuf>,
        #[command(flatten)]
        zeros: ZeroArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Args)]
pub struct RangeArgs {
    #[arg(long, default_value_t = 2.0)]
    pub t_from: f64,
    #[arg(long, default_value_t = 100.0)]
    pub t_to: f64,
    #[arg(long, default_value_t = 1.0)]
    pub t_step: f64,
}

#[derive(Debug, Args)]
pub struct ZeroArgs {
    /// Zero table to read instead of the default source.
    #[arg(long = "zeros", conflicts_with = "compute")]
    pub path: Option<PathBuf>,
    /// Always compute the zeros.
    #[arg(long)]
    pub compute: bool,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Svg,
}

fn parse_complex(s: &str) -> std::result::Result<Complex64, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let num = |p: &str| p.parse::<f64>().map_err(|e| format!("`{p}`: {e}"));
    match parts.as_slice() {
        [re] => Ok(Complex64::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(num(re)?, num(im)?)),
        _ => Err(format!("expected `re` or `re,im`, got `{s}`")),
    }
}

/// Exit status for an error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Format { .. } | Error::Order { .. } => 2,
        Error::Domain(_) | Error::OutOfRange(_) => 3,
        Error::Config(_) => 4,
        Error::Integrity(_) | Error::Io(_) => 1,
    }
}

/// The fixture directory: `$ZX_FIXTURES`, else the one shipped with the crate.
pub fn fixture_dir() -> PathBuf {
    std::env::var_os(FIXTURES_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures"))
}

pub fn read_zero_file(path: &Path) -> Result<ZeroTable> {
    load_zeros(BufReader::new(File::open(path).map_err(|e| {
        Error::Io(std::io::Error::new(
            e.kind(),
            format!("{}: {e}", path.display()),
        ))
    })?))
}

/// A zero table covering `height` and a one-line note of where it came from.
///
/// An explicit file must cover `height`. Without one, the fixture table is
/// used when it reaches `height`, otherwise the zeros are computed.
pub fn resolve_zeros(args: &ZeroArgs, height: f64) -> Result<(ZeroTable, String)> {
    if let Some(path) = &args.path {
        let table = read_zero_file(path)?;
        if table.height() < height {
            return Err(Error::OutOfRange(format!(
                "{} covers zeros up to {} but height {height} is needed",
                path.display(),
                table.height()
            )));
        }
        let note = describe(&table, &format!("file {}", path.display()));
        return Ok((table, note));
    }
    let fixture = fixture_dir().join(FIXTURE_FILE);
    if !args.compute && fixture.is_file() {
        let table = read_zero_file(&fixture)?;
        if table.height() >= height {
            let note = describe(&table, &format!("fixture {}", fixture.display()));
            return Ok((table, note));
        }
    }
    let table = find_zeros(height)?;
    let why = if args.compute {
        "requested"
    } else {
        "no fixture covers the height"
    };
    let note = describe(&table, &format!("computed ({why})"));
    Ok((table, note))
}

fn describe(table: &ZeroTable, origin: &str) -> String {
    format!(
        "zero source: {origin}; {} zeros, complete to height {}",
        table.len(),
        table.height()
    )
}

fn open_out(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(std::io::stdout())),
    })
}

fn emit(
    table: &Table,
    output: &OutputArgs,
    title: &str,
    series: impl FnOnce() -> Vec<Series>,
) -> Result<()> {
    let mut out = open_out(output.out.as_deref())?;
    match output.format {
        Format::Csv => table.write_csv(&mut out)?,
        Format::Svg => write_svg(&mut out, title, &series())?,
    }
    out.flush()?;
    Ok(())
}

fn xy(table: &Table, x: &str, y: &str) -> Vec<(f64, f64)> {
    table
        .column(x)
        .into_iter()
        .zip(table.column(y))
        .filter_map(|(a, b)| Some((a?, b?)))
        .collect()
}

/// Runs one command; status lines go to `log`.
pub fn run(cli: &Cli, log: &mut dyn Write) -> Result<()> {
    match &cli.command {
        Command::Sieve { limit, output } => {
            let table = sieve_table(*limit)?;
            emit(&table, output, "Chebyshev psi", || {
                vec![Series {
                    name: "psi".into(),
                    points: xy(&table, "n", "psi"),
                }]
            })
        }
        Command::Zeros {
            height,
            ingest,
            out,
            ..
        } => {
            let table = match (ingest, height) {
                (Some(path), _) => read_zero_file(path)?,
                (None, Some(h)) => find_zeros(*h)?,
                (None, None) => {
                    return Err(Error::Config("zeros needs --ingest or --height".into()))
                }
            };
            let mut w = open_out(out.as_deref())?;
            table.write_to(&mut w)?;
            w.flush()?;
            writeln!(log, "{}", count_status(&table)?)?;
            Ok(())
        }
        Command::Estimate {
            range,
            height,
            zeros,
            output,
        } => {
            let (zero_table, note) = resolve_zeros(zeros, *height)?;
            let table = estimate_table(range, *height, &zero_table, &note)?;
            let failures = table
                .column("bound_satisfied")
                .iter()
                .filter(|v| *v == &Some(0.0))
                .count();
            if failures > 0 {
                writeln!(log, "warning: {failures} rows exceed their error bound")?;
            }
            emit(&table, output, "Lambda estimate", || {
                vec![
                    Series {
                        name: "estimate".into(),
                        points: xy(&table, "t", "estimate"),
                    },
                    Series {
                        name: "exact".into(),
                        points: xy(&table, "t", "exact_lambda"),
                    },
                ]
            })
        }
        Command::Sweep {
            range,
            heights,
            zeros,
            output,
        } => {
            let top = heights.iter().copied().fold(f64::NAN, f64::max);
            if heights.is_empty() || !top.is_finite() {
                return Err(Error::Config(
                    "sweep needs at least one finite height".into(),
                ));
            }
            let (zero_table, note) = resolve_zeros(zeros, top)?;
            let table = sweep_table(range, heights, &zero_table, &note)?;
            emit(&table, output, "Lambda estimate by height", || {
                heights
                    .iter()
                    .map(|&h| {
                        let points = xy(&table, "t", "estimate")
                            .into_iter()
                            .zip(table.column("T"))
                            .filter(|(_, th)| *th == Some(h))
                            .map(|(p, _)| p)
                            .collect();
                        Series {
                            name: format!("T={h}"),
                            points,
                        }
                    })
                    .collect()
            })
        }
        Command::Identity {
            terms,
            height,
            points,
            strip_points,
            zeros,
            out,
        } => {
            let (zero_table, note) = resolve_zeros(zeros, *height)?;
            let cut = if points.is_empty() {
                default_cut_plane_grid()
            } else {
                points.clone()
            };
            let strip = if strip_points.is_empty() {
                default_strip_grid()
            } else {
                strip_points.clone()
            };
            let table = identity_table(*terms, &cut, &strip, &zero_table, &note)?;
            let failed = table
                .column("pass")
                .iter()
                .filter(|v| *v == &Some(0.0))
                .count();
            writeln!(log, "{} identity checks, {failed} failed", table.rows.len())?;
            let mut w = open_out(out.as_deref())?;
            table.write_csv(&mut w)?;
            w.flush()?;
            Ok(())
        }
        Command::Spectrum {
            t_from,
            t_to,
            t_step,
            cutoff,
            c_spec,
            cusps_out,
            zeros,
            output,
        } => {
            let cfg = SpectrumConfig::new(*cutoff, *c_spec)?;
            let (samples, cusps) = spectrum_tables(*t_from, *t_to, *t_step, &cfg, zeros)?;
            emit(&samples, output, "Prime spectrum", || {
                vec![
                    Series {
                        name: "phi1".into(),
                        points: xy(&samples, "t", "phi1"),
                    },
                    Series {
                        name: "phi2".into(),
                        points: xy(&samples, "t", "phi2"),
                    },
                ]
            })?;
            let cusp_path = cusps_out
                .clone()
                .or_else(|| output.out.as_ref().map(|p| p.with_extension("cusps.csv")));
            match cusp_path {
                Some(p) => {
                    let mut w = BufWriter::new(File::create(&p)?);
                    cusps.write_csv(&mut w)?;
                    w.flush()?;
                }
                None => cusps.write_csv(&mut *log)?,
            }
            Ok(())
        }
    }
}

/// `n, lambda, psi` for `1 ≤ n ≤ limit`.
pub fn sieve_table(limit: usize) -> Result<Table> {
    let lambda = sieve_mangoldt(limit)?;
    let mut table = Table::new(&["n", "lambda", "psi"]);
    table.note(format!("sieve to {limit}"));
    let mut psi = crate::summation::CompensatedSum::new();
    for n in 1..=limit {
        let v = lambda.values()[n];
        psi.add(v);
        table.push(vec![n.into(), v.into(), psi.value().into()]);
    }
    Ok(table)
}

/// Count of zeros against the smooth count `θ(T)/π + 1` and the explicit
/// bound `|S(T)| ≤ 0.112 log T + 0.278 log log T + 2.51`.
pub fn count_status(table: &ZeroTable) -> Result<String> {
    let h = table.height();
    let count = table.up_to(h).len();
    if h < 10.0 {
        return Ok(format!("{count} zeros up to {h}"));
    }
    let smooth = smooth_count(h)?;
    let s = count as f64 - smooth;
    let bound = 0.112 * h.ln() + 0.278 * h.ln().ln() + 2.51;
    let status = if s.abs() <= bound {
        "consistent"
    } else {
        "INCONSISTENT"
    };
    Ok(format!(
        "{count} zeros up to {h}; smooth count {smooth:.3}, S(T) = {s:.3}, |S(T)| bound {bound:.3}: {status}"
    ))
}

pub const ESTIMATE_COLUMNS: [&str; 8] = [
    "t",
    "estimate",
    "exact_lambda",
    "abs_error",
    "tail_bound",
    "total_bound",
    "zeros_used",
    "bound_satisfied",
];

/// One row per grid point `t`.
///
/// For non-integer `t` the `exact_lambda` column carries `Λ(t) = 0` and the
/// error is taken against it.
pub fn estimate_table(
    range: &RangeArgs,
    height: f64,
    zeros: &ZeroTable,
    note: &str,
) -> Result<Table> {
    let grid = uniform_grid(range.t_from, range.t_to, range.t_step)?;
    let mut table = Table::new(&ESTIMATE_COLUMNS);
    table.note(note);
    table.note(format!("T = {height}, x coupled by cot(x/2) = log T / T"));
    for t in grid {
        let r = mangoldt_estimate(t, height, zeros)?;
        table.push(vec![
            t.into(),
            r.estimate.into(),
            r.target().into(),
            r.abs_error().into(),
            r.tail_bound.into(),
            r.total_bound.into(),
            r.zeros_used.into(),
            Cell::Flag(r.bound_satisfied()),
        ]);
    }
    Ok(table)
}

pub fn sweep_table(
    range: &RangeArgs,
    heights: &[f64],
    zeros: &ZeroTable,
    note: &str,
) -> Result<Table> {
    let grid = uniform_grid(range.t_from, range.t_to, range.t_step)?;
    let mut table = Table::new(&[
        "T",
        "t",
        "estimate",
        "exact_lambda",
        "abs_error",
        "total_bound",
        "zeros_used",
        "bound_satisfied",
    ]);
    table.note(note);
    for &h in heights {
        for &t in &grid {
            let r = mangoldt_estimate(t, h, zeros)?;
            table.push(vec![
                h.into(),
                t.into(),
                r.estimate.into(),
                r.target().into(),
                r.abs_error().into(),
                r.total_bound.into(),
                r.zeros_used.into(),
                Cell::Flag(r.bound_satisfied()),
            ]);
        }
    }
    Ok(table)
}

/// Residual table over both grids, with the inversion antisymmetry of `H`
/// over the cut-plane points in the metadata.
pub fn identity_table(
    terms: usize,
    cut: &[Complex64],
    strip: &[Complex64],
    zeros: &ZeroTable,
    note: &str,
) -> Result<Table> {
    let primes = sieve_mangoldt(terms)?;
    let mut reports: Vec<IdentityReport> = Vec::new();
    for &z in cut {
        reports.push(cut_plane_identity(z, terms, &primes, zeros)?);
    }
    for &z in strip {
        reports.push(strip_identity(z, terms, &primes, zeros)?);
    }
    let mut antisymmetry: f64 = 0.0;
    for &z in cut {
        if z != Complex64::new(1.0, 0.0) {
            antisymmetry =
                antisymmetry.max((antisymmetric_h(z)? + antisymmetric_h(z.inv())?).norm());
        }
    }
    let mut table = Table::new(&[
        "identity",
        "z_re",
        "z_im",
        "residual",
        "raw_residual",
        "tail_estimate",
        "pass",
    ]);
    table.note(note);
    table.note(format!("series cutoff N = {terms}"));
    table.note(format!(
        "max |H(z) + H(1/z)| over the cut-plane points: {antisymmetry:e}"
    ));
    for r in reports {
        let kind = match r.kind {
            IdentityKind::CutPlane => "cut_plane",
            IdentityKind::Strip => "strip",
        };
        table.push(vec![
            Cell::Text(kind.into()),
            r.z.re.into(),
            r.z.im.into(),
            r.residual.into(),
            r.raw_residual.into(),
            r.truncation_estimate().into(),
            Cell::Flag(Some(r.passes())),
        ]);
    }
    Ok(table)
}

/// Samples `t, phi1, phi2` and the `Φ₂` cusps `t, nearest_gamma, distance`.
pub fn spectrum_tables(
    lo: f64,
    hi: f64,
    step: f64,
    cfg: &SpectrumConfig,
    zeros: &ZeroArgs,
) -> Result<(Table, Table)> {
    let primes = sieve_mangoldt(cfg.cutoff())?;
    let samples = scan(lo, hi, step, cfg, &primes)?;
    let cusps = detect_cusps(&samples, SpectrumSeries::Phi2)?;
    let (zero_table, note) = resolve_zeros(zeros, hi.max(15.0) + 1.0)?;

    let mut sample_table = Table::new(&["t", "phi1", "phi2"]);
    sample_table.note(format!("T = {}, c = {}", cfg.cutoff(), cfg.c_spec()));
    for s in &samples {
        sample_table.push(vec![s.t.into(), s.phi1.into(), s.phi2.into()]);
    }
    let mut cusp_table = Table::new(&["t", "nearest_gamma", "distance"]);
    cusp_table.note(note);
    cusp_table.note(format!(
        "Φ₂ cusps, T = {}, c = {}",
        cfg.cutoff(),
        cfg.c_spec()
    ));
    for m in nearest_zeros(&cusps, zero_table.zeros()) {
        cusp_table.push(vec![m.t.into(), m.nearest_gamma.into(), m.distance.into()]);
    }
    Ok((sample_table, cusp_table))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arguments_parse() {
        let cli = Cli::try_parse_from([
            "zx", "estimate", "--t-from", "2", "--t-to", "4", "--T", "100",
        ])
        .unwrap();
        match cli.command {
            Command::Estimate { range, height, .. } => {
                assert_eq!((range.t_from, range.t_to, height), (2.0, 4.0, 100.0));
            }
            _ => panic!("wrong command"),
        }
        let cli = Cli::try_parse_from(["zx", "identity", "--z", "1,1", "--z", "2"]).unwrap();
        match cli.command {
            Command::Identity { points, .. } => {
                assert_eq!(
                    points,
                    vec![Complex64::new(1.0, 1.0), Complex64::new(2.0, 0.0)]
                );
            }
            _ => panic!("wrong command"),
        }
        assert!(Cli::try_parse_from(["zx", "zeros"]).is_err());
        assert!(Cli::try_parse_from(["zx", "estimate", "--zeros", "a", "--compute"]).is_err());
        assert!(parse_complex("1,2,3").is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(
            exit_code(&Error::Format {
                line: 1,
                message: "x".into()
            }),
            2
        );
        assert_eq!(exit_code(&Error::OutOfRange("x".into())), 3);
        assert_eq!(exit_code(&Error::Domain("x".into())), 3);
        assert_eq!(exit_code(&Error::Config("x".into())), 4);
        assert_eq!(exit_code(&Error::Integrity("x".into())), 1);
    }

    #[test]
    fn sieve_columns() {
        let t = sieve_table(10).unwrap();
        assert_eq!(t.rows.len(), 10);
        let psi = t.column("psi");
        assert!((psi[9].unwrap() - (8f64.ln() + 9f64.ln() + 5f64.ln() + 7f64.ln())).abs() < 1e-12);
    }

    #[test]
    fn estimate_rows() {
        let zeros = load_zeros(include_str!("../fixtures/first100.txt").as_bytes()).unwrap();
        let range = RangeArgs {
            t_from: 2.0,
            t_to: 3.0,
            t_step: 0.5,
        };
        let t = estimate_table(&range, 200.0, &zeros, "test").unwrap();
        assert_eq!(t.header, ESTIMATE_COLUMNS);
        assert_eq!(t.rows.len(), 3);
        assert_eq!(
            t.column("exact_lambda"),
            vec![Some(2f64.ln()), Some(0.0), Some(3f64.ln())]
        );
        // t = 2.5 carries the non-integer bound
        assert!(t.column("total_bound")[1].is_some());
        let bad = RangeArgs {
            t_from: 3.0,
            t_to: 2.0,
            t_step: 1.0,
        };
        assert!(matches!(
            estimate_table(&bad, 200.0, &zeros, ""),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn count_status_line() {
        let zeros = load_zeros(include_str!("../fixtures/first100.txt").as_bytes()).unwrap();
        let line = count_status(&zeros).unwrap();
        assert!(line.starts_with("100 zeros"), "{line}");
        assert!(line.ends_with("consistent"), "{line}");
    }
}
