//! Command-line front end: generate polynomials and tables, run the
//! verification grid, export artifacts in stable exact formats.
//!
//! Exit codes: 0 success / all checks pass, 1 any failed check or
//! computation error, 2 usage error.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use deformed_hermite::algebra::{format_rational, Alpha};
use deformed_hermite::deform::{m_poly_symbolic, ode_system_matrix, DeformParams};
use deformed_hermite::family::{c_poly, verify_square, w_poly};
use deformed_hermite::measure::{inner_table, measure_poly, moment_decompose};
use deformed_hermite::render::zpoly_latex;
use deformed_hermite::serialize::{
    inner_table_csv, DecompJson, GenDoc, GenPolyJson, InnerTableJson, OdeSystemJson, PolyJson,
    SquareJson,
};
use deformed_hermite::verify::{run_verification, VerifyOptions, VerifyReport};
use deformed_hermite::ZPoly;

#[derive(Parser)]
#[command(
    name = "dhermite",
    version,
    about = "Deformed Hermite polynomial families: exact generation, tables, and verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print polynomials of a family (H, M, C, W, or the weight D)
    Gen(GenArgs),
    /// Emit the pairing table I[n][m] at a numeric level
    Table(TableArgs),
    /// Emit the coefficients of z^n D_s as a combination of D_p
    Decompose(DecompArgs),
    /// Emit the triangular differential system and its residuals
    Ode(OdeArgs),
    /// Run the verification grid and report per-check status
    Verify(VerifyArgs),
    /// Export families, tables, and reports as one JSON bundle
    Export(ExportArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "UPPER")]
enum Family {
    H,
    M,
    C,
    W,
    D,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::H => "H",
            Family::M => "M",
            Family::C => "C",
            Family::W => "W",
            Family::D => "D",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Latex,
    Json,
    Csv,
}

/// Level argument: "sym" or a nonnegative integer.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Level {
    Sym,
    Num(u32),
}

impl Level {
    fn label(self) -> String {
        match self {
            Level::Sym => "sym".to_string(),
            Level::Num(v) => v.to_string(),
        }
    }
}

impl FromStr for Level {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "sym" {
            return Ok(Level::Sym);
        }
        s.parse::<u32>()
            .map(Level::Num)
            .map_err(|_| format!("expected \"sym\" or a nonnegative integer, got {s:?}"))
    }
}

fn parse_alpha(s: &str) -> Result<Alpha, String> {
    Alpha::from_str(s).map_err(|e| e.to_string())
}

#[derive(Args)]
struct GenArgs {
    /// Family to generate
    #[arg(long, value_enum, ignore_case = true)]
    family: Family,
    /// Single index to print
    #[arg(long, conflicts_with = "n_max")]
    n: Option<usize>,
    /// Print indices 0..=n_max
    #[arg(long)]
    n_max: Option<usize>,
    /// Level: "sym" (H and M only) or a nonnegative integer
    #[arg(long, default_value = "sym")]
    s: Level,
    /// Deformation sign, +1 or -1
    #[arg(long, default_value = "+1", allow_hyphen_values = true, value_parser = parse_alpha)]
    alpha: Alpha,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
    /// Largest permitted index
    #[arg(long, default_value_t = 16)]
    ceiling: usize,
    /// Write to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TableArgs {
    /// Table covers 0..=n_max in both indices
    #[arg(long)]
    n_max: usize,
    /// Numeric level
    #[arg(long)]
    s: u32,
    #[arg(long, default_value = "+1", allow_hyphen_values = true, value_parser = parse_alpha)]
    alpha: Alpha,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[arg(long, default_value_t = 16)]
    ceiling: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DecompArgs {
    /// Moment power
    #[arg(long)]
    n: usize,
    /// Numeric level
    #[arg(long)]
    s: u32,
    #[arg(long, default_value = "+1", allow_hyphen_values = true, value_parser = parse_alpha)]
    alpha: Alpha,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
    #[arg(long, default_value_t = 16)]
    ceiling: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OdeArgs {
    /// System covers indices 0..=n
    #[arg(long)]
    n: usize,
    #[arg(long, default_value = "+1", allow_hyphen_values = true, value_parser = parse_alpha)]
    alpha: Alpha,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
    #[arg(long, default_value_t = 16)]
    ceiling: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 8)]
    n_max: usize,
    #[arg(long, default_value_t = 4)]
    s_max: u32,
    /// "+1", "-1", or "both"
    #[arg(long, default_value = "both", allow_hyphen_values = true)]
    alpha: String,
    /// Also check the published closed-form tables
    #[arg(long = "paper-table")]
    paper_table: bool,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
    #[arg(long, default_value_t = 16)]
    ceiling: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExportArgs {
    #[arg(long, default_value_t = 6)]
    n_max: usize,
    #[arg(long, default_value_t = 4)]
    s_max: u32,
    #[arg(long, default_value_t = 16)]
    ceiling: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Semantic (non-parser) usage error: exit 2 like clap's own.
struct UsageError(String);

/// Computation failure on valid input: exit 1.
struct RunError(String);

enum Failure {
    Usage(UsageError),
    Run(RunError),
}

impl From<UsageError> for Failure {
    fn from(e: UsageError) -> Self {
        Failure::Usage(e)
    }
}

impl From<RunError> for Failure {
    fn from(e: RunError) -> Self {
        Failure::Run(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Table(args) => cmd_table(args),
        Command::Decompose(args) => cmd_decompose(args),
        Command::Ode(args) => cmd_ode(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Export(args) => cmd_export(args),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::Usage(UsageError(msg))) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Run(RunError(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn write_output(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Run(RunError(format!("cannot write {}: {e}", path.display())))),
    }
}

fn check_ceiling(value: usize, ceiling: usize, what: &str) -> Result<(), UsageError> {
    if value > ceiling {
        return Err(UsageError(format!(
            "{what} = {value} exceeds the ceiling {ceiling} (raise with --ceiling)"
        )));
    }
    Ok(())
}

fn to_json(value: &impl serde::Serialize) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    text
}

fn cmd_gen(args: GenArgs) -> Result<ExitCode, Failure> {
    let family = args.family;
    let alpha = args.alpha;

    if matches!(family, Family::C | Family::W | Family::D) && args.s == Level::Sym {
        return Err(UsageError(format!("family {} requires a numeric --s", family.name())).into());
    }
    if args.format == Format::Csv {
        return Err(UsageError("gen supports plain, latex, or json".into()).into());
    }

    let indices: Vec<usize> = match family {
        Family::D => {
            if args.n.is_some() || args.n_max.is_some() {
                return Err(UsageError(
                    "family D is a single weight polynomial per level; drop --n/--n-max".into(),
                )
                .into());
            }
            let Level::Num(s) = args.s else {
                unreachable!()
            };
            check_ceiling(s as usize, args.ceiling, "s")?;
            vec![s as usize]
        }
        _ => match (args.n, args.n_max) {
            (Some(n), None) => {
                check_ceiling(n, args.ceiling, "n")?;
                vec![n]
            }
            (None, Some(n_max)) => {
                check_ceiling(n_max, args.ceiling, "n_max")?;
                (0..=n_max).collect()
            }
            (None, None) => {
                return Err(UsageError("pass --n or --n-max".into()).into());
            }
            (Some(_), Some(_)) => unreachable!("clap rejects the conflict"),
        },
    };

    let build = |n: usize| -> Result<ZPoly, Failure> {
        let poly = match (family, args.s) {
            (Family::H, _) => deformed_hermite::deform::hermite(n),
            (Family::M, Level::Sym) => m_poly_symbolic(n, alpha),
            (Family::M, Level::Num(s)) => {
                deformed_hermite::deform::m_poly(&DeformParams::numeric(n, alpha, s))
            }
            (Family::C, Level::Num(s)) => {
                c_poly(n, s, alpha).map_err(|e| RunError(e.to_string()))?
            }
            (Family::W, Level::Num(s)) => {
                w_poly(n, s, alpha).map_err(|e| RunError(e.to_string()))?
            }
            (Family::D, Level::Num(s)) => measure_poly(s, alpha).poly,
            _ => unreachable!("sym levels rejected above"),
        };
        Ok(poly)
    };

    let mut polys = Vec::new();
    for &n in &indices {
        polys.push((n, build(n)?));
    }

    let text = match args.format {
        Format::Plain => {
            let mut t = String::new();
            for (_, p) in &polys {
                writeln!(t, "{p}").unwrap();
            }
            t
        }
        Format::Latex => {
            let mut t = String::new();
            for (_, p) in &polys {
                writeln!(t, "{}", zpoly_latex(p)).unwrap();
            }
            t
        }
        Format::Json => {
            let doc = GenDoc {
                family: family.name().to_string(),
                alpha: alpha.sign(),
                s: args.s.label(),
                polys: polys
                    .iter()
                    .map(|(n, p)| GenPolyJson {
                        n: *n,
                        poly: PolyJson::from_zpoly(p),
                    })
                    .collect(),
            };
            to_json(&doc)
        }
        Format::Csv => unreachable!("rejected above"),
    };
    write_output(&args.out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_table(args: TableArgs) -> Result<ExitCode, Failure> {
    check_ceiling(args.n_max, args.ceiling, "n_max")?;
    let table = inner_table(args.n_max, args.s, args.alpha);
    let text = match args.format {
        Format::Csv => inner_table_csv(&table),
        Format::Json => to_json(&InnerTableJson::from_table(&table)),
        Format::Plain => {
            let cells: Vec<Vec<String>> = table
                .entries
                .iter()
                .map(|row| row.iter().map(format_rational).collect())
                .collect();
            let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
            let mut t = String::new();
            for row in &cells {
                let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
                writeln!(t, "{}", line.join(" ")).unwrap();
            }
            t
        }
        Format::Latex => return Err(UsageError("table supports csv, json, or plain".into()).into()),
    };
    write_output(&args.out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_decompose(args: DecompArgs) -> Result<ExitCode, Failure> {
    check_ceiling(args.n, args.ceiling, "n")?;
    let d = moment_decompose(args.n, args.s, args.alpha);
    let text = match args.format {
        Format::Json => to_json(&DecompJson::from_decomp(&d)),
        Format::Plain => {
            let mut t = String::new();
            for (p, c) in &d.coeffs {
                writeln!(t, "d[{p}] = {}", format_rational(c)).unwrap();
            }
            writeln!(t, "total = {}", format_rational(&d.total())).unwrap();
            t
        }
        _ => return Err(UsageError("decompose supports plain or json".into()).into()),
    };
    write_output(&args.out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_ode(args: OdeArgs) -> Result<ExitCode, Failure> {
    check_ceiling(args.n, args.ceiling, "n")?;
    let sys = ode_system_matrix(args.n, args.alpha);
    let family: Vec<ZPoly> = (0..=args.n)
        .map(|k| m_poly_symbolic(k, args.alpha))
        .collect();
    let residuals = sys.apply(&family).map_err(|e| RunError(e.to_string()))?;
    let doc = OdeSystemJson::from_system(&sys, &residuals);
    let text = match args.format {
        Format::Json => to_json(&doc),
        Format::Plain => {
            let mut t = String::new();
            for (j, row) in doc.rows.iter().enumerate() {
                let mut parts: Vec<String> = row.sub.clone();
                parts.push(if row.diag_shift == 0 {
                    "D".to_string()
                } else {
                    format!("D + {}", row.diag_shift)
                });
                writeln!(t, "row {j}: [{}]", parts.join(", ")).unwrap();
            }
            for (j, r) in doc.residuals.iter().enumerate() {
                writeln!(t, "residual {j}: {r}").unwrap();
            }
            t
        }
        _ => return Err(UsageError("ode supports plain or json".into()).into()),
    };
    write_output(&args.out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn render_verify_plain(report: &VerifyReport) -> String {
    let mut t = String::new();
    for c in &report.checks {
        if c.pass {
            writeln!(t, "[{}] {}: PASS ({} points)", c.suite, c.name, c.points).unwrap();
        } else {
            writeln!(
                t,
                "[{}] {}: FAIL ({}/{} points failed; first: {})",
                c.suite,
                c.name,
                c.failures,
                c.points,
                c.first_failure.as_deref().unwrap_or("?")
            )
            .unwrap();
        }
    }
    if report.singular_points.is_empty() {
        writeln!(t, "singular Gram points: none").unwrap();
    } else {
        for p in &report.singular_points {
            writeln!(
                t,
                "singular Gram point: n={} s={} alpha={}",
                p.n, p.s, p.alpha
            )
            .unwrap();
        }
    }
    writeln!(
        t,
        "total: {} points, {} failed",
        report.points_total, report.points_failed
    )
    .unwrap();
    t
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, Failure> {
    check_ceiling(args.n_max, args.ceiling, "n_max")?;
    let alphas = match args.alpha.as_str() {
        "both" => Alpha::BOTH.to_vec(),
        other => vec![parse_alpha(other).map_err(UsageError)?],
    };
    let opts = VerifyOptions {
        n_max: args.n_max,
        s_max: args.s_max,
        alphas,
        reference_tables: args.paper_table,
    };
    let report = run_verification(&opts);
    let text = match args.format {
        Format::Json => to_json(&report),
        Format::Plain => render_verify_plain(&report),
        _ => return Err(UsageError("verify supports plain or json".into()).into()),
    };
    write_output(&args.out, &text)?;
    Ok(ExitCode::from(report.exit_code() as u8))
}

/// The single-document bundle produced by `export`.
#[derive(serde::Serialize)]
struct ExportDoc {
    n_max: usize,
    s_max: u32,
    families: Vec<GenDoc>,
    tables: Vec<InnerTableJson>,
    decompositions: Vec<DecompJson>,
    ode: Vec<OdeSystemJson>,
    squares: Vec<SquareJson>,
}

fn cmd_export(args: ExportArgs) -> Result<ExitCode, Failure> {
    check_ceiling(args.n_max, args.ceiling, "n_max")?;
    let n_max = args.n_max;
    let s_max = args.s_max;

    let gen_doc = |family: Family, alpha: Alpha, s: Level, polys: Vec<(usize, ZPoly)>| GenDoc {
        family: family.name().to_string(),
        alpha: alpha.sign(),
        s: s.label(),
        polys: polys
            .into_iter()
            .map(|(n, p)| GenPolyJson {
                n,
                poly: PolyJson::from_zpoly(&p),
            })
            .collect(),
    };

    let mut families = Vec::new();
    families.push(gen_doc(
        Family::H,
        Alpha::Plus,
        Level::Sym,
        (0..=n_max)
            .map(|n| (n, deformed_hermite::deform::hermite(n)))
            .collect(),
    ));
    for alpha in Alpha::BOTH {
        families.push(gen_doc(
            Family::M,
            alpha,
            Level::Sym,
            (0..=n_max)
                .map(|n| (n, m_poly_symbolic(n, alpha)))
                .collect(),
        ));
    }
    for alpha in Alpha::BOTH {
        for s in 0..=s_max {
            let mut cs = Vec::new();
            let mut ws = Vec::new();
            for n in 0..=n_max {
                cs.push((n, c_poly(n, s, alpha).map_err(|e| RunError(e.to_string()))?));
                ws.push((n, w_poly(n, s, alpha).map_err(|e| RunError(e.to_string()))?));
            }
            families.push(gen_doc(Family::C, alpha, Level::Num(s), cs));
            families.push(gen_doc(Family::W, alpha, Level::Num(s), ws));
            families.push(gen_doc(
                Family::D,
                alpha,
                Level::Num(s),
                vec![(s as usize, measure_poly(s, alpha).poly)],
            ));
        }
    }

    let mut tables = Vec::new();
    let mut decompositions = Vec::new();
    let mut squares = Vec::new();
    for alpha in Alpha::BOTH {
        for s in 0..=s_max {
            tables.push(InnerTableJson::from_table(&inner_table(n_max, s, alpha)));
            for n in 0..=n_max.min(4) {
                decompositions.push(DecompJson::from_decomp(&moment_decompose(n, s, alpha)));
            }
            for n in 0..=n_max {
                let report = verify_square(n, s, alpha).map_err(|e| RunError(e.to_string()))?;
                squares.push(SquareJson::from_report(&report));
            }
        }
    }

    let mut ode = Vec::new();
    for alpha in Alpha::BOTH {
        let sys = ode_system_matrix(n_max, alpha);
        let family: Vec<ZPoly> = (0..=n_max).map(|k| m_poly_symbolic(k, alpha)).collect();
        let residuals = sys.apply(&family).map_err(|e| RunError(e.to_string()))?;
        ode.push(OdeSystemJson::from_system(&sys, &residuals));
    }

    let doc = ExportDoc {
        n_max,
        s_max,
        families,
        tables,
        decompositions,
        ode,
        squares,
    };
    write_output(&args.out, &to_json(&doc))?;
    Ok(ExitCode::SUCCESS)
}
