//! `krawtchouk`: build Krawtchouk matrices and zeon operators, run identity
//! sweeps and compare operator-algebra statistics with their closed forms.
//!
//! Exit codes: 0 when every check passes, 1 on an identity violation, 2 on a
//! usage or parameter error.

use std::fmt::Write as _;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use krawtchouk::algebra::{analyze_family, AlgebraFamily, ComputeBudget, FamilyKind, FamilyReport};
use krawtchouk::report::DEFAULT_FAILURE_CAP;
use krawtchouk::suites::{default_r_values, run_suites, Fault, Suite, SweepConfig};
use krawtchouk::zeon::OperatorKind;
use krawtchouk::{
    format_rational, parse_rational, Error, IdentityReport, KrawtchoukMatrix, Rational,
};
use serde::Serialize;

const SCHEMA: u32 = 1;
const FORMAT_ENV: &str = "KRAWTCHOUK_FORMAT";

#[derive(Parser, Debug)]
#[command(
    name = "krawtchouk",
    version,
    about = "Exact Krawtchouk matrices, identity checks and zeon operator algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Pretty,
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the Krawtchouk matrix of order N for parameter r.
    Matrix {
        #[arg(long)]
        n: usize,
        /// Parameter as `num/den` or an integer.
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        r: String,
        #[arg(long, value_enum, env = FORMAT_ENV, default_value = "pretty")]
        format: Format,
    },
    /// Run identity suites over a parameter grid.
    Verify {
        /// Suite name, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        /// Parameter values for r-dependent suites, comma separated or repeated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        r: Vec<String>,
        #[arg(long, value_enum, env = FORMAT_ENV, default_value = "pretty")]
        format: Format,
        /// Worker threads for grid evaluation; results are aggregated in grid order.
        #[arg(long)]
        jobs: Option<usize>,
        /// Leave the wall-time field out of the JSON report.
        #[arg(long)]
        canonical: bool,
        /// Maximum number of failures kept per suite.
        #[arg(long, default_value_t = DEFAULT_FAILURE_CAP)]
        failure_cap: usize,
        /// Add one to entry (n, j) of every order-N matrix: `N,n,j`.
        #[arg(long, hide = true)]
        corrupt: Option<String>,
    },
    /// Print a zeon operator on the Boolean lattice of {1..n}.
    Zeon {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=12))]
        n: u32,
        /// One of T, Tstar, U, raise:i, lower:i.
        #[arg(long)]
        op: String,
        #[arg(long, value_enum, env = FORMAT_ENV, default_value = "pretty")]
        format: Format,
    },
    /// Compute algebra statistics and compare them with the closed forms.
    Algebra {
        #[arg(long)]
        n: u32,
        /// U, T (generated by T and T*) or TT (generated by TT* and T*T).
        #[arg(long)]
        family: String,
        /// Exit with status 1 when a statistic disagrees unexpectedly.
        #[arg(long)]
        check: bool,
        /// Raise the size limit from 5 to 6.
        #[arg(long)]
        allow_large: bool,
        #[arg(long, value_enum, env = FORMAT_ENV, default_value = "pretty")]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Violation,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Matrix { n, r, format } => cmd_matrix(n, &r, format),
        Command::Verify {
            suite,
            max_n,
            r,
            format,
            jobs,
            canonical,
            failure_cap,
            corrupt,
        } => cmd_verify(VerifyArgs {
            suite,
            max_n,
            r,
            format,
            jobs,
            canonical,
            failure_cap,
            corrupt,
        }),
        Command::Zeon { n, op, format } => cmd_zeon(n, &op, format),
        Command::Algebra {
            n,
            family,
            check,
            allow_large,
            format,
        } => cmd_algebra(n, &family, check, allow_large, format),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violation) => ExitCode::from(1),
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

fn ratio(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

fn cmd_matrix(n: usize, r: &str, format: Format) -> Result<(), Failure> {
    let r = parse_rational(r)?;
    let phi = KrawtchoukMatrix::build(n, &r);
    let cells: Vec<Vec<String>> = phi
        .rows()
        .iter()
        .map(|row| row.iter().map(format_rational).collect())
        .collect();
    let out = match format {
        Format::Csv => {
            let mut out = format!("# krawtchouk N={n} r={}\n", ratio(&r));
            for row in &cells {
                out.push_str(&row.join(","));
                out.push('\n');
            }
            out
        }
        Format::Pretty => {
            let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
            let mut out = format!("Krawtchouk matrix N={n} r={}\n", format_rational(&r));
            for row in &cells {
                let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
                out.push_str(&line.join("  "));
                out.push('\n');
            }
            out
        }
        Format::Json => {
            #[derive(Serialize)]
            struct MatrixExport<'a> {
                schema: u32,
                order: usize,
                r: String,
                entries: &'a [Vec<String>],
            }
            let export = MatrixExport {
                schema: SCHEMA,
                order: n,
                r: ratio(&r),
                entries: &cells,
            };
            to_json(&export) + "\n"
        }
    };
    print!("{out}");
    Ok(())
}

struct VerifyArgs {
    suite: String,
    max_n: usize,
    r: Vec<String>,
    format: Format,
    jobs: Option<usize>,
    canonical: bool,
    failure_cap: usize,
    corrupt: Option<String>,
}

#[derive(Serialize)]
struct Invocation {
    suite: String,
    max_n: usize,
    r_values: Vec<String>,
    jobs: usize,
}

#[derive(Serialize)]
struct RunReport {
    schema: u32,
    tool: &'static str,
    version: &'static str,
    invocation: Invocation,
    suites: Vec<IdentityReport>,
    total_cases: u64,
    total_failures: u64,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_time_ms: Option<u128>,
}

fn parse_fault(text: &str) -> Result<Fault, Failure> {
    let parts: Vec<usize> = text
        .split(',')
        .map(|p| p.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| Failure::Usage(format!("bad fault spec {text:?}")))?;
    match parts[..] {
        [order, row, col] => Ok(Fault { order, row, col }),
        _ => Err(Failure::Usage(format!(
            "bad fault spec {text:?}, expected N,n,j"
        ))),
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<(), Failure> {
    let suites = Suite::select(&args.suite).map_err(|_| {
        let names: Vec<&str> = Suite::ALL.iter().map(Suite::name).collect();
        Failure::Usage(format!(
            "unknown suite {:?}; expected all or one of {}",
            args.suite,
            names.join(", ")
        ))
    })?;
    if args.jobs == Some(0) {
        return Err(Failure::Usage("--jobs must be at least 1".into()));
    }
    let r_values = if args.r.is_empty() {
        default_r_values()
    } else {
        args.r
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()?
    };
    let mut config = SweepConfig::new(args.max_n);
    config.r_values = r_values;
    config.failure_cap = args.failure_cap;
    config.jobs = args.jobs;
    config.fault = args.corrupt.as_deref().map(parse_fault).transpose()?;

    let start = Instant::now();
    let reports = run_suites(&suites, &config);
    let elapsed = start.elapsed().as_millis();

    let total_cases = reports.iter().map(|r| r.cases).sum();
    let total_failures: u64 = reports.iter().map(|r| r.failure_count).sum();
    let passed = total_failures == 0;
    let report = RunReport {
        schema: SCHEMA,
        tool: "krawtchouk",
        version: env!("CARGO_PKG_VERSION"),
        invocation: Invocation {
            suite: args.suite,
            max_n: args.max_n,
            r_values: config.r_values.iter().map(ratio).collect(),
            jobs: args.jobs.unwrap_or(1),
        },
        suites: reports,
        total_cases,
        total_failures,
        passed,
        wall_time_ms: (!args.canonical).then_some(elapsed),
    };

    let out = match args.format {
        Format::Json => to_json(&report) + "\n",
        Format::Csv => {
            let mut out = String::from("suite,cases,failures\n");
            for s in &report.suites {
                writeln!(out, "{},{},{}", s.suite, s.cases, s.failure_count).unwrap();
            }
            out
        }
        Format::Pretty => {
            let mut out = String::new();
            for s in &report.suites {
                let status = if s.passed() { "ok" } else { "FAIL" };
                writeln!(
                    out,
                    "{:<13} {:>9} cases {:>6} failures  {status}",
                    s.suite, s.cases, s.failure_count
                )
                .unwrap();
                for f in &s.failures {
                    writeln!(out, "    {}: {} != {}", f.case, f.lhs, f.rhs).unwrap();
                }
            }
            writeln!(out, "total: {total_cases} cases, {total_failures} failures").unwrap();
            out
        }
    };
    print!("{out}");
    if args.format != Format::Json || args.canonical {
        eprintln!("wall time: {elapsed} ms");
    }
    if passed {
        Ok(())
    } else {
        Err(Failure::Violation)
    }
}

fn cmd_zeon(n: u32, op: &str, format: Format) -> Result<(), Failure> {
    let kind = OperatorKind::parse(op).map_err(|_| {
        Failure::Usage(format!(
            "unknown operator {op:?}; expected T, Tstar, U, raise:i or lower:i"
        ))
    })?;
    let matrix = kind.build(n)?;
    let name = kind.name();
    match format {
        Format::Json => println!("{}", to_json(&matrix.to_json(&name))),
        Format::Pretty | Format::Csv => {
            print!("{}", matrix.to_coordinate_text(&name));
            if kind == OperatorKind::U {
                let diagonal: Vec<String> =
                    matrix.diagonal().iter().map(ToString::to_string).collect();
                println!("# diagonal {}", diagonal.join(" "));
            }
        }
    }
    Ok(())
}

const STATS: [&str; 4] = ["d", "delta", "zeta", "z"];

fn stat_rows(report: &FamilyReport) -> [(&'static str, String, String, bool); 4] {
    let (c, p, m) = (&report.computed, &report.predicted, report.matches);
    [
        (STATS[0], c.degree.to_string(), p.degree.to_string(), m.d),
        (
            STATS[1],
            c.dimension.to_string(),
            p.dimension.to_string(),
            m.delta,
        ),
        (
            STATS[2],
            c.centralizer.to_string(),
            p.centralizer.to_string(),
            m.zeta,
        ),
        (STATS[3], c.center.to_string(), p.center.to_string(), m.z),
    ]
}

fn discrepancy_note(report: &FamilyReport) -> String {
    format!(
        "NOTE: paper-stated z differs: stated z = {}, computed z = {}, component count = {}",
        report.predicted.center, report.computed.center, report.component_count
    )
}

fn cmd_algebra(
    n: u32,
    family: &str,
    check: bool,
    allow_large: bool,
    format: Format,
) -> Result<(), Failure> {
    let kind = FamilyKind::parse(family)
        .map_err(|_| Failure::Usage(format!("unknown family {family:?}; expected U, T or TT")))?;
    let family = AlgebraFamily::new(kind, n)?;
    let budget = if allow_large {
        ComputeBudget::allow_large()
    } else {
        ComputeBudget::default()
    };
    if n > ComputeBudget::DEFAULT_MAX_N && n <= budget.max_n {
        eprintln!("warning: n = {n} is above the default limit; this may take a while");
    }
    let report = analyze_family(family, budget).map_err(|e| match e {
        Error::BudgetExceeded { .. } if !allow_large => Failure::Usage(format!(
            "{e}; pass --allow-large to permit n = {}",
            ComputeBudget::LARGE_MAX_N
        )),
        other => Failure::from(other),
    })?;
    let discrepancy = report.has_known_center_discrepancy();

    let out = match format {
        Format::Json => {
            #[derive(Serialize)]
            struct AlgebraExport<'a> {
                schema: u32,
                #[serde(flatten)]
                report: &'a FamilyReport,
                z_discrepancy: bool,
            }
            to_json(&AlgebraExport {
                schema: SCHEMA,
                report: &report,
                z_discrepancy: discrepancy,
            }) + "\n"
        }
        Format::Csv => {
            let mut out = String::from("stat,computed,predicted,match\n");
            for (name, c, p, m) in stat_rows(&report) {
                writeln!(out, "{name},{c},{p},{m}").unwrap();
            }
            out
        }
        Format::Pretty => {
            let mut out = format!("family {} n={}\n", kind.label(), n);
            writeln!(
                out,
                "{:<6} {:>12} {:>12}  match",
                "stat", "computed", "predicted"
            )
            .unwrap();
            for (name, c, p, m) in stat_rows(&report) {
                writeln!(
                    out,
                    "{name:<6} {c:>12} {p:>12}  {}",
                    if m { "yes" } else { "no" }
                )
                .unwrap();
            }
            let components: Vec<String> = report
                .components
                .components
                .iter()
                .map(|c| format!("{}x{}", c.multiplicity, c.degree))
                .collect();
            writeln!(
                out,
                "components (multiplicity x degree): {}",
                components.join(" ")
            )
            .unwrap();
            if discrepancy {
                writeln!(out, "{}", discrepancy_note(&report)).unwrap();
            }
            out
        }
    };
    print!("{out}");
    if discrepancy && format != Format::Pretty {
        eprintln!("{}", discrepancy_note(&report));
    }
    if check && report.unexpected_mismatch() {
        eprintln!("algebra statistics disagree with the closed forms");
        return Err(Failure::Violation);
    }
    Ok(())
}
