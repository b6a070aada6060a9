//! `hookpaths` command-line front end.
//!
//! Exit codes: 0 pass, 1 violation, 2 usage or configuration error.

use std::collections::BTreeSet;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hookpaths::sweep::{run_sweep, ExploreConfig, Property, SweepConfig, SweepReport};
use hookpaths::{gram, lgv, path_count_array, Partition, VerificationReport};
use serde::Serialize;

mod render;

const EXIT_PASS: u8 = 0;
const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "hookpaths",
    version,
    about = "Lattice-path arrays of Young diagrams"
)]
struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the path-count array of a partition such as "5,4,3,3".
    Array { partition: String },
    /// Certify unit-corner determinants and the basis identities.
    Check { partition: String },
    /// Print the integral orthonormal basis y_1..y_n.
    Basis { partition: String },
    /// Sweep every partition up to a size bound.
    Verify(VerifyArgs),
}

#[derive(Debug, clap::Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 10)]
    max_cells: usize,

    /// Comma-separated subset of: array-oracle, dets, lgv-oracle,
    /// identities, closed-forms, duality, truncation.
    #[arg(long, value_delimiter = ',', default_value = "dets,identities")]
    properties: Vec<String>,

    #[arg(long, default_value_t = hookpaths::patharray::DEFAULT_PATH_LIMIT)]
    path_budget: usize,

    #[arg(long, default_value_t = lgv::DEFAULT_SYSTEM_BUDGET)]
    system_budget: u64,

    /// Largest block order compared by the LGV oracle.
    #[arg(long, default_value_t = 3)]
    lgv_max_order: usize,

    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    workers: Option<usize>,

    /// Treat inconclusive (budget-exhausted) checks as violations.
    #[arg(long)]
    strict: bool,

    /// Also scan non-contiguous unit-corner selections up to this order.
    /// Findings are reported, never counted as violations.
    #[arg(long)]
    explore_order: Option<usize>,

    /// Sample this many selections per partition instead of scanning all.
    #[arg(long, requires = "explore_order")]
    samples: Option<usize>,

    #[arg(long, default_value_t = 0, requires = "samples")]
    seed: u64,
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn parse_partition(text: &str) -> Result<Partition, ExitCode> {
    text.parse::<Partition>()
        .map_err(|e| usage_error(format!("invalid partition {text:?}: {e}")))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            });
        }
    };
    let result = match cli.command {
        Command::Array { partition } => cmd_array(&partition, cli.format),
        Command::Check { partition } => cmd_check(&partition, cli.format),
        Command::Basis { partition } => cmd_basis(&partition, cli.format),
        Command::Verify(args) => cmd_verify(args, cli.format),
    };
    result.unwrap_or_else(|code| code)
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("reports serialize")
    );
}

fn cmd_array(text: &str, format: Format) -> Result<ExitCode, ExitCode> {
    let shape = parse_partition(text)?;
    let d = path_count_array(&shape);
    match format {
        Format::Text => print!("{d}"),
        Format::Json => print_json(&d),
        Format::Csv => print!("{}", render::array_csv(&d)),
    }
    Ok(ExitCode::from(EXIT_PASS))
}

#[derive(Serialize)]
struct CheckOutput {
    partition: Partition,
    determinant_one: VerificationReport,
    identities: VerificationReport,
    pass: bool,
}

fn cmd_check(text: &str, format: Format) -> Result<ExitCode, ExitCode> {
    let shape = parse_partition(text)?;
    let determinant_one = lgv::check_determinant_one(&shape);
    let identities = gram::verify_identities(&shape);
    let pass = determinant_one.pass && identities.pass;
    let out = CheckOutput {
        partition: shape,
        determinant_one,
        identities,
        pass,
    };
    match format {
        Format::Text => print!(
            "{}",
            render::check_text(&out.determinant_one, &out.identities)
        ),
        Format::Json => print_json(&out),
        Format::Csv => print!(
            "{}",
            render::check_csv(&out.determinant_one, &out.identities)
        ),
    }
    for report in [&out.determinant_one, &out.identities] {
        for failed in report.failures() {
            eprintln!("violation: {}", render::describe(failed));
        }
    }
    Ok(ExitCode::from(if pass {
        EXIT_PASS
    } else {
        EXIT_VIOLATION
    }))
}

#[derive(Serialize)]
struct BasisOutput {
    partition: Partition,
    durfee: usize,
    basis: Vec<gram::BasisExpansion>,
}

fn cmd_basis(text: &str, format: Format) -> Result<ExitCode, ExitCode> {
    let shape = parse_partition(text)?;
    if shape.is_empty() {
        return Err(usage_error(
            "the basis of the empty partition is empty; give a nonempty partition",
        ));
    }
    let basis = gram::basis(&shape);
    match format {
        Format::Text => {
            for y in &basis {
                println!("{y}");
            }
        }
        Format::Json => print_json(&BasisOutput {
            partition: shape.clone(),
            durfee: shape.durfee(),
            basis,
        }),
        Format::Csv => print!("{}", render::basis_csv(&basis)),
    }
    Ok(ExitCode::from(EXIT_PASS))
}

fn sweep_config(args: &VerifyArgs) -> Result<SweepConfig, String> {
    let properties = args
        .properties
        .iter()
        .map(|s| s.trim().parse::<Property>())
        .collect::<Result<BTreeSet<_>, _>>()?;
    if args.workers == Some(0) {
        return Err("--workers must be positive".into());
    }
    let config = SweepConfig {
        max_cells: args.max_cells,
        properties,
        path_budget: args.path_budget,
        system_budget: args.system_budget,
        lgv_max_order: args.lgv_max_order,
        workers: args.workers,
        explore: args.explore_order.map(|max_order| ExploreConfig {
            max_order,
            sampling: args.samples.map(|n| (n, args.seed)),
        }),
    };
    config.validate()?;
    Ok(config)
}

fn cmd_verify(args: VerifyArgs, format: Format) -> Result<ExitCode, ExitCode> {
    let config = sweep_config(&args).map_err(usage_error)?;
    let report: SweepReport = run_sweep(&config).map_err(usage_error)?;
    match format {
        Format::Text => print!("{}", render::sweep_text(&report)),
        Format::Json => print_json(&report),
        Format::Csv => print!("{}", render::sweep_csv(&report)),
    }
    for result in &report.results {
        let name = result.property.map_or("?", Property::name);
        for failure in &result.failures {
            eprintln!("violation [{name}]: {failure}");
        }
        for note in &result.inconclusive {
            eprintln!("inconclusive [{name}]: {note}");
        }
    }
    let failed = !report.pass || (args.strict && report.inconclusive() > 0);
    Ok(ExitCode::from(if failed {
        EXIT_VIOLATION
    } else {
        EXIT_PASS
    }))
}
