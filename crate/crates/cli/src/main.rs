mod analyze;
mod error;
mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use eigmatch_core::spectral::{find_star_set, is_star_set};
use eigmatch_core::{emit_edge_list, emit_graph6};
use eigmatch_harness::enumerate::{enumerate_caterpillars, enumerate_connected_graphs, enumerate_trees};
use eigmatch_harness::{run_suite, CheckId, ReportFormat, SuiteConfig};
use serde::Serialize;

use crate::error::CliError;
use crate::input::{parse_lambda, Source};

#[derive(Parser)]
#[command(name = "eigmatch", version, about = "Exact eigenvalue multiplicities, induced matchings and cyclomatic bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Spectrum, matchings, cyclomatic number, diameter and classifications.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        /// Exact eigenvalue: p/q or poly:c0,c1,...;interval:lo,hi.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the verification suite; exits 1 if any statement is violated.
    Verify(VerifyArgs),
    /// Emit a named graph, e.g. c3aaa:2, fig2, cycle:5, star:5, path:4.
    Construct {
        spec: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
    },
    /// The lexicographically first star set of an eigenvalue.
    Starset {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List one graph per isomorphism class in graph6.
    Enumerate {
        #[arg(long, value_enum, default_value_t = Family::Connected)]
        kind: Family,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args)]
#[group(multiple = false)]
struct InputArgs {
    #[arg(long)]
    graph6: Option<String>,
    /// File of graph6 lines (`-` for stdin).
    #[arg(long)]
    graph6_file: Option<PathBuf>,
    /// Edge-list file: `n m` then `m` lines `u v` (`-` for stdin).
    #[arg(long)]
    edge_list: Option<PathBuf>,
    /// Named constructor, e.g. c3aaa:2.
    #[arg(long)]
    construct: Option<String>,
}

impl InputArgs {
    /// With no flag, graph6 or an edge list is read from stdin.
    fn source(&self) -> Source {
        if let Some(s) = &self.graph6 {
            Source::Graph6(s.clone())
        } else if let Some(p) = &self.graph6_file {
            Source::Graph6File(p.clone())
        } else if let Some(p) = &self.edge_list {
            Source::EdgeList(p.clone())
        } else if let Some(c) = &self.construct {
            Source::Construct(c.clone())
        } else {
            Source::Stdin
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    /// Connected graphs up to this order.
    #[arg(long, default_value_t = 8)]
    max_n: usize,
    /// Order bound for the β′ ≥ 3 characterization (9 for the extended sweep).
    #[arg(long)]
    thm32_max_n: Option<usize>,
    #[arg(long, default_value_t = 12)]
    trees_max_n: usize,
    /// Random composite trials for the bridge identity.
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 0)]
    workers: usize,
    /// Comma-separated check ids; all when omitted.
    #[arg(long, value_delimiter = ',')]
    checks: Option<Vec<String>>,
    /// Read graphs from a graph6 file instead of enumerating.
    #[arg(long)]
    graph6_file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Json => ReportFormat::Json,
            Format::Csv => ReportFormat::Csv,
            Format::Text => ReportFormat::Text,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Graph6,
    EdgeList,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Connected,
    Trees,
    Caterpillars,
}

fn json<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value).map(|s| s + "\n").map_err(|e| CliError::Output(e.to_string()))
}

fn cmd_analyze(input: &InputArgs, lambda: Option<&str>, format: Format) -> Result<String, CliError> {
    let graphs = input.source().load()?;
    let lambda = lambda.map(parse_lambda).transpose()?;
    let reports: Vec<analyze::Analysis> = graphs.iter().map(|g| analyze::analyze(g, lambda.as_ref())).collect();
    match format {
        Format::Json if reports.len() == 1 => json(&reports[0]),
        Format::Json => json(&reports),
        Format::Text => Ok(reports.iter().map(analyze::to_text).collect::<Vec<_>>().join("\n")),
        Format::Csv => {
            let mut out = String::new();
            for (i, r) in reports.iter().enumerate() {
                let csv = analyze::to_csv(r).map_err(|e| CliError::Output(e.to_string()))?;
                // Keep a single header row.
                out += if i == 0 { &csv } else { csv.split_once('\n').map_or("", |(_, rest)| rest) };
            }
            Ok(out)
        }
    }
}

#[derive(Serialize)]
struct StarSetReport {
    lambda: eigmatch_core::AlgebraicNumber,
    multiplicity: usize,
    vertices: Vec<usize>,
    verified: bool,
}

fn cmd_starset(input: &InputArgs, lambda: &str, format: Format) -> Result<String, CliError> {
    let g = input.source().load_one()?;
    let lambda = parse_lambda(lambda)?;
    let star = find_star_set(&g, &lambda)?;
    let report = StarSetReport {
        multiplicity: star.vertices.len(),
        vertices: star.vertices.to_vec(),
        verified: is_star_set(&g, &lambda, star.vertices),
        lambda,
    };
    let list = report.vertices.iter().map(ToString::to_string).collect::<Vec<_>>();
    Ok(match format {
        Format::Json => json(&report)?,
        Format::Csv => format!("eigenvalue,multiplicity,vertices,verified\n{},{},{},{}\n", report.lambda.to_exact_string(), report.multiplicity, list.join(" "), report.verified),
        Format::Text => format!(
            "lambda: {}\nmultiplicity: {}\nstar_set: {}\nverified: {}\n",
            report.lambda.to_exact_string(),
            report.multiplicity,
            list.join(" "),
            report.verified
        ),
    })
}

fn cmd_verify(args: &VerifyArgs) -> Result<(String, bool), CliError> {
    let checks = match &args.checks {
        Some(names) => Some(names.iter().map(|n| n.parse::<CheckId>()).collect::<Result<Vec<_>, _>>()?),
        None => None,
    };
    let config = SuiteConfig {
        connected_max_n: args.max_n,
        thm32_max_n: args.thm32_max_n.unwrap_or(args.max_n),
        trees_max_n: args.trees_max_n,
        lemma22_trials: args.trials,
        seed: args.seed,
        workers: args.workers,
        checks,
        graph6_file: args.graph6_file.clone(),
    };
    let report = run_suite(&config)?;
    let clean = report.is_clean();
    match &args.output {
        Some(path) => {
            if let Err(e) = report.write_to(path, args.format.into()) {
                // Salvage the report on stdout before failing.
                print!("{}", report.render(args.format.into())?);
                return Err(e.into());
            }
            let summary = format!("wrote {} ({} violations, {} notes)\n", path.display(), report.violations, report.notes);
            Ok((summary, clean))
        }
        None => Ok((report.render(args.format.into())?, clean)),
    }
}

fn cmd_enumerate(kind: Family, n: usize) -> Result<String, CliError> {
    let graphs = match kind {
        Family::Connected => enumerate_connected_graphs(n)?,
        Family::Trees => enumerate_trees(n)?,
        Family::Caterpillars => enumerate_caterpillars(n)?,
    };
    let mut out = String::new();
    for g in graphs {
        out += &emit_graph6(&g)?;
        out.push('\n');
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<(String, bool), CliError> {
    match cli.command {
        Command::Analyze { input, lambda, format } => Ok((cmd_analyze(&input, lambda.as_deref(), format)?, true)),
        Command::Verify(args) => cmd_verify(&args),
        Command::Construct { spec, format } => {
            let g = input::construct(&spec)?;
            let text = match format {
                GraphFormat::Graph6 => emit_graph6(&g)? + "\n",
                GraphFormat::EdgeList => emit_edge_list(&g),
            };
            Ok((text, true))
        }
        Command::Starset { input, lambda, format } => Ok((cmd_starset(&input, &lambda, format)?, true)),
        Command::Enumerate { kind, n } => Ok((cmd_enumerate(kind, n)?, true)),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((text, ok)) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
                return ExitCode::from(4);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
