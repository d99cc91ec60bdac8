use std::path::PathBuf;
use std::process::ExitCode;

use affcover_bounds::{bound_report_with, standard_certificates, ReportOptions};
use affcover_cli::{
    bounds_markdown, budget_from_env, draw, export, resolve_graph, table_kn_rho23, table_steiner, verify, CliError,
    DrawTarget, GraphSource,
};
use affcover_solvers::nine_lva_sweep;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "affcover", version, about = "Affine cover numbers of graph drawings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphArgs {
    /// Named family, e.g. complete:6, kpq:3,4, c3xp:5
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    graph6: Option<String>,
    /// Edge-list file: one `u v` pair per line, optionally a line holding `n`
    #[arg(long)]
    edges: Option<PathBuf>,
}

impl GraphArgs {
    fn source(&self) -> Result<GraphSource, CliError> {
        let given: Vec<GraphSource> = [
            self.family.clone().map(GraphSource::Family),
            self.graph6.clone().map(GraphSource::Graph6),
            self.edges.clone().map(GraphSource::Edges),
        ]
        .into_iter()
        .flatten()
        .collect();
        match <[GraphSource; 1]>::try_from(given) {
            Ok([s]) => Ok(s),
            Err(_) => Err(CliError::Usage("give exactly one of --family, --graph6, --edges".into())),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DrawFormat {
    Json,
    Svg2d,
    SvgIso3d,
    Obj,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Markdown,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Table {
    KnRho23,
    Steiner,
}

#[derive(Subcommand)]
enum Command {
    /// Build a drawing with a cover witness
    Draw {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum)]
        target: DrawTarget,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: DrawFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-verify a certificate file
    Verify { file: PathBuf },
    /// Lower and upper bounds on every cover parameter
    Bounds {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value = "markdown")]
        format: ReportFormat,
        /// Count values asserted without proof as lower bounds
        #[arg(long)]
        trust_asserted: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        budget_n: Option<usize>,
    },
    /// Print a reference table
    Table {
        #[arg(value_enum)]
        which: Table,
        #[arg(long)]
        budget_n: Option<usize>,
    },
    /// Render a certificate file
    Export {
        file: PathBuf,
        #[arg(long, value_enum)]
        format: DrawFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search all triangulations up to the given order for line-vertex arrangements of size 3
    Sweep {
        #[arg(long, default_value_t = 9)]
        max_n: usize,
        #[arg(long)]
        budget_n: Option<usize>,
    },
}

fn write_out(out: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => Ok(std::fs::write(p, text)?),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn render(c: &affcover_cli::Loaded, f: DrawFormat) -> Result<String, CliError> {
    match f {
        DrawFormat::Json => Ok(c.to_file().emit()),
        DrawFormat::Svg2d => export::svg2d(c),
        DrawFormat::SvgIso3d => export::svg_iso3d(c),
        DrawFormat::Obj => Ok(export::obj(c)),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Draw { graph, target, seed, format, out } => {
            let g = resolve_graph(&graph.source()?)?;
            let (file, result) = draw(&g, target, seed)?;
            let loaded = file.load()?;
            write_out(out.as_ref(), &render(&loaded, format)?)?;
            eprintln!(
                "{}: {} objects ({}), claimed bound {}",
                target.name(),
                loaded.witness.count(),
                loaded.witness.kind,
                result.claimed_bound
            );
        }
        Command::Verify { file } => {
            let report = verify(&std::fs::read_to_string(file)?)?;
            println!("{}", report.render());
        }
        Command::Bounds { graph, format, trust_asserted, seed, budget_n } => {
            let g = resolve_graph(&graph.source()?)?;
            let opts = ReportOptions {
                budget: budget_from_env(budget_n),
                trust_asserted,
                certificates: standard_certificates(&g, seed),
            };
            let r = bound_report_with(&g, &opts);
            match format {
                ReportFormat::Json => {
                    println!("{}", serde_json::to_string_pretty(&r).map_err(|e| CliError::Format(e.to_string()))?)
                }
                ReportFormat::Markdown => print!("{}", bounds_markdown(&g, &r)),
            }
        }
        Command::Table { which, budget_n } => match which {
            Table::KnRho23 => print!("{}", table_kn_rho23(&budget_from_env(budget_n))),
            Table::Steiner => print!("{}", table_steiner()),
        },
        Command::Export { file, format, out } => {
            let loaded = affcover_cli::CertificateFile::parse(&std::fs::read_to_string(file)?)?.load()?;
            write_out(out.as_ref(), &render(&loaded, format)?)?;
        }
        Command::Sweep { max_n, budget_n } => {
            println!("| n | triangulations | max lva | with lva = 3 |");
            println!("|---|---|---|---|");
            for r in nine_lva_sweep(max_n, &budget_from_env(budget_n)) {
                println!("| {} | {} | {} | {} |", r.n, r.triangulations, r.max_lva, r.with_lva3);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("affcover: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
