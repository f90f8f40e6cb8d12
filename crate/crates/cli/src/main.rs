mod analyze;
mod error;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use reeslin::graphs::{minimal_vertex_covers, parse_dsl, DslContext};
use reeslin::monomials::{minimalize, power};
use reeslin::resolutions::{
    betti_table, has_linear_resolution, is_componentwise_linear, BettiTableJson, ComponentwiseReport,
};
use reeslin::{
    cover_ideal, rees_presentation, x_condition, BettiConfig, GbConfig, Graph, GraphJson, MonomialIdeal, Universe,
};

use analyze::{analyze, AnalyzeOptions};
use error::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "reeslin",
    version,
    about = "Cover ideals of graphs, their Rees algebras and the linearity of their powers"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Global {
    /// Also write the machine-readable result here (`-` for stdout).
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Largest generator count for the linear-quotients order search.
    #[arg(long, global = true, default_value_t = 24)]
    max_gens: usize,
    /// Largest S-pair degree the Buchberger loop may reach.
    #[arg(long, global = true, default_value_t = 40)]
    gb_degree_cap: u32,
    /// Seed for `random:n:p` graphs.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest generator count for Betti computations.
    #[arg(long, global = true, default_value_t = 18)]
    betti_max_gens: usize,
    /// Largest lcm lattice for Betti computations.
    #[arg(long, global = true, default_value_t = 4096)]
    max_lattice: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the minimal vertex covers.
    Covers { graph: String },
    /// Compute the Rees presentation and check the x-condition.
    Rees {
        graph: String,
        /// Print the reduced Gröbner basis of the presentation ideal.
        #[arg(long)]
        dump_basis: bool,
    },
    /// Run the whole pipeline on powers 1..=K of the cover ideal.
    Analyze {
        graph: String,
        #[arg(long, default_value_t = 2, value_name = "K")]
        max_power: u32,
        /// Also compute Betti tables (linear resolution, componentwise linearity).
        #[arg(long)]
        betti: bool,
    },
    /// Build a graph from an expression and emit it as JSON.
    Construct {
        expr: String,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Betti table of a power of a cover ideal, or of an ideal from a file.
    Betti {
        #[arg(required_unless_present = "ideal", conflicts_with = "ideal")]
        graph: Option<String>,
        #[arg(long, default_value_t = 1)]
        power: u32,
        /// `{"variables": [...], "generators": [...]}`
        #[arg(long, value_name = "PATH")]
        ideal: Option<PathBuf>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct IdealJson {
    variables: Vec<String>,
    generators: Vec<String>,
}

#[derive(Debug, Serialize)]
struct CoversJson {
    covers: Vec<Vec<String>>,
    cover_ideal: Vec<String>,
}

#[derive(Debug, Serialize)]
struct BettiJson {
    generators: Vec<String>,
    table: BettiTableJson,
    linear_resolution: bool,
    componentwise: ComponentwiseReport,
}

fn load_graph(source: &str, seed: u64) -> Result<Graph, CliError> {
    let ctx = DslContext {
        seed,
        base_dir: std::env::current_dir().ok(),
    };
    Ok(parse_dsl(source, &ctx)?)
}

fn load_ideal(path: &Path) -> Result<MonomialIdeal, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let raw: IdealJson =
        serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let universe = Arc::new(Universe::base(raw.variables));
    let gens = raw
        .generators
        .iter()
        .map(|g| universe.parse(g))
        .collect::<Result<Vec<_>, _>>()?;
    if gens.is_empty() {
        return Err(CliError::Input(format!("{}: no generators", path.display())));
    }
    Ok(minimalize(universe, gens)?)
}

fn emit_json<T: Serialize>(target: Option<&Path>, value: &T) -> Result<(), CliError> {
    let Some(path) = target else { return Ok(()) };
    let text = serde_json::to_string_pretty(value)? + "\n";
    if path == Path::new("-") {
        print!("{text}");
    } else {
        fs::write(path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    let g = &cli.global;
    let json = g.json.as_deref();
    let gb = GbConfig {
        degree_cap: g.gb_degree_cap,
        ..GbConfig::default()
    };
    let betti_config = BettiConfig {
        max_gens: g.betti_max_gens,
        max_lattice: g.max_lattice,
    };
    match cli.command {
        Command::Covers { graph } => {
            let graph = load_graph(&graph, g.seed)?;
            let covers: Vec<Vec<String>> = minimal_vertex_covers(&graph).iter().map(|c| c.labels(&graph)).collect();
            for c in &covers {
                println!("{{{}}}", c.join(","));
            }
            emit_json(
                json,
                &CoversJson {
                    covers,
                    cover_ideal: cover_ideal(&graph).format(),
                },
            )
        }
        Command::Rees { graph, dump_basis } => {
            let graph = load_graph(&graph, g.seed)?;
            let p = rees_presentation(&cover_ideal(&graph), gb)?;
            let report = x_condition(&p).to_json(&p);
            if dump_basis {
                print!("{}", p.basis().dump());
            } else {
                println!("x-condition: {}", report.x_condition);
                println!("quadratic: {}", report.quadratic);
                println!("in(J): {}", report.in_j_generators.join(", "));
                if !report.offenders.is_empty() {
                    println!("offenders: {}", report.offenders.join(", "));
                }
            }
            emit_json(json, &report)
        }
        Command::Analyze {
            graph,
            max_power,
            betti,
        } => {
            let graph = load_graph(&graph, g.seed)?;
            let opts = AnalyzeOptions {
                max_power,
                betti,
                max_gens: g.max_gens,
                gb,
                betti_config,
            };
            let report = analyze(&graph, opts)?;
            print!("{}", report.to_text());
            emit_json(json, &report)?;
            match report.failed_predictions().as_slice() {
                [] => Ok(()),
                failed => Err(CliError::Predicted(
                    failed
                        .iter()
                        .map(|p| format!("k={}: {} (hypothesis: {})", p.k, p.property, p.hypothesis))
                        .collect::<Vec<_>>()
                        .join("; "),
                )),
            }
        }
        Command::Construct { expr, out } => {
            let graph = load_graph(&expr, g.seed)?;
            let text = GraphJson::to_string_pretty(&graph) + "\n";
            match out {
                Some(path) => {
                    fs::write(&path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?
                }
                None => print!("{text}"),
            }
            Ok(())
        }
        Command::Betti { graph, power: k, ideal } => {
            let base = match (graph, ideal) {
                (_, Some(path)) => load_ideal(&path)?,
                (Some(graph), None) => cover_ideal(&load_graph(&graph, g.seed)?),
                (None, None) => unreachable!("clap requires a graph or --ideal"),
            };
            if k == 0 {
                return Err(CliError::Input("--power must be at least 1".into()));
            }
            let target = power(&base, k)?;
            let table = betti_table(&target, betti_config)?;
            print!("{}", table.to_text());
            let report = BettiJson {
                generators: target.format(),
                table: table.to_json(),
                linear_resolution: has_linear_resolution(&target, betti_config)?,
                componentwise: is_componentwise_linear(&target, betti_config)?,
            };
            emit_json(json, &report)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::try_parse().unwrap_or_else(|e| {
        let code = if e.use_stderr() { 2 } else { 0 };
        let _ = e.print();
        std::process::exit(code);
    });
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("reeslin: {e}");
            e.exit_code()
        }
    }
}
