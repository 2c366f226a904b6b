//! `pebble`: command-line front end for the (k,l) pebble games.
//!
//! Exit status is 0 on success, 1 when a decision comes out negative and 2
//! on usage or input errors.

mod report;

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use pebble_core::analysis::{
    circuits, extract_max_sparse, henneberg_sequence, optimize_with, redundancy, WeightOrder,
};
use pebble_core::{
    canonical_tight, parse_graph, play_basic, play_component_with, serialize_graph, Classification,
    Detection, GameParams, MultiGraph, Oracle, PebbleError,
};

use report::{
    json, Circuits, Components, Decision, Henneberg, OracleComponents, RedundancyReport, Subgraph,
};

#[derive(Parser)]
#[command(
    name = "pebble",
    version,
    about = "Pebble games for (k,l)-sparse multigraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Params {
    /// Pebbles per vertex.
    #[arg(short, value_parser = clap::value_parser!(u32).range(1..))]
    k: u32,
    /// Sparsity offset, 0 <= l < 2k.
    #[arg(short)]
    l: u32,
}

impl Params {
    fn get(&self) -> anyhow::Result<GameParams> {
        Ok(GameParams::new(self.k, self.l)?)
    }
}

#[derive(Args)]
struct Input {
    /// Graph file, or `-` for standard input.
    #[arg(default_value = "-")]
    file: PathBuf,
}

impl Input {
    fn read(&self) -> anyhow::Result<MultiGraph> {
        let text = if self.file.as_os_str() == "-" {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .context("reading standard input")?;
            s
        } else {
            std::fs::read_to_string(&self.file)
                .with_context(|| format!("reading {}", self.file.display()))?
        };
        Ok(parse_graph(&text)?)
    }
}

#[derive(Args)]
struct Output {
    /// Machine-readable output.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct GameOptions {
    /// Component detection algorithm.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=2))]
    detect: u8,
    #[arg(long, value_enum, default_value_t = Engine::Component)]
    engine: Engine,
    /// Print the final directed graph in Graphviz format instead.
    #[arg(long, conflicts_with = "json")]
    dot: bool,
}

impl GameOptions {
    fn detection(&self) -> Detection {
        if self.detect == 1 {
            Detection::First
        } else {
            Detection::Second
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    Basic,
    Component,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a graph as well-, under-, over-constrained or other.
    Decide {
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        game: GameOptions,
        #[command(flatten)]
        out: Output,
        #[command(flatten)]
        input: Input,
    },
    /// Components, free vertices and free edges of the accepted subgraph.
    Components {
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        game: GameOptions,
        #[command(flatten)]
        out: Output,
        #[command(flatten)]
        input: Input,
    },
    /// A maximal sparse subgraph, in graph format.
    Extract {
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        game: GameOptions,
        #[command(flatten)]
        out: Output,
        #[command(flatten)]
        input: Input,
    },
    /// Maximum-weight sparse subgraph of a weighted graph, in graph format.
    Optimize {
        #[command(flatten)]
        params: Params,
        /// Minimise the weight instead.
        #[arg(long)]
        min: bool,
        #[command(flatten)]
        out: Output,
        #[command(flatten)]
        input: Input,
    },
    /// One circuit per dependent edge.
    Circuits {
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        out: Output,
        #[command(flatten)]
        input: Input,
    },
    /// Redundancy, bridges and redundant components.
    Redundancy {
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        out: Output,
        #[command(flatten)]
        input: Input,
    },
    /// Henneberg reduction of a tight graph down to a base case.
    Henneberg {
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        out: Output,
        #[command(flatten)]
        input: Input,
    },
    /// Write a tight graph on n vertices in graph format.
    Generate {
        #[command(flatten)]
        params: Params,
        #[arg(short)]
        n: usize,
    },
    /// Brute-force cross-checks on small graphs.
    Oracle {
        #[command(subcommand)]
        query: OracleQuery,
    },
}

#[derive(Subcommand)]
enum OracleQuery {
    Classify {
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        out: Output,
        #[command(flatten)]
        input: Input,
    },
    Components {
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        out: Output,
        #[command(flatten)]
        input: Input,
    },
}

/// What to print and how to exit.
struct Report {
    text: String,
    negative: bool,
}

impl Report {
    fn ok(text: String) -> Self {
        Self {
            text,
            negative: false,
        }
    }

    fn negative(text: String) -> Self {
        Self {
            text,
            negative: true,
        }
    }
}

fn render<T>(out: &Output, value: &T, text: impl FnOnce(&T) -> String) -> String
where
    T: serde::Serialize,
{
    if out.json {
        json(value)
    } else {
        text(value)
    }
}

fn decide(
    params: GameParams,
    game: &GameOptions,
    out: &Output,
    g: &MultiGraph,
) -> anyhow::Result<Report> {
    let result = match game.engine {
        Engine::Basic => play_basic(g, params)?,
        Engine::Component => play_component_with(g, params, game.detection())?.0,
    };
    let text = if game.dot {
        result.state.to_dot()
    } else {
        let d = Decision::new(result.classification, result.accepted(), result.rejected());
        render(out, &d, Decision::text)
    };
    Ok(
        if result.classification == Classification::WellConstrained {
            Report::ok(text)
        } else {
            Report::negative(text)
        },
    )
}

fn components(
    params: GameParams,
    game: &GameOptions,
    out: &Output,
    g: &MultiGraph,
) -> anyhow::Result<Report> {
    if game.engine == Engine::Basic {
        bail!("components need the component engine");
    }
    let (result, decomposition) = play_component_with(g, params, game.detection())?;
    if game.dot {
        return Ok(Report::ok(result.state.to_dot()));
    }
    let c = Components::new(result.classification, &decomposition);
    Ok(Report::ok(render(out, &c, Components::text)))
}

fn extract(
    params: GameParams,
    game: &GameOptions,
    out: &Output,
    g: &MultiGraph,
) -> anyhow::Result<Report> {
    let sub = match game.engine {
        Engine::Component if !game.dot => extract_max_sparse(g, params)?,
        Engine::Component => {
            let (result, _) = play_component_with(g, params, game.detection())?;
            return Ok(Report::ok(result.state.to_dot()));
        }
        Engine::Basic => {
            let result = play_basic(g, params)?;
            if game.dot {
                return Ok(Report::ok(result.state.to_dot()));
            }
            let mut edges = result.accepted().to_vec();
            edges.sort_by_key(|e| e.index);
            MultiGraph::from_edges(g.n(), edges)?
        }
    };
    Ok(Report::ok(subgraph_output(out, g, &sub)))
}

fn subgraph_output(out: &Output, g: &MultiGraph, sub: &MultiGraph) -> String {
    if out.json {
        json(&Subgraph::new(g, sub))
    } else {
        serialize_graph(sub)
    }
}

fn run(cli: Cli) -> anyhow::Result<Report> {
    match cli.command {
        Command::Decide {
            params,
            game,
            out,
            input,
        } => decide(params.get()?, &game, &out, &input.read()?),
        Command::Components {
            params,
            game,
            out,
            input,
        } => components(params.get()?, &game, &out, &input.read()?),
        Command::Extract {
            params,
            game,
            out,
            input,
        } => extract(params.get()?, &game, &out, &input.read()?),
        Command::Optimize {
            params,
            min,
            out,
            input,
        } => {
            let g = input.read()?;
            let order = if min {
                WeightOrder::Ascending
            } else {
                WeightOrder::Descending
            };
            let sub = optimize_with(&g, params.get()?, order)?;
            Ok(Report::ok(subgraph_output(&out, &g, &sub)))
        }
        Command::Circuits { params, out, input } => {
            let found = circuits(&input.read()?, params.get()?)?;
            Ok(Report::ok(render(
                &out,
                &Circuits::new(&found),
                Circuits::text,
            )))
        }
        Command::Redundancy { params, out, input } => {
            let r = redundancy(&input.read()?, params.get()?)?;
            Ok(Report::ok(render(
                &out,
                &RedundancyReport::new(&r),
                RedundancyReport::text,
            )))
        }
        Command::Henneberg { params, out, input } => {
            match henneberg_sequence(&input.read()?, params.get()?) {
                Ok(seq) => Ok(Report::ok(render(
                    &out,
                    &Henneberg::new(&seq),
                    Henneberg::text,
                ))),
                Err(PebbleError::NotTight) => Ok(Report::negative("graph is not tight\n".into())),
                Err(e) => Err(e.into()),
            }
        }
        Command::Generate { params, n } => match canonical_tight(params.get()?, n) {
            Ok(g) => Ok(Report::ok(serialize_graph(&g))),
            Err(e @ PebbleError::NoTightGraph { .. }) => Ok(Report::negative(format!("{e}\n"))),
            Err(e) => Err(e.into()),
        },
        Command::Oracle { query } => oracle(query),
    }
}

fn oracle(query: OracleQuery) -> anyhow::Result<Report> {
    match query {
        OracleQuery::Classify { params, out, input } => {
            let g = input.read()?;
            let oracle = Oracle::new(params.get()?);
            let class = oracle.classify(&g)?;
            let basis = oracle.greedy_basis(&g)?;
            let mut kept = vec![false; g.m()];
            basis.iter().for_each(|&i| kept[i] = true);
            let (acc, rej): (Vec<_>, Vec<_>) = g.edges().iter().partition(|e| kept[e.index]);
            let d = Decision::new(class, &acc, &rej);
            let text = render(&out, &d, Decision::text);
            Ok(if class == Classification::WellConstrained {
                Report::ok(text)
            } else {
                Report::negative(text)
            })
        }
        OracleQuery::Components { params, out, input } => {
            let g = input.read()?;
            match Oracle::new(params.get()?).components(&g) {
                Ok(components) => {
                    let c = OracleComponents { components };
                    Ok(Report::ok(render(&out, &c, OracleComponents::text)))
                }
                Err(PebbleError::NotSparse) => Ok(Report::negative("graph is not sparse\n".into())),
                Err(e) => Err(e.into()),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(report) => {
            let mut stdout = io::stdout().lock();
            if stdout
                .write_all(report.text.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(2);
            }
            ExitCode::from(if report.negative { 1 } else { 0 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
