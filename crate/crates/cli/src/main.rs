use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use zeroset_graph::export::{compute_invariants, invariants_markdown, to_dot, GraphDescriptor};
use zeroset_graph::graph::{distance, shortest_path, smallest_cycle_through_pair, DEFAULT_MAX_DOMINATION};
use zeroset_graph::verify::{render_markdown, run_all, Sweep, DEFAULT_SEED};
use zeroset_graph::{build_gamma, build_line_graph, Error, Graph, ModelConfig, ZeroSetModel};

const MAX_N: usize = 6;
const MAX_M: usize = 6;

#[derive(Parser)]
#[command(name = "zsg", version, about = "Zero-set intersection graphs of finite discrete spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the model graph (or its line graph) and export it.
    Build(BuildArgs),
    /// Build the line graph of the model and export it.
    Linegraph(BuildArgs),
    /// Compute diameter, radius, girth, chordality, domination number and
    /// complementedness.
    Invariants(InvariantArgs),
    /// Run the verification sweep.
    Verify(VerifyArgs),
    /// Distance and a shortest path between two labelled vertices.
    Dist(PairArgs),
    /// Length of a smallest cycle through two labelled vertices.
    CycleThrough(PairArgs),
}

#[derive(Args, Clone, Copy)]
struct ModelArgs {
    /// Number of points of the space.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(1..=MAX_N as i64))]
    n: u8,
    /// Copies per zero-set class.
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u8).range(1..=MAX_M as i64))]
    m: u8,
    /// Include the zero function as a vertex.
    #[arg(long)]
    include_zero: bool,
    /// Work on the line graph.
    #[arg(long)]
    line: bool,
}

impl ModelArgs {
    fn config(&self) -> ModelConfig {
        ModelConfig::new(self.n.into(), self.m.into(), self.include_zero)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Json,
    Md,
}

#[derive(Args)]
struct BuildArgs {
    #[command(flatten)]
    model: ModelArgs,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct InvariantArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Read the graph from a JSON descriptor instead of building it.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Largest dominating set size searched.
    #[arg(long, default_value_t = DEFAULT_MAX_DOMINATION)]
    max_k: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Include the zero function as a vertex.
    #[arg(long)]
    include_zero: bool,
    /// Single point count, when no range is given.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=MAX_N as i64))]
    n: Option<u8>,
    /// Single multiplicity, when no range is given.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=MAX_M as i64))]
    m: Option<u8>,
    /// Inclusive range of point counts: `a..b`, `a..=b` or `a`.
    #[arg(long)]
    n_range: Option<String>,
    /// Inclusive range of multiplicities.
    #[arg(long)]
    m_range: Option<String>,
    /// Comma-separated check ids; all checks when omitted.
    #[arg(long, value_delimiter = ',')]
    theorems: Option<Vec<String>>,
    /// Seed of the random oracle corpus.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PairArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Label of the first vertex, e.g. `0,1:2` or `[0:1|0,1:1]`.
    #[arg(long)]
    from: String,
    #[arg(long)]
    to: String,
}

/// Inclusive integer range; `a..b` and `a..=b` both include `b`.
fn parse_range(s: &str, max: usize) -> Result<Vec<usize>> {
    let bad = || Error::Parse { what: "range", input: s.to_string() };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (s, s),
    };
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo == 0 || lo > hi || hi > max {
        return Err(bad().into());
    }
    Ok((lo..=hi).collect())
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn model_graph(args: &ModelArgs) -> Result<(ZeroSetModel, Graph)> {
    let model = build_gamma(&args.config())?;
    let g = if args.line { build_line_graph(model.graph()).graph().clone() } else { model.graph().clone() };
    Ok((model, g))
}

fn cmd_build(args: &BuildArgs, force_line: bool) -> Result<()> {
    let mut margs = args.model;
    margs.line |= force_line;
    let model = build_gamma(&margs.config())?;
    let text = match (args.format, margs.line) {
        (Format::Md, _) => bail!("build exports dot or json"),
        (Format::Dot, false) => to_dot(model.graph(), "gamma"),
        (Format::Dot, true) => to_dot(build_line_graph(model.graph()).graph(), "line"),
        (Format::Json, false) => GraphDescriptor::of_model(&model).to_json()? + "\n",
        (Format::Json, true) => GraphDescriptor::of_line(&model, &build_line_graph(model.graph())).to_json()? + "\n",
    };
    emit(&text, &args.out)
}

fn cmd_invariants(args: &InvariantArgs) -> Result<()> {
    let (title, g) = match &args.input {
        Some(path) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            (path.display().to_string(), GraphDescriptor::from_json(&text)?.to_graph()?)
        }
        None => {
            let (_, g) = model_graph(&args.model)?;
            let kind = if args.model.line { "line graph" } else { "model" };
            (format!("{kind} {}", args.model.config()), g)
        }
    };
    let report = compute_invariants(&g, args.max_k)?;
    let text = match args.format {
        Format::Json => serde_json::to_string_pretty(&report)? + "\n",
        Format::Md => invariants_markdown(&title, &report),
        Format::Dot => bail!("invariants are reported as json or md"),
    };
    emit(&text, &args.out)
}

fn sweep_of(args: &VerifyArgs) -> Result<Sweep> {
    let explicit = args.n.is_some() || args.m.is_some() || args.n_range.is_some() || args.m_range.is_some();
    let mut sweep = Sweep::standard(args.include_zero);
    if explicit {
        let ns = match &args.n_range {
            Some(r) => parse_range(r, MAX_N)?,
            None => vec![args.n.map_or(3, usize::from)],
        };
        let ms = match &args.m_range {
            Some(r) => parse_range(r, MAX_M)?,
            None => vec![args.m.map_or(4, usize::from)],
        };
        let grid: Vec<ModelConfig> = ns
            .iter()
            .flat_map(|&n| ms.iter().map(move |&m| ModelConfig::new(n, m, args.include_zero)))
            .collect();
        sweep.gamma = grid.clone();
        sweep.line = grid;
    }
    sweep.theorems = args.theorems.clone();
    sweep.seed = args.seed;
    Ok(sweep)
}

fn cmd_verify(args: &VerifyArgs) -> Result<bool> {
    let report = run_all(&sweep_of(args)?)?;
    let text = match args.format {
        Format::Json => report.to_json()? + "\n",
        Format::Md => render_markdown(&report),
        Format::Dot => bail!("reports are written as json or md"),
    };
    emit(&text, &args.out)?;
    eprintln!(
        "{} checks: {} pass, {} fail, {} anomaly, {} hypothesis violation, {} skipped",
        report.summary.total,
        report.summary.pass,
        report.summary.fail,
        report.summary.anomaly,
        report.summary.hypothesis_violation,
        report.summary.skipped
    );
    Ok(!report.has_failures())
}

fn endpoints(args: &PairArgs) -> Result<(Graph, usize, usize)> {
    let (_, g) = model_graph(&args.model)?;
    let find = |l: &str| g.index_of(l.trim()).ok_or_else(|| Error::UnknownLabel(l.to_string()));
    let (u, v) = (find(&args.from)?, find(&args.to)?);
    Ok((g, u, v))
}

fn cmd_dist(args: &PairArgs) -> Result<()> {
    let (g, u, v) = endpoints(args)?;
    let d = distance(&g, u, v)?;
    let path = shortest_path(&g, u, v)?.map(|p| g.labels_of(&p.0));
    let out = serde_json::json!({ "from": g.label(u), "to": g.label(v), "distance": d, "path": path });
    println!("{}", serde_json::to_string_pretty(&out)?);
    Ok(())
}

fn cmd_cycle_through(args: &PairArgs) -> Result<()> {
    let (g, u, v) = endpoints(args)?;
    let (c, cycle) = smallest_cycle_through_pair(&g, u, v)?;
    let out = serde_json::json!({
        "from": g.label(u),
        "to": g.label(v),
        "length": c,
        "cycle": cycle.map(|c| g.labels_of(&c.0)),
    });
    println!("{}", serde_json::to_string_pretty(&out)?);
    Ok(())
}

fn run(cli: &Cli) -> Result<bool> {
    match &cli.command {
        Command::Build(a) => cmd_build(a, false).map(|_| true),
        Command::Linegraph(a) => cmd_build(a, true).map(|_| true),
        Command::Invariants(a) => cmd_invariants(a).map(|_| true),
        Command::Verify(a) => cmd_verify(a),
        Command::Dist(a) => cmd_dist(a).map(|_| true),
        Command::CycleThrough(a) => cmd_cycle_through(a).map(|_| true),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..5", 6).unwrap(), [2, 3, 4, 5]);
        assert_eq!(parse_range("2..=3", 6).unwrap(), [2, 3]);
        assert_eq!(parse_range("4", 6).unwrap(), [4]);
        for bad in ["5..2", "0..3", "2..9", "x", "2..", ""] {
            assert!(parse_range(bad, 6).is_err(), "{bad}");
        }
    }
}
