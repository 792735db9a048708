use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use inplace_graph::applications::{st_reachability, Reachability};
use inplace_graph::generate::{family, generate, symmetrize, Family, GenParams};
use inplace_graph::model::{load_graph, GraphData, Vertex};
use inplace_graph::run::{
    check_mst, check_subset, run_mst, run_subset, traverse, traverse_checked, Algo, ModelKind, Problem,
    RunConfig, Space,
};
use inplace_graph::{Error, Result};

/// Graph search, MST and subset search with the graph itself as workspace.
#[derive(Parser)]
#[command(name = "inplace-graph", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a DFS or BFS and print the visit order.
    Traverse(TraverseArgs),
    /// Minimum spanning tree of the source's component.
    Mst(MstArgs),
    /// Exhaustive minimum vertex cover or dominating set.
    Subset(SubsetArgs),
    /// Write a seeded random graph.
    Gen(GenArgs),
    /// Operation counts over doubling sizes of a graph family.
    Bench(BenchArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Graph file; `-` reads standard input. Without it a random connected
    /// graph is drawn from --seed and --n.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Vertex count of the generated graph when --input is absent.
    #[arg(long, default_value_t = 16)]
    n: usize,
    /// Run in directed mode; undirected input is replaced by its two-way arcs.
    #[arg(long)]
    directed: bool,
}

#[derive(Args)]
struct TraverseArgs {
    #[arg(long, value_enum)]
    algo: Algo,
    #[arg(long, value_enum, default_value_t = ModelKind::Rotate)]
    model: ModelKind,
    #[arg(long, value_enum)]
    space: Space,
    #[arg(long)]
    source: Vertex,
    /// Report whether this vertex is reached (and its distance, for BFS).
    #[arg(long)]
    target: Option<Vertex>,
    #[command(flatten)]
    input: InputArgs,
    /// Compare with the oracle; exit status 2 on mismatch.
    #[arg(long)]
    check: bool,
    /// Print a `STATS {json}` line.
    #[arg(long)]
    stats: bool,
}

#[derive(Args)]
struct MstArgs {
    #[arg(long, value_enum, default_value_t = ModelKind::Rotate)]
    model: ModelKind,
    #[arg(long, default_value_t = 1)]
    source: Vertex,
    #[command(flatten)]
    input: InputArgs,
    #[arg(long)]
    check: bool,
    #[arg(long)]
    stats: bool,
}

#[derive(Args)]
struct SubsetArgs {
    #[arg(long, value_enum)]
    problem: Problem,
    #[command(flatten)]
    input: InputArgs,
    #[arg(long)]
    check: bool,
    #[arg(long)]
    stats: bool,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    /// Edge probability; chosen from n and --min-degree when absent.
    #[arg(long)]
    p: Option<f64>,
    #[arg(long, default_value_t = 0)]
    min_degree: usize,
    /// Vertex 1 reaches every vertex.
    #[arg(long)]
    connected: bool,
    #[arg(long)]
    weighted: bool,
    /// Weights are a permutation of 1..=m.
    #[arg(long, requires = "weighted")]
    distinct_weights: bool,
    #[arg(long)]
    directed: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file; standard output when absent.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_enum)]
    algo: Algo,
    #[arg(long, value_enum, default_value_t = ModelKind::Rotate)]
    model: ModelKind,
    #[arg(long, value_enum)]
    space: Space,
    #[arg(long, default_value = "path")]
    family: Family,
    #[arg(long, value_delimiter = ',', default_value = "64,128,256")]
    sizes: Vec<usize>,
}

fn load(args: &InputArgs) -> Result<GraphData> {
    let g = match &args.input {
        None => generate(&GenParams {
            n: args.n,
            connected: true,
            seed: args.seed,
            ..Default::default()
        })?,
        Some(path) => {
            let mut text = String::new();
            let read = if path.as_os_str() == "-" {
                io::stdin().read_to_string(&mut text).map(|_| ())
            } else {
                std::fs::read_to_string(path).map(|t| text = t)
            };
            read.map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            load_graph(&text)?
        }
    };
    if args.directed && !g.is_directed() {
        symmetrize(&g)
    } else {
        Ok(g)
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn print_stats(out: &mut impl Write, value: &impl Serialize) -> io::Result<()> {
    writeln!(out, "STATS {}", serde_json::to_string(value).expect("serializable"))
}

fn verdict(out: &mut impl Write, ok: bool) -> io::Result<ExitCode> {
    writeln!(out, "CHECK {}", if ok { "ok" } else { "FAILED" })?;
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

fn cmd_traverse(a: &TraverseArgs, out: &mut impl Write) -> Result<ExitCode> {
    let g = load(&a.input)?;
    let cfg = RunConfig { algo: a.algo, model: a.model, space: a.space, source: a.source };
    let report = if a.check { traverse_checked(&g, &cfg)? } else { traverse(&g, &cfg)? };
    writeln!(out, "{}", join(&report.order))?;
    if let Some(levels) = &report.levels {
        writeln!(out, "LEVELS {}", join(levels))?;
    }
    if !report.complete {
        writeln!(out, "INCOMPLETE source does not reach every vertex")?;
    }
    if let Some(t) = a.target {
        let r: Reachability = st_reachability(&g, a.source, t, a.algo, a.model, a.space)?;
        let dist = r.distance.map_or("-".to_string(), |d| d.to_string());
        writeln!(out, "TARGET {t} reachable={} distance={dist}", r.reachable)?;
    }
    if a.stats {
        print_stats(out, &report)?;
    }
    match report.check {
        Some(ok) => Ok(verdict(out, ok)?),
        None => Ok(ExitCode::SUCCESS),
    }
}

fn cmd_mst(a: &MstArgs, out: &mut impl Write) -> Result<ExitCode> {
    let g = load(&a.input)?;
    let mut report = run_mst(&g, a.model, a.source)?;
    writeln!(out, "{}", join(report.edges.iter().map(|e| format!("{}-{}", e.u, e.v))))?;
    writeln!(out, "TOTAL {}", report.total)?;
    if a.check {
        report.check = Some(check_mst(&g, &report));
    }
    if a.stats {
        print_stats(out, &report)?;
    }
    match report.check {
        Some(ok) => Ok(verdict(out, ok)?),
        None => Ok(ExitCode::SUCCESS),
    }
}

fn cmd_subset(a: &SubsetArgs, out: &mut impl Write) -> Result<ExitCode> {
    let g = load(&a.input)?;
    let mut report = run_subset(&g, a.problem)?;
    match &report.result {
        Some(r) => {
            writeln!(out, "{}", join(&r.members))?;
            writeln!(out, "SIZE {}", r.size)?;
        }
        None => writeln!(out, "\nSIZE none")?,
    }
    if a.check {
        report.check = Some(check_subset(&g, &report)?);
    }
    if a.stats {
        print_stats(out, &report)?;
    }
    match report.check {
        Some(ok) => Ok(verdict(out, ok)?),
        None => Ok(ExitCode::SUCCESS),
    }
}

fn cmd_gen(a: &GenArgs, out: &mut impl Write) -> Result<ExitCode> {
    let g = generate(&GenParams {
        n: a.n,
        p: a.p,
        directed: a.directed,
        weighted: a.weighted,
        distinct_weights: a.distinct_weights,
        min_degree: a.min_degree,
        connected: a.connected,
        seed: a.seed,
        ..Default::default()
    })?;
    match &a.output {
        Some(path) => std::fs::write(path, g.to_text())
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?,
        None => out.write_all(g.to_text().as_bytes())?,
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_bench(a: &BenchArgs, out: &mut impl Write) -> Result<ExitCode> {
    writeln!(out, "{:>8} {:>12} {:>12} {:>14} {:>12} {:>8}", "n", "rotations", "swaps", "element_reads", "comparisons", "ratio")?;
    let mut prev: Option<u64> = None;
    for &n in &a.sizes {
        let g = family(a.family, n)?;
        let cfg = RunConfig { algo: a.algo, model: a.model, space: a.space, source: 1 };
        let s = traverse(&g, &cfg)?.stats;
        let ratio = prev.map_or("-".to_string(), |p| format!("{:.2}", s.element_reads as f64 / p.max(1) as f64));
        writeln!(
            out,
            "{n:>8} {:>12} {:>12} {:>14} {:>12} {ratio:>8}",
            s.rotations, s.swaps, s.element_reads, s.comparisons
        )?;
        prev = Some(s.element_reads);
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = match &cli.cmd {
        Cmd::Traverse(a) => cmd_traverse(a, &mut out),
        Cmd::Mst(a) => cmd_mst(a, &mut out),
        Cmd::Subset(a) => cmd_subset(a, &mut out),
        Cmd::Gen(a) => cmd_gen(a, &mut out),
        Cmd::Bench(a) => cmd_bench(a, &mut out),
    };
    let _ = out.flush();
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
