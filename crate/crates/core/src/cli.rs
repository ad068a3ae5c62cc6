//! Command-line front end. [`run`] parses arguments, executes one
//! subcommand and returns the process exit code.

use std::collections::BTreeSet;
use std::fs;
use std::io::Write;
use std::panic::{self, AssertUnwindSafe};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::benchmark::{generate_gn, generate_lfr_base, generate_mlfr, BenchmarkSpec, GroundTruth};
use crate::community::{clecc_method, clecc_plus, CommunityCondition, MethodOptions};
use crate::error::Error;
use crate::evaluation::{nmi, Unassigned};
use crate::evolution::{evolution_chains, ged, EvolutionEvent, GedParams, ImportanceSource};
use crate::graph::{load_dsn, load_msn, Dsn, Msn, MsnBuilder, NodeIx, Partition};
use crate::io::{format_assignments, format_edge_list, parse_assignments, parse_edge_list, parse_event_log, partition_from_assignments, write_atomic};
use crate::measures::{
    betweenness_all, cdc, clcc, clecc_with, closeness, degree_centrality, ecc, link_counts, mdc, multi_neighbourhood,
    social_position, CleccDenominator, Direction, MdcVersion, NeighbourhoodMode, SocialPositionParams,
};
use crate::paths::{shortest_paths_dap, shortest_paths_mda, WeightTransform};
use crate::prediction::{export_dataset, extract_sequences, prf, DatasetFormat};

pub const SEED_ENV: &str = "MLSNA_SEED";

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Internal(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Input(e.to_string())
    }
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Internal(_) => 2,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(name = "mlsna", version, about = "Multi-layered social network analysis")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Random seed; falls back to $MLSNA_SEED.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GraphInput {
    /// Edge list: source, target, layer, weight (tab separated).
    input: PathBuf,
    /// Add the reverse of every record.
    #[arg(long)]
    undirected: bool,
}

#[derive(Args, Debug)]
struct Output {
    /// Output file (default: stdout).
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Node or pair measures as CSV.
    Measure {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, value_enum)]
        metric: Metric,
        #[arg(long, default_value_t = 1)]
        alpha: usize,
        #[arg(long, value_enum, default_value_t = Mode::Any)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = Dir::Total)]
        direction: Dir,
        /// Restrict single-layer measures to this layer.
        #[arg(long)]
        layer: Option<String>,
        /// Normalize dc and cc.
        #[arg(long)]
        normalized: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Shortest multi-layered paths from one node.
    Paths {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        source: String,
        #[arg(long, default_value_t = 1)]
        alpha: usize,
        #[arg(long, default_value_t = 1.0)]
        beta: f64,
        #[arg(long, value_enum, default_value_t = Algo::Dap)]
        algo: Algo,
        /// Use the weight share itself as the distance instead of one minus it.
        #[arg(long)]
        no_invert: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Community extraction; writes node,group_id.
    Community {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, default_value_t = 1)]
        alpha: usize,
        #[arg(long, value_enum, default_value_t = Condition::Weak)]
        condition: Condition,
        /// Also place unassigned nodes by neighbour majority.
        #[arg(long)]
        plus: bool,
        /// Use |MN(x) ∪ MN(y) \ {x,y}| as the denominator instead of adding one.
        #[arg(long)]
        exclusive: bool,
        /// Write the removal trace as JSON.
        #[arg(long)]
        trace: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Normalized mutual information of two node,group_id files.
    Nmi {
        model: PathBuf,
        extracted: PathBuf,
        /// Leave out nodes unassigned in either file instead of treating them as singletons.
        #[arg(long)]
        drop_unassigned: bool,
    },
    /// Benchmark network with planted communities.
    Generate {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Flat key = value file with generator parameters.
        #[arg(long)]
        spec: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Evolution events between groups of consecutive frames.
    Ged {
        #[command(flatten)]
        frames: FrameInput,
        #[command(flatten)]
        output: Output,
    },
    /// Fixed-length evolution sequences for classifiers.
    Sequences {
        #[command(flatten)]
        frames: FrameInput,
        #[arg(long, default_value_t = crate::prediction::DEFAULT_WINDOW)]
        window: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        output: Output,
    },
    /// Precision, recall and F-measure of predictions against labels.
    Score {
        #[arg(long)]
        predictions: PathBuf,
        #[arg(long)]
        labels: PathBuf,
        /// Column holding the class (default: the last one).
        #[arg(long)]
        column: Option<String>,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args, Debug)]
struct FrameInput {
    /// Directory with groups_<k>.csv and, unless --log is given, frame_<k>.tsv.
    dir: PathBuf,
    /// Event log to slice into frames instead of frame_<k>.tsv files.
    #[arg(long, requires = "frame_length")]
    log: Option<PathBuf>,
    /// Time span of one frame when slicing --log.
    #[arg(long)]
    frame_length: Option<i64>,
    /// Time shared by consecutive frames when slicing --log.
    #[arg(long, default_value_t = 0)]
    frame_overlap: i64,
    #[arg(long)]
    undirected: bool,
    #[arg(long, default_value_t = 0.5)]
    alpha: f64,
    #[arg(long, default_value_t = 0.5)]
    beta: f64,
    #[arg(long, value_enum, default_value_t = Importance::Sp)]
    importance: Importance,
    /// Inclusion below which groups form or dissolve.
    #[arg(long, default_value_t = 0.1)]
    threshold: f64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Metric {
    Mn,
    Clcc,
    Cdc,
    Mdc1,
    Mdc2,
    Mdc3,
    Clecc,
    Ecc,
    Dc,
    Cc,
    Bc,
    Sp,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Mode {
    In,
    Out,
    InoutAny,
    Inout,
    Any,
}

impl From<Mode> for NeighbourhoodMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::In => NeighbourhoodMode::In,
            Mode::Out => NeighbourhoodMode::Out,
            Mode::InoutAny => NeighbourhoodMode::InOutAny,
            Mode::Inout => NeighbourhoodMode::InOut,
            Mode::Any => NeighbourhoodMode::Any,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Dir {
    Total,
    In,
    Out,
}

impl From<Dir> for Direction {
    fn from(d: Dir) -> Self {
        match d {
            Dir::Total => Direction::Total,
            Dir::In => Direction::In,
            Dir::Out => Direction::Out,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Algo {
    Dap,
    Mda,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Condition {
    Weak,
    Strong,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Kind {
    Gn,
    Lfr,
    Mlfr,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Importance {
    Sp,
    Degree,
    None,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    Csv,
    Arff,
}

/// Runs the command line `argv` (program name first) and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let previous = panic::take_hook();
    panic::set_hook(Box::new(|_| {}));
    let outcome = panic::catch_unwind(AssertUnwindSafe(|| execute(cli)));
    panic::set_hook(previous);
    match outcome {
        Ok(Ok(())) => 0,
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            e.code()
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "unknown panic".into());
            eprintln!("internal error: {msg}");
            2
        }
    }
}

fn execute(cli: Cli) -> CliResult<()> {
    let seed = resolve_seed(cli.seed)?;
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.jobs {
        if n == 0 {
            return Err(CliError::Input("--jobs must be at least 1".into()));
        }
        pool = pool.num_threads(n);
    }
    let pool = pool.build().map_err(|e| CliError::Internal(e.to_string()))?;
    pool.install(|| dispatch(cli.command, seed))
}

fn resolve_seed(flag: Option<u64>) -> CliResult<Option<u64>> {
    if flag.is_some() {
        return Ok(flag);
    }
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| CliError::Input(format!("{SEED_ENV}={v:?} is not an unsigned integer"))),
        Err(_) => Ok(None),
    }
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> CliResult<()> {
    write_atomic(path, contents.as_bytes()).map_err(|e| CliError::Internal(format!("{}: {e}", path.display())))
}

fn emit(output: &Output, contents: &str) -> CliResult<()> {
    match &output.out {
        Some(p) => write_file(p, contents),
        None => std::io::stdout()
            .write_all(contents.as_bytes())
            .map_err(|e| CliError::Internal(e.to_string())),
    }
}

fn load_graph(g: &GraphInput) -> CliResult<Msn> {
    let text = read(&g.input)?;
    Ok(load_msn(parse_edge_list(&text, g.undirected)?)?)
}

fn fmt_value(v: f64) -> String {
    format!("{v}")
}

fn dispatch(command: Command, seed: Option<u64>) -> CliResult<()> {
    match command {
        Command::Measure {
            graph,
            metric,
            alpha,
            mode,
            direction,
            layer,
            normalized,
            output,
        } => {
            let net = load_graph(&graph)?;
            emit(&output, &measure(&net, metric, alpha, mode.into(), direction.into(), layer, normalized)?)
        }
        Command::Paths {
            graph,
            source,
            alpha,
            beta,
            algo,
            no_invert,
            output,
        } => {
            let net = load_graph(&graph)?;
            let s = net.node_id(&source)?;
            let transform = if no_invert { WeightTransform::Direct } else { WeightTransform::Invert };
            let result = match algo {
                Algo::Dap => shortest_paths_dap(&net, s, alpha, beta, transform)?,
                Algo::Mda => shortest_paths_mda(&net, s, alpha, transform)?,
            };
            let mut text = String::from("target,length,predecessor\n");
            for (&t, &len) in &result.lengths {
                let pred = result.predecessors.get(&t).map(|&p| net.node_name(p)).unwrap_or("");
                text.push_str(&format!("{},{},{}\n", net.node_name(t), fmt_value(len), pred));
            }
            emit(&output, &text)
        }
        Command::Community {
            graph,
            alpha,
            condition,
            plus,
            exclusive,
            trace,
            output,
        } => {
            let net = load_graph(&graph)?;
            let condition = match condition {
                Condition::Weak => CommunityCondition::Weak,
                Condition::Strong => CommunityCondition::Strong,
            };
            let mut options = MethodOptions::new(alpha, condition);
            if exclusive {
                options.denominator = CleccDenominator::Exclusive;
            }
            let (mut partition, steps) = clecc_method(&net, options)?;
            if plus {
                partition = clecc_plus(&net, &partition);
            }
            if let Some(path) = trace {
                let json = serde_json::to_string_pretty(&steps).map_err(|e| CliError::Internal(e.to_string()))?;
                write_file(&path, &(json + "\n"))?;
            }
            emit(&output, &format_assignments(&partition, net.nodes()))
        }
        Command::Nmi {
            model,
            extracted,
            drop_unassigned,
        } => {
            let a = parse_assignments(&read(&model)?)?;
            let b = parse_assignments(&read(&extracted)?)?;
            let names: BTreeSet<&str> = a.iter().chain(&b).map(|(n, _)| n.as_str()).collect();
            let names: Vec<&str> = names.into_iter().collect();
            let index = |n: &str| names.binary_search(&n).map_err(|_| Error::UnknownNode(n.to_string()));
            let pa = partition_from_assignments(&a, index)?;
            let pb = partition_from_assignments(&b, index)?;
            let policy = if drop_unassigned { Unassigned::Drop } else { Unassigned::Singletons };
            println!("{}", nmi(&pa, &pb, policy)?);
            Ok(())
        }
        Command::Generate { kind, spec, out } => {
            let mut s = match &spec {
                Some(p) => BenchmarkSpec::parse(&read(p)?)?,
                None => BenchmarkSpec::default(),
            };
            if let Some(seed) = seed {
                s.seed = seed;
            }
            let (net, truth) = match kind {
                Kind::Gn => generate_gn(s.mu, s.seed)?,
                Kind::Lfr => generate_lfr_base(&s)?,
                Kind::Mlfr => generate_mlfr(&s)?,
            };
            write_benchmark(&out, &net, &truth)
        }
        Command::Ged { frames, output } => {
            let (dsn, partitions) = load_frames(&frames)?;
            let events = ged(&dsn, &partitions, ged_params(&frames))?;
            emit(&output, &format_events(&events))
        }
        Command::Sequences {
            frames,
            window,
            format,
            output,
        } => {
            let (dsn, partitions) = load_frames(&frames)?;
            let events = ged(&dsn, &partitions, ged_params(&frames))?;
            let rows = extract_sequences(&evolution_chains(&events), window);
            let format = match format {
                Format::Csv => DatasetFormat::Csv,
                Format::Arff => DatasetFormat::Arff,
            };
            emit(&output, &export_dataset(&rows, format)?)
        }
        Command::Score {
            predictions,
            labels,
            column,
            output,
        } => {
            let p = read_column(&predictions, column.as_deref())?;
            let l = read_column(&labels, column.as_deref())?;
            let report = prf(&p, &l)?;
            let mut text = String::from("class,precision,recall,f,support\n");
            for c in &report.classes {
                text.push_str(&format!("{},{},{},{},{}\n", c.class, c.precision, c.recall, c.f, c.support));
            }
            text.push_str(&format!("weighted,,,{},{}\n", report.weighted_f, l.len()));
            emit(&output, &text)
        }
    }
}

fn measure(
    net: &Msn,
    metric: Metric,
    alpha: usize,
    mode: NeighbourhoodMode,
    direction: Direction,
    layer: Option<String>,
    normalized: bool,
) -> CliResult<String> {
    let single = match &layer {
        Some(l) => net.layer_view(l)?,
        None => net.clone(),
    };
    let n = net.node_count();
    let name = |x: NodeIx| net.node_name(x).to_string();
    let per_node = |f: &(dyn Fn(NodeIx) -> crate::Result<f64> + Sync)| -> CliResult<String> {
        let values: Vec<crate::Result<f64>> = (0..n).into_par_iter().map(f).collect();
        let mut text = String::from("node,value\n");
        for (x, v) in values.into_iter().enumerate() {
            text.push_str(&format!("{},{}\n", name(x), fmt_value(v?)));
        }
        Ok(text)
    };
    let per_pair = |f: &(dyn Fn(NodeIx, NodeIx) -> crate::Result<f64> + Sync)| -> CliResult<String> {
        let rows: Vec<Vec<(NodeIx, NodeIx, crate::Result<f64>)>> = (0..n)
            .into_par_iter()
            .map(|x| {
                link_counts(net, x)
                    .into_keys()
                    .filter(|&y| x < y)
                    .map(|y| (x, y, f(x, y)))
                    .collect()
            })
            .collect();
        let mut text = String::from("node,node2,value\n");
        for (x, y, v) in rows.into_iter().flatten() {
            text.push_str(&format!("{},{},{}\n", name(x), name(y), fmt_value(v?)));
        }
        Ok(text)
    };
    match metric {
        Metric::Mn => {
            let sets: Vec<crate::Result<BTreeSet<NodeIx>>> =
                (0..n).into_par_iter().map(|x| multi_neighbourhood(net, x, alpha, mode)).collect();
            let mut text = String::from("node,node2,value\n");
            for (x, set) in sets.into_iter().enumerate() {
                let counts = link_counts(net, x);
                for y in set? {
                    text.push_str(&format!("{},{},{}\n", name(x), name(y), counts[&y].count(mode)));
                }
            }
            Ok(text)
        }
        Metric::Clcc => per_node(&|x| clcc(net, x, alpha)),
        Metric::Cdc => per_node(&|x| cdc(net, x, alpha, direction)),
        Metric::Mdc1 => per_node(&|x| mdc(net, x, MdcVersion::Layers, direction)),
        Metric::Mdc2 => per_node(&|x| mdc(net, x, MdcVersion::Union, direction)),
        Metric::Mdc3 => per_node(&|x| mdc(net, x, MdcVersion::LayerSum, direction)),
        Metric::Clecc => per_pair(&|x, y| clecc_with(net, x, y, alpha, CleccDenominator::Exclusive)),
        Metric::Ecc => per_pair(&|x, y| ecc(&single, x, y)),
        Metric::Dc => per_node(&|x| degree_centrality(&single, x, direction, normalized, true)),
        Metric::Cc => per_node(&|x| closeness(&single, x, normalized)),
        Metric::Bc => {
            if n < 3 {
                return Err(Error::DegenerateNetwork("betweenness needs three nodes".into()).into());
            }
            let raw = betweenness_all(&single)?;
            per_node(&|x| Ok(raw[x] / (n as f64 - 1.0)))
        }
        Metric::Sp => {
            let sp = social_position(&single, SocialPositionParams::default())?;
            per_node(&|x| Ok(sp[x]))
        }
    }
}

fn write_benchmark(dir: &Path, net: &Msn, truth: &GroundTruth) -> CliResult<()> {
    fs::create_dir_all(dir).map_err(|e| CliError::Internal(format!("{}: {e}", dir.display())))?;
    write_file(&dir.join("edges.tsv"), &format_edge_list(net))?;
    for (l, communities) in truth.layers.iter().enumerate() {
        let mut text = String::from("node,community\n");
        for (x, c) in communities.iter().enumerate() {
            text.push_str(&format!("{},{}\n", net.node_name(x), c));
        }
        write_file(&dir.join(format!("truth_layer_{}.csv", net.layer_name(l))), &text)?;
    }
    Ok(())
}

fn ged_params(f: &FrameInput) -> GedParams {
    let importance = match f.importance {
        Importance::Sp => ImportanceSource::SocialPosition,
        Importance::Degree => ImportanceSource::Degree,
        Importance::None => ImportanceSource::None,
    };
    let mut params = GedParams::new(f.alpha, f.beta, importance);
    params.threshold = f.threshold;
    params
}

fn numbered(dir: &Path, prefix: &str, suffix: &str) -> CliResult<Vec<PathBuf>> {
    let mut found = Vec::new();
    let entries = fs::read_dir(dir).map_err(|e| CliError::Input(format!("{}: {e}", dir.display())))?;
    for entry in entries {
        let entry = entry.map_err(|e| CliError::Input(e.to_string()))?;
        let file = entry.file_name().to_string_lossy().to_string();
        if let Some(k) = file.strip_prefix(prefix).and_then(|r| r.strip_suffix(suffix)) {
            if let Ok(k) = k.parse::<usize>() {
                found.push((k, entry.path()));
            }
        }
    }
    found.sort();
    for (i, (k, _)) in found.iter().enumerate() {
        if *k != i {
            return Err(CliError::Input(format!("{}: {prefix}<k>{suffix} files must be numbered 0..", dir.display())));
        }
    }
    Ok(found.into_iter().map(|(_, p)| p).collect())
}

fn load_frames(f: &FrameInput) -> CliResult<(Dsn, Vec<Partition>)> {
    let group_files = numbered(&f.dir, "groups_", ".csv")?;
    let assignments = group_files
        .iter()
        .map(|p| Ok(parse_assignments(&read(p)?)?))
        .collect::<CliResult<Vec<_>>>()?;
    let dsn = match (&f.log, f.frame_length) {
        (Some(log), Some(window)) => load_dsn(parse_event_log(&read(log)?, f.undirected)?, window, f.frame_overlap)?,
        _ => {
            let frame_files = numbered(&f.dir, "frame_", ".tsv")?;
            let records = frame_files
                .iter()
                .map(|p| Ok(parse_edge_list(&read(p)?, f.undirected)?))
                .collect::<CliResult<Vec<_>>>()?;
            let mut universe = MsnBuilder::new();
            for (s, t, l, _) in records.iter().flatten() {
                universe.add_node(s).add_node(t).add_layer(l);
            }
            for (n, _) in assignments.iter().flatten() {
                universe.add_node(n);
            }
            let networks = records
                .iter()
                .map(|recs| {
                    let mut b = universe.clone();
                    for (s, t, l, w) in recs {
                        b.add_edge(s, t, l, *w)?;
                    }
                    Ok(b.build())
                })
                .collect::<crate::Result<Vec<_>>>()?;
            Dsn::from_frames(networks, 1, 0)?
        }
    };
    if dsn.len() != assignments.len() {
        return Err(Error::FrameMismatch {
            frames: dsn.len(),
            partitions: assignments.len(),
        }
        .into());
    }
    let partitions = assignments
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let net = &dsn.frames[k].network;
            let mut p = partition_from_assignments(a, |n| net.node_id(n))?;
            for g in &mut p.groups {
                g.frame = Some(k);
            }
            Ok(p)
        })
        .collect::<crate::Result<Vec<_>>>()?;
    Ok((dsn, partitions))
}

fn format_events(events: &[EvolutionEvent]) -> String {
    let mut text = String::from("frame_i,group_i,frame_j,group_j,event,incl_fwd,incl_bwd\n");
    for e in events {
        text.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            e.frame_i,
            e.group_i.as_deref().unwrap_or(""),
            e.frame_j,
            e.group_j.as_deref().unwrap_or(""),
            e.kind,
            fmt_value(e.inclusion_fwd),
            fmt_value(e.inclusion_bwd)
        ));
    }
    text
}

fn read_column(path: &Path, column: Option<&str>) -> CliResult<Vec<String>> {
    let text = read(path)?;
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header: Vec<&str> = lines
        .next()
        .ok_or_else(|| CliError::Input(format!("{}: empty file", path.display())))?
        .split(',')
        .map(str::trim)
        .collect();
    let idx = match column {
        Some(c) => header
            .iter()
            .position(|h| *h == c)
            .ok_or_else(|| CliError::Input(format!("{}: no column {c:?}", path.display())))?,
        None => header.len() - 1,
    };
    lines
        .enumerate()
        .map(|(i, l)| {
            l.split(',')
                .nth(idx)
                .map(|v| v.trim().to_string())
                .ok_or_else(|| CliError::Input(format!("{}: line {} is missing column {}", path.display(), i + 2, idx + 1)))
        })
        .collect()
}
