use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use connpart::arith::TTable;
use connpart::bounds::{
    connected_cut_bound, ordered_vertex_partitions_with, packing_partitions_with, path_cut_partitions_with,
};
use connpart::exact::{cmc, edge_partition_profile, vertex_partition_profile, CutWitness, ExactConfig, ExactProfile};
use connpart::families::{random_tree, FamilySpec};
use connpart::graph::{parse_graph, write_graph};
use connpart::splits::{nested_split_sequence, tree_exact_p2};
use connpart::verify::{run_suite, Suite, VerifyOptions, SCHEMA};
use connpart::{Error, Graph, Parallelism, RootedTree, SizeProfile};
use serde_json::{json, Value};

const EXIT_USAGE: u8 = 2;
const EXIT_PARSE: u8 = 3;
const EXIT_BUDGET: u8 = 4;
const EXIT_CHECK: u8 = 5;

/// Connected partition profiles, bounds and verification suites.
#[derive(Parser)]
#[command(name = "partctl", version)]
struct Cli {
    /// Run every solver on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Exact P(G,k), pi(G,k) or CMC_r(G) by exhaustive search.
    Exact {
        #[arg(long, value_enum)]
        what: What,
        /// Number of parts (r for cmc).
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        budget: Budget,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Constructive lower bounds.
    Bounds {
        #[arg(long, value_enum)]
        method: Method,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        input: PathBuf,
        /// Also list every emitted partition.
        #[arg(long)]
        partitions: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a named graph family in edge-list format.
    Family {
        #[arg(long, value_enum)]
        name: FamilyName,
        /// key=value pairs, e.g. `ell=3` or `n=20 m=40 seed=7`.
        #[arg(long, num_args = 0..)]
        params: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The sequence t(n) as CSV.
    Tseq {
        #[arg(long)]
        max: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Nested split sequence of a tree.
    Splits {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        root: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact P(T,2) of a tree in linear passes.
    TreeP2 {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite; exits with 5 if any check fails.
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        count: Option<usize>,
        #[command(flatten)]
        budget: Budget,
        /// JSON report destination; the table always goes to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(clap::Args)]
struct Budget {
    /// Element limit for the exact search.
    #[arg(long)]
    max_elements: Option<usize>,
    /// Search-node limit for the exact search.
    #[arg(long)]
    max_nodes: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    #[value(name = "P")]
    P,
    #[value(name = "pi")]
    Pi,
    #[value(name = "cmc")]
    Cmc,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Method {
    Pathcut,
    Packing,
    Cut,
    Ordered,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum FamilyName {
    TEll,
    Ternary,
    BinaryClique,
    NonmonotoneExample,
    RandomConnected,
    RandomTree,
}

/// A failure that maps to its own exit status.
#[derive(Debug)]
struct Exit(u8);

impl std::fmt::Display for Exit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "exit {}", self.0)
    }
}

impl std::error::Error for Exit {}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if let Some(Exit(code)) = e.downcast_ref::<Exit>() {
                return ExitCode::from(*code);
            }
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.chain().find_map(|c| c.downcast_ref::<Error>()) {
        Some(Error::Parse { .. }) => EXIT_PARSE,
        Some(Error::TooLarge(_)) => EXIT_BUDGET,
        Some(Error::OutOfRange { .. } | Error::TooSmall { .. }) => EXIT_USAGE,
        _ if e.chain().any(|c| c.is::<UsageError>()) => EXIT_USAGE,
        _ => 1,
    }
}

#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn run(cli: Cli) -> Result<()> {
    let mode = if cli.sequential { Parallelism::Sequential } else { Parallelism::Rayon };
    match cli.cmd {
        Cmd::Exact { what, k, input, budget, out } => {
            let g = read_graph(&input)?;
            let cfg = exact_config(&budget, mode);
            let body = match what {
                What::P => profile_json(&edge_partition_profile(&g, k, &cfg)?),
                What::Pi => profile_json(&vertex_partition_profile(&g, k, &cfg)?),
                What::Cmc => cut_json(&cmc(&g, k, &cfg)?),
            };
            emit_json(out.as_deref(), body)
        }
        Cmd::Bounds { method, k, input, partitions, out } => {
            let g = read_graph(&input)?;
            emit_json(out.as_deref(), bounds(&g, method, k, partitions, mode)?)
        }
        Cmd::Family { name, params, out } => {
            let params = Params::parse(&params)?;
            let text = family_text(name, &params)?;
            emit(out.as_deref(), &text)
        }
        Cmd::Tseq { max, out } => {
            if max == 0 {
                return Err(UsageError("--max must be at least 1".into()).into());
            }
            let t = TTable::new(max);
            let mut csv = String::from("n,t\n");
            for n in 1..=max {
                csv.push_str(&format!("{n},{}\n", t.t(n)));
            }
            emit(out.as_deref(), &csv)
        }
        Cmd::Splits { input, root, out } => {
            let g = read_graph(&input)?;
            let seq = nested_split_sequence(&RootedTree::new(g, root)?);
            emit_json(out.as_deref(), seq.to_json())
        }
        Cmd::TreeP2 { input, out } => {
            let g = read_graph(&input)?;
            let p = tree_exact_p2(&g)?;
            emit_json(out.as_deref(), json!({ "value": p.len(), "profile": tuples(&p) }))
        }
        Cmd::Verify { suite, seed, count, budget, out } => {
            let opts = VerifyOptions { seed, count, exact: exact_config(&budget, mode), parallelism: mode };
            let report = run_suite(suite, &opts)?;
            print!("{}", report.table());
            if let Some(path) = out {
                let text = serde_json::to_string_pretty(&report)?;
                fs::write(&path, text + "\n").with_context(|| format!("writing {}", path.display()))?;
            }
            if report.ok() {
                Ok(())
            } else {
                Err(Exit(EXIT_CHECK).into())
            }
        }
    }
}

fn exact_config(b: &Budget, mode: Parallelism) -> ExactConfig {
    ExactConfig { max_elements: b.max_elements, max_nodes: b.max_nodes, parallelism: mode }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_graph(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_json(out: Option<&Path>, mut body: Value) -> Result<()> {
    if let Value::Object(map) = &mut body {
        map.insert("schema".into(), SCHEMA.into());
    }
    emit(out, &(serde_json::to_string(&body)? + "\n"))
}

fn tuples(p: &SizeProfile) -> Vec<Vec<usize>> {
    p.iter().cloned().collect()
}

fn profile_json(p: &ExactProfile) -> Value {
    let witnesses: Vec<Value> =
        p.witnesses.iter().rev().map(|(t, parts)| json!({ "sizes": t, "parts": parts })).collect();
    json!({
        "universe": p.universe,
        "k": p.k,
        "value": p.value(),
        "profile": tuples(&p.profile),
        "degenerate": p.degenerate,
        "nodes": p.nodes,
        "witnesses": witnesses,
    })
}

fn cut_json(w: &CutWitness) -> Value {
    json!({ "value": w.cut_size, "sizes": w.partition.sizes(), "partition": w.partition.to_lists() })
}

fn bounds(g: &Graph, method: Method, k: usize, list: bool, mode: Parallelism) -> Result<Value> {
    fn summary<P>(
        report: Value,
        parts: &[P],
        sizes: impl Fn(&P) -> Vec<usize>,
        lists: impl Fn(&P) -> Vec<Vec<usize>>,
        list: bool,
    ) -> Value {
        let profile: SizeProfile = parts.iter().map(&sizes).collect();
        let mut v =
            json!({ "report": report, "emitted": parts.len(), "value": profile.len(), "profile": tuples(&profile) });
        if list {
            v["partitions"] = parts.iter().map(lists).collect::<Vec<_>>().into();
        }
        v
    }
    let mut v = match method {
        Method::Pathcut => {
            let (parts, r) = path_cut_partitions_with(g, mode)?;
            summary(serde_json::to_value(r)?, &parts, |p| p.canonical_sizes(), |p| p.to_lists(), list)
        }
        Method::Packing => {
            let (parts, r) = packing_partitions_with(g, k, mode)?;
            summary(serde_json::to_value(r)?, &parts, |p| p.canonical_sizes(), |p| p.to_lists(), list)
        }
        Method::Ordered => {
            let (parts, r) = ordered_vertex_partitions_with(g, k, mode)?;
            summary(serde_json::to_value(r)?, &parts, |p| p.canonical_sizes(), |p| p.to_lists(), list)
        }
        Method::Cut => cut_json(&connected_cut_bound(g, k)?),
    };
    v["method"] = json!(format!("{method:?}").to_lowercase());
    Ok(v)
}

struct Params(Vec<(String, u64)>);

impl Params {
    fn parse(raw: &[String]) -> Result<Self> {
        raw.iter()
            .map(|kv| {
                let (k, v) = kv.split_once('=').ok_or_else(|| UsageError(format!("expected key=value, got {kv:?}")))?;
                let v = v.parse().map_err(|_| UsageError(format!("{k}: not a nonnegative integer: {v:?}")))?;
                Ok((k.to_string(), v))
            })
            .collect::<Result<_>>()
            .map(Params)
    }

    fn get(&self, key: &str) -> Result<u64> {
        self.0
            .iter()
            .find(|(k, _)| k == key)
            .map(|&(_, v)| v)
            .ok_or_else(|| UsageError(format!("missing parameter {key}")).into())
    }

    fn get_or(&self, key: &str, default: u64) -> u64 {
        self.get(key).unwrap_or(default)
    }

    fn small(&self, key: &str) -> Result<u32> {
        u32::try_from(self.get(key)?).map_err(|_| UsageError(format!("{key} too large")).into())
    }
}

fn family_text(name: FamilyName, p: &Params) -> Result<String> {
    let spec = match name {
        FamilyName::TEll => FamilySpec::TEll { ell: p.small("ell")? },
        FamilyName::Ternary => FamilySpec::Ternary { height: p.small("height")? },
        FamilyName::BinaryClique => FamilySpec::BinaryClique { h1: p.small("h1")?, h2: p.small("h2")? },
        FamilyName::NonmonotoneExample => FamilySpec::NonmonotoneExample,
        FamilyName::RandomConnected => {
            FamilySpec::RandomConnected { n: p.get("n")? as usize, m: p.get("m")? as usize, seed: p.get_or("seed", 0) }
        }
        FamilyName::RandomTree => {
            let n = p.get("n")? as usize;
            if n == 0 {
                bail!(UsageError("n must be at least 1".into()));
            }
            let seed = p.get_or("seed", 0);
            return Ok(format!("# random_tree n={n} seed={seed}\n{}", write_graph(&random_tree(n, seed))));
        }
    };
    let g = spec.generate()?;
    let mut text = format!("# {}\n", serde_json::to_string(&spec)?);
    if let FamilySpec::NonmonotoneExample = spec {
        let (_, e) = connpart::families::nonmonotone_example();
        let (u, v) = g.endpoints(e);
        text.push_str(&format!("# distinguished edge {e}: {u} {v}\n"));
    }
    text.push_str(&write_graph(&g));
    Ok(text)
}
