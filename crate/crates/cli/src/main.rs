use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use hyperdisc::analysis::{
    bounds, census, conjecture_scan_of, format_bounds, format_census, format_conjecture_scan, CensusOptions,
};
use hyperdisc::construct::{greedy_construct, greedy_hitting_set, hitting_set_setup, weight_bound, Ordering};
use hyperdisc::families::{self, Family, PartSizes};
use hyperdisc::geometry::{format_placement, geometric_discriminator_with, parse_regions};
use hyperdisc::sidon::{greedy_bh, uniform_sidon_labeling, verify_bh};
use hyperdisc::solver::SolverConfig;
use hyperdisc::{
    exact_optimal_with, format_labeling, parse_hypergraph, parse_labeling, serialize_hypergraph,
    validate_discriminator, Hypergraph, Labeling,
};

/// Minimum-weight edge-discriminators on hypergraphs.
#[derive(Parser)]
#[command(name = "hyperdisc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a labeling against a hypergraph.
    Validate {
        hypergraph: PathBuf,
        #[arg(long)]
        labels: PathBuf,
    },
    /// Greedy labeling with its weight certificate.
    Construct(ConstructArgs),
    /// Exact optimum by branch and bound.
    Solve {
        hypergraph: PathBuf,
        /// Give up after this many search nodes.
        #[arg(long)]
        node_cap: Option<u64>,
    },
    /// Known optimal labelings of special hypergraphs.
    Family(FamilyArgs),
    /// Lower and upper bounds with their witnesses.
    Bounds { hypergraph: PathBuf },
    /// Optimal weights of every reduced hypergraph with n edges.
    Census {
        #[arg(long)]
        n: usize,
        /// Keep one instance per edge-permutation class.
        #[arg(long)]
        dedup: bool,
        #[arg(long)]
        workers: Option<usize>,
        /// Also report which weights of [n(n-1)/2+2, n(n+1)/2-1] occur.
        #[arg(long)]
        conjecture: bool,
    },
    /// B_h sets and labelings of uniform hypergraphs.
    Sidon(SidonArgs),
    /// Point placement discriminating intervals or rectangles.
    Geom {
        regions: PathBuf,
        #[arg(long)]
        node_cap: Option<u64>,
    },
}

#[derive(Args)]
struct ConstructArgs {
    hypergraph: PathBuf,
    /// Vertex order, lowest first.
    #[arg(long, value_delimiter = ',', conflicts_with = "hitting_heuristic")]
    order: Option<Vec<String>>,
    /// Initial values as `vertex=k`.
    #[arg(long, value_delimiter = ',', conflicts_with = "hitting_heuristic")]
    init: Option<Vec<String>>,
    /// Put a greedy hitting set last with initial value 1.
    #[arg(long)]
    hitting_heuristic: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyKind {
    Path,
    Cycle,
    Powerset,
    Star,
    Nested,
    Disjoint,
    Rpartite,
}

#[derive(Args)]
struct FamilyArgs {
    kind: FamilyKind,
    #[arg(long)]
    m: Option<usize>,
    /// Part sizes for `rpartite`, non-increasing.
    #[arg(long, value_delimiter = ',')]
    sizes: Option<Vec<usize>>,
    /// Also write the hypergraph to this file.
    #[arg(long)]
    hg: Option<PathBuf>,
}

#[derive(Args)]
#[command(args_conflicts_with_subcommands = true)]
struct SidonArgs {
    #[command(subcommand)]
    action: Option<SidonAction>,
    #[arg(long)]
    h: Option<usize>,
    #[arg(long)]
    count: Option<usize>,
}

#[derive(Subcommand)]
enum SidonAction {
    /// Label an r-uniform hypergraph with a greedy B_r set.
    Label {
        hypergraph: PathBuf,
        #[arg(long)]
        r: usize,
    },
}

fn usage_error(message: &str) -> ! {
    Cli::command().error(ErrorKind::MissingRequiredArgument, message).exit()
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_hypergraph(path: &Path) -> Result<Hypergraph> {
    parse_hypergraph(&read(path)?).with_context(|| format!("{}", path.display()))
}

fn labeling_report(h: &Hypergraph, lab: &Labeling) -> Result<String> {
    Ok(format_labeling(h, lab)?)
}

fn solver_config(node_cap: Option<u64>) -> SolverConfig {
    SolverConfig {
        node_cap,
        ..SolverConfig::default()
    }
}

fn validate(hg: &Path, labels: &Path) -> Result<(String, bool)> {
    let h = load_hypergraph(hg)?;
    let lab = parse_labeling(&h, &read(labels)?).with_context(|| format!("{}", labels.display()))?;
    let verdict = validate_discriminator(&h, &lab)?;
    let mut out = format!("{verdict}\n");
    if verdict.is_valid() {
        out.push_str(&format!("total {}\n", lab.total_weight()));
    }
    Ok((out, verdict.is_valid()))
}

fn parse_init(h: &Hypergraph, pairs: &[String]) -> Result<Labeling> {
    let mut lab = Labeling::zeros(h.vertex_count());
    for pair in pairs {
        let Some((name, value)) = pair.split_once('=') else {
            bail!("initial value `{pair}` is not of the form vertex=k");
        };
        let v = h
            .vertex_index(name)
            .with_context(|| format!("unknown vertex `{name}` in --init"))?;
        lab.set(
            v,
            value.parse().with_context(|| format!("bad initial value `{value}`"))?,
        );
    }
    Ok(lab)
}

fn construct(args: &ConstructArgs) -> Result<String> {
    let h = load_hypergraph(&args.hypergraph)?;
    let m = h.vertex_count();
    let mut out = String::new();
    let (ordering, initial) = if args.hitting_heuristic {
        let hs = greedy_hitting_set(&h);
        let names: Vec<&str> = hs.iter().map(|&v| h.vertex_name(v)).collect();
        out.push_str(&format!("# hitting set {}\n", names.join(",")));
        hitting_set_setup(&h, &hs)
    } else {
        let ordering = match &args.order {
            Some(names) => Ordering::from_names(&h, names)?,
            None => Ordering::identity(m),
        };
        let initial = match &args.init {
            Some(pairs) => parse_init(&h, pairs)?,
            None => Labeling::zeros(m),
        };
        (ordering, initial)
    };
    let lab = greedy_construct(&h, &ordering, &initial)?;
    let bound = weight_bound(&h, &ordering, &initial)?;
    out.push_str(&labeling_report(&h, &lab)?);
    out.push_str(&format!("# bound {bound}\n"));
    Ok(out)
}

fn solve(hg: &Path, node_cap: Option<u64>) -> Result<String> {
    let h = load_hypergraph(hg)?;
    let result = exact_optimal_with(&h, &solver_config(node_cap))?;
    let mut out = labeling_report(&h, &result.witness)?;
    out.push_str(&format!("# nodes {}\n", result.nodes_explored));
    Ok(out)
}

fn family(args: &FamilyArgs) -> Result<String> {
    let m = || args.m.unwrap_or_else(|| usage_error("this family needs --m"));
    let f: Family = match args.kind {
        FamilyKind::Path => families::path_optimal(m())?,
        FamilyKind::Cycle => families::cycle_optimal(m())?,
        FamilyKind::Powerset => families::power_set_optimal(m())?,
        FamilyKind::Star => families::star(m())?,
        FamilyKind::Nested => families::nested_chain(m())?,
        FamilyKind::Disjoint => families::disjoint(m())?,
        FamilyKind::Rpartite => {
            let sizes = args
                .sizes
                .clone()
                .unwrap_or_else(|| usage_error("rpartite needs --sizes"));
            families::r_partite_optimal(&PartSizes::new(sizes)?)?
        }
    };
    let hg_text = serialize_hypergraph(&f.hypergraph);
    if let Some(path) = &args.hg {
        fs::write(path, &hg_text).with_context(|| format!("cannot write {}", path.display()))?;
    }
    let mut out = String::new();
    for line in hg_text.lines() {
        out.push_str(&format!("# edge {line}\n"));
    }
    out.push_str(&labeling_report(&f.hypergraph, &f.labeling)?);
    Ok(out)
}

fn sidon(args: &SidonArgs) -> Result<String> {
    match &args.action {
        Some(SidonAction::Label { hypergraph, r }) => {
            let h = load_hypergraph(hypergraph)?;
            if let Some((i, e)) = h.edges().iter().enumerate().find(|(_, e)| e.len() != *r) {
                bail!("edge {} has {} vertices, expected {r}", i + 1, e.len());
            }
            let lab = uniform_sidon_labeling(&h)?;
            labeling_report(&h, &lab)
        }
        None => {
            let (Some(h), Some(count)) = (args.h, args.count) else {
                usage_error("give --h and --count, or use `sidon label`");
            };
            let set = greedy_bh(h, count)?;
            let elements: Vec<String> = set.elements.iter().map(u64::to_string).collect();
            Ok(format!("h={h} elements={}\n{}\n", elements.join(","), verify_bh(&set)))
        }
    }
}

fn run(cli: Cli) -> Result<(String, bool)> {
    let ok = |s: String| Ok((s, true));
    match cli.command {
        Command::Validate { hypergraph, labels } => validate(&hypergraph, &labels),
        Command::Construct(args) => ok(construct(&args)?),
        Command::Solve { hypergraph, node_cap } => ok(solve(&hypergraph, node_cap)?),
        Command::Family(args) => ok(family(&args)?),
        Command::Bounds { hypergraph } => {
            let h = load_hypergraph(&hypergraph)?;
            ok(format_bounds(&h, &bounds(&h)?))
        }
        Command::Census {
            n,
            dedup,
            workers,
            conjecture,
        } => {
            let report = census(
                n,
                &CensusOptions {
                    dedup,
                    workers,
                    ..CensusOptions::default()
                },
            )?;
            let mut out = format_census(&report);
            if conjecture {
                out.push_str(&format_conjecture_scan(&conjecture_scan_of(&report)));
            }
            ok(out)
        }
        Command::Sidon(args) => ok(sidon(&args)?),
        Command::Geom { regions, node_cap } => {
            let regions = parse_regions(&read(&regions)?)?;
            ok(format_placement(&geometric_discriminator_with(
                &regions,
                &solver_config(node_cap),
            )?))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, success)) => {
            print!("{out}");
            if success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
