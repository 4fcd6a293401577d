//! The `flowsmith` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 precondition or parse
//! error, 3 cap or budget exhausted. Results go to stdout or `-o`;
//! diagnostics go to stderr.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::closure::k_closure;
use crate::constructions::{
    avoid_large_group, avoid_z6, check_members, many_nz_z2z2, many_nz_z2z3, FlowFamily, Z6Options,
};
use crate::cubic::reduce_to_cubic;
use crate::decomposition::{decomposition_containing_cycle, enumerate_decompositions, Decomposition};
use crate::error::{Error, Result};
use crate::flow::io::{parse_flows, parse_forbidden, write_flows};
use crate::flow::oracle::{count_avoiding, count_nowhere_zero, enumerate_flows, OracleConfig, DEFAULT_FLOW_CAP};
use crate::flow::ForbiddenAssignment;
use crate::generate::{generate_random_3_edge_connected, generate_random_cubic};
use crate::graph::format::{parse_fdg, write_fdg};
use crate::graph::{Cycle, EdgeSet, Multigraph};
use crate::group::GroupSpec;
use crate::peripheral::{longest_peripheral_cycle, peripheral_cycle_through, peripheral_path};

#[derive(Debug, Parser)]
#[command(name = "flowsmith", version, about = "Nowhere-zero flow families and group-connectivity witnesses")]
struct Cli {
    /// worker threads for parallel enumeration; 1 forces sequential mode
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Expand a 3-edge-connected graph into a cubic one
    Reduce {
        #[command(flatten)]
        io: GraphIo,
        /// write `<cubic edge> <original edge|F>` rows here
        #[arg(long)]
        map: Option<PathBuf>,
    },
    /// Compute a k-closure and its certificate
    Closure {
        #[command(flatten)]
        io: GraphIo,
        #[arg(short)]
        k: usize,
        /// edge list such as `e1,e5,e9`; empty for the empty set
        #[arg(long, default_value = "")]
        set: String,
    },
    /// Peripheral cycles and paths in cubic graphs
    Peripheral {
        #[command(subcommand)]
        query: PeripheralQuery,
    },
    /// Print decompositions into a spanning tree and a 2-base
    Decompose {
        #[command(flatten)]
        io: GraphIo,
        /// a peripheral cycle the 2-base must contain
        #[arg(long)]
        cycle: Option<String>,
        /// vertex that must be a leaf of every tree
        #[arg(long, default_value = "1")]
        root: String,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Many nowhere-zero flows over Z2xZ3 or Z2xZ2
    Nzflow {
        #[command(flatten)]
        io: GraphIo,
        #[arg(long)]
        group: String,
        /// emit at least this many flows when the construction has them
        #[arg(long, default_value_t = 0)]
        min: usize,
    },
    /// Many flows avoiding a forbidden assignment
    Avoid {
        #[command(flatten)]
        io: GraphIo,
        #[arg(long)]
        group: String,
        #[arg(long)]
        forbidden: PathBuf,
        #[arg(long, default_value_t = 0)]
        min: usize,
        /// fail instead of enumerating fewer decompositions than the counting argument asks for
        #[arg(long)]
        strict: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// most decompositions enumerated for order-6 groups
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
    },
    /// Check a flow file: valid, distinct, nowhere-zero or avoiding
    Verify {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        group: String,
        #[arg(long)]
        forbidden: Option<PathBuf>,
        #[arg(long)]
        flows: PathBuf,
    },
    /// Brute-force flow counts
    Oracle {
        #[command(subcommand)]
        query: OracleQuery,
    },
    /// Seeded random 3-edge-connected graph
    Gen {
        #[arg(short, long)]
        n: usize,
        /// edge count; omit for a cubic graph
        #[arg(short, long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct GraphIo {
    #[arg(short, long)]
    input: PathBuf,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum PeripheralQuery {
    /// A peripheral cycle through two edges at a vertex
    Cycle {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        at: String,
        /// two edges at `--at`
        #[arg(long)]
        edges: String,
    },
    /// A peripheral path in the component of G - X reached by `--f`
    Path {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        x: String,
        #[arg(long)]
        f: String,
        #[arg(long)]
        start: Option<String>,
    },
    /// The longest peripheral cycle found within a cycle budget
    Longest {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, default_value_t = 200_000)]
        budget: usize,
    },
}

#[derive(Debug, Subcommand)]
enum OracleQuery {
    /// Exact number of flows, nowhere-zero flows or avoiding flows
    Count {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        group: String,
        #[arg(long, conflicts_with = "nowhere_zero")]
        forbidden: Option<PathBuf>,
        #[arg(long)]
        nowhere_zero: bool,
        #[arg(long, default_value_t = DEFAULT_FLOW_CAP)]
        cap: u64,
    },
}

/// Exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidFamilyMember { .. } | Error::GuaranteeViolated { .. } | Error::Internal(_) => 1,
        Error::CapExceeded { .. } | Error::BudgetExceeded(_) => 3,
        _ => 2,
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            // printing can only fail on a closed stream
            let _ = e.print();
            return code;
        }
    };
    if let Some(jobs) = cli.jobs {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global();
    }
    let sequential = cli.jobs == Some(1);
    match dispatch(cli.command, sequential) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("flowsmith: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(command: Command, sequential: bool) -> Result<()> {
    match command {
        Command::Reduce { io, map } => reduce(&io, map.as_deref()),
        Command::Closure { io, k, set } => closure(&io, k, &set),
        Command::Peripheral { query } => peripheral(query),
        Command::Decompose { io, cycle, root, count, seed } => decompose(&io, cycle.as_deref(), &root, count, seed),
        Command::Nzflow { io, group, min } => nzflow(&io, &group, min),
        Command::Avoid { io, group, forbidden, min, strict, seed, budget } => {
            let options = Z6Options { target: min, seed, decomposition_budget: budget, strict, ..Z6Options::default() };
            avoid(&io, &group, &forbidden, options)
        }
        Command::Verify { input, group, forbidden, flows } => verify(&input, &group, forbidden.as_deref(), &flows),
        Command::Oracle { query: OracleQuery::Count { input, group, forbidden, nowhere_zero, cap } } => {
            let config = OracleConfig { cap, parallel: !sequential };
            oracle_count(&input, &group, forbidden.as_deref(), nowhere_zero, config)
        }
        Command::Gen { n, m, seed, output } => {
            let g = match m {
                Some(m) => generate_random_3_edge_connected(n, m, seed)?,
                None => generate_random_cubic(n, seed)?,
            };
            emit(output.as_deref(), &write_fdg(&g))
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
}

fn read_graph(path: &Path) -> Result<Multigraph> {
    parse_fdg(&read(path)?)
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

/// A 1-based id, optionally prefixed by `prefix` (`e5`, `v3`).
fn parse_id(token: &str, prefix: char, limit: usize, what: &str) -> Result<usize> {
    let t = token.trim();
    let digits = t.strip_prefix(prefix).unwrap_or(t);
    match digits.parse::<usize>() {
        Ok(i) if (1..=limit).contains(&i) => Ok(i - 1),
        _ => Err(Error::PreconditionViolated(format!("`{t}` is not a {what} id in 1..={limit}"))),
    }
}

fn parse_ids(list: &str, prefix: char, limit: usize, what: &str) -> Result<Vec<usize>> {
    list.split(',').filter(|s| !s.trim().is_empty()).map(|s| parse_id(s, prefix, limit, what)).collect()
}

fn edge_list(edges: impl IntoIterator<Item = usize>) -> String {
    edges.into_iter().map(|e| (e + 1).to_string()).collect::<Vec<_>>().join(",")
}

fn reduce(io: &GraphIo, map_path: Option<&Path>) -> Result<()> {
    let g = read_graph(&io.input)?;
    let map = reduce_to_cubic(&g)?;
    if let Some(path) = map_path {
        let mut rows = String::new();
        for (e, o) in map.edge_correspondence.iter().enumerate() {
            match o {
                Some(o) => writeln!(rows, "{} {}", e + 1, o + 1),
                None => writeln!(rows, "{} F", e + 1),
            }
            .expect("writing to a String");
        }
        fs::write(path, rows)?;
    }
    emit(io.output.as_deref(), &write_fdg(&map.cubic))
}

fn closure(io: &GraphIo, k: usize, set: &str) -> Result<()> {
    let g = read_graph(&io.input)?;
    let s: EdgeSet = parse_ids(set, 'e', g.edge_count(), "edge")?.into_iter().collect();
    let (r, cert) = k_closure(&g, &s, k)?;
    let mut out = format!("closure: {r}\n");
    for (i, step) in cert.steps.iter().enumerate() {
        writeln!(out, "step {}: cycle {} adds {}", i + 1, edge_list(step.cycle.edges()), step.new_edges)
            .expect("writing to a String");
    }
    emit(io.output.as_deref(), &out)
}

fn cycle_text(c: &Cycle) -> String {
    let vertices: Vec<String> = c.vertices().map(|v| (v + 1).to_string()).collect();
    format!("cycle: {}\nvertices: {}\n", edge_list(c.edges()), vertices.join(","))
}

fn peripheral(query: PeripheralQuery) -> Result<()> {
    let text = match query {
        PeripheralQuery::Cycle { input, at, edges } => {
            let g = read_graph(&input)?;
            let v = parse_id(&at, 'v', g.vertex_count(), "vertex")?;
            let pair = parse_ids(&edges, 'e', g.edge_count(), "edge")?;
            let [e0, e1] = pair[..] else {
                return Err(Error::PreconditionViolated("--edges takes exactly two edges".into()));
            };
            cycle_text(&peripheral_cycle_through(&g, v, e0, e1)?)
        }
        PeripheralQuery::Path { input, x, f, start } => {
            let g = read_graph(&input)?;
            let x = parse_ids(&x, 'v', g.vertex_count(), "vertex")?;
            let f = parse_id(&f, 'e', g.edge_count(), "edge")?;
            let start = start.map(|s| parse_id(&s, 'v', g.vertex_count(), "vertex")).transpose()?;
            let p = peripheral_path(&g, &x, f, start)?;
            let vertices: Vec<String> = p.path.vertices.iter().map(|v| (v + 1).to_string()).collect();
            format!(
                "path: {}\nvertices: {}\nattach: {},{}\n",
                edge_list(p.path.edges.iter().copied()),
                vertices.join(","),
                p.attach.0 + 1,
                p.attach.1 + 1
            )
        }
        PeripheralQuery::Longest { input, budget } => {
            let g = read_graph(&input)?;
            let (c, exhaustive) = longest_peripheral_cycle(&g, budget)?;
            format!("{}length: {}\nexhaustive: {}\n", cycle_text(&c), c.len(), if exhaustive { "yes" } else { "no" })
        }
    };
    emit(None, &text)
}

/// Follows `edges` from whichever end of the first edge closes the walk.
fn cycle_from_list(g: &Multigraph, list: &str) -> Result<Cycle> {
    let edges = parse_ids(list, 'e', g.edge_count(), "edge")?;
    let Some(&first) = edges.first() else {
        return Err(Error::PreconditionViolated("--cycle needs at least one edge".into()));
    };
    let (t, h) = g.endpoints(first);
    Cycle::from_edges(g, t, &edges).or_else(|_| Cycle::from_edges(g, h, &edges))
}

fn decompose(io: &GraphIo, cycle: Option<&str>, root: &str, count: usize, seed: u64) -> Result<()> {
    let g = read_graph(&io.input)?;
    let found: Vec<Decomposition> = match cycle {
        Some(list) => vec![decomposition_containing_cycle(&g, &cycle_from_list(&g, list)?)?],
        None => {
            let r = parse_id(root, 'v', g.vertex_count(), "vertex")?;
            enumerate_decompositions(&g, r, count, seed)?
        }
    };
    let mut out = String::new();
    for d in &found {
        writeln!(out, "T: {}\nB: {}", d.tree, d.base).expect("writing to a String");
    }
    emit(io.output.as_deref(), &out)
}

fn report(family: &FlowFamily) {
    eprintln!("{} flows (guarantee {}, {:?})", family.len(), family.guarantee, family.provenance);
}

fn nzflow(io: &GraphIo, group: &str, min: usize) -> Result<()> {
    let g = read_graph(&io.input)?;
    let spec: GroupSpec = group.parse()?;
    let family = match spec.moduli() {
        [2, 3] => many_nz_z2z3(&g, min)?,
        [2, 2] => many_nz_z2z2(&g, min)?,
        _ => return Err(Error::PreconditionViolated(format!("nzflow supports Z2xZ3 and Z2xZ2, not {spec}"))),
    };
    family.verify(&g)?;
    report(&family);
    emit(io.output.as_deref(), &write_flows(&family.flows))
}

fn read_forbidden(path: &Path, spec: &GroupSpec, m: usize) -> Result<ForbiddenAssignment> {
    parse_forbidden(&read(path)?, spec, m)
}

fn avoid(io: &GraphIo, group: &str, forbidden: &Path, options: Z6Options) -> Result<()> {
    let g = read_graph(&io.input)?;
    let spec: GroupSpec = group.parse()?;
    let f = read_forbidden(forbidden, &spec, g.edge_count())?;
    let family =
        if spec.order() == 6 { avoid_z6(&g, &f, &options)? } else { avoid_large_group(&g, &f, options.target)? };
    family.verify(&g)?;
    report(&family);
    emit(io.output.as_deref(), &write_flows(&family.flows))
}

fn verify(input: &Path, group: &str, forbidden: Option<&Path>, flows: &Path) -> Result<()> {
    let g = read_graph(input)?;
    let spec: GroupSpec = group.parse()?;
    let f = forbidden.map(|p| read_forbidden(p, &spec, g.edge_count())).transpose()?;
    let flows = parse_flows(&read(flows)?, &spec, g.edge_count())?;
    check_members(&g, &flows, &spec, f.as_ref())?;
    emit(None, &format!("ok: {} flows\n", flows.len()))
}

fn oracle_count(
    input: &Path,
    group: &str,
    forbidden: Option<&Path>,
    nowhere_zero: bool,
    config: OracleConfig,
) -> Result<()> {
    let g = read_graph(input)?;
    let spec: GroupSpec = group.parse()?;
    let count = match forbidden {
        Some(p) => count_avoiding(&g, &read_forbidden(p, &spec, g.edge_count())?, config)?,
        None if nowhere_zero => count_nowhere_zero(&g, &spec, config)?,
        None => enumerate_flows(&g, &spec, config.cap, |_| {})?,
    };
    emit(None, &format!("{count}\n"))
}
