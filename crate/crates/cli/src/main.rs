mod ineq;
mod table;

use anyhow::{anyhow, bail, Context, Result};
use bondkit::graph::io::{parse_graph_text, write_graph_text, GraphFile};
use bondkit::graph::{cycle_edges, fixture, generate, outer_cycle, Fixture, Graph, GraphFamilyTag};
use bondkit::oracle::{is_interleaved, BondCut, Constraint, InterleaveMethod, InterleaveWitness, Oracle};
use bondkit::polytope::{self, FacetReport, LinearInequality, Lifted};
use bondkit::solver::{solve, SolveMode};
use bondkit::spqr::{spr_tree, EdgeKind, SkeletonKind};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const LONG_VERSION: &str = concat!(
    env!("CARGO_PKG_VERSION"),
    " (graph format 1, inequality format 1)"
);

#[derive(Parser, Debug)]
#[command(name = "bondkit", version = LONG_VERSION, about = "Maximum bonds and bond polytopes")]
struct Cli {
    /// Worker threads for bond enumeration; results do not depend on it.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    threads: u32,
    /// Human-readable tables instead of JSON.
    #[arg(long, global = true)]
    table: bool,
    /// Node cap for bond enumeration.
    #[arg(long, global = true, default_value_t = 24, value_parser = clap::value_parser!(u32).range(1..))]
    node_cap: u32,
    /// Edge cap for facet enumeration.
    #[arg(long, global = true, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..))]
    edge_cap: u32,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Maximum weight bond of a weighted graph file.
    Solve {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Auto)]
        mode: Mode,
        /// Accepted for reproducible runs; the solver is deterministic.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// SPR tree of a 2-connected graph.
    Spqr { graph: PathBuf },
    /// Brute-force bond enumeration.
    Oracle {
        #[command(subcommand)]
        cmd: OracleCmd,
    },
    /// Cycle analysis.
    Cycle {
        #[command(subcommand)]
        cmd: CycleCmd,
    },
    /// Bond polytope tools.
    Polytope {
        #[command(subcommand)]
        cmd: PolytopeCmd,
    },
    /// Writes a graph of a named family or a fixture.
    Gen {
        /// cycle, wheel, wagner, complete (with a size), prism, k3, k33,
        /// k5-e, or a fixture: hex-facet, hex-facet-plus-edge, two-squares.
        family: String,
        size: Option<usize>,
        /// Output file; stdout when absent.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Runs the built-in reproduction checks.
    Suite {
        /// Id substring or check number.
        #[arg(long)]
        filter: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Auto,
    Oracle,
    K5e,
}

#[derive(Subcommand, Debug)]
enum OracleCmd {
    /// Streams every bond as a JSON line.
    Bonds { graph: PathBuf },
    /// Maximum weight bond by enumeration.
    Max {
        graph: PathBuf,
        #[arg(long, value_delimiter = ',')]
        forced_in: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        forced_out: Vec<usize>,
        /// Two nodes the bond must separate, as `u,v`.
        #[arg(long, value_delimiter = ',', num_args = 1)]
        separate: Vec<usize>,
    },
    /// Largest number of cycle edges met by one bond.
    CycleIntersect {
        graph: PathBuf,
        #[arg(long)]
        cycle: String,
    },
}

#[derive(Subcommand, Debug)]
enum CycleCmd {
    /// Decides whether a cycle is interleaved.
    Classify {
        graph: PathBuf,
        /// Cycle name from the graph file or a node list `v1,v2,...`.
        #[arg(long)]
        cycle: String,
        #[arg(long, value_enum, default_value_t = Method::Bonds)]
        method: Method,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Bonds,
    Paths,
}

#[derive(Args, Debug)]
struct IneqArg {
    graph: PathBuf,
    /// Family spec (`nonneg:E`, `upper:E`, `cycle-homog:C:E`, `cycle-sum:C`,
    /// `gen-cycle-sum:C:K`) or an inequality JSON file.
    #[arg(long)]
    ineq: String,
}

#[derive(Subcommand, Debug)]
enum PolytopeCmd {
    /// Validity, tightness and face dimension of an inequality.
    Check(IneqArg),
    /// Streams every facet of the bond polytope as a JSON line.
    Facets {
        graph: PathBuf,
        /// Facets of the cut polytope instead.
        #[arg(long)]
        cut: bool,
    },
    /// Compares a candidate description with the enumerated facets.
    VerifyDescription {
        graph: PathBuf,
        /// Inequality file (JSON array or lines).
        #[arg(long, conflicts_with = "family", required_unless_present = "family")]
        description: Option<PathBuf>,
        #[arg(long, value_enum)]
        family: Option<Description>,
    },
    /// Facet-preserving graph operations.
    Lift {
        #[command(subcommand)]
        op: LiftCmd,
    },
    /// Switches an inequality at a node set.
    Switch {
        #[command(flatten)]
        input: IneqArg,
        #[arg(long, value_delimiter = ',')]
        side: Vec<usize>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Description {
    /// Cycle graph 0..n.
    Cycle,
    /// Wheel with rim 0..n-1 and centre n-1.
    Wheel,
    EdgeCycle,
}

#[derive(Args, Debug)]
struct LiftOut {
    /// Writes the new graph here.
    #[arg(long)]
    out_graph: Option<PathBuf>,
    /// Writes the new inequality here.
    #[arg(long)]
    out_ineq: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum LiftCmd {
    NodeSplit {
        #[command(flatten)]
        input: IneqArg,
        #[arg(long)]
        node: usize,
        /// Edges staying at the node and edges moving to the new node, as
        /// `a,b;c` (either group may be empty).
        #[arg(long)]
        groups: String,
        #[command(flatten)]
        out: LiftOut,
    },
    Triangle {
        #[command(flatten)]
        input: IneqArg,
        #[arg(long)]
        node: usize,
        /// Three edge groups as `a,b;c;d,e` (groups may be empty).
        #[arg(long)]
        groups: String,
        #[command(flatten)]
        out: LiftOut,
    },
    Subdivide {
        #[command(flatten)]
        input: IneqArg,
        #[arg(long)]
        edge: usize,
        #[arg(long, default_value_t = 2)]
        pieces: usize,
        #[command(flatten)]
        out: LiftOut,
    },
    ContractPath {
        #[command(flatten)]
        input: IneqArg,
        #[arg(long, value_delimiter = ',')]
        path: Vec<usize>,
        #[command(flatten)]
        out: LiftOut,
    },
}

/// A failure of the toolkit on valid input, reported with exit code 2.
#[derive(Debug)]
struct Domain(bondkit::Error);

impl std::fmt::Display for Domain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

impl std::error::Error for Domain {}

fn domain<T>(r: bondkit::Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        bondkit::Error::Parse { .. } => anyhow!(e),
        e => anyhow!(Domain(e)),
    })
}

struct Ctx {
    threads: usize,
    node_cap: usize,
    edge_cap: usize,
    table: bool,
}

impl Ctx {
    fn emit(&self, v: &Value) {
        if self.table {
            print!("{}", table::render(v));
        } else {
            println!("{}", serde_json::to_string_pretty(v).expect("json"));
        }
    }

    fn emit_stream(&self, items: &[Value]) {
        if self.table {
            print!("{}", table::render(&Value::Array(items.to_vec())));
        } else {
            for it in items {
                println!("{}", serde_json::to_string(it).expect("json"));
            }
        }
    }

    fn oracle<'g>(&self, g: &'g Graph) -> Result<Oracle<'g>> {
        Ok(domain(Oracle::with_cap(g, self.node_cap))?.threads(self.threads))
    }
}

fn read_graph(path: &Path) -> Result<GraphFile> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_graph_text(&text).with_context(|| format!("parsing {}", path.display()))
}

fn parse_cycle(file: &GraphFile, arg: &str) -> Result<Vec<usize>> {
    if let Some(c) = file.cycle(arg) {
        return Ok(c.to_vec());
    }
    let nodes = arg
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| anyhow!("--cycle {arg:?} is neither a cycle name nor a node list"))?;
    cycle_edges(&file.graph, &nodes).map_err(|e| anyhow!("--cycle {arg:?}: {e}"))?;
    Ok(nodes)
}

fn bond_json(b: &BondCut, w: &[i64]) -> Value {
    json!({"side": b.side, "edges": b.edges, "weight": b.weight(w)})
}

fn report_json(g: &Graph, ineq: &LinearInequality, r: &FacetReport) -> Value {
    json!({
        "inequality": ineq::to_json(g, ineq),
        "valid": r.valid,
        "tight": r.tight,
        "face_dim": r.face_dim,
        "dim": g.edge_count(),
        "facet": r.facet_defining,
        "tight_bonds": r.tight_bond_count,
        "max_value": r.max_value.to_string(),
        "violating_bond": r.violating_bond.as_ref().map(|b| json!({"side": b.side, "edges": b.edges})),
    })
}

fn cmd_solve(ctx: &Ctx, path: &Path, mode: Mode) -> Result<()> {
    let file = read_graph(path)?;
    let w = file.weights_or_unit();
    let m = match mode {
        Mode::Auto => SolveMode::Auto,
        Mode::Oracle => SolveMode::Oracle,
        Mode::K5e => SolveMode::K5e,
    };
    let r = domain(solve(&file.graph, &w, m))?;
    let s = &r.stats;
    ctx.emit(&json!({
        "value": r.result.value,
        "side": r.result.bond.side,
        "edges": r.result.bond.edges,
        "mode": format!("{mode:?}").to_lowercase(),
        "skeleton_stats": {
            "blocks": s.blocks, "bridges": s.bridges, "s": s.s, "p": s.p, "r": s.r,
            "wheels": s.wheels, "prisms": s.prisms, "k33": s.k33s, "other_r": s.other_r,
        },
    }));
    Ok(())
}

fn cmd_spqr(ctx: &Ctx, path: &Path) -> Result<()> {
    let file = read_graph(path)?;
    let t = domain(spr_tree(&file.graph))?;
    let skeletons: Vec<Value> = t
        .skeletons
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let kind = match s.kind {
                SkeletonKind::S => "S",
                SkeletonKind::P => "P",
                SkeletonKind::R => "R",
            };
            let edges: Vec<String> = s
                .edges
                .iter()
                .map(|e| match e.kind {
                    EdgeKind::Real(id) => format!("real:{id}"),
                    EdgeKind::Virtual(l) => format!("virtual:{l}"),
                })
                .collect();
            json!({"id": i, "kind": kind, "node_count": s.nodes.len(), "nodes": s.nodes, "edges": edges})
        })
        .collect();
    let links: Vec<Value> = t
        .links
        .iter()
        .enumerate()
        .map(|(i, l)| json!({"link": i, "skeletons": [l.skeletons.0, l.skeletons.1], "ends": [l.ends.0, l.ends.1]}))
        .collect();
    ctx.emit(&json!({"skeletons": skeletons, "links": links}));
    Ok(())
}

fn cmd_oracle(ctx: &Ctx, cmd: OracleCmd) -> Result<()> {
    match cmd {
        OracleCmd::Bonds { graph } => {
            let file = read_graph(&graph)?;
            let w = file.weights_or_unit();
            let o = ctx.oracle(&file.graph)?;
            let items: Vec<Value> = o.bonds().map(|b| bond_json(&b, &w)).collect();
            ctx.emit_stream(&items);
        }
        OracleCmd::Max {
            graph,
            forced_in,
            forced_out,
            separate,
        } => {
            let file = read_graph(&graph)?;
            let w = file.weights_or_unit();
            let separate = match separate.as_slice() {
                [] => None,
                [u, v] => Some((*u, *v)),
                _ => bail!("--separate takes exactly two nodes"),
            };
            let c = Constraint {
                forced_in,
                forced_out,
                separate,
            };
            let r = domain(ctx.oracle(&file.graph)?.max_bond(&w, &c))?;
            ctx.emit(&json!({"value": r.value, "side": r.bond.side, "edges": r.bond.edges}));
        }
        OracleCmd::CycleIntersect { graph, cycle } => {
            let file = read_graph(&graph)?;
            let c = parse_cycle(&file, &cycle)?;
            let (k, b) = domain(ctx.oracle(&file.graph)?.max_cycle_intersection(&c))?;
            ctx.emit(&json!({"cycle": c, "max_intersection": k, "side": b.side, "edges": b.edges}));
        }
    }
    Ok(())
}

fn cmd_cycle(ctx: &Ctx, cmd: CycleCmd) -> Result<()> {
    let CycleCmd::Classify { graph, cycle, method } = cmd;
    let file = read_graph(&graph)?;
    let c = parse_cycle(&file, &cycle)?;
    let m = match method {
        Method::Bonds => InterleaveMethod::Bonds,
        Method::Paths => InterleaveMethod::Paths,
    };
    let r = domain(is_interleaved(&file.graph, &c, m))?;
    let witness = match &r.witness {
        None => Value::Null,
        Some(InterleaveWitness::Paths { quad, first, second }) => {
            json!({"quad": quad, "first": first, "second": second})
        }
        Some(InterleaveWitness::Bond(b)) => json!({"side": b.side, "edges": b.edges}),
    };
    ctx.emit(&json!({
        "cycle": c,
        "classification": if r.interleaved { "interleaved" } else { "non-interleaved" },
        "interleaved": r.interleaved,
        "method": format!("{method:?}").to_lowercase(),
        "witness": witness,
    }));
    Ok(())
}

fn load_ineq(input: &IneqArg) -> Result<(GraphFile, LinearInequality)> {
    let file = read_graph(&input.graph)?;
    let ineq = ineq::resolve(&file.graph, &file.cycles, &input.ineq)?;
    Ok((file, ineq))
}

fn write_lifted(ctx: &Ctx, l: &Lifted, out: &LiftOut) -> Result<()> {
    let gfile = GraphFile::new(l.graph.clone());
    let ineq_json = ineq::to_json(&l.graph, &l.inequality);
    if let Some(p) = &out.out_graph {
        std::fs::write(p, write_graph_text(&gfile)).with_context(|| format!("writing {}", p.display()))?;
    }
    if let Some(p) = &out.out_ineq {
        let text = serde_json::to_string_pretty(&ineq_json)? + "\n";
        std::fs::write(p, text).with_context(|| format!("writing {}", p.display()))?;
    }
    let coeffs: Vec<String> = l.coeffs.iter().map(|c| c.to_string()).collect();
    ctx.emit(&json!({
        "nodes": l.graph.node_count(),
        "edges": l.graph.edges().iter().map(|&(u, v)| format!("{u}-{v}")).collect::<Vec<_>>(),
        "coeffs": coeffs,
        "rhs": l.rhs.to_string(),
        "inequality": ineq_json,
        "omegas": l.omegas,
        "verified": match l.verified() {
            Some(true) => "facet",
            Some(false) => "not-facet",
            None => "unverified",
        },
    }));
    Ok(())
}

fn parse_groups(s: &str, count: usize) -> Result<Vec<Vec<usize>>> {
    let gs: Vec<Vec<usize>> = s
        .split(';')
        .map(|grp| {
            grp.split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| anyhow!("bad edge id {t:?} in --groups")))
                .collect()
        })
        .collect::<Result<_>>()?;
    if gs.len() != count {
        bail!("--groups needs {count} groups separated by ';', found {}", gs.len());
    }
    Ok(gs)
}

fn cmd_lift(ctx: &Ctx, op: LiftCmd) -> Result<()> {
    match op {
        LiftCmd::NodeSplit {
            input,
            node,
            groups,
            out,
        } => {
            let (f, a) = load_ineq(&input)?;
            let gs = parse_groups(&groups, 2)?;
            let l = domain(polytope::lift_node_split(&f.graph, &a, node, [&gs[0], &gs[1]]))?;
            write_lifted(ctx, &l, &out)
        }
        LiftCmd::Triangle {
            input,
            node,
            groups,
            out,
        } => {
            let (f, a) = load_ineq(&input)?;
            let gs = parse_groups(&groups, 3)?;
            let l = domain(polytope::lift_triangle(&f.graph, &a, node, [&gs[0], &gs[1], &gs[2]]))?;
            write_lifted(ctx, &l, &out)
        }
        LiftCmd::Subdivide {
            input,
            edge,
            pieces,
            out,
        } => {
            let (f, a) = load_ineq(&input)?;
            let l = domain(polytope::lift_subdivide(&f.graph, &a, edge, pieces))?;
            write_lifted(ctx, &l, &out)
        }
        LiftCmd::ContractPath { input, path, out } => {
            let (f, a) = load_ineq(&input)?;
            let l = domain(polytope::contract_path_to_edge(&f.graph, &a, &path))?;
            write_lifted(ctx, &l, &out)
        }
    }
}

fn cmd_polytope(ctx: &Ctx, cmd: PolytopeCmd) -> Result<()> {
    match cmd {
        PolytopeCmd::Check(input) => {
            let (f, a) = load_ineq(&input)?;
            let r = domain(polytope::check_inequality_with_cap(&f.graph, &a, ctx.node_cap))?;
            ctx.emit(&report_json(&f.graph, &a, &r));
        }
        PolytopeCmd::Facets { graph, cut } => {
            let file = read_graph(&graph)?;
            let g = &file.graph;
            let facets = if cut {
                if g.edge_count() > ctx.edge_cap {
                    return Err(anyhow!(Domain(bondkit::Error::SizeCapExceeded {
                        what: "facet enumeration",
                        size: g.edge_count(),
                        cap: ctx.edge_cap,
                    })));
                }
                domain(polytope::cut_facet_enumeration(g))?
            } else {
                domain(polytope::facet_enumeration_with_cap(g, ctx.edge_cap))?
            };
            let items: Vec<Value> = facets.iter().map(|a| ineq::to_json(g, a)).collect();
            ctx.emit_stream(&items);
        }
        PolytopeCmd::VerifyDescription {
            graph,
            description,
            family,
        } => {
            let file = read_graph(&graph)?;
            let g = &file.graph;
            let candidate = match (description, family) {
                (Some(p), _) => ineq::read_file(g, &p)?,
                (None, Some(Description::Cycle)) => {
                    let d = domain(polytope::cn_description(g.node_count()))?;
                    if *g != domain(bondkit::graph::cycle(g.node_count()))? {
                        bail!("graph is not the cycle 0..n in generator numbering");
                    }
                    d
                }
                (None, Some(Description::Wheel)) => {
                    let n = g.node_count().saturating_sub(1);
                    if *g != domain(bondkit::graph::wheel(n))? {
                        bail!("graph is not a wheel in generator numbering");
                    }
                    domain(polytope::wheel_description(n))?
                }
                (None, Some(Description::EdgeCycle)) => domain(polytope::edge_cycle_description(g))?,
                (None, None) => bail!("give --description or --family"),
            };
            if g.edge_count() > ctx.edge_cap {
                return Err(anyhow!(Domain(bondkit::Error::SizeCapExceeded {
                    what: "facet enumeration",
                    size: g.edge_count(),
                    cap: ctx.edge_cap,
                })));
            }
            let d = domain(polytope::verify_description(g, &candidate))?;
            let list = |v: &[LinearInequality]| -> Vec<Value> { v.iter().map(|a| ineq::to_json(g, a)).collect() };
            ctx.emit(&json!({
                "equal": d.equal,
                "candidates": candidate.len(),
                "missing": list(&d.missing),
                "extra": list(&d.extra),
            }));
        }
        PolytopeCmd::Lift { op } => cmd_lift(ctx, op)?,
        PolytopeCmd::Switch { input, side } => {
            let (f, a) = load_ineq(&input)?;
            let s = domain(polytope::switch(&a, &f.graph, &side))?;
            ctx.emit(&ineq::to_json(&f.graph, &s));
        }
    }
    Ok(())
}

fn cmd_gen(family: &str, size: Option<usize>, out: Option<&Path>) -> Result<()> {
    let file = if let Ok(fx) = family.parse::<Fixture>() {
        let fg = fixture(fx);
        GraphFile {
            graph: fg.graph,
            weights: None,
            cycles: fg.cycles,
        }
    } else {
        let spec = match size {
            Some(n) => format!("{family}:{n}"),
            None => family.to_string(),
        };
        let tag: GraphFamilyTag = spec.parse().map_err(|e| anyhow!("{e}"))?;
        let mut f = GraphFile::new(domain(generate(tag))?);
        if let Some(c) = outer_cycle(tag) {
            f.cycles.push(("outer".into(), c));
        }
        f
    };
    let text = write_graph_text(&file);
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_suite(ctx: &Ctx, filter: Option<&str>) -> Result<bool> {
    let outcomes = bondkit::suite::run(filter);
    if outcomes.is_empty() {
        bail!("no check matches {:?}", filter.unwrap_or(""));
    }
    if ctx.table {
        for o in &outcomes {
            println!(
                "[{:>2}] {:<20} {} ({:.2?}) {}",
                o.number,
                o.id,
                if o.passed { "PASS" } else { "FAIL" },
                o.elapsed,
                o.detail
            );
        }
    } else {
        for o in &outcomes {
            let v = json!({
                "number": o.number,
                "id": o.id,
                "title": o.title,
                "passed": o.passed,
                "detail": o.detail,
                "seconds": o.elapsed.as_secs_f64(),
            });
            println!("{}", serde_json::to_string(&v)?);
        }
    }
    Ok(outcomes.iter().all(|o| o.passed))
}

fn run(cli: Cli) -> Result<ExitCode> {
    let ctx = Ctx {
        threads: cli.threads as usize,
        node_cap: cli.node_cap as usize,
        edge_cap: cli.edge_cap as usize,
        table: cli.table,
    };
    match cli.cmd {
        Cmd::Solve { graph, mode, seed: _ } => cmd_solve(&ctx, &graph, mode)?,
        Cmd::Spqr { graph } => cmd_spqr(&ctx, &graph)?,
        Cmd::Oracle { cmd } => cmd_oracle(&ctx, cmd)?,
        Cmd::Cycle { cmd } => cmd_cycle(&ctx, cmd)?,
        Cmd::Polytope { cmd } => cmd_polytope(&ctx, cmd)?,
        Cmd::Gen { family, size, out } => cmd_gen(&family, size, out.as_deref())?,
        Cmd::Suite { filter } => {
            if !cmd_suite(&ctx, filter.as_deref())? {
                return Ok(ExitCode::from(2));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<Domain>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
