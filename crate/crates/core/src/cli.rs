//! `intervalcol` command-line front end.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use crate::bounds::{bounds_for_graph, bounds_for_k2n};
use crate::coloring::verify_interval;
use crate::construction::{case_stats, construct, round_robin};
use crate::graph::Graph;
use crate::io::{emit_coloring, parse_coloring_with_graph, parse_graph};
use crate::search::{
    compute_w, find_interval_coloring, EdgeOrder, SearchConfig, SearchStatus, DEFAULT_NODE_BUDGET,
    MAX_SPAN,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const EXIT_CODES: &str = "\
Exit codes:
  0  success (verify: PASS)
  1  verify: FAIL; search --expect-found: no coloring found
  2  bad arguments or unreadable/malformed input";

#[derive(Debug, Parser)]
#[command(
    name = "intervalcol",
    version,
    about = "Interval edge colorings of complete graphs",
    after_help = EXIT_CODES
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write the (3n-2)-color interval coloring of K_2n as a coloring file.
    Construct {
        #[arg(long)]
        n: u32,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Emit the (2n-1)-color round-robin coloring instead.
        #[arg(long)]
        round_robin: bool,
    },
    /// Check a coloring file against the interval-coloring definition.
    Verify {
        /// Coloring file, `-` for stdin.
        #[arg(long, default_value = "-")]
        coloring: PathBuf,
        /// Graph file; defaults to the graph formed by the coloring's edges.
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// Print every known bound on W for K_2n or for a graph file.
    Bounds {
        #[arg(long, required_unless_present = "graph", conflicts_with = "graph")]
        n: Option<u32>,
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// Exact search for an interval t-coloring, or for W with --max.
    Search {
        /// Graph file, `-` for stdin.
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, required_unless_present = "max", conflicts_with = "max")]
        t: Option<u32>,
        /// Compute W, the largest feasible span.
        #[arg(long)]
        max: bool,
        /// Upper limit on the span probed by --max.
        #[arg(long, default_value_t = MAX_SPAN)]
        t_cap: u32,
        /// Node budget per probed span; 0 for unlimited.
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = OrderArg::Lex)]
        order: OrderArg,
        /// Write the witness coloring here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Exit 1 unless a coloring is found.
        #[arg(long)]
        expect_found: bool,
    },
    /// Per-case edge counts and color ranges of the K_2n construction.
    Cases {
        #[arg(long)]
        n: u32,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OrderArg {
    Lex,
    Colex,
}

impl From<OrderArg> for EdgeOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Lex => EdgeOrder::Lexicographic,
            OrderArg::Colex => EdgeOrder::Colex,
        }
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
}

impl Io<'_> {
    fn read(&mut self, path: &Path) -> anyhow::Result<String> {
        if path == Path::new("-") {
            let mut text = String::new();
            self.stdin
                .read_to_string(&mut text)
                .context("reading stdin")?;
            Ok(text)
        } else {
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
        }
    }

    fn emit(&mut self, out: Option<&Path>, text: &str) -> anyhow::Result<()> {
        match out {
            Some(path) => {
                fs::write(path, text).with_context(|| format!("writing {}", path.display()))
            }
            None => Ok(self.stdout.write_all(text.as_bytes())?),
        }
    }

    fn graph(&mut self, path: &Path) -> anyhow::Result<Graph> {
        let text = self.read(path)?;
        parse_graph(&text).with_context(|| format!("parsing graph {}", path.display()))
    }
}

/// Runs one invocation and returns its exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let mut io = Io { stdin, stdout };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e:#}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command, io: &mut Io<'_>) -> anyhow::Result<i32> {
    match command {
        Command::Construct {
            n,
            out,
            round_robin: baseline,
        } => {
            let coloring = if baseline {
                round_robin(n)?
            } else {
                construct(n)?
            };
            let g = Graph::complete(2 * n)?;
            let text = emit_coloring(&g, &coloring).expect("construction colors every edge");
            io.emit(out.as_deref(), &text)?;
            Ok(EXIT_OK)
        }
        Command::Verify { coloring, graph } => {
            let text = io.read(&coloring)?;
            let (implied, c) = parse_coloring_with_graph(&text)
                .with_context(|| format!("parsing coloring {}", coloring.display()))?;
            let g = match graph {
                Some(path) => {
                    let g = io.graph(&path)?;
                    if g.vertex_count() != implied.vertex_count() {
                        bail!(
                            "coloring declares {} vertices, graph has {}",
                            implied.vertex_count(),
                            g.vertex_count()
                        );
                    }
                    g
                }
                None => implied,
            };
            let report = verify_interval(&g, &c);
            if report.verdict() {
                writeln!(
                    io.stdout,
                    "PASS: interval coloring with span {} on {} vertices, {} edges",
                    c.span(),
                    g.vertex_count(),
                    g.edge_count()
                )?;
                Ok(EXIT_OK)
            } else {
                writeln!(io.stdout, "FAIL: {} violation(s)", report.violations.len())?;
                for v in &report.violations {
                    writeln!(io.stdout, "  {v}")?;
                }
                Ok(EXIT_FAIL)
            }
        }
        Command::Bounds { n, graph } => {
            let report = match (n, graph) {
                (Some(n), _) => bounds_for_k2n(n)?,
                (None, Some(path)) => bounds_for_graph(&io.graph(&path)?),
                (None, None) => unreachable!("clap requires --n or --graph"),
            };
            io.stdout.write_all(report.render().as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Search {
            graph,
            t,
            max,
            t_cap,
            budget,
            order,
            out,
            expect_found,
        } => {
            let g = io.graph(&graph)?;
            let order = EdgeOrder::from(order);
            let witness = if max {
                let res = compute_w(&g, t_cap, budget, order);
                writeln!(io.stdout, "w: {}", res.w)?;
                writeln!(io.stdout, "complete: {}", res.complete)?;
                for p in &res.probes {
                    writeln!(
                        io.stdout,
                        "probe t={} {} nodes={}",
                        p.t, p.status, p.nodes_explored
                    )?;
                }
                res.witness
            } else {
                let t = t.expect("clap requires --t or --max");
                let cfg = SearchConfig {
                    t,
                    node_budget: budget,
                    edge_order: order,
                };
                let outcome = find_interval_coloring(&g, &cfg)?;
                writeln!(io.stdout, "status: {}", outcome.status.name())?;
                writeln!(io.stdout, "t: {t}")?;
                writeln!(io.stdout, "nodes: {}", outcome.nodes_explored)?;
                match outcome.status {
                    SearchStatus::Found(c) => Some(c),
                    _ => None,
                }
            };
            match witness {
                Some(c) => {
                    let text = emit_coloring(&g, &c).expect("search colors every edge");
                    if out.is_none() {
                        writeln!(io.stdout)?;
                    }
                    io.emit(out.as_deref(), &text)?;
                    Ok(EXIT_OK)
                }
                None if expect_found => Ok(EXIT_FAIL),
                None => Ok(EXIT_OK),
            }
        }
        Command::Cases { n } => {
            let stats = case_stats(n)?;
            let mut total = 0;
            for s in &stats {
                total += s.edges;
                let colors = s
                    .colors
                    .map_or_else(|| "-".to_string(), |(lo, hi)| format!("{lo}..={hi}"));
                writeln!(
                    io.stdout,
                    "{}: edges {}, colors {}",
                    s.case, s.edges, colors
                )?;
            }
            writeln!(io.stdout, "total: {total} edges of K_{}", 2 * n)?;
            Ok(EXIT_OK)
        }
    }
}
