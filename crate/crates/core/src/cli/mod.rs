//! Command-line front end. [`run`] parses arguments, does the work and
//! returns the process exit code: 0 on success, 2 when a coloring or set
//! fails verification (its certificate is still written), 1 on usage or
//! precondition errors.

pub mod certificate;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bounds::fg_upper_bound;
use crate::circulant::{CirculantDigraph, CirculantGraph};
use crate::coloring::{verify_digraph_coloring, verify_vertex_coloring};
use crate::constructions::{search_step_order, ResidueWalkPlan, StepOrder};
use crate::error::{Error, Result};
use crate::numtheory::classify_residues;
use crate::planes::{chord_table, find_difference_set, plane_edge_coloring, DifferenceSet, DifferenceSetTable};
use crate::search::{
    exact_achromatic, exact_achromatic_index, exact_diachromatic, exact_dichromatic_number, exact_chromatic_number,
    SearchBudget,
};

use certificate::{Certificate, SearchSummary};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_UNVERIFIED: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "chroma", version, about = "Complete colorings of circulant graphs and digraphs")]
pub struct Cli {
    /// Cap on worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Write the JSON certificate here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also write a Graphviz DOT rendering.
    #[arg(long)]
    pub dot: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Quadratic residues, non-residues and length representatives mod p.
    Qr {
        #[arg(long)]
        p: usize,
    },
    /// Build a circulant graph or digraph and report its size.
    Graph {
        #[arg(long)]
        n: usize,
        #[arg(long = "J", value_delimiter = ',', required = true)]
        lengths: Vec<usize>,
        #[arg(long)]
        directed: bool,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Residue-walk coloring of C_n(1,a) with 4q+1 colors.
    ColorGraph(WalkArgs),
    /// Residue-walk coloring of the digraph C_n(1,a) with 4q+3 colors.
    ColorDigraph(WalkArgs),
    /// Plane edge coloring of C_n(J) from a difference set.
    EdgeColor {
        #[arg(long)]
        n: usize,
        /// Difference set; looked up in the table when omitted.
        #[arg(long = "D", value_delimiter = ',')]
        d: Option<Vec<usize>>,
        #[arg(long = "J", value_delimiter = ',', required = true)]
        lengths: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Upper bounds for an r-regular graph on n vertices.
    Bounds {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Difference sets and chord tables.
    #[command(subcommand)]
    Plane(PlaneCommand),
    /// Exact extremal colorings by exhaustive search.
    Brute {
        problem: Problem,
        #[arg(long)]
        n: usize,
        #[arg(long = "J", value_delimiter = ',', required = true)]
        lengths: Vec<usize>,
        /// Wall-clock limit in seconds.
        #[arg(long, default_value_t = 300)]
        time_limit: u64,
        #[arg(long, default_value_t = 12)]
        max_vertices: usize,
        #[arg(long, default_value_t = 18)]
        max_edges: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Re-verify a certificate and compare with its stored flags.
    Verify {
        #[arg(long)]
        cert: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct WalkArgs {
    #[arg(long)]
    pub q: usize,
    #[arg(long)]
    pub a: usize,
    /// Search step orders when the ascending one fails.
    #[arg(long)]
    pub search: bool,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Subcommand)]
pub enum PlaneCommand {
    /// Table lookup, then exhaustive search, for order q.
    FindDs {
        #[arg(long)]
        q: usize,
        /// Skip the table and search.
        #[arg(long)]
        search: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that D is a planar difference set mod n.
    CheckDs {
        #[arg(long)]
        n: usize,
        #[arg(long = "D", value_delimiter = ',', required = true)]
        d: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Chords of D with their lengths.
    Chords {
        #[arg(long)]
        n: usize,
        #[arg(long = "D", value_delimiter = ',')]
        d: Option<Vec<usize>>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Problem {
    Alpha,
    Dac,
    Alpha1,
    Chi,
    Dc,
}

impl Problem {
    fn name(self) -> &'static str {
        match self {
            Problem::Alpha => "alpha",
            Problem::Dac => "dac",
            Problem::Alpha1 => "alpha1",
            Problem::Chi => "chi",
            Problem::Dc => "dc",
        }
    }
}

/// Parses `args` (program name first) and executes, writing to the given
/// streams.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let outcome = match cli.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => {
                let mut buffer = Vec::new();
                let result = pool.install(|| execute(&cli.command, &mut buffer));
                let _ = stdout.write_all(&buffer);
                result
            }
            Err(e) => Err(Error::PreconditionFailed(e.to_string())),
        },
        None => execute(&cli.command, stdout),
    };
    match outcome {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_UNVERIFIED,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// [`run_with`] on the process streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with(args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

fn emit(cert: &Certificate, out: Option<&Path>, stdout: &mut dyn Write) -> Result<()> {
    let text = cert.to_json();
    match out {
        Some(path) => {
            std::fs::write(path, &text)?;
            let k = cert.k.map_or_else(|| "-".to_string(), |k| k.to_string());
            writeln!(stdout, "{:?} k={k} verified={} -> {}", cert.kind, cert.verified.verified, path.display())?;
        }
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn write_dot(path: Option<&Path>, text: impl FnOnce() -> String) -> Result<()> {
    if let Some(path) = path {
        std::fs::write(path, text())?;
    }
    Ok(())
}

fn join(values: &[usize]) -> String {
    values.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn table_set(n: usize, d: &Option<Vec<usize>>) -> Result<DifferenceSet> {
    match d {
        Some(d) => DifferenceSet::new(d, n),
        None => DifferenceSetTable::from_env()?
            .lookup(n)
            .unwrap_or_else(|| Err(Error::PreconditionFailed(format!("no difference set known for n = {n}; pass --D")))),
    }
}

/// Returns whether the result verified.
fn execute(command: &Command, stdout: &mut dyn Write) -> Result<bool> {
    match command {
        Command::Qr { p } => {
            let r = classify_residues(*p)?;
            writeln!(stdout, "p = {p} (≡ {} mod 4)", r.residue_class)?;
            writeln!(stdout, "qr = {}", join(&r.qr))?;
            writeln!(stdout, "nqr = {}", join(&r.nqr))?;
            writeln!(stdout, "length_reps = {}", join(&r.length_reps))?;
            Ok(true)
        }
        Command::Graph { n, lengths, directed, dot } => {
            if *directed {
                let d = CirculantDigraph::new(*n, lengths.iter().copied())?;
                writeln!(stdout, "{}: {} vertices, {} arcs, out-degree {}", d.label(), d.n(), d.arc_count(), d.out_degree())?;
                write_dot(dot.as_deref(), || d.to_dot())?;
            } else {
                let g = CirculantGraph::new(*n, lengths.iter().copied())?;
                writeln!(stdout, "{}: {} vertices, {} edges, degree {}", g.label(), g.n(), g.edge_count(), g.degree())?;
                write_dot(dot.as_deref(), || g.to_dot())?;
            }
            Ok(true)
        }
        Command::ColorGraph(args) => color_graph(args, stdout),
        Command::ColorDigraph(args) => color_digraph(args, stdout),
        Command::EdgeColor { n, d, lengths, out } => {
            let ds = table_set(*n, d)?;
            let pc = plane_edge_coloring(&ds, lengths)?;
            let mut cert = Certificate::edge_coloring(
                &pc.graph,
                &pc.coloring,
                &pc.report,
                "cyclic projective plane: each line colored by a fixed matching decomposition of its chords",
            );
            cert.parameters.q = Some(ds.q());
            cert.parameters.d = Some(ds.elements().to_vec());
            cert.parameters.t = Some(pc.decomposition.t);
            emit(&cert, out.as_deref(), stdout)?;
            Ok(cert.verified.verified)
        }
        Command::Bounds { n, r, out } => {
            if *n < 3 || !(1..*n).contains(r) {
                return Err(Error::PreconditionFailed("need n ≥ 3 and 1 ≤ r ≤ n−1".into()));
            }
            emit(&Certificate::bound(fg_upper_bound(*n, *r)), out.as_deref(), stdout)?;
            Ok(true)
        }
        Command::Plane(cmd) => plane(cmd, stdout),
        Command::Brute { problem, n, lengths, time_limit, max_vertices, max_edges, output } => {
            let budget = SearchBudget {
                max_vertices: *max_vertices,
                max_edges: *max_edges,
                time_limit: Duration::from_secs(*time_limit),
            };
            brute(*problem, *n, lengths, &budget, output, stdout)
        }
        Command::Verify { cert } => {
            let stored = Certificate::from_json(&std::fs::read_to_string(cert)?)?;
            let (flags, violations) = stored.reverify()?;
            let same = flags == stored.verified && violations == stored.violations;
            writeln!(
                stdout,
                "{:?}: verified={} proper={} complete={} acyclic={} reproduces-stored-flags={same}",
                stored.kind,
                flags.verified,
                flags.proper,
                flags.complete,
                flags.acyclic.map_or_else(|| "-".to_string(), |a| a.to_string()),
            )?;
            Ok(same && flags.verified)
        }
    }
}

fn walk_plan(plan: ResidueWalkPlan, search: bool, holds: impl Fn(&ResidueWalkPlan) -> Result<bool>) -> Result<ResidueWalkPlan> {
    if !search || holds(&plan)? {
        return Ok(plan);
    }
    let node_limit = match StepOrder::DEFAULT_SEARCH {
        StepOrder::Searched { node_limit } => node_limit,
        StepOrder::Ascending => 0,
    };
    Ok(search_step_order(&plan, node_limit).unwrap_or(plan))
}

fn color_graph(args: &WalkArgs, stdout: &mut dyn Write) -> Result<bool> {
    let plan = walk_plan(ResidueWalkPlan::graph(args.q, args.a)?, args.search, |p| {
        Ok(p.build_graph()?.report.holds())
    })?;
    let c = plan.build_graph()?;
    let mut cert = Certificate::vertex_coloring(
        &c.graph,
        &c.coloring,
        &c.report,
        "residue walk: segments stepping through the quadratic residues mod 4q+1",
    );
    cert.parameters.q = Some(plan.q);
    cert.parameters.a = Some(plan.a);
    cert.parameters.steps = Some(plan.steps.clone());
    emit(&cert, args.output.out.as_deref(), stdout)?;
    write_dot(args.output.dot.as_deref(), || c.graph.to_dot_colored(Some(&c.coloring)))?;
    debug_assert_eq!(verify_vertex_coloring(&c.graph, &c.coloring)?.holds(), c.report.holds());
    Ok(c.report.holds())
}

fn color_digraph(args: &WalkArgs, stdout: &mut dyn Write) -> Result<bool> {
    let plan = walk_plan(ResidueWalkPlan::digraph(args.q, args.a)?, args.search, |p| {
        Ok(p.build_digraph()?.report.holds())
    })?;
    let c = plan.build_digraph()?;
    let mut cert = Certificate::digraph_coloring(
        &c.graph,
        &c.coloring,
        &c.report,
        "residue walk: segments stepping through the quadratic residues mod 4q+3",
    );
    cert.parameters.q = Some(plan.q);
    cert.parameters.a = Some(plan.a);
    cert.parameters.steps = Some(plan.steps.clone());
    emit(&cert, args.output.out.as_deref(), stdout)?;
    write_dot(args.output.dot.as_deref(), || c.graph.to_dot_colored(Some(&c.coloring)))?;
    debug_assert_eq!(verify_digraph_coloring(&c.graph, &c.coloring)?.holds(), c.report.holds());
    Ok(c.report.holds())
}

fn plane(cmd: &PlaneCommand, stdout: &mut dyn Write) -> Result<bool> {
    match cmd {
        PlaneCommand::FindDs { q, search, out } => {
            let (ds, provenance) = if *search {
                (crate::planes::search_difference_set(*q)?, "exhaustive backtracking search")
            } else {
                let table = DifferenceSetTable::from_env()?;
                let n = q * q + q + 1;
                let source = if table.get(n).is_some() { "difference-set table" } else { "exhaustive backtracking search" };
                (find_difference_set(*q, &table)?, source)
            };
            let cert = Certificate::difference_set(ds.n(), ds.elements(), provenance);
            emit(&cert, out.as_deref(), stdout)?;
            Ok(cert.verified.verified)
        }
        PlaneCommand::CheckDs { n, d, out } => {
            if let Err(e) = DifferenceSet::new(d, *n) {
                writeln!(stdout, "not a planar difference set: {e}")?;
            }
            let cert = Certificate::difference_set(*n, d, "user supplied");
            emit(&cert, out.as_deref(), stdout)?;
            Ok(cert.verified.verified)
        }
        PlaneCommand::Chords { n, d } => {
            let ds = table_set(*n, d)?;
            writeln!(stdout, "D = {{{}}} mod {n}", join(ds.elements()))?;
            let table = chord_table(&ds);
            for length in 1..=n / 2 {
                let c = table.by_length(length).expect("every length occurs once");
                writeln!(stdout, "{length}: {{{}, {}}}", c.a, c.b)?;
            }
            Ok(true)
        }
    }
}

fn brute(
    problem: Problem,
    n: usize,
    lengths: &[usize],
    budget: &SearchBudget,
    output: &Output,
    stdout: &mut dyn Write,
) -> Result<bool> {
    let provenance = "exhaustive search over restricted-growth strings";
    let (witness, value, proof, dot) = match problem {
        Problem::Alpha | Problem::Chi => {
            let g = CirculantGraph::new(n, lengths.iter().copied())?;
            let r = if problem == Problem::Alpha {
                exact_achromatic(&g, budget)?
            } else {
                exact_chromatic_number(&g, budget)?
            };
            let report = verify_vertex_coloring(&g, &r.witness)?;
            let dot = g.to_dot_colored(Some(&r.witness));
            (Certificate::vertex_coloring(&g, &r.witness, &report, provenance), r.value, r.proof_of_optimality, dot)
        }
        Problem::Dac | Problem::Dc => {
            let d = CirculantDigraph::new(n, lengths.iter().copied())?;
            let r = if problem == Problem::Dac {
                exact_diachromatic(&d, budget)?
            } else {
                exact_dichromatic_number(&d, budget)?
            };
            let report = verify_digraph_coloring(&d, &r.witness)?;
            let dot = d.to_dot_colored(Some(&r.witness));
            (Certificate::digraph_coloring(&d, &r.witness, &report, provenance), r.value, r.proof_of_optimality, dot)
        }
        Problem::Alpha1 => {
            let g = CirculantGraph::new(n, lengths.iter().copied())?;
            let r = exact_achromatic_index(&g, budget)?;
            let report = crate::coloring::verify_edge_coloring(&g, &r.witness)?;
            let dot = g.to_dot();
            (Certificate::edge_coloring(&g, &r.witness, &report, provenance), r.value, r.proof_of_optimality, dot)
        }
    };
    let summary = SearchSummary { problem: problem.name().to_string(), value, proof_of_optimality: proof };
    let mut cert = Certificate::exact_search(witness, summary);
    if matches!(problem, Problem::Chi | Problem::Dc) {
        // minimum colorings need not be complete
        cert.verified.verified = cert.verified.acyclic.unwrap_or(cert.verified.proper);
    }
    emit(&cert, output.out.as_deref(), stdout)?;
    write_dot(output.dot.as_deref(), || dot)?;
    Ok(cert.verified.verified)
}
