use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "antimagic", version, about = "Local antimagic labelings: build, verify, solve")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate a graph from a named family.
    Gen(GenArgs),
    /// Run a labeling construction.
    #[command(subcommand)]
    Label(LabelCommand),
    /// Check a labeling and print its verification report.
    Verify(VerifyArgs),
    /// Compute the local antimagic chromatic number exactly.
    Solve(SolveArgs),
    /// Print a magic square or one of its shifted blocks.
    Magic(MagicArgs),
    /// Replay the theorem suite.
    Theorems(TheoremsArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Cycle,
    Complete,
    CompleteBipartite,
    Null,
    Wheel,
    MobiusLadder,
    #[value(name = "g_mn", alias = "gmn")]
    Gmn,
    /// `C_a x C_b`.
    Torus,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Json,
    Dot,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long)]
    pub b: Option<usize>,
    /// Replace every vertex by an independent set of this size.
    #[arg(long)]
    pub blowup: Option<usize>,
    /// Take this many disjoint copies.
    #[arg(long)]
    pub copies: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: GraphFormat,
    #[arg(long, short)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum LabelingFormat {
    /// `{"graph": …, "labeling": {"labels", "colors", "proper"}}`.
    Json,
    /// Labeling matrix text with `*` off the edges.
    Matrix,
    Dot,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "json")]
    pub format: LabelingFormat,
    /// Same as `--format matrix`.
    #[arg(long)]
    pub emit_matrix: bool,
    #[arg(long, short)]
    pub out: Option<PathBuf>,
}

impl OutputArgs {
    pub fn format(&self) -> LabelingFormat {
        if self.emit_matrix {
            LabelingFormat::Matrix
        } else {
            self.format
        }
    }
}

/// A labeled graph: either one bundle file, or a graph file plus a labeling
/// file.
#[derive(Args, Debug, Clone)]
pub struct LabeledInput {
    /// Bundle `{"graph": …, "labeling": …}`, or a graph when `--labeling` is set.
    pub input: PathBuf,
    /// Labeling JSON (`{"labels": […]}`) for the graph in `input`.
    #[arg(long)]
    pub labeling: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum LabelCommand {
    /// The cycle labeling of `C_n`.
    Cycle {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Block labeling of `G[O_n]` from a labeled base graph.
    Lex {
        /// Bundle holding the base graph and its labeling.
        #[arg(long)]
        base: PathBuf,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Euler tour labeling of a connected 2m-regular bipartite graph.
    Bipartite {
        graph: PathBuf,
        /// First tour edge as `u,v`; it receives label q.
        #[arg(long, value_parser = parse_pair)]
        start: Option<(usize, usize)>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Hub-anchored tour labeling of a tripartite instance.
    Tripartite {
        graph: PathBuf,
        /// `{"w": 0, "V2": […], "V3": […]}`.
        #[arg(long)]
        parts: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// The complement labeling `q + 1 - f`.
    Complement {
        #[command(flatten)]
        input: LabeledInput,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Delete an edge labeled 1 or q and relabel what remains.
    DeleteExtreme {
        #[command(flatten)]
        input: LabeledInput,
        /// Edge `u,v`; defaults to the edge labeled q.
        #[arg(long, value_parser = parse_pair)]
        edge: Option<(usize, usize)>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub input: LabeledInput,
    /// Read `input` as labeling matrix text instead of JSON.
    #[arg(long, conflicts_with = "labeling")]
    pub matrix: bool,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    pub graph: PathBuf,
    #[arg(long, default_value_t = antimagic::solver::DEFAULT_BUDGET)]
    pub budget: u64,
    /// Enumerate every labeling instead of running the pruned search.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Args, Debug)]
pub struct MagicArgs {
    #[arg(long)]
    pub n: usize,
    /// Print `Ω_i` instead of `Ω`; needs `--q`.
    #[arg(long, requires = "q")]
    pub block: Option<u64>,
    #[arg(long)]
    pub q: Option<u64>,
}

#[derive(Args, Debug)]
pub struct TheoremsArgs {
    /// Only cases whose identifier starts with this prefix.
    #[arg(long)]
    pub filter: Option<String>,
    /// Seed for the randomized property cases.
    #[arg(long, default_value_t = antimagic::theorems::DEFAULT_SEED)]
    pub seed: u64,
    /// Random instances per property case.
    #[arg(long, default_value_t = 1000)]
    pub cases: usize,
    /// Print outcomes as JSON.
    #[arg(long)]
    pub json: bool,
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected u,v, got {s:?}"))?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    Ok((num(a)?, num(b)?))
}
