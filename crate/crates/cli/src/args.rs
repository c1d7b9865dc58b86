use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(name = "quadsat", version, about = "Spectral radius, 4-cycle counts and extremal search on small graphs")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Input graph file; standard input when omitted.
    #[arg(long = "in", global = true, value_name = "PATH")]
    pub input: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = InputFormat::Auto)]
    pub format: InputFormat,
    /// Worker threads; 0 uses every available core.
    #[arg(long, global = true, default_value_t = 0)]
    pub workers: usize,
    /// Spectral condition against sqrt(m).
    #[arg(long, global = true, default_value = "nonstrict")]
    pub mode: quadsat::SpectralMode,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Power-iteration residual tolerance.
    #[arg(long, global = true, default_value_t = 1e-12)]
    pub tol: f64,
    #[arg(long, global = true, default_value_t = 100_000)]
    pub max_iter: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Auto,
    Edges,
    Graph6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Graph6,
    Edges,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Local,
    Exhaustive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Perron eigenpair, plus the full spectrum when the graph is small enough.
    Spectrum,
    /// 4-cycle counts by every applicable method.
    Count,
    /// Small-eigenvalue-edge deletion with per-step certificates.
    Dsee {
        /// Start each power iteration from the previous Perron vector.
        #[arg(long)]
        warm_start: bool,
        /// Also write one CSV row per deletion to this file.
        #[arg(long, value_name = "PATH")]
        trace_csv: Option<PathBuf>,
    },
    /// Check a single inequality on the input graph.
    Verify {
        claim: quadsat::verify::ClaimId,
        /// Vertex subset for the interlacing check, e.g. 0,1,2; all
        /// single-vertex deletions when omitted.
        #[arg(long, value_delimiter = ',')]
        subset: Option<Vec<usize>>,
    },
    /// Run verifiers over every small graph, or over a graph6 stream.
    Sweep {
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        /// Comma-separated claims; all when omitted.
        #[arg(long, value_delimiter = ',')]
        claims: Option<Vec<quadsat::verify::ClaimId>>,
        /// Read the universe as graph6 lines from --in or standard input.
        #[arg(long)]
        stdin: bool,
    },
    /// Estimate the least 4-cycle count over m-edge graphs meeting the spectral condition.
    Fmin {
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = Method::Local)]
        method: Method,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Reference bounds next to f(m) estimates, one row per m.
    Bounds {
        /// Comma-separated edge counts.
        #[arg(long = "m", value_delimiter = ',', required = true)]
        m_values: Vec<usize>,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        output: TableFormat,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Emit a named graph, e.g. `construct clique_plus_pendants 16`.
    Construct {
        #[arg(required = true, num_args = 1..)]
        spec: Vec<String>,
        #[arg(long, value_enum, default_value_t = Emit::Graph6)]
        emit: Emit,
    },
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Largest order for the exhaustive universe.
    #[arg(long, default_value_t = 7)]
    pub n_max: usize,
    /// Read the exhaustive universe as graph6 lines instead of enumerating.
    #[arg(long)]
    pub stdin: bool,
    #[arg(long, default_value_t = 2000)]
    pub iterations: usize,
    #[arg(long, default_value_t = 4)]
    pub restarts: usize,
    #[arg(long)]
    pub n_pool: Option<usize>,
    /// Include the accepted-move log in the report.
    #[arg(long)]
    pub moves: bool,
}
