use std::path::PathBuf;

use clap::{Parser, Subcommand};

/// Odd colorings of k-trees: recognition, construction, verification and
/// an exact oracle.
#[derive(Parser, Debug, Clone)]
#[command(name = "oddcolor", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Graph file, or `-` for stdin.
    #[arg(short, long, global = true, default_value = "-")]
    pub input: String,

    /// Write the result to this file instead of stdout.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,

    /// Tree width of the input. Detected from the edge count when omitted.
    #[arg(short, long, global = true)]
    pub k: Option<usize>,

    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Search for an odd coloring with exactly this palette using the oracle
    /// instead of the routed constructor (`color`), or cap the oracle's scan
    /// (`oracle`).
    #[arg(long, global = true)]
    pub palette: Option<u32>,

    /// Include the per-level reduction trace in `color` output.
    #[arg(long, global = true)]
    pub trace: bool,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Check that the input is a k-tree and print an addition ordering.
    Recognize,
    /// Print a good addition ordering (first vertex of degree k).
    Order,
    /// Odd-color a k-tree, routed by k, and verify the result.
    Color {
        /// Node budget for oracle-backed routes.
        #[arg(long)]
        node_budget: Option<u64>,
    },
    /// Check a coloring against a graph.
    Verify {
        /// Coloring file: the JSON written by `color`, or a bare JSON array.
        #[arg(short, long)]
        coloring: PathBuf,
    },
    /// Exact odd chromatic number by backtracking.
    Oracle {
        #[arg(long)]
        max_colors: Option<u32>,
        #[arg(long)]
        node_budget: Option<u64>,
        /// Do not precolor a maximal clique.
        #[arg(long)]
        no_symmetry_breaking: bool,
    },
    /// Emit a random k-tree.
    Random {
        #[arg(short, long)]
        n: usize,
        /// 0.5 is uniform over recorded cliques.
        #[arg(long, default_value_t = 0.5)]
        bias: f64,
    },
    /// Emit every k-tree on n vertices up to isomorphism.
    Enumerate {
        #[arg(short, long)]
        n: usize,
    },
    /// Look for k-trees without an odd (k+2)-coloring.
    Probe {
        #[arg(long)]
        n_max: usize,
        /// Sample this many random k-trees instead of enumerating.
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value_t = 0.5)]
        bias: f64,
        #[arg(long)]
        node_budget: Option<u64>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Palette sizes and timings over random k-trees, as CSV.
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = [2usize, 3, 7])]
        ks: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_values_t = [100usize, 300])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
}
