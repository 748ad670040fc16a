use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "hookcells", version, about = "Hook codes and generator counts of monomial cells in k[x, y]")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format; `dot` only applies to `lattice`.
    #[arg(long, short, global = true, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
    Markdown,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every partition with the given diagonal lengths.
    Enumerate { hilbert: String },
    /// Generator count and degree profile of a generic ideal in the cell of a partition.
    Kappa { partition: String },
    /// Single-block components of a partition.
    Decompose { partition: String },
    /// Number of partitions of the given diagonal lengths by generator count.
    Count {
        hilbert: String,
        /// Only report partitions with exactly this generator count.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Partitions with hook codes, tau values, generator counts and cell dimensions.
    Table { hilbert: String },
    /// Hasse diagram of the hook codes.
    Lattice { hilbert: String },
    /// Check the formulas against generator counts of points in the cell over GF(p).
    Verify {
        partition: String,
        /// Starting prime; defaults to the smallest admissible prime at least 5.
        #[arg(long)]
        field: Option<u32>,
        /// Maximum number of coefficient tuples per prime.
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
    },
}
