use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "tssforge",
    version,
    about = "Totally symmetric sets and braid group homomorphisms into finite groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,

    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub output: OutputFormat,

    /// Worker threads for searches and enumerations.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=256))]
    pub jobs: u32,

    /// Search node budget.
    #[arg(long, global = true, default_value_t = 100_000_000)]
    pub budget: u64,

    /// Largest group order any construction may reach (overrides TSSFORGE_CAP).
    #[arg(long, global = true)]
    pub cap: Option<usize>,

    /// Check Cayley table associativity on every triple, however large the table.
    #[arg(long, global = true, conflicts_with = "skip_assoc")]
    pub exhaustive_assoc: bool,

    /// Load Cayley tables without the associativity check.
    #[arg(long, global = true)]
    pub skip_assoc: bool,

    /// Include wall-clock timing in the report (breaks byte-identical output).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Verb {
    /// Check that a list of elements is a totally symmetric set.
    TssVerify {
        #[arg(short = 'g', long)]
        group: String,
        /// Elements separated by `;`, e.g. "(1 2);(3 4)".
        #[arg(long)]
        elements: String,
    },
    /// Search for a largest totally symmetric set.
    TssSearch {
        #[arg(short = 'g', long)]
        group: String,
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// Evaluate the theorem 1 and theorem 2 order bounds.
    Bounds {
        /// 1 or 2; both when omitted.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=2))]
        theorem: Option<u32>,
        #[arg(long)]
        n: u32,
        /// Produce a table for n up to this value.
        #[arg(long)]
        to: Option<u32>,
    },
    /// Build the sharp group S_n ⋉ V and certify its distinguished set.
    Sharp {
        #[arg(long)]
        n: usize,
        /// Cross-check the order against the regular permutation action.
        #[arg(long)]
        regular: bool,
    },
    /// Enumerate homomorphisms B_n -> G.
    Homs {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        target: String,
        #[arg(long)]
        non_cyclic_only: bool,
        #[arg(long)]
        up_to_conjugacy: bool,
        #[arg(long)]
        transitive_only: bool,
        /// Enumeration strategy: reduced or naive.
        #[arg(long, default_value = "reduced")]
        strategy: String,
    },
    /// Audit a catalog of groups against Theorem 1 (and, for n = 5, the theorem 2 perfect-group scan).
    Audit {
        #[arg(long)]
        n: usize,
        /// Directory of .cayley and .perm files.
        #[arg(long, conflicts_with = "builtin_below")]
        catalog: Option<PathBuf>,
        /// Use the built-in groups of order below this value (default: the theorem 1 bound).
        #[arg(long)]
        builtin_below: Option<u128>,
        /// Declare that the catalog holds every group of order below 60.
        #[arg(long, requires = "catalog")]
        complete_catalog: bool,
        /// Enumeration strategy: reduced or naive.
        #[arg(long, default_value = "reduced")]
        strategy: String,
    },
    /// Load a group and report its basic invariants.
    ValidateGroup {
        #[arg(short = 'g', long)]
        group: String,
    },
}
