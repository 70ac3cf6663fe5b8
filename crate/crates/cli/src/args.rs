use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

/// Link invariants of closed braids and plumbing trees, with concordance
/// and spc-C-boundary obstruction certificates.
#[derive(Debug, Parser)]
#[command(name = "cbord", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Emit the JSON report instead of text.
    #[arg(long)]
    pub json: bool,
}

/// A braid word, or a plumbing tree given with `--tree`.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct LinkInput {
    /// Braid word, e.g. "B2: 1 1 1".
    pub braid: Option<String>,
    /// Plumbing tree, e.g. "(2 (-2))".
    #[arg(long)]
    pub tree: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// HOMFLY polynomial, v-valuation and MFW window of a closed braid.
    Homfly {
        /// Braid word, e.g. "B2: 1 1 1".
        braid: String,
        #[command(flatten)]
        out: Output,
    },
    /// Seifert matrix, signature and determinant.
    Signature {
        #[command(flatten)]
        link: LinkInput,
        #[command(flatten)]
        out: Output,
    },
    /// Alexander polynomial from the Seifert matrix.
    Alexander {
        #[command(flatten)]
        link: LinkInput,
        #[command(flatten)]
        out: Output,
    },
    /// Runs the valuation obstructions to being an spc-C-boundary.
    Obstruct {
        #[command(flatten)]
        link: LinkInput,
        /// Lower bound on M(L), an integer or fraction.
        #[arg(long, value_name = "M", allow_hyphen_values = true, conflicts_with_all = ["auto_sigma", "tree"])]
        genus_lb: Option<String>,
        /// Use |σ|/2 from the braided Seifert surface as the lower bound on M.
        #[arg(long, conflicts_with = "tree")]
        auto_sigma: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Decomposition, valuation formula and spc decision for a plumbing tree.
    Plumbing {
        /// Plumbing tree, e.g. "(-2 (-2))".
        tree: String,
        #[command(flatten)]
        out: Output,
    },
    /// Builds a concordance certificate from numeric inputs.
    ///
    /// Genus arguments take `3/2` (exact), `>=3/2` (lower bound) or
    /// `<=3/2` (upper bound).
    Certify {
        /// prop14, cor16, cor19, thm23, thm25, cor26 or cor27.
        rule: String,
        #[command(flatten)]
        values: CertifyArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Runs one command per line of FILE and prints one JSON report per line.
    Batch {
        file: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct CertifyArgs {
    #[arg(long = "M", value_name = "GENUS", allow_hyphen_values = true)]
    pub m: Option<String>,
    #[arg(long = "MK", value_name = "GENUS", allow_hyphen_values = true)]
    pub m_k: Option<String>,
    #[arg(long = "MJ", value_name = "GENUS", allow_hyphen_values = true)]
    pub m_j: Option<String>,
    #[arg(long = "M1", value_name = "GENUS", allow_hyphen_values = true)]
    pub m1: Option<String>,
    #[arg(long = "M2", value_name = "GENUS", allow_hyphen_values = true)]
    pub m2: Option<String>,
    /// Upper bound on M(L1 # L2) for prop14.
    #[arg(long = "Msum", value_name = "GENUS", allow_hyphen_values = true)]
    pub m_sum: Option<String>,
    /// Concordance order p for cor16.
    #[arg(long, allow_hyphen_values = true)]
    pub order: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub p: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<i64>,
    /// Satellite order.
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<i64>,
    /// Winding number.
    #[arg(long, allow_hyphen_values = true)]
    pub omega: Option<i64>,
    /// Genus bound on the Whitehead pattern for cor27.
    #[arg(long = "M-pattern", value_name = "GENUS", allow_hyphen_values = true)]
    pub m_pattern: Option<String>,
    /// Signature of the pattern for cor27.
    #[arg(long, allow_hyphen_values = true)]
    pub sigma: Option<i64>,
    /// Pattern as a plumbing tree; its signature is computed for cor27.
    #[arg(long = "pattern-tree", conflicts_with = "sigma")]
    pub pattern_tree: Option<String>,
    /// Asserts the companion is null-concordant (cor27 hypothesis).
    #[arg(long)]
    pub null_concordant: bool,
}
