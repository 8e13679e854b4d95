use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "belltrans",
    version,
    about = "Exact Bell transforms of integer and rational sequences"
)]
pub struct Cli {
    /// Never touch the network; OEIS ids resolve from the cache only.
    #[arg(long, global = true)]
    pub offline: bool,

    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// TOML file with defaults for any of the global options.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Plain,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Apply Y(a,b,c,d) or a named transform.
    Transform(TransformArgs),
    /// Apply the inverse of Y(a,b,c,d).
    Inverse(InverseArgs),
    /// Check an identity and report the first failing index.
    #[command(subcommand)]
    Check(CheckCommand),
    /// Print the partial Bell polynomials B(n,k) of a sequence.
    Bell(BellArgs),
    #[command(subcommand)]
    Catalog(CatalogCommand),
    #[command(subcommand)]
    Oeis(OeisCommand),
    /// Search for operator words relating two sequences.
    Discover(DiscoverArgs),
}

/// A sequence: catalog key, OEIS id, record file, or inline list `1,2,3/4`.
#[derive(Args, Debug, Clone)]
pub struct InputArgs {
    #[arg(long, short = 'i', value_name = "SEQ")]
    pub input: String,

    /// Number of terms.
    #[arg(long, short = 'n')]
    pub n: Option<usize>,
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("which").required(true).args(["params", "name"])))]
pub struct TransformArgs {
    /// a,b,c,d (integers or p/q).
    #[arg(long, short = 'p', allow_hyphen_values = true)]
    pub params: Option<String>,

    /// identity, invert, exp, exp_egf, conv, revert, ncp, dissection,
    /// binomial, L, R, I or S.
    #[arg(long)]
    pub name: Option<String>,

    /// Parameter of a named transform.
    #[arg(long, short = 'm', allow_hyphen_values = true, requires = "name")]
    pub m: Option<String>,

    #[command(flatten)]
    pub input: InputArgs,
}

#[derive(Args, Debug)]
pub struct InverseArgs {
    #[arg(long, short = 'p', allow_hyphen_values = true)]
    pub params: String,

    #[command(flatten)]
    pub input: InputArgs,
}

#[derive(Subcommand, Debug)]
pub enum CheckCommand {
    /// Generating-function equation for Y(a,b,c,d).
    Gf {
        #[arg(long, short = 'p', allow_hyphen_values = true)]
        params: String,
        /// Check this sequence as the claimed transform instead of computing it.
        #[arg(long, value_name = "SEQ")]
        against: Option<String>,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Interpolation identity in lambda (needs c != 0).
    Interpolation {
        #[arg(long, short = 'p', allow_hyphen_values = true)]
        params: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Falling-factorial interpolation identities: lemma, minus1, gamma.
    Appendix {
        #[arg(long)]
        kind: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long, allow_hyphen_values = true)]
        gamma: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Convolution power of 1 + dY against direct enumeration.
    Convolution {
        #[arg(long, short = 'p', allow_hyphen_values = true)]
        params: String,
        #[arg(long, short = 'r')]
        r: usize,
        #[command(flatten)]
        input: InputArgs,
    },
    /// The (a,b) recurrence against Y(a,b,-1,1).
    Ab {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Algebraic equations for the bicubic-map and Av(2413,3412) series.
    Algebraic {
        /// A257_closed_form, A257_quadratic or Av_cubic; all when omitted.
        #[arg(long)]
        equation: Option<String>,
        #[arg(long, short = 'n', default_value_t = 12)]
        n: usize,
    },
}

#[derive(Args, Debug)]
pub struct BellArgs {
    #[arg(long, short = 'n')]
    pub n: usize,

    /// Defaults to all ones, which gives Stirling numbers of the second kind.
    #[arg(long, short = 'i', value_name = "SEQ")]
    pub input: Option<String>,

    /// Use (1! x_1, 2! x_2, ...) in place of x.
    #[arg(long)]
    pub factorial: bool,
}

#[derive(Subcommand, Debug)]
pub enum CatalogCommand {
    List,
    Show {
        key: String,
        #[arg(long, short = 'n')]
        n: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
pub enum OeisCommand {
    /// Download and cache a sequence.
    Fetch { id: String },
    /// Print a cached sequence.
    Show { id: String },
    /// Remove a cached sequence.
    Invalidate { id: String },
    /// Print the cache directory.
    CacheDir,
}

#[derive(Args, Debug)]
pub struct DiscoverArgs {
    #[arg(long, required_unless_present = "diagram", requires = "target")]
    pub source: Option<String>,

    #[arg(long, requires = "source")]
    pub target: Option<String>,

    /// Verify the known relations among map and permutation sequences.
    #[arg(long, conflicts_with_all = ["source", "target"])]
    pub diagram: bool,

    #[arg(long, short = 'n')]
    pub n: Option<usize>,

    #[arg(long)]
    pub min_match: Option<usize>,
}
