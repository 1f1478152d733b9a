use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use prlab_core::search::DEFAULT_MAX_NODES;

#[derive(Debug, Parser)]
#[command(name = "prlab", version, about = "Partition regularity toolkit")]
pub struct Cli {
    /// Emit one JSON envelope on standard output instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for coloring search.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    /// Seed for the randomized verbs.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Search node cap.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_NODES)]
    pub max_nodes: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Columns condition for the integer matrix stored in a file.
    CheckMatrix { file: PathBuf },
    /// Partition regularity of a homogeneous linear equation.
    CheckLinear {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Partition regularity of a linear equation with a nonzero constant.
    CheckAffine {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Last nonzero base-p digit of n.
    Smod { p: u64, n: u64 },
    /// Least prime dividing no nonempty subset sum of the coefficients.
    BlockingPrime {
        #[arg(allow_hyphen_values = true)]
        coeffs: String,
    },
    /// Two-parameter solution family from a zero-sum subset.
    Parametric {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        /// Variable names or 1-based positions, comma separated.
        #[arg(long)]
        subset: String,
    },
    #[command(subcommand)]
    Search(SearchCmd),
    #[command(subcommand)]
    Vdw(VdwCmd),
    #[command(subcommand)]
    Folkman(FolkmanCmd),
    #[command(subcommand)]
    Poly(PolyCmd),
    #[command(subcommand)]
    Omega(OmegaCmd),
    #[command(subcommand)]
    Embed(EmbedCmd),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct SystemSource {
    /// A single polynomial equation P = 0.
    #[arg(long, allow_hyphen_values = true)]
    pub poly: Option<String>,
    /// A file holding the matrix of a homogeneous system.
    #[arg(long)]
    pub matrix: Option<PathBuf>,
    /// k-term arithmetic progressions.
    #[arg(long)]
    pub ap: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SystemArgs {
    #[command(flatten)]
    pub source: SystemSource,
    /// Count only solutions with pairwise distinct values.
    #[arg(long)]
    pub injective: bool,
}

#[derive(Debug, Subcommand)]
pub enum SearchCmd {
    /// Lexicographically least coloring of [1, n] with no monochromatic solution.
    GoodColoring {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(short = 'n')]
        n: u64,
        #[arg(short = 'r')]
        r: u32,
    },
    /// Least n at which every r-coloring of [1, n] has a monochromatic solution.
    ForcingNumber {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(short = 'r')]
        r: u32,
        #[arg(long)]
        max: u64,
    },
    /// Lexicographically least monochromatic solution in a coloring of [1, N].
    Witness {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long)]
        coloring: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum VdwCmd {
    /// Monochromatic 3-term progression in a 2-coloring of [0, 324].
    Extract325 {
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Runs the extractor on random colorings and checks every answer.
    Check325 {
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum FolkmanCmd {
    /// All nonempty finite sums of a set.
    Fs { set: String },
    /// The matrix whose solutions are a set together with its finite sums.
    Matrix {
        n: usize,
        /// Also run the columns condition on it.
        #[arg(long)]
        check: bool,
    },
    /// Whether every finite sum has the color of its largest summand.
    WeakMono {
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        set: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum PolyCmd {
    /// Linear polynomial with one fresh variable per monomial.
    Reduct {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Sets of variables with exactly one in each monomial.
    Exclusive {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Sufficient and necessary criteria combined.
    Check {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Polynomial built from a linear form and subsets of {1, ..., n}.
    Construct3513 {
        #[arg(long, allow_hyphen_values = true)]
        linear: String,
        /// Subsets separated by `|`; an empty entry is the empty set.
        #[arg(long)]
        subsets: String,
        #[arg(short = 'n')]
        n: usize,
    },
    /// Reciprocal polynomial.
    Reciprocal {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Substitution of every variable.
    Transform {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Replace x by -x.
        #[arg(long, conflicts_with = "power", required_unless_present = "power")]
        negate: bool,
        /// Replace x by x^z.
        #[arg(long)]
        power: Option<u32>,
    },
    /// Difference of two monomials with the given exponents.
    Expsum {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Translation, dilation, additive and multiplicative invariance.
    Invariance {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum OmegaCmd {
    /// Canonical form and height of a term.
    Eval { term: String },
    /// Equality of two terms.
    Eq { left: String, right: String },
    /// Tensorized tuple of terms separated by `;`.
    Tensorized { terms: String },
    /// Whether the pair may be written as (a, S_h(a)(g)).
    Rpair { left: String, right: String },
    /// Symbolic check of the tabular solution of sum c_i x_i = sum d_j y_j.
    Verify354 {
        #[arg(long)]
        c: String,
        #[arg(long)]
        d: String,
        /// Print the coefficient identities.
        #[arg(long)]
        ledger: bool,
    },
    /// Checks the heart/diamond identities on random terms.
    Identities {
        #[arg(long, default_value_t = 1000)]
        count: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum EmbedCmd {
    /// Finite embeddability by a shift.
    Fe {
        #[arg(long, requires = "inside")]
        finite: Option<String>,
        #[arg(long = "in", id = "inside")]
        inside: Option<String>,
        #[arg(long, requires = "in_periodic", conflicts_with = "finite")]
        periodic: Option<String>,
        #[arg(long)]
        in_periodic: Option<String>,
    },
    /// Thick, syndetic and piecewise syndetic.
    Classify { spec: String },
    /// Banach density.
    Bd { spec: String },
    /// Family member mapping one finite set into another.
    Fmap {
        #[arg(long)]
        set: String,
        #[arg(long = "in")]
        inside: String,
        #[arg(long)]
        family: String,
        /// Inclusive ranges, e.g. `a=1..10,b=0..20`.
        #[arg(long)]
        bounds: Option<String>,
    },
    /// Whether the set contains an arithmetic progression of the given length.
    Apmax {
        set: String,
        #[arg(long)]
        len: usize,
    },
    /// Searches for violations of reflexivity and transitivity.
    ProbeFamily {
        #[arg(long)]
        family: String,
        #[arg(long)]
        bounds: Option<String>,
        /// Sample sets separated by `|`.
        #[arg(long, default_value = "1,2|2,5,9|3,4,8")]
        samples: String,
    },
}
