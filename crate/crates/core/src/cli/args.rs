use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "aldp",
    version,
    about = "Asymptotically log del Pezzo pairs: catalog, ampleness for small weights, classification and thresholds"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// How a pair is named: catalog family or JSON description.
#[derive(Debug, Clone, Args)]
pub struct PairArgs {
    /// Family id (`I.9B.m`) or instance label (`I.9B.3`).
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub m: Option<u32>,
    /// Path to a pair description, or `-` for standard input.
    #[arg(long)]
    pub pair_json: Option<String>,
    /// Largest `m` accepted for families with unbounded `m`.
    #[arg(long, default_value_t = 12)]
    pub max_m: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every family with its domain, computed class and metadata.
    CatalogList {
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long, default_value_t = 12)]
        max_m: u32,
    },
    /// Show one family instance and its pair description.
    CatalogShow {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Decide ampleness of the log anticanonical divisor for small weights,
    /// or at the weights given with --beta.
    Verify {
        #[command(flatten)]
        pair: PairArgs,
        /// Weights `p/q`, one per boundary component (repeat or comma-separate).
        #[arg(long)]
        beta: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Positivity class of `-K_S - C`.
    Classify {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Contract exceptional curves down to the base model.
    MinimalModel {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Conic bundle structure of a Beth pair.
    ConicBundle {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Alpha invariant values, limits and bounds.
    Alpha(Box<AlphaArgs>),
    /// Log canonical threshold of a curve germ.
    Lct(LctArgs),
    /// Regenerate the classification and metadata tables.
    RegenTables {
        #[arg(long, default_value = "tables")]
        out: String,
        #[arg(long, default_value_t = 12)]
        max_m: u32,
    },
}

#[derive(Debug, Args)]
#[command(group(
    ArgGroup::new("mode")
        .required(true)
        .args(["limit", "beth", "anticanonical", "kee_threshold", "big", "toric", "curve", "lower", "berman", "remark", "adjunction"])
))]
pub struct AlphaArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    /// Limit as the weight tends to zero, from the class of an irreducible boundary.
    #[arg(long)]
    pub limit: bool,
    /// Upper bound and certified range for a Beth pair.
    #[arg(long)]
    pub beth: bool,
    /// Lower bound for a smooth anticanonical boundary in dimension 2 or 3.
    #[arg(long, value_name = "DIM")]
    pub anticanonical: Option<u32>,
    /// Weight below which the anticanonical bound yields KEE metrics.
    #[arg(long, value_name = "DIM")]
    pub kee_threshold: Option<u32>,
    /// Upper bound `beta/(epsilon + beta)` for big `-K_S - C`.
    #[arg(long)]
    pub big: bool,
    /// Three general lines in the plane.
    #[arg(long)]
    pub toric: bool,
    /// Weighted points on a curve.
    #[arg(long)]
    pub curve: bool,
    /// `min(beta/gamma, alpha_X, alpha_S)`.
    #[arg(long)]
    pub lower: bool,
    /// `min{1, alpha_X/beta, alpha_S/beta}`.
    #[arg(long)]
    pub berman: bool,
    /// General bound with the constant `M` for an `n`-fold of index `N`.
    #[arg(long)]
    pub remark: bool,
    /// Whether `(1+beta)/(2+beta) < 1/(2-beta)`.
    #[arg(long)]
    pub adjunction: bool,
    #[arg(long)]
    pub beta: Vec<String>,
    #[arg(long)]
    pub epsilon: Option<String>,
    #[arg(long)]
    pub beta_max: Option<String>,
    /// The fiber through the boundary point is smooth and tangent.
    #[arg(long)]
    pub smooth_fiber: bool,
    /// Point weights on the curve.
    #[arg(long)]
    pub coeff: Vec<String>,
    #[arg(long)]
    pub degree: Option<String>,
    /// The curve is `P^1`, making the value exact.
    #[arg(long)]
    pub rational_curve: bool,
    #[arg(long)]
    pub gamma: Option<String>,
    #[arg(long)]
    pub alpha_x: Option<String>,
    #[arg(long)]
    pub alpha_s: Option<String>,
    #[arg(long)]
    pub dim: Option<u32>,
    #[arg(long)]
    pub index: Option<u32>,
    /// Use the bound exactly as printed rather than its reciprocal reading.
    #[arg(long)]
    pub literal: bool,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    /// Two lines and the boundary through one point.
    Eckardt,
    /// Two fiber components and the boundary through their node.
    SingularFiber,
    /// A smooth fiber tangent to the boundary.
    TangentFiber,
}

#[derive(Debug, Args)]
pub struct LctArgs {
    #[arg(long, value_enum)]
    pub preset: Option<Preset>,
    /// Path to a germ description, or `-` for standard input.
    #[arg(long)]
    pub config: Option<String>,
    /// Indices of the scaled branches; all when omitted.
    #[arg(long, value_delimiter = ',')]
    pub scale: Vec<usize>,
    /// Also evaluate at this weight.
    #[arg(long)]
    pub beta: Vec<String>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}
