use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use colpart::{Result, WeightVector};

#[derive(Debug, Parser)]
#[command(
    name = "colpart",
    version,
    about = "Count admissible colored partitions and check product identities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Directory for cached count tables.
    #[arg(long, global = true, env = "COLPART_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,

    /// Worker threads (all cores by default).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: Option<u64>,

    /// Print runtimes on stderr.
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print P(1)..P(N).
    Count(CountArgs),
    /// Compare the counts with a periodic product.
    Verify(VerifyArgs),
    /// Verify every weight of a given width and level.
    Sweep(SweepArgs),
    /// Fit product exponents to the counts.
    Fit(FitArgs),
    /// Count admissible matrices supported on the first l rows.
    Dim(DimArgs),
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct WeightArgs {
    /// Odd-width weight (k0,...,kl) on N_{2l+1}.
    #[arg(long, value_name = "K0,...,KL", value_delimiter = ',')]
    pub odd: Option<Vec<u32>>,

    /// Even-width weight (k0,...,kl)^e on N_{2l}.
    #[arg(long, value_name = "K0,...,KL", value_delimiter = ',')]
    pub even: Option<Vec<u32>>,

    /// Raw initial-condition bracket [k1,...,kw].
    #[arg(long, value_name = "K1,...,KW", value_delimiter = ',')]
    pub bracket: Option<Vec<u32>>,
}

impl WeightArgs {
    pub fn weight(&self) -> Result<WeightVector> {
        match (&self.odd, &self.even, &self.bracket) {
            (Some(k), _, _) => WeightVector::odd(k),
            (_, Some(k), _) => WeightVector::even(k),
            (_, _, Some(k)) => WeightVector::from_bracket(k.clone()),
            _ => unreachable!("clap enforces exactly one weight flag"),
        }
    }
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[command(flatten)]
    pub weight: WeightArgs,

    /// Largest n to count.
    #[arg(short = 'N', value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("product").required(true).args(["auto", "spec"])))]
pub struct VerifyArgs {
    #[command(flatten)]
    pub weight: WeightArgs,

    #[arg(short = 'N', value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,

    /// Use the conjectured product for the weight's family.
    #[arg(long)]
    pub auto: bool,

    /// Product in residue notation, e.g. "odd; 2,4,5,6,8 mod 10".
    #[arg(long)]
    pub spec: Option<String>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Array width.
    #[arg(short = 'w', value_parser = clap::value_parser!(u64).range(2..))]
    pub width: u64,

    /// Level k0 + ... + kl.
    #[arg(short = 'k', value_parser = clap::value_parser!(u32).range(1..))]
    pub level: u32,

    #[arg(short = 'N', value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
}

#[derive(Debug, Args)]
pub struct FitArgs {
    #[command(flatten)]
    pub weight: WeightArgs,

    #[arg(short = 'N', value_parser = clap::value_parser!(u64).range(2..))]
    pub n: u64,

    /// Largest period to look for (N/2 at most).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_modulus: Option<u64>,
}

#[derive(Debug, Args)]
pub struct DimArgs {
    /// Finite weight k1,...,kl.
    #[arg(required = true, value_delimiter = ',', num_args = 1..)]
    pub weight: Vec<u32>,
}
