use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "psmooth", version, about = "Equivariant multiplicities and p-smoothness of Schubert varieties")]
pub struct Cli {
    /// More log output (-v info, -vv debug).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Multiplicity e_{y,w} and its numerator.
    Mult(MultArgs),
    /// Classify every fixed point of X_w.
    Locus(LocusArgs),
    /// Classify every pair (y, w) with l(w) up to a bound.
    Scan(ScanArgs),
    /// Worked examples outside the Schubert setting.
    #[command(subcommand)]
    Zoo(ZooCommand),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    /// One JSON object per line.
    Json,
    Csv,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GroupArgs {
    /// Builtin type such as A3, B2, G2, affine-A1.
    #[arg(long = "type", value_name = "TAG")]
    pub type_tag: Option<String>,
    /// TOML or JSON file with `rank` and `matrix`.
    #[arg(long, value_name = "PATH")]
    pub gcm_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MultArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// Word for w, e.g. 1,2,1. Non-reduced words are reduced with a warning.
    #[arg(long)]
    pub w: String,
    /// Word for the fixed point y; empty or "e" for the identity.
    #[arg(long, default_value = "")]
    pub y: String,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct LocusArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    #[arg(long)]
    pub w: String,
    /// Primes to test, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "2,3")]
    pub primes: Vec<u64>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    #[arg(long, value_name = "L")]
    pub max_length: usize,
    #[arg(long, value_delimiter = ',', default_value = "2,3")]
    pub primes: Vec<u64>,
    /// Output file; standard output when absent.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Cache file. Defaults to $PSMOOTH_CACHE_DIR/scan-cache.jsonl when that
    /// variable is set.
    #[arg(long, value_name = "PATH")]
    pub cache: Option<PathBuf>,
    /// Ignore $PSMOOTH_CACHE_DIR.
    #[arg(long, conflicts_with = "cache")]
    pub no_cache: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum ZooCommand {
    /// C^2 / mu_{n+1}.
    KleinianA {
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Minimal nilpotent orbit closure of a finite type.
    MinimalOrbit {
        /// Family letter (with --n) or a full tag such as G2.
        #[arg(long = "type", value_name = "TAG")]
        type_tag: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// D and E Kleinian singularities as weighted hypersurfaces.
    Weighted {
        /// D (with --n), E6, E7 or E8.
        #[arg(long = "type", value_name = "TAG")]
        type_tag: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Numerators against torsion orders.
    Consistency {
        #[arg(long, default_value_t = 5)]
        kleinian_n: usize,
        #[arg(long, default_value_t = 3)]
        c_n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// D and E examples where the multiplicity misreports the bad primes.
    Mismatch {
        /// Ranks of the D examples.
        #[arg(long, value_delimiter = ',', default_value = "4,5,6,7")]
        d: Vec<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}
