use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use splice_algebra::identity::DEFAULT_SEED;

#[derive(Parser, Debug)]
#[command(
    name = "splice",
    version,
    about = "Exact insertion products, associators and identity searches"
)]
pub struct Cli {
    /// Alphabet as a string of distinct letters, e.g. `abc`
    #[arg(long, global = true)]
    pub alphabet: Option<String>,

    /// Emit JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,

    /// Seed for random search modes
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the product x∘y
    Insert(InsertArgs),
    /// Print the associator (x∘y)∘z − x∘(y∘z), or an identity defect
    Associator(AssociatorArgs),
    /// Search bounded word triples for an identity violation
    CheckIdentity(CheckIdentityArgs),
    /// Check the weight-function equations on a grid
    CheckF(CheckFArgs),
    /// Audit the adjacency-restricted product case by case
    Audit(AuditArgs),
    /// Re-run the stored golden fixtures
    Repro(ReproArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OpKind {
    Simple,
    Weighted,
    Delta,
    Sync,
    Adjacency,
}

#[derive(Args, Debug, Clone)]
pub struct OpArgs {
    #[arg(long, value_enum)]
    pub op: OpKind,

    /// Weight function for `weighted`: exp, parity, const:<coeff>, table:<file> or a table file path
    #[arg(long = "f")]
    pub f: Option<String>,

    /// Adjacency relation JSON file for `adjacency`
    #[arg(long)]
    pub rel: Option<PathBuf>,

    /// Forbidden letter pairs for `adjacency`, comma separated (e.g. `ac,bd`)
    #[arg(long, conflicts_with = "rel")]
    pub forbid: Option<String>,
}

#[derive(Args, Debug)]
pub struct InsertArgs {
    #[command(flatten)]
    pub op: OpArgs,
    pub x: String,
    pub y: String,
}

#[derive(Args, Debug)]
pub struct AssociatorArgs {
    #[command(flatten)]
    pub op: OpArgs,
    /// Print the identity defect instead of the associator
    #[arg(long)]
    pub defect: bool,
    /// Identity used with --defect
    #[arg(long, default_value = "left-sym")]
    pub identity: String,
    pub x: String,
    pub y: String,
    pub z: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exhaustive,
    Random,
}

#[derive(Args, Debug)]
pub struct CheckIdentityArgs {
    #[command(flatten)]
    pub op: OpArgs,
    #[arg(long)]
    pub identity: String,
    #[arg(long = "max-len")]
    pub max_len: usize,
    #[arg(long, value_enum, default_value_t = ModeArg::Exhaustive)]
    pub mode: ModeArg,
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
    /// Override whether the empty word is enumerated
    #[arg(long = "include-empty")]
    pub include_empty: Option<bool>,
    /// Largest exhaustive search space, in triples
    #[arg(long)]
    pub ceiling: Option<u128>,
}

#[derive(Args, Debug)]
pub struct CheckFArgs {
    /// exp, parity, const:<coeff>, table:<file> or a table file path
    #[arg(long = "f")]
    pub f: String,
    #[arg(long)]
    pub bound: u32,
    /// Also compare f(m, n) with f(n, m) on [1, bound]²
    #[arg(long)]
    pub symmetry: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AuditTarget {
    /// Adjacency-restricted insertion, by alphabet size
    #[value(alias = "3.1")]
    Adjacency,
}

#[derive(Args, Debug)]
pub struct AuditArgs {
    #[arg(long, value_enum, default_value_t = AuditTarget::Adjacency)]
    pub theorem: AuditTarget,
    #[arg(long = "max-len")]
    pub max_len: usize,
}

#[derive(Args, Debug)]
pub struct ReproArgs {
    /// List fixture ids and labels without running them
    #[arg(long)]
    pub list: bool,
    /// Alternative fixture store (JSON)
    #[arg(long)]
    pub fixtures: Option<PathBuf>,
}
