use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

const AFTER_HELP: &str = "\
Module designators (--module):
  k             the simple module k = A/rad A
  free:R        the free module A^R
  cyclic:L1,..  the cyclic module A u_L with u_L = L1 x1 + ... + Lc xc
  file:PATH     a module in the JSON schema written by `qci` (spec, dim, actions)

Defaults c=2, a=3, p=7, lambda=(1,1), mu=(1,3) give the smallest case with
a > 2 where the twisted module escapes the variety of the original.

Exit codes: 0 success, 1 computation failed or verdict negative, 2 invalid input.";

#[derive(Parser, Debug)]
#[command(name = "qci", version, about = "Exact computations over quantum complete intersections", after_help = AFTER_HELP)]
pub struct Cli {
    #[command(flatten)]
    pub config: RunArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct RunArgs {
    /// Number of generators.
    #[arg(long, global = true, default_value_t = 2)]
    pub c: usize,
    /// Nilpotency degree of each generator.
    #[arg(long, global = true, default_value_t = 3)]
    pub a: u64,
    /// Field characteristic.
    #[arg(long, global = true, default_value_t = 7)]
    pub p: u64,
    /// Commutation root; defaults to the smallest primitive a_bar-th root of unity.
    #[arg(long, global = true)]
    pub q: Option<u64>,
    /// Direction of u_lambda [default: all ones].
    #[arg(long, global = true, value_delimiter = ',', allow_negative_numbers = true)]
    pub lambda: Option<Vec<i64>>,
    /// Diagonal twist mu [default: 1,3 then ones].
    #[arg(long, global = true, value_delimiter = ',', allow_negative_numbers = true)]
    pub mu: Option<Vec<i64>>,
    /// Resolution length.
    #[arg(long, global = true, default_value_t = 10)]
    pub depth: usize,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Random cases per property for `suite`.
    #[arg(long, global = true, default_value_t = 50)]
    pub cases: usize,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dimension, a_bar and q of the algebra.
    Algebra,
    /// Support variety of a module.
    Variety {
        #[arg(long)]
        module: String,
    },
    /// Minimal resolution prefix and complexity estimate.
    Resolve {
        #[arg(long)]
        module: String,
    },
    /// Twisted-module counterexample and the tensor product comparison.
    Counterexample,
    /// Seeded run of the structural property suite.
    Suite,
}
