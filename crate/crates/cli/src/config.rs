use std::path::PathBuf;

use qci::algebra::AlgebraSpec;
use qci::field::{derive_a_bar, FieldSpec};
use qci::verify::algebra_for;

use crate::args::{Format, RunArgs};
use crate::fail::Failure;

/// Validated run configuration.
#[derive(Debug)]
pub struct RunConfig {
    pub spec: AlgebraSpec,
    pub lambda: Vec<i64>,
    pub mu: Vec<i64>,
    pub depth: usize,
    pub seed: u64,
    pub cases: usize,
    pub output: Option<PathBuf>,
    pub format: Format,
}

impl RunConfig {
    pub fn from_args(args: &RunArgs) -> Result<Self, Failure> {
        if args.a < 2 {
            return Err(Failure::invalid("InvalidParameter", "a must be at least 2"));
        }
        if args.c < 2 {
            return Err(Failure::invalid("InvalidParameter", "c must be at least 2"));
        }
        if qci::field::is_prime(args.p) && derive_a_bar(args.a, args.p) < 2 {
            return Err(Failure::invalid(
                "InvalidParameter",
                format!("a_bar = a / gcd(a, p) must be at least 2; a = {}, p = {} gives 1", args.a, args.p),
            ));
        }
        let spec = match args.q {
            None => algebra_for(args.c, args.a, args.p)?,
            Some(q) => AlgebraSpec::new(FieldSpec::with_root(args.p, args.a, q)?, args.c)?,
        };
        let lambda = args.lambda.clone().unwrap_or_else(|| vec![1; args.c]);
        let mu = args
            .mu
            .clone()
            .unwrap_or_else(|| (0..args.c).map(|i| if i == 1 { 3 } else { 1 }).collect());
        Ok(Self {
            spec,
            lambda,
            mu,
            depth: args.depth,
            seed: args.seed,
            cases: args.cases,
            output: args.output.clone(),
            format: args.format,
        })
    }
}
