use serde::Serialize;

use qci::homology::{complexity_estimate, resolve};
use qci::io::ResolutionReport;
use qci::suite::{run_property_suite, SuiteConfig, SuiteReport};
use qci::variety::{support_variety, VarietyJson};
use qci::verify::{run_corollary_demo_in, run_counterexample_in, CorollaryReport, CounterexampleReport};

use crate::config::RunConfig;
use crate::designator::Designator;
use crate::fail::Failure;

#[derive(Serialize)]
pub struct AlgebraInfo {
    pub c: usize,
    pub a: u64,
    pub p: u64,
    pub a_bar: u64,
    pub q: u64,
    pub q_inv: u64,
    pub dim: usize,
}

#[derive(Serialize)]
pub struct VarietyOutput {
    pub module: String,
    pub module_dim: usize,
    #[serde(flatten)]
    pub variety: VarietyJson,
}

#[derive(Serialize)]
pub struct ResolveOutput {
    pub module: String,
    pub module_dim: usize,
    pub depth: usize,
    #[serde(flatten)]
    pub report: ResolutionReport,
}

#[derive(Serialize)]
pub struct CounterexampleOutput {
    pub confirmed: bool,
    pub counterexample: CounterexampleReport,
    pub corollary: CorollaryReport,
}

pub fn algebra(cfg: &RunConfig) -> AlgebraInfo {
    let fs = cfg.spec.field_spec();
    AlgebraInfo {
        c: cfg.spec.c(),
        a: fs.a(),
        p: fs.p(),
        a_bar: fs.a_bar(),
        q: fs.q().value(),
        q_inv: fs.q_inv().value(),
        dim: cfg.spec.dim(),
    }
}

pub fn variety(cfg: &RunConfig, designator: &str) -> Result<VarietyOutput, Failure> {
    let m = Designator::parse(designator)?.build(cfg.spec)?;
    Ok(VarietyOutput { module: designator.to_string(), module_dim: m.dim(), variety: support_variety(&m).to_json() })
}

pub fn resolve_module(cfg: &RunConfig, designator: &str) -> Result<ResolveOutput, Failure> {
    let m = Designator::parse(designator)?.build(cfg.spec)?;
    let res = resolve(&m, cfg.depth);
    let fit = complexity_estimate(&res.betti)?;
    Ok(ResolveOutput {
        module: designator.to_string(),
        module_dim: m.dim(),
        depth: cfg.depth,
        report: ResolutionReport::new(&res, &fit),
    })
}

pub fn counterexample(cfg: &RunConfig) -> Result<CounterexampleOutput, Failure> {
    let counterexample = run_counterexample_in(cfg.spec, &cfg.lambda, &cfg.mu)?;
    let corollary = run_corollary_demo_in(cfg.spec, &cfg.lambda, &cfg.mu)?;
    Ok(CounterexampleOutput { confirmed: counterexample.confirmed && corollary.confirmed, counterexample, corollary })
}

pub fn suite(cfg: &RunConfig) -> SuiteReport {
    run_property_suite(SuiteConfig { seed: cfg.seed, cases: cfg.cases, ..SuiteConfig::default() })
}
