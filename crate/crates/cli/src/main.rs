//! `qci` command-line front end.

mod args;
mod commands;
mod config;
mod designator;
mod fail;
mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use serde::Serialize;

use args::{Cli, Command, Format};
use config::RunConfig;
use fail::Failure;

fn render<T: Serialize>(format: Format, report: &T) -> String {
    match format {
        Format::Json => serde_json::to_string(report).expect("reports serialize") + "\n",
        Format::Table => render::table(&serde_json::to_value(report).expect("reports serialize")),
    }
}

fn emit<T: Serialize>(cfg: &RunConfig, report: &T) -> Result<(), Failure> {
    let text = render(cfg.format, report);
    match &cfg.output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::computation("Io", format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|e| Failure::computation("Io", e.to_string()))
        }
    }
}

/// Runs the command and returns whether its verdict is positive.
fn run(cli: &Cli) -> Result<bool, Failure> {
    let cfg = RunConfig::from_args(&cli.config)?;
    match &cli.command {
        Command::Algebra => emit(&cfg, &commands::algebra(&cfg)).map(|_| true),
        Command::Variety { module } => emit(&cfg, &commands::variety(&cfg, module)?).map(|_| true),
        Command::Resolve { module } => emit(&cfg, &commands::resolve_module(&cfg, module)?).map(|_| true),
        Command::Counterexample => {
            let out = commands::counterexample(&cfg)?;
            emit(&cfg, &out)?;
            Ok(out.confirmed)
        }
        Command::Suite => {
            let report = commands::suite(&cfg);
            emit(&cfg, &report)?;
            Ok(report.all_passed)
        }
    }
}

fn report_failure(f: &Failure) -> ExitCode {
    let text = serde_json::to_string(f).expect("diagnostics serialize");
    let _ = writeln!(std::io::stderr().lock(), "{text}");
    ExitCode::from(f.exit_code as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.render().to_string();
            return report_failure(&Failure::invalid("InvalidArguments", msg.trim_end()));
        }
    };
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => report_failure(&f),
    }
}
