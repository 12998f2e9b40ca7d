//! `spectral-torsion`: runs the verification suite, evaluates the torsion
//! functional on user data and runs the worked examples.
//!
//! Exit status: 0 when every check passes, 1 when a check fails, 2 on a
//! configuration error.

mod commands;
mod config;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use commands::{CommandError, Example};
use config::{ConfigFile, Overrides, RunConfig};
use report::Report;

#[derive(Parser)]
#[command(name = "spectral-torsion", version, about = "Spectral torsion functional: verification and evaluation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    options: Options,
}

#[derive(Subcommand)]
enum Command {
    /// Run every acceptance check.
    Verify,
    /// Evaluate the torsion functional on explicit T, u, v, w.
    Eval,
    /// Run the checks of one worked example.
    Examples {
        #[arg(value_enum)]
        which: Example,
    },
}

#[derive(Args)]
struct Options {
    /// Comma-separated dimensions for the closed-form check.
    #[arg(long, global = true, value_delimiter = ',')]
    dims: Option<Vec<usize>>,
    /// Dimension for eval and the examples.
    #[arg(long, global = true)]
    dim: Option<usize>,
    /// Random configurations per dimension.
    #[arg(long, global = true)]
    trials: Option<usize>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// JSON configuration file; flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Write the JSON report here.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Off-diagonal entry of the two-sheeted Dirac operator, e.g. `1+0i`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    phi: Option<String>,
    /// Deformation parameter of the quantum disc.
    #[arg(long, global = true)]
    q: Option<f64>,
    /// Disc truncation, or matrix size of the gauge model.
    #[arg(long = "N", global = true)]
    n: Option<usize>,
    /// Order of the formal series on the torus.
    #[arg(long = "K", global = true)]
    k: Option<usize>,
    /// Torsion component `a,b,c=value` with 1-based `a < b < c`; repeatable.
    #[arg(long, global = true)]
    torsion: Vec<String>,
    /// One-form components, comma-separated rationals.
    #[arg(long, global = true, allow_hyphen_values = true)]
    u: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    v: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    w: Option<String>,
    /// Run trials on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    /// Print the JSON report to stdout instead of the summary.
    #[arg(long, global = true)]
    json: bool,
}

impl Options {
    fn overrides(&self) -> Overrides {
        Overrides {
            dims: self.dims.clone(),
            dim: self.dim,
            trials: self.trials,
            seed: self.seed,
            q: self.q,
            n_trunc: self.n,
            k_order: self.k,
            phi: self.phi.clone(),
            torsion: self.torsion.clone(),
            u: self.u.clone(),
            v: self.v.clone(),
            w: self.w.clone(),
            out: self.out.clone(),
            sequential: self.sequential,
        }
    }
}

fn complex_text(z: &report::Numeric) -> String {
    match (z.re.as_str(), z.im.as_str()) {
        (re, "0") => re.to_string(),
        ("0", im) => format!("{im}i"),
        (re, im) => match im.strip_prefix('-') {
            Some(mag) => format!("{re} - {mag}i"),
            None => format!("{re} + {im}i"),
        },
    }
}

fn summary(report: &Report) -> String {
    let mut lines = Vec::new();
    if let Some(e) = &report.evaluation {
        let z = &e.torsion_functional;
        lines.push(format!("V(S^{}) = {}", e.dim - 1, e.volume));
        lines.push(format!("torsion functional = {} ≈ {}", z.display, complex_text(&z.numeric)));
        lines.push(format!("closed form        = {}", e.closed_form.display));
    }
    if let Some(table) = &report.table {
        for row in table {
            let mark = if row.equal { "=" } else { "≠" };
            lines.push(format!("{:<44} {} {mark} {}", row.case, row.computed, row.expected));
        }
    }
    for c in &report.checks {
        let mut line = format!("{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name);
        if let Some(r) = &c.residual {
            line.push_str(&format!(" (residual {r})"));
        }
        if !c.passed {
            line.push_str(&format!(": expected {}, computed {}", c.expected, c.computed));
        }
        if !c.detail.is_empty() {
            line.push_str(&format!(" [{}]", c.detail));
        }
        lines.push(line);
    }
    if !report.checks.is_empty() {
        let failed = report.checks.iter().filter(|c| !c.passed).count();
        lines.push(format!("{} passed, {failed} failed", report.checks.len() - failed));
    }
    lines.join("\n")
}

fn run(cli: &Cli) -> Result<Report, CommandError> {
    let file = match &cli.options.config {
        Some(path) => ConfigFile::load(path)?,
        None => ConfigFile::default(),
    };
    let command = match &cli.command {
        Command::Verify => "verify",
        Command::Eval => "eval",
        Command::Examples { .. } => "examples",
    };
    let config = RunConfig::resolve(command, file, cli.options.overrides())?;
    let start = Instant::now();
    let report = match &cli.command {
        Command::Verify => commands::verify(&config),
        Command::Eval => commands::eval(&config)?,
        Command::Examples { which } => commands::examples(*which, &config)?,
    };
    let report = report.finish(start.elapsed());
    if let Some(path) = &config.out {
        std::fs::write(path, report.to_json() + "\n").map_err(|e| {
            config::ConfigError::Invalid(format!("cannot write {}: {e}", path.display()))
        })?;
    }
    Ok(report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.options.json {
                println!("{}", report.to_json());
            } else {
                println!("{}", summary(&report));
            }
            if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CommandError::Config(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }
}
