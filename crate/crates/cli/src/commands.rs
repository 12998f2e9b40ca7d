//! The three subcommands.

use spectral_torsion::random::rng_from_seed;
use spectral_torsion::symcalc::sphere_volume;
use spectral_torsion::torsion::{closed_form_torsion, torsion_functional};
use spectral_torsion::verify::{
    check_doubled_in, check_eym_model, check_suq2, check_torus, doubled_table, run_all, CheckRecord,
};

use crate::config::{ConfigError, RunConfig};
use crate::report::{Evaluation, Report};

#[derive(Debug, thiserror::Error)]
pub enum CommandError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("{0}")]
    Compute(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Example {
    Eym,
    Doubled,
    Nctorus,
    Suq2,
}

/// Default matrix size of the gauge model when `--N` is not given.
const DEFAULT_GAUGE_SIZE: usize = 2;
const MAX_GAUGE_SIZE: usize = 6;

pub fn verify(config: &RunConfig) -> Report {
    let records = run_all(&config.verify_config());
    Report::new("verify", config.echo(), &records)
}

pub fn eval(config: &RunConfig) -> Result<Report, CommandError> {
    let n = config.dim;
    let u = config.u.as_ref().ok_or(ConfigError::MissingForm("u"))?;
    let v = config.v.as_ref().ok_or(ConfigError::MissingForm("v"))?;
    let w = config.w.as_ref().ok_or(ConfigError::MissingForm("w"))?;
    let t = config.torsion();
    let compute = |e: spectral_torsion::torsion::TorsionError| CommandError::Compute(e.to_string());
    let value = torsion_functional(u, v, w, &t, n).map_err(compute)?;
    let closed = closed_form_torsion(u, v, w, &t, n).map_err(compute)?;
    let mut report = Report::new("eval", config.echo(), &[]);
    report.evaluation = Some(Evaluation {
        dim: n,
        volume: sphere_volume(n).to_string(),
        torsion_functional: (&value).into(),
        closed_form: (&closed).into(),
    });
    Ok(report)
}

fn even_dim(config: &RunConfig, what: &str) -> Result<usize, ConfigError> {
    if config.dim % 2 == 1 {
        return Err(ConfigError::Invalid(format!("{what} needs an even dimension, got {}", config.dim)));
    }
    Ok(config.dim)
}

pub fn examples(which: Example, config: &RunConfig) -> Result<Report, CommandError> {
    let vc = config.verify_config();
    let (name, records, table): (&str, Vec<CheckRecord>, _) = match which {
        Example::Eym => {
            let n = even_dim(config, "the gauge model")?;
            let size = config.n_trunc.unwrap_or(DEFAULT_GAUGE_SIZE);
            if size > MAX_GAUGE_SIZE {
                return Err(ConfigError::Invalid(format!("matrix size N = {size} exceeds {MAX_GAUGE_SIZE}")).into());
            }
            ("eym", vec![check_eym_model(&vc, n, size)], None)
        }
        Example::Doubled => {
            let n = even_dim(config, "the two-sheeted space")?;
            let table = doubled_table(n, &config.phi, &mut rng_from_seed(config.seed))
                .map_err(|e| CommandError::Compute(e.to_string()))?;
            ("doubled", vec![check_doubled_in(&vc, n)], Some(table))
        }
        Example::Nctorus => ("nctorus", vec![check_torus(&vc)], None),
        Example::Suq2 => ("suq2", vec![check_suq2(&vc)], None),
    };
    let mut report = Report::new(&format!("examples {name}"), config.echo(), &records);
    report.table = table;
    Ok(report)
}
