//! Run configuration: command-line flags layered over an optional JSON file.

use std::path::{Path, PathBuf};

use num::Zero;
use serde::{Deserialize, Serialize};

use spectral_torsion::parallel::Execution;
use spectral_torsion::scalar::{parse_rational, Gaussian, Rational};
use spectral_torsion::torsion::TorsionTensor;
use spectral_torsion::verify::VerifyConfig;

pub const MIN_DIM: usize = 2;
pub const MAX_DIM: usize = 8;

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum ConfigError {
    #[error("cannot read config file {path}: {reason}")]
    Read { path: String, reason: String },
    #[error("invalid config file: {0}")]
    Json(String),
    #[error("dimension {0} outside [{MIN_DIM}, {MAX_DIM}]")]
    Dimension(usize),
    #[error("non-increasing index triple [{0}, {1}, {2}]")]
    NonIncreasing(usize, usize, usize),
    #[error("index {index} in triple [{a}, {b}, {c}] outside 1..={dim}", a = .triple[0], b = .triple[1], c = .triple[2])]
    IndexOutOfRange { index: usize, triple: [usize; 3], dim: usize },
    #[error("duplicate torsion entry [{0}, {1}, {2}]")]
    Duplicate(usize, usize, usize),
    #[error("invalid rational {0:?}")]
    Rational(String),
    #[error("invalid complex number {0:?}")]
    Complex(String),
    #[error("malformed torsion entry {0:?}; expected a,b,c=value")]
    TorsionFlag(String),
    #[error("one-form {name} has {got} components, dimension is {dim}")]
    FormLength { name: &'static str, got: usize, dim: usize },
    #[error("one-form {0} is required")]
    MissingForm(&'static str),
    #[error("{0}")]
    Invalid(String),
}

/// A rational given as a JSON integer or a `"p/q"` string.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum RationalInput {
    Int(i64),
    Text(String),
}

impl RationalInput {
    fn parse(&self) -> Result<Rational, ConfigError> {
        match self {
            RationalInput::Int(v) => Ok(Rational::from_integer((*v).into())),
            RationalInput::Text(s) => parse_rational(s).ok_or_else(|| ConfigError::Rational(s.clone())),
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TorsionEntry {
    /// 1-based frame indices.
    pub indices: Vec<usize>,
    pub value: RationalInput,
}

/// Contents of a `--config` file. Every field is optional.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub command: Option<String>,
    pub dims: Option<Vec<usize>>,
    pub dim: Option<usize>,
    pub trials: Option<usize>,
    pub seed: Option<u64>,
    pub q: Option<f64>,
    #[serde(rename = "N")]
    pub n_trunc: Option<usize>,
    #[serde(rename = "K")]
    pub k_order: Option<usize>,
    pub phi: Option<String>,
    pub torsion: Option<Vec<TorsionEntry>>,
    pub u: Option<Vec<RationalInput>>,
    pub v: Option<Vec<RationalInput>>,
    pub w: Option<Vec<RationalInput>>,
    pub out: Option<PathBuf>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|e| ConfigError::Read {
            path: path.display().to_string(),
            reason: e.to_string(),
        })?;
        serde_json::from_str(&text).map_err(|e| ConfigError::Json(e.to_string()))
    }
}

/// Command-line overrides, in the same shape as the file.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub dims: Option<Vec<usize>>,
    pub dim: Option<usize>,
    pub trials: Option<usize>,
    pub seed: Option<u64>,
    pub q: Option<f64>,
    pub n_trunc: Option<usize>,
    pub k_order: Option<usize>,
    pub phi: Option<String>,
    /// `a,b,c=value` entries.
    pub torsion: Vec<String>,
    pub u: Option<String>,
    pub v: Option<String>,
    pub w: Option<String>,
    pub out: Option<PathBuf>,
    pub sequential: bool,
}

/// Fully resolved and validated configuration.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: String,
    pub dims: Vec<usize>,
    pub dim: usize,
    pub trials: usize,
    pub seed: u64,
    pub q: f64,
    /// Truncation for the quantum disc, matrix size for the gauge model.
    pub n_trunc: Option<usize>,
    pub k_order: usize,
    pub phi: Gaussian,
    /// 1-based triples with their values, as given.
    pub torsion_entries: Vec<([usize; 3], Rational)>,
    pub u: Option<Vec<Rational>>,
    pub v: Option<Vec<Rational>>,
    pub w: Option<Vec<Rational>>,
    pub out: Option<PathBuf>,
    pub execution: Execution,
}

/// Parses `a+bi`, `a-bi`, `bi`, `i`, `a` with rational parts.
pub fn parse_complex(text: &str) -> Result<Gaussian, ConfigError> {
    let err = || ConfigError::Complex(text.to_string());
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(err());
    }
    let Some(body) = s.strip_suffix('i') else {
        return parse_rational(&s).map(Gaussian::real).ok_or_else(err);
    };
    let split = body.char_indices().skip(1).filter(|(_, c)| *c == '+' || *c == '-').map(|(i, _)| i).last();
    let (re, im) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => "1",
        "-" => "-1",
        other => other.strip_prefix('+').unwrap_or(other),
    };
    let re = parse_rational(re).ok_or_else(err)?;
    let im = parse_rational(im).ok_or_else(err)?;
    Ok(Gaussian::new(re, im))
}

fn parse_torsion_flag(text: &str) -> Result<TorsionEntry, ConfigError> {
    let err = || ConfigError::TorsionFlag(text.to_string());
    let (idx, value) = text.split_once('=').ok_or_else(err)?;
    let indices = idx
        .split(',')
        .map(|s| s.trim().parse::<usize>().map_err(|_| err()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TorsionEntry {
        indices,
        value: RationalInput::Text(value.trim().to_string()),
    })
}

fn parse_list(text: &str) -> Vec<RationalInput> {
    text.split(',').map(|s| RationalInput::Text(s.trim().to_string())).collect()
}

fn check_dim(n: usize) -> Result<usize, ConfigError> {
    if (MIN_DIM..=MAX_DIM).contains(&n) {
        Ok(n)
    } else {
        Err(ConfigError::Dimension(n))
    }
}

fn validate_entry(entry: &TorsionEntry, dim: usize) -> Result<([usize; 3], Rational), ConfigError> {
    let [a, b, c] = <[usize; 3]>::try_from(entry.indices.as_slice())
        .map_err(|_| ConfigError::Invalid(format!("torsion indices {:?} must have three entries", entry.indices)))?;
    if !(a < b && b < c) {
        return Err(ConfigError::NonIncreasing(a, b, c));
    }
    if let Some(&index) = [a, b, c].iter().find(|&&i| i == 0 || i > dim) {
        return Err(ConfigError::IndexOutOfRange {
            index,
            triple: [a, b, c],
            dim,
        });
    }
    Ok(([a, b, c], entry.value.parse()?))
}

fn form(name: &'static str, values: Option<Vec<RationalInput>>, dim: usize) -> Result<Option<Vec<Rational>>, ConfigError> {
    let Some(values) = values else { return Ok(None) };
    if values.len() != dim {
        return Err(ConfigError::FormLength {
            name,
            got: values.len(),
            dim,
        });
    }
    values.iter().map(RationalInput::parse).collect::<Result<Vec<_>, _>>().map(Some)
}

impl RunConfig {
    pub fn resolve(command: &str, file: ConfigFile, flags: Overrides) -> Result<Self, ConfigError> {
        if let Some(c) = &file.command {
            if c != command {
                return Err(ConfigError::Invalid(format!("config file is for command {c:?}, running {command:?}")));
            }
        }
        let defaults = VerifyConfig::default();
        let dims = flags.dims.or(file.dims).unwrap_or(defaults.dims);
        if dims.is_empty() {
            return Err(ConfigError::Invalid("no dimensions requested".into()));
        }
        for &n in &dims {
            check_dim(n)?;
        }
        let dim = check_dim(flags.dim.or(file.dim).unwrap_or(4))?;
        let trials = flags.trials.or(file.trials).unwrap_or(defaults.trials);
        let q = flags.q.or(file.q).unwrap_or(defaults.q);
        if !(q > 0.0 && q < 1.0) {
            return Err(ConfigError::Invalid(format!("q = {q} must lie in (0, 1)")));
        }
        let n_trunc = flags.n_trunc.or(file.n_trunc);
        if n_trunc == Some(0) {
            return Err(ConfigError::Invalid("N must be positive".into()));
        }
        let k_order = flags.k_order.or(file.k_order).unwrap_or(defaults.k_order);
        if k_order < 1 {
            return Err(ConfigError::Invalid("K must be at least 1".into()));
        }
        let phi = match flags.phi.or(file.phi) {
            Some(text) => parse_complex(&text)?,
            None => defaults.phi,
        };

        let mut entries = file.torsion.unwrap_or_default();
        for text in &flags.torsion {
            entries.push(parse_torsion_flag(text)?);
        }
        let mut torsion_entries: Vec<([usize; 3], Rational)> = Vec::new();
        for entry in &entries {
            let (triple, value) = validate_entry(entry, dim)?;
            if torsion_entries.iter().any(|(t, _)| *t == triple) {
                return Err(ConfigError::Duplicate(triple[0], triple[1], triple[2]));
            }
            torsion_entries.push((triple, value));
        }
        let u = form("u", flags.u.as_deref().map(parse_list).or(file.u), dim)?;
        let v = form("v", flags.v.as_deref().map(parse_list).or(file.v), dim)?;
        let w = form("w", flags.w.as_deref().map(parse_list).or(file.w), dim)?;

        Ok(Self {
            command: command.to_string(),
            dims,
            dim,
            trials,
            seed: flags.seed.or(file.seed).unwrap_or(defaults.seed),
            q,
            n_trunc,
            k_order,
            phi,
            torsion_entries,
            u,
            v,
            w,
            out: flags.out.or(file.out),
            execution: if flags.sequential {
                Execution::Sequential
            } else {
                Execution::Parallel
            },
        })
    }

    /// Torsion tensor in 0-based storage.
    pub fn torsion(&self) -> TorsionTensor {
        let mut t = TorsionTensor::zero(self.dim);
        for ([a, b, c], value) in &self.torsion_entries {
            t.set(a - 1, b - 1, c - 1, value.clone()).expect("validated triple");
        }
        t
    }

    pub fn verify_config(&self) -> VerifyConfig {
        VerifyConfig {
            dims: self.dims.clone(),
            trials: self.trials,
            seed: self.seed,
            q: self.q,
            n_trunc: self.n_trunc.unwrap_or(VerifyConfig::default().n_trunc),
            k_order: self.k_order,
            phi: self.phi.clone(),
            execution: self.execution,
            ..VerifyConfig::default()
        }
    }

    pub fn echo(&self) -> ConfigEcho {
        let list = |f: &Option<Vec<Rational>>| f.as_ref().map(|v| v.iter().map(|r| r.to_string()).collect());
        ConfigEcho {
            command: self.command.clone(),
            dims: self.dims.clone(),
            dim: self.dim,
            trials: self.trials,
            seed: self.seed,
            q: self.q,
            n_trunc: self.n_trunc,
            k_order: self.k_order,
            phi: self.phi.to_string(),
            torsion: self
                .torsion_entries
                .iter()
                .filter(|(_, v)| !v.is_zero())
                .map(|(t, v)| EchoEntry {
                    indices: *t,
                    value: v.to_string(),
                })
                .collect(),
            u: list(&self.u),
            v: list(&self.v),
            w: list(&self.w),
            out: self.out.as_ref().map(|p| p.display().to_string()),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EchoEntry {
    pub indices: [usize; 3],
    pub value: String,
}

/// The resolved configuration as written into the report.
#[derive(Clone, Debug, Serialize)]
pub struct ConfigEcho {
    pub command: String,
    pub dims: Vec<usize>,
    pub dim: usize,
    pub trials: usize,
    pub seed: u64,
    pub q: f64,
    #[serde(rename = "N", skip_serializing_if = "Option::is_none")]
    pub n_trunc: Option<usize>,
    #[serde(rename = "K")]
    pub k_order: usize,
    pub phi: String,
    pub torsion: Vec<EchoEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub v: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub out: Option<String>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use spectral_torsion::scalar::{rat, rat_int};

    #[test]
    fn complex_forms() {
        assert_eq!(parse_complex("1+0i").unwrap(), Gaussian::from_int(1));
        assert_eq!(parse_complex("i").unwrap(), Gaussian::i());
        assert_eq!(parse_complex("-i").unwrap(), Gaussian::new(rat_int(0), rat_int(-1)));
        assert_eq!(parse_complex("1/2-3/2i").unwrap(), Gaussian::new(rat(1, 2), rat(-3, 2)));
        assert_eq!(parse_complex(" 2 + i ").unwrap(), Gaussian::new(rat_int(2), rat_int(1)));
        assert_eq!(parse_complex("-3").unwrap(), Gaussian::from_int(-3));
        assert_eq!(parse_complex("0").unwrap(), Gaussian::from_int(0));
        assert!(parse_complex("1+").is_err());
        assert!(parse_complex("x").is_err());
    }

    fn with_entry(indices: Vec<usize>) -> Result<RunConfig, ConfigError> {
        let file = ConfigFile {
            dim: Some(4),
            torsion: Some(vec![TorsionEntry {
                indices,
                value: RationalInput::Text("1/2".into()),
            }]),
            ..ConfigFile::default()
        };
        RunConfig::resolve("eval", file, Overrides::default())
    }

    #[test]
    fn torsion_keys_are_validated() {
        assert_eq!(
            with_entry(vec![1, 1, 2]).unwrap_err().to_string(),
            "non-increasing index triple [1, 1, 2]"
        );
        assert!(matches!(with_entry(vec![0, 1, 2]), Err(ConfigError::IndexOutOfRange { index: 0, .. })));
        assert!(matches!(with_entry(vec![2, 3, 5]), Err(ConfigError::IndexOutOfRange { index: 5, .. })));
        assert!(with_entry(vec![1, 2]).is_err());
        let t = with_entry(vec![2, 3, 4]).unwrap().torsion();
        assert_eq!(t.get(1, 2, 3), rat(1, 2));
        assert_eq!(t.get(3, 2, 1), rat(-1, 2));
    }

    #[test]
    fn flags_override_file() {
        let file = ConfigFile {
            seed: Some(5),
            dims: Some(vec![3]),
            ..ConfigFile::default()
        };
        let flags = Overrides {
            seed: Some(9),
            torsion: vec!["1,2,3=2".into()],
            u: Some("1,0,0,0".into()),
            ..Overrides::default()
        };
        let c = RunConfig::resolve("eval", file, flags).unwrap();
        assert_eq!((c.seed, c.dims.clone()), (9, vec![3]));
        assert_eq!(c.torsion().get(0, 1, 2), rat_int(2));
        assert_eq!(c.u.unwrap()[0], rat_int(1));
    }

    #[test]
    fn rejects_bad_sizes() {
        let flags = |dims: Vec<usize>| Overrides {
            dims: Some(dims),
            ..Overrides::default()
        };
        assert_eq!(
            RunConfig::resolve("verify", ConfigFile::default(), flags(vec![9])).unwrap_err(),
            ConfigError::Dimension(9)
        );
        assert!(RunConfig::resolve("verify", ConfigFile::default(), flags(vec![1])).is_err());
        let q = Overrides {
            q: Some(1.5),
            ..Overrides::default()
        };
        assert!(RunConfig::resolve("examples", ConfigFile::default(), q).is_err());
    }
}
