//! Plain `key = value` configuration files and presentation loading.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use tautring::RingPresentation;

use crate::error::{CliError, CliResult};
use crate::eval::Env;
use crate::value::Value;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Json,
}

impl FromStr for Format {
    type Err = CliError;
    fn from_str(s: &str) -> CliResult<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            other => Err(CliError::Config(format!("unknown format `{other}` (text or json)"))),
        }
    }
}

/// Settings read from a config file; unset keys are `None`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FileConfig {
    pub trunc: Option<u32>,
    pub only: Option<Vec<String>>,
    pub format: Option<Format>,
    pub presentation: Option<PathBuf>,
}

pub fn split_list(s: &str) -> Vec<String> {
    s.split(',').map(str::trim).filter(|x| !x.is_empty()).map(String::from).collect()
}

impl FileConfig {
    pub fn parse(text: &str) -> CliResult<Self> {
        let mut cfg = FileConfig::default();
        for (no, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: String| CliError::Config(format!("line {}: {msg}", no + 1));
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| bad("expected `key = value`".into()))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "trunc" => {
                    cfg.trunc = Some(value.parse().map_err(|_| bad(format!("bad truncation `{value}`")))?)
                }
                "only" => cfg.only = Some(split_list(value)),
                "format" => cfg.format = Some(value.parse()?),
                "presentation" => cfg.presentation = Some(PathBuf::from(value)),
                other => return Err(bad(format!("unknown key `{other}`"))),
            }
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> CliResult<Self> {
        Self::parse(&read(path)?)
    }
}

pub fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })
}

/// A presentation given either as a program whose last value is a ring,
/// or in the line format of [`RingPresentation::to_text`].
pub fn parse_presentation(text: &str) -> CliResult<RingPresentation> {
    let trimmed = text.trim_start();
    let line_format = trimmed.starts_with('#') || trimmed.lines().next().is_some_and(|l| l.trim_end().ends_with(']'));
    if line_format {
        return Ok(RingPresentation::from_text(text)?);
    }
    match Env::default().run(text)? {
        Some(Value::Ring(r)) => Ok((*r).clone()),
        Some(other) => Err(CliError::Type(format!("presentation evaluates to a {}, not a ring", other.kind()))),
        None => Err(CliError::Type("presentation file defines no ring".into())),
    }
}

pub fn load_presentation(path: &Path) -> CliResult<RingPresentation> {
    parse_presentation(&read(path)?)
}
