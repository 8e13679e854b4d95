//! Optional TOML configuration. Command-line flags override it.
//!
//! ```toml
//! offline = true
//! format = "json"
//! n = 12
//! min_match = 8
//! cache_dir = "/tmp/oeis"
//!
//! [grid]
//! a = ["-3", "-2", "-1", "0", "1", "2", "3"]
//! c = ["-1", "1/2"]
//! inverse = false
//! pre_ops = ["R"]
//! ```

use std::path::{Path, PathBuf};

use belltrans::discovery::SearchGrid;
use belltrans::sequence::parse_rational;
use belltrans::{Atom, Rational};
use serde::Deserialize;

use crate::args::Format;
use crate::error::CliError;

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub offline: Option<bool>,
    pub format: Option<Format>,
    pub n: Option<usize>,
    pub min_match: Option<usize>,
    pub cache_dir: Option<PathBuf>,
    #[serde(default)]
    pub grid: GridConfig,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    pub a: Option<Vec<Value>>,
    pub b: Option<Vec<Value>>,
    pub c: Option<Vec<Value>>,
    pub d: Option<Vec<Value>>,
    pub inverse: Option<bool>,
    pub pre_ops: Option<Vec<String>>,
}

/// Grid values may be written as TOML integers or as `"p/q"` strings.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Int(i64),
    Str(String),
}

impl Config {
    pub fn load(path: &Path) -> Result<Config, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        toml::from_str(&text).map_err(|e| CliError::Usage(format!("config {}: {e}", path.display())))
    }

    pub fn grid(&self) -> Result<SearchGrid, CliError> {
        let mut grid = SearchGrid::default();
        let values = |v: &Option<Vec<Value>>, into: &mut Vec<Rational>| -> Result<(), CliError> {
            if let Some(v) = v {
                *into = v
                    .iter()
                    .map(|x| match x {
                        Value::Int(i) => Ok(Rational::from_integer((*i).into())),
                        Value::Str(s) => parse_rational(s).map_err(CliError::from_arg),
                    })
                    .collect::<Result<_, _>>()?;
            }
            Ok(())
        };
        values(&self.grid.a, &mut grid.a)?;
        values(&self.grid.b, &mut grid.b)?;
        values(&self.grid.c, &mut grid.c)?;
        values(&self.grid.d, &mut grid.d)?;
        if let Some(inv) = self.grid.inverse {
            grid.inverse = inv;
        }
        if let Some(ops) = &self.grid.pre_ops {
            grid.pre_ops = ops
                .iter()
                .map(|s| s.parse::<Atom>().map_err(CliError::from_arg))
                .collect::<Result<_, _>>()?;
        }
        Ok(grid)
    }
}
