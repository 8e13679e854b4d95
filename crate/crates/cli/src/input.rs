//! Resolution of `--input` values.
//!
//! In order of precedence a value is read as a catalog key, an OEIS
//! A-number, the path of a record file, or an inline comma-separated list.

use std::cell::OnceCell;
use std::path::{Path, PathBuf};

use belltrans::catalog::{parse_records, Catalog};
use belltrans::{Error, Sequence};
use belltrans_oeis::{OeisClient, OeisId};

use crate::args::InputArgs;
use crate::error::CliError;

/// Length used for generated catalog entries when none is given.
const DEFAULT_LEN: usize = 10;

/// Longest prefix accepted on the command line; Bell tables grow as `n^2`.
pub const MAX_TERMS: usize = 1000;

pub struct Inputs {
    offline: bool,
    cache_dir: Option<PathBuf>,
    client: OnceCell<OeisClient>,
}

pub fn check_len(n: Option<usize>) -> Result<(), CliError> {
    match n {
        Some(n) if n > MAX_TERMS => Err(Error::SizeBound {
            kind: "prefix length",
            n,
            max: MAX_TERMS,
        }
        .into()),
        _ => Ok(()),
    }
}

fn cut(x: Sequence, n: Option<usize>) -> Result<Sequence, CliError> {
    match n {
        Some(0) => Err(CliError::Usage("--n must be positive".into())),
        Some(n) if n > x.len() => Err(Error::Length {
            needed: n,
            available: x.len(),
        }
        .into()),
        Some(n) => Ok(x.prefix(n)?),
        None => Ok(x),
    }
}

impl Inputs {
    pub fn new(offline: bool, cache_dir: Option<PathBuf>) -> Self {
        Inputs {
            offline,
            cache_dir,
            client: OnceCell::new(),
        }
    }

    pub fn client(&self) -> Result<&OeisClient, CliError> {
        if self.client.get().is_none() {
            let mut builder = OeisClient::builder().offline(self.offline);
            if let Some(dir) = &self.cache_dir {
                builder = builder.cache_dir(dir);
            }
            let _ = self.client.set(builder.build()?);
        }
        Ok(self.client.get().expect("initialized above"))
    }

    /// `(label, terms)`; `default_n` applies when the argument has no `--n`.
    pub fn resolve(
        &self,
        args: &InputArgs,
        default_n: Option<usize>,
    ) -> Result<(String, Sequence), CliError> {
        let spec = args.input.trim();
        let n = args.n.or(default_n);
        check_len(n)?;
        let cat = Catalog::standard();
        if let Ok(entry) = cat.get(spec) {
            let len = n.unwrap_or_else(|| entry.pinned.as_ref().map_or(DEFAULT_LEN, Vec::len));
            if len == 0 {
                return Err(CliError::Usage("--n must be positive".into()));
            }
            return Ok((entry.key.clone(), cat.get_prefix(spec, len)?));
        }
        if let Ok(id) = spec.parse::<OeisId>() {
            let seq = self.client()?.get(id)?;
            return Ok((id.to_string(), cut(seq.to_sequence()?, n)?));
        }
        let path = Path::new(spec);
        if path.is_file() {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
            let records =
                parse_records(&text).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
            let first = records
                .into_iter()
                .next()
                .ok_or_else(|| CliError::Data(format!("{}: no records", path.display())))?;
            return Ok((first.key, cut(Sequence::new(first.terms)?, n)?));
        }
        match spec.parse::<Sequence>() {
            Ok(x) => Ok(("inline".into(), cut(x, n)?)),
            Err(_) => Err(CliError::Usage(format!(
                "`{spec}` is not a catalog key, OEIS id, file or comma-separated sequence"
            ))),
        }
    }
}
