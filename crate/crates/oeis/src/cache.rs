//! On-disk cache, one file per sequence.
//!
//! Each file holds a single record in the catalog's pinned-prefix format
//! followed by two more tab-separated fields, the fetch time (RFC 3339) and
//! the source URL:
//!
//! ```text
//! A000108 <TAB> A000108 <TAB> 0 <TAB> 1,1,2,5,14 <TAB> OEIS <TAB> 2026-01-01T00:00:00+00:00 <TAB> https://...
//! ```

use std::fs;
use std::io::ErrorKind;
use std::path::{Path, PathBuf};

use belltrans::catalog::PinnedRecord;
use belltrans::sequence::{as_integer, Rational};
use chrono::DateTime;

use crate::{CachedSequence, Error, OeisId, Result};

/// Overrides the cache location.
pub const CACHE_DIR_ENV: &str = "BELLTRANS_CACHE_DIR";

/// `$BELLTRANS_CACHE_DIR`, else `<user cache dir>/belltrans/oeis`.
pub fn default_cache_dir() -> Option<PathBuf> {
    match std::env::var_os(CACHE_DIR_ENV) {
        Some(dir) if !dir.is_empty() => Some(PathBuf::from(dir)),
        _ => dirs::cache_dir().map(|d| d.join("belltrans").join("oeis")),
    }
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, id: OeisId) -> PathBuf {
        self.dir.join(format!("{id}.tsv"))
    }

    pub fn load(&self, id: OeisId) -> Result<CachedSequence> {
        let path = self.path(id);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == ErrorKind::NotFound => return Err(Error::NotFound(id)),
            Err(source) => return Err(Error::Io { path, source }),
        };
        decode(&text, id).map_err(|message| Error::Corrupt { path, message })
    }

    /// Writes through a temporary file so readers never see a partial record.
    pub fn store(&self, seq: &CachedSequence) -> Result<()> {
        let io = |path: &Path| {
            let path = path.to_path_buf();
            move |source| Error::Io { path, source }
        };
        fs::create_dir_all(&self.dir).map_err(io(&self.dir))?;
        let path = self.path(seq.id);
        let tmp = path.with_extension("tsv.tmp");
        fs::write(&tmp, encode(seq)).map_err(io(&tmp))?;
        fs::rename(&tmp, &path).map_err(io(&path))
    }

    /// Removes the entry; false when there was none.
    pub fn remove(&self, id: OeisId) -> Result<bool> {
        let path = self.path(id);
        match fs::remove_file(&path) {
            Ok(()) => Ok(true),
            Err(e) if e.kind() == ErrorKind::NotFound => Ok(false),
            Err(source) => Err(Error::Io { path, source }),
        }
    }
}

fn encode(seq: &CachedSequence) -> String {
    let record = PinnedRecord {
        key: seq.id.to_string(),
        oeis_id: Some(seq.id.to_string()),
        offset: seq.offset,
        terms: seq.terms.iter().cloned().map(Rational::from_integer).collect(),
        provenance: "OEIS".into(),
    };
    format!("{record}\t{}\t{}\n", seq.fetched_at.to_rfc3339(), seq.source_url)
}

fn decode(text: &str, id: OeisId) -> std::result::Result<CachedSequence, String> {
    let line = text
        .lines()
        .find(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .ok_or("no record")?;
    let fields: Vec<&str> = line.split('\t').collect();
    if fields.len() != 7 {
        return Err(format!("expected 7 tab-separated fields, found {}", fields.len()));
    }
    let record = PinnedRecord::from_fields(&fields[..5], 1).map_err(|e| e.to_string())?;
    if record.oeis_id.as_deref() != Some(id.to_string().as_str()) {
        return Err(format!("record is for {:?}, not {id}", record.oeis_id));
    }
    let terms = record
        .terms
        .iter()
        .map(|t| as_integer(t).ok_or_else(|| format!("non-integer term {t}")))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let fetched_at = DateTime::parse_from_rfc3339(fields[5])
        .map_err(|e| format!("bad timestamp `{}`: {e}", fields[5]))?
        .to_utc();
    CachedSequence::new(id, record.offset, terms, fetched_at, fields[6].to_string())
        .map_err(|e| e.to_string())
}
