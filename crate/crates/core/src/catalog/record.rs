//! Line-oriented record format for pinned sequence prefixes.
//!
//! One record per line, five tab-separated fields:
//!
//! ```text
//! key <TAB> oeis_id <TAB> offset <TAB> terms <TAB> provenance
//! ```
//!
//! `oeis_id` is `-` when there is none, `offset` is the index of the first
//! listed term in the source numbering, and `terms` is a comma-separated list
//! of `p` or `p/q` values. Blank lines and lines starting with `#` are
//! ignored. Extra trailing fields are rejected so that files written by other
//! tools (such as the OEIS cache) can extend the format explicitly.

use std::fmt;

use crate::error::{Error, Result};
use crate::sequence::{format_rational, parse_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PinnedRecord {
    pub key: String,
    pub oeis_id: Option<String>,
    pub offset: i64,
    pub terms: Vec<Rational>,
    pub provenance: String,
}

impl PinnedRecord {
    /// Parses one record from its tab-separated fields; `line_no` is used in
    /// error messages only.
    pub fn from_fields(fields: &[&str], line_no: usize) -> Result<Self> {
        let bad = |msg: String| Error::Parse(format!("line {line_no}: {msg}"));
        let [key, id, offset, terms, provenance] = fields else {
            return Err(bad(format!(
                "expected 5 tab-separated fields, found {}",
                fields.len()
            )));
        };
        if key.is_empty() {
            return Err(bad("empty key".into()));
        }
        let oeis_id = match *id {
            "-" => None,
            other => Some(other.to_string()),
        };
        let offset: i64 = offset
            .trim()
            .parse()
            .map_err(|_| bad(format!("offset `{offset}` is not an integer")))?;
        let terms = terms
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()
            .map_err(|e| bad(e.to_string()))?;
        if provenance.trim().is_empty() {
            return Err(bad(format!("`{key}` has no provenance")));
        }
        Ok(PinnedRecord {
            key: key.to_string(),
            oeis_id,
            offset,
            terms,
            provenance: provenance.to_string(),
        })
    }

    /// Renders the five fields without a trailing newline.
    pub fn fields(&self) -> [String; 5] {
        [
            self.key.clone(),
            self.oeis_id.clone().unwrap_or_else(|| "-".into()),
            self.offset.to_string(),
            self.terms
                .iter()
                .map(format_rational)
                .collect::<Vec<_>>()
                .join(","),
            self.provenance.clone(),
        ]
    }
}

impl fmt::Display for PinnedRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fields().join("\t"))
    }
}

/// Parses a whole file of records.
pub fn parse_records(text: &str) -> Result<Vec<PinnedRecord>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|(i, l)| {
            let fields: Vec<&str> = l.split('\t').collect();
            PinnedRecord::from_fields(&fields, i + 1)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::{int, ratio};

    #[test]
    fn round_trip() {
        let r = PinnedRecord {
            key: "demo".into(),
            oeis_id: None,
            offset: 0,
            terms: vec![int(1), ratio(-3, 4), int(0)],
            provenance: "made up".into(),
        };
        let text = format!("# comment\n\n{r}\n");
        assert_eq!(text.lines().nth(2).unwrap(), "demo\t-\t0\t1,-3/4,0\tmade up");
        assert_eq!(parse_records(&text).unwrap(), vec![r]);
    }

    #[test]
    fn errors_name_the_line() {
        let err = parse_records("a\t-\t1\t1,2\tp\nb\t-\tx\t1\tp\n").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
        assert!(parse_records("a\t-\t1\t1,2\t \n").is_err());
        assert!(parse_records("a\t-\t1\t1,q\tp\n").is_err());
        assert!(parse_records("a\t-\t1\n").is_err());
    }
}
