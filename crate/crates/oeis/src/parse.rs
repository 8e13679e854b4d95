//! Parsers for the two OEIS response formats.

use num_bigint::BigInt;
use serde_json::Value;

use crate::{Error, OeisId, Result};

/// `(offset, terms)` from a b-file: one `index value` pair per line, with
/// `#` comments and blank lines ignored. Indices must be consecutive.
pub fn parse_bfile(text: &str, url: &str) -> Result<(i64, Vec<BigInt>)> {
    let bad = |message: String| Error::Parse {
        url: url.to_string(),
        message,
    };
    let mut offset = None;
    let mut terms = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let (Some(i), Some(v), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(bad(format!("line {}: expected `index value`", no + 1)));
        };
        let i: i64 = i
            .parse()
            .map_err(|_| bad(format!("line {}: bad index `{i}`", no + 1)))?;
        let v: BigInt = v
            .parse()
            .map_err(|_| bad(format!("line {}: bad value `{v}`", no + 1)))?;
        let start = *offset.get_or_insert(i);
        if i != start + terms.len() as i64 {
            return Err(bad(format!("line {}: index {i} out of sequence", no + 1)));
        }
        terms.push(v);
    }
    match offset {
        Some(o) => Ok((o, terms)),
        None => Err(bad("no terms".into())),
    }
}

/// `(offset, terms)` from the JSON search endpoint. Both the older
/// `{"results": [...]}` envelope and a bare array of results are accepted;
/// the result whose `number` matches `id` is used.
pub fn parse_json(text: &str, id: OeisId, url: &str) -> Result<(i64, Vec<BigInt>)> {
    let bad = |message: String| Error::Parse {
        url: url.to_string(),
        message,
    };
    let v: Value = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    let results = match &v {
        Value::Array(a) => a,
        Value::Object(o) => match o.get("results") {
            Some(Value::Array(a)) => a,
            _ => return Err(bad("no results".into())),
        },
        _ => return Err(bad("unexpected JSON shape".into())),
    };
    let entry = results
        .iter()
        .find(|r| r.get("number").and_then(Value::as_u64) == Some(id.number() as u64))
        .ok_or_else(|| bad(format!("{id} not among the results")))?;
    let data = entry
        .get("data")
        .and_then(Value::as_str)
        .ok_or_else(|| bad("missing `data`".into()))?;
    let terms = data
        .split(',')
        .map(|t| t.trim().parse::<BigInt>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|e| bad(format!("bad term in `data`: {e}")))?;
    if terms.is_empty() {
        return Err(bad("empty `data`".into()));
    }
    // `offset` is "first index,position of first term > 1"
    let offset = entry
        .get("offset")
        .and_then(Value::as_str)
        .and_then(|o| o.split(',').next())
        .and_then(|o| o.trim().parse::<i64>().ok())
        .ok_or_else(|| bad("missing or malformed `offset`".into()))?;
    Ok((offset, terms))
}
