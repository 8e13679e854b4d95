use belltrans::discovery::RelationHypothesis;
use belltrans::identities::CheckReport;
use belltrans::sequence::format_rational;
use belltrans::{Rational, Sequence};
use serde_json::{json, Map, Value};

use crate::args::Format;

pub enum Payload {
    Sequence(Sequence),
    /// Row `n` holds entries for `k = 1..=n`.
    Table(Vec<Vec<Rational>>),
    Reports(Vec<CheckReport>),
    Hypotheses(Vec<RelationHypothesis>),
    /// Rows of named fields, e.g. catalog entries.
    Records(Vec<Vec<(&'static str, String)>>),
    /// Named fields followed by terms.
    Described(Vec<(&'static str, String)>, Sequence),
    Text(String),
}

pub struct Output {
    pub command: String,
    pub params: Vec<(&'static str, String)>,
    pub payload: Payload,
}

fn csv(terms: &[Rational]) -> String {
    terms.iter().map(format_rational).collect::<Vec<_>>().join(",")
}

fn strings(terms: &[Rational]) -> Value {
    Value::Array(terms.iter().map(|t| Value::String(format_rational(t))).collect())
}

fn fields(pairs: &[(&'static str, String)]) -> Map<String, Value> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), Value::String(v.clone())))
        .collect()
}

fn report_json(r: &CheckReport) -> Value {
    json!({
        "identity": r.identity,
        "params": r.params,
        "order": r.order,
        "pass": r.pass,
        "seed": r.seed,
        "witness": r.witness.as_ref().map(|w| json!({
            "index": w.index,
            "lhs": format_rational(&w.lhs),
            "rhs": format_rational(&w.rhs),
        })),
    })
}

impl Output {
    pub fn new(command: impl Into<String>, payload: Payload) -> Self {
        Output {
            command: command.into(),
            params: Vec::new(),
            payload,
        }
    }

    pub fn param(mut self, name: &'static str, value: impl ToString) -> Self {
        self.params.push((name, value.to_string()));
        self
    }

    /// False when any check report failed.
    pub fn passed(&self) -> bool {
        match &self.payload {
            Payload::Reports(rs) => rs.iter().all(|r| r.pass),
            _ => true,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Plain => self.plain(),
            Format::Json => {
                let result = match &self.payload {
                    Payload::Sequence(s) => strings(s.terms()),
                    Payload::Table(rows) => Value::Array(rows.iter().map(|r| strings(r)).collect()),
                    Payload::Reports(rs) => Value::Array(rs.iter().map(report_json).collect()),
                    Payload::Hypotheses(hs) => Value::Array(
                        hs.iter()
                            .map(|h| {
                                json!({
                                    "source": h.source,
                                    "target": h.target,
                                    "word": h.word.to_string(),
                                    "matched": h.matched,
                                    "status": h.status.to_string(),
                                })
                            })
                            .collect(),
                    ),
                    Payload::Records(rows) => {
                        Value::Array(rows.iter().map(|r| Value::Object(fields(r))).collect())
                    }
                    Payload::Described(info, terms) => {
                        let mut m = fields(info);
                        m.insert("terms".into(), strings(terms.terms()));
                        Value::Object(m)
                    }
                    Payload::Text(t) => Value::String(t.clone()),
                };
                let out = json!({
                    "command": self.command,
                    "params": Value::Object(fields(&self.params)),
                    "result": result,
                });
                serde_json::to_string_pretty(&out).expect("JSON values serialize") + "\n"
            }
        }
    }

    fn plain(&self) -> String {
        let mut lines: Vec<String> = match &self.payload {
            Payload::Sequence(s) => vec![s.to_csv()],
            Payload::Table(rows) => rows.iter().map(|r| csv(r)).collect(),
            Payload::Reports(rs) => rs.iter().map(ToString::to_string).collect(),
            Payload::Hypotheses(hs) if hs.is_empty() => vec!["no relation found".into()],
            Payload::Hypotheses(hs) => hs.iter().map(ToString::to_string).collect(),
            Payload::Records(rows) => rows
                .iter()
                .map(|r| r.iter().map(|(_, v)| v.as_str()).collect::<Vec<_>>().join("\t"))
                .collect(),
            Payload::Described(info, terms) => {
                let mut v: Vec<String> = info.iter().map(|(k, val)| format!("{k}: {val}")).collect();
                v.push(format!("terms: {}", terms.to_csv()));
                v
            }
            Payload::Text(t) => vec![t.clone()],
        };
        lines.push(String::new());
        lines.join("\n")
    }
}
