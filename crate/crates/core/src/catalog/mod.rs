//! Registry of named sequences and brute-force enumerators.
//!
//! Every entry returns a 1-indexed [`Sequence`]; its first term is term
//! number `offset` in the source numbering (usually the OEIS one). An entry
//! is generated by a closed form, a recurrence, an operator word applied to
//! another entry, or a pinned prefix stored in `data/pinned.tsv`. Entries
//! with a generator may carry a pinned prefix as well; the two must agree.
//!
//! Parameterized families are looked up by key with arguments:
//! `fuss_catalan(m)`, `bizley_f(alpha,beta)`, `bizley(alpha,beta)` and
//! `duchon_theta(alpha,beta)`.

pub mod oracles;
mod record;

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::bell::bicubic_map_count;
use crate::error::{Error, Result};
use crate::sequence::{binomial, factorial, int, Rational, Sequence};
use crate::transform::{Atom, BellParams, OperatorWord};

pub use oracles::{oracle_count, Oracle};
pub use record::{parse_records, PinnedRecord};

const PINNED: &str = include_str!("../../data/pinned.tsv");

type TermFn = Arc<dyn Fn(usize) -> Rational + Send + Sync>;
type PrefixFn = Arc<dyn Fn(usize) -> Vec<Rational> + Send + Sync>;

#[derive(Clone)]
pub enum Generator {
    /// `n -> x_n`.
    ClosedForm(TermFn),
    /// `n -> (x_1, ..., x_n)`.
    Recurrence(PrefixFn),
    /// `word(source)`, truncated to the requested length.
    TransformOf { source: String, word: OperatorWord },
    /// Only the stored prefix is available.
    Pinned,
}

impl Generator {
    pub fn kind(&self) -> &'static str {
        match self {
            Generator::ClosedForm(_) => "closed_form",
            Generator::Recurrence(_) => "recurrence",
            Generator::TransformOf { .. } => "transform_of",
            Generator::Pinned => "pinned",
        }
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::TransformOf { source, word } => write!(f, "transform_of({word} {source})"),
            other => f.write_str(other.kind()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub key: String,
    pub oeis_id: Option<String>,
    pub offset: i64,
    pub generator: Generator,
    pub pinned: Option<Vec<Rational>>,
    pub provenance: String,
    pub description: String,
}

impl CatalogEntry {
    fn new(key: &str, oeis_id: Option<&str>, offset: i64, generator: Generator, description: &str) -> Self {
        CatalogEntry {
            key: key.to_string(),
            oeis_id: oeis_id.map(str::to_string),
            offset,
            generator,
            pinned: None,
            provenance: String::new(),
            description: description.to_string(),
        }
    }

    /// One-line summary of how the entry is produced.
    pub fn generator_summary(&self) -> String {
        match &self.generator {
            Generator::TransformOf { source, word } => format!("{word} applied to {source}"),
            g => g.kind().to_string(),
        }
    }
}

pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

fn closed(f: impl Fn(usize) -> Rational + Send + Sync + 'static) -> Generator {
    Generator::ClosedForm(Arc::new(f))
}

fn recurrence(f: impl Fn(usize) -> Vec<Rational> + Send + Sync + 'static) -> Generator {
    Generator::Recurrence(Arc::new(f))
}

fn transform_of(source: &str, word: &str) -> Generator {
    Generator::TransformOf {
        source: source.to_string(),
        word: word.parse().expect("built-in operator word"),
    }
}

fn bigint(b: BigInt) -> Rational {
    Rational::from_integer(b)
}

fn fuss_catalan(m: i64) -> Generator {
    closed(move |n| {
        let n = n as i64;
        Rational::new(binomial((m + 1) * n, n), BigInt::from(m * n + 1))
    })
}

fn bizley_f(alpha: i64, beta: i64) -> Generator {
    closed(move |j| {
        let s = (alpha + beta) * j as i64;
        Rational::new(binomial(s, alpha * j as i64), BigInt::from(s))
    })
}

/// `(alpha, beta)` from `name(alpha,beta)`.
fn parse_args(key: &str, name: &str) -> Option<Vec<i64>> {
    let inner = key.strip_prefix(name)?.strip_prefix('(')?.strip_suffix(')')?;
    inner.split(',').map(|s| s.trim().parse().ok()).collect()
}

impl Catalog {
    /// The built-in registry, with pinned data loaded from the bundled file.
    pub fn standard() -> &'static Catalog {
        static CATALOG: OnceLock<Catalog> = OnceLock::new();
        CATALOG.get_or_init(|| {
            let records = parse_records(PINNED).expect("bundled pinned.tsv parses");
            Catalog::build(records).expect("bundled pinned.tsv matches the registry")
        })
    }

    fn build(records: Vec<PinnedRecord>) -> Result<Catalog> {
        let mut entries = vec![
            CatalogEntry::new("ones", Some("A000012"), 1, closed(|_| int(1)), "all ones"),
            CatalogEntry::new(
                "factorials",
                Some("A000142"),
                1,
                closed(|n| bigint(factorial(n))),
                "n!",
            ),
            CatalogEntry::new(
                "catalan",
                Some("A000108"),
                1,
                closed(|n| Rational::new(binomial(2 * n as i64, n as i64), BigInt::from(n + 1))),
                "Catalan numbers C(2n,n)/(n+1)",
            ),
            CatalogEntry::new(
                "fuss_catalan(2)",
                Some("A001764"),
                1,
                fuss_catalan(2),
                "C(3n,n)/(2n+1)",
            ),
            CatalogEntry::new(
                "fuss_catalan(3)",
                Some("A002293"),
                1,
                fuss_catalan(3),
                "C(4n,n)/(3n+1)",
            ),
            CatalogEntry::new(
                "little_schroeder",
                Some("A001003"),
                0,
                transform_of("ones", "R.Y(1,0,1,1)"),
                "little Schroeder numbers",
            ),
            CatalogEntry::new(
                "large_schroeder",
                Some("A006318"),
                0,
                Generator::Pinned,
                "large Schroeder numbers",
            ),
            CatalogEntry::new(
                "A000257",
                Some("A000257"),
                1,
                closed(bicubic_map_count),
                "rooted bicubic maps with 2n vertices, 3(2n-1)! 2^n/((n-1)!(n+2)!)",
            ),
            CatalogEntry::new(
                "A000168",
                Some("A000168"),
                1,
                Generator::Pinned,
                "rooted planar maps with n edges",
            ),
            CatalogEntry::new(
                "A000139",
                Some("A000139"),
                0,
                Generator::Pinned,
                "nonseparable rooted planar maps with n+1 edges",
            ),
            CatalogEntry::new(
                "A069728",
                Some("A069728"),
                1,
                transform_of("A000257", "Y(-2,0,-1,1)"),
                "rooted nonseparable Eulerian planar maps with n edges",
            ),
            CatalogEntry::new(
                "A298358",
                Some("A298358"),
                1,
                transform_of("A000257", "Y(-3,0,-1,1)"),
                "rooted 3-connected bicubic maps with 2n vertices",
            ),
            CatalogEntry::new(
                "A003319",
                Some("A003319"),
                1,
                transform_of("factorials", "Yinv(0,1,-1,1)"),
                "indecomposable permutations",
            ),
            CatalogEntry::new(
                "A075834",
                Some("A075834"),
                1,
                transform_of("factorials", "Yinv(1,0,-1,1)"),
                "stabilized-interval-free permutations",
            ),
            CatalogEntry::new(
                "A022558",
                Some("A022558"),
                1,
                Generator::Pinned,
                "permutations avoiding 2413",
            ),
            CatalogEntry::new(
                "av_2413_3412",
                None,
                1,
                Generator::Pinned,
                "permutations avoiding 2413 and 3412",
            ),
            CatalogEntry::new(
                "av_ind_2413_3412",
                None,
                1,
                Generator::Pinned,
                "indecomposable permutations avoiding 2413 and 3412",
            ),
            CatalogEntry::new(
                "A001519",
                Some("A001519"),
                1,
                recurrence(|n| {
                    let mut v = vec![int(1), int(2)];
                    while v.len() < n {
                        let k = v.len();
                        let next = int(3) * &v[k - 1] - &v[k - 2];
                        v.push(next);
                    }
                    v.truncate(n);
                    v
                }),
                "a(n) = 3a(n-1) - a(n-2); permutations avoiding 321 and 3412",
            ),
            CatalogEntry::new(
                "bell_numbers",
                Some("A000110"),
                1,
                recurrence(|n| {
                    // Bell triangle: each row starts with the last entry of the previous one
                    let mut row = vec![BigInt::one()];
                    let mut out = Vec::with_capacity(n);
                    for _ in 0..n {
                        let last = row.last().expect("nonempty").clone();
                        out.push(bigint(last.clone()));
                        let mut next = vec![last];
                        for v in &row {
                            let s = next.last().expect("nonempty") + v;
                            next.push(s);
                        }
                        row = next;
                    }
                    out
                }),
                "Bell numbers",
            ),
            CatalogEntry::new(
                "A099947",
                Some("A099947"),
                1,
                transform_of("bell_numbers", "Yinv(1,0,-1,1)"),
                "connected set partitions",
            ),
            CatalogEntry::new(
                "A074664",
                Some("A074664"),
                1,
                transform_of("bell_numbers", "Yinv(0,1,-1,1)"),
                "irreducible set partitions",
            ),
        ];
        for rec in records {
            let entry = entries
                .iter_mut()
                .find(|e| e.key == rec.key)
                .ok_or_else(|| Error::UnknownKey(rec.key.clone()))?;
            if entry.oeis_id != rec.oeis_id || entry.offset != rec.offset {
                return Err(Error::Parse(format!(
                    "pinned record `{}` disagrees with the registry on id or offset",
                    rec.key
                )));
            }
            entry.pinned = Some(rec.terms);
            entry.provenance = rec.provenance;
        }
        for e in &entries {
            if matches!(e.generator, Generator::Pinned) && e.pinned.is_none() {
                return Err(Error::Parse(format!("pinned entry `{}` has no data", e.key)));
            }
        }
        Ok(Catalog { entries })
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn keys(&self) -> Vec<&str> {
        self.entries.iter().map(|e| e.key.as_str()).collect()
    }

    /// Looks up a registered key or instantiates a parameterized family.
    pub fn get(&self, key: &str) -> Result<CatalogEntry> {
        if let Some(e) = self.entries.iter().find(|e| e.key == key) {
            return Ok(e.clone());
        }
        let pair = |name: &str| -> Option<(i64, i64)> {
            match parse_args(key, name)?.as_slice() {
                [a, b] if *a > 0 && *b > 0 => Some((*a, *b)),
                _ => None,
            }
        };
        if let Some(args) = parse_args(key, "fuss_catalan") {
            if let [m] = args.as_slice() {
                return Ok(CatalogEntry::new(
                    key,
                    None,
                    1,
                    fuss_catalan(*m),
                    "C((m+1)n,n)/(mn+1)",
                ));
            }
        }
        if let Some((a, b)) = pair("bizley_f") {
            return Ok(CatalogEntry::new(
                key,
                None,
                1,
                bizley_f(a, b),
                "C((alpha+beta)j, alpha j)/((alpha+beta)j)",
            ));
        }
        if let Some((a, b)) = pair("bizley") {
            return Ok(CatalogEntry::new(
                key,
                None,
                1,
                transform_of(&format!("bizley_f({a},{b})"), "Y(0,0,0,1)"),
                "rational Dyck paths to (alpha n, beta n)",
            ));
        }
        if let Some((a, b)) = pair("duchon_theta") {
            let word = OperatorWord::single(Atom::InverseBell(BellParams::from_ints(a + b, 0, -1, 1)));
            return Ok(CatalogEntry::new(
                key,
                None,
                1,
                Generator::TransformOf {
                    source: format!("bizley({a},{b})"),
                    word,
                },
                "factor-free words of the rational Dyck language",
            ));
        }
        Err(Error::UnknownKey(key.to_string()))
    }

    /// First `n` terms: the pinned prefix for pinned-only entries, otherwise
    /// the generator output.
    pub fn get_prefix(&self, key: &str, n: usize) -> Result<Sequence> {
        let entry = self.get(key)?;
        match &entry.generator {
            Generator::Pinned => self.pinned_prefix(&entry, n),
            _ => self.generated_prefix(&entry, n),
        }
    }

    /// The stored prefix of `entry`, cut to `n` terms.
    pub fn pinned_prefix(&self, entry: &CatalogEntry, n: usize) -> Result<Sequence> {
        let terms = entry
            .pinned
            .as_ref()
            .ok_or_else(|| Error::Refused(format!("`{}` has no pinned prefix", entry.key)))?;
        if n > terms.len() {
            return Err(Error::PrefixUnavailable {
                key: entry.key.clone(),
                requested: n,
                available: terms.len(),
            });
        }
        Sequence::new(terms[..n].to_vec())
    }

    /// First `n` terms from the generator, ignoring any pinned data except
    /// where the generator itself is a pinned prefix.
    pub fn generated_prefix(&self, entry: &CatalogEntry, n: usize) -> Result<Sequence> {
        if n == 0 {
            return Err(Error::domain("prefix length must be positive"));
        }
        match &entry.generator {
            Generator::ClosedForm(f) => Sequence::from_fn(n, |m| f(m)),
            Generator::Recurrence(f) => Sequence::new(f(n)),
            Generator::TransformOf { source, word } => {
                let needed = (n as i64 - word.length_delta()).max(1) as usize;
                let x = self.get_prefix(source, needed)?;
                word.apply(&x)?.prefix(n)
            }
            Generator::Pinned => self.pinned_prefix(entry, n),
        }
    }
}

/// `Catalog::standard().get_prefix(key, n)`.
pub fn get_prefix(key: &str, n: usize) -> Result<Sequence> {
    Catalog::standard().get_prefix(key, n)
}
