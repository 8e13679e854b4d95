//! Brute-force search for operator words relating two sequences.
//!
//! A reported relation has only been checked on the available prefix; its
//! status is always [`Status::VerifiedOnPrefix`], never a proof.

use std::collections::BTreeMap;
use std::fmt;

use crate::bell::{bicubic_map_count, closed_form_f_bell};
use crate::catalog::Catalog;
use crate::error::{Error, Result};
use crate::sequence::{binomial, int, Rational, Sequence};
use crate::transform::{Atom, BellInput, BellParams, OperatorWord};

pub const DEFAULT_MIN_MATCH: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    VerifiedOnPrefix,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("verified-on-prefix")
    }
}

/// `word(source) = target` on the first `matched` terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationHypothesis {
    pub source: String,
    pub target: String,
    pub word: OperatorWord,
    pub matched: usize,
    pub status: Status,
}

impl fmt::Display for RelationHypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} = {}({}) [{} on {} terms]",
            self.target, self.word, self.source, self.status, self.matched
        )
    }
}

/// Parameter ranges and extra atoms explored by [`search`].
///
/// Candidate words are `Y(p)`, and `Yinv(p)` when `inverse` is set, each
/// optionally preceded by one atom from `pre_ops`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchGrid {
    pub a: Vec<Rational>,
    pub b: Vec<Rational>,
    pub c: Vec<Rational>,
    pub d: Vec<Rational>,
    pub inverse: bool,
    pub pre_ops: Vec<Atom>,
}

impl Default for SearchGrid {
    fn default() -> Self {
        let ints = |v: &[i64]| v.iter().map(|&i| int(i)).collect::<Vec<_>>();
        SearchGrid {
            a: ints(&[-3, -2, -1, 0, 1, 2, 3]),
            b: ints(&[-3, -2, -1, 0, 1, 2, 3]),
            c: ints(&[-2, -1, 1, 2]),
            d: ints(&[-1, 1]),
            inverse: true,
            pre_ops: vec![Atom::R, Atom::L],
        }
    }
}

impl SearchGrid {
    pub fn params(&self) -> Vec<BellParams> {
        let mut out = Vec::with_capacity(self.a.len() * self.b.len() * self.c.len() * self.d.len());
        for a in &self.a {
            for b in &self.b {
                for c in &self.c {
                    for d in &self.d {
                        out.push(BellParams::new(a.clone(), b.clone(), c.clone(), d.clone()));
                    }
                }
            }
        }
        out
    }

    /// Number of candidate words.
    pub fn size(&self) -> usize {
        let per_pre = self.a.len() * self.b.len() * self.c.len() * self.d.len();
        per_pre * (1 + self.pre_ops.len()) * if self.inverse { 2 } else { 1 }
    }
}

/// Length of the common prefix of `word(source)` and `target`, or the
/// 1-based index of the first disagreement.
fn compare(lhs: &Sequence, target: &Sequence) -> std::result::Result<usize, usize> {
    let n = lhs.len().min(target.len());
    match (1..=n).find(|&i| lhs[i] != target[i]) {
        Some(i) => Err(i),
        None => Ok(n),
    }
}

/// Drops identity atoms and canonicalizes Bell parameters.
fn normalize(word: &OperatorWord) -> OperatorWord {
    let atoms: Vec<Atom> = word
        .atoms()
        .iter()
        .filter(|a| !matches!(a, Atom::Bell(p) | Atom::InverseBell(p) if p.is_identity()))
        .map(Atom::canonical)
        .collect();
    OperatorWord::new(atoms).unwrap_or_else(|_| OperatorWord::bell(BellParams::identity()))
}

fn check_lengths(source: &Sequence, target: &Sequence, min_match: usize) -> Result<()> {
    let shortest = source.len().min(target.len());
    if shortest < min_match {
        return Err(Error::Refused(format!(
            "prefixes of length {} and {} are shorter than the minimum match of {min_match} terms",
            source.len(),
            target.len()
        )));
    }
    Ok(())
}

/// Every word in `grid` mapping `source` onto `target` on at least
/// `min_match` terms, merged under the `(a,b,c,d) ~ (a,b+c,-c,d)` symmetry
/// and sorted by the printed word.
pub fn search(
    source_key: &str,
    source: &Sequence,
    target_key: &str,
    target: &Sequence,
    grid: &SearchGrid,
    min_match: usize,
) -> Result<Vec<RelationHypothesis>> {
    if grid.size() == 0 {
        return Err(Error::Refused("the search grid is empty".into()));
    }
    check_lengths(source, target, min_match)?;
    let params = grid.params();
    let mut found: BTreeMap<String, (OperatorWord, usize)> = BTreeMap::new();
    let mut record = |word: OperatorWord, matched: usize| {
        let word = normalize(&word);
        let entry = found.entry(word.to_string()).or_insert((word, matched));
        entry.1 = entry.1.max(matched);
    };

    let mut pres: Vec<Option<&Atom>> = vec![None];
    pres.extend(grid.pre_ops.iter().map(Some));
    for pre in pres {
        let input = match pre {
            None => source.clone(),
            Some(atom) => match atom.apply(source) {
                Ok(s) => s,
                Err(_) => continue,
            },
        };
        let n = input.len().min(target.len());
        if n < min_match {
            continue;
        }
        let with_pre = |main: Atom| {
            let mut atoms = vec![main];
            atoms.extend(pre.cloned());
            OperatorWord::new(atoms).expect("nonempty")
        };
        let table = BellInput::new(&input);
        for p in &params {
            // term by term, stopping at the first mismatch
            if (1..=n).all(|m| table.term(p, m) == target[m]) {
                record(with_pre(Atom::Bell(p.clone())), n);
            }
            if grid.inverse && (1..=n).all(|m| table.inverse_term(p, m) == target[m]) {
                record(with_pre(Atom::InverseBell(p.clone())), n);
            }
        }
    }
    Ok(found
        .into_values()
        .map(|(word, matched)| RelationHypothesis {
            source: source_key.to_string(),
            target: target_key.to_string(),
            word,
            matched,
            status: Status::VerifiedOnPrefix,
        })
        .collect())
}

/// Checks a single word on the overlapping prefix. A disagreement is an
/// [`Error::Mismatch`] naming the first bad index.
pub fn verify(
    source_key: &str,
    source: &Sequence,
    target_key: &str,
    target: &Sequence,
    word: &OperatorWord,
    min_match: usize,
) -> Result<RelationHypothesis> {
    check_lengths(source, target, min_match)?;
    let lhs = word.apply(source)?;
    match compare(&lhs, target) {
        Ok(n) if n >= min_match => Ok(RelationHypothesis {
            source: source_key.to_string(),
            target: target_key.to_string(),
            word: word.clone(),
            matched: n,
            status: Status::VerifiedOnPrefix,
        }),
        Ok(n) => Err(Error::Refused(format!(
            "{target_key} = {word}({source_key}) overlaps on only {n} terms, fewer than {min_match}"
        ))),
        Err(i) => Err(Error::Mismatch(format!(
            "{target_key} = {word}({source_key}) fails at index {i}: {} != {}",
            lhs[i], target[i]
        ))),
    }
}

/// `h_n = sum_k C(-2n, k-1) ((k-1)!/n!) B_{n,k}(!f)` through the binomial
/// closed form of `(k!/n!) B_{n,k}(!f)`, without a Bell table.
fn eulerian_nonseparable(n: usize) -> Result<Sequence> {
    Sequence::from_fn(n, |m| {
        (1..=m)
            .map(|k| {
                let c = Rational::from_integer(binomial(-2 * m as i64, k as i64 - 1));
                let scaled = closed_form_f_bell(m, k).expect("1 <= k <= m");
                c * scaled / int(k as i64)
            })
            .sum()
    })
}

fn f_prefix(n: usize) -> Result<Sequence> {
    Sequence::from_fn(n, bicubic_map_count)
}

/// Pinned prefix of a catalog entry, cut to at most `cap` terms.
fn pinned(key: &str, cap: usize) -> Result<Sequence> {
    let cat = Catalog::standard();
    let entry = cat.get(key)?;
    let len = entry.pinned.as_ref().map_or(0, Vec::len).min(cap);
    cat.pinned_prefix(&entry, len)
}

/// The five relations among bicubic maps, Eulerian maps and the
/// permutation classes `Av(2413)` and `Av(2413, 3412)`, each verified on
/// prefixes of at most `n` terms from data independent of the relation
/// being checked:
///
/// * `A000257 = Y(3,0,-1,1)(A298358)`
/// * `A000257 = Y(2,0,-1,1)(A069728)`
/// * `Av(2413,3412) = Y(0,1,-1,1)(Av^ind(2413,3412))`
/// * `A000257 = Y(1,1,-1,1)∘R(Av(2413,3412))`
/// * `A022558 = Y(0,1,-1,1)∘R(A000257)`
///
/// Refuses when any edge has fewer than `min_match` terms to compare.
pub fn reproduce_diagram(n: usize, min_match: usize) -> Result<Vec<RelationHypothesis>> {
    let f = f_prefix(n.max(1))?;
    let word = |s: &str| s.parse::<OperatorWord>().expect("built-in word");
    let edges: Vec<(&str, Sequence, &str, Sequence, OperatorWord)> = vec![
        (
            "A298358",
            pinned("A298358", n)?,
            "A000257",
            f.clone(),
            word("Y(3,0,-1,1)"),
        ),
        (
            "A069728",
            eulerian_nonseparable(n.max(1))?,
            "A000257",
            f.clone(),
            word("Y(2,0,-1,1)"),
        ),
        (
            "av_ind_2413_3412",
            pinned("av_ind_2413_3412", n)?,
            "av_2413_3412",
            pinned("av_2413_3412", n)?,
            word("Y(0,1,-1,1)"),
        ),
        (
            "av_2413_3412",
            pinned("av_2413_3412", n)?,
            "A000257",
            f.clone(),
            word("Y(1,1,-1,1).R"),
        ),
        (
            "A000257",
            f.clone(),
            "A022558",
            pinned("A022558", n)?,
            word("Y(0,1,-1,1).R"),
        ),
    ];
    edges
        .into_iter()
        .map(|(sk, s, tk, t, w)| verify(sk, &s, tk, &t, &w, min_match))
        .collect()
}

/// The equivalent inverse form `R(Av(2413,3412)) = Y(-1,0,-1,-1)(A000257)`.
pub fn verify_av_inverse_form(n: usize, min_match: usize) -> Result<RelationHypothesis> {
    let av = pinned("av_2413_3412", n)?;
    let shifted = Atom::R.apply(&av)?;
    let f = f_prefix(shifted.len())?;
    verify(
        "A000257",
        &f,
        "R(av_2413_3412)",
        &shifted,
        &OperatorWord::bell(BellParams::from_ints(-1, 0, -1, -1)),
        min_match,
    )
}
