//! Brute-force enumerators.
//!
//! These count objects by generating them one by one. They are independent
//! of the Bell machinery and are only used to cross-check it, so each one
//! refuses sizes beyond a hard bound instead of running for hours.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::sequence::Sequence;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Oracle {
    /// Lattice paths `(0,0) -> (alpha n, beta n)` with unit east and north
    /// steps that stay weakly below `alpha y = beta x`; with `strict`, the
    /// path may touch the line only at its endpoints.
    RationalDyck { alpha: usize, beta: usize, strict: bool },
    /// Words of the generalized Dyck language with letter heights
    /// `+beta` and `-alpha` that have no proper factor in the language.
    FactorFreeWords { alpha: usize, beta: usize },
    /// Permutations of `[n]` that fix no proper subinterval setwise.
    StabilizedIntervalFree,
    /// Permutations of `[n]` with no proper prefix `[j]` mapped onto itself.
    Indecomposable,
    /// Permutations avoiding every pattern in the set (one-line notation,
    /// values `1..=k`); optionally only the indecomposable ones.
    Avoiding {
        patterns: Vec<Vec<u8>>,
        indecomposable: bool,
    },
    /// Set partitions of `[n]`, optionally with exactly `blocks` blocks.
    SetPartitions { blocks: Option<usize> },
    /// Noncrossing set partitions of `[n]`, optionally by block count.
    NoncrossingPartitions { blocks: Option<usize> },
    /// Compositions of `n` in which a part of size `j` comes in
    /// `colors[j-1]` colors, optionally with exactly `parts` parts.
    ColoredCompositions {
        colors: Vec<BigInt>,
        parts: Option<usize>,
    },
}

impl Oracle {
    pub fn kind(&self) -> &'static str {
        match self {
            Oracle::RationalDyck { .. } => "rational_dyck",
            Oracle::FactorFreeWords { .. } => "factor_free_words",
            Oracle::StabilizedIntervalFree => "sif_perms",
            Oracle::Indecomposable => "indecomposable_perms",
            Oracle::Avoiding { .. } => "av_perms",
            Oracle::SetPartitions { .. } => "set_partitions",
            Oracle::NoncrossingPartitions { .. } => "noncrossing_partitions",
            Oracle::ColoredCompositions { .. } => "compositions_colored",
        }
    }

    /// Largest `n` the oracle accepts.
    pub fn max_n(&self) -> usize {
        match self {
            Oracle::RationalDyck { alpha, beta, .. } => 400 / (alpha + beta).max(1),
            Oracle::FactorFreeWords { alpha, beta } => 15 / (alpha + beta).max(1),
            Oracle::StabilizedIntervalFree => 8,
            Oracle::Indecomposable => 9,
            Oracle::Avoiding { .. } => 10,
            Oracle::SetPartitions { .. } | Oracle::NoncrossingPartitions { .. } => 10,
            Oracle::ColoredCompositions { .. } => 16,
        }
    }

    pub fn count(&self, n: usize) -> Result<BigInt> {
        if n > self.max_n() {
            return Err(Error::SizeBound {
                kind: self.kind(),
                n,
                max: self.max_n(),
            });
        }
        match self {
            Oracle::RationalDyck { alpha, beta, strict } => {
                check_coprime(*alpha, *beta)?;
                Ok(rational_dyck(*alpha, *beta, n, *strict))
            }
            Oracle::FactorFreeWords { alpha, beta } => {
                check_coprime(*alpha, *beta)?;
                Ok(BigInt::from(factor_free_words(*alpha, *beta, n)))
            }
            Oracle::StabilizedIntervalFree => Ok(count_perms(n, is_sif)),
            Oracle::Indecomposable => Ok(count_perms(n, is_indecomposable)),
            Oracle::Avoiding {
                patterns,
                indecomposable,
            } => {
                if patterns.iter().any(|p| !is_permutation(p)) {
                    return Err(Error::domain("patterns must be permutations of 1..k"));
                }
                let all = avoiders(patterns, n);
                let count = if *indecomposable {
                    all.iter().filter(|p| is_indecomposable(p)).count()
                } else {
                    all.len()
                };
                Ok(BigInt::from(count))
            }
            Oracle::SetPartitions { blocks } => Ok(BigInt::from(set_partitions(n, *blocks, false))),
            Oracle::NoncrossingPartitions { blocks } => Ok(BigInt::from(set_partitions(n, *blocks, true))),
            Oracle::ColoredCompositions { colors, parts } => {
                if colors.len() < n {
                    return Err(Error::Length {
                        needed: n,
                        available: colors.len(),
                    });
                }
                Ok(colored_compositions(colors, n, *parts))
            }
        }
    }

    /// Counts for `1..=n` as a sequence.
    pub fn counts(&self, n: usize) -> Result<Sequence> {
        let v = (1..=n).map(|m| self.count(m)).collect::<Result<Vec<_>>>()?;
        Sequence::from_bigints(v)
    }
}

impl fmt::Display for Oracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.kind())
    }
}

/// Convenience form of [`Oracle::count`].
pub fn oracle_count(oracle: &Oracle, n: usize) -> Result<BigInt> {
    oracle.count(n)
}

fn check_coprime(alpha: usize, beta: usize) -> Result<()> {
    if alpha == 0 || beta == 0 || alpha.gcd(&beta) != 1 {
        return Err(Error::domain(format!(
            "rational Dyck paths need coprime positive alpha, beta; got ({alpha}, {beta})"
        )));
    }
    Ok(())
}

fn rational_dyck(alpha: usize, beta: usize, n: usize, strict: bool) -> BigInt {
    let (w, h) = (alpha * n, beta * n);
    let allowed = |x: usize, y: usize| {
        let (lhs, rhs) = (alpha * y, beta * x);
        if strict && !(x == 0 && y == 0) && !(x == w && y == h) {
            lhs < rhs
        } else {
            lhs <= rhs
        }
    };
    // ways[y][x], filled row by row
    let mut ways = vec![vec![BigInt::zero(); w + 1]; h + 1];
    ways[0][0] = BigInt::one();
    for y in 0..=h {
        for x in 0..=w {
            if (x, y) == (0, 0) || !allowed(x, y) {
                continue;
            }
            let mut v = BigInt::zero();
            if x > 0 {
                v += &ways[y][x - 1];
            }
            if y > 0 {
                v += &ways[y - 1][x];
            }
            ways[y][x] = v;
        }
    }
    ways[h][w].clone()
}

/// Enumerates every word of the language with `alpha n` letters of height
/// `+beta` and `beta n` letters of height `-alpha`, keeping the factor-free
/// ones.
fn factor_free_words(alpha: usize, beta: usize, n: usize) -> usize {
    let (ups, downs) = (alpha * n, beta * n);
    let mut word: Vec<i64> = Vec::with_capacity(ups + downs);
    let mut count = 0;
    fn rec(word: &mut Vec<i64>, ups: usize, downs: usize, height: i64, steps: (i64, i64), count: &mut usize) {
        if ups == 0 && downs == 0 {
            if is_factor_free(word) {
                *count += 1;
            }
            return;
        }
        if ups > 0 {
            word.push(steps.0);
            rec(word, ups - 1, downs, height + steps.0, steps, count);
            word.pop();
        }
        if downs > 0 && height + steps.1 >= 0 {
            word.push(steps.1);
            rec(word, ups, downs - 1, height + steps.1, steps, count);
            word.pop();
        }
    }
    if n == 0 {
        return 0;
    }
    rec(
        &mut word,
        ups,
        downs,
        0,
        (beta as i64, -(alpha as i64)),
        &mut count,
    );
    count
}

/// A word of the language is factor-free if no contiguous proper nonempty
/// factor starts and ends at the same height while never dipping below it.
fn is_factor_free(word: &[i64]) -> bool {
    let len = word.len();
    for i in 0..len {
        let mut h = 0;
        for (j, step) in word.iter().enumerate().skip(i) {
            h += step;
            if h < 0 {
                break;
            }
            let proper = !(i == 0 && j == len - 1);
            if h == 0 && proper {
                return false;
            }
        }
    }
    true
}

/// Next permutation in lexicographic order; false after the last one.
fn next_permutation(p: &mut [u8]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn count_perms(n: usize, pred: fn(&[u8]) -> bool) -> BigInt {
    if n == 0 {
        return BigInt::zero();
    }
    let mut p: Vec<u8> = (1..=n as u8).collect();
    let mut count = 0u64;
    loop {
        if pred(&p) {
            count += 1;
        }
        if !next_permutation(&mut p) {
            break;
        }
    }
    BigInt::from(count)
}

fn is_permutation(p: &[u8]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&v| {
        let i = v as usize;
        if i == 0 || i > p.len() || seen[i - 1] {
            false
        } else {
            seen[i - 1] = true;
            true
        }
    })
}

/// True if the permutation maps no proper subinterval `[i, j]` onto itself.
fn is_sif(p: &[u8]) -> bool {
    let n = p.len();
    for i in 0..n {
        let (mut lo, mut hi) = (u8::MAX, 0u8);
        for (j, &v) in p.iter().enumerate().skip(i) {
            lo = lo.min(v);
            hi = hi.max(v);
            let stable = lo as usize == i + 1 && hi as usize == j + 1;
            if stable && !(i == 0 && j == n - 1) {
                return false;
            }
        }
    }
    true
}

fn is_indecomposable(p: &[u8]) -> bool {
    let mut hi = 0usize;
    for (j, &v) in p.iter().enumerate().take(p.len().saturating_sub(1)) {
        hi = hi.max(v as usize);
        if hi == j + 1 {
            return false;
        }
    }
    true
}

/// True if `p` contains `pattern` as a classical pattern.
pub fn contains_pattern(p: &[u8], pattern: &[u8]) -> bool {
    fn rec(p: &[u8], pattern: &[u8], start: usize, chosen: &mut Vec<usize>) -> bool {
        let m = chosen.len();
        if m == pattern.len() {
            return true;
        }
        for pos in start..p.len() {
            if p.len() - pos < pattern.len() - m {
                break;
            }
            let consistent = chosen
                .iter()
                .enumerate()
                .all(|(l, &q)| (p[pos] < p[q]) == (pattern[m] < pattern[l]));
            if consistent {
                chosen.push(pos);
                if rec(p, pattern, pos + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    rec(p, pattern, 0, &mut Vec::with_capacity(pattern.len()))
}

/// All permutations of `[n]` avoiding every pattern. Deleting the largest
/// entry of an avoider leaves an avoider, so length-`n` avoiders are found by
/// inserting `n` into the length-`(n-1)` ones and testing containment.
pub fn avoiders(patterns: &[Vec<u8>], n: usize) -> Vec<Vec<u8>> {
    let avoids = |p: &[u8]| patterns.iter().all(|pat| !contains_pattern(p, pat));
    if n == 0 {
        return Vec::new();
    }
    let mut level: Vec<Vec<u8>> = vec![vec![1]];
    level.retain(|p| avoids(p));
    for m in 2..=n {
        let mut next = Vec::new();
        for p in &level {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, m as u8);
                if avoids(&q) {
                    next.push(q);
                }
            }
        }
        level = next;
    }
    level
}

/// Counts set partitions of `[n]` via restricted growth strings.
fn set_partitions(n: usize, blocks: Option<usize>, noncrossing: bool) -> u64 {
    if n == 0 {
        return 0;
    }
    fn crossing(s: &[u8]) -> bool {
        let n = s.len();
        for a in 0..n {
            for b in a + 1..n {
                if s[b] == s[a] {
                    continue;
                }
                for c in b + 1..n {
                    if s[c] != s[a] {
                        continue;
                    }
                    if s[c + 1..].contains(&s[b]) {
                        return true;
                    }
                }
            }
        }
        false
    }
    fn rec(s: &mut Vec<u8>, n: usize, max: u8, blocks: Option<usize>, nc: bool, count: &mut u64) {
        if s.len() == n {
            let k = max as usize + 1;
            if blocks.is_none_or(|b| b == k) && !(nc && crossing(s)) {
                *count += 1;
            }
            return;
        }
        for v in 0..=max + 1 {
            s.push(v);
            rec(s, n, max.max(v), blocks, nc, count);
            s.pop();
        }
    }
    let mut count = 0;
    rec(&mut vec![0], n, 0, blocks, noncrossing, &mut count);
    count
}

fn colored_compositions(colors: &[BigInt], n: usize, parts: Option<usize>) -> BigInt {
    fn rec(
        colors: &[BigInt],
        remaining: usize,
        used: usize,
        parts: Option<usize>,
        acc: &BigInt,
        out: &mut BigInt,
    ) {
        if remaining == 0 {
            if parts.is_none_or(|k| k == used) {
                *out += acc;
            }
            return;
        }
        if parts.is_some_and(|k| used >= k) {
            return;
        }
        for j in 1..=remaining {
            let w = acc * &colors[j - 1];
            if !w.is_zero() {
                rec(colors, remaining - j, used + 1, parts, &w, out);
            }
        }
    }
    let mut out = BigInt::zero();
    if n > 0 {
        rec(colors, n, 0, parts, &BigInt::one(), &mut out);
    }
    out
}
