//! Exact rationals and 1-indexed sequence prefixes.

use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `p/q` as an exact rational. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Binomial coefficient `C(n, k)` for integer `n` (possibly negative) and
/// integer `k`; zero when `k < 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n >= 0 && k > n {
        return BigInt::zero();
    }
    // C(n, k) = n (n-1) ... (n-k+1) / k!
    let mut num = BigInt::one();
    for j in 0..k {
        num *= BigInt::from(n - j);
    }
    num / factorial(k as usize)
}

/// Falling factorial `(r)_k = r (r-1) ... (r-k+1)`; empty product for `k = 0`.
pub fn falling(r: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    let mut term = r.clone();
    for _ in 0..k {
        acc *= &term;
        term -= Rational::one();
    }
    acc
}

pub fn pow(base: &Rational, exp: usize) -> Rational {
    num_traits::pow(base.clone(), exp)
}

/// Parses `"p"` or `"p/q"` (optional sign on `p`, surrounding whitespace ignored).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("`{s}` is not an integer or p/q rational"));
    match s.split_once('/') {
        None => BigInt::from_str(s).map(Rational::from_integer).map_err(|_| bad()),
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// Renders `p` for integers, `p/q` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Returns the value as an integer if its denominator is one.
pub fn as_integer(r: &Rational) -> Option<BigInt> {
    r.is_integer().then(|| r.numer().clone())
}

/// Finite prefix `(x_1, ..., x_N)` of a sequence, `N >= 1`.
///
/// Index 1 is the first term. The sequence is immutable once built; all
/// transforms return new values.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Sequence {
    terms: Vec<Rational>,
}

impl Sequence {
    pub fn new(terms: Vec<Rational>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::Length {
                needed: 1,
                available: 0,
            });
        }
        Ok(Sequence { terms })
    }

    pub fn from_ints<I: IntoIterator<Item = i64>>(terms: I) -> Self {
        Self::new(terms.into_iter().map(int).collect()).expect("nonempty sequence")
    }

    pub fn from_bigints<I: IntoIterator<Item = BigInt>>(terms: I) -> Result<Self> {
        Self::new(terms.into_iter().map(Rational::from_integer).collect())
    }

    /// `(f(1), ..., f(n))`.
    pub fn from_fn(n: usize, f: impl FnMut(usize) -> Rational) -> Result<Self> {
        Self::new((1..=n).map(f).collect())
    }

    pub fn ones(n: usize) -> Self {
        Self::from_fn(n, |_| Rational::one()).expect("n >= 1")
    }

    pub fn factorials(n: usize) -> Self {
        Self::from_fn(n, |i| Rational::from_integer(factorial(i))).expect("n >= 1")
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Term `x_n` for `1 <= n <= len`.
    pub fn get(&self, n: usize) -> Option<&Rational> {
        n.checked_sub(1).and_then(|i| self.terms.get(i))
    }

    pub fn terms(&self) -> &[Rational] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Rational> {
        self.terms
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.terms.iter()
    }

    /// First `n` terms; errors if fewer are available.
    pub fn prefix(&self, n: usize) -> Result<Sequence> {
        self.require(n)?;
        Sequence::new(self.terms[..n].to_vec())
    }

    pub fn require(&self, n: usize) -> Result<()> {
        if self.len() < n {
            Err(Error::Length {
                needed: n,
                available: self.len(),
            })
        } else {
            Ok(())
        }
    }

    /// `(1! x_1, 2! x_2, ..., N! x_N)`.
    pub fn factorial_weight(&self) -> Sequence {
        let terms = self
            .terms
            .iter()
            .enumerate()
            .map(|(i, x)| x * Rational::from_integer(factorial(i + 1)))
            .collect();
        Sequence { terms }
    }

    /// Inverse of [`Sequence::factorial_weight`]: `(x_1/1!, x_2/2!, ...)`.
    pub fn factorial_unweight(&self) -> Sequence {
        let terms = self
            .terms
            .iter()
            .enumerate()
            .map(|(i, x)| x / Rational::from_integer(factorial(i + 1)))
            .collect();
        Sequence { terms }
    }

    pub fn scale(&self, c: &Rational) -> Sequence {
        Sequence {
            terms: self.terms.iter().map(|x| x * c).collect(),
        }
    }

    pub fn map(&self, f: impl FnMut(&Rational) -> Rational) -> Sequence {
        Sequence {
            terms: self.terms.iter().map(f).collect(),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.terms.iter().all(|t| t.is_integer())
    }

    pub fn has_negative(&self) -> bool {
        self.terms.iter().any(|t| t.is_negative())
    }

    /// First index (1-based) where `self` and `other` differ within their
    /// common prefix.
    pub fn first_mismatch(&self, other: &Sequence) -> Option<usize> {
        self.terms
            .iter()
            .zip(&other.terms)
            .position(|(a, b)| a != b)
            .map(|i| i + 1)
    }

    /// Comma-separated exact rendering, e.g. `1,2,5/6`.
    pub fn to_csv(&self) -> String {
        self.terms
            .iter()
            .map(format_rational)
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl Index<usize> for Sequence {
    type Output = Rational;

    /// 1-based indexing; panics outside `1..=len`.
    fn index(&self, n: usize) -> &Rational {
        assert!(n >= 1, "sequences are 1-indexed");
        &self.terms[n - 1]
    }
}

impl fmt::Debug for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sequence({})", self.to_csv())
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_csv())
    }
}

impl FromStr for Sequence {
    type Err = Error;

    /// Parses a comma-separated list of `p` or `p/q` terms.
    fn from_str(s: &str) -> Result<Self> {
        let terms = s
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?;
        Sequence::new(terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_weight_examples() {
        let w = Sequence::from_ints([1, 1, 1]).factorial_weight();
        assert_eq!(w, Sequence::from_ints([1, 2, 6]));
        let x: Sequence = "1,1/2,1/6".parse().unwrap();
        assert_eq!(x.factorial_weight(), Sequence::from_ints([1, 1, 1]));
        let w = Sequence::from_ints([2, 3, 5]).factorial_weight();
        assert_eq!(w, Sequence::from_ints([2, 6, 30]));
    }

    #[test]
    fn parse_and_render() {
        let x: Sequence = " 3, -1/2 ,4/8".parse().unwrap();
        assert_eq!(x.to_csv(), "3,-1/2,1/2");
        assert!(matches!("1,x".parse::<Sequence>(), Err(Error::Parse(_))));
        assert!(matches!("1/0".parse::<Sequence>(), Err(Error::DivisionByZero)));
        assert!("".parse::<Sequence>().is_err());
    }

    #[test]
    fn rationals_are_reduced() {
        let r = parse_rational("6/-4").unwrap();
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, 7), BigInt::zero());
        assert_eq!(binomial(-3, 2), BigInt::from(6));
        assert_eq!(binomial(4, -1), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(falling(&int(5), 3), int(60));
        assert_eq!(falling(&int(0), 2), int(0));
        assert_eq!(falling(&ratio(1, 2), 2), ratio(-1, 4));
        assert_eq!(falling(&int(7), 0), int(1));
    }

    #[test]
    fn one_indexed_access() {
        let x = Sequence::from_ints([4, 5, 6]);
        assert_eq!(x[1], int(4));
        assert_eq!(x.get(0), None);
        assert_eq!(x.get(3), Some(&int(6)));
        assert_eq!(x.get(4), None);
    }
}
