//! The four-parameter Bell transform and its inverse.
//!
//! For parameters `(a, b, c, d)` and input `x`,
//!
//! ```text
//! y_n = sum_{k=1}^n (1/n!) [prod_{j=1}^{k-1} (a n + b k + c j + d)] B_{n,k}(1! x_1, 2! x_2, ...)
//! ```
//!
//! The `k`-th summand counts objects built from exactly `k` blocks; see
//! [`bell_transform_k_slices`].

mod named;
mod word;

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::bell::{signed, BellTable};
use crate::error::{Error, Result};
use crate::sequence::{factorial, format_rational, int, parse_rational, Rational, Sequence};

pub use named::{binomial_transform, exp_transform_egf, named_transform, NamedTransform};
pub use word::{Atom, OperatorWord};

/// Parameters `(a, b, c, d)` of a Bell transform.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BellParams {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl BellParams {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        BellParams { a, b, c, d }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(int(a), int(b), int(c), int(d))
    }

    /// `(0, 0, 0, 0)`, the identity transform.
    pub fn identity() -> Self {
        Self::from_ints(0, 0, 0, 0)
    }

    /// `(a, b+c, -c, d)`, which defines the same transform.
    pub fn mirror(&self) -> Self {
        Self::new(self.a.clone(), &self.b + &self.c, -&self.c, self.d.clone())
    }

    /// Representative of `{self, self.mirror()}` with `c <= 0`, so that
    /// `Y(1,0,-1,1)` rather than `Y(1,-1,1,1)` names the noncrossing
    /// partition transform. Identity transforms map to `Y(0,0,0,0)`.
    pub fn canonical(&self) -> Self {
        if self.is_identity() {
            Self::identity()
        } else if self.c.is_positive() {
            self.mirror()
        } else {
            self.clone()
        }
    }

    /// True when every block weight with `k >= 2` vanishes, so the transform
    /// returns its input: `(0,0,c,-c)` and its mirror `(0,b,-b,-b)`.
    pub fn is_identity(&self) -> bool {
        let zero = |r: &Rational| r.is_zero();
        zero(&self.a)
            && ((zero(&self.b) && zero(&(&self.c + &self.d)))
                || (zero(&(&self.b + &self.c)) && zero(&(&self.b + &self.d))))
    }

    /// `prod_{j=1}^{k-1} (a n + b k + c j + d)`; empty product for `k = 1`.
    pub fn block_weight(&self, n: usize, k: usize) -> Rational {
        let base = &self.a * int(n as i64) + &self.b * int(k as i64) + &self.d;
        let mut acc = Rational::one();
        for j in 1..k {
            acc *= &base + &self.c * int(j as i64);
        }
        acc
    }

    /// `q_{n,k}(t) = t prod_{j=1}^{k-1} (a n + d j + t)`.
    fn q(&self, n: usize, k: usize, t: &Rational) -> Rational {
        let base = &self.a * int(n as i64) + t;
        let mut acc = t.clone();
        for j in 1..k {
            acc *= &base + &self.d * int(j as i64);
        }
        acc
    }

    /// `q'_{n,k}(t)` by the product rule over the `k` linear factors.
    fn q_prime(&self, n: usize, k: usize, t: &Rational) -> Rational {
        let base = &self.a * int(n as i64) + t;
        let factors: Vec<Rational> = (1..k).map(|j| &base + &self.d * int(j as i64)).collect();
        let full: Rational = factors.iter().product();
        let mut dropped = Rational::zero();
        for skip in 0..factors.len() {
            let prod: Rational = factors
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, f)| f)
                .product();
            dropped += prod;
        }
        full + t * dropped
    }

    /// Coefficient of `((-1)^{k-1}/n!) B_{n,k}(!y)` in the inverse transform.
    fn inverse_weight(&self, n: usize, k: usize) -> Rational {
        if self.c.is_zero() {
            self.q_prime(n, k, &self.b)
        } else {
            let bc = &self.b + &self.c;
            (self.q(n, k, &bc) - self.q(n, k, &self.b)) / &self.c
        }
    }
}

impl fmt::Display for BellParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Y({},{},{},{})",
            format_rational(&self.a),
            format_rational(&self.b),
            format_rational(&self.c),
            format_rational(&self.d)
        )
    }
}

impl fmt::Debug for BellParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for BellParams {
    type Err = Error;

    /// Accepts `a,b,c,d`, optionally wrapped as `Y(a,b,c,d)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix("Y(")
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(s);
        let parts = inner.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
        match <[Rational; 4]>::try_from(parts) {
            Ok([a, b, c, d]) => Ok(BellParams { a, b, c, d }),
            Err(_) => Err(Error::Parse(format!("`{s}`: expected four parameters a,b,c,d"))),
        }
    }
}

/// Partial Bell table of `!x`, shared by every transform of the same input.
#[derive(Clone, Debug)]
pub struct BellInput {
    table: BellTable,
}

impl BellInput {
    pub fn new(x: &Sequence) -> Self {
        BellInput {
            table: BellTable::for_sequence(&x.factorial_weight()),
        }
    }

    pub fn len(&self) -> usize {
        self.table.max_n()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn table(&self) -> &BellTable {
        &self.table
    }

    /// `T[n][k]` for `1 <= k <= n <= N`, stored as `rows[n-1][k-1]`.
    pub fn slices(&self, p: &BellParams) -> Vec<Vec<Rational>> {
        (1..=self.len())
            .map(|n| {
                let nf = Rational::from_integer(factorial(n));
                (1..=n)
                    .map(|k| p.block_weight(n, k) * self.table.get(n, k) / &nf)
                    .collect()
            })
            .collect()
    }

    pub fn transform(&self, p: &BellParams) -> Sequence {
        self.transform_prefix(p, self.len())
    }

    /// First `n` terms of the transform. Stops early callers such as the
    /// discovery search from paying for terms they will not compare.
    pub fn transform_prefix(&self, p: &BellParams, n: usize) -> Sequence {
        let n = n.min(self.len());
        Sequence::from_fn(n, |m| self.term(p, m)).expect("prefix length >= 1")
    }

    /// `y_m` alone.
    pub fn term(&self, p: &BellParams, m: usize) -> Rational {
        let s: Rational = (1..=m).map(|k| p.block_weight(m, k) * self.table.get(m, k)).sum();
        s / Rational::from_integer(factorial(m))
    }

    /// Inverse transform: treats the stored input as `y` and returns `x`.
    pub fn inverse(&self, p: &BellParams) -> Sequence {
        Sequence::from_fn(self.len(), |n| self.inverse_term(p, n)).expect("length >= 1")
    }

    /// `x_m` of the inverse transform alone.
    pub fn inverse_term(&self, p: &BellParams, m: usize) -> Rational {
        let s: Rational = (1..=m)
            .map(|k| signed(k - 1, p.inverse_weight(m, k) * self.table.get(m, k)))
            .sum();
        s / Rational::from_integer(factorial(m))
    }
}

/// `y = Y_{a,b,c,d}(x)`, same length as `x`.
pub fn bell_transform(p: &BellParams, x: &Sequence) -> Sequence {
    BellInput::new(x).transform(p)
}

/// Per-block-count summands `T[n][k]`; row sums give [`bell_transform`].
/// Row `n` is returned at index `n-1` and has `n` entries.
pub fn bell_transform_k_slices(p: &BellParams, x: &Sequence) -> Vec<Vec<Rational>> {
    BellInput::new(x).slices(p)
}

/// Explicit inverse: returns `x` with `Y_{a,b,c,d}(x) = y`.
///
/// For `c != 0` the weight of `B_{n,k}(!y)` is `(q_{n,k}(b+c) - q_{n,k}(b))/c`,
/// for `c = 0` it is `q'_{n,k}(b)`, where
/// `q_{n,k}(t) = t prod_{j=1}^{k-1} (a n + d j + t)`.
pub fn bell_inverse(p: &BellParams, y: &Sequence) -> Sequence {
    BellInput::new(y).inverse(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ones(n: usize) -> Sequence {
        Sequence::ones(n)
    }

    #[test]
    fn catalan_and_schroeder() {
        let cat = bell_transform(&BellParams::from_ints(1, 0, -1, 1), &ones(5));
        assert_eq!(cat, Sequence::from_ints([1, 2, 5, 14, 42]));
        let sch = bell_transform(&BellParams::from_ints(1, 0, 1, 1), &ones(5));
        assert_eq!(sch, Sequence::from_ints([1, 3, 11, 45, 197]));
        let fc = bell_transform(&BellParams::from_ints(2, 0, -1, 1), &ones(5));
        assert_eq!(fc, Sequence::from_ints([1, 3, 12, 55, 273]));
    }

    #[test]
    fn identity_params() {
        let x: Sequence = "3,-1/2,4,0,9".parse().unwrap();
        assert_eq!(bell_transform(&BellParams::identity(), &x), x);
    }

    #[test]
    fn slices() {
        let t = bell_transform_k_slices(&BellParams::from_ints(0, 1, -1, 1), &ones(4));
        assert_eq!(t[2], vec![int(1), int(2), int(1)]);
        let nc = bell_transform_k_slices(&BellParams::from_ints(1, 0, -1, 1), &ones(4));
        assert_eq!(nc[2], vec![int(1), int(3), int(1)]);
        let x: Sequence = "2,1/3,-1,5".parse().unwrap();
        let p = BellParams::from_ints(2, -1, 3, 1);
        let y = bell_transform(&p, &x);
        for (n, row) in bell_transform_k_slices(&p, &x).iter().enumerate() {
            assert_eq!(&row.iter().sum::<Rational>(), &y[n + 1]);
            assert_eq!(row[0], x[n + 1]);
        }
    }

    #[test]
    fn inverse_examples() {
        let p = BellParams::from_ints(1, 0, -1, 1);
        assert_eq!(bell_inverse(&p, &Sequence::from_ints([1, 2, 5, 14, 42])), ones(5));
        let fact = Sequence::factorials(6);
        assert_eq!(
            bell_inverse(&p, &fact),
            Sequence::from_ints([1, 1, 2, 7, 34, 206])
        );
        let inv = BellParams::from_ints(0, 1, -1, 1);
        assert_eq!(
            bell_inverse(&inv, &fact),
            Sequence::from_ints([1, 1, 3, 13, 71, 461])
        );
    }

    #[test]
    fn inverse_with_zero_c() {
        let x: Sequence = "1,-2,1/2,3,0,7".parse().unwrap();
        for p in [
            BellParams::from_ints(0, 0, 0, 1),
            BellParams::from_ints(2, 3, 0, -1),
            BellParams::from_ints(-1, 1, 0, 0),
        ] {
            let y = bell_transform(&p, &x);
            assert_eq!(bell_inverse(&p, &y), x, "{p}");
        }
    }

    #[test]
    fn mirror_is_canonicalised() {
        let p = BellParams::from_ints(3, 0, -1, 1);
        assert_eq!(p.canonical(), p);
        assert_eq!(p.mirror(), BellParams::from_ints(3, -1, 1, 1));
        assert_eq!(p.mirror().canonical(), p);
        assert_eq!(p.mirror().mirror(), p);
        let q = BellParams::from_ints(1, 2, 0, 5);
        assert_eq!(q.canonical(), q);
    }

    #[test]
    fn degenerate_identities() {
        let x: Sequence = "3,-1,2/7,5,0,1".parse().unwrap();
        for p in [
            BellParams::identity(),
            BellParams::from_ints(0, 0, -1, 1),
            BellParams::from_ints(0, 2, -2, -2),
            BellParams::new(
                int(0),
                int(0),
                crate::sequence::ratio(1, 3),
                crate::sequence::ratio(-1, 3),
            ),
        ] {
            assert!(p.is_identity(), "{p}");
            assert_eq!(bell_transform(&p, &x), x, "{p}");
            assert_eq!(p.canonical(), BellParams::identity());
        }
        for p in [
            BellParams::from_ints(0, 0, 0, 1),
            BellParams::from_ints(1, 0, -1, 1),
        ] {
            assert!(!p.is_identity());
            assert_ne!(bell_transform(&p, &x), x);
        }
    }

    #[test]
    fn params_parse() {
        let p: BellParams = "1,0,-1/2,1".parse().unwrap();
        assert_eq!(p.c, crate::sequence::ratio(-1, 2));
        assert_eq!(
            "Y(1,0,-1,1)".parse::<BellParams>().unwrap(),
            BellParams::from_ints(1, 0, -1, 1)
        );
        assert!("1,2,3".parse::<BellParams>().is_err());
        assert_eq!(p.to_string(), "Y(1,0,-1/2,1)");
    }
}
