//! Truncated formal power series `c_0 + c_1 t + ... + c_N t^N + O(t^{N+1})`
//! over exact rationals.
//!
//! Every series carries its truncation order `N`. Binary operations on
//! series of different orders truncate to the smaller one, so a result is
//! never claimed to higher precision than its inputs justify.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::bell::BellTable;
use crate::error::{Error, Result};
use crate::sequence::{factorial, format_rational, int, Rational, Sequence};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    /// Series with coefficients `c_0..c_N`; the order is `coeffs.len() - 1`.
    /// An empty vector yields the zero series of order 0.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        Series { coeffs }
    }

    pub fn from_ints<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        Self::new(coeffs.into_iter().map(int).collect())
    }

    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    /// The series `t` (truncated at `order >= 1`; order 0 gives zero).
    pub fn t(order: usize) -> Self {
        Self::monomial(Rational::one(), 1, order)
    }

    /// `c t^k` truncated at `order`.
    pub fn monomial(c: Rational, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// `x_1 t + ... + x_N t^N`, order `N`.
    pub fn from_sequence(x: &Sequence) -> Self {
        let mut coeffs = Vec::with_capacity(x.len() + 1);
        coeffs.push(Rational::zero());
        coeffs.extend(x.iter().cloned());
        Series { coeffs }
    }

    /// Inverse of [`Series::from_sequence`]; requires `c_0 = 0` and order >= 1.
    pub fn to_sequence(&self) -> Result<Sequence> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::shape(format!(
                "series has constant term {}, expected 0",
                format_rational(&self.coeffs[0])
            )));
        }
        Sequence::new(self.coeffs[1..].to_vec())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `[t^n]`; zero past the truncation order is *not* returned: `None`.
    pub fn coeff(&self, n: usize) -> Option<&Rational> {
        self.coeffs.get(n)
    }

    pub fn constant_term(&self) -> &Rational {
        &self.coeffs[0]
    }

    pub fn truncate(&self, order: usize) -> Series {
        let order = order.min(self.order());
        Series {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// `t^k S(t)`, keeping the order of `S`.
    pub fn shift_up(&self, k: usize) -> Series {
        let n = self.order();
        let mut coeffs = vec![Rational::zero(); n + 1];
        if k <= n {
            coeffs[k..].clone_from_slice(&self.coeffs[..=n - k]);
        }
        Series { coeffs }
    }

    /// `S(t) / t^k`, defined only when `c_0 = ... = c_{k-1} = 0`. The result
    /// has order `N - k`.
    pub fn divide_by_t_power(&self, k: usize) -> Result<Series> {
        if k > self.order() {
            return Err(Error::shape(format!(
                "cannot factor t^{k} out of a series of order {}",
                self.order()
            )));
        }
        if let Some(i) = self.coeffs[..k].iter().position(|c| !c.is_zero()) {
            return Err(Error::shape(format!(
                "coefficient of t^{i} is nonzero; t^{k} does not divide the series"
            )));
        }
        Ok(Series {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// Multiplicative inverse; requires `c_0 != 0`.
    pub fn reciprocal(&self) -> Result<Series> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::shape("reciprocal of a series with zero constant term"));
        }
        let n = self.order();
        let inv0 = c0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for m in 1..=n {
            let s: Rational = (1..=m).map(|k| &self.coeffs[k] * &out[m - k]).sum();
            out.push(-s * &inv0);
        }
        Ok(Series { coeffs: out })
    }

    pub fn derivative(&self) -> Series {
        let n = self.order();
        if n == 0 {
            return Series::zero(0);
        }
        Series {
            coeffs: (1..=n).map(|i| &self.coeffs[i] * int(i as i64)).collect(),
        }
    }

    /// Antiderivative with zero constant term; order grows by one.
    fn integral(&self) -> Series {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / int(i as i64 + 1));
        }
        Series { coeffs }
    }

    /// Integer power by repeated squaring (negative exponents need `c_0 != 0`).
    pub fn powi(&self, e: i64) -> Result<Series> {
        let base = if e < 0 { self.reciprocal()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Series::one(self.order());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// `F(G(t))` truncated at `min(order F, order G)`; requires `G(0) = 0`.
    pub fn compose(&self, g: &Series) -> Result<Series> {
        if !g.coeffs[0].is_zero() {
            return Err(Error::shape(
                "composition requires the inner series to have zero constant term",
            ));
        }
        let order = self.order().min(g.order());
        let g = g.truncate(order);
        // Horner: (((f_N) g + f_{N-1}) g + ...) g + f_0
        let mut acc = Series::zero(order);
        for c in self.coeffs[..=order].iter().rev() {
            acc = &acc * &g;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// `log(S)` for `S` with constant term 1.
    pub fn log1p(&self) -> Result<Series> {
        if !self.coeffs[0].is_one() {
            return Err(Error::shape("log requires constant term 1"));
        }
        let n = self.order();
        if n == 0 {
            return Ok(Series::zero(0));
        }
        // log S = integral of S'/S
        let quotient = &self.derivative() * &self.reciprocal()?.truncate(n - 1);
        Ok(quotient.integral())
    }

    /// `exp(S)` for `S` with zero constant term.
    pub fn exp0(&self) -> Result<Series> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::shape("exp requires constant term 0"));
        }
        let n = self.order();
        let mut e: Vec<Rational> = Vec::with_capacity(n + 1);
        e.push(Rational::one());
        // m e_m = sum_{k=1}^m k s_k e_{m-k}
        for m in 1..=n {
            let s: Rational = (1..=m).map(|k| &self.coeffs[k] * int(k as i64) * &e[m - k]).sum();
            e.push(s / int(m as i64));
        }
        Ok(Series { coeffs: e })
    }

    /// `S^r` for rational `r`, `S` with constant term 1.
    ///
    /// Uses the recurrence `m p_m = sum_{k=1}^m ((r+1) k - m) s_k p_{m-k}`
    /// obtained from `S P' = r S' P`; agrees with `exp(r log S)`.
    pub fn pow(&self, r: &Rational) -> Result<Series> {
        if !self.coeffs[0].is_one() {
            return Err(Error::shape("rational power requires constant term 1"));
        }
        let n = self.order();
        let r1 = r + Rational::one();
        let mut p: Vec<Rational> = Vec::with_capacity(n + 1);
        p.push(Rational::one());
        for m in 1..=n {
            let mi = int(m as i64);
            let s: Rational = (1..=m)
                .filter(|&k| !self.coeffs[k].is_zero())
                .map(|k| (&r1 * int(k as i64) - &mi) * &self.coeffs[k] * &p[m - k])
                .sum();
            p.push(s / mi);
        }
        Ok(Series { coeffs: p })
    }

    /// Compositional inverse `T` with `S(T(t)) = t + O(t^{N+1})`.
    ///
    /// Requires `c_0 = 0` and `c_1 != 0`. With `S = c_1 t (1 + sum alpha_r t^r / r!)`
    /// the inverse of the bracketed map is `u (1 + sum beta_n u^n / n!)` with
    /// `beta_n = sum_{k=1}^n (-1)^k ((n+k)!/(n+1)!) B_{n,k}(alpha)`, and
    /// `T(t)` is that inverse evaluated at `t / c_1`.
    pub fn revert(&self) -> Result<Series> {
        let c1 = self.check_revertible()?;
        let n = self.order();
        let mut out = vec![Rational::zero(); n + 1];
        out[1] = c1.recip();
        if n >= 2 {
            // alpha_r = r! c_{r+1} / c_1 for r = 1..n-1
            let alpha = Sequence::from_fn(n - 1, |r| {
                Rational::from_integer(factorial(r)) * &self.coeffs[r + 1] / &c1
            })?;
            let table = BellTable::new(&alpha, n - 1)?;
            let mut c1_pow = c1.clone();
            for m in 1..n {
                let beta: Rational = (1..=m)
                    .map(|k| {
                        let w = Rational::new(factorial(m + k), factorial(m + 1));
                        crate::bell::signed(k, w * table.get(m, k))
                    })
                    .sum();
                c1_pow *= &c1;
                // [t^{m+1}] T = beta_m / m! / c_1^{m+1}
                out[m + 1] = beta / Rational::from_integer(factorial(m)) / &c1_pow;
            }
        }
        Ok(Series { coeffs: out })
    }

    /// Compositional inverse by solving `S(T) = t` one coefficient at a
    /// time. Independent of [`Series::revert`]; used to cross-check it.
    pub fn revert_by_substitution(&self) -> Result<Series> {
        let c1 = self.check_revertible()?;
        let n = self.order();
        let mut t = Series::zero(n);
        if n >= 1 {
            t.coeffs[1] = c1.recip();
        }
        for m in 2..=n {
            let err = self.compose(&t)?.coeffs[m].clone();
            t.coeffs[m] = -err / &c1;
        }
        Ok(t)
    }

    fn check_revertible(&self) -> Result<Rational> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::shape("reversion requires constant term 0"));
        }
        match self.coeffs.get(1) {
            Some(c1) if !c1.is_zero() => Ok(c1.clone()),
            _ => Err(Error::domain(
                "series is not invertible: linear coefficient is zero",
            )),
        }
    }

    /// First index where the two series differ, within the common order.
    pub fn first_mismatch(&self, other: &Series) -> Option<usize> {
        self.coeffs.iter().zip(&other.coeffs).position(|(a, b)| a != b)
    }

    fn zip_with(&self, other: &Series, f: impl Fn(&Rational, &Rational) -> Rational) -> Series {
        let order = self.order().min(other.order());
        Series {
            coeffs: (0..=order)
                .map(|i| f(&self.coeffs[i], &other.coeffs[i]))
                .collect(),
        }
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &Series {
    type Output = Series;

    /// Cauchy product truncated at the smaller order.
    fn mul(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Series { coeffs }
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Series {
            type Output = Series;
            fn $m(self, rhs: Series) -> Series {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", format_rational(c))?,
                1 => write!(f, "({})t", format_rational(c))?,
                _ => write!(f, "({})t^{i}", format_rational(c))?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
