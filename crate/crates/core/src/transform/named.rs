//! Classical sequence transforms expressed through Bell transforms.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::{bell_transform, Atom, BellParams, OperatorWord};
use crate::error::{Error, Result};
use crate::sequence::{binomial, format_rational, Rational, Sequence};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedTransform {
    Identity,
    /// m-th invert transform, `Y(0,0,m,m)`.
    Invert(i64),
    /// `Y(0,0,0,1)`: `1 + Y(t) = exp(X(t))` on ordinary generating functions.
    Exp,
    /// The exp transform on exponential-generating-function coefficients:
    /// `b = n! * Y(0,0,0,1)(a_n / n!)`.
    ExpEgf,
    /// `Y(0,0,-1,m)`: `(1 + X)^m = 1 + m Y`.
    Conv(i64),
    /// Series reversion with alternating signs, `R∘I∘Y(-1,0,-1,-1)∘L`
    /// (equivalently `R∘Y(1,0,1,1)∘I∘L`).
    Revert,
    /// m-fold noncrossing partition transform `T_m = Y(m,0,-1,1)`.
    Ncp(i64),
    /// Polygon dissection transform `Y(1,0,1,1)`.
    Dissection,
    Binomial(i64),
    Left,
    Right,
    Alternate,
    /// `S_nu`: adds `nu` to the first term.
    ShiftFirst(Rational),
}

impl NamedTransform {
    pub const NAMES: &'static [&'static str] = &[
        "identity",
        "invert",
        "exp",
        "exp_egf",
        "conv",
        "revert",
        "ncp",
        "dissection",
        "binomial",
        "L",
        "R",
        "I",
        "S",
    ];

    /// Resolves a transform by name. `invert`, `conv`, `ncp` and `binomial`
    /// take an integer parameter, `S` a rational one.
    pub fn parse(name: &str, param: Option<&Rational>) -> Result<Self> {
        let need_int = |param_name: &'static str| -> Result<i64> {
            let r = param.ok_or_else(|| Error::MissingParameter {
                name: name.to_string(),
                param: param_name,
            })?;
            if !r.is_integer() {
                return Err(Error::domain(format!(
                    "`{name}` needs an integer {param_name}, got {}",
                    format_rational(r)
                )));
            }
            r.to_integer()
                .to_i64()
                .ok_or_else(|| Error::domain(format!("{param_name} out of range")))
        };
        Ok(match name {
            "identity" | "id" => NamedTransform::Identity,
            "invert" => NamedTransform::Invert(need_int("m")?),
            "exp" => NamedTransform::Exp,
            "exp_egf" => NamedTransform::ExpEgf,
            "conv" => NamedTransform::Conv(need_int("m")?),
            "revert" => NamedTransform::Revert,
            "ncp" | "T" => NamedTransform::Ncp(need_int("m")?),
            "dissection" => NamedTransform::Dissection,
            "binomial" => NamedTransform::Binomial(need_int("nu")?),
            "L" => NamedTransform::Left,
            "R" => NamedTransform::Right,
            "I" => NamedTransform::Alternate,
            "S" => NamedTransform::ShiftFirst(param.cloned().ok_or_else(|| Error::MissingParameter {
                name: name.to_string(),
                param: "nu",
            })?),
            other => return Err(Error::UnknownName(other.to_string())),
        })
    }

    /// The operator word realising this transform; `None` for
    /// [`NamedTransform::ExpEgf`], which rescales by `n!` on both sides.
    pub fn word(&self) -> Option<OperatorWord> {
        let bell = |a, b, c, d| OperatorWord::bell(BellParams::from_ints(a, b, c, d));
        Some(match self {
            NamedTransform::Identity => bell(0, 0, 0, 0),
            NamedTransform::Invert(m) => bell(0, 0, *m, *m),
            NamedTransform::Exp => bell(0, 0, 0, 1),
            NamedTransform::ExpEgf => return None,
            NamedTransform::Conv(m) => bell(0, 0, -1, *m),
            // b_{n+1} = (-1)^{n+1} Y(-1,0,-1,-1)(a_2, a_3, ...)_n
            NamedTransform::Revert => OperatorWord::new(vec![
                Atom::R,
                Atom::I,
                Atom::Bell(BellParams::from_ints(-1, 0, -1, -1)),
                Atom::L,
            ])
            .expect("nonempty"),
            NamedTransform::Ncp(m) => bell(*m, 0, -1, 1),
            NamedTransform::Dissection => bell(1, 0, 1, 1),
            NamedTransform::Binomial(nu) => OperatorWord::single(Atom::Binomial(*nu)),
            NamedTransform::Left => OperatorWord::single(Atom::L),
            NamedTransform::Right => OperatorWord::single(Atom::R),
            NamedTransform::Alternate => OperatorWord::single(Atom::I),
            NamedTransform::ShiftFirst(nu) => OperatorWord::single(Atom::S(nu.clone())),
        })
    }

    pub fn apply(&self, x: &Sequence) -> Result<Sequence> {
        match self.word() {
            Some(w) => w.apply(x),
            None => Ok(exp_transform_egf(x)),
        }
    }
}

impl fmt::Display for NamedTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedTransform::Identity => f.write_str("identity"),
            NamedTransform::Invert(m) => write!(f, "invert({m})"),
            NamedTransform::Exp => f.write_str("exp"),
            NamedTransform::ExpEgf => f.write_str("exp_egf"),
            NamedTransform::Conv(m) => write!(f, "conv({m})"),
            NamedTransform::Revert => f.write_str("revert"),
            NamedTransform::Ncp(m) => write!(f, "ncp({m})"),
            NamedTransform::Dissection => f.write_str("dissection"),
            NamedTransform::Binomial(nu) => write!(f, "binomial({nu})"),
            NamedTransform::Left => f.write_str("L"),
            NamedTransform::Right => f.write_str("R"),
            NamedTransform::Alternate => f.write_str("I"),
            NamedTransform::ShiftFirst(nu) => write!(f, "S({})", format_rational(nu)),
        }
    }
}

/// Convenience wrapper around [`NamedTransform::parse`] and
/// [`NamedTransform::apply`].
pub fn named_transform(name: &str, param: Option<&Rational>, x: &Sequence) -> Result<Sequence> {
    NamedTransform::parse(name, param)?.apply(x)
}

/// `binomial^m` with the input read 0-indexed: `x_1` is `a_0`.
///
/// `b_n = sum_{k=0}^n C(n,k) m^{n-k} a_k`, which is the `m`-fold iterate of
/// `b_n = sum_k C(n,k) a_k` (and its inverse for negative `m`).
pub fn binomial_transform(m: i64, x: &Sequence) -> Sequence {
    let a = x.terms();
    let mi = BigInt::from(m);
    Sequence::new(
        (0..a.len())
            .map(|n| {
                let mut acc = Rational::zero();
                for (k, ak) in a.iter().enumerate().take(n + 1) {
                    let w = binomial(n as i64, k as i64) * num_traits::pow(mi.clone(), n - k);
                    acc += ak * Rational::from_integer(w);
                }
                acc
            })
            .collect(),
    )
    .expect("same length as input")
}

/// Exp transform on exponential coefficients: `b_n = n! y_n` where
/// `y = Y(0,0,0,1)(a_n / n!)`.
pub fn exp_transform_egf(a: &Sequence) -> Sequence {
    let y = bell_transform(&BellParams::from_ints(0, 0, 0, 1), &a.factorial_unweight());
    y.factorial_weight()
}
