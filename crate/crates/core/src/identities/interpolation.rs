//! The lambda-interpolation identity for `Y_{a,b,c,d}` and the three
//! binomial-weighted identities it is derived from.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use super::CheckReport;
use crate::bell::BellTable;
use crate::error::{Error, Result};
use crate::sequence::{falling, format_rational, int, pow, Rational, Sequence};
use crate::transform::{bell_transform, BellInput, BellParams};

/// Checks, for every `m <= n`,
///
/// ```text
/// sum_k [prod_{j=1}^{k-1} (lambda - d j + d)] B_{m,k}(!y)
///   = sum_k [prod_{j=1}^{k-1} (a m + b k + c j + d + lambda)] B_{m,k}(!x)
/// ```
///
/// where `y = Y_{a,b,c,d}(x)`. Requires `c != 0`.
pub fn check_interpolation(p: &BellParams, x: &Sequence, lambda: &Rational, n: usize) -> Result<CheckReport> {
    if p.c.is_zero() {
        return Err(Error::domain(
            "interpolation identity needs c != 0; use the appendix checks for c = 0",
        ));
    }
    if n == 0 {
        return Err(Error::domain("order must be positive"));
    }
    x.require(n)?;
    let x = x.prefix(n)?;
    let y = bell_transform(p, &x);
    let bx = BellInput::new(&x);
    let by = BellInput::new(&y);
    // prod (lambda + d - d j) is the block weight of (0, 0, -d, lambda + d)
    let left_w = BellParams::new(Rational::zero(), Rational::zero(), -&p.d, lambda + &p.d);
    let right_w = BellParams::new(p.a.clone(), p.b.clone(), p.c.clone(), &p.d + lambda);
    let side = |w: &BellParams, t: &BellTable, m: usize| -> Rational {
        (1..=m).map(|k| w.block_weight(m, k) * t.get(m, k)).sum()
    };
    let lhs: Vec<Rational> = (1..=n).map(|m| side(&left_w, by.table(), m)).collect();
    let rhs: Vec<Rational> = (1..=n).map(|m| side(&right_w, bx.table(), m)).collect();
    Ok(CheckReport::compare(
        "interpolation",
        format!("{p} lambda={}", format_rational(lambda)),
        n,
        1,
        &lhs,
        &rhs,
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AppendixKind {
    /// `y_n = sum (alpha n + beta k)_{k-1} B_{n,k}(x)`, left weight `(lambda)_{k-1}`.
    Lemma,
    /// `y_n = sum (alpha n + beta k - 1)_{k-1} B_{n,k}(x)`, left weight `lambda^{k-1}`.
    Minus1,
    /// `y_n = sum (alpha n + beta k + gamma - 1)_{k-1} B_{n,k}(x)`, left weight
    /// `gamma^{k-1} (lambda/gamma)_{k-1}`; needs `gamma != 0`.
    Gamma,
}

impl fmt::Display for AppendixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AppendixKind::Lemma => "lemma",
            AppendixKind::Minus1 => "minus1",
            AppendixKind::Gamma => "gamma",
        })
    }
}

impl FromStr for AppendixKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lemma" => Ok(AppendixKind::Lemma),
            "minus1" => Ok(AppendixKind::Minus1),
            "gamma" => Ok(AppendixKind::Gamma),
            other => Err(Error::Parse(format!(
                "unknown appendix identity `{other}` (expected lemma, minus1 or gamma)"
            ))),
        }
    }
}

/// Checks one of the binomial-weighted interpolation identities for every
/// `m <= n`. Here `x` enters the Bell polynomials as is, without the `!x`
/// factorial weighting, and `(r)_k` is the falling factorial.
pub fn check_appendix_interp(
    kind: AppendixKind,
    alpha: &Rational,
    beta: &Rational,
    gamma: Option<&Rational>,
    x: &Sequence,
    lambda: &Rational,
    n: usize,
) -> Result<CheckReport> {
    if n == 0 {
        return Err(Error::domain("order must be positive"));
    }
    let shift = match kind {
        AppendixKind::Lemma => Rational::zero(),
        AppendixKind::Minus1 => int(-1),
        AppendixKind::Gamma => match gamma {
            Some(g) if !g.is_zero() => g - int(1),
            _ => return Err(Error::domain("the gamma identity needs gamma != 0")),
        },
    };
    x.require(n)?;
    let x = x.prefix(n)?;
    let tx = BellTable::for_sequence(&x);
    let base = |m: usize, k: usize| alpha * int(m as i64) + beta * int(k as i64) + &shift;
    let y = Sequence::from_fn(n, |m| {
        (1..=m).map(|k| falling(&base(m, k), k - 1) * tx.get(m, k)).sum()
    })?;
    let ty = BellTable::for_sequence(&y);
    let left_weight = |k: usize| -> Rational {
        match kind {
            AppendixKind::Lemma => falling(lambda, k - 1),
            AppendixKind::Minus1 => pow(lambda, k - 1),
            AppendixKind::Gamma => {
                let g = gamma.expect("checked above");
                pow(g, k - 1) * falling(&(lambda / g), k - 1)
            }
        }
    };
    let lhs: Vec<Rational> = (1..=n)
        .map(|m| (1..=m).map(|k| left_weight(k) * ty.get(m, k)).sum())
        .collect();
    let rhs: Vec<Rational> = (1..=n)
        .map(|m| {
            (1..=m)
                .map(|k| falling(&(base(m, k) + lambda), k - 1) * tx.get(m, k))
                .sum()
        })
        .collect();
    let mut params = format!("alpha={} beta={}", format_rational(alpha), format_rational(beta));
    if let Some(g) = gamma.filter(|_| kind == AppendixKind::Gamma) {
        params.push_str(&format!(" gamma={}", format_rational(g)));
    }
    params.push_str(&format!(" lambda={}", format_rational(lambda)));
    Ok(CheckReport::compare(
        format!("appendix-{kind}"),
        params,
        n,
        1,
        &lhs,
        &rhs,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::Draws;
    use crate::sequence::ratio;

    #[test]
    fn interpolation_examples() {
        let p = BellParams::from_ints(1, 0, -1, 1);
        assert!(
            check_interpolation(&p, &Sequence::ones(5), &int(7), 5)
                .unwrap()
                .pass
        );
        let p = BellParams::new(int(2), int(3), ratio(1, 2), int(-1));
        let x = Sequence::from_ints([1, 2, 3, 4, 5, 6]);
        assert!(check_interpolation(&p, &x, &ratio(-5, 3), 6).unwrap().pass);
        for lambda in [int(0), int(-1), int(1)] {
            assert!(check_interpolation(&p, &x, &lambda, 6).unwrap().pass);
        }
    }

    #[test]
    fn interpolation_rejects_zero_c() {
        let p = BellParams::from_ints(1, 2, 0, 1);
        assert!(matches!(
            check_interpolation(&p, &Sequence::ones(3), &int(1), 3),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn appendix_examples() {
        let lemma = check_appendix_interp(
            AppendixKind::Lemma,
            &int(1),
            &int(0),
            None,
            &Sequence::ones(4),
            &int(0),
            4,
        )
        .unwrap();
        assert!(lemma.pass, "{lemma}");
        let m1 = check_appendix_interp(
            AppendixKind::Minus1,
            &int(1),
            &int(1),
            None,
            &Sequence::ones(5),
            &int(1),
            5,
        )
        .unwrap();
        assert!(m1.pass, "{m1}");
        let x = Draws::new(5).int_sequence(5, -4, 4);
        let g = check_appendix_interp(
            AppendixKind::Gamma,
            &int(0),
            &int(1),
            Some(&int(2)),
            &x,
            &int(3),
            5,
        )
        .unwrap();
        assert!(g.pass, "{g}");
    }

    #[test]
    fn appendix_gamma_needs_gamma() {
        let x = Sequence::ones(3);
        for g in [None, Some(int(0))] {
            assert!(matches!(
                check_appendix_interp(AppendixKind::Gamma, &int(1), &int(1), g.as_ref(), &x, &int(1), 3),
                Err(Error::Domain(_))
            ));
        }
    }

    #[test]
    fn kind_parse() {
        assert_eq!("minus1".parse::<AppendixKind>().unwrap(), AppendixKind::Minus1);
        assert!("lemma2".parse::<AppendixKind>().is_err());
    }
}
