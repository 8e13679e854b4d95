//! Algebraic equations for the bicubic-map series `F(t) = sum f_n t^n`,
//! `f_n = 3 (2n-1)! 2^n / ((n-1)! (n+2)!)`, and for the series of
//! permutations avoiding 2413 and 3412.

use std::fmt;
use std::str::FromStr;

use super::CheckReport;
use crate::bell::bicubic_map_count;
use crate::error::{Error, Result};
use crate::sequence::{int, ratio, Sequence};
use crate::series::Series;
use crate::transform::{bell_transform, BellParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraicCase {
    /// `32 t^2 F = -1 + 12t - 24t^2 + (1-8t)^{3/2}`
    A257ClosedForm,
    /// `16t^2 G^2 - (8t^2 + 12t - 1) G + t^2 + 11t - 1 = 0` for `G = 1 + F`
    A257Quadratic,
    /// `t^4 A^3 + (5t^3 - 11t^2) A^2 + (3t^2 + 10t - 1) A - 9t + 1 = 0`
    /// for `A = 1 + sum_n |Av_n(2413, 3412)| t^n`
    AvCubic,
}

impl AlgebraicCase {
    pub const ALL: [AlgebraicCase; 3] = [
        AlgebraicCase::A257ClosedForm,
        AlgebraicCase::A257Quadratic,
        AlgebraicCase::AvCubic,
    ];
}

impl fmt::Display for AlgebraicCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlgebraicCase::A257ClosedForm => "A257_closed_form",
            AlgebraicCase::A257Quadratic => "A257_quadratic",
            AlgebraicCase::AvCubic => "Av_cubic",
        })
    }
}

impl FromStr for AlgebraicCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AlgebraicCase::ALL
            .into_iter()
            .find(|c| c.to_string() == s)
            .ok_or_else(|| {
                Error::Parse(format!(
                    "unknown equation `{s}` (expected A257_closed_form, A257_quadratic or Av_cubic)"
                ))
            })
    }
}

/// Polynomial in `t` as a series of the given order.
fn poly(coeffs: &[i64], order: usize) -> Series {
    let mut v = vec![int(0); order + 1];
    for (i, c) in coeffs.iter().enumerate().take(order + 1) {
        v[i] = int(*c);
    }
    Series::new(v)
}

fn f_series(order: usize) -> Series {
    let mut v = vec![int(0)];
    v.extend((1..=order).map(bicubic_map_count));
    Series::new(v)
}

/// Checks the selected equation coefficient by coefficient up to `t^n`.
/// For [`AlgebraicCase::AvCubic`] the series `A` is obtained from the
/// transform route `t A(t) = sum_n Y_{-1,0,-1,-1}(f)_n t^n`.
pub fn check_algebraic_gf(case: AlgebraicCase, n: usize) -> Result<CheckReport> {
    if n < 4 {
        return Err(Error::domain("algebraic checks need order at least 4"));
    }
    match case {
        AlgebraicCase::A257ClosedForm => {
            let root = poly(&[1, -8], n + 2).pow(&ratio(3, 2))?;
            let numerator = &poly(&[-1, 12, -24], n + 2) + &root;
            let lhs = numerator.divide_by_t_power(2)?.scale(&ratio(1, 32));
            let rhs = f_series(n);
            Ok(CheckReport::compare(
                case.to_string(),
                "",
                n,
                0,
                lhs.coeffs(),
                rhs.coeffs(),
            ))
        }
        AlgebraicCase::A257Quadratic => {
            let g = &Series::one(n) + &f_series(n);
            let residual = &(&(&poly(&[0, 0, 16], n) * &(&g * &g)) - &(&poly(&[-1, 12, 8], n) * &g))
                + &poly(&[-1, 11, 1], n);
            Ok(zero_residual(case.to_string(), &residual))
        }
        AlgebraicCase::AvCubic => {
            let a = av_series_by_transform(n)?;
            let mut report = check_av_cubic(&a);
            report.params = "transform route".into();
            Ok(report)
        }
    }
}

/// `A(t)` of order `n` from `Y_{-1,0,-1,-1}` applied to the first `n + 1`
/// bicubic-map counts.
fn av_series_by_transform(n: usize) -> Result<Series> {
    let f = Sequence::from_fn(n + 1, bicubic_map_count)?;
    let y = bell_transform(&BellParams::from_ints(-1, 0, -1, -1), &f);
    Series::from_sequence(&y).divide_by_t_power(1)
}

/// Left side of the cubic, evaluated at the given `A` (which must have
/// constant term 1).
pub fn av_cubic_residual(a: &Series) -> Series {
    let n = a.order();
    let a2 = a * a;
    let a3 = &a2 * a;
    let terms = [
        &poly(&[0, 0, 0, 0, 1], n) * &a3,
        &poly(&[0, 0, -11, 5], n) * &a2,
        &poly(&[-1, 10, 3], n) * a,
        poly(&[1, -9], n),
    ];
    terms.iter().fold(Series::zero(n), |acc, s| &acc + s)
}

/// Checks the cubic for a caller-supplied `A`, for instance one built from
/// brute-force pattern-avoidance counts as `1 + sum_n count_n t^n`.
pub fn check_av_cubic(a: &Series) -> CheckReport {
    zero_residual(AlgebraicCase::AvCubic.to_string(), &av_cubic_residual(a))
}

fn zero_residual(name: String, residual: &Series) -> CheckReport {
    let zeros = vec![int(0); residual.coeffs().len()];
    let mut r = CheckReport::compare(name, "", residual.order(), 0, residual.coeffs(), &zeros);
    r.params = "residual".into();
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_reproduces_f() {
        assert_eq!(
            f_series(6).coeffs()[1..].to_vec(),
            Sequence::from_ints([1, 3, 12, 56, 288, 1584]).into_terms()
        );
        let r = check_algebraic_gf(AlgebraicCase::A257ClosedForm, 6).unwrap();
        assert!(r.pass, "{r}");
    }

    #[test]
    fn residuals_vanish() {
        for case in AlgebraicCase::ALL {
            let r = check_algebraic_gf(case, 12).unwrap();
            assert!(r.pass, "{r}");
            assert_eq!(r.order, 12);
        }
    }

    #[test]
    fn cubic_rejects_wrong_counts() {
        // 1, 2, 6, 22, 90, 395 is correct; perturb the last term
        let good = Series::from_ints([1, 1, 2, 6, 22, 90, 395]);
        assert!(check_av_cubic(&good).pass);
        let bad = Series::from_ints([1, 1, 2, 6, 22, 90, 394]);
        let r = check_av_cubic(&bad);
        assert_eq!(r.witness.unwrap().index, 6);
    }

    #[test]
    fn small_order_refused() {
        assert!(check_algebraic_gf(AlgebraicCase::A257Quadratic, 3).is_err());
        assert_eq!(
            "Av_cubic".parse::<AlgebraicCase>().unwrap(),
            AlgebraicCase::AvCubic
        );
    }
}
