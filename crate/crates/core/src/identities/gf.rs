//! Functional equations between `X(t) = sum x_n t^n` and
//! `Y(t) = sum y_n t^n` for `y = Y_{a,b,c,d}(x)`.
//!
//! With `W = 1 + d Y`:
//!
//! ```text
//! (i)   c != 0, d != 0:  X(t W^{a/d}) = (1/c) [1 - W^{-c/d}] W^{-b/d}
//! (ii)  c  = 0, d != 0:  X(t W^{a/d}) = log(W^{1/d}) W^{-b/d}
//! (iii) c != 0, d  = 0:  X(t e^{aY})  = (1/c) [1 - e^{-cY}] e^{-bY}
//! (iv)  c  = 0, d  = 0:  X(t e^{aY})  = Y e^{-bY}
//! ```

use std::fmt;

use num_traits::Zero;

use super::CheckReport;
use crate::error::{Error, Result};
use crate::sequence::Sequence;
use crate::series::Series;
use crate::transform::{bell_transform, BellParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GfCase {
    /// `c != 0`, `d != 0`
    I,
    /// `c = 0`, `d != 0`
    II,
    /// `c != 0`, `d = 0`
    III,
    /// `c = d = 0`
    IV,
}

impl GfCase {
    pub fn of(p: &BellParams) -> GfCase {
        match (p.c.is_zero(), p.d.is_zero()) {
            (false, false) => GfCase::I,
            (true, false) => GfCase::II,
            (false, true) => GfCase::III,
            (true, true) => GfCase::IV,
        }
    }
}

impl fmt::Display for GfCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GfCase::I => "i",
            GfCase::II => "ii",
            GfCase::III => "iii",
            GfCase::IV => "iv",
        })
    }
}

/// Computes `y = Y_p(x)` to order `n` and checks the functional equation
/// for the case selected by the zero pattern of `(c, d)`.
pub fn check_gf(p: &BellParams, x: &Sequence, n: usize) -> Result<CheckReport> {
    let x = order_prefix(x, n)?;
    let y = bell_transform(p, &x);
    check_gf_with(p, &x, &y, n)
}

/// Like [`check_gf`] but with `y` supplied by the caller, so the equation
/// can be tested on independently obtained data (e.g. two pinned prefixes).
pub fn check_gf_with(p: &BellParams, x: &Sequence, y: &Sequence, n: usize) -> Result<CheckReport> {
    let xs = Series::from_sequence(&order_prefix(x, n)?);
    let ys = Series::from_sequence(&order_prefix(y, n)?);
    let one = Series::one(n);
    let case = GfCase::of(p);
    let (lhs, rhs) = match case {
        GfCase::I | GfCase::II => {
            let w = &one + &ys.scale(&p.d);
            let inner = w.pow(&(&p.a / &p.d))?.shift_up(1);
            let lhs = xs.compose(&inner)?;
            let w_b = w.pow(&(-&p.b / &p.d))?;
            let rhs = if case == GfCase::I {
                let w_bc = w.pow(&(-(&p.b + &p.c) / &p.d))?;
                (&w_b - &w_bc).scale(&p.c.recip())
            } else {
                &w.log1p()?.scale(&p.d.recip()) * &w_b
            };
            (lhs, rhs)
        }
        GfCase::III | GfCase::IV => {
            let inner = ys.scale(&p.a).exp0()?.shift_up(1);
            let lhs = xs.compose(&inner)?;
            let e_b = ys.scale(&-&p.b).exp0()?;
            let rhs = if case == GfCase::III {
                let e_bc = ys.scale(&-(&p.b + &p.c)).exp0()?;
                (&e_b - &e_bc).scale(&p.c.recip())
            } else {
                &ys * &e_b
            };
            (lhs, rhs)
        }
    };
    Ok(CheckReport::compare(
        format!("gf-{case}"),
        p.to_string(),
        n,
        0,
        lhs.coeffs(),
        rhs.coeffs(),
    ))
}

fn order_prefix(x: &Sequence, n: usize) -> Result<Sequence> {
    if n == 0 {
        return Err(Error::domain("order must be positive"));
    }
    x.prefix(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::int;

    #[test]
    fn dispatch() {
        assert_eq!(GfCase::of(&BellParams::from_ints(0, 1, -1, 1)), GfCase::I);
        assert_eq!(GfCase::of(&BellParams::from_ints(0, 0, 0, 1)), GfCase::II);
        assert_eq!(GfCase::of(&BellParams::from_ints(1, 0, 1, 0)), GfCase::III);
        assert_eq!(GfCase::of(&BellParams::from_ints(2, 1, 0, 0)), GfCase::IV);
    }

    #[test]
    fn invert_closed_form() {
        let p = BellParams::from_ints(0, 1, -1, 1);
        let x = Sequence::ones(10);
        let y = bell_transform(&p, &x);
        // 1 + Y = 1/(1 - X) with X = t/(1-t): Y = t/(1-2t)
        assert_eq!(y, Sequence::from_fn(10, |n| int(1 << (n - 1))).unwrap());
        assert!(check_gf(&p, &x, 10).unwrap().pass);
    }

    #[test]
    fn ncp_and_exp() {
        let r = check_gf(&BellParams::from_ints(1, 0, -1, 1), &Sequence::ones(12), 12).unwrap();
        assert!(r.pass, "{r}");
        let x = Sequence::ones(12).factorial_unweight();
        let r = check_gf(&BellParams::from_ints(0, 0, 0, 1), &x, 12).unwrap();
        assert!(r.pass, "{r}");
    }

    #[test]
    fn every_case() {
        let x: Sequence = "1,-2,1/3,4,0,2,-1,5".parse().unwrap();
        for p in [
            BellParams::from_ints(2, -1, 3, 2),
            BellParams::from_ints(-1, 2, 0, 3),
            BellParams::from_ints(1, 1, -2, 0),
            BellParams::from_ints(3, -2, 0, 0),
        ] {
            let r = check_gf(&p, &x, 8).unwrap();
            assert!(r.pass, "{r}");
        }
    }

    #[test]
    fn wrong_y_is_caught() {
        let p = BellParams::from_ints(1, 0, -1, 1);
        let x = Sequence::ones(6);
        let y = Sequence::from_ints([1, 2, 5, 14, 43, 132]);
        let r = check_gf_with(&p, &x, &y, 6).unwrap();
        assert!(!r.pass);
        assert_eq!(r.witness.unwrap().index, 5);
    }
}
