//! Convolution powers of `1 + d Y(t)` and the `(a, b)` recurrence.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::sequence::{int, Rational, Sequence};
use crate::transform::{bell_transform, BellParams};

/// `n -> d r sum_k (1/n!) [prod_{j=1}^{k-1} (a n + b k + c j + d r)] B_{n,k}(!x)`
/// for `n = 1..=len`, which is `d r` times the transform with `d` replaced
/// by `d r`. Equals the `r`-fold convolution of `(1, d y_1, d y_2, ...)`.
pub fn convolve_bell(p: &BellParams, x: &Sequence, r: usize, len: usize) -> Result<Sequence> {
    if p.d.is_zero() {
        return Err(Error::domain("convolution formula needs d != 0"));
    }
    if r == 0 {
        return Err(Error::domain("r must be positive"));
    }
    let x = x.prefix(len)?;
    let dr = &p.d * int(r as i64);
    let q = BellParams::new(p.a.clone(), p.b.clone(), p.c.clone(), dr.clone());
    Ok(bell_transform(&q, &x).scale(&dr))
}

/// Brute-force `sum_{m_1 + ... + m_r = n} yhat_{m_1} ... yhat_{m_r}` with
/// `yhat_0 = 1`, for `n = 1..=len`, by enumerating every composition.
pub fn convolution_power(yhat: &Sequence, r: usize, len: usize) -> Result<Sequence> {
    let yhat = yhat.prefix(len)?;
    let term = |m: usize| -> Rational {
        if m == 0 {
            Rational::one()
        } else {
            yhat[m].clone()
        }
    };
    fn walk(
        parts_left: usize,
        remaining: usize,
        acc: &Rational,
        term: &dyn Fn(usize) -> Rational,
        out: &mut Rational,
    ) {
        if parts_left == 0 {
            if remaining == 0 {
                *out += acc;
            }
            return;
        }
        for m in 0..=remaining {
            let next = acc * term(m);
            if !next.is_zero() {
                walk(parts_left - 1, remaining - m, &next, term, out);
            }
        }
    }
    Sequence::from_fn(len, |n| {
        let mut out = Rational::zero();
        walk(r, n, &Rational::one(), &term, &mut out);
        out
    })
}

/// `y_n = sum_{l=1}^n x_l [t^{n-l}] (1 + Y(t))^{a l + b}`, solved term by term.
///
/// The coefficients of every needed power of `1 + Y` are extended by one
/// degree each time a new `y_n` is known. The result equals
/// `Y_{a,b,-1,1}(x)`.
pub fn ab_recurrence(a: u32, b: u32, x: &Sequence, len: usize) -> Result<Sequence> {
    if a == 0 && b == 0 {
        return Err(Error::domain("a and b must not both be zero"));
    }
    let x = x.prefix(len)?;
    let max_e = a as usize * len + b as usize;
    // powers[e][m] = [t^m] (1 + Y)^e
    let mut powers: Vec<Vec<Rational>> = vec![vec![Rational::one()]; max_e + 1];
    let mut y: Vec<Rational> = vec![Rational::one()];
    for n in 1..=len {
        let yn: Rational = (1..=n)
            .map(|l| {
                let e = a as usize * l + b as usize;
                &x[l] * &powers[e][n - l]
            })
            .sum();
        y.push(yn);
        // extend every power to degree n now that y_n is known
        powers[0].push(Rational::zero());
        for e in 1..=max_e {
            let c: Rational = (0..=n).map(|i| &y[i] * &powers[e - 1][n - i]).sum();
            powers[e].push(c);
        }
    }
    Sequence::new(y.split_off(1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_square() {
        let p = BellParams::from_ints(1, 0, -1, 1);
        let c2 = convolve_bell(&p, &Sequence::ones(4), 2, 4).unwrap();
        assert_eq!(c2[2], int(5));
        let cat = bell_transform(&p, &Sequence::ones(4));
        assert_eq!(convolution_power(&cat, 2, 4).unwrap(), c2);
    }

    #[test]
    fn r_one_is_yhat() {
        let p = BellParams::from_ints(2, -1, 1, 3);
        let x: Sequence = "1,2,-1,1/2,3".parse().unwrap();
        let yhat = bell_transform(&p, &x).scale(&int(3));
        assert_eq!(convolve_bell(&p, &x, 1, 5).unwrap(), yhat);
        assert_eq!(convolution_power(&yhat, 1, 5).unwrap(), yhat);
    }

    #[test]
    fn invert_cube() {
        let p = BellParams::from_ints(0, 1, -1, 1);
        let x = Sequence::ones(5);
        let y = bell_transform(&p, &x);
        assert_eq!(
            convolve_bell(&p, &x, 3, 5).unwrap(),
            convolution_power(&y, 3, 5).unwrap()
        );
    }

    #[test]
    fn zero_d_rejected() {
        let p = BellParams::from_ints(1, 0, -1, 0);
        assert!(matches!(
            convolve_bell(&p, &Sequence::ones(3), 2, 3),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn ab_examples() {
        let ones = Sequence::ones(5);
        assert_eq!(
            ab_recurrence(1, 0, &ones, 4).unwrap(),
            Sequence::from_ints([1, 2, 5, 14])
        );
        assert_eq!(
            ab_recurrence(0, 1, &ones, 5).unwrap(),
            Sequence::from_ints([1, 2, 4, 8, 16])
        );
        assert_eq!(
            ab_recurrence(2, 0, &ones, 4).unwrap(),
            Sequence::from_ints([1, 3, 12, 55])
        );
        assert!(ab_recurrence(0, 0, &ones, 4).is_err());
    }

    #[test]
    fn ab_matches_transform() {
        let x: Sequence = "2,-1,1/3,0,4,1,-2,1".parse().unwrap();
        for a in 0..=3u32 {
            for b in 0..=3u32 {
                if a + b == 0 {
                    continue;
                }
                let p = BellParams::from_ints(a as i64, b as i64, -1, 1);
                assert_eq!(
                    ab_recurrence(a, b, &x, 8).unwrap(),
                    bell_transform(&p, &x),
                    "a={a} b={b}"
                );
            }
        }
    }
}
