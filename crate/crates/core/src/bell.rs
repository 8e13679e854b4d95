//! Partial Bell polynomials and the polynomial families built on them.
//!
//! `B_{n,k}(z_1, ..., z_{n-k+1})` is evaluated at concrete rational
//! arguments. The production path is the triangular recurrence
//!
//! ```text
//! B_{0,0} = 1,  B_{n,0} = 0 (n >= 1),
//! B_{n,k} = sum_{i=1}^{n-k+1} C(n-1, i-1) z_i B_{n-i,k-1}
//! ```
//!
//! memoised in a [`BellTable`]. [`partial_bell_direct`] sums over the
//! multi-indices of weight `n` and degree `k` and exists as an independent
//! check of the recurrence.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::sequence::{binomial, factorial, falling, pow, Rational, Sequence};

/// All `B_{n,k}(z)` for `0 <= k <= n <= N`, computed once.
#[derive(Clone, Debug)]
pub struct BellTable {
    input: Sequence,
    max_n: usize,
    // rows[n][k], k in 0..=n
    rows: Vec<Vec<Rational>>,
}

impl BellTable {
    /// Builds the table for rows `0..=max_n`. Requires `z.len() >= max_n`
    /// (row `max_n` uses `z_{max_n}` through `B_{max_n,1}`).
    pub fn new(z: &Sequence, max_n: usize) -> Result<Self> {
        z.require(max_n)?;
        Ok(Self::build(z.terms(), z.clone(), max_n))
    }

    /// Table over the full length of `z`.
    pub fn for_sequence(z: &Sequence) -> Self {
        Self::build(z.terms(), z.clone(), z.len())
    }

    // `terms` may be shorter than max_n; missing arguments are never read for
    // entries with n - k + 1 <= terms.len(), so they are treated as zero.
    fn build(terms: &[Rational], input: Sequence, max_n: usize) -> Self {
        let zero = Rational::zero();
        let z = |i: usize| terms.get(i - 1).unwrap_or(&zero);
        let binom: Vec<Vec<BigInt>> = (0..max_n.max(1))
            .map(|m| (0..=m).map(|j| binomial(m as i64, j as i64)).collect())
            .collect();
        let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(max_n + 1);
        rows.push(vec![Rational::one()]);
        for n in 1..=max_n {
            let mut row = vec![Rational::zero(); n + 1];
            for k in 1..=n {
                let mut acc = Rational::zero();
                for i in 1..=(n - k + 1) {
                    let prev = &rows[n - i][k - 1];
                    if prev.is_zero() || z(i).is_zero() {
                        continue;
                    }
                    let c = Rational::from_integer(binom[n - 1][i - 1].clone());
                    acc += c * z(i) * prev;
                }
                row[k] = acc;
            }
            rows.push(row);
        }
        BellTable { input, max_n, rows }
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn input(&self) -> &Sequence {
        &self.input
    }

    /// `B_{n,k}`; zero for `k > n`. Panics if `n > max_n`.
    pub fn get(&self, n: usize, k: usize) -> &Rational {
        static ZERO: std::sync::OnceLock<Rational> = std::sync::OnceLock::new();
        if k > n {
            return ZERO.get_or_init(Rational::zero);
        }
        &self.rows[n][k]
    }

    /// Row `n` as `B_{n,1}, ..., B_{n,n}`.
    pub fn row(&self, n: usize) -> &[Rational] {
        &self.rows[n][1..]
    }
}

fn check_indices(n: usize, k: usize) -> Result<()> {
    if n == 0 || k == 0 || k > n {
        return Err(Error::domain(format!(
            "partial Bell index (n={n}, k={k}) outside 1 <= k <= n"
        )));
    }
    Ok(())
}

/// `B_{n,k}(z_1, ..., z_{n-k+1})` via the triangular recurrence.
pub fn partial_bell(n: usize, k: usize, z: &Sequence) -> Result<Rational> {
    check_indices(n, k)?;
    z.require(n - k + 1)?;
    let table = BellTable::build(z.terms(), z.clone(), n);
    Ok(table.get(n, k).clone())
}

/// `B_{n,k}` as the explicit multi-index sum
/// `sum_{alpha} n! / prod(alpha_i!) * prod (z_i / i!)^{alpha_i}`.
///
/// Exponential in `n`; used to cross-check [`partial_bell`].
pub fn partial_bell_direct(n: usize, k: usize, z: &Sequence) -> Result<Rational> {
    check_indices(n, k)?;
    let parts = n - k + 1;
    z.require(parts)?;
    let scaled: Vec<Rational> = (1..=parts)
        .map(|i| &z[i] / Rational::from_integer(factorial(i)))
        .collect();
    let mut total = Rational::zero();
    let mut alpha = vec![0usize; parts];
    multi_indices(parts, n, k, &mut alpha, &mut |alpha| {
        let mut term = Rational::from_integer(factorial(n));
        for (i, &a) in alpha.iter().enumerate() {
            if a > 0 {
                term *= pow(&scaled[i], a);
                term /= Rational::from_integer(factorial(a));
            }
        }
        total += term;
    });
    Ok(total)
}

// Enumerates alpha in N_0^parts with sum alpha_i = k and sum i*alpha_i = n.
fn multi_indices(
    part: usize,
    weight: usize,
    degree: usize,
    alpha: &mut [usize],
    visit: &mut dyn FnMut(&[usize]),
) {
    if part == 0 {
        if weight == 0 && degree == 0 {
            visit(alpha);
        }
        return;
    }
    let max = (weight / part).min(degree);
    for a in 0..=max {
        alpha[part - 1] = a;
        multi_indices(part - 1, weight - a * part, degree - a, alpha, visit);
    }
    alpha[part - 1] = 0;
}

/// Logarithmic polynomial `L_n = sum_k (-1)^{k-1} (k-1)! B_{n,k}(g)`, the
/// exponential coefficients of `log(1 + g_1 t + g_2 t^2/2! + ...)`.
pub fn log_polynomial(n: usize, g: &Sequence) -> Result<Rational> {
    if n == 0 {
        return Err(Error::domain("logarithmic polynomial index must be >= 1"));
    }
    g.require(n)?;
    let table = BellTable::new(g, n)?;
    let mut acc = Rational::zero();
    for k in 1..=n {
        let w = Rational::from_integer(factorial(k - 1));
        if k % 2 == 1 {
            acc += w * table.get(n, k);
        } else {
            acc -= w * table.get(n, k);
        }
    }
    Ok(acc)
}

/// Potential polynomial `P_n^{(r)} = sum_k (r)_k B_{n,k}(g)`, the exponential
/// coefficients of `(1 + g_1 t + g_2 t^2/2! + ...)^r`.
pub fn potential_polynomial(n: usize, r: &Rational, g: &Sequence) -> Result<Rational> {
    if n == 0 {
        return Err(Error::domain("potential polynomial index must be >= 1"));
    }
    g.require(n)?;
    let table = BellTable::new(g, n)?;
    Ok((1..=n).map(|k| falling(r, k) * table.get(n, k)).sum())
}

/// Faà di Bruno composition in exponential coefficients.
///
/// `f = (f_0, f_1, ...)` and `g = (g_1, g_2, ...)` are the exponential
/// coefficients of `f(u) = sum f_k u^k/k!` and `g(t) = sum g_m t^m/m!`.
/// Returns `h_0, ..., h_n` with `h_0 = f_0` and
/// `h_m = sum_{k=1}^m f_k B_{m,k}(g)`.
pub fn faa_di_bruno_compose(f: &[Rational], g: &Sequence, n: usize) -> Result<Vec<Rational>> {
    if f.len() < n + 1 {
        return Err(Error::Length {
            needed: n + 1,
            available: f.len(),
        });
    }
    let table = BellTable::new(g, n)?;
    let mut h = Vec::with_capacity(n + 1);
    h.push(f[0].clone());
    for m in 1..=n {
        h.push((1..=m).map(|k| &f[k] * table.get(m, k)).sum());
    }
    Ok(h)
}

/// `f_j = 3 (2j-1)! 2^j / ((j-1)! (j+2)!)`: rooted bicubic planar maps with
/// `2j` vertices, equivalently rooted Eulerian planar maps with `j` edges.
pub fn bicubic_map_count(j: usize) -> Rational {
    assert!(j >= 1, "bicubic map counts start at j = 1");
    let num = BigInt::from(3) * factorial(2 * j - 1) * (BigInt::one() << j);
    let den = factorial(j - 1) * factorial(j + 2);
    Rational::new(num, den)
}

/// Closed form for `(k!/n!) B_{n,k}(1! f_1, 2! f_2, ...)` with `f` as in
/// [`bicubic_map_count`], written as a leading binomial term, a single sum
/// and a triple sum.
pub fn closed_form_f_bell(n: usize, k: usize) -> Result<Rational> {
    check_indices(n, k)?;
    let (ni, ki) = (n as i64, k as i64);
    let b = |p: i64, q: i64| Rational::from_integer(binomial(p, q));
    // 2^e for possibly negative e
    let two_pow = |e: i64| {
        if e >= 0 {
            Rational::from_integer(BigInt::one() << e as usize)
        } else {
            Rational::new(BigInt::one(), BigInt::one() << (-e) as usize)
        }
    };

    let leading = two_pow(ni + 1) * b(2 * ni - 1, ni - ki) * Rational::new(ki.into(), (ni + ki).into());

    let mut single = Rational::zero();
    for i in 0..=ki {
        let term = b(2 * ni + 2 * i - 1, ni - 1) * b(ki - 1, ki - i);
        if i % 2 == 0 {
            single += term;
        } else {
            single -= term;
        }
    }
    let single = two_pow(ni + 1 - 2 * ki) * Rational::new(ki.into(), ni.into()) * single;

    let mut triple = Rational::zero();
    for j in 1..ni {
        for i in 1..ki {
            for l in 0..=i {
                let binoms =
                    b(ki, i) * b(i - 1, i - l) * b(2 * j + 2 * l, j) * b(2 * ni - 2 * j - 1, ni - j - ki + i);
                if binoms.is_zero() {
                    continue;
                }
                let frac = Rational::new((i * (ki - i)).into(), ((j + l) * (ni - j + ki - i)).into());
                let term = two_pow(ni + 1 - 2 * i) * binoms * frac;
                if l % 2 == 0 {
                    triple += term;
                } else {
                    triple -= term;
                }
            }
        }
    }
    Ok(leading + single + triple)
}

/// `(k!/n!) B_{n,k}(1! f_1, 2! f_2, ...)` computed through the recurrence,
/// for comparison with [`closed_form_f_bell`].
pub fn f_bell_via_table(n: usize, k: usize) -> Result<Rational> {
    check_indices(n, k)?;
    let f = Sequence::from_fn(n, bicubic_map_count)?;
    let b = partial_bell(n, k, &f.factorial_weight())?;
    Ok(b * Rational::from_integer(factorial(k)) / Rational::from_integer(factorial(n)))
}

/// Multiplies a rational by `(-1)^k`.
pub(crate) fn signed(k: usize, v: Rational) -> Rational {
    if k.is_multiple_of(2) {
        v
    } else {
        -v
    }
}
