//! Seeded random draws for randomized identity checks.
//!
//! Every draw comes from a ChaCha8 stream keyed by a `u64` seed, so a
//! failing check can be replayed from the seed in its report.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::sequence::{int, Rational, Sequence};
use crate::transform::BellParams;

pub struct Draws {
    rng: ChaCha8Rng,
    seed: u64,
}

impl Draws {
    pub fn new(seed: u64) -> Self {
        Draws {
            rng: ChaCha8Rng::seed_from_u64(seed),
            seed,
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Uniform integer in `lo..=hi`.
    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn nonzero_int(&mut self, lo: i64, hi: i64) -> i64 {
        loop {
            let v = self.int(lo, hi);
            if v != 0 {
                return v;
            }
        }
    }

    pub fn bool(&mut self) -> bool {
        self.rng.gen()
    }

    /// `p/q` with `|p| <= bound` and `1 <= q <= 3`.
    pub fn rational(&mut self, bound: i64) -> Rational {
        let p = self.int(-bound, bound);
        let q = self.int(1, 3);
        Rational::new(p.into(), q.into())
    }

    pub fn nonzero_rational(&mut self, bound: i64) -> Rational {
        loop {
            let r = self.rational(bound);
            if r != int(0) {
                return r;
            }
        }
    }

    /// `n` integers in `lo..=hi`.
    pub fn int_sequence(&mut self, n: usize, lo: i64, hi: i64) -> Sequence {
        Sequence::from_fn(n, |_| int(self.int(lo, hi))).expect("n >= 1")
    }

    /// `n` small rationals, see [`Draws::rational`].
    pub fn rational_sequence(&mut self, n: usize, bound: i64) -> Sequence {
        Sequence::from_fn(n, |_| self.rational(bound)).expect("n >= 1")
    }

    /// Integer parameters in `-bound..=bound`.
    pub fn params(&mut self, bound: i64) -> BellParams {
        BellParams::from_ints(
            self.int(-bound, bound),
            self.int(-bound, bound),
            self.int(-bound, bound),
            self.int(-bound, bound),
        )
    }

    /// Like [`Draws::params`] but with the given `c`.
    pub fn params_with_c(&mut self, bound: i64, c: i64) -> BellParams {
        let mut p = self.params(bound);
        p.c = int(c);
        p
    }

    /// Rational parameters with `c != 0`.
    pub fn rational_params_c_nonzero(&mut self, bound: i64) -> BellParams {
        BellParams::new(
            self.rational(bound),
            self.rational(bound),
            self.nonzero_rational(bound),
            self.rational(bound),
        )
    }
}
