//! Executable checks of the identities satisfied by Bell transforms.
//!
//! Each `check_*` function evaluates both sides of an identity exactly and
//! returns a [`CheckReport`]. A failing report carries the first index where
//! the two sides differ, together with both values.

mod algebraic;
mod convolution;
mod gf;
mod interpolation;

use std::fmt;

use crate::sequence::{format_rational, Rational};

pub use algebraic::{av_cubic_residual, check_algebraic_gf, check_av_cubic, AlgebraicCase};
pub use convolution::{ab_recurrence, convolution_power, convolve_bell};
pub use gf::{check_gf, check_gf_with, GfCase};
pub use interpolation::{check_appendix_interp, check_interpolation, AppendixKind};

/// First disagreement between the two sides of an identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub index: usize,
    pub lhs: Rational,
    pub rhs: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub identity: String,
    /// Human-readable parameter summary, e.g. `Y(1,0,-1,1) lambda=7`.
    pub params: String,
    pub order: usize,
    pub pass: bool,
    pub witness: Option<Witness>,
    /// Seed of the random draw that produced the inputs, if any.
    pub seed: Option<u64>,
}

impl CheckReport {
    /// Compares `lhs[i]` with `rhs[i]`; entry `i` is reported as index
    /// `first_index + i`. Both slices must have the same length.
    pub fn compare(
        identity: impl Into<String>,
        params: impl Into<String>,
        order: usize,
        first_index: usize,
        lhs: &[Rational],
        rhs: &[Rational],
    ) -> Self {
        assert_eq!(lhs.len(), rhs.len(), "sides compared at different lengths");
        let witness = lhs.iter().zip(rhs).position(|(l, r)| l != r).map(|i| Witness {
            index: first_index + i,
            lhs: lhs[i].clone(),
            rhs: rhs[i].clone(),
        });
        CheckReport {
            identity: identity.into(),
            params: params.into(),
            order,
            pass: witness.is_none(),
            witness,
            seed: None,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{status} {}", self.identity)?;
        if !self.params.is_empty() {
            write!(f, " [{}]", self.params)?;
        }
        write!(f, " order {}", self.order)?;
        if let Some(seed) = self.seed {
            write!(f, " seed {seed}")?;
        }
        if let Some(w) = &self.witness {
            write!(
                f,
                ": index {} lhs {} rhs {}",
                w.index,
                format_rational(&w.lhs),
                format_rational(&w.rhs)
            )?;
        }
        Ok(())
    }
}
