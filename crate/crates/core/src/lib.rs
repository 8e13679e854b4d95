//! Exact Bell transforms of sequences.
//!
//! The central object is the four-parameter transform
//!
//! ```text
//! y_n = sum_{k=1}^{n} (1/n!) [prod_{j=1}^{k-1} (a n + b k + c j + d)] B_{n,k}(1! x_1, 2! x_2, ...)
//! ```
//!
//! where `B_{n,k}` is the exponential partial Bell polynomial. Everything is
//! computed over arbitrary-precision rationals; there is no floating point in
//! any computation path.
//!
//! Module map:
//!
//! * [`bell`]: partial Bell polynomials, logarithmic and potential
//!   polynomials, Faà di Bruno composition.
//! * [`series`]: truncated formal power series with composition, `log`,
//!   `exp`, rational powers and reversion.
//! * [`transform`]: the transform itself, its explicit inverse, named
//!   transforms and operator words.
//! * [`identities`]: executable checks of the algebraic identities that the
//!   transform satisfies.
//! * [`catalog`]: named sequences and brute-force combinatorial enumerators.
//! * [`discovery`]: search for operator words relating two sequences.
//!
//! ```
//! use belltrans::transform::{bell_inverse, bell_transform};
//! use belltrans::{BellParams, Sequence};
//!
//! let catalan = bell_transform(&BellParams::from_ints(1, 0, -1, 1), &Sequence::ones(6));
//! assert_eq!(catalan, Sequence::from_ints([1, 2, 5, 14, 42, 132]));
//! assert_eq!(bell_inverse(&BellParams::from_ints(1, 0, -1, 1), &catalan), Sequence::ones(6));
//! ```

pub mod bell;
pub mod catalog;
pub mod discovery;
mod error;
pub mod identities;
pub mod random;
pub mod sequence;
pub mod series;
pub mod transform;

pub use error::{Error, Result};
pub use sequence::{Rational, Sequence};
pub use series::Series;
pub use transform::{Atom, BellParams, OperatorWord};
