//! Numerical semigroups, the correspondence between genus-`g` semigroups and
//! almost symmetric semigroups of Frobenius number `F` and type `F - 2g`,
//! and genus counting by pseudo-Frobenius descent.
//!
//! ```
//! use gapset::{bijection, NumericalSemigroup};
//!
//! let s: NumericalSemigroup = "gens:2,5".parse().unwrap();
//! let image = bijection::forward(&s, 7).unwrap();
//! assert_eq!(image.to_string(), "gaps:1,2,3,5,7");
//! assert_eq!(bijection::inverse(&image).unwrap(), s);
//! ```

mod bits;

pub mod bijection;
pub mod cli;
pub mod descent;
pub mod error;
pub mod ideals;
pub mod oracle;
pub mod semigroup;
pub mod verify;

pub use descent::{CountReport, DescentConfig, DescentState};
pub use error::{Error, Result};
pub use ideals::RelativeIdeal;
pub use oracle::OracleConfig;
pub use semigroup::{
    validate_gapset, Gapset, InvariantSummary, NumericalSemigroup, PseudoFrobeniusSet,
};
