//! Exact symbolic computation of Schur-type generating functions and
//! Weyl-type character formulas.
//!
//! The crate covers
//!
//! * partitions, generalized partitions and skew shapes ([`partitions`]);
//! * sparse multivariate Laurent series with big-integer coefficients and
//!   inverse-degree truncation ([`series`]);
//! * semistandard and Littlewood-Richardson tableau enumeration
//!   ([`tableaux`]);
//! * classical, skew, rational, super and hook Schur polynomials
//!   ([`schur`]);
//! * minimal coset representatives of the infinite symmetric group and the
//!   shifted action on generalized partitions ([`coxeter`]);
//! * the two-alphabet functions `S_λ^{A/B}` together with checkers for the
//!   Weyl-type, Cauchy, factorization and Jacobi-Trudi identities ([`sab`]);
//! * characters of Kac modules, hook Schur characters of `gl(m|n)` and
//!   the generalized Verma / unitarizable characters of `gl(m+n)`
//!   ([`repchar`]).
//!
//! Every identity checker returns a [`report::VerifyReport`] and never
//! divides series: identities are cross-multiplied so that only
//! polynomial products and truncated geometric expansions occur.

pub mod cli;
pub mod coxeter;
pub mod error;
pub mod matrix;
pub mod partitions;
pub mod repchar;
pub mod report;
pub mod sab;
pub mod schur;
pub mod series;
pub mod tableaux;

pub use error::{Error, Result};
pub use partitions::{FrobeniusCoords, GeneralizedPartition, Partition, SkewShape};
pub use series::{GradedAlphabet, LaurentSeries, Parity, Side, Universe};
