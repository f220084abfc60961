//! Exact q-series arithmetic and the Schur-determinant route to the
//! Rogers-Ramanujan identities and their m-parametrized generalization.
//!
//! - [`poly`] and [`series`]: Laurent polynomials and truncated Laurent
//!   series with big-integer coefficients.
//! - [`schur_poly`]: the Schur polynomials `D_m`, `E_m`, the Wronskian and
//!   the `lambda`/`mu` coefficients.
//! - [`determinant`]: finite Schur determinants, the coefficients `a_n`, and
//!   the checks tying them together.
//! - [`identities`]: the two infinite products and the identity verifier.
//! - [`cli`]: the command-line front end.

pub mod cli;
pub mod determinant;
pub mod error;
pub mod identities;
mod kernel;
pub mod poly;
pub mod report;
pub mod schur_poly;
pub mod series;

pub use error::{Error, Result};
pub use poly::{Coefficient, LaurentPoly};
pub use report::{CheckSuiteResult, MismatchDetail, Status, VerificationReport};
pub use schur_poly::SchurKind;
pub use series::{Mismatch, QSeries};
