//! Extended-precision evaluation of hypergeometric regulator formulas.
//!
//! Layers, bottom up:
//!
//! - [`precision`]: binary floating point `XReal`/`XComplex` with a
//!   per-call [`Context`] carrying the decimal precision.
//! - [`special`]: gamma, digamma, dilogarithm, Bloch–Wigner and the
//!   elliptic dilogarithm.
//! - [`hyper`]: generalized hypergeometric series, Gauss 2F1 continuation,
//!   quadrature oracles.
//! - [`ellcurve`]: exact elliptic curve arithmetic (Tate's algorithm,
//!   conductors, point counts).
//! - [`lfunc`]: L(E, 2) via the approximate functional equation.
//! - [`regulators`]: regulator formulas for Fermat, Gauss and elliptic
//!   fibrations, plus the elliptic dilogarithm identities.
//! - [`verify`]: rational reconstruction, golden tables, identity suite.

pub mod ellcurve;
pub mod error;
pub mod hyper;
pub mod lfunc;
pub mod precision;
pub mod regulators;
pub mod special;
pub mod verify;

pub use error::{Error, Result};
pub use precision::{Context, Rational, XComplex, XReal};
