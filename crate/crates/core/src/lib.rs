//! Exact rational solutions of the Painlevé IV equation.
//!
//! The crate is layered bottom-up:
//!
//! * [`ratfun`]: rationals, dense polynomials, normalized rational functions,
//!   Wronskians and rational integration.
//! * [`special`]: Hermite, pseudo-Hermite and Okamoto-type polynomial families
//!   and logarithmic derivatives of gauge-weighted Wronskians.
//! * [`solutions`]: ρ-functions, Painlevé IV solutions, symmetric multiplets,
//!   the Wronskian hierarchies and their verifiers.
//! * [`weyl`]: the extended affine Weyl group action on parameters and on
//!   multiplets, the AKNS J-variable maps and the Miura map.
//! * [`hamilton`]: Hamiltonian frames (H, Q, P) and their verification.
//!
//! Every check is an exact polynomial identity; there is no floating point.

pub mod error;
pub mod hamilton;
pub mod ratfun;
pub mod report;
pub mod solutions;
pub mod special;
pub mod weyl;

pub use error::{Error, Result};
pub use ratfun::{BigRat, Poly, RatFun};
pub use report::Report;
