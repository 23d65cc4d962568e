//! Computations on rank-one compact symmetric spaces: spherical functions,
//! spherical-representation dimensions, double-coset classification, and
//! numerical diagnosis of the Plancherel series that decides whether
//! convolution products of orbital measures have integrable or
//! square-integrable densities.
//!
//! The crate is organised around the small amount of data that determines
//! everything else — the multiplicities `(m_alpha, m_2alpha)` of the
//! restricted roots:
//!
//! * [`catalog`] — the table of spaces and the derived Jacobi exponents;
//! * [`jacobi`] — Jacobi polynomials, spherical functions and their
//!   asymptotics, with independent exact-arithmetic oracles;
//! * [`dimension`] — spherical-representation dimensions plus a quadrature
//!   oracle;
//! * [`orbit`] — annihilating roots, double-coset dimensions and the
//!   closed-form smoothness verdicts, each computed by two routes;
//! * [`plancherel`] — partial sums and convergence diagnosis of the norm
//!   series, cross-checked against the closed forms;
//! * [`verify`] — the acceptance checks behind `rankone verify`.
//!
//! All public operations are pure functions of their arguments and safe to
//! call concurrently.

pub mod catalog;
pub mod dimension;
pub mod error;
pub mod fit;
pub mod input;
pub mod jacobi;
pub mod orbit;
pub mod output;
pub mod plancherel;
pub mod quadrature;
pub mod verify;

pub use catalog::{list_catalog, JacobiParams, RootKind, SpaceFamily, SymmetricSpace};
pub use error::{Error, Result};
pub use jacobi::{RadialPoint, SphericalValue};
pub use orbit::{OrbitClass, OrbitKind, SmoothnessVerdict};
pub use plancherel::{SeriesDiagnosis, SeriesTrace, SeriesVerdict};
