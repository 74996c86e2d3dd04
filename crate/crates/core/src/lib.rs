//! Exact symbolic-numeric construction of the deformed Hermite families.
//!
//! Starting from the physicists' Hermite polynomials H_n, an exponential
//! map built from powers of d/dz produces a two-parameter family M_n of
//! degree-n polynomials (level s, sign alpha = +/-1). A signed Gaussian
//! charge density of total charge 1 makes each M_n with n >= 1 integrate
//! to zero; orthogonalizing against that density yields a second family
//! C_n, and applying the same combination coefficients back to the
//! Hermite polynomials gives a third family W_n. The exponential and
//! linear maps commute, closing a square of four families which this
//! crate constructs and machine-checks in exact rational arithmetic.
//!
//! No floating point appears anywhere: scalars are arbitrary-precision
//! rationals and polynomials live in Q[s][z].
//!
//! Module map:
//! - [`algebra`]: rationals, the s- and z-polynomial tower, fraction-free
//!   determinants.
//! - [`deform`]: Hermite polynomials, the exponential map, the deformed
//!   family by four independent routes, its recursions and differential
//!   system.
//! - [`measure`]: the charge density, exact Gaussian-moment integration,
//!   pairing tables, and moment decompositions.
//! - [`family`]: Gram data, the orthogonal family C, the pre-image
//!   family W, and the commuting-square verifier.
//! - [`verify`]: grid verification with a deterministic report.
//! - [`render`] / [`serialize`]: plain/LaTeX text and JSON/CSV wire
//!   formats, all exact.

pub mod algebra;
pub mod deform;
pub mod error;
pub mod family;
pub mod measure;
pub mod render;
pub mod serialize;
pub mod verify;

pub use algebra::{Alpha, Rational, SPoly, ZPoly};
pub use error::Error;
