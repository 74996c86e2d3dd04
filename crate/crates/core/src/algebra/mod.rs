//! Exact arithmetic substrate: rationals, polynomials in s and z, shift
//! and derivative operators, and fraction-free determinants.
//!
//! Every value is immutable after construction and every operation is a
//! pure function, so the whole module is freely shareable across threads.

mod alpha;
mod det;
mod rational;
mod spoly;
mod zpoly;

pub use alpha::Alpha;
pub use det::det_fraction_free;
pub use rational::{
    binomial, double_factorial_odd, factorial, format_rational, is_canonical, parse_rational, rat,
    rat_int, Rational,
};
pub use spoly::SPoly;
pub use zpoly::ZPoly;
