//! Exact rational scalars and the small combinatorial helpers built on them.
//!
//! All coefficients in this crate live in Q, stored in lowest terms with a
//! positive denominator. [`Rational`] is backed by `num_rational::BigRational`,
//! which maintains exactly that canonical form on every operation.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Arbitrary-precision exact rational scalar.
pub type Rational = num_rational::BigRational;

/// Shorthand for a rational from machine integers. Panics on `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer embedded into Q.
pub fn rat_int(num: i64) -> Rational {
    Rational::from_integer(BigInt::from(num))
}

/// n! as a big integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Binomial coefficient C(n, k); zero when k > n.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Odd double factorial (2k-1)!! with the empty-product convention
/// (-1)!! = 1, so `double_factorial_odd(0) == 1`.
pub fn double_factorial_odd(k: u64) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, j| acc * (2 * j - 1))
}

/// Render in the exact wire format: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse the wire format accepted by [`format_rational`]: an optionally
/// signed integer, or `p/q` with a nonzero denominator.
pub fn parse_rational(text: &str) -> Result<Rational, Error> {
    let text = text.trim();
    let bad = || Error::Parse(format!("invalid rational {text:?}"));
    match text.split_once('/') {
        None => {
            let n: BigInt = text.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
        Some((num, den)) => {
            let n: BigInt = num.trim().parse().map_err(|_| bad())?;
            let d: BigInt = den.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// True when the value is stored in canonical form: lowest terms, positive
/// denominator, and zero as 0/1. `BigRational` guarantees this; the audit
/// is kept as an explicit check for the test suites.
pub fn is_canonical(r: &Rational) -> bool {
    use num_integer::Integer;
    if r.denom().is_negative() || r.denom().is_zero() {
        return false;
    }
    if r.numer().is_zero() {
        return r.denom().is_one();
    }
    r.numer().gcd(r.denom()).is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_and_binomial() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        // 21! overflows 64-bit words; must stay exact.
        assert_eq!(factorial(21).to_string(), "51090942171709440000");
    }

    #[test]
    fn double_factorial_convention() {
        assert_eq!(double_factorial_odd(0), BigInt::from(1));
        assert_eq!(double_factorial_odd(1), BigInt::from(1));
        assert_eq!(double_factorial_odd(3), BigInt::from(15));
    }

    #[test]
    fn wire_format_round_trip() {
        for text in ["0", "-3", "7/2", "-22/7"] {
            let r = parse_rational(text).unwrap();
            assert!(is_canonical(&r));
            assert_eq!(format_rational(&r), text);
        }
        // non-canonical input normalizes
        assert_eq!(format_rational(&parse_rational("4/-6").unwrap()), "-2/3");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
