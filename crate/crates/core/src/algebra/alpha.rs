//! The sign parameter of the deformation, restricted to +1 or -1.

use std::fmt;
use std::str::FromStr;

use crate::algebra::rational::{rat_int, Rational};
use crate::error::Error;

/// The deformation sign alpha, either +1 or -1. Its square is always 1,
/// which the arithmetic helpers below exploit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Alpha {
    Plus,
    Minus,
}

impl Alpha {
    pub const BOTH: [Alpha; 2] = [Alpha::Plus, Alpha::Minus];

    pub fn sign(self) -> i64 {
        match self {
            Alpha::Plus => 1,
            Alpha::Minus => -1,
        }
    }

    pub fn rational(self) -> Rational {
        rat_int(self.sign())
    }

    /// alpha^k, exploiting alpha^2 = 1.
    pub fn pow(self, k: u64) -> Rational {
        match self {
            Alpha::Plus => rat_int(1),
            Alpha::Minus => rat_int(if k.is_multiple_of(2) { 1 } else { -1 }),
        }
    }

    /// (2 alpha)^k as an exact rational.
    pub fn two_alpha_pow(self, k: u64) -> Rational {
        self.pow(k) * rat_int(2).pow(k as i32)
    }

    pub fn from_sign(v: i64) -> Result<Alpha, Error> {
        match v {
            1 => Ok(Alpha::Plus),
            -1 => Ok(Alpha::Minus),
            other => Err(Error::InvalidArgument(format!(
                "alpha must be +1 or -1, got {other}"
            ))),
        }
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Alpha::Plus => write!(f, "+1"),
            Alpha::Minus => write!(f, "-1"),
        }
    }
}

impl FromStr for Alpha {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "+1" | "1" | "+" | "plus" => Ok(Alpha::Plus),
            "-1" | "-" | "minus" => Ok(Alpha::Minus),
            other => Err(Error::Parse(format!(
                "alpha must be +1 or -1, got {other:?}"
            ))),
        }
    }
}
