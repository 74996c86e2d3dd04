//! Dense univariate polynomials in the deformation parameter s over Q.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::algebra::rational::{rat_int, Rational};

/// Polynomial in s with rational coefficients, stored densely in ascending
/// degree. The zero polynomial is the empty list; no trailing zeros are
/// ever stored, so `degree` is `len - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SPoly {
    coeffs: Vec<Rational>,
}

fn trim(mut coeffs: Vec<Rational>) -> Vec<Rational> {
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    coeffs
}

impl SPoly {
    pub fn zero() -> Self {
        SPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        SPoly::constant(rat_int(1))
    }

    /// The variable s itself.
    pub fn var() -> Self {
        SPoly::from_coeffs(vec![rat_int(0), rat_int(1)])
    }

    pub fn constant(c: Rational) -> Self {
        SPoly::from_coeffs(vec![c])
    }

    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        SPoly {
            coeffs: trim(coeffs),
        }
    }

    /// Rising factorial s(s+1)...(s+k-1); the empty product (k = 0) is 1.
    pub fn rising_factorial(k: usize) -> Self {
        let mut acc = SPoly::one();
        for j in 0..k {
            let factor = SPoly::from_coeffs(vec![rat_int(j as i64), rat_int(1)]);
            acc = &acc * &factor;
        }
        acc
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of s^k, zero beyond the stored degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(|| rat_int(0))
    }

    /// Degree, with the zero polynomial at -1.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == rat_int(1)
    }

    /// Some(constant) when the polynomial does not actually involve s.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(rat_int(0)),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> SPoly {
        if c.is_zero() {
            return SPoly::zero();
        }
        SPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(rat_int(0), |acc, c| acc * x + c)
    }

    /// p(s + c), used to compare level s+1 objects against level s ones.
    pub fn compose_shift(&self, c: &Rational) -> SPoly {
        let shifted = SPoly::from_coeffs(vec![c.clone(), rat_int(1)]);
        let mut acc = SPoly::zero();
        for a in self.coeffs.iter().rev() {
            acc = &(&acc * &shifted) + &SPoly::constant(a.clone());
        }
        acc
    }

    /// Exact quotient in Q[s]; None when the division leaves a remainder
    /// or the divisor is zero.
    pub fn div_exact(&self, divisor: &SPoly) -> Option<SPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(SPoly::zero());
        }
        let dd = divisor.coeffs.len() - 1;
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() < divisor.coeffs.len() {
            return None;
        }
        let mut quot = vec![rat_int(0); rem.len() - dd];
        while rem.len() >= divisor.coeffs.len() {
            let k = rem.len() - 1 - dd;
            let q = rem.last().unwrap() / lead;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                let v = &rem[k + i] - &(d * &q);
                rem[k + i] = v;
            }
            quot[k] = q;
            debug_assert!(rem.last().unwrap().is_zero());
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) && rem.len() > k {
                rem.pop();
            }
        }
        if rem.iter().all(Zero::is_zero) {
            Some(SPoly::from_coeffs(quot))
        } else {
            None
        }
    }
}

impl Add for &SPoly {
    type Output = SPoly;

    fn add(self, rhs: &SPoly) -> SPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        SPoly::from_coeffs(coeffs)
    }
}

impl Sub for &SPoly {
    type Output = SPoly;

    fn sub(self, rhs: &SPoly) -> SPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        SPoly::from_coeffs(coeffs)
    }
}

impl Mul for &SPoly {
    type Output = SPoly;

    fn mul(self, rhs: &SPoly) -> SPoly {
        if self.is_zero() || rhs.is_zero() {
            return SPoly::zero();
        }
        let mut coeffs = vec![rat_int(0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        SPoly::from_coeffs(coeffs)
    }
}

impl Neg for &SPoly {
    type Output = SPoly;

    fn neg(self) -> SPoly {
        SPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for SPoly {
    type Output = SPoly;
    fn add(self, rhs: SPoly) -> SPoly {
        &self + &rhs
    }
}

impl Sub for SPoly {
    type Output = SPoly;
    fn sub(self, rhs: SPoly) -> SPoly {
        &self - &rhs
    }
}

impl Mul for SPoly {
    type Output = SPoly;
    fn mul(self, rhs: SPoly) -> SPoly {
        &self * &rhs
    }
}

impl Neg for SPoly {
    type Output = SPoly;
    fn neg(self) -> SPoly {
        -&self
    }
}
