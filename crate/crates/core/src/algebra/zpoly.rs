//! Dense polynomials in z whose coefficients live in Q[s].
//!
//! This is the tower that houses every family the crate constructs: the
//! Hermite polynomials (coefficients free of s), the deformed families,
//! and the measure polynomials. A "numeric" ZPoly is one whose every
//! coefficient has degree 0 in s.

use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::rational::{rat_int, Rational};
use crate::algebra::spoly::SPoly;

/// Polynomial in z over Q[s], ascending degree, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZPoly {
    coeffs: Vec<SPoly>,
}

fn trim(mut coeffs: Vec<SPoly>) -> Vec<SPoly> {
    while coeffs.last().is_some_and(SPoly::is_zero) {
        coeffs.pop();
    }
    coeffs
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        ZPoly::constant(SPoly::one())
    }

    /// The variable z itself.
    pub fn var() -> Self {
        ZPoly::from_coeffs(vec![SPoly::zero(), SPoly::one()])
    }

    pub fn constant(c: SPoly) -> Self {
        ZPoly::from_coeffs(vec![c])
    }

    pub fn constant_rat(c: Rational) -> Self {
        ZPoly::constant(SPoly::constant(c))
    }

    pub fn from_coeffs(coeffs: Vec<SPoly>) -> Self {
        ZPoly {
            coeffs: trim(coeffs),
        }
    }

    pub fn coeffs(&self) -> &[SPoly] {
        &self.coeffs
    }

    /// Coefficient of z^p, zero beyond the stored degree.
    pub fn coeff(&self, p: usize) -> SPoly {
        self.coeffs.get(p).cloned().unwrap_or_else(SPoly::zero)
    }

    /// Degree in z, with the zero polynomial at -1.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True when no coefficient involves s.
    pub fn is_numeric(&self) -> bool {
        self.coeffs.iter().all(|c| c.degree() <= 0)
    }

    pub fn leading_coeff(&self) -> SPoly {
        self.coeffs.last().cloned().unwrap_or_else(SPoly::zero)
    }

    pub fn scale(&self, c: &Rational) -> ZPoly {
        ZPoly::from_coeffs(self.coeffs.iter().map(|a| a.scale(c)).collect())
    }

    pub fn scale_s(&self, c: &SPoly) -> ZPoly {
        ZPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// d/dz. Drops the degree by exactly one for nonconstant input.
    pub fn derivative(&self) -> ZPoly {
        if self.coeffs.len() <= 1 {
            return ZPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(p, a)| a.scale(&rat_int(p as i64)))
            .collect();
        ZPoly::from_coeffs(coeffs)
    }

    /// p(z + c): same degree, exact binomial expansion via Horner.
    pub fn shift(&self, c: &Rational) -> ZPoly {
        let z_plus_c = ZPoly::from_coeffs(vec![SPoly::constant(c.clone()), SPoly::one()]);
        let mut acc = ZPoly::zero();
        for a in self.coeffs.iter().rev() {
            acc = &(&acc * &z_plus_c) + &ZPoly::constant(a.clone());
        }
        acc
    }

    /// Substitute a numeric value for s in every coefficient.
    pub fn eval_s(&self, s: &Rational) -> ZPoly {
        ZPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|a| SPoly::constant(a.eval(s)))
                .collect(),
        )
    }

    /// Substitute s -> s + c in every coefficient.
    pub fn subst_s_shift(&self, c: &Rational) -> ZPoly {
        ZPoly::from_coeffs(self.coeffs.iter().map(|a| a.compose_shift(c)).collect())
    }
}

impl Add for &ZPoly {
    type Output = ZPoly;

    fn add(self, rhs: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|p| &self.coeff(p) + &rhs.coeff(p)).collect();
        ZPoly::from_coeffs(coeffs)
    }
}

impl Sub for &ZPoly {
    type Output = ZPoly;

    fn sub(self, rhs: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|p| &self.coeff(p) - &rhs.coeff(p)).collect();
        ZPoly::from_coeffs(coeffs)
    }
}

impl Mul for &ZPoly {
    type Output = ZPoly;

    fn mul(self, rhs: &ZPoly) -> ZPoly {
        if self.is_zero() || rhs.is_zero() {
            return ZPoly::zero();
        }
        let mut coeffs = vec![SPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        ZPoly::from_coeffs(coeffs)
    }
}

impl Neg for &ZPoly {
    type Output = ZPoly;

    fn neg(self) -> ZPoly {
        ZPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for ZPoly {
    type Output = ZPoly;
    fn add(self, rhs: ZPoly) -> ZPoly {
        &self + &rhs
    }
}

impl Sub for ZPoly {
    type Output = ZPoly;
    fn sub(self, rhs: ZPoly) -> ZPoly {
        &self - &rhs
    }
}

impl Mul for ZPoly {
    type Output = ZPoly;
    fn mul(self, rhs: ZPoly) -> ZPoly {
        &self * &rhs
    }
}

impl Neg for ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn h2() -> ZPoly {
        // 4z^2 - 2
        ZPoly::from_coeffs(vec![
            SPoly::constant(rat_int(-2)),
            SPoly::zero(),
            SPoly::constant(rat_int(4)),
        ])
    }

    #[test]
    fn derivative_examples() {
        assert!(ZPoly::one().derivative().is_zero());
        // d/dz (4z^2 - 2) = 8z
        assert_eq!(
            h2().derivative(),
            ZPoly::from_coeffs(vec![SPoly::zero(), SPoly::constant(rat_int(8))])
        );
        // d/dz (2z + 2s) = 2  (the alpha = +1 first deformed polynomial)
        let m1 = ZPoly::from_coeffs(vec![
            SPoly::var().scale(&rat_int(2)),
            SPoly::constant(rat_int(2)),
        ]);
        assert_eq!(m1.derivative(), ZPoly::constant_rat(rat_int(2)));
        // degree drops by exactly one
        assert_eq!(m1.derivative().degree(), m1.degree() - 1);
    }

    #[test]
    fn shift_examples() {
        // z shifted by -1/2 -> z - 1/2
        let shifted = ZPoly::var().shift(&rat(-1, 2));
        assert_eq!(
            shifted,
            ZPoly::from_coeffs(vec![SPoly::constant(rat(-1, 2)), SPoly::one()])
        );
        // (4z^2 - 2)(z - 1/2) -> 4z^2 - 4z - 1
        assert_eq!(
            h2().shift(&rat(-1, 2)),
            ZPoly::from_coeffs(vec![
                SPoly::constant(rat_int(-1)),
                SPoly::constant(rat_int(-4)),
                SPoly::constant(rat_int(4)),
            ])
        );
        // constants are shift-invariant
        assert_eq!(ZPoly::one().shift(&rat(7, 3)), ZPoly::one());
        // degree preserved
        assert_eq!(h2().shift(&rat(5, 2)).degree(), h2().degree());
    }

    #[test]
    fn eval_s_substitutes() {
        // (s^2 + 1) z at s = 3 -> 10 z
        let p = ZPoly::from_coeffs(vec![
            SPoly::zero(),
            SPoly::from_coeffs(vec![rat_int(1), rat_int(0), rat_int(1)]),
        ]);
        assert_eq!(
            p.eval_s(&rat_int(3)),
            ZPoly::from_coeffs(vec![SPoly::zero(), SPoly::constant(rat_int(10))])
        );
        assert!(p.eval_s(&rat_int(3)).is_numeric());
        assert!(!p.is_numeric());
    }
}
