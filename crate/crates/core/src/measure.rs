//! The signed charge density, exact Gaussian-moment integration, the
//! pairing table of the deformed family, and moment decompositions.
//!
//! The density at level s and sign alpha is
//!
//!   D_s(z) = ((-alpha)^s / sqrt(pi)) e^{-z^2} H_s(z - alpha/2),
//!
//! represented here by its polynomial part (-alpha)^s H_s(z - alpha/2);
//! the factor e^{-z^2}/sqrt(pi) is implicit by convention. The density is
//! not positive (it is a charge density with total charge 1), so the
//! pairing it induces is an indefinite bilinear form.
//!
//! All integrals reduce to Gaussian moments of the normalized weight:
//! the odd moments vanish and <z^{2k}> = (2k-1)!!/2^k. That moment rule
//! is the integration oracle; the level-raising recursion for the pairing
//! is implemented independently and must agree with it everywhere.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{double_factorial_odd, rat, rat_int, Alpha, Rational, SPoly, ZPoly};
use crate::deform::{hermite, m_poly_symbolic};

/// Polynomial part of the charge density: (-alpha)^s H_s(z - alpha/2).
/// Degree s in z, always numeric (free of the symbol s).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeasureRep {
    pub s: u32,
    pub alpha: Alpha,
    pub poly: ZPoly,
}

/// Build the charge density at level s.
pub fn measure_poly(s: u32, alpha: Alpha) -> MeasureRep {
    let shift = -alpha.rational() * rat(1, 2);
    let sign = Alpha::Minus.pow(s as u64) * alpha.pow(s as u64); // (-alpha)^s
    let poly = hermite(s as usize).shift(&shift).scale(&sign);
    MeasureRep { s, alpha, poly }
}

/// Exact value of the integral of p q e^{-z^2}/sqrt(pi) over the line,
/// via the moment rule <z^{2k}> = (2k-1)!!/2^k, <z^{2k+1}> = 0. The
/// coefficients may involve s, so the result lives in Q[s].
pub fn gaussian_inner(p: &ZPoly, q: &ZPoly) -> SPoly {
    let prod = p * q;
    let mut acc = SPoly::zero();
    for (power, coeff) in prod.coeffs().iter().enumerate() {
        if power % 2 != 0 || coeff.is_zero() {
            continue;
        }
        let k = (power / 2) as u64;
        let moment = Rational::new(
            double_factorial_odd(k),
            rat_int(2).pow(k as i32).to_integer(),
        );
        acc = &acc + &coeff.scale(&moment);
    }
    acc
}

/// Total charge of the density: integrates to exactly 1 for every level
/// and sign.
pub fn total_charge(s: u32, alpha: Alpha) -> Rational {
    gaussian_inner(&measure_poly(s, alpha).poly, &ZPoly::one())
        .as_constant()
        .expect("numeric integrand yields a constant")
}

/// Pairing of the deformed polynomials against the charge density,
/// evaluated by direct Gaussian integration:
///
///   I_{nm}^s = integral of M_n M_m D_s dz.
///
/// Symmetric in (n, m). This is the oracle every other route is checked
/// against.
pub fn inner_direct(n: usize, m: usize, s: u32, alpha: Alpha) -> Rational {
    let sv = rat_int(s as i64);
    let m_n = m_poly_symbolic(n, alpha).eval_s(&sv);
    let m_m = m_poly_symbolic(m, alpha).eval_s(&sv);
    let product = &m_n * &m_m;
    gaussian_inner(&product, &measure_poly(s, alpha).poly)
        .as_constant()
        .expect("numeric integrand yields a constant")
}

/// The same pairing computed without integration, by iterating the
/// level-raising rule from the diagonal base table I^0_{nm} = 2^n n! d_{nm}:
///
///   I^{p+1}_{ab} = I^p_{ab}
///                  - sum_{k=1}^{a} sum_{l=1}^{b} c(a,k) c(b,l) I^p_{a-k, b-l}
///
/// with c(a, k) = (2 alpha)^k a!/(a-k)!. The rule is what survives of the
/// expansion of level s+1 polynomials in level-s ones after the boundary
/// sums cancel; its contract is exact agreement with [`inner_direct`]
/// for all inputs.
pub fn inner_recursive(n: usize, m: usize, s: u32, alpha: Alpha) -> Rational {
    let table = inner_recursive_table(n.max(m), s, alpha);
    table[n][m].clone()
}

/// The whole level-s table computed by the level-raising rule; cheaper
/// than per-entry calls when a grid of values is needed.
pub fn inner_recursive_table(n_max: usize, s: u32, alpha: Alpha) -> Vec<Vec<Rational>> {
    let size = n_max + 1;
    let coeff = |a: usize, k: usize| -> Rational {
        alpha.two_alpha_pow(k as u64)
            * Rational::new(
                crate::algebra::factorial(a as u64),
                crate::algebra::factorial((a - k) as u64),
            )
    };
    let mut table: Vec<Vec<Rational>> = (0..size)
        .map(|a| {
            (0..size)
                .map(|b| {
                    if a == b {
                        Rational::from(crate::algebra::factorial(a as u64))
                            * rat_int(2).pow(a as i32)
                    } else {
                        rat_int(0)
                    }
                })
                .collect()
        })
        .collect();
    for _ in 0..s {
        let mut next = vec![vec![rat_int(0); size]; size];
        for a in 0..size {
            for b in 0..size {
                let mut value = table[a][b].clone();
                for k in 1..=a {
                    let ca = coeff(a, k);
                    for l in 1..=b {
                        value -= &ca * &coeff(b, l) * &table[a - k][b - l];
                    }
                }
                next[a][b] = value;
            }
        }
        table = next;
    }
    table
}

/// Integral of a single deformed polynomial against the density; equals
/// 1 at n = 0 and 0 for every n >= 1.
pub fn partial_orthogonality(n: usize, s: u32, alpha: Alpha) -> Rational {
    let m_n = m_poly_symbolic(n, alpha).eval_s(&rat_int(s as i64));
    gaussian_inner(&m_n, &measure_poly(s, alpha).poly)
        .as_constant()
        .expect("numeric integrand yields a constant")
}

/// Symmetric table of pairings I^s_{nm} for 0 <= n, m <= n_max.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerTable {
    pub s: u32,
    pub alpha: Alpha,
    pub entries: Vec<Vec<Rational>>,
}

/// Fill the full pairing table by direct integration, computing each
/// family member once.
pub fn inner_table(n_max: usize, s: u32, alpha: Alpha) -> InnerTable {
    let sv = rat_int(s as i64);
    let family: Vec<ZPoly> = (0..=n_max)
        .map(|n| m_poly_symbolic(n, alpha).eval_s(&sv))
        .collect();
    let weight = measure_poly(s, alpha).poly;
    let mut entries = vec![vec![rat_int(0); n_max + 1]; n_max + 1];
    for n in 0..=n_max {
        for m in 0..=n {
            let value = gaussian_inner(&(&family[n] * &family[m]), &weight)
                .as_constant()
                .expect("numeric integrand yields a constant");
            entries[n][m] = value.clone();
            entries[m][n] = value;
        }
    }
    InnerTable { s, alpha, entries }
}

/// Coefficients of the decomposition z^n D_s = sum_p d_p D_p.
///
/// Only levels within n of s can appear, and negative levels never
/// receive mass: the factor chain s(s-1)... kills them before the index
/// would go below zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompCoeffs {
    pub n: usize,
    pub s: u32,
    pub alpha: Alpha,
    pub coeffs: BTreeMap<u32, Rational>,
}

impl DecompCoeffs {
    /// Sum of all coefficients; equals the n-th moment of the density
    /// because each component integrates to 1.
    pub fn total(&self) -> Rational {
        self.coeffs.values().fold(rat_int(0), |acc, c| acc + c)
    }
}

/// Decompose z^n D_s by iterating the one-step rule
///
///   z D_p = -p alpha D_{p-1} + (alpha/2) D_p - (alpha/2) D_{p+1}
///
/// n times starting from the identity decomposition of D_s. Zero
/// coefficients are dropped, so the key set is exactly the support.
pub fn moment_decompose(n: usize, s: u32, alpha: Alpha) -> DecompCoeffs {
    let a = alpha.rational();
    let half_a = &a * rat(1, 2);
    let mut cur: BTreeMap<u32, Rational> = BTreeMap::from([(s, rat_int(1))]);
    for _ in 0..n {
        let mut next: BTreeMap<u32, Rational> = BTreeMap::new();
        for (&p, c) in &cur {
            if p > 0 {
                let down = -&a * rat_int(p as i64) * c;
                *next.entry(p - 1).or_insert_with(|| rat_int(0)) += down;
            }
            *next.entry(p).or_insert_with(|| rat_int(0)) += &half_a * c;
            *next.entry(p + 1).or_insert_with(|| rat_int(0)) -= &half_a * c;
        }
        next.retain(|_, c| !c.is_zero());
        cur = next;
    }
    DecompCoeffs {
        n,
        s,
        alpha,
        coeffs: cur,
    }
}
