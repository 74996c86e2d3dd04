//! Hermite polynomials, the exponential deformation map, and the deformed
//! family M with its recursions, zero values, and differential equation.
//!
//! The deformation map is exp(sigma * S) where S p = sum_{m>=1} alpha^m p^(m) / m
//! and p^(m) is the m-th z-derivative. On a polynomial of degree d the
//! operator S is nilpotent (S^{d+1} p = 0), so the exponential series is a
//! finite sum and everything stays exact; no truncation tolerance exists.
//!
//! The M family is computed by four independent routes which must agree
//! coefficient-for-coefficient:
//!   * the operator map applied to the Hermite polynomial,
//!   * the explicit expansion in rising factorials of s ([`m_poly`]),
//!   * extraction from the generating function exp(-t^2 + 2tz)/(1 - 2 alpha t)^s,
//!   * reassembly from the closed-form values at z = 0.

use crate::algebra::{binomial, factorial, rat, rat_int, Alpha, Rational, SPoly, ZPoly};
use crate::error::Error;

/// Whether the deformation level s is kept symbolic (an element of Q[s])
/// or substituted with a concrete nonnegative integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SMode {
    Symbolic,
    Numeric(u32),
}

impl SMode {
    /// The level as an element of Q[s]: the variable itself, or a constant.
    pub fn as_spoly(self) -> SPoly {
        match self {
            SMode::Symbolic => SPoly::var(),
            SMode::Numeric(v) => SPoly::constant(rat_int(v as i64)),
        }
    }
}

/// Index, sign, and level selecting one member of the deformed family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeformParams {
    pub n: usize,
    pub alpha: Alpha,
    pub s_mode: SMode,
}

impl DeformParams {
    pub fn symbolic(n: usize, alpha: Alpha) -> Self {
        DeformParams {
            n,
            alpha,
            s_mode: SMode::Symbolic,
        }
    }

    pub fn numeric(n: usize, alpha: Alpha, s: u32) -> Self {
        DeformParams {
            n,
            alpha,
            s_mode: SMode::Numeric(s),
        }
    }
}

/// Physicists' Hermite polynomial: degree n, leading coefficient 2^n,
/// parity (-1)^n, built from H_{n+1} = 2z H_n - 2n H_{n-1}.
pub fn hermite(n: usize) -> ZPoly {
    let mut prev = ZPoly::one();
    if n == 0 {
        return prev;
    }
    let two_z = ZPoly::from_coeffs(vec![SPoly::zero(), SPoly::constant(rat_int(2))]);
    let mut cur = two_z.clone();
    for k in 1..n {
        let next = &(&two_z * &cur) - &prev.scale(&rat_int(2 * k as i64));
        prev = cur;
        cur = next;
    }
    cur
}

/// One application of S: sum over m >= 1 of alpha^m d^m/dz^m / m.
/// Finite because each derivative lowers the degree.
fn apply_sum_operator(p: &ZPoly, alpha: Alpha) -> ZPoly {
    let mut acc = ZPoly::zero();
    let mut dp = p.derivative();
    let mut m: u64 = 1;
    while !dp.is_zero() {
        let factor = alpha.pow(m) / rat_int(m as i64);
        acc = &acc + &dp.scale(&factor);
        dp = dp.derivative();
        m += 1;
    }
    acc
}

/// The exponential deformation map exp(sigma * S) applied to p, computed
/// by nilpotent truncation: with d = deg p, the result is
/// sum_{k=0}^{d} (sigma S)^k p / k!. Passing the level itself as sigma
/// gives the forward map; its negation gives the exact inverse.
pub fn exp_deform(p: &ZPoly, sigma: &SPoly, alpha: Alpha) -> ZPoly {
    let mut acc = p.clone();
    let mut term = p.clone();
    let degree = p.degree().max(0) as usize;
    for k in 1..=degree {
        term = apply_sum_operator(&term, alpha)
            .scale_s(sigma)
            .scale(&rat(1, k as i64));
        if term.is_zero() {
            break;
        }
        acc = &acc + &term;
    }
    acc
}

/// The deformed polynomial at level s via the rising-factorial expansion:
///
///   M_n = sum_{k=0}^{n} (2 alpha)^k s(s+1)...(s+k-1) C(n, k) H_{n-k}.
///
/// Degree n in z; the leading z-coefficient is 2^n and free of s. In
/// symbolic mode the coefficients are polynomials of degree <= n in s.
pub fn m_poly(params: &DeformParams) -> ZPoly {
    let symbolic = m_poly_symbolic(params.n, params.alpha);
    match params.s_mode {
        SMode::Symbolic => symbolic,
        SMode::Numeric(v) => symbolic.eval_s(&rat_int(v as i64)),
    }
}

/// Symbolic-s workhorse behind [`m_poly`].
pub fn m_poly_symbolic(n: usize, alpha: Alpha) -> ZPoly {
    let mut acc = ZPoly::zero();
    for k in 0..=n {
        let scalar = Rational::from(binomial(n as u64, k as u64)) * alpha.two_alpha_pow(k as u64);
        let term = hermite(n - k)
            .scale_s(&SPoly::rising_factorial(k))
            .scale(&scalar);
        acc = &acc + &term;
    }
    acc
}

/// The same polynomial extracted from the generating function
/// exp(-t^2 + 2tz) / (1 - 2 alpha t)^s: n! times the t^n coefficient of
/// the product of the exponential series and the binomial series
/// sum_k (2 alpha)^k (s)_k / k! t^k. Independent of [`m_poly`]'s route.
pub fn m_from_genfunc(params: &DeformParams) -> ZPoly {
    let n = params.n;
    let alpha = params.alpha;

    // exp(-t^2 + 2tz) truncated at t^n: exponentiate u = 2tz - t^2 term
    // by term; u^k only contributes from t^k on, so k <= n suffices.
    let mut exp_series: Vec<ZPoly> = vec![ZPoly::zero(); n + 1];
    exp_series[0] = ZPoly::one();
    // u itself as coefficients in t: u[1] = 2z, u[2] = -1
    let mut u_pow: Vec<ZPoly> = vec![ZPoly::one()];
    for k in 1..=n {
        // u_pow <- u_pow * u, truncated at t^n
        let mut next: Vec<ZPoly> = vec![ZPoly::zero(); (u_pow.len() + 2).min(n + 1)];
        for (j, c) in u_pow.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if j + 1 < next.len() {
                let two_z = ZPoly::from_coeffs(vec![SPoly::zero(), SPoly::constant(rat_int(2))]);
                next[j + 1] = &next[j + 1] + &(c * &two_z);
            }
            if j + 2 < next.len() {
                next[j + 2] = &next[j + 2] - c;
            }
        }
        u_pow = next;
        let inv_fact = Rational::new(1.into(), factorial(k as u64));
        for (j, c) in u_pow.iter().enumerate() {
            if !c.is_zero() {
                exp_series[j] = &exp_series[j] + &c.scale(&inv_fact);
            }
        }
    }

    // binomial series of (1 - 2 alpha t)^{-s}
    let s_factor = |k: usize| -> SPoly {
        let scalar = alpha.two_alpha_pow(k as u64) * Rational::new(1.into(), factorial(k as u64));
        SPoly::rising_factorial(k).scale(&scalar)
    };

    let mut coeff_tn = ZPoly::zero();
    for k in 0..=n {
        let e = &exp_series[n - k];
        if e.is_zero() {
            continue;
        }
        coeff_tn = &coeff_tn + &e.scale_s(&s_factor(k));
    }
    let result = coeff_tn.scale(&Rational::from(factorial(n as u64)));
    match params.s_mode {
        SMode::Symbolic => result,
        SMode::Numeric(v) => result.eval_s(&rat_int(v as i64)),
    }
}

/// Closed form for the value at z = 0:
///
///   M_n(0) = n! 2^n alpha^n sum_{k=0}^{floor(n/2)}
///            (-1)^k / (2^{2k} k! (n-2k)!) * (s)_{n-2k}
///
/// Always equals the constant z-coefficient of [`m_poly`].
pub fn m_at_zero(n: usize, alpha: Alpha) -> SPoly {
    let mut acc = SPoly::zero();
    for k in 0..=n / 2 {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let denom = rat_int(2).pow(2 * k as i32)
            * Rational::from(factorial(k as u64))
            * Rational::from(factorial((n - 2 * k) as u64));
        let scalar = rat_int(sign) / denom;
        acc = &acc + &SPoly::rising_factorial(n - 2 * k).scale(&scalar);
    }
    let front =
        Rational::from(factorial(n as u64)) * rat_int(2).pow(n as i32) * alpha.pow(n as u64);
    acc.scale(&front)
}

/// Reassemble the whole polynomial from zero values alone:
///
///   M_n = sum_{p=0}^{n} 2^p C(n, n-p) z^p M_{n-p}(0).
pub fn m_organized_by_zero_values(n: usize, alpha: Alpha) -> ZPoly {
    let coeffs = (0..=n)
        .map(|p| {
            let scalar =
                rat_int(2).pow(p as i32) * Rational::from(binomial(n as u64, (n - p) as u64));
            m_at_zero(n - p, alpha).scale(&scalar)
        })
        .collect();
    ZPoly::from_coeffs(coeffs)
}

fn check_family_list(n: usize, m_list: &[ZPoly]) -> Result<(), Error> {
    if m_list.len() != n + 1 {
        return Err(Error::LengthMismatch {
            expected: n + 1,
            got: m_list.len(),
        });
    }
    for (k, p) in m_list.iter().enumerate() {
        if p.degree() != k as isize {
            return Err(Error::InconsistentInput(format!(
                "entry {k} has z-degree {}, expected {k}",
                p.degree()
            )));
        }
    }
    Ok(())
}

/// Raise the level by one: given the family M^s_0 .. M^s_n, return
///
///   M^{s+1}_n = sum_{k=0}^{n} (2 alpha)^k n!/(n-k)! M^s_{n-k}.
///
/// Works for symbolic and numeric levels alike (the coefficients are free
/// of s). Fails when the list does not hold exactly the indices 0..=n.
pub fn m_next_in_s(n: usize, m_list: &[ZPoly], alpha: Alpha) -> Result<ZPoly, Error> {
    check_family_list(n, m_list)?;
    let mut acc = ZPoly::zero();
    for k in 0..=n {
        let scalar = alpha.two_alpha_pow(k as u64)
            * Rational::new(factorial(n as u64), factorial((n - k) as u64));
        acc = &acc + &m_list[n - k].scale(&scalar);
    }
    Ok(acc)
}

/// Raise the index by one at fixed level:
///
///   M_{n+1} = 2z M_n - 2n M_{n-1}
///             + s sum_{m=0}^{n} (2 alpha)^{m+1} n!/(n-m)! M_{n-m}.
///
/// `level` is the s in front of the sum: the symbolic variable or a
/// numeric constant, matching the level of the supplied family.
pub fn m_next_in_n(
    n: usize,
    m_list: &[ZPoly],
    level: &SPoly,
    alpha: Alpha,
) -> Result<ZPoly, Error> {
    check_family_list(n, m_list)?;
    let two_z = ZPoly::from_coeffs(vec![SPoly::zero(), SPoly::constant(rat_int(2))]);
    let mut acc = &two_z * &m_list[n];
    if n > 0 {
        acc = &acc - &m_list[n - 1].scale(&rat_int(2 * n as i64));
    }
    let mut tail = ZPoly::zero();
    for m in 0..=n {
        let scalar = alpha.two_alpha_pow(m as u64 + 1)
            * Rational::new(factorial(n as u64), factorial((n - m) as u64));
        tail = &tail + &m_list[n - m].scale(&scalar);
    }
    Ok(&acc + &tail.scale_s(level))
}

/// Residual of the inhomogeneous differential equation
///
///   (d^2/dz^2 - 2z d/dz + 2n) M_n
///     = 2s (2 alpha)^n sum_{p=0}^{n-1} n! / ((2 alpha)^p p!) M_p,
///
/// evaluated with symbolic s. The contract is that the return value is
/// identically zero; the operation returns whatever it computes so the
/// suites can assert that.
pub fn ode_residual(n: usize, alpha: Alpha) -> ZPoly {
    let m_n = m_poly_symbolic(n, alpha);
    let lhs = hermite_operator(&m_n, n);
    let mut rhs = ZPoly::zero();
    for p in 0..n {
        // (2 alpha)^n / (2 alpha)^p = (2 alpha)^{n-p} since alpha^2 = 1
        let scalar = alpha.two_alpha_pow((n - p) as u64)
            * Rational::new(factorial(n as u64), factorial(p as u64));
        rhs = &rhs + &m_poly_symbolic(p, alpha).scale(&scalar);
    }
    let rhs = rhs.scale_s(&SPoly::var()).scale(&rat_int(2));
    &lhs - &rhs
}

/// (d^2/dz^2 - 2z d/dz + 2n) p.
fn hermite_operator(p: &ZPoly, n: usize) -> ZPoly {
    let two_z = ZPoly::from_coeffs(vec![SPoly::zero(), SPoly::constant(rat_int(2))]);
    let d1 = p.derivative();
    let d2 = d1.derivative();
    &(&d2 - &(&two_z * &d1)) + &p.scale(&rat_int(2 * n as i64))
}

/// One entry of the triangular differential system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OdeEntry {
    /// Strictly above the diagonal.
    Zero,
    /// Diagonal entry D + 2j, where D = d^2/dz^2 - 2z d/dz.
    DiagShift(u32),
    /// Sub-diagonal multiplier, an element of Q[s].
    Coeff(SPoly),
}

/// The (n+1) x (n+1) lower-triangular system annihilating the vector
/// (M_0, ..., M_n): row j reads
///
///   (D + 2j) M_j - sum_{i<j} 2s (2 alpha)^{j-i} j!/i! M_i = 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OdeSystem {
    pub size: usize,
    pub alpha: Alpha,
    pub entries: Vec<Vec<OdeEntry>>,
}

/// Build the triangular system for indices 0..=n.
pub fn ode_system_matrix(n: usize, alpha: Alpha) -> OdeSystem {
    let size = n + 1;
    let entries = (0..size)
        .map(|j| {
            (0..size)
                .map(|i| {
                    if i == j {
                        OdeEntry::DiagShift(2 * j as u32)
                    } else if i < j {
                        let scalar = rat_int(-2)
                            * alpha.two_alpha_pow((j - i) as u64)
                            * Rational::new(factorial(j as u64), factorial(i as u64));
                        OdeEntry::Coeff(SPoly::var().scale(&scalar))
                    } else {
                        OdeEntry::Zero
                    }
                })
                .collect()
        })
        .collect();
    OdeSystem {
        size,
        alpha,
        entries,
    }
}

impl OdeSystem {
    /// Apply the system to a vector of polynomials, interpreting the
    /// diagonal as D + 2j with D = d^2/dz^2 - 2z d/dz. Returns the row
    /// residuals, all zero exactly when the vector solves the system.
    pub fn apply(&self, polys: &[ZPoly]) -> Result<Vec<ZPoly>, Error> {
        if polys.len() != self.size {
            return Err(Error::LengthMismatch {
                expected: self.size,
                got: polys.len(),
            });
        }
        let rows = self
            .entries
            .iter()
            .enumerate()
            .map(|(j, row)| {
                let mut acc = ZPoly::zero();
                for (i, entry) in row.iter().enumerate() {
                    match entry {
                        OdeEntry::Zero => {}
                        OdeEntry::DiagShift(shift) => {
                            debug_assert_eq!(u32::try_from(2 * j).ok(), Some(*shift));
                            acc = &acc + &hermite_operator(&polys[i], j);
                        }
                        OdeEntry::Coeff(c) => {
                            acc = &acc + &polys[i].scale_s(c);
                        }
                    }
                }
                acc
            })
            .collect();
        Ok(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize, alpha: Alpha) -> DeformParams {
        DeformParams::symbolic(n, alpha)
    }

    /// 2(z + alpha s)
    fn m1(alpha: Alpha) -> ZPoly {
        ZPoly::from_coeffs(vec![
            SPoly::var().scale(&(rat_int(2) * alpha.rational())),
            SPoly::constant(rat_int(2)),
        ])
    }

    #[test]
    fn hermite_first_values() {
        assert_eq!(hermite(0), ZPoly::one());
        assert_eq!(
            hermite(2),
            ZPoly::from_coeffs(vec![
                SPoly::constant(rat_int(-2)),
                SPoly::zero(),
                SPoly::constant(rat_int(4)),
            ])
        );
        // leading term of H_4 is 2^4 z^4; parity (-1)^n
        assert_eq!(hermite(4).leading_coeff(), SPoly::constant(rat_int(16)));
        assert!(hermite(4).coeff(1).is_zero());
        assert!(hermite(4).coeff(3).is_zero());
    }

    #[test]
    fn exp_deform_examples() {
        for alpha in Alpha::BOTH {
            // constants are fixed points
            assert_eq!(
                exp_deform(&ZPoly::one(), &SPoly::var(), alpha),
                ZPoly::one()
            );
            // first deformed polynomial
            assert_eq!(exp_deform(&hermite(1), &SPoly::var(), alpha), m1(alpha));
            // inverse direction recovers the Hermite polynomial
            let m2 = m_poly(&sym(2, alpha));
            assert_eq!(exp_deform(&m2, &(-&SPoly::var()), alpha), hermite(2));
        }
    }

    #[test]
    fn inverse_map_up_to_twelve() {
        for alpha in Alpha::BOTH {
            for n in 0..=12 {
                let back = exp_deform(&m_poly(&sym(n, alpha)), &(-&SPoly::var()), alpha);
                assert_eq!(back, hermite(n), "n={n}");
            }
        }
    }

    #[test]
    fn semigroup_at_numeric_levels() {
        for alpha in Alpha::BOTH {
            for n in 0..=8 {
                let h = hermite(n);
                for s1 in 0..=4i64 {
                    for s2 in 0..=4i64 {
                        let step = exp_deform(
                            &exp_deform(&h, &SPoly::constant(rat_int(s1)), alpha),
                            &SPoly::constant(rat_int(s2)),
                            alpha,
                        );
                        let joint = exp_deform(&h, &SPoly::constant(rat_int(s1 + s2)), alpha);
                        assert_eq!(step, joint, "n={n} s={s1}+{s2}");
                    }
                }
            }
        }
    }

    #[test]
    fn derivative_recursion_up_to_twelve() {
        for alpha in Alpha::BOTH {
            for n in 1..=12usize {
                assert_eq!(
                    m_poly(&sym(n, alpha)).derivative(),
                    m_poly(&sym(n - 1, alpha)).scale(&rat_int(2 * n as i64)),
                    "n={n}"
                );
            }
        }
    }

    #[test]
    fn level_zero_degenerates_to_hermite() {
        for alpha in Alpha::BOTH {
            for n in 0..=12 {
                assert_eq!(m_poly(&sym(n, alpha)).eval_s(&rat_int(0)), hermite(n));
            }
        }
    }

    #[test]
    fn m_poly_matches_explicit_low_orders() {
        for alpha in Alpha::BOTH {
            let a = alpha.rational();
            assert_eq!(m_poly(&sym(0, alpha)), ZPoly::one());
            assert_eq!(m_poly(&sym(1, alpha)), m1(alpha));
            // 4(z^2 + 2 alpha s z + s(s+1) - 1/2)
            let expected2 = ZPoly::from_coeffs(vec![
                &SPoly::rising_factorial(2).scale(&rat_int(4)) - &SPoly::constant(rat_int(2)),
                SPoly::var().scale(&(rat_int(8) * a.clone())),
                SPoly::constant(rat_int(4)),
            ]);
            assert_eq!(m_poly(&sym(2, alpha)), expected2);
        }
    }

    #[test]
    fn genfunc_route_agrees() {
        for alpha in Alpha::BOTH {
            assert_eq!(m_from_genfunc(&sym(0, alpha)), ZPoly::one());
            assert_eq!(m_from_genfunc(&sym(1, alpha)), m1(alpha));
            for n in 2..=8 {
                assert_eq!(
                    m_from_genfunc(&sym(n, alpha)),
                    m_poly(&sym(n, alpha)),
                    "n={n}"
                );
            }
        }
    }

    #[test]
    fn zero_value_closed_form() {
        for alpha in Alpha::BOTH {
            assert_eq!(m_at_zero(0, alpha), SPoly::one());
            assert_eq!(
                m_at_zero(1, alpha),
                SPoly::var().scale(&(rat_int(2) * alpha.rational()))
            );
            // 4s(s+1) - 2
            assert_eq!(
                m_at_zero(2, alpha),
                &SPoly::rising_factorial(2).scale(&rat_int(4)) - &SPoly::constant(rat_int(2))
            );
            for n in 0..=10 {
                assert_eq!(
                    m_at_zero(n, alpha),
                    m_poly(&sym(n, alpha)).coeff(0),
                    "n={n}"
                );
            }
        }
    }

    #[test]
    fn zero_value_organization_agrees() {
        for alpha in Alpha::BOTH {
            for n in 0..=10 {
                assert_eq!(
                    m_organized_by_zero_values(n, alpha),
                    m_poly(&sym(n, alpha)),
                    "n={n}"
                );
            }
        }
    }

    #[test]
    fn s_recursion_is_substitution() {
        for alpha in Alpha::BOTH {
            for n in 0..=6 {
                let list: Vec<ZPoly> = (0..=n).map(|k| m_poly(&sym(k, alpha))).collect();
                let next = m_next_in_s(n, &list, alpha).unwrap();
                assert_eq!(next, list[n].subst_s_shift(&rat_int(1)), "n={n}");
            }
        }
        // length mismatch is a named error
        let short = vec![ZPoly::one()];
        assert_eq!(
            m_next_in_s(1, &short, Alpha::Plus),
            Err(Error::LengthMismatch {
                expected: 2,
                got: 1
            })
        );
    }

    #[test]
    fn n_recursion_builds_the_next_index() {
        for alpha in Alpha::BOTH {
            for n in 0..=6 {
                let list: Vec<ZPoly> = (0..=n).map(|k| m_poly(&sym(k, alpha))).collect();
                let next = m_next_in_n(n, &list, &SPoly::var(), alpha).unwrap();
                assert_eq!(next, m_poly(&sym(n + 1, alpha)), "n={n}");
            }
        }
        // inconsistent entries are rejected
        let bad = vec![ZPoly::one(), ZPoly::one()];
        assert!(matches!(
            m_next_in_n(1, &bad, &SPoly::var(), Alpha::Plus),
            Err(Error::InconsistentInput(_))
        ));
    }

    #[test]
    fn ode_residual_vanishes() {
        for alpha in Alpha::BOTH {
            for n in 0..=6 {
                assert!(ode_residual(n, alpha).is_zero(), "n={n}");
            }
        }
    }

    #[test]
    fn ode_system_entries_and_application() {
        for alpha in Alpha::BOTH {
            let sys = ode_system_matrix(3, alpha);
            assert_eq!(sys.size, 4);
            // entry (1, 0): -2s(2 alpha) 1!/0! = -4 alpha s
            let expected = SPoly::var().scale(&(rat_int(-4) * alpha.rational()));
            assert_eq!(sys.entries[1][0], OdeEntry::Coeff(expected));
            // entry (3, 1): -2s(2 alpha)^2 3!/1! = -48 s
            let expected31 = SPoly::var().scale(&rat_int(-48));
            assert_eq!(sys.entries[3][1], OdeEntry::Coeff(expected31));
            let family: Vec<ZPoly> = (0..=3)
                .map(|k| m_poly(&DeformParams::symbolic(k, alpha)))
                .collect();
            let rows = sys.apply(&family).unwrap();
            assert!(rows.iter().all(ZPoly::is_zero));
        }
        // trivial 1x1 system: [D] . [1] = 0
        let sys0 = ode_system_matrix(0, Alpha::Plus);
        let rows = sys0.apply(&[ZPoly::one()]).unwrap();
        assert!(rows[0].is_zero());
    }

    #[test]
    fn numeric_mode_is_substitution() {
        for alpha in Alpha::BOTH {
            for s in 0..=3u32 {
                let sym_sub = m_poly(&sym(5, alpha)).eval_s(&rat_int(s as i64));
                assert_eq!(m_poly(&DeformParams::numeric(5, alpha, s)), sym_sub);
            }
        }
    }

    mod props {
        use super::*;
        use crate::algebra::rat;
        use proptest::prelude::*;

        fn small_rat() -> impl Strategy<Value = Rational> {
            ((-9i64..=9), (1i64..=9)).prop_map(|(n, d)| rat(n, d))
        }

        fn small_spoly() -> impl Strategy<Value = SPoly> {
            prop::collection::vec(small_rat(), 0..3).prop_map(SPoly::from_coeffs)
        }

        fn small_zpoly() -> impl Strategy<Value = ZPoly> {
            prop::collection::vec(small_spoly(), 0..5).prop_map(ZPoly::from_coeffs)
        }

        proptest! {
            #[test]
            fn shift_round_trips(p in small_zpoly(), c in small_rat()) {
                let back = p.shift(&c).shift(&(-&c));
                prop_assert_eq!(back, p);
            }

            #[test]
            fn derivative_is_linear(
                p in small_zpoly(),
                q in small_zpoly(),
                a in small_rat(),
                b in small_rat(),
            ) {
                let lhs = (&p.scale(&a) + &q.scale(&b)).derivative();
                let rhs = &p.derivative().scale(&a) + &q.derivative().scale(&b);
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn results_stay_canonical(p in small_zpoly(), q in small_zpoly()) {
                use crate::algebra::is_canonical;
                let r = &(&p * &q) + &p.derivative();
                for c in r.coeffs() {
                    for v in c.coeffs() {
                        prop_assert!(is_canonical(v));
                    }
                }
            }
        }
    }
}
