//! Gram data over the deformed family, the orthogonal family C, the
//! undeformed pre-image family W, and the commuting-square verifier.
//!
//! C_n is the unique combination M_n + w_1 M_{n-1} + ... + w_{n-1} M_1
//! orthogonal to M_1 .. M_{n-1} under the charge density. Because the
//! density is indefinite, existence can genuinely fail: whenever the
//! Gram determinant of M_1 .. M_{n-1} vanishes the family is undefined
//! at that point, and that is a first-class error rather than a panic.
//! The level s is numeric throughout this module: the coefficients are
//! ratios of determinants, so keeping s an integer keeps everything in Q.

use num_traits::Zero;

use crate::algebra::{det_fraction_free, rat_int, Alpha, Rational, SPoly, ZPoly};
use crate::deform::{exp_deform, hermite, m_poly_symbolic};
use crate::error::Error;
use crate::measure::{gaussian_inner, inner_table, measure_poly};

/// Pairing matrix of M_1 .. M_N with its leading principal determinants
/// and the diagonal charges of the orthogonal family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramData {
    pub s: u32,
    pub alpha: Alpha,
    pub n_max: usize,
    /// gram[i][j] = pairing of M_{i+1} with M_{j+1}; symmetric.
    pub gram: Vec<Vec<Rational>>,
    /// dets[k] is the k x k leading determinant; dets[0] = 1 by the
    /// empty-product convention.
    pub dets: Vec<Rational>,
    /// norms[k] = pairing of C_k with itself, for k = 0..=n_max; None at
    /// indices where a vanishing determinant blocks the construction.
    pub norms: Vec<Option<Rational>>,
}

/// Combination coefficients of the orthogonal family, normalized so the
/// coefficient of the top index is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WCoeffs {
    pub n: usize,
    /// w[i] multiplies index n - i; w[0] == 1 always.
    pub w: Vec<Rational>,
}

/// Build the Gram data for indices 1..=n_max at numeric level s.
pub fn gram_matrix(n_max: usize, s: u32, alpha: Alpha) -> GramData {
    let table = inner_table(n_max, s, alpha);
    let gram: Vec<Vec<Rational>> = (1..=n_max)
        .map(|i| (1..=n_max).map(|j| table.entries[i][j].clone()).collect())
        .collect();
    let dets: Vec<Rational> = (0..=n_max)
        .map(|k| {
            let sub: Vec<Vec<SPoly>> = (0..k)
                .map(|i| {
                    (0..k)
                        .map(|j| SPoly::constant(gram[i][j].clone()))
                        .collect()
                })
                .collect();
            det_fraction_free(&sub)
                .expect("leading principal minors are square")
                .as_constant()
                .expect("numeric entries give a numeric determinant")
        })
        .collect();

    let weight = measure_poly(s, alpha).poly;
    let norms = (0..=n_max)
        .map(|n| {
            c_poly_from_gram(&gram, n, s, alpha).ok().map(|c| {
                gaussian_inner(&(&c * &c), &weight)
                    .as_constant()
                    .expect("numeric integrand yields a constant")
            })
        })
        .collect();

    GramData {
        s,
        alpha,
        n_max,
        gram,
        dets,
        norms,
    }
}

/// Exact Gaussian elimination with partial (first-nonzero) pivoting.
/// None when the matrix is singular.
#[allow(clippy::needless_range_loop)] // row pairs of one matrix; indices stay clearest
fn solve_exact(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = a.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &a[col][col];
            for c in col..n {
                let v = &a[r][c] - &(&factor * &a[col][c]);
                a[r][c] = v;
            }
            let v = &b[r] - &(&factor * &b[col]);
            b[r] = v;
        }
    }
    let mut x = vec![rat_int(0); n];
    for row in (0..n).rev() {
        let mut acc = b[row].clone();
        for c in row + 1..n {
            acc -= &a[row][c] * &x[c];
        }
        x[row] = acc / &a[row][row];
    }
    Some(x)
}

fn c_coeffs_from_gram(
    gram: &[Vec<Rational>],
    n: usize,
    s: u32,
    alpha: Alpha,
) -> Result<WCoeffs, Error> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "combination coefficients start at n = 1".into(),
        ));
    }
    if gram.len() < n {
        return Err(Error::InvalidArgument(format!(
            "Gram data covers indices up to {}, need {n}",
            gram.len()
        )));
    }
    if n == 1 {
        return Ok(WCoeffs {
            n,
            w: vec![rat_int(1)],
        });
    }
    // Unknowns w_1 .. w_{n-1}; equation j (1-based): the combination is
    // orthogonal to M_j, i.e. sum_i w_i <M_{n-i}, M_j> = -<M_n, M_j>.
    let a: Vec<Vec<Rational>> = (1..n)
        .map(|j| (1..n).map(|i| gram[n - i - 1][j - 1].clone()).collect())
        .collect();
    let b: Vec<Rational> = (1..n).map(|j| -&gram[n - 1][j - 1]).collect();
    let tail = solve_exact(a, b).ok_or(Error::SingularGram {
        n,
        s,
        alpha: alpha.sign() as i8,
    })?;
    let mut w = vec![rat_int(1)];
    w.extend(tail);
    Ok(WCoeffs { n, w })
}

fn c_poly_from_gram(
    gram: &[Vec<Rational>],
    n: usize,
    s: u32,
    alpha: Alpha,
) -> Result<ZPoly, Error> {
    if n == 0 {
        return Ok(ZPoly::one());
    }
    let coeffs = c_coeffs_from_gram(gram, n, s, alpha)?;
    let sv = rat_int(s as i64);
    let mut acc = ZPoly::zero();
    for (i, wi) in coeffs.w.iter().enumerate() {
        let m = m_poly_symbolic(n - i, alpha).eval_s(&sv);
        acc = &acc + &m.scale(wi);
    }
    Ok(acc)
}

/// Combination coefficients of C_n: the unique w with w_0 = 1 making
/// sum_i w_i M_{n-i} orthogonal to M_1 .. M_{n-1}. Computed by exact
/// linear solve on the Gram matrix; the determinant-ratio form is kept
/// as a cross-check in the test suites.
pub fn c_coeffs(n: usize, s: u32, alpha: Alpha) -> Result<WCoeffs, Error> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "combination coefficients start at n = 1".into(),
        ));
    }
    let data = gram_only(n, s, alpha);
    c_coeffs_from_gram(&data, n, s, alpha)
}

/// Gram matrix entries alone (no determinants or norms), enough for the
/// coefficient solve.
fn gram_only(n_max: usize, s: u32, alpha: Alpha) -> Vec<Vec<Rational>> {
    let table = inner_table(n_max, s, alpha);
    (1..=n_max)
        .map(|i| (1..=n_max).map(|j| table.entries[i][j].clone()).collect())
        .collect()
}

/// The orthogonal polynomial C_n at numeric level s: C_0 = 1, otherwise
/// the coefficient combination of M_n .. M_1. Degree n, leading
/// coefficient 2^n.
pub fn c_poly(n: usize, s: u32, alpha: Alpha) -> Result<ZPoly, Error> {
    if n == 0 {
        return Ok(ZPoly::one());
    }
    let gram = gram_only(n, s, alpha);
    c_poly_from_gram(&gram, n, s, alpha)
}

/// The pre-image family: the same combination coefficients applied to
/// Hermite polynomials. The forward deformation map carries W_n to C_n.
pub fn w_poly(n: usize, s: u32, alpha: Alpha) -> Result<ZPoly, Error> {
    if n == 0 {
        return Ok(ZPoly::one());
    }
    let coeffs = c_coeffs(n, s, alpha)?;
    let mut acc = ZPoly::zero();
    for (i, wi) in coeffs.w.iter().enumerate() {
        acc = &acc + &hermite(n - i).scale(wi);
    }
    Ok(acc)
}

/// First coefficient where two polynomials differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub z_power: usize,
    pub expected: SPoly,
    pub got: SPoly,
}

/// Outcome of checking one edge of the commuting square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCheck {
    pub edge: &'static str,
    pub pass: bool,
    pub first_mismatch: Option<Mismatch>,
}

/// Per-point report for the square of maps between the four families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareReport {
    pub n: usize,
    pub s: u32,
    pub alpha: Alpha,
    pub edges: Vec<EdgeCheck>,
}

impl SquareReport {
    pub fn all_pass(&self) -> bool {
        self.edges.iter().all(|e| e.pass)
    }
}

fn check_edge(edge: &'static str, expected: &ZPoly, got: &ZPoly) -> EdgeCheck {
    if expected == got {
        return EdgeCheck {
            edge,
            pass: true,
            first_mismatch: None,
        };
    }
    let top = expected.coeffs().len().max(got.coeffs().len());
    let first_mismatch = (0..top)
        .find(|&p| expected.coeff(p) != got.coeff(p))
        .map(|p| Mismatch {
            z_power: p,
            expected: expected.coeff(p),
            got: got.coeff(p),
        });
    EdgeCheck {
        edge,
        pass: false,
        first_mismatch,
    }
}

/// Check all four edges of the square plus its diagonal, exactly:
///
///   H -> M   forward deformation of the Hermite polynomial,
///   M -> C   the coefficient combination of the deformed family,
///   w -> W   the same coefficients applied to Hermite polynomials,
///   M -> H   inverse deformation recovers the Hermite polynomial,
///   W -> C   forward deformation of W lands on C.
pub fn verify_square(n: usize, s: u32, alpha: Alpha) -> Result<SquareReport, Error> {
    let sv = rat_int(s as i64);
    let level = SPoly::constant(sv.clone());
    let h_n = hermite(n);
    let m_n = m_poly_symbolic(n, alpha).eval_s(&sv);
    let c_n = c_poly(n, s, alpha)?;
    let w_n = w_poly(n, s, alpha)?;
    let w = if n == 0 {
        Vec::new()
    } else {
        c_coeffs(n, s, alpha)?.w
    };

    let assemble = |base: &dyn Fn(usize) -> ZPoly| -> ZPoly {
        if n == 0 {
            return ZPoly::one();
        }
        let mut acc = ZPoly::zero();
        for (i, wi) in w.iter().enumerate() {
            acc = &acc + &base(n - i).scale(wi);
        }
        acc
    };

    let m_at = |k: usize| m_poly_symbolic(k, alpha).eval_s(&sv);
    let edges = vec![
        check_edge("H→M", &m_n, &exp_deform(&h_n, &level, alpha)),
        check_edge("M→C", &c_n, &assemble(&m_at)),
        check_edge("w→W", &w_n, &assemble(&|k| hermite(k))),
        check_edge("M→H", &h_n, &exp_deform(&m_n, &(-&level), alpha)),
        check_edge("W→C", &c_n, &exp_deform(&w_n, &level, alpha)),
    ];
    Ok(SquareReport { n, s, alpha, edges })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn gram_examples() {
        let g = gram_matrix(2, 0, Alpha::Plus);
        assert_eq!(g.gram[0][0], rat_int(2));
        assert_eq!(g.gram[1][1], rat_int(8));
        assert_eq!(g.gram[0][1], rat_int(0));
        assert_eq!(g.dets, vec![rat_int(1), rat_int(2), rat_int(16)]);

        let g1 = gram_matrix(2, 1, Alpha::Plus);
        assert_eq!(
            g1.gram,
            vec![
                vec![rat_int(-2), rat_int(-16)],
                vec![rat_int(-16), rat_int(-88)],
            ]
        );
        assert_eq!(g1.dets[2], rat_int(-80));
        assert_eq!(g1.dets[1], rat_int(-2));
        // norms recorded and nonzero here
        for n in 0..=2 {
            assert!(g1.norms[n].as_ref().is_some_and(|v| !v.is_zero()));
        }

        // single entry
        let g_one = gram_matrix(1, 0, Alpha::Minus);
        assert_eq!(g_one.dets, vec![rat_int(1), rat_int(2)]);
    }

    #[test]
    fn singular_gram_is_a_named_recoverable_error() {
        // no grid point up to n = 6, s = 6 actually degenerates, so the
        // error path is exercised with a synthetic rank-one Gram
        let gram = vec![
            vec![rat_int(1), rat_int(2), rat_int(3)],
            vec![rat_int(2), rat_int(4), rat_int(6)],
            vec![rat_int(3), rat_int(6), rat_int(9)],
        ];
        let err = c_coeffs_from_gram(&gram, 3, 5, Alpha::Minus).unwrap_err();
        assert_eq!(
            err,
            Error::SingularGram {
                n: 3,
                s: 5,
                alpha: -1
            }
        );

        let zero_gram = vec![vec![rat_int(0); 2]; 2];
        assert!(matches!(
            c_coeffs_from_gram(&zero_gram, 2, 0, Alpha::Plus),
            Err(Error::SingularGram { n: 2, .. })
        ));

        // too little Gram data is an argument error, not singularity
        assert!(matches!(
            c_coeffs_from_gram(&zero_gram, 4, 0, Alpha::Plus),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn coefficients_examples() {
        // n = 1 has no conditions
        assert_eq!(c_coeffs(1, 3, Alpha::Minus).unwrap().w, vec![rat_int(1)]);
        // diagonal Gram at s = 0 gives the identity combination
        assert_eq!(
            c_coeffs(2, 0, Alpha::Plus).unwrap().w,
            vec![rat_int(1), rat_int(0)]
        );
        for alpha in Alpha::BOTH {
            assert_eq!(
                c_coeffs(2, 1, alpha).unwrap().w,
                vec![rat_int(1), rat_int(-8 * alpha.sign())]
            );
        }
        assert!(matches!(
            c_coeffs(0, 1, Alpha::Plus),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn c_poly_examples() {
        assert_eq!(c_poly(0, 4, Alpha::Minus).unwrap(), ZPoly::one());
        // s = 0 degenerates to the Hermite polynomial
        assert_eq!(c_poly(2, 0, Alpha::Plus).unwrap(), hermite(2));
        // 4z^2 - 8 alpha z - 10
        for alpha in Alpha::BOTH {
            assert_eq!(
                c_poly(2, 1, alpha).unwrap(),
                ZPoly::from_coeffs(vec![
                    SPoly::constant(rat_int(-10)),
                    SPoly::constant(rat_int(-8 * alpha.sign())),
                    SPoly::constant(rat_int(4)),
                ])
            );
        }
    }

    #[test]
    fn w_poly_examples() {
        assert_eq!(w_poly(0, 2, Alpha::Plus).unwrap(), ZPoly::one());
        assert_eq!(w_poly(2, 0, Alpha::Plus).unwrap(), hermite(2));
        // H_2 - 8 alpha H_1 = 4z^2 - 16 alpha z - 2
        for alpha in Alpha::BOTH {
            assert_eq!(
                w_poly(2, 1, alpha).unwrap(),
                ZPoly::from_coeffs(vec![
                    SPoly::constant(rat_int(-2)),
                    SPoly::constant(rat_int(-16 * alpha.sign())),
                    SPoly::constant(rat_int(4)),
                ])
            );
        }
    }

    #[test]
    fn orthogonality_and_inherited_integral() {
        let weight = measure_poly(2, Alpha::Minus).poly;
        let cs: Vec<ZPoly> = (0..=4)
            .map(|n| c_poly(n, 2, Alpha::Minus).unwrap())
            .collect();
        for n in 0..=4usize {
            for m in 0..n {
                assert!(
                    gaussian_inner(&(&cs[n] * &cs[m]), &weight).is_zero(),
                    "n={n} m={m}"
                );
            }
            if n >= 1 {
                // orthogonality to the constant comes for free
                assert!(gaussian_inner(&cs[n], &weight).is_zero());
            }
        }
    }

    #[test]
    fn determinant_ratio_matches_solve() {
        // Cramer form: w_i = -det(B with column i replaced) / det(B),
        // where B has columns <M_{n-i}, M_j> in descending first index.
        for alpha in Alpha::BOTH {
            for s in 0..=3u32 {
                for n in 2..=4usize {
                    let gram = gram_only(n, s, alpha);
                    let b_mat: Vec<Vec<SPoly>> = (1..n)
                        .map(|j| {
                            (1..n)
                                .map(|i| SPoly::constant(gram[n - i - 1][j - 1].clone()))
                                .collect()
                        })
                        .collect();
                    let den = det_fraction_free(&b_mat).unwrap().as_constant().unwrap();
                    assert!(!den.is_zero());
                    let solved = c_coeffs(n, s, alpha).unwrap().w;
                    for i in 1..n {
                        let mut replaced = b_mat.clone();
                        for j in 1..n {
                            replaced[j - 1][i - 1] = SPoly::constant(gram[n - 1][j - 1].clone());
                        }
                        let num = det_fraction_free(&replaced).unwrap().as_constant().unwrap();
                        assert_eq!(solved[i], -num / &den, "n={n} s={s} i={i}");
                    }
                }
            }
        }
    }

    #[test]
    fn square_reports() {
        for alpha in Alpha::BOTH {
            let r = verify_square(2, 1, alpha).unwrap();
            assert!(r.all_pass());
            assert_eq!(r.edges.len(), 5);
        }
        let r0 = verify_square(0, 3, Alpha::Minus).unwrap();
        assert!(r0.all_pass());
        let r4 = verify_square(4, 2, Alpha::Minus).unwrap();
        assert!(r4.all_pass());
    }

    #[test]
    fn mismatch_reporting_names_the_first_difference() {
        let a = ZPoly::from_coeffs(vec![SPoly::constant(rat(1, 2)), SPoly::one()]);
        let b = ZPoly::from_coeffs(vec![
            SPoly::constant(rat(1, 2)),
            SPoly::constant(rat_int(3)),
        ]);
        let check = check_edge("H→M", &a, &b);
        assert!(!check.pass);
        let mm = check.first_mismatch.unwrap();
        assert_eq!(mm.z_power, 1);
        assert_eq!(mm.expected, SPoly::one());
        assert_eq!(mm.got, SPoly::constant(rat_int(3)));
    }

    #[test]
    fn leading_coefficient_is_two_to_the_n() {
        for alpha in Alpha::BOTH {
            for s in 0..=3u32 {
                for n in 0..=5usize {
                    let c = c_poly(n, s, alpha).unwrap();
                    assert_eq!(c.degree(), n as isize);
                    assert_eq!(c.leading_coeff(), SPoly::constant(rat_int(2).pow(n as i32)));
                }
            }
        }
    }
}
