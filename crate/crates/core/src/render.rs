//! Text rendering of polynomials: plain (descending powers, `4z^2 - 2`)
//! and LaTeX (`4z^{2} - 2` with `\frac` for non-integer scalars).

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::algebra::{Rational, SPoly, ZPoly};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Style {
    Plain,
    Latex,
}

/// One additive term, sign split out so the joiner can emit " - ".
struct Term {
    negative: bool,
    body: String,
}

fn power(var: char, p: usize, style: Style) -> String {
    match (p, style) {
        (0, _) => String::new(),
        (1, _) => var.to_string(),
        (_, Style::Plain) => format!("{var}^{p}"),
        (_, Style::Latex) => format!("{var}^{{{p}}}"),
    }
}

fn magnitude(c: &Rational, style: Style) -> String {
    match style {
        Style::Plain => {
            if c.denom().is_one() {
                c.numer().to_string()
            } else {
                format!("{}/{}", c.numer(), c.denom())
            }
        }
        Style::Latex => {
            if c.denom().is_one() {
                c.numer().to_string()
            } else {
                format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
            }
        }
    }
}

/// Scalar times a (possibly empty) variable part.
fn monomial(c: &Rational, vars: &str, style: Style) -> Term {
    let negative = c.is_negative();
    let mag = c.abs();
    let body = if vars.is_empty() {
        magnitude(&mag, style)
    } else if mag.is_one() {
        vars.to_string()
    } else {
        let m = magnitude(&mag, style);
        // plain-text fractions get parentheses before a variable part
        if style == Style::Plain && !mag.denom().is_one() {
            format!("({m}){vars}")
        } else {
            format!("{m}{vars}")
        }
    };
    Term { negative, body }
}

fn join(terms: Vec<Term>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        if i == 0 {
            if t.negative {
                out.push('-');
            }
        } else {
            out.push_str(if t.negative { " - " } else { " + " });
        }
        out.push_str(&t.body);
    }
    out
}

fn spoly_terms(p: &SPoly, extra_vars: &str, style: Style) -> Vec<Term> {
    let mut terms = Vec::new();
    for k in (0..p.coeffs().len()).rev() {
        let c = &p.coeffs()[k];
        if c.is_zero() {
            continue;
        }
        let vars = format!("{}{extra_vars}", power('s', k, style));
        terms.push(monomial(c, &vars, style));
    }
    terms
}

fn render_spoly(p: &SPoly, style: Style) -> String {
    join(spoly_terms(p, "", style))
}

fn render_zpoly(p: &ZPoly, style: Style) -> String {
    let mut terms = Vec::new();
    for pw in (0..p.coeffs().len()).rev() {
        let c = &p.coeffs()[pw];
        if c.is_zero() {
            continue;
        }
        let zpart = power('z', pw, style);
        let nonzero = c.coeffs().iter().filter(|v| !v.is_zero()).count();
        if nonzero <= 1 {
            // single s-monomial coefficient merges into one term
            terms.extend(spoly_terms(c, &zpart, style));
        } else if pw == 0 {
            // multi-term constant coefficient splices into the sum
            terms.extend(spoly_terms(c, "", style));
        } else {
            let inner = render_spoly(c, style);
            let body = match style {
                Style::Plain => format!("({inner}){zpart}"),
                Style::Latex => format!("\\left({inner}\\right){zpart}"),
            };
            terms.push(Term {
                negative: false,
                body,
            });
        }
    }
    join(terms)
}

/// LaTeX form of a polynomial in z.
pub fn zpoly_latex(p: &ZPoly) -> String {
    render_zpoly(p, Style::Latex)
}

/// LaTeX form of a polynomial in s.
pub fn spoly_latex(p: &SPoly) -> String {
    render_spoly(p, Style::Latex)
}

impl fmt::Display for SPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_spoly(self, Style::Plain))
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_zpoly(self, Style::Plain))
    }
}
