//! Wire formats: exact-rational JSON for polynomials and reports, CSV
//! for the pairing tables.
//!
//! Rationals travel as strings ("p" or "p/q"), never as floats, so a
//! parse-and-re-render round trip is the identity byte for byte.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{format_rational, parse_rational, Alpha, Rational, SPoly, ZPoly};
use crate::deform::{OdeEntry, OdeSystem};
use crate::error::Error;
use crate::family::SquareReport;
use crate::measure::{DecompCoeffs, InnerTable};

/// JSON form of a polynomial in z over Q[s]: one string list per
/// z-coefficient, ascending in both variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub var: String,
    pub coeffs: Vec<Vec<String>>,
}

impl PolyJson {
    pub fn from_zpoly(p: &ZPoly) -> Self {
        PolyJson {
            var: "z".to_string(),
            coeffs: p
                .coeffs()
                .iter()
                .map(|c| c.coeffs().iter().map(format_rational).collect())
                .collect(),
        }
    }

    pub fn to_zpoly(&self) -> Result<ZPoly, Error> {
        if self.var != "z" {
            return Err(Error::Parse(format!(
                "expected var \"z\", got {:?}",
                self.var
            )));
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                c.iter()
                    .map(|v| parse_rational(v))
                    .collect::<Result<Vec<Rational>, Error>>()
                    .map(SPoly::from_coeffs)
            })
            .collect::<Result<Vec<SPoly>, Error>>()?;
        Ok(ZPoly::from_coeffs(coeffs))
    }
}

/// JSON form of a polynomial in s alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SPolyJson {
    pub var: String,
    pub coeffs: Vec<String>,
}

impl SPolyJson {
    pub fn from_spoly(p: &SPoly) -> Self {
        SPolyJson {
            var: "s".to_string(),
            coeffs: p.coeffs().iter().map(format_rational).collect(),
        }
    }

    pub fn to_spoly(&self) -> Result<SPoly, Error> {
        if self.var != "s" {
            return Err(Error::Parse(format!(
                "expected var \"s\", got {:?}",
                self.var
            )));
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|v| parse_rational(v))
            .collect::<Result<Vec<Rational>, Error>>()?;
        Ok(SPoly::from_coeffs(coeffs))
    }
}

/// One generated polynomial with its index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenPolyJson {
    pub n: usize,
    #[serde(flatten)]
    pub poly: PolyJson,
}

/// Output document of the `gen` command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenDoc {
    pub family: String,
    pub alpha: i64,
    /// "sym" or the decimal level.
    pub s: String,
    pub polys: Vec<GenPolyJson>,
}

/// JSON form of the pairing table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InnerTableJson {
    pub s: u32,
    pub alpha: i64,
    pub n_max: usize,
    pub entries: Vec<Vec<String>>,
}

impl InnerTableJson {
    pub fn from_table(t: &InnerTable) -> Self {
        InnerTableJson {
            s: t.s,
            alpha: t.alpha.sign(),
            n_max: t.entries.len() - 1,
            entries: t
                .entries
                .iter()
                .map(|row| row.iter().map(format_rational).collect())
                .collect(),
        }
    }
}

/// CSV form of the pairing table: header row of column indices, then one
/// row per n.
pub fn inner_table_csv(t: &InnerTable) -> String {
    let n_max = t.entries.len() - 1;
    let mut out = String::from("n\\m");
    for m in 0..=n_max {
        out.push_str(&format!(",{m}"));
    }
    out.push('\n');
    for (n, row) in t.entries.iter().enumerate() {
        out.push_str(&n.to_string());
        for v in row {
            out.push(',');
            out.push_str(&format_rational(v));
        }
        out.push('\n');
    }
    out
}

/// JSON form of a moment decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompJson {
    pub n: usize,
    pub s: u32,
    pub alpha: i64,
    /// level -> coefficient, sorted by level.
    pub coeffs: BTreeMap<u32, String>,
}

impl DecompJson {
    pub fn from_decomp(d: &DecompCoeffs) -> Self {
        DecompJson {
            n: d.n,
            s: d.s,
            alpha: d.alpha.sign(),
            coeffs: d
                .coeffs
                .iter()
                .map(|(&p, c)| (p, format_rational(c)))
                .collect(),
        }
    }
}

/// One row of the triangular differential system, rendered for export.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OdeRowJson {
    pub diag_shift: u32,
    /// Sub-diagonal multipliers for columns 0..row, as s-polynomials.
    pub sub: Vec<String>,
}

/// JSON form of the triangular system plus its application residuals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OdeSystemJson {
    pub n: usize,
    pub alpha: i64,
    pub rows: Vec<OdeRowJson>,
    /// Row residuals after applying the system to the deformed family;
    /// all "0" exactly when the system annihilates it.
    pub residuals: Vec<String>,
}

impl OdeSystemJson {
    pub fn from_system(sys: &OdeSystem, residuals: &[ZPoly]) -> Self {
        let rows = sys
            .entries
            .iter()
            .map(|row| {
                let mut diag_shift = 0;
                let mut sub = Vec::new();
                for entry in row {
                    match entry {
                        OdeEntry::Zero => {}
                        OdeEntry::DiagShift(d) => diag_shift = *d,
                        OdeEntry::Coeff(c) => sub.push(c.to_string()),
                    }
                }
                OdeRowJson { diag_shift, sub }
            })
            .collect();
        OdeSystemJson {
            n: sys.size - 1,
            alpha: sys.alpha.sign(),
            rows,
            residuals: residuals.iter().map(|r| r.to_string()).collect(),
        }
    }
}

/// JSON form of one commuting-square edge check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub edge: String,
    pub pass: bool,
    pub first_mismatch: Option<MismatchJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MismatchJson {
    pub z_power: usize,
    pub expected: String,
    pub got: String,
}

/// JSON form of a commuting-square report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareJson {
    pub n: usize,
    pub s: u32,
    pub alpha: i64,
    pub pass: bool,
    pub edges: Vec<EdgeJson>,
}

impl SquareJson {
    pub fn from_report(r: &SquareReport) -> Self {
        SquareJson {
            n: r.n,
            s: r.s,
            alpha: r.alpha.sign(),
            pass: r.all_pass(),
            edges: r
                .edges
                .iter()
                .map(|e| EdgeJson {
                    edge: e.edge.to_string(),
                    pass: e.pass,
                    first_mismatch: e.first_mismatch.as_ref().map(|m| MismatchJson {
                        z_power: m.z_power,
                        expected: m.expected.to_string(),
                        got: m.got.to_string(),
                    }),
                })
                .collect(),
        }
    }
}

/// Helper for `"sym"`-or-integer level fields.
pub fn alpha_from_json(v: i64) -> Result<Alpha, Error> {
    Alpha::from_sign(v)
}
