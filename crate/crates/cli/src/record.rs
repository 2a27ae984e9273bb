//! Machine-readable output documents. Rationals are `p/q` strings and
//! polynomials use the canonical text format, so every record parses back
//! to the values it was built from.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use wbext::arith::format::{parse, render};
use wbext::arith::{parse_rational, Field, MultiPoly};
use wbext::cocycle::{Algebra, Caps, CocycleWitness, ExtProblem, ExtSolution, Sector, Shape, Stabilization};
use wbext::scan::Dims;

/// A field of an input document that failed to parse.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{field}: {message}")]
pub struct RecordError {
    pub field: String,
    pub message: String,
}

impl RecordError {
    pub fn new(field: impl Into<String>, message: impl ToString) -> Self {
        RecordError { field: field.into(), message: message.to_string() }
    }
}

#[derive(Serialize, Deserialize, Clone, Copy, Debug, PartialEq, Eq, Default)]
#[serde(rename_all = "lowercase")]
pub enum SectorName {
    F,
    G,
    #[default]
    Full,
}

impl From<Sector> for SectorName {
    fn from(s: Sector) -> Self {
        match s {
            Sector::F => SectorName::F,
            Sector::G => SectorName::G,
            Sector::Full => SectorName::Full,
        }
    }
}

impl From<SectorName> for Sector {
    fn from(s: SectorName) -> Self {
        match s {
            SectorName::F => Sector::F,
            SectorName::G => Sector::G,
            SectorName::Full => Sector::Full,
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Copy, Debug, PartialEq, Eq)]
pub struct CapsRecord {
    pub f: u32,
    pub g: u32,
    pub h: u32,
    pub phi: u32,
}

impl From<Caps> for CapsRecord {
    fn from(c: Caps) -> Self {
        CapsRecord { f: c.f, g: c.g, h: c.h, phi: c.phi }
    }
}

impl From<CapsRecord> for Caps {
    fn from(c: CapsRecord) -> Self {
        Caps { f: c.f, g: c.g, h: c.h, phi: c.phi }
    }
}

/// An extension problem. `algebra` is `"w"` (with `b`) or `"virasoro"`.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ProblemRecord {
    pub algebra: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<String>,
    #[serde(rename = "type")]
    pub shape: u8,
    pub alpha: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub abar: Option<String>,
    pub delta: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dbar: Option<String>,
    #[serde(default)]
    pub sector: SectorName,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub caps: Option<CapsRecord>,
}

fn parse_value<C: Field>(field: &str, s: &str) -> Result<C, RecordError> {
    let p: MultiPoly<C> = parse(s).map_err(|e| RecordError::new(field, e))?;
    p.as_constant().ok_or_else(|| RecordError::new(field, format!("`{s}` is not a constant")))
}

fn require<'a>(field: &str, v: &'a Option<String>, shape: u8) -> Result<&'a str, RecordError> {
    v.as_deref().ok_or_else(|| RecordError::new(field, format!("required for type {shape}")))
}

impl ProblemRecord {
    pub fn from_problem<C: Field>(p: &ExtProblem<C>) -> Self {
        let (algebra, b) = match &p.algebra {
            Algebra::Virasoro => ("virasoro".to_string(), None),
            Algebra::W(b) => ("w".to_string(), Some(b.render())),
        };
        let r = |x: &C| x.render();
        let mut rec = ProblemRecord {
            algebra,
            b,
            shape: p.shape.number(),
            alpha: String::new(),
            gamma: None,
            abar: None,
            delta: String::new(),
            dbar: None,
            sector: p.sector.into(),
            caps: Some(p.caps.into()),
        };
        match &p.shape {
            Shape::Type1 { alpha, gamma, delta } | Shape::Type2 { alpha, gamma, delta } => {
                rec.alpha = r(alpha);
                rec.gamma = Some(r(gamma));
                rec.delta = r(delta);
            }
            Shape::Type3 { alpha, abar, delta, dbar } => {
                rec.alpha = r(alpha);
                rec.abar = Some(r(abar));
                rec.delta = r(delta);
                rec.dbar = Some(r(dbar));
            }
        }
        rec
    }

    /// Whether some weight needs `Q(sqrt d)`.
    pub fn is_quadratic(&self) -> bool {
        [Some(&self.alpha), self.gamma.as_ref(), self.abar.as_ref(), Some(&self.delta), self.dbar.as_ref()]
            .into_iter()
            .flatten()
            .any(|s| s.contains("sqrt"))
    }

    pub fn to_problem<C: Field>(&self) -> Result<ExtProblem<C>, RecordError> {
        let algebra = match self.algebra.as_str() {
            "virasoro" => {
                if self.b.is_some() {
                    return Err(RecordError::new("problem.b", "not allowed for the virasoro algebra"));
                }
                Algebra::Virasoro
            }
            "w" => {
                let b = self.b.as_deref().ok_or_else(|| RecordError::new("problem.b", "required for algebra w"))?;
                let b = parse_rational(b).map_err(|e| RecordError::new("problem.b", e))?;
                Algebra::w(b).map_err(|e| RecordError::new("problem.b", e))?
            }
            other => return Err(RecordError::new("problem.algebra", format!("unknown algebra `{other}` (expected w or virasoro)"))),
        };
        let alpha = parse_value::<C>("problem.alpha", &self.alpha)?;
        let delta = parse_value::<C>("problem.delta", &self.delta)?;
        let shape = match self.shape {
            1 | 2 => {
                let gamma = parse_value::<C>("problem.gamma", require("problem.gamma", &self.gamma, self.shape)?)?;
                if self.shape == 1 {
                    Shape::Type1 { alpha, gamma, delta }
                } else {
                    Shape::Type2 { alpha, gamma, delta }
                }
            }
            3 => Shape::Type3 {
                alpha,
                abar: parse_value::<C>("problem.abar", require("problem.abar", &self.abar, 3)?)?,
                delta,
                dbar: parse_value::<C>("problem.dbar", require("problem.dbar", &self.dbar, 3)?)?,
            },
            n => return Err(RecordError::new("problem.type", format!("{n} is not 1, 2 or 3"))),
        };
        let mut p = ExtProblem::new(algebra, shape).with_sector(self.sector.into());
        if let Some(c) = self.caps {
            p = p.with_caps(c.into());
        }
        Ok(p)
    }
}

fn zero_poly() -> String {
    "0".to_string()
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct WitnessRecord {
    pub f: String,
    #[serde(default = "zero_poly")]
    pub g: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<String>,
}

impl WitnessRecord {
    pub fn from_witness<C: Field>(w: &CocycleWitness<C>) -> Self {
        WitnessRecord { f: render(&w.f), g: render(&w.g), h: w.h.as_ref().map(render) }
    }

    /// `at` names the record in error messages, e.g. `basis[2]`.
    pub fn to_witness<C: Field>(&self, at: &str, shape: u8) -> Result<CocycleWitness<C>, RecordError> {
        let poly = |name: &str, s: &str| parse::<C>(s).map_err(|e| RecordError::new(format!("{at}.{name}"), e));
        let h = match (&self.h, shape) {
            (Some(h), 2) => Some(poly("h", h)?),
            (None, 2) => return Err(RecordError::new(format!("{at}.h"), "required for type 2")),
            (Some(_), _) => return Err(RecordError::new(format!("{at}.h"), format!("only type 2 has h, not type {shape}"))),
            (None, _) => None,
        };
        Ok(CocycleWitness::new(poly("f", &self.f)?, poly("g", &self.g)?, h))
    }
}

#[derive(Serialize, Deserialize, Clone, Copy, Debug, PartialEq, Eq)]
pub struct DimsRecord {
    pub cocycle: usize,
    pub coboundary: usize,
    pub ext: usize,
}

impl From<Dims> for DimsRecord {
    fn from(d: Dims) -> Self {
        DimsRecord { cocycle: d.cocycle, coboundary: d.coboundary, ext: d.ext }
    }
}

pub fn stabilization_label(s: &Stabilization) -> String {
    match s {
        Stabilization::Stable => "stable".to_string(),
        Stabilization::NotChecked => "not checked".to_string(),
        Stabilization::CapTooSmall { caps, ext_dim } => {
            format!("unstable: ext_dim {ext_dim} at caps f={} g={} h={} phi={}", caps.f, caps.g, caps.h, caps.phi)
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct DiagnosticsRecord {
    pub stabilization: String,
    pub degenerate: bool,
}

/// Result of `solve`.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct OutputRecord {
    pub problem: ProblemRecord,
    pub cocycle_dim: usize,
    pub coboundary_dim: usize,
    pub ext_dim: usize,
    pub basis: Vec<WitnessRecord>,
    pub diagnostics: DiagnosticsRecord,
}

impl OutputRecord {
    pub fn new<C: Field>(p: &ExtProblem<C>, sol: &ExtSolution<C>) -> Self {
        OutputRecord {
            problem: ProblemRecord::from_problem(p),
            cocycle_dim: sol.cocycle_dim,
            coboundary_dim: sol.coboundary_dim,
            ext_dim: sol.ext_dim,
            basis: sol.basis.iter().map(WitnessRecord::from_witness).collect(),
            diagnostics: DiagnosticsRecord {
                stabilization: stabilization_label(&sol.diagnostics.stabilization),
                degenerate: sol.diagnostics.degenerate,
            },
        }
    }
}

/// Input of `verify`: any document with a problem and a witness list.
/// An [`OutputRecord`] qualifies; `witnesses` is accepted for `basis`.
#[derive(Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct VerifyDocument {
    pub problem: ProblemRecord,
    #[serde(alias = "witnesses")]
    pub basis: Vec<WitnessRecord>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct WitnessCheck {
    pub witness: WitnessRecord,
    pub pass: bool,
    pub residuals: Vec<String>,
}

/// Result of `verify`.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct VerifyRecord {
    pub problem: ProblemRecord,
    pub witnesses: Vec<WitnessCheck>,
    pub pass: bool,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct RootRecord {
    pub value: String,
    pub multiplicity: u32,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct FactorizationRecord {
    pub content: String,
    pub rational_roots: Vec<RootRecord>,
    pub quadratics: Vec<RootRecord>,
    pub residual: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct SpecialRecord {
    pub t: String,
    pub minimal_poly: String,
    pub delta: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dbar: Option<String>,
    pub dims: DimsRecord,
    pub degenerate: bool,
    pub witnesses: Vec<WitnessRecord>,
}

/// One parametric scan.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ScanRecord {
    pub problem: String,
    pub promotion: String,
    pub unknowns: usize,
    pub generic_rank: usize,
    pub generic: DimsRecord,
    /// Polynomials in `t`.
    pub generic_witnesses: Vec<WitnessRecord>,
    pub certificate: String,
    pub factorization: FactorizationRecord,
    pub specials: Vec<SpecialRecord>,
    pub unresolved: Vec<String>,
}

/// Result of `scan`: one record per scanned line.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ScanOutput {
    pub scans: Vec<ScanRecord>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct FamilyRecord {
    pub s: String,
    pub f_dim: usize,
    pub g_dim: usize,
    pub f_witnesses: Vec<WitnessRecord>,
    pub g_witnesses: Vec<WitnessRecord>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct PointRecord {
    pub s: String,
    pub delta: String,
    pub dbar: String,
    pub f_dim: usize,
    pub g_dim: usize,
    pub degenerate: bool,
    pub witnesses: Vec<WitnessRecord>,
}

/// Result of `classify`.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ClassifyRecord {
    pub algebra: String,
    pub lines: Vec<String>,
    pub families: Vec<FamilyRecord>,
    pub points: Vec<PointRecord>,
    /// Differences from the closed-form classification; absent for Vir.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mismatches: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ListedWitnessRecord {
    pub label: String,
    pub witness: String,
    pub verifies: bool,
    pub residuals: Vec<String>,
    pub class: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct AmendmentRecord {
    pub check: ListedWitnessRecord,
    pub note: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct CaseRecord {
    pub id: String,
    pub table: String,
    pub problem: String,
    pub ext_dim: usize,
    pub golden_ext_dim: usize,
    pub stabilization: String,
    pub degenerate: bool,
    pub engine_basis: Vec<String>,
    pub witnesses: Vec<ListedWitnessRecord>,
    pub amendments: Vec<AmendmentRecord>,
    pub listed_rank: usize,
    pub problems: Vec<String>,
    pub verdict: String,
}

#[derive(Serialize, Deserialize, Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct SummaryRecord {
    pub pass: usize,
    pub discrepancy: usize,
    pub fail: usize,
}

/// Result of `replay`.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ReplayRecord {
    pub tables: Vec<String>,
    pub cases: Vec<CaseRecord>,
    pub summary: SummaryRecord,
}

/// Result of `check-axioms`.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct AxiomRecord {
    pub algebra: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<String>,
    pub checked: usize,
    pub pass: bool,
    pub residuals: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use wbext::arith::{int, QuadExt, Rational};
    use wbext::cocycle::solve_ext;

    #[test]
    fn problem_round_trips() {
        let p = ExtProblem::new(Algebra::W(int(2)), Shape::Type2 { alpha: int(1), gamma: int(-1), delta: int(1) });
        let rec = ProblemRecord::from_problem(&p);
        assert_eq!(rec.to_problem::<Rational>().unwrap(), p);
    }

    #[test]
    fn quadratic_weights_round_trip() {
        let dbar = QuadExt::new(int(-5) / int(2), int(1) / int(2), 19.into()).unwrap();
        let delta = dbar.clone() + &QuadExt::rational(int(6));
        let z = QuadExt::rational(int(0));
        let p = ExtProblem::new(Algebra::Virasoro, Shape::Type3 { alpha: z.clone(), abar: z, delta, dbar });
        let rec = ProblemRecord::from_problem(&p);
        assert!(rec.is_quadratic());
        assert_eq!(rec.to_problem::<QuadExt>().unwrap(), p);
    }

    #[test]
    fn output_record_round_trips_through_json() {
        let p = ExtProblem::new(
            Algebra::W(int(1)),
            Shape::Type3 { alpha: int(0), abar: int(0), delta: int(3), dbar: int(1) },
        );
        let rec = OutputRecord::new(&p, &solve_ext(&p).unwrap());
        let json = serde_json::to_string(&rec).unwrap();
        assert_eq!(serde_json::from_str::<OutputRecord>(&json).unwrap(), rec);
        let back: Vec<CocycleWitness<Rational>> =
            rec.basis.iter().enumerate().map(|(i, w)| w.to_witness(&format!("basis[{i}]"), 3).unwrap()).collect();
        assert_eq!(back, solve_ext(&p).unwrap().basis);
    }

    #[test]
    fn errors_name_the_field() {
        let mut rec = ProblemRecord::from_problem(&ExtProblem::new(
            Algebra::W(int(1)),
            Shape::Type1 { alpha: int(0), gamma: int(0), delta: int(1) },
        ));
        rec.alpha = "0.5".to_string();
        assert_eq!(rec.to_problem::<Rational>().unwrap_err().field, "problem.alpha");
        rec.alpha = "0".to_string();
        rec.gamma = None;
        assert_eq!(rec.to_problem::<Rational>().unwrap_err().field, "problem.gamma");
    }
}
