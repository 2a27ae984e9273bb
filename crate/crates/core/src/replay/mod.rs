//! Replay of the published classification tables.
//!
//! Every [`ReplayCase`] fixes an extension problem, the witness polynomials
//! listed for it (with `t` standing for `Δ̄`), and the expected ext dimension.
//! [`run_case`] checks each listed witness by substitution, locates its class
//! in the engine's basis modulo coboundaries, and compares dimensions.

mod expected;
mod tables;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::arith::{Field, QuadExt, Rational};
use crate::cocycle::{
    ext_class, solve_ext_with, verify_witness, Algebra, Caps, CocycleWitness, ExtProblem, Sector, Shape, SolveError,
    SolveOptions, Stabilization,
};
use crate::linalg::Matrix;
use crate::scan::specialize_witness;

pub use expected::{compare_classification, expected_classification, ExpectedClassification, ExpectedFamily, ExpectedPoint};
pub use tables::{all_cases, generic_b_samples, quadratic_dbar, table, LINE_SAMPLE};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Table {
    Theo1,
    Theo2,
    Theo3,
    LemmaG,
    VirTh2,
    VirTh3,
    VirTh4,
}

impl Table {
    pub const ALL: [Table; 7] =
        [Table::VirTh2, Table::VirTh3, Table::VirTh4, Table::Theo1, Table::Theo2, Table::LemmaG, Table::Theo3];

    pub fn name(self) -> &'static str {
        match self {
            Table::Theo1 => "theo1",
            Table::Theo2 => "theo2",
            Table::Theo3 => "theo3",
            Table::LemmaG => "lemma-g",
            Table::VirTh2 => "vir-th2",
            Table::VirTh3 => "vir-th3",
            Table::VirTh4 => "vir-th4",
        }
    }
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown table {0:?} (expected one of theo1, theo2, theo3, lemma-g, vir-th2, vir-th3, vir-th4, all)")]
pub struct UnknownTable(pub String);

/// A table name or `all`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableSelection {
    One(Table),
    All,
}

impl TableSelection {
    pub fn tables(self) -> Vec<Table> {
        match self {
            TableSelection::One(t) => vec![t],
            TableSelection::All => Table::ALL.to_vec(),
        }
    }
}

impl FromStr for TableSelection {
    type Err = UnknownTable;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "all" {
            return Ok(TableSelection::All);
        }
        Table::ALL.iter().find(|t| t.name() == s).map(|&t| TableSelection::One(t)).ok_or_else(|| UnknownTable(s.to_string()))
    }
}

/// A corrected form of a listed witness whose printed form fails to verify.
#[derive(Clone, Debug)]
pub struct Amendment {
    pub witness: CocycleWitness<Rational>,
    pub note: String,
}

#[derive(Clone, Debug)]
pub struct PaperWitness {
    pub label: String,
    /// Listed polynomials; `t` stands for `Δ̄`.
    pub witness: CocycleWitness<Rational>,
    pub amendment: Option<Amendment>,
}

#[derive(Clone, Debug)]
pub struct ReplayCase {
    pub id: String,
    pub table: Table,
    pub algebra: Algebra,
    pub shape: Shape<QuadExt>,
    pub sector: Sector,
    pub witnesses: Vec<PaperWitness>,
    /// Expected ext dimension, cross-checked against the brute-force oracle
    /// by the test suite.
    pub golden_ext_dim: usize,
}

impl ReplayCase {
    pub fn dbar(&self) -> Option<&QuadExt> {
        match &self.shape {
            Shape::Type3 { dbar, .. } => Some(dbar),
            _ => None,
        }
    }

    /// The problem over ℚ, when every parameter is rational.
    pub fn rational_problem(&self, caps: Caps) -> Option<ExtProblem<Rational>> {
        let params = self.shape.params();
        if params.iter().any(|(_, v)| !v.is_rational()) {
            return None;
        }
        let shape = self.shape.map(|v| v.rational_part().clone());
        Some(ExtProblem::new(self.algebra.clone(), shape).with_caps(caps).with_sector(self.sector))
    }

    pub fn quad_problem(&self, caps: Caps) -> ExtProblem<QuadExt> {
        ExtProblem::new(self.algebra.clone(), self.shape.clone()).with_caps(caps).with_sector(self.sector)
    }

    /// Listed witnesses with `Δ̄` substituted.
    pub fn witnesses_in<F: Field>(&self, dbar: &F) -> Vec<(String, CocycleWitness<F>, Option<CocycleWitness<F>>)> {
        self.witnesses
            .iter()
            .map(|w| {
                let amended = w.amendment.as_ref().map(|a| specialize_witness(&a.witness, dbar));
                (w.label.clone(), specialize_witness(&w.witness, dbar), amended)
            })
            .collect()
    }
}

/// Where a verified witness sits in Ext.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassStatus {
    /// A nonzero class with these coordinates in the engine basis.
    Nontrivial(Vec<String>),
    Coboundary,
    /// Not a combination of engine basis and coboundaries within the caps.
    OutsideSpan,
    /// Not checked because the witness failed verification.
    Unchecked,
}

#[derive(Clone, Debug)]
pub struct WitnessReport {
    pub label: String,
    pub witness: String,
    pub verifies: bool,
    pub residuals: Vec<String>,
    pub class: ClassStatus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    /// A listed witness fails to verify, but its amended form passes every
    /// check.
    Discrepancy,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Discrepancy => "DISCREPANCY",
            Verdict::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug)]
pub struct CaseReport {
    pub id: String,
    pub table: Table,
    pub problem: String,
    pub ext_dim: usize,
    pub golden_ext_dim: usize,
    pub stabilization: Stabilization,
    pub degenerate: bool,
    pub engine_basis: Vec<String>,
    pub witnesses: Vec<WitnessReport>,
    /// Checks of amended forms, for witnesses that have one and fail.
    pub amendments: Vec<(WitnessReport, String)>,
    /// Rank of the classes spanned by the verified and amended witnesses.
    pub listed_rank: usize,
    pub problems: Vec<String>,
    pub verdict: Verdict,
}

pub fn describe_problem<C: Field>(p: &ExtProblem<C>) -> String {
    let params: Vec<String> = p.shape.params().iter().map(|(k, v)| format!("{k}={}", v.render())).collect();
    let sector = match p.sector {
        Sector::Full => String::new(),
        Sector::F => " sector=f".to_string(),
        Sector::G => " sector=g".to_string(),
    };
    format!("{} type{} {}{}", p.algebra, p.shape.number(), params.join(" "), sector)
}

fn check_witness<C: Field>(
    p: &ExtProblem<C>,
    sol: &crate::cocycle::ExtSolution<C>,
    label: &str,
    w: &CocycleWitness<C>,
) -> (WitnessReport, Option<Vec<C>>) {
    let verdict = verify_witness(p, w);
    let residuals: Vec<String> = verdict.residuals.iter().map(|r| r.describe()).collect();
    let (class, coords) = if !verdict.pass() {
        (ClassStatus::Unchecked, None)
    } else {
        match ext_class(p, sol, w) {
            None => (ClassStatus::OutsideSpan, None),
            Some(c) if c.iter().all(|x| x.is_zero()) => (ClassStatus::Coboundary, None),
            Some(c) => (ClassStatus::Nontrivial(c.iter().map(|x| x.render()).collect()), Some(c)),
        }
    };
    let report = WitnessReport { label: label.to_string(), witness: w.to_string(), verifies: verdict.pass(), residuals, class };
    (report, coords)
}

fn run_in<C: Field>(case: &ReplayCase, p: ExtProblem<C>, dbar: C) -> Result<CaseReport, SolveError> {
    let sol = solve_ext_with(&p, SolveOptions::default())?;
    let mut problems = Vec::new();
    let mut witnesses = Vec::new();
    let mut amendments = Vec::new();
    let mut classes: Vec<Vec<C>> = Vec::new();
    let mut discrepancy = false;
    for (label, w, amended) in case.witnesses_in(&dbar) {
        let (report, coords) = check_witness(&p, &sol, &label, &w);
        match (&report.class, coords) {
            (ClassStatus::Nontrivial(_), Some(c)) => classes.push(c),
            (ClassStatus::Unchecked, _) => match amended {
                Some(a) => {
                    let (ar, ac) = check_witness(&p, &sol, &label, &a);
                    let note = case.witnesses.iter().find(|x| x.label == label).and_then(|x| x.amendment.as_ref());
                    let note = note.map(|a| a.note.clone()).unwrap_or_default();
                    match ac {
                        Some(c) => {
                            classes.push(c);
                            discrepancy = true;
                        }
                        None => problems.push(format!("amended witness {label} fails: {:?}", ar.class)),
                    }
                    amendments.push((ar, note));
                }
                None => problems.push(format!("witness {label} does not verify")),
            },
            (status, _) => problems.push(format!("witness {label} is not a nontrivial class: {status:?}")),
        }
        witnesses.push(report);
    }
    let listed_rank = if classes.is_empty() { 0 } else { Matrix::from_rows(sol.ext_dim, classes).rank() };
    if sol.ext_dim != case.golden_ext_dim {
        problems.push(format!("ext_dim {} but expected {}", sol.ext_dim, case.golden_ext_dim));
    }
    if listed_rank != sol.ext_dim {
        problems.push(format!("listed witnesses span {listed_rank} of {} classes", sol.ext_dim));
    }
    if sol.diagnostics.stabilization != Stabilization::Stable {
        problems.push(format!("not stable under raised caps: {:?}", sol.diagnostics.stabilization));
    }
    let verdict = if !problems.is_empty() {
        Verdict::Fail
    } else if discrepancy {
        Verdict::Discrepancy
    } else {
        Verdict::Pass
    };
    Ok(CaseReport {
        id: case.id.clone(),
        table: case.table,
        problem: describe_problem(&p),
        ext_dim: sol.ext_dim,
        golden_ext_dim: case.golden_ext_dim,
        stabilization: sol.diagnostics.stabilization.clone(),
        degenerate: sol.diagnostics.degenerate,
        engine_basis: sol.basis.iter().map(|w| w.to_string()).collect(),
        witnesses,
        amendments,
        listed_rank,
        problems,
        verdict,
    })
}

/// Solves the case and checks its listed witnesses.
pub fn run_case(case: &ReplayCase, caps: Caps) -> Result<CaseReport, SolveError> {
    let dbar = case.dbar().cloned().unwrap_or_else(|| QuadExt::rational(Rational::from_integer(0.into())));
    match case.rational_problem(caps) {
        Some(p) => run_in(case, p, dbar.rational_part().clone()),
        None => run_in(case, case.quad_problem(caps), dbar),
    }
}

/// Runs cases concurrently; reports come back in input order.
pub fn run_cases(cases: &[ReplayCase], caps: Caps) -> Result<Vec<CaseReport>, SolveError> {
    cases.par_iter().map(|c| run_case(c, caps)).collect()
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    #[test]
    fn case_ids_are_unique() {
        let cases = all_cases();
        let ids: HashSet<&str> = cases.iter().map(|c| c.id.as_str()).collect();
        assert_eq!(ids.len(), cases.len());
    }

    #[test]
    fn table_sizes() {
        assert_eq!(table(Table::Theo2).len(), 1);
        assert_eq!(table(Table::LemmaG).len(), 7);
        assert_eq!(Table::ALL.iter().map(|&t| table(t).len()).sum::<usize>(), all_cases().len());
    }

    #[test]
    fn table_names_round_trip() {
        for t in Table::ALL {
            assert_eq!(t.name().parse::<TableSelection>(), Ok(TableSelection::One(t)));
        }
        assert_eq!("all".parse::<TableSelection>().unwrap().tables().len(), 7);
        assert!("theo9".parse::<TableSelection>().is_err());
    }

    #[test]
    fn theo2_replays() {
        let reports = run_cases(&table(Table::Theo2), Caps::default()).unwrap();
        assert_eq!(reports[0].verdict, Verdict::Pass, "{:?}", reports[0].problems);
    }

    #[test]
    fn printed_sign_typo_is_a_discrepancy() {
        let case = all_cases().into_iter().find(|c| c.id == "theo3-b2-iii").unwrap();
        let r = run_case(&case, Caps::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Discrepancy);
        assert!(r.witnesses.iter().any(|w| !w.verifies));
        assert!(r.amendments.iter().all(|(a, _)| a.verifies));
    }

    #[test]
    fn quadratic_cases_use_the_extension_field() {
        let quad: Vec<_> = table(Table::VirTh4).into_iter().filter(|c| c.rational_problem(Caps::default()).is_none()).collect();
        assert_eq!(quad.len(), 2);
        assert_eq!(quad[0].dbar().and_then(|d| d.radicand()).map(|r| r.to_string()), Some("19".to_string()));
    }
}
