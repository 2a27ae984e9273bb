use serde::Serialize;
use thiserror::Error;

use wbext::arith::{int, Field, QuadExt, RatFunc, Rational};
use wbext::cocycle::{solve_ext_with, verify_witness, Algebra, ExtProblem, Shape, SolveOptions, Stabilization};
use wbext::conformal::{check_algebra, check_module_axioms, AlgebraSpec, ModuleSpec};
use wbext::replay::{
    compare_classification, describe_problem, expected_classification, run_cases, table, CaseReport, ClassStatus,
    Verdict, WitnessReport,
};
use wbext::scan::{candidate_lines, classify_algebra, special_values, LineOrigin, Promotion, ScanProblem, ScanReport};

use crate::args::{CheckAxiomsArgs, ClassifyArgs, PromoteArg, ReplayArgs, ScanArgs, SolveArgs, VerifyArgs, WeightArgs};
use crate::record::*;
use crate::render;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags or input documents; exit status 2.
    #[error("{0}")]
    Usage(String),
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// A finished command: both renderings of one record, and whether every
/// check passed.
pub struct Report {
    pub table: String,
    pub json: String,
    pub ok: bool,
}

fn report<T: Serialize>(rec: &T, table: String, ok: bool) -> Report {
    let json = serde_json::to_string_pretty(rec).expect("records serialize") + "\n";
    Report { table, json, ok }
}

fn need(v: &Option<Rational>, flag: &str, shape: u8) -> Result<Rational, CliError> {
    v.clone().ok_or_else(|| usage(format!("--{flag} is required for --type {shape}")))
}

fn forbid(v: &Option<Rational>, flag: &str, why: &str) -> Result<(), CliError> {
    match v {
        Some(_) => Err(usage(format!("--{flag} does not apply {why}"))),
        None => Ok(()),
    }
}

fn solve_shape(n: u8, w: &WeightArgs) -> Result<Shape<Rational>, CliError> {
    let why = format!("to --type {n}");
    let alpha = need(&w.alpha, "alpha", n)?;
    let delta = need(&w.delta, "delta", n)?;
    Ok(match n {
        1 | 2 => {
            forbid(&w.abar, "abar", &why)?;
            forbid(&w.dbar, "dbar", &why)?;
            let gamma = need(&w.gamma, "gamma", n)?;
            if n == 1 {
                Shape::Type1 { alpha, gamma, delta }
            } else {
                Shape::Type2 { alpha, gamma, delta }
            }
        }
        _ => {
            forbid(&w.gamma, "gamma", &why)?;
            Shape::Type3 { alpha, abar: need(&w.abar, "abar", n)?, delta, dbar: need(&w.dbar, "dbar", n)? }
        }
    })
}

fn check_g_sector(algebra: &Algebra, sector: wbext::cocycle::Sector) -> Result<(), CliError> {
    if matches!(algebra, Algebra::Virasoro) && sector == wbext::cocycle::Sector::G {
        return Err(usage("--sector g needs W(b); the Virasoro algebra has no H"));
    }
    Ok(())
}

pub fn solve(args: &SolveArgs) -> Result<Report, CliError> {
    let algebra = args.algebra.algebra();
    check_g_sector(&algebra, args.sector.into())?;
    let p = ExtProblem::new(algebra, solve_shape(args.shape, &args.weights)?)
        .with_caps(args.caps.resolve())
        .with_sector(args.sector.into());
    let sol = solve_ext_with(&p, SolveOptions::default()).map_err(|e| usage(e.to_string()))?;
    let rec = OutputRecord::new(&p, &sol);
    let ok = sol.diagnostics.stabilization == Stabilization::Stable;
    Ok(report(&rec, render::output(&rec), ok))
}

fn scan_problems(args: &ScanArgs) -> Result<Vec<ScanProblem>, CliError> {
    let algebra = args.algebra.algebra();
    let sector = args.sector.into();
    check_g_sector(&algebra, sector)?;
    let w = &args.weights;
    let z = || int(0);
    let alpha = w.alpha.clone().unwrap_or_else(z);
    let base = |shape| ExtProblem::new(algebra.clone(), shape).with_caps(args.caps.resolve()).with_sector(sector);
    let one = |b: ExtProblem<Rational>, p: Promotion| Ok(vec![ScanProblem::new(b, p).map_err(|e| usage(e.to_string()))?]);
    if args.shape != 3 {
        let why = format!("to --type {}", args.shape);
        if args.promote != PromoteArg::Delta {
            return Err(usage(format!("--promote must be delta for --type {}", args.shape)));
        }
        for (v, flag) in [(&w.abar, "abar"), (&w.dbar, "dbar"), (&w.delta, "delta"), (&args.diff, "diff")] {
            forbid(v, flag, &why)?;
        }
        let gamma = need(&w.gamma, "gamma", args.shape)?;
        let shape = if args.shape == 1 {
            Shape::Type1 { alpha, gamma, delta: z() }
        } else {
            Shape::Type2 { alpha, gamma, delta: z() }
        };
        return one(base(shape), Promotion::Delta);
    }
    forbid(&w.gamma, "gamma", "to --type 3")?;
    let abar = w.abar.clone().unwrap_or_else(|| alpha.clone());
    let type3 = |delta: Rational, dbar: Rational| {
        base(Shape::Type3 { alpha: alpha.clone(), abar: abar.clone(), delta, dbar })
    };
    let with_diff = "with --diff";
    match args.promote {
        PromoteArg::Delta => match (&args.diff, &w.dbar) {
            (Some(s), _) => {
                forbid(&w.delta, "delta", with_diff)?;
                forbid(&w.dbar, "dbar", with_diff)?;
                one(type3(z(), z()), Promotion::DeltaOnLine(s.clone()))
            }
            (None, Some(dbar)) => {
                forbid(&w.delta, "delta", "when delta is promoted")?;
                one(type3(z(), dbar.clone()), Promotion::Delta)
            }
            (None, None) => Err(usage("--promote delta needs --diff or --dbar")),
        },
        PromoteArg::Dbar => match (&args.diff, &w.delta) {
            (Some(s), _) => {
                forbid(&w.delta, "delta", with_diff)?;
                forbid(&w.dbar, "dbar", with_diff)?;
                one(type3(z(), z()), Promotion::DbarOnLine(s.clone()))
            }
            (None, Some(delta)) => {
                forbid(&w.dbar, "dbar", "when dbar is promoted")?;
                one(type3(delta.clone(), z()), Promotion::Dbar)
            }
            (None, None) => candidate_lines(&algebra)
                .into_iter()
                .map(|(s, _)| ScanProblem::new(type3(z(), z()), Promotion::DbarOnLine(s)).map_err(|e| usage(e.to_string())))
                .collect(),
        },
        PromoteArg::Diff => {
            forbid(&args.diff, "diff", "when the difference is promoted")?;
            forbid(&w.delta, "delta", "when the difference is promoted")?;
            let dbar = w.dbar.clone().ok_or_else(|| usage("--promote diff needs --dbar"))?;
            one(type3(z(), dbar), Promotion::Difference)
        }
    }
}

/// The problem with the promoted weights written in terms of `t`.
fn symbolic_problem(sp: &ScanProblem) -> String {
    let t = RatFunc::t();
    describe_problem(&sp.instantiate(&t))
}

fn scan_record(sp: &ScanProblem, r: &ScanReport) -> ScanRecord {
    let f = &r.factorization;
    let root = |value: String, multiplicity: u32| RootRecord { value, multiplicity };
    ScanRecord {
        problem: symbolic_problem(sp),
        promotion: sp.promotion.to_string(),
        unknowns: r.unknowns,
        generic_rank: r.generic_rank,
        generic: r.generic.into(),
        generic_witnesses: r.generic_witnesses.iter().map(WitnessRecord::from_witness).collect(),
        certificate: r.certificate.to_string(),
        factorization: FactorizationRecord {
            content: f.content.render(),
            rational_roots: f.rational_roots.iter().map(|(x, m)| root(x.render(), *m)).collect(),
            quadratics: f.quadratics.iter().map(|(q, m)| root(q.to_string(), *m)).collect(),
            residual: f.residual.to_string(),
        },
        specials: r
            .specials
            .iter()
            .map(|s| SpecialRecord {
                t: s.t.render(),
                minimal_poly: s.minimal_poly.to_string(),
                delta: s.delta.render(),
                dbar: s.dbar.as_ref().map(|d| d.render()),
                dims: s.dims.into(),
                degenerate: s.degenerate,
                witnesses: s.witnesses.iter().map(WitnessRecord::from_witness).collect(),
            })
            .collect(),
        unresolved: r.unresolved.iter().map(|u| u.to_string()).collect(),
    }
}

pub fn scan(args: &ScanArgs) -> Result<Report, CliError> {
    let problems = scan_problems(args)?;
    let mut scans = Vec::new();
    for sp in &problems {
        let r = special_values(sp).map_err(|e| usage(e.to_string()))?;
        scans.push(scan_record(sp, &r));
    }
    let rec = ScanOutput { scans };
    Ok(report(&rec, render::scan(&rec), true))
}

pub fn classify(args: &ClassifyArgs) -> Result<Report, CliError> {
    let algebra = args.algebra.algebra();
    let c = classify_algebra(&algebra, args.caps.resolve()).map_err(|e| usage(e.to_string()))?;
    let ws = |v: &[wbext::cocycle::CocycleWitness<Rational>]| v.iter().map(WitnessRecord::from_witness).collect();
    let origin = |o: &LineOrigin| match o {
        LineOrigin::GDegree(m) => format!("g degree {m}"),
        LineOrigin::FLine => "f line".to_string(),
    };
    let mismatches = match &algebra {
        Algebra::W(b) => Some(compare_classification(&c, &expected_classification(b))),
        Algebra::Virasoro => None,
    };
    let rec = ClassifyRecord {
        algebra: algebra.to_string(),
        lines: c
            .lines
            .iter()
            .map(|l| format!("{} ({})", l.s.render(), l.origins.iter().map(origin).collect::<Vec<_>>().join(", ")))
            .collect(),
        families: c
            .families
            .iter()
            .map(|f| FamilyRecord {
                s: f.s.render(),
                f_dim: f.f_dim,
                g_dim: f.g_dim,
                f_witnesses: ws(&f.f_witnesses),
                g_witnesses: ws(&f.g_witnesses),
            })
            .collect(),
        points: c
            .points
            .iter()
            .map(|p| PointRecord {
                s: p.s.render(),
                delta: p.delta.render(),
                dbar: p.dbar.render(),
                f_dim: p.f_dim,
                g_dim: p.g_dim,
                degenerate: p.degenerate,
                witnesses: p.witnesses.iter().map(WitnessRecord::from_witness).collect(),
            })
            .collect(),
        mismatches,
    };
    let ok = rec.mismatches.as_ref().is_none_or(|m| m.is_empty());
    Ok(report(&rec, render::classify(&rec), ok))
}

fn listed(w: &WitnessReport) -> ListedWitnessRecord {
    let class = match &w.class {
        ClassStatus::Nontrivial(c) => format!("class ({})", c.join(", ")),
        ClassStatus::Coboundary => "coboundary".to_string(),
        ClassStatus::OutsideSpan => "outside span".to_string(),
        ClassStatus::Unchecked => "unchecked".to_string(),
    };
    ListedWitnessRecord {
        label: w.label.clone(),
        witness: w.witness.clone(),
        verifies: w.verifies,
        residuals: w.residuals.clone(),
        class,
    }
}

fn case_record(r: &CaseReport) -> CaseRecord {
    CaseRecord {
        id: r.id.clone(),
        table: r.table.to_string(),
        problem: r.problem.clone(),
        ext_dim: r.ext_dim,
        golden_ext_dim: r.golden_ext_dim,
        stabilization: stabilization_label(&r.stabilization),
        degenerate: r.degenerate,
        engine_basis: r.engine_basis.clone(),
        witnesses: r.witnesses.iter().map(listed).collect(),
        amendments: r.amendments.iter().map(|(w, note)| AmendmentRecord { check: listed(w), note: note.clone() }).collect(),
        listed_rank: r.listed_rank,
        problems: r.problems.clone(),
        verdict: r.verdict.to_string(),
    }
}

pub fn replay(args: &ReplayArgs) -> Result<Report, CliError> {
    let tables = args.table.tables();
    let cases: Vec<_> = tables.iter().flat_map(|&t| table(t)).collect();
    let reports = run_cases(&cases, args.caps.resolve()).map_err(|e| usage(e.to_string()))?;
    let mut summary = SummaryRecord::default();
    for r in &reports {
        match r.verdict {
            Verdict::Pass => summary.pass += 1,
            Verdict::Discrepancy => summary.discrepancy += 1,
            Verdict::Fail => summary.fail += 1,
        }
    }
    let rec = ReplayRecord {
        tables: tables.iter().map(|t| t.to_string()).collect(),
        cases: reports.iter().map(case_record).collect(),
        summary,
    };
    let ok = summary.discrepancy == 0 && summary.fail == 0;
    Ok(report(&rec, render::replay(&rec), ok))
}

pub fn check_axioms(args: &CheckAxiomsArgs) -> Result<Report, CliError> {
    let algebra = args.algebra.algebra();
    let spec = match &algebra {
        Algebra::W(b) => AlgebraSpec::make_wb(b.clone()).map_err(|e| usage(format!("--b: {e}")))?,
        Algebra::Virasoro => AlgebraSpec::make_virasoro(),
    };
    let (module, verdict) = match (&args.alpha, &args.delta, &args.gamma) {
        (Some(a), Some(d), _) => {
            (Some(format!("M({}, {})", a.render(), d.render())), check_module_axioms(&spec, &ModuleSpec::free(a.clone(), d.clone())))
        }
        (_, _, Some(g)) => (Some(format!("C c_{}", g.render())), check_module_axioms(&spec, &ModuleSpec::trivial(g.clone()))),
        _ => (None, check_algebra(&spec)),
    };
    let rec = AxiomRecord {
        algebra: algebra.to_string(),
        module,
        checked: verdict.checked,
        pass: verdict.pass(),
        residuals: verdict.residuals.iter().map(|r| r.describe()).collect(),
    };
    Ok(report(&rec, render::axioms(&rec), rec.pass))
}

fn verify_in<C: Field>(doc: &VerifyDocument) -> Result<VerifyRecord, CliError> {
    let p: ExtProblem<C> = doc.problem.to_problem().map_err(|e| usage(e.to_string()))?;
    let mut checks = Vec::new();
    for (i, w) in doc.basis.iter().enumerate() {
        let witness = w.to_witness::<C>(&format!("basis[{i}]"), doc.problem.shape).map_err(|e| usage(e.to_string()))?;
        let v = verify_witness(&p, &witness);
        checks.push(WitnessCheck {
            witness: w.clone(),
            pass: v.pass(),
            residuals: v.residuals.iter().map(|r| r.describe()).collect(),
        });
    }
    Ok(VerifyRecord { problem: doc.problem.clone(), pass: checks.iter().all(|c| c.pass), witnesses: checks })
}

pub fn verify(args: &VerifyArgs) -> Result<Report, CliError> {
    let path = args.input.display();
    let text = std::fs::read_to_string(&args.input).map_err(|e| usage(format!("--input {path}: {e}")))?;
    let doc: VerifyDocument = serde_json::from_str(&text).map_err(|e| usage(format!("--input {path}: {e}")))?;
    let rec = if doc.problem.is_quadratic() { verify_in::<QuadExt>(&doc)? } else { verify_in::<Rational>(&doc)? };
    Ok(report(&rec, render::verify(&rec), rec.pass))
}
