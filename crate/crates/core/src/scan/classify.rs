use rayon::prelude::*;

use crate::arith::{Field, QuadExt, Rational};
use crate::cocycle::{solve_ext_with, Algebra, Caps, CocycleWitness, ExtProblem, Sector, Shape, SolveOptions};
use crate::conformal::ConformalError;

use super::problem::{Promotion, ScanError, ScanProblem};
use super::report::ScanReport;

/// Why a weight line `Δ - Δ̄ = s` is scanned.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LineOrigin {
    /// Homogeneous g of degree `m` forces `s = m + b`.
    GDegree(u32),
    /// Virasoro-type f cocycles need `s` in `0..=6`.
    FLine,
}

#[derive(Clone, Debug)]
pub struct LineScan {
    pub s: Rational,
    pub origins: Vec<LineOrigin>,
    pub f: ScanReport,
    /// Absent for the Virasoro algebra.
    pub g: Option<ScanReport>,
}

impl LineScan {
    pub fn generic_f(&self) -> usize {
        self.f.generic.ext
    }

    pub fn generic_g(&self) -> usize {
        self.g.as_ref().map_or(0, |g| g.generic.ext)
    }
}

/// A line `Δ - Δ̄ = s` (with `Δ̄ = t`) along which extensions exist for
/// generic `t`.
#[derive(Clone, Debug)]
pub struct Family {
    pub s: Rational,
    pub f_dim: usize,
    pub g_dim: usize,
    pub f_witnesses: Vec<CocycleWitness<Rational>>,
    pub g_witnesses: Vec<CocycleWitness<Rational>>,
}

/// Isolated weights where the dimension exceeds that of its line.
#[derive(Clone, Debug)]
pub struct Point {
    pub s: Rational,
    pub delta: QuadExt,
    pub dbar: QuadExt,
    pub f_dim: usize,
    pub g_dim: usize,
    pub degenerate: bool,
    pub witnesses: Vec<CocycleWitness<QuadExt>>,
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub algebra: Algebra,
    pub lines: Vec<LineScan>,
    pub families: Vec<Family>,
    pub points: Vec<Point>,
}

impl Classification {
    /// Points with both weights nonzero.
    pub fn irreducible_points(&self) -> impl Iterator<Item = &Point> {
        self.points.iter().filter(|p| !p.degenerate)
    }
}

/// Candidate differences `s = Δ - Δ̄`: `m + b` for `m <= 3` and `0..=6`.
pub fn candidate_lines(algebra: &Algebra) -> Vec<(Rational, Vec<LineOrigin>)> {
    let mut out: Vec<(Rational, Vec<LineOrigin>)> = Vec::new();
    let mut add = |s: Rational, o: LineOrigin| match out.iter_mut().find(|(x, _)| *x == s) {
        Some((_, os)) => os.push(o),
        None => out.push((s, vec![o])),
    };
    if let Some(b) = algebra.b() {
        for m in 0..=3u32 {
            add(Rational::from_int(m as i64) + b, LineOrigin::GDegree(m));
        }
    }
    for s in 0..=6 {
        add(Rational::from_int(s), LineOrigin::FLine);
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

fn line_problem(algebra: &Algebra, s: &Rational, sector: Sector, caps: Caps) -> ScanProblem {
    let z = Rational::from_int(0);
    let base = ExtProblem::new(algebra.clone(), Shape::Type3 { alpha: z.clone(), abar: z.clone(), delta: z.clone(), dbar: z })
        .with_sector(sector)
        .with_caps(caps);
    ScanProblem::new(base, Promotion::DbarOnLine(s.clone())).expect("type 3")
}

/// Scans one line in the f and g sectors separately.
pub fn scan_line(algebra: &Algebra, s: &Rational, caps: Caps) -> Result<(ScanReport, Option<ScanReport>), ScanError> {
    let f = super::special_values(&line_problem(algebra, s, Sector::F, caps))?;
    let g = if algebra.has_h() { Some(super::special_values(&line_problem(algebra, s, Sector::G, caps))?) } else { None };
    Ok((f, g))
}

fn points_on(algebra: &Algebra, line: &LineScan, caps: Caps) -> Result<Vec<Point>, ScanError> {
    let mut ts: Vec<QuadExt> = line.f.specials.iter().map(|x| x.t.clone()).collect();
    if let Some(g) = &line.g {
        for x in &g.specials {
            if !ts.contains(&x.t) {
                ts.push(x.t.clone());
            }
        }
    }
    ts.sort_by(|a, b| (a.rational_part(), a.irrational_part()).cmp(&(b.rational_part(), b.irrational_part())));
    let mut out = Vec::new();
    let generic_total = line.generic_f() + line.generic_g();
    for t in ts {
        let f_dim = line.f.special_at(&t).map_or(line.generic_f(), |x| x.dims.ext);
        let g_dim = match &line.g {
            Some(g) => g.special_at(&t).map_or(g.generic.ext, |x| x.dims.ext),
            None => 0,
        };
        if f_dim + g_dim <= generic_total {
            continue;
        }
        let full = line_problem(algebra, &line.s, Sector::Full, caps).instantiate(&t);
        let sol = solve_ext_with(&full, SolveOptions { stabilize: false })?;
        let (delta, dbar) = match &full.shape {
            Shape::Type3 { delta, dbar, .. } => (delta.clone(), dbar.clone()),
            _ => unreachable!(),
        };
        out.push(Point {
            s: line.s.clone(),
            degenerate: full.shape.is_degenerate(),
            delta,
            dbar,
            f_dim,
            g_dim,
            witnesses: sol.basis,
        });
    }
    Ok(out)
}

/// Every weight pair `(Δ, Δ̄)` with `α = ᾱ` admitting a nontrivial Type3
/// extension, as families along lines and isolated points.
pub fn classify_algebra(algebra: &Algebra, caps: Caps) -> Result<Classification, ScanError> {
    let lines: Result<Vec<LineScan>, ScanError> = candidate_lines(algebra)
        .into_par_iter()
        .map(|(s, origins)| {
            let (f, g) = scan_line(algebra, &s, caps)?;
            Ok(LineScan { s, origins, f, g })
        })
        .collect();
    let lines = lines?;
    let mut families = Vec::new();
    let mut points = Vec::new();
    for line in &lines {
        if line.generic_f() + line.generic_g() > 0 {
            families.push(Family {
                s: line.s.clone(),
                f_dim: line.generic_f(),
                g_dim: line.generic_g(),
                f_witnesses: line.f.generic_witnesses.clone(),
                g_witnesses: line.g.as_ref().map(|g| g.generic_witnesses.clone()).unwrap_or_default(),
            });
        }
        points.extend(points_on(algebra, line, caps)?);
    }
    Ok(Classification { algebra: algebra.clone(), lines, families, points })
}

/// Classification for `W(b)` with default caps.
pub fn classify(b: Rational) -> Result<Classification, ClassifyError> {
    let algebra = Algebra::w(b)?;
    Ok(classify_algebra(&algebra, Caps::default())?)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Algebra(#[from] ConformalError),
    #[error(transparent)]
    Scan(#[from] ScanError),
}
