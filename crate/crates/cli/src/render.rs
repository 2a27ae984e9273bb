//! Plain-text tables. Every renderer reads only the record it is given, so
//! the table and `--json` output carry the same data.

use std::fmt::Write;

use crate::record::*;

#[derive(Default)]
struct Table {
    rows: Vec<(String, String)>,
}

impl Table {
    fn row(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.rows.push((key.into(), value.to_string()));
        self
    }

    fn list<T>(&mut self, key: &str, items: &[T], show: impl Fn(&T) -> String) -> &mut Self {
        if items.is_empty() {
            return self.row(key, "none");
        }
        for (i, x) in items.iter().enumerate() {
            self.row(format!("{key}[{i}]"), show(x));
        }
        self
    }

    fn finish(&self) -> String {
        let width = self.rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in &self.rows {
            let pad = width - k.chars().count();
            writeln!(out, "{k}{:pad$}  {v}", "").unwrap();
        }
        out
    }
}

fn witness(w: &WitnessRecord) -> String {
    let mut s = format!("f = {}, g = {}", w.f, w.g);
    if let Some(h) = &w.h {
        write!(s, ", h = {h}").unwrap();
    }
    s
}

fn dims(d: &DimsRecord) -> String {
    format!("cocycle {}, coboundary {}, ext {}", d.cocycle, d.coboundary, d.ext)
}

fn opt(x: &Option<String>) -> &str {
    x.as_deref().unwrap_or("-")
}

fn problem(t: &mut Table, p: &ProblemRecord) {
    t.row("algebra", &p.algebra).row("b", opt(&p.b)).row("type", p.shape).row("alpha", &p.alpha);
    t.row("gamma", opt(&p.gamma)).row("abar", opt(&p.abar)).row("delta", &p.delta).row("dbar", opt(&p.dbar));
    t.row("sector", format!("{:?}", p.sector).to_lowercase());
    if let Some(c) = &p.caps {
        t.row("caps", format!("f={} g={} h={} phi={}", c.f, c.g, c.h, c.phi));
    }
}

pub fn output(r: &OutputRecord) -> String {
    let mut t = Table::default();
    problem(&mut t, &r.problem);
    t.row("cocycle_dim", r.cocycle_dim).row("coboundary_dim", r.coboundary_dim).row("ext_dim", r.ext_dim);
    t.list("basis", &r.basis, witness);
    t.row("stabilization", &r.diagnostics.stabilization).row("degenerate", r.diagnostics.degenerate);
    t.finish()
}

pub fn verify(r: &VerifyRecord) -> String {
    let mut t = Table::default();
    problem(&mut t, &r.problem);
    t.list("witness", &r.witnesses, |c| {
        let mut s = format!("{}: {}", if c.pass { "pass" } else { "FAIL" }, witness(&c.witness));
        for res in &c.residuals {
            write!(s, "; {res}").unwrap();
        }
        s
    });
    t.row("pass", r.pass);
    t.finish()
}

fn root(r: &RootRecord) -> String {
    format!("{} (multiplicity {})", r.value, r.multiplicity)
}

pub fn scan(r: &ScanOutput) -> String {
    let mut out = String::new();
    for (i, s) in r.scans.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let mut t = Table::default();
        t.row("problem", &s.problem).row("promotion", &s.promotion);
        t.row("unknowns", s.unknowns).row("generic_rank", s.generic_rank).row("generic", dims(&s.generic));
        t.list("generic_witness", &s.generic_witnesses, witness);
        t.row("certificate", &s.certificate).row("content", &s.factorization.content);
        t.list("rational_root", &s.factorization.rational_roots, root);
        t.list("quadratic", &s.factorization.quadratics, root);
        t.row("residual", &s.factorization.residual);
        t.list("special", &s.specials, |x| {
            let mut v = format!("t = {} [{}]: delta = {}", x.t, x.minimal_poly, x.delta);
            if let Some(d) = &x.dbar {
                write!(v, ", dbar = {d}").unwrap();
            }
            write!(v, "; {}", dims(&x.dims)).unwrap();
            if x.degenerate {
                v.push_str("; degenerate");
            }
            for w in &x.witnesses {
                write!(v, "; {}", witness(w)).unwrap();
            }
            v
        });
        t.list("unresolved", &s.unresolved, String::clone);
        out.push_str(&t.finish());
    }
    out
}

fn witnesses(ws: &[WitnessRecord]) -> String {
    ws.iter().map(witness).collect::<Vec<_>>().join("; ")
}

pub fn classify(r: &ClassifyRecord) -> String {
    let mut t = Table::default();
    t.row("algebra", &r.algebra);
    t.list("line", &r.lines, String::clone);
    t.list("family", &r.families, |f| {
        format!("s = {}: f {}, g {}; {}", f.s, f.f_dim, f.g_dim, witnesses(&[f.f_witnesses.clone(), f.g_witnesses.clone()].concat()))
    });
    t.list("point", &r.points, |p| {
        let mut s = format!("s = {}, delta = {}, dbar = {}: f +{}, g +{}", p.s, p.delta, p.dbar, p.f_dim, p.g_dim);
        if p.degenerate {
            s.push_str(", degenerate");
        }
        if !p.witnesses.is_empty() {
            write!(s, "; {}", witnesses(&p.witnesses)).unwrap();
        }
        s
    });
    if let Some(m) = &r.mismatches {
        t.list("mismatch", m, String::clone);
    }
    t.finish()
}

fn listed(w: &ListedWitnessRecord) -> String {
    let mut s = format!("{}: {} [{}, {}]", w.label, w.witness, if w.verifies { "verifies" } else { "fails" }, w.class);
    for r in &w.residuals {
        write!(s, "; {r}").unwrap();
    }
    s
}

pub fn replay(r: &ReplayRecord) -> String {
    let mut out = String::new();
    let width = r.cases.iter().map(|c| c.id.len()).max().unwrap_or(0);
    for c in &r.cases {
        writeln!(out, "{:width$}  {:11}  ext {} (listed {})  {}", c.id, c.verdict, c.ext_dim, c.golden_ext_dim, c.problem).unwrap();
    }
    for c in r.cases.iter().filter(|c| c.verdict != "pass") {
        let mut t = Table::default();
        t.row("case", &c.id).row("table", &c.table).row("verdict", &c.verdict).row("problem", &c.problem);
        t.row("ext_dim", c.ext_dim).row("golden_ext_dim", c.golden_ext_dim).row("listed_rank", c.listed_rank);
        t.row("stabilization", &c.stabilization).row("degenerate", c.degenerate);
        t.list("engine_basis", &c.engine_basis, String::clone);
        t.list("listed", &c.witnesses, listed);
        t.list("amended", &c.amendments, |a| format!("{} ({})", listed(&a.check), a.note));
        t.list("issue", &c.problems, String::clone);
        out.push('\n');
        out.push_str(&t.finish());
    }
    let s = &r.summary;
    writeln!(out, "\ntables {}: {} pass, {} discrepancy, {} fail", r.tables.join(", "), s.pass, s.discrepancy, s.fail).unwrap();
    out
}

pub fn axioms(r: &AxiomRecord) -> String {
    let mut t = Table::default();
    t.row("algebra", &r.algebra).row("module", opt(&r.module)).row("checked", r.checked).row("pass", r.pass);
    t.list("residual", &r.residuals, String::clone);
    t.finish()
}
