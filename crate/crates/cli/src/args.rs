use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use wbext::arith::{parse_rational, Rational};
use wbext::cocycle::{Algebra, Caps, Sector};
use wbext::replay::TableSelection;

/// Exact extension spaces of conformal modules over W(b) and the Virasoro
/// conformal algebra.
#[derive(Parser, Debug)]
#[command(name = "wbext", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    /// Emit JSON instead of a table.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the output document to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Solve one extension problem.
    Solve(SolveArgs),
    /// Scan a weight as a parameter and report where the dimension jumps.
    Scan(ScanArgs),
    /// Classify type 3 extensions for one algebra.
    Classify(ClassifyArgs),
    /// Replay the published classification tables.
    Replay(ReplayArgs),
    /// Check the conformal module axioms.
    CheckAxioms(CheckAxiomsArgs),
    /// Re-verify the witnesses in a JSON document.
    Verify(VerifyArgs),
}

/// `p/q` or an integer; decimals are rejected.
pub fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn nonzero_rational(s: &str) -> Result<Rational, String> {
    let r = rational(s)?;
    if r == Rational::from_integer(0.into()) {
        return Err("b must be nonzero".to_string());
    }
    Ok(r)
}

/// `f,g,h,phi`.
pub fn caps(s: &str) -> Result<Caps, String> {
    let parts: Result<Vec<u32>, _> = s.split(',').map(|x| x.trim().parse::<u32>()).collect();
    match parts.as_deref() {
        Ok([f, g, h, phi]) => Ok(Caps { f: *f, g: *g, h: *h, phi: *phi }),
        _ => Err(format!("expected four comma-separated degree caps f,g,h,phi, got `{s}`")),
    }
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct AlgebraArgs {
    /// Parameter b of W(b).
    #[arg(long, value_name = "R", allow_hyphen_values = true, value_parser = nonzero_rational)]
    pub b: Option<Rational>,
    /// Use the Virasoro conformal algebra instead of W(b).
    #[arg(long)]
    pub virasoro: bool,
}

impl AlgebraArgs {
    pub fn algebra(&self) -> Algebra {
        match &self.b {
            Some(b) => Algebra::W(b.clone()),
            None => Algebra::Virasoro,
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct CapsArgs {
    /// Degree caps `f,g,h,phi` for all unknowns at once.
    #[arg(long = "caps", env = "WB_EXT_CAPS", value_name = "F,G,H,PHI", value_parser = caps)]
    pub all: Option<Caps>,
    #[arg(long, value_name = "N")]
    pub cap_f: Option<u32>,
    #[arg(long, value_name = "N")]
    pub cap_g: Option<u32>,
    #[arg(long, value_name = "N")]
    pub cap_h: Option<u32>,
    #[arg(long, value_name = "N")]
    pub cap_phi: Option<u32>,
}

impl CapsArgs {
    /// Single-cap flags override `--caps`, which overrides the defaults.
    pub fn resolve(&self) -> Caps {
        let mut c = self.all.unwrap_or_default();
        c.f = self.cap_f.unwrap_or(c.f);
        c.g = self.cap_g.unwrap_or(c.g);
        c.h = self.cap_h.unwrap_or(c.h);
        c.phi = self.cap_phi.unwrap_or(c.phi);
        c
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SectorArg {
    F,
    G,
    #[default]
    Full,
}

impl From<SectorArg> for Sector {
    fn from(s: SectorArg) -> Self {
        match s {
            SectorArg::F => Sector::F,
            SectorArg::G => Sector::G,
            SectorArg::Full => Sector::Full,
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct WeightArgs {
    #[arg(long, value_name = "R", allow_hyphen_values = true, value_parser = rational)]
    pub alpha: Option<Rational>,
    #[arg(long, value_name = "R", allow_hyphen_values = true, value_parser = rational)]
    pub gamma: Option<Rational>,
    #[arg(long, value_name = "R", allow_hyphen_values = true, value_parser = rational)]
    pub abar: Option<Rational>,
    #[arg(long, value_name = "R", allow_hyphen_values = true, value_parser = rational)]
    pub delta: Option<Rational>,
    #[arg(long, value_name = "R", allow_hyphen_values = true, value_parser = rational)]
    pub dbar: Option<Rational>,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    /// 1: C c_γ by M(α,Δ); 2: M(α,Δ) by C c_γ; 3: M(ᾱ,Δ̄) by M(α,Δ).
    #[arg(long = "type", value_name = "1|2|3", value_parser = clap::value_parser!(u8).range(1..=3))]
    pub shape: u8,
    #[command(flatten)]
    pub algebra: AlgebraArgs,
    #[command(flatten)]
    pub weights: WeightArgs,
    #[arg(long, value_enum, default_value_t)]
    pub sector: SectorArg,
    #[command(flatten)]
    pub caps: CapsArgs,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum PromoteArg {
    Delta,
    Dbar,
    /// `Δ - Δ̄` with `Δ̄` fixed.
    Diff,
}

#[derive(Args, Debug)]
pub struct ScanArgs {
    #[command(flatten)]
    pub algebra: AlgebraArgs,
    #[arg(long = "type", value_name = "1|2|3", default_value_t = 3, value_parser = clap::value_parser!(u8).range(1..=3))]
    pub shape: u8,
    #[arg(long, value_enum, default_value_t)]
    pub sector: SectorArg,
    /// Weight that becomes the parameter t.
    #[arg(long, value_enum)]
    pub promote: PromoteArg,
    /// Fix `Δ - Δ̄`; without it (and without the other weight) every
    /// candidate line is scanned.
    #[arg(long, value_name = "R", allow_hyphen_values = true, value_parser = rational)]
    pub diff: Option<Rational>,
    #[command(flatten)]
    pub weights: WeightArgs,
    #[command(flatten)]
    pub caps: CapsArgs,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub algebra: AlgebraArgs,
    #[command(flatten)]
    pub caps: CapsArgs,
}

#[derive(Args, Debug)]
pub struct ReplayArgs {
    /// theo1, theo2, theo3, lemma-g, vir-th2, vir-th3, vir-th4 or all.
    #[arg(long, value_name = "NAME")]
    pub table: TableSelection,
    #[command(flatten)]
    pub caps: CapsArgs,
}

#[derive(Args, Debug)]
pub struct CheckAxiomsArgs {
    #[command(flatten)]
    pub algebra: AlgebraArgs,
    /// With --delta: check M(α, Δ).
    #[arg(long, value_name = "R", allow_hyphen_values = true, value_parser = rational, requires = "delta")]
    pub alpha: Option<Rational>,
    #[arg(long, value_name = "R", allow_hyphen_values = true, value_parser = rational, requires = "alpha")]
    pub delta: Option<Rational>,
    /// Check the one-dimensional module C c_γ.
    #[arg(long, value_name = "R", allow_hyphen_values = true, value_parser = rational, conflicts_with = "alpha")]
    pub gamma: Option<Rational>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// JSON document with `problem` and `basis` (or `witnesses`).
    #[arg(long, value_name = "PATH")]
    pub input: PathBuf,
}
