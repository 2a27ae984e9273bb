use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::arith::build::{d, l, n};
use crate::arith::{render_rational, Field, MultiPoly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    L,
    H,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generator::L => "L",
            Generator::H => "H",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConformalError {
    #[error("b = 0 gives the Heisenberg-Virasoro conformal algebra, which is out of scope")]
    HeisenbergVirasoro,
}

/// A rank one or two Lie conformal algebra, free over C[∂], given by its
/// λ-brackets on the generators. Bracket coefficients are polynomials in
/// (∂, λ).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    generators: Vec<Generator>,
    b: Option<Rational>,
    table: BTreeMap<(Generator, Generator), Vec<(Generator, MultiPoly<Rational>)>>,
}

impl AlgebraSpec {
    /// W(b): `[L_λ L] = (∂+2λ)L`, `[L_λ H] = (∂+(1-b)λ)H`, `[H_λ H] = 0`.
    pub fn make_wb(b: Rational) -> Result<Self, ConformalError> {
        if b == Rational::from_int(0) {
            return Err(ConformalError::HeisenbergVirasoro);
        }
        let one_minus_b = Rational::from_int(1) - &b;
        let mut table = BTreeMap::new();
        table.insert((Generator::L, Generator::L), vec![(Generator::L, d() + l().scale(&Rational::from_int(2)))]);
        table.insert((Generator::L, Generator::H), vec![(Generator::H, d() + l().scale(&one_minus_b))]);
        // skew-symmetric partner: [H_λ L] = -[L_{-λ-∂} H]
        table.insert((Generator::H, Generator::L), vec![(Generator::H, l().scale(&one_minus_b) - d().scale(&b))]);
        table.insert((Generator::H, Generator::H), vec![]);
        Ok(AlgebraSpec { generators: vec![Generator::L, Generator::H], b: Some(b), table })
    }

    pub fn make_virasoro() -> Self {
        let mut table = BTreeMap::new();
        table.insert((Generator::L, Generator::L), vec![(Generator::L, d() + n::<Rational>(2) * l())]);
        AlgebraSpec { generators: vec![Generator::L], b: None, table }
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn has(&self, g: Generator) -> bool {
        self.generators.contains(&g)
    }

    pub fn b(&self) -> Option<&Rational> {
        self.b.as_ref()
    }

    /// `[a_λ b]` as a list of (generator, coefficient). `None` when either
    /// generator is absent.
    pub fn bracket(&self, a: Generator, b: Generator) -> Option<&[(Generator, MultiPoly<Rational>)]> {
        self.table.get(&(a, b)).map(|v| v.as_slice())
    }

    /// Coefficient of `c` in `[a_λ b]`, zero if absent.
    pub fn coefficient(&self, a: Generator, b: Generator, c: Generator) -> Option<MultiPoly<Rational>> {
        let br = self.bracket(a, b)?;
        Some(br.iter().find(|(g, _)| *g == c).map(|(_, p)| p.clone()).unwrap_or_else(MultiPoly::zero))
    }

    /// Replaces one bracket entry; used to exercise the checkers on broken tables.
    pub fn with_bracket(mut self, a: Generator, b: Generator, value: Vec<(Generator, MultiPoly<Rational>)>) -> Self {
        self.table.insert((a, b), value);
        self
    }

    pub fn name(&self) -> String {
        match &self.b {
            Some(b) => format!("W({})", render_rational(b)),
            None => "Vir".to_string(),
        }
    }
}
