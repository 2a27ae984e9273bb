#![allow(dead_code)]

pub mod oracle;

use rand::rngs::StdRng;
use rand::Rng;
use wbext::arith::{rat, Rational};

/// Random rational with numerator in `-n..=n` and denominator in `1..=d`.
pub fn random_rational(rng: &mut StdRng, n: i64, d: i64) -> Rational {
    rat(rng.gen_range(-n..=n), rng.gen_range(1..=d))
}

pub fn random_nonzero(rng: &mut StdRng, n: i64, d: i64) -> Rational {
    loop {
        let r = random_rational(rng, n, d);
        if r != rat(0, 1) {
            return r;
        }
    }
}
