use crate::arith::{Rational, UniPoly};

/// Outcome of fraction-free elimination over `Q[t]`.
#[derive(Clone, Debug)]
pub struct BareissResult {
    pub rank: usize,
    /// Pivot entries in elimination order. The last one is a nonzero
    /// maximal minor, so the rank at a specialization `t = t0` equals
    /// `rank` unless some pivot vanishes at `t0`.
    pub pivots: Vec<UniPoly<Rational>>,
}

/// Fraction-free Gaussian elimination with column skipping. Every division
/// is exact; a failed division is a bug and panics.
pub fn bareiss(mut m: Vec<Vec<UniPoly<Rational>>>, cols: usize) -> BareissResult {
    let rows = m.len();
    let mut prev = UniPoly::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // lowest-degree nonzero entry keeps intermediate growth down
        let Some(p) = (r..rows).filter(|&i| !m[i][c].is_zero()).min_by_key(|&i| m[i][c].degree()) else {
            continue;
        };
        m.swap(r, p);
        let piv = m[r][c].clone();
        for i in r + 1..rows {
            let lead = m[i][c].clone();
            for j in c..cols {
                let x = &(&piv * &m[i][j]) - &(&lead * &m[r][j]);
                m[i][j] = if x.is_zero() { x } else { x.exact_div(&prev).expect("Bareiss division is exact") };
            }
        }
        pivots.push(piv.clone());
        prev = piv;
        r += 1;
    }
    BareissResult { rank: r, pivots }
}
