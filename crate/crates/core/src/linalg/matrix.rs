use std::collections::BTreeSet;

use crate::arith::Field;

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<C> {
    rows: usize,
    cols: usize,
    data: Vec<Vec<C>>,
}

impl<C: Field> Matrix<C> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![vec![C::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = C::one();
        }
        m
    }

    /// Builds from rows; every row must have length `cols`.
    pub fn from_rows(cols: usize, data: Vec<Vec<C>>) -> Self {
        assert!(data.iter().all(|r| r.len() == cols), "ragged matrix");
        Matrix { rows: data.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &C {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: C) {
        self.data[i][j] = v;
    }

    pub fn row(&self, i: usize) -> &[C] {
        &self.data[i]
    }

    pub fn into_rows(self) -> Vec<Vec<C>> {
        self.data
    }

    pub fn mul_vec(&self, v: &[C]) -> Vec<C> {
        assert_eq!(v.len(), self.cols);
        self.data
            .iter()
            .map(|r| r.iter().zip(v).fold(C::zero(), |acc, (a, b)| if a.is_zero() || b.is_zero() { acc } else { acc + a.clone() * b }))
            .collect()
    }

    /// Sub-matrix on the given rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let data = rows.iter().map(|&i| cols.iter().map(|&j| self.data[i][j].clone()).collect()).collect();
        Matrix { rows: rows.len(), cols: cols.len(), data }
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.data[i][c].is_zero()) else {
                continue;
            };
            self.data.swap(r, p);
            let inv = self.data[r][c].inverse().expect("nonzero pivot");
            for x in self.data[r][c..].iter_mut() {
                if !x.is_zero() {
                    *x = x.clone() * &inv;
                }
            }
            let pivot_row = self.data[r].clone();
            for i in 0..self.rows {
                if i == r || self.data[i][c].is_zero() {
                    continue;
                }
                let factor = self.data[i][c].clone();
                for (x, p) in self.data[i][c..].iter_mut().zip(&pivot_row[c..]) {
                    if !p.is_zero() {
                        *x = x.clone() - factor.clone() * p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let p = m.rref_in_place();
        (m, p)
    }

    pub fn rank(&self) -> usize {
        self.blocks()
            .iter()
            .map(|(rows, cols)| self.select(rows, cols).rref().1.len())
            .sum()
    }

    /// Canonical nullspace basis: one vector per free column in ascending
    /// order, with a 1 in that column and zeros in every other free column.
    pub fn nullspace(&self) -> Vec<Vec<C>> {
        let mut out: Vec<(usize, Vec<C>)> = Vec::new();
        let mut touched = vec![false; self.cols];
        for (rows, cols) in self.blocks() {
            for &c in &cols {
                touched[c] = true;
            }
            let (red, pivots) = self.select(&rows, &cols).rref();
            let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
            for (fj, &free) in cols.iter().enumerate() {
                if pivot_set.contains(&fj) {
                    continue;
                }
                let mut v = vec![C::zero(); self.cols];
                v[free] = C::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    let x = red.get(r, fj);
                    if !x.is_zero() {
                        v[cols[pc]] = -x.clone();
                    }
                }
                out.push((free, v));
            }
        }
        for (c, t) in touched.iter().enumerate() {
            if !t {
                let mut v = vec![C::zero(); self.cols];
                v[c] = C::one();
                out.push((c, v));
            }
        }
        out.sort_by_key(|(c, _)| *c);
        out.into_iter().map(|(_, v)| v).collect()
    }

    /// Connected components of the row/column incidence graph of the nonzero
    /// entries. Columns with no nonzero entry are omitted; each component
    /// lists its rows and columns in ascending order.
    pub fn blocks(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let n = self.rows + self.cols;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut used = vec![false; n];
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !self.data[i][j].is_zero() {
                    used[i] = true;
                    used[self.rows + j] = true;
                    let (a, b) = (find(&mut parent, i), find(&mut parent, self.rows + j));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        let mut groups: std::collections::BTreeMap<usize, (Vec<usize>, Vec<usize>)> = Default::default();
        for x in 0..n {
            if !used[x] {
                continue;
            }
            let root = find(&mut parent, x);
            let g = groups.entry(root).or_default();
            if x < self.rows {
                g.0.push(x);
            } else {
                g.1.push(x - self.rows);
            }
        }
        let mut out: Vec<_> = groups.into_values().collect();
        out.sort_by_key(|(_, c)| c[0]);
        out
    }
}

/// Nullspace of the matrix whose rows are `rows`, each of length `cols`.
pub fn nullspace<C: Field>(cols: usize, rows: Vec<Vec<C>>) -> Vec<Vec<C>> {
    Matrix::from_rows(cols, rows).nullspace()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, Rational};

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    #[test]
    fn identity_has_trivial_nullspace() {
        assert!(Matrix::<Rational>::identity(2).nullspace().is_empty());
    }

    #[test]
    fn zero_matrix_nullspace_is_standard_basis() {
        let ns = Matrix::<Rational>::zeros(2, 2).nullspace();
        assert_eq!(ns, vec![vec![int(1), int(0)], vec![int(0), int(1)]]);
    }

    #[test]
    fn single_row() {
        assert_eq!(m(&[&[1, 1]]).nullspace(), vec![vec![int(-1), int(1)]]);
    }

    #[test]
    fn block_decomposition_matches_full_elimination() {
        let a = m(&[&[1, 0, 2, 0], &[0, 3, 0, 1], &[2, 0, 4, 0], &[0, 0, 0, 0]]);
        assert_eq!(a.blocks().len(), 2);
        assert_eq!(a.rank(), 2);
        assert_eq!(a.rref().1.len(), 2);
        for v in a.nullspace() {
            assert!(a.mul_vec(&v).iter().all(|x| x == &int(0)));
        }
        assert_eq!(a.nullspace().len(), 2);
    }
}
