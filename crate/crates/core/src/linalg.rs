//! Exact Gaussian elimination over a [`Field`].

use crate::field::{Field, FieldElement};

/// Dense row-major matrix.
#[derive(Clone, Debug)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    /// Builds a matrix whose `j`-th column is `columns[j]` (padded with zeros).
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<FieldElement>]) -> Self {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (i, v) in col.iter().enumerate().take(rows) {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.data[i * self.cols + j] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduces to reduced row echelon form in place; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(row, pr);
            let inv = self.get(row, col).inv();
            for j in col..self.cols {
                let v = self.get(row, j) * &inv;
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in col..self.cols {
                    let v = self.get(r, j) - &(&factor * self.get(row, j));
                    self.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    /// Basis of `{v : M v = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<FieldElement>> {
        let mut m = self.clone();
        let pivots = m.rref();
        free_vectors(&m, &pivots, self.cols)
    }

    /// Solves `M v = rhs`: a particular solution (free variables zero) and a
    /// nullspace basis, or `None` when inconsistent.
    pub fn solve(&self, rhs: &[FieldElement]) -> Option<(Vec<FieldElement>, Vec<Vec<FieldElement>>)> {
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + 1);
        for (i, r) in rhs.iter().enumerate().take(self.rows) {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, r.clone());
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut particular = vec![self.field.zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            particular[c] = aug.get(r, self.cols).clone();
        }
        Some((particular, free_vectors(&aug, &pivots, self.cols)))
    }
}

fn free_vectors(reduced: &Matrix, pivots: &[usize], cols: usize) -> Vec<Vec<FieldElement>> {
    let field = reduced.field;
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![field.zero(); cols];
            v[free] = field.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -reduced.get(r, free);
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    #[test]
    fn nullspace_of_rank_one() {
        let q = Field::Rational;
        let cols = vec![vec![q.from_i64(1), q.from_i64(2)], vec![q.from_i64(2), q.from_i64(4)]];
        let m = Matrix::from_columns(q, 2, &cols);
        let ns = m.nullspace();
        assert_eq!(ns, vec![vec![q.from_i64(-2), q.from_i64(1)]]);
    }

    #[test]
    fn solve_and_inconsistency() {
        let f5 = make_field("F5").unwrap();
        let e = |n| f5.from_i64(n);
        let m = Matrix::from_columns(f5, 2, &[vec![e(1), e(0)], vec![e(1), e(0)]]);
        let (part, ns) = m.solve(&[e(3), e(0)]).unwrap();
        assert_eq!(part, vec![e(3), e(0)]);
        assert_eq!(ns, vec![vec![e(4), e(1)]]);
        assert!(m.solve(&[e(3), e(1)]).is_none());
    }
}
