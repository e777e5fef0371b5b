//! Dense matrices and vectors over ℚ(√2, τ).

use std::fmt;
use std::ops::Mul;

use crate::field::FieldScalar;

/// A coordinate vector with exact entries.
pub type Vector = Vec<FieldScalar>;

pub fn dot(a: &[FieldScalar], b: &[FieldScalar]) -> FieldScalar {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = FieldScalar::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

pub fn scale(v: &[FieldScalar], s: &FieldScalar) -> Vector {
    v.iter().map(|x| x * s).collect()
}

pub fn sub(a: &[FieldScalar], b: &[FieldScalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn neg(a: &[FieldScalar]) -> Vector {
    a.iter().map(|x| -x).collect()
}

pub fn is_zero(v: &[FieldScalar]) -> bool {
    v.iter().all(FieldScalar::is_zero)
}

/// Lexicographic numeric order, largest first.
pub fn cmp_desc(a: &[FieldScalar], b: &[FieldScalar]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b) {
        match y.numeric_cmp(x) {
            std::cmp::Ordering::Equal => continue,
            o => return o,
        }
    }
    a.len().cmp(&b.len())
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldScalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![FieldScalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = FieldScalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<FieldScalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_columns(cols: Vec<Vec<FieldScalar>>) -> Self {
        Self::from_rows(cols).transpose()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[FieldScalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn trace(&self) -> FieldScalar {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    pub fn mul_vec(&self, v: &[FieldScalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = &self[(i, j)];
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    /// `MᵀM = I`.
    pub fn is_orthogonal(&self) -> bool {
        self.rows == self.cols && (&self.transpose() * self).is_identity()
    }

    /// Rank by exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            let Some(pivot) = (rank..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(rank, pivot);
            let inv = m[(rank, col)].invert().expect("pivot is nonzero");
            for r in 0..m.rows {
                if r != rank && !m[(r, col)].is_zero() {
                    let factor = &m[(r, col)] * &inv;
                    for c in col..m.cols {
                        let delta = &factor * &m[(rank, c)];
                        m[(r, c)] -= &delta;
                    }
                }
            }
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        rank
    }

    /// Determinant by exact elimination; square matrices only.
    pub fn determinant(&self) -> FieldScalar {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut m = self.clone();
        let n = m.rows;
        let mut det = FieldScalar::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !m[(r, col)].is_zero()) else {
                return FieldScalar::zero();
            };
            if pivot != col {
                m.swap_rows(col, pivot);
                det = -det;
            }
            let p = m[(col, col)].clone();
            det = &det * &p;
            let inv = p.invert().expect("pivot is nonzero");
            for r in col + 1..n {
                if !m[(r, col)].is_zero() {
                    let factor = &m[(r, col)] * &inv;
                    for c in col..n {
                        let delta = &factor * &m[(col, c)];
                        m[(r, c)] -= &delta;
                    }
                }
            }
        }
        det
    }

    /// Solves `self · x = b` for a matrix with independent columns.
    /// Returns `None` when `b` is outside the column span.
    pub fn solve(&self, b: &[FieldScalar]) -> Option<Vector> {
        assert_eq!(self.rows, b.len());
        let n = self.cols;
        // Augmented elimination to reduced row echelon form.
        let mut m = Matrix::zeros(self.rows, n + 1);
        for i in 0..self.rows {
            for j in 0..n {
                m[(i, j)] = self[(i, j)].clone();
            }
            m[(i, n)] = b[i].clone();
        }
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..n {
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m[(row, col)].invert().expect("pivot is nonzero");
            for c in col..=n {
                m[(row, c)] = &m[(row, c)] * &inv;
            }
            for r in 0..m.rows {
                if r != row && !m[(r, col)].is_zero() {
                    let factor = m[(r, col)].clone();
                    for c in col..=n {
                        let delta = &factor * &m[(row, c)];
                        m[(r, c)] -= &delta;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        if pivots.len() < n {
            return None;
        }
        if (row..m.rows).any(|r| !m[(r, n)].is_zero()) {
            return None;
        }
        Some((0..n).map(|i| m[(i, n)].clone()).collect())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn scaled(&self, s: &FieldScalar) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = FieldScalar;
    fn index(&self, (i, j): (usize, usize)) -> &FieldScalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut FieldScalar {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul<&Matrix> for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix dimension mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let p = a * b;
                        out[(i, j)] += &p;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_rows()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| FieldScalar::from_int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_and_determinant() {
        let a = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(a.rank(), 1);
        assert!(a.determinant().is_zero());
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(b.determinant(), FieldScalar::from_int(-1));
        assert!(b.is_orthogonal());
    }

    #[test]
    fn solve_in_span() {
        let a = m(&[&[1, 0], &[0, 1], &[1, 1]]);
        let x = a.solve(&[3.into(), 4.into(), 7.into()]).unwrap();
        assert_eq!(x, vec![FieldScalar::from_int(3), FieldScalar::from_int(4)]);
        assert!(a.solve(&[3.into(), 4.into(), 8.into()]).is_none());
    }
}
