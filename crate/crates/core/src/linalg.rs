//! Dense exact linear algebra: row reduction over fields and Smith normal
//! form over the integers.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

#[derive(Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![S::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_columns(rows: usize, cols: &[Vec<S>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
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

    pub fn column(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn mul(&self, other: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out: Matrix<S> = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = S::zero();
                for (j, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        acc = acc + self[(i, j)].clone() * x.clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn transpose(&self) -> Matrix<S> {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Determinant of a square matrix by fraction-free elimination; every
    /// division is exact in an integral domain.
    pub fn determinant(&self) -> S {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut prev = S::one();
        let mut negate = false;
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[(i, k)].is_zero()) else {
                return S::zero();
            };
            if p != k {
                for j in 0..n {
                    let tmp = a[(p, j)].clone();
                    a[(p, j)] = a[(k, j)].clone();
                    a[(k, j)] = tmp;
                }
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = a[(i, j)].clone() * a[(k, k)].clone() - a[(i, k)].clone() * a[(k, j)].clone();
                    a[(i, j)] = v / prev.clone();
                }
                a[(i, k)] = S::zero();
            }
            prev = a[(k, k)].clone();
        }
        let det = if n == 0 { S::one() } else { a[(n - 1, n - 1)].clone() };
        if negate {
            -det
        } else {
            det
        }
    }
}

impl<S> std::ops::Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.data[i * self.cols + j]
    }
}

impl<S> std::ops::IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.data[i * self.cols + j]
    }
}

impl<S: Scalar> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form together with the pivot columns.
pub struct Echelon<S> {
    pub matrix: Matrix<S>,
    pub pivots: Vec<usize>,
}

impl<S: Field> Matrix<S> {
    pub fn rref(&self) -> Echelon<S> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m[(r, c)].inv();
            for j in c..m.cols {
                m[(r, j)] = m[(r, j)].clone() * inv.clone();
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone();
                for j in c..m.cols {
                    let sub = factor.clone() * m[(r, j)].clone();
                    if !sub.is_zero() {
                        m[(i, j)] = m[(i, j)].clone() - sub;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of `{ v | self * v = 0 }`.
    pub fn nullspace(&self) -> Vec<Vec<S>> {
        let Echelon { matrix: e, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![S::zero(); self.cols];
                v[f] = S::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -e[(r, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Some `x` with `self * x = b`, if the system is consistent.
    pub fn solve(&self, b: &[S]) -> Option<Vec<S>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let Echelon { matrix: e, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![S::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = e[(r, self.cols)].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix<S>> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = S::one();
        }
        let Echelon { matrix: e, pivots } = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = e[(i, n + j)].clone();
            }
        }
        Some(inv)
    }
}

/// Is `v` in the column span of the given vectors?
pub fn in_span<S: Field>(dim: usize, spanning: &[Vec<S>], v: &[S]) -> bool {
    if v.iter().all(|x| x.is_zero()) {
        return true;
    }
    if spanning.is_empty() {
        return false;
    }
    Matrix::from_columns(dim, spanning).solve(v).is_some()
}

/// Invariant factors (nonzero diagonal entries) of the Smith normal form of
/// an integer matrix, in divisibility order.
pub fn smith_invariants(m: &Matrix<i64>) -> Result<Vec<i64>> {
    let mut a: Vec<Vec<i128>> =
        (0..m.rows()).map(|i| (0..m.cols()).map(|j| m[(i, j)] as i128).collect()).collect();
    let rows = m.rows();
    let cols = m.cols();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: smallest nonzero absolute value in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut done = true;
            let p = a[t][t];
            for i in t + 1..rows {
                if a[i][t] != 0 {
                    let q = a[i][t].div_euclid(p);
                    for j in t..cols {
                        a[i][j] = checked(a[i][j] - q * a[t][j])?;
                    }
                    if a[i][t] != 0 {
                        done = false;
                    }
                }
            }
            for j in t + 1..cols {
                if a[t][j] != 0 {
                    let q = a[t][j].div_euclid(p);
                    for i in t..rows {
                        a[i][j] = checked(a[i][j] - q * a[i][t])?;
                    }
                    if a[t][j] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                // divisibility: the pivot must divide the rest of the block
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| a[i][j] % p != 0);
                match bad {
                    None => break,
                    Some((i, _)) => {
                        for j in t..cols {
                            a[t][j] = checked(a[t][j] + a[i][j])?;
                        }
                        continue;
                    }
                }
            }
            // move the smallest entry of row/column t to the pivot
            let mut best = (t, t);
            for i in t..rows {
                if a[i][t] != 0 && a[i][t].abs() < a[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..cols {
                if a[t][j] != 0 && a[t][j].abs() < a[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            a.swap(t, best.0);
            for row in a.iter_mut() {
                row.swap(t, best.1);
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag.into_iter()
        .map(|d| i64::try_from(d).map_err(|_| Error::Overflow("Smith normal form".into())))
        .collect()
}

fn checked(v: i128) -> Result<i128> {
    if v.unsigned_abs() > (i64::MAX as u128) << 16 {
        Err(Error::Overflow("Smith normal form".into()))
    } else {
        Ok(v)
    }
}
