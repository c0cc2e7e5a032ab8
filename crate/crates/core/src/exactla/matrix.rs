//! Dense rational matrices with fraction-free elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::scalar::Scalar;
use super::subspace::Subspace;
use crate::{Error, Result};

/// A dense `rows x cols` matrix of rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Scalar::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        for r in &rows {
            if r.len() != ncols {
                return Err(Error::DimensionMismatch(format!(
                    "ragged rows: expected {ncols} columns, got {}",
                    r.len()
                )));
            }
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(ambient: usize, cols: &[Vec<Scalar>]) -> Result<Self> {
        for c in cols {
            if c.len() != ambient {
                return Err(Error::DimensionMismatch(format!(
                    "column of length {}, ambient {ambient}",
                    c.len()
                )));
            }
        }
        Ok(Matrix::from_fn(ambient, cols.len(), |r, c| cols[c][r].clone()))
    }

    /// Convenience constructor from machine integers.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        Matrix::from_fn(nrows, ncols, |r, c| Scalar::from_int(rows[r][c]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.entries[r * self.cols + c]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    fn check_same_shape(&self, other: &Matrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    *out.at_mut(r, c) += &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = vec![Scalar::zero(); self.rows];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for r in 0..self.rows {
                let a = self.at(r, c);
                if !a.is_zero() {
                    out[r] += &(a * x);
                }
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form, computed with fraction-free (Bareiss)
    /// forward elimination over the integers followed by a rational
    /// back-substitution pass. The RREF is unique, hence canonical.
    pub fn rref(&self) -> Rref {
        // Clear denominators row by row.
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let lcm = row
                    .iter()
                    .filter(|e| !e.is_zero())
                    .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
                row.iter()
                    .map(|e| {
                        let q = e.as_rational() * BigRational::from_integer(lcm.clone());
                        debug_assert!(q.is_integer());
                        q.to_integer()
                    })
                    .collect()
            })
            .collect();

        let mut pivots: Vec<usize> = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0usize;
        for c in 0..self.cols {
            if r >= self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, pr);
            for i in r + 1..self.rows {
                if m[i][c].is_zero() {
                    // Still renormalize the row so later exact divisions stay valid.
                    for j in c + 1..self.cols {
                        if m[i][j].is_zero() {
                            continue;
                        }
                        let num = &m[r][c] * &m[i][j];
                        let (q, rem) = num.div_rem(&prev);
                        assert!(rem.is_zero(), "Bareiss exact division failed");
                        m[i][j] = q;
                    }
                    continue;
                }
                for j in c + 1..self.cols {
                    let num = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                    let (q, rem) = num.div_rem(&prev);
                    assert!(rem.is_zero(), "Bareiss exact division failed");
                    m[i][j] = q;
                }
                m[i][c] = BigInt::zero();
            }
            prev = m[r][c].clone();
            pivots.push(c);
            r += 1;
        }
        let rank = pivots.len();

        // Rational back substitution on the echelon rows.
        let mut rows: Vec<Vec<Scalar>> = m
            .into_iter()
            .take(rank)
            .map(|row| row.into_iter().map(Scalar::from_bigint).collect())
            .collect();
        for i in (0..rank).rev() {
            let pc = pivots[i];
            let inv = rows[i][pc].recip().expect("pivot is nonzero");
            for e in rows[i][pc..].iter_mut() {
                *e *= &inv;
            }
            for u in 0..i {
                let factor = rows[u][pc].clone();
                if factor.is_zero() {
                    continue;
                }
                for j in pc..self.cols {
                    let t = &factor * &rows[i][j];
                    rows[u][j] -= &t;
                }
            }
        }

        Rref {
            cols: self.cols,
            rows,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// Canonical basis of `{ v : self * v = 0 }`.
    pub fn kernel_basis(&self) -> Subspace {
        self.kernel_basis_with_free_columns().0
    }

    /// Kernel basis plus the free column index of each basis vector. Basis
    /// vector `b` has entry 1 at its own free column and 0 at every other free
    /// column, so coordinates in this basis are read off by extraction.
    pub fn kernel_basis_with_free_columns(&self) -> (Subspace, Vec<usize>) {
        let rref = self.rref();
        let pivot_set: Vec<usize> = rref.pivots.clone();
        let mut basis = Vec::new();
        let mut free_cols = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivot_set {
            is_pivot[p] = true;
        }
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (row, &pc) in pivot_set.iter().enumerate() {
                v[pc] = -&rref.rows[row][free];
            }
            basis.push(v);
            free_cols.push(free);
        }
        (Subspace::from_basis_unchecked(self.cols, basis), free_cols)
    }

    /// Canonical basis of the column space: the nonzero rows of the RREF of
    /// the transpose, read back as column vectors.
    pub fn image_basis(&self) -> Subspace {
        let rref = self.transpose().rref();
        Subspace::from_basis_unchecked(self.rows, rref.rows)
    }

    /// One exact solution of `self * x = rhs`, or `None` when inconsistent.
    pub fn solve(&self, rhs: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if rhs.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "rhs length {} for {}x{} system",
                rhs.len(),
                self.rows,
                self.cols
            )));
        }
        let aug = Matrix::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                rhs[r].clone()
            }
        });
        let rref = aug.rref();
        if rref.pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (row, &pc) in rref.pivots.iter().enumerate() {
            x[pc] = rref.rows[row][self.cols].clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self.at(r, c).clone()
            } else if c - n == r {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        let rref = aug.rref();
        if rref.rank() < n || rref.pivots.iter().take(n).enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(Matrix::from_fn(n, n, |r, c| rref.rows[r][n + c].clone()))
    }
}

/// Reduced row echelon form: `rank` many nonzero rows plus pivot columns.
#[derive(Debug, Clone)]
pub struct Rref {
    cols: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }
}

/// Componentwise vector helpers used throughout the crate.
pub fn vec_zero(n: usize) -> Vec<Scalar> {
    vec![Scalar::zero(); n]
}

pub fn vec_is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_neg(a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|x| -x).collect()
}

pub fn vec_scale(a: &[Scalar], s: &Scalar) -> Vec<Scalar> {
    a.iter().map(|x| x * s).collect()
}

/// `acc += s * a`, skipping zero work.
pub fn vec_add_scaled(acc: &mut [Scalar], a: &[Scalar], s: &Scalar) {
    if s.is_zero() {
        return;
    }
    debug_assert_eq!(acc.len(), a.len());
    for (dst, src) in acc.iter_mut().zip(a) {
        if !src.is_zero() {
            *dst += &(src * s);
        }
    }
}

/// Standard basis vector `e_i` of length `n`.
pub fn basis_vec(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec_zero(n);
    v[i] = Scalar::one();
    v
}
