use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{check_dim, Error, Result};
use crate::scalar::GScalar;

/// Row-major dense matrix of exact scalars.
#[derive(Clone, PartialEq, Eq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<GScalar>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix { rows, cols, data: vec![GScalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = GScalar::one();
        }
        m
    }

    pub fn from_diagonal(diag: &[GScalar]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    /// Builds a matrix from row vectors; all rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<GScalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::InvalidInput("ragged rows".into()));
            }
            data.extend(row);
        }
        Ok(DenseMatrix { rows: r, cols: c, data })
    }

    /// Convenience constructor from `(numerator, denominator)` pairs.
    pub fn from_ratios(rows: &[&[(i64, i64)]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&(n, d)| GScalar::ratio(n, d)).collect())
            .collect();
        Self::from_rows(rows).expect("rectangular literal")
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let rows = rows.iter().map(|r| r.iter().map(|&v| GScalar::from_int(v)).collect()).collect();
        Self::from_rows(rows).expect("rectangular literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[GScalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<GScalar> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(GScalar::is_zero)
    }

    pub fn trace(&self) -> GScalar {
        let mut t = GScalar::zero();
        for i in 0..self.rows.min(self.cols) {
            t += &self[(i, i)];
        }
        t
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        check_dim(self.cols, other.rows)?;
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        let p = a * b;
                        out[(r, c)] += &p;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[GScalar]) -> Result<Vec<GScalar>> {
        check_dim(self.cols, v.len())?;
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = GScalar::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn add(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        check_dim(self.rows, other.rows)?;
        check_dim(self.cols, other.cols)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(DenseMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        check_dim(self.rows, other.rows)?;
        check_dim(self.cols, other.cols)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(DenseMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, k: &GScalar) -> DenseMatrix {
        let data = self.data.iter().map(|a| a * k).collect();
        DenseMatrix { rows: self.rows, cols: self.cols, data }
    }

    /// `self - lambda * I`.
    pub fn shift(&self, lambda: &GScalar) -> Result<DenseMatrix> {
        if !self.is_square() {
            return Err(Error::InvalidInput("shift of a non-square matrix".into()));
        }
        let mut m = self.clone();
        for i in 0..self.rows {
            m[(i, i)] -= lambda;
        }
        Ok(m)
    }

    /// Right multiplication by `diag(d)`, i.e. column `j` scaled by `d[j]`.
    pub fn mul_diag(&self, d: &[GScalar]) -> Result<DenseMatrix> {
        check_dim(self.cols, d.len())?;
        let mut m = self.clone();
        for r in 0..self.rows {
            for (c, dc) in d.iter().enumerate() {
                if !m[(r, c)].is_zero() {
                    m[(r, c)] = &m[(r, c)] * dc;
                }
            }
        }
        Ok(m)
    }

    pub fn pow(&self, k: u32) -> Result<DenseMatrix> {
        if !self.is_square() {
            return Err(Error::InvalidInput("power of a non-square matrix".into()));
        }
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> DenseMatrix {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                m[(i, j)] = self[(r, c)].clone();
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<GScalar>]) -> Result<Self> {
        let n = cols.first().map_or(0, Vec::len);
        let mut m = Self::zeros(n, cols.len());
        for (c, v) in cols.iter().enumerate() {
            check_dim(n, v.len())?;
            for (r, x) in v.iter().enumerate() {
                m[(r, c)] = x.clone();
            }
        }
        Ok(m)
    }
}

impl Index<(usize, usize)> for DenseMatrix {
    type Output = GScalar;
    fn index(&self, (r, c): (usize, usize)) -> &GScalar {
        assert!(r < self.rows && c < self.cols, "matrix index out of bounds");
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for DenseMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut GScalar {
        assert!(r < self.rows && c < self.cols, "matrix index out of bounds");
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Debug for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}", self.row(r))?;
        }
        write!(f, "]")
    }
}
