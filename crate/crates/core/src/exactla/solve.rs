use crate::error::{check_dim, Result};
use crate::exactla::DenseMatrix;
use crate::scalar::GScalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolutionKind {
    Unique,
    AffineFamily,
    Inconsistent,
}

/// Full solution set of `A x = b`: `particular + span(nullspace_basis)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSolution {
    pub kind: SolutionKind,
    pub particular: Option<Vec<GScalar>>,
    pub nullspace_basis: Vec<Vec<GScalar>>,
}

impl LinearSolution {
    pub fn is_consistent(&self) -> bool {
        self.kind != SolutionKind::Inconsistent
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
///
/// The pivot in each column is the first exactly-nonzero entry at or below
/// the current row, and only the first `ncols` columns are eligible.
pub(crate) fn rref(m: &mut DenseMatrix, ncols: usize) -> Vec<usize> {
    let rows = m.rows();
    let cols = m.cols();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                let tmp = m[(p, j)].clone();
                m[(p, j)] = m[(r, j)].clone();
                m[(r, j)] = tmp;
            }
        }
        let inv = m[(r, c)].inv().expect("pivot is nonzero");
        for j in c..cols {
            if !m[(r, j)].is_zero() {
                m[(r, j)] = &m[(r, j)] * &inv;
            }
        }
        for i in 0..rows {
            if i == r || m[(i, c)].is_zero() {
                continue;
            }
            let f = m[(i, c)].clone();
            for j in c..cols {
                if !m[(r, j)].is_zero() {
                    let d = &f * &m[(r, j)];
                    m[(i, j)] -= &d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Solves `A x = b` exactly by Gauss–Jordan elimination.
pub fn solve_linear(a: &DenseMatrix, b: &[GScalar]) -> Result<LinearSolution> {
    check_dim(a.rows(), b.len())?;
    let n = a.cols();
    let mut aug = DenseMatrix::zeros(a.rows(), n + 1);
    for r in 0..a.rows() {
        for c in 0..n {
            aug[(r, c)] = a[(r, c)].clone();
        }
        aug[(r, n)] = b[r].clone();
    }
    let pivots = rref(&mut aug, n);
    let rank = pivots.len();
    if (rank..a.rows()).any(|r| !aug[(r, n)].is_zero()) {
        return Ok(LinearSolution {
            kind: SolutionKind::Inconsistent,
            particular: None,
            nullspace_basis: Vec::new(),
        });
    }
    let mut particular = vec![GScalar::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = aug[(r, n)].clone();
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let nullspace_basis: Vec<Vec<GScalar>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![GScalar::zero(); n];
            v[f] = GScalar::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -&aug[(r, f)];
            }
            v
        })
        .collect();
    let kind = if nullspace_basis.is_empty() { SolutionKind::Unique } else { SolutionKind::AffineFamily };
    Ok(LinearSolution { kind, particular: Some(particular), nullspace_basis })
}

/// Exact rank over `Q(i)`.
pub fn rank(a: &DenseMatrix) -> usize {
    let mut m = a.clone();
    let c = m.cols();
    rref(&mut m, c).len()
}

/// Rank of the matrix whose columns are `vectors`.
pub fn rank_of_vectors(vectors: &[Vec<GScalar>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    DenseMatrix::from_columns(vectors).map(|m| rank(&m)).unwrap_or(0)
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(a: &DenseMatrix) -> Option<DenseMatrix> {
    if !a.is_square() {
        return None;
    }
    let n = a.rows();
    let mut aug = DenseMatrix::zeros(n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            aug[(r, c)] = a[(r, c)].clone();
        }
        aug[(r, n + r)] = GScalar::one();
    }
    if rref(&mut aug, n).len() < n {
        return None;
    }
    let cols: Vec<usize> = (n..2 * n).collect();
    let rows: Vec<usize> = (0..n).collect();
    Some(aug.select(&rows, &cols))
}

/// Exact determinant by elimination.
pub fn determinant(a: &DenseMatrix) -> Option<GScalar> {
    if !a.is_square() {
        return None;
    }
    let n = a.rows();
    let mut m = a.clone();
    let mut det = GScalar::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
            return Some(GScalar::zero());
        };
        if p != c {
            for j in 0..n {
                let tmp = m[(p, j)].clone();
                m[(p, j)] = m[(c, j)].clone();
                m[(c, j)] = tmp;
            }
            det = -det;
        }
        let piv = m[(c, c)].clone();
        det = &det * &piv;
        let inv = piv.inv().expect("nonzero pivot");
        for i in c + 1..n {
            if m[(i, c)].is_zero() {
                continue;
            }
            let f = &m[(i, c)] * &inv;
            for j in c..n {
                if !m[(c, j)].is_zero() {
                    let d = &f * &m[(c, j)];
                    m[(i, j)] -= &d;
                }
            }
        }
    }
    Some(det)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<GScalar> {
        xs.iter().map(|&x| GScalar::from_int(x)).collect()
    }

    #[test]
    fn identity_system_is_unique() {
        let s = solve_linear(&DenseMatrix::identity(2), &v(&[2, 3])).unwrap();
        assert_eq!(s.kind, SolutionKind::Unique);
        assert_eq!(s.particular, Some(v(&[2, 3])));
        assert!(s.nullspace_basis.is_empty());
    }

    #[test]
    fn non_quasi_invertible_system_is_inconsistent() {
        // L_{e1} - I in the algebra e1^2 = e1, e2^2 = e1 + e2.
        let a = DenseMatrix::from_ints(&[&[0, 0], &[0, -1]]);
        let s = solve_linear(&a, &v(&[1, 0])).unwrap();
        assert_eq!(s.kind, SolutionKind::Inconsistent);
        assert!(s.particular.is_none());
    }

    #[test]
    fn rank_one_system_is_affine() {
        let a = DenseMatrix::from_ints(&[&[1, 1], &[2, 2]]);
        let s = solve_linear(&a, &v(&[1, 2])).unwrap();
        assert_eq!(s.kind, SolutionKind::AffineFamily);
        assert_eq!(s.particular, Some(v(&[1, 0])));
        assert_eq!(s.nullspace_basis.len(), 1);
        // Same line as span{(1, -1)}.
        let mut both = s.nullspace_basis.clone();
        both.push(v(&[1, -1]));
        assert_eq!(rank_of_vectors(&both), 1);
        assert_eq!(a.mul_vec(&s.nullspace_basis[0]).unwrap(), v(&[0, 0]));
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        assert!(solve_linear(&DenseMatrix::identity(2), &v(&[1])).is_err());
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&DenseMatrix::zeros(3, 3)), 0);
        assert_eq!(rank(&DenseMatrix::identity(4)), 4);
        let m = DenseMatrix::from_ratios(&[&[(1, 6), (-1, 4)], &[(1, 6), (-1, 4)]]);
        assert_eq!(rank(&m), 1);
    }

    #[test]
    fn inverse_and_determinant() {
        let m = DenseMatrix::from_ratios(&[&[(-1, 2), (3, 4)], &[(-1, 3), (1, 2)]]);
        assert_eq!(determinant(&m), Some(GScalar::zero()));
        assert!(inverse(&m).is_none());
        let p = DenseMatrix::from_ints(&[&[2, 1], &[1, 1]]);
        let pi = inverse(&p).unwrap();
        assert_eq!(p.mul(&pi).unwrap(), DenseMatrix::identity(2));
        assert_eq!(determinant(&p), Some(GScalar::one()));
    }
}
