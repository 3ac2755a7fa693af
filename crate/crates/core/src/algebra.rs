//! Evolution algebras given by a structure matrix relative to a natural
//! basis `e_0, ..., e_{n-1}`.
//!
//! Column `i` of the structure matrix holds the coordinates of `e_i^2`:
//! `e_i^2 = sum_k w[k][i] e_k`. Distinct basis vectors multiply to zero, so
//! for `a = sum a_i e_i` and `b = sum b_i e_i`
//!
//! ```text
//! ab = M (a_0 b_0, ..., a_{n-1} b_{n-1})^T
//! ```
//!
//! and the multiplication operator `L_a` has matrix `M diag(a)`.

use std::collections::BTreeSet;

use crate::error::{check_dim, check_index, Error, Result};
use crate::exactla::{self, DenseMatrix};
use crate::scalar::GScalar;

/// Sorted set of basis indexes (0-based).
pub type IndexSet = BTreeSet<usize>;

#[derive(Clone, PartialEq, Eq)]
pub struct EvolutionAlgebra {
    n: usize,
    /// `columns[i]` lists the nonzero `(k, w_ki)`, sorted by `k`.
    columns: Vec<Vec<(usize, GScalar)>>,
    labels: Option<Vec<String>>,
}

impl EvolutionAlgebra {
    /// Builds the algebra whose structure matrix is `m` (entry `(k, i)` is
    /// the coefficient of `e_k` in `e_i^2`).
    pub fn from_structure_matrix(m: &DenseMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::InvalidInput(format!(
                "structure matrix must be square, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        if m.rows() == 0 {
            return Err(Error::InvalidInput("dimension must be at least 1".into()));
        }
        let n = m.rows();
        let columns = (0..n)
            .map(|i| (0..n).filter(|&k| !m[(k, i)].is_zero()).map(|k| (k, m[(k, i)].clone())).collect())
            .collect();
        Ok(EvolutionAlgebra { n, columns, labels: None })
    }

    /// Builds an algebra from the squares of the basis vectors.
    pub fn from_squares(squares: &[Vec<GScalar>]) -> Result<Self> {
        let n = squares.len();
        for sq in squares {
            check_dim(n, sq.len())?;
        }
        let m = DenseMatrix::from_columns(squares)?;
        Self::from_structure_matrix(&m)
    }

    /// Diagonal algebra `e_i^2 = d_i e_i`.
    pub fn diagonal(d: &[GScalar]) -> Result<Self> {
        Self::from_structure_matrix(&DenseMatrix::from_diagonal(d))
    }

    /// The algebra of dimension `n` with identically zero product.
    pub fn zero_product(n: usize) -> Result<Self> {
        Self::from_structure_matrix(&DenseMatrix::zeros(n, n))
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        check_dim(self.n, labels.len())?;
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Nonzero entries of column `i`, i.e. the expansion of `e_i^2`.
    pub fn column(&self, i: usize) -> &[(usize, GScalar)] {
        &self.columns[i]
    }

    /// Structure constant `w_ki`: the coefficient of `e_k` in `e_i^2`.
    pub fn omega(&self, k: usize, i: usize) -> GScalar {
        self.columns[i]
            .binary_search_by_key(&k, |(r, _)| *r)
            .map(|p| self.columns[i][p].1.clone())
            .unwrap_or_default()
    }

    pub fn structure_matrix(&self) -> DenseMatrix {
        let mut m = DenseMatrix::zeros(self.n, self.n);
        for (i, col) in self.columns.iter().enumerate() {
            for (k, w) in col {
                m[(*k, i)] = w.clone();
            }
        }
        m
    }

    pub fn basis_vector(&self, i: usize) -> Result<Element> {
        check_index(i, self.n)?;
        Ok(Element::basis(self.n, i))
    }

    /// `e_i^2` as an element.
    pub fn square_of_basis(&self, i: usize) -> Result<Element> {
        check_index(i, self.n)?;
        let mut coeffs = vec![GScalar::zero(); self.n];
        for (k, w) in &self.columns[i] {
            coeffs[*k] = w.clone();
        }
        Ok(Element::new(coeffs))
    }

    /// Indexes `k` with `w_rk != 0` for the given row `r`, i.e. the basis
    /// vectors whose squares involve `e_r`.
    pub fn row_support(&self, r: usize) -> IndexSet {
        (0..self.n).filter(|&i| !self.omega(r, i).is_zero()).collect()
    }

    fn check(&self, a: &Element) -> Result<()> {
        check_dim(self.n, a.dim())
    }

    pub fn product(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        let mut out = vec![GScalar::zero(); self.n];
        for i in a.support().intersection(b.support()) {
            let ab = &a.coeffs[*i] * &b.coeffs[*i];
            for (k, w) in &self.columns[*i] {
                out[*k] += &(&ab * w);
            }
        }
        Ok(Element::new(out))
    }

    /// Matrix of `L_a = R_a`, namely `M diag(a)`.
    pub fn left_mul_matrix(&self, a: &Element) -> Result<DenseMatrix> {
        self.check(a)?;
        let mut m = DenseMatrix::zeros(self.n, self.n);
        for i in a.support() {
            for (k, w) in &self.columns[*i] {
                m[(*k, *i)] = w * &a.coeffs[*i];
            }
        }
        Ok(m)
    }

    /// Left-normed power `a^k = a(a(...(aa)))`, equal to `L_a^{k-1}(a)`.
    pub fn element_power(&self, a: &Element, k: usize) -> Result<Element> {
        self.check(a)?;
        if k == 0 {
            return Err(Error::InvalidInput("element power needs k >= 1".into()));
        }
        let mut p = a.clone();
        for _ in 1..k {
            if p.is_zero() {
                break;
            }
            p = self.product(a, &p)?;
        }
        Ok(p)
    }

    /// The unit `sum (1/w_ii) e_i`, which exists exactly when the structure
    /// matrix is diagonal with nonzero diagonal.
    pub fn unit_of(&self) -> Option<Element> {
        if !self.is_nonzero_trivial() {
            return None;
        }
        let coeffs = (0..self.n).map(|i| self.omega(i, i).inv().expect("nonzero diagonal")).collect();
        Some(Element::new(coeffs))
    }

    /// Indexes with `e_i^2 = 0`. The algebra is non-degenerate iff this is
    /// empty.
    pub fn annihilator(&self) -> IndexSet {
        (0..self.n).filter(|&i| self.columns[i].is_empty()).collect()
    }

    pub fn is_degenerate(&self) -> bool {
        !self.annihilator().is_empty()
    }

    /// Diagonal structure matrix with every diagonal entry nonzero.
    pub fn is_nonzero_trivial(&self) -> bool {
        self.columns.iter().enumerate().all(|(i, col)| col.len() == 1 && col[0].0 == i)
    }

    /// Whether the unitization is again an evolution algebra, which happens
    /// exactly for non-zero trivial algebras of finite dimension.
    pub fn unitization_is_evolution(&self) -> bool {
        self.is_nonzero_trivial()
    }

    pub fn is_structure_diagonal(&self) -> bool {
        self.columns.iter().enumerate().all(|(i, col)| col.iter().all(|(k, _)| *k == i))
    }

    /// A basis is natural when it is a basis and distinct members multiply
    /// to zero.
    pub fn verify_natural_basis(&self, candidate: &BasisCandidate) -> Result<bool> {
        if candidate.vectors.len() != self.n {
            return Ok(false);
        }
        for v in &candidate.vectors {
            self.check(v)?;
        }
        if candidate.rank() < self.n {
            return Ok(false);
        }
        for (p, u) in candidate.vectors.iter().enumerate() {
            for v in &candidate.vectors[p + 1..] {
                if !self.product(u, v)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

impl std::fmt::Debug for EvolutionAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("EvolutionAlgebra")
            .field("n", &self.n)
            .field("structure", &self.structure_matrix())
            .finish()
    }
}

/// Element `a = sum a_i e_i` with its support cached.
#[derive(Clone, PartialEq, Eq)]
pub struct Element {
    coeffs: Vec<GScalar>,
    support: IndexSet,
}

impl Element {
    pub fn new(coeffs: Vec<GScalar>) -> Self {
        let support = coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| i).collect();
        Element { coeffs, support }
    }

    pub fn zero(n: usize) -> Self {
        Element::new(vec![GScalar::zero(); n])
    }

    pub fn basis(n: usize, i: usize) -> Self {
        let mut c = vec![GScalar::zero(); n];
        c[i] = GScalar::one();
        Element::new(c)
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Element::new(c.iter().map(|&v| GScalar::from_int(v)).collect())
    }

    pub fn from_ratios(c: &[(i64, i64)]) -> Self {
        Element::new(c.iter().map(|&(n, d)| GScalar::ratio(n, d)).collect())
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[GScalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &GScalar {
        &self.coeffs[i]
    }

    pub fn support(&self) -> &IndexSet {
        &self.support
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn add(&self, o: &Element) -> Element {
        Element::new(self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Element) -> Element {
        Element::new(self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &GScalar) -> Element {
        Element::new(self.coeffs.iter().map(|a| a * k).collect())
    }

    pub fn into_coeffs(self) -> Vec<GScalar> {
        self.coeffs
    }
}

impl From<Vec<GScalar>> for Element {
    fn from(c: Vec<GScalar>) -> Self {
        Element::new(c)
    }
}

impl std::fmt::Debug for Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.coeffs)
    }
}

impl std::fmt::Display for Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A family of `n` vectors, written in coordinates of the reference basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisCandidate {
    pub vectors: Vec<Element>,
}

impl BasisCandidate {
    pub fn new(vectors: Vec<Element>) -> Self {
        BasisCandidate { vectors }
    }

    /// The reference basis itself.
    pub fn standard(n: usize) -> Self {
        BasisCandidate { vectors: (0..n).map(|i| Element::basis(n, i)).collect() }
    }

    pub fn rank(&self) -> usize {
        let cols: Vec<Vec<GScalar>> = self.vectors.iter().map(|v| v.coeffs.clone()).collect();
        exactla::rank_of_vectors(&cols)
    }

    fn matrix(&self) -> Result<DenseMatrix> {
        let cols: Vec<Vec<GScalar>> = self.vectors.iter().map(|v| v.coeffs.clone()).collect();
        DenseMatrix::from_columns(&cols)
    }
}

/// Two bases are related when one is obtained from the other by a
/// permutation and nonzero rescaling, i.e. the change-of-coordinates matrix
/// has exactly one nonzero entry in every row and every column.
pub fn bases_related(c1: &BasisCandidate, c2: &BasisCandidate) -> Result<bool> {
    let n = c1.vectors.len();
    check_dim(n, c2.vectors.len())?;
    let p = c1.matrix()?;
    let q = c2.matrix()?;
    if !p.is_square() || !q.is_square() {
        return Err(Error::InvalidInput("basis vectors must have one coordinate per member".into()));
    }
    let pinv = exactla::inverse(&p).ok_or_else(|| Error::InvalidInput("first family is rank deficient".into()))?;
    if exactla::rank(&q) < n {
        return Err(Error::InvalidInput("second family is rank deficient".into()));
    }
    let change = pinv.mul(&q)?;
    let rows_ok = (0..n).all(|r| (0..n).filter(|&c| !change[(r, c)].is_zero()).count() == 1);
    let cols_ok = (0..n).all(|c| (0..n).filter(|&r| !change[(r, c)].is_zero()).count() == 1);
    Ok(rows_ok && cols_ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(rows: &[&[(i64, i64)]]) -> EvolutionAlgebra {
        EvolutionAlgebra::from_structure_matrix(&DenseMatrix::from_ratios(rows)).unwrap()
    }

    fn ints(rows: &[&[i64]]) -> EvolutionAlgebra {
        EvolutionAlgebra::from_structure_matrix(&DenseMatrix::from_ints(rows)).unwrap()
    }

    fn strict_example() -> EvolutionAlgebra {
        alg(&[&[(-1, 2), (3, 4)], &[(-1, 3), (1, 2)]])
    }

    #[test]
    fn product_of_worked_example() {
        let a = strict_example();
        let x = Element::from_ints(&[3, 2]);
        let y = Element::from_ratios(&[(2, 1), (4, 3)]);
        assert_eq!(a.product(&x, &y).unwrap(), Element::from_ratios(&[(-1, 1), (-2, 3)]));
    }

    #[test]
    fn distinct_basis_vectors_are_orthogonal() {
        let a = strict_example();
        let p = a.product(&Element::basis(2, 0), &Element::basis(2, 1)).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn idempotent_basis_vector() {
        let a = ints(&[&[1, 1], &[0, 1]]);
        let e1 = Element::basis(2, 0);
        assert_eq!(a.product(&e1, &e1).unwrap(), e1);
    }

    #[test]
    fn left_multiplication_matrices() {
        let a = strict_example();
        assert!(a.left_mul_matrix(&Element::zero(2)).unwrap().is_zero());
        let sq = a.square_of_basis(0).unwrap();
        assert_eq!(sq, Element::from_ratios(&[(-1, 2), (-1, 3)]));
        let l = a.left_mul_matrix(&sq).unwrap();
        assert_eq!(l, DenseMatrix::from_ratios(&[&[(1, 4), (-1, 4)], &[(1, 6), (-1, 6)]]));

        let d = EvolutionAlgebra::diagonal(&[GScalar::from_int(2), GScalar::ratio(1, 3)]).unwrap();
        let x = Element::from_ints(&[5, -6]);
        assert_eq!(
            d.left_mul_matrix(&x).unwrap(),
            DenseMatrix::from_diagonal(&[GScalar::from_int(10), GScalar::from_int(-2)])
        );
    }

    #[test]
    fn powers_in_swap_algebra() {
        let a = ints(&[&[0, 1], &[1, 0]]);
        let e1 = Element::basis(2, 0);
        assert!(a.element_power(&e1, 3).unwrap().is_zero());
        let s = Element::from_ints(&[1, 1]);
        for k in 2..6 {
            assert_eq!(a.element_power(&s, k).unwrap(), s);
        }
        assert_eq!(a.element_power(&e1, 1).unwrap(), e1);
        assert!(a.element_power(&e1, 0).is_err());
    }

    #[test]
    fn units() {
        let d = EvolutionAlgebra::diagonal(&[GScalar::from_int(2), GScalar::from_int(4)]).unwrap();
        assert_eq!(d.unit_of(), Some(Element::from_ratios(&[(1, 2), (1, 4)])));
        assert!(ints(&[&[1, 1], &[0, 1]]).unit_of().is_none());
        assert!(EvolutionAlgebra::zero_product(3).unwrap().unit_of().is_none());
    }

    #[test]
    fn annihilators() {
        assert_eq!(ints(&[&[0, 0], &[0, 1]]).annihilator(), IndexSet::from([0]));
        assert!(ints(&[&[1, 0], &[0, 1]]).annihilator().is_empty());
        assert_eq!(EvolutionAlgebra::zero_product(3).unwrap().annihilator(), IndexSet::from([0, 1, 2]));
    }

    #[test]
    fn triviality_and_unitization() {
        let d = EvolutionAlgebra::diagonal(&[GScalar::from_int(1), GScalar::from_int(-2), GScalar::ratio(1, 3)])
            .unwrap();
        assert!(d.is_nonzero_trivial());
        assert!(!ints(&[&[0, 0], &[0, 1]]).is_nonzero_trivial());
        assert!(!ints(&[&[1, 1], &[0, 1]]).is_nonzero_trivial());
        assert!(ints(&[&[1, 0], &[0, 1]]).unitization_is_evolution());
        assert!(!ints(&[&[1, 1], &[0, 1]]).unitization_is_evolution());
        assert!(!EvolutionAlgebra::zero_product(2).unwrap().unitization_is_evolution());
    }

    #[test]
    fn natural_bases() {
        let a = ints(&[&[0, 0], &[0, 1]]);
        assert!(a.verify_natural_basis(&BasisCandidate::standard(2)).unwrap());
        let other = BasisCandidate::new(vec![Element::from_ints(&[1, 0]), Element::from_ints(&[1, 1])]);
        assert!(a.verify_natural_basis(&other).unwrap());
        let twice = BasisCandidate::new(vec![Element::from_ints(&[1, 0]), Element::from_ints(&[1, 0])]);
        assert!(!a.verify_natural_basis(&twice).unwrap());
    }

    #[test]
    fn relatedness() {
        let std2 = BasisCandidate::standard(2);
        let swapped = BasisCandidate::new(vec![Element::from_ints(&[0, 2]), Element::from_ints(&[2, 0])]);
        assert!(bases_related(&std2, &swapped).unwrap());
        let other = BasisCandidate::new(vec![Element::from_ints(&[1, 0]), Element::from_ints(&[1, 1])]);
        assert!(!bases_related(&std2, &other).unwrap());

        // In e1^2 = e1, e2^2 = -e1 the pair {e1 + e2, e1 - e2} multiplies to
        // 2 e1, but {e1 + i e2, e1 - i e2} is an unrelated natural basis.
        let a = ints(&[&[1, -1], &[0, 0]]);
        let pm = BasisCandidate::new(vec![Element::from_ints(&[1, 1]), Element::from_ints(&[1, -1])]);
        assert!(!a.verify_natural_basis(&pm).unwrap());
        assert!(!bases_related(&std2, &pm).unwrap());
        let i = GScalar::i();
        let pmi = BasisCandidate::new(vec![
            Element::new(vec![GScalar::one(), i.clone()]),
            Element::new(vec![GScalar::one(), -i]),
        ]);
        assert!(a.verify_natural_basis(&pmi).unwrap());
        assert!(!bases_related(&std2, &pmi).unwrap());

        let deficient = BasisCandidate::new(vec![Element::from_ints(&[1, 0]), Element::from_ints(&[2, 0])]);
        assert!(bases_related(&std2, &deficient).is_err());
    }

    #[test]
    fn dimension_mismatch() {
        let a = strict_example();
        assert!(a.product(&Element::zero(3), &Element::zero(2)).is_err());
    }
}
