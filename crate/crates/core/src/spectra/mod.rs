//! Spectrum and m-spectrum of elements.
//!
//! For `a = sum a_i e_i` the multiplication operator is `L_a = M diag(a)`.
//!
//! * `λ` lies in the m-spectrum iff `L_a - λI` is singular, with `0` always
//!   present when the algebra has no unit.
//! * For `λ != 0`, `λ` lies in the spectrum iff `a/λ` is not
//!   quasi-invertible, which is the case iff `(L_a - λI) b = a` has no
//!   solution. Such a `λ` is necessarily an eigenvalue of `L_a`, so only the
//!   m-spectrum candidates need testing.
//!
//! Eigenvalues are found exactly when they are Gaussian rationals. Whatever
//! remains in the characteristic polynomial is either reported as an exact
//! residual factor or, in numeric mode, approximated and flagged.

mod semisimple;
mod subspace;

pub use semisimple::{
    m_semisimple_check, spectrally_semisimple_check, CheckOptions, Counterexample, SemisimplicityVerdict, Verdict,
    Witness,
};
pub use subspace::{nilpotent_on_subspace, SubspaceNilpotency, SYMBOLIC_MONOMIAL_BUDGET};

use num_complex::Complex64;

use crate::algebra::{Element, EvolutionAlgebra, IndexSet};
use crate::descent::DescentGraph;
use crate::error::{Error, Result};
use crate::exactla::{self, numeric_roots, DenseMatrix, Poly, DEFAULT_TOL};
use crate::scalar::GScalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// Only Gaussian-rational points; irrational factors stay symbolic.
    #[default]
    Exact,
    /// Also approximate the roots of the residual factor.
    Numeric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certainty {
    /// Every point is exact and the residual factor is trivial.
    Exact,
    /// Part of the answer is a residual factor or floating-point.
    Mixed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumKind {
    Spectrum,
    MSpectrum,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumResult {
    pub kind: SpectrumKind,
    /// Distinct exact points, sorted.
    pub exact_points: Vec<GScalar>,
    /// Floating-point points coming from the residual factor (numeric mode).
    pub numeric_points: Vec<Complex64>,
    /// Part of the characteristic polynomial of `L_a` without
    /// Gaussian-rational roots.
    pub residual: Poly,
    pub contains_zero: bool,
    pub certainty: Certainty,
}

impl SpectrumResult {
    pub fn has_nonzero_point(&self) -> bool {
        self.exact_points.iter().any(|p| !p.is_zero()) || !self.numeric_points.is_empty()
    }

    /// Largest modulus among all points, `0` for an empty set.
    pub fn radius(&self) -> f64 {
        let exact = self.exact_points.iter().map(GScalar::abs_f64);
        let numeric = self.numeric_points.iter().map(|z| z.norm());
        exact.chain(numeric).fold(0.0, f64::max)
    }
}

fn sorted_distinct(mut pts: Vec<GScalar>) -> Vec<GScalar> {
    pts.sort_by(GScalar::canonical_cmp);
    pts.dedup();
    pts
}

fn certainty_of(residual: &Poly) -> Certainty {
    if residual.degree().unwrap_or(0) == 0 {
        Certainty::Exact
    } else {
        Certainty::Mixed
    }
}

/// Distinct numeric roots of the residual (multiplicity collapsed).
fn residual_points(residual: &Poly, mode: Mode, tol: f64) -> Result<Vec<Complex64>> {
    if mode == Mode::Exact || residual.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let sf = residual.squarefree_decomposition().into_iter().fold(Poly::one(), |acc, (f, _)| acc.mul(&f));
    numeric_roots(&sf, tol)
}

pub fn m_spectrum(algebra: &EvolutionAlgebra, a: &Element, mode: Mode) -> Result<SpectrumResult> {
    m_spectrum_with_tol(algebra, a, mode, DEFAULT_TOL)
}

pub fn m_spectrum_with_tol(algebra: &EvolutionAlgebra, a: &Element, mode: Mode, tol: f64) -> Result<SpectrumResult> {
    let l = algebra.left_mul_matrix(a)?;
    if algebra.is_nonzero_trivial() {
        // Diagonal operator: the points are read off directly.
        let mut pts: Vec<GScalar> = a.support().iter().map(|&i| &algebra.omega(i, i) * a.coeff(i)).collect();
        if a.support().len() < algebra.dim() {
            pts.push(GScalar::zero());
        }
        let exact_points = sorted_distinct(pts);
        let contains_zero = exact_points.iter().any(GScalar::is_zero);
        return Ok(SpectrumResult {
            kind: SpectrumKind::MSpectrum,
            exact_points,
            numeric_points: Vec::new(),
            residual: Poly::one(),
            contains_zero,
            certainty: Certainty::Exact,
        });
    }
    let cp = exactla::char_poly(&l)?;
    let split = exactla::rational_roots(&cp)?;
    let mut pts = split.roots;
    pts.push(GScalar::zero());
    let exact_points = sorted_distinct(pts);
    let numeric_points = residual_points(&split.residual, mode, tol)?;
    Ok(SpectrumResult {
        kind: SpectrumKind::MSpectrum,
        exact_points,
        numeric_points,
        certainty: certainty_of(&split.residual),
        residual: split.residual,
        contains_zero: true,
    })
}

/// Whether `(L - λI) b = rhs` is solvable, decided in floating point by
/// comparing ranks.
fn numerically_solvable(l: &DenseMatrix, rhs: &[GScalar], lambda: Complex64, tol: f64) -> bool {
    let n = l.rows();
    let mut aug: Vec<Vec<Complex64>> = (0..n)
        .map(|r| {
            let mut row: Vec<Complex64> = (0..n).map(|c| l[(r, c)].to_complex64()).collect();
            row[r] -= lambda;
            row.push(rhs[r].to_complex64());
            row
        })
        .collect();
    let scale = aug.iter().flatten().map(|z| z.norm()).fold(1.0, f64::max);
    let eps = tol * scale;
    let rank = |m: &mut Vec<Vec<Complex64>>, cols: usize| -> usize {
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..n).max_by(|&x, &y| m[x][c].norm().total_cmp(&m[y][c].norm())) else {
                break;
            };
            if m[p][c].norm() <= eps {
                continue;
            }
            m.swap(p, r);
            for i in r + 1..n {
                let f = m[i][c] / m[r][c];
                for j in c..m[i].len() {
                    let d = f * m[r][j];
                    m[i][j] -= d;
                }
            }
            r += 1;
            if r == n {
                break;
            }
        }
        r
    };
    let mut coeff_only: Vec<Vec<Complex64>> = aug.iter().map(|row| row[..n].to_vec()).collect();
    rank(&mut coeff_only, n) == rank(&mut aug, n + 1)
}

pub fn spectrum(algebra: &EvolutionAlgebra, a: &Element, mode: Mode) -> Result<SpectrumResult> {
    spectrum_with_tol(algebra, a, mode, DEFAULT_TOL)
}

pub fn spectrum_with_tol(algebra: &EvolutionAlgebra, a: &Element, mode: Mode, tol: f64) -> Result<SpectrumResult> {
    let ms = m_spectrum_with_tol(algebra, a, mode, tol)?;
    let l = algebra.left_mul_matrix(a)?;
    let mut pts = Vec::new();
    for lambda in ms.exact_points.iter().filter(|p| !p.is_zero()) {
        let shifted = l.shift(lambda)?;
        if !exactla::solve_linear(&shifted, a.coeffs())?.is_consistent() {
            pts.push(lambda.clone());
        }
    }
    let zero_in = algebra.unit_of().is_none() || a.support().len() < algebra.dim();
    if zero_in {
        pts.push(GScalar::zero());
    }
    let numeric_points: Vec<Complex64> =
        ms.numeric_points.iter().copied().filter(|&z| !numerically_solvable(&l, a.coeffs(), z, tol)).collect();
    Ok(SpectrumResult {
        kind: SpectrumKind::Spectrum,
        exact_points: sorted_distinct(pts),
        numeric_points,
        certainty: ms.certainty,
        residual: ms.residual,
        contains_zero: zero_in,
    })
}

/// Solves `a + b - ab = 0`, i.e. `(L_a - I) b = a`.
pub fn quasi_inverse(algebra: &EvolutionAlgebra, a: &Element) -> Result<Option<Element>> {
    let l = algebra.left_mul_matrix(a)?;
    let sol = exactla::solve_linear(&l.shift(&GScalar::one())?, a.coeffs())?;
    Ok(sol.particular.map(Element::new))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralRadii {
    pub rho: f64,
    pub rho_m: f64,
    /// `ρ(a) = 0` is certain.
    pub rho_zero_exact: bool,
    /// `ρ_m(a) = 0` is certain; this is exactly nilpotency of `L_a`.
    pub rho_m_zero_exact: bool,
}

pub fn spectral_radii(algebra: &EvolutionAlgebra, a: &Element) -> Result<SpectralRadii> {
    let ms = m_spectrum(algebra, a, Mode::Numeric)?;
    let s = spectrum(algebra, a, Mode::Numeric)?;
    let rho_m_zero_exact = exactla::is_nilpotent_matrix(&algebra.left_mul_matrix(a)?)?;
    let rho_zero_exact = rho_m_zero_exact
        || (s.exact_points.iter().all(GScalar::is_zero) && ms.residual.degree().unwrap_or(0) == 0);
    Ok(SpectralRadii { rho: s.radius(), rho_m: ms.radius(), rho_zero_exact, rho_m_zero_exact })
}

/// The block of `L_a` that carries all its nonzero eigenvalues.
#[derive(Debug, Clone, PartialEq)]
pub struct SupportRestriction {
    /// Support of `a` followed by the remaining first-generation
    /// descendants of the support.
    pub indices: Vec<usize>,
    /// Structure matrix restricted to `indices x indices`.
    pub submatrix: DenseMatrix,
    /// Coefficients of `a` on `indices` (zero past the support).
    pub padded_alpha: Vec<GScalar>,
}

impl SupportRestriction {
    /// `submatrix * diag(padded_alpha)`.
    pub fn operator(&self) -> DenseMatrix {
        self.submatrix.mul_diag(&self.padded_alpha).expect("square by construction")
    }

    /// Exact eigenvalues of the restricted operator with `0` adjoined.
    pub fn m_spectrum_points(&self) -> Result<(Vec<GScalar>, Poly)> {
        let split = exactla::rational_roots(&exactla::char_poly(&self.operator())?)?;
        let mut pts = split.roots;
        pts.push(GScalar::zero());
        Ok((sorted_distinct(pts), split.residual))
    }
}

pub fn support_restriction(algebra: &EvolutionAlgebra, a: &Element) -> Result<SupportRestriction> {
    if a.dim() != algebra.dim() {
        return Err(Error::DimensionMismatch { expected: algebra.dim(), found: a.dim() });
    }
    if a.is_zero() {
        return Err(Error::InvalidInput("support restriction of the zero element".into()));
    }
    let support: &IndexSet = a.support();
    let d1 = DescentGraph::new(algebra).first_generation_of_set(support)?;
    let mut indices: Vec<usize> = support.iter().copied().collect();
    indices.extend(d1.difference(support).copied());
    let m = algebra.structure_matrix();
    let submatrix = m.select(&indices, &indices);
    let padded_alpha = indices.iter().map(|&i| a.coeff(i).clone()).collect();
    Ok(SupportRestriction { indices, submatrix, padded_alpha })
}
