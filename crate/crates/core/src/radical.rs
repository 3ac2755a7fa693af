//! Modular ideals and the Jacobson radical.
//!
//! An index `i` is *modular* when `w_ii != 0` and `e_i` occurs in no other
//! square, i.e. row `i` of the structure matrix vanishes off the diagonal.
//! Each modular index `i` gives the codimension-one maximal modular ideal
//! `lin{e_j : j != i}` with modular unit `e_i / w_ii`, and the radical is the
//! span of the non-modular indexes.

use crate::algebra::{Element, EvolutionAlgebra, IndexSet};
use crate::descent::DescentGraph;
use crate::error::{check_index, Error, Result};
use crate::exactla::rank_of_vectors;
use crate::scalar::GScalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealBasis {
    /// `lin{e_i : i in support}`.
    CoordinateSpan,
    /// `lin(generators)`.
    VectorSpan,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealDescriptor {
    /// For coordinate spans, the spanning indexes. For vector spans, the
    /// indexes whose squares were used as generators.
    pub support: IndexSet,
    pub basis_kind: IdealBasis,
    /// Linearly independent generators (vector spans only).
    pub generators: Vec<Element>,
    pub modular_unit: Option<Element>,
}

impl IdealDescriptor {
    pub fn coordinate(support: IndexSet) -> Self {
        IdealDescriptor { support, basis_kind: IdealBasis::CoordinateSpan, generators: Vec::new(), modular_unit: None }
    }

    /// Vector span of `candidates`, keeping only those that enlarge the span.
    pub fn spanned_by(support: IndexSet, candidates: impl IntoIterator<Item = Element>) -> Self {
        let mut generators: Vec<Element> = Vec::new();
        let mut cols: Vec<Vec<GScalar>> = Vec::new();
        for c in candidates {
            if c.is_zero() {
                continue;
            }
            cols.push(c.coeffs().to_vec());
            if rank_of_vectors(&cols) > generators.len() {
                generators.push(c);
            } else {
                cols.pop();
            }
        }
        IdealDescriptor { support, basis_kind: IdealBasis::VectorSpan, generators, modular_unit: None }
    }

    pub fn dimension(&self) -> usize {
        match self.basis_kind {
            IdealBasis::CoordinateSpan => self.support.len(),
            IdealBasis::VectorSpan => self.generators.len(),
        }
    }

    pub fn contains(&self, a: &Element) -> bool {
        match self.basis_kind {
            IdealBasis::CoordinateSpan => a.support().is_subset(&self.support),
            IdealBasis::VectorSpan => {
                if a.is_zero() {
                    return true;
                }
                let mut cols: Vec<Vec<GScalar>> = self.generators.iter().map(|g| g.coeffs().to_vec()).collect();
                cols.push(a.coeffs().to_vec());
                rank_of_vectors(&cols) == self.generators.len()
            }
        }
    }

    /// Spanning vectors regardless of representation.
    pub fn spanning_vectors(&self, n: usize) -> Vec<Element> {
        match self.basis_kind {
            IdealBasis::CoordinateSpan => self.support.iter().map(|&i| Element::basis(n, i)).collect(),
            IdealBasis::VectorSpan => self.generators.clone(),
        }
    }

    /// Checks `e_i - e_i u` lies in the ideal for every basis vector.
    pub fn unit_contract_holds(&self, algebra: &EvolutionAlgebra) -> Result<bool> {
        let Some(u) = &self.modular_unit else {
            return Ok(false);
        };
        for i in 0..algebra.dim() {
            let e = Element::basis(algebra.dim(), i);
            let d = e.sub(&algebra.product(&e, u)?);
            if !self.contains(&d) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadicalClass {
    /// The radical is zero.
    Semisimple,
    /// The algebra equals its radical.
    Radical,
    Intermediate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalReport {
    pub modular_indexes: IndexSet,
    pub radical_support: IndexSet,
    pub classification: RadicalClass,
    /// `w_ii` for each modular index, in increasing index order: the
    /// structure constants of `A / Rad(A)` in the image basis.
    pub quotient_diag: Vec<GScalar>,
}

pub fn modular_indexes(algebra: &EvolutionAlgebra) -> IndexSet {
    (0..algebra.dim())
        .filter(|&i| {
            let row = algebra.row_support(i);
            row.len() == 1 && row.contains(&i)
        })
        .collect()
}

pub fn maximal_modular_ideals(algebra: &EvolutionAlgebra) -> Vec<IdealDescriptor> {
    let n = algebra.dim();
    modular_indexes(algebra)
        .into_iter()
        .map(|i| {
            let w = algebra.omega(i, i);
            let mut ideal = IdealDescriptor::coordinate((0..n).filter(|&j| j != i).collect());
            ideal.modular_unit = Some(Element::basis(n, i).scale(&w.inv().expect("modular index has w_ii != 0")));
            ideal
        })
        .collect()
}

pub fn quotient_mod_radical(algebra: &EvolutionAlgebra) -> Vec<GScalar> {
    modular_indexes(algebra)
        .into_iter()
        .map(|i| {
            debug_assert_eq!(algebra.row_support(i), IndexSet::from([i]));
            algebra.omega(i, i)
        })
        .collect()
}

pub fn jacobson_radical(algebra: &EvolutionAlgebra) -> RadicalReport {
    let modular = modular_indexes(algebra);
    let radical_support: IndexSet = (0..algebra.dim()).filter(|i| !modular.contains(i)).collect();
    let classification = if radical_support.is_empty() {
        RadicalClass::Semisimple
    } else if modular.is_empty() {
        RadicalClass::Radical
    } else {
        RadicalClass::Intermediate
    };
    RadicalReport { quotient_diag: quotient_mod_radical(algebra), modular_indexes: modular, radical_support, classification }
}

/// Decides whether `lin{e_j : j in support}` is a modular ideal and returns a
/// modular unit `sum_{i not in support} e_i / w_ii` when it is.
pub fn is_modular_ideal_support(algebra: &EvolutionAlgebra, support: &IndexSet) -> Result<(bool, Option<Element>)> {
    let n = algebra.dim();
    for &i in support {
        check_index(i, n)?;
    }
    if support.is_empty() || support.len() == n {
        return Err(Error::InvalidInput("support must be a nonempty proper subset".into()));
    }
    let g = DescentGraph::new(algebra);
    if !g.descendants_of_set(support)?.is_subset(support) {
        return Ok((false, None));
    }
    let mut unit = vec![GScalar::zero(); n];
    for i in (0..n).filter(|i| !support.contains(i)) {
        let d = g.descendants(i)?;
        if !d.contains(&i) || !d.iter().all(|j| *j == i || support.contains(j)) {
            return Ok((false, None));
        }
        // The two conditions force w_ii != 0.
        unit[i] = algebra.omega(i, i).inv().expect("w_ii != 0 for a valid support");
    }
    Ok((true, Some(Element::new(unit))))
}

/// The ideal generated by `e_i^2`, namely `lin{e_j^2 : j in D(i) + {i}}`.
pub fn square_ideal(algebra: &EvolutionAlgebra, i: usize) -> Result<IdealDescriptor> {
    check_index(i, algebra.dim())?;
    let mut s = DescentGraph::new(algebra).descendants(i)?;
    s.insert(i);
    let squares: Vec<Element> = s.iter().map(|&j| algebra.square_of_basis(j)).collect::<Result<_>>()?;
    Ok(IdealDescriptor::spanned_by(s, squares))
}

/// The two ideals bracketing any ideal with support `support_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealSandwich {
    /// `lin{e_i^2 : i in S}` with `S = support_j + D(support_j)`.
    pub lower: IdealDescriptor,
    /// `lin{e_i : i in S}`.
    pub upper: IdealDescriptor,
    /// The bounds coincide, which pins down every ideal with that support.
    pub equal: bool,
}

pub fn ideal_sandwich(algebra: &EvolutionAlgebra, support_j: &IndexSet) -> Result<IdealSandwich> {
    if support_j.is_empty() {
        return Err(Error::InvalidInput("ideal support must be nonempty".into()));
    }
    for &i in support_j {
        check_index(i, algebra.dim())?;
    }
    let g = DescentGraph::new(algebra);
    let mut s = g.descendants_of_set(support_j)?;
    s.extend(support_j.iter().copied());
    let squares: Vec<Element> = s.iter().map(|&j| algebra.square_of_basis(j)).collect::<Result<_>>()?;
    let lower = IdealDescriptor::spanned_by(s.clone(), squares);
    let upper = IdealDescriptor::coordinate(s);
    let equal = lower.dimension() == upper.dimension();
    Ok(IdealSandwich { lower, upper, equal })
}
