//! Exact computations in finite-dimensional evolution algebras.
//!
//! An evolution algebra has a basis `e_1, ..., e_n` with `e_i e_j = 0` for
//! `i != j`; it is determined by the structure matrix `M` whose column `i`
//! holds the coordinates of `e_i^2`. Scalars are Gaussian rationals, so
//! products, ideals, radicals and most spectra are computed exactly.
//!
//! ```
//! use evolkit::{EvolutionAlgebra, Element, DenseMatrix, GScalar, spectra};
//!
//! let m = DenseMatrix::from_ratios(&[&[(-1, 2), (3, 4)], &[(-1, 3), (1, 2)]]);
//! let a = EvolutionAlgebra::from_structure_matrix(&m).unwrap();
//! let e1_sq = a.square_of_basis(0).unwrap();
//! let s = spectra::m_spectrum(&a, &e1_sq, spectra::Mode::Exact).unwrap();
//! assert_eq!(s.exact_points, vec![GScalar::zero(), GScalar::ratio(1, 12)]);
//! ```

pub mod algebra;
pub mod descent;
pub mod error;
pub mod exactla;
pub mod radical;
pub mod scalar;
pub mod spectra;

pub use algebra::{bases_related, BasisCandidate, Element, EvolutionAlgebra, IndexSet};
pub use descent::DescentGraph;
pub use error::{Error, Result};
pub use exactla::{DenseMatrix, Poly};
pub use scalar::GScalar;

// The guide's code blocks run as doctests of this crate.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/algebras.md")]
    mod algebras {}
    #[doc = include_str!("../../../book/src/exact-arithmetic.md")]
    mod exact_arithmetic {}
    #[doc = include_str!("../../../book/src/descendants.md")]
    mod descendants {}
    #[doc = include_str!("../../../book/src/radical.md")]
    mod radical {}
    #[doc = include_str!("../../../book/src/spectra.md")]
    mod spectra {}
    #[doc = include_str!("../../../book/src/semisimplicity.md")]
    mod semisimplicity {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
