//! Semisimplicity in the spectral senses.
//!
//! Every nonzero ideal contains an ideal `⟨e_i^2⟩ = lin{e_j^2 : j in D(i) + {i}}`
//! or a line `K e_i` with `e_i^2 = 0`, so it suffices to sweep the indexes
//! and look for an element of each `⟨e_i^2⟩` with a nonzero (m-)spectral
//! point.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::subspace::{nilpotent_on_subspace, SubspaceNilpotency};
use super::{spectrum_with_tol, Mode};
use crate::algebra::{Element, EvolutionAlgebra, IndexSet};
use crate::error::{Error, Result};
use crate::exactla::{char_poly, is_nilpotent_matrix, numeric_roots, rational_roots, DEFAULT_TOL};
use crate::radical::{square_ideal, IdealDescriptor};
use crate::scalar::GScalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Yes,
    No,
    /// Supported by numeric evidence only.
    ProbablyYes,
    /// Random probes found nothing but no certificate exists.
    ProbablyNo,
    Undetermined,
}

impl Verdict {
    fn combine(verdicts: impl IntoIterator<Item = Verdict>) -> Verdict {
        let all: Vec<Verdict> = verdicts.into_iter().collect();
        if all.contains(&Verdict::No) {
            Verdict::No
        } else if all.iter().all(|v| *v == Verdict::Yes) {
            Verdict::Yes
        } else if all.contains(&Verdict::Undetermined) {
            Verdict::Undetermined
        } else if all.contains(&Verdict::ProbablyNo) {
            Verdict::ProbablyNo
        } else {
            Verdict::ProbablyYes
        }
    }

    /// `Yes` or `ProbablyYes`.
    pub fn is_positive(self) -> bool {
        matches!(self, Verdict::Yes | Verdict::ProbablyYes)
    }

    pub fn is_certain(self) -> bool {
        matches!(self, Verdict::Yes | Verdict::No)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::ProbablyYes => "probably_yes",
            Verdict::ProbablyNo => "probably_no",
            Verdict::Undetermined => "undetermined",
        }
    }
}

/// An element of `⟨e_index^2⟩` with a nonzero spectral point.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub index: usize,
    pub element: Element,
    /// A nonzero exact point, when one exists.
    pub eigenvalue: Option<GScalar>,
    /// Otherwise a floating-point nonzero point.
    pub numeric_eigenvalue: Option<Complex64>,
}

impl Witness {
    pub fn is_exact(&self) -> bool {
        self.eigenvalue.is_some()
    }
}

/// A nonzero ideal on which every spectral radius vanishes.
#[derive(Debug, Clone, PartialEq)]
pub struct Counterexample {
    pub index: usize,
    pub ideal: IdealDescriptor,
    /// `false` when the ideal is only a candidate backed by random probes.
    pub certified: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SemisimplicityVerdict {
    pub value: Verdict,
    /// One per index whose sweep succeeded, in index order.
    pub witnesses: Vec<Witness>,
    /// The first index whose sweep did not succeed.
    pub counterexample: Option<Counterexample>,
    /// Indexes left without a verdict.
    pub unresolved: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckOptions {
    /// Random probes per index.
    pub trials: usize,
    pub seed: u64,
    pub tol: f64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { trials: 32, seed: 0, tol: DEFAULT_TOL }
    }
}

impl CheckOptions {
    fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::InvalidInput("at least one trial is required".into()));
        }
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::InvalidInput(format!("tolerance must be positive, got {}", self.tol)));
        }
        Ok(())
    }

    fn index_seed(&self, i: usize) -> u64 {
        self.seed.wrapping_add((i as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
    }
}

enum IndexOutcome {
    Witness(Witness),
    ProbableWitness(Witness),
    Vanishes { ideal: IdealDescriptor, certified: bool },
    Unknown,
}

/// `lin{e_j : e_j^2 = 0}`, an ideal with zero multiplication.
fn null_square_ideal(algebra: &EvolutionAlgebra) -> IdealDescriptor {
    let s: IndexSet = (0..algebra.dim()).filter(|&j| algebra.column(j).is_empty()).collect();
    IdealDescriptor::coordinate(s)
}

/// Nonzero eigenvalue of a non-nilpotent `L_a`, exact when possible.
fn m_witness(algebra: &EvolutionAlgebra, index: usize, a: Element, tol: f64) -> Result<Witness> {
    let cp = char_poly(&algebra.left_mul_matrix(&a)?)?;
    let split = rational_roots(&cp)?;
    let eigenvalue = split.roots.iter().rev().find(|r| !r.is_zero()).cloned();
    let numeric_eigenvalue = if eigenvalue.is_none() {
        numeric_roots(&split.residual, tol)
            .ok()
            .and_then(|rs| rs.into_iter().filter(|z| z.norm() > tol).max_by(|x, y| x.norm().total_cmp(&y.norm())))
    } else {
        None
    };
    Ok(Witness { index, element: a, eigenvalue, numeric_eigenvalue })
}

fn combination(gens: &[Element], rng: &mut ChaCha8Rng, radius: i64) -> Element {
    let n = gens[0].dim();
    gens.iter().fold(Element::zero(n), |acc, g| acc.add(&g.scale(&GScalar::from_int(rng.gen_range(-radius..=radius)))))
}

fn assemble(outcomes: Vec<(usize, IndexOutcome)>) -> SemisimplicityVerdict {
    let mut witnesses = Vec::new();
    let mut counterexample = None;
    let mut unresolved = Vec::new();
    let mut verdicts = Vec::new();
    for (i, outcome) in outcomes {
        match outcome {
            IndexOutcome::Witness(w) => {
                verdicts.push(Verdict::Yes);
                witnesses.push(w);
            }
            IndexOutcome::ProbableWitness(w) => {
                verdicts.push(Verdict::ProbablyYes);
                witnesses.push(w);
            }
            IndexOutcome::Vanishes { ideal, certified } => {
                verdicts.push(if certified { Verdict::No } else { Verdict::ProbablyNo });
                let replace = match &counterexample {
                    None => true,
                    Some(Counterexample { certified: prev, .. }) => certified && !prev,
                };
                if replace {
                    counterexample = Some(Counterexample { index: i, ideal, certified });
                }
            }
            IndexOutcome::Unknown => {
                verdicts.push(Verdict::Undetermined);
                unresolved.push(i);
            }
        }
    }
    let value = Verdict::combine(verdicts);
    SemisimplicityVerdict { value, witnesses, counterexample, unresolved }
}

/// Whether no nonzero ideal consists of elements with `ρ_m = 0`.
///
/// `e_i^2` is tried first; when `L_{e_i^2}` is nilpotent the whole square
/// ideal is examined.
pub fn m_semisimple_check(algebra: &EvolutionAlgebra, opts: &CheckOptions) -> Result<SemisimplicityVerdict> {
    opts.validate()?;
    let mut outcomes = Vec::with_capacity(algebra.dim());
    for i in 0..algebra.dim() {
        outcomes.push((i, m_index(algebra, i, opts)?));
    }
    Ok(assemble(outcomes))
}

fn m_index(algebra: &EvolutionAlgebra, i: usize, opts: &CheckOptions) -> Result<IndexOutcome> {
    let sq = algebra.square_of_basis(i)?;
    if sq.is_zero() {
        return Ok(IndexOutcome::Vanishes { ideal: null_square_ideal(algebra), certified: true });
    }
    if !is_nilpotent_matrix(&algebra.left_mul_matrix(&sq)?)? {
        return Ok(IndexOutcome::Witness(m_witness(algebra, i, sq, opts.tol)?));
    }
    let ideal = square_ideal(algebra, i)?;
    Ok(match nilpotent_on_subspace(algebra, &ideal.generators, opts.trials, opts.index_seed(i))? {
        SubspaceNilpotency::Witness(a) => IndexOutcome::Witness(m_witness(algebra, i, a, opts.tol)?),
        SubspaceNilpotency::AllNilpotent => IndexOutcome::Vanishes { ideal, certified: true },
        SubspaceNilpotency::ProbablyAllNilpotent => IndexOutcome::Vanishes { ideal, certified: false },
    })
}

/// Whether no nonzero ideal consists of elements with `ρ = 0`.
///
/// A negative answer is only ever certified through nilpotency of the whole
/// square ideal, since `ρ_m(a) = 0` forces `ρ(a) = 0`.
pub fn spectrally_semisimple_check(algebra: &EvolutionAlgebra, opts: &CheckOptions) -> Result<SemisimplicityVerdict> {
    opts.validate()?;
    let mut outcomes = Vec::with_capacity(algebra.dim());
    for i in 0..algebra.dim() {
        outcomes.push((i, spectral_index(algebra, i, opts)?));
    }
    Ok(assemble(outcomes))
}

/// Exact or numeric nonzero spectrum point of `a`.
fn spectral_point(algebra: &EvolutionAlgebra, i: usize, a: &Element, tol: f64) -> Result<Option<Witness>> {
    let s = spectrum_with_tol(algebra, a, Mode::Numeric, tol).or_else(|e| match e {
        Error::NumericFailure { .. } => spectrum_with_tol(algebra, a, Mode::Exact, tol),
        other => Err(other),
    })?;
    let eigenvalue = s.exact_points.iter().rev().find(|p| !p.is_zero()).cloned();
    let numeric_eigenvalue = s.numeric_points.first().copied();
    if eigenvalue.is_none() && numeric_eigenvalue.is_none() {
        return Ok(None);
    }
    Ok(Some(Witness { index: i, element: a.clone(), eigenvalue, numeric_eigenvalue }))
}

fn spectral_index(algebra: &EvolutionAlgebra, i: usize, opts: &CheckOptions) -> Result<IndexOutcome> {
    let sq = algebra.square_of_basis(i)?;
    if sq.is_zero() {
        return Ok(IndexOutcome::Vanishes { ideal: null_square_ideal(algebra), certified: true });
    }
    let mut probable: Option<Witness> = None;
    let mut consider = |w: Option<Witness>| -> Option<IndexOutcome> {
        match w {
            Some(w) if w.is_exact() => Some(IndexOutcome::Witness(w)),
            Some(w) => {
                probable.get_or_insert(w);
                None
            }
            None => None,
        }
    };
    if let Some(done) = consider(spectral_point(algebra, i, &sq, opts.tol)?) {
        return Ok(done);
    }
    let ideal = square_ideal(algebra, i)?;
    let seed = opts.index_seed(i);
    match nilpotent_on_subspace(algebra, &ideal.generators, opts.trials, seed)? {
        SubspaceNilpotency::AllNilpotent => return Ok(IndexOutcome::Vanishes { ideal, certified: true }),
        SubspaceNilpotency::ProbablyAllNilpotent => {
            return Ok(IndexOutcome::Vanishes { ideal, certified: false });
        }
        SubspaceNilpotency::Witness(a) => {
            if let Some(done) = consider(spectral_point(algebra, i, &a, opts.tol)?) {
                return Ok(done);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5EED);
    let radius = (algebra.dim() * algebra.dim() + 1) as i64;
    for g in &ideal.generators {
        if let Some(done) = consider(spectral_point(algebra, i, g, opts.tol)?) {
            return Ok(done);
        }
    }
    for _ in 0..opts.trials {
        let a = combination(&ideal.generators, &mut rng, radius);
        if a.is_zero() {
            continue;
        }
        if let Some(done) = consider(spectral_point(algebra, i, &a, opts.tol)?) {
            return Ok(done);
        }
    }
    Ok(match probable {
        Some(w) => IndexOutcome::ProbableWitness(w),
        None => IndexOutcome::Unknown,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::DenseMatrix;

    fn from_ratios(rows: &[&[(i64, i64)]]) -> EvolutionAlgebra {
        EvolutionAlgebra::from_structure_matrix(&DenseMatrix::from_ratios(rows)).unwrap()
    }

    fn ints(rows: &[&[i64]]) -> EvolutionAlgebra {
        EvolutionAlgebra::from_structure_matrix(&DenseMatrix::from_ints(rows)).unwrap()
    }

    fn opts() -> CheckOptions {
        CheckOptions { trials: 8, seed: 11, tol: DEFAULT_TOL }
    }

    #[test]
    fn radical_but_m_semisimple() {
        let a = from_ratios(&[&[(-1, 2), (3, 4)], &[(-1, 3), (1, 2)]]);
        let m = m_semisimple_check(&a, &opts()).unwrap();
        assert_eq!(m.value, Verdict::Yes);
        let eig: Vec<GScalar> = m.witnesses.iter().map(|w| w.eigenvalue.clone().unwrap()).collect();
        assert_eq!(eig, vec![GScalar::ratio(1, 12), GScalar::ratio(-1, 8)]);
        assert_eq!(spectrally_semisimple_check(&a, &opts()).unwrap().value, Verdict::Yes);
    }

    #[test]
    fn one_dimensional() {
        let a = ints(&[&[5]]);
        assert_eq!(m_semisimple_check(&a, &opts()).unwrap().value, Verdict::Yes);
        assert_eq!(spectrally_semisimple_check(&a, &opts()).unwrap().value, Verdict::Yes);
    }

    #[test]
    fn zero_product_fails_on_the_whole_algebra() {
        let a = EvolutionAlgebra::zero_product(3).unwrap();
        for v in [m_semisimple_check(&a, &opts()).unwrap(), spectrally_semisimple_check(&a, &opts()).unwrap()] {
            assert_eq!(v.value, Verdict::No);
            let c = v.counterexample.unwrap();
            assert!(c.certified);
            assert_eq!(c.ideal.dimension(), 3);
        }
    }

    #[test]
    fn nilpotent_cycle_is_not_m_semisimple() {
        // e1^2 = e2, e2^2 = 0: every L_a is strictly triangular.
        let a = ints(&[&[0, 0], &[1, 0]]);
        let v = m_semisimple_check(&a, &opts()).unwrap();
        assert_eq!(v.value, Verdict::No);
    }

    #[test]
    fn swap_needs_a_combination() {
        // e1^2 = e2, e2^2 = e1: each L_{e_i^2} is nilpotent, L_{e1+e2} is not.
        let a = ints(&[&[0, 1], &[1, 0]]);
        let v = m_semisimple_check(&a, &opts()).unwrap();
        assert_eq!(v.value, Verdict::Yes);
        for w in &v.witnesses {
            assert!(!is_nilpotent_matrix(&a.left_mul_matrix(&w.element).unwrap()).unwrap());
        }
    }

    #[test]
    fn rejects_zero_trials() {
        let a = ints(&[&[1]]);
        let bad = CheckOptions { trials: 0, ..opts() };
        assert!(m_semisimple_check(&a, &bad).is_err());
    }

    #[test]
    fn combine_rules() {
        use Verdict::*;
        assert_eq!(Verdict::combine([Yes, Yes]), Yes);
        assert_eq!(Verdict::combine([Yes, No, Undetermined]), No);
        assert_eq!(Verdict::combine([ProbablyYes, Undetermined]), Undetermined);
        assert_eq!(Verdict::combine([ProbablyYes, ProbablyNo]), ProbablyNo);
        assert_eq!(Verdict::combine([Yes, ProbablyYes]), ProbablyYes);
        assert_eq!(Verdict::combine([]), Yes);
    }
}
