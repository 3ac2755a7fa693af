//! Deciding whether `L_a` is nilpotent for every `a` in a subspace.
//!
//! With `a = G t` for a generator matrix `G` and coordinates `t`, the
//! coefficient of `x^(n-k)` in `det(xI - M diag(a))` is, up to sign,
//!
//! ```text
//! P_k(t) = sum over |S| = k of det(M[S, S]) * prod_{j in S} (G t)_j
//! ```
//!
//! so the whole subspace is nilpotent iff every `P_k` vanishes identically.
//! Small instances expand the `P_k` symbolically; larger ones probe random
//! integer points, each probe being an exact nilpotency test.

use std::collections::BTreeMap;

use num_integer::binomial;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Element, EvolutionAlgebra, IndexSet};
use crate::error::Result;
use crate::exactla::{determinant, is_nilpotent_matrix};
use crate::scalar::GScalar;

/// Symbolic expansion is attempted while `C(n + d, d)` stays below this.
pub const SYMBOLIC_MONOMIAL_BUDGET: u128 = 100_000;
/// Principal minors are enumerated over at most this many active indexes.
const MAX_SYMBOLIC_SUPPORT: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubspaceNilpotency {
    /// Certified: `L_a` is nilpotent for every `a` in the span.
    AllNilpotent,
    /// An element of the span whose operator is not nilpotent.
    Witness(Element),
    /// Every random probe was nilpotent but no certificate was produced.
    ProbablyAllNilpotent,
}

/// Sparse multivariate polynomial keyed by exponent vectors.
type MPoly = BTreeMap<Vec<u16>, GScalar>;

fn mul_linear(p: &MPoly, form: &[(usize, GScalar)]) -> MPoly {
    let mut out = MPoly::new();
    for (exp, c) in p {
        for (var, g) in form {
            let mut e = exp.clone();
            e[*var] += 1;
            let term = c * g;
            let slot = out.entry(e).or_default();
            *slot += &term;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn linear_combination(gens: &[Element], t: &[GScalar]) -> Element {
    let n = gens[0].dim();
    let mut acc = vec![GScalar::zero(); n];
    for (g, tk) in gens.iter().zip(t) {
        if tk.is_zero() {
            continue;
        }
        for i in g.support() {
            acc[*i] += &(g.coeff(*i) * tk);
        }
    }
    Element::new(acc)
}

fn probe_radius(n: usize) -> i64 {
    (n * n + 1) as i64
}

fn random_point(rng: &mut ChaCha8Rng, d: usize, radius: i64) -> Vec<GScalar> {
    (0..d).map(|_| GScalar::from_int(rng.gen_range(-radius..=radius))).collect()
}

fn is_witness(algebra: &EvolutionAlgebra, a: &Element) -> Result<bool> {
    Ok(!a.is_zero() && !is_nilpotent_matrix(&algebra.left_mul_matrix(a)?)?)
}

/// Whether every `P_k` vanishes identically, `None` when over budget.
fn symbolic_all_nilpotent(algebra: &EvolutionAlgebra, gens: &[Element]) -> Option<bool> {
    let n = algebra.dim();
    let d = gens.len();
    if binomial(n as u128 + d as u128, d as u128) > SYMBOLIC_MONOMIAL_BUDGET {
        return None;
    }
    let active: Vec<usize> = gens.iter().flat_map(|g| g.support().iter().copied()).collect::<IndexSet>().into_iter().collect();
    if active.len() > MAX_SYMBOLIC_SUPPORT {
        return None;
    }
    // Row j of G t as a sparse linear form in t.
    let forms: Vec<Vec<(usize, GScalar)>> = active
        .iter()
        .map(|&j| gens.iter().enumerate().filter(|(_, g)| !g.coeff(j).is_zero()).map(|(k, g)| (k, g.coeff(j).clone())).collect())
        .collect();
    let m = algebra.structure_matrix();
    let mut by_degree: Vec<MPoly> = vec![MPoly::new(); active.len() + 1];
    for mask in 1u32..(1u32 << active.len()) {
        let subset: Vec<usize> = (0..active.len()).filter(|b| mask & (1 << b) != 0).collect();
        let idx: Vec<usize> = subset.iter().map(|&b| active[b]).collect();
        let minor = determinant(&m.select(&idx, &idx)).expect("square");
        if minor.is_zero() {
            continue;
        }
        let mut p = MPoly::from([(vec![0u16; d], minor)]);
        for &b in &subset {
            p = mul_linear(&p, &forms[b]);
            if p.is_empty() {
                break;
            }
        }
        let acc = &mut by_degree[subset.len()];
        for (e, c) in p {
            let slot = acc.entry(e).or_default();
            *slot += &c;
        }
    }
    Some(by_degree.iter().all(|p| p.values().all(GScalar::is_zero)))
}

/// Decides nilpotency of `L_a` on `lin(generators)`.
///
/// `trials` random probes (seeded by `seed`) are used to find a witness,
/// and as the only evidence when the symbolic expansion is over budget.
pub fn nilpotent_on_subspace(
    algebra: &EvolutionAlgebra,
    generators: &[Element],
    trials: usize,
    seed: u64,
) -> Result<SubspaceNilpotency> {
    let gens: Vec<Element> = generators.iter().filter(|g| !g.is_zero()).cloned().collect();
    if gens.is_empty() {
        return Ok(SubspaceNilpotency::AllNilpotent);
    }
    for g in &gens {
        if is_witness(algebra, g)? {
            return Ok(SubspaceNilpotency::Witness(g.clone()));
        }
    }
    if gens.len() == 1 {
        // L_{tg} = t L_g.
        return Ok(SubspaceNilpotency::AllNilpotent);
    }
    let n = algebra.dim();
    let radius = probe_radius(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match symbolic_all_nilpotent(algebra, &gens) {
        Some(true) => Ok(SubspaceNilpotency::AllNilpotent),
        Some(false) => {
            // Some P_k is a nonzero polynomial of degree <= n, so a random
            // point misses its zero set with probability >= 1 - n / (2r + 1).
            loop {
                let a = linear_combination(&gens, &random_point(&mut rng, gens.len(), radius));
                if is_witness(algebra, &a)? {
                    return Ok(SubspaceNilpotency::Witness(a));
                }
            }
        }
        None => {
            for _ in 0..trials {
                let a = linear_combination(&gens, &random_point(&mut rng, gens.len(), radius));
                if is_witness(algebra, &a)? {
                    return Ok(SubspaceNilpotency::Witness(a));
                }
            }
            Ok(SubspaceNilpotency::ProbablyAllNilpotent)
        }
    }
}
