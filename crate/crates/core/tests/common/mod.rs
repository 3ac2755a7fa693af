#![allow(dead_code)]

use evolkit::{DenseMatrix, Element, EvolutionAlgebra, GScalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_ratio(rng: &mut ChaCha8Rng) -> GScalar {
    GScalar::ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3))
}

pub fn nonzero_ratio(rng: &mut ChaCha8Rng) -> GScalar {
    loop {
        let x = small_ratio(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

/// Structure matrix with roughly `density` of its entries nonzero.
pub fn random_matrix(rng: &mut ChaCha8Rng, n: usize, density: f64) -> DenseMatrix {
    let rows = (0..n)
        .map(|_| (0..n).map(|_| if rng.gen_bool(density) { nonzero_ratio(rng) } else { GScalar::zero() }).collect())
        .collect();
    DenseMatrix::from_rows(rows).unwrap()
}

pub fn random_algebra(rng: &mut ChaCha8Rng, max_n: usize) -> EvolutionAlgebra {
    let n = rng.gen_range(1..=max_n);
    let density = rng.gen_range(0.15..0.8);
    EvolutionAlgebra::from_structure_matrix(&random_matrix(rng, n, density)).unwrap()
}

/// Mostly-sparse algebras with a block of modular indexes, so that the
/// radical machinery has something to find.
pub fn random_structured_algebra(rng: &mut ChaCha8Rng, max_n: usize) -> EvolutionAlgebra {
    let n = rng.gen_range(1..=max_n);
    let density = rng.gen_range(0.1..0.6);
    let mut m = random_matrix(rng, n, density);
    for i in 0..n {
        if rng.gen_bool(0.4) {
            for j in 0..n {
                if j != i {
                    m[(i, j)] = GScalar::zero();
                }
            }
            m[(i, i)] = nonzero_ratio(rng);
        }
    }
    EvolutionAlgebra::from_structure_matrix(&m).unwrap()
}

pub fn random_diagonal_algebra(rng: &mut ChaCha8Rng, max_n: usize) -> EvolutionAlgebra {
    let n = rng.gen_range(1..=max_n);
    let d: Vec<GScalar> = (0..n).map(|_| nonzero_ratio(rng)).collect();
    EvolutionAlgebra::diagonal(&d).unwrap()
}

pub fn random_element(rng: &mut ChaCha8Rng, n: usize, zero_prob: f64) -> Element {
    Element::new((0..n).map(|_| if rng.gen_bool(zero_prob) { GScalar::zero() } else { nonzero_ratio(rng) }).collect())
}

pub fn corpus(seed: u64, count: usize, max_n: usize) -> Vec<EvolutionAlgebra> {
    let mut r = rng(seed);
    let mut out: Vec<EvolutionAlgebra> = fixtures().into_iter().map(|(_, a)| a).collect();
    while out.len() < count {
        let a = if out.len().is_multiple_of(2) { random_algebra(&mut r, max_n) } else { random_structured_algebra(&mut r, max_n) };
        out.push(a);
    }
    out
}

pub fn ints(rows: &[&[i64]]) -> EvolutionAlgebra {
    EvolutionAlgebra::from_structure_matrix(&DenseMatrix::from_ints(rows)).unwrap()
}

/// Seven-dimensional block example, every marked constant set to 1.
pub fn seven_by_seven() -> EvolutionAlgebra {
    ints(&[
        &[1, 1, 1, 0, 0, 0, 1],
        &[1, 1, 1, 0, 0, 0, 1],
        &[1, 1, 1, 0, 0, 0, 1],
        &[0, 0, 0, 1, 0, 1, 0],
        &[0, 0, 0, 0, 1, 1, 0],
        &[0, 0, 0, 0, 0, 1, 0],
        &[0, 0, 0, 0, 0, 0, 1],
    ])
}

/// `e1^2 = -1/2 e1 - 1/3 e2`, `e2^2 = 3/4 e1 + 1/2 e2`.
pub fn radical_m_semisimple() -> EvolutionAlgebra {
    EvolutionAlgebra::from_structure_matrix(&DenseMatrix::from_ratios(&[&[(-1, 2), (3, 4)], &[(-1, 3), (1, 2)]]))
        .unwrap()
}

/// `e1^2 = e1`, `e2^2 = e1 + e2`.
pub fn one_dim_radical() -> EvolutionAlgebra {
    ints(&[&[1, 1], &[0, 1]])
}

/// `e1^2 = e2`, `e2^2 = e1`.
pub fn swap() -> EvolutionAlgebra {
    ints(&[&[0, 1], &[1, 0]])
}

/// `e1^2 = e2`, `e2^2 = e3`, `e3^2 = 0`.
pub fn chain() -> EvolutionAlgebra {
    ints(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]])
}

pub fn fixtures() -> Vec<(&'static str, EvolutionAlgebra)> {
    vec![
        ("seven", seven_by_seven()),
        ("radical_m_semisimple", radical_m_semisimple()),
        ("one_dim_radical", one_dim_radical()),
        ("swap", swap()),
        ("chain", chain()),
        ("diag", ints(&[&[1, 0], &[0, 1]])),
        ("degenerate", ints(&[&[0, 0], &[0, 1]])),
        ("zero", EvolutionAlgebra::zero_product(3).unwrap()),
        ("line", ints(&[&[5]])),
    ]
}

pub fn points(xs: &[(i64, i64)]) -> Vec<GScalar> {
    let mut v: Vec<GScalar> = xs.iter().map(|&(p, q)| GScalar::ratio(p, q)).collect();
    v.sort_by(GScalar::canonical_cmp);
    v
}
