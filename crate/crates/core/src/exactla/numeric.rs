//! Floating-point root finding used when eigenvalues are not Gaussian
//! rationals.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exactla::Poly;

pub const DEFAULT_TOL: f64 = 1e-9;
pub const MAX_ITERATIONS: usize = 1000;

/// All complex roots of `p`, with multiplicity.
///
/// The exact square-free decomposition is taken first and each square-free
/// factor is solved with Aberth–Ehrlich iteration, so repeated roots come out
/// at full double precision instead of the usual `eps^(1/m)`.
pub fn numeric_roots(p: &Poly, tol: f64) -> Result<Vec<Complex64>> {
    if p.is_zero() {
        return Err(Error::InvalidInput("roots of the zero polynomial".into()));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidInput(format!("tolerance must be positive, got {tol}")));
    }
    let mut roots = Vec::new();
    for (factor, mult) in p.squarefree_decomposition() {
        let coeffs: Vec<Complex64> = factor.coeffs().iter().map(|c| c.to_complex64()).collect();
        let simple = aberth(&coeffs, tol)?;
        for z in simple {
            roots.extend(std::iter::repeat_n(z, mult));
        }
    }
    sort_roots(&mut roots);
    Ok(roots)
}

pub(crate) fn sort_roots(roots: &mut [Complex64]) {
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
}

fn horner(c: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// Aberth–Ehrlich on a monic-normalised coefficient list (lowest first).
fn aberth(coeffs: &[Complex64], tol: f64) -> Result<Vec<Complex64>> {
    let n = coeffs.len() - 1;
    if n == 0 {
        return Ok(Vec::new());
    }
    let lead = coeffs[n];
    let c: Vec<Complex64> = coeffs.iter().map(|&a| a / lead).collect();
    if n == 1 {
        return Ok(vec![-c[0]]);
    }
    // Cauchy bound for the initial circle; the angular offset avoids
    // symmetric starts that stall on real polynomials.
    let radius = 1.0 + c[..n].iter().map(|a| a.norm()).fold(0.0, f64::max);
    let r0 = radius.clamp(1e-3, 1e6) * 0.5;
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.4;
            Complex64::from_polar(r0, theta)
        })
        .collect();
    let stop = tol * 1e-3;
    for _ in 0..MAX_ITERATIONS {
        let mut max_step: f64 = 0.0;
        for k in 0..n {
            let (p, dp) = horner(&c, z[k]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let sum: Complex64 = (0..n).filter(|&j| j != k).map(|j| (z[k] - z[j]).inv()).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * sum);
            if step.is_finite() {
                z[k] -= step;
                max_step = max_step.max(step.norm() / z[k].norm().max(1.0));
            } else {
                z[k] += Complex64::new(1e-3, 1e-3);
                max_step = f64::INFINITY;
            }
        }
        if max_step <= stop {
            polish(&c, &mut z);
            return Ok(z);
        }
    }
    Err(Error::NumericFailure { iterations: MAX_ITERATIONS, best: z })
}

fn polish(c: &[Complex64], z: &mut [Complex64]) {
    for zk in z.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = horner(c, *zk);
            if dp.norm() == 0.0 {
                break;
            }
            let next = *zk - p / dp;
            if !next.is_finite() || horner(c, next).0.norm() >= p.norm() {
                break;
            }
            *zk = next;
        }
    }
}
