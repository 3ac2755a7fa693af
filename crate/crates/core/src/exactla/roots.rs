//! Extraction of the Gaussian-rational roots of a polynomial.
//!
//! Roots on the real and imaginary axes are enumerated with the rational
//! root theorem whenever the candidate set is small enough. Anything left is
//! searched from floating-point seeds: a Gaussian-rational root `r` of a
//! polynomial with Gaussian-integer coefficients and leading coefficient `l`
//! always has `l * r` in `Z[i]`, so rounding `l * z` gives a candidate, and
//! continued-fraction convergents of each part give more. Every candidate is
//! confirmed by exact evaluation before it is accepted.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactla::numeric::{numeric_roots, DEFAULT_TOL};
use crate::exactla::Poly;
use crate::scalar::{rational_to_f64, GScalar};

/// Gaussian-rational roots with multiplicity plus the unresolved cofactor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSplit {
    /// Sorted by real part, then imaginary part; repeated per multiplicity.
    pub roots: Vec<GScalar>,
    /// `p / prod(x - r)`; keeps the leading coefficient of `p`.
    pub residual: Poly,
}

/// Caps for the rational-root-theorem enumeration.
const MAX_FACTOR_TARGET: u64 = 1 << 50;
const MAX_RRT_CANDIDATES: usize = 200_000;

pub fn rational_roots(p: &Poly) -> Result<RootSplit> {
    if p.is_zero() {
        return Err(Error::InvalidInput("roots of the zero polynomial".into()));
    }
    let mut work = p.clone();
    let mut roots = Vec::new();

    let zero = GScalar::zero();
    while work.degree().unwrap_or(0) > 0 && work.coeff(0).is_zero() {
        work = work.deflate(&zero).expect("x divides");
        roots.push(zero.clone());
    }

    // Real axis: common rational roots of the real and imaginary parts.
    if work.degree().unwrap_or(0) > 0 {
        let (re, im) = work.split_real_imag();
        let axis = if im.is_zero() { re } else { re.gcd(&im) };
        if let Some(found) = rational_axis_roots(&axis) {
            for r in found {
                strip_root(&mut work, &GScalar::real(r), &mut roots);
            }
        }
    }
    // Imaginary axis: substitute x = i*y.
    if work.degree().unwrap_or(0) > 0 {
        let (re, im) = work.rotate_imaginary().split_real_imag();
        let axis = if im.is_zero() { re } else { re.gcd(&im) };
        if let Some(found) = rational_axis_roots(&axis) {
            for y in found {
                let r = GScalar::new(BigRational::zero(), y);
                strip_root(&mut work, &r, &mut roots);
            }
        }
    }
    // Off-axis roots, and axis roots the enumeration could not afford.
    seeded_search(&mut work, &mut roots);

    roots.sort_by(GScalar::canonical_cmp);
    Ok(RootSplit { roots, residual: work })
}

fn strip_root(work: &mut Poly, r: &GScalar, roots: &mut Vec<GScalar>) {
    while work.degree().unwrap_or(0) > 0 {
        match work.deflate(r) {
            Some(q) => {
                *work = q;
                roots.push(r.clone());
            }
            None => break,
        }
    }
}

/// Integer coefficients of a real rational polynomial after clearing
/// denominators and removing the content.
fn primitive_integer(p: &Poly) -> Vec<BigInt> {
    let l = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.re().denom()));
    let ints: Vec<BigInt> =
        p.coeffs().iter().map(|c| (c.re() * BigRational::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.into_iter().map(|c| c / &g).collect()
    }
}

/// Positive divisors by trial division, `None` when the number is too large.
fn divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n == 0 || n > MAX_FACTOR_TARGET {
        return None;
    }
    let mut primes: Vec<(u64, u32)> = Vec::new();
    let mut m = n;
    let mut d = 2u64;
    while d * d <= m {
        if m % d == 0 {
            let mut e = 0;
            while m % d == 0 {
                m /= d;
                e += 1;
            }
            primes.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m > 1 {
        primes.push((m, 1));
    }
    let mut divs = vec![1u64];
    for (p, e) in primes {
        let len = divs.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for k in 0..len {
                divs.push(divs[k] * pk);
            }
        }
    }
    divs.sort_unstable();
    Some(divs)
}

const MOD_P: u128 = (1u128 << 61) - 1;

fn to_mod(x: &BigInt) -> u128 {
    let m = BigInt::from(MOD_P as u64);
    let r = x.mod_floor(&m);
    r.to_u64().unwrap() as u128
}

/// Homogenised value `sum c_k u^k v^(d-k)`, exact.
fn homogeneous_eval(c: &[BigInt], u: &BigInt, v: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    let mut vpow = BigInt::one();
    for k in (0..c.len()).rev() {
        acc = acc * u + &c[k] * &vpow;
        vpow *= v;
    }
    acc
}

/// Same value reduced modulo `2^61 - 1`; a nonzero result proves the exact
/// value is nonzero.
fn homogeneous_eval_mod(c: &[u128], u: u128, v: u128) -> u128 {
    let mut acc = 0u128;
    let mut vpow = 1u128;
    for k in (0..c.len()).rev() {
        acc = (acc * u + c[k] * vpow) % MOD_P;
        vpow = vpow * v % MOD_P;
    }
    acc
}

/// Rational roots of a real polynomial by the rational root theorem, or
/// `None` when the enumeration is too large to attempt.
fn rational_axis_roots(p: &Poly) -> Option<Vec<BigRational>> {
    let deg = p.degree()?;
    if deg == 0 {
        return Some(Vec::new());
    }
    debug_assert!(p.is_real());
    let mut c = primitive_integer(p);
    // The rational root theorem needs a nonzero constant term.
    let mut out = Vec::new();
    while c.len() > 1 && c[0].is_zero() {
        c.remove(0);
        out.push(BigRational::zero());
    }
    if c.len() == 1 {
        return Some(out);
    }
    let lead_divs = divisors(c.last().unwrap())?;
    let const_divs = divisors(&c[0])?;
    if lead_divs.len().saturating_mul(const_divs.len()).saturating_mul(2) > MAX_RRT_CANDIDATES {
        return None;
    }
    let cm: Vec<u128> = c.iter().map(to_mod).collect();
    // Root magnitude bounds prune most candidates before any arithmetic.
    let cf: Vec<f64> = c.iter().map(|x| x.to_f64().unwrap_or(f64::INFINITY)).collect();
    let lead = cf.last().unwrap().abs();
    let upper = 1.0 + cf[..cf.len() - 1].iter().map(|x| x.abs() / lead).fold(0.0, f64::max);
    for &v in &lead_divs {
        for &u in &const_divs {
            if u.gcd(&v) != 1 {
                continue;
            }
            let mag = u as f64 / v as f64;
            if mag > upper * (1.0 + 1e-9) {
                continue;
            }
            for sign in [1i64, -1] {
                let um = if sign > 0 { u as u128 % MOD_P } else { (MOD_P - u as u128 % MOD_P) % MOD_P };
                if homogeneous_eval_mod(&cm, um, v as u128 % MOD_P) != 0 {
                    continue;
                }
                let ub = BigInt::from(u) * sign;
                let vb = BigInt::from(v);
                if homogeneous_eval(&c, &ub, &vb).is_zero() {
                    out.push(BigRational::new(ub, vb));
                }
            }
        }
    }
    Some(out)
}

/// Best rational approximations of `x` with denominators up to `max_den`.
fn convergents(x: f64, max_den: i64) -> Vec<BigRational> {
    let mut out = Vec::new();
    if !x.is_finite() {
        return out;
    }
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut r = x;
    for _ in 0..40 {
        let a = r.floor();
        let Some(ai) = BigInt::from_f64_checked(a) else { break };
        let h2 = &ai * &h1 + &h0;
        let k2 = &ai * &k1 + &k0;
        if k2 > BigInt::from(max_den) {
            break;
        }
        out.push(BigRational::new(h2.clone(), k2.clone()));
        h0 = std::mem::replace(&mut h1, h2);
        k0 = std::mem::replace(&mut k1, k2);
        let frac = r - a;
        if frac.abs() < 1e-15 {
            break;
        }
        r = 1.0 / frac;
    }
    out
}

trait FromF64Checked: Sized {
    fn from_f64_checked(x: f64) -> Option<Self>;
}

impl FromF64Checked for BigInt {
    fn from_f64_checked(x: f64) -> Option<Self> {
        if x.is_finite() && x.abs() < 1e18 {
            Some(BigInt::from(x as i64))
        } else {
            None
        }
    }
}

fn round_to_bigint(x: f64) -> Option<BigInt> {
    BigInt::from_f64_checked(x.round())
}

/// Leading coefficient of the Gaussian-integer multiple of `p`.
fn gaussian_integer_lead(p: &Poly) -> GScalar {
    let l = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(&c.denominator_lcm()));
    p.leading().expect("nonzero").scale(&BigRational::from_integer(l))
}

fn candidates_near(z: Complex64, lead: &GScalar) -> Vec<GScalar> {
    let mut out = Vec::new();
    // l * r is a Gaussian integer.
    let lz = lead.to_complex64() * z;
    if let (Some(a), Some(b)) = (round_to_bigint(lz.re), round_to_bigint(lz.im)) {
        let g = GScalar::new(BigRational::from_integer(a), BigRational::from_integer(b));
        if let Some(inv) = lead.inv() {
            out.push(&g * &inv);
        }
    }
    let re_c = axis_part(z.re);
    let im_c = axis_part(z.im);
    for re in &re_c {
        for im in &im_c {
            out.push(GScalar::new(re.clone(), im.clone()));
        }
    }
    out
}

/// Plausible exact values for one coordinate of a floating root.
fn axis_part(x: f64) -> Vec<BigRational> {
    let mut parts = Vec::new();
    if x.abs() < 1e-7 {
        parts.push(BigRational::zero());
    }
    for tol in [1e-6, 1e-9, 1e-12] {
        if let Some(c) = convergents(x, 1_000_000_000_000)
            .into_iter()
            .find(|c| (rational_to_f64(c) - x).abs() <= tol * x.abs().max(1.0))
        {
            if !parts.contains(&c) {
                parts.push(c);
            }
        }
    }
    parts
}

fn seeded_search(work: &mut Poly, roots: &mut Vec<GScalar>) {
    if work.degree().unwrap_or(0) == 0 {
        return;
    }
    let factors = work.squarefree_decomposition();
    for (factor, _) in factors {
        let Ok(approx) = numeric_roots(&factor, DEFAULT_TOL) else {
            continue;
        };
        let lead = gaussian_integer_lead(&factor);
        for z in approx {
            for cand in candidates_near(z, &lead) {
                if work.degree().unwrap_or(0) == 0 {
                    return;
                }
                if work.eval(&cand).is_zero() {
                    strip_root(work, &cand, roots);
                    break;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> GScalar {
        GScalar::ratio(n, d)
    }

    fn check_factorisation(p: &Poly, split: &RootSplit) {
        let rebuilt = Poly::from_roots(&split.roots).mul(&split.residual);
        assert_eq!(&rebuilt, p);
    }

    #[test]
    fn square_operator_roots() {
        let p = Poly::new(vec![GScalar::zero(), q(-1, 12), GScalar::one()]);
        let s = rational_roots(&p).unwrap();
        assert_eq!(s.roots, vec![GScalar::zero(), q(1, 12)]);
        assert_eq!(s.residual, Poly::one());
    }

    #[test]
    fn gaussian_roots_of_x2_plus_1() {
        let s = rational_roots(&Poly::from_ints(&[1, 0, 1])).unwrap();
        assert_eq!(s.roots, vec![-GScalar::i(), GScalar::i()]);
        assert_eq!(s.residual, Poly::one());
    }

    #[test]
    fn irrational_roots_stay_in_residual() {
        let p = Poly::from_ints(&[-2, 0, 1]);
        let s = rational_roots(&p).unwrap();
        assert!(s.roots.is_empty());
        assert_eq!(s.residual, p);
    }

    #[test]
    fn zero_polynomial_is_rejected() {
        assert!(rational_roots(&Poly::zero()).is_err());
    }

    #[test]
    fn off_axis_gaussian_roots() {
        let r1 = GScalar::new(BigRational::new(1.into(), 2.into()), BigRational::new((-3).into(), 7.into()));
        let p = Poly::from_roots(&[r1.clone(), r1.conj(), q(5, 3), q(5, 3)]).mul(&Poly::from_ints(&[-3, 0, 1]));
        let s = rational_roots(&p).unwrap();
        check_factorisation(&p, &s);
        assert_eq!(s.roots.len(), 4);
        assert_eq!(s.residual, Poly::from_ints(&[-3, 0, 1]));
    }

    #[test]
    fn gaussian_coefficients() {
        let roots = [GScalar::i(), q(2, 1), GScalar::new(BigRational::one(), BigRational::one())];
        let p = Poly::from_roots(&roots).scale(&q(3, 5));
        let s = rational_roots(&p).unwrap();
        check_factorisation(&p, &s);
        assert_eq!(s.residual.degree(), Some(0));
    }

    #[test]
    fn large_denominators() {
        let roots = [q(1234567, 89), q(-1, 1000003), q(22, 7)];
        let p = Poly::from_roots(&roots);
        let s = rational_roots(&p).unwrap();
        check_factorisation(&p, &s);
        assert_eq!(s.roots.len(), 3);
    }

    #[test]
    fn divisor_enumeration() {
        assert_eq!(divisors(&BigInt::from(12)).unwrap(), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(&BigInt::from(-7)).unwrap(), vec![1, 7]);
        assert!(divisors(&BigInt::from(0)).is_none());
    }
}
