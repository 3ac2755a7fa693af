use std::fmt;

use num_complex::Complex64;
use num_traits::Zero;

use crate::scalar::GScalar;

/// Univariate polynomial over `Q(i)`, coefficients lowest degree first.
///
/// The coefficient list never ends in a zero, so the zero polynomial is the
/// empty list and `degree` is well defined for everything else.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<GScalar>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<GScalar>) -> Self {
        while coeffs.last().is_some_and(GScalar::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(GScalar::one())
    }

    pub fn constant(c: GScalar) -> Self {
        Poly::new(vec![c])
    }

    /// `x^k`
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![GScalar::zero(); k + 1];
        c[k] = GScalar::one();
        Poly { coeffs: c }
    }

    /// `x - r`
    pub fn linear_root(r: &GScalar) -> Self {
        Poly::new(vec![-r, GScalar::one()])
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Poly::new(c.iter().map(|&v| GScalar::from_int(v)).collect())
    }

    pub fn from_roots(roots: &[GScalar]) -> Self {
        roots.iter().fold(Poly::one(), |acc, r| acc.mul(&Poly::linear_root(r)))
    }

    pub fn coeffs(&self) -> &[GScalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> GScalar {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&GScalar> {
        self.coeffs.last()
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(GScalar::is_real)
    }

    pub fn eval(&self, x: &GScalar) -> GScalar {
        let mut acc = GScalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn eval_f64(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c.to_complex64())
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|k| &self.coeff(k) + &o.coeff(k)).collect())
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|k| &self.coeff(k) - &o.coeff(k)).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![GScalar::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, k: &GScalar) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Divides by the leading coefficient; the zero polynomial stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(l) if !l.is_one() => {
                let inv = l.inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
            _ => self.clone(),
        }
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &GScalar::from_int(k as i64))
                .collect(),
        )
    }

    /// Euclidean division. Returns `None` when dividing by zero.
    pub fn div_rem(&self, d: &Poly) -> Option<(Poly, Poly)> {
        let dl = d.leading()?.inv()?;
        let dd = d.degree()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Poly::zero(), self.clone()));
        }
        let mut quot = vec![GScalar::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &dl;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    rem[k + j] -= &(&c * dc);
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Some((Poly::new(quot), Poly::new(rem)))
    }

    /// Exact quotient by `x - r` when `r` is a root.
    pub fn deflate(&self, r: &GScalar) -> Option<Poly> {
        let (q, rem) = self.div_rem(&Poly::linear_root(r))?;
        rem.is_zero().then_some(q)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Square-free decomposition (Yun): factors `f_1, f_2, ...` with
    /// `self = lc * f_1 * f_2^2 * f_3^3 ...`, each `f_k` monic and square-free.
    pub fn squarefree_decomposition(&self) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_rem(&a0).unwrap().0;
        let mut c = df.div_rem(&a0).unwrap().0;
        let mut d = c.sub(&b.derivative());
        let mut k = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), k));
            }
            b = b.div_rem(&a).unwrap().0;
            c = d.div_rem(&a).unwrap().0;
            d = c.sub(&b.derivative());
            k += 1;
        }
        out
    }

    /// `p(i*y)` as a polynomial in `y`.
    pub fn rotate_imaginary(&self) -> Poly {
        let mut unit = GScalar::one();
        let i = GScalar::i();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &unit);
            unit = &unit * &i;
        }
        Poly::new(out)
    }

    /// Real and imaginary parts as real polynomials: `p = re + i * im`.
    pub fn split_real_imag(&self) -> (Poly, Poly) {
        let re = self.coeffs.iter().map(|c| GScalar::real(c.re().clone())).collect();
        let im = self.coeffs.iter().map(|c| GScalar::real(c.im().clone())).collect();
        (Poly::new(re), Poly::new(im))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mut body = c.to_string();
            if !c.is_real() && !c.re().is_zero() {
                body = format!("({body})");
            }
            let neg = body.starts_with('-');
            let mag = body.trim_start_matches('-').to_string();
            let sign = match (first, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let term = match k {
                0 => mag,
                _ => {
                    let var = if k == 1 { "x".to_string() } else { format!("x^{k}") };
                    if mag == "1" {
                        var
                    } else {
                        format!("{mag}*{var}")
                    }
                }
            };
            write!(f, "{sign}{term}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
