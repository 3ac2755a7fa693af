//! Exact Gaussian rationals: complex numbers whose real and imaginary parts
//! are arbitrary-precision rationals.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// An element of `Q(i)`.
///
/// Both parts are kept in lowest terms with positive denominators (this is
/// what `BigRational` guarantees), so the derived equality is exact equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GScalar {
    re: BigRational,
    im: BigRational,
}

impl GScalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GScalar { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        GScalar { re, im: BigRational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num / den` as a real scalar.
    ///
    /// # Panics
    ///
    /// Panics if `den` is zero.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::real(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn i() -> Self {
        GScalar { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn zero() -> Self {
        GScalar::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.im.is_zero() && self.re.is_one()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GScalar { re: self.re.clone(), im: -self.im.clone() }
    }

    /// `|z|^2`, which is always rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GScalar { re: &self.re / &n, im: -(&self.im / &n) })
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        GScalar { re: &self.re * k, im: &self.im * k }
    }

    pub fn to_complex64(&self) -> Complex64 {
        Complex64::new(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }

    pub fn abs_f64(&self) -> f64 {
        self.to_complex64().norm()
    }

    /// Least common multiple of the denominators of both parts.
    pub fn denominator_lcm(&self) -> BigInt {
        num_integer::lcm(self.re.denom().clone(), self.im.denom().clone())
    }

    /// Total order used only to make outputs deterministic: by real part,
    /// then by imaginary part.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.re.cmp(&other.re).then_with(|| self.im.cmp(&other.im))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = GScalar::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn sqr(&self) -> Self {
        self * self
    }
}

/// Converts without overflowing on huge numerators and denominators.
pub(crate) fn rational_to_f64(r: &BigRational) -> f64 {
    if let (Some(n), Some(d)) = (r.numer().to_f64(), r.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    // Shift both to at most ~1000 bits so the quotient stays representable.
    let nb = r.numer().bits() as i64;
    let db = r.denom().bits() as i64;
    let shift_n = (nb - 900).max(0) as usize;
    let shift_d = (db - 900).max(0) as usize;
    let n = (r.numer() >> shift_n).to_f64().unwrap_or(0.0);
    let d = (r.denom() >> shift_d).to_f64().unwrap_or(1.0);
    n / d * 2f64.powi(shift_n as i32 - shift_d as i32)
}

pub(crate) fn parse_rational(text: &str) -> Result<BigRational, Error> {
    let t = text.trim();
    if t.is_empty() {
        return Err(Error::Parse(format!("empty rational in {text:?}")));
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let parse_int = |s: &str| -> Result<BigInt, Error> {
        let ok = !s.is_empty()
            && s.trim_start_matches(['+', '-']).chars().all(|c| c.is_ascii_digit())
            && s.trim_start_matches(['+', '-']).len() + 1 >= s.len();
        if !ok {
            return Err(Error::Parse(format!("malformed rational {text:?}")));
        }
        BigInt::from_str(s).map_err(|_| Error::Parse(format!("malformed rational {text:?}")))
    };
    let n = parse_int(num)?;
    let d = parse_int(den)?;
    if d.is_zero() {
        return Err(Error::ZeroDenominator(text.to_string()));
    }
    Ok(BigRational::new(n, d))
}

impl FromStr for GScalar {
    type Err = Error;

    /// Accepts `p`, `p/q`, and complex forms such as `1/2+3/4i`, `-i`, `2i`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        let Some(body) = t.strip_suffix('i') else {
            return Ok(GScalar::real(parse_rational(&t)?));
        };
        // Split at the last sign that is not the leading character.
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(k, _)| k)
            .last();
        let (re_part, im_part) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("", body),
        };
        let im = match im_part {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            other => parse_rational(other.trim_end_matches('*'))?,
        };
        let re = if re_part.is_empty() { BigRational::zero() } else { parse_rational(re_part)? };
        Ok(GScalar { re, im })
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return f.write_str(&fmt_rational(&self.re));
        }
        let im_abs = self.im.abs();
        let im_txt = if im_abs.is_one() { String::new() } else { fmt_rational(&im_abs) };
        let sign = if self.im.is_negative() { "-" } else { "+" };
        if self.re.is_zero() {
            let lead = if self.im.is_negative() { "-" } else { "" };
            write!(f, "{lead}{im_txt}i")
        } else {
            write!(f, "{}{sign}{im_txt}i", fmt_rational(&self.re))
        }
    }
}

impl fmt::Debug for GScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for GScalar {
    fn from(n: i64) -> Self {
        GScalar::from_int(n)
    }
}

impl From<BigRational> for GScalar {
    fn from(r: BigRational) -> Self {
        GScalar::real(r)
    }
}

impl<'a> Add<&'a GScalar> for &'a GScalar {
    type Output = GScalar;
    fn add(self, o: &GScalar) -> GScalar {
        GScalar { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl<'a> Sub<&'a GScalar> for &'a GScalar {
    type Output = GScalar;
    fn sub(self, o: &GScalar) -> GScalar {
        GScalar { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl<'a> Mul<&'a GScalar> for &'a GScalar {
    type Output = GScalar;
    fn mul(self, o: &GScalar) -> GScalar {
        if self.im.is_zero() && o.im.is_zero() {
            return GScalar::real(&self.re * &o.re);
        }
        GScalar {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl<'a> Div<&'a GScalar> for &'a GScalar {
    type Output = GScalar;
    /// # Panics
    ///
    /// Panics on division by zero.
    fn div(self, o: &GScalar) -> GScalar {
        if o.im.is_zero() {
            return GScalar { re: &self.re / &o.re, im: &self.im / &o.re };
        }
        self * &o.inv().expect("division by zero scalar")
    }
}

impl Neg for &GScalar {
    type Output = GScalar;
    fn neg(self) -> GScalar {
        GScalar { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl Neg for GScalar {
    type Output = GScalar;
    fn neg(self) -> GScalar {
        GScalar { re: -self.re, im: -self.im }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<GScalar> for GScalar {
            type Output = GScalar;
            fn $m(self, o: GScalar) -> GScalar {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a GScalar> for GScalar {
            type Output = GScalar;
            fn $m(self, o: &GScalar) -> GScalar {
                (&self).$m(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&GScalar> for GScalar {
    fn add_assign(&mut self, o: &GScalar) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl SubAssign<&GScalar> for GScalar {
    fn sub_assign(&mut self, o: &GScalar) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

impl MulAssign<&GScalar> for GScalar {
    fn mul_assign(&mut self, o: &GScalar) {
        *self = &*self * o;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> GScalar {
        t.parse().unwrap()
    }

    #[test]
    fn parses_real_and_complex_forms() {
        assert_eq!(s("3"), GScalar::from_int(3));
        assert_eq!(s("-1/2"), GScalar::ratio(-1, 2));
        assert_eq!(s("2/4"), GScalar::ratio(1, 2));
        assert_eq!(s("i"), GScalar::i());
        assert_eq!(s("-i"), -GScalar::i());
        assert_eq!(s("1/2+3/4i"), GScalar::ratio(1, 2) + GScalar::i() * GScalar::ratio(3, 4));
        assert_eq!(s("-1-2i"), GScalar::from_int(-1) - GScalar::i() * GScalar::from_int(2));
        assert_eq!(s("2i"), GScalar::i() * GScalar::from_int(2));
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!("1/0".parse::<GScalar>(), Err(Error::ZeroDenominator(_))));
        assert!("abc".parse::<GScalar>().is_err());
        assert!("1/2/3".parse::<GScalar>().is_err());
        assert!("".parse::<GScalar>().is_err());
        assert!("--1".parse::<GScalar>().is_err());
    }

    #[test]
    fn display_round_trips() {
        for t in ["0", "7", "-1/12", "i", "-i", "3/4i", "1/2-5i", "-2+1/3i"] {
            assert_eq!(s(t).to_string(), t);
            assert_eq!(s(&s(t).to_string()), s(t));
        }
    }

    #[test]
    fn field_arithmetic() {
        let a = s("1+2i");
        let b = s("3-i");
        assert_eq!(&a * &b, s("5+5i"));
        assert_eq!(&(&a / &b) * &b, a);
        assert_eq!(s("i").sqr(), GScalar::from_int(-1));
        assert!(GScalar::zero().inv().is_none());
    }

    #[test]
    fn huge_rationals_convert_to_finite_floats() {
        let big = BigInt::from(10).pow(400);
        let r = BigRational::new(big.clone() * 3, big);
        assert!((rational_to_f64(&r) - 3.0).abs() < 1e-12);
    }
}
