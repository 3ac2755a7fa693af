use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exactla::{DenseMatrix, Poly};
use crate::scalar::GScalar;

/// Characteristic polynomial `det(xI - A)` via the Faddeev–LeVerrier
/// recurrence:
///
/// ```text
/// M_0 = 0,  c_n = 1
/// M_k = A M_{k-1} + c_{n-k+1} I
/// c_{n-k} = -tr(A M_k) / k
/// ```
///
/// Every division is by a small integer, so the computation stays exact.
pub fn char_poly(a: &DenseMatrix) -> Result<Poly> {
    if !a.is_square() {
        return Err(Error::InvalidInput(format!(
            "characteristic polynomial of a {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    let mut coeffs = vec![GScalar::zero(); n + 1];
    coeffs[n] = GScalar::one();
    let mut m = DenseMatrix::zeros(n, n);
    for k in 1..=n {
        let mut next = a.mul(&m)?;
        let c = &coeffs[n - k + 1];
        if !c.is_zero() {
            for i in 0..n {
                next[(i, i)] += c;
            }
        }
        m = next;
        let tr = a.mul(&m)?.trace();
        let inv_k = BigRational::new(BigInt::from(-1), BigInt::from(k));
        coeffs[n - k] = tr.scale(&inv_k);
    }
    Ok(Poly::new(coeffs))
}

/// True iff the characteristic polynomial is exactly `x^n`.
pub fn is_nilpotent_matrix(a: &DenseMatrix) -> Result<bool> {
    let p = char_poly(a)?;
    Ok(p == Poly::monomial(a.rows()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_gives_square_of_linear_factor() {
        assert_eq!(char_poly(&DenseMatrix::identity(2)).unwrap(), Poly::from_ints(&[1, -2, 1]));
    }

    #[test]
    fn square_element_operator() {
        let m = DenseMatrix::from_ratios(&[&[(1, 4), (-1, 4)], &[(1, 6), (-1, 6)]]);
        let p = char_poly(&m).unwrap();
        assert_eq!(p, Poly::new(vec![GScalar::zero(), GScalar::ratio(-1, 12), GScalar::one()]));
    }

    #[test]
    fn zero_matrix() {
        assert_eq!(char_poly(&DenseMatrix::zeros(3, 3)).unwrap(), Poly::monomial(3));
    }

    #[test]
    fn non_square_is_rejected() {
        assert!(char_poly(&DenseMatrix::zeros(2, 3)).is_err());
        assert!(is_nilpotent_matrix(&DenseMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn nilpotency() {
        assert!(is_nilpotent_matrix(&DenseMatrix::from_ints(&[&[0, 0], &[1, 0]])).unwrap());
        assert!(!is_nilpotent_matrix(&DenseMatrix::from_ints(&[&[0, 1], &[1, 0]])).unwrap());
        assert!(!is_nilpotent_matrix(&DenseMatrix::identity(3)).unwrap());
    }

    #[test]
    fn empty_matrix_has_constant_one() {
        assert_eq!(char_poly(&DenseMatrix::zeros(0, 0)).unwrap(), Poly::one());
    }
}
