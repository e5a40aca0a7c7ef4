//! Monic-in-Y bivariate polynomials over Z: the defining polynomials
//! P(T, Y) of the function-field extensions under study.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::{resultant, IntBivar, IntPoly, Poly, RatPoly};
use crate::error::{Error, Result};

/// P(T, Y) in `Z[T][Y]`, monic in Y of degree >= 1. Coefficient i of the
/// inner vector is the element of `Z[T]` multiplying Y^i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiPoly {
    inner: IntBivar,
}

impl BiPoly {
    /// Wraps a raw bivariate, checking the monic invariant.
    pub fn new(y_coeffs: Vec<IntPoly>) -> Result<Self> {
        let inner = IntBivar::from_coeffs(y_coeffs);
        let deg = inner.degree().ok_or(Error::ZeroPolynomial)?;
        if deg < 1 {
            return Err(Error::DegreeTooSmall { min: 1, got: deg });
        }
        let lead = inner.leading().unwrap();
        if lead != &IntPoly::from_coeffs(vec![BigInt::one()]) {
            return Err(Error::Parse(format!(
                "polynomial is not monic in Y (leading Y-coefficient {lead:?})"
            )));
        }
        Ok(BiPoly { inner })
    }

    /// Constructor from rows of small integer T-coefficients, constant first;
    /// row i gives the `Z[T]` coefficient of Y^i.
    pub fn from_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::new(rows.iter().map(|r| IntPoly::from_i64(r)).collect())
    }

    pub fn y_degree(&self) -> usize {
        self.inner.degree().unwrap()
    }

    pub fn y_coeffs(&self) -> &[IntPoly] {
        self.inner.coeffs()
    }

    pub fn as_bivar(&self) -> &IntBivar {
        &self.inner
    }

    /// Substitutes T = t0 coefficient-wise; the result is monic in Y of the
    /// same degree.
    pub fn eval_t(&self, t0: &BigRational) -> RatPoly {
        Poly::from_coeffs(
            self.inner
                .coeffs()
                .iter()
                .map(|c| c.eval_rational(t0))
                .collect(),
        )
    }

    /// n-th formal derivative with respect to Y. The result is generally not
    /// monic, so it is returned as a raw bivariate.
    pub fn derivative_y(&self, n: usize) -> IntBivar {
        self.inner.nth_derivative(n)
    }

    /// Discriminant with respect to Y:
    /// (-1)^(n(n-1)/2) * Res_Y(P, dP/dY) in `Z[T]`, n = deg_Y P.
    pub fn discriminant_y(&self) -> Result<IntPoly> {
        let n = self.y_degree();
        if n < 2 {
            return Err(Error::DegreeTooSmall { min: 2, got: n });
        }
        let res = resultant(&self.inner, &self.inner.derivative());
        if (n * (n - 1) / 2) % 2 == 1 {
            Ok(res.neg())
        } else {
            Ok(res)
        }
    }

    /// Largest T-degree over the Y-coefficients.
    pub fn t_degree(&self) -> usize {
        self.inner
            .coeffs()
            .iter()
            .map(|c| c.deg_or_0())
            .max()
            .unwrap_or(0)
    }
}

/// n-th Y-derivative of an unconstrained bivariate.
pub fn derivative_y_raw(p: &IntBivar, n: usize) -> IntBivar {
    p.nth_derivative(n)
}

/// Extracts a univariate integer polynomial in Y from a bivariate whose
/// coefficients are all constant in T.
pub fn bivar_to_y_poly(p: &IntBivar) -> Option<IntPoly> {
    let mut out = Vec::with_capacity(p.coeffs().len());
    for c in p.coeffs() {
        if c.deg_or_0() > 0 {
            return None;
        }
        out.push(c.coeffs().first().cloned().unwrap_or_else(|| BigInt::from(0)));
    }
    Some(IntPoly::from_coeffs(out))
}
