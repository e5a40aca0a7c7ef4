//! Exact polynomial algebra over the coefficient domains used here: Z, Q,
//! `Z[T]` and `F_p[T]`. The kernel is generic over a coefficient trait so the
//! subresultant machinery is written once; constants are derived from sample
//! elements so domains with runtime context (prime moduli) participate.

mod bivar;
mod resultant;
mod squarefree;
mod text;

pub use bivar::{bivar_to_y_poly, derivative_y_raw, BiPoly};
pub use resultant::{pseudo_rem, resultant, subresultant_gcd};
pub use squarefree::{distinct_root_count, squarefree_decomposition};
pub use text::{
    fmt_bivar, fmt_int_poly, fmt_rat_poly, parse_bipoly, parse_int_poly, parse_rat_poly,
    ParsedPoly,
};

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Element of a commutative integral domain with exact division.
///
/// Methods carry a `_c` suffix to stay clear of the `std::ops` and
/// `num_traits` names on the implementing types. `zero_like`/`one_like`
/// produce constants of the same domain as `self`; `one_like` on a sample
/// that cannot name its domain (the zero polynomial of `F_p[T]`) panics, and
/// callers keep samples nonzero.
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_c(&self) -> bool;
    fn add_c(&self, rhs: &Self) -> Self;
    fn sub_c(&self, rhs: &Self) -> Self;
    fn mul_c(&self, rhs: &Self) -> Self;
    fn neg_c(&self) -> Self;
    /// Exact division in the domain; panics if `rhs` does not divide `self`.
    fn div_exact_c(&self, rhs: &Self) -> Self;
    fn mul_usize_c(&self, n: usize) -> Self;
}

impl Coeff for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn is_zero_c(&self) -> bool {
        self.is_zero()
    }
    fn add_c(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_c(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_c(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_c(&self) -> Self {
        -self
    }
    fn div_exact_c(&self, rhs: &Self) -> Self {
        let (q, r) = self.div_rem(rhs);
        assert!(r.is_zero(), "inexact integer division {self} / {rhs}");
        q
    }
    fn mul_usize_c(&self, n: usize) -> Self {
        self * BigInt::from(n)
    }
}

impl Coeff for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn is_zero_c(&self) -> bool {
        self.is_zero()
    }
    fn add_c(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_c(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_c(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_c(&self) -> Self {
        -self
    }
    fn div_exact_c(&self, rhs: &Self) -> Self {
        assert!(!rhs.is_zero(), "division by zero");
        self / rhs
    }
    fn mul_usize_c(&self, n: usize) -> Self {
        self * BigRational::from_integer(BigInt::from(n))
    }
}

/// Coefficient domains that are fields, enabling true polynomial division.
pub trait FieldCoeff: Coeff {
    fn inv_c(&self) -> Self;
}

impl FieldCoeff for BigRational {
    fn inv_c(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        self.recip()
    }
}

/// Dense univariate polynomial, constant term first. The coefficient vector
/// never has trailing zeros; the zero polynomial is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

/// Univariate polynomial over Z.
pub type IntPoly = Poly<BigInt>;
/// Univariate polynomial over Q.
pub type RatPoly = Poly<BigRational>;
/// Polynomial in the outer variable with `Z[T]` coefficients; the raw shape
/// behind [`BiPoly`], without the monic invariant.
pub type IntBivar = Poly<IntPoly>;

impl<C: Coeff> Poly<C> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    pub fn constant(c: C) -> Self {
        Poly::from_coeffs(vec![c])
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero_c()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree with deg 0 = 0 for the zero polynomial; convenient in bounds.
    pub fn deg_or_0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of the given power, or a zero derived from `sample`.
    pub fn coeff_or_zero(&self, k: usize, sample: &C) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(|| sample.zero_like())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let sample = &self.coeffs[0];
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let a = self.coeffs.get(k);
            let b = rhs.coeffs.get(k);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a.add_c(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => sample.zero_like(),
            });
        }
        Poly::from_coeffs(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Poly { coeffs: self.coeffs.iter().map(|c| c.neg_c()).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let sample = &self.coeffs[0];
        let mut out = vec![sample.zero_like(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero_c() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add_c(&a.mul_c(b));
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a.mul_c(c)).collect())
    }

    /// Multiplication by X^k.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let sample = self.coeffs[0].zero_like();
        let mut out = vec![sample; k];
        out.extend(self.coeffs.iter().cloned());
        Poly { coeffs: out }
    }

    /// Exact division; panics if `rhs` does not divide `self` in `C[X]`.
    pub fn div_exact(&self, rhs: &Self) -> Self {
        assert!(!rhs.is_zero(), "polynomial division by zero");
        if self.is_zero() {
            return Poly::zero();
        }
        let dl = rhs.leading().unwrap();
        let mut rem = self.clone();
        let mut quot = vec![dl.zero_like(); self.coeffs.len() - rhs.coeffs.len() + 1];
        while let Some(rd) = rem.degree() {
            let dd = rhs.degree().unwrap();
            assert!(rd >= dd, "inexact polynomial division (remainder of degree {rd})");
            let q = rem.leading().unwrap().div_exact_c(dl);
            let k = rd - dd;
            rem = rem.sub(&rhs.scale(&q).shift_up(k));
            quot[k] = q;
        }
        Poly::from_coeffs(quot)
    }

    /// Horner evaluation at a point of the coefficient domain.
    pub fn eval(&self, x: &C) -> C {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_c(x).add_c(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul_usize_c(i))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, n: usize) -> Self {
        let mut p = self.clone();
        for _ in 0..n {
            p = p.derivative();
        }
        p
    }

    pub fn pow(&self, e: usize) -> Self {
        match self.leading() {
            None => {
                if e == 0 {
                    panic!("0^0 of the zero polynomial has no sample element")
                } else {
                    Poly::zero()
                }
            }
            Some(lc) => {
                let mut acc = Poly::constant(lc.one_like());
                for _ in 0..e {
                    acc = acc.mul(self);
                }
                acc
            }
        }
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl<C: FieldCoeff> Poly<C> {
    /// Quotient and remainder over a field.
    pub fn div_rem(&self, rhs: &Self) -> (Self, Self) {
        assert!(!rhs.is_zero(), "polynomial division by zero");
        let dl_inv = rhs.leading().unwrap().inv_c();
        let dd = rhs.degree().unwrap();
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let q = rem.leading().unwrap().mul_c(&dl_inv);
            let k = rd - dd;
            let term = Poly::from_coeffs(vec![q.clone()]).shift_up(k);
            quot = quot.add(&term);
            rem = rem.sub(&rhs.scale(&q).shift_up(k));
        }
        (quot, rem)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) => self.scale(&lc.inv_c()),
        }
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd_monic(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

/// `C[X]` is itself a coefficient domain, so bivariate resultants reuse the
/// univariate kernel with polynomial coefficients.
impl<C: Coeff> Coeff for Poly<C> {
    fn zero_like(&self) -> Self {
        Poly::zero()
    }
    fn one_like(&self) -> Self {
        let sample = self
            .coeffs
            .first()
            .expect("one_like of the zero polynomial: no sample element");
        Poly::constant(sample.one_like())
    }
    fn is_zero_c(&self) -> bool {
        self.is_zero()
    }
    fn add_c(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn sub_c(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn mul_c(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn neg_c(&self) -> Self {
        self.neg()
    }
    fn div_exact_c(&self, rhs: &Self) -> Self {
        self.div_exact(rhs)
    }
    fn mul_usize_c(&self, n: usize) -> Self {
        Poly::from_coeffs(self.coeffs.iter().map(|c| c.mul_usize_c(n)).collect())
    }
}

impl IntPoly {
    /// Convenience constructor from small integers, constant term first.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn to_rat(&self) -> RatPoly {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.to_rat().eval(x)
    }

    /// Positive gcd of the coefficients. Rejects the zero polynomial.
    pub fn content(&self) -> Result<BigInt> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        Ok(g)
    }

    /// `self = content * primitive_part`; the sign stays in the primitive part.
    pub fn primitive_part(&self) -> Result<IntPoly> {
        let c = self.content()?;
        Ok(self.map(|a| a / &c))
    }

    /// Positive-leading-coefficient primitive gcd via the subresultant PRS.
    pub fn gcd(&self, rhs: &Self) -> IntPoly {
        if self.is_zero() {
            return make_positive(rhs.clone());
        }
        if rhs.is_zero() {
            return make_positive(self.clone());
        }
        let ca = self.content().unwrap();
        let cb = rhs.content().unwrap();
        let g = subresultant_gcd(&self.primitive_part().unwrap(), &rhs.primitive_part().unwrap());
        let g = make_positive(g.primitive_part().unwrap());
        g.scale(&ca.gcd(&cb))
    }

    /// Primitive squarefree part (distinct complex roots), positive leading
    /// coefficient.
    pub fn squarefree_part(&self) -> Result<IntPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let pp = self.primitive_part()?;
        if pp.deg_or_0() == 0 {
            return Ok(Poly::constant(BigInt::one()));
        }
        let g = pp.gcd(&pp.derivative());
        Ok(make_positive(pp.div_exact(&g)))
    }
}

fn make_positive(p: IntPoly) -> IntPoly {
    match p.leading() {
        Some(lc) if lc.is_negative() => p.neg(),
        _ => p,
    }
}

impl RatPoly {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::from_i64(coeffs).to_rat()
    }

    /// Clears denominators and content: the primitive integer polynomial with
    /// the same roots, sign preserved up to a positive factor.
    pub fn primitive_int(&self) -> Result<IntPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> =
            self.coeffs.iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect();
        IntPoly::from_coeffs(ints).primitive_part()
    }

    /// True iff gcd(f, f') is constant.
    pub fn is_separable(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.deg_or_0() == 0 {
            return Ok(true);
        }
        let g = self.gcd_monic(&self.derivative());
        Ok(g.deg_or_0() == 0)
    }
}

/// Discriminant of a univariate polynomial of degree >= 2 over Z:
/// (-1)^(n(n-1)/2) Res(f, f') / lc(f).
pub fn discriminant_int(f: &IntPoly) -> Result<BigInt> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n < 2 {
        return Err(Error::DegreeTooSmall { min: 2, got: n });
    }
    let res = resultant(f, &f.derivative());
    let sign_flip = (n * (n - 1) / 2) % 2 == 1;
    let signed = if sign_flip { -res } else { res };
    Ok(signed.div_exact_c(f.leading().unwrap()))
}

/// Same discriminant over Q.
pub fn discriminant_rat(f: &RatPoly) -> Result<BigRational> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n < 2 {
        return Err(Error::DegreeTooSmall { min: 2, got: n });
    }
    let res = resultant(f, &f.derivative());
    let sign_flip = (n * (n - 1) / 2) % 2 == 1;
    let signed = if sign_flip { -res } else { res };
    Ok(signed / f.leading().unwrap())
}
