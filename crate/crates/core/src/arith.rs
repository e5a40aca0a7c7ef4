//! Exact rational arithmetic helpers: p-adic valuations with the symbolic
//! conventions v(0) = +inf, v(inf) = -inf, and points of the projective line
//! over Q with reduction modulo primes.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::primes::is_prime;

/// Arbitrary-precision rational; the denominator is kept positive and the
/// fraction in lowest terms by the backing type.
pub type Rational = BigRational;

/// A p-adic valuation extended by the two symbolic endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtendedValuation {
    MinusInfinity,
    Finite(i64),
    PlusInfinity,
}

impl fmt::Display for ExtendedValuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedValuation::MinusInfinity => write!(f, "-inf"),
            ExtendedValuation::Finite(v) => write!(f, "{v}"),
            ExtendedValuation::PlusInfinity => write!(f, "+inf"),
        }
    }
}

/// A point of P^1(Q) in lowest terms: (a : b) with b >= 0, gcd(|a|, b) = 1,
/// and the point at infinity stored canonically as (1, 0).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    a: BigInt,
    b: BigInt,
}

impl ProjPoint {
    /// Lowest-terms representative of (a : b). Rejects (0, 0).
    pub fn new(a: BigInt, b: BigInt) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroProjectivePoint);
        }
        if b.is_zero() {
            return Ok(ProjPoint { a: BigInt::one(), b: BigInt::zero() });
        }
        let g = a.gcd(&b);
        let (mut a, mut b) = (a / &g, b / &g);
        if b.is_negative() {
            a = -a;
            b = -b;
        }
        Ok(ProjPoint { a, b })
    }

    pub fn infinity() -> Self {
        ProjPoint { a: BigInt::one(), b: BigInt::zero() }
    }

    pub fn from_rational(t: &Rational) -> Self {
        ProjPoint { a: t.numer().clone(), b: t.denom().clone() }
    }

    pub fn from_integer(n: i64) -> Self {
        ProjPoint { a: BigInt::from(n), b: BigInt::one() }
    }

    pub fn is_infinity(&self) -> bool {
        self.b.is_zero()
    }

    /// The rational value, or None at infinity.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.is_infinity() {
            None
        } else {
            Some(Rational::new(self.a.clone(), self.b.clone()))
        }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.a
    }

    pub fn denominator(&self) -> &BigInt {
        &self.b
    }

    /// Reduction to P^1(F_p). Well defined because gcd(a, b) = 1 keeps a and
    /// b from vanishing simultaneously mod p.
    pub fn reduce_mod_p(&self, p: u64) -> Result<P1Fp> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let pp = BigInt::from(p);
        let b_mod = self.b.mod_floor(&pp);
        if b_mod.is_zero() {
            return Ok(P1Fp::Infinity);
        }
        let a_mod = self.a.mod_floor(&pp);
        let a_u = big_to_u64(&a_mod);
        let b_u = big_to_u64(&b_mod);
        let b_inv = crate::primes::pow_mod(b_u, p - 2, p);
        Ok(P1Fp::Finite(crate::primes::mul_mod(a_u, b_inv, p)))
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinity() {
            write!(f, "inf")
        } else if self.b.is_one() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{}/{}", self.a, self.b)
        }
    }
}

/// A point of P^1(F_p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum P1Fp {
    Finite(u64),
    Infinity,
}

impl fmt::Display for P1Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            P1Fp::Finite(x) => write!(f, "{x}"),
            P1Fp::Infinity => write!(f, "inf"),
        }
    }
}

fn big_to_u64(x: &BigInt) -> u64 {
    use num_traits::ToPrimitive;
    x.to_u64().expect("residue fits in u64")
}

/// v_p of a point of Q ∪ {inf}: the difference of numerator and denominator
/// valuations for nonzero finite input, +inf at 0 and -inf at inf.
pub fn padic_valuation(x: &ProjPoint, p: u64) -> Result<ExtendedValuation> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if x.is_infinity() {
        return Ok(ExtendedValuation::MinusInfinity);
    }
    if x.a.is_zero() {
        return Ok(ExtendedValuation::PlusInfinity);
    }
    let pp = BigInt::from(p);
    Ok(ExtendedValuation::Finite(
        int_valuation(&x.a, &pp) - int_valuation(&x.b, &pp),
    ))
}

/// v_p of a nonzero rational, as a plain integer.
pub fn rational_valuation(x: &Rational, p: u64) -> Result<ExtendedValuation> {
    padic_valuation(&ProjPoint::from_rational(x), p)
}

fn int_valuation(n: &BigInt, p: &BigInt) -> i64 {
    debug_assert!(!n.is_zero());
    let mut v = 0i64;
    let mut n = n.clone();
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        v += 1;
        n = q;
    }
}

/// Parses "a/b", "a", or "inf" into a point of Q ∪ {inf}.
pub fn parse_point(s: &str) -> Result<ProjPoint> {
    let s = s.trim();
    if s == "inf" {
        return Ok(ProjPoint::infinity());
    }
    if let Some((num, den)) = s.split_once('/') {
        let a = BigInt::from_str(num.trim())
            .map_err(|_| Error::Parse(format!("bad numerator '{num}'")))?;
        let b = BigInt::from_str(den.trim())
            .map_err(|_| Error::Parse(format!("bad denominator '{den}'")))?;
        if b.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        ProjPoint::new(a, b)
    } else {
        let a =
            BigInt::from_str(s).map_err(|_| Error::Parse(format!("bad rational '{s}'")))?;
        Ok(ProjPoint { a, b: BigInt::one() })
    }
}

/// Parses a finite rational; "inf" is rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let pt = parse_point(s)?;
    pt.to_rational()
        .ok_or_else(|| Error::Parse("expected a finite rational, got inf".into()))
}
