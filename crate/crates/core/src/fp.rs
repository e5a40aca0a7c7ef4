//! Prime-field polynomial arithmetic: gcds, squarefree parts, and
//! distinct-degree factorization. Degree patterns are all that is computed;
//! cycle types need degrees alone, so equal-degree splitting is omitted and
//! the kernel stays deterministic.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::{fmt_int_poly, BiPoly, Coeff, IntPoly, Poly};
use crate::primes::{is_prime, mul_mod};

/// Dense polynomial over F_p, coefficients reduced to [0, p), constant term
/// first, no trailing zeros. The modulus is carried by every value, so the
/// zero polynomial still knows its field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl FpPoly {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut f = FpPoly { p, coeffs: coeffs.into_iter().map(|c| c % p).collect() };
        f.trim();
        f
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn zero(p: u64) -> Self {
        FpPoly { p, coeffs: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        FpPoly::new(p, vec![1])
    }

    pub fn constant(p: u64, c: u64) -> Self {
        FpPoly::new(p, vec![c])
    }

    /// The monomial x^k.
    pub fn monomial(p: u64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        FpPoly { p, coeffs }
    }

    /// Coefficient-wise reduction of an integer polynomial.
    pub fn from_int_poly(f: &IntPoly, p: u64) -> Self {
        let pp = BigInt::from(p);
        FpPoly::new(
            p,
            f.coeffs()
                .iter()
                .map(|c| c.mod_floor(&pp).to_u64().expect("residue fits"))
                .collect(),
        )
    }

    /// Reduction of a rational polynomial; fails if p divides a denominator.
    pub fn from_rat_poly(f: &Poly<BigRational>, p: u64) -> Result<Self> {
        let pp = BigInt::from(p);
        let mut coeffs = Vec::with_capacity(f.coeffs().len());
        for c in f.coeffs() {
            let den = c.denom().mod_floor(&pp);
            if den.is_zero() {
                return Err(Error::Parse(format!("denominator of {c} vanishes mod {p}")));
            }
            let num = c.numer().mod_floor(&pp).to_u64().expect("residue fits");
            let den = den.to_u64().expect("residue fits");
            let den_inv = crate::primes::pow_mod(den, p - 2, p);
            coeffs.push(mul_mod(num, den_inv, p));
        }
        Ok(FpPoly::new(p, coeffs))
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn deg_or_0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> u64 {
        *self.coeffs.last().unwrap_or(&0)
    }

    fn same_field(&self, rhs: &Self) {
        assert_eq!(self.p, rhs.p, "modulus mismatch {} vs {}", self.p, rhs.p);
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.same_field(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![0u64; n];
        for (k, slot) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(k).copied().unwrap_or(0);
            let b = rhs.coeffs.get(k).copied().unwrap_or(0);
            *slot = (a + b) % self.p;
        }
        let mut f = FpPoly { p: self.p, coeffs: out };
        f.trim();
        f
    }

    pub fn neg(&self) -> Self {
        FpPoly {
            p: self.p,
            coeffs: self.coeffs.iter().map(|&c| if c == 0 { 0 } else { self.p - c }).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.same_field(rhs);
        if self.is_zero() || rhs.is_zero() {
            return FpPoly::zero(self.p);
        }
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, self.p)) % self.p;
            }
        }
        let mut f = FpPoly { p: self.p, coeffs: out };
        f.trim();
        f
    }

    pub fn scale(&self, c: u64) -> Self {
        let c = c % self.p;
        let mut f = FpPoly {
            p: self.p,
            coeffs: self.coeffs.iter().map(|&a| mul_mod(a, c, self.p)).collect(),
        };
        f.trim();
        f
    }

    fn inv_scalar(&self, c: u64) -> u64 {
        debug_assert!(!c.is_multiple_of(self.p));
        crate::primes::pow_mod(c, self.p - 2, self.p)
    }

    pub fn div_rem(&self, rhs: &Self) -> (Self, Self) {
        self.same_field(rhs);
        assert!(!rhs.is_zero(), "division by zero polynomial");
        let dl_inv = self.inv_scalar(rhs.lc());
        let dd = rhs.deg_or_0();
        let mut rem = self.clone();
        let mut quot = vec![0u64; self.coeffs.len().saturating_sub(rhs.coeffs.len()) + 1];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let q = mul_mod(rem.lc(), dl_inv, self.p);
            let k = rd - dd;
            let mut shifted = vec![0u64; k];
            shifted.extend(rhs.coeffs.iter().map(|&c| mul_mod(c, q, self.p)));
            rem = rem.sub(&FpPoly { p: self.p, coeffs: shifted });
            quot[k] = q;
        }
        let mut qp = FpPoly { p: self.p, coeffs: quot };
        qp.trim();
        (qp, rem)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.inv_scalar(self.lc()))
    }

    pub fn derivative(&self) -> Self {
        FpPoly::new(
            self.p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(c, (i as u64) % self.p, self.p))
                .collect(),
        )
    }

    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (mul_mod(acc, x, self.p) + c) % self.p;
        }
        acc
    }

    /// self^e modulo m, by repeated squaring.
    pub fn pow_mod(&self, e: u64, m: &Self) -> Self {
        self.same_field(m);
        let mut base = self.div_rem(m).1;
        let mut acc = FpPoly::one(self.p).div_rem(m).1;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).div_rem(m).1;
            }
            base = base.mul(&base).div_rem(m).1;
            e >>= 1;
        }
        acc
    }

    /// p-th root of a polynomial with vanishing derivative: over the prime
    /// field, f(Y) = g(Y)^p where g keeps every p-th coefficient.
    fn pth_root(&self) -> Self {
        let p = self.p as usize;
        FpPoly::new(
            self.p,
            self.coeffs.iter().step_by(p).copied().collect(),
        )
    }

    pub fn is_squarefree(&self) -> bool {
        if self.deg_or_0() == 0 {
            return !self.is_zero();
        }
        fp_gcd_unchecked(self, &self.derivative()).deg_or_0() == 0
    }
}

/// Monic gcd over F_p. The public entry point checks the moduli match.
pub fn fp_gcd(f: &FpPoly, g: &FpPoly) -> Result<FpPoly> {
    if f.modulus() != g.modulus() {
        return Err(Error::ModulusMismatch(f.modulus(), g.modulus()));
    }
    Ok(fp_gcd_unchecked(f, g))
}

fn fp_gcd_unchecked(f: &FpPoly, g: &FpPoly) -> FpPoly {
    let mut a = f.clone();
    let mut b = g.clone();
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b);
        a = b;
        b = r;
    }
    a.monic()
}

/// Product of the distinct irreducible factors of f, monic. Vanishing
/// derivatives (p-th powers) are handled by p-th-root recursion.
pub fn squarefree_part_fp(f: &FpPoly) -> Result<FpPoly> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    fn inner(f: &FpPoly) -> FpPoly {
        if f.deg_or_0() == 0 {
            return FpPoly::one(f.modulus());
        }
        let df = f.derivative();
        if df.is_zero() {
            return inner(&f.pth_root());
        }
        let g = fp_gcd_unchecked(f, &df);
        if g.deg_or_0() == 0 {
            return f.monic();
        }
        // distinct factors of f = distinct(f/g) ∪ distinct(g)
        let a = inner(&f.div_rem(&g).0);
        let b = inner(&g);
        let d = fp_gcd_unchecked(&a, &b);
        a.mul(&b).div_rem(&d).0.monic()
    }
    Ok(inner(f))
}

/// Multiset of irreducible-factor degrees, ascending; for a squarefree
/// reduction this is the cycle type of a Frobenius element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleType(Vec<u32>);

impl CycleType {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable();
        CycleType(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// lcm of the parts: the order of a permutation with this cycle type.
    pub fn order(&self) -> u64 {
        self.0.iter().fold(1u64, |acc, &k| acc.lcm(&(k as u64)))
    }

    pub fn parse(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("bad cycle type '{s}'")))?;
        if inner.trim().is_empty() {
            return Err(Error::Parse("empty cycle type".into()));
        }
        let parts = inner
            .split(',')
            .map(|x| x.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad part '{x}'"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(CycleType::new(parts))
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, part) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{part}")?;
        }
        write!(f, "]")
    }
}

/// Distinct-degree factorization pattern of a squarefree monic polynomial:
/// for d = 1, 2, ... the gcd with Y^(p^d) - Y strips every degree-d factor.
pub fn distinct_degree_pattern(f: &FpPoly) -> Result<CycleType> {
    if f.is_zero() || f.deg_or_0() == 0 {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_squarefree() {
        return Err(Error::NotSquarefree(format!("mod {}", f.modulus())));
    }
    let p = f.modulus();
    let mut g = f.monic();
    let mut parts: Vec<u32> = Vec::new();
    let mut x_pow = FpPoly::monomial(p, 1).div_rem(&g).1;
    let mut d = 0u32;
    while g.deg_or_0() >= 1 {
        d += 1;
        let deg_g = g.deg_or_0() as u32;
        if 2 * d > deg_g {
            // whatever remains is a single irreducible factor
            parts.push(deg_g);
            break;
        }
        x_pow = x_pow.pow_mod(p, &g);
        let h = fp_gcd_unchecked(&x_pow.sub(&FpPoly::monomial(p, 1)), &g);
        if h.deg_or_0() >= 1 {
            for _ in 0..(h.deg_or_0() as u32 / d) {
                parts.push(d);
            }
            g = g.div_rem(&h).0;
            if g.deg_or_0() == 0 {
                break;
            }
            x_pow = x_pow.div_rem(&g).1;
        }
    }
    Ok(CycleType::new(parts))
}

/// Frobenius cycle type of P(t0, Y) at q, or None when q must be skipped
/// (q divides the denominator of t0, or the reduction is not squarefree).
pub fn cycle_type_at(p: &BiPoly, t0: &BigRational, q: u64) -> Result<Option<CycleType>> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    let qq = BigInt::from(q);
    if t0.denom().mod_floor(&qq).is_zero() {
        return Ok(None);
    }
    let f = p.eval_t(t0);
    let fq = FpPoly::from_rat_poly(&f, q).expect("q-integral by the denominator check");
    if fq.degree() != Some(p.y_degree()) {
        // cannot happen for monic P, but keep the guard explicit
        return Ok(None);
    }
    if !fq.is_squarefree() {
        return Ok(None);
    }
    Ok(Some(distinct_degree_pattern(&fq)?))
}

/// True iff f has a root in F_p. Scans when p is small, otherwise reduces to
/// a gcd with Y^p - Y.
pub fn has_root_mod_p(f: &IntPoly, p: u64) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let fp = FpPoly::from_int_poly(f, p);
    if fp.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if fp.deg_or_0() == 0 {
        return Ok(false);
    }
    if p <= 4096 {
        Ok((0..p).any(|x| fp.eval(x) == 0))
    } else {
        let x_p = FpPoly::monomial(p, 1).pow_mod(p, &fp);
        let g = fp_gcd_unchecked(&x_p.sub(&FpPoly::monomial(p, 1)), &fp);
        Ok(g.deg_or_0() >= 1)
    }
}

// --- F_p[T] as a coefficient domain: bivariate work over F_p ---

/// Bivariate over F_p: a polynomial in Y whose coefficients live in `F_p[T]`.
pub type FpBivar = Poly<FpPoly>;

impl Coeff for FpPoly {
    fn zero_like(&self) -> Self {
        FpPoly::zero(self.p)
    }
    fn one_like(&self) -> Self {
        FpPoly::one(self.p)
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
        let (q, r) = self.div_rem(rhs);
        assert!(r.is_zero(), "inexact division in F_{}[T]", self.p);
        q
    }
    fn mul_usize_c(&self, n: usize) -> Self {
        self.scale((n as u64) % self.p)
    }
}

/// Coefficient-wise reduction of P(T, Y) modulo p; the shape is preserved.
pub fn reduce_bipoly(p: &BiPoly, q: u64) -> Result<FpBivar> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    Ok(Poly::from_coeffs(
        p.y_coeffs().iter().map(|c| FpPoly::from_int_poly(c, q)).collect(),
    ))
}

/// Reduction of a univariate integer polynomial modulo p.
pub fn reduce_int_poly(f: &IntPoly, q: u64) -> Result<FpPoly> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    Ok(FpPoly::from_int_poly(f, q))
}

/// Y-discriminant of a bivariate over F_p, same sign convention as over Z.
pub fn discriminant_y_fp(p: &FpBivar) -> Result<FpPoly> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    if n < 2 {
        return Err(Error::DegreeTooSmall { min: 2, got: n });
    }
    let res = crate::poly::resultant(p, &p.derivative());
    if (n * (n - 1) / 2) % 2 == 1 {
        Ok(res.neg())
    } else {
        Ok(res)
    }
}

/// Canonical form of an F_p polynomial in one variable.
pub fn fmt_fp_poly(f: &FpPoly, var: char) -> String {
    let ints = IntPoly::from_coeffs(f.coeffs().iter().map(|&c| BigInt::from(c)).collect());
    fmt_int_poly(&ints, var)
}

/// Canonical form of a bivariate over F_p: Y-descending, then T-descending.
pub fn fmt_fp_bivar(p: &FpBivar) -> String {
    let as_int: Poly<IntPoly> = p.map(|c| {
        IntPoly::from_coeffs(c.coeffs().iter().map(|&x| BigInt::from(x)).collect())
    });
    crate::poly::fmt_bivar(&as_int)
}
