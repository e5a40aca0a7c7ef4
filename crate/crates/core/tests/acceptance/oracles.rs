#![allow(clippy::needless_range_loop)] // indices here are degrees and matrix positions

//! Independent oracles for the acceptance property suites. Each one takes a
//! different computational route from the implementation it checks:
//! resultants via Sylvester determinants with fraction-free elimination,
//! real-root counts via Descartes bisection, the meet test via valuations,
//! and finite-field factor patterns via trial division.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use gspec_core::arith::{padic_valuation, ExtendedValuation, ProjPoint};
use gspec_core::fp::FpPoly;
use gspec_core::poly::{IntPoly, Poly, RatPoly};

// ---- Sylvester determinant route to resultants and discriminants ----

/// Determinant mod p by Gaussian elimination. A vanishing pivot column means
/// the determinant is divisible by p, a perfectly good residue.
fn det_mod_p(m: &[Vec<BigInt>], p: u64) -> u64 {
    use gspec_core::primes::{mul_mod, pow_mod};
    use num_integer::Integer;
    let n = m.len();
    let pp = BigInt::from(p);
    let mut a: Vec<Vec<u64>> = m
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| {
                    use num_traits::ToPrimitive;
                    x.mod_floor(&pp).to_u64().unwrap()
                })
                .collect()
        })
        .collect();
    let mut det = 1u64;
    for k in 0..n {
        let Some(pivot) = (k..n).find(|&i| a[i][k] != 0) else {
            return 0;
        };
        if pivot != k {
            a.swap(k, pivot);
            det = p - det;
        }
        let akk = a[k][k];
        det = mul_mod(det, akk, p);
        let inv = pow_mod(akk, p - 2, p);
        for i in k + 1..n {
            if a[i][k] == 0 {
                continue;
            }
            let factor = mul_mod(a[i][k], inv, p);
            for j in k..n {
                let sub = mul_mod(factor, a[k][j], p);
                a[i][j] = (a[i][j] + p - sub) % p;
            }
        }
    }
    det % p
}

/// Exact integer determinant by CRT over word-sized primes, with the
/// Hadamard bound deciding how many primes are needed.
fn crt_det(m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    // Hadamard: |det| <= prod of row 2-norms; bound with norm^2 products
    let mut bound_sq = BigInt::one();
    for row in &m {
        let norm_sq: BigInt = row.iter().map(|x| x * x).sum();
        bound_sq *= norm_sq + BigInt::one();
    }
    let bound = bound_sq.sqrt() + BigInt::one();

    let mut primes = Vec::new();
    let mut modulus = BigInt::one();
    let mut q = (1u64 << 62) + 1;
    while modulus <= &bound * BigInt::from(2) {
        while !gspec_core::primes::is_prime(q) {
            q += 1;
        }
        primes.push(q);
        modulus *= BigInt::from(q);
        q += 1;
    }

    // CRT accumulate
    let mut acc = BigInt::zero();
    let mut acc_mod = BigInt::one();
    for &p in &primes {
        let r = BigInt::from(det_mod_p(&m, p));
        let pp = BigInt::from(p);
        // acc' == acc (mod acc_mod), acc' == r (mod p)
        let diff = (&r - &acc) % &pp;
        let inv = mod_inverse(&acc_mod, &pp);
        let k = (diff * inv) % &pp;
        let k = if k.is_negative() { k + &pp } else { k };
        acc += k * &acc_mod;
        acc_mod *= pp;
    }
    // symmetric representative
    let half = &acc_mod / BigInt::from(2);
    let acc = acc % &acc_mod;
    let acc = if acc.is_negative() { acc + &acc_mod } else { acc };
    if acc > half {
        acc - acc_mod
    } else {
        acc
    }
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    use num_integer::Integer;
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one(), "not invertible");
    e.x.mod_floor(m)
}

/// Res(f, g) as the Sylvester determinant.
pub fn sylvester_resultant(f: &IntPoly, g: &IntPoly) -> BigInt {
    let m = f.degree().expect("nonzero f");
    let n = g.degree().expect("nonzero g");
    if m == 0 && n == 0 {
        return BigInt::one();
    }
    let size = m + n;
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    for (row, mrow) in mat.iter_mut().enumerate().take(n) {
        for (k, c) in f.coeffs().iter().enumerate() {
            mrow[row + m - k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in g.coeffs().iter().enumerate() {
            mat[n + row][row + n - k] = c.clone();
        }
    }
    crt_det(mat)
}

/// Discriminant of a monic integer polynomial via the Sylvester route.
pub fn sylvester_disc(f: &IntPoly) -> BigInt {
    let n = f.degree().expect("nonzero");
    assert!(n >= 2);
    let res = sylvester_resultant(f, &f.derivative());
    let signed = if (n * (n - 1) / 2) % 2 == 1 { -res } else { res };
    signed / f.leading().unwrap()
}

/// Exact interpolation through (x_i, y_i) in Newton form; panics if the
/// result is not an integer polynomial.
pub fn interpolate_int_poly(points: &[(BigInt, BigInt)]) -> IntPoly {
    let n = points.len();
    let xs: Vec<BigRational> =
        points.iter().map(|(x, _)| BigRational::from_integer(x.clone())).collect();
    let mut coef: Vec<BigRational> =
        points.iter().map(|(_, y)| BigRational::from_integer(y.clone())).collect();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = &coef[i] - &coef[i - 1];
            coef[i] = num / (&xs[i] - &xs[i - j]);
        }
    }
    // expand the Newton form to the monomial basis
    let mut acc: Poly<BigRational> = Poly::from_coeffs(vec![coef[n - 1].clone()]);
    for i in (0..n - 1).rev() {
        let lin = Poly::from_coeffs(vec![-xs[i].clone(), BigRational::one()]);
        acc = acc.mul(&lin).add(&Poly::from_coeffs(vec![coef[i].clone()]));
    }
    for c in acc.coeffs() {
        assert!(c.is_integer(), "interpolation produced non-integer {c}");
    }
    acc.map(|c| c.to_integer())
}

// ---- Descartes bisection real-root counting ----

fn sign_variations(coeffs: &[BigRational]) -> usize {
    let signs: Vec<i8> = coeffs
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| if c.is_positive() { 1 } else { -1 })
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Bound on the number of roots of g in (0, 1): sign variations of
/// (1+x)^n g(1/(1+x)).
fn descartes_01(g: &RatPoly) -> usize {
    let n = g.deg_or_0();
    let one_plus_x = RatPoly::from_i64(&[1, 1]);
    let mut acc: RatPoly = Poly::zero();
    for (k, c) in g.coeffs().iter().enumerate() {
        let term = one_plus_x.pow(n - k).scale(c);
        acc = acc.add(&term);
    }
    sign_variations(acc.coeffs())
}

/// Maps g to the interval (a, b): h(x) = g(a + (b-a)x).
fn map_to_unit(g: &RatPoly, a: &BigRational, b: &BigRational) -> RatPoly {
    let lin = Poly::from_coeffs(vec![a.clone(), b - a]);
    let mut acc: RatPoly = Poly::zero();
    for c in g.coeffs().iter().rev() {
        acc = acc.mul(&lin).add(&Poly::from_coeffs(vec![c.clone()]));
    }
    acc
}

fn count_in(g: &RatPoly, a: &BigRational, b: &BigRational) -> usize {
    let mapped = map_to_unit(g, a, b);
    match descartes_01(&mapped) {
        0 => 0,
        1 => 1,
        _ => {
            let mid = (a + b) / BigRational::from_integer(2.into());
            let at_mid = usize::from(g.eval(&mid).is_zero());
            count_in(g, a, &mid) + at_mid + count_in(g, &mid, b)
        }
    }
}

/// Number of distinct real roots by Descartes bisection on the squarefree
/// part (computed by plain rational Euclid, a different route from the
/// subresultant gcd used by the Sturm chain).
pub fn descartes_real_root_count(f: &IntPoly) -> usize {
    let fr = f.to_rat();
    let d = fr.degree().expect("nonzero");
    if d == 0 {
        return 0;
    }
    let g = {
        let gcd = fr.gcd_monic(&fr.derivative());
        fr.div_rem(&gcd).0
    };
    // Cauchy bound: every root has |r| < 1 + max |a_i| / |lead|
    let lead = g.leading().unwrap().abs();
    let maxc = g
        .coeffs()
        .iter()
        .map(|c| c.abs())
        .fold(BigRational::zero(), |a, b| if a > b { a } else { b });
    let bound = BigRational::one() + maxc / lead;
    count_in(&g, &(-bound.clone()), &bound)
}

// ---- Definition-style valuation oracle for the meet test ----

fn ge0(v: ExtendedValuation) -> bool {
    match v {
        ExtendedValuation::MinusInfinity => false,
        ExtendedValuation::Finite(x) => x >= 0,
        ExtendedValuation::PlusInfinity => true,
    }
}

fn le0(v: ExtendedValuation) -> bool {
    match v {
        ExtendedValuation::MinusInfinity => true,
        ExtendedValuation::Finite(x) => x <= 0,
        ExtendedValuation::PlusInfinity => false,
    }
}

fn gt0(v: ExtendedValuation) -> bool {
    match v {
        ExtendedValuation::MinusInfinity => false,
        ExtendedValuation::Finite(x) => x > 0,
        ExtendedValuation::PlusInfinity => true,
    }
}

fn invert(t: &ProjPoint) -> ProjPoint {
    ProjPoint::new(t.denominator().clone(), t.numerator().clone()).expect("invertible point")
}

fn val_of_difference(a: &ProjPoint, b: &ProjPoint, p: u64) -> ExtendedValuation {
    match (a.to_rational(), b.to_rational()) {
        (Some(x), Some(y)) => {
            let d = x - y;
            padic_valuation(&ProjPoint::from_rational(&d), p).unwrap()
        }
        // differences involving infinity only arise through the reciprocal
        // chart in the oracle below; treat them as valuation -inf
        _ => ExtendedValuation::MinusInfinity,
    }
}

/// Direct reading of the two-chart meet definition: either both points are
/// finite at p and coincide to positive valuation, or both are infinite at p
/// and their reciprocals coincide to positive valuation.
pub fn meets_by_valuations(t0: &ProjPoint, t1: &ProjPoint, p: u64) -> bool {
    let v0 = padic_valuation(t0, p).unwrap();
    let v1 = padic_valuation(t1, p).unwrap();
    let case_a = ge0(v0) && ge0(v1) && gt0(val_of_difference(t0, t1, p));
    if case_a {
        return true;
    }
    let r0 = invert(t0);
    let r1 = invert(t1);
    le0(v0) && le0(v1) && gt0(val_of_difference(&r0, &r1, p))
}

// ---- Trial-division factor patterns over small prime fields ----

/// All monic polynomials of exact degree d over F_p, by counting.
fn monic_polys(p: u64, d: usize) -> Vec<FpPoly> {
    let count = (p as usize).pow(d as u32);
    let mut out = Vec::with_capacity(count);
    for idx in 0..count {
        let mut coeffs = Vec::with_capacity(d + 1);
        let mut rem = idx;
        for _ in 0..d {
            coeffs.push((rem % p as usize) as u64);
            rem /= p as usize;
        }
        coeffs.push(1);
        out.push(FpPoly::new(p, coeffs));
    }
    out
}

/// Monic irreducibles over F_p of degree 1..=max_deg, by trial division.
pub fn irreducibles(p: u64, max_deg: usize) -> Vec<Vec<FpPoly>> {
    let mut by_deg: Vec<Vec<FpPoly>> = vec![Vec::new()];
    for d in 1..=max_deg {
        let mut irr = Vec::new();
        'cand: for f in monic_polys(p, d) {
            for lower in 1..=d / 2 {
                for g in &by_deg[lower] {
                    if f.div_rem(g).1.is_zero() {
                        continue 'cand;
                    }
                }
            }
            irr.push(f);
        }
        by_deg.push(irr);
    }
    by_deg
}

/// Factor degree multiset of a squarefree monic polynomial, by trial
/// division against the precomputed irreducibles.
pub fn trial_division_pattern(f: &FpPoly, irreducibles: &[Vec<FpPoly>]) -> Vec<u32> {
    let mut rest = f.monic();
    let mut parts = Vec::new();
    for d in 1..irreducibles.len() {
        for g in &irreducibles[d] {
            if rest.deg_or_0() == 0 {
                break;
            }
            let (q, r) = rest.div_rem(g);
            if r.is_zero() {
                parts.push(d as u32);
                rest = q;
            }
        }
    }
    assert_eq!(rest.deg_or_0(), 0, "trial division left a factor");
    parts.sort_unstable();
    parts
}
