//! Branch-point superset extraction and the specialisation certificates:
//! the "meet modulo p" test on the homogenized discriminant form, excluded
//! residues, t0 search, the vertical-ramification test, and the combined
//! unramifiedness certificate.
//!
//! Branch points away from infinity are roots of the Y-discriminant, so
//! `{roots of disc} ∪ {inf}` is a certified superset; avoiding the superset
//! is sound for unramifiedness.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::arith::{P1Fp, ProjPoint};
use crate::error::{Error, Result};
use crate::fp::{fmt_fp_poly, reduce_int_poly};
use crate::poly::{distinct_root_count, squarefree_decomposition, BiPoly, IntPoly};
use crate::primes::is_prime;

/// Primitive binary form `F(A, B)` of degree d = deg(disc), homogenizing
/// the discriminant: coefficient `i` multiplies A^i B^(d-i), and F(a, 1)
/// reconstructs disc(a) / content.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinForm {
    coeffs: Vec<BigInt>,
}

impl BinForm {
    /// Primitive homogenization of a nonzero integer polynomial.
    pub fn homogenize(disc: &IntPoly) -> Result<BinForm> {
        let pp = disc.primitive_part()?;
        Ok(BinForm { coeffs: pp.coeffs().to_vec() })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// F(a, b), exact.
    pub fn eval(&self, a: &BigInt, b: &BigInt) -> BigInt {
        let d = self.degree();
        let mut sum = BigInt::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            sum += c * a.pow(i as u32) * b.pow((d - i) as u32);
        }
        sum
    }
}

/// Certified branch-point superset of the extension defined by P(T, Y).
#[derive(Debug, Clone)]
pub struct BranchData {
    /// Canonical text of the defining polynomial.
    pub source: String,
    /// The Y-discriminant in `Z[T]`.
    pub disc: IntPoly,
    /// Primitive homogenization of the discriminant.
    pub form: BinForm,
    /// Whether infinity is conservatively counted as a possible branch point.
    pub include_infinity: bool,
    /// Squarefree decomposition of the discriminant (scalar dropped).
    pub squarefree_factors: Vec<(IntPoly, u32)>,
    /// Number of distinct complex roots of the discriminant, plus one for
    /// infinity when included. An upper bound for the branch-point count.
    pub branch_bound: usize,
}

/// Builds branch data from the defining polynomial. Fails when the
/// discriminant vanishes (P not separable over Q(T)).
pub fn branch_data(p: &BiPoly) -> Result<BranchData> {
    let disc = p.discriminant_y()?;
    if disc.is_zero() {
        return Err(Error::NotSeparableOverQt);
    }
    BranchData::from_discriminant(p.to_string(), disc, true)
}

impl BranchData {
    /// Branch data from an explicit discriminant; used by tests that need
    /// constructed root configurations.
    pub fn from_discriminant(
        source: String,
        disc: IntPoly,
        include_infinity: bool,
    ) -> Result<BranchData> {
        if disc.is_zero() {
            return Err(Error::NotSeparableOverQt);
        }
        let (_, squarefree_factors) = squarefree_decomposition(&disc)?;
        let roots = distinct_root_count(&squarefree_factors);
        let form = BinForm::homogenize(&disc)?;
        Ok(BranchData {
            source,
            disc,
            form,
            include_infinity,
            squarefree_factors,
            branch_bound: roots + usize::from(include_infinity),
        })
    }
}

/// True iff t0 meets the branch superset modulo p: p divides F(a, b) for the
/// lowest-terms t0 = (a : b), or t0 reduces to infinity while infinity is in
/// the superset.
pub fn meets_mod_p(t0: &ProjPoint, branch: &BranchData, p: u64) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let value = branch.form.eval(t0.numerator(), t0.denominator());
    if value.mod_floor(&BigInt::from(p)).is_zero() {
        return Ok(true);
    }
    if branch.include_infinity && t0.reduce_mod_p(p)? == P1Fp::Infinity {
        return Ok(true);
    }
    Ok(false)
}

/// The residue classes in P^1(F_p) excluded by the branch superset: the
/// projective roots of F mod p, together with infinity when included.
/// Cardinality is at most `branch_bound`.
pub fn excluded_residues(branch: &BranchData, p: u64) -> Result<Vec<P1Fp>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let pp = BigInt::from(p);
    let d = branch.form.degree();
    let reduced: Vec<u64> = branch
        .form
        .coeffs()
        .iter()
        .map(|c| c.mod_floor(&pp).to_u64().expect("residue fits"))
        .collect();
    let mut out = Vec::new();
    // finite residues: roots of F(x, 1) mod p
    for x in 0..p {
        let mut sum = 0u64;
        let mut xpow = 1u64;
        for &c in &reduced {
            sum = (sum + crate::primes::mul_mod(c, xpow, p)) % p;
            xpow = crate::primes::mul_mod(xpow, x, p);
        }
        if sum == 0 {
            out.push(P1Fp::Finite(x));
        }
    }
    // the point at infinity is a projective root iff the A^d coefficient
    // vanishes mod p
    let infinity_is_root = reduced[d] == 0;
    if infinity_is_root || branch.include_infinity {
        out.push(P1Fp::Infinity);
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Smallest non-negative integer below `bound` whose residue class avoids
/// every excluded residue. Requires bound >= p; fails when every residue
/// class of the integers is excluded.
pub fn search_t0(branch: &BranchData, p: u64, bound: u64) -> Result<u64> {
    if bound < p {
        return Err(Error::Parse(format!("search bound {bound} below p = {p}")));
    }
    let excluded = excluded_residues(branch, p)?;
    let finite: Vec<u64> = excluded
        .iter()
        .filter_map(|r| match r {
            P1Fp::Finite(x) => Some(*x),
            P1Fp::Infinity => None,
        })
        .collect();
    if finite.len() as u64 >= p {
        return Err(Error::ResidueSaturation(p));
    }
    for t in 0..bound {
        if !finite.contains(&(t % p)) {
            return Ok(t);
        }
    }
    Err(Error::ResidueSaturation(p))
}

/// True iff the discriminant does not vanish modulo p, which rules out
/// vertical ramification at p.
pub fn vertical_ramification_excluded(p: &BiPoly, q: u64) -> Result<bool> {
    let disc = p.discriminant_y()?;
    Ok(!reduce_int_poly(&disc, q)?.is_zero())
}

/// The unramifiedness certificate for a specialisation point: vertical
/// ramification excluded and no meet with the branch superset.
#[derive(Debug, Clone)]
pub struct UnramifiednessCertificate {
    pub p: u64,
    pub t0: ProjPoint,
    pub vertical_ok: bool,
    /// Witness for the vertical test: the reduced discriminant, canonical text.
    pub disc_mod_p: String,
    pub meets_none: bool,
    /// The excluded residue set used by the meet test.
    pub excluded: Vec<P1Fp>,
    /// F(a, b) mod p for the lowest-terms specialisation point.
    pub form_value_mod_p: u64,
    pub verdict: bool,
}

/// Certifies that the specialisation at a finite, non-branch t0 is unramified
/// at p, recording all witnesses. The verdict is the conjunction of the
/// vertical test and the meet test.
pub fn unramified_certificate(
    p: &BiPoly,
    q: u64,
    t0: &ProjPoint,
) -> Result<UnramifiednessCertificate> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    let branch = branch_data(p)?;
    let t0_rat = t0
        .to_rational()
        .ok_or_else(|| Error::PossibleBranchPoint("inf".to_string()))?;
    if branch.disc.eval_rational(&t0_rat).is_zero() {
        return Err(Error::PossibleBranchPoint(t0.to_string()));
    }
    let disc_mod = reduce_int_poly(&branch.disc, q)?;
    let vertical_ok = !disc_mod.is_zero();
    let meets = meets_mod_p(t0, &branch, q)?;
    let excluded = excluded_residues(&branch, q)?;
    let form_value = branch
        .form
        .eval(t0.numerator(), t0.denominator())
        .mod_floor(&BigInt::from(q))
        .to_u64()
        .expect("residue fits");
    Ok(UnramifiednessCertificate {
        p: q,
        t0: t0.clone(),
        vertical_ok,
        disc_mod_p: fmt_fp_poly(&disc_mod, 'T'),
        meets_none: !meets,
        excluded,
        form_value_mod_p: form_value,
        verdict: vertical_ok && !meets,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn y5_y4_t() -> BiPoly {
        BiPoly::from_rows(&[&[0, -1], &[], &[], &[], &[-1], &[1]]).unwrap()
    }

    #[test]
    fn branch_data_examples() {
        let b = branch_data(&y5_y4_t()).unwrap();
        assert_eq!(b.branch_bound, 3); // roots {0, -256/3125} plus infinity
        assert_eq!(b.form.degree(), 4);

        let q = BiPoly::from_rows(&[&[0, -1], &[], &[1]]).unwrap(); // Y^2 - T
        let b = branch_data(&q).unwrap();
        assert_eq!(b.branch_bound, 2);

        // Non-separable: Y^2 - 2TY + T^2 = (Y - T)^2
        let bad = BiPoly::from_rows(&[&[0, 0, 1], &[0, -2], &[1]]).unwrap();
        assert!(matches!(branch_data(&bad), Err(Error::NotSeparableOverQt)));

        // degree-11 family: squarefree part is a cubic, bound 4 with infinity
        let p11 = crate::catalog::lookup("psl2f11-p11").unwrap().bipoly.unwrap();
        let b = branch_data(&p11).unwrap();
        assert_eq!(b.branch_bound, 4);
        assert_eq!(b.squarefree_factors.len(), 1);
        assert_eq!(b.squarefree_factors[0].0.deg_or_0(), 3);
    }

    #[test]
    fn meet_examples() {
        let b = branch_data(&y5_y4_t()).unwrap();
        // t0 = 1 at p = 5: F(1,1) = 3381 = 3 * 7^2 * 23, no factor 5
        let one = ProjPoint::from_integer(1);
        assert!(!meets_mod_p(&one, &b, 5).unwrap());
        assert!(meets_mod_p(&one, &b, 3).unwrap());
        assert!(meets_mod_p(&one, &b, 7).unwrap());
        assert!(meets_mod_p(&one, &b, 23).unwrap());
        // t0 = 0 is a root of the discriminant: meets for every p
        let zero = ProjPoint::from_integer(0);
        for p in [2u64, 5, 11, 97] {
            assert!(meets_mod_p(&zero, &b, p).unwrap());
        }
        // t0 = 5 meets the branch point 0 modulo 5
        let five = ProjPoint::from_integer(5);
        assert!(meets_mod_p(&five, &b, 5).unwrap());
        // infinity meets the conservative infinity branch point everywhere
        assert!(meets_mod_p(&ProjPoint::infinity(), &b, 13).unwrap());
    }

    #[test]
    fn excluded_residue_examples() {
        let b = branch_data(&y5_y4_t()).unwrap();
        // F = 3125A^4 + 256A^3B == A^3 B (mod 5): roots A=0, B=0
        assert_eq!(
            excluded_residues(&b, 5).unwrap(),
            vec![P1Fp::Finite(0), P1Fp::Infinity]
        );
        let q = BiPoly::from_rows(&[&[0, -1], &[], &[1]]).unwrap();
        let b = branch_data(&q).unwrap();
        assert_eq!(
            excluded_residues(&b, 7).unwrap(),
            vec![P1Fp::Finite(0), P1Fp::Infinity]
        );
        // Saturation: disc = T(T-1)(T+1) covers all of P^1(F_2)
        let disc = IntPoly::from_i64(&[0, -1, 0, 1]);
        let b = BranchData::from_discriminant("test".into(), disc, true).unwrap();
        assert_eq!(
            excluded_residues(&b, 2).unwrap(),
            vec![P1Fp::Finite(0), P1Fp::Finite(1), P1Fp::Infinity]
        );
        assert!(excluded_residues(&b, 2).unwrap().len() <= b.branch_bound);
    }

    #[test]
    fn search_examples() {
        let b = branch_data(&y5_y4_t()).unwrap();
        assert_eq!(search_t0(&b, 5, 5).unwrap(), 1);
        let disc = IntPoly::from_i64(&[0, -1, 0, 1]);
        let b2 = BranchData::from_discriminant("test".into(), disc, true).unwrap();
        assert!(matches!(search_t0(&b2, 2, 10), Err(Error::ResidueSaturation(2))));
        assert!(search_t0(&b, 5, 3).is_err()); // bound below p rejected
    }

    #[test]
    fn vertical_test() {
        assert!(vertical_ramification_excluded(&y5_y4_t(), 5).unwrap());
        // Y^2 - 5T has discriminant 20T == 0 mod 5
        let p = BiPoly::from_rows(&[&[0, -5], &[], &[1]]).unwrap();
        assert!(!vertical_ramification_excluded(&p, 5).unwrap());
        assert!(vertical_ramification_excluded(&p, 3).unwrap());
    }

    #[test]
    fn full_certificate() {
        let p = y5_y4_t();
        let cert = unramified_certificate(&p, 5, &ProjPoint::from_integer(1)).unwrap();
        assert!(cert.verdict);
        assert!(cert.vertical_ok);
        assert!(cert.meets_none);
        assert_eq!(cert.disc_mod_p, "T^3");
        assert_eq!(cert.excluded, vec![P1Fp::Finite(0), P1Fp::Infinity]);

        // t0 = 5 meets the branch point 0 mod 5: verdict false
        let cert = unramified_certificate(&p, 5, &ProjPoint::from_integer(5)).unwrap();
        assert!(!cert.verdict);
        assert!(cert.vertical_ok);
        assert!(!cert.meets_none);

        // a branch point itself is rejected
        assert!(matches!(
            unramified_certificate(&p, 5, &ProjPoint::from_integer(0)),
            Err(Error::PossibleBranchPoint(_))
        ));

        // vertical failure: Y^2 - 5T at p=5, any admissible t0
        let q = BiPoly::from_rows(&[&[0, -5], &[], &[1]]).unwrap();
        let cert = unramified_certificate(&q, 5, &ProjPoint::from_integer(1)).unwrap();
        assert!(!cert.vertical_ok);
        assert!(!cert.verdict);
    }

    #[test]
    fn search_succeeds_for_catalog_entries_at_target_primes() {
        for entry in crate::catalog::catalog() {
            if let Some(p) = &entry.bipoly {
                let b = branch_data(p).unwrap();
                let t0 = search_t0(&b, entry.target_p, entry.target_p).unwrap();
                assert!(t0 < entry.target_p, "{}", entry.name);
            }
        }
    }

    #[test]
    fn form_reconstructs_disc_over_content() {
        let disc = IntPoly::from_i64(&[6, 0, -12, 18]); // content 6
        let form = BinForm::homogenize(&disc).unwrap();
        let a = BigInt::from(7);
        let val = form.eval(&a, &BigInt::one());
        assert_eq!(val * BigInt::from(6), disc.eval(&a));
    }
}
