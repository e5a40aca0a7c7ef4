//! Sturm-sequence real-root counting and the totally-real exclusion tests.
//!
//! Chains are kept exact: entries are primitive integer polynomials, and each
//! remainder step rescales by a positive factor only, which leaves every sign
//! evaluation unchanged.

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::poly::{BiPoly, IntPoly, RatPoly};

/// Sturm chain of (the squarefree part of) a polynomial: first the input,
/// then its derivative, then negated remainders down to a nonzero constant.
#[derive(Debug, Clone)]
pub struct SturmChain {
    entries: Vec<IntPoly>,
}

impl SturmChain {
    /// Builds the chain for the primitive squarefree part of f.
    pub fn new(f: &RatPoly) -> Result<Self> {
        let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
        if deg < 1 {
            return Err(Error::DegreeTooSmall { min: 1, got: 0 });
        }
        let f0 = f.primitive_int()?.squarefree_part()?;
        let mut entries = vec![f0.clone(), f0.derivative()];
        loop {
            let k = entries.len();
            let prev = &entries[k - 2];
            let cur = &entries[k - 1];
            if cur.deg_or_0() == 0 {
                break;
            }
            let rem = signed_pseudo_rem(prev, cur);
            if rem.is_zero() {
                // impossible on squarefree input: gcd(f0, f0') is constant
                break;
            }
            let next = rem.primitive_part()?.neg();
            entries.push(next);
            if entries.last().unwrap().deg_or_0() == 0 {
                break;
            }
        }
        Ok(SturmChain { entries })
    }

    pub fn entries(&self) -> &[IntPoly] {
        &self.entries
    }

    fn sign_variations_at_infinity(&self, positive: bool) -> usize {
        let signs: Vec<i8> = self
            .entries
            .iter()
            .filter_map(|p| {
                let lc = p.leading()?;
                let mut s = if lc.is_positive() { 1i8 } else { -1i8 };
                if !positive && p.deg_or_0() % 2 == 1 {
                    s = -s;
                }
                Some(s)
            })
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Number of distinct real roots: variations at -inf minus at +inf.
    pub fn real_root_count(&self) -> usize {
        self.sign_variations_at_infinity(false) - self.sign_variations_at_infinity(true)
    }
}

/// Remainder of a by b scaled by a positive power of |lc(b)|, so the sign of
/// the true rational remainder is preserved.
fn signed_pseudo_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.deg_or_0();
    let da = a.deg_or_0();
    let lb = b.leading().unwrap();
    let scale = lb.abs();
    let mut r = a.clone();
    let mut remaining = da - db + 1;
    while let Some(rd) = r.degree() {
        if rd < db {
            break;
        }
        let lr = r.leading().unwrap().clone();
        // multiply by |lc(b)| and cancel the lead; sign of lc(b) handled via
        // exact cancellation: r*|lb| - (lr*|lb|/lb) * x^k * b
        let q = &lr * &scale / lb;
        r = r.scale(&scale).sub(&b.scale(&q).shift_up(rd - db));
        remaining -= 1;
    }
    for _ in 0..remaining {
        r = r.scale(&scale);
    }
    r
}

/// Number of distinct real roots of f, for deg f >= 1.
pub fn count_real_roots(f: &RatPoly) -> Result<usize> {
    Ok(SturmChain::new(f)?.real_root_count())
}

/// Searches for the smallest n with 0 <= n <= deg_Y P - 2 such that the n-th
/// Y-derivative of P(t0, Y) has a complex non-real root among its distinct
/// roots. Requires P(t0, Y) separable.
pub fn not_totally_real_witness(p: &BiPoly, t0: &crate::arith::Rational) -> Result<Option<usize>> {
    let f = p.eval_t(t0);
    if !f.is_separable()? {
        return Err(Error::SeparabilityFailure(format!("P({t0}, Y) is not separable")));
    }
    let n_max = p.y_degree().saturating_sub(2);
    for n in 0..=n_max {
        // n <= deg - 2 keeps the derivative of degree >= 2
        let g = f.nth_derivative(n);
        let sf = g.primitive_int()?.squarefree_part()?;
        let sf_deg = match sf.degree() {
            Some(d) if d >= 1 => d,
            _ => continue,
        };
        let count = count_real_roots(&sf.to_rat())?;
        if count < sf_deg {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// Dihedral groups of order 4, 6, 8 or 12, under the D_n = 2n elements
/// naming, plus common aliases for the small ones.
fn excluded_dihedral(tag: &str) -> bool {
    matches!(
        tag.trim().to_ascii_uppercase().as_str(),
        "D2" | "D3" | "D4" | "D6" | "V4" | "S3" | "C2XC2" | "Z2XZ2"
    )
}

/// The three-branch-point rule: with exactly three branch points and a Galois
/// group that is not dihedral of order 4, 6, 8 or 12, no specialisation at a
/// rational non-branch point is totally real.
pub fn three_branch_point_rule(branch_count: usize, group_tag: &str) -> bool {
    branch_count == 3 && !excluded_dihedral(group_tag)
}
