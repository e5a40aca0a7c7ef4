//! Squarefree decomposition over Z by Yun's algorithm (characteristic zero).

use num_bigint::BigInt;
use num_traits::Signed;

use super::IntPoly;
use crate::error::{Error, Result};

/// Yun's algorithm. Returns a scalar c and pairwise-coprime squarefree
/// factors with positive leading coefficients and multiplicities such that
/// `f = c * prod factor_i ^ mult_i` exactly; the scalar carries both the
/// content and the sign of f.
pub fn squarefree_decomposition(f: &IntPoly) -> Result<(BigInt, Vec<(IntPoly, u32)>)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let content = f.content()?;
    let pp = f.primitive_part()?;
    let (unit, u) = match pp.leading() {
        Some(lc) if lc.is_negative() => (-&content, pp.neg()),
        _ => (content.clone(), pp),
    };
    if u.deg_or_0() == 0 {
        return Ok((unit, Vec::new()));
    }

    let du = u.derivative();
    let g = u.gcd(&du);
    if g.deg_or_0() == 0 {
        return Ok((unit, vec![(u, 1)]));
    }
    let mut w = u.div_exact(&g);
    let mut z = du.div_exact(&g).sub(&w.derivative());
    let mut factors = Vec::new();
    let mut mult = 1u32;
    while w.deg_or_0() > 0 {
        let a = w.gcd(&z);
        if a.deg_or_0() > 0 {
            factors.push((a.clone(), mult));
        }
        w = w.div_exact(&a);
        z = z.div_exact(&a).sub(&w.derivative());
        mult += 1;
    }
    Ok((unit, factors))
}

/// Degree of the product of distinct irreducible factors: the number of
/// distinct complex roots.
pub fn distinct_root_count(factors: &[(IntPoly, u32)]) -> usize {
    factors.iter().map(|(f, _)| f.deg_or_0()).sum()
}
