//! Resultants by the subresultant polynomial remainder sequence. Exact over
//! any coefficient domain with exact division; intermediate growth stays
//! within the subresultant bounds because each pseudo-remainder is divided by
//! the known factor g*h^d before the next step.

use super::{Coeff, Poly};

/// Pseudo-remainder: the remainder of lc(b)^(deg a - deg b + 1) * a divided
/// by b. Requires b nonzero and deg a >= deg b.
pub fn pseudo_rem<C: Coeff>(a: &Poly<C>, b: &Poly<C>) -> Poly<C> {
    let db = b.degree().expect("pseudo_rem by zero polynomial");
    let da = a.degree().expect("pseudo_rem of zero polynomial");
    debug_assert!(da >= db);
    let lb = b.leading().unwrap().clone();
    let mut r = a.clone();
    // Each pass scales by lc(b) once; pad at the end so the total factor is
    // exactly lc(b)^(da-db+1) even when the degree drops by more than one.
    let mut remaining = da - db + 1;
    while let Some(rd) = r.degree() {
        if rd < db {
            break;
        }
        let lr = r.leading().unwrap().clone();
        r = r.scale(&lb).sub(&b.scale(&lr).shift_up(rd - db));
        remaining -= 1;
    }
    for _ in 0..remaining {
        r = r.scale(&lb);
    }
    r
}

fn pow_c<C: Coeff>(x: &C, e: usize) -> C {
    let mut acc = x.one_like();
    for _ in 0..e {
        acc = acc.mul_c(x);
    }
    acc
}

/// Res(a, b) with the convention Res(a, b) = lc(a)^deg(b) * prod b(alpha_i)
/// over the roots of a. Zero input gives zero for the nonzero partner's
/// domain; two constants give 1.
pub fn resultant<C: Coeff>(a: &Poly<C>, b: &Poly<C>) -> C {
    match (a.leading(), b.leading()) {
        (None, Some(lb)) => return lb.zero_like(),
        (Some(la), None) => return la.zero_like(),
        (None, None) => panic!("resultant of two zero polynomials"),
        _ => {}
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut negate = false;
    if a.deg_or_0() < b.deg_or_0() {
        if a.deg_or_0() % 2 == 1 && b.deg_or_0() % 2 == 1 {
            negate = !negate;
        }
        std::mem::swap(&mut a, &mut b);
    }
    if b.deg_or_0() == 0 {
        let base = b.leading().unwrap();
        let r = pow_c(base, a.deg_or_0());
        return if negate { r.neg_c() } else { r };
    }

    // g and h start out as the symbolic 1 of the coefficient domain.
    let mut g: Option<C> = None;
    let mut h: Option<C> = None;
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let d = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = pseudo_rem(&a, &b);
        a = b;
        b = match (&g, &h) {
            (None, _) => r,
            (Some(g), h) => {
                let mut div = g.clone();
                if let Some(h) = h {
                    div = div.mul_c(&pow_c(h, d));
                }
                if r.is_zero() {
                    r
                } else {
                    r.map_div(&div)
                }
            }
        };
        if b.is_zero() {
            // Positive-degree common factor: the resultant vanishes.
            return a.leading().unwrap().zero_like();
        }
        let new_g = a.leading().unwrap().clone();
        h = Some(match (&h, d) {
            (_, 0) => match &h {
                None => new_g.one_like(),
                Some(h) => h.clone(),
            },
            (None, _) => pow_c(&new_g, d),
            (Some(h), _) => pow_c(&new_g, d).div_exact_c(&pow_c(h, d - 1)),
        });
        g = Some(new_g);
        if b.degree() == Some(0) {
            break;
        }
    }

    // h <- lc(b)^deg(a) / h^(deg(a)-1), with the final a of positive degree.
    let da = a.degree().unwrap();
    let lb = b.leading().unwrap();
    let h = h.expect("loop ran at least once");
    let result = pow_c(lb, da).div_exact_c(&pow_c(&h, da - 1));
    if negate {
        result.neg_c()
    } else {
        result
    }
}

impl<C: Coeff> Poly<C> {
    /// Coefficient-wise exact division by a domain element.
    fn map_div(&self, d: &C) -> Self {
        Poly::from_coeffs(self.coeffs().iter().map(|c| c.div_exact_c(d)).collect())
    }
}

/// Last nonzero element of the subresultant PRS: a gcd of a and b up to a
/// content factor. Callers normalize (primitive part, sign) as appropriate.
pub fn subresultant_gcd<C: Coeff>(a: &Poly<C>, b: &Poly<C>) -> Poly<C> {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    if a.deg_or_0() < b.deg_or_0() {
        std::mem::swap(&mut a, &mut b);
    }
    let mut g: Option<C> = None;
    let mut h: Option<C> = None;
    loop {
        if b.degree().is_none() {
            return a;
        }
        if b.degree() == Some(0) {
            // A constant in the PRS means coprime up to content.
            return Poly::constant(b.leading().unwrap().clone());
        }
        let d = a.deg_or_0() - b.deg_or_0();
        let r = pseudo_rem(&a, &b);
        let next = match (&g, &h) {
            (None, _) => r,
            (Some(g), h) => {
                let mut div = g.clone();
                if let Some(h) = h {
                    div = div.mul_c(&pow_c(h, d));
                }
                if r.is_zero() {
                    r
                } else {
                    r.map_div(&div)
                }
            }
        };
        a = b;
        b = next;
        let new_g = a.leading().unwrap().clone();
        h = Some(match (&h, d) {
            (_, 0) => match &h {
                None => new_g.one_like(),
                Some(h) => h.clone(),
            },
            (None, _) => pow_c(&new_g, d),
            (Some(h), _) => pow_c(&new_g, d).div_exact_c(&pow_c(h, d - 1)),
        });
        g = Some(new_g);
    }
}
