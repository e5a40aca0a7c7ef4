//! Exact-arithmetic certification of arithmetic properties of
//! specialisations of function-field extensions E/Q(T) presented by monic
//! polynomials P(T, Y) over Z: unramifiedness at a target prime, total
//! imaginarity, and Galois-group evidence.
//!
//! Everything is computed exactly: arbitrary-precision integers and
//! rationals, subresultant resultants over `Z[T]` and `F_p[T]`, Sturm chains,
//! and distinct-degree factorization over prime fields.

pub mod arith;
pub mod catalog;
pub mod certify;
pub mod error;
pub mod fp;
pub mod galois;
pub mod poly;
pub mod real_roots;
pub mod specialization;
pub mod primes;

pub use arith::{padic_valuation, ExtendedValuation, P1Fp, ProjPoint, Rational};
pub use error::{Error, Result};
pub use fp::{CycleType, FpBivar, FpPoly};
pub use poly::{BiPoly, IntBivar, IntPoly, Poly, RatPoly};
