//! Exact big-integer, polynomial, and rigorous real arithmetic.

mod int;
mod poly;
mod real;

pub use int::{factor, is_prime, isqrt, Factorization};
pub use poly::{newton_polygon_2adic, sturm_real_roots, BigPoly, NewtonPolygon, SturmReport};
pub use real::{continued_fraction, highprec_log, CfExpansion, HighPrecReal};

pub use num_bigint::{BigInt, Sign};
pub use num_rational::BigRational;

use num_traits::{One, Zero};

/// Shorthand for a `BigInt` from an `i64`.
pub fn bi(n: i64) -> BigInt {
    BigInt::from(n)
}

/// Shorthand for a `BigRational` from a ratio of `i64`s.
pub fn br(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// 2-adic valuation of a nonzero integer.
pub fn ord2(n: &BigInt) -> u64 {
    assert!(!n.is_zero(), "ord2 of zero");
    n.trailing_zeros().expect("nonzero")
}

/// True iff `n` is a power of two (n = 2^k, k >= 0).
pub fn is_power_of_two(n: &BigInt) -> bool {
    n > &BigInt::zero() && (n & (n - BigInt::one())).is_zero()
}

/// True iff `n` is squarefree. Intended for |n| within factoring range.
pub fn is_squarefree(n: &BigInt) -> bool {
    if n.is_zero() {
        return false;
    }
    let f = factor(&BigInt::from(n.magnitude().clone())).expect("positive");
    f.complete && f.factors.iter().all(|(_, e)| *e == 1)
}
