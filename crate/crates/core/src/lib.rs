//! Exact verification toolkit for asymptotic Fermat criteria over quadratic
//! fields.
//!
//! Everything here is computed with exact integer, rational, or rigorously
//! enclosed real arithmetic; no result depends on floating point. The crate
//! is organized around the objects it verifies:
//!
//! - [`arith`] — big-integer utilities, integer polynomials (Sturm sequences,
//!   2-adic Newton polygons), and fixed-point reals with explicit error bounds.
//! - [`quadring`] — arithmetic in quadratic orders, ideals above 2, and small
//!   residue rings.
//! - [`genus`] — prime-discriminant factorizations and the 2-rank formulas
//!   for (narrow) class groups of quadratic fields.
//! - [`formclass`] — narrow class groups computed directly from cycles of
//!   reduced indefinite binary quadratic forms.
//! - [`unitsq`] — fundamental units via continued fractions and the
//!   square-unit criterion modulo `16P`.
//! - [`sunit`] — the S-unit equation machinery for `Q(sqrt(l))` with
//!   `l = 1 mod 24`: parametrized solutions, filter lemmas, Frey invariants.
//! - [`dio`] — the exponential Diophantine equation
//!   `2^s1 + eta*2^s2 = P_k` solved end to end: valuation bound, brute force,
//!   Baker–Wüstholz constant, continued-fraction reduction, tail argument.
//! - [`cubic`] — discriminants of the parametrized cubics and the mod-3 table.
//! - [`polyfam`] — the family `f_n` of totally real fields where 2 totally
//!   ramifies, with Newton-polygon ramification certificates.

pub mod arith;
pub mod cubic;
pub mod dio;
pub mod error;
pub mod formclass;
pub mod genus;
pub mod polyfam;
pub mod quadring;
pub mod sunit;
pub mod unitsq;

pub use error::Error;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
