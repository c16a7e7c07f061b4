//! Exact arithmetic in quadratic orders: elements, ideals above 2, residue
//! rings, and 2-adic valuations.
//!
//! Elements are stored uniformly in half-integer form `(a + b sqrt(d))/2`,
//! which is the maximal order's natural shape for `d = 1 mod 4` and reduces
//! to `Z[sqrt(d)]` (both coordinates even) otherwise.

use crate::arith::{is_squarefree, ord2};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// An element `(a + b sqrt(d))/2` of the maximal order of `Q(sqrt(d))`.
///
/// Invariant: if `d = 1 mod 4` then `a = b mod 2`; otherwise both `a` and
/// `b` are even. Norm and trace are then rational integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadInt {
    d: i64,
    a: BigInt,
    b: BigInt,
}

impl QuadInt {
    /// Construct `(a + b sqrt(d))/2`, enforcing the integrality invariant.
    pub fn new(d: i64, a: BigInt, b: BigInt) -> Result<Self> {
        check_d(d)?;
        let ok = if d.rem_euclid(4) == 1 {
            (&a - &b).is_even()
        } else {
            a.is_even() && b.is_even()
        };
        if !ok {
            return Err(Error::Domain(format!(
                "({a} + {b} sqrt({d}))/2 is not an algebraic integer"
            )));
        }
        Ok(QuadInt { d, a, b })
    }

    /// Construct `u + v sqrt(d)` (always integral).
    pub fn from_pair(d: i64, u: i64, v: i64) -> Result<Self> {
        QuadInt::new(d, BigInt::from(2 * u), BigInt::from(2 * v))
    }

    pub fn zero(d: i64) -> Self {
        QuadInt { d, a: BigInt::zero(), b: BigInt::zero() }
    }

    pub fn one(d: i64) -> Self {
        QuadInt { d, a: BigInt::from(2), b: BigInt::zero() }
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    /// Numerator coordinates (a, b) of `(a + b sqrt(d))/2`.
    pub fn half_coords(&self) -> (&BigInt, &BigInt) {
        (&self.a, &self.b)
    }

    /// Coordinates (x, y) in the integral basis {1, w}, where `w = sqrt(d)`
    /// for `d != 1 mod 4` and `w = (1 + sqrt(d))/2` otherwise.
    pub fn basis_coords(&self) -> (BigInt, BigInt) {
        if self.d.rem_euclid(4) == 1 {
            ((&self.a - &self.b) / 2, self.b.clone())
        } else {
            (self.a.clone() / 2, self.b.clone() / 2)
        }
    }

    /// Inverse of [`basis_coords`](Self::basis_coords).
    pub fn from_basis_coords(d: i64, x: &BigInt, y: &BigInt) -> Self {
        if d.rem_euclid(4) == 1 {
            QuadInt { d, a: BigInt::from(2) * x + y, b: y.clone() }
        } else {
            QuadInt { d, a: BigInt::from(2) * x, b: BigInt::from(2) * y }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn check_same_d(&self, rhs: &QuadInt) -> Result<()> {
        if self.d != rhs.d {
            return Err(Error::Domain(format!(
                "mixed quadratic fields: d = {} vs {}",
                self.d, rhs.d
            )));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &QuadInt) -> Result<QuadInt> {
        self.check_same_d(rhs)?;
        Ok(QuadInt { d: self.d, a: &self.a + &rhs.a, b: &self.b + &rhs.b })
    }

    pub fn sub(&self, rhs: &QuadInt) -> Result<QuadInt> {
        self.check_same_d(rhs)?;
        Ok(QuadInt { d: self.d, a: &self.a - &rhs.a, b: &self.b - &rhs.b })
    }

    pub fn neg(&self) -> QuadInt {
        QuadInt { d: self.d, a: -&self.a, b: -&self.b }
    }

    pub fn mul(&self, rhs: &QuadInt) -> Result<QuadInt> {
        self.check_same_d(rhs)?;
        // (a1 + b1 s)(a2 + b2 s)/4 = ((a1 a2 + d b1 b2) + (a1 b2 + a2 b1) s)/4
        let a = &self.a * &rhs.a + BigInt::from(self.d) * &self.b * &rhs.b;
        let b = &self.a * &rhs.b + &rhs.a * &self.b;
        debug_assert!(a.is_even() && b.is_even());
        Ok(QuadInt { d: self.d, a: a / 2, b: b / 2 })
    }

    pub fn conjugate(&self) -> QuadInt {
        QuadInt { d: self.d, a: self.a.clone(), b: -&self.b }
    }

    /// Field norm `(a^2 - d b^2)/4`, always a rational integer.
    pub fn norm(&self) -> BigInt {
        let n = &self.a * &self.a - BigInt::from(self.d) * &self.b * &self.b;
        debug_assert!((&n % BigInt::from(4)).is_zero());
        n / 4
    }

    /// Field trace `a`.
    pub fn trace(&self) -> BigInt {
        self.a.clone()
    }

    pub fn pow(&self, mut e: u64) -> QuadInt {
        let mut base = self.clone();
        let mut acc = QuadInt::one(self.d);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same d");
            }
            base = base.mul(&base).expect("same d");
            e >>= 1;
        }
        acc
    }

    /// Exact `sqrt(2)`-adic valuation of a nonzero element of `Z[sqrt(2)]`.
    pub fn ord_sqrt2(&self) -> Result<u64> {
        if self.d != 2 {
            return Err(Error::Domain(format!("ord_sqrt2 requires d = 2, got {}", self.d)));
        }
        if self.is_zero() {
            return Err(Error::Domain("ord_sqrt2 of zero".into()));
        }
        let (u, v) = self.basis_coords();
        // ord(u) = 2 ord_2(u), ord(v sqrt2) = 2 ord_2(v) + 1; parities differ
        Ok(match (u.is_zero(), v.is_zero()) {
            (true, false) => 2 * ord2(&v) + 1,
            (false, true) => 2 * ord2(&u),
            (false, false) => (2 * ord2(&u)).min(2 * ord2(&v) + 1),
            (true, true) => unreachable!(),
        })
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}*sqrt({}))/2", self.a, self.b, self.d)
    }
}

fn check_d(d: i64) -> Result<()> {
    if d == 0 || d == 1 {
        return Err(Error::Domain(format!("invalid field parameter d = {d}")));
    }
    Ok(())
}

/// Validate squarefreeness of `d` (used by the operations whose contract
/// demands it; element arithmetic only needs `d != 0, 1`).
pub fn check_squarefree_d(d: i64) -> Result<()> {
    check_d(d)?;
    if !is_squarefree(&BigInt::from(d)) {
        return Err(Error::Domain(format!("d = {d} is not squarefree")));
    }
    Ok(())
}

/// An element `a + b sqrt(d)` of the field `Q(sqrt(d))`, rational coords.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadRat {
    d: i64,
    a: BigRational,
    b: BigRational,
}

impl QuadRat {
    pub fn new(d: i64, a: BigRational, b: BigRational) -> Result<Self> {
        check_d(d)?;
        Ok(QuadRat { d, a, b })
    }

    pub fn from_rational(d: i64, a: BigRational) -> Self {
        QuadRat { d, a, b: BigRational::zero() }
    }

    pub fn from_quadint(x: &QuadInt) -> Self {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        QuadRat {
            d: x.d,
            a: BigRational::from(x.a.clone()) * &half,
            b: BigRational::from(x.b.clone()) * &half,
        }
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn coords(&self) -> (&BigRational, &BigRational) {
        (&self.a, &self.b)
    }

    pub fn zero(d: i64) -> Self {
        QuadRat { d, a: BigRational::zero(), b: BigRational::zero() }
    }

    pub fn one(d: i64) -> Self {
        QuadRat { d, a: BigRational::one(), b: BigRational::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn same_d(&self, rhs: &QuadRat) -> Result<()> {
        if self.d != rhs.d {
            return Err(Error::Domain(format!("mixed fields d = {} vs {}", self.d, rhs.d)));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &QuadRat) -> Result<QuadRat> {
        self.same_d(rhs)?;
        Ok(QuadRat { d: self.d, a: &self.a + &rhs.a, b: &self.b + &rhs.b })
    }

    pub fn sub(&self, rhs: &QuadRat) -> Result<QuadRat> {
        self.same_d(rhs)?;
        Ok(QuadRat { d: self.d, a: &self.a - &rhs.a, b: &self.b - &rhs.b })
    }

    pub fn neg(&self) -> QuadRat {
        QuadRat { d: self.d, a: -&self.a, b: -&self.b }
    }

    pub fn mul(&self, rhs: &QuadRat) -> Result<QuadRat> {
        self.same_d(rhs)?;
        let dd = BigRational::from(BigInt::from(self.d));
        Ok(QuadRat {
            d: self.d,
            a: &self.a * &rhs.a + &dd * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &rhs.a * &self.b,
        })
    }

    pub fn conjugate(&self) -> QuadRat {
        QuadRat { d: self.d, a: self.a.clone(), b: -&self.b }
    }

    /// Norm `a^2 - d b^2` as a rational.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from(BigInt::from(self.d)) * &self.b * &self.b
    }

    pub fn trace(&self) -> BigRational {
        &self.a + &self.a
    }

    pub fn inv(&self) -> Result<QuadRat> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::Domain("inverse of zero or zero-norm element".into()));
        }
        let c = self.conjugate();
        Ok(QuadRat { d: self.d, a: c.a / &n, b: c.b / &n })
    }

    pub fn div(&self, rhs: &QuadRat) -> Result<QuadRat> {
        self.mul(&rhs.inv()?)
    }

    /// Clear denominators: returns (z, m) with `self = z / m`, `z` integral.
    pub fn to_integral_multiple(&self) -> (QuadInt, BigInt) {
        let m0 = self.a.denom().lcm(self.b.denom());
        // an extra factor of 2 always lands us in the half-integer lattice
        let m: BigInt = &m0 * 2;
        let a2: BigInt = (&self.a * BigRational::from(m.clone()) * BigRational::from(BigInt::from(2)))
            .to_integer();
        let b2: BigInt = (&self.b * BigRational::from(m.clone()) * BigRational::from(BigInt::from(2)))
            .to_integer();
        let z = QuadInt { d: self.d, a: a2, b: b2 };
        (z, m)
    }

    /// If this element is an algebraic integer, convert it.
    pub fn to_quadint(&self) -> Option<QuadInt> {
        let two = BigRational::from(BigInt::from(2));
        let a2 = &self.a * &two;
        let b2 = &self.b * &two;
        if !a2.is_integer() || !b2.is_integer() {
            return None;
        }
        QuadInt::new(self.d, a2.to_integer(), b2.to_integer()).ok()
    }
}

impl fmt::Display for QuadRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt({})", self.a, self.b, self.d)
    }
}

/// How 2 decomposes in the maximal order of `Q(sqrt(d))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Splitting {
    Ramified,
    Inert,
    Split,
}

/// An integral ideal given by a 2-column Hermite-form Z-basis over the
/// integral basis {1, w}: the columns are `u * 1` and `v * 1 + w * w_elt`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadIdeal {
    d: i64,
    u: BigInt,
    v: BigInt,
    w: BigInt,
}

/// Multiplication constants of the integral basis: `w^2 = c0 + c1 * w`.
fn omega_sq(d: i64) -> (BigInt, BigInt) {
    if d.rem_euclid(4) == 1 {
        (BigInt::from((d - 1) / 4), BigInt::one())
    } else {
        (BigInt::from(d), BigInt::zero())
    }
}

impl QuadIdeal {
    /// Build from any generating set of (x, y) basis-coordinates, reducing
    /// to Hermite form and verifying closure under multiplication by w.
    pub fn from_generators(d: i64, gens: &[(BigInt, BigInt)]) -> Result<QuadIdeal> {
        check_d(d)?;
        let (c0, c1) = omega_sq(d);
        // include w * each generator so the HNF spans the ideal as a module
        let mut rows: Vec<(BigInt, BigInt)> = Vec::new();
        for (x, y) in gens {
            rows.push((x.clone(), y.clone()));
            // w * (x + y w) = y c0 + (x + y c1) w
            rows.push((y * &c0, x + y * &c1));
        }
        let (u, v, w) = hnf_2xn(&rows)?;
        let ideal = QuadIdeal { d, u, v, w };
        ideal.validate()?;
        Ok(ideal)
    }

    fn validate(&self) -> Result<()> {
        // closure under w: w*u and w*(v + w w_elt) must land in the lattice
        let (c0, c1) = omega_sq(self.d);
        let in_lattice = |x: &BigInt, y: &BigInt| -> bool {
            if !(y % &self.w).is_zero() {
                return false;
            }
            let k = y / &self.w;
            let x_red = x - k * &self.v;
            (x_red % &self.u).is_zero()
        };
        let ok1 = in_lattice(&(&self.u * &c0 * BigInt::zero()), &self.u);
        let wy = &self.v + &self.w * &c1;
        let wx = &self.w * &c0;
        let ok2 = in_lattice(&wx, &wy);
        if !(ok1 && ok2) {
            return Err(Error::Internal(format!(
                "basis [[{}, {}], [0, {}]] is not an ideal for d = {}",
                self.u, self.v, self.w, self.d
            )));
        }
        Ok(())
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    /// Hermite basis entries (u, v, w): columns u*1 and v*1 + w*w_elt.
    pub fn basis(&self) -> (&BigInt, &BigInt, &BigInt) {
        (&self.u, &self.v, &self.w)
    }

    pub fn norm(&self) -> BigInt {
        &self.u * &self.w
    }

    /// Principal ideal generated by an element.
    pub fn principal(x: &QuadInt) -> Result<QuadIdeal> {
        let (cx, cy) = x.basis_coords();
        QuadIdeal::from_generators(x.d(), &[(cx, cy)])
    }

    /// Scale by a positive integer.
    pub fn scale(&self, k: &BigInt) -> QuadIdeal {
        assert!(k.is_positive());
        QuadIdeal { d: self.d, u: &self.u * k, v: &self.v * k, w: &self.w * k }
    }

    /// Ideal product.
    pub fn mul(&self, rhs: &QuadIdeal) -> Result<QuadIdeal> {
        if self.d != rhs.d {
            return Err(Error::Domain("ideal product across fields".into()));
        }
        let (c0, c1) = omega_sq(self.d);
        let mul_elt = |(x1, y1): (&BigInt, &BigInt), (x2, y2): (&BigInt, &BigInt)| {
            let x = x1 * x2 + y1 * y2 * &c0;
            let y = x1 * y2 + x2 * y1 + y1 * y2 * &c1;
            (x, y)
        };
        let g1: [(BigInt, BigInt); 2] =
            [(self.u.clone(), BigInt::zero()), (self.v.clone(), self.w.clone())];
        let g2: [(BigInt, BigInt); 2] =
            [(rhs.u.clone(), BigInt::zero()), (rhs.v.clone(), rhs.w.clone())];
        let mut prods = Vec::new();
        for a in &g1 {
            for b in &g2 {
                prods.push(mul_elt((&a.0, &a.1), (&b.0, &b.1)));
            }
        }
        QuadIdeal::from_generators(self.d, &prods)
    }

    /// Galois conjugate ideal.
    pub fn conjugate(&self) -> QuadIdeal {
        // conj(w) = -w for w = sqrt(d); conj(w) = 1 - w for w = (1+sqrt d)/2
        let conj_gen: (BigInt, BigInt) = if self.d.rem_euclid(4) == 1 {
            (&self.v + &self.w, -self.w.clone())
        } else {
            (self.v.clone(), -self.w.clone())
        };
        QuadIdeal::from_generators(self.d, &[(self.u.clone(), BigInt::zero()), conj_gen])
            .expect("conjugate of an ideal is an ideal")
    }

    pub fn contains(&self, x: &QuadInt) -> bool {
        if x.d() != self.d {
            return false;
        }
        let (cx, cy) = x.basis_coords();
        if !(&cy % &self.w).is_zero() {
            return false;
        }
        let k = cy / &self.w;
        ((cx - k * &self.v) % &self.u).is_zero()
    }
}

impl fmt::Display for QuadIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [0, {}]] (d = {})", self.u, self.v, self.w, self.d)
    }
}

/// Hermite normal form of a rank-2 integer lattice spanned by the given
/// (x, y) pairs: returns (u, v, w) with columns u*1 and v + w*w_elt,
/// u, w > 0 and 0 <= v < u.
fn hnf_2xn(rows: &[(BigInt, BigInt)]) -> Result<(BigInt, BigInt, BigInt)> {
    let mut rep: Option<(BigInt, BigInt)> = None; // (x, y) with y = running gcd
    let mut xs: Vec<BigInt> = Vec::new();
    for (x, y) in rows {
        if y.is_zero() {
            xs.push(x.clone());
            continue;
        }
        rep = Some(match rep {
            None => (x.clone(), y.clone()),
            Some((rx, ry)) => {
                let e = ry.extended_gcd(y);
                let g = e.gcd; // g = e.x * ry + e.y * y
                let nx = &e.x * &rx + &e.y * x;
                let k1 = &ry / &g;
                let k2 = y / &g;
                xs.push(&k2 * &rx - &k1 * x); // y-parts cancel
                (nx, g)
            }
        });
    }
    let (rv, rw) = rep.ok_or_else(|| Error::Internal("rank-deficient ideal basis".into()))?;
    let mut u = BigInt::zero();
    for x in xs {
        u = u.gcd(&x);
    }
    if u.is_zero() {
        return Err(Error::Internal("rank-deficient ideal basis".into()));
    }
    let mut w = rw;
    let mut v = rv;
    if w.is_negative() {
        w = -w;
        v = -v;
    }
    v = v.mod_floor(&u);
    Ok((u, v, w))
}

/// Splitting behavior of 2 together with the prime ideal(s) above it.
///
/// Ramified iff `d = 2, 3 mod 4`; split iff `d = 1 mod 8` (two primes of
/// norm 2); inert iff `d = 5 mod 8` (one prime of norm 4).
pub fn prime_above_2(d: i64) -> Result<(Splitting, Vec<QuadIdeal>)> {
    check_squarefree_d(d)?;
    let r4 = d.rem_euclid(4);
    let r8 = d.rem_euclid(8);
    let two = BigInt::from(2);
    if r4 == 2 || r4 == 3 {
        // ramified: P = (2, w) or (2, 1 + w) with w = sqrt(d)
        let gen = if r4 == 2 {
            (BigInt::zero(), BigInt::one())
        } else {
            (BigInt::one(), BigInt::one())
        };
        let p = QuadIdeal::from_generators(d, &[(two, BigInt::zero()), gen])?;
        debug_assert_eq!(p.norm(), BigInt::from(2));
        Ok((Splitting::Ramified, vec![p]))
    } else if r8 == 1 {
        // split: P1 = (2, w), P2 = (2, 1 + w), w = (1 + sqrt d)/2
        let p1 = QuadIdeal::from_generators(
            d,
            &[(two.clone(), BigInt::zero()), (BigInt::zero(), BigInt::one())],
        )?;
        let p2 =
            QuadIdeal::from_generators(d, &[(two, BigInt::zero()), (BigInt::one(), BigInt::one())])?;
        debug_assert_eq!(p1.norm(), BigInt::from(2));
        debug_assert_eq!(p2.norm(), BigInt::from(2));
        Ok((Splitting::Split, vec![p1, p2]))
    } else {
        // d = 5 mod 8: inert, P = (2) of norm 4
        let p = QuadIdeal::from_generators(d, &[(two, BigInt::zero())])?;
        debug_assert_eq!(p.norm(), BigInt::from(4));
        Ok((Splitting::Inert, vec![p]))
    }
}

/// A prime of `Q(sqrt(d))` above 2, carrying enough context to compute
/// valuations at it.
#[derive(Debug, Clone)]
pub struct PrimeAbove2 {
    pub d: i64,
    pub splitting: Splitting,
    pub ideal: QuadIdeal,
    /// For the split case: index 0 or 1 into the `prime_above_2` list.
    pub index: usize,
}

/// All primes above 2 as [`PrimeAbove2`] handles.
pub fn primes_above_2(d: i64) -> Result<Vec<PrimeAbove2>> {
    let (splitting, ideals) = prime_above_2(d)?;
    Ok(ideals
        .into_iter()
        .enumerate()
        .map(|(index, ideal)| PrimeAbove2 { d, splitting, ideal, index })
        .collect())
}

impl PrimeAbove2 {
    /// `ord_P(2)`: 2 for ramified, 1 otherwise.
    pub fn ord_of_2(&self) -> u64 {
        match self.splitting {
            Splitting::Ramified => 2,
            _ => 1,
        }
    }

    /// Valuation of a nonzero field element at this prime.
    pub fn ord(&self, x: &QuadRat) -> Result<i64> {
        if x.d() != self.d {
            return Err(Error::Domain("element from a different field".into()));
        }
        if x.is_zero() {
            return Err(Error::Domain("valuation of zero".into()));
        }
        let (z, m) = x.to_integral_multiple();
        let vm = ord2(&m) as i64;
        let vz = self.ord_integral(&z)?;
        Ok(vz - vm * self.ord_of_2() as i64)
    }

    fn ord_integral(&self, z: &QuadInt) -> Result<i64> {
        match self.splitting {
            Splitting::Ramified => {
                // P is fixed by conjugation, so ord_P(z) = ord_P(norm)/2,
                // and ord_P(n) = 2 ord_2(n) for rational integers n
                Ok(ord2(&z.norm()) as i64)
            }
            Splitting::Inert => {
                let (x, y) = z.basis_coords();
                let vx = if x.is_zero() { u64::MAX } else { ord2(&x) };
                let vy = if y.is_zero() { u64::MAX } else { ord2(&y) };
                Ok(vx.min(vy) as i64)
            }
            Splitting::Split => {
                // embed into Z_2 via a Hensel lift of sqrt(d); P1 = (2, w)
                // pairs with the lift s = 3 mod 4, P2 with s = 1 mod 4
                let bound = ord2(&z.norm()) + 8;
                let s = sqrt_2adic(self.d, bound, self.index == 0);
                let (a, b) = z.half_coords();
                let modulus = BigInt::one() << bound;
                let img = (a + b * &s).mod_floor(&modulus);
                if img.is_zero() {
                    return Err(Error::Internal(
                        "2-adic precision exhausted computing a split valuation".into(),
                    ));
                }
                // the embedded element is (a + b s)/2
                Ok(ord2(&img) as i64 - 1)
            }
        }
    }
}

/// Hensel lift of sqrt(d) in Z_2 to the given precision; `d = 1 mod 8`.
/// `high` selects the lift with s = 3 mod 4 (else s = 1 mod 4).
fn sqrt_2adic(d: i64, bits: u64, high: bool) -> BigInt {
    let dd = BigInt::from(d);
    let modulus = BigInt::one() << bits;
    let mut s = BigInt::one();
    for k in 3..=bits {
        let m = BigInt::one() << k;
        if !((&s * &s - &dd) % &m).is_zero() {
            s += BigInt::one() << (k - 2);
        }
    }
    debug_assert!(((&s * &s - &dd) % (&modulus)).is_zero());
    let s = s.mod_floor(&modulus);
    let want = if high { 3u8 } else { 1u8 };
    if (&s % BigInt::from(4)) == BigInt::from(want) {
        s
    } else {
        (&modulus - s).mod_floor(&modulus)
    }
}

/// The finite ring `O_K / I` for an ideal `I` of small norm, with elements
/// represented by reduced basis coordinates.
#[derive(Debug, Clone)]
pub struct ResidueRing {
    d: i64,
    u: i64,
    v: i64,
    w: i64,
    c0: i64,
    c1: i64,
}

/// A reduced representative in a [`ResidueRing`].
pub type ResidueElt = (i64, i64);

/// Enumeration ceiling for residue-ring computations.
const RESIDUE_RING_MAX: i64 = 1 << 16;

impl ResidueRing {
    pub fn new(ideal: &QuadIdeal) -> Result<ResidueRing> {
        let n = ideal.norm();
        if n > BigInt::from(RESIDUE_RING_MAX) {
            return Err(Error::Unsupported(format!(
                "residue ring of size {n} exceeds the enumeration ceiling {RESIDUE_RING_MAX}"
            )));
        }
        let (c0, c1) = omega_sq(ideal.d());
        Ok(ResidueRing {
            d: ideal.d(),
            u: ideal.u.to_i64().unwrap(),
            v: ideal.v.to_i64().unwrap(),
            w: ideal.w.to_i64().unwrap(),
            c0: c0.to_i64().ok_or_else(|| Error::Unsupported("d too large".into()))?,
            c1: c1.to_i64().ok_or_else(|| Error::Unsupported("d too large".into()))?,
        })
    }

    pub fn size(&self) -> i64 {
        self.u * self.w
    }

    fn reduce_coords(&self, x: i128, y: i128) -> ResidueElt {
        let w = self.w as i128;
        let y_red = y.rem_euclid(w);
        let k = (y - y_red) / w;
        let x_shift = x - k * self.v as i128;
        let x_red = x_shift.rem_euclid(self.u as i128);
        (x_red as i64, y_red as i64)
    }

    /// Reduce an element of the order to its canonical representative.
    pub fn reduce(&self, z: &QuadInt) -> Result<ResidueElt> {
        if z.d() != self.d {
            return Err(Error::Domain("element from another field".into()));
        }
        let (x, y) = z.basis_coords();
        let ub = BigInt::from(self.u);
        let wb = BigInt::from(self.w);
        let y_red = y.mod_floor(&wb);
        let k = (&y - &y_red) / &wb;
        let x_red = (x - k * BigInt::from(self.v)).mod_floor(&ub);
        Ok((x_red.to_i64().unwrap(), y_red.to_i64().unwrap()))
    }

    pub fn one(&self) -> ResidueElt {
        self.reduce_coords(1, 0)
    }

    pub fn neg_one(&self) -> ResidueElt {
        self.reduce_coords(-1, 0)
    }

    pub fn add(&self, a: ResidueElt, b: ResidueElt) -> ResidueElt {
        self.reduce_coords(a.0 as i128 + b.0 as i128, a.1 as i128 + b.1 as i128)
    }

    pub fn mul(&self, a: ResidueElt, b: ResidueElt) -> ResidueElt {
        let (x1, y1) = (a.0 as i128, a.1 as i128);
        let (x2, y2) = (b.0 as i128, b.1 as i128);
        let x = x1 * x2 + y1 * y2 * self.c0 as i128;
        let y = x1 * y2 + x2 * y1 + y1 * y2 * self.c1 as i128;
        self.reduce_coords(x, y)
    }

    /// Multiplicative order of a unit; errors if the element is not a unit.
    pub fn order_of(&self, a: ResidueElt) -> Result<u64> {
        let one = self.one();
        let mut cur = a;
        for k in 1..=(self.size() as u64 + 1) {
            if cur == one {
                return Ok(k);
            }
            cur = self.mul(cur, a);
        }
        Err(Error::Domain("element is not a unit in the residue ring".into()))
    }

    /// All elements of the ring, in lexicographic coordinate order.
    pub fn elements(&self) -> impl Iterator<Item = ResidueElt> + '_ {
        (0..self.u).flat_map(move |x| (0..self.w).map(move |y| (x, y)))
    }

    /// Order of the unit group, by direct enumeration.
    pub fn unit_group_order(&self) -> u64 {
        let one = self.one();
        let elts: Vec<ResidueElt> = self.elements().collect();
        let mut count = 0;
        for &a in &elts {
            if elts.iter().any(|&b| self.mul(a, b) == one) {
                count += 1;
            }
        }
        count
    }
}

/// Convenience: the residue ring modulo `16 P`.
pub fn residue_ring_mod_16p(p: &PrimeAbove2) -> Result<ResidueRing> {
    ResidueRing::new(&p.ideal.scale(&BigInt::from(16)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::bi;

    fn qi(d: i64, a: i64, b: i64) -> QuadInt {
        QuadInt::new(d, bi(a), bi(b)).unwrap()
    }

    #[test]
    fn tau_is_a_unit() {
        let tau = QuadInt::from_pair(2, 3, 2).unwrap();
        let conj = tau.conjugate();
        let prod = tau.mul(&conj).unwrap();
        assert_eq!(prod, QuadInt::one(2));
        assert_eq!(tau.norm(), bi(1));
        assert_eq!(tau.trace(), bi(6));
    }

    #[test]
    fn conjugation_is_involutive() {
        let x = qi(73, -23, 3);
        assert_eq!(x.conjugate().conjugate(), x);
    }

    #[test]
    fn orbit_element_norms() {
        // lambda = (-23 + 3 sqrt 73)/2 has norm -32 = -2^5
        let lam = qi(73, -23, 3);
        assert_eq!(lam.norm(), bi(-32));
        let prod = lam.mul(&lam.conjugate()).unwrap();
        assert_eq!(prod, qi(73, -64, 0));
        // mu = (25 + 3 sqrt 73)/2 has norm -8 = -2^3
        let mu = qi(73, 25, 3);
        assert_eq!(mu.norm(), bi(-8));
        assert_eq!(qi(73, 2, 0).norm(), bi(1));
    }

    #[test]
    fn parity_invariant_enforced() {
        assert!(QuadInt::new(73, bi(1), bi(2)).is_err()); // 1 != 2 mod 2
        assert!(QuadInt::new(73, bi(1), bi(3)).is_ok());
        assert!(QuadInt::new(2, bi(1), bi(1)).is_err()); // must be even
        assert!(QuadInt::new(2, bi(2), bi(4)).is_ok());
    }

    #[test]
    fn mixed_fields_rejected() {
        let x = qi(2, 2, 0);
        let y = qi(3, 2, 0);
        assert!(x.add(&y).is_err());
        assert!(x.mul(&y).is_err());
    }

    #[test]
    fn norm_is_multiplicative() {
        let mut state: u64 = 7;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % 41) as i64 - 20
        };
        for d in [2i64, 3, 73, -7] {
            for _ in 0..250 {
                let (mut a1, b1, mut a2, b2) = (next(), next(), next(), next());
                let (x, y);
                if d.rem_euclid(4) == 1 {
                    a1 += (a1 - b1).rem_euclid(2);
                    a2 += (a2 - b2).rem_euclid(2);
                    x = qi(d, a1, b1);
                    y = qi(d, a2, b2);
                } else {
                    x = qi(d, 2 * a1, 2 * b1);
                    y = qi(d, 2 * a2, 2 * b2);
                }
                assert_eq!(x.mul(&y).unwrap().norm(), x.norm() * y.norm());
            }
        }
    }

    #[test]
    fn ord_sqrt2_examples() {
        let tau = QuadInt::from_pair(2, 3, 2).unwrap();
        let one = QuadInt::one(2);
        let t2m1 = tau.pow(2).sub(&one).unwrap();
        assert_eq!(t2m1.ord_sqrt2().unwrap(), 5);
        let sqrt2 = QuadInt::from_pair(2, 0, 1).unwrap();
        assert_eq!(sqrt2.ord_sqrt2().unwrap(), 1);
        // tau^4 = 577 + 408 sqrt 2; tau^4 - 1 has valuation 7
        let t4 = tau.pow(4);
        assert_eq!(t4, QuadInt::from_pair(2, 577, 408).unwrap());
        assert_eq!(t4.sub(&one).unwrap().ord_sqrt2().unwrap(), 7);
        assert!(QuadInt::zero(2).ord_sqrt2().is_err());
        assert!(qi(3, 2, 0).ord_sqrt2().is_err());
    }

    #[test]
    fn ord_sqrt2_is_additive() {
        let mut state: u64 = 99;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % 33) as i64 - 16
        };
        for _ in 0..300 {
            let x = qi(2, 2 * next(), 2 * next());
            let y = qi(2, 2 * next(), 2 * next());
            if x.is_zero() || y.is_zero() {
                continue;
            }
            assert_eq!(
                x.mul(&y).unwrap().ord_sqrt2().unwrap(),
                x.ord_sqrt2().unwrap() + y.ord_sqrt2().unwrap()
            );
        }
    }

    #[test]
    fn paper_induction_identity_for_tau_powers() {
        // tau^(2^(a+1)) - 1 = 2 (tau^(2^a) - 1) + (tau^(2^a) - 1)^2
        let tau = QuadInt::from_pair(2, 3, 2).unwrap();
        let one = QuadInt::one(2);
        let two = qi(2, 4, 0);
        for a in 1u64..=6 {
            let t = tau.pow(1 << a).sub(&one).unwrap();
            let lhs = tau.pow(1 << (a + 1)).sub(&one).unwrap();
            let rhs = two.mul(&t).unwrap().add(&t.mul(&t).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn lemma_valuation_identity_small_exponents() {
        // ord(tau^(2^a) - 1) = 2a + 3 for 1 <= a <= 20
        let tau = QuadInt::from_pair(2, 3, 2).unwrap();
        let one = QuadInt::one(2);
        for a in 1u64..=20 {
            let t = tau.pow(1 << a).sub(&one).unwrap();
            assert_eq!(t.ord_sqrt2().unwrap(), 2 * a + 3, "a = {a}");
        }
    }

    #[test]
    fn splitting_classification() {
        let (s, ps) = prime_above_2(73).unwrap();
        assert_eq!(s, Splitting::Split);
        assert_eq!(ps.len(), 2);
        assert_eq!(ps[0].norm(), bi(2));
        assert_eq!(ps[1].norm(), bi(2));

        let (s, ps) = prime_above_2(3).unwrap();
        assert_eq!(s, Splitting::Ramified);
        assert_eq!(ps.len(), 1);
        assert_eq!(ps[0].norm(), bi(2));

        let (s, ps) = prime_above_2(5).unwrap();
        assert_eq!(s, Splitting::Inert);
        assert_eq!(ps[0].norm(), bi(4));

        assert!(prime_above_2(12).is_err()); // not squarefree
    }

    #[test]
    fn prime_ideal_products_recover_two() {
        let two = QuadIdeal::principal(&qi(73, 4, 0)).unwrap();
        let (s, ps) = prime_above_2(73).unwrap();
        assert_eq!(s, Splitting::Split);
        let prod = ps[0].mul(&ps[1]).unwrap();
        assert_eq!(prod, two);
        // conjugation swaps the split primes
        assert_eq!(ps[0].conjugate(), ps[1]);

        for d in [2i64, 3, 6, 7, 10, 11] {
            let two = QuadIdeal::principal(&qi(d, 4, 0)).unwrap();
            let (s, ps) = prime_above_2(d).unwrap();
            assert_eq!(s, Splitting::Ramified, "d = {d}");
            assert_eq!(ps[0].mul(&ps[0]).unwrap(), two, "d = {d}");
        }
    }

    #[test]
    fn residue_ring_sizes_and_reduction() {
        // d = 2: O/(16 sqrt 2) has 512 elements
        let p = &primes_above_2(2).unwrap()[0];
        let r = residue_ring_mod_16p(p).unwrap();
        assert_eq!(r.size(), 512);
        assert_eq!(r.reduce(&QuadInt::zero(2)).unwrap(), (0, 0));
        // reduce is a ring homomorphism on a sample
        let x = qi(2, 14, 6);
        let y = qi(2, -8, 22);
        let lhs = r.reduce(&x.mul(&y).unwrap()).unwrap();
        let rhs = r.mul(r.reduce(&x).unwrap(), r.reduce(&y).unwrap());
        assert_eq!(lhs, rhs);
        let lhs = r.reduce(&x.add(&y).unwrap()).unwrap();
        let rhs = r.add(r.reduce(&x).unwrap(), r.reduce(&y).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn unit_group_of_p_squared_for_73() {
        let ps = primes_above_2(73).unwrap();
        let p2 = ps[0].ideal.mul(&ps[0].ideal).unwrap();
        let r = ResidueRing::new(&p2).unwrap();
        assert_eq!(r.size(), 4);
        assert_eq!(r.unit_group_order(), 2); // (O/P^2)^x = (Z/4)^x
    }

    #[test]
    fn residue_ring_envelope() {
        let p = &primes_above_2(2).unwrap()[0];
        let huge = p.ideal.scale(&bi(1 << 10));
        assert!(ResidueRing::new(&huge).is_err());
    }

    #[test]
    fn split_valuations_match_parametrization() {
        let ps = primes_above_2(73).unwrap();
        let lam = QuadRat::from_quadint(&qi(73, -23, 3));
        let mu = QuadRat::from_quadint(&qi(73, 25, -3));
        // lambda + mu = 1
        assert_eq!(lam.add(&mu).unwrap(), QuadRat::one(73));
        let v = |p: &PrimeAbove2, x: &QuadRat| p.ord(x).unwrap();
        let (p1, p2) = (&ps[0], &ps[1]);
        let vals = (v(p1, &lam), v(p2, &lam), v(p1, &mu), v(p2, &mu));
        // one prime sees r1 = 5 on lambda, the other r2 = 3 on mu
        assert!(vals == (5, 0, 0, 3) || vals == (0, 5, 3, 0), "got {vals:?}");
    }

    #[test]
    fn ramified_and_inert_valuations() {
        let p = &primes_above_2(2).unwrap()[0];
        let sqrt2 = QuadRat::from_quadint(&QuadInt::from_pair(2, 0, 1).unwrap());
        assert_eq!(p.ord(&sqrt2).unwrap(), 1);
        let two = QuadRat::from_quadint(&qi(2, 4, 0));
        assert_eq!(p.ord(&two).unwrap(), 2);
        let half = two.inv().unwrap();
        assert_eq!(p.ord(&half).unwrap(), -2);

        let p5 = &primes_above_2(5).unwrap()[0];
        let two5 = QuadRat::from_quadint(&qi(5, 4, 0));
        assert_eq!(p5.ord(&two5).unwrap(), 1);
        let omega = QuadRat::from_quadint(&qi(5, 1, 1));
        assert_eq!(p5.ord(&omega).unwrap(), 0);
    }

    #[test]
    fn quadrat_field_axioms_spot_check() {
        let x = QuadRat::from_quadint(&qi(73, -23, 3));
        let i = x.inv().unwrap();
        assert_eq!(x.mul(&i).unwrap(), QuadRat::one(73));
        let y = x.div(&x).unwrap();
        assert_eq!(y, QuadRat::one(73));
    }
}
