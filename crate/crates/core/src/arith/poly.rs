//! Integer polynomials: arithmetic, Sturm sequences, 2-adic Newton polygons.

use crate::arith::ord2;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A univariate integer polynomial, coefficients stored in ascending order.
///
/// The zero polynomial has an empty coefficient vector; otherwise the
/// leading (last) coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigPoly {
    coeffs: Vec<BigInt>,
}

impl BigPoly {
    pub fn zero() -> Self {
        BigPoly { coeffs: Vec::new() }
    }

    /// Build from ascending coefficients, trimming leading zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        BigPoly { coeffs }
    }

    /// Build from ascending `i64` coefficients.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The monomial x.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn derivative(&self) -> BigPoly {
        if self.coeffs.len() <= 1 {
            return BigPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        BigPoly::from_coeffs(coeffs)
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rat(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    /// f(x + c): substitute a shifted variable.
    pub fn shift(&self, c: &BigInt) -> BigPoly {
        let mut result = BigPoly::zero();
        // Horner in the shifted variable: f(x+c) built from the top down.
        for co in self.coeffs.iter().rev() {
            result = &(&result * &BigPoly::from_coeffs(vec![c.clone(), BigInt::one()]))
                + &BigPoly::constant(co.clone());
        }
        result
    }

    /// Multiply by a scalar.
    pub fn scale(&self, s: &BigInt) -> BigPoly {
        if s.is_zero() {
            return BigPoly::zero();
        }
        BigPoly::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Content: gcd of coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Primitive part: self / content, sign preserved.
    pub fn primitive_part(&self) -> BigPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        BigPoly::from_coeffs(self.coeffs.iter().map(|x| x / &c).collect())
    }

    /// Exact division; panics if the division is inexact (internal use).
    fn div_exact(&self, rhs: &BigPoly) -> BigPoly {
        let (q, r) = self.pseudo_divmod_exact(rhs);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Plain long division assuming it is exact over the integers.
    fn pseudo_divmod_exact(&self, rhs: &BigPoly) -> (BigPoly, BigPoly) {
        let dl = rhs.degree().expect("division by zero polynomial");
        let lc = rhs.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); self.coeffs.len().saturating_sub(dl)];
        while rem.len() > dl {
            let k = rem.len() - 1 - dl;
            let (q, r) = rem.last().unwrap().div_rem(&lc);
            assert!(r.is_zero(), "inexact step in exact division");
            for i in 0..=dl {
                let t = &q * &rhs.coeffs[i];
                rem[k + i] -= t;
            }
            debug_assert!(rem.last().unwrap().is_zero());
            rem.pop();
            quot[k] = q;
        }
        (BigPoly::from_coeffs(quot), BigPoly::from_coeffs(rem))
    }

    /// Pseudo-remainder of `self` by `rhs`, premultiplied by a positive power
    /// of the leading coefficient so the computation stays in Z and the sign
    /// of the true remainder is preserved.
    fn signed_prem(&self, rhs: &BigPoly) -> BigPoly {
        let dn = self.degree().expect("prem of zero");
        let dd = rhs.degree().expect("prem by zero");
        assert!(dn >= dd);
        let lc = rhs.leading().unwrap();
        let mut e = (dn - dd + 1) as u32;
        if lc.is_negative() && e % 2 == 1 {
            e += 1; // keep the premultiplier positive
        }
        let mut rem = self.scale(&lc.pow(e)).coeffs;
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let q = rem.last().unwrap() / lc;
            for i in 0..=dd {
                let t = &q * &rhs.coeffs[i];
                rem[k + i] -= t;
            }
            // leading term may not cancel exactly if q rounded; it does not,
            // because lc^e pre-multiplication makes every step exact
            debug_assert!(rem.last().unwrap().is_zero());
            rem.pop();
        }
        BigPoly::from_coeffs(rem)
    }

    /// Primitive gcd over Z (primitive polynomial remainder sequence).
    pub fn gcd(&self, other: &BigPoly) -> BigPoly {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.signed_prem(&b).primitive_part();
            a = b;
            b = r;
        }
        // normalize leading coefficient positive
        if a.leading().map(|c| c.is_negative()).unwrap_or(false) {
            a = -&a;
        }
        a
    }

    /// Squarefree part f / gcd(f, f'), primitive, positive leading coefficient.
    pub fn squarefree_part(&self) -> BigPoly {
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            let mut p = self.primitive_part();
            if p.leading().map(|c| c.is_negative()).unwrap_or(false) {
                p = -&p;
            }
            return p;
        }
        let mut p = self.primitive_part().div_exact(&g).primitive_part();
        if p.leading().map(|c| c.is_negative()).unwrap_or(false) {
            p = -&p;
        }
        p
    }

    /// Resultant of two polynomials via fraction-free (Bareiss) elimination
    /// on the Sylvester matrix. Exact; intended for small degrees.
    pub fn resultant(&self, other: &BigPoly) -> BigInt {
        let m = match self.degree() {
            Some(d) => d,
            None => return BigInt::zero(),
        };
        let n = match other.degree() {
            Some(d) => d,
            None => return BigInt::zero(),
        };
        if m == 0 {
            return self.coeffs[0].pow(n as u32);
        }
        if n == 0 {
            return other.coeffs[0].pow(m as u32);
        }
        let size = m + n;
        let mut mat = vec![vec![BigInt::zero(); size]; size];
        for row in 0..n {
            for (j, c) in self.coeffs.iter().rev().enumerate() {
                mat[row][row + j] = c.clone();
            }
        }
        for row in 0..m {
            for (j, c) in other.coeffs.iter().rev().enumerate() {
                mat[n + row][row + j] = c.clone();
            }
        }
        // Bareiss
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..size - 1 {
            if mat[k][k].is_zero() {
                let swap = (k + 1..size).find(|&r| !mat[r][k].is_zero());
                match swap {
                    Some(r) => {
                        mat.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..size {
                for j in k + 1..size {
                    let t = &mat[i][j] * &mat[k][k] - &mat[i][k] * &mat[k][j];
                    mat[i][j] = &t / &prev;
                }
                mat[i][k] = BigInt::zero();
            }
            prev = mat[k][k].clone();
        }
        let det = mat[size - 1][size - 1].clone();
        if sign < 0 {
            -det
        } else {
            det
        }
    }

    /// Discriminant: (-1)^(n(n-1)/2) * resultant(f, f') / lc(f).
    pub fn discriminant(&self) -> BigInt {
        let n = self.degree().expect("discriminant of zero polynomial");
        assert!(n >= 1);
        let r = self.resultant(&self.derivative());
        let lc = self.leading().unwrap();
        let signed = if (n * (n - 1) / 2) % 2 == 1 { -r } else { r };
        let (q, rem) = signed.div_rem(lc);
        assert!(rem.is_zero());
        q
    }
}

impl fmt::Display for BigPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                1 if a.is_one() => write!(f, "x")?,
                1 => write!(f, "{a}*x")?,
                _ if a.is_one() => write!(f, "x^{i}")?,
                _ => write!(f, "{a}*x^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl Add for &BigPoly {
    type Output = BigPoly;
    fn add(self, rhs: &BigPoly) -> BigPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        BigPoly::from_coeffs(coeffs)
    }
}

impl Sub for &BigPoly {
    type Output = BigPoly;
    fn sub(self, rhs: &BigPoly) -> BigPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        BigPoly::from_coeffs(coeffs)
    }
}

impl Mul for &BigPoly {
    type Output = BigPoly;
    fn mul(self, rhs: &BigPoly) -> BigPoly {
        if self.is_zero() || rhs.is_zero() {
            return BigPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        BigPoly::from_coeffs(coeffs)
    }
}

impl Neg for &BigPoly {
    type Output = BigPoly;
    fn neg(self) -> BigPoly {
        BigPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Result of a Sturm-sequence real-root count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmReport {
    pub polynomial: BigPoly,
    pub real_root_count: usize,
    pub is_squarefree: bool,
}

/// Count the distinct real roots of a nonzero polynomial.
///
/// For squarefree input the count is exact. Otherwise the count is computed
/// on the squarefree part and the report is flagged.
pub fn sturm_real_roots(f: &BigPoly) -> SturmReport {
    assert!(!f.is_zero(), "sturm of zero polynomial");
    let g = f.gcd(&f.derivative());
    let is_squarefree = g.degree() == Some(0);
    let p = if is_squarefree {
        f.clone()
    } else {
        f.squarefree_part()
    };
    if p.degree() == Some(0) {
        return SturmReport { polynomial: f.clone(), real_root_count: 0, is_squarefree };
    }

    // Sturm chain via sign-safe pseudo-remainders divided by positive content.
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let k = chain.len();
        let (a, b) = (&chain[k - 2], &chain[k - 1]);
        if b.is_zero() {
            chain.pop();
            break;
        }
        if a.degree() < b.degree() {
            break;
        }
        let r = -&a.signed_prem(b).primitive_part();
        chain.push(r);
    }

    // Sign at +inf: sign of leading coefficient; at -inf: times (-1)^deg.
    let variations = |at_minus_inf: bool| -> usize {
        let mut count = 0;
        let mut prev: Option<bool> = None; // sign as is_negative
        for q in &chain {
            if q.is_zero() {
                continue;
            }
            let deg = q.degree().unwrap();
            let mut neg = q.leading().unwrap().is_negative();
            if at_minus_inf && deg % 2 == 1 {
                neg = !neg;
            }
            if let Some(p) = prev {
                if p != neg {
                    count += 1;
                }
            }
            prev = Some(neg);
        }
        count
    };

    let count = variations(true) - variations(false);
    SturmReport { polynomial: f.clone(), real_root_count: count, is_squarefree }
}

/// The 2-adic Newton polygon of an integer polynomial: the lower convex hull
/// of the points (i, ord_2(coefficient_i)) over nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolygon {
    /// (index, valuation) for each nonzero coefficient.
    pub points: Vec<(usize, u64)>,
    /// Hull vertices, left to right; consecutive pairs are the segments.
    pub hull: Vec<(usize, u64)>,
}

impl NewtonPolygon {
    /// Slopes of the hull segments as (rise, run) pairs, in left-to-right
    /// order; rise is v_end - v_start (negative for descending segments).
    pub fn segment_slopes(&self) -> Vec<(i64, usize)> {
        self.hull
            .windows(2)
            .map(|w| {
                let (i0, v0) = w[0];
                let (i1, v1) = w[1];
                (v1 as i64 - v0 as i64, i1 - i0)
            })
            .collect()
    }

    /// True iff the hull is one segment from (low, v) to (deg, 0) whose slope
    /// has denominator exactly `deg - low` after reduction.
    pub fn is_single_segment(&self) -> bool {
        self.hull.len() == 2
    }
}

/// Compute the 2-adic Newton polygon. Requires a nonzero polynomial; the
/// usual consumers pass monic integer polynomials.
pub fn newton_polygon_2adic(f: &BigPoly) -> NewtonPolygon {
    assert!(!f.is_zero());
    let points: Vec<(usize, u64)> = f
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, ord2(c)))
        .collect();
    // monotone-chain lower hull; slopes compared by cross product
    let mut hull: Vec<(usize, u64)> = Vec::new();
    for &(x, y) in &points {
        while hull.len() >= 2 {
            let (x1, y1) = hull[hull.len() - 2];
            let (x2, y2) = hull[hull.len() - 1];
            // remove (x2,y2) if it lies on or above segment (x1,y1)-(x,y)
            let lhs = (y2 as i128 - y1 as i128) * (x as i128 - x1 as i128);
            let rhs = (y as i128 - y1 as i128) * (x2 as i128 - x1 as i128);
            if lhs >= rhs {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push((x, y));
    }
    NewtonPolygon { points, hull }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::bi;

    #[test]
    fn arithmetic_and_shift() {
        let f = BigPoly::from_i64(&[-7, 2, 1]); // x^2 + 2x - 7
        assert_eq!(f.eval_int(&bi(1)), bi(-4));
        let g = f.shift(&bi(-1)); // (x-1)^2 + 2(x-1) - 7 = x^2 - 8
        assert_eq!(g, BigPoly::from_i64(&[-8, 0, 1]));
        assert_eq!(f.degree(), Some(2));
        assert!(f.is_monic());
    }

    #[test]
    fn sturm_basic() {
        assert_eq!(sturm_real_roots(&BigPoly::from_i64(&[-2, 0, 1])).real_root_count, 2);
        assert_eq!(sturm_real_roots(&BigPoly::from_i64(&[1, 0, 1])).real_root_count, 0);
        // (x^2-1)^2: non-squarefree, 2 distinct roots
        let f = BigPoly::from_i64(&[1, 0, -2, 0, 1]);
        let r = sturm_real_roots(&f);
        assert!(!r.is_squarefree);
        assert_eq!(r.real_root_count, 2);
        // Wilkinson-flavored: (x-1)(x-2)(x-3)
        let f = BigPoly::from_i64(&[-6, 11, -6, 1]);
        assert_eq!(sturm_real_roots(&f).real_root_count, 3);
    }

    /// Independent root counter: Vincent–Collins–Akritas bisection driven by
    /// Descartes' rule of signs. Exact integer arithmetic throughout; shares
    /// no code path with the Sturm implementation.
    fn count_roots_vca(f: &BigPoly) -> usize {
        fn variations(p: &BigPoly) -> usize {
            let mut count = 0;
            let mut prev: Option<bool> = None;
            for c in p.coeffs() {
                if c.is_zero() {
                    continue;
                }
                let neg = c.is_negative();
                if let Some(pr) = prev {
                    if pr != neg {
                        count += 1;
                    }
                }
                prev = Some(neg);
            }
            count
        }
        // number of roots of g in the open interval (0, 1)
        fn vca01(g: &BigPoly, depth: usize) -> usize {
            assert!(depth < 64, "vca failed to separate roots");
            let n = g.degree().unwrap();
            // h(x) = (1+x)^n * g(1/(1+x)): reverse coefficients, shift by 1
            let rev = BigPoly::from_coeffs(g.coeffs().iter().rev().cloned().collect());
            let h = rev.shift(&BigInt::one());
            match variations(&h) {
                0 => 0,
                1 => 1,
                _ => {
                    // split at 1/2: left g(x/2)*2^n, right g((x+1)/2)*2^n
                    let left = BigPoly::from_coeffs(
                        g.coeffs()
                            .iter()
                            .enumerate()
                            .map(|(i, c)| c * (BigInt::one() << (n - i) as u64))
                            .collect(),
                    );
                    let right = left.shift(&BigInt::one());
                    let mid_root = g
                        .eval_rat(&BigRational::new(BigInt::one(), BigInt::from(2)))
                        .is_zero() as usize;
                    vca01(&left, depth + 1) + mid_root + vca01(&right, depth + 1)
                }
            }
        }
        let p = f.squarefree_part();
        if p.degree() == Some(0) {
            return 0;
        }
        // Cauchy-style bound: 1 + max |c_i| / |lc|, rounded up to a power of 2
        let lc = p.leading().unwrap().clone();
        let mut bound = BigInt::one();
        for c in p.coeffs() {
            let q: BigInt = c.abs() / lc.abs() + 2;
            while bound < q {
                bound <<= 1;
            }
        }
        let n = p.degree().unwrap();
        // positive roots: count in (0, bound) by substituting bound*x
        let scaled = BigPoly::from_coeffs(
            p.coeffs().iter().enumerate().map(|(i, c)| c * bound.pow(i as u32)).collect(),
        );
        let pos = vca01(&scaled, 0);
        // negative roots: same on p(-x)
        let neg_poly = BigPoly::from_coeffs(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        );
        let scaled_neg = BigPoly::from_coeffs(
            neg_poly.coeffs().iter().enumerate().map(|(i, c)| c * bound.pow(i as u32)).collect(),
        );
        let neg = vca01(&scaled_neg, 0);
        let zero = p.coeff(0).is_zero() as usize;
        let _ = n;
        pos + neg + zero
    }

    #[test]
    fn sturm_matches_vca_on_random_cubics_quartics() {
        // deterministic pseudo-random coefficients in [-50, 50]
        let mut state: u64 = 12345;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % 101) as i64 - 50
        };
        let mut tested = 0;
        while tested < 200 {
            let deg = 3 + (next().unsigned_abs() % 2) as usize;
            let mut coeffs: Vec<i64> = (0..=deg).map(|_| next()).collect();
            if coeffs[deg] == 0 {
                coeffs[deg] = 1;
            }
            let f = BigPoly::from_i64(&coeffs);
            if f.gcd(&f.derivative()).degree() != Some(0) {
                continue; // oracle below expects squarefree input
            }
            assert_eq!(sturm_real_roots(&f).real_root_count, count_roots_vca(&f), "f = {f}");
            tested += 1;
        }
    }

    #[test]
    fn newton_polygon_examples() {
        // x^2 - 8: points (0,3), (2,0); single segment
        let np = newton_polygon_2adic(&BigPoly::from_i64(&[-8, 0, 1]));
        assert_eq!(np.hull, vec![(0, 3), (2, 0)]);
        assert_eq!(np.segment_slopes(), vec![(-3, 2)]);
        assert!(np.is_single_segment());
        // x^3 - 24x + 16: points (0,4), (1,3), (3,0); hull (0,4)-(3,0)
        let np = newton_polygon_2adic(&BigPoly::from_i64(&[16, -24, 0, 1]));
        assert_eq!(np.hull, vec![(0, 4), (3, 0)]);
        assert_eq!(np.segment_slopes(), vec![(-4, 3)]);
        // x^2 - 3: single segment of slope 0
        let np = newton_polygon_2adic(&BigPoly::from_i64(&[-3, 0, 1]));
        assert_eq!(np.hull, vec![(0, 0), (2, 0)]);
        assert_eq!(np.segment_slopes(), vec![(0, 2)]);
        assert!(np.is_single_segment());
    }

    #[test]
    fn newton_polygon_hull_below_points() {
        let f = BigPoly::from_i64(&[64, 8, 12, 2, 1]);
        let np = newton_polygon_2adic(&f);
        // hull slopes strictly increase and hull lies on/below all points
        let slopes = np.segment_slopes();
        for w in slopes.windows(2) {
            let (r0, d0) = w[0];
            let (r1, d1) = w[1];
            assert!((r0 as i128) * (d1 as i128) < (r1 as i128) * (d0 as i128));
        }
        for &(x, y) in &np.points {
            for seg in np.hull.windows(2) {
                let (x1, y1) = seg[0];
                let (x2, y2) = seg[1];
                if x1 <= x && x <= x2 {
                    // y >= line through (x1,y1),(x2,y2) at x
                    let lhs = (y as i128 - y1 as i128) * (x2 as i128 - x1 as i128);
                    let rhs = (y2 as i128 - y1 as i128) * (x as i128 - x1 as i128);
                    assert!(lhs >= rhs);
                }
            }
        }
    }

    #[test]
    fn resultant_and_discriminant() {
        // disc(x^2+bx+c) = b^2-4c
        let f = BigPoly::from_i64(&[5, 3, 1]);
        assert_eq!(f.discriminant(), bi(9 - 20));
        // disc(x^3+px+q) = -4p^3 - 27q^2
        let f = BigPoly::from_i64(&[1, -3, 0, 1]);
        assert_eq!(f.discriminant(), bi(81));
        // resultant of coprime polynomials is nonzero; of sharing a factor, zero
        let a = BigPoly::from_i64(&[-1, 1]); // x-1
        let b = BigPoly::from_i64(&[-1, 0, 1]); // x^2-1
        assert_eq!(a.resultant(&b), bi(0));
    }

    #[test]
    fn gcd_and_squarefree_part() {
        let a = BigPoly::from_i64(&[-1, 1]);
        let sq = &a * &a; // (x-1)^2
        let f = &sq * &BigPoly::from_i64(&[2, 1]); // (x-1)^2 (x+2)
        let g = f.gcd(&f.derivative());
        assert_eq!(g, a);
        assert_eq!(f.squarefree_part(), &a * &BigPoly::from_i64(&[2, 1]));
    }
}
