//! Fixed-point reals with explicit absolute error bounds, a rigorous
//! logarithm, and certified continued-fraction expansions.
//!
//! A [`HighPrecReal`] stores `mantissa * 2^exponent` together with an exact
//! rational error radius. Every operation widens the radius; nothing ever
//! shrinks it. Comparisons are three-valued: an enclosure either decides an
//! inequality or reports that it cannot.

use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A rigorously enclosed real number: the true value lies within
/// `mantissa * 2^exponent ± error`.
#[derive(Debug, Clone)]
pub struct HighPrecReal {
    mantissa: BigInt,
    exponent: i64,
    error: BigRational,
}

fn pow2(e: i64) -> BigRational {
    if e >= 0 {
        BigRational::from(BigInt::one() << e as u64)
    } else {
        BigRational::new(BigInt::one(), BigInt::one() << (-e) as u64)
    }
}

impl HighPrecReal {
    /// An exact integer.
    pub fn from_int(n: BigInt) -> Self {
        HighPrecReal { mantissa: n, exponent: 0, error: BigRational::zero() }
    }

    /// Quantize an exact rational to `bits` fractional bits; the
    /// representation error is folded into the radius exactly.
    pub fn from_rat(x: &BigRational, bits: u64) -> Self {
        let scaled = x * pow2(bits as i64);
        let mantissa = scaled.round().to_integer();
        let err = (x - BigRational::from(mantissa.clone()) * pow2(-(bits as i64))).abs();
        HighPrecReal { mantissa, exponent: -(bits as i64), error: err }
    }

    /// Enclose the exact rational interval [lo, hi], quantized at `bits`.
    pub fn from_interval(lo: &BigRational, hi: &BigRational, bits: u64) -> Self {
        assert!(lo <= hi);
        let mid = (lo + hi) / BigRational::from(BigInt::from(2));
        let rad = (hi - lo) / BigRational::from(BigInt::from(2));
        let mut v = Self::from_rat(&mid, bits);
        v.error += rad;
        v
    }

    /// Center value as an exact rational.
    pub fn center(&self) -> BigRational {
        BigRational::from(self.mantissa.clone()) * pow2(self.exponent)
    }

    pub fn error_radius(&self) -> &BigRational {
        &self.error
    }

    /// Lower endpoint of the enclosure.
    pub fn lo(&self) -> BigRational {
        self.center() - &self.error
    }

    /// Upper endpoint of the enclosure.
    pub fn hi(&self) -> BigRational {
        self.center() + &self.error
    }

    pub fn is_exact(&self) -> bool {
        self.error.is_zero()
    }

    pub fn add(&self, rhs: &HighPrecReal) -> HighPrecReal {
        let e = self.exponent.min(rhs.exponent);
        let m = (&self.mantissa << (self.exponent - e) as u64)
            + (&rhs.mantissa << (rhs.exponent - e) as u64);
        HighPrecReal { mantissa: m, exponent: e, error: &self.error + &rhs.error }
    }

    pub fn sub(&self, rhs: &HighPrecReal) -> HighPrecReal {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> HighPrecReal {
        HighPrecReal {
            mantissa: -&self.mantissa,
            exponent: self.exponent,
            error: self.error.clone(),
        }
    }

    pub fn abs_enclosure(&self) -> HighPrecReal {
        if self.mantissa.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Multiply by an exact integer.
    pub fn mul_int(&self, k: &BigInt) -> HighPrecReal {
        HighPrecReal {
            mantissa: &self.mantissa * k,
            exponent: self.exponent,
            error: &self.error * BigRational::from(k.abs()),
        }
    }

    /// Multiply by an exact positive rational.
    pub fn mul_rat(&self, r: &BigRational, bits: u64) -> HighPrecReal {
        assert!(r.is_positive());
        let (lo, hi) = (self.lo() * r, self.hi() * r);
        Self::from_interval(&lo, &hi, bits)
    }

    pub fn mul(&self, rhs: &HighPrecReal, bits: u64) -> HighPrecReal {
        let combos = [
            self.lo() * rhs.lo(),
            self.lo() * rhs.hi(),
            self.hi() * rhs.lo(),
            self.hi() * rhs.hi(),
        ];
        let lo = combos.iter().min().unwrap();
        let hi = combos.iter().max().unwrap();
        Self::from_interval(lo, hi, bits)
    }

    /// Divide; the divisor's enclosure must exclude zero.
    pub fn div(&self, rhs: &HighPrecReal, bits: u64) -> Result<HighPrecReal> {
        let (rl, rh) = (rhs.lo(), rhs.hi());
        if !(rl.is_positive() || rh.is_negative()) {
            return Err(Error::Precision("division by enclosure containing zero".into()));
        }
        let combos = [
            self.lo() / &rl,
            self.lo() / &rh,
            self.hi() / &rl,
            self.hi() / &rh,
        ];
        let lo = combos.iter().min().unwrap();
        let hi = combos.iter().max().unwrap();
        Ok(Self::from_interval(lo, hi, bits))
    }

    /// Decide `self < rhs` if the enclosures permit.
    pub fn try_lt(&self, rhs: &HighPrecReal) -> Option<bool> {
        if self.hi() < rhs.lo() {
            Some(true)
        } else if self.lo() >= rhs.hi() {
            Some(false)
        } else {
            None
        }
    }

    /// Decide `self < r` against an exact rational if possible.
    pub fn try_lt_rat(&self, r: &BigRational) -> Option<bool> {
        if &self.hi() < r {
            Some(true)
        } else if &self.lo() >= r {
            Some(false)
        } else {
            None
        }
    }

    /// Smallest integer >= the upper endpoint (rigorous upward rounding).
    pub fn ceil_hi(&self) -> BigInt {
        self.hi().ceil().to_integer()
    }
}

/// Working guard bits added on top of the requested precision.
const GUARD_BITS: u64 = 64;

/// Rigorous natural logarithm of a positive rational to the requested
/// precision: the result radius is at most `2^-bits`.
///
/// Argument reduction writes `x = 2^k * m` with `m` in `[3/4, 3/2)`, then
/// `log m = 2 atanh((m-1)/(m+1))` is summed in fixed point with a proven
/// tail bound; `log 2` itself comes from `2 atanh(1/3)`.
pub fn highprec_log(x: &BigRational, bits: u64) -> Result<HighPrecReal> {
    if !x.is_positive() {
        return Err(Error::Domain(format!("log of non-positive {x}")));
    }
    let bits = bits.max(32);
    if x.is_one() {
        return Ok(HighPrecReal::from_int(BigInt::zero()));
    }
    let w = bits + GUARD_BITS;

    // reduce: find k with x * 2^-k in [3/4, 3/2)
    let mut k: i64 = x.numer().bits() as i64 - x.denom().bits() as i64;
    let lo = BigRational::new(BigInt::from(3), BigInt::from(4));
    let hi = BigRational::new(BigInt::from(3), BigInt::from(2));
    loop {
        let m = x * pow2(-k);
        if m < lo {
            k -= 1;
        } else if m >= hi {
            k += 1;
        } else {
            break;
        }
    }
    let m = x * pow2(-k);

    let y = (&m - BigRational::one()) / (&m + BigRational::one());
    let (acc, err_ulps, tail) = atanh_series(&y, w);
    let ln_m = HighPrecReal {
        mantissa: acc << 1,
        exponent: -(w as i64),
        error: BigRational::from(BigInt::from(2 * err_ulps)) * pow2(-(w as i64))
            + tail * BigRational::from(BigInt::from(2)),
    };

    let result = if k == 0 {
        ln_m
    } else {
        let (acc2, err2, tail2) = atanh_series(&BigRational::new(BigInt::one(), BigInt::from(3)), w);
        let ln2 = HighPrecReal {
            mantissa: acc2 << 1,
            exponent: -(w as i64),
            error: BigRational::from(BigInt::from(2 * err2)) * pow2(-(w as i64))
                + tail2 * BigRational::from(BigInt::from(2)),
        };
        ln_m.add(&ln2.mul_int(&BigInt::from(k)))
    };

    debug_assert!(result.error <= pow2(-(bits as i64)));
    Ok(result)
}

/// Sum `atanh(y) = y + y^3/3 + y^5/5 + ...` at scale `2^w` for exact rational
/// `|y| <= 1/3`. Returns (accumulated integer, error in ulps, tail bound).
fn atanh_series(y: &BigRational, w: u64) -> (BigInt, u64, BigRational) {
    debug_assert!(y.abs() <= BigRational::new(BigInt::one(), BigInt::from(3)) + BigRational::new(BigInt::one(), BigInt::from(1000)));
    let scale = pow2(w as i64);
    // quantize y and y^2 once; both carry <= 2 ulp error
    let yq = (y * &scale).round().to_integer();
    let y2q = (y * y * &scale).round().to_integer();

    let mut acc = BigInt::zero();
    let mut p = yq.clone(); // ~ y^(2j+1) * 2^w
    let mut j: u64 = 0;
    // per-iteration error growth: p picks up <= e_p/8 + 3 ulps per step
    // (|y^2| <= 1/8 after quantization slack); coarse running bound below
    let mut e_p: u64 = 1;
    let mut e_acc: u64 = 0;
    loop {
        let denom = BigInt::from(2 * j + 1);
        let term = &p / &denom;
        if term.is_zero() && j > 0 {
            break;
        }
        acc += &term;
        e_acc += e_p + 1;
        p = (&p * &y2q) >> w;
        e_p = e_p / 8 + 3;
        j += 1;
        assert!(j < 10 * w, "atanh series failed to converge");
    }
    // true tail: sum_{i>=j} |y|^(2i+1)/(2i+1) <= |y|^(2j+1) / (1 - y^2)
    let ya = y.abs();
    let mut ypow = BigRational::one();
    for _ in 0..(2 * j + 1) {
        ypow *= &ya;
    }
    let tail = &ypow / (BigRational::one() - &ya * &ya);
    (acc, e_acc, tail)
}

/// Rigorous log of an enclosure: returns an enclosure of log(x) for every
/// x in the input interval. The interval must be strictly positive.
pub fn log_enclosure(x: &HighPrecReal, bits: u64) -> Result<HighPrecReal> {
    let (lo, hi) = (x.lo(), x.hi());
    if !lo.is_positive() {
        return Err(Error::Domain("log of enclosure touching zero".into()));
    }
    let a = highprec_log(&lo, bits)?;
    let b = highprec_log(&hi, bits)?;
    Ok(HighPrecReal::from_interval(&a.lo(), &b.hi(), bits))
}

/// A certified continued-fraction expansion.
#[derive(Debug, Clone)]
pub struct CfExpansion {
    /// Partial quotients a_0, a_1, ...; every listed term is certified
    /// (identical at both interval endpoints).
    pub terms: Vec<BigInt>,
    /// Convergents p_i/q_i matching `terms`.
    pub convergents: Vec<(BigInt, BigInt)>,
    /// True iff the requested number of terms was certified (or the
    /// expansion of an exact rational terminated first).
    pub certified: bool,
}

/// Expand `x` as a continued fraction with certified terms.
///
/// A term is emitted only when both endpoints of the enclosure agree on it,
/// so the terms are provably those of every number in the interval; for an
/// exact rational input the full (finite) Euclidean expansion is produced.
pub fn continued_fraction(x: &HighPrecReal, n_terms: usize) -> CfExpansion {
    let mut lo = x.lo();
    let mut hi = x.hi();
    let mut terms = Vec::new();
    let mut convergents = Vec::new();
    let (mut pm1, mut pm2) = (BigInt::one(), BigInt::zero());
    let (mut qm1, mut qm2) = (BigInt::zero(), BigInt::one());
    let mut exhausted_exactly = false;

    while terms.len() < n_terms {
        let fl = floor_rat(&lo);
        if fl != floor_rat(&hi) {
            break; // enclosure too wide to certify the next term
        }
        let a = fl;
        let p = &a * &pm1 + &pm2;
        let q = &a * &qm1 + &qm2;
        terms.push(a.clone());
        convergents.push((p.clone(), q.clone()));
        pm2 = std::mem::replace(&mut pm1, p);
        qm2 = std::mem::replace(&mut qm1, q);

        let fa = BigRational::from(a);
        let flo = &lo - &fa;
        let fhi = &hi - &fa;
        if fhi.is_zero() {
            // exact integer reached: expansion terminates
            exhausted_exactly = flo.is_zero();
            break;
        }
        if flo.is_zero() {
            // endpoint exactly integral but interval extends above: the next
            // term is unbounded, cannot certify further
            break;
        }
        // invert and swap endpoints
        let new_lo = fhi.recip();
        let new_hi = flo.recip();
        lo = new_lo;
        hi = new_hi;
    }

    let certified = terms.len() == n_terms || exhausted_exactly;
    CfExpansion { terms, convergents, certified }
}

fn floor_rat(x: &BigRational) -> BigInt {
    x.numer().div_floor(x.denom())
}

/// Convenience: parse a decimal string into an exact rational
/// (e.g. "29.009" or "-8.3185").
pub fn decimal_rat(s: &str) -> BigRational {
    let neg = s.starts_with('-');
    let t = s.trim_start_matches('-');
    let (int_part, frac_part) = match t.split_once('.') {
        Some((a, b)) => (a, b),
        None => (t, ""),
    };
    let digits: BigInt = format!("{int_part}{frac_part}").parse().expect("decimal literal");
    let den = BigInt::from(10u32).pow(frac_part.len() as u32);
    let v = BigRational::new(digits, den);
    if neg {
        -v
    } else {
        v
    }
}
