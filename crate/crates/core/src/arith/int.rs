//! Integer square roots, primality testing, and factorization.

use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Floor of the square root of a non-negative integer.
///
/// Errors on negative input.
pub fn isqrt(n: &BigInt) -> Result<BigInt> {
    if n.is_negative() {
        return Err(Error::Domain(format!("isqrt of negative {n}")));
    }
    Ok(n.sqrt())
}

/// Witnesses making Miller–Rabin deterministic for all n < 3.3 * 10^14.
///
/// The first seven primes are a correct witness set for every n below
/// 3.415 * 10^14 (Sorenson–Webster / Jaeschke bounds), which covers the
/// documented deterministic range with margin.
const SMALL_WITNESSES: [u64; 7] = [2, 3, 5, 7, 11, 13, 17];

/// Deterministic threshold: below this, `is_prime` is exact.
const DETERMINISTIC_BELOW: u64 = 330_000_000_000_000;

/// Miller–Rabin primality test.
///
/// Deterministic for n < 3.3 * 10^14 via a fixed witness set; above that it
/// runs the fixed witnesses plus 64 rounds with deterministically derived
/// bases, so results are reproducible and the error probability is below
/// 4^-64.
pub fn is_prime(n: &BigInt) -> bool {
    if n < &BigInt::from(2) {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let pb = BigInt::from(p);
        if n == &pb {
            return true;
        }
        if (n % pb).is_zero() {
            return false;
        }
    }
    let n_minus_1: BigInt = n - 1;
    let s = n_minus_1.trailing_zeros().expect("n > 2");
    let d = &n_minus_1 >> s;

    let witness_fails = |a: &BigInt| -> bool {
        // returns true if a proves n composite
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            return false;
        }
        for _ in 1..s {
            x = x.modpow(&BigInt::from(2), n);
            if x == n_minus_1 {
                return false;
            }
        }
        true
    };

    for w in SMALL_WITNESSES {
        if witness_fails(&BigInt::from(w)) {
            return false;
        }
    }
    if n.to_u64().map(|v| v < DETERMINISTIC_BELOW).unwrap_or(false) {
        return true;
    }
    // Extended rounds: bases derived from a fixed LCG so reruns agree.
    let mut state: u64 = 0x9e3779b97f4a7c15;
    for _ in 0..64 {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let a = BigInt::from((state >> 1) | 2) % (n - 3) + 2;
        if witness_fails(&a) {
            return false;
        }
    }
    true
}

/// Outcome of [`factor`]: prime factors with multiplicity, plus any
/// cofactors the step-capped search failed to split.
///
/// `complete` is true iff `unresolved` is empty; the product of
/// `prime^exponent` over `factors` times the product of `unresolved` always
/// equals the input. An incomplete factorization is an explicit result
/// state, never a silently wrong one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<(BigInt, u32)>,
    pub unresolved: Vec<BigInt>,
    pub complete: bool,
}

impl Factorization {
    /// Product of all prime powers and unresolved cofactors.
    pub fn product(&self) -> BigInt {
        let mut p = BigInt::one();
        for (q, e) in &self.factors {
            p *= q.pow(*e);
        }
        for u in &self.unresolved {
            p *= u;
        }
        p
    }

    /// The squarefree kernel (product of primes with odd exponent).
    ///
    /// Only meaningful when `complete`.
    pub fn squarefree_kernel(&self) -> BigInt {
        let mut k = BigInt::one();
        for (q, e) in &self.factors {
            if e % 2 == 1 {
                k *= q;
            }
        }
        k
    }
}

const TRIAL_BOUND: u64 = 10_000;
const RHO_STEP_CAP: u64 = 1 << 22;

/// Factor a positive integer.
///
/// Trial division by primes below 10^4, then Pollard rho (Brent variant)
/// with a step cap. Cofactors that survive the cap are reported in
/// `unresolved` rather than guessed at.
pub fn factor(n: &BigInt) -> Result<Factorization> {
    if !n.is_positive() {
        return Err(Error::Domain(format!("factor of non-positive {n}")));
    }
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut unresolved = Vec::new();
    let mut m = n.clone();

    let push = |p: BigInt, e: u32, factors: &mut Vec<(BigInt, u32)>| {
        if let Some(slot) = factors.iter_mut().find(|(q, _)| *q == p) {
            slot.1 += e;
        } else {
            factors.push((p, e));
        }
    };

    let mut d = 2u64;
    while d < TRIAL_BOUND && !m.is_one() {
        let db = BigInt::from(d);
        if (&m % &db).is_zero() {
            let mut e = 0;
            while (&m % &db).is_zero() {
                m /= &db;
                e += 1;
            }
            push(db, e, &mut factors);
        }
        d += if d == 2 { 1 } else { 2 };
    }

    // Stack of composite cofactors still to split.
    let mut stack = Vec::new();
    if !m.is_one() {
        stack.push(m);
    }
    while let Some(c) = stack.pop() {
        if is_prime(&c) {
            push(c, 1, &mut factors);
            continue;
        }
        if let Some(r) = perfect_power_root(&c) {
            // c = r^k; factor the root instead
            let (root, k) = r;
            let sub = factor(&root)?;
            for (q, e) in sub.factors {
                push(q, e * k, &mut factors);
            }
            for u in sub.unresolved {
                for _ in 0..k {
                    stack.push(u.clone());
                }
            }
            continue;
        }
        match pollard_rho(&c, RHO_STEP_CAP) {
            Some(f) => {
                stack.push(&c / &f);
                stack.push(f);
            }
            None => unresolved.push(c),
        }
    }

    factors.sort();
    unresolved.sort();
    let complete = unresolved.is_empty();
    let out = Factorization { factors, unresolved, complete };
    debug_assert_eq!(out.product(), *n);
    Ok(out)
}

/// If n = r^k for some k >= 2, return (r, k) with r minimal (k maximal).
fn perfect_power_root(n: &BigInt) -> Option<(BigInt, u32)> {
    let bits = n.bits();
    for k in (2..=bits.max(2)).rev() {
        let k32 = k as u32;
        let r = n.nth_root(k32);
        if r.pow(k32) == *n && r > BigInt::one() {
            return Some((r, k32));
        }
    }
    None
}

/// Pollard rho, Brent cycle detection, deterministic parameter schedule.
fn pollard_rho(n: &BigInt, step_cap: u64) -> Option<BigInt> {
    let one = BigInt::one();
    if n.is_even() {
        return Some(BigInt::from(2));
    }
    for c in 1i64..20 {
        let cc = BigInt::from(c);
        let f = |x: &BigInt| (x * x + &cc) % n;
        let mut x = BigInt::from(2);
        let mut y = x.clone();
        let mut d = one.clone();
        let mut steps = 0u64;
        while d.is_one() && steps < step_cap {
            // batch gcd to amortize
            let mut acc = one.clone();
            for _ in 0..128 {
                x = f(&x);
                y = f(&f(&y));
                let diff = (&x - &y).abs();
                if diff.is_zero() {
                    break;
                }
                acc = acc * diff % n;
                steps += 1;
            }
            d = acc.gcd(n);
            if d == *n {
                // batch overshoot or cycle; retry with next c
                break;
            }
        }
        if !d.is_one() && d != *n {
            return Some(d);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::bi;

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt(&bi(0)).unwrap(), bi(0));
        assert_eq!(isqrt(&bi(657)).unwrap(), bi(25));
        assert_eq!(
            isqrt(&BigInt::from(2u128.pow(64))).unwrap(),
            BigInt::from(2u64.pow(32))
        );
        assert!(isqrt(&bi(-1)).is_err());
    }

    #[test]
    fn isqrt_bracket_small_range() {
        for n in 0i64..=100_000 {
            let s = isqrt(&bi(n)).unwrap();
            assert!(&s * &s <= bi(n));
            assert!((&s + 1) * (&s + 1) > bi(n));
        }
    }

    #[test]
    fn prime_examples() {
        assert!(is_prime(&bi(73)));
        assert!(!is_prime(&bi(1)));
        // 2^64 + 13, cross-checked against an independent primality oracle
        let n = BigInt::from(2u128.pow(64) + 13);
        assert!(is_prime(&n));
        assert!(!is_prime(&bi(657)));
        assert!(is_prime(&BigInt::from(329999999999903u64)));
        assert!(!is_prime(&BigInt::from(329999999999973u64)));
    }

    #[test]
    fn primes_below_1000_match_sieve() {
        let mut sieve = vec![true; 1000];
        sieve[0] = false;
        sieve[1] = false;
        for i in 2..1000 {
            if sieve[i] {
                for j in (i * i..1000).step_by(i) {
                    sieve[j] = false;
                }
            }
        }
        for n in 0..1000 {
            assert_eq!(is_prime(&bi(n as i64)), sieve[n], "n = {n}");
        }
    }

    #[test]
    fn factor_examples() {
        let f = factor(&bi(657)).unwrap();
        assert_eq!(f.factors, vec![(bi(3), 2), (bi(73), 1)]);
        assert!(f.complete);

        let f = factor(&bi(1)).unwrap();
        assert!(f.factors.is_empty() && f.complete);

        let f = factor(&(BigInt::from(2).pow(20) * 3)).unwrap();
        assert_eq!(f.factors, vec![(bi(2), 20), (bi(3), 1)]);

        assert!(factor(&bi(0)).is_err());
    }

    #[test]
    fn factor_large_semiprime_and_kernel() {
        // 2^63 + 1 = 3^3 * 19 * 43 * 5419 * 77158673929
        let n = BigInt::from(2u128.pow(63) + 1);
        let f = factor(&n).unwrap();
        assert!(f.complete);
        assert_eq!(f.product(), n);
        assert_eq!(
            f.factors,
            vec![
                (bi(3), 3),
                (bi(19), 1),
                (bi(43), 1),
                (bi(5419), 1),
                (BigInt::from(77158673929u64), 1)
            ]
        );
        assert_eq!(f.squarefree_kernel(), bi(3) * 19 * 43 * 5419 * 77158673929i64);
    }

    #[test]
    fn factor_perfect_power() {
        let n = BigInt::from(1000003u64).pow(3);
        let f = factor(&n).unwrap();
        assert!(f.complete);
        assert_eq!(f.factors, vec![(BigInt::from(1000003u64), 3)]);
    }
}
