//! Exact rationals and the handful of integer helpers the curve code needs.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn from_bigint(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Exact integer `k`-th root, if `n` is a perfect `k`-th power.
pub fn exact_root_int(n: &BigInt, k: u32) -> Option<BigInt> {
    if n.is_zero() {
        return Some(BigInt::zero());
    }
    if n.is_negative() {
        if k.is_multiple_of(2) {
            return None;
        }
        return exact_root_int(&-n, k).map(|r| -r);
    }
    let r = n.nth_root(k);
    if num_traits::pow(r.clone(), k as usize) == *n {
        Some(r)
    } else {
        None
    }
}

/// Exact rational `k`-th root, if one exists.
pub fn exact_root(q: &Rational, k: u32) -> Option<Rational> {
    let n = exact_root_int(q.numer(), k)?;
    let d = exact_root_int(q.denom(), k)?;
    Some(Rational::new(n, d))
}

pub fn is_square(q: &Rational) -> bool {
    exact_root(q, 2).is_some()
}

/// `q^e` for a possibly negative exponent; panics on `0^(negative)`.
pub fn pow_i(q: &Rational, e: i32) -> Rational {
    if e >= 0 {
        num_traits::pow(q.clone(), e as usize)
    } else {
        num_traits::pow(q.recip(), (-e) as usize)
    }
}

/// Symmetric residue of `a` modulo `m`, in `(-m/2, m/2]`.
pub fn symmetric_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let r = a.mod_floor(m);
    if &r + &r > *m {
        r - m
    } else {
        r
    }
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

pub fn bigint_to_u64_mod(a: &BigInt, p: u64) -> u64 {
    let r = a.mod_floor(&BigInt::from(p));
    let (_, digits) = r.to_u64_digits();
    digits.first().copied().unwrap_or(0)
}

/// Sign-aware absolute value helper kept for readability at call sites.
pub fn abs_int(a: &BigInt) -> BigInt {
    if a.sign() == Sign::Minus {
        -a
    } else {
        a.clone()
    }
}

/// Divide out every factor `p` of `n` with `p < bound`, returning the cofactor.
pub fn strip_small_primes(n: &BigInt, bound: u64) -> BigInt {
    let mut m = abs_int(n);
    if m.is_zero() {
        return m;
    }
    for p in crate::qpoly::modp::primes_below(bound) {
        let bp = BigInt::from(p);
        while (&m % &bp).is_zero() {
            m /= &bp;
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_rationals() {
        assert_eq!(exact_root(&rat(16, 81), 4), Some(rat(2, 3)));
        assert_eq!(exact_root(&rat(-8, 27), 3), Some(rat(-2, 3)));
        assert_eq!(exact_root(&rat(2, 1), 4), None);
        assert_eq!(exact_root(&rat(-4, 1), 2), None);
        assert!(is_square(&rat(9, 4)));
    }

    #[test]
    fn symmetric_residues() {
        let m = BigInt::from(10);
        assert_eq!(symmetric_mod(&BigInt::from(7), &m), BigInt::from(-3));
        assert_eq!(symmetric_mod(&BigInt::from(5), &m), BigInt::from(5));
        assert_eq!(symmetric_mod(&BigInt::from(-12), &m), BigInt::from(-2));
    }

    #[test]
    fn inverse_mod() {
        let m = BigInt::from(125);
        let inv = mod_inverse(&BigInt::from(7), &m).unwrap();
        assert_eq!((inv * 7) % 125, BigInt::one());
        assert!(mod_inverse(&BigInt::from(10), &m).is_none());
    }
}
