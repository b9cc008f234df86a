//! Polynomials over a prime field F_p, p < 2^32.
//!
//! Only what modular factorization needs: arithmetic, gcd, powering modulo a
//! polynomial, distinct-degree and equal-degree splitting.

use num_bigint::{BigInt, BigUint};
use rand::Rng;

use super::poly::IntegerPolynomial;
use super::rational::bigint_to_u64_mod;

/// Ascending coefficients in `[0, p)`, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModPoly {
    pub p: u64,
    pub c: Vec<u64>,
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn powmod_u64(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(!a.is_multiple_of(p), "inverse of zero mod {p}");
    powmod_u64(a, p - 2, p)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// All primes strictly below `n`.
pub fn primes_below(n: u64) -> Vec<u64> {
    if n < 3 {
        return Vec::new();
    }
    let n = n as usize;
    let mut sieve = vec![true; n];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i < n {
        if sieve[i] {
            let mut j = i * i;
            while j < n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (0..n).filter(|&k| sieve[k]).map(|k| k as u64).collect()
}

impl ModPoly {
    pub fn new(p: u64, mut c: Vec<u64>) -> Self {
        for x in c.iter_mut() {
            *x %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        ModPoly { p, c }
    }

    pub fn from_int(f: &IntegerPolynomial, p: u64) -> Self {
        ModPoly::new(p, f.coeffs().iter().map(|a| bigint_to_u64_mod(a, p)).collect())
    }

    pub fn to_int(&self) -> IntegerPolynomial {
        IntegerPolynomial::new(self.c.iter().map(|&a| BigInt::from(a)).collect())
    }

    pub fn zero(p: u64) -> Self {
        ModPoly { p, c: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        ModPoly::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        ModPoly::new(p, vec![0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lc(&self) -> u64 {
        *self.c.last().unwrap_or(&0)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let v = (0..n)
            .map(|i| {
                let a = self.c.get(i).copied().unwrap_or(0);
                let b = o.c.get(i).copied().unwrap_or(0);
                (a + b) % self.p
            })
            .collect();
        ModPoly::new(self.p, v)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let v = (0..n)
            .map(|i| {
                let a = self.c.get(i).copied().unwrap_or(0);
                let b = o.c.get(i).copied().unwrap_or(0);
                (a + self.p - b) % self.p
            })
            .collect();
        ModPoly::new(self.p, v)
    }

    pub fn scale(&self, k: u64) -> Self {
        ModPoly::new(self.p, self.c.iter().map(|&a| mulmod(a, k, self.p)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return ModPoly::zero(self.p);
        }
        let p = self.p as u128;
        let mut acc = vec![0u128; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                acc[i + j] = (acc[i + j] + a as u128 * b as u128) % p;
            }
        }
        ModPoly::new(self.p, acc.into_iter().map(|v| v as u64).collect())
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial mod p");
        let p = self.p;
        let Some(sd) = self.degree() else {
            return (ModPoly::zero(p), ModPoly::zero(p));
        };
        if sd < dd {
            return (ModPoly::zero(p), self.clone());
        }
        let inv = inv_mod(d.lc(), p);
        let mut r = self.c.clone();
        let mut q = vec![0u64; sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let c = mulmod(r[k + dd], inv, p);
            if c == 0 {
                continue;
            }
            for (j, &dj) in d.c.iter().enumerate() {
                r[k + j] = (r[k + j] + p - mulmod(c, dj, p)) % p;
            }
            q[k] = c;
        }
        r.truncate(dd);
        (ModPoly::new(p, q), ModPoly::new(p, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(inv_mod(self.lc(), self.p))
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s*self + t*o = g`, `g` monic.
    pub fn ext_gcd(&self, o: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (ModPoly::one(p), ModPoly::zero(p));
        let (mut t0, mut t1) = (ModPoly::zero(p), ModPoly::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s2 = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s2);
            let t2 = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = inv_mod(r0.lc(), p);
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        let v = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| mulmod(a, i as u64 % p, p))
            .collect();
        ModPoly::new(p, v)
    }

    /// `self^e mod m` for a big exponent.
    pub fn pow_mod(&self, e: &BigUint, m: &Self) -> Self {
        let mut acc = ModPoly::one(self.p).rem(m);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(m);
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.c
            .iter()
            .rev()
            .fold(0, |acc, &c| (mulmod(acc, x, self.p) + c) % self.p)
    }
}

/// Distinct-degree factorization of a monic squarefree polynomial.
///
/// Returns `(d, g_d)` where `g_d` is the product of all irreducible factors
/// of degree `d`.
pub fn distinct_degree(f: &ModPoly) -> Vec<(usize, ModPoly)> {
    let p = f.p;
    let mut out = Vec::new();
    let mut rest = f.monic();
    let x = ModPoly::x(p);
    let pe = BigUint::from(p);
    let mut h = x.clone();
    let mut d = 0;
    while let Some(deg) = rest.degree() {
        if deg == 0 {
            break;
        }
        d += 1;
        if 2 * d > deg {
            out.push((deg, rest.clone()));
            break;
        }
        h = h.pow_mod(&pe, &rest);
        let g = h.sub(&x).gcd(&rest);
        if g.degree() != Some(0) {
            out.push((d, g.clone()));
            rest = rest.div_rem(&g).0;
            h = h.rem(&rest);
        }
    }
    out
}

/// Cantor–Zassenhaus equal-degree splitting (odd p).
pub fn equal_degree<R: Rng>(g: &ModPoly, d: usize, rng: &mut R) -> Vec<ModPoly> {
    let p = g.p;
    let n = g.degree().unwrap_or(0);
    if n == d {
        return vec![g.monic()];
    }
    let exp = (num_traits::pow(BigUint::from(p), d) - 1u32) / 2u32;
    loop {
        let a: Vec<u64> = (0..n).map(|_| rng.gen_range(0..p)).collect();
        let a = ModPoly::new(p, a);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = a.pow_mod(&exp, g).sub(&ModPoly::one(p));
        let h = b.gcd(g);
        let hd = h.degree().unwrap_or(0);
        if hd > 0 && hd < n {
            let other = g.div_rem(&h).0;
            let mut out = equal_degree(&h, d, rng);
            out.extend(equal_degree(&other.monic(), d, rng));
            return out;
        }
    }
}

/// Full factorization of a squarefree polynomial into monic irreducibles.
pub fn factor_squarefree<R: Rng>(f: &ModPoly, rng: &mut R) -> Vec<ModPoly> {
    let mut out = Vec::new();
    for (d, g) in distinct_degree(f) {
        out.extend(equal_degree(&g, d, rng));
    }
    out
}

/// Degrees of irreducible factors of a squarefree polynomial, as a multiset.
pub fn degree_pattern(f: &ModPoly) -> Vec<usize> {
    let mut out = Vec::new();
    for (d, g) in distinct_degree(f) {
        let k = g.degree().unwrap() / d;
        out.extend(std::iter::repeat_n(d, k));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn sieve() {
        assert_eq!(primes_below(20), vec![2, 3, 5, 7, 11, 13, 17, 19]);
    }

    #[test]
    fn ddf_and_edf_over_f17() {
        // (x-1)(x-2)(x^2-3) over F_17; 3 is a non-residue mod 17.
        let p = 17;
        let f = ModPoly::new(p, vec![16, 1])
            .mul(&ModPoly::new(p, vec![15, 1]))
            .mul(&ModPoly::new(p, vec![14, 0, 1]));
        let mut pat = degree_pattern(&f);
        pat.sort();
        assert_eq!(pat, vec![1, 1, 2]);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let facs = factor_squarefree(&f, &mut rng);
        assert_eq!(facs.len(), 3);
        let prod = facs.iter().fold(ModPoly::one(p), |a, b| a.mul(b));
        assert_eq!(prod, f);
    }

    #[test]
    fn extended_gcd_bezout() {
        let p = 13;
        let a = ModPoly::new(p, vec![1, 2, 1]);
        let b = ModPoly::new(p, vec![3, 0, 1]);
        let (g, s, t) = a.ext_gcd(&b);
        assert!(g.is_one());
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }
}
