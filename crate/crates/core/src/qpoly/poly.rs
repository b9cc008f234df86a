//! Dense univariate polynomials over Z and Q.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Num, One, Signed, Zero};

use super::rational::Rational;
use crate::error::{AtlasError, Result};

/// Coefficient ring requirements for [`Poly`].
pub trait Coeff: Clone + Num + Neg<Output = Self> + fmt::Display {}
impl<T: Clone + Num + Neg<Output = T> + fmt::Display> Coeff for T {}

/// Dense polynomial, coefficient `i` multiplies `x^i`.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

pub type RationalPolynomial = Poly<Rational>;
pub type IntegerPolynomial = Poly<BigInt>;

impl<T: Coeff> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(T::one())
    }

    pub fn x() -> Self {
        Poly::new(vec![T::zero(), T::one()])
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: T, k: usize) -> Self {
        let mut v = vec![T::zero(); k + 1];
        v[k] = c;
        Poly::new(v)
    }

    /// `x - r`
    pub fn linear_root(r: T) -> Self {
        Poly::new(vec![-r, T::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the `-1` convention for the zero polynomial.
    pub fn signed_degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len().saturating_sub(1));
        let mut k = T::zero();
        for c in self.coeffs.iter() {
            if !k.is_zero() {
                out.push(c.clone() * k.clone());
            }
            k = k + T::one();
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self(g(x))` by Horner's rule.
    pub fn compose(&self, g: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &(&acc * g) + &Poly::constant(c.clone()))
    }

    /// `x^k * self`
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![T::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    /// Map coefficients through `f`.
    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Coeff> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let v = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Poly::new(v)
    }
}

impl<T: Coeff> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let v = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Poly::new(v)
    }
}

impl<T: Coeff> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = std::mem::replace(&mut v[i + j], T::zero());
                v[i + j] = t + a.clone() * b.clone();
            }
        }
        Poly::new(v)
    }
}

impl<T: Coeff> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Coeff> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$m(&rhs)
            }
        }
        impl<T: Coeff> $tr<&Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: &Poly<T>) -> Poly<T> {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Coeff> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

impl<T: Coeff> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (negative, mag) = match text.strip_prefix('-') {
                Some(m) => (true, m),
                None => (false, text.as_str()),
            };
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            if i == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if mag.contains('/') {
                write!(f, "({mag})*")?;
            } else if mag != "1" {
                write!(f, "{mag}*")?;
            }
            match i {
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Field operations over Q

impl Poly<Rational> {
    /// Euclidean division; `divisor` must be nonzero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc_inv = divisor.leading().unwrap().recip();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return (Poly::zero(), Poly::zero());
        };
        if sd < dd {
            return (Poly::zero(), self.clone());
        }
        let mut quo = vec![Rational::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quo[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quo), Poly::new(rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// `Some(q)` when `divisor * q == self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.rem(self).is_zero()
    }

    /// Monic normalization; the zero polynomial maps to itself.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        // Euclid on primitive integer images keeps coefficient growth in check.
        let (_, a) = self.to_primitive();
        let (_, b) = other.to_primitive();
        integer_gcd(&a, &b).to_rational().monic()
    }

    /// Split into `(unit, primitive integer part)` with positive leading coefficient.
    pub fn to_primitive(&self) -> (Rational, IntegerPolynomial) {
        if self.is_zero() {
            return (Rational::zero(), Poly::zero());
        }
        let den_lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den_lcm.clone())).to_integer())
            .collect();
        let ip = Poly::new(ints);
        let (content, prim) = ip.content_primitive();
        (Rational::new(content, den_lcm), prim)
    }
}

// ---------------------------------------------------------------------------
// Integer polynomials

impl Poly<BigInt> {
    pub fn to_rational(&self) -> RationalPolynomial {
        self.map(|c| Rational::from_integer(c.clone()))
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Positive gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// `(c, p)` with `self = c * p`, `p` primitive with positive leading
    /// coefficient (`c` carries the sign).
    pub fn content_primitive(&self) -> (BigInt, Self) {
        if self.is_zero() {
            return (BigInt::zero(), Poly::zero());
        }
        let mut c = self.content();
        if self.leading().unwrap().is_negative() {
            c = -c;
        }
        let p = Poly::new(self.coeffs.iter().map(|a| a / &c).collect());
        (c, p)
    }

    pub fn primitive_part(&self) -> Self {
        self.content_primitive().1
    }

    /// Exact division over Z; `None` if the quotient is not integral or the
    /// remainder is nonzero.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree()?;
        let Some(sd) = self.degree() else {
            return Some(Poly::zero());
        };
        if sd < dd {
            return None;
        }
        let lc = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![BigInt::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * d;
            }
            quo[k] = q;
        }
        if rem[..dd].iter().all(|c| c.is_zero()) {
            Some(Poly::new(quo))
        } else {
            None
        }
    }

    /// Largest absolute value of a coefficient.
    pub fn max_norm(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero)
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree().expect("pseudo-division by zero");
        let lc = b.leading().unwrap().clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let t = r.leading().unwrap().clone();
            r = &r.scale(&lc) - &b.scale(&t).shift(dr - db);
        }
        r
    }
}

/// Primitive gcd over Z via the primitive polynomial remainder sequence.
pub fn integer_gcd(a: &IntegerPolynomial, b: &IntegerPolynomial) -> IntegerPolynomial {
    if a.is_zero() {
        return b.primitive_part();
    }
    if b.is_zero() {
        return a.primitive_part();
    }
    let (mut f, mut g) = if a.degree() >= b.degree() {
        (a.primitive_part(), b.primitive_part())
    } else {
        (b.primitive_part(), a.primitive_part())
    };
    while !g.is_zero() {
        let r = f.pseudo_rem(&g);
        f = g;
        g = if r.is_zero() { r } else { r.primitive_part() };
    }
    f
}

/// Parse helper for tests and examples: integer coefficients, ascending.
pub fn zpoly(coeffs: &[i64]) -> IntegerPolynomial {
    IntegerPolynomial::from_i64(coeffs)
}

/// Rational polynomial with integer coefficients, ascending.
pub fn qpoly(coeffs: &[i64]) -> RationalPolynomial {
    zpoly(coeffs).to_rational()
}

pub(crate) fn require_nonzero<T: Coeff>(f: &Poly<T>) -> Result<()> {
    if f.is_zero() {
        Err(AtlasError::ZeroPolynomial)
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::rational::rat;

    #[test]
    fn arithmetic_and_degree() {
        let f = qpoly(&[-1, 0, 1]);
        let g = qpoly(&[1, 1]);
        assert_eq!(f.degree(), Some(2));
        assert_eq!(Poly::<Rational>::zero().signed_degree(), -1);
        let (q, r) = f.div_rem(&g);
        assert_eq!(q, qpoly(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(&q * &g, f);
        assert_eq!(f.derivative(), qpoly(&[0, 2]));
        assert_eq!(f.eval(&rat(3, 1)), rat(8, 1));
    }

    #[test]
    fn gcd_examples() {
        let f = qpoly(&[-1, 0, 1]);
        let g = qpoly(&[1, -2, 1]);
        assert_eq!(f.gcd(&g), qpoly(&[-1, 1]));
        let h = qpoly(&[4, 0, 2]);
        assert_eq!(h.gcd(&Poly::zero()), qpoly(&[2, 0, 1]));
        assert_eq!(Poly::zero().gcd(&h), qpoly(&[2, 0, 1]));
    }

    #[test]
    fn primitive_split() {
        let f = Poly::new(vec![rat(1, 2), rat(-3, 4), rat(-3, 2)]);
        let (unit, p) = f.to_primitive();
        assert_eq!(p, zpoly(&[-2, 3, 6]));
        assert_eq!(unit, rat(-1, 4));
        assert_eq!(p.to_rational().scale(&unit), f);
    }

    #[test]
    fn integer_exact_division() {
        let f = zpoly(&[-2, 0, 2]);
        assert_eq!(f.div_exact(&zpoly(&[-1, 1])), Some(zpoly(&[2, 2])));
        assert_eq!(zpoly(&[1, 0, 1]).div_exact(&zpoly(&[1, 2])), None);
    }

    #[test]
    fn compose_and_pow() {
        let f = qpoly(&[0, 0, 1]);
        let g = qpoly(&[1, 1]);
        assert_eq!(f.compose(&g), qpoly(&[1, 2, 1]));
        assert_eq!(g.pow(3), qpoly(&[1, 3, 3, 1]));
    }

    #[test]
    fn display_signs_and_fractions() {
        assert_eq!(zpoly(&[-288, -12, 1]).to_string(), "x^2 - 12*x - 288");
        assert_eq!(zpoly(&[0, -1, 0, 5]).to_string(), "5*x^3 - x");
        let f = RationalPolynomial::new(vec![
            crate::qpoly::rational::rat(-3, 4),
            crate::qpoly::rational::rat(1, 2),
        ]);
        assert_eq!(f.to_string(), "(1/2)*x - 3/4");
        assert_eq!(zpoly(&[]).to_string(), "0");
    }
}
