//! Vélu's formulas in kernel-polynomial form, with an exact certificate.

use num_bigint::BigInt;

use crate::qpoly::poly::Coeff;
use crate::qpoly::{Poly, Rational, RationalPolynomial};

fn c<T: Coeff + From<BigInt>>(n: i64) -> T {
    T::from(BigInt::from(n))
}

/// Power sums `p1, p2, p3` of the roots of a monic polynomial.
fn power_sums<T: Coeff + From<BigInt>>(d: &Poly<T>) -> (T, T, T) {
    let n = d.degree().unwrap_or(0);
    let coeff = |k: usize| if k <= n { d.coeff(n - k) } else { T::zero() };
    let (e1, e2, e3) = (-coeff(1), coeff(2), -coeff(3));
    let p1 = e1.clone();
    let p2 = e1.clone() * p1.clone() - c::<T>(2) * e2.clone();
    let p3 = e1 * p2.clone() - e2 * p1.clone() + c::<T>(3) * e3;
    (p1, p2, p3)
}

/// Codomain coefficients of the isogeny with kernel polynomial `d` on
/// `y² = x³ + ax + b`, if the Vélu maps satisfy the codomain equation
/// identically. `d` must be monic.
pub(crate) fn velu_certified<T: Coeff + From<BigInt>>(a: &T, b: &T, d: &Poly<T>, ell: u32) -> Option<(T, T)> {
    let deg = d.degree()?;
    if !d.leading()?.is_one() {
        return None;
    }
    let f = Poly::new(vec![b.clone(), a.clone(), T::zero(), T::one()]);
    let x = Poly::<T>::x();
    if ell == 2 {
        if deg != 1 {
            return None;
        }
        let x0 = -d.coeff(0);
        if !f.eval(&x0).is_zero() {
            return None;
        }
        let t = c::<T>(3) * x0.clone() * x0.clone() + a.clone();
        let a2 = a.clone() - c::<T>(5) * t.clone();
        let b2 = b.clone() - c::<T>(7) * x0 * t.clone();
        // X = N/D, Y = y X'
        let n = &(&x * d) + &Poly::constant(t);
        let dn = &(&n.derivative() * d) - &(&n * &d.derivative());
        let lhs = &f * &(&dn * &dn);
        let d2 = d * d;
        let rhs = d * &(&(&n.pow(3) + &(&n * &d2).scale(&a2)) + &(&d2 * d).scale(&b2));
        return (lhs == rhs).then_some((a2, b2));
    }
    if ell.is_multiple_of(2) || deg as u32 != (ell - 1) / 2 {
        return None;
    }
    let dd = c::<T>(deg as i64);
    let (p1, p2, p3) = power_sums(d);
    let a2 = a.clone() - c::<T>(30) * p2 - c::<T>(10) * dd.clone() * a.clone();
    let b2 = b.clone() - c::<T>(70) * p3 - c::<T>(42) * a.clone() * p1.clone() - c::<T>(28) * dd * b.clone();

    // X = N/D², N = (ℓx − 2p1)D² + 4f(D'² − DD'') − 2f'D'D, Y = y X'
    let d1 = d.derivative();
    let d2 = d1.derivative();
    let sq = d * d;
    let lin = Poly::new(vec![-(c::<T>(2) * p1), c::<T>(ell as i64)]);
    let n = &(&(&lin * &sq) + &(&f * &(&(&d1 * &d1) - &(d * &d2))).scale(&c(4)))
        - &(&(&f.derivative() * &d1) * d).scale(&c(2));
    let w = &(&n.derivative() * d) - &(&n * &d1).scale(&c(2));
    let lhs = &f * &(&w * &w);
    let sq2 = &sq * &sq;
    let rhs = &(&n.pow(3) + &(&n * &sq2).scale(&a2)) + &(&sq2 * &sq).scale(&b2);
    (lhs == rhs).then_some((a2, b2))
}

/// Dispatch to integer arithmetic when everything is integral.
pub(crate) fn velu(a: &Rational, b: &Rational, d: &RationalPolynomial, ell: u32) -> Option<(Rational, Rational)> {
    let integral = a.is_integer() && b.is_integer() && d.coeffs().iter().all(|c| c.is_integer());
    if integral {
        let di = d.map(|c| c.to_integer());
        velu_certified(&a.to_integer(), &b.to_integer(), &di, ell)
            .map(|(x, y)| (Rational::from_integer(x), Rational::from_integer(y)))
    } else {
        velu_certified(a, b, d, ell)
    }
}
