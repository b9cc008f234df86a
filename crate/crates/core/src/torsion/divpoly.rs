use num_bigint::BigInt;

use crate::error::{AtlasError, Result};
use crate::qpoly::poly::Coeff;
use crate::qpoly::{Poly, RationalPolynomial};
use crate::weier::WeierstrassModel;

/// Division polynomials of `y² = x³ + Ax + B` in the x-only normalization:
/// `ψ_n = g_n` for odd `n` and `ψ_n = 2y·g_n` for even `n`.
///
/// Entries are filled on demand and never change afterwards.
#[derive(Clone, Debug)]
pub struct DivisionPolynomials<T> {
    f: Poly<T>,
    g: Vec<Option<Poly<T>>>,
}

fn c<T: Coeff + From<BigInt>>(n: i64) -> T {
    T::from(BigInt::from(n))
}

impl<T: Coeff + From<BigInt>> DivisionPolynomials<T> {
    pub fn new(a: T, b: T) -> Self {
        let aa = a.clone() * a.clone();
        let f = Poly::new(vec![c::<T>(4) * b.clone(), c::<T>(4) * a.clone(), T::zero(), c(4)]);
        let g3 = Poly::new(vec![
            -aa.clone(),
            c::<T>(12) * b.clone(),
            c::<T>(6) * a.clone(),
            T::zero(),
            c(3),
        ]);
        let g4 = Poly::new(vec![
            -(c::<T>(8) * b.clone() * b.clone() + aa.clone() * a.clone()),
            -(c::<T>(4) * a.clone() * b.clone()),
            -(c::<T>(5) * aa),
            c::<T>(20) * b,
            c::<T>(5) * a,
            T::zero(),
            T::one(),
        ])
        .scale(&c(2));
        let g = vec![
            Some(Poly::zero()),
            Some(Poly::one()),
            Some(Poly::one()),
            Some(g3),
            Some(g4),
        ];
        DivisionPolynomials { f, g }
    }

    /// `4(x³ + Ax + B)`, the square of `2y`.
    pub fn two_torsion(&self) -> &Poly<T> {
        &self.f
    }

    /// The x-only polynomial `g_n`.
    pub fn g(&mut self, n: usize) -> &Poly<T> {
        self.fill(n);
        self.g[n].as_ref().unwrap()
    }

    fn fill(&mut self, n: usize) {
        if n < self.g.len() && self.g[n].is_some() {
            return;
        }
        if n >= self.g.len() {
            self.g.resize(n + 1, None);
        }
        let m = n / 2;
        let value = if n % 2 == 1 {
            for k in [m - 1, m, m + 1, m + 2] {
                self.fill(k);
            }
            let gm = |k: usize| self.g[k].as_ref().unwrap();
            let f2 = &self.f * &self.f;
            let left = gm(m + 2) * &gm(m).pow(3);
            let right = gm(m - 1) * &gm(m + 1).pow(3);
            if m.is_multiple_of(2) {
                &(&f2 * &left) - &right
            } else {
                &left - &(&f2 * &right)
            }
        } else {
            for k in [m - 2, m - 1, m, m + 1, m + 2] {
                self.fill(k);
            }
            let gm = |k: usize| self.g[k].as_ref().unwrap();
            let inner = &(gm(m + 2) * &gm(m - 1).pow(2)) - &(gm(m - 2) * &gm(m + 1).pow(2));
            gm(m) * &inner
        };
        self.g[n] = Some(value);
    }

    /// Polynomial whose roots are exactly the x-coordinates of the nonzero
    /// points of `E[n]`: `g_n` for odd `n`, `4(x³+Ax+B)·g_n` for even `n`.
    pub fn psi(&mut self, n: usize) -> Poly<T> {
        if n % 2 == 1 {
            self.g(n).clone()
        } else {
            let f = self.f.clone();
            &f * self.g(n)
        }
    }
}

/// `ψ_n` in the x-coordinate of a short model of `e` (`e` itself when it is
/// already short).
pub fn division_polynomial(e: &WeierstrassModel, n: usize) -> Result<RationalPolynomial> {
    if n == 0 {
        return Err(AtlasError::UnsupportedInput(
            "division polynomial index must be positive".into(),
        ));
    }
    let (a, b) = match e.short_coefficients() {
        Some((a, b)) => (a.clone(), b.clone()),
        None => {
            let (s, _) = e.short_model();
            let (a, b) = s.short_coefficients().unwrap();
            (a.clone(), b.clone())
        }
    };
    Ok(DivisionPolynomials::new(a, b).psi(n))
}
