//! Division polynomials and the rational torsion subgroup.
//!
//! Everything is computed on an integral short model and mapped back to the
//! caller's model. By Mazur's theorem only the prime powers 2, 4, 8, 3, 9, 5
//! and 7 can occur as orders of rational torsion points, so those are the
//! only ones searched.

mod divpoly;
mod group;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

pub use divpoly::{division_polynomial, DivisionPolynomials};
pub use group::TorsionGroup;

use crate::error::{AtlasError, Result};
use crate::qpoly::rational::exact_root;
use crate::qpoly::{rational_roots, IntegerPolynomial, Rational};
use crate::weier::{AffinePoint, Transform, WeierstrassModel};

/// Orders that can be asked of [`points_of_exact_order`].
pub const SEARCHABLE_ORDERS: [u32; 7] = [2, 3, 4, 5, 7, 8, 9];

/// Number of good primes whose point counts bound the torsion order.
const REDUCTION_PRIMES: usize = 4;

/// `E(Q)_tors` together with generators on the caller's model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionStructure {
    pub group: TorsionGroup,
    /// Empty for the trivial group, one point for cyclic groups, and two
    /// points (of orders `N` and 2) for `Z/2 × Z/N`.
    pub generators: Vec<AffinePoint>,
}

/// A curve together with its integral short model and a division
/// polynomial cache for that model.
#[derive(Clone, Debug)]
pub struct ShortCurve {
    model: WeierstrassModel,
    short: WeierstrassModel,
    to_short: Transform,
    a: BigInt,
    b: BigInt,
    divpolys: DivisionPolynomials<BigInt>,
    reduction_gcd: Option<u64>,
}

impl ShortCurve {
    pub fn new(model: &WeierstrassModel) -> Self {
        let (short, to_short) = model.short_model();
        let (a, b) = short.short_coefficients().unwrap();
        let (a, b) = (a.to_integer(), b.to_integer());
        ShortCurve {
            model: model.clone(),
            short,
            to_short,
            divpolys: DivisionPolynomials::new(a.clone(), b.clone()),
            a,
            b,
            reduction_gcd: None,
        }
    }

    pub fn model(&self) -> &WeierstrassModel {
        &self.model
    }

    pub fn short(&self) -> &WeierstrassModel {
        &self.short
    }

    /// Coordinate change from [`ShortCurve::model`] to [`ShortCurve::short`].
    pub fn to_short(&self) -> &Transform {
        &self.to_short
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn division_polynomials(&mut self) -> &mut DivisionPolynomials<BigInt> {
        &mut self.divpolys
    }

    /// `x³ + Ax + B`.
    pub fn cubic(&self) -> IntegerPolynomial {
        IntegerPolynomial::new(vec![self.b.clone(), self.a.clone(), BigInt::zero(), BigInt::from(1)])
    }

    /// gcd of `#E(F_p)` over a few good primes; every torsion order divides it.
    pub fn reduction_bound(&mut self) -> u64 {
        if let Some(g) = self.reduction_gcd {
            return g;
        }
        let mut g = 0u64;
        let mut found = 0;
        let mut p = 5u64;
        while found < REDUCTION_PRIMES {
            if let Some(n) = self.short.reduction_point_count(p) {
                g = g.gcd(&n);
                found += 1;
            }
            p += 2;
        }
        self.reduction_gcd = Some(g);
        g
    }

    fn psi_int(&mut self, n: u32) -> IntegerPolynomial {
        self.divpolys.psi(n as usize)
    }

    fn rhs(&self, x: &Rational) -> Rational {
        let a = Rational::from_integer(self.a.clone());
        let b = Rational::from_integer(self.b.clone());
        x * x * x + a * x + b
    }

    /// Short-model points of exact order `q`.
    fn short_points_of_exact_order(&mut self, q: u32) -> Result<Vec<AffinePoint>> {
        if !SEARCHABLE_ORDERS.contains(&q) {
            return Err(AtlasError::UnsupportedOrder(q));
        }
        let candidates = if q == 2 {
            rational_roots(&self.cubic())?
        } else {
            rational_roots(self.divpolys.g(q as usize))?
        };
        let proper: Vec<u32> = (2..q).filter(|d| q.is_multiple_of(*d)).collect();
        let mut lower = Vec::new();
        for d in proper {
            lower.push(self.psi_int(d).to_rational());
        }
        let mut out = Vec::new();
        for x in candidates {
            if lower.iter().any(|f| f.eval(&x).is_zero()) {
                continue;
            }
            let Some(y) = exact_root(&self.rhs(&x), 2) else {
                continue;
            };
            if y.is_zero() {
                out.push(AffinePoint::new(x, y));
            } else {
                out.push(AffinePoint::new(x.clone(), -y.clone()));
                out.push(AffinePoint::new(x, y));
            }
        }
        Ok(out)
    }

    fn to_model(&self, p: &AffinePoint) -> AffinePoint {
        match p {
            AffinePoint::Infinity => AffinePoint::Infinity,
            AffinePoint::Finite { x, y } => {
                let (x, y) = self.to_short.backward(x, y);
                AffinePoint::new(x, y)
            }
        }
    }

    /// Rational points of exact order `q` on the original model.
    pub fn points_of_exact_order(&mut self, q: u32) -> Result<Vec<AffinePoint>> {
        if SEARCHABLE_ORDERS.contains(&q) && !self.reduction_bound().is_multiple_of(q as u64) {
            return Ok(Vec::new());
        }
        let pts = self.short_points_of_exact_order(q)?;
        Ok(pts.iter().map(|p| self.to_model(p)).collect())
    }

    /// A short-model point of exact order `q`, skipping the search when the
    /// reduction bound already rules it out.
    fn first_point(&mut self, q: u32) -> Result<Option<AffinePoint>> {
        if !self.reduction_bound().is_multiple_of(q as u64) {
            return Ok(None);
        }
        Ok(self.short_points_of_exact_order(q)?.into_iter().next())
    }

    pub fn torsion_structure(&mut self) -> Result<TorsionStructure> {
        let s = self.short.clone();
        let two_torsion = self.short_points_of_exact_order(2)?;

        // Largest 2-power order and a point realising it.
        let mut two_part = 1u32;
        let mut two_gen = AffinePoint::Infinity;
        if let Some(p) = two_torsion.first() {
            two_part = 2;
            two_gen = p.clone();
            for q in [4, 8] {
                match self.first_point(q)? {
                    Some(p) => {
                        two_part = q;
                        two_gen = p;
                    }
                    None => break,
                }
            }
        }

        // The odd part is cyclic; collect one generator per prime.
        let mut odd_part = 1u32;
        let mut odd_gen = AffinePoint::Infinity;
        for chain in [&[3u32, 9][..], &[5], &[7]] {
            let mut best = None;
            for &q in chain {
                match self.first_point(q)? {
                    Some(p) => best = Some((q, p)),
                    None => break,
                }
            }
            if let Some((q, p)) = best {
                odd_part *= q;
                odd_gen = s.add(&odd_gen, &p)?;
            }
        }

        let n2 = two_part * odd_part;
        let n1 = if two_torsion.len() == 3 { 2 } else { 1 };
        let group = TorsionGroup::from_invariants(n1, n2)?;

        let mut gens = Vec::new();
        if n2 > 1 {
            let g = s.add(&two_gen, &odd_gen)?;
            if s.order_up_to(&g, n2)? != Some(n2) {
                return Err(AtlasError::invariant(format!("generator {g} does not have order {n2}")));
            }
            gens.push(g);
        }
        if n1 == 2 {
            let inside = s.mul(&gens[0], (n2 / 2) as i64)?;
            let other = two_torsion
                .iter()
                .find(|p| **p != inside)
                .ok_or_else(|| AtlasError::invariant("missing second 2-torsion generator"))?;
            gens.push(other.clone());
        }
        let generators = gens.iter().map(|p| self.to_model(p)).collect();
        Ok(TorsionStructure { group, generators })
    }
}

/// All rational points of exact order `q ∈ {2,3,4,5,7,8,9}` on `e`.
pub fn points_of_exact_order(e: &WeierstrassModel, q: u32) -> Result<Vec<AffinePoint>> {
    ShortCurve::new(e).points_of_exact_order(q)
}

/// The rational torsion subgroup of `e`, with generators.
pub fn torsion_structure(e: &WeierstrassModel) -> Result<TorsionStructure> {
    ShortCurve::new(e).torsion_structure()
}

#[cfg(test)]
mod tests;
