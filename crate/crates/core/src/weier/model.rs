use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::transform::Transform;
use crate::error::{AtlasError, Result};
use crate::qpoly::modp::{is_prime, powmod_u64};
use crate::qpoly::rational::{bigint_to_u64_mod, exact_root};
use crate::qpoly::Rational;

fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Long Weierstrass model `y² + a1xy + a3y = x³ + a2x² + a4x + a6` over Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassModel {
    a: [Rational; 5],
    b: [Rational; 4],
    c4: Rational,
    c6: Rational,
    disc: Rational,
    j: Rational,
}

/// A rational point, or the point at infinity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AffinePoint {
    Infinity,
    Finite { x: Rational, y: Rational },
}

impl AffinePoint {
    pub fn new(x: Rational, y: Rational) -> Self {
        AffinePoint::Finite { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, AffinePoint::Infinity)
    }

    pub fn x(&self) -> Option<&Rational> {
        match self {
            AffinePoint::Finite { x, .. } => Some(x),
            AffinePoint::Infinity => None,
        }
    }

    pub fn y(&self) -> Option<&Rational> {
        match self {
            AffinePoint::Finite { y, .. } => Some(y),
            AffinePoint::Infinity => None,
        }
    }
}

impl fmt::Display for AffinePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AffinePoint::Infinity => write!(f, "O"),
            AffinePoint::Finite { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

impl WeierstrassModel {
    /// Build a model and its invariants; rejects singular curves.
    pub fn new(a: [Rational; 5]) -> Result<Self> {
        let [a1, a2, a3, a4, a6] = &a;
        let b2 = a1 * a1 + q(4) * a2;
        let b4 = q(2) * a4 + a1 * a3;
        let b6 = a3 * a3 + q(4) * a6;
        let b8 = a1 * a1 * a6 + q(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
        let c4 = &b2 * &b2 - q(24) * &b4;
        let c6 = -(&b2 * &b2 * &b2) + q(36) * &b2 * &b4 - q(216) * &b6;
        let disc = -(&b2 * &b2 * &b8) - q(8) * &b4 * &b4 * &b4 - q(27) * &b6 * &b6 + q(9) * &b2 * &b4 * &b6;
        if disc.is_zero() {
            return Err(AtlasError::SingularCurve);
        }
        let j = &c4 * &c4 * &c4 / &disc;
        Ok(WeierstrassModel {
            a,
            b: [b2, b4, b6, b8],
            c4,
            c6,
            disc,
            j,
        })
    }

    pub fn from_ints(a: [i64; 5]) -> Result<Self> {
        WeierstrassModel::new(a.map(q))
    }

    /// `y² = x³ + Ax + B`.
    pub fn short(a: Rational, b: Rational) -> Result<Self> {
        let z = Rational::zero();
        WeierstrassModel::new([z.clone(), z.clone(), z, a, b])
    }

    pub fn short_ints(a: i64, b: i64) -> Result<Self> {
        WeierstrassModel::short(q(a), q(b))
    }

    pub fn a_invariants(&self) -> &[Rational; 5] {
        &self.a
    }

    pub fn b_invariants(&self) -> &[Rational; 4] {
        &self.b
    }

    pub fn c4(&self) -> &Rational {
        &self.c4
    }

    pub fn c6(&self) -> &Rational {
        &self.c6
    }

    pub fn discriminant(&self) -> &Rational {
        &self.disc
    }

    pub fn j_invariant(&self) -> &Rational {
        &self.j
    }

    /// `(A, B)` when the model is already `y² = x³ + Ax + B`.
    pub fn short_coefficients(&self) -> Option<(&Rational, &Rational)> {
        let [a1, a2, a3, a4, a6] = &self.a;
        (a1.is_zero() && a2.is_zero() && a3.is_zero()).then_some((a4, a6))
    }

    pub fn is_integral(&self) -> bool {
        self.a.iter().all(|c| c.is_integer())
    }

    pub fn transform(&self, t: &Transform) -> WeierstrassModel {
        WeierstrassModel::new(t.apply(&self.a)).expect("coordinate change preserves nonsingularity")
    }

    pub fn contains(&self, p: &AffinePoint) -> bool {
        match p {
            AffinePoint::Infinity => true,
            AffinePoint::Finite { x, y } => {
                let [a1, a2, a3, a4, a6] = &self.a;
                let lhs = y * y + a1 * x * y + a3 * y;
                let rhs = x * x * x + a2 * x * x + a4 * x + a6;
                lhs == rhs
            }
        }
    }

    fn check(&self, p: &AffinePoint) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(AtlasError::OffCurvePoint)
        }
    }

    pub fn neg(&self, p: &AffinePoint) -> AffinePoint {
        match p {
            AffinePoint::Infinity => AffinePoint::Infinity,
            AffinePoint::Finite { x, y } => {
                let [a1, _, a3, _, _] = &self.a;
                AffinePoint::new(x.clone(), -y - a1 * x - a3)
            }
        }
    }

    /// Chord-and-tangent addition.
    pub fn add(&self, p: &AffinePoint, r: &AffinePoint) -> Result<AffinePoint> {
        self.check(p)?;
        self.check(r)?;
        Ok(self.add_unchecked(p, r))
    }

    fn add_unchecked(&self, p: &AffinePoint, r: &AffinePoint) -> AffinePoint {
        let (x1, y1, x2, y2) = match (p, r) {
            (AffinePoint::Infinity, _) => return r.clone(),
            (_, AffinePoint::Infinity) => return p.clone(),
            (AffinePoint::Finite { x: x1, y: y1 }, AffinePoint::Finite { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let [a1, a2, a3, a4, _] = &self.a;
        let lambda = if x1 != x2 {
            (y2 - y1) / (x2 - x1)
        } else {
            let den = q(2) * y1 + a1 * x1 + a3;
            if y1 != y2 || den.is_zero() {
                return AffinePoint::Infinity;
            }
            (q(3) * x1 * x1 + q(2) * a2 * x1 + a4 - a1 * y1) / den
        };
        let nu = y1 - &lambda * x1;
        let x3 = &lambda * &lambda + a1 * &lambda - a2 - x1 - x2;
        let y3 = -(&lambda + a1) * &x3 - nu - a3;
        AffinePoint::new(x3, y3)
    }

    /// `[n]P` by double-and-add; negative `n` negates.
    pub fn mul(&self, p: &AffinePoint, n: i64) -> Result<AffinePoint> {
        self.check(p)?;
        let mut base = if n < 0 { self.neg(p) } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = AffinePoint::Infinity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_unchecked(&acc, &base);
            }
            base = self.add_unchecked(&base, &base);
            k >>= 1;
        }
        Ok(acc)
    }

    /// Order of `p` if it is at most `bound`.
    pub fn order_up_to(&self, p: &AffinePoint, bound: u32) -> Result<Option<u32>> {
        self.check(p)?;
        let mut acc = p.clone();
        for n in 1..=bound {
            if acc.is_infinity() {
                return Ok(Some(n));
            }
            acc = self.add_unchecked(&acc, p);
        }
        Ok(None)
    }

    /// An integral short model `Y² = X³ + AX + B` and the change of
    /// coordinates taking `self` to it.
    ///
    /// Starts from `A = -27c4`, `B = -54c6`, clears denominators and then
    /// removes small primes `p` with `p⁴ | A` and `p⁶ | B`.
    pub fn short_model(&self) -> (WeierstrassModel, Transform) {
        if let Some((a, b)) = self.short_coefficients() {
            if a.is_integer() && b.is_integer() {
                return (self.clone(), Transform::identity());
            }
        }
        let [a1, _, a3, _, _] = &self.a;
        let b2 = &self.b[0];
        let r = -(b2 / q(12));
        let s = -(a1 / q(2));
        let t = -((a3 + &r * a1) / q(2));
        let mut tr = Transform::new(Rational::new(1.into(), 6.into()), r, s, t);
        let mut a = q(-27) * &self.c4;
        let mut b = q(-54) * &self.c6;

        let den = a.denom().lcm(b.denom());
        if !den.is_one() {
            let d = Rational::from_integer(den.clone());
            let d2 = &d * &d;
            a = a * &d2 * &d2;
            b = b * &d2 * &d2 * &d2;
            tr = tr.then(&Transform::scaling(d.recip()));
        }
        let (mut ai, mut bi) = (a.to_integer(), b.to_integer());
        let mut scale = BigInt::one();
        for p in crate::qpoly::modp::primes_below(200) {
            let bp = BigInt::from(p);
            let p4 = num_traits::pow(bp.clone(), 4);
            let p6 = num_traits::pow(bp.clone(), 6);
            while (&ai % &p4).is_zero() && (&bi % &p6).is_zero() && !(ai.is_zero() && bi.is_zero()) {
                ai /= &p4;
                bi /= &p6;
                scale *= &bp;
            }
        }
        if !scale.is_one() {
            tr = tr.then(&Transform::scaling(Rational::from_integer(scale)));
        }
        let short = WeierstrassModel::short(Rational::from_integer(ai), Rational::from_integer(bi))
            .expect("short model of a nonsingular curve");
        debug_assert_eq!(self.transform(&tr), short);
        (short, tr)
    }

    /// A coordinate change taking `self` to `other`, if the curves are
    /// isomorphic over Q.
    pub fn isomorphism_to(&self, other: &WeierstrassModel) -> Option<Transform> {
        if self.j != other.j {
            return None;
        }
        let (s1, t1) = self.short_model();
        let (s2, t2) = other.short_model();
        let (a1, b1) = s1.short_coefficients().unwrap();
        let (a2, b2) = s2.short_coefficients().unwrap();
        // S1 scaled by u has coefficients (A1/u⁴, B1/u⁶).
        let u = if a1.is_zero() {
            exact_root(&(b1 / b2), 6)?
        } else if b1.is_zero() {
            exact_root(&(a1 / a2), 4)?
        } else {
            let u2 = (a2 * b1) / (a1 * b2);
            exact_root(&u2, 2)?
        };
        let u = if u.is_negative() { -u } else { u };
        let u2 = &u * &u;
        if a1 != &(a2 * &u2 * &u2) || b1 != &(b2 * &u2 * &u2 * &u2) {
            return None;
        }
        let witness = t1.then(&Transform::scaling(u)).then(&t2.inverse());
        debug_assert_eq!(self.transform(&witness), *other);
        Some(witness)
    }

    pub fn is_isomorphic(&self, other: &WeierstrassModel) -> bool {
        self.isomorphism_to(other).is_some()
    }

    /// Quadratic twist of the short model by `d`: `(A d², B d³)`.
    pub fn quadratic_twist(&self, d: &Rational) -> WeierstrassModel {
        let (s, _) = self.short_model();
        let (a, b) = s.short_coefficients().unwrap();
        let d2 = d * d;
        WeierstrassModel::short(a * &d2, b * &d2 * d).expect("twist of a nonsingular curve")
    }

    /// `#E(F_p)` for a prime `p ≥ 5` of good reduction of the integral short
    /// model; `None` when `p` is too small, composite, or bad for that model.
    pub fn reduction_point_count(&self, p: u64) -> Option<u64> {
        if p < 5 || !is_prime(p) {
            return None;
        }
        let (s, _) = self.short_model();
        let (a, b) = s.short_coefficients().unwrap();
        let (a, b) = (a.to_integer(), b.to_integer());
        let disc = BigInt::from(4) * &a * &a * &a + BigInt::from(27) * &b * &b;
        if bigint_to_u64_mod(&disc, p) == 0 {
            return None;
        }
        let am = bigint_to_u64_mod(&a, p) as u128;
        let bm = bigint_to_u64_mod(&b, p) as u128;
        let pp = p as u128;
        let mut count = 1u64;
        for x in 0..p {
            let x = x as u128;
            let rhs = ((x * x % pp * x) + am * x + bm) % pp;
            count += if rhs == 0 {
                1
            } else if powmod_u64(rhs as u64, (p - 1) / 2, p) == 1 {
                2
            } else {
                0
            };
        }
        Some(count)
    }
}

impl fmt::Display for WeierstrassModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.a.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}
