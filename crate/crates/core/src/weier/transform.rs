use num_traits::{One, Zero};

use crate::qpoly::Rational;

/// Coordinate change `x = u²x' + r`, `y = u³y' + s u² x' + t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transform {
    pub u: Rational,
    pub r: Rational,
    pub s: Rational,
    pub t: Rational,
}

impl Transform {
    pub fn new(u: Rational, r: Rational, s: Rational, t: Rational) -> Self {
        assert!(!u.is_zero(), "transformation scale must be nonzero");
        Transform { u, r, s, t }
    }

    pub fn identity() -> Self {
        Transform::scaling(Rational::one())
    }

    pub fn scaling(u: Rational) -> Self {
        Transform::new(u, Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn is_identity(&self) -> bool {
        self.u.is_one() && self.r.is_zero() && self.s.is_zero() && self.t.is_zero()
    }

    /// Apply `self` first, then `next` (expressed in the coordinates `self` produces).
    pub fn then(&self, next: &Transform) -> Transform {
        let u2 = &self.u * &self.u;
        Transform {
            u: &self.u * &next.u,
            r: &self.r + &u2 * &next.r,
            s: &self.s + &self.u * &next.s,
            t: &self.t + &u2 * &self.u * &next.t + &self.s * &u2 * &next.r,
        }
    }

    pub fn inverse(&self) -> Transform {
        let ui = self.u.recip();
        let ui2 = &ui * &ui;
        Transform {
            r: -(&self.r * &ui2),
            s: -(&self.s * &ui),
            t: (&self.r * &self.s - &self.t) * &ui2 * &ui,
            u: ui,
        }
    }

    /// a-invariants of the transformed model.
    pub fn apply(&self, a: &[Rational; 5]) -> [Rational; 5] {
        let [a1, a2, a3, a4, a6] = a;
        let (u, r, s, t) = (&self.u, &self.r, &self.s, &self.t);
        let two = Rational::from_integer(2.into());
        let three = Rational::from_integer(3.into());
        let ui = u.recip();
        let ui2 = &ui * &ui;
        let ui3 = &ui2 * &ui;
        let ui4 = &ui2 * &ui2;
        let ui6 = &ui3 * &ui3;
        let n1 = a1 + &two * s;
        let n2 = a2 - s * a1 + &three * r - s * s;
        let n3 = a3 + r * a1 + &two * t;
        let n4 = a4 - s * a3 + &two * r * a2 - (t + r * s) * a1 + &three * r * r - &two * s * t;
        let n6 = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1;
        [n1 * ui, n2 * ui2, n3 * ui3, n4 * ui4, n6 * ui6]
    }

    /// Old coordinates to new ones.
    pub fn forward(&self, x: &Rational, y: &Rational) -> (Rational, Rational) {
        let ui = self.u.recip();
        let ui2 = &ui * &ui;
        let xr = x - &self.r;
        let xn = &xr * &ui2;
        let yn = (y - &self.s * &xr - &self.t) * &ui2 * &ui;
        (xn, yn)
    }

    /// New coordinates back to old ones.
    pub fn backward(&self, x: &Rational, y: &Rational) -> (Rational, Rational) {
        let u2 = &self.u * &self.u;
        let xo = &u2 * x + &self.r;
        let yo = &u2 * &self.u * y + &self.s * &u2 * x + &self.t;
        (xo, yo)
    }
}
